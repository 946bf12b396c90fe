//! Combinatorial blowups and iterated blowups along a building set.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::building::{is_building_set, BuildingCheck};
use crate::error::{Error, Result};
use crate::poset::{MeetSemilattice, Poset};

/// Where an element of `Bl_X L` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    /// `Y` with `Y` not above `X`.
    Kept(usize),
    /// `Y'`, present when `Y v X` exists.
    New(usize),
}

impl Origin {
    pub fn source(self) -> usize {
        match self {
            Origin::Kept(y) | Origin::New(y) => y,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BlowupResult {
    pub lattice: MeetSemilattice,
    /// `origin[i]` describes element `i` of `lattice` in terms of the input.
    pub origin: Vec<Origin>,
}

impl BlowupResult {
    /// Index of the kept copy of `y`, if `y` survived.
    pub fn kept(&self, y: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == Origin::Kept(y))
    }

    /// Index of `y'`, if it exists.
    pub fn new_copy(&self, y: usize) -> Option<usize> {
        self.origin.iter().position(|&o| o == Origin::New(y))
    }
}

fn blowup_step(l: &MeetSemilattice, x: usize, step: usize) -> Result<BlowupResult> {
    if x >= l.len() || x == l.bottom() {
        return Err(Error::ElementOutOfRange(x.to_string()));
    }
    let kept: Vec<usize> = (0..l.len()).filter(|&y| !l.le(x, y)).collect();
    let mut origin: Vec<Origin> = kept.iter().map(|&y| Origin::Kept(y)).collect();
    origin.extend(
        kept.iter()
            .filter(|&&y| l.join(y, x).is_some())
            .map(|&y| Origin::New(y)),
    );
    let labels = origin
        .iter()
        .map(|o| match *o {
            Origin::Kept(y) => l.label(y).to_string(),
            Origin::New(y) => format!("{}'{}", l.label(y), step),
        })
        .collect();
    let le = |a: usize, b: usize| match (origin[a], origin[b]) {
        (Origin::Kept(y), Origin::Kept(z)) | (Origin::New(y), Origin::New(z)) => l.le(y, z),
        (Origin::Kept(y), Origin::New(z)) => l.le(y, z),
        (Origin::New(_), Origin::Kept(_)) => false,
    };
    let poset = Poset::from_relation(labels, le)
        .map_err(|e| Error::InternalNotSemilattice(e.to_string()))?;
    let lattice =
        MeetSemilattice::from_poset(poset).map_err(|e| Error::InternalNotSemilattice(e.to_string()))?;
    Ok(BlowupResult { lattice, origin })
}

/// `Bl_X L`. Kept elements come first in the order of `L`, followed by the
/// new elements `Y'`, labelled `Y'1`.
pub fn combinatorial_blowup(l: &MeetSemilattice, x: usize) -> Result<BlowupResult> {
    blowup_step(l, x, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupOrder {
    /// Decreasing height, ties broken by label.
    Auto,
    Explicit(Vec<usize>),
}

/// The order used by [`BlowupOrder::Auto`].
pub fn auto_order(l: &MeetSemilattice, carrier: &[usize]) -> Vec<usize> {
    let mut order = carrier.to_vec();
    order.sort_by(|&a, &b| {
        l.height(b)
            .cmp(&l.height(a))
            .then_with(|| l.label(a).cmp(l.label(b)))
    });
    order
}

/// Checks that `order` lists `carrier` exactly once each and never puts an
/// element after one it is strictly greater than.
pub fn validate_order(l: &MeetSemilattice, carrier: &[usize], order: &[usize]) -> Result<()> {
    let mut a = carrier.to_vec();
    let mut b = order.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(Error::InvalidOrder(
            "order must list each building-set element exactly once".into(),
        ));
    }
    for (i, &earlier) in order.iter().enumerate() {
        for &later in &order[i + 1..] {
            if l.lt(earlier, later) {
                return Err(Error::OrderNotNonIncreasing {
                    earlier: l.label(earlier).to_string(),
                    later: l.label(later).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// A random valid order: repeatedly pick one of the remaining elements with
/// nothing larger left.
pub fn random_order<R: Rng + ?Sized>(l: &MeetSemilattice, carrier: &[usize], rng: &mut R) -> Vec<usize> {
    let mut left = carrier.to_vec();
    let mut out = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let maximal: Vec<usize> = (0..left.len())
            .filter(|&i| !left.iter().any(|&y| l.lt(left[i], y)))
            .collect();
        let &pick = maximal.choose(rng).expect("finite poset has maximal elements");
        out.push(left.swap_remove(pick));
    }
    out
}

/// Blows up the elements of `G` one after the other in a non-increasing
/// order. Step `i` (1-based) labels its new elements with suffix `'i`.
pub fn resolve(l: &MeetSemilattice, g: &[usize], order: &BlowupOrder) -> Result<MeetSemilattice> {
    let building = match is_building_set(l, g)? {
        BuildingCheck::Building(b) => b,
        BuildingCheck::Failed { witness } => {
            return Err(Error::NotABuildingSet {
                witness: l.label(witness).to_string(),
            })
        }
    };
    let order = match order {
        BlowupOrder::Auto => auto_order(l, building.carrier()),
        BlowupOrder::Explicit(o) => {
            validate_order(l, building.carrier(), o)?;
            o.clone()
        }
    };
    // current[y] = position of the surviving copy of original element y.
    let mut current: Vec<Option<usize>> = (0..l.len()).map(Some).collect();
    let mut lattice = l.clone();
    for (step, &g) in order.iter().enumerate() {
        let x = current[g].ok_or_else(|| {
            Error::Internal(format!("{} did not survive earlier blowups", l.label(g)))
        })?;
        let res = blowup_step(&lattice, x, step + 1)?;
        let mut back = vec![None; lattice.len()];
        for (i, o) in res.origin.iter().enumerate() {
            if let Origin::Kept(y) = *o {
                back[y] = Some(i);
            }
        }
        for c in current.iter_mut() {
            *c = c.and_then(|y| back[y]);
        }
        lattice = res.lattice;
    }
    Ok(lattice)
}
