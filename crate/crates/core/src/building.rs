//! Building sets, factor decompositions and nested set complexes.
//!
//! A subset `G` of `L_{>0}` is a building set when, for every `X > 0`, the
//! lower interval `[0, X]` is the product of the intervals `[0, G_j]` over
//! the maximal elements `G_j` of `G` below `X`. The product condition is
//! tested through the join map `(y_1, ..., y_k) -> y_1 v ... v y_k`; when
//! that test fails an independent pinned isomorphism search is run and any
//! disagreement between the two is surfaced as an error.

use fixedbitset::FixedBitSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::{direct_product, poset_isomorphic, MeetSemilattice};

/// A verified building set together with its factor map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    carrier: Vec<usize>,
    member: FixedBitSet,
    factors: Vec<Vec<usize>>,
}

impl BuildingSet {
    /// Element indices, ascending.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.contains(x)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.member
    }

    /// `F_G(X) = max G_{<=X}`; empty for the bottom element.
    pub fn factors_of(&self, x: usize) -> &[usize] {
        &self.factors[x]
    }

    pub fn labels<'a>(&self, l: &'a MeetSemilattice) -> Vec<&'a str> {
        self.carrier.iter().map(|&x| l.label(x)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildingCheck {
    Building(BuildingSet),
    /// The product condition fails at `witness`.
    Failed { witness: usize },
}

impl BuildingCheck {
    pub fn is_building(&self) -> bool {
        matches!(self, BuildingCheck::Building(_))
    }

    pub fn into_building(self, l: &MeetSemilattice) -> Result<BuildingSet> {
        match self {
            BuildingCheck::Building(g) => Ok(g),
            BuildingCheck::Failed { witness } => Err(Error::NotABuildingSet {
                witness: l.label(witness).to_string(),
            }),
        }
    }
}

fn validate_subset(l: &MeetSemilattice, g: &[usize]) -> Result<FixedBitSet> {
    let mut member = FixedBitSet::with_capacity(l.len());
    for &x in g {
        if x >= l.len() {
            return Err(Error::ElementOutOfRange(x.to_string()));
        }
        if x == l.bottom() {
            return Err(Error::ElementOutOfRange(format!(
                "{} (bottom is not allowed)",
                l.label(x)
            )));
        }
        member.insert(x);
    }
    Ok(member)
}

fn max_below(l: &MeetSemilattice, member: &FixedBitSet, x: usize) -> Vec<usize> {
    let mut below = member.clone();
    below.intersect_with(l.down_set(x));
    l.maximal_in(&below)
}

/// Is `(y_1, ..., y_k) -> y_1 v ... v y_k` an order isomorphism from
/// `prod [0, G_j]` onto `[0, x]`?
pub(crate) fn join_map_is_isomorphism(l: &MeetSemilattice, factors: &[usize], x: usize) -> bool {
    let target: Vec<usize> = l.down_set(x).ones().collect();
    let boxes: Vec<Vec<usize>> = factors.iter().map(|&g| l.down_set(g).ones().collect()).collect();
    let total: usize = boxes.iter().map(Vec::len).product();
    if factors.is_empty() || total != target.len() {
        return false;
    }
    let mut tuples = Vec::with_capacity(total);
    let mut images = Vec::with_capacity(total);
    let mut hit = FixedBitSet::with_capacity(l.len());
    for t in 0..total {
        let mut rest = t;
        let mut tuple = Vec::with_capacity(boxes.len());
        for b in boxes.iter().rev() {
            tuple.push(b[rest % b.len()]);
            rest /= b.len();
        }
        tuple.reverse();
        let Some(j) = l.join_all(tuple.iter().copied()) else {
            return false;
        };
        if hit.contains(j) || !l.le(j, x) {
            return false;
        }
        hit.insert(j);
        tuples.push(tuple);
        images.push(j);
    }
    // Bijective and monotone; check that the inverse is monotone too.
    for a in 0..total {
        for b in 0..total {
            if l.le(images[a], images[b])
                && !tuples[a].iter().zip(&tuples[b]).all(|(&s, &t)| l.le(s, t))
            {
                return false;
            }
        }
    }
    true
}

/// Pinned isomorphism search `prod [0, G_j] -> [0, x]` with
/// `(0, .., G_j, .., 0) -> G_j`.
fn pinned_product_isomorphic(l: &MeetSemilattice, factors: &[usize], x: usize) -> bool {
    if factors.is_empty() {
        return false;
    }
    let intervals: Vec<_> = factors
        .iter()
        .map(|&g| l.interval(l.bottom(), g).expect("bottom below everything"))
        .collect();
    let total: usize = intervals.iter().map(|p| p.len()).product();
    let target_elems = l.interval_elements(l.bottom(), x).expect("bottom below everything");
    if total != target_elems.len() {
        return false;
    }
    let refs: Vec<_> = intervals.iter().collect();
    let product = direct_product(&refs).expect("nonempty");
    let target = l.induced(&target_elems);
    // Tuple index of the unit vector at position j, mixed radix.
    let sizes: Vec<usize> = intervals.iter().map(|p| p.len()).collect();
    let mut pins = Vec::new();
    for (j, (&g, iv)) in factors.iter().zip(&intervals).enumerate() {
        let pos = iv.index_of(l.label(g)).expect("factor in its own interval");
        let mut idx = 0;
        for (i, &s) in sizes.iter().enumerate() {
            let digit = if i == j {
                pos
            } else {
                iv_bottom_pos(&intervals[i], l)
            };
            idx = idx * s + digit;
        }
        let tgt = target_elems.iter().position(|&e| e == g).expect("factor below x");
        pins.push((idx, tgt));
    }
    poset_isomorphic(&product, &target, &pins).is_some()
}

fn iv_bottom_pos(iv: &crate::poset::Poset, l: &MeetSemilattice) -> usize {
    iv.index_of(l.label(l.bottom())).expect("bottom in interval")
}

/// Dual check of the product condition at `x`. Errors if the join-map test
/// and the pinned isomorphism search disagree.
fn product_condition(l: &MeetSemilattice, factors: &[usize], x: usize) -> Result<bool> {
    if join_map_is_isomorphism(l, factors, x) {
        return Ok(true);
    }
    if pinned_product_isomorphic(l, factors, x) {
        return Err(Error::CheckDisagreement {
            element: l.label(x).to_string(),
        });
    }
    Ok(false)
}

/// Checks the building-set condition for every `X > 0`.
pub fn is_building_set(l: &MeetSemilattice, g: &[usize]) -> Result<BuildingCheck> {
    let member = validate_subset(l, g)?;
    let mut factors = vec![Vec::new(); l.len()];
    for x in l.linear_extension() {
        if x == l.bottom() {
            continue;
        }
        let f = max_below(l, &member, x);
        if !product_condition(l, &f, x)? {
            return Ok(BuildingCheck::Failed { witness: x });
        }
        factors[x] = f;
    }
    let carrier = member.ones().collect();
    Ok(BuildingCheck::Building(BuildingSet {
        carrier,
        member,
        factors,
    }))
}

/// Checks and unwraps in one go.
pub fn building_set(l: &MeetSemilattice, g: &[usize]) -> Result<BuildingSet> {
    is_building_set(l, g)?.into_building(l)
}

/// `L_{>0}` itself.
pub fn maximal_building_set(l: &MeetSemilattice) -> BuildingSet {
    let all: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom()).collect();
    building_set(l, &all).expect("the full semilattice is a building set")
}

/// The irreducible elements: those whose lower interval admits no proper
/// product decomposition.
pub fn minimal_building_set(l: &MeetSemilattice) -> Result<BuildingSet> {
    let mut irreducible = FixedBitSet::with_capacity(l.len());
    for x in l.linear_extension() {
        if x == l.bottom() {
            continue;
        }
        let cands = max_below(l, &irreducible, x);
        let reducible = cands.len() >= 2 && join_map_is_isomorphism(l, &cands, x);
        if !reducible {
            irreducible.insert(x);
        }
    }
    let g: Vec<usize> = irreducible.ones().collect();
    match is_building_set(l, &g)? {
        BuildingCheck::Building(b) => Ok(b),
        BuildingCheck::Failed { witness } => Err(Error::Internal(format!(
            "irreducible elements fail the building condition at {}",
            l.label(witness)
        ))),
    }
}

/// Upper bound on `|L_{>0} \ G_min|` for exhaustive enumeration.
pub const MAX_ENUMERATION_FREE: usize = 20;

/// All building sets, sorted by carrier. Every building set contains the
/// minimal one, so only its supersets are searched.
pub fn enumerate_building_sets(l: &MeetSemilattice) -> Result<Vec<BuildingSet>> {
    let gmin = minimal_building_set(l)?;
    let free: Vec<usize> = (0..l.len())
        .filter(|&x| x != l.bottom() && !gmin.contains(x))
        .collect();
    if free.len() > MAX_ENUMERATION_FREE {
        return Err(Error::TooLarge(format!(
            "{} elements outside the minimal building set (max {MAX_ENUMERATION_FREE})",
            free.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut g = gmin.carrier().to_vec();
        g.extend(
            free.iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x),
        );
        g.sort_unstable();
        if let BuildingCheck::Building(b) = is_building_set(l, &g)? {
            out.push(b);
        }
    }
    out.sort_by(|a, b| a.carrier.cmp(&b.carrier));
    Ok(out)
}

/// `F_G(X)`.
pub fn factors(l: &MeetSemilattice, g: &BuildingSet, x: usize) -> Result<Vec<usize>> {
    if x >= l.len() || x == l.bottom() {
        return Err(Error::ElementOutOfRange(x.to_string()));
    }
    Ok(g.factors_of(x).to_vec())
}

/// Adding `v` to the nested set `s` keeps it nested iff every antichain
/// `T + {v}`, `T` a nonempty subset of `s`, has a join outside `G`.
fn extends_nested(l: &MeetSemilattice, g: &FixedBitSet, s: &[usize], v: usize) -> bool {
    let incomparable: Vec<usize> = s.iter().copied().filter(|&w| !l.comparable(v, w)).collect();
    let k = incomparable.len();
    for mask in 1u64..(1 << k) {
        let t: Vec<usize> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| incomparable[i])
            .collect();
        let antichain = t
            .iter()
            .enumerate()
            .all(|(i, &a)| t[i + 1..].iter().all(|&b| !l.comparable(a, b)));
        if !antichain {
            continue;
        }
        match l.join_all(t.iter().copied().chain([v])) {
            Some(j) if !g.contains(j) => {}
            _ => return false,
        }
    }
    true
}

pub(crate) fn is_nested_in(l: &MeetSemilattice, g: &FixedBitSet, s: &[usize]) -> bool {
    let mut acc = Vec::with_capacity(s.len());
    for &v in s {
        if !extends_nested(l, g, &acc, v) {
            return false;
        }
        acc.push(v);
    }
    true
}

/// Every antichain of size at least two in `s` has a join that exists and
/// lies outside `G`.
pub fn is_nested(l: &MeetSemilattice, g: &BuildingSet, s: &[usize]) -> Result<bool> {
    if let Some(&x) = s.iter().find(|&&x| x >= l.len() || !g.contains(x)) {
        return Err(Error::ElementOutOfRange(x.to_string()));
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(is_nested_in(l, g.members(), &s))
}

/// All nested sets as lattice-element lists (ascending), including the
/// empty set.
pub fn nested_sets(l: &MeetSemilattice, g: &BuildingSet) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    fn grow(
        l: &MeetSemilattice,
        g: &BuildingSet,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for i in start..g.carrier.len() {
            let v = g.carrier[i];
            if extends_nested(l, g.members(), current, v) {
                current.push(v);
                out.push(current.clone());
                grow(l, g, i + 1, current, out);
                current.pop();
            }
        }
    }
    grow(l, g, 0, &mut Vec::new(), &mut out);
    out
}

/// `N(L, G)`; vertex `i` is the carrier element `g.carrier()[i]`, labelled
/// as in the lattice.
pub fn nested_set_complex(l: &MeetSemilattice, g: &BuildingSet) -> SimplicialComplex {
    let pos: std::collections::HashMap<usize, usize> =
        g.carrier.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let faces = nested_sets(l, g)
        .into_iter()
        .map(|s| s.iter().map(|x| pos[x]).collect::<Face>());
    let vertices = g.carrier.iter().map(|&x| l.label(x).to_string()).collect();
    SimplicialComplex::from_faces_unchecked(vertices, faces)
}
