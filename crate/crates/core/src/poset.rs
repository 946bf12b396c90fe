//! Finite posets and meet-semilattices.
//!
//! Elements are identified by position; labels are opaque strings used only
//! for I/O and diagnostics. The order is stored as one down-set and one
//! up-set bit row per element, which makes interval, meet and join queries
//! cheap set operations.

use std::collections::{HashMap, HashSet};
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
    height: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.down == other.down
    }
}

impl Eq for Poset {}

fn check_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::NotAPoset(format!("duplicate label {l:?}")));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from (lower, upper) pairs by transitive closure.
    /// The pairs need not be covers; they must be acyclic.
    pub fn from_covers(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let index = check_labels(&labels)?;
        let n = labels.len();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::ElementOutOfRange(format!("{}", a.max(b))));
            }
            if a == b {
                return Err(Error::NotAPoset(format!("self-loop at {:?}", labels[a])));
            }
            preds[b].push(a);
            succs[a].push(b);
            indeg[b] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &succs[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if topo.len() != n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(Error::NotAPoset(format!(
                "cycle through {:?}",
                labels[stuck]
            )));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &v in &topo {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &p in &preds[v] {
                row.union_with(&down[p]);
            }
            down[v] = row;
        }
        Ok(Self::from_down_sets(labels, index, down))
    }

    /// Builds a poset from an explicit order relation, validating the poset
    /// axioms.
    pub fn from_relation(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let index = check_labels(&labels)?;
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (b, row) in down.iter_mut().enumerate() {
            for a in 0..n {
                if le(a, b) {
                    row.insert(a);
                }
            }
            if !row.contains(b) {
                return Err(Error::NotAPoset(format!("{:?} not reflexive", labels[b])));
            }
        }
        for b in 0..n {
            for a in down[b].ones() {
                if a != b && down[a].contains(b) {
                    return Err(Error::NotAPoset(format!(
                        "{:?} and {:?} violate antisymmetry",
                        labels[a], labels[b]
                    )));
                }
                if !down[a].is_subset(&down[b]) {
                    return Err(Error::NotAPoset(format!(
                        "relation not transitive below {:?}",
                        labels[b]
                    )));
                }
            }
        }
        Ok(Self::from_down_sets(labels, index, down))
    }

    /// Trusted constructor for relations known to be partial orders.
    pub(crate) fn from_relation_unchecked(
        labels: Vec<String>,
        le: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let n = labels.len();
        let down = (0..n)
            .map(|b| {
                let mut row = FixedBitSet::with_capacity(n);
                row.extend((0..n).filter(|&a| le(a, b)));
                row
            })
            .collect();
        Self::from_down_sets(labels, index, down)
    }

    fn from_down_sets(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        down: Vec<FixedBitSet>,
    ) -> Self {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (b, row) in down.iter().enumerate() {
            for a in row.ones() {
                up[a].insert(b);
            }
        }
        let mut covers = Vec::new();
        for b in 0..n {
            for a in down[b].ones() {
                if a != b && up[a].intersection_count(&down[b]) == 2 {
                    covers.push((a, b));
                }
            }
        }
        covers.sort_unstable();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (down[x].count_ones(..), x));
        let mut height = vec![0usize; n];
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            lower[b].push(a);
        }
        for &x in &order {
            height[x] = lower[x].iter().map(|&y| height[y] + 1).max().unwrap_or(0);
        }
        Self {
            labels,
            index,
            down,
            up,
            covers,
            height,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// `{y : y >= x}`
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.1 == x).map(|c| c.0)
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.0 == x).map(|c| c.1)
    }

    /// Length of the longest chain from a minimal element up to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    /// Elements sorted so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.height[x], x));
        order
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down[x].count_ones(..) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.up[x].count_ones(..) == 1)
            .collect()
    }

    /// Maximal elements of the subset `set`.
    pub fn maximal_in(&self, set: &FixedBitSet) -> Vec<usize> {
        set.ones()
            .filter(|&x| self.up[x].intersection_count(set) == 1)
            .collect()
    }

    /// Induced subposet on `elements` (kept in the given order).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_relation_unchecked(labels, |a, b| self.le(elements[a], elements[b]))
    }

    /// Elements of the closed interval `[a, b]` in index order.
    pub fn interval_elements(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if !self.le(a, b) {
            return Err(Error::NotComparable {
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
            });
        }
        let mut set = self.up[a].clone();
        set.intersect_with(&self.down[b]);
        Ok(set.ones().collect())
    }

    /// The closed interval `[a, b]` as a poset.
    pub fn interval(&self, a: usize, b: usize) -> Result<Poset> {
        Ok(self.induced(&self.interval_elements(a, b)?))
    }

    fn invariant(&self, x: usize) -> (usize, usize, usize, usize, usize) {
        (
            self.height[x],
            self.down[x].count_ones(..),
            self.up[x].count_ones(..),
            self.lower_covers(x).count(),
            self.upper_covers(x).count(),
        )
    }
}

/// Componentwise product; labels are tuples of component labels.
pub fn direct_product(posets: &[&Poset]) -> Result<Poset> {
    if posets.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sizes: Vec<usize> = posets.iter().map(|p| p.len()).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut t: usize| -> Vec<usize> {
        let mut digits = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            digits[i] = t % sizes[i];
            t /= sizes[i];
        }
        digits
    };
    let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(posets)
                .map(|(&i, p)| p.label(i))
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Ok(Poset::from_relation_unchecked(labels, |a, b| {
        tuples[a]
            .iter()
            .zip(&tuples[b])
            .zip(posets)
            .all(|((&x, &y), p)| p.le(x, y))
    }))
}

/// Searches for an order isomorphism `P -> Q` extending `pinned`.
///
/// Returns the image of every element of `P`, or `None`. The search is a
/// plain backtracking over a fixed element order with candidates tried in
/// index order, so the answer is deterministic.
pub fn poset_isomorphic(p: &Poset, q: &Poset, pinned: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.covers.len() != q.covers.len() {
        return None;
    }
    let inv_p: Vec<_> = (0..n).map(|x| p.invariant(x)).collect();
    let inv_q: Vec<_> = (0..n).map(|x| q.invariant(x)).collect();
    let mut sp = inv_p.clone();
    let mut sq = inv_q.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }
    let mut class_size: HashMap<_, usize> = HashMap::new();
    for inv in &inv_q {
        *class_size.entry(*inv).or_default() += 1;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(a, b) in pinned {
        if a >= n || b >= n || inv_p[a] != inv_q[b] {
            return None;
        }
        if map[a] != usize::MAX && map[a] != b {
            return None;
        }
        if map[a] == usize::MAX && used[b] {
            return None;
        }
        map[a] = b;
        used[b] = true;
    }
    let assigned: Vec<usize> = (0..n).filter(|&x| map[x] != usize::MAX).collect();
    for &a in &assigned {
        for &b in &assigned {
            if p.le(a, b) != q.le(map[a], map[b]) {
                return None;
            }
        }
    }

    // Greedy static order: next is the element comparable to the most
    // already-placed elements, preferring small invariant classes.
    let mut placed = vec![false; n];
    for &a in &assigned {
        placed[a] = true;
    }
    let mut score = vec![0usize; n];
    for &a in &assigned {
        for x in 0..n {
            if p.comparable(a, x) {
                score[x] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n - assigned.len());
    for _ in assigned.len()..n {
        let next = (0..n)
            .filter(|&x| !placed[x])
            .max_by(|&x, &y| {
                score[x]
                    .cmp(&score[y])
                    .then(class_size[&inv_p[y]].cmp(&class_size[&inv_p[x]]))
                    .then(y.cmp(&x))
            })
            .expect("unplaced element");
        placed[next] = true;
        for x in 0..n {
            if p.comparable(next, x) {
                score[x] += 1;
            }
        }
        order.push(next);
    }

    let mut done: Vec<usize> = assigned;
    if extend(p, q, &inv_p, &inv_q, &order, 0, &mut map, &mut used, &mut done) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Poset,
    q: &Poset,
    inv_p: &[(usize, usize, usize, usize, usize)],
    inv_q: &[(usize, usize, usize, usize, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    done: &mut Vec<usize>,
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 0..q.len() {
        if used[y] || inv_p[x] != inv_q[y] {
            continue;
        }
        let consistent = done.iter().all(|&a| {
            p.le(x, a) == q.le(y, map[a]) && p.le(a, x) == q.le(map[a], y)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        done.push(x);
        if extend(p, q, inv_p, inv_q, order, depth + 1, map, used, done) {
            return true;
        }
        done.pop();
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Order complex: the simplicial complex of chains. Vertices are the
/// elements of `p` with their labels.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let mut faces: Vec<Vec<usize>> = vec![Vec::new()];
    fn grow(p: &Poset, chain: &mut Vec<usize>, faces: &mut Vec<Vec<usize>>) {
        let last = *chain.last().expect("nonempty chain");
        for y in p.up_set(last).ones() {
            if y != last {
                chain.push(y);
                let mut face = chain.clone();
                face.sort_unstable();
                faces.push(face);
                grow(p, chain, faces);
                chain.pop();
            }
        }
    }
    for x in 0..p.len() {
        let mut chain = vec![x];
        faces.push(vec![x]);
        grow(p, &mut chain, &mut faces);
    }
    SimplicialComplex::from_faces_unchecked(p.labels().to_vec(), faces)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetSemilattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<Option<usize>>,
    bottom: usize,
    top: Option<usize>,
    atoms: Vec<usize>,
}

impl Deref for MeetSemilattice {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl MeetSemilattice {
    /// Validates that every pair has a greatest lower bound and tabulates
    /// meets and (where they exist) joins.
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let dsize: Vec<usize> = (0..n).map(|x| poset.down[x].count_ones(..)).collect();
        let usize_: Vec<usize> = (0..n).map(|x| poset.up[x].count_ones(..)).collect();
        let mut meet = vec![0usize; n * n];
        let mut join = vec![None; n * n];
        let mut lower = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                lower.clone_from(&poset.down[a]);
                lower.intersect_with(&poset.down[b]);
                match lower.ones().max_by_key(|&x| (dsize[x], x)) {
                    Some(m) if poset.down[m] == lower => {
                        meet[a * n + b] = m;
                        meet[b * n + a] = m;
                    }
                    _ => {
                        return Err(Error::NotASemilattice {
                            a: poset.labels[a].clone(),
                            b: poset.labels[b].clone(),
                        })
                    }
                }
            }
        }
        // With all meets present, a nonempty set of upper bounds always has
        // a least element.
        let mut upper = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                upper.clone_from(&poset.up[a]);
                upper.intersect_with(&poset.up[b]);
                if let Some(j) = upper.ones().max_by_key(|&x| (usize_[x], x)) {
                    if poset.up[j] != upper {
                        return Err(Error::Internal(format!(
                            "no least upper bound for {:?} and {:?}",
                            poset.labels[a], poset.labels[b]
                        )));
                    }
                    join[a * n + b] = Some(j);
                    join[b * n + a] = Some(j);
                }
            }
        }
        let bottom = (0..n)
            .find(|&x| dsize[x] == 1)
            .ok_or_else(|| Error::Internal("semilattice without minimum".into()))?;
        let top = (0..n).find(|&x| dsize[x] == n);
        let atoms = poset.upper_covers(bottom).collect::<Vec<_>>();
        let mut atoms = atoms;
        atoms.sort_unstable();
        Ok(Self {
            poset,
            meet,
            join,
            bottom,
            top,
            atoms,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a * self.len() + b]
    }

    /// Join of a family; the empty join is the bottom element.
    pub fn join_all(&self, elements: impl IntoIterator<Item = usize>) -> Option<usize> {
        elements
            .into_iter()
            .try_fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Every element is the join of the atoms below it.
    pub fn check_atomic(&self) -> Result<()> {
        for x in 0..self.len() {
            let below = self.atoms.iter().copied().filter(|&a| self.le(a, x));
            if self.join_all(below) != Some(x) {
                return Err(Error::NotAtomic {
                    witness: self.label(x).to_string(),
                });
            }
        }
        Ok(())
    }

    /// `mu(bottom, top)`.
    pub fn mobius(&self) -> Result<i64> {
        let top = self.top.ok_or(Error::NoTop)?;
        Ok(self.mobius_from_bottom()[top])
    }

    /// `mu(bottom, x)` for every `x`.
    pub fn mobius_from_bottom(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for x in self.linear_extension() {
            mu[x] = if x == self.bottom {
                1
            } else {
                -self
                    .down_set(x)
                    .ones()
                    .filter(|&y| y != x)
                    .map(|y| mu[y])
                    .sum::<i64>()
            };
        }
        mu
    }
}

/// Builds a meet-semilattice from labels and (lower, upper) pairs.
pub fn build_semilattice(labels: Vec<String>, cover_pairs: &[(usize, usize)]) -> Result<MeetSemilattice> {
    MeetSemilattice::from_poset(Poset::from_covers(labels, cover_pairs)?)
}

/// Label-based convenience around [`build_semilattice`].
pub fn build_semilattice_from_labels(
    labels: &[&str],
    covers: &[(&str, &str)],
) -> Result<MeetSemilattice> {
    let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut pairs = Vec::with_capacity(covers.len());
    for &(a, b) in covers {
        let ia = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.into()))?;
        let ib = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.into()))?;
        pairs.push((ia, ib));
    }
    build_semilattice(owned, &pairs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    Partition,
    Boolean,
}

pub const MAX_PARTITION_N: usize = 7;
pub const MAX_BOOLEAN_N: usize = 10;

/// Restricted growth strings of length `n`.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == rgs.len() {
            out.push(rgs.clone());
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}

/// Label of a set partition of `{1..n}`: non-singleton blocks as digit
/// strings joined by `|`; the discrete partition is `0`.
pub fn partition_label(blocks: &[Vec<usize>]) -> String {
    let mut parts: Vec<String> = blocks
        .iter()
        .filter(|b| b.len() > 1)
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b.iter().map(|i| (i + 1).to_string()).collect::<String>()
        })
        .collect();
    if parts.is_empty() {
        return "0".to_string();
    }
    parts.sort_by_key(|s| s.chars().next());
    parts.join("|")
}

fn rgs_blocks(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

/// The partition lattice (reverse refinement) or the boolean lattice.
pub fn standard_lattice(kind: LatticeKind, n: usize) -> Result<MeetSemilattice> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    match kind {
        LatticeKind::Partition => {
            if n > MAX_PARTITION_N {
                return Err(Error::TooLarge(format!(
                    "partition lattice n={n} (max {MAX_PARTITION_N})"
                )));
            }
            let mut parts = set_partitions(n);
            parts.sort_by_cached_key(|rgs| {
                let blocks = rgs_blocks(rgs);
                (n - blocks.len(), partition_label(&blocks))
            });
            let labels = parts.iter().map(|r| partition_label(&rgs_blocks(r))).collect();
            let poset = Poset::from_relation_unchecked(labels, |a, b| {
                let (pa, pb) = (&parts[a], &parts[b]);
                (0..n).all(|i| (0..n).all(|j| pa[i] != pa[j] || pb[i] == pb[j]))
            });
            MeetSemilattice::from_poset(poset)
        }
        LatticeKind::Boolean => {
            if n > MAX_BOOLEAN_N {
                return Err(Error::TooLarge(format!(
                    "boolean lattice n={n} (max {MAX_BOOLEAN_N})"
                )));
            }
            let mut sets: Vec<u32> = (0..1u32 << n).collect();
            let name = |s: u32| -> String {
                if s == 0 {
                    return "0".into();
                }
                (0..n)
                    .filter(|&i| s & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            };
            sets.sort_by_key(|&s| (s.count_ones(), name(s)));
            let labels = sets.iter().map(|&s| name(s)).collect();
            let poset = Poset::from_relation_unchecked(labels, |a, b| sets[a] & !sets[b] == 0);
            MeetSemilattice::from_poset(poset)
        }
    }
}

pub fn partition_lattice(n: usize) -> Result<MeetSemilattice> {
    standard_lattice(LatticeKind::Partition, n)
}

pub fn boolean_lattice(n: usize) -> Result<MeetSemilattice> {
    standard_lattice(LatticeKind::Boolean, n)
}

/// A chain `0 < 1 < ... < k-1` labelled by its positions.
pub fn chain(k: usize) -> Poset {
    let labels = (0..k).map(|i| i.to_string()).collect();
    Poset::from_relation_unchecked(labels, |a, b| a <= b)
}

/// Set of labels of the elements in `set`, handy for assertions.
pub fn label_set(p: &Poset, set: impl IntoIterator<Item = usize>) -> HashSet<&str> {
    set.into_iter().map(|x| p.label(x)).collect()
}
