//! Rational subspace arrangements and their intersection lattices.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::building::{is_building_set, BuildingCheck};
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero, kernel, normalize_direction, q, rref, Q};
use crate::poset::{partition_label, MeetSemilattice, Poset};

/// A linear subspace of `Q^n`, stored as the reduced row-echelon form of a
/// set of defining equations. Equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QSubspace {
    ambient_dim: usize,
    equations: Vec<Vec<Q>>,
}

impl QSubspace {
    /// `{v : row . v = 0 for every row}`.
    pub fn new(ambient_dim: usize, rows: Vec<Vec<Q>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: r.len(),
            });
        }
        let (equations, _) = rref(rows, ambient_dim);
        Ok(Self {
            ambient_dim,
            equations,
        })
    }

    pub fn from_integer_rows(ambient_dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
        )
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            equations: Vec::new(),
        }
    }

    /// The hyperplane `x_1 + ... + x_n = 0`.
    pub fn sum_zero(ambient_dim: usize) -> Self {
        Self::new(ambient_dim, vec![vec![q(1); ambient_dim]]).expect("row has the right length")
    }

    pub fn from_span(ambient_dim: usize, vectors: &[Vec<Q>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Self::new(ambient_dim, kernel(vectors, ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical equations.
    pub fn equations(&self) -> &[Vec<Q>] {
        &self.equations
    }

    pub fn codim(&self) -> usize {
        self.equations.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.codim()
    }

    pub fn basis(&self) -> Vec<Vec<Q>> {
        kernel(&self.equations, self.ambient_dim)
    }

    pub fn intersect(&self, other: &QSubspace) -> QSubspace {
        let mut rows = self.equations.clone();
        rows.extend(other.equations.iter().cloned());
        QSubspace::new(self.ambient_dim, rows).expect("same ambient dimension")
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        v.len() == self.ambient_dim && self.equations.iter().all(|r| dot(r, v).is_zero())
    }

    /// `other` is a subspace of `self`.
    pub fn contains(&self, other: &QSubspace) -> bool {
        other.basis().iter().all(|v| self.contains_vector(v))
    }

    pub fn orthogonal_complement(&self) -> QSubspace {
        QSubspace::from_span(self.ambient_dim, &self.equations).expect("same ambient dimension")
    }

    /// Every vector of `self` is orthogonal to `v`.
    pub fn orthogonal_to(&self, v: &[Q]) -> bool {
        self.basis().iter().all(|b| dot(b, v).is_zero())
    }

    pub fn span_with(&self, v: &[Q]) -> QSubspace {
        let mut vs = self.basis();
        vs.push(v.to_vec());
        QSubspace::from_span(self.ambient_dim, &vs).expect("same ambient dimension")
    }
}

/// A finite list of distinct proper subspaces of an ambient space `W`
/// (by default `Q^n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSubspaceArrangement {
    ambient: QSubspace,
    subspaces: Vec<QSubspace>,
    names: Vec<String>,
}

impl QSubspaceArrangement {
    pub fn new(dim: usize, subspaces: Vec<QSubspace>, names: Option<Vec<String>>) -> Result<Self> {
        Self::with_ambient(QSubspace::whole(dim), subspaces, names)
    }

    /// Members are intersected with `ambient`.
    pub fn with_ambient(
        ambient: QSubspace,
        subspaces: Vec<QSubspace>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = ambient.ambient_dim();
        let names = names.unwrap_or_else(|| (1..=subspaces.len()).map(|i| format!("A{i}")).collect());
        if names.len() != subspaces.len() {
            return Err(Error::InvalidArrangement(format!(
                "{} names for {} subspaces",
                names.len(),
                subspaces.len()
            )));
        }
        let mut seen_names = BTreeSet::new();
        let mut seen = BTreeSet::new();
        let mut members = Vec::with_capacity(subspaces.len());
        for (s, name) in subspaces.iter().zip(&names) {
            if s.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.ambient_dim(),
                });
            }
            let s = s.intersect(&ambient);
            if s == ambient {
                return Err(Error::InvalidArrangement(format!("{name} is the whole ambient space")));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidArrangement(format!("{name} is a duplicate")));
            }
            if !seen_names.insert(name.clone()) || name == "0" {
                return Err(Error::InvalidArrangement(format!("name {name:?} is not usable")));
            }
            members.push(s);
        }
        Ok(Self {
            ambient,
            subspaces: members,
            names,
        })
    }

    pub fn dim(&self) -> usize {
        self.ambient.ambient_dim()
    }

    pub fn ambient(&self) -> &QSubspace {
        &self.ambient
    }

    pub fn subspaces(&self) -> &[QSubspace] {
        &self.subspaces
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// The same arrangement inside `ambient`. Members that become the whole
    /// of `ambient` are dropped; coinciding members keep the first name.
    pub fn restricted(&self, ambient: &QSubspace) -> Result<Self> {
        let mut subs = Vec::new();
        let mut names = Vec::new();
        let mut seen = BTreeSet::new();
        for (s, name) in self.subspaces.iter().zip(&self.names) {
            let t = s.intersect(ambient);
            if &t == ambient || !seen.insert(t.clone()) {
                continue;
            }
            subs.push(t);
            names.push(name.clone());
        }
        Self::with_ambient(ambient.clone(), subs, Some(names))
    }

    /// Members not strictly contained in another member.
    pub fn maximal_members(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                !(0..self.len()).any(|j| {
                    j != i && self.subspaces[j].contains(&self.subspaces[i])
                })
            })
            .collect()
    }

    /// Members as a set of canonical forms.
    pub fn canonical_set(&self) -> BTreeSet<QSubspace> {
        self.subspaces.iter().cloned().collect()
    }
}

/// Largest `n` accepted by [`braid_arrangement`].
pub const MAX_BRAID_N: usize = 7;

/// The hyperplanes `x_i = x_j` in `Q^n`, named `ij`.
pub fn braid_arrangement(n: usize) -> Result<QSubspaceArrangement> {
    if n > MAX_BRAID_N {
        return Err(Error::TooLarge(format!("braid arrangement n={n} (max {MAX_BRAID_N})")));
    }
    if n < 2 {
        return Err(Error::InvalidArrangement(format!("braid arrangement needs n >= 2, got {n}")));
    }
    let mut subs = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut row = vec![0i64; n];
            row[i] = 1;
            row[j] = -1;
            subs.push(QSubspace::from_integer_rows(n, &[row])?);
            names.push(format!("{}{}", i + 1, j + 1));
        }
    }
    QSubspaceArrangement::new(n, subs, Some(names))
}

/// Intersection lattice with its subspaces and codimensions relative to the
/// ambient space.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    lattice: MeetSemilattice,
    subspaces: Vec<QSubspace>,
    codim: Vec<usize>,
    ambient: QSubspace,
}

fn braid_pair(name: &str) -> Option<(usize, usize)> {
    let b = name.as_bytes();
    if b.len() != 2 || !b[0].is_ascii_digit() || !b[1].is_ascii_digit() || b[0] == b[1] || b[0] == b'0' || b[1] == b'0' {
        return None;
    }
    Some(((b[0] - b'1') as usize, (b[1] - b'1') as usize))
}

/// Blocks of the partition generated by the given pairs.
fn pair_blocks(pairs: &[(usize, usize)], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        blocks.entry(r).or_default().push(x);
    }
    blocks.into_values().collect()
}

impl IntersectionLattice {
    /// Closure of the members under intersection, ordered by reverse
    /// inclusion. Elements are sorted by codimension, then canonical form.
    pub fn new(a: &QSubspaceArrangement) -> Result<Self> {
        let mut all: BTreeSet<QSubspace> = BTreeSet::new();
        all.insert(a.ambient().clone());
        let mut frontier: Vec<QSubspace> = Vec::new();
        for s in a.subspaces() {
            if all.insert(s.clone()) {
                frontier.push(s.clone());
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for s in a.subspaces() {
                    let t = f.intersect(s);
                    if all.insert(t.clone()) {
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        let amb_codim = a.ambient().codim();
        let mut elems: Vec<QSubspace> = all.into_iter().collect();
        elems.sort_by(|x, y| x.codim().cmp(&y.codim()).then_with(|| x.cmp(y)));

        let pairs: Option<Vec<(usize, usize)>> = a.names().iter().map(|s| braid_pair(s)).collect();
        let pairs = pairs.filter(|p| p.iter().all(|&(i, j)| i.max(j) < a.dim()));
        let labels: Vec<String> = elems
            .iter()
            .map(|e| {
                if e == a.ambient() {
                    return "0".to_string();
                }
                let containing: Vec<usize> =
                    (0..a.len()).filter(|&i| a.subspaces()[i].contains(e)).collect();
                if let Some(pairs) = &pairs {
                    let chosen: Vec<(usize, usize)> = containing.iter().map(|&i| pairs[i]).collect();
                    return partition_label(&pair_blocks(&chosen, a.dim()));
                }
                if let Some(i) = (0..a.len()).find(|&i| &a.subspaces()[i] == e) {
                    return a.names()[i].clone();
                }
                containing
                    .iter()
                    .map(|&i| a.names()[i].as_str())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidArrangement(
                "member names do not determine distinct element labels".into(),
            ));
        }
        let poset = Poset::from_relation_unchecked(labels, |x, y| elems[x].contains(&elems[y]));
        let lattice = MeetSemilattice::from_poset(poset)?;
        let codim = elems.iter().map(|e| e.codim() - amb_codim).collect();
        Ok(Self {
            lattice,
            subspaces: elems,
            codim,
            ambient: a.ambient().clone(),
        })
    }

    pub fn lattice(&self) -> &MeetSemilattice {
        &self.lattice
    }

    pub fn subspace(&self, x: usize) -> &QSubspace {
        &self.subspaces[x]
    }

    pub fn codim(&self, x: usize) -> usize {
        self.codim[x]
    }

    pub fn codims(&self) -> &[usize] {
        &self.codim
    }

    pub fn ambient(&self) -> &QSubspace {
        &self.ambient
    }

    pub fn element_of(&self, s: &QSubspace) -> Option<usize> {
        self.subspaces.iter().position(|t| t == s)
    }

    /// The largest element whose subspace contains `s`. The set of such
    /// elements is closed under joins, so this is their join.
    pub fn max_containing(&self, s: &QSubspace) -> usize {
        (0..self.subspaces.len())
            .filter(|&x| self.subspaces[x].contains(s))
            .max_by_key(|&x| (self.lattice.down_set(x).count_ones(..), x))
            .expect("the ambient space contains everything")
    }
}

impl std::ops::Deref for IntersectionLattice {
    type Target = MeetSemilattice;

    fn deref(&self) -> &MeetSemilattice {
        &self.lattice
    }
}

pub fn intersection_lattice(a: &QSubspaceArrangement) -> Result<IntersectionLattice> {
    IntersectionLattice::new(a)
}

/// Inclusion-maximal subspaces among the elements of codimension at least
/// `k`, named by their lattice labels.
pub fn truncate(il: &IntersectionLattice, k: usize) -> QSubspaceArrangement {
    let high: Vec<usize> = (0..il.len()).filter(|&x| il.codim(x) >= k && il.codim(x) > 0).collect();
    let keep: Vec<usize> = high
        .iter()
        .copied()
        .filter(|&x| !high.iter().any(|&y| il.lt(y, x)))
        .collect();
    let subs = keep.iter().map(|&x| il.subspace(x).clone()).collect();
    let names = keep.iter().map(|&x| il.label(x).to_string()).collect();
    QSubspaceArrangement::with_ambient(il.ambient().clone(), subs, Some(names))
        .expect("distinct proper lattice elements")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometricCheck {
    Geometric,
    /// Not even a combinatorial building set.
    NotCombinatorial { witness: usize },
    CodimMismatch {
        witness: usize,
        codim: usize,
        factor_sum: usize,
    },
}

impl GeometricCheck {
    pub fn is_geometric(&self) -> bool {
        matches!(self, GeometricCheck::Geometric)
    }
}

/// Combinatorial building set whose factor codimensions add up.
pub fn is_geometric_building_set(
    l: &MeetSemilattice,
    codim: Option<&[usize]>,
    g: &[usize],
) -> Result<GeometricCheck> {
    let codim = codim.ok_or(Error::MissingCodim)?;
    if codim.len() != l.len() {
        return Err(Error::DimensionMismatch {
            expected: l.len(),
            found: codim.len(),
        });
    }
    let b = match is_building_set(l, g)? {
        BuildingCheck::Building(b) => b,
        BuildingCheck::Failed { witness } => return Ok(GeometricCheck::NotCombinatorial { witness }),
    };
    for x in 0..l.len() {
        if x == l.bottom() {
            continue;
        }
        let factor_sum = b.factors_of(x).iter().map(|&y| codim[y]).sum();
        if codim[x] != factor_sum {
            return Ok(GeometricCheck::CodimMismatch {
                witness: x,
                codim: codim[x],
                factor_sum,
            });
        }
    }
    Ok(GeometricCheck::Geometric)
}

/// Encoded point `(x, H_1, l_1, ..., H_t, l_t)` of the maximal model.
/// Lines are scaled so that their first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPoint {
    pub x: Vec<Q>,
    pub chain: Vec<usize>,
    pub lines: Vec<Vec<Q>>,
}

/// Builds the chain greedily and validates the encoding.
pub fn encode_model_point(il: &IntersectionLattice, x: &[Q], lines: &[Vec<Q>]) -> Result<ModelPoint> {
    let n = il.ambient().ambient_dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if !il.ambient().contains_vector(x) {
        return Err(Error::PointOutsideAmbient);
    }
    let mut chain = Vec::new();
    let point = QSubspace::from_span(n, &[x.to_vec()])?;
    let mut h = il.max_containing(&point);
    for (i, line) in lines.iter().enumerate() {
        if h == il.bottom() {
            return Err(Error::TooManyLines(i));
        }
        chain.push(h);
        if line.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: line.len(),
            });
        }
        if is_zero(line) {
            return Err(Error::ZeroLine(i));
        }
        if !il.ambient().contains_vector(line) {
            return Err(Error::LineOutsideAmbient(i));
        }
        if !il.subspace(h).orthogonal_to(line) {
            return Err(Error::LineNotOrthogonal(i));
        }
        h = il.max_containing(&il.subspace(h).span_with(line));
    }
    if h != il.bottom() {
        return Err(Error::NotTerminal);
    }
    Ok(ModelPoint {
        x: x.to_vec(),
        chain,
        lines: lines.iter().map(|l| normalize_direction(l)).collect(),
    })
}

/// Chain `H_1 > ... > H_t` indexing the open stratum containing `p`.
pub fn classify_stratum(il: &IntersectionLattice, p: &ModelPoint) -> Result<Vec<usize>> {
    Ok(encode_model_point(il, &p.x, &p.lines)?.chain)
}
