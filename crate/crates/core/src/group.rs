//! Permutation groups acting on `Q^n` by permuting coordinates, invariant
//! line spans, the arrangement of proper `L(H)` and stabilizers of model
//! points.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{
    encode_model_point, intersection_lattice, IntersectionLattice, QSubspace, QSubspaceArrangement,
};
use crate::error::{Error, Result};
use crate::linalg::{is_zero, kernel, parallel, q, Q};

/// Default cap on group orders.
pub const ORDER_CAP: usize = 10_000;

/// A permutation of `{0, .., n-1}` given by its images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadCycle(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Moves coordinate `i` to position `self(i)`.
    pub fn act(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// Disjoint cycles, each starting at its smallest point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                c.push(i);
                i = self.0[i];
            }
            out.push(c);
        }
        out
    }
}

/// Cycle notation with 1-based points; points are written without
/// separators when the degree is at most 9.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

fn split_top_level(text: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(Error::BadCycle(format!("unbalanced parentheses in {text:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::BadCycle(format!("unbalanced parentheses in {text:?}")));
    }
    out.push(&text[start..]);
    Ok(out)
}

fn parse_points(body: &str, n: usize) -> Result<Vec<usize>> {
    let body = body.trim();
    let separated = body.contains(|c: char| c.is_whitespace() || c == ',');
    let tokens: Vec<&str> = if separated {
        body.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect()
    } else {
        body.char_indices().map(|(i, c)| &body[i..i + c.len_utf8()]).collect()
    };
    let mut pts = Vec::with_capacity(tokens.len());
    for t in tokens {
        let p: usize = t
            .parse()
            .map_err(|_| Error::BadCycle(format!("bad point {t:?}")))?;
        if p == 0 || p > n {
            return Err(Error::BadCycle(format!("point {p} outside 1..={n}")));
        }
        if pts.contains(&(p - 1)) {
            return Err(Error::BadCycle(format!("point {p} repeated in ({body})")));
        }
        pts.push(p - 1);
    }
    Ok(pts)
}

/// Parses one permutation written as a product of cycles, e.g. `(12)(34)`
/// or `(1 10)(2 3)`. Cycles are composed right to left.
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let mut rest = text.trim();
    let mut perm = Permutation::identity(n);
    if rest == "e" || rest.is_empty() {
        return Ok(perm);
    }
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::BadCycle(format!("expected '(' in {text:?}")))?;
        let close = inner
            .find(')')
            .ok_or_else(|| Error::BadCycle(format!("unclosed cycle in {text:?}")))?;
        cycles.push(parse_points(&inner[..close], n)?);
        rest = inner[close + 1..].trim_start();
    }
    for c in cycles.iter().rev() {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &p) in c.iter().enumerate() {
            images[p] = c[(k + 1) % c.len()];
        }
        perm = Permutation(images).compose(&perm);
    }
    Ok(perm)
}

/// Comma-separated generators, each in cycle notation:
/// `"(12),(123)"`, `"(1 2)(3 4), (1 3)"`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<Permutation>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(text)?
        .into_iter()
        .map(|g| parse_permutation(g, n))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted.
    elements: Vec<Permutation>,
}

fn closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<BTreeSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let r = g.compose(&p);
            if seen.insert(r.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrderCapExceeded(cap));
                }
                queue.push_back(r);
            }
        }
    }
    Ok(seen)
}

/// Greedy generating set: walk the elements in order and keep those not
/// already generated.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = BTreeSet::from([Permutation::identity(degree)]);
    for e in elements {
        if !span.contains(e) {
            gens.push(e.clone());
            span = closure(degree, &gens, usize::MAX).expect("no cap");
        }
    }
    gens
}

impl PermGroup {
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::generate_capped(degree, generators, ORDER_CAP)
    }

    pub fn generate_capped(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DimensionMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let elements: Vec<Permutation> = closure(degree, generators, cap)?.into_iter().collect();
        let generators = greedy_generators(degree, &elements);
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// The subgroup with exactly these elements; fails if they are not
    /// closed under composition.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let generators = greedy_generators(degree, &elements);
        let g = Self::generate(degree, &generators)?;
        if g.elements != elements {
            return Err(Error::Internal("element set is not closed under composition".into()));
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// `<g1, g2, ...>` using the greedy generators.
    pub fn describe(&self) -> String {
        if self.generators.is_empty() {
            return "<>".into();
        }
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        format!("<{}>", gens.join(","))
    }
}

/// Builds a group from cycle notation.
pub fn perm_group(generator_cycles: &str, n: usize) -> Result<PermGroup> {
    PermGroup::generate(n, &parse_cycles(generator_cycles, n)?)
}

/// All subgroups, obtained by repeatedly joining known subgroups with cyclic
/// subgroups; sorted by order, then by element list.
pub fn subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let n = g.degree();
    let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let trivial = PermGroup::trivial(n);
    found.insert(trivial.elements.clone());
    let mut frontier = vec![trivial];
    let mut all = Vec::new();
    while let Some(h) = frontier.pop() {
        for x in g.elements() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.generators.clone();
            gens.push(x.clone());
            let k = PermGroup::generate(n, &gens)?;
            if found.insert(k.elements.clone()) {
                frontier.push(k);
            }
        }
        all.push(h);
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(all)
}

fn permutation_matrix(p: &Permutation) -> Vec<Vec<Q>> {
    let n = p.degree();
    let mut m = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        m[p.apply(i)][i] = Q::one();
    }
    m
}

/// Span of the lines fixed (as lines) by every element of `h`: the sum of
/// the common eigenspaces over all sign assignments to the generators.
pub fn invariant_line_span(h: &PermGroup, n: usize) -> Result<QSubspace> {
    if h.degree() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.degree(),
        });
    }
    let gens = h.generators();
    let mats: Vec<Vec<Vec<Q>>> = gens.iter().map(permutation_matrix).collect();
    let mut vectors = Vec::new();
    for signs in 0u32..(1 << gens.len()) {
        let mut rows = Vec::new();
        for (k, m) in mats.iter().enumerate() {
            let s = if signs & (1 << k) != 0 { q(-1) } else { q(1) };
            for (i, row) in m.iter().enumerate() {
                let mut r = row.clone();
                r[i] -= &s;
                rows.push(r);
            }
        }
        vectors.extend(kernel(&rows, n));
    }
    QSubspace::from_span(n, &vectors)
}

/// The arrangement of proper subspaces `L(H)`, each tagged with the first
/// subgroup (in [`subgroups`] order) realizing it.
#[derive(Clone, Debug)]
pub struct ActionArrangement {
    pub arrangement: QSubspaceArrangement,
    pub witnesses: Vec<PermGroup>,
}

pub fn action_arrangement(g: &PermGroup, n: usize) -> Result<ActionArrangement> {
    let mut subs = Vec::new();
    let mut names = Vec::new();
    let mut witnesses = Vec::new();
    let mut seen = BTreeSet::new();
    let whole = QSubspace::whole(n);
    for h in subgroups(g)? {
        let l = invariant_line_span(&h, n)?;
        if l == whole || !seen.insert(l.clone()) {
            continue;
        }
        subs.push(l);
        names.push(format!("L{}", h.describe()));
        witnesses.push(h);
    }
    Ok(ActionArrangement {
        arrangement: QSubspaceArrangement::new(n, subs, Some(names))?,
        witnesses,
    })
}

/// Elements fixing `x` and each line (up to scalars).
pub fn stabilizer(g: &PermGroup, x: &[Q], lines: &[Vec<Q>]) -> Result<PermGroup> {
    let n = g.degree();
    for v in std::iter::once(x).chain(lines.iter().map(Vec::as_slice)) {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let elems: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|p| p.act(x) == x && lines.iter().all(|l| is_zero(l) || parallel(&p.act(l), l)))
        .cloned()
        .collect();
    PermGroup::from_elements(n, elems)
}

/// Every non-identity element has order 2.
pub fn is_elementary_abelian_2(h: &PermGroup) -> bool {
    h.elements()
        .iter()
        .all(|p| p.is_identity() || p.compose(p).is_identity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointAudit {
    pub x: Vec<Q>,
    pub lines: Vec<Vec<Q>>,
    pub stabilizer_order: usize,
    pub stabilizer: String,
    pub elementary_abelian_2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumAudit {
    /// Labels of `H_1 > ... > H_t`.
    pub chain: Vec<String>,
    pub points: Vec<PointAudit>,
    /// Fewer valid points than requested within the retry budget.
    pub sampling_exhausted: bool,
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub lattice: IntersectionLattice,
    pub strata: Vec<StratumAudit>,
}

impl AuditReport {
    pub fn violations(&self) -> Vec<(&StratumAudit, &PointAudit)> {
        self.strata
            .iter()
            .flat_map(|s| s.points.iter().filter(|p| !p.elementary_abelian_2).map(move |p| (s, p)))
            .collect()
    }

    pub fn points(&self) -> usize {
        self.strata.iter().map(|s| s.points.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Attempts per requested sample before a stratum counts as exhausted.
pub const RETRIES_PER_SAMPLE: usize = 64;
/// Coefficients are drawn from `-COEFF_BOX..=COEFF_BOX`.
pub const COEFF_BOX: i64 = 3;

fn random_in<R: Rng>(s: &QSubspace, rng: &mut R) -> Vec<Q> {
    let n = s.ambient_dim();
    let mut v = vec![Q::zero(); n];
    for b in s.basis() {
        let c = q(rng.gen_range(-COEFF_BOX..=COEFF_BOX));
        for (vi, bi) in v.iter_mut().zip(&b) {
            *vi += &c * bi;
        }
    }
    v
}

/// Strictly decreasing chains `H_1 > ... > H_t` of `L_{>0}`, including the
/// empty chain, sorted by length then labels.
fn chains(il: &IntersectionLattice) -> Vec<Vec<usize>> {
    let elems: Vec<usize> = (0..il.len()).filter(|&x| x != il.bottom()).collect();
    let mut out = vec![Vec::new()];
    fn grow(il: &IntersectionLattice, elems: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for &x in elems {
            if cur.last().is_some_and(|&y| !il.lt(x, y)) {
                continue;
            }
            cur.push(x);
            out.push(cur.clone());
            grow(il, elems, cur, out);
            cur.pop();
        }
    }
    grow(il, &elems, &mut Vec::new(), &mut out);
    out.sort_by_cached_key(|c| {
        (
            c.len(),
            c.iter().map(|&x| il.label(x).to_string()).collect::<Vec<_>>(),
        )
    });
    out
}

/// Samples model points on every stratum of the maximal model of `A(G)`
/// inside `{x : sum x_i = 0}` and checks that their stabilizers are
/// elementary abelian 2-groups. Stratum `k` draws from a ChaCha stream
/// `k` seeded with `seed`.
pub fn abelianization_audit(g: &PermGroup, n: usize, samples: usize, seed: u64) -> Result<AuditReport> {
    let w = QSubspace::sum_zero(n);
    let arr = action_arrangement(g, n)?.arrangement.restricted(&w)?;
    let il = intersection_lattice(&arr)?;
    let mut strata = Vec::new();
    for (k, chain) in chains(&il).into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let mut points = Vec::new();
        let mut attempts = 0;
        while points.len() < samples && attempts < samples * RETRIES_PER_SAMPLE {
            attempts += 1;
            let start = chain.first().copied().unwrap_or(il.bottom());
            let x = random_in(il.subspace(start), &mut rng);
            let mut lines = Vec::with_capacity(chain.len());
            for (i, &h) in chain.iter().enumerate() {
                let next = chain.get(i + 1).map_or(il.ambient(), |&y| il.subspace(y));
                let room = next.intersect(&il.subspace(h).orthogonal_complement());
                lines.push(random_in(&room, &mut rng));
            }
            let Ok(p) = encode_model_point(&il, &x, &lines) else {
                continue;
            };
            if p.chain != chain {
                continue;
            }
            let stab = stabilizer(g, &p.x, &p.lines)?;
            points.push(PointAudit {
                x: p.x,
                lines: p.lines,
                stabilizer_order: stab.order(),
                stabilizer: stab.describe(),
                elementary_abelian_2: is_elementary_abelian_2(&stab),
            });
        }
        strata.push(StratumAudit {
            chain: chain.iter().map(|&x| il.label(x).to_string()).collect(),
            sampling_exhausted: points.len() < samples,
            points,
        });
    }
    Ok(AuditReport { lattice: il, strata })
}
