//! The graded algebra `D(L, G)`: presentation, Gröbner family, normal
//! forms, monomial basis and Hilbert function.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::building::{is_nested_in, nested_sets, BuildingSet};
use crate::error::{Error, Result};
use crate::linalg::{rank, Q};
use crate::poset::MeetSemilattice;

/// Exponent vector; position `i` is the `i`-th variable of the ring, and
/// variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Degree-lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer polynomial; terms with zero coefficient are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        Self::term(Monomial::one(nvars), BigInt::from(c))
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.0.len());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, 1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `self - c * m * g`.
    fn sub_scaled(&mut self, c: &BigInt, m: &Monomial, g: &Polynomial) {
        for (n, d) in &g.terms {
            self.add_term(m.mul(n), -(c * d));
        }
    }

    fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Canonical text: terms in decreasing order, monomials as
    /// `x[label]^e` products joined by `*`.
    pub fn display<'a>(&'a self, labels: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { p: self, labels }
    }

    /// Parses the text produced by [`Polynomial::display`].
    pub fn parse(text: &str, labels: &[String]) -> Result<Polynomial> {
        let n = labels.len();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {text:?}"));
        let mut p = Polynomial::zero(n);
        let s: String = text.split_whitespace().collect();
        if s == "0" {
            return Ok(p);
        }
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = BigInt::one();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if !first {
                return Err(bad("missing sign"));
            }
            first = false;
            let end = term_end(rest);
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let mut coeff = BigInt::one();
            let mut m = Monomial::one(n);
            for factor in split_factors(term) {
                if let Some(inner) = factor.strip_prefix("x[") {
                    let close = inner.rfind(']').ok_or_else(|| bad("unclosed bracket"))?;
                    let label = &inner[..close];
                    let &v = index.get(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
                    let exp = match inner[close + 1..].strip_prefix('^') {
                        Some(e) => e.parse::<u32>().map_err(|_| bad("bad exponent"))?,
                        None if close + 1 == inner.len() => 1,
                        None => return Err(bad("trailing characters")),
                    };
                    m.0[v] += exp;
                } else {
                    coeff *= factor.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?;
                }
            }
            p.add_term(m, sign * coeff);
        }
        Ok(p)
    }
}

/// Position of the first top-level `+` or `-`, ignoring signs inside
/// bracketed labels.
fn term_end(s: &str) -> usize {
    let mut depth = 0usize;
    for (j, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 => return j,
            _ => {}
        }
    }
    s.len()
}

fn split_factors(term: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in term.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            '*' if depth == 0 => {
                out.push(&term[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&term[start..]);
    out
}

pub struct PolynomialDisplay<'a> {
    p: &'a Polynomial,
    labels: &'a [String],
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, labels: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x[{}]", labels[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, m, self.labels)?;
            }
        }
        Ok(())
    }
}

/// How the generators `x_G` are ranked for the degree-lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableOrder {
    /// Smaller lattice elements give larger variables: a linear extension of
    /// `G`, read from the bottom up.
    FinerFirst,
    /// Larger lattice elements give larger variables: the same linear
    /// extension read from the top down.
    CoarserFirst,
}

/// Polynomial ring `Z[x_G : G in G]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    order: VariableOrder,
    /// Lattice element of each variable, largest variable first.
    elements: Vec<usize>,
    labels: Vec<String>,
    position: HashMap<usize, usize>,
}

impl Ring {
    pub fn new(l: &MeetSemilattice, g: &BuildingSet, order: VariableOrder) -> Self {
        let mut elements = g.carrier().to_vec();
        elements.sort_by_key(|&x| (l.height(x), x));
        if order == VariableOrder::CoarserFirst {
            elements.reverse();
        }
        let labels = elements.iter().map(|&x| l.label(x).to_string()).collect();
        let position = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Self {
            order,
            elements,
            labels,
            position,
        }
    }

    pub fn nvars(&self) -> usize {
        self.elements.len()
    }

    pub fn order(&self) -> VariableOrder {
        self.order
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn var_of(&self, x: usize) -> Option<usize> {
        self.position.get(&x).copied()
    }

    pub fn var(&self, x: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.position[&x])
    }

    pub fn monomial_of(&self, elems: &[usize]) -> Monomial {
        let mut m = Monomial::one(self.nvars());
        for x in elems {
            m.0[self.position[x]] += 1;
        }
        m
    }

    /// Human-readable description of the term order.
    pub fn descriptor(&self) -> String {
        let vars: Vec<String> = self.labels.iter().map(|s| format!("x[{s}]")).collect();
        format!("deglex {}", vars.join(" > "))
    }

    pub fn show(&self, p: &Polynomial) -> String {
        p.display(&self.labels).to_string()
    }

    pub fn show_monomial(&self, m: &Monomial) -> String {
        self.show(&Polynomial::monomial(m.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub ring: Ring,
    /// Minimal non-nested subsets of `G`.
    pub monomial_relations: Vec<Vec<usize>>,
    /// For each atom `H`, the elements `G >= H` of the building set.
    pub linear_relations: Vec<(usize, Vec<usize>)>,
}

impl AlgebraPresentation {
    pub fn relations(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = self
            .monomial_relations
            .iter()
            .map(|s| Polynomial::monomial(self.ring.monomial_of(s)))
            .collect();
        for (_, gs) in &self.linear_relations {
            let mut p = Polynomial::zero(self.ring.nvars());
            for &x in gs {
                p = p.add(&self.ring.var(x));
            }
            out.push(p);
        }
        out
    }
}

/// Minimal non-faces of `N(L, G)`, each sorted, listed in lexicographic
/// order. They are antichains with a missing join or a join in `G`.
pub fn minimal_non_faces(l: &MeetSemilattice, g: &BuildingSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn grow(
        l: &MeetSemilattice,
        g: &BuildingSet,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let carrier = g.carrier();
        for i in start..carrier.len() {
            let v = carrier[i];
            if current.iter().any(|&w| l.comparable(v, w)) {
                continue;
            }
            current.push(v);
            if is_nested_in(l, g.members(), current) {
                grow(l, g, i + 1, current, out);
            } else {
                let minimal = (0..current.len()).all(|skip| {
                    let sub: Vec<usize> = current
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    is_nested_in(l, g.members(), &sub)
                });
                if minimal {
                    out.push(current.clone());
                }
            }
            current.pop();
        }
    }
    grow(l, g, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Generators, minimal monomial relations and one linear relation per atom.
pub fn algebra_presentation(l: &MeetSemilattice, g: &BuildingSet) -> Result<AlgebraPresentation> {
    algebra_presentation_with(l, g, VariableOrder::FinerFirst)
}

pub fn algebra_presentation_with(
    l: &MeetSemilattice,
    g: &BuildingSet,
    order: VariableOrder,
) -> Result<AlgebraPresentation> {
    l.check_atomic()?;
    let ring = Ring::new(l, g, order);
    let linear_relations = l
        .atoms()
        .iter()
        .map(|&h| {
            let gs = g.carrier().iter().copied().filter(|&x| l.le(h, x)).collect();
            (h, gs)
        })
        .collect();
    Ok(AlgebraPresentation {
        ring,
        monomial_relations: minimal_non_faces(l, g),
        linear_relations,
    })
}

/// Least `k` such that `a` joined with some `k` atoms equals `b`.
pub fn join_distance(l: &MeetSemilattice, a: usize, b: usize) -> Result<usize> {
    let unreachable = || Error::NotReachable {
        from: l.label(a).to_string(),
        to: l.label(b).to_string(),
    };
    if a >= l.len() || b >= l.len() {
        return Err(Error::ElementOutOfRange(a.max(b).to_string()));
    }
    if !l.le(a, b) {
        return Err(unreachable());
    }
    let mut dist = vec![usize::MAX; l.len()];
    dist[a] = 0;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            return Ok(dist[x]);
        }
        for &h in l.atoms() {
            if let Some(y) = l.join(x, h) {
                if l.le(y, b) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    Err(unreachable())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub polynomials: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polynomials
            .iter()
            .filter_map(|p| p.leading().map(|(m, _)| m.clone()))
            .collect()
    }

    pub fn descriptor(&self) -> String {
        self.ring.descriptor()
    }
}

/// The two polynomial families: monomials of minimal non-nested sets, and
/// `prod x_{A_i} * (sum_{G >= B} x_G)^{d(A, B)}` for nested `H` with
/// maximal elements `A_i`, `A` their join and `B > A` in `G`.
/// Duplicates are removed; all leading coefficients are 1.
pub fn groebner_basis(l: &MeetSemilattice, g: &BuildingSet) -> Result<GroebnerBasis> {
    groebner_basis_with(l, g, VariableOrder::FinerFirst)
}

pub fn groebner_basis_with(
    l: &MeetSemilattice,
    g: &BuildingSet,
    order: VariableOrder,
) -> Result<GroebnerBasis> {
    l.check_atomic()?;
    let ring = Ring::new(l, g, order);
    let n = ring.nvars();
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut seen: BTreeSet<Vec<(Monomial, BigInt)>> = BTreeSet::new();
    let mut push = |p: Polynomial, polys: &mut Vec<Polynomial>| {
        let key: Vec<(Monomial, BigInt)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        if seen.insert(key) {
            polys.push(p);
        }
    };
    for s in minimal_non_faces(l, g) {
        push(Polynomial::monomial(ring.monomial_of(&s)), &mut polys);
    }
    let mut done: BTreeSet<Vec<usize>> = BTreeSet::new();
    for h in nested_sets(l, g) {
        let maximal: Vec<usize> = h
            .iter()
            .copied()
            .filter(|&x| !h.iter().any(|&y| l.lt(x, y)))
            .collect();
        if !done.insert(maximal.clone()) {
            continue;
        }
        let a = l
            .join_all(maximal.iter().copied())
            .ok_or_else(|| Error::Internal("nested set without a join".into()))?;
        let prefix = Polynomial::monomial(ring.monomial_of(&maximal));
        for &b in g.carrier() {
            if !l.lt(a, b) {
                continue;
            }
            let d = join_distance(l, a, b)?;
            let mut sum = Polynomial::zero(n);
            for &x in g.carrier().iter().filter(|&&x| l.le(b, x)) {
                sum = sum.add(&ring.var(x));
            }
            push(prefix.mul(&sum.pow(d)), &mut polys);
        }
    }
    for p in &polys {
        if !p.is_homogeneous() {
            return Err(Error::Internal(format!("inhomogeneous relation {}", ring.show(p))));
        }
        if !p.leading().is_some_and(|(_, c)| c.is_one()) {
            return Err(Error::Internal(format!("leading coefficient not 1 in {}", ring.show(p))));
        }
    }
    Ok(GroebnerBasis {
        ring,
        polynomials: polys,
    })
}

/// Full reduction of `p` modulo `gb`; every leading coefficient in `gb`
/// is 1, so the computation stays over the integers.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    let leads: Vec<(Monomial, &Polynomial)> = gb
        .polynomials
        .iter()
        .filter_map(|g| g.leading().map(|(m, _)| (m.clone(), g)))
        .collect();
    let mut p = p.clone();
    let mut r = Polynomial::zero(p.nvars());
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().find(|(lm, _)| lm.divides(&m)) {
            Some((lm, g)) => p.sub_scaled(&c, &m.div(lm), g),
            None => {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
    }
    r
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading(), g.leading()) else {
        return Polynomial::zero(f.nvars());
    };
    let lcm = mf.lcm(mg);
    let mut s = Polynomial::zero(f.nvars());
    s.sub_scaled(&-cg.clone(), &lcm.div(mf), f);
    s.sub_scaled(cf, &lcm.div(mg), g);
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerReport {
    pub order: String,
    pub basis_size: usize,
    pub pairs: usize,
    /// Pairs whose S-polynomial did not reduce to zero, with the remainder.
    pub failures: Vec<(usize, usize, Polynomial)>,
}

impl BuchbergerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces the S-polynomial of every pair of basis elements.
pub fn buchberger_check(gb: &GroebnerBasis) -> BuchbergerReport {
    let k = gb.polynomials.len();
    let mut failures = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let s = s_polynomial(&gb.polynomials[i], &gb.polynomials[j]);
            let r = normal_form(&s, gb);
            if !r.is_zero() {
                failures.push((i, j, r));
            }
        }
    }
    BuchbergerReport {
        order: gb.descriptor(),
        basis_size: k,
        pairs: k * k.saturating_sub(1) / 2,
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub ring: Ring,
    /// `by_degree[k]` lists the basis monomials of degree `k`, decreasing.
    pub by_degree: Vec<Vec<Monomial>>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }
}

/// `prod_{A in S} x_A^{m(A)}` over nested `S` with
/// `1 <= m(A) < d(A', A)`, `A'` the join of the elements of `S` below `A`.
pub fn monomial_basis(l: &MeetSemilattice, g: &BuildingSet) -> Result<MonomialBasis> {
    monomial_basis_with(l, g, VariableOrder::FinerFirst)
}

pub fn monomial_basis_with(
    l: &MeetSemilattice,
    g: &BuildingSet,
    order: VariableOrder,
) -> Result<MonomialBasis> {
    l.check_atomic()?;
    let ring = Ring::new(l, g, order);
    let mut all: BTreeSet<Monomial> = BTreeSet::new();
    for s in nested_sets(l, g) {
        let mut bounds = Vec::with_capacity(s.len());
        for &a in &s {
            let below = l
                .join_all(s.iter().copied().filter(|&y| l.lt(y, a)))
                .ok_or_else(|| Error::Internal("nested set without a join".into()))?;
            bounds.push(join_distance(l, below, a)?);
        }
        if bounds.iter().any(|&d| d < 2) {
            continue;
        }
        let mut exps = vec![1u32; s.len()];
        loop {
            let mut m = Monomial::one(ring.nvars());
            for (&a, &e) in s.iter().zip(&exps) {
                m.0[ring.var_of(a).expect("nested sets live in G")] = e;
            }
            all.insert(m);
            let mut i = 0;
            while i < exps.len() {
                exps[i] += 1;
                if (exps[i] as usize) < bounds[i] {
                    break;
                }
                exps[i] = 1;
                i += 1;
            }
            if i == exps.len() {
                break;
            }
        }
    }
    let top = all.iter().map(|m| m.degree() as usize).max().unwrap_or(0);
    let mut by_degree = vec![Vec::new(); top + 1];
    for m in all.into_iter().rev() {
        by_degree[m.degree() as usize].push(m);
    }
    Ok(MonomialBasis { ring, by_degree })
}

/// All monomials of total degree `d` in `n` variables, decreasing.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Monomials of degree `d` divisible by no leading monomial of `gb`.
pub fn standard_monomials(gb: &GroebnerBasis, d: u32) -> Vec<Monomial> {
    let leads = gb.leading_monomials();
    monomials_of_degree(gb.ring.nvars(), d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect()
}

/// Dimension of the degree-`d` part of the quotient, computed as the rank
/// of the normal forms of all degree-`d` monomials.
pub fn reduction_dimension(gb: &GroebnerBasis, d: u32) -> usize {
    let forms: Vec<Polynomial> = monomials_of_degree(gb.ring.nvars(), d)
        .iter()
        .map(|m| normal_form(&Polynomial::monomial(m.clone()), gb))
        .filter(|p| !p.is_zero())
        .collect();
    let cols: BTreeSet<&Monomial> = forms.iter().flat_map(|p| p.terms.keys()).collect();
    let col: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let rows: Vec<Vec<Q>> = forms
        .iter()
        .map(|p| {
            let mut r = vec![Q::zero(); cols.len()];
            for (m, c) in &p.terms {
                r[col[m]] = Q::from_integer(c.clone());
            }
            r
        })
        .collect();
    rank(&rows, cols.len())
}

/// Hilbert function from the monomial basis, cross-checked degree by degree
/// (one past the top degree) against the rank of reduced monomials and the
/// count of standard monomials.
pub fn hilbert_series(l: &MeetSemilattice, g: &BuildingSet) -> Result<Vec<usize>> {
    let basis = monomial_basis(l, g)?;
    let gb = groebner_basis(l, g)?;
    let mut from_basis = basis.hilbert();
    let top = from_basis.len();
    let reduction: Vec<usize> = (0..=top as u32).map(|d| reduction_dimension(&gb, d)).collect();
    let standard: Vec<usize> = (0..=top as u32).map(|d| standard_monomials(&gb, d).len()).collect();
    from_basis.push(0);
    if reduction != from_basis || standard != from_basis {
        return Err(Error::HilbertMismatch {
            basis: from_basis,
            reduction,
        });
    }
    from_basis.pop();
    Ok(from_basis)
}
