//! Brute-force cross-checks. Each oracle rebuilds its objects from scratch
//! (set partitions, bitmask subsets, permutation arrays) without going
//! through the library's lattice code.

use std::collections::{BTreeSet, HashSet};

use wonderful::linalg::q;
use wonderful::poset::{boolean_lattice, partition_lattice};
use wonderful::*;

/// A finite lattice given by explicit elements, order and join.
struct Explicit {
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
}

impl Explicit {
    fn new<T: Clone>(items: Vec<T>, label: impl Fn(&T) -> String, le: impl Fn(&T, &T) -> bool, join: impl Fn(&T, &T) -> T, eq: impl Fn(&T, &T) -> bool) -> Self {
        let n = items.len();
        let le_t: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| le(&items[a], &items[b])).collect()).collect();
        let join_t = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let j = join(&items[a], &items[b]);
                        items.iter().position(|x| eq(x, &j)).unwrap()
                    })
                    .collect()
            })
            .collect();
        let bottom = (0..n).find(|&a| (0..n).all(|b| le_t[a][b])).unwrap();
        Explicit {
            labels: items.iter().map(label).collect(),
            le: le_t,
            join: join_t,
            bottom,
        }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    /// Straight from the definition: for every `X > 0`, joining tuples of
    /// the intervals below the maximal members under `X` is an order
    /// isomorphism onto `[0, X]`.
    fn is_building(&self, g: &[usize]) -> bool {
        for x in (0..self.len()).filter(|&x| x != self.bottom) {
            let below: Vec<usize> = g.iter().copied().filter(|&y| self.le[y][x]).collect();
            let maxes: Vec<usize> = below
                .iter()
                .copied()
                .filter(|&y| !below.iter().any(|&z| z != y && self.le[y][z]))
                .collect();
            if maxes.is_empty() {
                return false;
            }
            let intervals: Vec<Vec<usize>> = maxes
                .iter()
                .map(|&m| (0..self.len()).filter(|&y| self.le[y][m]).collect())
                .collect();
            let mut tuples: Vec<Vec<usize>> = vec![vec![]];
            for iv in &intervals {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        iv.iter().map(move |&y| {
                            let mut t = t.clone();
                            t.push(y);
                            t
                        })
                    })
                    .collect();
            }
            let target: Vec<usize> = (0..self.len()).filter(|&y| self.le[y][x]).collect();
            if tuples.len() != target.len() {
                return false;
            }
            let images: Vec<usize> = tuples
                .iter()
                .map(|t| t.iter().fold(self.bottom, |acc, &y| self.join[acc][y]))
                .collect();
            if images.iter().collect::<HashSet<_>>().len() != target.len() {
                return false;
            }
            for (s, &a) in tuples.iter().zip(&images) {
                for (t, &b) in tuples.iter().zip(&images) {
                    let componentwise = s.iter().zip(t).all(|(&u, &v)| self.le[u][v]);
                    if componentwise != self.le[a][b] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn all_building_sets(&self) -> BTreeSet<BTreeSet<String>> {
        let proper: Vec<usize> = (0..self.len()).filter(|&x| x != self.bottom).collect();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << proper.len()) {
            let g: Vec<usize> = proper
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            if self.is_building(&g) {
                out.insert(g.iter().map(|&x| self.labels[x].clone()).collect());
            }
        }
        out
    }

    /// Nested: every antichain of two or more members joins outside `G`.
    fn is_nested(&self, g: &[usize], s: &[usize]) -> bool {
        for mask in 1u32..(1 << s.len()) {
            let sub: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            if sub.len() < 2 {
                continue;
            }
            let antichain = sub.iter().all(|&a| sub.iter().all(|&b| a == b || !self.le[a][b]));
            if antichain && g.contains(&sub.iter().fold(self.bottom, |acc, &y| self.join[acc][y])) {
                return false;
            }
        }
        true
    }
}

/// Set partitions of `{0..n}` as block-id vectors.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let blocks = p.iter().copied().max().map_or(0, |m| m + 1);
                (0..=blocks).map(move |b| {
                    let mut p = p.clone();
                    p.push(b);
                    p
                })
            })
            .collect();
    }
    out
}

fn same_block(p: &[usize], i: usize, j: usize) -> bool {
    p[i] == p[j]
}

fn partition_oracle(n: usize) -> Explicit {
    let refines = |a: &Vec<usize>, b: &Vec<usize>| (0..n).all(|i| (0..n).all(|j| !same_block(a, i, j) || same_block(b, i, j)));
    let join = |a: &Vec<usize>, b: &Vec<usize>| {
        let mut comp: Vec<usize> = (0..n).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for j in 0..n {
                    if (same_block(a, i, j) || same_block(b, i, j)) && comp[i] != comp[j] {
                        let m = comp[i].min(comp[j]);
                        comp[i] = m;
                        comp[j] = m;
                        changed = true;
                    }
                }
            }
        }
        comp
    };
    let eq = |a: &Vec<usize>, b: &Vec<usize>| (0..n).all(|i| (0..n).all(|j| same_block(a, i, j) == same_block(b, i, j)));
    let label = |p: &Vec<usize>| {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if let Some(b) = blocks.iter_mut().find(|b| same_block(p, b[0], i)) {
                b.push(i);
            } else {
                blocks.push(vec![i]);
            }
        }
        let parts: Vec<String> = blocks
            .iter()
            .filter(|b| b.len() > 1)
            .map(|b| b.iter().map(|i| (i + 1).to_string()).collect())
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("|")
        }
    };
    Explicit::new(set_partitions(n), label, refines, join, eq)
}

fn boolean_oracle(n: usize) -> Explicit {
    let label = |m: &u32| {
        if *m == 0 {
            "0".to_string()
        } else {
            (0..n).filter(|i| m & (1 << i) != 0).map(|i| (b'a' + i as u8) as char).collect()
        }
    };
    Explicit::new((0..1u32 << n).collect(), label, |a, b| a & !b == 0, |a, b| a | b, |a, b| a == b)
}

fn library_sets(l: &MeetSemilattice) -> BTreeSet<BTreeSet<String>> {
    enumerate_building_sets(l)
        .unwrap()
        .iter()
        .map(|g| g.labels(l).into_iter().map(String::from).collect())
        .collect()
}

#[test]
fn oracle_labels_match_library_lattices() {
    let o = partition_oracle(4);
    let l = partition_lattice(4).unwrap();
    let mut a = o.labels.clone();
    let mut b = l.labels().to_vec();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn pi4_building_sets_from_all_subsets() {
    let o = partition_oracle(4);
    let expected = o.all_building_sets();
    assert_eq!(expected.len(), 8);
    assert_eq!(library_sets(&partition_lattice(4).unwrap()), expected);
}

#[test]
fn pi3_building_sets_from_all_subsets() {
    let expected = partition_oracle(3).all_building_sets();
    assert_eq!(expected.len(), 1);
    assert_eq!(library_sets(&partition_lattice(3).unwrap()), expected);
}

/// For boolean lattices a building set is a family containing the
/// singletons and closed under unions of intersecting members.
fn union_closed_families(n: usize) -> BTreeSet<BTreeSet<u32>> {
    let nonsingleton: Vec<u32> = (1..1u32 << n).filter(|m| m.count_ones() > 1).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << nonsingleton.len()) {
        let mut fam: BTreeSet<u32> = (0..n).map(|i| 1 << i).collect();
        fam.extend(
            nonsingleton
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &m)| m),
        );
        let closed = fam.iter().all(|&a| fam.iter().all(|&b| a & b == 0 || fam.contains(&(a | b))));
        if closed {
            out.insert(fam);
        }
    }
    out
}

#[test]
fn boolean_building_sets_are_union_closed_families() {
    for n in 2..=3 {
        let o = boolean_oracle(n);
        let by_definition = o.all_building_sets();
        let by_union: BTreeSet<BTreeSet<String>> = union_closed_families(n)
            .into_iter()
            .map(|f| f.iter().map(|&m| o.labels[m as usize].clone()).collect())
            .collect();
        assert_eq!(by_definition, by_union);
        assert_eq!(library_sets(&boolean_lattice(n).unwrap()), by_union);
    }
    assert_eq!(union_closed_families(3).len(), 12);
}

#[test]
fn b4_building_set_count() {
    let fams = union_closed_families(4);
    assert_eq!(fams.len(), 420);
    let o = boolean_oracle(4);
    let by_union: BTreeSet<BTreeSet<String>> = fams
        .into_iter()
        .map(|f| f.iter().map(|&m| o.labels[m as usize].clone()).collect())
        .collect();
    assert_eq!(library_sets(&boolean_lattice(4).unwrap()), by_union);
}

#[test]
fn nested_sets_by_subset_check() {
    let o = partition_oracle(4);
    let l = partition_lattice(4).unwrap();
    for g in enumerate_building_sets(&l).unwrap() {
        let og: Vec<usize> = g
            .labels(&l)
            .iter()
            .map(|s| o.labels.iter().position(|t| t == s).unwrap())
            .collect();
        let mut expected = BTreeSet::new();
        for mask in 0u32..(1 << og.len()) {
            let s: Vec<usize> = og
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x)
                .collect();
            if o.is_nested(&og, &s) {
                expected.insert(s.iter().map(|&x| o.labels[x].clone()).collect::<BTreeSet<String>>());
            }
        }
        let k = nested_set_complex(&l, &g);
        assert_eq!(k.labelled_faces(), expected, "G = {:?}", g.labels(&l));
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn closure(gens: &[Vec<usize>], n: usize) -> BTreeSet<Vec<usize>> {
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::from([(0..n).collect()]);
    loop {
        let next: BTreeSet<Vec<usize>> = set
            .iter()
            .flat_map(|a| gens.iter().map(move |g| compose(a, g)))
            .chain(set.iter().cloned())
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    all_perms(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |pos| {
                let mut p = p.clone();
                p.insert(pos, n - 1);
                p
            })
        })
        .collect()
}

fn library_subgroups(gens: &str, n: usize) -> BTreeSet<BTreeSet<Vec<usize>>> {
    subgroups(&perm_group(gens, n).unwrap())
        .unwrap()
        .iter()
        .map(|h| h.elements().iter().map(|p| p.images().to_vec()).collect())
        .collect()
}

#[test]
fn s3_subgroups_from_closed_subsets() {
    let perms = all_perms(3);
    let mut closed = BTreeSet::new();
    for mask in 1u32..(1 << 6) {
        let s: BTreeSet<Vec<usize>> = (0..6).filter(|i| mask & (1 << i) != 0).map(|i| perms[i].clone()).collect();
        if s.contains(&vec![0, 1, 2]) && s.iter().all(|a| s.iter().all(|b| s.contains(&compose(a, b)))) {
            closed.insert(s);
        }
    }
    assert_eq!(closed.len(), 6);
    assert_eq!(library_subgroups("(12),(123)", 3), closed);
}

#[test]
fn s4_subgroups_from_generated_pairs() {
    // Every subgroup of S4 is generated by two elements.
    let perms = all_perms(4);
    let mut found = BTreeSet::new();
    for a in &perms {
        for b in &perms {
            found.insert(closure(&[a.clone(), b.clone()], 4));
        }
    }
    assert_eq!(found.len(), 30);
    assert_eq!(library_subgroups("(12),(1234)", 4), found);
}

#[test]
fn stabilizer_of_a_wreath_point_by_enumeration() {
    let v = |xs: &[i64]| xs.iter().map(|&x| q(x)).collect::<Vec<_>>();
    let x = [0i64, 0, 0, 0];
    let line = [1i64, -1, -1, 1];
    // sigma fixes the point and sends the line to plus or minus itself.
    let expected: BTreeSet<Vec<usize>> = all_perms(4)
        .into_iter()
        .filter(|p| {
            let moved: Vec<i64> = (0..4).map(|i| line[p.iter().position(|&j| j == i).unwrap()]).collect();
            let fixes_x = (0..4).all(|i| x[p[i]] == x[i]);
            fixes_x && (moved == line || moved.iter().zip(&line).all(|(a, b)| *a == -b))
        })
        .collect();
    assert_eq!(expected.len(), 8);
    let g = perm_group("(12),(1234)", 4).unwrap();
    let st = stabilizer(&g, &v(&x), &[v(&line)]).unwrap();
    let got: BTreeSet<Vec<usize>> = st.elements().iter().map(|p| p.images().to_vec()).collect();
    assert_eq!(got, expected);
    let cycles: BTreeSet<String> = st.elements().iter().map(|p| p.to_string()).collect();
    let named: BTreeSet<String> = ["()", "(14)", "(23)", "(14)(23)", "(12)(34)", "(13)(24)", "(1243)", "(1342)"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(cycles, named);
}

#[test]
fn mobius_of_partition_lattices_by_recursion() {
    // mu(0, top) for the partition lattice from the explicit order.
    for (n, expected) in [(3, 2), (4, -6), (5, 24)] {
        let o = partition_oracle(n);
        let mut order: Vec<usize> = (0..o.len()).collect();
        order.sort_by_key(|&x| (0..o.len()).filter(|&y| o.le[y][x]).count());
        let mut mu = vec![0i64; o.len()];
        for &x in &order {
            mu[x] = if x == o.bottom {
                1
            } else {
                -(0..o.len()).filter(|&y| y != x && o.le[y][x]).map(|y| mu[y]).sum::<i64>()
            };
        }
        let top = *order.last().unwrap();
        assert_eq!(mu[top], expected);
        assert_eq!(partition_lattice(n).unwrap().mobius().unwrap(), expected);
    }
}

#[test]
fn hilbert_totals_match_monomial_counts() {
    // The basis is a set of standard monomials, so its size equals the
    // number of monomials not divisible by any leading term.
    let l = partition_lattice(4).unwrap();
    for g in enumerate_building_sets(&l).unwrap() {
        let h = hilbert_series(&l, &g).unwrap();
        let gb = groebner_basis(&l, &g).unwrap();
        let leads = gb.leading_monomials();
        for (d, &count) in h.iter().enumerate() {
            let standard = wonderful::algebra::monomials_of_degree(g.len(), d as u32)
                .into_iter()
                .filter(|m| !leads.iter().any(|lm| lm.divides(m)))
                .count();
            assert_eq!(standard, count, "G = {:?}, degree {d}", g.labels(&l));
        }
        assert_eq!(h.first(), Some(&1));
        assert_eq!(h.last(), Some(&1));
    }
}
