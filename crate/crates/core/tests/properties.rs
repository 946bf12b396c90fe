use std::collections::BTreeSet;

use proptest::prelude::*;

use wonderful::blowup::combinatorial_blowup;
use wonderful::io::LatticeFile;
use wonderful::linalg::{q, rref, Q};
use wonderful::poset::{boolean_lattice, build_semilattice_from_labels, chain, partition_lattice};
use wonderful::*;

/// Intersection-closed family of subsets of a 6-element set, as labelled
/// masks plus its covers.
fn family(seeds: &[u8]) -> (Vec<u8>, Vec<(u8, u8)>) {
    let mut set: BTreeSet<u8> = seeds.iter().map(|m| m & 0x3f).collect();
    loop {
        let next: BTreeSet<u8> = set.iter().flat_map(|&a| set.iter().map(move |&b| a & b)).chain(set.iter().copied()).collect();
        if next.len() == set.len() {
            break;
        }
        set = next;
    }
    let elems: Vec<u8> = set.into_iter().collect();
    let sub = |a: u8, b: u8| a != b && a & !b == 0;
    let mut covers = Vec::new();
    for &a in &elems {
        for &b in &elems {
            if sub(a, b) && !elems.iter().any(|&c| sub(a, c) && sub(c, b)) {
                covers.push((a, b));
            }
        }
    }
    (elems, covers)
}

fn name(m: u8) -> String {
    format!("m{m}")
}

fn semilattice(seeds: &[u8]) -> (Vec<u8>, MeetSemilattice) {
    let (elems, covers) = family(seeds);
    let labels: Vec<String> = elems.iter().map(|&m| name(m)).collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let cover_names: Vec<(String, String)> = covers.iter().map(|&(a, b)| (name(a), name(b))).collect();
    let cover_refs: Vec<(&str, &str)> = cover_names.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let l = build_semilattice_from_labels(&label_refs, &cover_refs).unwrap();
    (elems, l)
}

fn mask_of(l: &MeetSemilattice, x: usize) -> u8 {
    l.label(x)[1..].parse().unwrap()
}

proptest! {
    #[test]
    fn meet_is_intersection_and_obeys_laws(seeds in prop::collection::vec(any::<u8>(), 1..8)) {
        let (_, l) = semilattice(&seeds);
        let n = l.len();
        for a in 0..n {
            prop_assert_eq!(l.meet(a, a), a);
            for b in 0..n {
                prop_assert_eq!(l.meet(a, b), l.meet(b, a));
                prop_assert_eq!(mask_of(&l, l.meet(a, b)), mask_of(&l, a) & mask_of(&l, b));
                for c in 0..n {
                    prop_assert_eq!(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
                }
            }
        }
    }

    #[test]
    fn covers_round_trip(seeds in prop::collection::vec(any::<u8>(), 1..8)) {
        let (_, covers) = family(&seeds);
        let (_, l) = semilattice(&seeds);
        let expected: BTreeSet<(String, String)> = covers.iter().map(|&(a, b)| (name(a), name(b))).collect();
        let got: BTreeSet<(String, String)> = l.covers().iter().map(|&(a, b)| (l.label(a).to_string(), l.label(b).to_string())).collect();
        prop_assert_eq!(got, expected);
        let text = LatticeFile::from_lattice(&l).to_json();
        let again = LatticeFile::from_json(&text).unwrap().lattice().unwrap();
        prop_assert_eq!(LatticeFile::from_lattice(&again).to_json(), text);
    }

    #[test]
    fn mobius_sums_vanish(seeds in prop::collection::vec(any::<u8>(), 1..8)) {
        let (_, l) = semilattice(&seeds);
        let mu = l.mobius_from_bottom();
        prop_assert_eq!(mu[l.bottom()], 1);
        for x in 0..l.len() {
            if x != l.bottom() {
                let s: i64 = (0..l.len()).filter(|&y| l.le(y, x)).map(|y| mu[y]).sum();
                prop_assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn isomorphism_is_symmetric(seeds in prop::collection::vec(any::<u8>(), 1..7), shift in 0u32..6) {
        // Rotating the ground set gives an isomorphic family.
        let (_, l) = semilattice(&seeds);
        let rot = |m: u8| ((m << shift) | (m >> (6 - shift))) & 0x3f;
        let rotated: Vec<u8> = seeds.iter().map(|&m| rot(m & 0x3f)).collect();
        let (_, r) = semilattice(&rotated);
        let f = poset_isomorphic(&l, &r, &[]).expect("rotation is an isomorphism");
        let g = poset_isomorphic(&r, &l, &[]).expect("inverse direction");
        for a in 0..l.len() {
            for b in 0..l.len() {
                prop_assert_eq!(l.le(a, b), r.le(f[a], f[b]));
            }
        }
        let mut inverse = vec![0; f.len()];
        for (a, &fa) in f.iter().enumerate() {
            inverse[fa] = a;
        }
        for x in 0..r.len() {
            for y in 0..r.len() {
                prop_assert_eq!(r.le(x, y), l.le(inverse[x], inverse[y]));
                prop_assert_eq!(r.le(x, y), l.le(g[x], g[y]));
            }
        }
    }

    #[test]
    fn rref_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 4), 0..5)) {
        let m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let (once, pivots) = rref(m, 4);
        let (twice, pivots2) = rref(once.clone(), 4);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn encode_then_classify(x in prop::collection::vec(-3i64..4, 3), l1 in prop::collection::vec(-3i64..4, 3), l2 in prop::collection::vec(-3i64..4, 3)) {
        let ambient = QSubspace::sum_zero(4);
        let a = braid_arrangement(4).unwrap().restricted(&ambient).unwrap();
        let il = intersection_lattice(&a).unwrap();
        let lift = |v: &[i64]| {
            let mut w: Vec<Q> = v.iter().map(|&c| q(c)).collect();
            w.push(q(-v.iter().sum::<i64>()));
            w
        };
        let point = lift(&x);
        for lines in [vec![], vec![lift(&l1)], vec![lift(&l1), lift(&l2)]] {
            if let Ok(p) = encode_model_point(&il, &point, &lines) {
                prop_assert_eq!(classify_stratum(&il, &p).unwrap(), p.chain.clone());
            }
        }
    }

    #[test]
    fn stabilizers_are_subgroups(x in prop::collection::vec(-2i64..3, 4), line in prop::collection::vec(-2i64..3, 4)) {
        prop_assume!(line.iter().any(|&c| c != 0));
        let g = perm_group("(12),(1234)", 4).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&c| q(c)).collect::<Vec<Q>>();
        let h = stabilizer(&g, &v(&x), &[v(&line)]).unwrap();
        for a in h.elements() {
            prop_assert!(h.contains(&a.inverse()));
            for b in h.elements() {
                prop_assert!(h.contains(&a.compose(b)));
            }
        }
    }
}

#[test]
fn invariant_lines_are_antitone() {
    for (gens, n) in [("(12),(123)", 3), ("(12),(1234)", 4)] {
        let subs = subgroups(&perm_group(gens, n).unwrap()).unwrap();
        let spans: Vec<QSubspace> = subs.iter().map(|h| invariant_line_span(h, n).unwrap()).collect();
        for (i, h1) in subs.iter().enumerate() {
            for (j, h2) in subs.iter().enumerate() {
                if h2.elements().iter().all(|p| h1.contains(p)) {
                    assert!(spans[j].contains(&spans[i]), "{} inside {}", h2.describe(), h1.describe());
                }
            }
        }
    }
}

#[test]
fn action_arrangements_have_no_hyperplanes() {
    let s4 = perm_group("(12),(1234)", 4).unwrap();
    for h in subgroups(&s4).unwrap() {
        let a = action_arrangement(&h, 4).unwrap().arrangement;
        assert!(a.subspaces().iter().all(|s| s.codim() != 1), "{}", h.describe());
    }
}

#[test]
fn audits_of_small_groups_find_elementary_abelian_stabilizers() {
    for gens in ["(12),(1234)", "(1234),(13)", "(1234)", "(12)(34),(13)(24)", "(12),(123)"] {
        let n = if gens == "(12),(123)" { 3 } else { 4 };
        let g = perm_group(gens, n).unwrap();
        let report = abelianization_audit(&g, n, 3, 7).unwrap();
        assert!(report.passed(), "{gens}: {:?}", report.violations().first().map(|(s, p)| (&s.chain, &p.stabilizer)));
    }
}

#[test]
fn blowup_sizes_follow_the_counting_rule() {
    for l in [partition_lattice(4).unwrap(), boolean_lattice(3).unwrap(), partition_lattice(3).unwrap()] {
        for x in (0..l.len()).filter(|&x| x != l.bottom()) {
            let not_above: Vec<usize> = (0..l.len()).filter(|&y| !l.le(x, y)).collect();
            let with_join = not_above.iter().filter(|&&y| l.join(x, y).is_some()).count();
            let b = combinatorial_blowup(&l, x).unwrap();
            assert_eq!(b.lattice.len(), not_above.len() + with_join, "blowing up {}", l.label(x));
        }
    }
}

#[test]
fn order_complex_of_chain_is_simplex() {
    for k in 1..6 {
        let c = order_complex(&chain(k));
        assert_eq!(c.num_faces(), 1 << k);
        assert_eq!(c.facets().len(), 1);
    }
}

#[test]
fn maximal_building_set_contains_every_other() {
    for l in [partition_lattice(4).unwrap(), boolean_lattice(3).unwrap()] {
        let min = minimal_building_set(&l).unwrap();
        let max = maximal_building_set(&l);
        for g in enumerate_building_sets(&l).unwrap() {
            assert!(min.carrier().iter().all(|&x| g.contains(x)));
            assert!(g.carrier().iter().all(|&x| max.contains(x)));
        }
    }
}
