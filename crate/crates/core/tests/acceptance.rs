//! Acceptance checks. Prints one PASS/FAIL line per check and exits
//! nonzero if any check fails. All comparisons are exact; only the
//! wall-clock budgets below carry a tolerance.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wonderful::algebra::{reduction_dimension, standard_monomials};
use wonderful::arrangement::GeometricCheck;
use wonderful::blowup::random_order;
use wonderful::linalg::{q, Q};
use wonderful::poset::{boolean_lattice, partition_lattice};
use wonderful::*;

const HILBERT_PI3_BUDGET: Duration = Duration::from_secs(1);
const HILBERT_PI4_BUDGET: Duration = Duration::from_secs(5);
const RESOLVE_BUDGET: Duration = Duration::from_secs(60);
const ENUMERATION_BUDGET: Duration = Duration::from_secs(30);
const BUCHBERGER_BUDGET: Duration = Duration::from_secs(60);
const BRAID_BUDGET: Duration = Duration::from_secs(30);
const ACTION_BUDGET: Duration = Duration::from_secs(30);
const AUDIT_BUDGET: Duration = Duration::from_secs(120);
/// Budget for checks without a stated runtime target.
const DEFAULT_BUDGET: Duration = Duration::from_secs(30);

/// Random non-increasing orders tried per building set.
const ORDERS_PER_BUILDING_SET: usize = 10;
const ORDER_SEED: u64 = 0;
const AUDIT_SAMPLES: usize = 5;
const AUDIT_SEED: u64 = 0;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn v(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

fn hilbert_pi3_max() -> Result<String, String> {
    let l = partition_lattice(3).map_err(err)?;
    let g = maximal_building_set(&l);
    let h = hilbert_series(&l, &g).map_err(err)?;
    ensure(h == vec![1, 1], format!("Hilbert function {h:?}"))?;
    let b = monomial_basis(&l, &g).map_err(err)?;
    let shown: Vec<String> = b.by_degree.iter().flatten().map(|m| b.ring.show_monomial(m)).collect();
    ensure(shown == ["1", "x[123]"], format!("basis {shown:?}"))?;
    Ok(format!("Hilbert {h:?}, basis {shown:?}"))
}

fn hilbert_pi4_min() -> Result<String, String> {
    let l = partition_lattice(4).map_err(err)?;
    let g = minimal_building_set(&l).map_err(err)?;
    let h = hilbert_series(&l, &g).map_err(err)?;
    ensure(h == vec![1, 5, 1], format!("Hilbert function {h:?}"))?;
    let basis = monomial_basis(&l, &g).map_err(err)?.hilbert();
    let gb = groebner_basis(&l, &g).map_err(err)?;
    let reduced: Vec<usize> = (0..4).map(|d| reduction_dimension(&gb, d)).collect();
    let standard: Vec<usize> = (0..4).map(|d| standard_monomials(&gb, d).len()).collect();
    ensure(reduced == [1, 5, 1, 0], format!("reduction count {reduced:?}"))?;
    ensure(standard == [1, 5, 1, 0], format!("standard monomials {standard:?}"))?;
    Ok(format!("basis {basis:?}, reduction {reduced:?}"))
}

fn resolve_matches_face_poset() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(ORDER_SEED);
    let lattices = [
        ("Pi3", partition_lattice(3).map_err(err)?),
        ("Pi4", partition_lattice(4).map_err(err)?),
        ("B3", boolean_lattice(3).map_err(err)?),
        ("B4", boolean_lattice(4).map_err(err)?),
    ];
    let mut summary = Vec::new();
    let mut total = 0;
    for (name, l) in &lattices {
        let sets = enumerate_building_sets(l).map_err(err)?;
        for g in &sets {
            let fp = nested_set_complex(l, g).face_poset();
            let mut orders = vec![BlowupOrder::Auto];
            for _ in 0..ORDERS_PER_BUILDING_SET {
                orders.push(BlowupOrder::Explicit(random_order(l, g.carrier(), &mut rng)));
            }
            for order in &orders {
                let r = resolve(l, g.carrier(), order).map_err(err)?;
                ensure(
                    poset_isomorphic(&r, &fp, &[]).is_some(),
                    format!("{name}, G = {:?}, order {order:?}: not isomorphic", g.labels(l)),
                )?;
                total += 1;
            }
        }
        summary.push(format!("{name}: {} sets", sets.len()));
    }
    Ok(format!("{total} resolutions ({})", summary.join(", ")))
}

fn pi4_building_sets() -> Result<String, String> {
    let l = partition_lattice(4).map_err(err)?;
    let sets = enumerate_building_sets(&l).map_err(err)?;
    ensure(sets.len() == 8, format!("{} building sets", sets.len()))?;
    let gmin = minimal_building_set(&l).map_err(err)?;
    let gmax = maximal_building_set(&l);
    ensure(gmin.len() == 11 && gmax.len() == 14, "unexpected extreme sizes")?;
    ensure(sets.contains(&gmin) && sets.contains(&gmax), "extremes missing")?;
    let proper: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom()).collect();
    let mut brute = 0;
    for mask in 0u32..(1 << proper.len()) {
        let g: Vec<usize> = (0..proper.len()).filter(|i| mask & (1 << i) != 0).map(|i| proper[i]).collect();
        if is_building_set(&l, &g).map_err(err)?.is_building() {
            brute += 1;
            ensure(sets.iter().any(|b| b.carrier() == g), format!("subset {g:?} missing from enumeration"))?;
        }
    }
    ensure(brute == 8, format!("{brute} building sets among all subsets"))?;
    let mut sizes: Vec<usize> = sets.iter().map(BuildingSet::len).collect();
    sizes.sort_unstable();
    ensure(sizes == [11, 12, 12, 12, 13, 13, 13, 14], format!("sizes {sizes:?}"))?;
    Ok(format!("8 building sets among 2^{} subsets, sizes {sizes:?}", proper.len()))
}

fn buchberger() -> Result<String, String> {
    let pi3 = partition_lattice(3).map_err(err)?;
    let pi4 = partition_lattice(4).map_err(err)?;
    let cases = [
        ("Pi3 Gmax", &pi3, maximal_building_set(&pi3)),
        ("Pi4 Gmin", &pi4, minimal_building_set(&pi4).map_err(err)?),
        ("Pi4 Gmax", &pi4, maximal_building_set(&pi4)),
    ];
    let mut out = Vec::new();
    for (name, l, g) in cases {
        let gb = groebner_basis(l, &g).map_err(err)?;
        let report = buchberger_check(&gb);
        if let Some((i, j, r)) = report.failures.first() {
            return Err(format!(
                "{name}: S({i},{j}) reduces to {} under {}",
                gb.ring.show(r),
                report.order
            ));
        }
        out.push(format!("{name}: {} pairs", report.pairs));
    }
    Ok(format!("{} (deglex, finer elements larger)", out.join(", ")))
}

fn braid_lattices() -> Result<String, String> {
    let mut out = Vec::new();
    for (n, fact) in [(3usize, 2i64), (4, 6), (5, 24)] {
        let il = intersection_lattice(&braid_arrangement(n).map_err(err)?).map_err(err)?;
        let pi = partition_lattice(n).map_err(err)?;
        ensure(il.len() == pi.len(), format!("n={n}: {} vs {} elements", il.len(), pi.len()))?;
        let pins: Vec<(usize, usize)> = (0..il.len())
            .map(|x| pi.require(il.label(x)).map(|y| (x, y)))
            .collect::<Result<_>>()
            .map_err(err)?;
        ensure(
            poset_isomorphic(&il, &pi, &pins).is_some(),
            format!("n={n}: labels do not give an isomorphism"),
        )?;
        for x in 0..il.len() {
            let blocks = n - il.label(x).split('|').map(|b| if b == "0" { 0 } else { b.len() - 1 }).sum::<usize>();
            ensure(
                il.codim(x) == n - blocks,
                format!("n={n}: codim of {} is {}", il.label(x), il.codim(x)),
            )?;
        }
        let mu = il.mobius().map_err(err)?;
        ensure(mu.abs() == fact, format!("n={n}: mu = {mu}"))?;
        out.push(format!("n={n}: {} elements, mu={mu}", il.len()));
    }
    Ok(out.join(", "))
}

fn geometric_discrimination() -> Result<String, String> {
    let rows = |r: &[Vec<i64>]| QSubspace::from_integer_rows(4, r).map_err(err);
    let a = QSubspaceArrangement::new(
        4,
        vec![
            rows(&[vec![0, 0, 0, 1]])?,
            rows(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]])?,
            rows(&[vec![1, 0, 0, 0], vec![0, 0, 1, 0]])?,
        ],
        None,
    )
    .map_err(err)?;
    let il = intersection_lattice(&a).map_err(err)?;
    ensure(il.len() == 8, "lattice is not boolean of rank 3")?;
    let atoms = il.atoms().to_vec();
    ensure(is_building_set(&il, &atoms).map_err(err)?.is_building(), "atoms not a building set")?;
    match is_geometric_building_set(&il, Some(il.codims()), &atoms).map_err(err)? {
        GeometricCheck::CodimMismatch {
            witness,
            codim,
            factor_sum,
        } => {
            ensure(il.label(witness) == "A2+A3", format!("witness {}", il.label(witness)))?;
            ensure((codim, factor_sum) == (3, 4), format!("codim {codim} vs factor sum {factor_sum}"))?;
            Ok(format!("witness {} with codim {codim} vs factor sum {factor_sum}", il.label(witness)))
        }
        other => Err(format!("unexpected verdict {other:?}")),
    }
}

fn euler_and_subdivision() -> Result<String, String> {
    let l = partition_lattice(4).map_err(err)?;
    let sets = enumerate_building_sets(&l).map_err(err)?;
    let chis: BTreeSet<i64> = sets
        .iter()
        .map(|g| nested_set_complex(&l, g).reduced_euler_characteristic())
        .collect();
    ensure(chis.len() == 1, format!("reduced Euler characteristics {chis:?}"))?;
    let gmin = minimal_building_set(&l).map_err(err)?;
    let n_min = nested_set_complex(&l, &gmin);
    for label in ["12|34", "13|24", "14|23"] {
        let x = l.require(label).map_err(err)?;
        let mut g = gmin.carrier().to_vec();
        g.push(x);
        g.sort_unstable();
        let bigger = building::building_set(&l, &g).map_err(err)?;
        let face: Vec<usize> = factors(&l, &gmin, x)
            .map_err(err)?
            .iter()
            .map(|y| n_min.vertex_index(l.label(*y)).expect("factor is a vertex"))
            .collect();
        let sub = n_min.stellar_subdivision(&face, label).map_err(err)?;
        ensure(
            sub.labelled_faces() == nested_set_complex(&l, &bigger).labelled_faces(),
            format!("subdivision at {label} differs"),
        )?;
    }
    Ok(format!("reduced Euler characteristic {:?} on all 8; 3 subdivisions match", chis))
}

fn pi3_fan() -> Result<String, String> {
    let l = partition_lattice(3).map_err(err)?;
    let fan = nested_fan(&l, &maximal_building_set(&l)).map_err(err)?;
    let rays: Vec<Vec<i64>> = fan.rays.iter().map(|r| r.vector.clone()).collect();
    ensure(
        rays == [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]],
        format!("rays {rays:?}"),
    )?;
    let maximal = fan.maximal_cones();
    ensure(
        maximal.len() == 3 && maximal.iter().all(|c| c.len() == 2),
        "expected three 2-dimensional maximal cones",
    )?;
    let report = verify_fan(&fan);
    ensure(report.passed(), format!("fan check failed: {:?}", report.violation))?;
    Ok(format!("4 rays, 3 maximal cones, {} pairs checked", report.cone_pairs))
}

fn action_arrangements() -> Result<String, String> {
    let s3 = perm_group("(12),(123)", 3).map_err(err)?;
    let a3 = action_arrangement(&s3, 3).map_err(err)?.arrangement;
    let diag = QSubspace::from_span(3, &[v(&[1, 1, 1])]).map_err(err)?;
    ensure(a3.canonical_set() == BTreeSet::from([diag]), "A(S3) is not the diagonal")?;

    let s4 = perm_group("(12),(1234)", 4).map_err(err)?;
    let subs = subgroups(&s4).map_err(err)?;
    ensure(subs.len() == 30, format!("{} subgroups of S4", subs.len()))?;
    let a4 = action_arrangement(&s4, 4).map_err(err)?.arrangement;
    let il = intersection_lattice(&braid_arrangement(4).map_err(err)?).map_err(err)?;
    let trunc = truncate(&il, 2).canonical_set();
    let maximal: BTreeSet<QSubspace> = a4.maximal_members().iter().map(|&i| a4.subspaces()[i].clone()).collect();
    ensure(maximal == trunc, "maximal members of A(S4) differ from the truncation")?;
    let high: BTreeSet<QSubspace> = (0..il.len())
        .filter(|&x| il.codim(x) >= 2)
        .map(|x| il.subspace(x).clone())
        .collect();
    ensure(a4.canonical_set() == high, "A(S4) differs from the codim >= 2 elements")?;
    Ok(format!(
        "A(S3) = diagonal; A(S4): {} members, {} maximal = truncation; 30 subgroups",
        a4.len(),
        maximal.len()
    ))
}

fn stabilizers_of_model_points() -> Result<String, String> {
    let s4 = perm_group("(12),(1234)", 4).map_err(err)?;
    let st = stabilizer(&s4, &v(&[0, 0, 0, 0]), &[v(&[1, -1, 0, 0])]).map_err(err)?;
    let expected = perm_group("(12),(34)", 4).map_err(err)?;
    ensure(st == expected, format!("S4 stabilizer {}", st.describe()))?;
    let s3 = perm_group("(12),(123)", 3).map_err(err)?;
    let st3 = stabilizer(&s3, &v(&[0, 0, 0]), &[v(&[1, -1, 0])]).map_err(err)?;
    ensure(st3 == perm_group("(12)", 3).map_err(err)?, format!("S3 stabilizer {}", st3.describe()))?;
    Ok(format!("{} of order {}, {} of order {}", st.describe(), st.order(), st3.describe(), st3.order()))
}

fn abelianization() -> Result<String, String> {
    let mut out = Vec::new();
    for (name, gens, n) in [("S3", "(12),(123)", 3), ("S4", "(12),(1234)", 4)] {
        let g = perm_group(gens, n).map_err(err)?;
        let report = abelianization_audit(&g, n, AUDIT_SAMPLES, AUDIT_SEED).map_err(err)?;
        if let Some((s, p)) = report.violations().first() {
            return Err(format!("{name}: stratum {:?} has stabilizer {}", s.chain, p.stabilizer));
        }
        if let Some(s) = report.strata.iter().find(|s| s.chain.len() <= 2 && s.sampling_exhausted) {
            return Err(format!("{name}: sampling exhausted on stratum {:?}", s.chain));
        }
        out.push(format!("{name}: {} strata, {} points", report.strata.len(), report.points()));
    }
    Ok(out.join(", "))
}

fn main() -> ExitCode {
    let checks: [(&str, Check, Duration); 12] = [
        ("D(Pi3,Gmax) Hilbert (1,1), basis {1, x123}", hilbert_pi3_max, HILBERT_PI3_BUDGET),
        ("D(Pi4,Gmin) Hilbert (1,5,1), two counts agree", hilbert_pi4_min, HILBERT_PI4_BUDGET),
        ("resolve ~ face poset of N(L,G) on Pi3, Pi4, B3, B4", resolve_matches_face_poset, RESOLVE_BUDGET),
        ("Pi4 has exactly 8 building sets", pi4_building_sets, ENUMERATION_BUDGET),
        ("Groebner family passes Buchberger", buchberger, BUCHBERGER_BUDGET),
        ("braid lattices ~ partition lattices, codims, |mu|", braid_lattices, BRAID_BUDGET),
        ("combinatorial but not geometric building set", geometric_discrimination, DEFAULT_BUDGET),
        ("Euler characteristic invariance and stellar subdivision", euler_and_subdivision, DEFAULT_BUDGET),
        ("fan of (Pi3,Gmax)", pi3_fan, DEFAULT_BUDGET),
        ("A(S3) and A(S4) from invariant lines", action_arrangements, ACTION_BUDGET),
        ("stabilizers of model points", stabilizers_of_model_points, DEFAULT_BUDGET),
        ("abelianization audit for S3 and S4", abelianization, AUDIT_BUDGET),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in checks.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{elapsed:.2?}] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}] {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
