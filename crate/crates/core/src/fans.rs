//! The simplicial fan of a building set: one 0/1 ray per element of `G`,
//! one cone per nested set.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num::One;

use crate::building::{nested_sets, BuildingSet};
use crate::error::{Error, Result};
use crate::linalg::{feasible, q, rank, Inequality, Q};
use crate::poset::MeetSemilattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub label: String,
    pub vector: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedFan {
    pub ambient_dim: usize,
    pub rays: Vec<Ray>,
    /// Sorted ray indices, one entry per cone, including the zero cone.
    pub cones: Vec<Vec<usize>>,
}

impl NestedFan {
    /// Cones not contained in another cone.
    pub fn maximal_cones(&self) -> Vec<&[usize]> {
        let sets: Vec<BTreeSet<usize>> = self.cones.iter().map(|c| c.iter().copied().collect()).collect();
        self.cones
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                !sets
                    .iter()
                    .enumerate()
                    .any(|(j, s)| j != i && s.len() > sets[i].len() && sets[i].is_subset(s))
            })
            .map(|(_, c)| c.as_slice())
            .collect()
    }

    pub fn cone_labels(&self, cone: &[usize]) -> Vec<&str> {
        let mut v: Vec<&str> = cone.iter().map(|&r| self.rays[r].label.as_str()).collect();
        v.sort_unstable();
        v
    }

    fn check_simplicial(&self) -> Result<()> {
        for c in &self.cones {
            let rows: Vec<Vec<Q>> = c
                .iter()
                .map(|&r| self.rays[r].vector.iter().map(|&x| q(x)).collect())
                .collect();
            if rank(&rows, self.ambient_dim) != c.len() {
                return Err(Error::NotSimplicial {
                    cone: self.cone_labels(c).join(","),
                });
            }
        }
        Ok(())
    }

    /// Plain-text export: `AMBIENT n`, one `RAY` line per ray and one `CONE`
    /// line per maximal cone (labels sorted, lines sorted).
    pub fn export(&self) -> String {
        let mut out = String::new();
        writeln!(out, "AMBIENT {}", self.ambient_dim).unwrap();
        for r in &self.rays {
            write!(out, "RAY {}", r.label).unwrap();
            for c in &r.vector {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
        let mut cones: Vec<Vec<&str>> = self
            .maximal_cones()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| self.cone_labels(c))
            .collect();
        cones.sort();
        for c in cones {
            writeln!(out, "CONE {}", c.join(" ")).unwrap();
        }
        out
    }

    /// Reads the export format back; cones are closed under taking faces.
    pub fn parse(text: &str) -> Result<NestedFan> {
        let mut lines = text.lines();
        let bad = |m: String| Error::Parse(m);
        let first = lines.next().ok_or_else(|| bad("empty fan file".into()))?;
        let ambient_dim: usize = first
            .strip_prefix("AMBIENT ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad(format!("expected AMBIENT line, got {first:?}")))?;
        let mut rays = Vec::new();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for line in lines {
            let mut words = line.split_whitespace();
            match words.next() {
                Some("RAY") => {
                    let label = words.next().ok_or_else(|| bad(format!("RAY without label: {line:?}")))?;
                    let vector: Vec<i64> = words
                        .map(|w| w.parse().map_err(|_| bad(format!("bad coordinate in {line:?}"))))
                        .collect::<Result<_>>()?;
                    if vector.len() != ambient_dim {
                        return Err(Error::DimensionMismatch {
                            expected: ambient_dim,
                            found: vector.len(),
                        });
                    }
                    rays.push(Ray {
                        label: label.to_string(),
                        vector,
                    });
                }
                Some("CONE") => {
                    let mut cone = Vec::new();
                    for w in words {
                        let r = rays
                            .iter()
                            .position(|r: &Ray| r.label == w)
                            .ok_or_else(|| Error::UnknownLabel(w.to_string()))?;
                        cone.push(r);
                    }
                    cone.sort_unstable();
                    facets.push(cone);
                }
                None => {}
                Some(other) => return Err(bad(format!("unknown record {other:?}"))),
            }
        }
        let mut cones: BTreeSet<Vec<usize>> = BTreeSet::new();
        cones.insert(Vec::new());
        for f in &facets {
            for mask in 1u64..(1 << f.len()) {
                cones.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &r)| r)
                        .collect(),
                );
            }
        }
        let mut cones: Vec<Vec<usize>> = cones.into_iter().collect();
        cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(NestedFan {
            ambient_dim,
            rays,
            cones,
        })
    }
}

/// `Sigma(L, G)` in `R^n`, `n` the number of atoms: the ray of `G` has a 1
/// in coordinate `i` iff `G` lies above the `i`-th atom. Ray `i` belongs to
/// `g.carrier()[i]`.
pub fn nested_fan(l: &MeetSemilattice, g: &BuildingSet) -> Result<NestedFan> {
    l.check_atomic()?;
    let atoms = l.atoms();
    let rays = g
        .carrier()
        .iter()
        .map(|&x| Ray {
            label: l.label(x).to_string(),
            vector: atoms.iter().map(|&a| i64::from(l.le(a, x))).collect(),
        })
        .collect();
    let pos = |x: usize| g.carrier().iter().position(|&y| y == x).expect("nested sets live in G");
    let mut cones: Vec<Vec<usize>> = nested_sets(l, g)
        .into_iter()
        .map(|s| {
            let mut c: Vec<usize> = s.into_iter().map(pos).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let fan = NestedFan {
        ambient_dim: atoms.len(),
        rays,
        cones,
    };
    fan.check_simplicial()?;
    Ok(fan)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    pub cone_pairs: usize,
    /// Two cones meeting outside their common face.
    pub violation: Option<(Vec<String>, Vec<String>)>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Is there a point of `cone(s)` and `cone(t)` outside `cone(s & t)`?
/// Solves `sum a_i v_i = sum b_j w_j` with `a, b >= 0` and the coefficients
/// off the shared rays summing to at least 1.
fn cones_overlap_badly(fan: &NestedFan, s: &[usize], t: &[usize]) -> bool {
    let n = fan.ambient_dim;
    let nvars = s.len() + t.len();
    let mut eqs = vec![vec![q(0); nvars]; n];
    for (k, &r) in s.iter().enumerate() {
        for (i, row) in eqs.iter_mut().enumerate() {
            row[k] = q(fan.rays[r].vector[i]);
        }
    }
    for (k, &r) in t.iter().enumerate() {
        for (i, row) in eqs.iter_mut().enumerate() {
            row[s.len() + k] = q(-fan.rays[r].vector[i]);
        }
    }
    let mut ineqs: Vec<Inequality> = (0..nvars)
        .map(|k| {
            let mut coeffs = vec![q(0); nvars];
            coeffs[k] = Q::one();
            Inequality { coeffs, rhs: q(0) }
        })
        .collect();
    let mut off_shared = vec![q(0); nvars];
    for (k, r) in s.iter().enumerate() {
        if !t.contains(r) {
            off_shared[k] = Q::one();
        }
    }
    for (k, r) in t.iter().enumerate() {
        if !s.contains(r) {
            off_shared[s.len() + k] = Q::one();
        }
    }
    ineqs.push(Inequality {
        coeffs: off_shared,
        rhs: q(1),
    });
    feasible(&eqs, &ineqs, nvars)
}

/// Checks `cone(S) & cone(T) = cone(S & T)` for every pair of maximal
/// cones. For simplicial cones this covers all pairs of cones.
pub fn verify_fan(fan: &NestedFan) -> FanReport {
    let maximal = fan.maximal_cones();
    let mut pairs = 0;
    for (i, s) in maximal.iter().enumerate() {
        for t in &maximal[i + 1..] {
            pairs += 1;
            if cones_overlap_badly(fan, s, t) {
                let show = |c: &[usize]| fan.cone_labels(c).into_iter().map(String::from).collect();
                return FanReport {
                    cone_pairs: pairs,
                    violation: Some((show(s), show(t))),
                };
            }
        }
    }
    FanReport {
        cone_pairs: pairs,
        violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{building_set, maximal_building_set, minimal_building_set, nested_set_complex};
    use crate::poset::{boolean_lattice, partition_lattice};

    #[test]
    fn pi3_fan() {
        let l = partition_lattice(3).unwrap();
        let g = maximal_building_set(&l);
        let fan = nested_fan(&l, &g).unwrap();
        let rays: Vec<(&str, &[i64])> = fan.rays.iter().map(|r| (r.label.as_str(), r.vector.as_slice())).collect();
        assert_eq!(
            rays,
            vec![
                ("12", &[1, 0, 0][..]),
                ("13", &[0, 1, 0][..]),
                ("23", &[0, 0, 1][..]),
                ("123", &[1, 1, 1][..])
            ]
        );
        assert_eq!(fan.cones.len(), 8);
        assert_eq!(fan.maximal_cones().len(), 3);
        let report = verify_fan(&fan);
        assert!(report.passed());
        assert_eq!(report.cone_pairs, 3);
        let text = fan.export();
        assert_eq!(
            text,
            "AMBIENT 3\nRAY 12 1 0 0\nRAY 13 0 1 0\nRAY 23 0 0 1\nRAY 123 1 1 1\n\
             CONE 12 123\nCONE 123 13\nCONE 123 23\n"
        );
        let back = NestedFan::parse(&text).unwrap();
        assert_eq!(back, fan);
    }

    #[test]
    fn injected_cone_is_caught() {
        let l = partition_lattice(3).unwrap();
        let g = maximal_building_set(&l);
        let mut fan = nested_fan(&l, &g).unwrap();
        fan.rays.push(Ray {
            label: "extra".into(),
            vector: vec![2, 1, 1],
        });
        fan.cones.push(vec![4]);
        let report = verify_fan(&fan);
        let (a, b) = report.violation.expect("overlap detected");
        assert!(a.contains(&"extra".to_string()) || b.contains(&"extra".to_string()));
    }

    #[test]
    fn boolean_orthant() {
        let l = boolean_lattice(2).unwrap();
        let g = building_set(&l, l.atoms()).unwrap();
        let fan = nested_fan(&l, &g).unwrap();
        assert_eq!(fan.cones.len(), 4);
        assert!(verify_fan(&fan).passed());
    }

    #[test]
    fn pi4_fan_counts() {
        let l = partition_lattice(4).unwrap();
        let g = minimal_building_set(&l).unwrap();
        let fan = nested_fan(&l, &g).unwrap();
        assert_eq!(fan.ambient_dim, 6);
        assert_eq!(fan.rays.len(), 11);
        assert_eq!(fan.cones.len(), nested_set_complex(&l, &g).num_faces());
        assert!(verify_fan(&fan).passed());
    }

    #[test]
    fn parse_errors() {
        assert!(NestedFan::parse("").is_err());
        assert!(NestedFan::parse("AMBIENT 2\nRAY a 1\n").is_err());
        assert!(NestedFan::parse("AMBIENT 1\nCONE a\n").is_err());
    }
}
