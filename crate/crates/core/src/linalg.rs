//! Exact linear algebra over the rationals.
//!
//! Matrices are plain row vectors of [`Q`]. Everything here is small and
//! dense; no attempt is made at fraction-free elimination.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Basis of `{v : row . v = 0 for every row}`.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = rref(rows.to_vec(), ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
pub fn normalize_direction(v: &[Q]) -> Vec<Q> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|x| x * &inv).collect()
        }
        None => v.to_vec(),
    }
}

/// True if `a` and `b` span the same line (both assumed nonzero).
pub fn parallel(a: &[Q], b: &[Q]) -> bool {
    a.len() == b.len() && normalize_direction(a) == normalize_direction(b)
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(p, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A linear inequality `coeffs . x >= rhs`.
#[derive(Clone, Debug)]
pub struct Inequality {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

/// Decides whether `{x : eqs . x = 0, ineqs}` is nonempty by Gaussian
/// elimination of the equalities followed by Fourier-Motzkin elimination.
pub fn feasible(eqs: &[Vec<Q>], ineqs: &[Inequality], nvars: usize) -> bool {
    let mut ineqs: Vec<Inequality> = ineqs.to_vec();
    let (red, pivots) = rref(eqs.to_vec(), nvars);
    // Substitute x_p = -sum_{j != p} row[j] x_j for every pivot.
    for (row, &p) in red.iter().zip(&pivots) {
        for ineq in ineqs.iter_mut() {
            let c = ineq.coeffs[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..nvars {
                if j != p {
                    ineq.coeffs[j] -= &c * &row[j];
                }
            }
            ineq.coeffs[p] = Q::zero();
        }
    }
    let mut remaining: Vec<usize> = (0..nvars).filter(|v| !pivots.contains(v)).collect();
    while let Some(var) = remaining.pop() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for ineq in ineqs {
            if ineq.coeffs[var].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                neg.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        for p in &pos {
            for n in &neg {
                let a = p.coeffs[var].clone();
                let b = -n.coeffs[var].clone();
                let coeffs: Vec<Q> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| x * &b + y * &a)
                    .collect();
                rest.push(Inequality {
                    coeffs,
                    rhs: &p.rhs * &b + &n.rhs * &a,
                });
            }
        }
        ineqs = rest;
    }
    ineqs.iter().all(|i| !i.rhs.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn kernel_of_braid_equation() {
        let k = kernel(&[row(&[1, -1, 0])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(&row(&[1, -1, 0]), v).is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let m = vec![row(&[2, 4, 6]), row(&[1, 1, 1]), row(&[3, 5, 7])];
        let (once, _) = rref(m, 3);
        let (twice, _) = rref(once.clone(), 3);
        assert_eq!(once, twice);
        assert_eq!(once.len(), 2);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/6"), Some(Q::new((-1).into(), 2.into())));
        assert_eq!(parse_rational("7"), Some(q(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&Q::new(2.into(), 4.into())), "1/2");
        assert_eq!(format_rational(&q(-5)), "-5");
    }

    #[test]
    fn fourier_motzkin() {
        // x >= 1, y >= 0, x + y = 0 is infeasible
        let ineqs = vec![
            Inequality { coeffs: row(&[1, 0]), rhs: q(1) },
            Inequality { coeffs: row(&[0, 1]), rhs: q(0) },
        ];
        assert!(!feasible(&[row(&[1, 1])], &ineqs, 2));
        // x >= 1, y >= 0, x - y = 0 is feasible
        assert!(feasible(&[row(&[1, -1])], &ineqs, 2));
        // x >= 1, -x >= -2
        let box_ = vec![
            Inequality { coeffs: row(&[1]), rhs: q(1) },
            Inequality { coeffs: row(&[-1]), rhs: q(-2) },
        ];
        assert!(feasible(&[], &box_, 1));
        let empty = vec![
            Inequality { coeffs: row(&[1]), rhs: q(3) },
            Inequality { coeffs: row(&[-1]), rhs: q(-2) },
        ];
        assert!(!feasible(&[], &empty, 1));
    }
}
