//! Dense exact-rational simplex for strict homogeneous feasibility.
//!
//! The question "does `A f > 0` have a solution" is scaled to `A f ≥ 1` and
//! answered through the Farkas alternative, solved as the LP
//!
//! ```text
//!   max Σ y   s.t.   Aᵀy ≤ 0,  −Aᵀy ≤ 0,  Σy ≤ 1,  y ≥ 0.
//! ```
//!
//! The slack columns give a feasible starting basis, so a single-phase
//! simplex with Bland's least-index rule suffices and terminates. The
//! optimum is 0 or 1: at 1 the primal `y` is a Farkas certificate
//! (`yᵀA = 0`, `Σy = 1`); at 0 the row duals produce a witness `f` with
//! `A f ≥ 1` via the reduced costs of the `y` columns.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

#[derive(Debug)]
pub(crate) enum FarkasOutcome {
    /// `f` with `row · f ≥ 1` for every row.
    Witness(Vec<Rational>),
    /// `y ≥ 0` with `Σ y_i row_i = 0` and `Σ y_i = 1`.
    Certificate(Vec<Rational>),
}

pub(crate) fn strict_feasibility(
    rows: &[Vec<Rational>],
    max_pivots: usize,
) -> Result<FarkasOutcome> {
    let m = rows.len();
    assert!(m > 0);
    let d = rows[0].len();
    let nrows = 2 * d + 1;
    let ncols = m + nrows;

    // Column j < m is the variable y_j; columns m.. are slacks.
    let column = |j: usize, row: usize| -> Rational {
        if j < m {
            if row < d {
                rows[j][row].clone()
            } else if row < 2 * d {
                -rows[j][row - d].clone()
            } else {
                Rational::one()
            }
        } else if j - m == row {
            Rational::one()
        } else {
            Rational::zero()
        }
    };

    let mut t: Vec<Vec<Rational>> = (0..nrows)
        .map(|row| (0..ncols).map(|j| column(j, row)).collect())
        .collect();
    let mut rhs = vec![Rational::zero(); nrows];
    rhs[2 * d] = Rational::one();
    let mut basis: Vec<usize> = (m..ncols).collect();
    let objective = |j: usize| -> Rational {
        if j < m {
            Rational::one()
        } else {
            Rational::zero()
        }
    };

    let mut pivots = 0usize;
    loop {
        let cb: Vec<Rational> = basis.iter().map(|&b| objective(b)).collect();
        // Bland: the lowest-index column with positive reduced cost enters.
        let entering = (0..ncols).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut red = objective(j);
            for (r, c) in cb.iter().enumerate() {
                if !c.is_zero() {
                    red -= c * &t[r][j];
                }
            }
            red.is_positive()
        });
        let Some(enter) = entering else {
            break;
        };
        // Ratio test; ties broken by the lowest basic variable index.
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..nrows {
            if t[r][enter].is_positive() {
                let ratio = &rhs[r] / &t[r][enter];
                match &leave {
                    Some((lr, lratio)) => {
                        if ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr]) {
                            leave = Some((r, ratio));
                        }
                    }
                    None => leave = Some((r, ratio)),
                }
            }
        }
        let (r, _) = leave.expect("the Farkas LP is bounded by construction");
        pivots += 1;
        if pivots > max_pivots {
            return Err(Error::BudgetExceeded(format!(
                "simplex pivot limit {max_pivots} reached"
            )));
        }
        pivot(&mut t, &mut rhs, &mut basis, r, enter);
    }

    let obj: Rational = basis.iter().zip(&rhs).map(|(&b, v)| objective(b) * v).sum();

    if obj.is_zero() {
        // Optimal duals: solve Bᵀ π = c_B over the original basis columns.
        let bt: Vec<Vec<Rational>> = basis
            .iter()
            .map(|&b| (0..nrows).map(|row| column(b, row)).collect())
            .collect();
        let cb: Vec<Rational> = basis.iter().map(|&b| objective(b)).collect();
        let pi = linalg::solve_linear(&bt, &cb).expect("basis matrix is invertible");
        // witness f_j = π_j − π_{d+j}; strong duality forces π_{2d} = 0.
        debug_assert!(pi[2 * d].is_zero());
        let f: Vec<Rational> = (0..d).map(|j| &pi[j] - &pi[d + j]).collect();
        debug_assert!(rows.iter().all(|row| {
            row.iter().zip(&f).map(|(a, b)| a * b).sum::<Rational>() >= Rational::one()
        }));
        Ok(FarkasOutcome::Witness(f))
    } else {
        assert!(obj.is_one(), "Farkas optimum is 0 or 1 by homogeneity");
        let mut y = vec![Rational::zero(); m];
        for (r, &b) in basis.iter().enumerate() {
            if b < m {
                y[b] = rhs[r].clone();
            }
        }
        debug_assert!(y.iter().all(|v| !v.is_negative()));
        Ok(FarkasOutcome::Certificate(y))
    }
}

fn pivot(t: &mut [Vec<Rational>], rhs: &mut [Rational], basis: &mut [usize], r: usize, c: usize) {
    let inv = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x = &*x / &inv;
    }
    rhs[r] = &rhs[r] / &inv;
    for i in 0..t.len() {
        if i == r || t[i][c].is_zero() {
            continue;
        }
        let factor = t[i][c].clone();
        for j in 0..t[i].len() {
            let delta = &t[r][j] * &factor;
            t[i][j] = &t[i][j] - delta;
        }
        let delta = &rhs[r] * &factor;
        rhs[i] = &rhs[i] - delta;
    }
    basis[r] = c;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    fn is_witness(rows: &[Vec<Rational>], f: &[Rational]) -> bool {
        rows.iter()
            .all(|row| row.iter().zip(f).map(|(a, b)| a * b).sum::<Rational>() >= rat_int(1))
    }

    #[test]
    fn feasible_orthant() {
        // x > 0, y > 0
        let rows = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]];
        match strict_feasibility(&rows, 1000).unwrap() {
            FarkasOutcome::Witness(f) => assert!(is_witness(&rows, &f)),
            FarkasOutcome::Certificate(_) => panic!("orthant is feasible"),
        }
    }

    #[test]
    fn infeasible_opposite_pair() {
        // x > 0 and −x > 0
        let rows = vec![vec![rat_int(1)], vec![rat_int(-1)]];
        match strict_feasibility(&rows, 1000).unwrap() {
            FarkasOutcome::Witness(_) => panic!("infeasible"),
            FarkasOutcome::Certificate(y) => {
                assert!(y.iter().all(|v| !v.is_negative()));
                assert_eq!(y.iter().sum::<Rational>(), rat_int(1));
                let combo: Rational = y[0].clone() - y[1].clone();
                assert!(combo.is_zero());
            }
        }
    }

    #[test]
    fn infeasible_cycle() {
        // x−y > 0, y−z > 0, z−x > 0 sums to a contradiction
        let rows = vec![
            vec![rat_int(1), rat_int(-1), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(-1)],
            vec![rat_int(-1), rat_int(0), rat_int(1)],
        ];
        match strict_feasibility(&rows, 1000).unwrap() {
            FarkasOutcome::Witness(_) => panic!("infeasible"),
            FarkasOutcome::Certificate(y) => {
                for col in 0..rows[0].len() {
                    let combo: Rational = y.iter().zip(&rows).map(|(m, row)| m * &row[col]).sum();
                    assert!(combo.is_zero());
                }
            }
        }
    }

    #[test]
    fn feasible_with_fractions() {
        let rows = vec![
            vec![rat(1, 3), rat(1, 2)],
            vec![rat(2, 5), rat(-1, 7)],
            vec![rat(-1, 4), rat(1, 1)],
        ];
        match strict_feasibility(&rows, 1000).unwrap() {
            FarkasOutcome::Witness(f) => assert!(is_witness(&rows, &f)),
            FarkasOutcome::Certificate(_) => panic!("feasible: try f = (3, 2)"),
        }
    }

    #[test]
    fn pivot_budget() {
        let rows = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]];
        assert!(strict_feasibility(&rows, 0).unwrap_err().is_budget());
    }
}
