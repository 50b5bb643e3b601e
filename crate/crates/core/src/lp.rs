//! Exact phase-one simplex, used to decide generator-form membership
//! `x = Σ λ_j g_j, λ ≥ 0` independently of the halfspace description.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::rational::{RatVec, Rational};

/// Returns nonnegative multipliers `λ` with `Σ λ_j columns[j] = target`, or
/// `None` when no such combination exists. Bland's rule guarantees
/// termination.
pub fn nonnegative_combination(columns: &[RatVec], target: &[Rational]) -> Option<RatVec> {
    let m = target.len();
    let n = columns.len();
    let width = n + m + 1;
    let rhs = width - 1;

    let mut tab: Vec<RatVec> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            for (j, col) in columns.iter().enumerate() {
                row[j] = col[i].clone();
            }
            row[n + i] = Rational::from_integer(1.into());
            row[rhs] = target[i].clone();
            if row[rhs].is_negative() {
                for (j, x) in row.iter_mut().enumerate() {
                    if j != n + i {
                        *x = -x.clone();
                    }
                }
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the auxiliary objective (sum of artificials)
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // auxiliary problem is bounded below by zero, so a pivot row exists
        let (pr, _) = leave?;
        let piv = tab[pr][enter].clone();
        for x in tab[pr].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = tab[pr].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[pr] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut lambda = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            lambda[b] = tab[i][rhs].clone();
        }
    }
    Some(lambda)
}
