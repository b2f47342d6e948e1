//! Cone membership by Fourier–Motzkin elimination of multipliers.
//!
//! Decides whether `x = Σ λ_i g_i` has a solution with every `λ_i ≥ 0`.
//! This deliberately shares no code with the double description engine in
//! [`crate::cone`] so the two can be cross-checked: the equalities are solved
//! here by a private Gauss–Jordan pass, the pivot multipliers are substituted
//! into the sign constraints, and the remaining free multipliers are
//! eliminated one at a time.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::linalg::RationalVector;

/// `coeffs · y ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<BigRational>,
    bound: BigRational,
}

impl Inequality {
    /// Scales so the first nonzero coefficient has absolute value 1, which
    /// makes duplicates syntactically equal.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c = &*c / &lead;
            }
            self.bound = &self.bound / &lead;
        }
        self
    }
}

/// True iff `x` is a nonnegative combination of `generators`.
pub fn fm_contains(generators: &[RationalVector], x: &RationalVector) -> Result<bool> {
    let dim = x.dim();
    for g in generators {
        g.check_dim(dim)?;
    }
    let k = generators.len();

    // Augmented system [A | x] with A's columns the generators.
    let mut rows: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| {
            let mut row: Vec<BigRational> = generators.iter().map(|g| g.coords()[r].clone()).collect();
            row.push(x.coords()[r].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..k {
        let Some(p) = (next_row..dim).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row][col].recip();
        for c in rows[next_row].iter_mut() {
            *c = &*c * &inv;
        }
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    // A zero row with nonzero right-hand side: no solution at all.
    if rows[next_row..].iter().any(|row| !row[k].is_zero()) {
        return Ok(false);
    }

    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..k).filter(|c| !pivot_cols.contains(c)).collect();

    let mut system: BTreeSet<Inequality> = BTreeSet::new();
    // λ_f ≥ 0  ⇔  -y_f ≤ 0
    for (j, _) in free.iter().enumerate() {
        let mut coeffs = vec![BigRational::zero(); free.len()];
        coeffs[j] = -BigRational::from_integer(1.into());
        system.insert(Inequality { coeffs, bound: BigRational::zero() }.normalized());
    }
    // λ_p = rhs - Σ a_pf y_f ≥ 0  ⇔  Σ a_pf y_f ≤ rhs
    for &(r, _) in &pivots {
        let coeffs: Vec<BigRational> = free.iter().map(|&f| rows[r][f].clone()).collect();
        system.insert(Inequality { coeffs, bound: rows[r][k].clone() }.normalized());
    }

    for var in 0..free.len() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for ineq in system {
            if ineq.coeffs[var].is_positive() {
                pos.push(ineq);
            } else if ineq.coeffs[var].is_negative() {
                neg.push(ineq);
            } else {
                rest.insert(ineq);
            }
        }
        for p in &pos {
            for n in &neg {
                // p/a + n/b with a = p[var] > 0 and b = -n[var] > 0.
                let a = &p.coeffs[var];
                let b = -&n.coeffs[var];
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(pc, nc)| pc / a + nc / &b)
                    .collect();
                let bound = &p.bound / a + &n.bound / &b;
                rest.insert(Inequality { coeffs, bound }.normalized());
            }
        }
        system = rest;
    }
    Ok(system.iter().all(|ineq| !ineq.bound.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_integers(xs.iter().copied())
    }

    #[test]
    fn wedge() {
        let gens = [v(&[1, 0]), v(&[1, 1])];
        assert!(fm_contains(&gens, &v(&[2, 1])).unwrap());
        assert!(fm_contains(&gens, &v(&[0, 0])).unwrap());
        assert!(!fm_contains(&gens, &v(&[0, -1])).unwrap());
        assert!(!fm_contains(&gens, &v(&[1, 2])).unwrap());
    }

    #[test]
    fn redundant_generators_and_whole_plane() {
        let gens = [v(&[1, 1]), v(&[1, -1]), v(&[-1, 0])];
        for p in [[3, -7], [-5, 2], [0, 1], [0, -1]] {
            assert!(fm_contains(&gens, &v(&p)).unwrap());
        }
    }

    #[test]
    fn empty_generator_set_contains_only_zero() {
        assert!(fm_contains(&[], &v(&[0, 0, 0])).unwrap());
        assert!(!fm_contains(&[], &v(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn lower_dimensional() {
        let gens = [v(&[1, 0, 1]), v(&[0, 1, 1])];
        assert!(fm_contains(&gens, &v(&[1, 1, 2])).unwrap());
        assert!(!fm_contains(&gens, &v(&[1, 1, 1])).unwrap());
        assert!(!fm_contains(&gens, &v(&[-1, 2, 1])).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(fm_contains(&[v(&[1, 0])], &v(&[1])).is_err());
    }
}
