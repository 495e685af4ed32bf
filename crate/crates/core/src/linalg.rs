//! Exact integer and rational linear algebra.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination. Every
//! routine first runs on `i128` with checked arithmetic and reruns on
//! `BigInt` if any intermediate value overflows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

trait Exact: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv {}
impl<T: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv> Exact for T {}

/// Runs Bareiss elimination in place. Returns the rank and the number of row
/// swaps, or `None` on overflow.
fn bareiss<T: Exact>(m: &mut [Vec<T>]) -> Option<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            swaps += 1;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let a = pivot.checked_mul(&row[j])?;
                let b = factor.checked_mul(&pivot_row[j])?;
                row[j] = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some((rank, swaps))
}

fn to_i128(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect()
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Exact rank over the rationals of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut fast = to_i128(rows);
    if let Some((r, _)) = bareiss(&mut fast) {
        return r;
    }
    let mut big = to_big(rows);
    bareiss(&mut big)
        .expect("BigInt elimination cannot overflow")
        .0
}

/// Exact determinant of a square integer matrix.
pub fn determinant(square: &[Vec<i64>]) -> BigInt {
    let n = square.len();
    assert!(square.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut fast = to_i128(square);
    if let Some((r, swaps)) = bareiss(&mut fast) {
        if r < n {
            return BigInt::zero();
        }
        let det = BigInt::from(fast[n - 1][n - 1]);
        return if swaps % 2 == 1 { -det } else { det };
    }
    let mut big = to_big(square);
    let (r, swaps) = bareiss(&mut big).expect("BigInt elimination cannot overflow");
    if r < n {
        return BigInt::zero();
    }
    let det = big[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Outcome of [`minimize`].
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Vec<BigRational>),
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's-rule simplex over the columns `0..allowed`. Returns false if
    /// the objective is unbounded below.
    fn run(&mut self, cost: &[BigRational], allowed: usize) -> bool {
        let rhs = self.rows.first().map_or(0, |r| r.len() - 1);
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    reduced -= &cost[self.basis[i]] * &row[j];
                }
                reduced.is_negative()
            });
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, c);
        }
    }
}

/// Minimizes `cost · x` subject to `a x = b`, `x >= 0`, exactly, with a
/// two-phase simplex method and Bland's anti-cycling rule.
pub fn minimize(a: &[Vec<BigRational>], b: &[BigRational], cost: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = cost.len();
    let mut rows = Vec::with_capacity(m);
    for (row, rhs) in a.iter().zip(b) {
        assert_eq!(row.len(), n, "constraint width must match cost length");
        let flip = rhs.is_negative();
        let mut t: Vec<BigRational> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        for i in 0..m {
            t.push(if i == rows.len() {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        t.push(if flip { -rhs.clone() } else { rhs.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
    };

    // Phase 1: drive the artificial variables to zero.
    let mut phase1 = vec![BigRational::zero(); n + m];
    for c in phase1.iter_mut().skip(n) {
        *c = BigRational::one();
    }
    tab.run(&phase1, n + m);
    let infeasibility: BigRational = tab
        .rows
        .iter()
        .zip(&tab.basis)
        .filter(|(_, &bv)| bv >= n)
        .map(|(r, _)| r[n + m].clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // Pivot remaining zero-level artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2 = cost.to_vec();
    phase2.extend(std::iter::repeat_n(BigRational::zero(), m));
    if !tab.run(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
        if bv < n {
            x[bv] = row[n + m].clone();
        }
    }
    LpOutcome::Optimal(x)
}
