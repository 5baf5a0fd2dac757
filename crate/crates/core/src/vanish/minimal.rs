//! Minimality of a vanishing sum.
//!
//! Proper vanishing sub-sums of `S` are exactly the 0,1-vectors other than
//! `0` and `1` in the rational kernel of the matrix whose columns are the
//! residues `x^e mod Φ_n`, `e ∈ S`. We row-reduce that matrix exactly and
//! search only over the free columns. A sub-sum and its complement vanish
//! together, so the first free column is pinned to 0. When the kernel is
//! spanned by the all-ones vector there is nothing to search.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExponentSet, ResidueTable};
use crate::arith::factorize;
use crate::error::{Error, Result};

/// Largest number of free 0/1 variables the branch-and-prune search accepts.
pub const MAX_SEARCH_DIMENSION: usize = 24;

/// Whether `s` is a vanishing sum with no vanishing proper nonempty sub-sum.
/// A non-vanishing `s` yields `false`.
pub fn is_minimal_vanishing(s: &ExponentSet) -> Result<bool> {
    let table = ResidueTable::new(s.modulus())?;
    is_minimal_vanishing_with(s, &table)
}

pub(crate) fn is_minimal_vanishing_with(s: &ExponentSet, table: &ResidueTable) -> Result<bool> {
    debug_assert_eq!(table.modulus(), s.modulus());
    if s.is_empty() || !table.vanishes(s.exponents()) {
        return Ok(false);
    }
    if contains_proper_polygon(s)? {
        return Ok(false);
    }
    let system = FreeSystem::reduce(s, table)?;
    if system.free_count() <= 1 {
        return Ok(true);
    }
    if system.free_count() - 1 > MAX_SEARCH_DIMENSION {
        return Err(Error::SubsetBoundExceeded { dimension: system.free_count() - 1, bound: MAX_SEARCH_DIMENSION });
    }
    Ok(!system.has_nontrivial_solution())
}

/// A rotated regular `p`-gon `{e, e + n/p, ...}` strictly inside `s` is a
/// vanishing proper sub-sum.
fn contains_proper_polygon(s: &ExponentSet) -> Result<bool> {
    let n = s.modulus();
    for p in factorize(n as u64)?.primes() {
        let p = p as usize;
        if s.len() <= p {
            continue;
        }
        let step = n / p;
        for &e in s.exponents() {
            if e >= step {
                break;
            }
            if (1..p).all(|k| s.contains(e + k * step)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Pivot rows of the reduced system: `c_i x_{pivot_i} = -Σ_f a_{i,f} x_f`,
/// `c_i > 0`, with the sum over free columns.
struct FreeSystem {
    free: usize,
    /// `(c_i, a_{i,·})` with `a` indexed by position among free columns.
    rows: Vec<(i64, Vec<i64>)>,
}

impl FreeSystem {
    fn reduce(s: &ExponentSet, table: &ResidueTable) -> Result<Self> {
        let cols = s.len();
        let dim = table.dim();
        let mut m: Vec<Vec<BigRational>> = (0..dim)
            .map(|i| s.exponents().iter().map(|&e| BigRational::from_integer(BigInt::from(table.row(e)[i]))).collect())
            .collect();

        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == dim {
                break;
            }
            let Some(pr) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].recip();
            for v in m[row].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = m[row].clone();
            for (r, other) in m.iter_mut().enumerate() {
                if r != row && !other[col].is_zero() {
                    let factor = other[col].clone();
                    for (v, pv) in other.iter_mut().zip(&pivot_row) {
                        *v -= &factor * pv;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }

        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(pivots.len());
        for (r, _) in pivots.iter().enumerate() {
            let coeffs: Vec<&BigRational> = free_cols.iter().map(|&f| &m[r][f]).collect();
            if coeffs.iter().all(|c| c.is_zero()) {
                continue;
            }
            let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| num_integer_lcm(&acc, c.denom()));
            let to_i64 = |v: BigInt| v.to_i64().ok_or(Error::Overflow);
            let a = coeffs.iter().map(|c| to_i64(c.numer() * (&lcm / c.denom()))).collect::<Result<Vec<_>>>()?;
            rows.push((to_i64(lcm)?, a));
        }
        Ok(Self { free: free_cols.len(), rows })
    }

    fn free_count(&self) -> usize {
        self.free
    }

    /// Searches free assignments with the first free variable fixed to 0,
    /// excluding the all-zero assignment.
    fn has_nontrivial_solution(&self) -> bool {
        let vars = self.free - 1;
        // suffix bounds of -a_{i,f} x_f over free positions 1.. with x_f ∈ {0,1}
        let bounds: Vec<Vec<(i64, i64)>> = self
            .rows
            .iter()
            .map(|(_, a)| {
                let mut b = vec![(0i64, 0i64); vars + 1];
                for j in (0..vars).rev() {
                    let v = -a[j + 1];
                    b[j] = (b[j + 1].0 + v.min(0), b[j + 1].1 + v.max(0));
                }
                b
            })
            .collect();
        let mut partial = vec![0i64; self.rows.len()];
        self.search(0, vars, false, &mut partial, &bounds)
    }

    fn search(&self, j: usize, vars: usize, any_one: bool, partial: &mut [i64], bounds: &[Vec<(i64, i64)>]) -> bool {
        for (i, (c, _)) in self.rows.iter().enumerate() {
            let (lo, hi) = bounds[i][j];
            let (lo, hi) = (partial[i] + lo, partial[i] + hi);
            let hits_zero = lo <= 0 && 0 <= hi;
            let hits_c = lo <= *c && *c <= hi;
            if !hits_zero && !hits_c {
                return false;
            }
            if j == vars && !(partial[i] == 0 || partial[i] == *c) {
                return false;
            }
        }
        if j == vars {
            return any_one;
        }
        if self.search(j + 1, vars, any_one, partial, bounds) {
            return true;
        }
        for (p, (_, a)) in partial.iter_mut().zip(&self.rows) {
            *p -= a[j + 1];
        }
        let found = self.search(j + 1, vars, true, partial, bounds);
        for (p, (_, a)) in partial.iter_mut().zip(&self.rows) {
            *p += a[j + 1];
        }
        found
    }
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let g = gcd_big(a.abs(), b.abs());
    (a * b).abs() / g
}

fn gcd_big(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}
