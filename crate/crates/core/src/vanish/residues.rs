use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};

/// Coefficient vectors of `x^k mod Φ_n` for `k = 0..n`.
///
/// A set of exponents vanishes at `ζ_n` exactly when the sum of its rows is
/// zero, since reduction mod `Φ_n` is linear.
#[derive(Clone, Debug)]
pub struct ResidueTable {
    modulus: usize,
    dim: usize,
    rows: Vec<i64>,
}

impl ResidueTable {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput("residue table needs n >= 2".into()));
        }
        let phi = cyclotomic(n)?;
        let dim = phi.degree().expect("cyclotomic polynomials are nonzero");
        let lower = &phi.coeffs()[..dim];
        let mut rows = vec![0i64; n * dim];
        let mut cur = vec![0i64; dim];
        cur[0] = 1;
        for k in 0..n {
            rows[k * dim..(k + 1) * dim].copy_from_slice(&cur);
            // multiply by x and reduce with x^dim = -(lower terms)
            let top = cur[dim - 1];
            for i in (1..dim).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (c, &l) in cur.iter_mut().zip(lower) {
                    *c = l.checked_mul(top).and_then(|t| c.checked_sub(t)).ok_or(Error::Overflow)?;
                }
            }
        }
        // every subset sum must stay representable
        let bound = rows.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
        if bound.checked_mul(n as u64).is_none_or(|b| b > i64::MAX as u64) {
            return Err(Error::Overflow);
        }
        Ok(Self { modulus: n, dim, rows })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// `φ(n)`, the length of each row.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, k: usize) -> &[i64] {
        let k = k % self.modulus;
        &self.rows[k * self.dim..(k + 1) * self.dim]
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a usize>>(&self, exponents: I) -> Vec<i64> {
        let mut acc = vec![0i64; self.dim];
        for &e in exponents {
            for (a, r) in acc.iter_mut().zip(self.row(e)) {
                *a += r;
            }
        }
        acc
    }

    pub fn vanishes<'a, I: IntoIterator<Item = &'a usize>>(&self, exponents: I) -> bool {
        self.sum(exponents).iter().all(|&c| c == 0)
    }
}
