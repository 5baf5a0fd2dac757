//! The Lam–Leung product formula for `Φ_pq` and its parity split.
//!
//! With `r p + s q = (p-1)(q-1)`, `0 <= r <= q-2`, `0 <= s <= p-2`:
//!
//! ```text
//! Φ_pq(x) = (Σ_{i<=r} x^{ip})(Σ_{j<=s} x^{jq})
//!         - (Σ_{i=r+1}^{q-1} x^{ip})(Σ_{j=s+1}^{p-1} x^{jq}) x^{-pq}
//! ```
//!
//! The positive terms split into `A` (`i`, `j` of equal parity, even
//! exponents) and `B` (odd exponents); the negative terms into `C` (even
//! exponents) and `D` (odd exponents). Then `Φ_pq = (A + B) - (C + D)`,
//! `Φ_2pq = (A + D) - (B + C)` and `Φ_2pq^T = A + D + x^{pq} (B + C)`.

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::vanish::ExponentSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqStructure {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    /// Exponent sets over the modulus `2pq`.
    pub a: ExponentSet,
    pub b: ExponentSet,
    pub c: ExponentSet,
    pub d: ExponentSet,
}

impl PqStructure {
    pub fn modulus(&self) -> usize {
        2 * self.p * self.q
    }

    /// `(A + B) - (C + D)`.
    pub fn phi_pq(&self) -> Result<IntPolynomial> {
        let pos = IntPolynomial::from_exponents(self.a.exponents().iter().chain(self.b.exponents()).copied());
        let neg = IntPolynomial::from_exponents(self.c.exponents().iter().chain(self.d.exponents()).copied());
        pos.checked_sub(&neg)
    }

    /// `(A + D) - (B + C)`.
    pub fn phi_2pq(&self) -> Result<IntPolynomial> {
        let pos = IntPolynomial::from_exponents(self.a.exponents().iter().chain(self.d.exponents()).copied());
        let neg = IntPolynomial::from_exponents(self.b.exponents().iter().chain(self.c.exponents()).copied());
        pos.checked_sub(&neg)
    }
}

fn check_pair(p: usize, q: usize) -> Result<()> {
    for x in [p, q] {
        if x == 2 || !is_prime(x as u64) {
            return Err(Error::InvalidInput(format!("{x} is not an odd prime")));
        }
    }
    if p >= q {
        return Err(Error::InvalidInput(format!("need p < q, got p = {p}, q = {q}")));
    }
    Ok(())
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// The solution of `r p + s q = (p-1)(q-1)` in `0 <= r <= q-2`, `0 <= s <= p-2`.
pub fn solve_rs(p: usize, q: usize) -> Result<(usize, usize)> {
    check_pair(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let target = (pi - 1) * (qi - 1);
    let (_, u, _) = ext_gcd(pi, qi);
    // r ≡ target · p^{-1} (mod q)
    let r = (target % qi * (u.rem_euclid(qi))).rem_euclid(qi);
    let s = (target - r * pi) / qi;
    if r > qi - 2 || s < 0 || s > pi - 2 || r * pi + s * qi != target {
        return Err(Error::Structural(format!("no (r, s) in range for p = {p}, q = {q}")));
    }
    Ok((r as usize, s as usize))
}

pub fn lam_leung_pq(p: usize, q: usize) -> Result<PqStructure> {
    let (r, s) = solve_rs(p, q)?;
    let (mut a, mut b, mut c, mut d) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for i in 0..=r {
        for j in 0..=s {
            let e = i * p + j * q;
            if (i + j) % 2 == 0 {
                a.push(e)
            } else {
                b.push(e)
            }
        }
    }
    for i in r + 1..q {
        for j in s + 1..p {
            let e = (i * p + j * q)
                .checked_sub(p * q)
                .ok_or_else(|| Error::Structural(format!("negative exponent from i = {i}, j = {j}")))?;
            if e % 2 == 0 {
                c.push(e)
            } else {
                d.push(e)
            }
        }
    }
    let n = 2 * p * q;
    let set = |v: Vec<usize>, name: &str| {
        ExponentSet::new(n, v).map_err(|_| Error::Structural(format!("repeated exponent in {name}")))
    };
    let pq = PqStructure { p, q, r, s, a: set(a, "A")?, b: set(b, "B")?, c: set(c, "C")?, d: set(d, "D")? };
    let all: Vec<usize> = [&pq.a, &pq.b, &pq.c, &pq.d].iter().flat_map(|x| x.exponents().to_vec()).collect();
    if ExponentSet::new(n, all).is_err() {
        return Err(Error::Structural("A, B, C, D overlap".into()));
    }
    Ok(pq)
}

/// `Φ_{2pq}^T` assembled as `A + D + x^{pq} (B + C)`.
pub fn phi_t_from_pq(p: usize, q: usize) -> Result<IntPolynomial> {
    let pq = lam_leung_pq(p, q)?;
    let half = p * q;
    let low = pq.a.exponents().iter().chain(pq.d.exponents()).copied();
    let high = pq.b.exponents().iter().chain(pq.c.exponents()).map(|&e| e + half);
    Ok(IntPolynomial::from_exponents(low.chain(high)))
}
