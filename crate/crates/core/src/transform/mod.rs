//! The 0,1-polynomial `Φ_n^T` attached to a flat cyclotomic polynomial.
//!
//! Writing a flat `Φ_n = f_1 - f_2` with `f_1, f_2` 0,1-polynomials on
//! disjoint supports, `ζ_n^{n/2} = -1` turns `f_1(ζ_n) - f_2(ζ_n) = 0` into
//! `f_1(ζ_n) + ζ_n^{n/2} f_2(ζ_n) = 0`, so `Φ_n` divides
//! `Φ_n^T = f_1 + x^{n/2} f_2` for even `n`.

mod pq;
mod theorem;

use serde::Serialize;

use crate::arith::{euler_phi, factorize};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub use pq::{lam_leung_pq, phi_t_from_pq, solve_rs, PqStructure};
pub use theorem::{
    gap_profile, lemma_s_witness, rotation_degree_profile, theorem_shift_set, verify_theorem_2pq, TheoremVerdict,
    THEOREM_MAX_N,
};

/// `f = f1 - f2` with nonnegative `f1`, `f2` on disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignSplit {
    pub f1: IntPolynomial,
    pub f2: IntPolynomial,
}

pub fn sign_split(f: &IntPolynomial) -> Result<SignSplit> {
    let pos = f.coeffs().iter().map(|&c| c.max(0)).collect();
    let neg = f
        .coeffs()
        .iter()
        .map(|&c| if c < 0 { c.checked_neg().ok_or(Error::Overflow) } else { Ok(0) })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignSplit { f1: IntPolynomial::new(pos), f2: IntPolynomial::new(neg) })
}

fn check_even(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{n} is not an even integer >= 2")));
    }
    Ok(())
}

/// `Φ_n^T = f_1 + x^{n/2} f_2` for even `n` with `Φ_n` flat.
///
/// `Φ_2 = x + 1` has no negative part, so `Φ_2^T = Φ_2`.
pub fn phi_t(n: usize) -> Result<IntPolynomial> {
    check_even(n)?;
    let phi = cyclotomic(n)?;
    if phi.height() != 1 {
        return Err(Error::NotFlat(n));
    }
    let SignSplit { f1, f2 } = sign_split(&phi)?;
    let t = f1.checked_add(&f2.shift(n / 2))?;
    if !t.is_zero_one() {
        return Err(Error::Structural(format!("Φ_{n}^T is not a 0,1-polynomial")));
    }
    Ok(t)
}

/// Closed form for `deg Φ_n^T`, `n = 2 p_1 ... p_k` square-free with `k >= 1`:
/// `φ(n) - 1 + n/2` for odd `k`, `φ(n) - p_1 + n/2` for even `k`.
pub fn phi_t_degree(n: usize) -> Result<usize> {
    check_even(n)?;
    let f = factorize(n as u64)?;
    if !f.is_square_free() {
        return Err(Error::InvalidInput(format!("{n} is not square-free")));
    }
    let odd: Vec<u64> = f.primes().filter(|&p| p != 2).collect();
    if odd.is_empty() {
        return Err(Error::InvalidInput(format!("{n} has no odd prime factor")));
    }
    if cyclotomic(n)?.height() != 1 {
        return Err(Error::NotFlat(n));
    }
    let phi = euler_phi(n as u64)? as usize;
    Ok(if odd.len() % 2 == 1 { phi - 1 + n / 2 } else { phi - odd[0] as usize + n / 2 })
}
