//! Degree and gap properties of `Φ_{2pq}^T` under rotation.
//!
//! "Multiplying by `x^i`" is read as rotation: at `ζ_n` it shifts every
//! exponent by `i` modulo `n`. The shifts that matter are those bringing
//! some exponent to 0, `t = (n - e) mod n` for `e` in the exponent set;
//! among them `deg` is minimized exactly at `t = 0` and `t = n/2 - p`,
//! where it equals `n - 2p - q + 1`.

use serde::Serialize;

use super::{phi_t, pq::lam_leung_pq};
use crate::arith::euler_phi;
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::vanish::{is_minimal_vanishing, ExponentSet};

/// Largest `n = 2pq` accepted by [`verify_theorem_2pq`].
pub const THEOREM_MAX_N: usize = 2310;

/// Successive differences of the sorted exponents.
pub fn gap_profile(e: &ExponentSet) -> Result<Vec<usize>> {
    if e.len() < 2 {
        return Err(Error::TooFewExponents(e.len()));
    }
    Ok(e.exponents().windows(2).map(|w| w[1] - w[0]).collect())
}

/// `(t, max((s + t) mod n))` for every `t` in `0..n`.
pub fn rotation_degree_profile(s: &ExponentSet) -> Vec<(usize, usize)> {
    (0..s.modulus()).map(|t| (t, s.rotate(t).degree().unwrap_or(0))).collect()
}

/// Shifts `t = (n - e) mod n`, `e ∈ s`, ascending.
pub fn theorem_shift_set(s: &ExponentSet) -> Vec<usize> {
    let n = s.modulus();
    let mut shifts: Vec<usize> = s.exponents().iter().map(|&e| (n - e) % n).collect();
    shifts.sort_unstable();
    shifts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    /// `n - 2p - q + 1`.
    pub predicted_degree: usize,
    pub degree_at_zero: usize,
    /// `n/2 - p`.
    pub mirror_shift: usize,
    pub degree_at_mirror: usize,
    /// Shifts from the theorem's shift set that attain the least degree.
    pub minimizing_shifts: Vec<usize>,
    /// Shifts other than `0` and `n/2 - p` whose degree is not larger.
    pub counterexamples: Vec<(usize, usize)>,
    /// Largest gap between consecutive exponents; expected `2p + q - 1`.
    pub max_gap: usize,
    pub pass: bool,
}

pub fn verify_theorem_2pq(p: usize, q: usize) -> Result<TheoremVerdict> {
    // validates the pair
    lam_leung_pq(p, q)?;
    let n = 2 * p * q;
    if n > THEOREM_MAX_N {
        return Err(Error::InstanceTooLarge(format!("2pq = {n} exceeds {THEOREM_MAX_N}")));
    }
    let t = phi_t(n)?;
    let e = ExponentSet::from_polynomial(n, &t)?;
    let predicted_degree = n - 2 * p - q + 1;
    let mirror_shift = n / 2 - p;
    let profile = rotation_degree_profile(&e);
    let shifts = theorem_shift_set(&e);

    let degree_at_zero = profile[0].1;
    let degree_at_mirror = profile[mirror_shift].1;
    let least = shifts.iter().map(|&s| profile[s].1).min().expect("nonempty");
    let minimizing_shifts = shifts.iter().copied().filter(|&s| profile[s].1 == least).collect();
    let counterexamples: Vec<(usize, usize)> = shifts
        .iter()
        .filter(|&&s| s != 0 && s != mirror_shift)
        .map(|&s| profile[s])
        .filter(|&(_, deg)| deg <= predicted_degree)
        .collect();
    let max_gap = gap_profile(&e)?.into_iter().max().unwrap_or(0);
    let pass = degree_at_zero == predicted_degree
        && degree_at_mirror == predicted_degree
        && shifts.contains(&mirror_shift)
        && counterexamples.is_empty();
    Ok(TheoremVerdict {
        p,
        q,
        n,
        predicted_degree,
        degree_at_zero,
        mirror_shift,
        degree_at_mirror,
        minimizing_shifts,
        counterexamples,
        max_gap,
        pass,
    })
}

/// Some `s ∈ E_f` with `φ(n) <= s < n/2`, for `f` a 0,1-polynomial in `H_n`
/// with at least three terms and `deg f < n/2 + φ(n)`.
///
/// `Ok(None)` means no such exponent exists, which would contradict the
/// lemma. Set `check_minimal` to also confirm that `f(ζ_n)` is a minimal
/// vanishing sum.
pub fn lemma_s_witness(f: &IntPolynomial, n: usize, check_minimal: bool) -> Result<Option<usize>> {
    let violated = |msg: String| Err(Error::Precondition(msg));
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{n} is not an even integer >= 2")));
    }
    if !f.is_zero_one() {
        return violated(format!("{f} is not a 0,1-polynomial"));
    }
    if f.coeff(0) != 1 {
        return violated(format!("{f} has constant term 0"));
    }
    let phi = euler_phi(n as u64)? as usize;
    let deg = f.degree().expect("constant term is 1");
    if deg >= n {
        return violated(format!("deg {deg} is not below n = {n}"));
    }
    if deg >= n / 2 + phi {
        return violated(format!("deg {deg} is not below n/2 + φ(n) = {}", n / 2 + phi));
    }
    let exps = f.support();
    if exps.len() < 3 {
        return violated(format!("{f} has fewer than three terms"));
    }
    if !f.is_divisible_by(&cyclotomic(n)?)? {
        return violated(format!("Φ_{n} does not divide {f}"));
    }
    if check_minimal && !is_minimal_vanishing(&ExponentSet::new(n, exps.iter().copied())?)? {
        return violated(format!("{f} is not a minimal vanishing sum at n = {n}"));
    }
    Ok(exps.into_iter().find(|&s| phi <= s && s < n / 2))
}
