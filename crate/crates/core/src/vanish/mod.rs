//! Sums of distinct `n`-th roots of unity, represented by their exponent
//! sets, with vanishing and minimality tests, rotation classes, and the
//! classical families of minimal vanishing sums.

mod enumerate;
mod minimal;
mod residues;
mod rotation;

use serde::Serialize;

use crate::arith::{factorize, is_prime};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub use enumerate::{enumerate_minimal_sums, EnumeratedClass, FULL_ENUMERATION_MAX, WEIGHT_CAP, WEIGHT_CAPPED_MAX};
pub(crate) use minimal::is_minimal_vanishing_with;
pub use minimal::{is_minimal_vanishing, MAX_SEARCH_DIMENSION};
pub use residues::ResidueTable;
pub use rotation::{canonicalize, orbit_size, RotationClass};

/// A set of distinct residues modulo `n`, standing for the sum
/// `ζ_n^{k_1} + ... + ζ_n^{k_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentSet {
    modulus: usize,
    exponents: Vec<usize>,
}

impl ExponentSet {
    /// Fails if an exponent is repeated or not below `modulus`.
    pub fn new<I: IntoIterator<Item = usize>>(modulus: usize, exponents: I) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        let mut exps: Vec<usize> = exponents.into_iter().collect();
        exps.sort_unstable();
        if let Some(&e) = exps.iter().find(|&&e| e >= modulus) {
            return Err(Error::InvalidInput(format!("exponent {e} is not below the modulus {modulus}")));
        }
        if exps.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("exponents must be distinct".into()));
        }
        Ok(Self { modulus, exponents: exps })
    }

    /// Reduces every exponent mod `modulus`; collisions are an error.
    pub fn from_residues<I: IntoIterator<Item = usize>>(modulus: usize, exponents: I) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be positive".into()));
        }
        Self::new(modulus, exponents.into_iter().map(|e| e % modulus))
    }

    /// The exponent set of a 0,1-polynomial of degree below `modulus`.
    pub fn from_polynomial(modulus: usize, f: &IntPolynomial) -> Result<Self> {
        if !f.is_zero_one() {
            return Err(Error::InvalidInput(format!("{f} is not a 0,1-polynomial")));
        }
        Self::new(modulus, f.support())
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.exponents.binary_search(&e).is_ok()
    }

    /// Largest exponent, i.e. the degree of the associated polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.exponents.last().copied()
    }

    /// `{(e + t) mod n}`: multiplication of the sum by `ζ_n^t`.
    pub fn rotate(&self, t: usize) -> Self {
        let n = self.modulus;
        let mut exponents: Vec<usize> = self.exponents.iter().map(|&e| (e + t % n) % n).collect();
        exponents.sort_unstable();
        Self { modulus: n, exponents }
    }

    pub(crate) fn from_mask(modulus: usize, mask: u64) -> Self {
        let exponents = (0..modulus).filter(|&e| mask >> e & 1 == 1).collect();
        Self { modulus, exponents }
    }
}

pub fn set_to_polynomial(s: &ExponentSet) -> IntPolynomial {
    IntPolynomial::from_exponents(s.exponents.iter().copied())
}

/// Whether `Φ_n` divides the 0,1-polynomial with exponent set `s`.
pub fn is_vanishing(s: &ExponentSet) -> Result<bool> {
    if s.modulus < 2 {
        return Err(Error::InvalidInput("vanishing sums need modulus n >= 2".into()));
    }
    set_to_polynomial(s).is_divisible_by(&cyclotomic(s.modulus)?)
}

fn check_prime_divisor(n: usize, p: usize) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if n == 0 || !n.is_multiple_of(p) {
        return Err(Error::InvalidInput(format!("{p} does not divide {n}")));
    }
    Ok(())
}

/// `1 + x^{n/p} + ... + x^{(p-1)n/p}`, the polynomial of `1 + σ(p) = 0`.
pub fn g_family(n: usize, p: usize) -> Result<IntPolynomial> {
    check_prime_divisor(n, p)?;
    let step = n / p;
    Ok(IntPolynomial::from_exponents((0..p).map(|k| k * step)))
}

/// Exponents of the roots in `σ(p_i)·σ(p_j) + σ(p_k)`.
pub fn sigma_product_sum(n: usize, pi: usize, pj: usize, pk: usize) -> Result<ExponentSet> {
    for p in [pi, pj, pk] {
        check_prime_divisor(n, p)?;
    }
    if pi == pj || pj == pk || pi == pk {
        return Err(Error::InvalidInput("the three primes must be distinct".into()));
    }
    let (si, sj, sk) = (n / pi, n / pj, n / pk);
    let mut exps = Vec::with_capacity((pi - 1) * (pj - 1) + pk - 1);
    for a in 1..pi {
        for b in 1..pj {
            exps.push((a * si + b * sj) % n);
        }
    }
    exps.extend((1..pk).map(|c| c * sk));
    let expected = exps.len();
    exps.sort_unstable();
    exps.dedup();
    if exps.len() != expected {
        return Err(Error::Structural(format!(
            "σ({pi})σ({pj})+σ({pk}) mod {n} has colliding roots ({} distinct of {expected})",
            exps.len()
        )));
    }
    ExponentSet::new(n, exps)
}

/// Whether `n` and every exponent of `s` become multiples of `n / rad(n)`
/// after some rotation, i.e. the sum lies in the `rad(n)`-th roots up to rotation.
pub fn rotates_into_radical_subgroup(s: &ExponentSet) -> Result<bool> {
    let n = s.modulus();
    let rad: u64 = factorize(n as u64)?.primes().product();
    let step = n / rad as usize;
    Ok((0..n).any(|t| s.rotate(t).exponents().iter().all(|e| e % step == 0)))
}
