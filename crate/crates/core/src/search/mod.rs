//! 0,1-polynomial multiples of `Φ_n` and the lowest-degree members of `H_n`.
//!
//! A multiple `f = Φ_n · g` of degree `d` has a quotient of degree
//! `m = d - φ(n)`. `Φ_n` is monic with constant term 1, so reading the
//! product coefficients from the bottom, `c_k = g_k + (known tail)` and
//! `c_k ∈ {0, 1}` leaves two choices for each `g_k`. Reading from the top
//! is symmetric. We determine the low half of `g` from the low coefficients
//! and the high half from the high coefficients, then join the halves on
//! the `φ(n)` middle coefficients, which must also land in `{0, 1}`. That
//! visits about `2^{m/2}` partial quotients per side instead of `2^m`.

mod conjecture;
mod multiples;

use serde::Serialize;

use crate::arith::euler_phi;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub use conjecture::{
    classify_winner, lowest_hn_members, predicted_conjecture_degree, verify_conjecture, ConjectureVerdict,
    FoundMultiple, SearchReport,
};
pub use multiples::zero_one_multiples;
#[doc(hidden)]
pub use multiples::zero_one_multiples_plain_dfs;

/// Largest quotient degree `d - φ(n)` the search accepts.
pub const MAX_QUOTIENT_DEGREE: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub max_degree: usize,
    pub require_constant_term: bool,
    pub min_terms: usize,
}

impl SearchConfig {
    pub fn new(n: usize, max_degree: usize) -> Result<Self> {
        let config = Self { n, max_degree, require_constant_term: true, min_terms: 3 };
        config.validate()?;
        Ok(config)
    }

    pub fn with_min_terms(mut self, min_terms: usize) -> Result<Self> {
        self.min_terms = min_terms;
        self.validate()?;
        Ok(self)
    }

    pub fn with_constant_term(mut self, required: bool) -> Self {
        self.require_constant_term = required;
        self
    }

    pub fn phi(&self) -> usize {
        euler_phi(self.n as u64).expect("validated n") as usize
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("n = {n} must be even and at least 2")));
        }
        let phi = euler_phi(n as u64)? as usize;
        if self.max_degree < phi || self.max_degree > n - 1 {
            return Err(Error::InvalidInput(format!(
                "max_degree = {} must lie in φ(n)..=n-1 = {phi}..={}",
                self.max_degree,
                n - 1
            )));
        }
        if self.min_terms == 0 {
            return Err(Error::InvalidInput("min_terms must be positive".into()));
        }
        if self.max_degree - phi > MAX_QUOTIENT_DEGREE {
            return Err(Error::InstanceTooLarge(format!(
                "quotient degree {} exceeds {MAX_QUOTIENT_DEGREE}",
                self.max_degree - phi
            )));
        }
        Ok(())
    }
}

/// Sort key used for every list of multiples: degree, then exponents.
pub(crate) fn multiple_order(f: &IntPolynomial) -> (usize, Vec<usize>) {
    (f.degree().unwrap_or(0), f.support())
}
