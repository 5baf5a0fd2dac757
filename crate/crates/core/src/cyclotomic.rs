//! Cyclotomic polynomials, their height, and flatness.
//!
//! Two independent constructions are provided. [`cyclotomic_by_division`]
//! divides `x^n - 1` by every `Φ_d` with `d | n, d < n`. [`cyclotomic`]
//! reduces to the radical with `Φ_{pm}(x) = Φ_m(x^p)` for `p | m`, to odd
//! order with `Φ_{2m}(x) = Φ_m(-x)` for odd `m`, and builds the odd
//! square-free case prime by prime with `Φ_{mp}(x) = Φ_m(x^p) / Φ_m(x)`.

use std::collections::BTreeMap;

use crate::arith::{divisors, factorize};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

fn check_order(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
    }
    Ok(n as u64)
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: usize) -> Result<IntPolynomial> {
    let n64 = check_order(n)?;
    let f = factorize(n64)?;
    let radical: u64 = f.primes().product();
    let mut poly = if radical == 1 {
        IntPolynomial::new(vec![-1, 1])
    } else {
        let odd_part: Vec<u64> = f.primes().filter(|&p| p != 2).collect();
        let mut phi = IntPolynomial::new(vec![-1, 1]);
        for p in odd_part {
            let (q, r) = phi.compose_power(p as usize).divrem(&phi)?;
            debug_assert!(r.is_zero());
            phi = q;
        }
        if radical.is_multiple_of(2) {
            // Φ_2 = Φ_1(-x) up to sign; handle it directly.
            phi = if radical == 2 { IntPolynomial::new(vec![1, 1]) } else { phi.negate_variable()? };
        }
        phi
    };
    let power = n64 / radical;
    if power > 1 {
        poly = poly.compose_power(power as usize);
    }
    Ok(poly)
}

/// Reference construction: exact division of `x^n - 1` by the cyclotomic
/// polynomials of all proper divisors.
pub fn cyclotomic_by_division(n: usize) -> Result<IntPolynomial> {
    check_order(n)?;
    let mut table: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for d in divisors(n as u64)? {
        let mut num = IntPolynomial::x_pow_minus_one(d as usize);
        for (&e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = num.divrem(phi_e)?;
                if !r.is_zero() {
                    return Err(Error::Structural(format!("Φ_{e} does not divide x^{d}-1")));
                }
                num = q;
            }
        }
        table.insert(d, num);
    }
    Ok(table.remove(&(n as u64)).expect("n divides itself"))
}

/// `A(n)`, the largest absolute coefficient of `Φ_n`.
pub fn height(n: usize) -> Result<u64> {
    Ok(cyclotomic(n)?.height())
}

/// Whether `A(n) = 1`. `Φ_1 = x - 1` is reported flat, though it is a
/// degenerate case (its constant term is -1).
pub fn is_flat(n: usize) -> Result<bool> {
    Ok(height(n)? == 1)
}
