//! Elementary arithmetic functions: factorization, Euler's totient, the
//! Möbius function, and the radical (largest square-free divisor).

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest argument accepted by [`factorize`]. Trial division up to
/// `sqrt(10^12) = 10^6` stays well under a second.
pub const MAX_FACTORIZE: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub n: u64,
    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub prime_powers: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.iter().map(|&(p, _)| p)
    }

    pub fn is_square_free(&self) -> bool {
        self.prime_powers.iter().all(|&(_, e)| e == 1)
    }

    pub fn num_distinct_primes(&self) -> usize {
        self.prime_powers.len()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factorize 0".into()));
    }
    if n > MAX_FACTORIZE {
        return Err(Error::InvalidInput(format!("{n} exceeds the factorization bound {MAX_FACTORIZE}")));
    }
    let mut prime_powers = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        prime_powers.push((m, 1));
    }
    Ok(Factorization { n, prime_powers })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.prime_powers == [(n, 1)])
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.prime_powers.iter().fold(1, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1)))
}

pub fn moebius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_square_free() {
        return Ok(0);
    }
    Ok(if f.num_distinct_primes() % 2 == 0 { 1 } else { -1 })
}

pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.primes().product())
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in &f.prime_powers {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }

    fn coprime_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().prime_powers.is_empty());
        assert_eq!(factorize(30).unwrap().prime_powers, vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(105).unwrap().prime_powers, vec![(3, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(360).unwrap().prime_powers, vec![(2, 3), (3, 2), (5, 1)]);
        assert!(matches!(factorize(0), Err(Error::InvalidInput(_))));
        assert!(factorize(MAX_FACTORIZE + 1).is_err());
        // 999983 is prime
        assert_eq!(factorize(999_983 * 999_983).unwrap().prime_powers, vec![(999_983, 2)]);
    }

    #[test]
    fn phi_matches_direct_count() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(30).unwrap(), coprime_count(30));
        assert_eq!(euler_phi(30).unwrap(), 8);
        assert_eq!(euler_phi(15).unwrap(), 8);
        for n in 1..500 {
            assert_eq!(euler_phi(n).unwrap(), coprime_count(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(moebius(6).unwrap(), 1);
    }

    #[test]
    fn moebius_sums_to_zero_over_divisors() {
        for n in 2..300 {
            let s: i64 = divisors(n).unwrap().iter().map(|&d| moebius(d).unwrap() as i64).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(1).unwrap(), 1);
        assert_eq!(radical(12).unwrap(), 6);
        assert_eq!(radical(30).unwrap(), 30);
    }

    #[test]
    fn divisors_and_primes() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        let primes: Vec<u64> = (0..30).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
