use std::cmp::Ordering;

use rayon::prelude::*;

use super::{multiple_order, SearchConfig};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Every 0,1-polynomial `f` with `Φ_n | f`, `φ(n) <= deg f <= max_degree`,
/// and `f(0) = 1` when the config requires it. Sorted by degree, then by
/// exponent list.
pub fn zero_one_multiples(config: &SearchConfig) -> Result<Vec<IntPolynomial>> {
    config.validate()?;
    let phi = cyclotomic(config.n)?;
    check_magnitudes(&phi, config.max_degree)?;
    let mut out = Vec::new();
    for d in phi.degree().expect("nonzero")..=config.max_degree {
        out.extend(multiples_of_degree(&phi, d, config.require_constant_term)?);
    }
    out.sort_by_cached_key(multiple_order);
    Ok(out)
}

/// Quotient coefficients satisfy `g_k = Σ_{j<=k} c_j u_{k-j}` where `u` is the
/// power series of `1/Φ_n`, whatever 0,1-values `c` takes along a branch
/// (and symmetrically from the top, `Φ_n` being palindromic). Bounding
/// `Σ |u|` therefore bounds every intermediate value of the search.
fn check_magnitudes(phi: &IntPolynomial, max_degree: usize) -> Result<()> {
    let ph = phi.coeffs();
    let mut u = vec![0i128; max_degree + 1];
    u[0] = 1;
    for k in 1..=max_degree {
        let mut acc = 0i128;
        for j in 1..=k.min(ph.len() - 1) {
            acc -= ph[j] as i128 * u[k - j];
        }
        u[k] = acc;
        if acc.unsigned_abs() > 1 << 40 {
            return Err(Error::Overflow);
        }
    }
    let g_bound: i128 = u.iter().map(|x| x.abs()).sum();
    let conv_bound = g_bound * phi.height() as i128 * ph.len() as i128;
    if conv_bound > (i64::MAX / 4) as i128 {
        return Err(Error::Overflow);
    }
    Ok(())
}

fn multiples_of_degree(phi: &IntPolynomial, d: usize, require_constant: bool) -> Result<Vec<IntPolynomial>> {
    let ph = phi.coeffs();
    let dim = ph.len() - 1;
    let m = d - dim;
    if m == 0 {
        return Ok(if phi.is_zero_one() { vec![phi.clone()] } else { Vec::new() });
    }
    let a = m / 2;

    // low half: g_0..=g_a
    let mut bottoms = Vec::new();
    let mut g = vec![0i64; a + 1];
    low_half(ph, 0, a, require_constant, &mut g, &mut bottoms);

    // high half: g_{a+1}..=g_m, determined from the top coefficient down
    let mut tops = Vec::new();
    let mut h = vec![0i64; m + 1];
    h[m] = 1;
    high_half(ph, m, d, m - 1, a, &mut h, &mut tops);

    let tops: Vec<(Vec<i64>, Vec<i64>)> = {
        let mut t: Vec<(Vec<i64>, Vec<i64>)> =
            tops.into_iter().map(|h: Vec<i64>| (middle_contribution(ph, &h, a + 1..=m, a), h)).collect();
        t.sort_unstable();
        t
    };

    let found: Vec<IntPolynomial> = bottoms
        .par_iter()
        .flat_map_iter(|low| {
            let b = middle_contribution(ph, low, 0..=a, a);
            let mut hits = Vec::new();
            join(&tops, &b, 0, 0, tops.len(), &mut hits);
            hits.into_iter().map(|idx| {
                let mut q = low.clone();
                q.truncate(a + 1);
                q.extend_from_slice(&tops[idx].1[a + 1..]);
                q
            })
        })
        .map(|q| phi.checked_mul(&IntPolynomial::new(q)))
        .collect::<Result<_>>()?;

    for f in &found {
        if !f.is_zero_one() || f.degree() != Some(d) || (require_constant && f.coeff(0) != 1) {
            return Err(Error::Structural(format!("search produced an invalid multiple {f}")));
        }
    }
    Ok(found)
}

fn low_half(ph: &[i64], k: usize, a: usize, require_constant: bool, g: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if k > a {
        out.push(g.clone());
        return;
    }
    let dim = ph.len() - 1;
    let tail: i64 = (k.saturating_sub(dim)..k).map(|j| g[j] * ph[k - j]).sum();
    for c in [0, 1] {
        if k == 0 && require_constant && c == 0 {
            continue;
        }
        g[k] = c - tail;
        low_half(ph, k + 1, a, require_constant, g, out);
    }
    g[k] = 0;
}

/// Fixes `h[j]` for `j` from `m - 1` down to `a + 1` using coefficient
/// `c_{j + dim}` of the product.
fn high_half(ph: &[i64], m: usize, d: usize, j: usize, a: usize, h: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if j <= a {
        out.push(h.clone());
        return;
    }
    let dim = ph.len() - 1;
    let k = j + dim;
    debug_assert!(k < d);
    let tail: i64 = (j + 1..=m.min(k)).map(|i| h[i] * ph[k - i]).sum();
    for c in [0, 1] {
        h[j] = c - tail;
        high_half(ph, m, d, j - 1, a, h, out);
    }
    h[j] = 0;
}

/// Contribution of `g_j`, `j ∈ range`, to the middle coefficients
/// `c_{a+1}, ..., c_{a+dim}`.
fn middle_contribution(ph: &[i64], g: &[i64], range: std::ops::RangeInclusive<usize>, a: usize) -> Vec<i64> {
    let dim = ph.len() - 1;
    (a + 1..=a + dim)
        .map(|k| range.clone().filter(|&j| j <= k && k - j <= dim).map(|j| g[j] * ph[k - j]).sum())
        .collect()
}

/// Indices `i` in `tops[lo..hi]` with `b[l] + tops[i].0[l] ∈ {0, 1}` for all
/// coordinates `l >= level`; the range already agrees below `level`.
fn join(tops: &[(Vec<i64>, Vec<i64>)], b: &[i64], level: usize, lo: usize, hi: usize, hits: &mut Vec<usize>) {
    if lo >= hi {
        return;
    }
    if level == b.len() {
        hits.extend(lo..hi);
        return;
    }
    for target in [-b[level], 1 - b[level]] {
        let slice = &tops[lo..hi];
        let start = lo + slice.partition_point(|t| t.0[level].cmp(&target) == Ordering::Less);
        let end = lo + slice.partition_point(|t| t.0[level].cmp(&target) != Ordering::Greater);
        join(tops, b, level + 1, start, end, hits);
    }
}

/// The unsplit search: fix `g_0, ..., g_m` bottom-up, then check the top
/// `φ(n)` coefficients. Kept as an independent reference for tests.
pub fn zero_one_multiples_plain_dfs(config: &SearchConfig) -> Result<Vec<IntPolynomial>> {
    config.validate()?;
    let phi = cyclotomic(config.n)?;
    check_magnitudes(&phi, config.max_degree)?;
    let ph = phi.coeffs().to_vec();
    let dim = ph.len() - 1;
    let mut out = Vec::new();
    for d in dim..=config.max_degree {
        let m = d - dim;
        let mut g = vec![0i64; m + 1];
        plain(&ph, 0, m, config.require_constant_term, &mut g, &mut out);
    }
    let mut polys: Vec<IntPolynomial> =
        out.into_iter().map(|q| phi.checked_mul(&IntPolynomial::new(q))).collect::<Result<_>>()?;
    polys.sort_by_cached_key(multiple_order);
    Ok(polys)
}

fn plain(ph: &[i64], k: usize, m: usize, require_constant: bool, g: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let dim = ph.len() - 1;
    let coeff = |g: &[i64], k: usize| -> i64 { (k.saturating_sub(dim)..=k.min(m)).map(|j| g[j] * ph[k - j]).sum() };
    if k > m {
        if g[m] == 1 && (m + 1..=m + dim).all(|k| matches!(coeff(g, k), 0 | 1)) {
            out.push(g.clone());
        }
        return;
    }
    let tail: i64 = (k.saturating_sub(dim)..k).map(|j| g[j] * ph[k - j]).sum();
    for c in [0, 1] {
        if k == 0 && require_constant && c == 0 {
            continue;
        }
        g[k] = c - tail;
        plain(ph, k + 1, m, require_constant, g, out);
    }
    g[k] = 0;
}
