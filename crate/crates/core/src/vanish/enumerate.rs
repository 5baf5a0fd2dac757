//! Enumeration of minimal vanishing sums of distinct `n`-th roots of unity,
//! up to rotation.
//!
//! Every rotation class has a member containing 0, so only those subsets are
//! visited: a depth-first walk over exponents `1..n` that carries the running
//! residue sum and records a subset when the sum hits zero. The walk is split
//! on its first few decisions and run in parallel; the merge sorts, so the
//! output does not depend on the split.
//!
//! Minimality is then decided in order of weight. A vanishing set is minimal
//! iff it strictly contains no minimal vanishing set, and all minimal sets
//! of smaller weight (with all their rotations) are known by then.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{canonicalize, orbit_size, ExponentSet, ResidueTable, RotationClass};
use crate::error::{Error, Result};

/// Largest `n` enumerated without a weight cap.
pub const FULL_ENUMERATION_MAX: usize = 30;
/// Largest `n` accepted at all (with `max_weight <= WEIGHT_CAP`).
pub const WEIGHT_CAPPED_MAX: usize = 42;
pub const WEIGHT_CAP: usize = 12;

const SPLIT_DEPTH: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumeratedClass {
    pub class: RotationClass,
    pub weight: usize,
    /// Number of distinct rotations of the representative.
    pub orbit_size: usize,
}

pub fn enumerate_minimal_sums(n: usize, max_weight: usize) -> Result<Vec<EnumeratedClass>> {
    if n < 2 {
        return Err(Error::InvalidInput("enumeration needs n >= 2".into()));
    }
    if max_weight == 0 {
        return Err(Error::InvalidInput("max_weight must be positive".into()));
    }
    let max_weight = max_weight.min(n);
    if n > WEIGHT_CAPPED_MAX || (n > FULL_ENUMERATION_MAX && max_weight > WEIGHT_CAP) {
        return Err(Error::InstanceTooLarge(format!(
            "enumeration supports n <= {FULL_ENUMERATION_MAX}, or n <= {WEIGHT_CAPPED_MAX} with max_weight <= {WEIGHT_CAP}; got n = {n}, max_weight = {max_weight}"
        )));
    }
    let table = ResidueTable::new(n)?;
    let mut vanishing = vanishing_masks_containing_zero(&table, max_weight);
    vanishing.sort_unstable_by_key(|&m| (m.count_ones(), m));

    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let rotate = |m: u64, t: usize| if t == 0 { m } else { ((m << t) | (m >> (n - t))) & full };

    let mut minimal_rotations: Vec<u64> = Vec::new();
    let mut classes = Vec::new();
    for mask in vanishing {
        let set = ExponentSet::from_mask(n, mask);
        let class = canonicalize(&set);
        if class.canonical != set {
            continue;
        }
        if minimal_rotations.iter().any(|&m| m & mask == m && m != mask) {
            continue;
        }
        let orbit: HashSet<u64> = (0..n).map(|t| rotate(mask, t)).collect();
        minimal_rotations.extend(orbit);
        classes.push(EnumeratedClass { weight: set.len(), orbit_size: orbit_size(&set), class });
    }
    classes.sort_by(|a, b| {
        (a.weight, a.class.canonical.degree(), a.class.canonical.exponents()).cmp(&(
            b.weight,
            b.class.canonical.degree(),
            b.class.canonical.exponents(),
        ))
    });
    Ok(classes)
}

/// All vanishing subsets of `0..n` that contain 0, as bitmasks.
fn vanishing_masks_containing_zero(table: &ResidueTable, max_weight: usize) -> Vec<u64> {
    let n = table.modulus();
    let dim = table.dim();
    let split = SPLIT_DEPTH.min(n - 1);
    let mut out: Vec<u64> = (0u64..1 << split)
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut found = Vec::new();
            let mut mask = 1u64;
            let mut sum = table.row(0).to_vec();
            for k in 1..=split {
                if prefix >> (k - 1) & 1 == 1 {
                    mask |= 1 << k;
                    for (s, r) in sum.iter_mut().zip(table.row(k)) {
                        *s += r;
                    }
                }
            }
            let weight = mask.count_ones() as usize;
            if weight > max_weight {
                return found.into_iter();
            }
            // sets whose elements all lie within the prefix are recorded here
            if sum.iter().all(|&c| c == 0) {
                found.push(mask);
            }
            let mut walker = Walker { table, n, dim, max_weight, found: &mut found, sums: vec![0; dim * (n + 1)] };
            walker.sums[..dim].copy_from_slice(&sum);
            walker.walk(split + 1, mask, weight, 0);
            found.into_iter()
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

struct Walker<'a> {
    table: &'a ResidueTable,
    n: usize,
    dim: usize,
    max_weight: usize,
    found: &'a mut Vec<u64>,
    /// running sums, one slot per recursion level
    sums: Vec<i64>,
}

impl Walker<'_> {
    fn walk(&mut self, k: usize, mask: u64, weight: usize, level: usize) {
        if k >= self.n || weight == self.max_weight {
            return;
        }
        let dim = self.dim;
        let (cur, next) = self.sums.split_at_mut((level + 1) * dim);
        let cur = &cur[level * dim..];
        let next = &mut next[..dim];
        let mut zero = true;
        for ((nx, c), r) in next.iter_mut().zip(cur).zip(self.table.row(k)) {
            *nx = c + r;
            zero &= *nx == 0;
        }
        let with = mask | 1 << k;
        if zero {
            self.found.push(with);
        }
        self.walk(k + 1, with, weight + 1, level + 1);
        // skipping k keeps the current level's sum
        self.walk(k + 1, mask, weight, level);
    }
}
