use std::cmp::Ordering;

use serde::Serialize;

use super::ExponentSet;

/// The representative of a rotation orbit `{(S + t) mod n}`.
///
/// Among the rotations that contain exponent 0 the representative has the
/// least degree; ties go to the lexicographically greatest ascending
/// exponent list. With that tie-break the flat-polynomial sums `Φ_n^T`
/// (and the `g_i`) are their own representatives, whereas their mirror
/// images, which share the least degree, are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RotationClass {
    pub modulus: usize,
    pub canonical: ExponentSet,
    /// Smallest `t` with `(s + t) mod n = canonical`.
    pub shift_applied: usize,
}

fn better(candidate: &ExponentSet, best: &ExponentSet) -> bool {
    match candidate.degree().cmp(&best.degree()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => candidate.exponents() > best.exponents(),
    }
}

pub fn canonicalize(s: &ExponentSet) -> RotationClass {
    let n = s.modulus();
    if s.is_empty() {
        return RotationClass { modulus: n, canonical: s.clone(), shift_applied: 0 };
    }
    let mut shifts: Vec<usize> = s.exponents().iter().map(|&e| (n - e) % n).collect();
    shifts.sort_unstable();
    let mut best: Option<(usize, ExponentSet)> = None;
    for t in shifts {
        let rotated = s.rotate(t);
        if best.as_ref().is_none_or(|(_, b)| better(&rotated, b)) {
            best = Some((t, rotated));
        }
    }
    let (shift_applied, canonical) = best.expect("nonempty set has a shift");
    RotationClass { modulus: n, canonical, shift_applied }
}

/// Number of distinct rotations of `s`.
pub fn orbit_size(s: &ExponentSet) -> usize {
    let n = s.modulus();
    let stabilizer = (0..n).filter(|&t| s.rotate(t) == *s).count();
    n / stabilizer
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn es(n: usize, e: &[usize]) -> ExponentSet {
        ExponentSet::new(n, e.iter().copied()).unwrap()
    }

    // Oracle: try every shift 0..n, keep those containing 0.
    fn brute_canonical(s: &ExponentSet) -> (ExponentSet, usize) {
        let n = s.modulus();
        let mut cands: Vec<(usize, ExponentSet)> =
            (0..n).map(|t| (t, s.rotate(t))).filter(|(_, r)| r.contains(0)).collect();
        let best_deg = cands.iter().map(|(_, r)| r.degree()).min().unwrap();
        cands.retain(|(_, r)| r.degree() == best_deg);
        let best = cands.iter().map(|(_, r)| r.clone()).max().unwrap();
        let t = cands.iter().filter(|(_, r)| *r == best).map(|(t, _)| *t).min().unwrap();
        (best, t)
    }

    #[test]
    fn examples() {
        let c = canonicalize(&es(6, &[1, 3, 5]));
        assert_eq!(c.canonical, es(6, &[0, 2, 4]));
        assert_eq!(c.shift_applied, 1);

        let c = canonicalize(&es(6, &[0, 2, 4]));
        assert_eq!(c.canonical, es(6, &[0, 2, 4]));
        assert_eq!(c.shift_applied, 0);

        let c = canonicalize(&es(6, &[2, 5]));
        assert_eq!(c.canonical, es(6, &[0, 3]));
        assert_eq!(c.shift_applied, 1);
    }

    #[test]
    fn phi_t_30_is_its_own_representative() {
        let phi_t = es(30, &[0, 1, 7, 8, 18, 19, 20]);
        let mirror = es(30, &[0, 1, 2, 12, 13, 19, 20]);
        assert_eq!(canonicalize(&phi_t).canonical, phi_t);
        let c = canonicalize(&mirror);
        assert_eq!(c.canonical, phi_t);
        assert_eq!(c.shift_applied, 18);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&es(6, &[0, 2, 4])), 2);
        assert_eq!(orbit_size(&es(6, &[0, 3])), 3);
        assert_eq!(orbit_size(&es(30, &[0, 1, 7, 8, 18, 19, 20])), 30);
    }

    fn any_set() -> impl Strategy<Value = ExponentSet> {
        (2usize..40).prop_flat_map(|n| {
            prop::collection::btree_set(0..n, 1..n.min(12)).prop_map(move |s| ExponentSet::new(n, s).unwrap())
        })
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(s in any_set()) {
            let c = canonicalize(&s);
            let (best, t) = brute_canonical(&s);
            prop_assert_eq!(&c.canonical, &best);
            prop_assert_eq!(c.shift_applied, t);
            prop_assert!(c.canonical.contains(0));
            prop_assert_eq!(s.rotate(c.shift_applied), c.canonical);
        }

        #[test]
        fn idempotent_and_orbit_constant(s in any_set(), t in 0usize..64) {
            let c = canonicalize(&s);
            prop_assert_eq!(&canonicalize(&c.canonical).canonical, &c.canonical);
            prop_assert_eq!(canonicalize(&c.canonical).shift_applied, 0);
            prop_assert_eq!(canonicalize(&s.rotate(t)).canonical, c.canonical);
        }
    }
}
