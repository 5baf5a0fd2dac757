use cyclovan::cyclotomic::cyclotomic;
use cyclovan::vanish::{
    canonicalize, enumerate_minimal_sums, g_family, orbit_size, rotates_into_radical_subgroup, ExponentSet,
};
use cyclovan::IntPolynomial;

fn classes(n: usize) -> Vec<Vec<usize>> {
    enumerate_minimal_sums(n, n).unwrap().into_iter().map(|c| c.class.canonical.exponents().to_vec()).collect()
}

fn class_of(n: usize, f: &IntPolynomial) -> Vec<usize> {
    canonicalize(&ExponentSet::new(n, f.support()).unwrap()).canonical.exponents().to_vec()
}

/// Every minimal vanishing class at `n`, found without the library's
/// vanishing, minimality, or rotation code: vanishing by dividing by `Φ_n`,
/// minimality by trying every proper nonempty sub-mask, classes by taking the
/// smallest mask among all rotations.
fn brute_force_classes(n: usize) -> Vec<Vec<usize>> {
    let phi = cyclotomic(n).unwrap();
    let full = (1u32 << n) - 1;
    let vanishes = |mask: u32| -> bool {
        let f = IntPolynomial::from_exponents((0..n).filter(|&e| mask >> e & 1 == 1));
        f.is_divisible_by(&phi).unwrap()
    };
    let mut vanishing = vec![false; 1 << n];
    for mask in 1..=full {
        vanishing[mask as usize] = vanishes(mask);
    }
    let rotl = |mask: u32, t: usize| ((mask << t) | (mask >> (n - t))) & full;
    let mut seen = std::collections::BTreeSet::new();
    for mask in 1..=full {
        if !vanishing[mask as usize] {
            continue;
        }
        let mut sub = (mask - 1) & mask;
        let mut minimal = true;
        while sub != 0 {
            if vanishing[sub as usize] {
                minimal = false;
                break;
            }
            sub = (sub - 1) & mask;
        }
        if minimal {
            let rep = (0..n).map(|t| rotl(mask, t)).min().unwrap();
            seen.insert(rep);
        }
    }
    let mut out: Vec<Vec<usize>> = seen
        .into_iter()
        .map(|m| {
            let s = ExponentSet::new(n, (0..n).filter(|&e| m >> e & 1 == 1)).unwrap();
            canonicalize(&s).canonical.exponents().to_vec()
        })
        .collect();
    out.sort();
    out
}

#[test]
fn small_moduli() {
    assert_eq!(classes(4), vec![vec![0, 2]]);
    assert_eq!(classes(6), vec![vec![0, 3], vec![0, 2, 4]]);
    assert_eq!(classes(10), vec![vec![0, 5], vec![0, 2, 4, 6, 8]]);
    assert_eq!(classes(12), vec![vec![0, 6], vec![0, 4, 8]]);
    assert_eq!(classes(14), vec![vec![0, 7], vec![0, 2, 4, 6, 8, 10, 12]]);
}

#[test]
fn two_p_is_g0_and_g1() {
    for p in [3, 5, 7] {
        let n = 2 * p;
        let mut expected = vec![class_of(n, &g_family(n, 2).unwrap()), class_of(n, &g_family(n, p).unwrap())];
        expected.sort();
        let mut got = classes(n);
        got.sort();
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn matches_brute_force() {
    for n in 2..=18 {
        let mut got = classes(n);
        got.sort();
        assert_eq!(got, brute_force_classes(n), "n = {n}");
    }
}

#[test]
fn classes_lie_in_the_radical_subgroup() {
    for n in [8, 9, 12, 16, 18, 20, 24, 25, 27] {
        for c in enumerate_minimal_sums(n, n).unwrap() {
            assert!(rotates_into_radical_subgroup(&c.class.canonical).unwrap(), "n = {n}: {:?}", c.class);
        }
    }
}

#[test]
fn records_are_consistent() {
    for n in [12, 20, 30] {
        let found = enumerate_minimal_sums(n, 8).unwrap();
        for w in found.windows(2) {
            assert!(w[0].weight <= w[1].weight);
        }
        for c in &found {
            let s = &c.class.canonical;
            assert_eq!(c.weight, s.len());
            assert!(c.weight <= 8);
            assert_eq!(c.orbit_size, orbit_size(s));
            assert_eq!(canonicalize(s).canonical, *s);
            assert_eq!(canonicalize(s).shift_applied, 0);
            assert!(s.contains(0));
        }
    }
}

#[test]
fn n30_contains_the_known_families() {
    let n = 30;
    let all = classes(n);
    for f in [
        g_family(n, 2).unwrap(),
        g_family(n, 3).unwrap(),
        g_family(n, 5).unwrap(),
        cyclovan::transform::phi_t(n).unwrap(),
    ] {
        assert!(all.contains(&class_of(n, &f)), "{f}");
    }
    let sigma = cyclovan::vanish::sigma_product_sum(n, 2, 3, 5).unwrap();
    assert!(all.contains(&canonicalize(&sigma).canonical.exponents().to_vec()));
    // prime powers and two primes give only the g_i; three primes give more
    assert!(all.len() > 3);
}

#[test]
fn bounds_are_enforced() {
    assert!(enumerate_minimal_sums(31, 31).is_err());
    assert!(enumerate_minimal_sums(36, 13).is_err());
    assert!(enumerate_minimal_sums(43, 4).is_err());
    assert!(enumerate_minimal_sums(1, 1).is_err());
}
