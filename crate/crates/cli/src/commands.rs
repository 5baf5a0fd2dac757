use serde_json::{json, Value};

use cyclovan::arith::{euler_phi, factorize, moebius};
use cyclovan::cyclotomic::cyclotomic;
use cyclovan::search::{lowest_hn_members, verify_conjecture, SearchConfig};
use cyclovan::transform::{
    gap_profile, lam_leung_pq, lemma_s_witness, phi_t, phi_t_degree, phi_t_from_pq, sign_split, verify_theorem_2pq,
};
use cyclovan::vanish::{enumerate_minimal_sums, is_minimal_vanishing, ExponentSet};
use cyclovan::{Error, IntPolynomial, Result};

/// Largest order for which the CLI builds a cyclotomic polynomial.
pub const MAX_POLY_ORDER: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Request {
    Cyclo { n: usize },
    Phi { n: u64 },
    Mobius { n: u64 },
    Height { n: usize },
    Flat { n: usize },
    Transform { n: usize },
    Lamleung { p: usize, q: usize },
    Gaps { n: usize },
    Theorem2pq { p: usize, q: usize },
    Enumerate { n: usize, max_weight: usize },
    Search { n: usize, max_degree: usize, min_terms: usize },
    VerifyConjecture { p: usize, q: usize },
    LemmaS { n: usize },
}

impl Request {
    pub fn name(&self) -> &'static str {
        match self {
            Request::Cyclo { .. } => "cyclo",
            Request::Phi { .. } => "phi",
            Request::Mobius { .. } => "mobius",
            Request::Height { .. } => "height",
            Request::Flat { .. } => "flat",
            Request::Transform { .. } => "transform",
            Request::Lamleung { .. } => "lamleung",
            Request::Gaps { .. } => "gaps",
            Request::Theorem2pq { .. } => "theorem2pq",
            Request::Enumerate { .. } => "enumerate",
            Request::Search { .. } => "search",
            Request::VerifyConjecture { .. } => "verify-conjecture",
            Request::LemmaS { .. } => "lemma-s",
        }
    }

    pub fn parameters(&self) -> Value {
        match *self {
            Request::Cyclo { n }
            | Request::Height { n }
            | Request::Flat { n }
            | Request::Transform { n }
            | Request::Gaps { n }
            | Request::LemmaS { n } => json!({ "n": n }),
            Request::Phi { n } | Request::Mobius { n } => json!({ "n": n }),
            Request::Lamleung { p, q } | Request::Theorem2pq { p, q } | Request::VerifyConjecture { p, q } => {
                json!({ "p": p, "q": q })
            }
            Request::Enumerate { n, max_weight } => json!({ "n": n, "max_weight": max_weight }),
            Request::Search { n, max_degree, min_terms } => {
                json!({ "n": n, "max_degree": max_degree, "min_terms": min_terms })
            }
        }
    }

    pub fn cacheable(&self) -> bool {
        matches!(self, Request::Enumerate { .. } | Request::Search { .. } | Request::VerifyConjecture { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: Value,
    /// False when a mathematical check ran and failed.
    pub passed: bool,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Self { result, passed: true }
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::Overflow => "overflow",
        Error::DivisionByZero => "division_by_zero",
        Error::NonMonicDivisor => "non_monic_divisor",
        Error::NotFlat(_) => "not_flat",
        Error::SubsetBoundExceeded { .. } => "subset_bound_exceeded",
        Error::Structural(_) => "structural",
        Error::InstanceTooLarge(_) => "instance_too_large",
        Error::TooFewExponents(_) => "too_few_exponents",
        Error::Precondition(_) => "precondition",
    }
}

pub fn poly_json(f: &IntPolynomial) -> Value {
    let mut v = json!({
        "coeffs": f.coeffs(),
        "degree": f.degree(),
        "text": f.to_string(),
    });
    if f.is_zero_one() {
        v["exponents"] = json!(f.support());
    }
    v
}

fn cyclo_checked(n: usize) -> Result<IntPolynomial> {
    if n > MAX_POLY_ORDER {
        return Err(Error::InstanceTooLarge(format!("order {n} exceeds {MAX_POLY_ORDER}")));
    }
    cyclotomic(n)
}

pub fn execute(request: &Request) -> Result<Outcome> {
    match *request {
        Request::Cyclo { n } => {
            let f = cyclo_checked(n)?;
            Ok(Outcome::ok(json!({ "n": n, "polynomial": poly_json(&f), "height": f.height() })))
        }
        Request::Phi { n } => Ok(Outcome::ok(json!({ "n": n, "phi": euler_phi(n)? }))),
        Request::Mobius { n } => Ok(Outcome::ok(json!({ "n": n, "mobius": moebius(n)? }))),
        Request::Height { n } => Ok(Outcome::ok(json!({ "n": n, "height": cyclo_checked(n)?.height() }))),
        Request::Flat { n } => {
            let h = cyclo_checked(n)?.height();
            Ok(Outcome::ok(json!({ "n": n, "height": h, "flat": h == 1 })))
        }
        Request::Transform { n } => transform(n),
        Request::Lamleung { p, q } => lamleung(p, q),
        Request::Gaps { n } => gaps(n),
        Request::Theorem2pq { p, q } => {
            let v = verify_theorem_2pq(p, q)?;
            Ok(Outcome { passed: v.pass, result: serde_json::to_value(&v).expect("serializable") })
        }
        Request::Enumerate { n, max_weight } => {
            let classes: Vec<Value> = enumerate_minimal_sums(n, max_weight)?
                .iter()
                .map(|c| {
                    json!({
                        "exponents": c.class.canonical.exponents(),
                        "weight": c.weight,
                        "degree": c.class.canonical.degree(),
                        "orbit_size": c.orbit_size,
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({
                "n": n,
                "max_weight": max_weight.min(n),
                "count": classes.len(),
                "classes": classes,
            })))
        }
        Request::Search { n, max_degree, min_terms } => search(n, max_degree, min_terms),
        Request::VerifyConjecture { p, q } => {
            let (v, report) = verify_conjecture(p, q)?;
            let result = json!({
                "p": v.p,
                "q": v.q,
                "n": v.n,
                "predicted_degree": v.predicted_degree,
                "observed_degree": v.observed_degree,
                "exists_at_predicted": v.exists_at_predicted,
                "none_below": v.none_below,
                "expected_winners": v.expected_winners,
                "winners": v.winners,
                "winner_polynomials": v.winner_polynomials.iter().map(poly_json).collect::<Vec<_>>(),
                "other_winners": v.other_winners.iter().map(poly_json).collect::<Vec<_>>(),
                "multiples_found": report.found.len(),
                "match": v.matches,
            });
            Ok(Outcome { result, passed: v.matches })
        }
        Request::LemmaS { n } => lemma_s(n),
    }
}

fn transform(n: usize) -> Result<Outcome> {
    let phi = cyclo_checked(n)?;
    let t = phi_t(n)?;
    let split = sign_split(&phi)?;
    let divisible = t.is_divisible_by(&phi)?;
    let set = ExponentSet::from_polynomial(n, &t)?;
    // Too many free directions for the exact test is not a failure of Φ_n^T.
    let minimal = match is_minimal_vanishing(&set) {
        Ok(m) => Some(m),
        Err(Error::SubsetBoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let expected_degree = if factorize(n as u64)?.is_square_free() { Some(phi_t_degree(n)?) } else { None };
    let passed = divisible && minimal != Some(false) && expected_degree.is_none_or(|d| t.degree() == Some(d));
    let result = json!({
        "n": n,
        "phi_t": poly_json(&t),
        "f1": poly_json(&split.f1),
        "f2": poly_json(&split.f2),
        "expected_degree": expected_degree,
        "divisible": divisible,
        "minimal": minimal,
    });
    Ok(Outcome { result, passed })
}

fn lamleung(p: usize, q: usize) -> Result<Outcome> {
    let s = lam_leung_pq(p, q)?;
    let phi_pq = s.phi_pq()?;
    let phi_2pq = s.phi_2pq()?;
    let t = phi_t_from_pq(p, q)?;
    let reconstructs_phi_pq = phi_pq == cyclo_checked(p * q)?;
    let reconstructs_phi_2pq = phi_2pq == cyclo_checked(2 * p * q)?;
    let matches_phi_t = t == phi_t(2 * p * q)?;
    let result = json!({
        "p": p,
        "q": q,
        "r": s.r,
        "s": s.s,
        "a": s.a.exponents(),
        "b": s.b.exponents(),
        "c": s.c.exponents(),
        "d": s.d.exponents(),
        "phi_pq": poly_json(&phi_pq),
        "phi_t": poly_json(&t),
        "reconstructs_phi_pq": reconstructs_phi_pq,
        "reconstructs_phi_2pq": reconstructs_phi_2pq,
        "matches_phi_t": matches_phi_t,
    });
    Ok(Outcome { result, passed: reconstructs_phi_pq && reconstructs_phi_2pq && matches_phi_t })
}

fn max_gap(e: &ExponentSet) -> Result<usize> {
    Ok(gap_profile(e)?.into_iter().max().unwrap_or(0))
}

fn gaps(n: usize) -> Result<Outcome> {
    let t = phi_t(n)?;
    let e = ExponentSet::from_polynomial(n, &t)?;
    let profile = gap_profile(&e)?;
    let largest = profile.iter().copied().max().unwrap_or(0);
    let f = factorize(n as u64)?;
    let primes: Vec<usize> = f.primes().map(|p| p as usize).collect();
    let (pq, passed) = if f.is_square_free() && primes.len() == 3 && primes[0] == 2 {
        let (p, q) = (primes[1], primes[2]);
        let s = lam_leung_pq(p, q)?;
        let (gap_a, gap_b) = (max_gap(&s.a)?, max_gap(&s.b)?);
        let expected = 2 * p + q - 1;
        let passed = largest == expected && gap_a <= p + q && gap_b <= p + q;
        let detail = json!({
            "p": p,
            "q": q,
            "expected_max_gap": expected,
            "max_gap_a": gap_a,
            "max_gap_b": gap_b,
            "gap_bound_ab": p + q,
        });
        (detail, passed)
    } else {
        (Value::Null, true)
    };
    let result = json!({
        "n": n,
        "exponents": e.exponents(),
        "gaps": profile,
        "max_gap": largest,
        "pq": pq,
    });
    Ok(Outcome { result, passed })
}

fn search(n: usize, max_degree: usize, min_terms: usize) -> Result<Outcome> {
    let config = SearchConfig::new(n, max_degree)?.with_min_terms(min_terms)?;
    let report = lowest_hn_members(&config)?;
    let members: Vec<Value> = report
        .found
        .iter()
        .filter(|f| f.minimal && f.canonical_in_class && f.term_count >= min_terms)
        .map(|f| json!({ "polynomial": poly_json(&f.polynomial), "term_count": f.term_count }))
        .collect();
    let lowest: Vec<Value> = report.lowest_degree_minimal.iter().flatten().map(poly_json).collect();
    Ok(Outcome::ok(json!({
        "n": n,
        "max_degree": max_degree,
        "min_terms": min_terms,
        "multiples_found": report.found.len(),
        "members": members,
        "lowest_degree": report.lowest_degree(),
        "lowest": lowest,
    })))
}

fn lemma_s(n: usize) -> Result<Outcome> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{n} is not an even integer >= 2")));
    }
    let phi = euler_phi(n as u64)? as usize;
    let degree_bound = n / 2 + phi;
    let config = SearchConfig::new(n, (degree_bound - 1).min(n - 1))?;
    let report = lowest_hn_members(&config)?;
    let mut members = Vec::new();
    let mut violations = Vec::new();
    for f in report.found.iter().filter(|f| f.minimal && f.canonical_in_class && f.term_count >= 3) {
        match lemma_s_witness(&f.polynomial, n, false)? {
            Some(s) => members.push(json!({ "polynomial": poly_json(&f.polynomial), "witness": s })),
            None => violations.push(poly_json(&f.polynomial)),
        }
    }
    let passed = violations.is_empty();
    Ok(Outcome {
        result: json!({
            "n": n,
            "phi": phi,
            "degree_bound": degree_bound,
            "checked": members.len() + violations.len(),
            "members": members,
            "violations": violations,
            "pass": passed,
        }),
        passed,
    })
}
