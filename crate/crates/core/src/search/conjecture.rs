use serde::Serialize;

use super::{zero_one_multiples, SearchConfig};
use crate::error::Result;
use crate::poly::IntPolynomial;
use crate::transform::{lam_leung_pq, phi_t};
use crate::vanish::{canonicalize, g_family, is_minimal_vanishing_with, ExponentSet, ResidueTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoundMultiple {
    pub polynomial: IntPolynomial,
    pub degree: usize,
    pub term_count: usize,
    pub minimal: bool,
    /// Whether the exponent set is the representative of its rotation class.
    pub canonical_in_class: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub found: Vec<FoundMultiple>,
    /// All least-degree members of `H_n` with at least `min_terms` terms.
    pub lowest_degree_minimal: Option<Vec<IntPolynomial>>,
    pub conjecture_verdict: Option<ConjectureVerdict>,
}

impl SearchReport {
    pub fn lowest_degree(&self) -> Option<usize> {
        self.lowest_degree_minimal.as_ref().and_then(|v| v.first()).and_then(IntPolynomial::degree)
    }
}

/// Searches all 0,1-multiples up to `config.max_degree` and keeps the
/// minimal vanishing sums that represent their rotation class.
pub fn lowest_hn_members(config: &SearchConfig) -> Result<SearchReport> {
    let multiples = zero_one_multiples(config)?;
    let table = ResidueTable::new(config.n)?;
    let found = multiples
        .into_iter()
        .map(|f| {
            let set = ExponentSet::new(config.n, f.support())?;
            let minimal = is_minimal_vanishing_with(&set, &table)?;
            let canonical_in_class = canonicalize(&set).canonical == set;
            Ok(FoundMultiple {
                degree: f.degree().expect("nonzero multiple"),
                term_count: f.term_count(),
                polynomial: f,
                minimal,
                canonical_in_class,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let members: Vec<&FoundMultiple> =
        found.iter().filter(|f| f.term_count >= config.min_terms && f.minimal && f.canonical_in_class).collect();
    let lowest_degree_minimal = members
        .iter()
        .map(|f| f.degree)
        .min()
        .map(|deg| members.iter().filter(|f| f.degree == deg).map(|f| f.polynomial.clone()).collect());
    Ok(SearchReport { config: config.clone(), found, lowest_degree_minimal, conjecture_verdict: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    /// `min{n - 2q, n - 2p - q + 1}`.
    pub predicted_degree: usize,
    pub observed_degree: Option<usize>,
    pub exists_at_predicted: bool,
    pub none_below: bool,
    /// Labels from the case table: `g1` if `2p < q + 1`, `phiT` if
    /// `2p > q + 1`, both if equal.
    pub expected_winners: Vec<String>,
    /// Which of `g1` and `phiT` reach the observed least degree.
    pub winners: Vec<String>,
    pub winner_polynomials: Vec<IntPolynomial>,
    /// Least-degree members outside both named families.
    pub other_winners: Vec<IntPolynomial>,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn predicted_conjecture_degree(p: usize, q: usize) -> usize {
    let n = 2 * p * q;
    (n - 2 * q).min(n - 2 * p - q + 1)
}

/// `"g1"`, `"phiT"`, or `"other"`, comparing rotation classes.
pub fn classify_winner(f: &IntPolynomial, p: usize, q: usize) -> Result<&'static str> {
    let n = 2 * p * q;
    let class =
        |g: &IntPolynomial| -> Result<ExponentSet> { Ok(canonicalize(&ExponentSet::from_polynomial(n, g)?).canonical) };
    let c = class(f)?;
    if c == class(&g_family(n, p)?)? {
        Ok("g1")
    } else if c == class(&phi_t(n)?)? {
        Ok("phiT")
    } else {
        Ok("other")
    }
}

/// Checks one `n = 2pq` instance of the conjecture on the least degree of a
/// member of `H_n` with at least three terms.
pub fn verify_conjecture(p: usize, q: usize) -> Result<(ConjectureVerdict, SearchReport)> {
    lam_leung_pq(p, q)?;
    let n = 2 * p * q;
    let predicted_degree = predicted_conjecture_degree(p, q);
    let config = SearchConfig::new(n, predicted_degree)?;
    let mut report = lowest_hn_members(&config)?;

    let observed_degree = report.lowest_degree();
    let mut winners = Vec::new();
    let mut winner_polynomials = Vec::new();
    let mut other_winners = Vec::new();
    for f in report.lowest_degree_minimal.clone().unwrap_or_default() {
        match classify_winner(&f, p, q)? {
            "other" => other_winners.push(f),
            label => {
                winners.push(label.to_owned());
                winner_polynomials.push(f);
            }
        }
    }
    winners.sort();
    let expected_winners: Vec<String> = match (2 * p).cmp(&(q + 1)) {
        std::cmp::Ordering::Less => vec!["g1".into()],
        std::cmp::Ordering::Greater => vec!["phiT".into()],
        std::cmp::Ordering::Equal => vec!["g1".into(), "phiT".into()],
    };
    let exists_at_predicted = observed_degree == Some(predicted_degree);
    let none_below = observed_degree.is_none_or(|d| d >= predicted_degree);
    let matches = exists_at_predicted && none_below && winners == expected_winners;
    let verdict = ConjectureVerdict {
        p,
        q,
        n,
        predicted_degree,
        observed_degree,
        exists_at_predicted,
        none_below,
        expected_winners,
        winners,
        winner_polynomials,
        other_winners,
        matches,
    };
    report.conjecture_verdict = Some(verdict.clone());
    Ok((verdict, report))
}
