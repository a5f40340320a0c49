//! Property verification over corpora of digraphs.
//!
//! Every identity is checked per digraph; results are merged in corpus
//! order, so the summary is identical for any degree of parallelism.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::{all_digraphs, random_digraph, Digraph};
use crate::error::{Error, Result};
use crate::hamilton::{ham_bruteforce, ham_cycles, ham_detper, ham_dp, parity_suite, wiseman_check, CycleRoute};
use crate::redei::{
    applicable_routes, chow_xi, compute_all, hook_coefficient, path_sequence_polynomial, u_tournament,
    u_via_powersum_gs, verify_chow_identities, ChowRoute,
};
use crate::symfun::Rational;
use crate::walks::verify_walk_identity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corpus {
    /// every digraph (loops allowed) on `n` vertices
    Exhaustive(usize),
    Random { n: usize, count: usize },
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad corpus `{s}` (expected exhaustive3, exhaustive:N or random:n,count)"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("exhaustive") {
            let n = rest.trim_start_matches(':');
            return n.parse().map(Corpus::Exhaustive).map_err(|_| bad());
        }
        let rest = s.strip_prefix("random:").ok_or_else(bad)?;
        let (n, count) = rest.split_once(',').ok_or_else(bad)?;
        Ok(Corpus::Random {
            n: n.trim().parse().map_err(|_| bad())?,
            count: count.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Exhaustive(n) => write!(f, "exhaustive:{n}"),
            Corpus::Random { n, count } => write!(f, "random:{n},{count}"),
        }
    }
}

impl Corpus {
    /// The digraphs of the corpus. Random items draw their edge density
    /// from `[0.15, 0.85]`; everything is a function of `seed`.
    pub fn digraphs(&self, seed: u64) -> Result<Vec<Digraph>> {
        match *self {
            Corpus::Exhaustive(n) => Ok(all_digraphs(n)?.collect()),
            Corpus::Random { n, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let p = rng.gen_range(0.15..=0.85);
                        random_digraph(n, p, rng.gen())
                    })
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
    /// not applicable, or beyond a size guard
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub index: usize,
    /// the offending digraph in the text format
    pub digraph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub corpus: String,
    pub seed: u64,
    pub digraphs: usize,
    pub tallies: BTreeMap<String, Tally>,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(if cond { Outcome::Pass } else { Outcome::Fail(detail()) })
}

type Check = fn(&Digraph, u64) -> Result<Outcome>;

/// Identity name and checker, in report order.
const CHECKS: &[(&str, Check)] = &[
    ("u-routes-agree", |d, _| {
        compute_all(d, &applicable_routes(d))?;
        Ok(Outcome::Pass)
    }),
    ("u-omega-complement", |d, _| {
        let u = u_via_powersum_gs(d)?;
        let c = u_via_powersum_gs(&d.complement())?;
        check(u.omega() == c, || format!("ω(U_D) = {} but U of complement = {c}", u.omega()))
    }),
    ("u-opposite", |d, _| {
        let u = u_via_powersum_gs(d)?;
        let o = u_via_powersum_gs(&d.opposite())?;
        check(u == o, || format!("{u} vs {o}"))
    }),
    ("u-path-sequences", |d, _| {
        let u = u_via_powersum_gs(d)?;
        let nvars = d.n().min(3);
        check(path_sequence_polynomial(d, nvars)? == u.specialize(nvars)?, || {
            format!("sequence count differs from U in {nvars} variables")
        })
    }),
    ("p-positivity", |d, _| {
        if d.has_two_cycle() {
            return Ok(Outcome::Skip);
        }
        let u = u_via_powersum_gs(d)?;
        check(u.is_nonnegative(), || format!("U = {u}"))
    }),
    ("tournament-form", |d, _| {
        if !d.is_tournament() {
            return Ok(Outcome::Skip);
        }
        let t = u_tournament(d)?;
        let u = u_via_powersum_gs(d)?;
        let ham_bar = ham_bruteforce(&d.complement())?;
        check(t == u && t.eval_at_single_one()? == Rational::from_integer(ham_bar.clone()), || {
            format!("tournament form {t}, U = {u}, ham of complement {ham_bar}")
        })
    }),
    ("hook-coefficients", |d, _| {
        for i in 1..=d.n() {
            hook_coefficient(d, i)?;
        }
        Ok(Outcome::Pass)
    }),
    ("chow-direct-powersum", |d, _| {
        let a = chow_xi(d, ChowRoute::Direct)?;
        let b = chow_xi(d, ChowRoute::Powersum)?;
        let u = u_via_powersum_gs(&d.complement())?;
        check(a == b && chow_xi(d, ChowRoute::Direct)?.set_y_zero() == u, || {
            format!("first difference {:?}", a.first_difference(&b))
        })
    }),
    ("chow-identities", |d, _| {
        let r = verify_chow_identities(d)?;
        check(r.involution && r.hat_involution, || r.failure.unwrap_or_default())
    }),
    ("ham-paths", |d, _| {
        let a = ham_detper(d)?;
        let b = ham_dp(d)?;
        let c = ham_bruteforce(d)?;
        check(a == b && b == c, || format!("det-per {a}, dp {b}, brute force {c}"))
    }),
    ("ham-cycles", |d, _| {
        if d.n() == 0 {
            return Ok(Outcome::Skip);
        }
        let want = ham_cycles(d, CycleRoute::BruteForce)?;
        let mut got: Vec<BigInt> = vec![ham_cycles(d, CycleRoute::FormulaB)?];
        for i in 0..d.n() {
            got.push(ham_cycles(d, CycleRoute::FormulaA(i))?);
        }
        check(got.iter().all(|g| *g == want), || format!("brute force {want}, formulas {got:?}"))
    }),
    ("parity", |d, _| {
        let r = parity_suite(d)?;
        check(r.passed(), || format!("{r:?}"))
    }),
    ("wiseman", |d, _| {
        if !d.is_acyclic() {
            return Ok(Outcome::Skip);
        }
        let r = wiseman_check(d)?;
        check(r.passed, || format!("{r:?}"))
    }),
    ("walk-identity", |d, seed| {
        let r = verify_walk_identity(d, 2 * d.n() + 1, 3, seed)?;
        check(r.passed, || r.failure.unwrap_or_default())
    }),
];

pub fn identity_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

fn run_one(d: &Digraph, seed: u64) -> Vec<Outcome> {
    CHECKS
        .iter()
        .map(|(_, f)| match f(d, seed) {
            Ok(o) => o,
            Err(Error::Guard { .. }) => Outcome::Skip,
            Err(e) => Outcome::Fail(e.to_string()),
        })
        .collect()
}

/// Checks every identity on every digraph of `corpus`. `jobs = 0` uses
/// rayon's default pool.
pub fn verify_corpus(corpus: Corpus, seed: u64, jobs: usize) -> Result<VerifySummary> {
    let graphs = corpus.digraphs(seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let outcomes: Vec<Vec<Outcome>> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, d)| run_one(d, seed.wrapping_add(i as u64)))
            .collect()
    });

    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut failures = Vec::new();
    for (index, (d, row)) in graphs.iter().zip(outcomes).enumerate() {
        for ((name, _), outcome) in CHECKS.iter().zip(row) {
            let t = tallies.entry(name.to_string()).or_default();
            match outcome {
                Outcome::Pass => {
                    t.checked += 1;
                    t.passed += 1;
                }
                Outcome::Skip => t.skipped += 1,
                Outcome::Fail(detail) => {
                    t.checked += 1;
                    failures.push(Failure {
                        identity: name.to_string(),
                        index,
                        digraph: d.to_text(),
                        detail,
                    });
                }
            }
        }
    }
    Ok(VerifySummary {
        corpus: corpus.to_string(),
        seed,
        digraphs: graphs.len(),
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_grammar() {
        assert_eq!("exhaustive3".parse::<Corpus>().unwrap(), Corpus::Exhaustive(3));
        assert_eq!("exhaustive:2".parse::<Corpus>().unwrap(), Corpus::Exhaustive(2));
        assert_eq!("random:5,200".parse::<Corpus>().unwrap(), Corpus::Random { n: 5, count: 200 });
        assert!("random:5".parse::<Corpus>().is_err());
        assert!("everything".parse::<Corpus>().is_err());
        assert_eq!(Corpus::Exhaustive(3).digraphs(0).unwrap().len(), 512);
    }

    #[test]
    fn small_corpus_passes_deterministically() {
        let c = Corpus::Random { n: 4, count: 6 };
        let a = verify_corpus(c, 7, 1).unwrap();
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a.tallies.len(), identity_names().len());
        assert_eq!(a.tallies["ham-paths"].passed, 6);
        let b = verify_corpus(c, 7, 3).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert_eq!(Corpus::Random { n: 4, count: 3 }.digraphs(7).unwrap(), c.digraphs(7).unwrap()[..3]);
    }

    #[test]
    fn exhaustive_two_passes() {
        let s = verify_corpus(Corpus::Exhaustive(2), 0, 0).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.digraphs, 16);
    }
}
