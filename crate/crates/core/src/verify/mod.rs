//! Verification suites over a corpus of groups.
//!
//! Each corpus entry is built and analyzed once, in parallel; the suites
//! then read the shared analyses. Reports list checks in a fixed order, so
//! identical corpora and seeds give identical reports apart from timings.

pub mod corpus;
pub mod lemmas;

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{factorize, gcd};
use crate::classgraph::{class_size_set, ClassSizeSet};
use crate::classifier::{check_corollary1, classify, Evidence, SpClassification, Verdict};
use crate::error::{Error, Result};
use crate::families::FamilyRequest;
use crate::groups::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::predicates::{predicates, PredicateReport};
use crate::specfile::parse_group_spec;

pub use corpus::{
    bundled_corpus, expected_n_linear, load_corpus_dir, CorpusEntry, Expectation, LinearKind, Provenance, Source,
};

pub const DEFAULT_SEED: u64 = 0x5eed_c1a5;
/// Minimum number of sampled tuples across all sampled groups.
pub const MIN_SAMPLED_TUPLES: usize = 10_000;
/// Order of the cover of `PSL(2,9)` checked by the cover suite.
pub const SCHUR_COVER_ORDER: usize = 2160;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>, started: Instant) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        });
    }

    fn skip(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
            elapsed_ms: 0.0,
        });
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} passed, {} failed, {} skipped",
            self.suite,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        )?;
        for c in &self.checks {
            if c.status != Status::Pass {
                let tag = if c.status == Status::Fail { "FAIL" } else { "SKIPPED" };
                writeln!(f, "  {tag} {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// One built and analyzed corpus entry.
pub struct Analyzed {
    pub entry: CorpusEntry,
    pub group: FiniteGroup,
    pub sizes: ClassSizeSet,
    pub predicates: PredicateReport,
    pub classification: SpClassification,
}

pub struct Corpus {
    pub entries: Vec<Analyzed>,
    /// Entries that could not be built or analyzed.
    pub errors: Vec<(String, Error)>,
}

impl Corpus {
    pub fn analyze(entries: Vec<CorpusEntry>, cap: usize) -> Corpus {
        let results: Vec<std::result::Result<Analyzed, (String, Error)>> = entries
            .into_par_iter()
            .map(|entry| {
                let built = (|| -> Result<_> {
                    let group = entry.build(cap)?;
                    let sizes = class_size_set(&group)?;
                    let predicates = predicates(&group)?;
                    let classification = classify(&group)?;
                    Ok((group, sizes, predicates, classification))
                })();
                match built {
                    Ok((group, sizes, predicates, classification)) => Ok(Analyzed {
                        entry,
                        group,
                        sizes,
                        predicates,
                        classification,
                    }),
                    Err(e) => Err((entry.name, e)),
                }
            })
            .collect();
        let (mut entries, mut errors) = (Vec::new(), Vec::new());
        for r in results {
            match r {
                Ok(a) => entries.push(a),
                Err(e) => errors.push(e),
            }
        }
        Corpus { entries, errors }
    }

    pub fn get(&self, name: &str) -> Option<&Analyzed> {
        self.entries.iter().find(|a| a.entry.name == name)
    }

    fn by_family(&self, request: &FamilyRequest) -> Option<&Analyzed> {
        self.entries.iter().find(|a| a.entry.family() == Some(request))
    }

    fn sp_entries(&self) -> impl Iterator<Item = &Analyzed> {
        self.entries.iter().filter(|a| a.predicates.sp && a.sizes.rank() > 0)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub corpus_dir: Option<PathBuf>,
    pub schur_cover: Option<PathBuf>,
    pub seed: u64,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            corpus_dir: None,
            schur_cover: None,
            seed: DEFAULT_SEED,
            cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// Bundled corpus plus any directory entries, analyzed, then every suite.
pub fn run_all(options: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    let mut entries = bundled_corpus();
    if let Some(dir) = &options.corpus_dir {
        entries.extend(load_corpus_dir(dir)?);
    }
    let corpus = Corpus::analyze(entries, options.cap);
    Ok(vec![
        run_expectations_suite(&corpus),
        run_theorem1_suite(&corpus),
        run_theorem2_suite(&corpus),
        run_corollary_suite(&corpus),
        run_lemma_invariants(&corpus, options.seed),
        run_schur_cover_check(options.schur_cover.as_deref(), options.cap),
    ])
}

fn linear_request(r: &FamilyRequest) -> Option<(LinearKind, u64)> {
    match r {
        FamilyRequest::Sl2 { q } => Some((LinearKind::Sl2, *q)),
        FamilyRequest::Gl2 { q } => Some((LinearKind::Gl2, *q)),
        _ => None,
    }
}

/// Stored orders, class-size sets and verdicts, with formula-backed sets
/// recomputed from the formula.
pub fn run_expectations_suite(corpus: &Corpus) -> SuiteReport {
    let mut report = SuiteReport::new("expectations");
    for (name, e) in &corpus.errors {
        report.push(format!("build {name}"), false, e.to_string(), Instant::now());
    }
    for a in &corpus.entries {
        let t = Instant::now();
        let Some(exp) = &a.entry.expectation else {
            report.skip(a.entry.name.clone(), "no expectation recorded");
            continue;
        };
        let mut problems = Vec::new();
        if let Some(o) = exp.order {
            if o != a.sizes.order {
                problems.push(format!("order {} != expected {o}", a.sizes.order));
            }
        }
        if let Some(n) = &exp.n_set {
            if *n != a.sizes.n_set {
                problems.push(format!("N = {:?} != expected {n:?}", a.sizes.n_set));
            }
        }
        if let Some(v) = exp.verdict {
            if v != a.classification.verdict {
                problems.push(format!("verdict {} != expected {v}", a.classification.verdict));
            }
        }
        if let Some((kind, q)) = a.entry.family().and_then(linear_request) {
            if let Ok((set, provenance)) = expected_n_linear(kind, q) {
                if set != a.sizes.n_set {
                    problems.push(format!("N = {:?} but the {provenance:?} set is {set:?}", a.sizes.n_set));
                }
            }
        }
        let ok = problems.is_empty();
        let detail = if ok {
            format!(
                "order {}, N = {:?}, {}",
                a.sizes.order, a.sizes.n_set, a.classification.verdict
            )
        } else {
            problems.join("; ")
        };
        report.push(a.entry.name.clone(), ok, detail, t);
    }
    report
}

/// `sp => ch` for every entry, strictness via an SP-free CA group, and the
/// chain `ca => ch => f`.
pub fn run_theorem1_suite(corpus: &Corpus) -> SuiteReport {
    let mut report = SuiteReport::new("inclusions");
    let t = Instant::now();
    let sp_not_ch: Vec<&str> = corpus
        .entries
        .iter()
        .filter(|a| a.predicates.sp && !a.predicates.ch)
        .map(|a| a.entry.name.as_str())
        .collect();
    report.push(
        "sp implies ch",
        sp_not_ch.is_empty(),
        format!("{} groups, exceptions {sp_not_ch:?}", corpus.entries.len()),
        t,
    );

    let t = Instant::now();
    let broken: Vec<&str> = corpus
        .entries
        .iter()
        .filter(|a| {
            let p = &a.predicates;
            (p.ca && !p.ch) || (p.ch && !p.f)
        })
        .map(|a| a.entry.name.as_str())
        .collect();
    report.push(
        "ca implies ch implies f",
        broken.is_empty(),
        format!("{} groups, exceptions {broken:?}", corpus.entries.len()),
        t,
    );

    let t = Instant::now();
    match corpus.by_family(&FamilyRequest::Remark { p: 3 }) {
        Some(a) => {
            let p = &a.predicates;
            report.push(
                "ch strictly contains sp",
                p.ca && p.ch && !p.sp,
                format!(
                    "{}: ca {}, ch {}, sp {}, witness {:?}",
                    a.entry.name, p.ca, p.ch, p.sp, p.sp_witness
                ),
                t,
            );
        }
        None => report.push("ch strictly contains sp", false, "remark(3) missing from corpus", t),
    }
    report
}

fn intended_verdict(a: &Analyzed) -> Option<Verdict> {
    a.entry.expectation.as_ref().and_then(|e| e.verdict)
}

const RECOGNIZED: [Verdict; 5] = [
    Verdict::TypeI,
    Verdict::TypeII,
    Verdict::TypeIII,
    Verdict::TypeIV,
    Verdict::TypeV,
];

/// Forward and backward directions of the SP classification, the linear
/// class-size formulas and `N(T x P) = N(P)`.
pub fn run_theorem2_suite(corpus: &Corpus) -> SuiteReport {
    let mut report = SuiteReport::new("classification");

    for a in corpus.sp_entries() {
        let t = Instant::now();
        let v = a.classification.verdict;
        let whitelisted = v == Verdict::Unrecognized && intended_verdict(a) == Some(Verdict::Unrecognized);
        report.push(
            format!("forward {}", a.entry.name),
            RECOGNIZED.contains(&v) || whitelisted,
            format!(
                "{v}{}",
                a.classification
                    .reason
                    .as_ref()
                    .map(|r| format!(" ({r})"))
                    .unwrap_or_default()
            ),
            t,
        );
    }

    for a in &corpus.entries {
        let Some(intended) = intended_verdict(a).filter(|v| RECOGNIZED.contains(v)) else {
            continue;
        };
        let t = Instant::now();
        let c = &a.classification;
        report.push(
            format!("backward {}", a.entry.name),
            a.predicates.sp && c.verdict == intended,
            format!(
                "intended {intended}, got {} (sp {}, passing {:?})",
                c.verdict,
                a.predicates.sp,
                c.passing()
            ),
            t,
        );
    }

    for a in &corpus.entries {
        if RECOGNIZED.contains(&a.classification.verdict) && !a.predicates.sp {
            report.push(
                format!("recognized is sp {}", a.entry.name),
                false,
                "recognized but not SP",
                Instant::now(),
            );
        }
        for e in &a.classification.evidence {
            let t = Instant::now();
            match *e {
                Evidence::TypeII {
                    kernel_quotient,
                    complement_quotient,
                    ..
                } => report.push(
                    format!("coprime kernel and complement {}", a.entry.name),
                    gcd(kernel_quotient as u64, complement_quotient as u64) == 1,
                    format!("|K/Z| = {kernel_quotient}, |L/Z| = {complement_quotient}"),
                    t,
                ),
                Evidence::TypeIII {
                    index_relation,
                    l_order,
                    z_order,
                    ..
                } => report.push(
                    format!("index relation {}", a.entry.name),
                    index_relation,
                    format!("Ind(G,x) = Ind(P,x) * {} on P", l_order / z_order),
                    t,
                ),
                _ => {}
            }
        }
    }

    let formula_cases = [5u64, 7, 9, 11, 13]
        .map(|q| (LinearKind::Sl2, q))
        .into_iter()
        .chain([4u64, 5, 7, 8, 9].map(|q| (LinearKind::Gl2, q)));
    for (kind, q) in formula_cases {
        let t = Instant::now();
        let request = match kind {
            LinearKind::Sl2 => FamilyRequest::Sl2 { q },
            LinearKind::Gl2 => FamilyRequest::Gl2 { q },
        };
        let expected = expected_n_linear(kind, q).map(|(s, _)| s);
        match (corpus.by_family(&request), expected) {
            (Some(a), Ok(set)) => report.push(
                format!("formula {request}"),
                a.sizes.n_set == set,
                format!("enumerated {:?}, formula {set:?}", a.sizes.n_set),
                t,
            ),
            (None, _) => report.push(format!("formula {request}"), false, "missing from corpus", t),
            (_, Err(e)) => report.push(format!("formula {request}"), false, e.to_string(), t),
        }
    }

    let p_factor = FamilyRequest::regular(FamilyRequest::Heisenberg { p: 3 });
    for n in [5u64, 7] {
        let t = Instant::now();
        let request = FamilyRequest::product(FamilyRequest::Cyclic { n }, p_factor.clone());
        let p_sizes = corpus
            .by_family(&FamilyRequest::Heisenberg { p: 3 })
            .map(|a| a.sizes.n_set.clone());
        match (corpus.by_family(&request), p_sizes) {
            (Some(a), Some(np)) => report.push(
                format!("abelian factor {request}"),
                a.sizes.n_set == np,
                format!("N = {:?}, N(P) = {np:?}", a.sizes.n_set),
                t,
            ),
            _ => report.push(format!("abelian factor {request}"), false, "missing from corpus", t),
        }
    }
    report
}

/// Rank-2 SP groups have a solvable Frobenius central quotient; SP groups
/// have at most three class sizes above 1.
pub fn run_corollary_suite(corpus: &Corpus) -> SuiteReport {
    let mut report = SuiteReport::new("sp structure");
    for a in corpus.sp_entries() {
        let t = Instant::now();
        let rank = a.sizes.rank();
        report.push(
            format!("rank at most 3 {}", a.entry.name),
            rank <= 3,
            format!("N = {:?}", a.sizes.n_set),
            t,
        );
        if rank == 2 {
            let t = Instant::now();
            let r = check_corollary1(&a.group);
            report.push(
                format!("solvable frobenius quotient {}", a.entry.name),
                matches!(r, Ok(true)),
                match r {
                    Ok(b) => format!("N = {:?}, holds {b}", a.sizes.n_set),
                    Err(e) => e.to_string(),
                },
                t,
            );
        }
    }
    report
}

/// Quotient and centralizer facts on every entry, the `P/Z(P)` fact on
/// nonabelian `p`-groups, the coprime-action decomposition on affine and
/// third-shape kernels, and the direct-factor criterion.
pub fn run_lemma_invariants(corpus: &Corpus, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("invariants");

    let sampled: Vec<&Analyzed> = corpus
        .entries
        .iter()
        .filter(|a| a.group.len() > lemmas::EXHAUSTIVE_ORDER)
        .collect();
    let per_group = MIN_SAMPLED_TUPLES.div_ceil(sampled.len().max(1));
    let tallies: Vec<(String, bool, Result<lemmas::Tally>, f64)> = corpus
        .entries
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let t = Instant::now();
            let exhaustive = a.group.len() <= lemmas::EXHAUSTIVE_ORDER;
            let r = if exhaustive {
                lemmas::quotient_facts_exhaustive(&a.group)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
                lemmas::quotient_facts_sampled(&a.group, &mut rng, per_group)
            };
            (a.entry.name.clone(), exhaustive, r, t.elapsed().as_secs_f64() * 1e3)
        })
        .collect();
    let (mut exhaustive_tuples, mut sampled_tuples) = (0, 0);
    for (name, exhaustive, r, ms) in tallies {
        let mode = if exhaustive { "exhaustive" } else { "sampled" };
        let (ok, detail) = match r {
            Ok(t) => {
                if exhaustive {
                    exhaustive_tuples += t.tuples;
                } else {
                    sampled_tuples += t.tuples;
                }
                (
                    t.violations.is_empty(),
                    format!("{} {mode} tuples {}", t.tuples, t.violations.join("; ")),
                )
            }
            Err(e) => (false, e.to_string()),
        };
        report.checks.push(CheckResult {
            name: format!("quotient centralizers {name}"),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.trim_end().to_string(),
            elapsed_ms: ms,
        });
    }
    let t = Instant::now();
    report.push(
        "sampled tuple count",
        sampled_tuples >= MIN_SAMPLED_TUPLES || sampled.is_empty(),
        format!("{sampled_tuples} sampled, {exhaustive_tuples} exhaustive"),
        t,
    );

    for a in &corpus.entries {
        let t = Instant::now();
        match lemmas::center_quotient_not_cyclic(&a.group) {
            Ok(None) => {}
            Ok(Some(ok)) => report.push(format!("center quotient not cyclic {}", a.entry.name), ok, "", t),
            Err(e) => report.push(
                format!("center quotient not cyclic {}", a.entry.name),
                false,
                e.to_string(),
                t,
            ),
        }
    }

    for a in &corpus.entries {
        let Some(request) = a.entry.family() else { continue };
        let t = Instant::now();
        let name = format!("coprime action {}", a.entry.name);
        let outcome = match request {
            FamilyRequest::Type3 { p, .. } => a
                .group
                .quotient(&a.group.center().expect("enumerated"))
                .and_then(|q| lemmas::coprime_action_decomposition(q.group(), *p)),
            other => match corpus::affine_prime(other) {
                Some(p) => lemmas::coprime_action_decomposition(&a.group, p),
                None => continue,
            },
        };
        match outcome {
            Ok(Some(d)) => report.push(
                name,
                d.holds,
                format!(
                    "|P| = {}, |A| = {}, |C_P(A)| = {}, |[P,A]| = {}",
                    d.p_order, d.acting_order, d.fixed, d.commutator
                ),
                t,
            ),
            Ok(None) => report.push(name, false, "no abelian normal Sylow with a complement", t),
            Err(e) => report.push(name, false, e.to_string(), t),
        }
    }

    let t = Instant::now();
    let mut applicable = 0;
    let mut broken = Vec::new();
    for a in &corpus.entries {
        for (p, _) in factorize(a.group.len() as u64) {
            match lemmas::sylow_direct_factor(&a.group, p) {
                Ok(None) => {}
                Ok(Some(true)) => applicable += 1,
                Ok(Some(false)) => broken.push(format!("{} at p = {p}", a.entry.name)),
                Err(e) => broken.push(format!("{}: {e}", a.entry.name)),
            }
        }
    }
    report.push(
        "sylow direct factor",
        broken.is_empty(),
        format!("{applicable} applicable (group, prime) pairs; violations {broken:?}"),
        t,
    );
    report
}

/// Checks an externally supplied generator file for the order-2160 cover
/// of `PSL(2,9)`. Skipped when no file is supplied or it does not exist.
pub fn run_schur_cover_check(path: Option<&Path>, cap: usize) -> SuiteReport {
    let mut report = SuiteReport::new("schur cover");
    let name = "cover of PSL(2,9)";
    let Some(path) = path else {
        report.skip(name, "no generator file supplied");
        return report;
    };
    if !path.exists() {
        report.skip(name, format!("{} not found", path.display()));
        return report;
    }
    let t = Instant::now();
    let outcome = (|| -> Result<(usize, Vec<u64>, bool)> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        let g = parse_group_spec(&bytes, "schur_cover", cap)?;
        let order = g.order()?;
        if order != SCHUR_COVER_ORDER {
            return Ok((order, Vec::new(), false));
        }
        let n = class_size_set(&g)?.n_set;
        let sp = crate::predicates::is_sp(&g)?.0;
        Ok((order, n, sp))
    })();
    match outcome {
        Ok((order, n, sp)) => report.push(
            name,
            order == SCHUR_COVER_ORDER && n == [72, 90, 120] && sp,
            if order != SCHUR_COVER_ORDER {
                format!("order {order}, expected {SCHUR_COVER_ORDER}")
            } else {
                format!("order {order}, N = {n:?}, sp {sp}")
            },
            t,
        ),
        Err(e) => report.push(name, false, e.to_string(), t),
    }
    report
}
