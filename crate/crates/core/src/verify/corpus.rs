//! The bundled corpus, expectation records and corpus directories.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::prime_power;
use crate::classifier::Verdict;
use crate::error::{Error, Result};
use crate::families::FamilyRequest;
use crate::groups::FiniteGroup;
use crate::specfile::GroupSpecFile;

/// Where an expected value comes from: a closed formula or a value
/// established by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    #[serde(default)]
    pub order: Option<u64>,
    #[serde(default, rename = "N")]
    pub n_set: Option<Vec<u64>>,
    #[serde(default)]
    pub verdict: Option<Verdict>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone)]
pub enum Source {
    Family(FamilyRequest),
    Spec(GroupSpecFile),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub source: Source,
    pub expectation: Option<Expectation>,
}

impl CorpusEntry {
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let g = match &self.source {
            Source::Family(r) => r.build(cap)?,
            Source::Spec(s) => s.build(&self.name, cap)?,
        };
        g.enumerate()?;
        Ok(g)
    }

    pub fn family(&self) -> Option<&FamilyRequest> {
        match &self.source {
            Source::Family(r) => Some(r),
            Source::Spec(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearKind {
    Sl2,
    Gl2,
}

/// Class-size set of `SL(2,q)` or `GL(2,q)` from closed formulas. For
/// `SL(2,q)` with even `q` the formula with `(q^2-1)/2` does not apply; the
/// enumerated variant with `q^2-1` is returned and flagged `Derived`.
pub fn expected_n_linear(kind: LinearKind, q: u64) -> Result<(Vec<u64>, Provenance)> {
    if prime_power(q).is_none() || q < 4 {
        return Err(Error::invalid(format!("formula needs a prime power q >= 4, got {q}")));
    }
    let (mut set, provenance) = match kind {
        LinearKind::Sl2 if q % 2 == 1 => (vec![(q * q - 1) / 2, q * (q - 1), q * (q + 1)], Provenance::Formula),
        LinearKind::Sl2 => (vec![q * q - 1, q * (q - 1), q * (q + 1)], Provenance::Derived),
        LinearKind::Gl2 => (vec![q * (q - 1), q * q - 1, q * (q + 1)], Provenance::Formula),
    };
    set.sort_unstable();
    Ok((set, provenance))
}

fn entry(request: FamilyRequest, expectation: Expectation) -> CorpusEntry {
    CorpusEntry {
        name: request.to_string(),
        source: Source::Family(request),
        expectation: Some(expectation),
    }
}

fn derived(order: u64, n: &[u64], verdict: Verdict) -> Expectation {
    Expectation {
        order: Some(order),
        n_set: Some(n.to_vec()),
        verdict: Some(verdict),
        provenance: Provenance::Derived,
    }
}

fn formula(order: u64, n: Vec<u64>, verdict: Verdict) -> Expectation {
    Expectation {
        order: Some(order),
        n_set: Some(n),
        verdict: Some(verdict),
        provenance: Provenance::Formula,
    }
}

/// Groups covering every recognized shape, the named negative examples and
/// both rank corollaries.
pub fn bundled_corpus() -> Vec<CorpusEntry> {
    use FamilyRequest as F;
    use Verdict::*;
    let heis3 = || F::regular(F::Heisenberg { p: 3 });
    let mut c = vec![
        entry(F::Sym { n: 3 }, derived(6, &[2, 3], TypeII)),
        entry(F::Sym { n: 4 }, derived(24, &[3, 6, 8], NotSP)),
        entry(F::Sym { n: 5 }, derived(120, &[10, 15, 20, 24, 30], NotSP)),
        entry(F::Sym { n: 6 }, derived(720, &[15, 40, 45, 90, 120, 144], NotSP)),
        entry(F::Alt { n: 4 }, derived(12, &[3, 4], TypeII)),
        entry(F::Alt { n: 5 }, derived(60, &[12, 15, 20], TypeIV)),
        entry(F::Cyclic { n: 1 }, derived(1, &[], Abelian)),
        entry(F::Cyclic { n: 12 }, derived(12, &[], Abelian)),
        entry(F::ElemAbelian { p: 2, k: 3 }, derived(8, &[], Abelian)),
        entry(F::ElemAbelian { p: 3, k: 2 }, derived(9, &[], Abelian)),
        entry(F::Quaternion, derived(8, &[2], TypeI)),
        entry(F::Remark { p: 3 }, formula(81, vec![3, 9], NotSP)),
        entry(F::Remark { p: 5 }, formula(15625, vec![5, 625], NotSP)),
        entry(F::Gl2 { q: 3 }, derived(48, &[6, 8, 12], NotSP)),
        entry(F::Sl2 { q: 3 }, derived(24, &[4, 6], TypeIII)),
    ];
    for n in 3..=8u64 {
        let (n_set, verdict) = match n {
            4 => (vec![2], TypeI),
            8 => (vec![2, 4], NotSP),
            _ if n % 2 == 1 => (vec![2, n], TypeII),
            _ => (vec![2, n / 2], TypeII),
        };
        c.push(entry(F::Dihedral { n }, derived(2 * n, &n_set, verdict)));
    }
    for p in [3u64, 5, 7] {
        c.push(entry(F::Heisenberg { p }, derived(p.pow(3), &[p], TypeI)));
    }
    for q in [4u64, 5, 7, 8, 9] {
        c.push(entry(F::Agl1 { q }, derived(q * (q - 1), &[q - 1, q], TypeII)));
    }
    for (p, d) in [(3u64, 2u64), (5, 2), (7, 3), (13, 4)] {
        c.push(entry(
            F::Type3 { p, d },
            derived(p.pow(3) * d, &[d * p, p * p], TypeIII),
        ));
    }
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let (n_set, provenance) = expected_n_linear(LinearKind::Sl2, q).expect("q >= 4");
        let mut e = formula(q * (q * q - 1), n_set, TypeIV);
        e.provenance = provenance;
        c.push(entry(F::Sl2 { q }, e));
    }
    for q in [4u64, 5, 7, 8, 9] {
        let (n_set, _) = expected_n_linear(LinearKind::Gl2, q).expect("q >= 4");
        c.push(entry(F::Gl2 { q }, formula((q * q - 1) * (q * q - q), n_set, TypeIV)));
    }
    c.extend([
        entry(F::product(F::Cyclic { n: 5 }, heis3()), derived(135, &[3], TypeI)),
        entry(F::product(F::Cyclic { n: 7 }, heis3()), derived(189, &[3], TypeI)),
        entry(
            F::product(F::Agl1 { q: 4 }, F::Cyclic { n: 5 }),
            derived(60, &[3, 4], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 5 }, F::Cyclic { n: 3 }),
            derived(60, &[4, 5], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 5 }, F::Cyclic { n: 5 }),
            derived(100, &[4, 5], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 5 }, F::Cyclic { n: 7 }),
            derived(140, &[4, 5], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 7 }, F::Cyclic { n: 2 }),
            derived(84, &[6, 7], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 8 }, F::Cyclic { n: 3 }),
            derived(168, &[7, 8], TypeII),
        ),
        entry(
            F::product(F::Agl1 { q: 9 }, F::Cyclic { n: 2 }),
            derived(144, &[8, 9], TypeII),
        ),
        entry(
            F::product(F::regular(F::Sl2 { q: 5 }), F::Cyclic { n: 3 }),
            formula(360, vec![12, 20, 30], TypeIV),
        ),
        entry(
            F::product(F::Sym { n: 4 }, F::Cyclic { n: 2 }),
            derived(48, &[3, 6, 8], NotSP),
        ),
    ]);
    c
}

/// Spec files of a directory plus an optional `expectations.json` mapping
/// names to expectation records.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let io = |e: std::io::Error| Error::Io {
        path: dir.display().to_string(),
        source: e,
    };
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(io)?
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(io)?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut expectations: BTreeMap<String, Expectation> = BTreeMap::new();
    let mut entries = Vec::new();
    for path in paths {
        let bytes = fs::read(&path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("group").to_string();
        if stem == "expectations" {
            expectations = serde_json::from_slice(&bytes)?;
            continue;
        }
        let spec = GroupSpecFile::from_slice(&bytes).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
        entries.push(CorpusEntry {
            name: spec.name.clone().unwrap_or(stem),
            source: Source::Spec(spec),
            expectation: None,
        });
    }
    for e in &mut entries {
        e.expectation = expectations.remove(&e.name);
    }
    if let Some(name) = expectations.keys().next() {
        return Err(Error::invalid(format!("expectation for unknown corpus entry {name:?}")));
    }
    Ok(entries)
}

/// `(p, q)` when the entry is built as `AGL(1,q)`, possibly times a factor.
pub(crate) fn affine_prime(request: &FamilyRequest) -> Option<u64> {
    match request {
        FamilyRequest::Agl1 { q } => prime_power(*q).map(|(p, _)| p),
        FamilyRequest::Product { left, .. } => affine_prime(left),
        _ => None,
    }
}
