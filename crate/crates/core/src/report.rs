//! Full analysis of one group, as JSON and as plain text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classgraph::{build_gamma, class_size_set, CoverDigraph};
use crate::classifier::{classify, SpClassification};
use crate::error::Result;
use crate::groups::FiniteGroup;
use crate::predicates::{predicates, ElementPair, PredicateReport};

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub order: u64,
    pub center_order: u64,
    pub class_sizes: Vec<u64>,
    #[serde(rename = "N")]
    pub n_set: Vec<u64>,
    pub rank: usize,
    pub gamma: CoverDigraph,
    pub predicates: Value,
    pub classification: SpClassification,
}

/// Wall-clock milliseconds per analysis phase; kept apart from the report
/// so that the report itself is reproducible byte for byte.
pub type Timings = BTreeMap<&'static str, f64>;

pub struct Analysis {
    pub report: AnalysisReport,
    pub predicates: PredicateReport,
    pub timings: Timings,
}

pub fn analyze(g: &FiniteGroup) -> Result<Analysis> {
    let mut timings = Timings::new();
    let start = Instant::now();
    let mut lap = |name, t: &mut Instant| {
        timings.insert(name, t.elapsed().as_secs_f64() * 1e3);
        *t = Instant::now();
    };
    let mut t = Instant::now();
    g.enumerate()?;
    lap("enumerate", &mut t);
    let sizes = class_size_set(g)?;
    let center_order = g.center()?.order() as u64;
    lap("classes", &mut t);
    let gamma = build_gamma(&sizes.n_set)?;
    let preds = predicates(g)?;
    lap("predicates", &mut t);
    let classification = classify(g)?;
    lap("classify", &mut t);
    timings.insert("total", start.elapsed().as_secs_f64() * 1e3);

    let report = AnalysisReport {
        name: g.name().to_string(),
        order: sizes.order,
        center_order,
        rank: sizes.rank(),
        class_sizes: sizes.sizes,
        n_set: sizes.n_set,
        gamma,
        predicates: predicates_json(g, &preds),
        classification,
    };
    Ok(Analysis {
        report,
        predicates: preds,
        timings,
    })
}

fn pair_json(g: &FiniteGroup, w: &ElementPair) -> Value {
    json!({
        "x": g.element(w.x).encoding(),
        "y": g.element(w.y).encoding(),
        "centralizer_orders": [w.centralizer_orders.0, w.centralizer_orders.1],
    })
}

fn predicates_json(g: &FiniteGroup, p: &PredicateReport) -> Value {
    json!({
        "sp": p.sp,
        "ch": p.ch,
        "ca": p.ca,
        "f": p.f,
        "witnesses": {
            "sp": p.sp_witness.map(|(a, b)| json!([a, b])),
            "ch": p.ch_witness.as_ref().map(|w| pair_json(g, w)),
            "ca": p.ca_witness.map(|x| json!({
                "x": g.element(x).encoding(),
                "centralizer_order": g.len() / g.class_size(x).unwrap_or(1),
            })),
            "f": p.f_witness.as_ref().map(|w| pair_json(g, w)),
        },
    })
}

impl Analysis {
    /// `{"report": ..., "timings_ms": ...}` with the report first.
    pub fn to_json(&self) -> String {
        let doc = json!({ "report": &self.report, "timings_ms": &self.timings });
        serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self, g: &FiniteGroup) -> String {
        let r = &self.report;
        let p = &self.predicates;
        let mut out = String::new();
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        writeln!(out, "group: {}", r.name).unwrap();
        writeln!(out, "order: {}", r.order).unwrap();
        writeln!(out, "center order: {}", r.center_order).unwrap();
        writeln!(out, "class sizes: {}", multiplicities(&r.class_sizes)).unwrap();
        writeln!(out, "N: {{{}}}", list(&r.n_set)).unwrap();
        writeln!(out, "rank: {}", r.rank).unwrap();
        if r.gamma.edges.is_empty() {
            writeln!(out, "gamma edges: none").unwrap();
        } else {
            let edges: Vec<String> = r.gamma.edges.iter().map(|[a, b]| format!("{a}->{b}")).collect();
            writeln!(out, "gamma edges: {}", edges.join(" ")).unwrap();
        }
        writeln!(out, "sp: {}  ch: {}  ca: {}  f: {}", p.sp, p.ch, p.ca, p.f).unwrap();
        if let Some((a, b)) = p.sp_witness {
            writeln!(out, "  sp witness: {a} divides {b}").unwrap();
        }
        let show = |w: &ElementPair| {
            format!(
                "{:?} and {:?} (centralizer orders {}, {})",
                g.element(w.x),
                g.element(w.y),
                w.centralizer_orders.0,
                w.centralizer_orders.1
            )
        };
        if let Some(w) = &p.ch_witness {
            writeln!(out, "  ch witness: {}", show(w)).unwrap();
        }
        if let Some(x) = p.ca_witness {
            writeln!(out, "  ca witness: {:?} has a nonabelian centralizer", g.element(x)).unwrap();
        }
        if let Some(w) = &p.f_witness {
            writeln!(out, "  f witness: {}", show(w)).unwrap();
        }
        let c = &r.classification;
        writeln!(out, "verdict: {}", c.verdict).unwrap();
        for e in &c.evidence {
            writeln!(out, "  {}", serde_json::to_string(e).unwrap()).unwrap();
        }
        if let Some(reason) = &c.reason {
            writeln!(out, "  reason: {reason}").unwrap();
        }
        out
    }
}

/// `1^2 12^4 20^2` style multiset summary.
fn multiplicities(sizes: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sizes.len() {
        let j = sizes[i..].iter().take_while(|&&s| s == sizes[i]).count();
        parts.push(if j == 1 {
            sizes[i].to_string()
        } else {
            format!("{}^{j}", sizes[i])
        });
        i += j;
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, field_for};

    #[test]
    fn report_contents() {
        let g = families::sl2(&field_for(9).unwrap()).unwrap();
        let a = analyze(&g).unwrap();
        assert_eq!(a.report.order, 720);
        assert_eq!(a.report.n_set, vec![40, 72, 90]);
        assert_eq!(a.report.center_order, 2);
        let v: Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(v["report"]["N"], json!([40, 72, 90]));
        assert_eq!(v["report"]["classification"]["verdict"], "TypeIV");
        assert!(v["timings_ms"]["total"].is_number());
        let text = a.to_text(&g);
        assert!(text.contains("N: {40, 72, 90}"), "{text}");
        assert!(text.contains("verdict: TypeIV"));
    }

    #[test]
    fn stable_section_is_reproducible() {
        let g = families::remark_group(3).unwrap();
        let one = serde_json::to_string(&analyze(&g).unwrap().report).unwrap();
        let g2 = families::remark_group(3).unwrap();
        let two = serde_json::to_string(&analyze(&g2).unwrap().report).unwrap();
        assert_eq!(one, two);
        let v: Value = serde_json::from_str(&one).unwrap();
        assert_eq!(v["predicates"]["witnesses"]["sp"], json!([3, 9]));
        assert_eq!(v["predicates"]["ca"], true);
        assert_eq!(v["gamma"]["edges"], json!([[3, 9]]));
    }

    #[test]
    fn multiplicity_summary() {
        assert_eq!(multiplicities(&[1, 1, 12, 20]), "1^2 12 20");
        assert_eq!(multiplicities(&[]), "");
    }
}
