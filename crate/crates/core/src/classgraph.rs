//! Class-size sets and the divisibility-cover digraph on them.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Class sizes of a group: the full sorted multiset and the set `N` of
/// sizes other than 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSizeSet {
    pub order: u64,
    pub sizes: Vec<u64>,
    #[serde(rename = "N")]
    pub n_set: Vec<u64>,
}

impl ClassSizeSet {
    /// Number of distinct nontrivial class sizes.
    pub fn rank(&self) -> usize {
        self.n_set.len()
    }
}

pub fn class_size_set(g: &FiniteGroup) -> Result<ClassSizeSet> {
    let mut sizes: Vec<u64> = g.conjugacy_classes()?.iter().map(|c| c.size as u64).collect();
    sizes.sort_unstable();
    let mut n_set: Vec<u64> = sizes.iter().copied().filter(|&s| s != 1).collect();
    n_set.dedup();
    Ok(ClassSizeSet {
        order: g.len() as u64,
        sizes,
        n_set,
    })
}

/// Vertices are the given integers; `(x, y)` is an edge when `x | y` and no
/// third vertex `z` has `x | z | y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDigraph {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

fn normalize(theta: &[u64]) -> Result<Vec<u64>> {
    if let Some(bad) = theta.iter().find(|&&t| t <= 1) {
        return Err(Error::invalid(format!("vertex {bad} must be greater than 1")));
    }
    let mut v = theta.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

pub fn build_gamma(theta: &[u64]) -> Result<CoverDigraph> {
    let vertices = normalize(theta)?;
    let mut edges = Vec::new();
    for &x in &vertices {
        for &y in &vertices {
            if x == y || y % x != 0 {
                continue;
            }
            let blocked = vertices.iter().any(|&z| z != x && z != y && z % x == 0 && y % z == 0);
            if !blocked {
                edges.push([x, y]);
            }
        }
    }
    edges.sort_unstable();
    Ok(CoverDigraph { vertices, edges })
}

/// No member divides another; equivalently the cover digraph has no edges.
pub fn is_primitive(theta: &[u64]) -> Result<bool> {
    Ok(build_gamma(theta)?.edges.is_empty())
}

/// First pair `(a, b)` with `a | b`, `a < b`, in ascending order.
pub fn divisor_pair(theta: &[u64]) -> Result<Option<(u64, u64)>> {
    let v = normalize(theta)?;
    for (i, &a) in v.iter().enumerate() {
        if let Some(&b) = v[i + 1..].iter().find(|&&b| b % a == 0) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl CoverDigraph {
    pub fn export(&self, format: ExportFormat) -> Vec<u8> {
        match format {
            ExportFormat::Dot => self.to_dot().into_bytes(),
            ExportFormat::Json => serde_json::to_vec(self).expect("plain integers serialize"),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph gamma {\n");
        for v in &self.vertices {
            writeln!(out, "    {v} [label=\"{v}\"];").unwrap();
        }
        for [x, y] in &self.edges {
            writeln!(out, "    {x} -> {y};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
