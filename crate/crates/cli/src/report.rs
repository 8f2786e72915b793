//! The single-document report every subcommand emits.
//!
//! Field order is fixed by declaration order and absent fields are omitted,
//! so a report is byte-stable for identical inputs. Exact counts travel as
//! decimal strings: JSON numbers are not wide enough for them.

use std::collections::BTreeMap;

use gangulate_core::convex_core::{Edge, GAngulation, Instance};
use gangulate_core::forbidden_configs::{Classification, ForbiddingClass};
use serde::Serialize;

/// Echo of a parsed instance file.
#[derive(Serialize)]
pub struct InputEcho {
    pub path: String,
    pub n: u32,
    pub g: u32,
    pub forbidden: usize,
    /// FNV-1a hash of the canonical serialization, as 16 hex digits.
    pub digest: String,
}

/// Witness angulation, edges and faces sorted.
#[derive(Serialize)]
pub struct WitnessEcho {
    pub diagonals: Vec<[u32; 2]>,
    pub faces: Vec<Vec<u32>>,
}

/// One reduction step of a blocking-family recognition.
#[derive(Serialize)]
pub struct StripEcho {
    pub missing_short_diagonal: [u32; 2],
    pub strip: Vec<u32>,
    pub child_class: String,
}

/// Recognized class plus its re-checkable evidence.
#[derive(Serialize)]
pub struct ClassificationEcho {
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub removed_edges: Option<Vec<[u32; 2]>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alpha_pairs: Vec<[u32; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub strip_reductions: Vec<StripEcho>,
}

/// A constructed placement: where each abstract vertex went and which
/// polygon edges the graph occupies.
#[derive(Serialize)]
pub struct PlacementEcho {
    pub kind: String,
    pub params: BTreeMap<String, String>,
    pub n: u32,
    pub g: u32,
    pub map: Vec<u32>,
    pub placed: Vec<[u32; 2]>,
}

/// One size row of a census sweep.
#[derive(Serialize)]
pub struct CensusRow {
    pub size: u32,
    pub total: u64,
    pub blocked: u64,
    pub class_f_star: u64,
    /// Level -> how many sets were recognized at it.
    pub class_j_star: BTreeMap<u32, u64>,
    pub class_not_forbidding: u64,
}

/// Full census sweep result.
#[derive(Serialize)]
pub struct CensusEcho {
    pub n: u32,
    pub g: u32,
    pub min_size: u32,
    pub max_size: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub rows: Vec<CensusRow>,
    /// Instances where the oracle verdict and the taxonomy disagree.
    /// Always expected empty; populated entries are library bugs.
    pub mismatches: Vec<String>,
}

/// The one JSON document a run prints.
#[derive(Serialize)]
pub struct CliReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub placement: Option<PlacementEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl CliReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            input: None,
            verdict: None,
            message: None,
            method: None,
            count: None,
            classification: None,
            witness: None,
            placement: None,
            census: None,
            timing_ms: None,
        }
    }

    /// Renders as pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Renders as `key: value` lines.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        line("command", self.command.clone());
        if let Some(i) = &self.input {
            line("path", i.path.clone());
            line("n", i.n.to_string());
            line("g", i.g.to_string());
            line("forbidden", i.forbidden.to_string());
            line("digest", i.digest.clone());
        }
        if let Some(v) = &self.verdict {
            line("verdict", v.clone());
        }
        if let Some(m) = &self.message {
            line("message", m.clone());
        }
        if let Some(m) = &self.method {
            line("method", m.clone());
        }
        if let Some(c) = &self.count {
            line("count", c.clone());
        }
        if let Some(c) = &self.classification {
            let mut class = c.class.clone();
            if let Some(l) = c.level {
                class.push_str(&format!("({l})"));
            }
            line("class", class);
            if let Some(removed) = &c.removed_edges {
                line("removed-edges", pairs_plain(removed));
            }
            if !c.alpha_pairs.is_empty() {
                line("alpha-pairs", pairs_plain(&c.alpha_pairs));
            }
            if !c.strip_reductions.is_empty() {
                line("strip-reductions", c.strip_reductions.len().to_string());
            }
        }
        if let Some(p) = &self.placement {
            line("kind", p.kind.clone());
            for (k, v) in &p.params {
                line(k, v.clone());
            }
            if !p.map.is_empty() {
                line(
                    "map",
                    p.map.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
                );
                line("placed", pairs_plain(&p.placed));
            }
        }
        if let Some(w) = &self.witness {
            line("diagonals", pairs_plain(&w.diagonals));
            line(
                "faces",
                w.faces
                    .iter()
                    .map(|f| {
                        let inner: Vec<String> = f.iter().map(u32::to_string).collect();
                        format!("[{}]", inner.join(","))
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
        if let Some(c) = &self.census {
            line("n", c.n.to_string());
            line("g", c.g.to_string());
            for r in &c.rows {
                let js: u64 = r.class_j_star.values().sum();
                line(
                    &format!("size {}", r.size),
                    format!(
                        "total={} blocked={} f-star={} j-star={} open={}",
                        r.total, r.blocked, r.class_f_star, js, r.class_not_forbidding
                    ),
                );
            }
            line("mismatches", c.mismatches.len().to_string());
            for m in &c.mismatches {
                line("mismatch", m.clone());
            }
        }
        if let Some(t) = self.timing_ms {
            line("timing-ms", t.to_string());
        }
        out
    }
}

fn pairs_plain(pairs: &[[u32; 2]]) -> String {
    pairs
        .iter()
        .map(|[a, b]| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// 64-bit FNV-1a of the canonical instance text.
pub fn instance_digest(inst: &Instance) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in inst.serialize().as_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

pub fn input_echo(path: &str, inst: &Instance) -> InputEcho {
    InputEcho {
        path: path.to_string(),
        n: inst.n(),
        g: inst.g(),
        forbidden: inst.forbidden().len(),
        digest: instance_digest(inst),
    }
}

pub fn edge_pairs(edges: &[Edge]) -> Vec<[u32; 2]> {
    edges.iter().map(|e| [e.lo(), e.hi()]).collect()
}

pub fn witness_echo(w: &GAngulation) -> WitnessEcho {
    WitnessEcho {
        diagonals: edge_pairs(&w.diagonals),
        faces: w.faces.clone(),
    }
}

pub fn class_name(class: &ForbiddingClass) -> (String, Option<u32>) {
    match class {
        ForbiddingClass::FStar => ("f-star".into(), None),
        ForbiddingClass::JStar(level) => ("j-star".into(), Some(*level)),
        ForbiddingClass::NotForbidding => ("not-forbidding".into(), None),
    }
}

pub fn classification_echo(c: &Classification) -> ClassificationEcho {
    let (class, level) = class_name(&c.class);
    ClassificationEcho {
        class,
        level,
        removed_edges: c
            .evidence
            .removed_edges
            .as_ref()
            .map(|es| edge_pairs(es)),
        alpha_pairs: c.evidence.alpha_pairs.iter().map(|p| [p.r, p.s]).collect(),
        strip_reductions: c
            .evidence
            .strip_reductions
            .iter()
            .map(|s| {
                let (child, child_level) = class_name(&s.child_class);
                StripEcho {
                    missing_short_diagonal: [
                        s.missing_short_diagonal.lo(),
                        s.missing_short_diagonal.hi(),
                    ],
                    strip: s.strip.clone(),
                    child_class: match child_level {
                        Some(l) => format!("{child}({l})"),
                        None => child,
                    },
                }
            })
            .collect(),
    }
}
