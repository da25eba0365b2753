//! Text and JSON rendering. Exact rationals are always written as strings.

use std::collections::BTreeMap;
use std::fmt::Write;

use gelab_core::{CoverMultiset, EntropyResult, FractionalColoring, Graph, MaximizerVerdict, SymmetryVerdict};
use serde::Serialize;

/// Edge-list text: `# ` comment lines, an `n <count>` header, then `u v`
/// lines. Re-parses to the same graph.
pub fn edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "n {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct WeightedSet {
    pub set: Vec<usize>,
    pub weight: String,
}

#[derive(Serialize)]
pub struct FloatSet {
    pub set: Vec<usize>,
    pub weight: f64,
}

#[derive(Serialize)]
pub struct CountedSet {
    pub set: Vec<usize>,
    pub multiplicity: u64,
}

#[derive(Serialize)]
pub struct Certificate {
    pub fold: u64,
    pub size: u64,
    pub covered: Vec<usize>,
    pub sets: Vec<CountedSet>,
}

impl From<&CoverMultiset> for Certificate {
    fn from(cm: &CoverMultiset) -> Self {
        Certificate {
            fold: cm.fold(),
            size: cm.size(),
            covered: cm.covered().to_vec(),
            sets: cm
                .multiplicities()
                .iter()
                .map(|(s, m)| CountedSet { set: s.members().to_vec(), multiplicity: *m })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct EntropyReport {
    pub command: &'static str,
    pub value: f64,
    pub gap: f64,
    pub lower_bound: f64,
    pub iterations: usize,
    pub converged: bool,
    pub minimizer: BTreeMap<String, f64>,
    pub decomposition: Vec<FloatSet>,
}

impl From<&EntropyResult> for EntropyReport {
    fn from(r: &EntropyResult) -> Self {
        EntropyReport {
            command: "entropy",
            value: r.value,
            gap: r.gap,
            lower_bound: r.lower_bound(),
            iterations: r.iterations,
            converged: r.converged,
            minimizer: r.minimizer.coords().iter().enumerate().map(|(v, a)| (v.to_string(), *a)).collect(),
            decomposition: r
                .minimizer
                .decomposition()
                .iter()
                .map(|(s, w)| FloatSet { set: s.members().to_vec(), weight: *w })
                .collect(),
        }
    }
}

pub fn entropy_text(r: &EntropyResult) -> String {
    format!("value {}\ngap {:e}\niterations {}\nconverged {}\n", r.value, r.gap, r.iterations, r.converged)
}

#[derive(Serialize)]
pub struct ChiFReport {
    pub command: &'static str,
    pub chi_f: String,
    pub decimal: f64,
    pub coloring: Vec<WeightedSet>,
}

impl ChiFReport {
    pub fn new(chi_f: &gelab_core::Rational, coloring: &FractionalColoring) -> Self {
        ChiFReport {
            command: "chif",
            chi_f: chi_f.to_string(),
            decimal: chi_f.to_f64(),
            coloring: coloring
                .weights()
                .iter()
                .map(|(s, w)| WeightedSet { set: s.members().to_vec(), weight: w.to_string() })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("chi_f {} ({})\n", self.chi_f, self.decimal);
        for s in &self.coloring {
            writeln!(out, "  {} x {:?}", s.weight, s.set).unwrap();
        }
        out
    }
}

fn certificate_text(out: &mut String, cm: &CoverMultiset) {
    writeln!(out, "certificate fold {} with {} sets", cm.fold(), cm.size()).unwrap();
    for (s, m) in cm.multiplicities() {
        writeln!(out, "  {m} x {:?}", s.members()).unwrap();
    }
}

#[derive(Serialize)]
pub struct SymmetryReport {
    pub command: &'static str,
    pub symmetric: bool,
    pub chi_f: String,
    pub n_over_alpha: String,
    pub certificate: Option<Certificate>,
}

impl From<&SymmetryVerdict> for SymmetryReport {
    fn from(v: &SymmetryVerdict) -> Self {
        SymmetryReport {
            command: "symmetric",
            symmetric: v.is_symmetric,
            chi_f: v.chi_f.to_string(),
            n_over_alpha: v.n_over_alpha.to_string(),
            certificate: v.certificate.as_ref().map(Certificate::from),
        }
    }
}

pub fn symmetry_text(v: &SymmetryVerdict) -> String {
    let mut out = format!(
        "symmetric {}\nchi_f {}\nn/alpha {}\n",
        if v.is_symmetric { "yes" } else { "no" },
        v.chi_f,
        v.n_over_alpha
    );
    if let Some(cm) = &v.certificate {
        certificate_text(&mut out, cm);
    }
    out
}

#[derive(Serialize)]
pub struct MaximizerReport {
    pub command: &'static str,
    pub maximizer: bool,
    pub chi_f_support: String,
    pub alpha_p: String,
    pub certificate: Option<Certificate>,
    pub reason: Option<&'static str>,
}

impl From<&MaximizerVerdict> for MaximizerReport {
    fn from(v: &MaximizerVerdict) -> Self {
        MaximizerReport {
            command: "maximizer",
            maximizer: v.is_maximizer,
            chi_f_support: v.chi_f_support.to_string(),
            alpha_p: v.alpha_p.to_string(),
            certificate: v.certificate.as_ref().map(Certificate::from),
            reason: v.reason.map(|r| r.code()),
        }
    }
}

pub fn maximizer_text(v: &MaximizerVerdict) -> String {
    let mut out = format!(
        "maximizer {}\nchi_f(G[supp]) {}\nalpha_P {}\n",
        if v.is_maximizer { "yes" } else { "no" },
        v.chi_f_support,
        v.alpha_p
    );
    if let Some(cm) = &v.certificate {
        certificate_text(&mut out, cm);
    }
    if let Some(r) = v.reason {
        writeln!(out, "reason {}", r.code()).unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct GraphReport {
    pub command: &'static str,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    /// Description of each output vertex in terms of the inputs.
    pub labels: Vec<String>,
}

impl GraphReport {
    pub fn new(command: &'static str, g: &Graph, labels: Vec<String>) -> Self {
        GraphReport { command, n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect(), labels }
    }
}

#[derive(Serialize)]
pub struct BruteEntropyReport {
    pub command: &'static str,
    pub value: f64,
    pub precision: f64,
    pub seeds: Vec<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::{parse_graph, GraphFormat};

    #[test]
    fn edge_list_round_trips() {
        for g in [Graph::petersen(), Graph::empty(3), Graph::empty(0), Graph::star(4)] {
            let text = edge_list(&g, &["label 0 = a0".into()]);
            assert_eq!(parse_graph(&text, GraphFormat::EdgeList).unwrap(), g);
        }
    }
}
