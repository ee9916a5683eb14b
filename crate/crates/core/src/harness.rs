//! Exhaustive verification over all small connected graphs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::canonical_form_unbounded;
use crate::critical::{is_k_critical, is_k_vertex_critical};
use crate::error::{Error, Result};
use crate::families::{classify, generate, FamilyId, Universe};
use crate::g3::recognize_g3;
use crate::graph::{named, Graph};
use crate::graph6::to_graph6;
use crate::solver::{chi_rho_closed_form, chi_rho_value, ClosedFormShape};

/// Largest order generated internally.
pub const ENUM_MAX_ORDER: usize = 9;

/// One representative per isomorphism class of graphs on `n` vertices,
/// built level by level by adding one edge at a time.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::Range(format!("internal enumeration supports 1..={ENUM_MAX_ORDER} vertices, got {n}")));
    }
    let mut level = vec![Graph::empty(n)?];
    let mut out = level.clone();
    let max_edges = n * (n - 1) / 2;
    for _ in 0..max_edges {
        let children: Vec<_> = level
            .par_iter()
            .flat_map_iter(|g| {
                let mut kids = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if !g.has_edge(u, v) {
                            let h = g.add_edge(u, v).expect("non-edge");
                            kids.push(canonical_form_unbounded(&h));
                        }
                    }
                }
                kids
            })
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for cf in children {
            if !seen.contains(&cf) {
                next.push(cf.graph());
                seen.insert(cf);
            }
        }
        next.sort_by_cached_key(|g| to_graph6(g).expect("small"));
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by size and then by graph6 string.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// 4-vertex-critical graphs are exactly the listed families.
    Vc4,
    /// 4-critical graphs are exactly the primed families.
    C4,
    /// The structural recognizer accepts exactly the graphs with value 3.
    G3,
    /// Closed forms for paths, cycles and cliques, plus the X, Y, T fixtures.
    Formulas,
}

impl Theorem {
    /// Default and largest bound for internally generated inputs.
    pub fn default_max_n(self) -> usize {
        match self {
            Theorem::Vc4 | Theorem::C4 | Theorem::G3 => 7,
            Theorem::Formulas => 16,
        }
    }

    pub fn generated_limit(self) -> usize {
        match self {
            Theorem::Vc4 | Theorem::C4 => 9,
            Theorem::G3 => 8,
            Theorem::Formulas => 16,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Vc4 => "vc4",
            Theorem::C4 => "c4",
            Theorem::G3 => "g3",
            Theorem::Formulas => "formulas",
        })
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vc4" => Ok(Theorem::Vc4),
            "c4" => Ok(Theorem::C4),
            "g3" => Ok(Theorem::G3),
            "formulas" => Ok(Theorem::Formulas),
            _ => Err(Error::Range(format!("unknown theorem {s:?}; expected vc4, c4, g3 or formulas"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrderCounts {
    pub order: usize,
    pub scanned: usize,
    pub brute_positive: usize,
    pub classified_positive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub graph6: String,
    pub name: Option<String>,
    pub brute: String,
    pub classified: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positive {
    pub graph6: String,
    /// Matching family ids, or the case name for fixtures.
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub max_n: usize,
    pub counts: Vec<OrderCounts>,
    pub mismatches: Vec<Mismatch>,
    /// Inputs on which the brute-force side holds.
    pub positives: Vec<Positive>,
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.mismatches.is_empty() && self.counts.iter().all(|c| c.brute_positive == c.classified_positive)
    }

    pub fn summary_line(&self) -> String {
        format!(
            "THEOREM {} n<={} {} mismatches={}",
            self.theorem,
            self.max_n,
            if self.verified() { "OK" } else { "FAIL" },
            self.mismatches.len()
        )
    }

    /// Table and mismatch list without the timing line.
    pub fn body(&self) -> String {
        let (left, right) = match self.theorem {
            Theorem::Vc4 | Theorem::C4 => ("brute", "classified"),
            Theorem::G3 => ("chi=3", "recognized"),
            Theorem::Formulas => ("solver=3", "formula=3"),
        };
        let mut out = format!("{:>5} {:>8} {:>10} {:>10}\n", "order", "scanned", left, right);
        for c in &self.counts {
            out.push_str(&format!("{:>5} {:>8} {:>10} {:>10}\n", c.order, c.scanned, c.brute_positive, c.classified_positive));
        }
        for m in &self.mismatches {
            let name = m.name.as_deref().map(|n| format!(" {n}")).unwrap_or_default();
            out.push_str(&format!("mismatch {}{name} {left}={} {right}={}\n", m.graph6, m.brute, m.classified));
        }
        out
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.body())?;
        writeln!(f, "elapsed {:.3}s", self.elapsed.as_secs_f64())?;
        write!(f, "{}", self.summary_line())
    }
}

/// Where the input graphs come from.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    Generated,
    /// Graphs read from a graph6 corpus; disconnected ones and those above
    /// the bound are skipped.
    Corpus(&'a [Graph]),
}

struct Case {
    graph: Graph,
    name: Option<String>,
    /// Expected value for formula cases.
    expected: Option<u32>,
}

struct Outcome {
    order: usize,
    brute: bool,
    classified: bool,
    brute_text: String,
    classified_text: String,
    label: String,
}

pub fn verify_vertex_critical_theorem(max_n: usize) -> Result<TheoremReport> {
    verify(Theorem::Vc4, max_n, Source::Generated)
}

pub fn verify_critical_theorem(max_n: usize) -> Result<TheoremReport> {
    verify(Theorem::C4, max_n, Source::Generated)
}

pub fn verify_g3_recognizer(max_n: usize) -> Result<TheoremReport> {
    verify(Theorem::G3, max_n, Source::Generated)
}

pub fn verify_formula_tables(max_n: usize) -> Result<TheoremReport> {
    verify(Theorem::Formulas, max_n, Source::Generated)
}

pub fn verify(theorem: Theorem, max_n: usize, source: Source<'_>) -> Result<TheoremReport> {
    let start = Instant::now();
    let cases = cases(theorem, max_n, source)?;
    let outcomes: Vec<Outcome> = cases.par_iter().map(|c| evaluate(theorem, c)).collect::<Result<_>>()?;

    let mut counts: Vec<OrderCounts> = Vec::new();
    let mut mismatches = Vec::new();
    let mut positives = Vec::new();
    for (case, o) in cases.iter().zip(&outcomes) {
        let slot = match counts.iter_mut().find(|c| c.order == o.order) {
            Some(s) => s,
            None => {
                counts.push(OrderCounts { order: o.order, ..Default::default() });
                counts.last_mut().expect("just pushed")
            }
        };
        slot.scanned += 1;
        slot.brute_positive += usize::from(o.brute);
        slot.classified_positive += usize::from(o.classified);
        let graph6 = to_graph6(&case.graph)?;
        if o.brute {
            positives.push(Positive { graph6: graph6.clone(), label: o.label.clone() });
        }
        if o.brute_text != o.classified_text {
            mismatches.push(Mismatch {
                graph6,
                name: case.name.clone(),
                brute: o.brute_text.clone(),
                classified: o.classified_text.clone(),
            });
        }
    }
    counts.sort_by_key(|c| c.order);
    Ok(TheoremReport { theorem, max_n, counts, mismatches, positives, elapsed: start.elapsed() })
}

fn cases(theorem: Theorem, max_n: usize, source: Source<'_>) -> Result<Vec<Case>> {
    if theorem == Theorem::Formulas {
        return formula_cases(max_n);
    }
    let graphs: Vec<Graph> = match source {
        Source::Generated => {
            if max_n > theorem.generated_limit() {
                return Err(Error::Range(format!(
                    "theorem {theorem} enumerates up to n={} without a corpus, got {max_n}",
                    theorem.generated_limit()
                )));
            }
            let mut all = Vec::new();
            for n in 1..=max_n {
                all.extend(enumerate_connected(n)?);
            }
            all
        }
        Source::Corpus(gs) => gs.iter().filter(|g| g.order() >= 1 && g.order() <= max_n && g.is_connected()).cloned().collect(),
    };
    Ok(graphs.into_iter().map(|graph| Case { graph, name: None, expected: None }).collect())
}

fn formula_cases(max_n: usize) -> Result<Vec<Case>> {
    if max_n > Theorem::Formulas.generated_limit() {
        return Err(Error::Range(format!("formula table goes up to n=16, got {max_n}")));
    }
    let mut out = Vec::new();
    let mut push = |graph: Graph, name: String, expected: u32| out.push(Case { graph, name: Some(name), expected: Some(expected) });
    for n in 1..=max_n {
        push(named::path(n), format!("P{n}"), chi_rho_closed_form(ClosedFormShape::Path(n))?);
        if n >= 3 {
            push(named::cycle(n), format!("C{n}"), chi_rho_closed_form(ClosedFormShape::Cycle(n))?);
        }
        if n <= 8 {
            push(named::complete(n), format!("K{n}"), chi_rho_closed_form(ClosedFormShape::Clique(n))?);
        }
    }
    for n in 1..=12 {
        for id in [FamilyId::X(n), FamilyId::Y(n)] {
            if id.order() <= max_n {
                push(generate(&id)?, id.to_string(), 3);
            }
        }
    }
    if FamilyId::T.order() <= max_n {
        push(generate(&FamilyId::T)?, "T".into(), 3);
    }
    Ok(out)
}

fn evaluate(theorem: Theorem, case: &Case) -> Result<Outcome> {
    let g = &case.graph;
    let (brute, classified, brute_text, classified_text, label) = match theorem {
        Theorem::Vc4 | Theorem::C4 => {
            let (universe, b) = if theorem == Theorem::Vc4 {
                (Universe::VertexCritical, is_k_vertex_critical(g, 4)?)
            } else {
                (Universe::Critical, is_k_critical(g, 4)?)
            };
            let ids = classify(g, universe)?.ids();
            let label = ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            (b, !ids.is_empty(), b.to_string(), (!ids.is_empty()).to_string(), label)
        }
        Theorem::G3 => {
            let b = chi_rho_value(g) == 3;
            let c = recognize_g3(g)?.is_some();
            (b, c, b.to_string(), c.to_string(), String::new())
        }
        Theorem::Formulas => {
            let value = chi_rho_value(g);
            let expected = case.expected.expect("formula cases carry a value");
            (value == 3, expected == 3, value.to_string(), expected.to_string(), case.name.clone().unwrap_or_default())
        }
    };
    Ok(Outcome { order: g.order(), brute, classified, brute_text, classified_text, label })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(enumerate_connected(10).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn small_theorem_runs() {
        let r = verify_vertex_critical_theorem(4).unwrap();
        assert_eq!(r.summary_line(), "THEOREM vc4 n<=4 OK mismatches=0");
        assert_eq!(r.positives.len(), 1);
        assert_eq!(r.positives[0].label, "K4");
        let c = verify_critical_theorem(5).unwrap();
        let mut labels: Vec<&str> = c.positives.iter().map(|p| p.label.as_str()).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec!["C(5)", "H1", "H2", "K4"]);
    }

    #[test]
    fn formula_table_default_bound() {
        let r = verify_formula_tables(16).unwrap();
        assert!(r.verified(), "{r}");
        assert!(r.positives.iter().any(|p| p.label == "Y(7)"));
        assert!(verify_formula_tables(17).is_err());
    }

    #[test]
    fn theorem_names() {
        for t in ["vc4", "c4", "g3", "formulas"] {
            assert_eq!(t.parse::<Theorem>().unwrap().to_string(), t);
        }
        assert!("x".parse::<Theorem>().is_err());
    }

    #[test]
    fn corpus_filters_disconnected() {
        let corpus = vec![named::complete(4), named::path(2).disjoint_union(&named::path(2)).unwrap()];
        let r = verify(Theorem::Vc4, 4, Source::Corpus(&corpus)).unwrap();
        assert_eq!(r.counts.iter().map(|c| c.scanned).sum::<usize>(), 1);
    }
}
