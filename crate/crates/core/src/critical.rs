//! Vertex- and edge-deletion sweeps.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::chi_rho_value;

pub const CRITICAL_MAX_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub chi: u32,
    /// `(v, χρ(G - v))` in vertex order.
    pub vertex_deltas: Vec<(usize, u32)>,
    /// `((u, v), χρ(G - uv))` in lexicographic edge order. Empty when the
    /// vertex sweep already failed.
    pub edge_deltas: Vec<((usize, usize), u32)>,
    pub vertex_critical: bool,
    pub subgraph_critical: bool,
}

impl CriticalityReport {
    /// One `v <id> <delta>` line per vertex, then `e <u> <v> <delta>` per edge.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for &(v, d) in &self.vertex_deltas {
            out.push_str(&format!("v {v} {d}\n"));
        }
        for &((u, v), d) in &self.edge_deltas {
            out.push_str(&format!("e {u} {v} {d}\n"));
        }
        out
    }
}

impl fmt::Display for CriticalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chi_rho = {}", self.chi)?;
        writeln!(f, "vertex_critical = {}", self.vertex_critical)?;
        writeln!(f, "subgraph_critical = {}", self.subgraph_critical)?;
        f.write_str(&self.to_lines())
    }
}

fn check(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.order() > CRITICAL_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: g.order(), max: CRITICAL_MAX_ORDER });
    }
    Ok(())
}

pub fn analyze(g: &Graph) -> Result<CriticalityReport> {
    check(g)?;
    let chi = chi_rho_value(g);
    let vertex_deltas: Vec<(usize, u32)> = (0..g.order())
        .into_par_iter()
        .map(|v| (v, chi_rho_value(&g.delete_vertex(v).expect("vertex in range"))))
        .collect();
    let vertex_critical = vertex_deltas.iter().all(|&(_, d)| d < chi);
    let edge_deltas: Vec<((usize, usize), u32)> = if vertex_critical {
        g.edges()
            .into_par_iter()
            .map(|(u, v)| ((u, v), chi_rho_value(&g.delete_edge(u, v).expect("edge present"))))
            .collect()
    } else {
        Vec::new()
    };
    let subgraph_critical = vertex_critical && edge_deltas.iter().all(|&(_, d)| d < chi);
    Ok(CriticalityReport { chi, vertex_deltas, edge_deltas, vertex_critical, subgraph_critical })
}

/// `χρ(g) = k` and every vertex deletion lowers it. Stops at the first
/// deletion that does not.
pub fn is_k_vertex_critical(g: &Graph, k: u32) -> Result<bool> {
    check(g)?;
    if chi_rho_value(g) != k {
        return Ok(false);
    }
    Ok((0..g.order()).all(|v| chi_rho_value(&g.delete_vertex(v).expect("vertex in range")) < k))
}

/// `χρ(g) = k` and every vertex or edge deletion lowers it.
pub fn is_k_critical(g: &Graph, k: u32) -> Result<bool> {
    if !is_k_vertex_critical(g, k)? {
        return Ok(false);
    }
    Ok(g.edges()
        .into_iter()
        .all(|(u, v)| chi_rho_value(&g.delete_edge(u, v).expect("edge present")) < k))
}
