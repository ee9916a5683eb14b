//! Exact packing colorings.
//!
//! A `k`-packing coloring assigns colours `1..=k` so that two vertices sharing
//! colour `i` are more than `i` apart. The solver is a plain backtracking
//! search: vertices in descending-degree order (ties by id), colours
//! ascending, and for every colour `i` a bitmask of vertices already within
//! distance `i` of some vertex coloured `i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, INFINITY};

/// A colour per vertex, drawn from `1..=k`. Colour `0` marks an unassigned vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingColoring {
    colors: Vec<u32>,
    k: u32,
}

impl PackingColoring {
    pub fn new(colors: Vec<u32>, k: u32) -> Self {
        PackingColoring { colors, k }
    }

    /// Builds a colouring of a labeled graph from `(label, colour)` pairs.
    pub fn from_labels(g: &Graph, k: u32, pairs: &[(&str, u32)]) -> Result<Self> {
        let mut colors = vec![0; g.order()];
        for &(name, c) in pairs {
            let v = g
                .vertex_by_label(name)
                .ok_or_else(|| Error::Coloring(format!("no vertex labeled {name:?}")))?;
            colors[v] = c;
        }
        Ok(PackingColoring { colors, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Largest colour actually used.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// `vertex color` lines.
    pub fn to_text(&self) -> String {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{v} {c}\n"))
            .collect()
    }

    /// Parses `vertex color` lines for a graph of the given order; `k` is the
    /// largest colour present.
    pub fn parse(text: &str, order: usize) -> Result<Self> {
        let mut colors = vec![0; order];
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parsed = match toks.as_slice() {
                [v, c] => v.parse::<usize>().ok().zip(c.parse::<u32>().ok()),
                _ => None,
            };
            let (v, c) = parsed.ok_or_else(|| Error::Coloring(format!("bad line {line:?}")))?;
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            if c == 0 {
                return Err(Error::Coloring(format!("colour 0 on vertex {v}")));
            }
            colors[v] = c;
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        Ok(PackingColoring { colors, k })
    }
}

impl fmt::Display for PackingColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().enumerate().map(|(v, c)| format!("{v}:{c}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// True iff `c` is a `c.k()`-packing coloring of `g`.
///
/// Errors when the colouring does not cover every vertex exactly.
pub fn is_valid(g: &Graph, c: &PackingColoring) -> Result<bool> {
    if c.colors.len() != g.order() {
        return Err(Error::Coloring(format!(
            "colouring has {} entries for a graph of order {}",
            c.colors.len(),
            g.order()
        )));
    }
    if let Some(v) = c.colors.iter().position(|&x| x == 0) {
        return Err(Error::Coloring(format!("vertex {v} is unassigned")));
    }
    if c.colors.iter().any(|&x| x > c.k) {
        return Ok(false);
    }
    let dist = g.all_pairs_distances();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let i = c.colors[u];
            if i == c.colors[v] && dist.get(u, v) != INFINITY && dist.get(u, v) <= i {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A `k`-packing coloring of `g`, or `None` when the search proves none exists.
pub fn find_k_packing_coloring(g: &Graph, k: u32) -> Option<PackingColoring> {
    let mut colors = vec![0; g.order()];
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let found = color_connected(&sub, k)?;
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = found[i];
        }
    }
    Some(PackingColoring { colors, k })
}

/// Outcome of [`chi_rho`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiRhoResult {
    pub value: u32,
    pub witness: PackingColoring,
    pub lower_bound_trace: String,
}

/// The packing chromatic number, solved component by component.
pub fn chi_rho(g: &Graph) -> Result<ChiRhoResult> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut colors = vec![0; g.order()];
    let mut value = 0;
    let mut trace = String::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let (lb, reason) = bound_with_reason(&sub);
        let mut k = lb.max(1);
        let found = loop {
            // every connected graph is (order)-packing colourable
            if let Some(c) = color_connected(&sub, k) {
                break c;
            }
            assert!((k as usize) < sub.order(), "distinct colours always suffice");
            k += 1;
        };
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = found[i];
        }
        if k > value {
            value = k;
            trace = if k == lb {
                format!("lower bound {lb} ({reason}) attained")
            } else {
                format!("lower bound {lb} ({reason}); {}..={} exhausted", lb, k - 1)
            };
        }
    }
    Ok(ChiRhoResult { value, witness: PackingColoring { colors, k: value }, lower_bound_trace: trace })
}

/// `chi_rho` extended to the empty graph, whose value is 0.
pub fn chi_rho_value(g: &Graph) -> u32 {
    if g.order() == 0 {
        0
    } else {
        chi_rho(g).expect("non-empty graph").value
    }
}

/// Shapes with known packing chromatic numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormShape {
    Path(usize),
    Cycle(usize),
    Clique(usize),
}

pub fn chi_rho_closed_form(shape: ClosedFormShape) -> Result<u32> {
    match shape {
        ClosedFormShape::Path(0) | ClosedFormShape::Clique(0) => Err(Error::EmptyGraph),
        ClosedFormShape::Path(1) => Ok(1),
        ClosedFormShape::Path(2 | 3) => Ok(2),
        ClosedFormShape::Path(_) => Ok(3),
        ClosedFormShape::Cycle(n) if n < 3 => Err(Error::Range(format!("a cycle needs at least 3 vertices, got {n}"))),
        ClosedFormShape::Cycle(n) if n == 3 || n % 4 == 0 => Ok(3),
        ClosedFormShape::Cycle(_) => Ok(4),
        ClosedFormShape::Clique(n) => Ok(n as u32),
    }
}

/// A sound lower bound on `chi_rho(g)`; 0 for the empty graph.
pub fn lower_bound(g: &Graph) -> u32 {
    bound_with_reason(g).0
}

fn bound_with_reason(g: &Graph) -> (u32, &'static str) {
    let mut best = (0, "empty graph");
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let structural = if sub.size() == 0 {
            (1, "edgeless")
        } else if sub.is_star() {
            (2, "star")
        } else {
            (3, "connected non-star")
        };
        let clique = sub.clique_number() as u32;
        let b = if clique > structural.0 { (clique, "clique") } else { structural };
        if b.0 > best.0 {
            best = b;
        }
    }
    best
}

/// Backtracking search on a connected graph. Returns colours by vertex id.
fn color_connected(g: &Graph, k: u32) -> Option<Vec<u32>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let dist = g.all_pairs_distances();
    let diam = dist.diameter();
    // A colour at or above the diameter can appear at most once, so every
    // colour above max(diam, 1) behaves like colour max(diam, 1).
    let radius_cap = diam.max(1);
    let kk = k.min(n as u32) as usize;
    // balls[v][r] = vertices within distance r of v (r <= radius_cap)
    let balls: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            (0..=radius_cap)
                .map(|r| {
                    let mut m = 0u64;
                    for (w, &d) in dist.row(v).iter().enumerate() {
                        if d <= r {
                            m |= 1 << w;
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut s = State {
        order,
        balls,
        radius_cap,
        forbidden: vec![0; kk + 1],
        colors: vec![0; n],
        unassigned: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        kk,
    };
    if s.search(0) {
        Some(s.colors)
    } else {
        None
    }
}

struct State {
    order: Vec<usize>,
    balls: Vec<Vec<u64>>,
    radius_cap: u32,
    forbidden: Vec<u64>,
    colors: Vec<u32>,
    unassigned: u64,
    kk: usize,
}

impl State {
    fn search(&mut self, t: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        // some unassigned vertex with every colour blocked
        let blocked = (1..=self.kk).fold(u64::MAX, |acc, c| acc & self.forbidden[c]);
        if blocked & self.unassigned != 0 {
            return false;
        }
        let v = self.order[t];
        for c in 1..=self.kk {
            if self.forbidden[c] >> v & 1 == 1 {
                continue;
            }
            let saved = self.forbidden[c];
            let r = (c as u32).min(self.radius_cap) as usize;
            self.forbidden[c] |= self.balls[v][r];
            self.colors[v] = c as u32;
            self.unassigned &= !(1 << v);
            if self.search(t + 1) {
                return true;
            }
            self.unassigned |= 1 << v;
            self.colors[v] = 0;
            self.forbidden[c] = saved;
        }
        false
    }
}

/// Vertices of colour `i` in `c`.
pub fn color_class(c: &PackingColoring, i: u32) -> Vec<usize> {
    bits(
        c.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == i)
            .fold(0u64, |m, (v, _)| m | 1 << v),
    )
    .collect()
}
