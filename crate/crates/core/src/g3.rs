//! Structural recognition of graphs with packing chromatic number 3.
//!
//! Such graphs are exactly those built from a bipartite multigraph with sides
//! `U1`, `U3` by subdividing every edge once, hanging leaves on `U1 ∪ U3`, and
//! performing at most one T-add on each `U3` vertex (a new vertex `w`, an
//! independent set `X`, the edge `vw`, and edges between `{v, w}` and `X`).
//! The recognizer searches for a labeling of the vertices with the parts
//! `V0..V7` of that construction and re-validates it before returning it.
//!
//! Parts: `V1 = U1`, `V3 = U3`, `V2` subdivision vertices, `V0` leaves on
//! `V1`, `V4` leaves on `V3`, `V5` degree-2 triangle vertices of a T-add,
//! `V6` the remaining T-add vertices, `V7` leaves on `V6`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, INFINITY};
use crate::solver::PackingColoring;

pub const G3_MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    V0,
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
}

impl Part {
    pub const ALL: [Part; 8] = [Part::V0, Part::V1, Part::V2, Part::V3, Part::V4, Part::V5, Part::V6, Part::V7];

    fn bit(self) -> u8 {
        1 << self as u8
    }

    fn from_index(i: usize) -> Part {
        Part::ALL[i]
    }

    /// Parts allowed on the other end of an edge.
    fn compatible(self) -> u8 {
        use Part::*;
        let list: &[Part] = match self {
            V0 => &[V1],
            V1 => &[V0, V2],
            V2 => &[V1, V3],
            V3 => &[V2, V4, V5, V6],
            V4 => &[V3],
            V5 => &[V3, V5, V6],
            V6 => &[V3, V5, V7],
            V7 => &[V6],
        };
        list.iter().fold(0, |m, p| m | p.bit())
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}", *self as u8)
    }
}

impl FromStr for Part {
    type Err = Error;
    fn from_str(s: &str) -> Result<Part> {
        let idx = s
            .strip_prefix('V')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&d| d < 8)
            .ok_or_else(|| Error::Certificate(format!("unknown part {s:?}")))?;
        Ok(Part::from_index(idx))
    }
}

/// The `V0..V7` labeling of a graph with packing chromatic number 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G3Certificate {
    pub parts: Vec<Part>,
    /// One `(v1, mid, v3)` per subdivision vertex, sorted by `mid`.
    pub multigraph_edges: Vec<(usize, usize, usize)>,
}

impl G3Certificate {
    /// Derives the multigraph connections from a labeling.
    pub fn from_parts(g: &Graph, parts: Vec<Part>) -> Self {
        let multigraph_edges = subdivision_edges(g, &parts);
        G3Certificate { parts, multigraph_edges }
    }

    pub fn part(&self, v: usize) -> Part {
        self.parts[v]
    }

    pub fn members(&self, p: Part) -> Vec<usize> {
        (0..self.parts.len()).filter(|&v| self.parts[v] == p).collect()
    }

    /// `vertex Vk` lines.
    pub fn to_text(&self) -> String {
        self.parts.iter().enumerate().map(|(v, p)| format!("{v} {p}\n")).collect()
    }

    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut parts: Vec<Option<Part>> = vec![None; g.order()];
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut toks = line.split_whitespace();
            let (Some(v), Some(p), None) = (toks.next(), toks.next(), toks.next()) else {
                return Err(Error::Certificate(format!("bad line {line:?}")));
            };
            let v: usize = v.parse().map_err(|_| Error::Certificate(format!("bad vertex {v:?}")))?;
            if v >= g.order() {
                return Err(Error::Certificate(format!("vertex {v} out of range")));
            }
            parts[v] = Some(p.parse()?);
        }
        let parts = parts
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| Error::Certificate(format!("vertex {v} unlabeled"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(g, parts))
    }

    /// The 3-packing coloring the construction induces: `V3` gets 3, `V1`
    /// and `V6` get 2, and everything else 1, except that one vertex of a
    /// T-add triangle made of two `V5` vertices gets 2.
    pub fn coloring(&self, g: &Graph) -> PackingColoring {
        let mut colors: Vec<u32> = self
            .parts
            .iter()
            .map(|p| match p {
                Part::V3 => 3,
                Part::V1 | Part::V6 => 2,
                _ => 1,
            })
            .collect();
        for v in self.members(Part::V5) {
            let partner = g
                .neighbors(v)
                .find(|&w| self.parts[w] == Part::V5);
            if let Some(w) = partner {
                if v < w {
                    colors[v] = 2;
                }
            }
        }
        PackingColoring::new(colors, 3)
    }
}

fn subdivision_edges(g: &Graph, parts: &[Part]) -> Vec<(usize, usize, usize)> {
    (0..g.order())
        .filter(|&m| parts[m] == Part::V2)
        .filter_map(|m| {
            let a = g.neighbors(m).find(|&w| parts[w] == Part::V1)?;
            let b = g.neighbors(m).find(|&w| parts[w] == Part::V3)?;
            Some((a, m, b))
        })
        .collect()
}

/// True iff `cert` is a valid `V0..V7` labeling of `g`.
pub fn validate_certificate(g: &Graph, cert: &G3Certificate) -> Result<bool> {
    Ok(violations(g, cert)?.is_empty())
}

/// Every violated condition, in human-readable form.
pub fn violations(g: &Graph, cert: &G3Certificate) -> Result<Vec<String>> {
    if cert.parts.len() != g.order() {
        return Err(Error::Certificate(format!(
            "certificate labels {} vertices but the graph has {}",
            cert.parts.len(),
            g.order()
        )));
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        if let Err(msg) = local_check(g, &cert.parts, v) {
            out.push(format!("vertex {v} ({}): {msg}", cert.parts[v]));
        }
    }
    let dist = g.all_pairs_distances();
    for side in [Part::V1, Part::V3] {
        let members = cert.members(side);
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let d = dist.get(a, b);
                if d != INFINITY && !d.is_multiple_of(4) {
                    out.push(format!("{side} vertices {a} and {b} at distance {d}, not a multiple of 4"));
                }
            }
        }
    }
    if cert.multigraph_edges != subdivision_edges(g, &cert.parts) {
        out.push("recorded multigraph edges do not match the subdivision vertices".into());
    }
    Ok(out)
}

/// Conditions on `v` that only involve `v`, its neighbours and their labels.
fn local_check(g: &Graph, parts: &[Part], v: usize) -> std::result::Result<(), String> {
    use Part::*;
    let p = parts[v];
    let deg = g.degree(v);
    let count = |q: Part| g.neighbors(v).filter(|&w| parts[w] == q).count();
    let allowed = p.compatible();
    if let Some(w) = g.neighbors(v).find(|&w| allowed & parts[w].bit() == 0) {
        return Err(format!("adjacent to {w} in {}", parts[w]));
    }
    match p {
        V0 | V4 | V7 if deg != 1 => Err(format!("leaf part with degree {deg}")),
        V0 | V4 | V7 | V1 => Ok(()),
        V2 => {
            if deg == 2 && count(V1) == 1 && count(V3) == 1 {
                Ok(())
            } else {
                Err("subdivision vertex must join one V1 and one V3 vertex".into())
            }
        }
        V3 => {
            let hosts: Vec<usize> = g.neighbors(v).filter(|&w| parts[w] == V6).collect();
            let tri: Vec<usize> = g.neighbors(v).filter(|&w| parts[w] == V5).collect();
            match hosts.as_slice() {
                [] if tri.is_empty() => Ok(()),
                [] if tri.len() == 2 && g.has_edge(tri[0], tri[1]) => Ok(()),
                [] => Err("V5 neighbours do not form a single T-add".into()),
                [w] if tri.iter().all(|&x| g.has_edge(x, *w)) => Ok(()),
                [_] => Err("V5 neighbour outside the T-add".into()),
                _ => Err("more than one T-add".into()),
            }
        }
        V5 => {
            if deg != 2 {
                return Err(format!("degree {deg}, expected 2"));
            }
            let nb: Vec<usize> = g.neighbors(v).collect();
            let (host, other) = match (parts[nb[0]], parts[nb[1]]) {
                (V3, V5 | V6) => (nb[0], nb[1]),
                (V5 | V6, V3) => (nb[1], nb[0]),
                _ => return Err("must join one V3 vertex and one V5/V6 vertex".into()),
            };
            if g.has_edge(host, other) {
                Ok(())
            } else {
                Err("not in a triangle with its V3 neighbour".into())
            }
        }
        V6 => {
            if count(V3) != 1 {
                return Err("must have exactly one V3 neighbour".into());
            }
            if deg < 2 || (deg == 2 && g.vertex_in_triangle(v)) {
                return Err("a T-add vertex of degree < 3 must be a degree-2 vertex outside triangles".into());
            }
            let loose = g
                .neighbors(v)
                .filter(|&w| g.degree(w) != 1 && !g.vertex_in_triangle(w))
                .count();
            if loose > 1 {
                return Err("more than one neighbour that is neither a leaf nor in a triangle".into());
            }
            Ok(())
        }
    }
}

/// The lexicographically least `V0..V7` labeling of `g`, or `None` when the
/// packing chromatic number of `g` is not 3.
///
/// Requires a connected graph of order at most 12.
pub fn recognize_g3(g: &Graph) -> Result<Option<G3Certificate>> {
    if g.order() > G3_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: g.order(), max: G3_MAX_ORDER });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // the construction also produces K1 and stars, whose value is below 3
    if g.size() == 0 || g.is_star() {
        return Ok(None);
    }
    let domains: Vec<u8> = (0..g.order()).map(|v| initial_domain(g, v)).collect();
    let mut parts = vec![None; g.order()];
    if search(g, 0, &domains, &mut parts) {
        let parts: Vec<Part> = parts.into_iter().map(|p| p.expect("complete labeling")).collect();
        let cert = G3Certificate::from_parts(g, parts);
        debug_assert!(validate_certificate(g, &cert).unwrap_or(false));
        Ok(Some(cert))
    } else {
        Ok(None)
    }
}

fn initial_domain(g: &Graph, v: usize) -> u8 {
    use Part::*;
    let parts: &[Part] = match g.degree(v) {
        0 => &[V1, V3],
        1 => &[V0, V1, V3, V4, V7],
        2 if g.vertex_in_triangle(v) => &[V1, V2, V3, V5],
        2 => &[V1, V2, V3, V6],
        _ => &[V1, V3, V6],
    };
    parts.iter().fold(0, |m, p| m | p.bit())
}

fn search(g: &Graph, v: usize, domains: &[u8], parts: &mut [Option<Part>]) -> bool {
    let n = g.order();
    if v == n {
        let full: Vec<Part> = parts.iter().map(|p| p.expect("assigned")).collect();
        let cert = G3Certificate::from_parts(g, full);
        return violations(g, &cert).map(|e| e.is_empty()).unwrap_or(false);
    }
    for p in Part::ALL {
        if domains[v] & p.bit() == 0 {
            continue;
        }
        let mut next = domains.to_vec();
        let mut ok = true;
        for w in g.neighbors(v) {
            if w > v {
                next[w] &= p.compatible();
                ok &= next[w] != 0;
            }
        }
        if !ok {
            continue;
        }
        parts[v] = Some(p);
        // vertices whose closed neighbourhood is now fully labeled
        let snapshot: Vec<Part> = parts.iter().map(|q| q.unwrap_or(Part::V0)).collect();
        let closed_ok = std::iter::once(v)
            .chain(g.neighbors(v))
            .filter(|&x| x <= v && g.neighbors(x).all(|y| y <= v))
            .all(|x| local_check(g, &snapshot, x).is_ok());
        if closed_ok && search(g, v + 1, &next, parts) {
            return true;
        }
        parts[v] = None;
    }
    false
}
