//! Simple undirected graphs on dense vertex ids `0..order`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the order
//! at [`MAX_ORDER`]. Every operation returns a new graph; values are never
//! mutated after construction.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// Distance between vertices in different components.
///
/// Strictly greater than any finite distance; never do arithmetic on it.
pub const INFINITY: u32 = u32::MAX;

#[derive(Clone)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Labels are presentation only; equality is on the labeled edge set.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        Ok(Graph { order, adj: vec![0; order], labels: None })
    }

    /// Builds a graph from an edge list, rejecting loops and duplicates.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        } else {
            Ok(())
        }
    }

    /// Attaches display labels. The slice must have one entry per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.order {
            return Err(Error::Range(format!(
                "expected {} vertex labels, got {}",
                self.order,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    /// Bitmask of the neighbours of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, otherwise its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up a vertex by label.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == name)
    }

    /// Returns a copy with the edge `uv` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - v`: the induced subgraph on every other vertex, ids compacted.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.order).filter(|&w| w != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// `G - e`: same vertex set, edge `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Induced subgraph on `keep` (in the given order; new id `i` is `keep[i]`).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut adj = vec![0u64; keep.len()];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.has_edge(a, b) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Graph { order: keep.len(), adj, labels }
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let mut adj = vec![0u64; self.order];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.order];
            for (v, name) in l.iter().enumerate() {
                out[perm[v]] = name.clone();
            }
            out
        });
        Graph { order: self.order, adj, labels }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(u + self.order, v + self.order)?;
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    fn reach(&self, s: usize) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.reach(0).count_ones() as usize == self.order
    }

    /// Complete bipartite `K_{1,m}` with `m >= 1`, in any labeling.
    pub fn is_star(&self) -> bool {
        if self.order < 2 || !self.is_connected() {
            return false;
        }
        self.size() == self.order - 1 && self.max_degree() == self.order - 1
    }

    /// BFS hop distances between every pair of vertices.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order;
        let mut dist = vec![INFINITY; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for w in bits(self.adj[u]) {
                    if row[w] == INFINITY {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { order: n, dist }
    }

    /// Size of a largest clique (exhaustive; fine for the small orders used here).
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, cand: u64, size: usize, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            grow(g, cand & g.adj[v], size + 1, best);
            grow(g, cand & !(1 << v), size, best);
        }
        let mut best = 0;
        let all = if self.order == 64 { u64::MAX } else { (1u64 << self.order) - 1 };
        grow(self, all, 0, &mut best);
        best
    }

    /// True when the edge `uv` lies in a triangle.
    pub fn edge_in_triangle(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && self.adj[u] & self.adj[v] != 0
    }

    /// True when `v` lies in a triangle.
    pub fn vertex_in_triangle(&self, v: usize) -> bool {
        self.neighbors(v).any(|w| self.adj[v] & self.adj[w] != 0)
    }
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Hop distances for every ordered pair; [`INFINITY`] across components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    pub fn is_finite(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != INFINITY
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != INFINITY).max().unwrap_or(0)
    }
}

/// Parses the edge-list text format: one `u v` pair per line, with an
/// optional leading `n <order>` line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        if toks[0] == "n" {
            if seen_content {
                return Err(err("order line must come first".into()));
            }
            if toks.len() != 2 {
                return Err(err("expected `n <order>`".into()));
            }
            let n = toks[1]
                .parse::<usize>()
                .map_err(|_| err(format!("not a nonnegative integer: {:?}", toks[1])))?;
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if toks.len() != 2 {
            return Err(err(format!("expected two vertex ids, got {}", toks.len())));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(format!("not a nonnegative integer: {t:?}")))
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        edges.push((line_no, u, v));
    }
    let implied = edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0);
    let order = match declared {
        Some(n) if n < implied => {
            return Err(Error::EdgeList {
                line: 1,
                msg: format!("declared order {n} but vertex {} appears", implied - 1),
            })
        }
        Some(n) => n,
        None => implied,
    };
    let mut g = Graph::empty(order)?;
    for (line, u, v) in edges {
        g.insert_edge(u, v).map_err(|e| Error::EdgeList { line, msg: e.to_string() })?;
    }
    Ok(g)
}

/// Serializes to the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Small named graphs used throughout the tests and generators.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete")
    }

    /// `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        Graph::from_edges(m + 1, &edges).expect("star")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("0 1\n1 2").unwrap(), path(3));
        assert_eq!(parse_edge_list("0 0"), Err(Error::EdgeList { line: 1, msg: "self-loop at vertex 0".into() }));
        let g = parse_edge_list("n 4\n0 1").unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn edge_list_rejects_duplicates_and_junk() {
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(Error::EdgeList { .. })));
        assert!(matches!(parse_edge_list("n 2\n0 5"), Err(Error::EdgeList { .. })));
        assert_eq!(parse_edge_list("").unwrap().order(), 0);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5).disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn distances() {
        let d = path(4).all_pairs_distances();
        assert_eq!(d.get(0, 3), 3);
        let two = path(2).disjoint_union(&path(2)).unwrap();
        assert_eq!(two.all_pairs_distances().get(0, 2), INFINITY);
        assert_eq!(cycle(8).all_pairs_distances().get(0, 4), 4);
    }

    #[test]
    fn vertex_deletion() {
        assert_eq!(complete(4).delete_vertex(2).unwrap(), complete(3));
        let g = path(3).delete_vertex(1).unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
        for v in 0..5 {
            let g = cycle(5).delete_vertex(v).unwrap();
            assert_eq!(g.size(), 3);
            assert!(g.is_connected());
            assert_eq!(g.max_degree(), 2);
        }
        assert!(matches!(path(3).delete_vertex(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_deletion() {
        assert_eq!(complete(3).delete_edge(0, 2).unwrap(), path(3));
        let p = cycle(4).delete_edge(3, 0).unwrap();
        assert_eq!(p, path(4));
        assert_eq!(path(3).delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn stars_and_cliques() {
        assert!(star(5).is_star());
        assert!(path(2).is_star());
        assert!(!path(4).is_star());
        assert!(!Graph::empty(1).unwrap().is_star());
        assert_eq!(complete(5).clique_number(), 5);
        assert_eq!(cycle(5).clique_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().clique_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().clique_number(), 0);
    }

    #[test]
    fn labels_follow_permutation_and_deletion() {
        let g = path(3).with_labels(["a", "b", "c"]).unwrap();
        assert_eq!(g.delete_vertex(0).unwrap().label(0), "b");
        let p = g.permute(&[2, 1, 0]);
        assert_eq!(p.label(0), "c");
        assert_eq!(p.vertex_by_label("a"), Some(2));
    }
}
