//! Exact canonical labeling for small graphs.
//!
//! Individualization-refinement: vertices start coloured by degree and sorted
//! distance profile, colours are refined to an equitable partition, and the
//! search branches on the first non-singleton cell. The canonical form is the
//! lexicographically least adjacency matrix over all leaves. Automorphisms
//! found along the way prune sibling branches in the same orbit.

use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::graph6::to_graph6;

/// Largest order accepted by the public isomorphism API.
pub const CANON_MAX_ORDER: usize = 12;

/// A relabeling-invariant form of a graph together with the labeling that
/// produced it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    rows: Vec<u64>,
    labeling: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// `labeling[v]` is the canonical position of input vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// The canonically relabeled graph.
    pub fn graph(&self) -> Graph {
        let n = self.rows.len();
        let mut edges = Vec::new();
        for (u, &row) in self.rows.iter().enumerate() {
            for v in bits(row) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("canonical rows describe a simple graph")
    }

    /// Certificate bytes: the graph6 string of the canonical graph.
    pub fn certificate(&self) -> Vec<u8> {
        to_graph6(&self.graph()).expect("canonical forms are small").into_bytes()
    }
}

/// Canonical form for graphs of order at most [`CANON_MAX_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: g.order(), max: CANON_MAX_ORDER });
    }
    Ok(canonical_form_unbounded(g))
}

/// Same algorithm without the order cap. Still exact; only the running time
/// is unguarded, so it is kept for internal callers that know their inputs.
pub(crate) fn canonical_form_unbounded(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm { rows: Vec::new(), labeling: Vec::new() };
    }
    let dist = g.all_pairs_distances();
    let profiles: Vec<(usize, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut row = dist.row(v).to_vec();
            row.sort_unstable();
            (g.degree(v), row)
        })
        .collect();
    let colors = rank(&profiles);
    let mut search = Search { g, best: None, generators: Vec::new() };
    let mut path = Vec::new();
    search.descend(refine(g, colors), &mut path);
    let (rows, labeling) = search.best.expect("at least one leaf");
    CanonicalForm { rows, labeling }
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An edge-preserving bijection `map[v_in_g] = v_in_h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.order() > CANON_MAX_ORDER {
            return Err(Error::OrderTooLarge { order: x.order(), max: CANON_MAX_ORDER });
        }
    }
    Ok(isomorphism_unbounded(g, h))
}

pub(crate) fn isomorphism_unbounded(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || degree_sequence(g) != degree_sequence(h) {
        return None;
    }
    let cg = canonical_form_unbounded(g);
    let ch = canonical_form_unbounded(h);
    if cg != ch {
        return None;
    }
    Some(map_between(&cg, &ch))
}

/// Composes two canonical labelings of isomorphic graphs into an isomorphism.
pub(crate) fn map_between(cg: &CanonicalForm, ch: &CanonicalForm) -> Vec<usize> {
    let mut inv_h = vec![0; ch.labeling.len()];
    for (v, &p) in ch.labeling.iter().enumerate() {
        inv_h[p] = v;
    }
    cg.labeling.iter().map(|&p| inv_h[p]).collect()
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// Replaces each key by its rank among the distinct keys.
fn rank<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present") as u32)
        .collect()
}

fn class_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    let mut classes = class_count(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let next_classes = class_count(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) {
        let n = self.g.order();
        if class_count(&colors) == n {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        }
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).expect("non-discrete partition") as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(path);
                if explored.iter().any(|&e| orbit[e] == orbit[v]) {
                    continue;
                }
            }
            let split: Vec<u32> = (0..n)
                .map(|w| 2 * colors[w] + u32::from(w != v))
                .collect();
            path.push(v);
            self.descend(refine(self.g, rank(&split)), path);
            path.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let n = labeling.len();
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for w in self.g.neighbors(u) {
                rows[labeling[u]] |= 1 << labeling[w];
            }
        }
        match &self.best {
            None => self.best = Some((rows, labeling)),
            Some((best_rows, best_lab)) => {
                if rows == *best_rows {
                    // v -> u with labeling[v] == best_lab[u] is an automorphism.
                    let mut inv = vec![0; n];
                    for (u, &p) in best_lab.iter().enumerate() {
                        inv[p] = u;
                    }
                    let gen: Vec<usize> = labeling.iter().map(|&p| inv[p]).collect();
                    if gen.iter().enumerate().any(|(i, &x)| i != x) {
                        self.generators.push(gen);
                    }
                } else if rows < *best_rows {
                    self.best = Some((rows, labeling));
                }
            }
        }
    }

    /// Orbit representatives under the generators that fix `path` pointwise.
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &self.generators {
            if path.iter().any(|&v| gen[v] != v) {
                continue;
            }
            for (v, &w) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}
