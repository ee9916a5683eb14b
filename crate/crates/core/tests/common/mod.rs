//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's solver, canonical form or enumeration.
#![allow(dead_code)]

use pcolor::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const FAR: u32 = u32::MAX / 2;

pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![FAR; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Whole-graph backtracking in vertex-id order, no decomposition or bounds.
pub fn brute_colorable(g: &Graph, k: u32) -> bool {
    let d = floyd(g);
    let mut colors = vec![0u32; g.order()];
    fn go(d: &[Vec<u32>], k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 1..=k {
            if (0..v).all(|u| colors[u] != c || d[u][v] > c) {
                colors[v] = c;
                if go(d, k, v + 1, colors) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    go(&d, k, 0, &mut colors)
}

pub fn brute_chi(g: &Graph) -> u32 {
    (0..=g.order() as u32).find(|&k| brute_colorable(g, k)).expect("n colours always suffice")
}

/// A packing colouring check written from the definition.
pub fn is_packing(g: &Graph, colors: &[u32], k: u32) -> bool {
    let d = floyd(g);
    let n = g.order();
    colors.len() == n
        && colors.iter().all(|&c| (1..=k).contains(&c))
        && (0..n).all(|u| (u + 1..n).all(|v| colors[u] != colors[v] || d[u][v] > colors[u]))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Index of pair (u, v), u < v, in the upper-triangle order.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Canonical edge mask: the least mask over all vertex permutations.
pub fn brute_canonical_mask(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | 1 << pair_index(n, p[u], p[v])))
        .min()
        .unwrap_or(0)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && permutations(g.order()).iter().any(|p| g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

/// Connected graphs on `n` vertices counted by testing every edge subset.
pub fn connected_classes_by_subsets(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if floyd(&g)[0].iter().all(|&d| d < FAR) {
            seen.insert(brute_canonical_mask(n, &edges, &perms));
        }
    }
    seen.len()
}

pub fn random_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n);
    let p: f64 = rng.gen_range(0.15..0.75);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let g = random_graph(rng, min_n, max_n);
        if floyd(&g).iter().flatten().all(|&d| d < FAR) {
            return g;
        }
    }
}

/// All trees on `n` vertices up to isomorphism, grown leaf by leaf and
/// deduplicated by brute canonical masks.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::from_edges(1, &[]).unwrap()];
    for m in 2..=n {
        let perms = permutations(m);
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut edges = t.edges();
                edges.push((v, m - 1));
                if seen.insert(brute_canonical_mask(m, &edges, &perms)) {
                    next.push(Graph::from_edges(m, &edges).unwrap());
                }
            }
        }
        level = next;
    }
    level
}

/// `C_n` on `0..n` plus leaves on `0` and `d`.
pub fn cycle_with_two_leaves(n: usize, d: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.push((0, n));
    edges.push((d, n + 1));
    Graph::from_edges(n + 2, &edges).unwrap()
}
