//! Simple-cycle enumeration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const CYCLE_MAX_ORDER: usize = 12;

/// Every simple cycle exactly once, as a vertex sequence starting at its
/// smallest vertex with `seq[1] < seq[last]`.
pub fn simple_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check(g)?;
    let mut out = Vec::new();
    walk_all(g, &mut |path| {
        out.push(path.to_vec());
        true
    });
    Ok(out)
}

/// The set of lengths `n` such that `g` contains `C_n` as a subgraph.
pub fn cycle_spectrum(g: &Graph) -> Result<BTreeSet<usize>> {
    check(g)?;
    let n = g.order();
    let mut lengths = BTreeSet::new();
    walk_all(g, &mut |path| {
        lengths.insert(path.len());
        // stop once every length 3..=n has been seen
        lengths.len() < n.saturating_sub(2)
    });
    Ok(lengths)
}

fn check(g: &Graph) -> Result<()> {
    if g.order() > CYCLE_MAX_ORDER {
        Err(Error::OrderTooLarge { order: g.order(), max: CYCLE_MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Calls `visit` once per cycle; `visit` returns false to stop early.
fn walk_all(g: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let mut path = Vec::with_capacity(g.order());
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        if !extend(g, s, 1u64 << s, &mut path, visit) {
            return;
        }
    }
}

fn extend(g: &Graph, start: usize, used: u64, path: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let last = *path.last().expect("non-empty path");
    let above_start = !((1u64 << start) - 1) & !(1u64 << start);
    for w in bits(g.neighbor_mask(last)) {
        if w == start {
            if path.len() >= 3 && path[1] < last && !visit(path) {
                return false;
            }
            continue;
        }
        if used >> w & 1 == 1 || (1u64 << w) & above_start == 0 {
            continue;
        }
        path.push(w);
        let keep_going = extend(g, start, used | 1 << w, path, visit);
        path.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn spectra() {
        assert_eq!(cycle_spectrum(&cycle(6)).unwrap(), set(&[6]));
        assert_eq!(cycle_spectrum(&complete(4)).unwrap(), set(&[3, 4]));
        assert!(cycle_spectrum(&path(7)).unwrap().is_empty());
        assert!(cycle_spectrum(&cycle(13)).is_err());
    }

    #[test]
    fn cycles_counted_once() {
        // K4: four triangles and three 4-cycles.
        assert_eq!(simple_cycles(&complete(4)).unwrap().len(), 7);
        // K5: 10 + 15 + 12
        assert_eq!(simple_cycles(&complete(5)).unwrap().len(), 37);
        assert_eq!(simple_cycles(&cycle(9)).unwrap().len(), 1);
    }

    #[test]
    fn apex_on_c4_edge() {
        let g = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let g = g.add_edge(4, 0).unwrap().add_edge(4, 1).unwrap();
        let s = cycle_spectrum(&g).unwrap();
        assert_eq!(s, set(&[3, 4, 5]));
        assert!(s.iter().any(|&m| m >= 5 && m % 4 != 0));
    }
}
