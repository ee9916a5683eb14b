//! Graphviz DOT output for documentation figures.

use std::fmt::Write;

use crate::graph::Graph;
use crate::solver::PackingColoring;

/// Renders `g` as an undirected DOT graph. When a colouring is supplied, each
/// vertex shows its colour and is filled from the `set19` palette.
pub fn to_dot(g: &Graph, name: &str, coloring: Option<&PackingColoring>) -> String {
    let mut out = String::new();
    let id = sanitize(name);
    writeln!(out, "graph {id} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.order() {
        let label = escape(&g.label(v));
        match coloring {
            Some(c) => {
                let color = c.color(v);
                writeln!(
                    out,
                    "  {v} [label=\"{label}\\n{color}\", style=filled, colorscheme=set19, fillcolor={slot}];",
                    slot = (color.max(1) - 1) % 9 + 1
                )
                .unwrap();
            }
            None => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn sanitize(name: &str) -> String {
    let s: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if s.is_empty() || s.starts_with(|c: char| c.is_ascii_digit()) {
        format!("G_{s}")
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
