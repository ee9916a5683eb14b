//! Named graphs and families of 4-critical graphs.
//!
//! Every generator reproduces the labeled graph of its drawing, with the
//! drawing's vertex names attached as labels (`u`, `u1`, `x3`, `v`, ...).
//! Recognition is by isomorphism against generated candidates of the same
//! order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::canon::{canonical_form, canonical_form_unbounded, map_between, CanonicalForm, CANON_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::PackingColoring;

/// The part that carries the attachment vertex in F3 and F5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    P4,
    C4,
}

/// The optional extra edge of F4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum F4Extra {
    None,
    /// `v1 y_{l-1}`
    V1YPrev,
    /// `v1 w2`
    V1W2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    K4,
    /// `H1` .. `H9`
    H(u8),
    /// The net graph, an alias of `H3`.
    Net,
    /// `C_n` with `n >= 5`, `n` not a multiple of 4.
    Cyc(usize),
    /// The four chorded 5-cycles.
    C5Var(u8),
    /// The three chorded 6-cycles.
    C6Var(u8),
    /// `K3` with a pendant path of `n` vertices.
    X(usize),
    /// `C4` with a pendant path of `n` vertices.
    Y(usize),
    /// The six-vertex tree with packing chromatic number 3.
    T,
    F1 { l: usize },
    F2 { l: usize },
    F3 { l: usize, a: Shape },
    F4 { l: usize, l2: usize, extra: F4Extra },
    F5 { l: usize, a: Shape, b: Shape },
}

/// Which characterization a classification refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// 4-vertex-critical graphs.
    VertexCritical,
    /// 4-critical graphs (every proper subgraph has smaller value).
    Critical,
}

impl FromStr for Universe {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" | "vertex-critical" | "vertex_critical" => Ok(Universe::VertexCritical),
            "subgraph" | "critical" | "critical_families" => Ok(Universe::Critical),
            _ => Err(Error::Family(format!("unknown universe {s:?}; expected vertex or subgraph"))),
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Universe::VertexCritical => "vertex",
            Universe::Critical => "subgraph",
        })
    }
}

impl FamilyId {
    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Family(format!("{self}: {msg}")));
        match *self {
            FamilyId::H(i) if !(1..=9).contains(&i) => bad("H index must be 1..=9".into()),
            FamilyId::C5Var(i) if !(1..=4).contains(&i) => bad("C5 variant must be 1..=4".into()),
            FamilyId::C6Var(i) if !(1..=3).contains(&i) => bad("C6 variant must be 1..=3".into()),
            FamilyId::Cyc(n) if n < 5 || n % 4 == 0 => bad("need n >= 5 and n not divisible by 4".into()),
            FamilyId::X(0) | FamilyId::Y(0) => bad("path length must be at least 1".into()),
            FamilyId::F1 { l } if l % 4 == 3 => bad("l must be 4k, 4k+1 or 4k+2".into()),
            FamilyId::F2 { l } if l != 0 && l % 4 != 2 => bad("l must be 0 or 4k+2".into()),
            FamilyId::F3 { l, .. } if l == 0 || l % 4 != 0 => bad("l must be 4k with k >= 1".into()),
            FamilyId::F4 { l, .. } if l % 4 != 2 => bad("l must be 4k+2".into()),
            FamilyId::F4 { l2, .. } if l2 % 4 != 0 => bad("l' must be 4k'".into()),
            FamilyId::F4 { l, extra: F4Extra::V1YPrev, .. } if l < 2 => bad("y_{l-1} needs l >= 2".into()),
            FamilyId::F4 { l2, extra: F4Extra::V1W2, .. } if l2 < 2 => bad("w2 needs l' >= 2".into()),
            FamilyId::F5 { l, .. } if l % 2 != 0 => bad("l must be even".into()),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilyId::K4 => 4,
            FamilyId::H(1 | 2) => 5,
            FamilyId::H(4) => 7,
            FamilyId::H(7 | 8) => 10,
            FamilyId::H(9) => 8,
            FamilyId::H(_) | FamilyId::Net | FamilyId::T | FamilyId::C6Var(_) => 6,
            FamilyId::C5Var(_) => 5,
            FamilyId::Cyc(n) => n,
            FamilyId::X(n) => n + 3,
            FamilyId::Y(n) => n + 4,
            FamilyId::F1 { l } | FamilyId::F2 { l } => 6 + l,
            FamilyId::F3 { l, .. } => 7 + l,
            FamilyId::F4 { l, l2, .. } => 8 + l + l2,
            FamilyId::F5 { l, .. } => 8 + l,
        }
    }

    /// True for members of the 4-vertex-critical characterization.
    pub fn in_universe(&self, universe: Universe) -> bool {
        let vertex_critical = matches!(
            self,
            FamilyId::K4
                | FamilyId::H(_)
                | FamilyId::Cyc(_)
                | FamilyId::C5Var(_)
                | FamilyId::C6Var(_)
                | FamilyId::F1 { .. }
                | FamilyId::F2 { .. }
                | FamilyId::F3 { .. }
                | FamilyId::F4 { .. }
                | FamilyId::F5 { .. }
        );
        match universe {
            Universe::VertexCritical => vertex_critical,
            Universe::Critical => match *self {
                FamilyId::K4 | FamilyId::Cyc(_) | FamilyId::F2 { .. } => true,
                FamilyId::H(i) => matches!(i, 1 | 2 | 3 | 4 | 5 | 9),
                FamilyId::F1 { l } => l != 0 && l % 4 != 2,
                FamilyId::F3 { a, .. } => a == Shape::P4,
                FamilyId::F4 { extra, .. } => extra == F4Extra::None,
                FamilyId::F5 { a, b, .. } => a == Shape::P4 && b == Shape::P4,
                _ => false,
            },
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::P4 => "P4",
            Shape::C4 => "C4",
        })
    }
}

impl fmt::Display for F4Extra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            F4Extra::None => "none",
            F4Extra::V1YPrev => "v1_y_prev",
            F4Extra::V1W2 => "v1_w2",
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::K4 => write!(f, "K4"),
            FamilyId::H(i) => write!(f, "H{i}"),
            FamilyId::Net => write!(f, "Net"),
            FamilyId::Cyc(n) => write!(f, "C({n})"),
            FamilyId::C5Var(i) => write!(f, "C5var({i})"),
            FamilyId::C6Var(i) => write!(f, "C6var({i})"),
            FamilyId::X(n) => write!(f, "X({n})"),
            FamilyId::Y(n) => write!(f, "Y({n})"),
            FamilyId::T => write!(f, "T"),
            FamilyId::F1 { l } => write!(f, "F1(l={l})"),
            FamilyId::F2 { l } => write!(f, "F2(l={l})"),
            FamilyId::F3 { l, a } => write!(f, "F3(l={l},a={a})"),
            FamilyId::F4 { l, l2, extra } => write!(f, "F4(l={l},l'={l2},extra={extra})"),
            FamilyId::F5 { l, a, b } => write!(f, "F5(l={l},a={a},b={b})"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// Accepts the `Display` syntax; omitted keyed parameters default to
    /// `a=P4`, `b=P4`, `l'=0`, `extra=none`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Family(format!("cannot parse family {s:?}"));
        let (head, args) = match compact.split_once('(') {
            Some((h, rest)) => (h.to_string(), Some(rest.strip_suffix(')').ok_or_else(err)?.to_string())),
            None => (compact.clone(), None),
        };
        let positional = |args: &Option<String>| -> Result<usize> {
            args.as_deref().and_then(|a| a.parse().ok()).ok_or_else(err)
        };
        let keyed = |args: &Option<String>| -> Result<Vec<(String, String)>> {
            let a = args.as_deref().ok_or_else(err)?;
            a.split(',')
                .map(|kv| {
                    let (k, v) = kv.split_once('=').ok_or_else(err)?;
                    Ok((k.to_string(), v.to_string()))
                })
                .collect()
        };
        let lookup = |kv: &[(String, String)], key: &str| kv.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
        let num = |kv: &[(String, String)], key: &str, default: Option<usize>| -> Result<usize> {
            match lookup(kv, key) {
                Some(v) => v.parse().map_err(|_| err()),
                None => default.ok_or_else(err),
            }
        };
        let shape = |kv: &[(String, String)], key: &str| -> Result<Shape> {
            match lookup(kv, key).as_deref() {
                None | Some("P4") => Ok(Shape::P4),
                Some("C4") => Ok(Shape::C4),
                Some(_) => Err(err()),
            }
        };
        let id = match (head.as_str(), &args) {
            ("K4", None) => FamilyId::K4,
            ("T", None) => FamilyId::T,
            ("Net" | "net", None) => FamilyId::Net,
            (h, None) if h.starts_with('H') => FamilyId::H(h[1..].parse().map_err(|_| err())?),
            ("C" | "Cyc", _) => FamilyId::Cyc(positional(&args)?),
            ("C5var", _) => FamilyId::C5Var(positional(&args)? as u8),
            ("C6var", _) => FamilyId::C6Var(positional(&args)? as u8),
            ("X", _) => FamilyId::X(positional(&args)?),
            ("Y", _) => FamilyId::Y(positional(&args)?),
            ("F1", _) => FamilyId::F1 { l: num(&keyed(&args)?, "l", None)? },
            ("F2", _) => FamilyId::F2 { l: num(&keyed(&args)?, "l", None)? },
            ("F3", _) => {
                let kv = keyed(&args)?;
                FamilyId::F3 { l: num(&kv, "l", None)?, a: shape(&kv, "a")? }
            }
            ("F4", _) => {
                let kv = keyed(&args)?;
                let extra = match lookup(&kv, "extra").as_deref() {
                    None | Some("none") => F4Extra::None,
                    Some("v1_y_prev") => F4Extra::V1YPrev,
                    Some("v1_w2") => F4Extra::V1W2,
                    Some(_) => return Err(err()),
                };
                FamilyId::F4 { l: num(&kv, "l", None)?, l2: num(&kv, "l'", Some(0))?, extra }
            }
            ("F5", _) => {
                let kv = keyed(&args)?;
                FamilyId::F5 { l: num(&kv, "l", None)?, a: shape(&kv, "a")?, b: shape(&kv, "b")? }
            }
            _ => return Err(err()),
        };
        id.validate()?;
        Ok(id)
    }
}

/// Collects named vertices and edges, then freezes them into a labeled graph.
#[derive(Default)]
struct Builder {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        if let Some(i) = self.names.iter().position(|n| *n == name) {
            return i;
        }
        self.names.push(name);
        self.names.len() - 1
    }

    fn edge(&mut self, a: &str, b: &str) {
        let (a, b) = (self.vertex(a), self.vertex(b));
        self.edges.push((a, b));
    }

    fn edges(&mut self, list: &str) {
        for pair in list.split_whitespace() {
            let (a, b) = pair.split_once('-').expect("edge written as a-b");
            self.edge(a, b);
        }
    }

    /// Path `from - prefix1 - ... - prefix{len} - to`, or the edge `from - to`.
    fn path(&mut self, from: &str, prefix: &str, len: usize, to: &str) {
        let mut prev = from.to_string();
        for i in 1..=len {
            let cur = format!("{prefix}{i}");
            self.edge(&prev, &cur);
            prev = cur;
        }
        self.edge(&prev, to);
    }

    fn build(self) -> Graph {
        Graph::from_edges(self.names.len(), &self.edges)
            .and_then(|g| g.with_labels(self.names))
            .expect("family generators produce simple graphs")
    }
}

fn from_edge_string(vertices: &str, edges: &str) -> Graph {
    let mut b = Builder::default();
    for v in vertices.split_whitespace() {
        b.vertex(v);
    }
    b.edges(edges);
    b.build()
}

fn cycle_named(prefix: &str, n: usize, chords: &[(usize, usize)]) -> Graph {
    let mut b = Builder::default();
    for i in 1..=n {
        b.vertex(format!("{prefix}{i}"));
    }
    for i in 1..=n {
        b.edge(&format!("{prefix}{i}"), &format!("{prefix}{}", i % n + 1));
    }
    for &(x, y) in chords {
        b.edge(&format!("{prefix}{x}"), &format!("{prefix}{y}"));
    }
    b.build()
}

/// The labeled graph for `id`.
pub fn generate(id: &FamilyId) -> Result<Graph> {
    id.validate()?;
    if id.order() > crate::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge { order: id.order(), max: crate::graph::MAX_ORDER });
    }
    let g = match *id {
        FamilyId::K4 => from_edge_string("a b c d", "a-b a-c a-d b-c b-d c-d"),
        FamilyId::H(1) => from_edge_string("a b c d e", "a-b b-c a-e e-d d-b a-d"),
        FamilyId::H(2) => from_edge_string("a b c d e", "a-b b-c c-d d-b b-e e-a"),
        FamilyId::H(3) | FamilyId::Net => from_edge_string("a b c d e f", "d-a a-b b-e a-c c-b c-f"),
        FamilyId::H(4) => from_edge_string("a b c d e f g", "a-b b-c c-d d-e e-f c-g g-d"),
        FamilyId::H(5) => from_edge_string("a b c d e f", "f-c c-d d-a a-b b-e b-c"),
        FamilyId::H(6) => from_edge_string("a b c d e f", "b-e e-d d-a a-b b-f a-c c-e"),
        FamilyId::H(7) => from_edge_string("a b c d e f g h i j", "a-b b-c c-d d-e e-f e-g g-h h-i i-j j-b"),
        FamilyId::H(8) => from_edge_string("a b c d e f g h i j", "a-b b-c c-d d-e e-f e-g g-h h-i i-j j-b a-i"),
        FamilyId::H(9) => from_edge_string("a b c d e f g h", "a-b b-c c-d d-e b-f c-g d-h"),
        FamilyId::H(_) => unreachable!("validated"),
        FamilyId::T => from_edge_string("d b y' c e a", "d-b b-y' y'-c c-e y'-a"),
        FamilyId::Cyc(n) => cycle_named("c", n, &[]),
        FamilyId::C5Var(i) => {
            let chords: &[(usize, usize)] = match i {
                1 => &[(2, 4)],
                2 => &[(2, 4), (1, 3)],
                3 => &[(2, 4), (1, 4)],
                _ => &[(2, 4), (1, 4), (3, 5)],
            };
            cycle_named("a", 5, chords)
        }
        FamilyId::C6Var(i) => {
            let chords: &[(usize, usize)] = match i {
                1 => &[(3, 6)],
                2 => &[(3, 6), (2, 5)],
                _ => &[(3, 6), (2, 5), (1, 4)],
            };
            cycle_named("a", 6, chords)
        }
        FamilyId::X(n) => {
            let mut b = Builder::default();
            b.edges("t1-t2 t2-t3 t3-t1");
            b.path("t3", "p", n - 1, &format!("p{n}"));
            b.build()
        }
        FamilyId::Y(n) => {
            let mut b = Builder::default();
            b.edges("q1-q2 q2-q3 q3-q4 q4-q1");
            b.path("q1", "p", n - 1, &format!("p{n}"));
            b.build()
        }
        FamilyId::F1 { l } => {
            let mut b = Builder::default();
            b.edges("u1-u2 u1-u u2-u");
            b.path("u", "x", l, "v");
            b.edges("v-v1 v-v2 v1-v2");
            b.build()
        }
        FamilyId::F2 { l } => {
            let mut b = Builder::default();
            b.edges("u1-u2 u1-u u2-u");
            b.path("u", "x", l, "v");
            b.edges("v1-v v-v2");
            b.build()
        }
        FamilyId::F3 { l, a } => {
            let mut b = Builder::default();
            b.edges("u2-u1 u1-u u-u3");
            if a == Shape::C4 {
                b.edge("u2", "u3");
            }
            b.path("u", "x", l, "v");
            b.edges("v-v1 v-v2 v1-v2");
            b.build()
        }
        FamilyId::F4 { l, l2, extra } => {
            let mut b = Builder::default();
            b.edges("u1-u u-u2");
            b.path("u", "y", l, "v");
            b.edge("v", "v1");
            b.path("v", "w", l2, "z");
            b.edges("z1-z z-z2");
            match extra {
                F4Extra::None => {}
                F4Extra::V1YPrev => b.edge("v1", &format!("y{}", l - 1)),
                F4Extra::V1W2 => b.edge("v1", "w2"),
            }
            b.build()
        }
        FamilyId::F5 { l, a, b: bshape } => {
            let mut b = Builder::default();
            b.edges("u2-u1 u1-u u-u3");
            if a == Shape::C4 {
                b.edge("u2", "u3");
            }
            b.path("u", "x", l, "v");
            b.edges("v3-v v-v1 v1-v2");
            if bshape == Shape::C4 {
                b.edge("v2", "v3");
            }
            b.build()
        }
    };
    Ok(g)
}

/// Every family member of the given order in `universe`. F5 shapes are
/// normalized to `a <= b` since the two orders give isomorphic graphs.
pub fn candidates(universe: Universe, order: usize) -> Vec<FamilyId> {
    let mut out = Vec::new();
    let mut push = |id: FamilyId| {
        if id.order() == order && id.validate().is_ok() && id.in_universe(universe) {
            out.push(id);
        }
    };
    push(FamilyId::K4);
    for i in 1..=9 {
        push(FamilyId::H(i));
    }
    for i in 1..=4 {
        push(FamilyId::C5Var(i));
    }
    for i in 1..=3 {
        push(FamilyId::C6Var(i));
    }
    push(FamilyId::Cyc(order));
    if order >= 6 {
        push(FamilyId::F1 { l: order - 6 });
        push(FamilyId::F2 { l: order - 6 });
    }
    if order >= 7 {
        for a in [Shape::P4, Shape::C4] {
            push(FamilyId::F3 { l: order - 7, a });
        }
    }
    if order >= 8 {
        let rest = order - 8;
        for l in (2..=rest).step_by(4) {
            let l2 = rest - l;
            for extra in [F4Extra::None, F4Extra::V1YPrev, F4Extra::V1W2] {
                push(FamilyId::F4 { l, l2, extra });
            }
        }
        for (a, b) in [(Shape::P4, Shape::P4), (Shape::P4, Shape::C4), (Shape::C4, Shape::C4)] {
            push(FamilyId::F5 { l: rest, a, b });
        }
    }
    out
}

/// Family memberships of a graph, each with an isomorphism from the input
/// vertices onto the generated graph's vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationResult {
    pub matches: Vec<(FamilyId, Vec<usize>)>,
}

impl ClassificationResult {
    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn ids(&self) -> Vec<FamilyId> {
        self.matches.iter().map(|(id, _)| *id).collect()
    }
}

pub fn classify(g: &Graph, universe: Universe) -> Result<ClassificationResult> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: g.order(), max: CANON_MAX_ORDER });
    }
    let mut result = ClassificationResult::default();
    let mut own: Option<CanonicalForm> = None;
    for id in candidates(universe, g.order()) {
        let h = generate(&id)?;
        if h.size() != g.size() {
            continue;
        }
        let cg = match &own {
            Some(c) => c,
            None => own.insert(canonical_form(g)?),
        };
        let ch = canonical_form(&h)?;
        if *cg == ch {
            result.matches.push((id, map_between(cg, &ch)));
        }
    }
    Ok(result)
}

pub const LIST_MAX_ORDER: usize = 20;

/// Every member of `universe` with at most `max_order` vertices, one per
/// isomorphism class, ordered by order and then by id.
pub fn list_members(universe: Universe, max_order: usize) -> Result<Vec<(FamilyId, Graph)>> {
    if max_order > LIST_MAX_ORDER {
        return Err(Error::Range(format!("max order {max_order} exceeds {LIST_MAX_ORDER}")));
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=max_order {
        for id in candidates(universe, n) {
            let g = generate(&id)?;
            if seen.insert(canonical_form_unbounded(&g)) {
                out.push((id, g));
            }
        }
    }
    Ok(out)
}

/// A hand-made optimal packing colouring: value 3 for `T`, `X`, `Y` and 4
/// for the rest. `None` for ids without one on file.
pub fn reference_coloring(id: &FamilyId) -> Result<Option<PackingColoring>> {
    let g = generate(id)?;
    let mut pairs: Vec<(String, u32)> = Vec::new();
    let mut set = |names: &str, c: u32| {
        for n in names.split_whitespace() {
            pairs.push((n.to_string(), c));
        }
    };
    // periodic colours along `prefix1..prefix{len}`
    let pattern = |prefix: &str, len: usize, pat: [u32; 4]| -> Vec<(String, u32)> {
        (1..=len).map(|i| (format!("{prefix}{i}"), pat[(i - 1) % 4])).collect()
    };
    let k = match *id {
        FamilyId::T => {
            set("y'", 3);
            set("a b c", 1);
            set("d e", 2);
            3
        }
        FamilyId::X(n) => {
            set("t3", 3);
            set("t1", 1);
            set("t2", 2);
            pairs.extend(pattern("p", n, [1, 2, 1, 3]));
            3
        }
        FamilyId::Y(n) => {
            set("q1", 3);
            set("q2 q4", 1);
            set("q3", 2);
            pairs.extend(pattern("p", n, [1, 2, 1, 3]));
            3
        }
        FamilyId::H(1) | FamilyId::H(2) => {
            set("a c", 1);
            set("b", 2);
            set("d", 3);
            set("e", 4);
            4
        }
        FamilyId::H(4) => {
            set("a c e", 1);
            set("b f", 2);
            set("d", 3);
            set("g", 4);
            4
        }
        FamilyId::H(6) => {
            set("b c d", 1);
            set("a", 2);
            set("e", 3);
            set("f", 4);
            4
        }
        FamilyId::H(8) => {
            set("d i", 2);
            set("b g", 3);
            set("f", 4);
            set("a c e h j", 1);
            4
        }
        FamilyId::H(9) => {
            set("a e f g h", 1);
            set("b", 2);
            set("c", 3);
            set("d", 4);
            4
        }
        FamilyId::F1 { l } => {
            set("u", 3);
            set("u1 v1", 1);
            set("u2", 2);
            set("v", 4);
            set("v2", if l % 4 <= 1 { 2 } else { 3 });
            pairs.extend(pattern("x", l, [1, 2, 1, 3]));
            4
        }
        FamilyId::F4 { l, l2, extra: F4Extra::None } => {
            set("u1 u2 v1 z1 z2", 1);
            set("u v", 2);
            set("z", 4);
            pairs.extend(pattern("y", l, [3, 1, 2, 1]));
            pairs.extend(pattern("w", l2, [1, 3, 1, 2]));
            4
        }
        FamilyId::F5 { l, .. } => {
            set("u1 u3 v1 v3", 1);
            set("u2 v2", 2);
            set("u", 3);
            set("v", 4);
            pairs.extend(pattern("x", l, [1, 2, 1, 3]));
            4
        }
        _ => return Ok(None),
    };
    let refs: Vec<(&str, u32)> = pairs.iter().map(|(n, c)| (n.as_str(), *c)).collect();
    PackingColoring::from_labels(&g, k, &refs).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::named::*;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn net_graph_shape() {
        let h3 = gen("H3");
        assert_eq!((h3.order(), h3.size()), (6, 6));
        let leaves = (0..6).filter(|&v| h3.degree(v) == 1).count();
        assert_eq!(leaves, 3);
        assert_eq!(h3.clique_number(), 3);
        assert_eq!(h3, gen("Net"));
    }

    #[test]
    fn h5_and_h7_are_cycles_with_two_leaves() {
        let h5 = gen("H5");
        let c4 = h5.induced_subgraph(&[0, 1, 2, 3]);
        assert!(are_isomorphic(&c4, &cycle(4)).unwrap());
        let (e, f) = (h5.vertex_by_label("e").unwrap(), h5.vertex_by_label("f").unwrap());
        assert_eq!((h5.degree(e), h5.degree(f)), (1, 1));
        let h7 = gen("H7");
        let d = h7.all_pairs_distances();
        let (b, e) = (h7.vertex_by_label("b").unwrap(), h7.vertex_by_label("e").unwrap());
        assert_eq!(d.get(b, e), 3);
        assert_eq!(h7.size(), 10);
    }

    #[test]
    fn h6_minus_ad_is_h5() {
        let h6 = gen("H6");
        let (a, d) = (h6.vertex_by_label("a").unwrap(), h6.vertex_by_label("d").unwrap());
        assert!(are_isomorphic(&h6.delete_edge(a, d).unwrap(), &gen("H5")).unwrap());
    }

    #[test]
    fn small_members() {
        let f1 = gen("F1(l=0)");
        assert_eq!((f1.order(), f1.size()), (6, 7));
        let x1 = gen("X(1)");
        assert_eq!((x1.order(), x1.size()), (4, 4));
        let y5 = gen("Y(5)");
        assert_eq!((y5.order(), y5.size()), (9, 9));
        assert!(are_isomorphic(&gen("C(7)"), &cycle(7)).unwrap());
        let c6 = gen("C6var(3)");
        assert_eq!(c6.size(), 9);
    }

    #[test]
    fn f4_extras() {
        let base = gen("F4(l=2,l'=4,extra=none)");
        assert_eq!(base.order(), 14);
        assert_eq!(base.size(), 13, "F4 without extras is a tree");
        let with = gen("F4(l=2,l'=4,extra=v1_w2)");
        let (v1, w2) = (with.vertex_by_label("v1").unwrap(), with.vertex_by_label("w2").unwrap());
        assert!(with.has_edge(v1, w2));
        let prev = gen("F4(l=6,l'=0,extra=v1_y_prev)");
        let (v1, y5) = (prev.vertex_by_label("v1").unwrap(), prev.vertex_by_label("y5").unwrap());
        assert!(prev.has_edge(v1, y5));
        assert!("F4(l=2,l'=0,extra=v1_w2)".parse::<FamilyId>().is_err());
    }

    #[test]
    fn illegal_parameters() {
        for s in ["F2(l=1)", "F1(l=3)", "F3(l=0)", "F3(l=2)", "F4(l=4)", "F5(l=3)", "C(8)", "C(4)", "H10", "C5var(5)", "X(0)", "bogus", "F1(l=x)"] {
            assert!(s.parse::<FamilyId>().is_err(), "{s} should be rejected");
        }
        assert!(generate(&FamilyId::F2 { l: 1 }).is_err());
    }

    #[test]
    fn id_syntax_round_trips() {
        for s in ["F1(l=5)", "H7", "C(9)", "F5(l=2,a=C4,b=P4)", "F4(l=2,l'=4,extra=none)", "F3(l=4,a=C4)", "C5var(2)", "X(3)", "T", "K4", "Net"] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert_eq!("F3(l=8)".parse::<FamilyId>().unwrap(), FamilyId::F3 { l: 8, a: Shape::P4 });
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&cycle(7), Universe::VertexCritical).unwrap().ids(), vec![FamilyId::Cyc(7)]);
        assert!(classify(&cycle(8), Universe::VertexCritical).unwrap().is_empty());
        let h6 = gen("H6");
        assert_eq!(classify(&h6, Universe::VertexCritical).unwrap().ids(), vec![FamilyId::H(6)]);
        assert!(classify(&h6, Universe::Critical).unwrap().is_empty());
        let net = gen("Net");
        for u in [Universe::VertexCritical, Universe::Critical] {
            assert_eq!(classify(&net, u).unwrap().ids(), vec![FamilyId::H(3)]);
        }
        assert!(classify(&cycle(13), Universe::Critical).is_err());
    }

    #[test]
    fn classification_maps_are_isomorphisms() {
        let g = gen("F3(l=4,a=C4)");
        let shuffled = g.permute(&[10, 3, 7, 0, 9, 1, 5, 2, 8, 4, 6]);
        let r = classify(&shuffled, Universe::VertexCritical).unwrap();
        assert_eq!(r.ids(), vec![FamilyId::F3 { l: 4, a: Shape::C4 }]);
        let target = generate(&r.matches[0].0).unwrap();
        for (u, v) in shuffled.edges() {
            assert!(target.has_edge(r.matches[0].1[u], r.matches[0].1[v]));
        }
    }

    #[test]
    fn list_members_small() {
        let vc5: Vec<FamilyId> = list_members(Universe::VertexCritical, 5).unwrap().into_iter().map(|(id, _)| id).collect();
        for id in [FamilyId::K4, FamilyId::H(1), FamilyId::H(2), FamilyId::Cyc(5)] {
            assert!(vc5.contains(&id));
        }
        for i in 1..=4 {
            assert!(vc5.contains(&FamilyId::C5Var(i)));
        }
        let c5: Vec<FamilyId> = list_members(Universe::Critical, 5).unwrap().into_iter().map(|(id, _)| id).collect();
        assert_eq!(c5, vec![FamilyId::K4, FamilyId::H(1), FamilyId::H(2), FamilyId::Cyc(5)]);
        assert!(list_members(Universe::VertexCritical, 3).unwrap().is_empty());
        assert!(list_members(Universe::Critical, 3).unwrap().is_empty());
        assert!(list_members(Universe::Critical, 21).is_err());
    }

    #[test]
    fn critical_universe_is_contained_in_vertex_critical() {
        for n in 1..=20 {
            for id in candidates(Universe::Critical, n) {
                assert!(id.in_universe(Universe::VertexCritical), "{id}");
            }
        }
    }

    #[test]
    fn universe_names() {
        assert_eq!("critical".parse::<Universe>().unwrap(), Universe::Critical);
        assert_eq!("subgraph".parse::<Universe>().unwrap(), Universe::Critical);
        assert_eq!("vertex".parse::<Universe>().unwrap(), Universe::VertexCritical);
        assert!("edge".parse::<Universe>().is_err());
    }
}
