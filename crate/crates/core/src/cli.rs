//! The `pcolor` command line.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::critical::analyze;
use crate::dot::to_dot;
use crate::error::{Error, Result};
use crate::families::{classify, generate, list_members, FamilyId, Universe};
use crate::g3::recognize_g3;
use crate::graph::{parse_edge_list, Graph};
use crate::graph6::{parse_graph6, parse_graph6_lines, to_graph6};
use crate::harness::{verify, Source, Theorem};
use crate::solver::{chi_rho, find_k_packing_coloring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Packing chromatic number and a witness colouring
    Chi,
    /// A k-packing colouring, or NONE
    Color,
    /// Vertex and edge deletion report
    Critical,
    /// Family memberships
    Classify,
    /// Structural certificate for value 3, or NOT-3
    G3,
    /// Emit graph6
    Gen,
    /// Emit every family member up to --max-n
    List,
    /// Run an exhaustive check
    Verify,
    /// Emit DOT coloured by a minimum packing colouring
    Render,
}

#[derive(Debug, Parser)]
#[command(name = "pcolor", version, about = "Packing colorings of small graphs")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Graph as a graph6 string
    #[arg(long, group = "input")]
    g6: Option<String>,
    /// File of graph6 lines
    #[arg(long = "g6-file", group = "input")]
    g6_file: Option<PathBuf>,
    /// Edge-list file
    #[arg(long, group = "input")]
    edges: Option<PathBuf>,
    /// Family member, e.g. "F1(l=5)", "H7", "C(9)"
    #[arg(long, group = "input")]
    family: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    /// vertex or subgraph
    #[arg(long, default_value = "vertex")]
    universe: String,
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// vc4, c4, g3 or formulas
    #[arg(long)]
    theorem: Option<String>,
    /// graph6 corpus replacing internal enumeration
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, env = "PCOLOR_JOBS")]
    jobs: Option<usize>,
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs `pcolor` with `argv` (program name first); `stdin` is read only
/// when no input flag is given.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&args, stdin) {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(e) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("pcolor: {e}\n") },
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn input_graphs(args: &Args, stdin: &mut dyn Read) -> Result<Vec<Graph>> {
    let graphs = if let Some(s) = &args.g6 {
        vec![parse_graph6(s.trim())?]
    } else if let Some(p) = &args.g6_file {
        parse_graph6_lines(&read_file(p)?)?
    } else if let Some(p) = &args.edges {
        vec![parse_edge_list(&read_file(p)?)?]
    } else if let Some(spec) = &args.family {
        vec![generate(&spec.parse::<FamilyId>()?)?]
    } else {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        parse_graph6_lines(&text)?
    };
    if graphs.is_empty() {
        return Err(Error::Graph6("no graphs on input".into()));
    }
    Ok(graphs)
}

fn dispatch(args: &Args, stdin: &mut dyn Read) -> Result<(i32, String)> {
    match args.command {
        Command::List => {
            let universe: Universe = args.universe.parse()?;
            let mut out = String::new();
            for (id, g) in list_members(universe, args.max_n.unwrap_or(10))? {
                out.push_str(&format!("{} # {id}\n", to_graph6(&g)?));
            }
            return Ok((EXIT_OK, out));
        }
        Command::Verify => return run_verify(args),
        _ => {}
    }
    let graphs = input_graphs(args, stdin)?;
    let many = graphs.len() > 1;
    let mut out = String::new();
    for g in &graphs {
        let block = single(args, g)?;
        if many && args.command != Command::Gen {
            let g6 = to_graph6(g)?;
            if args.command == Command::Classify {
                out.push_str(&format!("{g6} {block}"));
                continue;
            }
            out.push_str(&format!("# {g6}\n"));
        }
        out.push_str(&block);
    }
    Ok((EXIT_OK, out))
}

fn single(args: &Args, g: &Graph) -> Result<String> {
    Ok(match args.command {
        Command::Chi => {
            let r = chi_rho(g)?;
            format!("chi_rho = {}\n{}", r.value, r.witness.to_text())
        }
        Command::Color => {
            let k = args.k.ok_or_else(|| Error::Range("color needs --k".into()))?;
            match find_k_packing_coloring(g, k) {
                Some(c) => c.to_text(),
                None => "NONE\n".into(),
            }
        }
        Command::Critical => analyze(g)?.to_string(),
        Command::Classify => {
            let ids = classify(g, args.universe.parse()?)?.ids();
            if ids.is_empty() {
                "NONE\n".into()
            } else {
                ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n"
            }
        }
        Command::G3 => match recognize_g3(g)? {
            Some(cert) => cert.to_text(),
            None => "NOT-3\n".into(),
        },
        Command::Gen => format!("{}\n", to_graph6(g)?),
        Command::Render => {
            let name = args.family.as_deref().unwrap_or("G");
            let coloring = if g.order() == 0 { None } else { Some(chi_rho(g)?.witness) };
            to_dot(g, name, coloring.as_ref())
        }
        Command::List | Command::Verify => unreachable!("handled before input parsing"),
    })
}

fn run_verify(args: &Args) -> Result<(i32, String)> {
    let theorem: Theorem = args
        .theorem
        .as_deref()
        .ok_or_else(|| Error::Range("verify needs --theorem vc4|c4|g3|formulas".into()))?
        .parse()?;
    let max_n = args.max_n.unwrap_or_else(|| theorem.default_max_n());
    let corpus = match &args.corpus {
        Some(p) => Some(parse_graph6_lines(&read_file(p)?)?),
        None => None,
    };
    let source = match &corpus {
        Some(gs) => Source::Corpus(gs),
        None => Source::Generated,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Range(format!("cannot start {} workers: {e}", args.jobs.unwrap_or(0))))?;
    let report = pool.install(|| verify(theorem, max_n, source))?;
    let code = if report.verified() { EXIT_OK } else { EXIT_MISMATCH };
    Ok((code, format!("{report}\n")))
}
