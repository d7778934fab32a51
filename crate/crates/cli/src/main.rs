//! `tclq`: solve, cover, verify and generate.
//!
//! Exit codes: 0 success or valid, 1 invalid decomposition or a NO answer,
//! 2 usage or parse error, 3 capacity exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tclq_core::cograph::{self, Cotree};
use tclq_core::generate::{gen_corpora, Family, GenParams, Instance};
use tclq_core::ie::ie_chromatic_with_construction;
use tclq_core::io::{
    parse_graph, parse_permutation, verify, write_graph, write_permutation, write_tcd,
};
use tclq_core::oracle::{tcl_oracle, OracleBudget};
use tclq_core::{fast_table, lawler_table, permutation, solver_dp, solver_pmc};
use tclq_core::{Decomposition, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "tclq", version, about = "Tree-clique width of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute tcl, or decide tcl <= K with --k.
    Solve(SolveArgs),
    /// Minimum partition of the vertices into cliques.
    Cover(CoverArgs),
    /// Check a decomposition file against a graph file.
    Verify {
        graph: PathBuf,
        decomposition: PathBuf,
    },
    /// Write seeded instances.
    Gen(GenArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "cograph", "perm"])))]
struct SolveArgs {
    /// Graph file (`p edge n m`, `e u v`).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Cotree file (s-expression).
    #[arg(long)]
    cograph: Option<PathBuf>,
    /// Permutation file (values 1..n).
    #[arg(long)]
    perm: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    /// Decide tcl <= K and print YES or NO.
    #[arg(long)]
    k: Option<usize>,
    /// Write the witness decomposition here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Dp,
    Pmc,
    Oracle,
    Auto,
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Lawler)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Lawler,
    Fast,
    Ie,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Width of generated k-trees.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Edge probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Apex count for `reduction`; defaults to n + 1.
    #[arg(long)]
    apexes: Option<usize>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Directory for the instance files; required when --count > 1.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ktree,
    Cograph,
    Permutation,
    Reduction,
    Random,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Ktree => Family::KTree,
            FamilyArg::Cograph => Family::Cograph,
            FamilyArg::Permutation => Family::Permutation,
            FamilyArg::Reduction => Family::Reduction,
            FamilyArg::Random => Family::Random,
        }
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapacityExceeded { .. } | Error::BudgetExceeded(_) => 3,
            Error::InvalidDecomposition(_) | Error::Disconnected => 1,
            _ => 2,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn tagged<T>(path: &Path, r: tclq_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.msg = format!("{}: {}", path.display(), f.msg);
        f
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Cover(a) => cover(a),
        Command::Verify {
            graph,
            decomposition,
        } => verify_files(&graph, &decomposition),
        Command::Gen(a) => gen(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("tclq: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

/// Oracle value of a possibly disconnected graph: the maximum over components.
fn oracle_tcl(g: &Graph) -> tclq_core::Result<usize> {
    let mut best = 0;
    for c in g.components_within(g.vertices()) {
        best = best.max(tcl_oracle(
            &g.induced_subgraph(c).0,
            OracleBudget::default(),
        )?);
    }
    Ok(best)
}

fn solve(a: SolveArgs) -> Result<u8, Failure> {
    if a.k == Some(0) {
        return Err(usage("--k must be at least 1"));
    }
    let (answer, n, witness): (usize, usize, Option<Decomposition>) = if let Some(path) = &a.cograph
    {
        if a.algo != Algo::Auto {
            return Err(usage("--algo applies to --input only"));
        }
        let t = tagged(path, Cotree::parse(&read(path)?))?.binarize();
        (cograph::compute_tcl(&t)?.root(&t), t.n(), None)
    } else if let Some(path) = &a.perm {
        if a.algo != Algo::Auto {
            return Err(usage("--algo applies to --input only"));
        }
        let pi = tagged(path, parse_permutation(&read(path)?))?;
        if let Some(k) = a.k {
            let d = permutation::decide_tcl_at_most_k(&pi, k)?;
            return decision(d.answer, d.witness, pi.len(), a.out.as_deref());
        }
        let (w, d) = permutation::compute_tcl(&pi)?;
        (w, pi.len(), Some(d))
    } else {
        let path = a.input.as_ref().expect("clap enforces one source");
        let g = tagged(path, parse_graph(&read(path)?))?;
        match a.algo {
            Algo::Oracle => (oracle_tcl(&g)?, g.n(), None),
            Algo::Dp => {
                if let (Some(k), true) = (a.k, g.is_connected() && g.n() > 0) {
                    let d = solver_dp::decide_tcl_at_most_k(&g, k, &lawler_table(&g, false)?)?;
                    return decision(d.answer, d.witness, g.n(), a.out.as_deref());
                }
                let (w, d) = solver_dp::compute_tcl(&g)?;
                (w, g.n(), Some(d))
            }
            Algo::Pmc | Algo::Auto => {
                let (w, d) = solver_pmc::compute_tcl(&g)?;
                (w, g.n(), Some(d))
            }
        }
    };
    if let Some(k) = a.k {
        return decision(
            answer <= k,
            witness.filter(|_| answer <= k),
            n,
            a.out.as_deref(),
        );
    }
    println!("tcl {answer}");
    emit(witness, n, a.out.as_deref())?;
    Ok(0)
}

fn decision(
    yes: bool,
    witness: Option<Decomposition>,
    n: usize,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    if !yes {
        println!("NO");
        return Ok(1);
    }
    println!("YES");
    emit(witness, n, out)?;
    Ok(0)
}

fn emit(witness: Option<Decomposition>, n: usize, out: Option<&Path>) -> Result<(), Failure> {
    match (out, witness) {
        (None, _) => Ok(()),
        (Some(path), Some(d)) => write(path, &write_tcd(&d, n)),
        (Some(_), None) => Err(usage("this solver produces no decomposition; drop --out")),
    }
}

fn cover(a: CoverArgs) -> Result<u8, Failure> {
    let g = tagged(&a.input, parse_graph(&read(&a.input)?))?;
    let parts: Vec<VertexSet> = match a.method {
        Method::Lawler => lawler_table(&g, false)?.partition(&g, g.vertices()),
        Method::Fast => fast_table(&g)?.partition(&g, g.vertices()),
        Method::Ie => {
            let (k, colour) = ie_chromatic_with_construction(&g.complement())?;
            let mut parts = vec![VertexSet::EMPTY; k];
            for (v, &c) in colour.iter().enumerate() {
                parts[c].insert(v);
            }
            parts
        }
    };
    println!("vcc {}", parts.len());
    for p in parts {
        let vs: Vec<String> = p.iter().map(|v| (v + 1).to_string()).collect();
        println!("clique {}", vs.join(" "));
    }
    Ok(0)
}

fn verify_files(graph: &Path, decomposition: &Path) -> Result<u8, Failure> {
    let v = verify(&read(graph)?, &read(decomposition)?);
    if v.code == 2 {
        return Err(usage(v.report));
    }
    println!("{}", v.report);
    Ok(v.code as u8)
}

fn gen(a: GenArgs) -> Result<u8, Failure> {
    if a.count > 1 && a.out_dir.is_none() {
        return Err(usage("--count > 1 needs --out-dir"));
    }
    let params = GenParams {
        n: a.n,
        k: a.k,
        p: a.p,
        apexes: a.apexes.unwrap_or(0),
        count: a.count,
    };
    let family = Family::from(a.family);
    let instances = gen_corpora(a.seed, family, params)?;
    let Some(dir) = a.out_dir else {
        print!("{}", primary_text(&instances[0]));
        return Ok(0);
    };
    fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let stem = format!("{:?}", family).to_lowercase();
    for (i, inst) in instances.iter().enumerate() {
        let base = dir.join(format!("{stem}-{}-{i:03}", a.seed));
        write(&base.with_extension("col"), &write_graph(inst.graph()))?;
        match inst {
            Instance::Cograph(t, _) => write(&base.with_extension("ct"), &format!("{t}\n"))?,
            Instance::Permutation(pi, _) => {
                write(&base.with_extension("pi"), &write_permutation(pi))?
            }
            Instance::Reduction(src, _) => {
                write(&base.with_extension("src.col"), &write_graph(src))?
            }
            Instance::Graph(_) => {}
        }
    }
    println!("wrote {} instances to {}", instances.len(), dir.display());
    Ok(0)
}

/// What `gen` prints without `--out-dir`: the cotree or permutation for
/// those families, the graph otherwise.
fn primary_text(inst: &Instance) -> String {
    match inst {
        Instance::Cograph(t, _) => format!("{t}\n"),
        Instance::Permutation(pi, _) => write_permutation(pi),
        Instance::Graph(g) | Instance::Reduction(_, g) => write_graph(g),
    }
}
