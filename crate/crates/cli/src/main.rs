//! Command-line front end for the `walkineq` library.
//!
//! Exit codes follow a regression-gate contract: 0 means the computation
//! succeeded and every checked inequality holds, 1 means a violation (or a
//! predicate match in violation-hunting searches), and 2 means a usage,
//! parse, or precondition error.

use std::fmt;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use walkineq::graphs::parse_graph;
use walkineq::indices::{verify_walk_identities, zagreb};
use walkineq::inequalities::{
    digraph_walk_inequality, eulerian_inequality, matrix_power_inequality,
    sum_symmetric_inequality, zagreb_inequality, Applicability, EqualityClass, InequalityReport,
    ReportDetail, ZagrebReport,
};
use walkineq::matrices::RationalMatrix;
use walkineq::orderings::OrderingVerdict;
use walkineq::search::{
    run_search_with_progress, ClassFilter, Predicate, SearchResult, SearchSpec,
};
use walkineq::walks::walk_profile;
use walkineq::{canonical_json, Error};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "walkineq",
    version,
    about = "Exact walk counts, Zagreb indices, and matrix-power inequality checks"
)]
struct Cli {
    /// Emit canonical JSON (sorted keys, rationals as "p/q" strings).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count walks of a fixed length in a graph or digraph file.
    Walks {
        /// Graph file ("undirected|directed <n> <m>" header plus edge lines).
        #[arg(long)]
        input: PathBuf,
        /// Walk length k (number of edges traversed).
        #[arg(long)]
        length: usize,
        /// Also print the per-vertex starting and ending counts.
        #[arg(long)]
        per_vertex: bool,
    },
    /// Compute the Zagreb indices M1 and M2 and verify the walk identities.
    Indices {
        /// Undirected graph file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Check one inequality on a graph, digraph, or matrix file.
    Check {
        /// Which inequality to check.
        #[arg(value_enum)]
        which: CheckKind,
        /// Input file; a graph for zagreb/walk-ineq/eulerian, a matrix for
        /// sum-symmetric.
        #[arg(long)]
        input: PathBuf,
        /// Walk length for the left factor (walk-ineq only).
        #[arg(long)]
        k: Option<usize>,
        /// Walk length for the right factor (walk-ineq only).
        #[arg(long)]
        l: Option<usize>,
    },
    /// Evaluate S(A^k)·S(A^l) against n·S(A^{k+l}) for a matrix file.
    Matrix {
        /// Rational matrix file ("matrix <n>" header plus n rows).
        #[arg(long)]
        input: PathBuf,
        /// Exponent of the left power.
        #[arg(long)]
        k: usize,
        /// Exponent of the right power.
        #[arg(long)]
        l: usize,
    },
    /// Sweep every labeled graph or digraph in a class for a predicate.
    Search {
        /// Enumerate loop-free digraphs instead of simple graphs.
        #[arg(long)]
        directed: bool,
        /// Structural class to restrict the sweep to.
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        /// Smallest vertex count to scan.
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Largest vertex count to scan.
        #[arg(long)]
        max_n: usize,
        /// Predicate each structure is tested against.
        #[arg(long, value_enum)]
        predicate: PredicateArg,
        /// Walk length k (walk-ineq-violation and ordering-census only).
        #[arg(long)]
        k: Option<usize>,
        /// Walk length l (walk-ineq-violation and ordering-census only).
        #[arg(long)]
        l: Option<usize>,
        /// Maximum number of witnesses to keep.
        #[arg(long, default_value_t = 20)]
        limit: usize,
        /// Allow vertex counts beyond the default safety cap.
        #[arg(long)]
        override_cap: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Zagreb,
    WalkIneq,
    SumSymmetric,
    Eulerian,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Connected,
    Tree,
    Forest,
    Bipartite,
    Chemical,
    DegreeBalanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    ZagrebViolation,
    ZagrebEquality,
    WalkIneqViolation,
    OrderingCensus,
}

enum CliError {
    Io(PathBuf, std::io::Error),
    Core(Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "cannot read {}: {e}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Walks {
            input,
            length,
            per_vertex,
        } => cmd_walks(&input, length, per_vertex, cli.json),
        Command::Indices { input } => cmd_indices(&input, cli.json),
        Command::Check { which, input, k, l } => cmd_check(which, &input, k, l, cli.json),
        Command::Matrix { input, k, l } => cmd_matrix(&input, k, l, cli.json),
        Command::Search {
            directed,
            class,
            min_n,
            max_n,
            predicate,
            k,
            l,
            limit,
            override_cap,
        } => cmd_search(
            directed,
            class,
            min_n,
            max_n,
            predicate,
            k,
            l,
            limit,
            override_cap,
            cli.json,
        ),
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))
}

fn cmd_walks(input: &PathBuf, length: usize, per_vertex: bool, json: bool) -> Result<u8, CliError> {
    let g = parse_graph(&read_input(input)?)?;
    let profile = walk_profile(&g, length);
    if json {
        println!("{}", canonical_json(&profile));
    } else {
        if per_vertex {
            println!("s_{length} = ({})", join(&profile.starting));
            println!("e_{length} = ({})", join(&profile.ending));
        }
        println!("w_{length} = {}", profile.total);
    }
    Ok(0)
}

fn cmd_indices(input: &PathBuf, json: bool) -> Result<u8, CliError> {
    let any = parse_graph(&read_input(input)?)?;
    let g = any.as_undirected()?;
    let values = zagreb(g);
    let identities = verify_walk_identities(g);
    if json {
        let value = serde_json::json!({
            "zagreb": serde_json::to_value(&values).expect("serializable"),
            "identities": serde_json::to_value(&identities).expect("serializable"),
        });
        println!("{}", canonical_json(&value));
    } else {
        println!("n = {}", values.n);
        println!("m = {}", values.m);
        println!("M1 = {}", values.m1);
        println!("M2 = {}", values.m2);
        println!("M1 = w_2: {}", identities.m1_eq_w2);
        println!("2*M2 = w_3: {}", identities.two_m2_eq_w3);
        println!("w_0 = n: {}", identities.w0_eq_n);
        println!("w_1 = 2m: {}", identities.w1_eq_2m);
    }
    Ok(if identities.all_hold() { 0 } else { EXIT_VIOLATION })
}

fn cmd_check(
    which: CheckKind,
    input: &PathBuf,
    k: Option<usize>,
    l: Option<usize>,
    json: bool,
) -> Result<u8, CliError> {
    let text = read_input(input)?;
    let report = match which {
        CheckKind::Zagreb => {
            reject_kl(k, l, "zagreb")?;
            let any = parse_graph(&text)?;
            let report = zagreb_inequality(any.as_undirected()?)?;
            print_report(json, || canonical_json(&report), render_zagreb_text(&report));
            return Ok(verdict_code(report.holds));
        }
        CheckKind::WalkIneq => {
            let (k, l) = require_kl(k, l)?;
            let any = parse_graph(&text)?;
            digraph_walk_inequality(&any, k, l)
        }
        CheckKind::SumSymmetric => {
            reject_kl(k, l, "sum-symmetric")?;
            let a = RationalMatrix::parse(&text)?;
            sum_symmetric_inequality(&a)?
        }
        CheckKind::Eulerian => {
            reject_kl(k, l, "eulerian")?;
            let any = parse_graph(&text)?;
            eulerian_inequality(any.as_directed()?)?
        }
    };
    print_report(json, || canonical_json(&report), render_inequality_text(&report));
    Ok(verdict_code(report.holds))
}

fn cmd_matrix(input: &PathBuf, k: usize, l: usize, json: bool) -> Result<u8, CliError> {
    let a = RationalMatrix::parse(&read_input(input)?)?;
    let report = matrix_power_inequality(&a, k, l);
    print_report(json, || canonical_json(&report), render_inequality_text(&report));
    Ok(verdict_code(report.holds))
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    directed: bool,
    class: ClassArg,
    min_n: usize,
    max_n: usize,
    predicate: PredicateArg,
    k: Option<usize>,
    l: Option<usize>,
    limit: usize,
    override_cap: bool,
    json: bool,
) -> Result<u8, CliError> {
    let predicate = match predicate {
        PredicateArg::ZagrebViolation => {
            reject_kl(k, l, "zagreb-violation")?;
            Predicate::ZagrebViolation
        }
        PredicateArg::ZagrebEquality => {
            reject_kl(k, l, "zagreb-equality")?;
            Predicate::ZagrebEquality
        }
        PredicateArg::WalkIneqViolation => {
            let (k, l) = require_kl(k, l)?;
            Predicate::WalkIneqViolation { k, l }
        }
        PredicateArg::OrderingCensus => {
            let (k, l) = require_kl(k, l)?;
            Predicate::OrderingCensus { k, l }
        }
    };
    let spec = SearchSpec {
        directed,
        min_n,
        max_n,
        class_filter: match class {
            ClassArg::All => ClassFilter::All,
            ClassArg::Connected => ClassFilter::Connected,
            ClassArg::Tree => ClassFilter::Tree,
            ClassArg::Forest => ClassFilter::Forest,
            ClassArg::Bipartite => ClassFilter::Bipartite,
            ClassArg::Chemical => ClassFilter::Chemical,
            ClassArg::DegreeBalanced => ClassFilter::DegreeBalanced,
        },
        predicate,
        limit,
        override_cap,
    };
    let result = run_search_with_progress(&spec, |n, examined, matched| {
        eprintln!("n={n}: examined {examined}, matched {matched}");
    })?;
    if json {
        println!("{}", canonical_json(&result));
    } else {
        print!("{}", render_search_text(&result));
    }
    let hunting = spec.predicate.is_violation_hunt();
    Ok(if hunting && result.matched > 0 {
        EXIT_VIOLATION
    } else {
        0
    })
}

fn require_kl(k: Option<usize>, l: Option<usize>) -> Result<(usize, usize), CliError> {
    match (k, l) {
        (Some(k), Some(l)) => Ok((k, l)),
        _ => Err(CliError::Usage(
            "this mode requires both --k and --l".into(),
        )),
    }
}

fn reject_kl(k: Option<usize>, l: Option<usize>, mode: &str) -> Result<(), CliError> {
    if k.is_some() || l.is_some() {
        Err(CliError::Usage(format!(
            "--k and --l do not apply to `{mode}`"
        )))
    } else {
        Ok(())
    }
}

fn verdict_code(holds: bool) -> u8 {
    if holds {
        0
    } else {
        EXIT_VIOLATION
    }
}

fn print_report(json: bool, json_text: impl FnOnce() -> String, text: String) {
    if json {
        println!("{}", json_text());
    } else {
        print!("{text}");
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn ordering_word(v: &OrderingVerdict) -> &'static str {
    match (v.similarly, v.conversely) {
        (true, true) => "similarly and conversely",
        (true, false) => "similarly",
        (false, true) => "conversely",
        (false, false) => "neither",
    }
}

fn applicability_word(a: Applicability) -> &'static str {
    match a {
        Applicability::Le => "le",
        Applicability::Ge => "ge",
        Applicability::Both => "both",
        Applicability::None => "none",
    }
}

fn equality_class_word(c: EqualityClass) -> &'static str {
    match c {
        EqualityClass::Regular => "regular",
        EqualityClass::CompleteBipartite => "complete_bipartite",
        EqualityClass::Both => "both",
        EqualityClass::Other => "other",
        EqualityClass::NotApplicable => "not_applicable",
    }
}

fn render_inequality_text(r: &InequalityReport) -> String {
    let mut out = String::new();
    match &r.detail {
        ReportDetail::MatrixPower { k, l, ordering, .. } => {
            let _ = writeln!(
                out,
                "ordering of c^[{k}] and r^[{l}]: {}",
                ordering_word(ordering)
            );
        }
        ReportDetail::WalkCorollary { k, l, ordering, .. } => {
            let _ = writeln!(
                out,
                "ordering of e^[{k}] and s^[{l}]: {}",
                ordering_word(ordering)
            );
        }
        ReportDetail::SumSymmetric {
            cauchy_lhs,
            cauchy_rhs,
            ..
        } => {
            let _ = writeln!(out, "cauchy route: {cauchy_lhs} vs {cauchy_rhs}");
        }
        ReportDetail::Eulerian {
            ratio_lhs,
            ratio_rhs,
            ..
        } => match (ratio_lhs, ratio_rhs) {
            (Some(a), Some(b)) => {
                let _ = writeln!(out, "ratio form: w_1/w_0 = {a} vs w_2/w_1 = {b}");
            }
            _ => {
                let _ = writeln!(out, "ratio form: undefined (a walk count is zero)");
            }
        },
    }
    let _ = writeln!(out, "applicable: {}", applicability_word(r.applicable));
    let _ = writeln!(out, "lhs = {}", r.lhs);
    let _ = writeln!(out, "rhs = {}", r.rhs);
    let _ = writeln!(out, "holds: {}", r.holds);
    let _ = writeln!(out, "equality: {}", r.equality);
    out
}

fn render_zagreb_text(r: &ZagrebReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "M1/n = {}", r.m1_over_n);
    let _ = writeln!(out, "M2/m = {}", r.m2_over_m);
    let _ = writeln!(
        out,
        "hypothesis similarly ordered: {}",
        r.hypothesis_similarly_ordered
    );
    let _ = writeln!(out, "holds: {}", r.holds);
    let _ = writeln!(out, "equality: {}", r.equality);
    let _ = writeln!(out, "equality class: {}", equality_class_word(r.equality_class));
    out
}

fn render_search_text(r: &SearchResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "examined: {}", r.examined);
    let _ = writeln!(out, "matched: {}", r.matched);
    for (i, w) in r.witnesses.iter().enumerate() {
        let _ = writeln!(out, "witness {}:", i + 1);
        out.push_str(&w.graph);
    }
    if !r.summary.is_empty() {
        let _ = writeln!(out, "summary:");
        for (key, count) in &r.summary {
            let _ = writeln!(out, "  {key} = {count}");
        }
    }
    out
}
