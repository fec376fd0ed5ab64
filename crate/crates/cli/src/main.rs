use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hamc::caterpillar::{build_graph, classify, decompose_segments, CaterpillarSpec};
use hamc::closed_form::{delta_from_lambda, lambda_closed_form, lambda_lower_bound, lemma_lower_bound_01};
use hamc::construct::{construct, verify_plan, AugmentationPlan};
use hamc::io::parse_edge_list;
use hamc::oracle::{min_augmentation, Mode, Target};
use hamc::sweep::{self, Constraint, Family, GenRanges, SweepConfig};
use hamc::{Error, Graph};

const EXIT_PARSE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_INVALID_PLAN: u8 = 5;
const EXIT_BUDGET: u8 = 6;
const EXIT_UNSATISFIABLE: u8 = 7;

#[derive(Parser)]
#[command(name = "hamc", version, about = "Hamiltonian completion numbers of caterpillar trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print class, closed-form value, lower bounds and the spanning-path number.
    Compute {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Build a completing edge set with a witness cycle and write it as JSON.
    Construct {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a plan against a graph (edge list or caterpillar spec).
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        plan: PathBuf,
    },
    /// Exact minimum augmentation by exhaustive search.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 8)]
        budget: usize,
        /// Target a spanning path instead of a spanning cycle.
        #[arg(long)]
        path: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Sweep a family and tabulate formula, oracle and construction sizes.
    Compare {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Leaves per spine vertex for the regularK family.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
        /// Number of specs for the random family.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, default_value_t = 12)]
        oracle_max_vertices: usize,
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded random caterpillar spec.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        l_min: usize,
        #[arg(long, default_value_t = 4)]
        l_max: usize,
        /// any, supported, regular1, regular2, regularK, atleast3, zero2, deserted
        #[arg(long, default_value = "any")]
        constraint: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Caterpillar spec JSON file.
    #[arg(long)]
    spec: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) | Error::TooSmallForCycle(_) => EXIT_UNSUPPORTED,
            Error::InvalidPlan(_) | Error::Inconsistent => EXIT_INTERNAL,
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            Error::Unsatisfiable(_) => EXIT_UNSATISFIABLE,
            Error::Parse(_) | Error::Json(_) | Error::Graph(_) | Error::EmptySpine => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn read_spec(path: &Path) -> Result<CaterpillarSpec, Failure> {
    CaterpillarSpec::from_json(&read(path)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.graph, &input.spec) {
        (Some(path), _) => parse_edge_list(&read(path)?)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))),
        (None, Some(path)) => Ok(build_graph(&read_spec(path)?).0),
        (None, None) => Err(Failure::new(EXIT_PARSE, "need --graph or --spec")),
    }
}

fn emit(out: &Option<PathBuf>, text: String) -> CmdResult {
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn edges_json(edges: &[hamc::Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|e| format!("[{},{}]", e.lo(), e.hi())).collect();
    format!("[{}]", parts.join(","))
}

fn order_json(order: &[usize]) -> String {
    let parts: Vec<String> = order.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn compute(spec_path: &Path) -> CmdResult {
    let spec = read_spec(spec_path)?;
    let (g, _) = build_graph(&spec);
    let decomp = decompose_segments(&spec);
    let mut out = String::new();
    writeln!(out, "spec: {spec}").unwrap();
    writeln!(out, "vertices: {}", spec.vertex_count()).unwrap();
    writeln!(out, "class: {}", classify(&spec)).unwrap();
    match lambda_closed_form(&spec, &decomp) {
        Ok(r) => {
            writeln!(out, "lambda: {} ({})", r.value, r.formula).unwrap();
            let delta = delta_from_lambda(r.value, false)?;
            writeln!(out, "delta: {delta}").unwrap();
        }
        Err(Error::Unsupported(_)) => writeln!(out, "lambda: Unsupported").unwrap(),
        Err(Error::TooSmallForCycle(n)) => writeln!(out, "lambda: TooSmallForCycle ({n} vertices)").unwrap(),
        Err(e) => return Err(e.into()),
    }
    writeln!(out, "leaf_lower_bound: {}", lambda_lower_bound(g.leaves().len())).unwrap();
    writeln!(out, "pendant_lower_bound: {}", lemma_lower_bound_01(&spec)).unwrap();
    writeln!(
        out,
        "segments: P0={} gamma={} tau={}",
        decomp.zero_leaf_segment_count, decomp.deserted_segment_count, decomp.deserted_pendant_count
    )
    .unwrap();
    Ok(out)
}

fn construct_cmd(spec_path: &Path, out: &Option<PathBuf>) -> CmdResult {
    let spec = read_spec(spec_path)?;
    let plan = construct(&spec)?;
    let (g, _) = build_graph(&spec);
    verify_plan(&g, &plan).map_err(|v| Failure::new(EXIT_INTERNAL, v.to_string()))?;
    emit(out, plan.to_json() + "\n")
}

fn verify(input: &GraphInput, plan_path: &Path) -> CmdResult {
    let g = read_graph(input)?;
    let plan = AugmentationPlan::from_json(&read(plan_path)?)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", plan_path.display())))?;
    match verify_plan(&g, &plan) {
        Ok(()) => Ok(format!("VALID, {} edges added\n", plan.size())),
        Err(v) => Err(Failure::new(EXIT_INVALID_PLAN, format!("INVALID: {v}"))),
    }
}

fn oracle(input: &GraphInput, budget: usize, path: bool, parallel: bool) -> CmdResult {
    let g = read_graph(input)?;
    let target = if path { Target::Path } else { Target::Cycle };
    let mode = if parallel { Mode::Parallel } else { Mode::Serial };
    let r = min_augmentation(&g, budget, target, mode)?;
    Ok(format!(
        "minimum: {}\noptimal_edges: {}\nwitness: {}\n",
        r.minimum,
        edges_json(&r.optimal_edges),
        order_json(r.witness.order())
    ))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Compute { spec } => compute(&spec),
        Command::Construct { spec, out } => construct_cmd(&spec, &out),
        Command::Verify { input, plan } => verify(&input, &plan),
        Command::Oracle { input, budget, path, parallel } => oracle(&input, budget, path, parallel),
        Command::Compare {
            family,
            n_min,
            n_max,
            k,
            l_max,
            count,
            seed,
            no_oracle,
            oracle_max_vertices,
            budget,
            parallel,
            out,
        } => {
            let cfg = SweepConfig {
                family: family.parse::<Family>()?,
                n_min,
                n_max,
                k,
                l_max,
                count,
                seed,
                oracle: !no_oracle,
                oracle_max_vertices,
                budget,
                mode: if parallel { Mode::Parallel } else { Mode::Serial },
            };
            emit(&out, sweep::rows_to_csv(&sweep::sweep(&cfg)?))
        }
        Command::Gen { seed, n_min, n_max, l_min, l_max, constraint, out } => {
            let constraint = constraint.parse::<Constraint>()?;
            let spec = sweep::generate(seed, GenRanges { n_min, n_max, l_min, l_max }, constraint)?;
            emit(&out, spec.to_json() + "\n")
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("hamc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
