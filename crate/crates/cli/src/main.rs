//! `classtab`: enumerate tableau bases, straighten fillings and run the
//! verification suites. Standard output carries one JSON document; progress
//! goes to standard error.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 usage or resource
//! error.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use classtab::formal::SumInput;
use classtab::lie::{compare_branching, family_character, BranchFormula};
use classtab::relations::{all_relations, PairPolicy, PinSigns};
use classtab::verify::{full_report, run_task, Scope, TaskKind};
use classtab::{
    enumerate_basis_with, weight_polynomial_with, BasisFamily, FillingJson, Group, Method, OracleConfig, Partition,
    Shape, SpanCache, Straightener,
};

#[derive(Parser, Debug)]
#[command(name = "classtab", version, about = "Tableau bases for symplectic, orthogonal and Pin modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for parallel tasks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of tensor coordinates an oracle may allocate.
    #[arg(long, global = true, default_value_t = OracleConfig::default().max_dim)]
    max_dim: u64,

    /// Sign convention of the Pin relations.
    #[arg(long, global = true, value_enum, default_value_t = Signs::Clifford)]
    pin_signs: Signs,

    /// Sundaram tableaux also obey the symplectic condition.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    sundaram_require_symplectic: bool,

    /// Test hook: use a deliberately wrong basis predicate.
    #[arg(long, global = true, hide = true)]
    corrupt_basis: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Signs {
    Literal,
    Clifford,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the basis tableaux of a shape.
    Enumerate(ShapeArgs),
    /// Count the basis tableaux of a shape.
    Count(ShapeArgs),
    /// Weight polynomial of the basis, with the oracle character.
    Weightpoly(ShapeArgs),
    /// Rewrite a filling or formal sum in the basis.
    Straighten(StraightenArgs),
    /// Relation instances generated for a shape.
    Relations(RelationsArgs),
    /// Compare a branching formula with the character oracle.
    Branch(BranchArgs),
    /// Run one verification task over a scope.
    Verify(VerifyArgs),
    /// Run every verification task for every group.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct ShapeArgs {
    /// One of gl, sp, o-odd, o-even, sundaram, pin-odd, pin-even.
    #[arg(long)]
    group: BasisFamily,
    #[arg(long)]
    rank: usize,
    /// Comma-separated parts, e.g. `2,1`; empty for the empty partition.
    /// Pin groups add the spin column.
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,
}

#[derive(Args, Debug)]
struct StraightenArgs {
    #[arg(long)]
    group: BasisFamily,
    /// Must match the rank recorded in the input when given.
    #[arg(long)]
    rank: Option<usize>,
    /// JSON file holding a filling or `{"terms": [...]}`; `-` reads stdin.
    #[arg(long)]
    input: String,
    /// `combinatorial` or `linear-solve`; defaults per group.
    #[arg(long)]
    method: Option<Method>,
}

#[derive(Args, Debug)]
struct RelationsArgs {
    #[arg(long)]
    group: Group,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,
    /// Box pairs for symplectic and orthogonal relations.
    #[arg(long, value_enum)]
    pairs: Option<Pairs>,
    /// Also list alternating instances.
    #[arg(long)]
    alternating: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Pairs {
    All,
    SameRow,
    SameColumn,
}

#[derive(Args, Debug)]
struct BranchArgs {
    /// symplectic-reference, symplectic-literal, odd-to-even, even-to-odd,
    /// min-rule or min-rule-split.
    #[arg(long)]
    rule: BranchFormula,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_parser = parse_partition)]
    shape: Partition,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// dim, independence, character, branching, closure,
    /// straighten-soundness or invariance.
    task: TaskKind,
    #[arg(long)]
    group: BasisFamily,
    /// Largest rank checked.
    #[arg(long)]
    rank: usize,
    /// Smallest rank checked (default: `--rank`).
    #[arg(long)]
    min_rank: Option<usize>,
    /// Largest shape size checked.
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random fillings per shape for straighten-soundness.
    #[arg(long, default_value_t = 500)]
    samples: usize,
}

#[derive(Args, Debug)]
struct ReportArgs {
    #[arg(long, default_value_t = 2)]
    max_rank: usize,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    samples: usize,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

/// Outcome of a command: a JSON document and whether every checked claim
/// held.
struct Outcome {
    doc: Value,
    passed: bool,
}

impl Outcome {
    fn ok(doc: impl Serialize) -> anyhow::Result<Self> {
        Ok(Outcome { doc: serde_json::to_value(doc)?, passed: true })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let written = serde_json::to_writer_pretty(&mut stdout, &out.doc)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(stdout));
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn config(cli: &Cli) -> OracleConfig {
    let mut cfg = OracleConfig { max_dim: cli.max_dim, ..OracleConfig::default() };
    cfg.relations.pin_signs = match cli.pin_signs {
        Signs::Literal => PinSigns::Literal,
        Signs::Clifford => PinSigns::Clifford,
    };
    cfg.family.sundaram_require_symplectic = cli.sundaram_require_symplectic;
    cfg.family.corrupt_for_testing = cli.corrupt_basis;
    cfg
}

fn shape_of(family: BasisFamily, a: &ShapeArgs) -> anyhow::Result<Arc<Shape>> {
    let sh = Shape::new(a.shape.clone(), family.needs_spin(), a.rank)?;
    family.check_shape(&sh)?;
    Ok(Arc::new(sh))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let cfg = config(cli);
    match &cli.command {
        Command::Enumerate(a) => {
            let sh = shape_of(a.group, a)?;
            let basis = enumerate_basis_with(&sh, a.group, &cfg.family)?;
            let tableaux: Vec<FillingJson> = basis.iter().map(FillingJson::from).collect();
            Outcome::ok(json!({
                "shape": sh.partition().parts(),
                "family": a.group.name(),
                "rank": a.rank,
                "count": tableaux.len(),
                "tableaux": tableaux,
            }))
        }
        Command::Count(a) => {
            let sh = shape_of(a.group, a)?;
            let count = enumerate_basis_with(&sh, a.group, &cfg.family)?.len();
            Outcome::ok(json!({"shape": sh.partition().parts(), "family": a.group.name(), "count": count}))
        }
        Command::Weightpoly(a) => {
            let sh = shape_of(a.group, a)?;
            let poly = weight_polynomial_with(&sh, a.group, &cfg.family)?;
            let oracle = family_character(a.group, &sh)?;
            Outcome::ok(json!({
                "shape": sh.partition().parts(),
                "family": a.group.name(),
                "rank": a.rank,
                "doubled": true,
                "terms": poly.to_json(),
                "matchesCharacter": poly == oracle,
            }))
        }
        Command::Straighten(a) => straighten(a, cfg),
        Command::Relations(a) => {
            let sh = Arc::new(Shape::new(a.shape.clone(), a.group.is_spin(), a.rank)?);
            let mut rc = cfg.relations;
            rc.include_alternating = a.alternating;
            if let Some(p) = a.pairs {
                let policy = match p {
                    Pairs::All => PairPolicy::All,
                    Pairs::SameRow => PairPolicy::SameRow,
                    Pairs::SameColumn => PairPolicy::SameColumn,
                };
                rc.symplectic_pairs = policy;
                rc.orthogonal_pairs = policy;
            }
            let set = all_relations(&sh, a.group, &rc)?;
            let instances: Vec<_> = set.instances.iter().map(|i| i.to_json()).collect();
            Outcome::ok(json!({
                "shape": sh.partition().parts(),
                "spin": sh.is_spin(),
                "rank": a.rank,
                "group": a.group.name(),
                "generated": set.generated,
                "collapsed": set.collapsed,
                "duplicates": set.duplicates,
                "instances": instances,
            }))
        }
        Command::Branch(a) => {
            let r = compare_branching(a.rule, a.shape.parts(), a.rank)?;
            let passed = r.conserves_dimension;
            Ok(Outcome { doc: serde_json::to_value(r)?, passed })
        }
        Command::Verify(a) => {
            let mut scope = Scope::new(a.group, a.rank, a.max_size).ranks(a.min_rank.unwrap_or(a.rank), a.rank);
            scope.seed = a.seed;
            scope.samples = a.samples;
            scope.config = cfg;
            let cache = Arc::new(SpanCache::new(cfg));
            let t = Instant::now();
            eprintln!("verify {} {}: ranks {}..={}, size ≤ {}", a.task, a.group, scope.min_rank, a.rank, a.max_size);
            let report = run_task(a.task, &scope, &cache)?;
            eprintln!(
                "verify {} {}: {} of {} items pass in {:.2?}",
                a.task,
                a.group,
                report.items.len() - report.failures().count(),
                report.items.len(),
                t.elapsed()
            );
            let passed = report.passed;
            Ok(Outcome { doc: serde_json::to_value(report)?, passed })
        }
        Command::Report(a) => {
            let t = Instant::now();
            eprintln!("report: ranks 1..={}, size ≤ {}", a.max_rank, a.max_size);
            let report = full_report(a.max_rank, a.max_size, a.seed, a.samples, cfg)?;
            for task in &report.tasks {
                eprintln!(
                    "  {:<22} {:<9} {}",
                    task.task.name(),
                    task.family,
                    if task.passed { "pass" } else { "FAIL" }
                );
            }
            eprintln!("report: done in {:.2?}", t.elapsed());
            let passed = report.passed;
            Ok(Outcome { doc: serde_json::to_value(report)?, passed })
        }
    }
}

fn straighten(a: &StraightenArgs, cfg: OracleConfig) -> anyhow::Result<Outcome> {
    let text = if a.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&a.input).map_err(|e| anyhow::anyhow!("cannot read {}: {e}", a.input))?
    };
    let input: SumInput = serde_json::from_str(&text)?;
    let sh = Arc::new(input.shape()?);
    if let Some(r) = a.rank {
        anyhow::ensure!(r == sh.rank(), "--rank {r} does not match the input rank {}", sh.rank());
    }
    let x = input.decode(&sh)?;
    let st = Straightener::new(a.group, sh.rank()).with_cache(Arc::new(SpanCache::new(cfg)));
    let rep = st.straighten_with(&x, a.method.unwrap_or_else(|| st.default_method()))?;
    Outcome::ok(rep.to_json())
}
