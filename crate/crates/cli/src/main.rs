use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hsaga_core::builtin::{self, BenchmarkEntry};
use hsaga_core::document::{parse_model, DocumentError};
use hsaga_core::export::{convergence_csv, design_report, run_summary, FEASIBILITY_SLACK};
use hsaga_core::hybrid::{compare_plain_ga, run, HybridParams};
use hsaga_core::model::{DesignVector, TrussModel};

const EXIT_USAGE: u8 = 1;
const EXIT_MODEL: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hsaga",
    version,
    about = "Truss sizing optimization with a hybrid GA / simulated annealing search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimize a model and write result.json and convergence.csv.
    Run(RunArgs),
    /// Analyze one design and report weight and feasibility.
    Verify(VerifyArgs),
    /// Hybrid against plain GA on several seeds at equal analysis budget.
    Compare(CompareArgs),
    /// List built-in models.
    List,
}

#[derive(Args)]
struct SearchArgs {
    /// Model file path or builtin:NAME.
    #[arg(long)]
    model: String,
    #[arg(long)]
    generations: Option<u64>,
    #[arg(long)]
    population: Option<usize>,
    /// Generations between annealing runs.
    #[arg(long)]
    tsa: Option<u64>,
    /// Disable annealing (plain GA).
    #[arg(long, conflicts_with = "tsa")]
    plain: bool,
    /// Output directory.
    #[arg(long, default_value = "hsaga-out")]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Model file path or builtin:NAME.
    #[arg(long)]
    model: String,
    /// Comma-separated areas, one per group. Defaults to the reference design
    /// of a built-in model.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    areas: Option<Vec<f64>>,
    /// Print the full report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    search: SearchArgs,
    /// Comma-separated seeds (at least five).
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5,6,7,8,9")]
    seeds: Vec<u64>,
}

enum Failure {
    Usage(String),
    Model(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Model(_) => EXIT_MODEL,
            Failure::Runtime(_) => EXIT_RUNTIME,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Model(m) | Failure::Runtime(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Compare(args) => cmd_compare(args),
        Command::List => {
            cmd_list();
            Ok(())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

struct Loaded {
    model: TrussModel,
    entry: Option<BenchmarkEntry>,
}

fn load_model(spec: &str) -> Result<Loaded, Failure> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin::lookup(name)
            .map(|e| Loaded {
                model: e.model.clone(),
                entry: Some(e),
            })
            .ok_or_else(|| {
                Failure::Model(format!(
                    "unknown built-in model '{name}' (available: {})",
                    builtin::IDS.join(", ")
                ))
            });
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|e| Failure::Model(format!("cannot read {}: {e}", path.display())))?;
    match parse_model(&text) {
        Ok(model) => Ok(Loaded { model, entry: None }),
        Err(e @ DocumentError::Parse { .. }) => Err(Failure::Model(format!("{}: {e}", path.display()))),
        Err(DocumentError::Validation(report)) => Err(Failure::Model(format!("{}: {report}", path.display()))),
    }
}

fn hybrid_params(model: &TrussModel, args: &SearchArgs) -> Result<HybridParams, Failure> {
    let mut p = HybridParams::for_model(model);
    if let Some(g) = args.generations {
        p.ga.max_generations = g;
    }
    if let Some(n) = args.population {
        p.ga.population_size = n;
    }
    if args.plain {
        p.t_sa = None;
    } else if let Some(t) = args.tsa {
        p.t_sa = Some(t);
    }
    p.check().map_err(Failure::Usage)?;
    Ok(p)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Runtime(format!("cannot create {}: {e}", dir.display())))
}

fn check_stable(model: &TrussModel) -> Result<(), Failure> {
    hsaga_core::analyze(model, &model.max_design())
        .map(|_| ())
        .map_err(|e| Failure::Runtime(format!("model '{}' cannot be analyzed: {e}", model.name)))
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let loaded = load_model(&args.search.model)?;
    let model = loaded.model;
    let params = hybrid_params(&model, &args.search)?;
    check_stable(&model)?;
    let record = run(&model, &params, args.seed);
    let summary = run_summary(&model, &record).map_err(|e| Failure::Runtime(e.to_string()))?;

    create_dir(&args.search.out)?;
    write_file(&args.search.out.join("convergence.csv"), &convergence_csv(&record))?;
    let json = serde_json::to_string_pretty(&summary).map_err(|e| Failure::Runtime(e.to_string()))?;
    write_file(&args.search.out.join("result.json"), &json)?;

    println!("model: {}", model.name);
    println!("seed: {}", args.seed);
    println!("generations: {}", summary.generations);
    println!("evaluations: {}", summary.evaluations);
    match &summary.best_feasible {
        Some(r) => {
            println!("best feasible weight: {:.4}", r.weight);
            println!("areas: {}", join(&r.areas.areas));
        }
        None => println!("best feasible weight: none found"),
    }
    println!("output: {}", args.search.out.display());
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let loaded = load_model(&args.model)?;
    let model = loaded.model;
    let areas = match (args.areas, &loaded.entry) {
        (Some(a), _) => a,
        (None, Some(e)) => e.reference_areas.clone(),
        (None, None) => return Err(Failure::Usage("--areas is required for model files".into())),
    };
    if areas.len() != model.n_variables() {
        return Err(Failure::Usage(format!(
            "model '{}' has {} groups but {} areas were given",
            model.name,
            model.n_variables(),
            areas.len()
        )));
    }
    let design = DesignVector::new(areas);
    if !model.bounds().contains(&design) {
        eprintln!("warning: areas outside the group bounds were clamped");
    }
    let report = design_report(&model, &design).map_err(|e| Failure::Runtime(e.to_string()))?;
    if args.json {
        let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Runtime(e.to_string()))?;
        println!("{json}");
        return Ok(());
    }
    println!("model: {}", model.name);
    println!("weight: {:.4}", report.weight);
    if let Some(e) = &loaded.entry {
        println!("reference weight: {:.2}", e.reference_weight);
    }
    println!("max violation: {:.6}", report.max_violation);
    println!(
        "feasible at {}% slack: {}",
        FEASIBILITY_SLACK * 100.0,
        if report.feasible_within_slack { "yes" } else { "no" }
    );
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<(), Failure> {
    if args.seeds.len() < 5 {
        return Err(Failure::Usage(format!(
            "compare needs at least 5 seeds, got {}",
            args.seeds.len()
        )));
    }
    let loaded = load_model(&args.search.model)?;
    let model = loaded.model;
    let mut params = hybrid_params(&model, &args.search)?;
    if params.t_sa.is_none() {
        params.t_sa = Some(hsaga_core::hybrid::DEFAULT_T_SA);
    }
    check_stable(&model)?;
    let cmp = compare_plain_ga(&model, &params, &args.seeds);

    create_dir(&args.search.out)?;
    let mut csv = String::from("seed,hybrid_weight,plain_weight,hybrid_evaluations,plain_evaluations\n");
    for e in &cmp.entries {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            e.seed,
            opt(e.hybrid_weight),
            opt(e.plain_weight),
            e.hybrid_evaluations,
            e.plain_evaluations
        ));
    }
    write_file(&args.search.out.join("compare.csv"), &csv)?;
    for (tag, runs) in [("hybrid", &cmp.hybrid_runs), ("plain", &cmp.plain_runs)] {
        for r in runs.iter() {
            write_file(
                &args.search.out.join(format!("convergence-{tag}-seed{}.csv", r.seed)),
                &convergence_csv(r),
            )?;
        }
    }

    println!("model: {}", model.name);
    println!("budget: {} analyses per run", cmp.budget);
    print!("{csv}");
    println!("hybrid median: {}", opt(cmp.hybrid_median));
    println!("plain median: {}", opt(cmp.plain_median));
    println!(
        "hybrid reached plain median within budget: {}/{}",
        cmp.hybrid_reaches_plain_median(),
        cmp.entries.len()
    );
    Ok(())
}

fn cmd_list() {
    for e in builtin::catalog() {
        println!(
            "{:<12} {:>3} members {:>2} groups {} load case(s)  reference {:.2} lb",
            e.id,
            e.model.elements.len(),
            e.model.n_variables(),
            e.model.load_cases.len(),
            e.reference_weight
        );
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|w| format!("{w:.4}")).unwrap_or_default()
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(",")
}
