//! `redei`: compute Rédei–Berge functions and Hamiltonian counts of digraphs.
//!
//! Exit codes: 0 success, 2 bad input, 3 size guard exceeded, 4 routes
//! disagree or verification failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use redei::digraph::{
    complete_digraph, directed_path_digraph, poset_digraph, random_digraph, random_tournament, Digraph,
};
use redei::hamilton::ham_report;
use redei::redei::{applicable_routes, compute_u, Route};
use redei::verify::{verify_corpus, Corpus};
use redei::{Basis, Error};

#[derive(Parser)]
#[command(name = "redei", version, about = "Rédei–Berge symmetric functions and Hamiltonian counts of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute U_D along one or more routes and check that they agree
    U(UArgs),
    /// Count Hamiltonian paths (and cycles)
    Ham(HamArgs),
    /// Check every identity over a corpus of digraphs
    Verify(VerifyArgs),
    /// Print a generated digraph
    Gen(GenArgs),
}

#[derive(Args)]
struct Source {
    /// Digraph file (text or JSON format); `-` reads stdin
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    edges: Option<PathBuf>,
    /// Generator: empty:n, complete:n[,loops], tournament:n, random:n,p, star:λ1,λ2,…, path:n, poset:file
    #[arg(long)]
    gen: Option<String>,
    /// Seed for random generators
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct UArgs {
    #[command(flatten)]
    source: Source,
    /// Output basis: p, s, h, e, m, mtilde
    #[arg(long, default_value = "p")]
    basis: String,
    /// Comma-separated route tags, or `all` for every applicable route
    #[arg(long, default_value = "all")]
    routes: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock timings (makes output run-dependent)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct HamArgs {
    #[command(flatten)]
    source: Source,
    /// Also count Hamiltonian cycles
    #[arg(long)]
    cycles: bool,
    /// Run and compare every route within its size guard
    #[arg(long)]
    all_routes: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// exhaustive3, exhaustive:N (N ≤ 4) or random:n,count
    #[arg(long, default_value = "exhaustive3")]
    corpus: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 picks one per core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Directory receiving one replayable digraph file per failure
    #[arg(long)]
    artifacts: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec, as for --gen
    spec: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guard { .. } => 3,
            Error::Mismatch(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| bad_input(format!("stdin: {e}")));
    }
    std::fs::read_to_string(path).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn generate(spec: &str, seed: u64) -> Result<Digraph, Failure> {
    let (kind, args) = spec.split_once(':').ok_or_else(|| bad_input(format!("bad generator `{spec}`")))?;
    let nums = |s: &str| -> Result<Vec<usize>, Failure> {
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| bad_input(format!("bad generator `{spec}`"))))
            .collect()
    };
    let d = match kind {
        "empty" => Digraph::new(nums(args)?[0])?,
        "complete" => {
            let (n, loops) = match args.split_once(',') {
                Some((n, "loops")) => (n, true),
                None => (args, false),
                _ => return Err(bad_input(format!("bad generator `{spec}`"))),
            };
            complete_digraph(nums(n)?[0], loops)?
        }
        "tournament" => random_tournament(nums(args)?[0], seed)?,
        "random" => {
            let (n, p) = args.split_once(',').ok_or_else(|| bad_input("random:n,p"))?;
            let p: f64 = p.trim().parse().map_err(|_| bad_input(format!("bad probability `{p}`")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad_input(format!("probability {p} outside [0, 1]")));
            }
            random_digraph(nums(n)?[0], p, seed)?
        }
        "star" => Digraph::star_from_sizes(&nums(args)?)?,
        "path" => directed_path_digraph(nums(args)?[0])?,
        "poset" => {
            let relations = Digraph::parse(&read(&PathBuf::from(args))?)?;
            poset_digraph(relations.n(), &relations.edges())?
        }
        _ => return Err(bad_input(format!("unknown generator `{kind}`"))),
    };
    Ok(d)
}

fn load(source: &Source) -> Result<Digraph, Failure> {
    match (&source.edges, &source.gen) {
        (Some(path), _) => Ok(Digraph::parse(&read(path)?)?),
        (None, Some(spec)) => generate(spec, source.seed),
        (None, None) => Err(bad_input("one of --edges or --gen is required")),
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn cmd_u(args: &UArgs) -> Result<(), Failure> {
    let d = load(&args.source)?;
    let basis: Basis = args.basis.parse()?;
    let routes: Vec<Route> = if args.routes.trim() == "all" {
        let routes = applicable_routes(&d);
        // nothing fits: run the cheapest route so its guard reports the limit
        if routes.is_empty() {
            vec![Route::PowersumGs]
        } else {
            routes
        }
    } else {
        args.routes.split(',').map(str::parse).collect::<Result<_, _>>()?
    };
    let mut results = Vec::new();
    let mut values = Vec::new();
    for &route in &routes {
        let r = compute_u(&d, route)?;
        values.push(r.value.convert(Basis::P)?);
        let mut report = r.report(basis)?;
        let fields = report.as_object_mut().expect("reports are objects");
        fields.remove("digraph");
        fields.remove("basis");
        if !args.timings {
            fields.remove("elapsed_ms");
        }
        report["value"] = json!(r.value.convert(basis)?.to_string());
        results.push(report);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    match args.format {
        Format::Json => emit(&json!({
            "digraph": d.fingerprint(),
            "n": d.n(),
            "seed": args.source.seed,
            "basis": basis.name(),
            "routes": results,
            "agree": agree,
        })),
        Format::Table => {
            let width = routes.iter().map(|r| r.tag().len()).max().unwrap_or(0);
            for r in &results {
                println!("{:width$}  {}", r["route"].as_str().unwrap(), r["value"].as_str().unwrap());
            }
            println!("{:width$}  {}", "agree", agree);
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: "routes disagree".into(),
        })
    }
}

fn cmd_ham(args: &HamArgs) -> Result<(), Failure> {
    let d = load(&args.source)?;
    let report = ham_report(&d, args.cycles, args.all_routes)?;
    let mut value = serde_json::to_value(&report).expect("reports serialize");
    if !args.timings {
        value.as_object_mut().unwrap().remove("timings_ms");
    }
    value["seed"] = json!(args.source.seed);
    match args.format {
        Format::Json => emit(&value),
        Format::Table => {
            println!("ham_paths   {}", report.ham_paths);
            if let Some(c) = &report.ham_cycles {
                println!("ham_cycles  {c}");
            }
            for (route, v) in &report.routes {
                println!("  {route:24} {v}");
            }
            println!("agree       {}", report.agree);
        }
    }
    if report.agree {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: "routes disagree".into(),
        })
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let corpus: Corpus = args.corpus.parse()?;
    if let Corpus::Exhaustive(n) = corpus {
        if n > 4 {
            return Err(bad_input("exhaustive corpora stop at 4 vertices"));
        }
    }
    let summary = verify_corpus(corpus, args.seed, args.jobs)?;
    if let Some(dir) = &args.artifacts {
        std::fs::create_dir_all(dir).map_err(|e| bad_input(format!("{}: {e}", dir.display())))?;
        for f in &summary.failures {
            let path = dir.join(format!("failure-{}-{}.dg", f.index, f.identity));
            let body = format!("# {}: {}\n{}", f.identity, f.detail.replace('\n', " "), f.digraph);
            std::fs::write(&path, body).map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
        }
    }
    match args.format {
        Format::Json => emit(&serde_json::to_value(&summary).expect("summaries serialize")),
        Format::Table => {
            println!("corpus {} (seed {}), {} digraphs", summary.corpus, summary.seed, summary.digraphs);
            for (name, t) in &summary.tallies {
                println!("  {name:22} {:>6} passed / {:>6} checked, {:>6} skipped", t.passed, t.checked, t.skipped);
            }
            for f in &summary.failures {
                println!("FAIL {} #{}: {}", f.identity, f.index, f.detail);
            }
        }
    }
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: format!("{} identity checks failed", summary.failures.len()),
        })
    }
}

fn cmd_gen(args: &GenArgs) -> Result<(), Failure> {
    let d = generate(&args.spec, args.seed)?;
    if args.json {
        println!("{}", d.to_json());
    } else {
        print!("{}", d.to_text());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::U(a) => cmd_u(a),
        Command::Ham(a) => cmd_ham(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
