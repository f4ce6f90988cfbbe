use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bpa_transform::io::BpaDocument;
use bpa_transform::report::compare_batch;
use bpa_transform::{
    compare, deng_entropy, random_bpa, shannon_entropy, ComparisonReport, EntropyMatch, Error,
    Frame, LogBase, MassFunction, Method, ProbabilityDistribution, DEFAULT_TOLERANCE,
};

#[derive(Parser)]
#[command(
    name = "bpa",
    version,
    about = "Transform Dempster-Shafer mass functions into probabilities"
)]
struct Cli {
    /// Decimal places in printed numbers.
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a mass function into a probability distribution.
    Transform {
        file: PathBuf,
        #[arg(long, default_value = "entropy-match")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = 2.0)]
        base: f64,
    },
    /// Deng entropy of a mass function (and Shannon entropy if it is Bayesian).
    Entropy {
        file: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        base: f64,
    },
    /// Singleton belief and plausibility table.
    Bounds { file: PathBuf },
    /// Check a document; exits 1 when it is invalid.
    Validate { file: PathBuf },
    /// Run every transform and report entropies and gaps.
    Compare {
        file: Option<PathBuf>,
        /// Compare every file in a directory instead.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = 2.0)]
        base: f64,
    },
    /// Print a random mass function document.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        focal: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn load(path: &Path) -> Result<(BpaDocument, MassFunction), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let doc = BpaDocument::parse(&text)?;
    let m = doc.to_mass()?;
    Ok((doc, m))
}

fn fmt_probs(p: &[f64], precision: usize) -> String {
    let parts: Vec<String> = p.iter().map(|x| format!("{x:.precision$}")).collect();
    format!("({})", parts.join(", "))
}

fn print_distribution(p: &ProbabilityDistribution, precision: usize) {
    println!("distribution: {}", fmt_probs(p.probs(), precision));
    let width = p
        .frame()
        .labels()
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0);
    for (label, x) in p.frame().labels().iter().zip(p.probs()) {
        println!("  {label:<width$}  {x:.precision$}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let prec = cli.precision;
    match cli.command {
        Command::Transform {
            file,
            method,
            tol,
            base,
        } => {
            let (_, m) = load(&file)?;
            let solver = EntropyMatch::default()
                .with_tolerance(tol)
                .with_base(LogBase::new(base)?);
            println!("method: {}", method.name());
            println!("log base: {}", solver.base);
            println!("frame: {}", m.frame().labels().join(" "));
            if method == Method::EntropyMatch {
                let r = solver.run(&m)?;
                print_distribution(&r.distribution, prec);
                println!("deng entropy: {:.prec$}", r.target_entropy.value);
                println!("shannon entropy: {:.prec$}", r.achieved_entropy.value);
                println!("gap: {:.prec$}", r.gap);
                println!("regime: {}", r.regime);
                println!("iterations: {}", r.iterations);
            } else {
                let p = method.apply(&m, &solver)?;
                let target = deng_entropy(&m, solver.base).value;
                let h = shannon_entropy(&p, solver.base).value;
                print_distribution(&p, prec);
                println!("deng entropy: {target:.prec$}");
                println!("shannon entropy: {h:.prec$}");
                println!("gap: {:.prec$}", (target - h).abs());
            }
        }
        Command::Entropy { file, base } => {
            let (_, m) = load(&file)?;
            let base = LogBase::new(base)?;
            println!("log base: {base}");
            println!("deng entropy: {:.prec$}", deng_entropy(&m, base).value);
            if m.is_bayesian() {
                let p = m.singleton_bounds().lower().to_vec();
                let p = ProbabilityDistribution::new(m.frame().clone(), p)?;
                println!(
                    "shannon entropy: {:.prec$}",
                    shannon_entropy(&p, base).value
                );
            }
        }
        Command::Bounds { file } => {
            let (_, m) = load(&file)?;
            let b = m.singleton_bounds();
            let width = b
                .frame()
                .labels()
                .iter()
                .map(|l| l.chars().count())
                .max()
                .unwrap_or(0)
                .max(7);
            println!(
                "{:<width$}  {:>w2$}  {:>w2$}",
                "element",
                "bel",
                "pl",
                w2 = prec + 2
            );
            for (i, label) in b.frame().labels().iter().enumerate() {
                println!(
                    "{label:<width$}  {:.prec$}  {:.prec$}",
                    b.lower()[i],
                    b.upper()[i]
                );
            }
        }
        Command::Validate { file } => {
            let (doc, m) = load(&file)?;
            let r = m.report();
            println!("valid");
            if let Some(name) = &doc.name {
                println!("name: {name}");
            }
            println!("frame size: {}", m.frame().size());
            println!("entries: {}", r.input_entries);
            println!("focal elements: {}", m.focal_elements().len());
            println!("dropped zero-mass entries: {}", r.dropped_zero_entries);
            println!("input mass sum: {}", r.input_sum);
            println!(
                "renormalized: {}",
                if r.renormalized { "yes" } else { "no" }
            );
            println!("bayesian: {}", if m.is_bayesian() { "yes" } else { "no" });
        }
        Command::Compare {
            file,
            batch,
            csv,
            tol,
            base,
        } => {
            let solver = EntropyMatch::default()
                .with_tolerance(tol)
                .with_base(LogBase::new(base)?);
            let mut paths = Vec::new();
            if let Some(file) = file {
                paths.push(file);
            }
            if let Some(dir) = batch {
                let mut found: Vec<PathBuf> = std::fs::read_dir(&dir)
                    .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file())
                    .collect();
                found.sort();
                paths.extend(found);
            }
            if paths.is_empty() {
                return Err(Failure::Input(
                    "compare needs a file or --batch <dir>".into(),
                ));
            }
            let mut names = Vec::new();
            let mut inputs = Vec::new();
            let mut failed = None;
            for path in &paths {
                match load(path) {
                    Ok((doc, m)) => {
                        names.push(doc.name.unwrap_or_else(|| path.display().to_string()));
                        inputs.push(m);
                    }
                    Err(Failure::Domain(e)) => {
                        eprintln!("{}: {e}", path.display());
                        failed.get_or_insert(Failure::Domain(e));
                    }
                    Err(other) => return Err(other),
                }
            }
            let reports: Vec<ComparisonReport> = if inputs.len() == 1 {
                vec![compare(&inputs[0], &solver)]
            } else {
                compare_batch(&inputs, &solver)
            };
            if csv {
                let mut w = csv::WriterBuilder::new()
                    .flexible(true)
                    .from_writer(std::io::stdout());
                if let Some(first) = reports.first() {
                    w.write_record(ComparisonReport::csv_header(first.bounds.frame().labels()))
                        .map_err(|e| Failure::Input(e.to_string()))?;
                }
                for (mut report, name) in reports.into_iter().zip(names) {
                    report.name = Some(name);
                    report
                        .write_csv(&mut w, prec)
                        .map_err(|e| Failure::Input(e.to_string()))?;
                }
                w.flush().map_err(|e| Failure::Input(e.to_string()))?;
            } else {
                for (i, (mut report, name)) in reports.into_iter().zip(names).enumerate() {
                    if i > 0 {
                        println!();
                    }
                    report.name = Some(name);
                    print!("{}", report.to_table(prec));
                }
            }
            if let Some(f) = failed {
                return Err(f);
            }
        }
        Command::Random {
            n,
            focal,
            seed,
            json,
        } => {
            let frame = Frame::new((1..=n).map(|i| format!("w{i}")))?;
            let m = random_bpa(&frame, focal, seed)?;
            let doc =
                BpaDocument::from_mass(&m, Some(format!("random n={n} focal={focal} seed={seed}")));
            if json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text()?);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            if e.is_capacity() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
