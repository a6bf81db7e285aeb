use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyperm_core::analysis::{analyze, atlas, atlas_csv, AnalyzeOptions, GroupReport};
use polyperm_core::carlitz::{is_polynomial_function, rivest_is_permutation, Gates};
use polyperm_core::fractal::compare_pgr_fpg;
use polyperm_core::interpolate::interpolate;
use polyperm_core::suites::{run_suite, Suite, SuiteReport};
use polyperm_core::{pfb_upper_bound, Error, FunctionTable, ParseMode, Permutation, ResiduePoly};

#[derive(Parser)]
#[command(
    name = "polyperm",
    version,
    about = "Polynomial permutation groups of Z/n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, generators and structure of Pgr(Z/n).
    Analyze {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate |Pgr(Z/n)| for n = 2..=max_n.
    Atlas {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=10_000))]
        max_n: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Power-distinctness upper bound on the polynomial function bound.
    Pfb { n: u64 },
    /// Rivest's permutation criterion over Z/2^w.
    Rivest {
        poly: String,
        #[arg(long)]
        modulus: u64,
    },
    /// Compare Pgr(Z/p^k) with the fractal permutation group.
    Fractal {
        p: u64,
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a permutation of Z/p^k is induced by a polynomial.
    IsPoly {
        p: u64,
        k: u32,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidModulus(_)
            | Error::NotPrime(_)
            | Error::InvalidParameters(_)
            | Error::PolyParse(_)
            | Error::CycleParse(_)
            | Error::OutOfRange { .. }
            | Error::NotPowerOfTwo(_)
            | Error::NotPermutation => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn gates_from_env() -> Result<Gates, Failure> {
    match std::env::var("POLYPERM_GATE") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|g| Gates::default().with_max_jets(g))
            .map_err(|_| Failure::Usage(format!("POLYPERM_GATE must be an integer, got '{v}'"))),
        Err(_) => Ok(Gates::default()),
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("POLYPERM_THREADS") {
        let threads: usize = v.trim().parse().map_err(|_| {
            Failure::Usage(format!("POLYPERM_THREADS must be an integer, got '{v}'"))
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_threads()?;
    let gates = gates_from_env()?;
    match cli.command {
        Command::Analyze { n, json } => {
            let opts = AnalyzeOptions {
                gates,
                with_generators: true,
            };
            let report = analyze(n, &opts)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", render_report(&report));
            }
        }
        Command::Verify { suite, json } => {
            let report = run_suite(suite, &gates);
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", render_suite(&report));
            }
            if !report.pass {
                return Err(Failure::Verify);
            }
        }
        Command::Atlas { max_n, out, format } => {
            let reports = atlas(max_n, &gates)?;
            let body = match format {
                Format::Csv => atlas_csv(&reports),
                Format::Json => to_json(&reports) + "\n",
            };
            std::fs::write(&out, body)
                .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", out.display())))?;
            println!("wrote {} records to {}", reports.len(), out.display());
        }
        Command::Pfb { n } => {
            let d = pfb_upper_bound(n)?;
            println!("pfb(Z/{n}) <= {d}");
        }
        Command::Rivest { poly, modulus } => {
            let f = ResiduePoly::parse(&poly, modulus, ParseMode::Strict)?;
            let verdict = rivest_is_permutation(&f)?;
            println!(
                "{f} over Z/{modulus}: {}",
                if verdict {
                    "permutation polynomial"
                } else {
                    "not a permutation polynomial"
                }
            );
        }
        Command::Fractal { p, k, json } => {
            let report = compare_pgr_fpg(p, k, &gates)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                println!(
                    "Z/{}^{}: |Pgr| = {} ({})",
                    report.p, report.k, report.pgr_order, report.method.pgr
                );
                println!("|Fpg| = {} ({})", report.fpg_order, report.method.fpg);
                println!("proper subgroup: {}", yes_no(report.proper));
                if let Some(index) = &report.index {
                    println!("index: {index}");
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
        }
        Command::IsPoly { p, k, perm } => {
            let n = polyperm_core::ring::check_prime_power(p, k)?;
            let f = Permutation::parse_cycles(&perm, n as usize)?;
            let table = FunctionTable::from(&f);
            if is_polynomial_function(&table, p, k)? {
                let witness = interpolate(&table).map(|g| g.to_string());
                match witness {
                    Some(g) => println!("polynomial: {g}"),
                    None => println!("polynomial"),
                }
            } else {
                println!("not a polynomial function on Z/{n}");
            }
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_report(r: &GroupReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} = {}", r.ring, r.factorization);
    match (&r.order, r.order_method) {
        (Some(order), Some(method)) => {
            let _ = writeln!(s, "|Pgr({})| = {order} ({method})", r.ring);
        }
        _ => {
            let _ = writeln!(s, "|Pgr({})| = not computed", r.ring);
        }
    }
    if let Some(proper) = r.proper_subgroup {
        let _ = writeln!(s, "proper subgroup of S_{}: {}", r.n, yes_no(proper));
    }
    if r.factors.len() > 1 || r.factors.iter().any(|f| !f.cross_checks.is_empty()) {
        for f in &r.factors {
            let q = if f.k == 1 {
                f.p.to_string()
            } else {
                format!("{}^{}", f.p, f.k)
            };
            let _ = writeln!(
                s,
                "  factor {q}: {} ({})",
                f.order.as_deref().unwrap_or("not computed"),
                f.method.unwrap_or("gated")
            );
            for c in &f.cross_checks {
                let _ = writeln!(
                    s,
                    "    {}: {} ({})",
                    c.method,
                    c.order,
                    if c.agrees { "agrees" } else { "DISAGREES" }
                );
            }
        }
    }
    if !r.generators.is_empty() {
        let _ = writeln!(s, "generators:");
        for g in &r.generators {
            match &g.polynomial {
                Some(p) => {
                    let _ = writeln!(s, "  {}  <- {p}", g.cycles);
                }
                None => {
                    let _ = writeln!(s, "  {}", g.cycles);
                }
            }
        }
    }
    if let Some(order) = &r.generated_order {
        let _ = writeln!(s, "generated order: {order}");
    }
    if let Some(rec) = &r.recognition {
        let orders: Vec<String> = rec
            .element_orders
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        let _ = writeln!(
            s,
            "recognition: {} (abelian: {}, element orders {})",
            rec.name,
            yes_no(rec.abelian),
            orders.join(" ")
        );
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    for nc in &r.not_computed {
        let _ = writeln!(s, "not computed: {} ({})", nc.item, nc.reason);
    }
    s
}

fn render_suite(r: &SuiteReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let _ = writeln!(
            s,
            "{} {} [{} ms] {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.millis,
            c.detail
        );
    }
    let failed = r.checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(
        s,
        "suite {}: {} ({} checks, {failed} failed)",
        r.suite,
        if r.pass { "pass" } else { "fail" },
        r.checks.len()
    );
    s
}
