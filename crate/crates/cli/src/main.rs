mod family;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use chromsym::csf::{chromatic_poly, chromatic_sym};
use chromsym::formulas::{lollipop_chrom_poly_factored, lollipop_csf};
use chromsym::verify::{run_suite, Selector, SuiteBounds, Verdict};
use chromsym::{Basis, Graph, SymFunc};

use family::Family;

/// Exact chromatic symmetric functions of graphs.
#[derive(Parser)]
#[command(name = "chromsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the chromatic symmetric function of a graph.
    Csf {
        #[command(flatten)]
        source: Source,
        /// Target basis: m, e or s.
        #[arg(long, default_value = "e")]
        basis: String,
        /// Emit the JSON serialization instead of one term per line.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the chromatic polynomial, or print its factored form for a
    /// lollipop family.
    Chrompoly {
        #[command(flatten)]
        source: Source,
        /// Number of colours.
        #[arg(
            long,
            required_unless_present = "symbolic",
            conflicts_with = "symbolic"
        )]
        at: Option<u64>,
        /// Print x(x-1)^{n+1}(x-2)...(x-(m-1)); lollipop families only.
        #[arg(long, alias = "symbolic-lollipop")]
        symbolic: bool,
    },
    /// Run verification checks and print one JSON report per line.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(Selector::NAMES))]
        selector: String,
        /// Largest lollipop size m + n (and distinctness bound).
        #[arg(long, default_value_t = 9)]
        max_degree: usize,
        /// Degree of the basis certificates.
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Number of lollipop sets to certify (1 to 3).
        #[arg(long, default_value_t = 3)]
        sets: usize,
        /// Largest n for the lariat theorem.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON graph file: {"vertices": n, "edges": [[u, v], ...]}.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// complete:m, path:n, lollipop:m,n or lariat:k.
    #[arg(long)]
    family: Option<String>,
}

enum Input {
    Graph(Graph),
    Family(Family),
}

impl Source {
    fn load(&self) -> anyhow::Result<Input> {
        if let Some(path) = &self.graph {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = Graph::from_json(&text).with_context(|| format!("in {}", path.display()))?;
            return Ok(Input::Graph(g));
        }
        let spec = self.family.as_deref().expect("clap enforces one source");
        Ok(Input::Family(spec.parse()?))
    }
}

fn csf(source: &Source, basis: &str, json: bool) -> anyhow::Result<ExitCode> {
    let basis: Basis = basis.parse()?;
    let f: SymFunc = match source.load()? {
        Input::Graph(g) => chromatic_sym(&g),
        Input::Family(fam) => {
            let (m, n) = fam.as_lollipop();
            lollipop_csf(m, n)?
        }
    };
    let f = f.convert(basis);
    if json {
        println!("{}", serde_json::to_string(&f)?);
    } else {
        println!("{f}");
    }
    Ok(ExitCode::SUCCESS)
}

fn chrompoly(source: &Source, at: Option<u64>, symbolic: bool) -> anyhow::Result<ExitCode> {
    let input = source.load()?;
    if symbolic {
        let Input::Family(fam) = input else {
            bail!("--symbolic needs a --family lollipop source");
        };
        let text = match fam.normalized_lollipop() {
            Some((m, n)) => lollipop_chrom_poly_factored(m, n)?,
            None if fam.as_lollipop() == (0, 0) => "1".to_string(),
            None => "x".to_string(),
        };
        println!("{text}");
        return Ok(ExitCode::SUCCESS);
    }
    let x = at.expect("clap requires --at without --symbolic");
    let g = match input {
        Input::Graph(g) => g,
        Input::Family(fam) => fam.graph(),
    };
    println!("{}", chromatic_poly(&g, x)?);
    Ok(ExitCode::SUCCESS)
}

fn check(selector: &str, bounds: SuiteBounds) -> anyhow::Result<ExitCode> {
    if !(1..=3).contains(&bounds.sets) {
        bail!("--sets must be between 1 and 3");
    }
    let selector: Selector = selector.parse()?;
    let reports = run_suite(selector, bounds);
    let (mut pass, mut fail, mut unverified) = (0, 0, 0);
    for r in &reports {
        println!("{}", r.to_json_line());
        match r.verdict {
            Verdict::Pass => pass += 1,
            Verdict::Fail => fail += 1,
            Verdict::UnverifiedRegime => unverified += 1,
        }
    }
    eprintln!("{pass} pass, {fail} fail, {unverified} unverified-regime");
    Ok(if fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Csf {
            source,
            basis,
            json,
        } => csf(source, basis, *json),
        Command::Chrompoly {
            source,
            at,
            symbolic,
        } => chrompoly(source, *at, *symbolic),
        Command::Check {
            selector,
            max_degree,
            degree,
            sets,
            max_n,
        } => check(
            selector,
            SuiteBounds {
                max_degree: *max_degree,
                basis_degree: *degree,
                sets: *sets,
                lariat_max_n: *max_n,
                ..SuiteBounds::default()
            },
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
