use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bei_core::gbg::random_gbg;
use bei_core::graph::parse_graph;
use bei_core::oracle::{oracle_summary, FieldChoice, OracleConfig, DEFAULT_MAX_VARS};
use bei_core::report::{analyze, decomposition_report};
use bei_core::verify::verify_graph;
use bei_core::{Error, Graph};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Invariants and Betti tables of binomial edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial invariants, bounds and predictions.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compares every applicable prediction with the Betti oracle.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Graded Betti table of S/in(J_G).
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Splits a chordal graph at its glue vertices.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Random generalized block graphs.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        facets: usize,
        #[arg(long, default_value_t = 4)]
        max_clique: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Writes `gbg-<seed>.txt` files here instead of printing.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OracleArgs {
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, env = "BEI_MAX_VARS", default_value_t = DEFAULT_MAX_VARS)]
    max_vars: usize,
    #[arg(long)]
    no_prune: bool,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Limit on the number of subsets examined.
    #[arg(long)]
    max_subsets: Option<u64>,
}

impl OracleArgs {
    fn config(&self) -> Result<OracleConfig, Error> {
        let time_limit = match self.budget {
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Error::InvalidParameter(format!("budget {s} is not positive"))),
            None => None,
        };
        Ok(OracleConfig {
            field: FieldChoice::from_characteristic(self.characteristic)?,
            max_vars: self.max_vars,
            prune: !self.no_prune,
            time_limit,
            subset_limit: self.max_subsets,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

fn print_json(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Analyze { file, format } => {
            let a = analyze(&read_graph(&file)?);
            match format {
                Format::Json => print_json(&a),
                Format::Table => print!("{}", a.to_table_string()),
            }
        }
        Command::Verify { file, oracle, format } => {
            let g = read_graph(&file)?;
            let out = verify_graph(&g, &oracle.config()?)?;
            match format {
                Format::Json => print_json(&out),
                Format::Table => {
                    for c in &out.checks {
                        let v = serde_json::to_value(&c.status).expect("serializes");
                        let status = v["status"].as_str().unwrap_or("?");
                        let extra = v
                            .get("reason")
                            .map(|r| format!(" ({})", r.as_str().unwrap_or("")))
                            .unwrap_or_default();
                        println!("{:<18} {status}{extra}", c.name);
                    }
                }
            }
            if !out.all_passed() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Oracle { file, oracle, format } => {
            let g = read_graph(&file)?;
            let s = oracle_summary(&g, &oracle.config()?)?;
            match format {
                Format::Json => println!("{}", s.table.to_json()),
                Format::Table => {
                    print!("{}", s.table.to_table_string());
                    println!("reg {} pd {} extremal {:?}", s.reg, s.pd, s.extremal);
                }
            }
        }
        Command::Decompose { file, format } => {
            let d = decomposition_report(&read_graph(&file)?)?;
            match format {
                Format::Json => print_json(&d),
                Format::Table => print!("{}", d.to_table_string()),
            }
        }
        Command::Gen {
            seed,
            facets,
            max_clique,
            count,
            out_dir,
        } => {
            if let Some(dir) = &out_dir {
                std::fs::create_dir_all(dir)?;
            }
            for k in 0..count as u64 {
                let s = seed.wrapping_add(k);
                let text = random_gbg(s, facets, max_clique)?.graph.to_text();
                match &out_dir {
                    Some(dir) => std::fs::write(dir.join(format!("gbg-{s}.txt")), text)?,
                    None => {
                        if k > 0 {
                            println!();
                        }
                        print!("{text}");
                    }
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_INPUT,
            })
        }
    }
}
