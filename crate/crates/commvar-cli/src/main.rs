//! Command line interface: construct algebras, compile commuting-variety
//! ideals, compute dimensions, and run the verification suites.
//!
//! Exit codes: 0 on match or no-expectation, 1 on mismatch, 2 on input
//! errors, 3 on resource errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commvar::engine::{dimension, EngineConfig, Method};
use commvar::error::Error;
use commvar::formulas::{self, expectation_for};
use commvar::groebner::GroebnerConfig;
use commvar::lie::{construct_algebra, Family, LieType};
use commvar::orbit::{orbit_report, Partition};
use commvar::suites::{run_suite, SuiteOptions, SUITE_NAMES};
use commvar::variety::{compile, export_json, export_text, Locus};

#[derive(Parser)]
#[command(
    name = "commvar",
    about = "Exact dimensions of commuting varieties over classical Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EngineArgs {
    /// Characteristic for the Groebner route (COMMVAR_CHAR overrides the
    /// default 32003)
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Field sizes for the counting route
    #[arg(long, value_delimiter = ',')]
    qs: Option<Vec<u64>>,
    /// Seed for the sampling estimator
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Enumeration work budget
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Groebner pair budget
    #[arg(long, default_value_t = 2_000_000)]
    max_pairs: usize,
    /// Groebner lcm degree bound
    #[arg(long, default_value_t = 60)]
    max_degree: u32,
}

impl EngineArgs {
    fn build(&self, method: Method) -> EngineConfig {
        let default_char = std::env::var("COMMVAR_CHAR")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(32003);
        EngineConfig {
            characteristic: self.characteristic.unwrap_or(default_char),
            method,
            qs: self.qs.clone().unwrap_or_else(|| vec![2, 3, 5]),
            seed: self.seed,
            budget: self.budget,
            groebner: GroebnerConfig {
                max_pairs: self.max_pairs,
                max_degree: self.max_degree,
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis matrices and structural data of a classical algebra
    Algebra {
        /// Algebra name: A2, C2, sl4, sp4, so7, ...
        name: String,
    },
    /// Orbit data of a nilpotent partition
    OrbitDim {
        /// Algebra name: A2, C2, sl4, ...
        algebra: String,
        /// Partition parts, comma separated, e.g. 2,2,1
        #[arg(long, value_delimiter = ',')]
        partition: Vec<usize>,
    },
    /// Compile a commuting-variety instance to a polynomial ideal
    Compile {
        #[arg(long)]
        algebra: String,
        /// Locus: u, w, N, N1, O2, O2u
        #[arg(long)]
        locus: String,
        #[arg(long)]
        r: usize,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Output format: text (one polynomial per line) or json
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// Compute the dimension of a commuting-variety instance
    Cvdim {
        #[arg(long)]
        algebra: String,
        /// Locus: u, w, N, N1, O2, O2u
        #[arg(long)]
        locus: String,
        #[arg(long)]
        r: usize,
        /// groebner, count, or both
        #[arg(long, default_value = "groebner")]
        method: String,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Run a verification suite
    Verify {
        /// constructions, orbits, rank2, thresholds, bounds, crosschecks,
        /// or all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Emit the cohomology lower-bound tables
    BoundTable {
        /// Family letter: A, B, C or D
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Algebra { name } => {
            let t: LieType = name.parse()?;
            let g = construct_algebra(t);
            let basis: Vec<Vec<Vec<String>>> = g
                .basis()
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                        .collect()
                })
                .collect();
            let out = serde_json::json!({
                "type": t.name(),
                "algebra": t.algebra_name(),
                "n": t.n(),
                "rank": t.rank(),
                "coxeter_number": t.coxeter_number(),
                "dim": g.dim(),
                "dim_u": t.dim_u(),
                "dim_w": t.dim_w(),
                "basis": basis,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(0)
        }
        Command::OrbitDim { algebra, partition } => {
            let t: LieType = algebra.parse()?;
            let p = Partition::new(partition)?;
            let report = orbit_report(t, &p);
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
        Command::Compile {
            algebra,
            locus,
            r,
            out,
            format,
            characteristic,
        } => {
            let t: LieType = algebra.parse()?;
            let locus = Locus::parse(&locus, characteristic.unwrap_or(32003))?;
            let inst = compile(t, locus, r)?;
            let rendered = match format.as_str() {
                "text" => export_text(&inst),
                "json" => serde_json::to_string_pretty(&export_json(&inst)).unwrap(),
                other => {
                    return Err(Error::Input(format!(
                        "unknown format {other:?}; use text or json"
                    )))
                }
            };
            match out {
                Some(path) => {
                    let mut file = std::fs::File::create(&path)
                        .map_err(|e| Error::Input(format!("cannot write {path:?}: {e}")))?;
                    file.write_all(rendered.as_bytes())
                        .map_err(|e| Error::Input(format!("cannot write {path:?}: {e}")))?;
                    eprintln!(
                        "wrote {} generators in {} variables to {}",
                        inst.generators.len(),
                        inst.num_vars(),
                        path.display()
                    );
                }
                None => print!("{rendered}"),
            }
            Ok(0)
        }
        Command::Cvdim {
            algebra,
            locus,
            r,
            method,
            engine,
        } => {
            let t: LieType = algebra.parse()?;
            let method: Method = method.parse()?;
            let config = engine.build(method);
            let locus = Locus::parse(&locus, config.characteristic)?;
            let inst = compile(t, locus, r)?;
            let expected = expectation_for(t, locus, r, config.characteristic);
            let report = dimension(&inst, &config, expected)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(report.exit_code())
        }
        Command::Verify {
            suite,
            max_rank,
            max_r,
            json,
            engine,
        } => {
            let opts = SuiteOptions {
                max_rank,
                max_r,
                engine: engine.build(Method::Groebner),
            };
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_ok = true;
            for name in names {
                let report = run_suite(name, &opts)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                } else {
                    println!("suite {name}:");
                    print!("{}", report.render_table());
                }
                all_ok &= report.all_match();
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::BoundTable {
            family,
            max_rank,
            max_r,
            json,
        } => {
            let family: Family = family.parse()?;
            let rows = formulas::bound_table(family, max_rank, max_r)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!(
                    "{:>6} {:>3} {:>12} {:>14} {:>9} {:>8} {:>8}",
                    "type", "r", "borel-lower", "frobenius-lower", "equal@p2", "coxeter", "c"
                );
                for row in &rows {
                    println!(
                        "{:>6} {:>3} {:>12} {:>14} {:>9} {:>8} {:>8}",
                        row.lie_type.name(),
                        row.r,
                        row.borel_lower,
                        row.frobenius_lower,
                        if row.equality_at_p2 { "yes" } else { "" },
                        row.coxeter_number,
                        row.simple_module_constant,
                    );
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
