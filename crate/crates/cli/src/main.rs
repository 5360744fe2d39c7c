use std::path::PathBuf;

use clap::{Parser, Subcommand};

use witcount_cli::bench::{render_csv, run_bench, BenchParams};
use witcount_cli::check::{check_instance, parse_random_params, run_random_check};
use witcount_cli::commands::{run_count, run_matchings, CountOptions};
use witcount_cli::error::CliError;
use witcount_cli::selftest::run_selftest;
use witcount_cli::with_threads;
use witcount_core::instance::ParseOptions;

/// Exact witness counting over GF(2)^d: tuples of distinct vectors XORing
/// to a target, plus perfect matchings in uniform hypergraphs.
#[derive(Parser, Debug)]
#[command(name = "witcount", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Plain text output instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    /// Also report cumulative witness counts (lengths <= i).
    #[arg(long, global = true)]
    cumulative: bool,

    /// Collapse duplicate vectors in instance files instead of failing.
    #[arg(long, global = true)]
    dedupe: bool,

    /// Reject instances whose dimension exceeds this cap.
    #[arg(long, global = true, default_value_t = witcount_core::DEFAULT_DIMENSION_CAP)]
    max_d: usize,

    /// Worker threads for the data-parallel pipeline (0 = all cores).
    /// Builds without the `parallel` feature ignore this.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Seed for commands that generate random inputs.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count candidate, failure, and witness tuples of an instance file.
    Count { file: PathBuf },

    /// Count only candidate tuples (repeats allowed) of an instance file.
    Candidates { file: PathBuf },

    /// Count perfect matchings of a hypergraph file.
    Matchings { file: PathBuf },

    /// Re-verify results against the independent oracles: either for one
    /// instance file, or for a stream of seeded random instances with
    /// `--random [seed=N] [count=N] [dmax=N] [kmax=N]`.
    OracleCheck {
        /// Instance file, or key=value parameters with --random.
        args: Vec<String>,

        /// Check seeded random instances instead of a file.
        #[arg(long)]
        random: bool,
    },

    /// Time the pipeline over a dimension range on seeded random instances
    /// and print CSV (d,m,k,wall_ms,ops).
    Bench {
        #[arg(long, default_value_t = 16)]
        dmin: usize,

        #[arg(long, default_value_t = 20)]
        dmax: usize,

        #[arg(long, default_value_t = 4)]
        k: usize,

        /// Vector count as a fraction of 2^d.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },

    /// Run the built-in smoke checks.
    Selftest,
}

fn main() {
    let cli = Cli::parse();
    let threads = cli.threads;
    let code = with_threads(threads, move || run(cli));
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Count { ref file } | Command::Candidates { ref file } => {
            let report = run_count(
                file,
                CountOptions {
                    cumulative: cli.cumulative,
                    dedupe: cli.dedupe,
                    dimension_cap: cli.max_d,
                    candidates_only: matches!(cli.command, Command::Candidates { .. }),
                },
            )?;
            if cli.plain {
                print!("{}", report.render_plain());
            } else {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            }
            Ok(0)
        }

        Command::Matchings { ref file } => {
            let report = run_matchings(file)?;
            if cli.plain {
                print!("{}", report.render_plain());
            } else {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            }
            Ok(0)
        }

        Command::OracleCheck { ref args, random } => {
            if random {
                let params = parse_random_params(args, cli.seed)?;
                match run_random_check(params) {
                    Ok(summary) => {
                        println!(
                            "oracle-check: {} random instances, all profiles agree",
                            summary.checked
                        );
                        Ok(0)
                    }
                    Err(mismatch) => {
                        eprintln!("oracle-check FAILED\n{mismatch}");
                        Ok(1)
                    }
                }
            } else {
                let [file] = args.as_slice() else {
                    return Err(CliError::Usage(
                        "expected exactly one instance file (or --random with key=value parameters)"
                            .into(),
                    ));
                };
                let text = std::fs::read_to_string(file)
                    .map_err(|e| CliError::Io(format!("{file}: {e}")))?;
                let instance = witcount_core::parse_instance_with(
                    &text,
                    ParseOptions {
                        dedupe: cli.dedupe,
                        dimension_cap: cli.max_d,
                    },
                )?;
                match check_instance(&instance)? {
                    None => {
                        println!("oracle-check: all profiles agree");
                        Ok(0)
                    }
                    Some(mismatch) => {
                        eprintln!("oracle-check FAILED\n{mismatch}");
                        Ok(1)
                    }
                }
            }
        }

        Command::Bench {
            dmin,
            dmax,
            k,
            density,
        } => {
            let rows = run_bench(BenchParams {
                dmin,
                dmax,
                k,
                density,
                seed: cli.seed,
                dimension_cap: cli.max_d,
            })?;
            print!("{}", render_csv(&rows));
            Ok(0)
        }

        Command::Selftest => {
            let failures = run_selftest();
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}
