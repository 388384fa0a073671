//! Command-line benchmark kit for interval min-max regret problems:
//! seeded instance generation, single solves, manifest-driven benchmark
//! runs, and randomized solver cross-validation.

mod bench;
mod generate;
mod record;
mod solve;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use solve::Algo;

#[derive(Parser)]
#[command(
    name = "regret-kit",
    version,
    about = "Generate, solve, and benchmark interval min-max regret instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one seeded benchmark instance and print its path.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run one algorithm on one instance; print a single-record report.
    Solve {
        /// Instance file (.rrsp or .rsc; the header token decides).
        instance: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Wall-clock limit in seconds; omit for no limit.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Accepted for protocol compatibility; the bundled solvers are
        /// deterministic and take no randomness.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every cell of a benchmark manifest and write a CSV report.
    ///
    /// Manifest lines read `<set> <instance> <algo,algo,...> <limit|none>`
    /// with `#` comments; paths are relative to the manifest. Concurrency
    /// is capped by REGRET_KIT_THREADS (default: all logical processors).
    Bench {
        #[arg(long)]
        manifest: PathBuf,
        /// Output CSV path (raw rows plus `#` summary blocks).
        #[arg(long)]
        out: PathBuf,
    },
    /// Cross-validate the solvers on random tiny instances; exits
    /// nonzero with a serialized counterexample on any violation.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex cap for random path instances (4..=12).
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        /// Column cap for random covering instances (3..=10).
        #[arg(long, default_value_t = 7)]
        max_cols: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Layered graph with interval costs and arc resources.
    Karasan {
        /// Vertex count (a multiple of --omega).
        #[arg(long)]
        v: usize,
        /// Cost scale: nominal arc costs are drawn from [1, phi].
        #[arg(long)]
        phi: i64,
        /// Interval half-width factor in (0, 1).
        #[arg(long)]
        delta: String,
        /// Layer width.
        #[arg(long)]
        omega: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Grid graph with paired forward/backward arcs sharing a resource.
    Coco {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        phi: i64,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Intervals around the column costs of an OR-Library scp file.
    Beasley {
        /// Base structure-and-costs file in OR-Library scp format.
        #[arg(long)]
        scp: PathBuf,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Intervals with upper bounds in [0, 1000] over an scp structure.
    Montemanni {
        #[arg(long)]
        scp: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Intervals with lower bounds in [0, 1000] and width up to 1000.
    Kz {
        #[arg(long)]
        scp: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Random coverable structure with costs, in OR-Library scp format.
    SyntheticSc {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Probability of each incidence entry, in (0, 1].
        #[arg(long)]
        density: String,
        /// Costs are drawn from [1, phi].
        #[arg(long)]
        phi: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn dispatch(command: Command) -> Result<(), String> {
    match command {
        Command::Generate { family } => {
            let written = match family {
                Family::Karasan {
                    v,
                    phi,
                    delta,
                    omega,
                    seed,
                    out,
                } => generate::karasan(v, phi, &delta, omega, seed, &out)?,
                Family::Coco {
                    rows,
                    cols,
                    phi,
                    delta,
                    seed,
                    out,
                } => generate::coco(rows, cols, phi, &delta, seed, &out)?,
                Family::Beasley {
                    scp,
                    delta,
                    seed,
                    out,
                } => generate::beasley(&scp, &delta, seed, &out)?,
                Family::Montemanni { scp, seed, out } => {
                    generate::montemanni(&scp, seed, &out)?
                }
                Family::Kz { scp, seed, out } => generate::kz(&scp, seed, &out)?,
                Family::SyntheticSc {
                    rows,
                    cols,
                    density,
                    phi,
                    seed,
                    out,
                } => generate::synthetic_sc(rows, cols, &density, phi, seed, &out)?,
            };
            println!("{}", written.display());
            Ok(())
        }
        Command::Solve {
            instance,
            algo,
            time_limit,
            seed,
        } => solve::cmd_solve(&instance, algo, time_limit, seed),
        Command::Bench { manifest, out } => bench::cmd_bench(&manifest, &out),
        Command::Verify {
            trials,
            seed,
            max_vertices,
            max_cols,
        } => verify::cmd_verify(trials, seed, max_vertices, max_cols),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
