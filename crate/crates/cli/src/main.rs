use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use g2split::ratpoints::RankCertificate;
use g2split::{Error, Result};
use g2split_cli as cmd;

#[derive(Parser)]
#[command(name = "g2split", about = "Genus 2 curves with degree 3 elliptic subcovers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical and absolute invariants of y^2 = f(x).
    Invariants { curve: String },
    /// Reduced automorphism group label.
    Classify { curve: String },
    /// Normal form parameter t from absolute invariants.
    Reconstruct {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        i1: String,
        #[arg(long, allow_hyphen_values = true)]
        i2: String,
        #[arg(long, allow_hyphen_values = true)]
        i3: String,
    },
    /// Covering maps and elliptic subcovers at (u, v).
    Subcovers {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// The (u, v) over a moduli point and e3.
    Fiber {
        #[arg(long, allow_hyphen_values = true)]
        i1: String,
        #[arg(long, allow_hyphen_values = true)]
        i2: String,
        #[arg(long, allow_hyphen_values = true)]
        i3: String,
    },
    /// Quadratic satisfied by the j-invariants of the degree 2 subcovers.
    #[command(name = "deg2-j")]
    Deg2J {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Rational points from rank 0 certificates.
    #[command(name = "rational-points")]
    RationalPoints {
        curve: String,
        /// JSON list of {"curve-id", "rank", "provenance"}.
        #[arg(long)]
        certs: std::path::PathBuf,
        /// Also run the naive search up to this height.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Recompute Table 1 and diff against the printed values.
    Table1,
    /// Rerun worked examples 1 to 7 (all when omitted).
    Examples { which: Option<u32> },
}

fn run(c: Command) -> Result<Value> {
    match c {
        Command::Invariants { curve } => cmd::cmd_invariants(&curve),
        Command::Classify { curve } => cmd::cmd_classify(&curve),
        Command::Reconstruct { family, i1, i2, i3 } => cmd::cmd_reconstruct(&family, &i1, &i2, &i3),
        Command::Subcovers { u, v } => cmd::cmd_subcovers(&u, &v),
        Command::Fiber { i1, i2, i3 } => cmd::cmd_fiber(&i1, &i2, &i3),
        Command::Deg2J { family, t } => cmd::cmd_deg2_j(&family, &t),
        Command::RationalPoints { curve, certs, bound } => {
            let text = std::fs::read_to_string(&certs)
                .map_err(|e| Error::Invalid(format!("{}: {e}", certs.display())))?;
            let certs: Vec<RankCertificate> =
                serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("certificates: {e}")))?;
            cmd::cmd_rational_points(&curve, &certs, bound)
        }
        Command::Table1 => Ok(serde_json::to_value(cmd::cmd_table1()?).expect("serializable")),
        Command::Examples { which: Some(n) } => cmd::cmd_examples(n),
        Command::Examples { which: None } => (1..=7).map(cmd::cmd_examples).collect::<Result<Vec<_>>>().map(Value::Array),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", cmd::error_json(&e));
            ExitCode::from(1)
        }
    }
}
