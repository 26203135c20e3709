use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fibsums::render::{Family, Format, RenderSpec};
use fibsums::seq::cell_limit_from_env;
use fibsums_cli::{cmd_bfile, cmd_table, cmd_verify, Identity};

/// Iterated partial sums of the Fibonacci sequence and Schreier set counts.
#[derive(Parser)]
#[command(name = "fibsums", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the a_k(n) or s_k(n) grid.
    Table {
        #[arg(long, default_value = "a")]
        family: Family,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
        #[arg(long, default_value = "tsv")]
        format: Format,
    },
    /// Check an identity over 0..=kmax and 1..=nmax.
    Verify {
        identity: IdentityArg,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
    /// Export one row as an OEIS b-file.
    Bfile {
        #[arg(long, default_value = "a")]
        family: Family,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "theorem2")]
    Theorem2,
    #[value(name = "lemma_a3")]
    LemmaA3,
    #[value(name = "corollary_cs")]
    CorollaryCs,
    #[value(name = "closed_form")]
    ClosedForm,
    #[value(name = "oracle")]
    Oracle,
}

impl From<IdentityArg> for Identity {
    fn from(arg: IdentityArg) -> Self {
        match arg {
            IdentityArg::Theorem1 => Identity::Theorem1,
            IdentityArg::Theorem2 => Identity::Theorem2,
            IdentityArg::LemmaA3 => Identity::LemmaA3,
            IdentityArg::CorollaryCs => Identity::CorollaryCs,
            IdentityArg::ClosedForm => Identity::ClosedForm,
            IdentityArg::Oracle => Identity::Oracle,
        }
    }
}

fn run(cli: Cli) -> fibsums::Result<(String, bool)> {
    let limit = cell_limit_from_env()?;
    match cli.command {
        Command::Table {
            family,
            kmax,
            nmax,
            format,
        } => {
            let spec = RenderSpec {
                family,
                k_max: kmax,
                n_max: nmax as usize,
                format,
            };
            Ok((cmd_table(&spec, limit)?, true))
        }
        Command::Verify { identity, kmax, nmax } => cmd_verify(identity.into(), kmax, nmax as usize, limit),
        Command::Bfile { family, k, nmax } => Ok((cmd_bfile(family, k, nmax as usize, limit)?, true)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("fibsums: {e}");
            ExitCode::from(2)
        }
    }
}
