//! `lwcert`: exact algebraic numbers and Hermite gap certificates from the
//! command line.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 domain error (including
//! closure, size cap, ambiguous selection and exhausted precision), 4 failed
//! internal consistency check, 5 unwritable output.

mod commands;
mod report;
mod value;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lwcert_core::qbar::ArithOp;
use lwcert_core::Error;

use commands::Settings;
use report::{write_out, Format};

#[derive(Parser, Debug)]
#[command(name = "lwcert", version, about = "Exact algebraic numbers and Hermite gap certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Working precision in bits for enclosures.
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u32).range(1..))]
    prec: u32,

    /// Largest prime tried in a sweep.
    #[arg(long, global = true, default_value_t = 31, value_parser = clap::value_parser!(u64).range(1..))]
    pmax: u64,

    /// Cap on the number of terms in a combinatorial expansion.
    #[arg(long, global = true, default_value_t = 20_000, value_parser = parse_cap)]
    cap: u128,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal polynomial and enclosure of a value.
    Minpoly {
        #[arg(long)]
        value: String,
    },
    /// Exact a op b.
    Arith {
        #[arg(long, value_parser = parse_op)]
        op: ArithOp,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// All conjugates of a value.
    Conjugates {
        #[arg(long)]
        value: String,
    },
    /// Norm from Q(gen) to Q of an element given as a polynomial in the generator.
    Norm {
        #[arg(long)]
        gen: String,
        #[arg(long)]
        elem: String,
    },
    /// Primitive element of the field generated by a list of values, and its embeddings.
    Embeddings {
        #[arg(long)]
        gens: String,
    },
    /// The rational polynomial with exactly the given roots, if there is one.
    Symcheck {
        #[arg(long)]
        set: String,
    },
    /// Least d with d·α an algebraic integer.
    Denominator {
        #[arg(long)]
        value: String,
    },
    /// Rational primes p with α/p an algebraic integer.
    Primediv {
        #[arg(long)]
        value: String,
    },
    /// Sweep primes for a lower bound on |Π (1 + e^α)| over the roots of a polynomial.
    CertifyPi {
        #[arg(long)]
        poly: String,
    },
    /// Sweep primes for a lower bound on the conjugate product of Σ b_i e^{α_i}.
    CertifyLw {
        #[arg(long)]
        alphas: String,
        #[arg(long)]
        b: String,
    },
    /// Rewrite Σ c_i e^{α_i} with algebraic c_i as a rational combination.
    ReduceQbar {
        #[arg(long)]
        c: String,
        #[arg(long)]
        alphas: String,
    },
}

fn parse_op(s: &str) -> Result<ArithOp, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_cap(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::Consistency(_) => 4,
        Error::Domain(_)
        | Error::Ambiguous(_)
        | Error::Precision { .. }
        | Error::Size { .. }
        | Error::Closure { .. }
        | Error::NoCertificate(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let s = Settings { prec: cli.prec, pmax: cli.pmax, cap: cli.cap };
    let result = match &cli.command {
        Command::Minpoly { value } => commands::minpoly(value, s),
        Command::Arith { op, a, b } => commands::arith(*op, a, b, s),
        Command::Conjugates { value } => commands::conjugate_set(value, s),
        Command::Norm { gen, elem } => commands::norm_of(gen, elem, s),
        Command::Embeddings { gens } => commands::embeddings(gens, s),
        Command::Symcheck { set } => commands::symcheck(set, s),
        Command::Denominator { value } => commands::denominator(value, s),
        Command::Primediv { value } => commands::primediv(value, s),
        Command::CertifyPi { poly } => commands::certify_pi(poly, s),
        Command::CertifyLw { alphas, b } => commands::certify_lw(alphas, b, s),
        Command::ReduceQbar { c, alphas } => commands::reduce_qbar(c, alphas, s),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("lwcert: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    if let Err(e) = write_out(&report.render(cli.format), cli.out.as_deref()) {
        let target = cli.out.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "standard output".into());
        eprintln!("lwcert: cannot write {target}: {e}");
        return ExitCode::from(5);
    }
    ExitCode::SUCCESS
}
