use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symdiag::abacus::is_p_core;
use symdiag::notation::{format_partition, parse_delta, parse_partition};
use symdiag::verify::{sweep, DeltaReport, Method};
use symdiag::{Abacus, Bisequence, CoreQuotient, Error, Partition};

#[derive(Parser)]
#[command(
    name = "symdiag",
    version,
    about = "Diagonal hook lengths of self-conjugate partitions"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-core and p-quotient of a partition.
    Core(PartitionArgs),
    /// p-quotient of a partition.
    Quotient(PartitionArgs),
    /// Diagonal hook lengths from a symmetric core and quotient.
    Delta {
        #[arg(long)]
        p: usize,
        /// The core, e.g. "3,1" (empty if omitted).
        #[arg(long, default_value = "")]
        core: String,
        /// Read --core as a list of diagonal hook lengths.
        #[arg(long)]
        from_delta: bool,
        /// One entry per runner, in order; repeat the flag p times.
        #[arg(long = "quotient", allow_hyphen_values = true)]
        quotient: Vec<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Test whether a symmetric partition is a p-core, two ways.
    CheckCore(PartitionArgs),
    /// Draw the abacus of a partition.
    Render(PartitionArgs),
    /// Sweep every symmetric partition up to a weight.
    Verify {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "3,5")]
        primes: Vec<usize>,
    },
}

#[derive(clap::Args)]
struct PartitionArgs {
    /// Parts such as "6,6,2" or "6^2,2".
    partition: String,
    #[arg(long)]
    p: usize,
    /// Read the positional argument as a list of diagonal hook lengths.
    #[arg(long)]
    from_delta: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

const DISAGREE: u8 = 1;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Syntax { .. }
        | Error::NonMonotonic { .. }
        | Error::NonPositivePart { .. }
        | Error::NotStrictlyDecreasing
        | Error::InvalidDelta(_) => 2,
        Error::BadModulus(_) | Error::EvenModulus(_) => 3,
        Error::NotACore(_) | Error::NonEmptyCore(_) => 4,
        Error::WrongQuotientLength { .. }
        | Error::NotSymmetricQuotient
        | Error::InconsistentQuotient => 5,
        Error::NotSymmetric | Error::NotSymmetricBisequence => 6,
        _ => 1,
    }
}

fn read_partition(text: &str, from_delta: bool) -> symdiag::Result<Partition> {
    if from_delta {
        Ok(Partition::from_delta(&parse_delta(text)?))
    } else {
        parse_partition(text)
    }
}

fn parts(lambda: &Partition) -> Value {
    json!(lambda.parts())
}

fn run(cli: Cli) -> symdiag::Result<u8> {
    match cli.command {
        Command::Core(args) => {
            let lambda = read_partition(&args.partition, args.from_delta)?;
            let cq = CoreQuotient::of(&lambda, args.p)?;
            if cli.json {
                let weights: Vec<usize> = cq.quotient.iter().map(Partition::weight).collect();
                let v = json!({
                    "p": args.p,
                    "core": parts(&cq.core),
                    "quotient": cq.quotient.iter().map(parts).collect::<Vec<_>>(),
                    "weights": weights,
                });
                println!("{v}");
            } else {
                println!("core: ({})", format_partition(&cq.core));
                print_quotient(&cq.quotient);
            }
        }
        Command::Quotient(args) => {
            let lambda = read_partition(&args.partition, args.from_delta)?;
            let quotient = symdiag::p_quotient(&lambda, args.p)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "p": args.p, "quotient": quotient.iter().map(parts).collect::<Vec<_>>() })
                );
            } else {
                print_quotient(&quotient);
            }
        }
        Command::Delta {
            p,
            core,
            from_delta,
            quotient,
            method,
        } => {
            let core = read_partition(&core, from_delta)?;
            let quotient = quotient
                .iter()
                .map(|q| parse_partition(q))
                .collect::<symdiag::Result<Vec<_>>>()?;
            let report = DeltaReport::compute(&core, &quotient, p, method.into())?;
            print_report(&report, cli.json);
            if report.agreement == Some(false) || !report.conservation {
                return Ok(DISAGREE);
            }
        }
        Command::CheckCore(args) => {
            let lambda = read_partition(&args.partition, args.from_delta)?;
            if !lambda.is_symmetric() {
                return Err(Error::NotSymmetric);
            }
            let criterion = Bisequence::of(&lambda).is_symmetric_p_core(args.p)?;
            let direct = is_p_core(&lambda, args.p)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "p": args.p, "criterion": criterion, "direct": direct })
                );
            } else {
                println!("residue-class criterion: {criterion}");
                println!("direct hook check:       {direct}");
                println!("{}", if direct { "CORE" } else { "NOT A CORE" });
            }
            if criterion != direct {
                return Ok(DISAGREE);
            }
        }
        Command::Render(args) => {
            let lambda = read_partition(&args.partition, args.from_delta)?;
            let abacus = Abacus::new(&lambda, args.p)?;
            if cli.json {
                let rows: Vec<Vec<bool>> = (0..abacus.rows())
                    .map(|r| (0..args.p).map(|g| abacus.bead_at(r, g)).collect())
                    .collect();
                let axis = abacus.beads().axis();
                println!(
                    "{}",
                    json!({ "p": args.p, "rows": rows, "two_theta": axis.two_theta })
                );
            } else {
                print!("{}", abacus.render());
            }
        }
        Command::Verify { n_max, primes } => {
            if let Some(&bad) = primes.iter().find(|&&q| q < 2) {
                return Err(Error::BadModulus(bad));
            }
            let summary = sweep(n_max, &primes);
            if cli.json {
                let failures: Vec<Value> = summary
                    .failures
                    .iter()
                    .map(|f| json!({ "lambda": parts(&f.lambda), "p": f.p, "check": f.check.to_string(), "detail": f.detail }))
                    .collect();
                println!(
                    "{}",
                    json!({ "n_max": n_max, "primes": primes, "cells": summary.cells, "failures": failures })
                );
            } else {
                for f in &summary.failures {
                    println!(
                        "FAIL ({}) p={} {}: {}",
                        format_partition(&f.lambda),
                        f.p,
                        f.check,
                        f.detail
                    );
                }
                println!("{summary}");
            }
            if !summary.passed() {
                return Ok(DISAGREE);
            }
        }
    }
    Ok(0)
}

fn print_quotient(quotient: &[Partition]) {
    for (g, q) in quotient.iter().enumerate() {
        println!("runner {g}: ({})", format_partition(q));
    }
}

fn print_report(r: &DeltaReport, as_json: bool) {
    let list = |d: &Option<symdiag::DeltaSet>| d.as_ref().map(|d| json!(d.lengths()));
    if as_json {
        let v = json!({
            "p": r.p,
            "core": parts(&r.core),
            "quotient": r.quotient.iter().map(parts).collect::<Vec<_>>(),
            "partition": r.partition.as_ref().map(parts),
            "delta_formula": list(&r.delta_formula),
            "delta_oracle": list(&r.delta_oracle),
            "agreement": r.agreement,
            "conservation": r.conservation,
            "weight": r.weight,
        });
        println!("{v}");
        return;
    }
    if let Some(lambda) = &r.partition {
        println!("partition: ({})", format_partition(lambda));
    }
    if let Some(d) = &r.delta_formula {
        println!("formula:   {d}");
    }
    if let Some(d) = &r.delta_oracle {
        println!("oracle:    {d}");
    }
    if let Some(a) = r.agreement {
        println!("agreement: {a}");
    }
    println!("weight:    {} (conservation {})", r.weight, r.conservation);
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
