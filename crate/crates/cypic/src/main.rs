//! `cypic` — Picard groups of moduli stacks of uniform cyclic covers.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cypic::algebra::QuotientAlgebra;
use cypic::output::{self, Doc, Node};
use cypic::picard::{det_pushforward_class, discriminant_class, GenusRegime};
use cypic::pipeline::{picard_report, sweep, CoverParams, SweepEntry, VerificationOutcome};
use cypic::poly::parse_poly;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// Inclusive integer range `A..B`, or a single value `A`.
#[derive(Clone, Debug)]
struct RangeSpec {
    start: u64,
    end: u64,
    raw: String,
}

impl RangeSpec {
    fn values(&self) -> Vec<u64> {
        if self.start > self.end {
            Vec::new()
        } else {
            (self.start..=self.end).collect()
        }
    }
}

fn parse_range(s: &str) -> Result<RangeSpec, String> {
    let parse_int = |t: &str| {
        t.parse::<u64>()
            .map_err(|_| format!("`{}` is not a non-negative integer", t))
    };
    let (start, end) = match s.split_once("..") {
        Some((a, b)) => (parse_int(a)?, parse_int(b)?),
        None => {
            let v = parse_int(s)?;
            (v, v)
        }
    };
    Ok(RangeSpec {
        start,
        end,
        raw: s.to_string(),
    })
}

#[derive(Parser)]
#[command(
    name = "cypic",
    version,
    about = "Exact Picard groups of moduli stacks of uniform cyclic covers of curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Picard group of the stack of degree-n uniform cyclic covers of
    /// genus-g curves by genus-h curves.
    PicB { h: u64, g: u64, n: u64 },
    /// Generators and relations of the Picard group of the universal
    /// Jacobian of degree d over genus-g curves.
    PicJac { g: u64, d: u64 },
    /// Exponent vector of det π_*(L^n ⊗ ω_π^k) in the regime's basis.
    Class {
        g: u64,
        d: u64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// The class T of the discriminant divisor of the canonical cover.
    DiscClass {
        g: u64,
        d: u64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Trace matrix and discriminant of the cover algebra R[x]/(x^n − h).
    DiscAlgebra { n: usize, h_expr: String },
    /// Verify the closed-form group tables over a (g, n, d) grid.
    Sweep {
        /// Base genus range, e.g. `0..5` (inclusive) or `2`.
        #[arg(long, value_parser = parse_range)]
        g: RangeSpec,
        /// Cover degree range, e.g. `2..12`.
        #[arg(long, value_parser = parse_range)]
        n: RangeSpec,
        /// Branch degree range, e.g. `1..12`.
        #[arg(long, value_parser = parse_range)]
        d: RangeSpec,
        /// Treat not-covered tuples as failures.
        #[arg(long)]
        strict: bool,
        /// Parallel sweep width (defaults to the number of cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn emit(format: Format, invocation: &str, payload: Vec<(String, Node)>, human: String) {
    match format {
        Format::Machine => print!("{}", output::render_machine(&Doc::new(invocation, payload))),
        Format::Human => print!("{}", human),
    }
}

fn run(cli: Cli, invocation: &str) -> Result<ExitCode, String> {
    match cli.command {
        Command::PicB { h, g, n } => {
            let params = CoverParams::new(h, g, n).map_err(|e| e.to_string())?;
            let result = picard_report(&params);
            emit(
                cli.format,
                invocation,
                output::picard_payload(h, g, n, &result),
                output::picard_human(h, g, n, &result),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::PicJac { g, d } => {
            let regime = GenusRegime::new(g, d).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                invocation,
                output::jacobian_payload(regime),
                output::jacobian_human(regime),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Class { g, d, n, k } => {
            let regime = GenusRegime::new(g, d).map_err(|e| e.to_string())?;
            match det_pushforward_class(regime, n, k) {
                Ok(class) => {
                    emit(
                        cli.format,
                        invocation,
                        output::class_payload("class", regime, &[("n", n), ("k", k)], &class),
                        output::class_human(
                            &format!("det π_*(L^{} ⊗ ω_π^{})", n, k),
                            regime,
                            &class,
                        ),
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::DiscClass { g, d, n } => {
            let regime = GenusRegime::new(g, d).map_err(|e| e.to_string())?;
            match discriminant_class(regime, n) {
                Ok(class) => {
                    emit(
                        cli.format,
                        invocation,
                        output::class_payload(
                            "discriminant-class",
                            regime,
                            &[("n", n)],
                            &class,
                        ),
                        output::class_human(
                            &format!(
                                "discriminant class T = (det π_*(L^{} ⊗ ω_π))^2 ⊗ (det π_*ω_π)^(-2)",
                                n
                            ),
                            regime,
                            &class,
                        ),
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::DiscAlgebra { n, h_expr } => {
            if n < 2 {
                return Err(format!("cover degree n must be ≥ 2, got {}", n));
            }
            let h = parse_poly(&h_expr).map_err(|e| e.to_string())?;
            let algebra = QuotientAlgebra::cyclic_cover(n, &h);
            let trace = algebra.trace_form();
            let disc = trace.determinant();
            emit(
                cli.format,
                invocation,
                output::algebra_payload(n, &h, &algebra, &trace, &disc),
                output::algebra_human(n, &h, &algebra, &trace, &disc),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            g,
            n,
            d,
            strict,
            jobs,
        } => {
            let gs = g.values();
            let ns = n.values();
            let ds = d.values();
            if ns.iter().any(|&n| n < 2) {
                return Err("cover degrees in --n must be ≥ 2".to_string());
            }
            if ds.iter().any(|&d| d < 1) {
                return Err("branch degrees in --d must be ≥ 1".to_string());
            }
            let entries: Vec<SweepEntry> = match jobs {
                Some(0) => return Err("--jobs must be ≥ 1".to_string()),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| e.to_string())?
                    .install(|| sweep(&gs, &ns, &ds)),
                None => sweep(&gs, &ns, &ds),
            };
            emit(
                cli.format,
                invocation,
                output::sweep_payload(&g.raw, &n.raw, &d.raw, &entries),
                output::sweep_human(&g.raw, &n.raw, &d.raw, &entries),
            );
            let mismatches = entries.iter().filter(|e| e.outcome.is_mismatch()).count();
            let not_covered = entries
                .iter()
                .filter(|e| matches!(e.outcome, VerificationOutcome::NotCovered))
                .count();
            if mismatches > 0 || (strict && not_covered > 0) {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let invocation = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(cli, &invocation) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}
