use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use sct_core::cumulants::{kappa_eval, speicher_kappa, Mode};
use sct_core::ncpart::{moebius, NoncrossingPartition};
use sct_core::nsym::{cumulant_k, lagrange_g_component, s_in_k, Basis, Composition, Expansion, KMethod};
use sct_core::operad::{corolla_series, gc_series, kappa_series, ldst_series, TreeSeries};
use sct_core::symfun::classical_cumulants;
use sct_core::trees::{enumerate, TreeKind};
use sct_core::verify::{self, Suite};
use sct_core::Rational;

#[derive(Parser, Debug)]
#[command(name = "sct", version, about = "Exact free-cumulant calculus on Schröder trees")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest weight, degree or size accepted by any subcommand.
    #[arg(long, global = true, env = "SCT_MAX_WEIGHT", default_value_t = 10)]
    max_weight: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the trees of one class and weight in canonical order.
    Enumerate {
        #[arg(long, value_parser = parse_with::<TreeKind>)]
        kind: TreeKind,
        #[arg(long)]
        weight: usize,
    },
    /// Print a named tree series truncated at a weight.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        #[arg(long)]
        weight: usize,
    },
    /// Homogeneous components of g, K, or S_n in the K alphabet.
    Nsym {
        #[arg(long, value_enum)]
        what: NsymWhat,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "S", value_parser = parse_with::<Basis>)]
        basis: Basis,
    },
    /// The n-th free cumulant of a1..an.
    Cumulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: CumulantMode,
    },
    /// Univariate free cumulants k_1..k_n in the moments.
    Classical {
        #[arg(long)]
        n: usize,
    },
    /// Noncrossing-partition operations.
    Partition {
        #[arg(long, value_enum)]
        op: PartitionOp,
        /// `kreweras P`, `moebius P` (from the bottom) or `moebius SIGMA PI`.
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// Run a named self-check suite.
    Verify {
        #[arg(long, value_parser = parse_with::<Suite>)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        weight: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    Fc,
    Gc,
    Kappa,
    Ldst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NsymWhat {
    G,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "s-in-K", alias = "s-in-k")]
    SInK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CumulantMode {
    Operator,
    Bimodule,
    Scalar,
    Speicher,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PartitionOp {
    Kreweras,
    Moebius,
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn parse_with<T: std::str::FromStr<Err = sct_core::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: sct_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(Output),
}

impl From<sct_core::Error> for Failure {
    fn from(e: sct_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    params: Value,
    payload: Value,
}

fn rational(c: &Rational) -> (Value, Value) {
    let to_json = |x: &num_bigint::BigInt| x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from);
    (to_json(c.numer()), to_json(c.denom()))
}

fn expansion_json(e: &Expansion) -> Value {
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|(Composition(index), c)| {
            let (num, den) = rational(c);
            json!({ "index": index, "num": num, "den": den })
        })
        .collect();
    json!({ "basis": e.basis.symbol(), "terms": terms })
}

fn series_json(s: &TreeSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .iter()
        .map(|(t, c)| {
            let (num, den) = rational(c);
            json!({ "tree": t.to_string(), "num": num, "den": den })
        })
        .collect();
    json!({ "order": s.order(), "terms": terms })
}

fn check_cap(value: usize, cap: usize, what: &str) -> Result<(), Failure> {
    if value > cap {
        return Err(Failure::Usage(format!(
            "{what} {value} exceeds the configured cap of {cap} (raise it with --max-weight or SCT_MAX_WEIGHT)"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let cap = cli.max_weight;
    match &cli.command {
        Command::Enumerate { kind, weight } => {
            check_cap(*weight, cap, "weight")?;
            let trees: Vec<String> = enumerate(*kind, *weight).iter().map(ToString::to_string).collect();
            Ok(Output {
                text: trees.join("\n"),
                params: json!({ "kind": kind.to_string(), "weight": weight }),
                payload: json!({ "count": trees.len(), "trees": trees }),
            })
        }
        Command::Series { name, weight } => {
            check_cap(*weight, cap, "weight")?;
            let s = match name {
                SeriesName::Fc => corolla_series(*weight),
                SeriesName::Gc => gc_series(*weight),
                SeriesName::Kappa => kappa_series(*weight),
                SeriesName::Ldst => ldst_series(*weight),
            };
            let name = value_name(name);
            Ok(Output {
                text: s.to_string(),
                params: json!({ "name": name, "weight": weight }),
                payload: series_json(&s),
            })
        }
        Command::Nsym { what, degree, basis } => {
            check_cap(*degree, cap, "degree")?;
            let params = json!({ "what": value_name(what), "degree": degree, "basis": basis.symbol() });
            match what {
                NsymWhat::G | NsymWhat::K => {
                    let x = match what {
                        NsymWhat::G => lagrange_g_component(*degree),
                        _ => cumulant_k(*degree, KMethod::Solve).homogeneous(*degree),
                    };
                    let e = x.expand(*basis);
                    Ok(Output { text: e.to_string(), params, payload: expansion_json(&e) })
                }
                NsymWhat::SInK => {
                    let e = s_in_k(*degree);
                    let payload = expansion_json(&Expansion { basis: Basis::S, terms: e.0.clone() });
                    let payload = json!({ "basis": "K", "terms": payload["terms"] });
                    Ok(Output { text: e.to_string(), params, payload })
                }
            }
        }
        Command::Cumulant { n, mode } => {
            check_cap(*n, cap, "n")?;
            if *n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let text = match mode {
                CumulantMode::Operator => kappa_eval(*n, Mode::Operator)?.to_string(),
                CumulantMode::Bimodule => kappa_eval(*n, Mode::Bimodule)?.to_string(),
                CumulantMode::Scalar => kappa_eval(*n, Mode::Scalar)?.to_string(),
                CumulantMode::Speicher => speicher_kappa(*n)?.to_string(),
            };
            let mode = value_name(mode);
            Ok(Output {
                params: json!({ "n": n, "mode": mode }),
                payload: json!({ "value": text }),
                text,
            })
        }
        Command::Classical { n } => {
            check_cap(*n, cap, "n")?;
            let ks = classical_cumulants(*n);
            let lines: Vec<String> = ks.iter().enumerate().map(|(i, k)| format!("k{} = {k}", i + 1)).collect();
            let values: Vec<Value> =
                ks.iter().enumerate().map(|(i, k)| json!({ "n": i + 1, "value": k.to_string() })).collect();
            Ok(Output { text: lines.join("\n"), params: json!({ "n": n }), payload: json!({ "cumulants": values }) })
        }
        Command::Partition { op, args } => {
            let parts: Vec<NoncrossingPartition> =
                args.iter().map(|a| a.parse()).collect::<Result<_, sct_core::Error>>()?;
            for p in &parts {
                check_cap(p.size(), cap, "partition size")?;
            }
            let params = json!({ "op": value_name(op), "args": args });
            match (op, parts.as_slice()) {
                (PartitionOp::Kreweras, [p]) => {
                    let k = p.kreweras();
                    Ok(Output { text: k.to_string(), params, payload: json!({ "complement": k.to_string() }) })
                }
                (PartitionOp::Moebius, [p]) => {
                    let mu = moebius(&NoncrossingPartition::bottom(p.size()), p)?;
                    Ok(Output { text: mu.to_string(), params, payload: json!({ "moebius": mu.to_string() }) })
                }
                (PartitionOp::Moebius, [s, p]) => {
                    let mu = moebius(s, p)?;
                    Ok(Output { text: mu.to_string(), params, payload: json!({ "moebius": mu.to_string() }) })
                }
                _ => Err(Failure::Usage("kreweras takes exactly one partition".into())),
            }
        }
        Command::Verify { suite, weight } => {
            check_cap(*weight, cap, "weight")?;
            let report = verify::run(*suite, *weight);
            let mut lines: Vec<String> = report
                .checks
                .iter()
                .map(|c| {
                    let status = if c.passed { "ok" } else { "FAILED" };
                    match &c.error {
                        Some(e) => format!("{}: {} ... {status} ({e})", c.suite, c.name),
                        None => format!("{}: {} ... {status}", c.suite, c.name),
                    }
                })
                .collect();
            lines.push(format!("passed {}, failed {}", report.passed(), report.failed()));
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "suite": c.suite.name(), "name": c.name, "passed": c.passed, "error": c.error }))
                .collect();
            let out = Output {
                text: lines.join("\n"),
                params: json!({ "suite": suite.name(), "weight": weight }),
                payload: json!({ "passed": report.passed(), "failed": report.failed(), "checks": checks }),
            };
            if report.ok() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Enumerate { .. } => "enumerate",
        Command::Series { .. } => "series",
        Command::Nsym { .. } => "nsym",
        Command::Cumulant { .. } => "cumulant",
        Command::Classical { .. } => "classical",
        Command::Partition { .. } => "partition",
        Command::Verify { .. } => "verify",
    }
}

fn emit(cli: &Cli, out: Output) {
    match cli.format {
        Format::Text => println!("{}", out.text),
        Format::Json => {
            let mut result = out.payload;
            result["text"] = Value::String(out.text);
            let doc = json!({
                "command": command_name(&cli.command),
                "params": out.params,
                "result": result,
                "version": env!("CARGO_PKG_VERSION"),
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialise"));
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&cli, out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            emit(&cli, out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
