//! Command-line front end for `aguiar-core`.
//!
//! [`run`] holds the whole program so tests can drive it without spawning a
//! process. Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use aguiar_core::cache::{load_cache, save_cache, CACHE_FILE};
use aguiar_core::characters::{cached_tables, character_value, set_max_degree, DEFAULT_MAX_DEGREE};
use aguiar_core::heisenberg::{
    aguiar_formula, aguiar_induction, heisenberg_irreducible, heisenberg_level, AguiarQuery,
};
use aguiar_core::kronecker::kronecker_coefficient;
use aguiar_core::lr::lr_coefficient;
use aguiar_core::partitions::{parse_partition, partitions_of};
use aguiar_core::stability::{
    check_stable_hypothesis, scan_sequence, BoundContext, BoundKind, Triple,
};
use aguiar_core::{CycleType, Partition};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const CACHE_DIR_ENV: &str = "AGUIAR_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "aguiar",
    version,
    about = "Heisenberg products and Aguiar coefficients of symmetric-group representations"
)]
struct Cli {
    /// Print one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Directory holding the character table cache.
    #[arg(long, global = true, env = CACHE_DIR_ENV, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Largest degree for which full character tables are built and memoized.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE, value_name = "N")]
    max_degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of n in reverse lexicographic order.
    Partitions { n: usize },
    /// Character value chi^lambda(rho).
    Char {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        rho: Partition,
    },
    /// Littlewood-Richardson coefficient c_{lambda,mu}^nu.
    Lr {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// Kronecker coefficient g_{lambda,mu,nu}.
    Kron {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
    },
    /// Aguiar coefficient a_{lambda,mu}^nu.
    Aguiar {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Decomposition of M_lambda # M_mu, all levels or one.
    Heisenberg {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_name = "I")]
        level: Option<usize>,
    },
    /// Check a_{d alpha, d beta}^{d gamma} = 1 for d = 1..=dmax.
    StableCheck {
        #[arg(value_parser = partition_arg)]
        alpha: Partition,
        #[arg(value_parser = partition_arg)]
        beta: Partition,
        #[arg(value_parser = partition_arg)]
        gamma: Partition,
        #[arg(long)]
        dmax: usize,
    },
    /// Scan d -> a_{lambda+d alpha, mu+d beta}^{nu+d gamma} for d = 0..=dmax.
    Scan {
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
        /// Direction as "[a],[b],[c]".
        #[arg(long, value_parser = triple_arg)]
        triple: Triple,
        #[arg(long)]
        dmax: usize,
    },
    /// Evaluate a stabilization bound.
    Bound {
        #[arg(value_parser = bound_arg)]
        name: BoundKind,
        #[arg(value_parser = partition_arg)]
        lambda: Partition,
        #[arg(value_parser = partition_arg)]
        mu: Partition,
        #[arg(value_parser = partition_arg)]
        nu: Partition,
        /// "auto" or "n1,n2".
        #[arg(long, default_value = "auto", value_parser = dims_arg)]
        dims: Dims,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Induction,
    Both,
}

#[derive(Clone, Copy, Debug)]
enum Dims {
    Auto,
    Fixed(BoundContext),
}

fn partition_arg(text: &str) -> Result<Partition, String> {
    parse_partition(text).map_err(|e| e.to_string())
}

fn bound_arg(text: &str) -> Result<BoundKind, String> {
    text.parse().map_err(|e: aguiar_core::Error| e.to_string())
}

fn dims_arg(text: &str) -> Result<Dims, String> {
    if text == "auto" {
        return Ok(Dims::Auto);
    }
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"auto\" or \"n1,n2\", got {text:?}"))?;
    let n1 = a.trim().parse::<usize>().map_err(|e| format!("n1: {e}"))?;
    let n2 = b.trim().parse::<usize>().map_err(|e| format!("n2: {e}"))?;
    BoundContext::new(n1, n2)
        .map(Dims::Fixed)
        .map_err(|e| e.to_string())
}

/// Splits "[a],[b],[c]" at the commas outside brackets.
fn triple_arg(text: &str) -> Result<Triple, String> {
    let mut pieces = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (idx, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.checked_sub(1).ok_or("unbalanced brackets")?,
            ',' if depth == 0 => {
                pieces.push(&text[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    let [a, b, c] = pieces[..] else {
        return Err(format!(
            "expected three partitions \"[a],[b],[c]\", got {text:?}"
        ));
    };
    Ok(Triple::new(
        partition_arg(a)?,
        partition_arg(b)?,
        partition_arg(c)?,
    ))
}

const SUBCOMMANDS: &str =
    "partitions, char, lr, kron, aguiar, heisenberg, stable-check, scan, bound";

struct Output {
    query: Value,
    result: Value,
    method: &'static str,
    text: String,
    /// Exit code for a computed but failing outcome, such as a MISMATCH.
    status: i32,
}

impl Output {
    fn scalar(
        query: Value,
        method: &'static str,
        value: impl ToString + Into<Value> + Copy,
    ) -> Self {
        Output {
            query,
            result: value.into(),
            method,
            text: format!("{}\n", value.to_string()),
            status: 0,
        }
    }
}

fn module_json(levels: &[(usize, Vec<(String, u64)>)]) -> Value {
    Value::Array(
        levels
            .iter()
            .map(|(n, terms)| {
                let terms: Vec<Value> = terms
                    .iter()
                    .map(|(p, m)| json!({"partition": p, "multiplicity": m}))
                    .collect();
                json!({"level": n, "terms": terms})
            })
            .collect(),
    )
}

fn execute(command: &Command) -> aguiar_core::Result<Output> {
    let s = |p: &Partition| p.to_string();
    Ok(match command {
        Command::Partitions { n } => {
            let list: Vec<String> = partitions_of(*n).iter().map(s).collect();
            let text = list.iter().map(|p| format!("{p}\n")).collect();
            Output {
                query: json!({"command": "partitions", "n": n}),
                result: json!(list),
                method: "enumeration",
                text,
                status: 0,
            }
        }
        Command::Char { lambda, rho } => {
            let v = character_value(lambda, &CycleType::new(rho.clone()))?;
            Output::scalar(
                json!({"command": "char", "lambda": s(lambda), "rho": s(rho)}),
                "murnaghan-nakayama",
                v,
            )
        }
        Command::Lr { lambda, mu, nu } => {
            let v = lr_coefficient(lambda, mu, nu);
            let query = json!({"command": "lr", "lambda": s(lambda), "mu": s(mu), "nu": s(nu)});
            Output::scalar(query, "lr-tableaux", v)
        }
        Command::Kron { lambda, mu, nu } => {
            let v = kronecker_coefficient(lambda, mu, nu)?;
            let query = json!({"command": "kron", "lambda": s(lambda), "mu": s(mu), "nu": s(nu)});
            Output::scalar(query, "character-sum", v)
        }
        Command::Aguiar {
            lambda,
            mu,
            nu,
            method,
        } => {
            let q = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
            let query = json!({"command": "aguiar", "lambda": s(lambda), "mu": s(mu), "nu": s(nu)});
            match method {
                Method::Formula => Output::scalar(query, "formula", aguiar_formula(&q)?),
                Method::Induction => Output::scalar(query, "induction", aguiar_induction(&q)?),
                Method::Both => {
                    let f = aguiar_formula(&q)?;
                    let i = aguiar_induction(&q)?;
                    let verdict = if f == i { "MATCH" } else { "MISMATCH" };
                    Output {
                        query,
                        result: json!({"formula": f, "induction": i, "verdict": verdict}),
                        method: "both",
                        text: format!("formula: {f}\ninduction: {i}\n{verdict}\n"),
                        status: if f == i { 0 } else { 1 },
                    }
                }
            }
        }
        Command::Heisenberg { lambda, mu, level } => {
            let levels: Vec<(usize, Vec<(String, u64)>)> = match level {
                Some(i) => {
                    let terms = heisenberg_level(lambda, mu, *i)?;
                    vec![(*i, terms.iter().rev().map(|(p, &m)| (s(p), m)).collect())]
                }
                None => heisenberg_irreducible(lambda, mu)?
                    .levels()
                    .map(|(n, terms)| (n, terms.iter().rev().map(|(p, &m)| (s(p), m)).collect()))
                    .collect(),
            };
            let mut text = String::new();
            for (n, terms) in &levels {
                text.push_str(&format!("{n}:"));
                for (p, m) in terms {
                    text.push_str(&format!(" {p}:{m}"));
                }
                text.push('\n');
            }
            Output {
                query: json!({"command": "heisenberg", "lambda": s(lambda), "mu": s(mu), "level": level}),
                result: module_json(&levels),
                method: "formula",
                text,
                status: 0,
            }
        }
        Command::StableCheck {
            alpha,
            beta,
            gamma,
            dmax,
        } => {
            let triple = Triple::new(alpha.clone(), beta.clone(), gamma.clone());
            let check = check_stable_hypothesis(&triple, *dmax)?;
            let mut text: String = check
                .values
                .iter()
                .enumerate()
                .map(|(idx, v)| format!("d={}: {v}\n", idx + 1))
                .collect();
            match check.witness {
                None => text.push_str(&format!("HOLDS for d=1..{dmax}\n")),
                Some((d, v)) => text.push_str(&format!("FAILS at d={d} (value {v})\n")),
            }
            Output {
                query: json!({"command": "stable-check", "alpha": s(alpha), "beta": s(beta), "gamma": s(gamma), "dmax": dmax}),
                result: json!({
                    "holds": check.holds,
                    "values": check.values,
                    "witness": check.witness.map(|(d, v)| json!({"d": d, "value": v})),
                }),
                method: "formula",
                text,
                status: 0,
            }
        }
        Command::Scan {
            lambda,
            mu,
            nu,
            triple,
            dmax,
        } => {
            let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
            let report = scan_sequence(&base, triple, *dmax)?;
            let mut text: String = report
                .values
                .iter()
                .enumerate()
                .map(|(d, v)| format!("d={d}: {v}\n"))
                .collect();
            let label = if report.inconclusive {
                " (inconclusive)"
            } else {
                ""
            };
            text.push_str(&format!("onset: {}{label}\n", report.onset));
            text.push_str(&format!("context: {}\n", report.context));
            let mut predictions = serde_json::Map::new();
            for (kind, bound) in &report.predictions {
                let sound = report.constant_from(*bound);
                let note = if sound { "" } else { " EXCEEDED BY ONSET" };
                text.push_str(&format!("bound {kind}: {bound}{note}\n"));
                predictions.insert(kind.to_string(), json!(bound));
            }
            Output {
                query: json!({
                    "command": "scan", "lambda": s(lambda), "mu": s(mu), "nu": s(nu),
                    "triple": [s(&triple.alpha), s(&triple.beta), s(&triple.gamma)], "dmax": dmax,
                }),
                result: json!({
                    "values": report.values,
                    "onset": report.onset,
                    "inconclusive": report.inconclusive,
                    "context": [report.context.n1(), report.context.n2()],
                    "predictions": predictions,
                }),
                method: "formula",
                text,
                status: 0,
            }
        }
        Command::Bound {
            name,
            lambda,
            mu,
            nu,
            dims,
        } => {
            let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
            let ctx = match dims {
                Dims::Auto => BoundContext::minimal(&base, &name.triple()),
                Dims::Fixed(ctx) => *ctx,
            };
            let v = name.evaluate(&base, Some(ctx))?;
            let dims = name.uses_context().then(|| json!([ctx.n1(), ctx.n2()]));
            let query = json!({
                "command": "bound", "name": name.name(), "lambda": s(lambda), "mu": s(mu), "nu": s(nu), "dims": dims,
            });
            Output::scalar(query, name.name(), v)
        }
    })
}

fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

/// Runs the program on `argv` (without the program name).
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once("aguiar".into()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            let _ = writeln!(err, "valid subcommands: {SUBCOMMANDS}");
            return 2;
        }
    };
    set_max_degree(cli.max_degree);

    if let Some(dir) = &cli.cache_dir {
        let path = cache_path(dir);
        if path.exists() {
            if let Err(e) = load_cache(&path) {
                let _ = writeln!(err, "error: cannot load {}: {e}", path.display());
                return 1;
            }
        }
    }

    let started = Instant::now();
    let output = match execute(&cli.command) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let elapsed = started.elapsed().as_secs_f64() * 1000.0;

    if let Some(dir) = &cli.cache_dir {
        let saved = std::fs::create_dir_all(dir)
            .map_err(aguiar_core::Error::from)
            .and_then(|()| save_cache(&cache_path(dir), &cached_tables()));
        if let Err(e) = saved {
            let _ = writeln!(err, "error: cannot write cache in {}: {e}", dir.display());
            return 1;
        }
    }

    let written = if cli.json {
        let object = json!({
            "query": output.query,
            "result": output.result,
            "method": output.method,
            "timings_ms": elapsed,
        });
        writeln!(out, "{object}")
    } else {
        write!(out, "{}", output.text)
    };
    if written.is_err() {
        return 1;
    }
    output.status
}
