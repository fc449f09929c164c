use std::process::ExitCode;

use anyhow::{bail, Context};
use charnum_core::constraints::enumerate_admissible;
use charnum_core::dsl::{evaluate, Env, Scenario};
use charnum_core::obstruction::{check_prop_bound, BoundCase};
use charnum_core::verify::{suite_output, Suite, SuiteParams, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "charnum",
    version,
    about = "Mod-2 characteristic-number calculator and verifier"
)]
struct Cli {
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
    /// Run a verification suite.
    Verify {
        /// all, lemma-u0, lemma-ugt1, prop-iii, prop-iv or theorem
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_parser = parse_range)]
        u: Option<Values>,
        #[arg(long, value_parser = parse_range)]
        v: Option<Values>,
        #[arg(long, value_parser = parse_range)]
        i: Option<Values>,
        #[arg(long, value_parser = parse_range)]
        k: Option<Values>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an expression, e.g. "c^2*d^7 [P(2,7)]".
    Eval {
        #[arg(short = 'e', long = "expr")]
        expr: String,
        /// SPACE[;BUNDLE], e.g. "P(2,7);stong" or "RP(2);rp(2,0,10)"
        #[arg(long)]
        scenario: Option<String>,
    },
    /// Tabulate the bound obstruction over every k of the case's residue.
    Scan {
        #[arg(long = "case", value_parser = parse_case)]
        case: BoundCase,
        #[arg(long, value_parser = parse_range)]
        u: Values,
        #[arg(long, value_parser = parse_range)]
        v: Values,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List admissible canonical tuples.
    Enumerate {
        #[arg(long)]
        h: u64,
        #[arg(long = "i-max")]
        i_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: charnum_core::Error| e.to_string())
}

fn parse_case(s: &str) -> Result<BoundCase, String> {
    s.parse().map_err(|e: charnum_core::Error| e.to_string())
}

/// Sorted, deduplicated values of a RANGE argument.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Values(Vec<u32>);

/// `3`, `2..5` (inclusive) or a comma list of either, e.g. `1,4..6`.
fn parse_range(s: &str) -> Result<Values, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{t}` is not a non-negative integer"))
        };
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(Values(out))
}

fn compact(value: &serde_json::Value) -> String {
    value.to_string()
}

fn print_report(r: &VerificationReport) {
    let params: Vec<String> = r
        .parameters
        .iter()
        .map(|(k, v)| format!("{k}={}", compact(v)))
        .collect();
    println!(
        "{} {} [{}]: {} | lhs {} rhs {}",
        if r.pass { "PASS" } else { "FAIL" },
        r.check_id,
        params.join(" "),
        r.statement,
        compact(&r.lhs),
        compact(&r.rhs),
    );
}

fn verify(suite: Suite, params: SuiteParams, format: Format) -> anyhow::Result<bool> {
    let out = suite_output(suite, &params)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out)?),
        Format::Text => {
            for r in &out.reports {
                print_report(r);
            }
            let passed = out.reports.iter().filter(|r| r.pass).count();
            println!(
                "suite {}: {passed}/{} checks passed",
                out.suite,
                out.reports.len()
            );
        }
    }
    Ok(out.all_pass)
}

fn scan(case: BoundCase, us: &[u32], vs: &[u32], format: Format) -> anyhow::Result<bool> {
    let mut ok = true;
    let mut rows = Vec::new();
    for &u in us {
        if u < 2 {
            bail!("scan needs u >= 2, got {u}");
        }
        for &v in vs {
            let first = if case.residue() == 0 { 4 } else { 2 };
            for k in (first..=(1 << (u + 1)) + 8).step_by(4) {
                let c = check_prop_bound(case, u, v, k)
                    .with_context(|| format!("case {case}, u={u}, v={v}, k={k}"))?;
                ok &= !c.applicable || c.obstruction;
                rows.push((u, v, k, c));
            }
        }
    }
    match format {
        Format::Json => {
            let json: Vec<_> = rows
                .iter()
                .map(|(u, v, k, c)| {
                    serde_json::json!({
                        "u": u, "v": v, "k": k,
                        "applicable": c.applicable,
                        "obstruction": u8::from(c.obstruction),
                        "per_component": c.per_component.iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
                        "displayed_total": c.displayed.as_ref().map(|d| u8::from(d.total)),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&json)?);
        }
        Format::Text => {
            println!("case {case}");
            println!(
                "{:>3} {:>3} {:>5}  {:<12} {:>11}  per-component",
                "u", "v", "k", "status", "obstruction"
            );
            for (u, v, k, c) in &rows {
                if !c.applicable {
                    println!("{u:>3} {v:>3} {k:>5}  {:<12} {:>11}", "k <= bound", "-");
                    continue;
                }
                let comps: Vec<String> = c
                    .per_component
                    .iter()
                    .map(|&b| u8::from(b).to_string())
                    .collect();
                let mut line = format!(
                    "{u:>3} {v:>3} {k:>5}  {:<12} {:>11}  [{}]",
                    "applicable",
                    u8::from(c.obstruction),
                    comps.join(", ")
                );
                if let Some(d) = &c.displayed {
                    line.push_str(&format!("  displayed {}", u8::from(d.total)));
                }
                println!("{line}");
            }
        }
    }
    Ok(ok)
}

fn enumerate(h: u64, i_max: u64, eps: u8, format: Format) -> anyhow::Result<bool> {
    let reports = enumerate_admissible(h, i_max, eps)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Text => {
            println!(
                "{:>5} {:>5} {:>3} {:>2} {:>3} {:>3}  case",
                "i", "k", "a", "u", "v", "A"
            );
            for r in &reports {
                let case = r
                    .nonstandard_case
                    .map_or_else(|| "standard".to_string(), |c| c.to_string());
                println!(
                    "{:>5} {:>5} {:>3} {:>2} {:>3} {:>3}  {case}",
                    r.tuple.i, r.tuple.k, r.tuple.a, r.u, r.v, r.exponent_a
                );
            }
            println!("{} admissible tuple(s)", reports.len());
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            u,
            v,
            i,
            k,
            format,
        } => {
            let values = |r: Option<Values>| r.map(|Values(v)| v);
            let params = SuiteParams {
                u: values(u),
                v: values(v),
                i: values(i),
                k: values(k),
            };
            verify(suite, params, format)
        }
        Command::Eval { expr, scenario } => {
            let env = match scenario {
                Some(spec) => Env::with_scenario(
                    Scenario::parse(&spec).with_context(|| format!("scenario `{spec}`"))?,
                ),
                None => Env::default(),
            };
            println!("{}", evaluate(&expr, &env)?);
            Ok(true)
        }
        Command::Scan { case, u, v, format } => scan(case, &u.0, &v.0, format),
        Command::Enumerate {
            h,
            i_max,
            eps,
            format,
        } => enumerate(h, i_max, eps, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), Values(vec![2, 3, 4]));
        assert_eq!(parse_range("5,1..2,2").unwrap(), Values(vec![1, 2, 5]));
        assert_eq!(parse_range("7").unwrap(), Values(vec![7]));
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("").is_err());
    }
}
