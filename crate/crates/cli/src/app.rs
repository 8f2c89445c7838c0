//! Argument definitions and command dispatch.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coordring::arith::RatFunc;
use coordring::braid::{word_path, TransitionMap, DEFAULT_BFS_BUDGET};
use coordring::membership::{decide_o_g, decide_o_gmodu, decide_o_u, invert_chart};
use coordring::roots::{verify_section1, CartanDatum, CheckStatus, Weight, Word};
use coordring::sample::DEFAULT_SEED;
use coordring::sl::{chart_u, sl_datum, symbols, GroupMatrix};

use crate::config::Config;
use crate::error::CliError;
use crate::expr::{parse_expression, split_list, Universe};
use crate::report::Report;

/// Types covered by `verify-lemmas --all-small-types`.
pub const SMALL_TYPES: [&str; 10] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C3", "D4", "G2"];

#[derive(Debug, Parser)]
#[command(
    name = "coordring",
    version,
    about = "Birational charts and coordinate-ring membership for SL_n"
)]
pub struct Cli {
    /// Seed recorded in reports and used by randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Bipartition override, e.g. `i0=2` or `i0=1,3`.
    #[arg(long, global = true)]
    pub labeling: Option<String>,
    /// TOML file with defaults for group, labeling, seed and bfs_budget.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    U,
    GModU,
    G,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership of a rational function in a coordinate ring.
    Membership {
        #[arg(value_enum)]
        space: SpaceArg,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        expr: String,
    },
    /// Evaluate or invert unipotent charts.
    #[command(subcommand)]
    Chart(ChartCommand),
    /// Parameter change between the charts of two reduced words of w0.
    Transition {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Symbol family of the source parameters.
        #[arg(long)]
        family: Option<char>,
        #[arg(long)]
        bfs_budget: Option<usize>,
    },
    /// Weight families attached to a bipartite word.
    Weights {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
    },
    /// Run the combinatorial checks on one or all small root data.
    VerifyLemmas {
        #[arg(long = "type", required_unless_present = "all_small_types")]
        kind: Option<String>,
        #[arg(long)]
        all_small_types: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChartCommand {
    /// The unipotent matrix of a word at the given parameters.
    Eval(ChartEval),
    /// Parameters of a unipotent matrix on the chart of `jj^eps` (n <= 4).
    Invert {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        eps: u8,
        /// JSON file holding an array of rows of expression strings.
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct ChartEval {
    #[arg(long)]
    pub group: Option<String>,
    /// `jj0`, `jj1` or an explicit word such as `1,2,1`.
    #[arg(long, default_value = "jj0")]
    pub word: String,
    /// Parameter expressions; symbolic `a1, a2, ...` when omitted.
    #[arg(long, num_args = 1..)]
    pub params: Vec<String>,
}

/// A finished run: the report and the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

struct Settings {
    config: Config,
    seed: u64,
    labeling: Option<Vec<usize>>,
}

impl Settings {
    fn group(&self, arg: &Option<String>) -> Result<(String, usize), CliError> {
        let g = arg
            .clone()
            .or_else(|| self.config.group.clone())
            .ok_or_else(|| CliError::Usage("no group given: pass --group slN".into()))?;
        let n = parse_group(&g)?;
        Ok((format!("sl{n}"), n))
    }

    fn sl(&self, n: usize) -> Result<CartanDatum, CliError> {
        self.labeled(sl_datum(n)?)
    }

    fn labeled(&self, d: CartanDatum) -> Result<CartanDatum, CliError> {
        Ok(match &self.labeling {
            Some(i0) => d.with_labeling(i0)?,
            None => d,
        })
    }
}

/// `sl4`, `SL4` or `sl_4`.
pub fn parse_group(s: &str) -> Result<usize, CliError> {
    let lower = s.trim().to_ascii_lowercase();
    let digits = lower
        .strip_prefix("sl")
        .map(|r| r.trim_start_matches('_'))
        .ok_or_else(|| CliError::Usage(format!("unknown group {s:?}: expected slN")))?;
    match digits.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err(CliError::Usage(format!(
            "unknown group {s:?}: expected slN with N >= 2"
        ))),
    }
}

/// `i0=2` or `i0=1,3`: the nodes of the class `I_0`.
pub fn parse_labeling(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad labeling {s:?}: expected i0=NODES"));
    let list = s.trim().strip_prefix("i0=").ok_or_else(bad)?;
    list.split([',', '+', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| bad()))
        .collect()
}

fn resolve_word(d: &CartanDatum, s: &str) -> Result<Word, CliError> {
    let w = match s.trim() {
        "jj0" => d.distinguished_word(0),
        "jj1" => d.distinguished_word(1),
        other => other
            .parse::<Word>()
            .map_err(|_| CliError::Usage(format!("bad word {other:?}: expected jj0, jj1 or letters like 1,2,1")))?,
    };
    d.check_word(&w)?;
    Ok(w)
}

fn strings(fs: &[RatFunc]) -> Vec<String> {
    fs.iter().map(ToString::to_string).collect()
}

fn named(family: char, fs: &[RatFunc]) -> Value {
    Value::Array(
        fs.iter()
            .enumerate()
            .map(|(k, f)| json!({ "param": format!("{family}{}", k + 1), "value": f.to_string() }))
            .collect(),
    )
}

fn matrix_json(m: &GroupMatrix) -> Value {
    json!(m.rows().iter().map(|r| strings(r)).collect::<Vec<_>>())
}

fn weights(ws: &[Weight]) -> Vec<String> {
    ws.iter().map(ToString::to_string).collect()
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Result<Outcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv).map_err(|e| CliError::Usage(e.to_string()))?;
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .filter(|a| a != "--json")
        .collect::<Vec<_>>()
        .join(" ");
    run(&cli, &echo)
}

/// Runs a parsed command; `echo` is recorded as the report's command.
pub fn run(cli: &Cli, echo: &str) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let labeling = match cli.labeling.as_ref().or(config.labeling.as_ref()) {
        Some(s) => Some(parse_labeling(s)?),
        None => None,
    };
    let settings = Settings {
        seed: cli.seed.or(config.seed).unwrap_or(DEFAULT_SEED),
        labeling,
        config,
    };
    let mut outcome = dispatch(&cli.command, &settings, echo)?;
    outcome.report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(outcome)
}

fn dispatch(command: &Command, s: &Settings, echo: &str) -> Result<Outcome, CliError> {
    let seed = s.seed;
    let done = |report: Report| Outcome { report, exit_code: 0 };
    match command {
        Command::Membership { space, group, expr } => {
            let (label, n) = s.group(group)?;
            let d = s.sl(n)?;
            let phi = parse_expression(expr, &Universe::new(n))?;
            let verdict = match space {
                SpaceArg::U => decide_o_u(&phi, &d)?,
                SpaceArg::GModU => decide_o_gmodu(&phi, &d)?,
                SpaceArg::G => decide_o_g(&phi, &d)?,
            };
            let mut values = json!({ "expr": phi.to_string() });
            if let Some(c) = verdict.failing_chart {
                values["failing_chart"] = json!(c.to_string());
            }
            let report = Report::new(echo, label, seed)
                .with_verdict(&verdict)
                .with_values(values);
            Ok(Outcome {
                report,
                exit_code: if verdict.member { 0 } else { 1 },
            })
        }
        Command::Chart(ChartCommand::Eval(args)) => {
            let (label, n) = s.group(&args.group)?;
            let d = s.sl(n)?;
            let word = resolve_word(&d, &args.word)?;
            let params = if args.params.is_empty() {
                symbols('a', word.len())
            } else {
                let u = Universe::new(n);
                args.params
                    .iter()
                    .flat_map(|p| split_list(p))
                    .map(|p| parse_expression(&p, &u))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let m = chart_u(&word, &params, n)?;
            let values = json!({
                "word": word.to_string(),
                "params": strings(&params),
                "matrix": matrix_json(&m),
            });
            Ok(done(Report::new(echo, label, seed).with_values(values)))
        }
        Command::Chart(ChartCommand::Invert { group, eps, matrix }) => {
            let (label, n) = s.group(group)?;
            let d = s.sl(n)?;
            let text =
                std::fs::read_to_string(matrix).map_err(|e| CliError::Io(format!("{}: {e}", matrix.display())))?;
            let rows: Vec<Vec<String>> = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("matrix file must be a JSON array of rows of strings: {e}")))?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(CliError::Usage(format!("matrix must be {n}x{n}")));
            }
            let u = Universe::new(n);
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|e| parse_expression(e, &u)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let m = GroupMatrix::from_rows(rows)?;
            let params = invert_chart(&m, *eps as usize, &d)?;
            let values = json!({
                "word": d.distinguished_word(*eps as usize).to_string(),
                "params": named('a', &params),
            });
            Ok(done(Report::new(echo, label, seed).with_values(values)))
        }
        Command::Transition {
            group,
            from,
            to,
            family,
            bfs_budget,
        } => {
            let (label, n) = s.group(group)?;
            let d = s.sl(n)?;
            let (w1, w2) = (resolve_word(&d, from)?, resolve_word(&d, to)?);
            let source = family.unwrap_or(if from.trim() == "jj1" { 'b' } else { 'a' });
            let target = if source == 'a' { 'b' } else { 'a' };
            let budget = bfs_budget.or(s.config.bfs_budget).unwrap_or(DEFAULT_BFS_BUDGET);
            let path = word_path(&w1, &w2, &d, budget)?;
            let map = TransitionMap::along(&d, &w1, &path, source)?;
            let values = json!({
                "from": w1.to_string(),
                "to": w2.to_string(),
                "moves": path.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "formulas": named(target, &map.formulas),
            });
            Ok(done(Report::new(echo, label, seed).with_values(values)))
        }
        Command::Weights { kind, eps } => {
            let d = s.labeled(CartanDatum::parse(kind)?)?;
            let eps = *eps as usize;
            let cw = d.chart_weights(eps);
            let ws = d.weight_sets(eps);
            let values = json!({
                "word": cw.word.to_string(),
                "coxeter_number": d.coxeter_number(),
                "blocks": cw.blocks,
                "gamma": weights(&cw.gamma),
                "gamma_tilde": weights(&cw.gamma_tilde),
                "y_prime": weights(&ws.y_prime),
                "y_double_prime": weights(&ws.y_double_prime),
                "y_eps": weights(&ws.y_eps),
            });
            Ok(done(Report::new(echo, d.label(), seed).with_values(values)))
        }
        Command::VerifyLemmas { kind, all_small_types } => {
            let labels: Vec<String> = if *all_small_types {
                if s.labeling.is_some() {
                    return Err(CliError::Usage("--labeling needs a single --type".into()));
                }
                SMALL_TYPES.iter().map(|t| t.to_string()).collect()
            } else {
                vec![kind.clone().expect("clap requires --type")]
            };
            let data = labels
                .iter()
                .map(|t| s.labeled(CartanDatum::parse(t)?))
                .collect::<Result<Vec<_>, _>>()?;
            let reports = std::thread::scope(|scope| {
                let handles: Vec<_> = data.iter().map(|d| scope.spawn(move || verify_section1(d))).collect();
                handles
                    .into_iter()
                    .map(|h| {
                        h.join()
                            .map_err(|_| CliError::Internal("verification thread panicked".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let passed = reports.iter().all(|r| r.all_passed());
            let results: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let checks: Vec<Value> = r
                        .checks
                        .iter()
                        .map(|c| {
                            let (status, detail) = match &c.status {
                                CheckStatus::Passed => ("passed", None),
                                CheckStatus::Failed(w) => ("failed", Some(w.clone())),
                                CheckStatus::Skipped(w) => ("skipped", Some(w.clone())),
                            };
                            match detail {
                                Some(d) => json!({ "name": c.name, "status": status, "detail": d }),
                                None => json!({ "name": c.name, "status": status }),
                            }
                        })
                        .collect();
                    json!({ "type": r.label, "passed": r.all_passed(), "checks": checks })
                })
                .collect();
            let group = if *all_small_types {
                "small types".to_string()
            } else {
                labels[0].clone()
            };
            let report = Report::new(echo, group, seed).with_values(json!({ "results": results }));
            Ok(Outcome {
                report,
                exit_code: if passed { 0 } else { 1 },
            })
        }
    }
}
