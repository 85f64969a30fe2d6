//! Command-line front end: graph input parsing, command dispatch, and
//! report rendering.
//!
//! Exit codes: 0 success / all claims pass; 1 usage or input error;
//! 2 at least one MISMATCH from `check`; 3 cap or time-limit refusal.

pub mod parse;
pub mod render;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use sdstab_core::claims::{self, CheckConfig};
use sdstab_core::enumeration::{self, labeled_graph_count};
use sdstab_core::graph::MAX_SOLVER_ORDER;
use sdstab_core::stability::{self, InnerSolver, StabilityError, StabilityOptions, StabilityResult};
use sdstab_core::strongdom;
use sdstab_core::{build, Graph};

use render::{
    check_csv, check_exit_code, check_text, csv_field, enumerate_csv, enumerate_text, families_csv,
    families_text, family_help, gamma_csv, gamma_text, stability_csv, stability_text, to_json,
    DistEntry, EnumerateOutput, Envelope, GammaOutput, GlobalEcho, OutputFormat, StabilityOutput,
};

#[derive(Parser, Debug)]
#[command(
    name = "sdstab",
    version,
    about = "Exact strong domination numbers, vertex-removal stability, and claim conformance checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Include witnesses in text output (JSON always carries them).
    #[arg(long, global = true)]
    pub witness: bool,

    /// Force the brute-force oracle for every inner gamma_st call.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, env = "SDSTAB_JOBS")]
    pub jobs: Option<usize>,

    /// Wall-clock limit in seconds; exceeded limits refuse with exit 3.
    #[arg(long = "time-limit", global = true)]
    pub time_limit: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute gamma_st of a graph (DSL string or --file edge list).
    Gamma {
        /// Family DSL expression, e.g. "C(9)" or "join(K(1),C(5))".
        graph: Option<String>,
        /// Edge-list file ("n m" header then "u v" lines; '#' comments).
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
    /// Compute the vertex-removal stability of gamma_st.
    Stability {
        graph: Option<String>,
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Order cap for the exhaustive removal search (default 14).
        #[arg(long, default_value_t = stability::STABILITY_CAP)]
        cap: usize,
    },
    /// Check one claim or all of them against computed ground truth.
    Check {
        /// Claim id (see --list) or "all".
        target: Option<String>,
        /// Enumeration sweep cap (2..=7).
        #[arg(long)]
        max_n: Option<usize>,
        /// Range overrides, e.g. "cycles-st=4..12,bipartite-max=5".
        #[arg(long)]
        ranges: Option<String>,
        /// List registered claim ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Distribution of an invariant over all labeled graphs of an order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One of: gamma_st, gamma, st, kappa, edges.
        #[arg(long)]
        invariant: String,
    },
    /// Family DSL reference.
    Families {
        #[arg(long)]
        list: bool,
    },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses argv and dispatches. Clap usage errors map to exit 1;
/// help/version requests exit 0.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::fail(1, e.to_string()),
            }
        }
    }
}

fn global_echo(cli: &Cli) -> GlobalEcho {
    GlobalEcho {
        format: cli.format.name(),
        witness: cli.witness,
        oracle: cli.oracle,
        jobs: cli.jobs,
        time_limit_secs: cli.time_limit,
    }
}

/// Runs `f` inside a dedicated rayon pool when --jobs is set.
fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) if j >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("worker pool")
            .install(f),
        _ => f(),
    }
}

/// Runs `f` on a worker thread and refuses with exit 3 when it misses the
/// deadline. Used by the single-graph commands; `check` handles its
/// deadline internally so it can emit a partial report.
fn with_time_limit(limit: Option<Duration>, f: impl FnOnce() -> Outcome + Send + 'static) -> Outcome {
    let Some(d) = limit else {
        return f();
    };
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(f());
    });
    match rx.recv_timeout(d) {
        Ok(outcome) => outcome,
        Err(_) => Outcome::fail(3, "time limit exceeded\n".to_string()),
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let limit = cli.time_limit.map(Duration::from_secs_f64);
    match cli.command {
        Command::Gamma { .. } | Command::Stability { .. } | Command::Enumerate { .. } => {
            with_time_limit(limit, move || dispatch_inner(cli))
        }
        _ => dispatch_inner(cli),
    }
}

fn dispatch_inner(cli: Cli) -> Outcome {
    let echo = global_echo(&cli);
    let jobs = cli.jobs;
    match &cli.command {
        Command::Gamma { graph, file } => {
            let (input, g) = match load_graph(graph.as_deref(), file.as_deref()) {
                Ok(x) => x,
                Err(o) => return o,
            };
            if g.order() > MAX_SOLVER_ORDER {
                return Outcome::fail(
                    3,
                    format!(
                        "order {} exceeds the exact-solver limit {MAX_SOLVER_ORDER}\n",
                        g.order()
                    ),
                );
            }
            if cli.oracle && g.order() > strongdom::BRUTE_FORCE_CAP {
                return Outcome::fail(
                    3,
                    format!(
                        "order {} exceeds the brute-force cap {} required by --oracle\n",
                        g.order(),
                        strongdom::BRUTE_FORCE_CAP
                    ),
                );
            }
            let started = Instant::now();
            let res = in_pool(jobs, || {
                if cli.oracle {
                    strongdom::gamma_st_bruteforce(&g).expect("cap checked above")
                } else {
                    strongdom::gamma_st(&g)
                }
            });
            let out = GammaOutput {
                order: g.order(),
                gamma_st: res.value,
                witness: g.to_origin(&res.witness),
            };
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            Outcome::ok(match cli.format {
                OutputFormat::Text => gamma_text(&input, &out, cli.witness),
                OutputFormat::Csv => gamma_csv(&input, &out),
                OutputFormat::Json => to_json(&Envelope {
                    command: "gamma",
                    input: &input,
                    result: &out,
                    config: &echo,
                    elapsed_ms: Some(elapsed),
                }),
            })
        }
        Command::Stability { graph, file, cap } => {
            let (input, g) = match load_graph(graph.as_deref(), file.as_deref()) {
                Ok(x) => x,
                Err(o) => return o,
            };
            let opts = StabilityOptions {
                cap: *cap,
                solver: if cli.oracle {
                    InnerSolver::BruteForce
                } else {
                    InnerSolver::Search
                },
            };
            if g.order() > MAX_SOLVER_ORDER {
                return Outcome::fail(
                    3,
                    format!(
                        "order {} exceeds the exact-solver limit {MAX_SOLVER_ORDER}\n",
                        g.order()
                    ),
                );
            }
            let started = Instant::now();
            let result = in_pool(jobs, || stability::stability_with(&g, &opts));
            let st = match result {
                Ok(st) => st,
                Err(e @ StabilityError::OrderCapExceeded { .. })
                | Err(e @ StabilityError::Solver(_)) => return Outcome::fail(3, format!("{e}\n")),
                Err(e) => return Outcome::fail(1, format!("{e}\n")),
            };
            let gamma_before = strongdom::gamma_st(&g).value;
            let out = match &st {
                StabilityResult::Finite {
                    k,
                    removal,
                    gamma_before,
                    gamma_after,
                    critical,
                } => StabilityOutput {
                    order: g.order(),
                    gamma_st: *gamma_before,
                    outcome: "finite",
                    k: Some(*k),
                    conventional_value: None,
                    witness: g.to_origin(removal),
                    critical: *critical,
                    gamma_after: Some(*gamma_after),
                },
                StabilityResult::Unbounded { conventional_value } => StabilityOutput {
                    order: g.order(),
                    gamma_st: gamma_before,
                    outcome: "unbounded",
                    k: None,
                    conventional_value: Some(*conventional_value),
                    witness: Vec::new(),
                    critical: false,
                    gamma_after: None,
                },
            };
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            Outcome::ok(match cli.format {
                OutputFormat::Text => stability_text(&input, &out, cli.witness),
                OutputFormat::Csv => stability_csv(&input, &out),
                OutputFormat::Json => to_json(&Envelope {
                    command: "stability",
                    input: &input,
                    result: &out,
                    config: &echo,
                    elapsed_ms: Some(elapsed),
                }),
            })
        }
        Command::Check {
            target,
            max_n,
            ranges,
            list,
        } => {
            if *list {
                let infos = claims::list_claims();
                let text = match cli.format {
                    OutputFormat::Json => {
                        let mut s =
                            serde_json::to_string_pretty(&infos).expect("serializable list");
                        s.push('\n');
                        s
                    }
                    OutputFormat::Csv => {
                        let mut s = String::from("claim_id,description\n");
                        for i in &infos {
                            s.push_str(&format!("{},{}\n", i.id, csv_field(i.description)));
                        }
                        s
                    }
                    OutputFormat::Text => {
                        let mut s = String::new();
                        for i in &infos {
                            s.push_str(&format!("{:<34} {}\n", i.id, i.description));
                        }
                        s
                    }
                };
                return Outcome::ok(text);
            }
            let Some(target) = target else {
                return Outcome::fail(1, "check requires a claim id or \"all\"\n".to_string());
            };
            let mut cfg = CheckConfig {
                use_oracle: cli.oracle,
                jobs,
                time_limit: cli.time_limit.map(Duration::from_secs_f64),
                ..CheckConfig::default()
            };
            if let Some(k) = max_n {
                if !(2..=enumeration::ENUMERATION_MAX_ORDER).contains(k) {
                    return Outcome::fail(
                        3,
                        format!(
                            "--max-n {k} outside the supported range 2..={}\n",
                            enumeration::ENUMERATION_MAX_ORDER
                        ),
                    );
                }
                cfg.max_n = *k;
            }
            if let Some(spec) = ranges {
                if let Err(msg) = apply_ranges(&mut cfg, spec) {
                    return Outcome::fail(1, format!("{msg}\n"));
                }
            }
            let input = target.clone();
            let report = if target == "all" {
                in_pool(jobs, || claims::run_suite(&cfg))
            } else {
                match in_pool(jobs, || claims::check_claim(&input, &cfg)) {
                    Ok(verdict) => single_claim_report(verdict, &cfg),
                    Err(e) => return Outcome::fail(1, format!("{e}\n")),
                }
            };
            let body = match cli.format {
                OutputFormat::Text => check_text(&report),
                OutputFormat::Csv => check_csv(&report),
                OutputFormat::Json => to_json(&Envelope {
                    command: "check",
                    input: &input,
                    result: &report,
                    config: &echo,
                    elapsed_ms: None,
                }),
            };
            let code = check_exit_code(&report);
            let mut outcome = Outcome::ok(body);
            outcome.code = code;
            if report.timed_out {
                outcome.stderr = "time limit exceeded; report is partial\n".to_string();
            }
            outcome
        }
        Command::Enumerate { n, invariant } => {
            if !(1..=enumeration::ENUMERATION_MAX_ORDER).contains(n) {
                return Outcome::fail(
                    3,
                    format!(
                        "--n {n} outside the supported range 1..={}\n",
                        enumeration::ENUMERATION_MAX_ORDER
                    ),
                );
            }
            let inv = invariant.clone();
            if !["gamma_st", "gamma", "st", "kappa", "edges"].contains(&inv.as_str()) {
                return Outcome::fail(
                    1,
                    format!("unknown invariant {inv:?}; use gamma_st, gamma, st, kappa, or edges\n"),
                );
            }
            let started = Instant::now();
            let out = in_pool(jobs, || enumerate_distribution(*n, &inv, cli.oracle));
            let elapsed = started.elapsed().as_secs_f64() * 1e3;
            Outcome::ok(match cli.format {
                OutputFormat::Text => enumerate_text(&out),
                OutputFormat::Csv => enumerate_csv(&out),
                OutputFormat::Json => to_json(&Envelope {
                    command: "enumerate",
                    input: &format!("n={n} invariant={inv}"),
                    result: &out,
                    config: &echo,
                    elapsed_ms: Some(elapsed),
                }),
            })
        }
        Command::Families { .. } => {
            let help = family_help();
            Outcome::ok(match cli.format {
                OutputFormat::Text => families_text(&help),
                OutputFormat::Csv => families_csv(&help),
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&help).expect("serializable help");
                    s.push('\n');
                    s
                }
            })
        }
    }
}

fn single_claim_report(
    verdict: claims::ClaimVerdict,
    cfg: &CheckConfig,
) -> claims::ClaimReport {
    use claims::{ClaimReport, ClaimStatus, ClaimSummary, ConfigEcho};
    let summary = ClaimSummary {
        total: 1,
        pass: (verdict.status == ClaimStatus::Pass) as usize,
        mismatch: (verdict.status == ClaimStatus::Mismatch) as usize,
        skipped: (verdict.status == ClaimStatus::Skipped) as usize,
        error: (verdict.status == ClaimStatus::Error) as usize,
    };
    let timed_out = verdict
        .detail
        .as_deref()
        .is_some_and(|d| d.contains("time limit exceeded"));
    ClaimReport {
        verdicts: vec![verdict],
        summary,
        config: ConfigEcho {
            max_n: cfg.max_n,
            use_oracle: cfg.use_oracle,
            jobs: cfg.jobs,
            ranges: Vec::new(),
        },
        timed_out,
    }
}

fn load_graph(dsl: Option<&str>, file: Option<&std::path::Path>) -> Result<(String, Graph), Outcome> {
    match (dsl, file) {
        (Some(expr), None) => {
            let spec = parse::parse_family_dsl(expr)
                .map_err(|e| Outcome::fail(1, format!("{e}\n")))?;
            let g = build(&spec).map_err(|e| Outcome::fail(1, format!("{e}\n")))?;
            Ok((expr.to_string(), g))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Outcome::fail(1, format!("cannot read {}: {e}\n", path.display())))?;
            let g = parse::parse_edge_list(&text)
                .map_err(|e| Outcome::fail(1, format!("{}: {e}\n", path.display())))?;
            Ok((path.display().to_string(), g))
        }
        (Some(_), Some(_)) => Err(Outcome::fail(
            1,
            "give either a DSL expression or --file, not both\n".to_string(),
        )),
        (None, None) => Err(Outcome::fail(
            1,
            "missing graph: give a DSL expression or --file\n".to_string(),
        )),
    }
}

fn apply_ranges(cfg: &mut CheckConfig, spec: &str) -> Result<(), String> {
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| format!("bad range item {item:?}; expected key=lo..hi or key=value"))?;
        let range = || parse_range(value).ok_or_else(|| format!("bad range value {value:?}"));
        let number =
            || -> Result<usize, String> { value.parse().map_err(|_| format!("bad value {value:?}")) };
        match key {
            "paths-gamma" => cfg.paths_gamma = range()?,
            "cycles-gamma" => cfg.cycles_gamma = range()?,
            "wheels-gamma" => cfg.wheels_gamma = range()?,
            "paths-st" => cfg.paths_st = range()?,
            "cycles-st" => cfg.cycles_st = range()?,
            "wheels-st" => cfg.wheels_st = range()?,
            "friendship" => cfg.friendship_st = range()?,
            "book" => cfg.book_st = range()?,
            "bipartite-max" => cfg.bipartite_max = number()?,
            "balanced-nn" => cfg.balanced_nn = range()?,
            "cocktail" => cfg.cocktail_st = range()?,
            "join-pairs" => cfg.join_pairs = number()?,
            "join-order-max" => cfg.join_order_max = number()?,
            "join-seed" => {
                cfg.join_seed = value.parse().map_err(|_| format!("bad seed {value:?}"))?
            }
            other => return Err(format!("unknown range key {other:?}")),
        }
    }
    Ok(())
}

fn parse_range(v: &str) -> Option<(usize, usize)> {
    if let Some((lo, hi)) = v.split_once("..") {
        let lo: usize = lo.parse().ok()?;
        let hi: usize = hi.strip_prefix('=').unwrap_or(hi).parse().ok()?;
        (lo <= hi).then_some((lo, hi))
    } else {
        let x: usize = v.parse().ok()?;
        Some((x, x))
    }
}

/// Distribution keys: (0, k) numeric, (1, _) unbounded, (2, _) undefined.
fn enumerate_distribution(n: usize, invariant: &str, oracle: bool) -> EnumerateOutput {
    use rayon::prelude::*;
    let total = labeled_graph_count(n);
    let value_of = |code: u64| -> (u8, u64) {
        let g = enumeration::graph_from_code(n, code);
        match invariant {
            "gamma_st" => {
                let v = if oracle {
                    strongdom::gamma_st_bruteforce(&g).expect("n <= 7").value
                } else {
                    strongdom::gamma_st(&g).value
                };
                (0, v as u64)
            }
            "gamma" => (0, strongdom::gamma(&g).value as u64),
            "st" => {
                if n < 2 {
                    return (2, 0);
                }
                let opts = StabilityOptions {
                    cap: stability::STABILITY_CAP,
                    solver: if oracle {
                        InnerSolver::BruteForce
                    } else {
                        InnerSolver::Search
                    },
                };
                match stability::stability_with(&g, &opts).expect("n <= 7") {
                    StabilityResult::Finite { k, .. } => (0, k as u64),
                    StabilityResult::Unbounded { .. } => (1, 0),
                }
            }
            "kappa" => (0, g.vertex_connectivity() as u64),
            "edges" => (0, g.edge_count() as u64),
            _ => unreachable!("validated invariant"),
        }
    };
    let dist: BTreeMap<(u8, u64), u64> = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, code| {
            *acc.entry(value_of(code)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    EnumerateOutput {
        order: n,
        invariant: invariant.to_string(),
        total,
        distribution: dist
            .into_iter()
            .map(|((tag, v), count)| DistEntry {
                value: match tag {
                    0 => v.to_string(),
                    1 => "unbounded".to_string(),
                    _ => "undefined".to_string(),
                },
                count,
            })
            .collect(),
    }
}
