//! Argument parsing and command dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::CliResult;
use crate::report::{CheckResult, Report, Status};
use crate::suites::{self, Params};

#[derive(Debug, Parser)]
#[command(name = "ccrop", version, about = "Lattice-module certificates and shift/CCR verification suites")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Window radius for membership scans.
    #[arg(long, global = true, env = "CCROP_WINDOW", default_value_t = 10)]
    pub window: i64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random cases per suite.
    #[arg(long, global = true, default_value_t = 100)]
    pub cases: usize,
    /// Tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Flags {
    pub fn params(&self) -> Params {
        Params {
            window: self.window,
            seed: self.seed,
            cases: self.cases,
            tol: self.tol,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cone construction, duality and Archimedean checks.
    Cone {
        #[command(subcommand)]
        action: ConeAction,
    },
    Module {
        #[command(subcommand)]
        action: ModuleAction,
    },
    Certify {
        #[command(subcommand)]
        action: CertifyAction,
    },
    /// Randomized verification suites on the configured module.
    Verify { suite: Suite, config: PathBuf },
    Report {
        #[command(subcommand)]
        action: ReportAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConeAction {
    Check { config: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ModuleAction {
    /// Describe the opposite module and check it on the window.
    Opposite { config: PathBuf },
    /// Decide whether the second module is a translate of the first.
    TranslateEq { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CertifyAction {
    /// Certificate that the CCR flow over the cone is not cocycle conjugate to its opposite.
    Asymmetry { config: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ReportAction {
    /// Every suite on one config, in dependency order.
    All { config: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    OppositeRep,
    Dilation,
    Purity,
    Wold,
    Ccr,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::OppositeRep => "opposite-rep",
            Suite::Dilation => "dilation",
            Suite::Purity => "purity",
            Suite::Wold => "wold",
            Suite::Ccr => "ccr",
        }
    }

    fn run(self, m: &ccrop_core::ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
        match self {
            Suite::OppositeRep => suites::opposite_rep(m, p),
            Suite::Dilation => suites::dilation(m, p),
            Suite::Purity => suites::purity(m, p),
            Suite::Wold => suites::wold(m, p),
            Suite::Ccr => suites::ccr(m, p),
        }
    }
}

fn inputs(configs: &[&Config], p: &Params) -> Value {
    let configs: Vec<Value> = configs.iter().map(|c| json!(c)).collect();
    json!({ "configs": configs, "window": p.window, "cases": p.cases, "tol": p.tol })
}

fn prefixed(prefix: &str, rs: Vec<CheckResult>) -> Vec<CheckResult> {
    rs.into_iter()
        .map(|r| CheckResult {
            name: format!("{prefix}/{}", r.name),
            ..r
        })
        .collect()
}

fn load(path: &Path) -> CliResult<Config> {
    Config::load(path)
}

pub fn run(command: &Command, p: &Params) -> CliResult<Report> {
    match command {
        Command::Cone { action: ConeAction::Check { config } } => {
            let cfg = load(config)?;
            let cone = cfg.build_cone()?;
            let mut r = Report::new("cone check", inputs(&[&cfg], p), p.seed);
            r.results = suites::cone_check(&cone, p)?;
            Ok(r)
        }
        Command::Module { action: ModuleAction::Opposite { config } } => {
            let cfg = load(config)?;
            let (_, m) = cfg.build()?;
            let mut r = Report::new("module opposite", inputs(&[&cfg], p), p.seed);
            r.results = suites::module_opposite(&m, p)?;
            Ok(r)
        }
        Command::Module { action: ModuleAction::TranslateEq { a, b } } => {
            let (ca, cb) = (load(a)?, load(b)?);
            let (_, m1) = ca.build()?;
            let (_, m2) = cb.build()?;
            let mut r = Report::new("module translate-eq", inputs(&[&ca, &cb], p), p.seed);
            let (result, _) = suites::translate_eq(&m1, &m2, p)?;
            r.verdict = result.witness["answer"].as_str().map(str::to_owned);
            r.results.push(result);
            Ok(r)
        }
        Command::Certify { action: CertifyAction::Asymmetry { config } } => {
            let cfg = load(config)?;
            let cone = cfg.build_cone()?;
            let mut r = Report::new("certify asymmetry", inputs(&[&cfg], p), p.seed);
            let (results, certificate) = suites::certify(&cone)?;
            r.results = results;
            r.results.push(CheckResult::exact("certificate", true, certificate));
            if r.status() == Status::Pass {
                r.verdict = Some("ASYMMETRIC".into());
            }
            Ok(r)
        }
        Command::Verify { suite, config } => {
            let cfg = load(config)?;
            let (_, m) = cfg.build()?;
            let mut r = Report::new(format!("verify {}", suite.name()), inputs(&[&cfg], p), p.seed);
            r.results = suite.run(&m, p)?;
            Ok(r)
        }
        Command::Report { action: ReportAction::All { config } } => {
            let cfg = load(config)?;
            report_all(&cfg, p)
        }
    }
}

/// Runs the suites concurrently; results are assembled in dependency order.
pub fn report_all(cfg: &Config, p: &Params) -> CliResult<Report> {
    let (cone, m) = cfg.build()?;
    let mut r = Report::new("report all", inputs(&[cfg], p), p.seed);
    let certifiable = cone.dim() >= 2 && cone.is_pointed();
    let batches: Vec<CliResult<Vec<CheckResult>>> = std::thread::scope(|scope| {
        type Job<'a> = Box<dyn FnOnce() -> CliResult<Vec<CheckResult>> + Send + 'a>;
        let (cone, m) = (&cone, &m);
        let mut jobs: Vec<Job> = vec![
            Box::new(move || Ok(prefixed("cone", suites::cone_check(cone, p)?))),
            Box::new(move || Ok(prefixed("module", suites::module_opposite(m, p)?))),
        ];
        if certifiable {
            jobs.push(Box::new(move || Ok(prefixed("certify", suites::certify(cone)?.0))));
        } else if cone.dim() == 1 {
            jobs.push(Box::new(move || Ok(vec![suites::one_parameter(cone, p)?])));
        }
        for suite in [Suite::OppositeRep, Suite::Dilation, Suite::Purity, Suite::Wold, Suite::Ccr] {
            jobs.push(Box::new(move || suite.run(m, p)));
        }
        if certifiable {
            jobs.push(Box::new(move || suites::translate_soundness(cone, p)));
        }
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    for batch in batches {
        r.results.extend(batch?);
    }
    if certifiable && r.status() == Status::Pass {
        r.verdict = Some("ASYMMETRIC".into());
    }
    Ok(r)
}
