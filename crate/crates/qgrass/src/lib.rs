//! Command-line front end: validated configuration, parallel checks and
//! deterministic JSON/CSV reports.

pub mod args;
pub mod commands;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use report::Output;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "QGRASS_WORKERS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] qgrass_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 for bad input, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(qgrass_core::Error::Internal(_)) => 1,
            CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Internal(_) => 1,
        }
    }
}

fn workers() -> Result<Option<usize>, CliError> {
    match std::env::var(WORKERS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Usage(format!("{WORKERS_ENV}: {e}"))),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{WORKERS_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Dims(a) => commands::dims(a),
        Command::Act(a) => commands::act(a),
        Command::CheckUq(a) => commands::check_uq(a),
        Command::CheckLeibniz(a) => commands::check_leibniz(a),
        Command::CheckWeyl(a) => commands::check_weyl(a),
        Command::CheckDq(a) => commands::check_dq(a),
        Command::Hopf(a) => commands::hopf(a),
        Command::Simple(a) => commands::simple(a),
        Command::Qtest(a) => commands::qtest(a),
    }
}

fn out_path(cmd: &Command) -> Option<&std::path::Path> {
    let c = match cmd {
        Command::Dims(a) => &a.common,
        Command::Act(a) => &a.space.common,
        Command::CheckUq(a) | Command::CheckLeibniz(a) => &a.space.common,
        Command::CheckWeyl(a) | Command::CheckDq(a) => &a.space.common,
        Command::Hopf(a) => &a.common,
        Command::Simple(a) => &a.algebra.space.common,
        Command::Qtest(a) => &a.common,
    };
    c.out.as_deref()
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = workers()? {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| CliError::Internal(e.to_string()))?
    };
    let out = pool.install(|| dispatch(&cli.command))?;
    match out_path(&cli.command) {
        Some(p) => report::write_atomic(p, &out.text)?,
        None => std::io::stdout().lock().write_all(out.text.as_bytes())?,
    }
    Ok(out.pass)
}

/// Runs the CLI: 0 when every check passes, 1 when one fails (the report is
/// still written), 2 on a usage error.
pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qgrass: {e}");
            if e.exit_code() == 2 {
                eprintln!("Run `qgrass {} --help` for the accepted flags.", subcommand_name(&cli.command));
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn subcommand_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Dims(_) => "dims",
        Command::Act(_) => "act",
        Command::CheckUq(_) => "check-uq",
        Command::CheckLeibniz(_) => "check-leibniz",
        Command::CheckWeyl(_) => "check-weyl",
        Command::CheckDq(_) => "check-dq",
        Command::Hopf(_) => "hopf",
        Command::Simple(_) => "simple",
        Command::Qtest(_) => "qtest",
    }
}
