//! The `census` command line: `transform`, `compare`, `metrics` and `bench`.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O error, 3 format error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::analysis::{compare_transforms, compute_metrics};
use crate::bench::{run_bench, BenchConfig};
use crate::census::{transform, transform_parallel, TransformKind};
use crate::image::{GrayImage, PadMode};
use crate::pnm::{read_pgm, write_pgm, PgmError, PgmVariant};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: PgmError },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Format { .. } => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "census",
    version,
    about = "3x3 and 4x4 census transforms for PGM images"
)]
pub struct Cli {
    /// Run transforms on a rayon pool with this many threads. Output is
    /// identical for every thread count.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kernel {
    #[value(name = "3x3")]
    K3x3,
    #[value(name = "4x4")]
    K4x4,
}

impl From<Kernel> for TransformKind {
    fn from(k: Kernel) -> Self {
        match k {
            Kernel::K3x3 => TransformKind::Ct3,
            Kernel::K4x4 => TransformKind::Ct4x4,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Pad {
    #[default]
    Replicate,
}

impl From<Pad> for PadMode {
    fn from(p: Pad) -> Self {
        match p {
            Pad::Replicate => PadMode::Replicate,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum PgmFlavor {
    P2,
    #[default]
    P5,
}

impl From<PgmFlavor> for PgmVariant {
    fn from(p: PgmFlavor) -> Self {
        match p {
            PgmFlavor::P2 => PgmVariant::AsciiP2,
            PgmFlavor::P5 => PgmVariant::BinaryP5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Size {
    pub width: usize,
    pub height: usize,
}

fn parse_size(s: &str) -> Result<Size, String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected <W>x<H>, got '{s}'"))?;
    let parse = |v: &str| -> Result<usize, String> {
        match v.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(format!(
                "size components must be positive integers, got '{s}'"
            )),
            Ok(n) => Ok(n),
        }
    };
    Ok(Size {
        width: parse(w)?,
        height: parse(h)?,
    })
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Transform one PGM image.
    Transform {
        #[arg(long, value_enum)]
        kernel: Kernel,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        pad: Pad,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t)]
        pgm: PgmFlavor,
    },
    /// Write ct3.pgm, ct4x4.pgm and a metrics report into a directory.
    Compare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print contrast, gradient and entropy metrics of a PGM image.
    Metrics {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time both transforms on a seeded random image.
    Bench {
        #[arg(long, value_parser = parse_size)]
        size: Size,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn load(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    read_pgm(&bytes).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn store(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

struct Runner {
    pool: Option<rayon::ThreadPool>,
}

impl Runner {
    fn new(threads: Option<u16>) -> Result<Self, CliError> {
        let pool = threads
            .map(|n| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n as usize)
                    .build()
                    .map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))
            })
            .transpose()?;
        Ok(Self { pool })
    }

    fn transform(&self, img: &GrayImage, kind: TransformKind, pad: PadMode) -> GrayImage {
        match &self.pool {
            Some(pool) => pool.install(|| transform_parallel(img, kind, pad)),
            None => transform(img, kind, pad),
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let runner = Runner::new(cli.threads)?;
    match cli.command {
        Command::Transform {
            kernel,
            input,
            output,
            pad,
            pgm,
        } => {
            let img = load(&input)?;
            let out = runner.transform(&img, kernel.into(), pad.into());
            store(&output, &write_pgm(&out, pgm.into()))
        }
        Command::Compare {
            input,
            out_dir,
            format,
        } => {
            let img = load(&input)?;
            fs::create_dir_all(&out_dir).map_err(|source| CliError::Io {
                path: out_dir.clone(),
                source,
            })?;
            for (kind, name) in [
                (TransformKind::Ct3, "ct3.pgm"),
                (TransformKind::Ct4x4, "ct4x4.pgm"),
            ] {
                let out = runner.transform(&img, kind, PadMode::Replicate);
                store(&out_dir.join(name), &write_pgm(&out, PgmVariant::BinaryP5))?;
            }
            let report = compare_transforms(&img);
            let (name, body) = match format {
                Format::Text => ("report.txt", report.to_string()),
                Format::Json => ("report.json", to_json(&report)),
            };
            store(&out_dir.join(name), body.as_bytes())
        }
        Command::Metrics { input, format } => {
            let report = compute_metrics(&load(&input)?);
            let body = match format {
                Format::Text => report.to_string(),
                Format::Json => to_json(&report),
            };
            stdout.write_all(body.as_bytes()).map_err(stdout_err)
        }
        Command::Bench {
            size,
            iters,
            seed,
            format,
        } => {
            let config = BenchConfig {
                width: size.width,
                height: size.height,
                iters: iters as usize,
                seed,
                parallel: runner.pool.is_some(),
            };
            let report = match &runner.pool {
                Some(pool) => pool.install(|| run_bench(&config)),
                None => run_bench(&config),
            };
            let body = match format {
                Format::Text => report.to_string(),
                Format::Json => to_json(&report),
            };
            stdout.write_all(body.as_bytes()).map_err(stdout_err)
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code; diagnostics go to `stderr` as a single line.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(stderr, "{line}");
            return 1;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
