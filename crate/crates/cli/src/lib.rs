//! Command-line front end: enumeration, sampling, exploration and the
//! verification suites, emitting JSON and CSV.

pub mod args;
pub mod commands;
pub mod manifest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use genusmap_core::FaceDegreeSequence;
use serde_json::json;

use args::{parse_face_spec, parse_pattern, parse_positive_list, PatternArg, PositiveList};
use commands::{RunContext, Status, Suite};
use manifest::RunManifest;

pub use args::ParseError;

#[derive(Debug, Parser)]
#[command(
    name = "genusmap",
    version,
    about = "Rooted bipartite maps of prescribed genus and face degrees"
)]
pub struct Cli {
    /// Cap on worker threads; never changes any output value.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Also write a run manifest to this path.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count rooted maps (or marked polygon maps with --boundary).
    Enumerate {
        #[arg(long, value_parser = parse_face_spec)]
        faces: FaceDegreeSequence,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        /// Half-perimeters of the marked external faces.
        #[arg(long, value_parser = parse_positive_list)]
        boundary: Option<PositiveList>,
        /// Count by materialising every map instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Draw uniform rooted maps into a directory.
    Sample {
        #[arg(long, value_parser = parse_face_spec)]
        faces: FaceDegreeSequence,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
        /// Draw from the materialised class list instead of by rejection.
        #[arg(long)]
        exact: bool,
    },
    /// Count the darts of a map at which a pattern is included.
    Occ {
        /// `m1:j`, `m2:j`, `trivial`, or a file holding a map with a hole.
        #[arg(long, value_parser = parse_pattern)]
        pattern: PatternArg,
        #[arg(long)]
        map: PathBuf,
    },
    /// Local distance between two rooted maps.
    Dloc { a: PathBuf, b: PathBuf },
    /// Peel a map from its root.
    Peel {
        map: PathBuf,
        /// Write one JSON object per step here (stdout otherwise).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Run an exact verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Seed for the sampled suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per parameter point for the sampled suites.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Plug-in limit parameters and pattern-density weight estimates.
    Estimate {
        #[arg(long, value_parser = parse_face_spec)]
        faces: FaceDegreeSequence,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long)]
        j_max: Option<usize>,
    },
    /// Mean and variance of a pattern density along `n · base`, as CSV.
    Concentration {
        #[arg(long, value_parser = parse_pattern)]
        pattern: PatternArg,
        #[arg(long, value_parser = parse_positive_list)]
        scale: PositiveList,
        #[arg(long, value_parser = parse_face_spec, default_value = "2:1")]
        base: FaceDegreeSequence,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Largest edge count at which the exact mean is enumerated.
        #[arg(long, default_value_t = 8)]
        exact_limit: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Enumerate { .. } => "enumerate",
            Command::Sample { .. } => "sample",
            Command::Occ { .. } => "occ",
            Command::Dloc { .. } => "dloc",
            Command::Peel { .. } => "peel",
            Command::Verify { .. } => "verify",
            Command::Estimate { .. } => "estimate",
            Command::Concentration { .. } => "concentration",
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Command::Sample { seed, .. }
            | Command::Verify { seed, .. }
            | Command::Estimate { seed, .. }
            | Command::Concentration { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `argv` and runs the command, writing primary output to `out`.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let parameters = json!(argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>());
    let manifest = RunManifest::new(
        cli.command.name(),
        json!({ "argv": parameters }),
        cli.command.seed(),
    );
    let mut buffer = Vec::new();
    let result = match cli.threads {
        Some(0) => {
            eprintln!("error: --threads must be positive");
            return EXIT_USAGE;
        }
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut buffer, manifest)),
            Err(e) => Err(e.into()),
        },
        None => execute(&cli, &mut buffer, manifest),
    };
    let result = result.and_then(|s| {
        out.write_all(&buffer)?;
        out.flush()?;
        Ok(s)
    });
    match result {
        Ok(Status::Passed) => EXIT_OK,
        Ok(Status::Failed) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILED
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, manifest: RunManifest) -> anyhow::Result<Status> {
    let mut ctx = RunContext {
        out,
        manifest,
        start: Instant::now(),
    };
    let status = match &cli.command {
        Command::Enumerate {
            faces,
            genus,
            boundary,
            oracle,
        } => commands::enumerate(
            &mut ctx,
            faces,
            *genus,
            boundary.as_ref().map(|b| b.0.as_slice()),
            *oracle,
        )?,
        Command::Sample {
            faces,
            genus,
            seed,
            count,
            out,
            exact,
        } => commands::sample(&mut ctx, faces, *genus, *seed, *count, out, *exact)?,
        Command::Occ { pattern, map } => commands::occ_cmd(&mut ctx, pattern, map)?,
        Command::Dloc { a, b } => commands::dloc(&mut ctx, a, b)?,
        Command::Peel { map, trace } => commands::peel(&mut ctx, map, trace.as_deref())?,
        Command::Verify {
            suite,
            max_edges,
            seed,
            samples,
        } => commands::verify(&mut ctx, *suite, *max_edges, *seed, *samples)?,
        Command::Estimate {
            faces,
            genus,
            seed,
            count,
            j_max,
        } => commands::estimate(&mut ctx, faces, *genus, *seed, *count, *j_max)?,
        Command::Concentration {
            pattern,
            scale,
            base,
            genus,
            seed,
            samples,
            exact_limit,
        } => commands::concentration(
            &mut ctx,
            pattern,
            base,
            *genus,
            &scale.0,
            *seed,
            *samples,
            *exact_limit,
        )?,
    };
    if let Some(path) = &cli.manifest {
        ctx.write_manifest(path)?;
    }
    Ok(status)
}
