//! `bfzq`: build, check, glue and export BFZ quivers and test rigidity of
//! their superpotentials.
//!
//! Exit codes: 0 ok, 1 property violated, 2 invalid input, 3 inconclusive
//! rigidity.

mod commands;
mod error;
mod job;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bfz_core::cartan_graph::LabeledGraph;
use bfz_core::coxeter_words::SignConvention;
use clap::{Args, Parser, Subcommand};

use commands::Outcome;
use error::CliError;
use job::{Format, Job, JobOptions, JobSpec};

#[derive(Parser)]
#[command(
    name = "bfzq",
    version,
    about = "BFZ quivers on cylinders and rigidity of their potentials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

/// Overrides for the `options` block of the spec.
#[derive(Args)]
struct Flags {
    #[arg(long, global = true, value_parser = parse_convention)]
    sign_convention: Option<SignConvention>,
    /// Leave out the arrows between frozen vertices.
    #[arg(long, global = true)]
    no_frozen_arrows: bool,
    /// Only take derivatives with respect to arrows with a mutable endpoint.
    #[arg(long, global = true)]
    exclude_boundary_derivatives: bool,
    #[arg(long, global = true)]
    max_cycle_len: Option<usize>,
    #[arg(long, global = true)]
    trunc_degree: Option<usize>,
    #[arg(long, global = true)]
    max_trunc_degree: Option<usize>,
    /// Also write the command's artifacts into this directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the quiver, exchange matrix, embedding and faces.
    Build { spec: PathBuf },
    /// Run the structural checks on one spec or on a random batch.
    Check {
        spec: Option<PathBuf>,
        /// Check this many random reduced pairs over the spec's graph (A3 without a spec).
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on ℓ(u) + ℓ(v) in random mode.
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Test rigidity of the face superpotential, or of a fixture.
    Rigidity {
        spec: Option<PathBuf>,
        #[arg(long, conflicts_with = "spec")]
        fixture: Option<PathBuf>,
    },
    /// Glue Q^{u,e} (from SPEC) under Q^{e,v} (from --top) and compare with Q^{u,v}.
    Glue {
        spec: PathBuf,
        #[arg(long)]
        top: PathBuf,
    },
    /// Print one rendering of the quiver.
    Export {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn parse_convention(s: &str) -> Result<SignConvention, String> {
    s.parse()
}

impl Flags {
    fn apply(&self, o: &mut JobOptions) {
        if let Some(c) = self.sign_convention {
            o.sign_convention = Some(c);
        }
        o.no_frozen_arrows |= self.no_frozen_arrows;
        o.exclude_boundary_derivatives |= self.exclude_boundary_derivatives;
        o.max_cycle_len = self.max_cycle_len.or(o.max_cycle_len);
        o.trunc_degree = self.trunc_degree.or(o.trunc_degree);
        o.max_trunc_degree = self.max_trunc_degree.or(o.max_trunc_degree);
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn load(path: &Path, flags: &Flags) -> Result<Job, CliError> {
    let mut job = JobSpec::parse(&read(path)?)?.validate()?;
    flags.apply(&mut job.options);
    Ok(job)
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    let target = dir.join(name);
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(&target, e))?;
    tmp.persist(&target)
        .map_err(|e| CliError::io(&target, e.error))?;
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let flags = &cli.flags;
    match &cli.command {
        Command::Build { spec } => commands::build(&load(spec, flags)?),
        Command::Check {
            spec,
            random,
            seed,
            max_len,
        } => match (spec, random) {
            (Some(spec), None) => commands::check(&load(spec, flags)?),
            (spec, Some(n)) => {
                let base = match spec {
                    Some(path) => load(path, flags)?,
                    None => {
                        let mut options = JobOptions::default();
                        flags.apply(&mut options);
                        Job {
                            graph: LabeledGraph::path(3),
                            u: vec![],
                            v: vec![],
                            pattern: None,
                            options,
                        }
                    }
                };
                commands::check_random(&base, *n, *seed, *max_len)
            }
            (None, None) => Err(CliError::invalid(
                "args.missing_spec",
                "check needs a spec or --random N",
            )),
        },
        Command::Rigidity { spec, fixture } => match (spec, fixture) {
            (_, Some(path)) => {
                let mut options = JobOptions::default();
                flags.apply(&mut options);
                commands::rigidity_fixture(&read(path)?, &options)
            }
            (Some(spec), None) => commands::rigidity(&load(spec, flags)?),
            (None, None) => Err(CliError::invalid(
                "args.missing_spec",
                "rigidity needs a spec or --fixture",
            )),
        },
        Command::Glue { spec, top } => {
            let bottom = load(spec, flags)?;
            let top = load(top, flags)?;
            commands::glue_pair(&bottom, &top, bottom.convention())
        }
        Command::Export { spec, format } => commands::export(&load(spec, flags)?, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        if let Some(dir) = &cli.flags.out_dir {
            std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            for (name, contents) in &out.files {
                write_atomic(dir, name, contents)?;
            }
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit as u8)
        }
    }
}
