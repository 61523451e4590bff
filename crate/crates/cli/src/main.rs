mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use i2gr_core::charring::MAX_VARS;
use i2gr_core::{ClassTable, Geometry, GrassmannianSpec};

use render::Format;

#[derive(Parser)]
#[command(name = "i2gr", version, about = "Schubert calculus tables for isotropic Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Torus-fixed points with their codimensions.
    FixedPoints(Opts),
    /// Betti numbers by codimension.
    Betti(Opts),
    /// The GKM graph.
    Gkm(Opts),
    /// Equivariant Chevalley coefficients.
    Chevalley(Opts),
    /// The equivariant Schubert class table.
    Classes(Opts),
    /// Certify a class table (computed, or read with --from-file).
    Verify(VerifyOpts),
    /// Degrees of all Schubert varieties.
    Degrees(Opts),
    /// Poincaré pairing matrices in every codimension.
    Pairing(Opts),
    /// Check the ring presentation for n = 3.
    RingCheck(Opts),
    /// Compare bisymplectic and symplectic classes below the middle level.
    Lefschetz(Opts),
}

#[derive(Args, Clone)]
struct Opts {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value_t = GeometryArg::Bisym)]
    geometry: GeometryArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; output does not depend on this.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyOpts {
    #[command(flatten)]
    opts: Opts,
    /// A class table in the JSON produced by `classes --format json`.
    #[arg(long)]
    from_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeometryArg {
    Sympl,
    Bisym,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Sympl => Geometry::Symplectic,
            GeometryArg::Bisym => Geometry::Bisymplectic,
        }
    }
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

/// What a command produced: the payload and whether it certified.
pub struct Report {
    pub body: String,
    /// Lines for the error stream; nonempty means exit 1.
    pub violations: Vec<String>,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, violations: Vec::new() }
    }
}

impl Opts {
    fn spec(&self) -> anyhow::Result<GrassmannianSpec> {
        let Some(n) = self.n else {
            return usage("--n is required");
        };
        if n > MAX_VARS {
            return usage(format!("--n {n} exceeds the maximum {MAX_VARS}"));
        }
        if self.k < 2 || self.k > n {
            return usage(format!("--k {} must satisfy 2 <= k <= n = {n}", self.k));
        }
        GrassmannianSpec::new(n, self.k, self.geometry.into()).map_err(|e| Usage(format!("--n/--k: {e}")).into())
    }

    /// Specs for commands built on the Chevalley formula.
    fn chevalley_spec(&self) -> anyhow::Result<GrassmannianSpec> {
        let spec = self.spec()?;
        if spec.geometry() == Geometry::Bisymplectic && spec.k() != 2 {
            return usage(format!("--k {}: bisymplectic geometry supports only k = 2 here", spec.k()));
        }
        Ok(spec)
    }

    fn require(&self, allowed: &[Format], command: &str) -> anyhow::Result<()> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            usage(format!("--format {} is not available for {command}", self.format))
        }
    }
}

fn run(command: &Command) -> anyhow::Result<(Report, Opts)> {
    use Format::*;
    let (opts, report) = match command {
        Command::FixedPoints(o) => {
            o.require(&[Json, Csv, Text], "fixed-points")?;
            (o, render::fixed_points(&o.spec()?, o.format)?)
        }
        Command::Betti(o) => {
            o.require(&[Json, Csv, Text], "betti")?;
            (o, render::betti(&o.spec()?, o.format)?)
        }
        Command::Gkm(o) => (o, render::gkm(&o.spec()?, o.format)?),
        Command::Chevalley(o) => (o, render::chevalley(&o.chevalley_spec()?, o.format)?),
        Command::Classes(o) => {
            o.require(&[Json, Csv, Text], "classes")?;
            (o, render::classes(&table_for(o)?, o.format)?)
        }
        Command::Verify(v) => {
            let o = &v.opts;
            o.require(&[Json, Text], "verify")?;
            let table = match &v.from_file {
                Some(path) => {
                    let src = fs::read_to_string(path)
                        .map_err(|e| Usage(format!("--from-file {}: {e}", path.display())))?;
                    ClassTable::from_json_str(&src)
                        .map_err(|e| Usage(format!("--from-file {}: {e}", path.display())))?
                }
                None => table_for(o)?,
            };
            (o, render::verify(&table, o.format)?)
        }
        Command::Degrees(o) => (o, render::degrees(&o.chevalley_spec()?, o.format)?),
        Command::Pairing(o) => {
            o.require(&[Json, Csv, Text], "pairing")?;
            (o, render::pairing(&table_for(o)?, o.format)?)
        }
        Command::RingCheck(o) => {
            o.require(&[Json, Text], "ring-check")?;
            let spec = o.spec()?;
            if spec != GrassmannianSpec::bisymplectic(3)? {
                return usage("ring-check applies to --n 3 --k 2 --geometry bisym only");
            }
            (o, render::ring_check(&table_for(o)?, o.format)?)
        }
        Command::Lefschetz(o) => {
            o.require(&[Json, Text], "lefschetz")?;
            let spec = o.spec()?;
            if spec.k() != 2 || spec.n() < 3 {
                return usage("lefschetz needs --k 2 and --n >= 3");
            }
            (o, render::lefschetz(spec.n(), o.format)?)
        }
    };
    Ok((report, opts.clone()))
}

fn table_for(o: &Opts) -> anyhow::Result<ClassTable> {
    let spec = o.chevalley_spec()?;
    i2gr_core::compute_class_table(&spec).map_err(|e| match e {
        i2gr_core::ClassError::UnsupportedSpec { .. } => Usage(format!("--k: {e}")).into(),
        other => anyhow::Error::new(other),
    })
}

fn threads(command: &Command) -> Option<usize> {
    match command {
        Command::Verify(v) => v.opts.threads,
        Command::FixedPoints(o)
        | Command::Betti(o)
        | Command::Gkm(o)
        | Command::Chevalley(o)
        | Command::Classes(o)
        | Command::Degrees(o)
        | Command::Pairing(o)
        | Command::RingCheck(o)
        | Command::Lefschetz(o) => o.threads,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = threads(&cli.command) {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli.command).and_then(|(report, opts)| {
        match &opts.output {
            Some(path) => fs::write(path, &report.body).with_context(|| format!("--output {}", path.display()))?,
            None => std::io::stdout().write_all(report.body.as_bytes())?,
        }
        Ok(report.violations)
    });
    match result {
        Ok(violations) if violations.is_empty() => ExitCode::SUCCESS,
        Ok(violations) => {
            for v in &violations {
                eprintln!("{v}");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            // Anything that is not a usage error is a failed computation.
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}
