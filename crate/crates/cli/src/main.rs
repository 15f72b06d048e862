use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use d2lab_core::hopf::{Bialgebra, HopfSubalgebra};
use d2lab_core::pipeline::{self, Report};
use d2lab_core::{registry, schema, Error, Field, Result};

/// Exact checks for depth-two extensions, bialgebroids, Hopf-Galois
/// extensions and weak Hopf algebras.
#[derive(Parser)]
#[command(name = "d2lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Ground field: `q` or `fp:<p>`. Overrides the field of the input.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Depth two, bialgebroids and Galois characterization of `B → A`.
    AnalyzeExtension {
        /// Extension JSON file or registry name.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Normality and the Hopf-Galois property of `K ⊆ H`.
    CheckNormal {
        /// Hopf algebra JSON file, registry name, or a pair such as `group:S3/A3`.
        #[arg(long)]
        hopf: String,
        /// Subalgebra: JSON file, `indices:0,1`, or a subgroup name such as `A3`.
        #[arg(long)]
        sub: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Weak Hopf axioms, derived identities and the self-Galois checks.
    WeakhopfCheck {
        /// Weak Hopf algebra JSON file or registry name.
        #[arg(long)]
        input: String,
        /// Ignore any stored antipode; check the weak bialgebra and rebuild it.
        #[arg(long)]
        no_antipode: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rebuild the antipode from the inverse Galois map.
    ReconstructAntipode {
        /// Weak Hopf algebra JSON file or registry name.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the built-in example names.
    ListRegistry,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    Field::parse_flag(s).map_err(|e| e.to_string())
}

fn is_file(input: &str) -> bool {
    Path::new(input).is_file()
}

fn load_hopf(input: &str, field: Option<Field>) -> Result<Bialgebra> {
    if is_file(input) {
        schema::parse_hopf(&std::fs::read_to_string(input)?, field)
    } else {
        registry::hopf(input, field.unwrap_or_default())
    }
}

fn load_pair(hopf: &str, sub: Option<&str>, field: Option<Field>) -> Result<(Bialgebra, HopfSubalgebra)> {
    let Some(sub) = sub else {
        return registry::hopf_pair(hopf, field.unwrap_or_default());
    };
    if !is_file(hopf) && !is_file(sub) && !sub.contains(':') {
        return registry::hopf_pair(&format!("{hopf}/{sub}"), field.unwrap_or_default());
    }
    let h = load_hopf(hopf, field)?;
    let k = if is_file(sub) {
        schema::parse_sub(&std::fs::read_to_string(sub)?, &h)?
    } else if let Some(list) = sub.strip_prefix("indices:") {
        let idx = list
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad index `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(i) = idx.iter().find(|&&i| i >= h.dim()) {
            return Err(Error::Input(format!("index {i} out of range for dimension {}", h.dim())));
        }
        HopfSubalgebra::from_basis(&h, &idx)?
    } else {
        return Err(Error::Input(format!("cannot read subalgebra `{sub}`")));
    };
    Ok((h, k))
}

fn run(command: &Command) -> Result<Option<(Report, &Common)>> {
    let report = match command {
        Command::AnalyzeExtension { input, common } => {
            let ext = if is_file(input) {
                schema::parse_extension(&std::fs::read_to_string(input)?, common.field)?
            } else {
                registry::extension(input, common.field.unwrap_or_default())?
            };
            (pipeline::analyze_extension(input, &ext)?, common)
        }
        Command::CheckNormal { hopf, sub, common } => {
            let (h, k) = load_pair(hopf, sub.as_deref(), common.field)?;
            let name = match sub {
                Some(s) => format!("{hopf} ⊇ {s}"),
                None => hopf.clone(),
            };
            (pipeline::check_normal(&name, &h, &k)?, common)
        }
        Command::WeakhopfCheck { input, no_antipode, common } => {
            let w = load_hopf(input, common.field)?;
            (pipeline::weakhopf_check(input, &w, *no_antipode)?, common)
        }
        Command::ReconstructAntipode { input, common } => {
            let w = load_hopf(input, common.field)?;
            (pipeline::reconstruct(input, &w)?, common)
        }
        Command::ListRegistry => {
            let mut out = std::io::stdout().lock();
            for name in registry::LISTED {
                let _ = writeln!(out, "{name}");
            }
            return Ok(None);
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (report, common) = match run(&cli.command) {
        Ok(Some(r)) => r,
        Ok(None) => return ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json();
    if let Some(path) = &common.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let mut out = std::io::stdout().lock();
    let _ = if common.json {
        writeln!(out, "{json}")
    } else {
        writeln!(out, "{}elapsed {:.3}s", report.summary(), start.elapsed().as_secs_f64())
    };
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
