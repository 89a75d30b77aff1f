mod docs;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use modspec::algebra::{AlgebraError, LatticeBudget, Shape};
use modspec::spectra::{Module, Side};
use modspec::topology::Variant;
use modspec::verify::{run_suite, Ctx, InstanceBudget, VerifyError};

#[derive(Parser)]
#[command(name = "modspec", version, about = "Spectra and Zariski-type topologies of finite Z/nZ-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct InstanceArgs {
    /// Module as `n=<modulus>;M=<d1,...,dk>` with d1 | d2 | ... | dk | n
    instance: String,
    /// Give up when the submodule lattice has more members than this
    #[arg(long, default_value_t = 5000)]
    max_lattice: usize,
    /// Give up when the module has more elements than this
    #[arg(long, default_value_t = 4096)]
    max_elements: usize,
}

#[derive(Subcommand)]
enum Command {
    /// The submodule lattice
    Lattice {
        #[command(flatten)]
        args: InstanceArgs,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Json)]
        format: LatticeFormat,
    },
    /// The second or coprime spectrum
    Spec {
        #[command(flatten)]
        args: InstanceArgs,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The Zariski-type space on a spectrum
    Topology {
        #[command(flatten)]
        args: InstanceArgs,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Full)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Structural predicates of the module
    Props {
        #[command(flatten)]
        args: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the check catalog over every module within the budget
    Verify {
        #[arg(long, default_value_t = 60)]
        max_modulus: u64,
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        #[arg(long, default_value_t = 5000)]
        max_lattice: usize,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Comma-separated check ids; all checks when omitted
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Everything about one module, including every check evaluated on it
    Report {
        #[command(flatten)]
        args: InstanceArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeFormat {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Second,
    Coprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    S,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Full,
    Restricted,
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot encode output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Algebra(e) if e.is_budget() => 3,
            _ => 2,
        }
    }
}

fn load(args: &InstanceArgs) -> Result<Module, CliError> {
    let shape: Shape = args.instance.parse()?;
    let budget = LatticeBudget {
        max_members: args.max_lattice,
        max_order: args.max_elements,
    };
    Ok(Module::new(&shape, budget)?)
}

fn json(value: &impl serde::Serialize) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Returns the text to print and whether every verified statement held.
fn execute(command: Command) -> Result<(String, bool), CliError> {
    Ok(match command {
        Command::Lattice { args, format } => {
            let m = load(&args)?;
            let text = match format {
                LatticeFormat::Json => json(&docs::lattice(&m))?,
                LatticeFormat::Dot => docs::lattice_dot(&m),
                LatticeFormat::Text => docs::lattice_text(&m),
            };
            (text, true)
        }
        Command::Spec { args, kind, format } => {
            let m = load(&args)?;
            let side = match kind {
                Kind::Second => Side::Second,
                Kind::Coprime => Side::Coprime,
            };
            let doc = docs::spectrum(&m, side);
            let text = match format {
                Format::Json => json(&doc)?,
                Format::Text => docs::spectrum_text(&m, &doc),
            };
            (text, true)
        }
        Command::Topology {
            args,
            side,
            variant,
            format,
        } => {
            let m = load(&args)?;
            let side = match side {
                SideArg::S => Side::Second,
                SideArg::C => Side::Coprime,
            };
            let variant = match variant {
                VariantArg::Full => Variant::Full,
                VariantArg::Restricted => Variant::Restricted,
            };
            let doc = docs::topology(&m, side, variant);
            let text = match format {
                Format::Json => json(&doc)?,
                Format::Text => docs::topology_text(&m, &doc),
            };
            (text, true)
        }
        Command::Props { args, format } => {
            let m = load(&args)?;
            let doc = docs::props(&m);
            let text = match format {
                Format::Json => json(&doc)?,
                Format::Text => docs::props_text(&m, &doc),
            };
            (text, true)
        }
        Command::Verify {
            max_modulus,
            max_order,
            max_lattice,
            max_rank,
            checks,
            format,
        } => {
            let budget = InstanceBudget {
                max_modulus,
                max_order,
                max_lattice,
                max_rank,
            };
            let report = run_suite(&budget, Some(&checks))?;
            let text = match format {
                Format::Json => json(&docs::Versioned::new("verify", None, &report))?,
                Format::Text => docs::verify_text(&report),
            };
            (text, report.all_passed())
        }
        Command::Report { args, format } => {
            let ctx = Ctx::new(load(&args)?);
            let doc = docs::report(&ctx);
            let ok = doc.body.failures == 0;
            let text = match format {
                Format::Json => json(&doc)?,
                Format::Text => docs::report_text(&ctx.m, &doc),
            };
            (text, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((text, ok)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
