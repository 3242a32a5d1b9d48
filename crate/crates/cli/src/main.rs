//! `cega`: build groups, decide central essentiality of their group
//! algebras, and regenerate the reference tables.

mod reproduce;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cega::catalog;
use cega::decision::{self, DecisionReport, Options, Strategy, DEFAULT_ORACLE_BUDGET};
use cega::field::FieldSpec;
use cega::group::{FiniteGroup, GroupDescription};

#[derive(Parser)]
#[command(
    name = "cega",
    version,
    about = "Centrally essential group algebras over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog groups or describe one.
    Groups {
        #[command(subcommand)]
        action: GroupsAction,
    },
    /// Decide whether FG is centrally essential.
    Check(CheckArgs),
    /// Regenerate a reference table and check its expected outcome.
    Reproduce {
        target: Target,
        /// Include the order-3125 group (p = 5).
        #[arg(long)]
        with_p5: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GroupsAction {
    List,
    Info {
        /// Catalog spec (e.g. `Q8`, `D16 x C3`, `order16:7`) or JSON file.
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Oracle,
    Socle,
    Structural,
    Char0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Thm11,
    Remark31,
    Prop29,
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Catalog spec or path to a JSON group description.
    #[arg(long)]
    group: String,
    /// `p`, `p^k`, or `0` for characteristic zero.
    #[arg(long)]
    field: String,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Also run every other applicable method and fail on disagreement.
    #[arg(long)]
    crossvalidate: bool,
    /// Largest q^|G| the exhaustive oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include per-phase timings in the report.
    #[arg(long)]
    timings: bool,
}

/// Parses `p`, `p^k` or `0`; `None` means characteristic zero.
fn parse_field(s: &str) -> Result<Option<FieldSpec>> {
    let s = s.trim();
    if s == "0" {
        return Ok(None);
    }
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => (p.trim(), k.trim()),
        None => (s, "1"),
    };
    let p: u32 = p
        .parse()
        .with_context(|| format!("bad characteristic in field {s:?}"))?;
    let k: u32 = k
        .parse()
        .with_context(|| format!("bad degree in field {s:?}"))?;
    Ok(Some(FieldSpec::new(p, k)?))
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(GroupDescription::from_json(&text)?.build()?);
    }
    Ok(catalog::parse(spec)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => write_stdout(text),
    }
}

/// Writes to stdout; a closed pipe (`cega groups list | head`) is not an error.
pub(crate) fn write_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run_check(args: &CheckArgs) -> Result<DecisionReport> {
    let field = parse_field(&args.field)?;
    let group = load_group(&args.group)?;
    let strategy = match (args.method, &field) {
        (Method::Char0, Some(f)) => bail!("method char0 needs field 0, got {f}"),
        (Method::Auto | Method::Char0, None) => return Ok(decision::decide_char0(&group)),
        (_, None) => bail!("characteristic 0 is only decided structurally (method auto or char0)"),
        (Method::Auto, Some(_)) => Strategy::Auto,
        (Method::Oracle, Some(_)) => Strategy::Oracle,
        (Method::Socle, Some(_)) => Strategy::Socle,
        (Method::Structural, Some(_)) => Strategy::Structural,
    };
    let opts = Options {
        crossvalidate: args.crossvalidate,
        budget: args.budget,
    };
    Ok(decision::check(
        group,
        field.as_ref().unwrap(),
        strategy,
        &opts,
    )?)
}

fn check(args: CheckArgs) -> Result<ExitCode> {
    let mut report = run_check(&args)?;
    if !args.timings {
        report = report.without_timing();
    }
    let text = match args.format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    emit(&text, args.output.as_deref())?;
    Ok(if report.verdict.is_essential() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn groups_list() -> Result<()> {
    let mut text = String::new();
    for entry in catalog::entries() {
        match &entry.expected {
            Some(p) => writeln!(text, "{:<20} order {}", entry.spec, p.order)?,
            None => writeln!(text, "{}", entry.spec)?,
        }
    }
    write_stdout(&text)
}

fn groups_info(spec: &str, format: Format) -> Result<()> {
    let g = load_group(spec)?;
    let series = g.upper_central_series();
    let classes = g.conjugacy_classes().sizes();
    let info = json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "center": g.center().len(),
        "classes": classes.len(),
        "class_sizes": classes,
        "upper_central_series": series.sizes(),
        "nilpotency_class": series.nilpotency_class,
        "derived_subgroup": g.commutator_subgroup().len(),
        "coset_condition": g.star_condition().holds(),
        "second_center_self_centralizing": g.second_center_self_centralizing(),
    });
    match format {
        Format::Json => write_stdout(&(serde_json::to_string_pretty(&info)? + "\n")),
        Format::Text => {
            let join = |v: &[usize]| {
                v.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut t = String::new();
            writeln!(t, "group:              {}", g.name())?;
            writeln!(t, "order:              {}", g.order())?;
            writeln!(t, "abelian:            {}", g.is_abelian())?;
            writeln!(t, "center:             {}", g.center().len())?;
            writeln!(
                t,
                "classes:            {} (sizes {})",
                classes.len(),
                join(&classes)
            )?;
            writeln!(t, "upper central |Z_i|: {}", join(&series.sizes()))?;
            match series.nilpotency_class {
                Some(c) => writeln!(t, "nilpotency class:   {c}")?,
                None => writeln!(t, "nilpotency class:   not nilpotent")?,
            }
            writeln!(t, "derived subgroup:   {}", g.commutator_subgroup().len())?;
            writeln!(t, "coset condition:    {}", g.star_condition().holds())?;
            writeln!(
                t,
                "C(Z_2) = Z_2:       {}",
                g.second_center_self_centralizing()
            )?;
            write_stdout(&t)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Groups { action } => match action {
            GroupsAction::List => groups_list().map(|_| ExitCode::SUCCESS),
            GroupsAction::Info { spec, format } => {
                groups_info(&spec, format).map(|_| ExitCode::SUCCESS)
            }
        },
        Command::Check(args) => check(args),
        Command::Reproduce {
            target,
            with_p5,
            format,
        } => reproduce::run(target, with_p5, format == Format::Json),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
