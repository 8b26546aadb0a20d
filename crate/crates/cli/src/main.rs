use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qhmin::algebra::{classical_table, schubert_degree, StructureTable};
use qhmin::export::{export, Format, Target};
use qhmin::quantum::quantum_table;
use qhmin::verify::{verify, Suite};
use qhmin::{Error, Space};

#[derive(Parser)]
#[command(name = "qhmin", version, about = "Schubert calculus on minuscule and cominuscule G/P")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Classical,
    Quantum,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportTarget {
    Hasse,
    Quiver,
    #[value(name = "quiver-F")]
    QuiverF,
    #[value(name = "quiver-Fd")]
    QuiverFd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two Schubert classes.
    Product {
        space: String,
        u: String,
        v: String,
        #[arg(long)]
        quantum: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        space: String,
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Hasse diagram or quiver as DOT or JSON.
    Export {
        space: String,
        #[arg(value_enum)]
        target: ExportTarget,
        /// Degree for `quiver-Fd`.
        #[arg(long)]
        d: Option<usize>,
        /// Mark the ideal of this class on `quiver`.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree of a Schubert variety in the minimal embedding.
    Degree { space: String, w: String },
    /// Poincaré dual, or the degree-d dual with `--q-degree d`.
    Dual {
        space: String,
        w: String,
        #[arg(long, default_value_t = 0)]
        q_degree: usize,
    },
    /// Smallest power of q in the quantum product of two classes.
    MinQ { space: String, u: String, v: String },
    /// Occurrences of the marked node in a reduced word.
    Delta { space: String, u: String },
    /// Full structure table as JSON.
    Table {
        space: String,
        #[arg(long)]
        quantum: bool,
        #[arg(long)]
        provenance: bool,
    },
    /// Every class with its codimension.
    Classes { space: String },
}

fn table(space: &Space, quantum: bool) -> qhmin::Result<StructureTable<'_>> {
    if quantum {
        quantum_table(space)
    } else {
        classical_table(space)
    }
}

fn run(cmd: Command) -> anyhow::Result<ExitCode> {
    match cmd {
        Command::Product { space, u, v, quantum, format } => {
            let sp = Space::parse(&space)?;
            let (u, v) = (sp.resolve(&u)?, sp.resolve(&v)?);
            let t = table(&sp, quantum)?;
            let p = t.product(u, v)?;
            match format {
                TextOrJson::Text => println!("{}", p.render(&sp)),
                TextOrJson::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema_version": qhmin::export::SCHEMA_VERSION,
                        "space": sp.label(),
                        "u": sp.name(u),
                        "v": sp.name(v),
                        "quantum": quantum,
                        "product": p.to_json(&sp),
                    }))?
                ),
            }
        }
        Command::Verify { space, suite, jobs } => {
            let sp = Space::parse(&space)?;
            let suite = match suite {
                SuiteArg::Classical => Suite::Classical,
                SuiteArg::Quantum => Suite::Quantum,
                SuiteArg::All => Suite::All,
            };
            let report = verify(&sp, suite, jobs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { space, target, d, class, format, out } => {
            let sp = Space::parse(&space)?;
            let target = match target {
                ExportTarget::Hasse => Target::Hasse,
                ExportTarget::Quiver => Target::Quiver(class.map(|c| sp.resolve(&c)).transpose()?),
                ExportTarget::QuiverF => Target::QuiverF(1),
                ExportTarget::QuiverFd => {
                    Target::QuiverF(d.ok_or_else(|| Error::Parse("quiver-Fd needs --d N".into()))?)
                }
            };
            let format = match format {
                GraphFormat::Dot => Format::Dot,
                GraphFormat::Json => Format::Json,
            };
            let text = export(&sp, target, format)?;
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Degree { space, w } => {
            let sp = Space::parse(&space)?;
            let w = sp.resolve(&w)?;
            println!("{}", schubert_degree(&sp, w));
        }
        Command::Dual { space, w, q_degree } => {
            let sp = Space::parse(&space)?;
            let w = sp.resolve(&w)?;
            if q_degree == 0 {
                println!("{}", sp.name(sp.dual(w)));
            } else {
                match sp.higher_dual(q_degree, w)? {
                    Some(v) => println!("{}", sp.name(v)),
                    None => anyhow::bail!("{} has no degree-{q_degree} dual", sp.name(w)),
                }
            }
        }
        Command::MinQ { space, u, v } => {
            let sp = Space::parse(&space)?;
            let (u, v) = (sp.resolve(&u)?, sp.resolve(&v)?);
            println!("{}", sp.min_q_power(u, v));
        }
        Command::Delta { space, u } => {
            let sp = Space::parse(&space)?;
            let u = sp.resolve(&u)?;
            println!("{}", sp.delta(u));
        }
        Command::Table { space, quantum, provenance } => {
            let sp = Space::parse(&space)?;
            let t = table(&sp, quantum)?;
            println!("{}", serde_json::to_string_pretty(&t.to_json(provenance))?);
        }
        Command::Classes { space } => {
            let sp = Space::parse(&space)?;
            let mut ids: Vec<_> = (0..sp.len()).collect();
            ids.sort_by_key(|&w| (sp.codim(w), sp.name(w).to_string()));
            for w in ids {
                println!("{}\t{}", sp.name(w), sp.codim(w));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = matches!(
                e.downcast_ref::<Error>(),
                Some(
                    Error::UnknownClass { .. }
                        | Error::ParseSpace(_)
                        | Error::Parse(_)
                        | Error::UnsupportedType(_)
                        | Error::UnsupportedSpace(_)
                        | Error::NotCominuscule { .. }
                )
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
