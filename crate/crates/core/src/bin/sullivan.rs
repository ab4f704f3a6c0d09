use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sullivan::graphs::{FiniteGroup, GroupSpec};
use sullivan::run::{
    cmd_analyze, cmd_aut, cmd_build, cmd_endos, cmd_realize, cmd_verify_all, cmd_verify_arith, load_model,
    resolve_graph, AnalyzeCheck, BuildTarget, Report, RunConfig, RunError,
};

#[derive(Parser)]
#[command(name = "sullivan", version, about = "Rigid Sullivan algebras, graph models and their self-map monoids")]
struct Cli {
    /// TOML or JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// No summary lines on stdout.
    #[arg(long, global = true)]
    quiet: bool,
    /// Print the full JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Mk,
    Mng,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a model file.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        /// Builtin graph name or graph JSON file.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural checks on a model file.
    Analyze {
        #[arg(long)]
        model: PathBuf,
        /// Comma-separated: d2, minimal, dim, isolation, connectivity, elliptic.
        #[arg(long, default_value = "d2,dim")]
        checks: String,
    },
    /// Divisibility tables and the diophantine lemma over a parameter range.
    VerifyArith {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        n_max: Option<i64>,
    },
    /// Automorphism group of a graph.
    Aut {
        #[arg(long)]
        graph: String,
    },
    /// Homotopy classes of self-maps of a model.
    Endos {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Realize a finite group as the self-equivalences of a graph model.
    Realize {
        /// Preset such as trivial, Z3, S3, D4.
        #[arg(long, conflicts_with = "group_file")]
        group: Option<String>,
        /// JSON file with a multiplication table and optional generators.
        #[arg(long)]
        group_file: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// Every configured check.
    VerifyAll {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_file(path: &Path, text: &str) -> Result<(), RunError> {
    std::fs::write(path, text).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))
}

/// Like `println!`, but a closed stdout is not an error.
fn print_out(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn emit(cli: &Cli, report: &Report, out: Option<&Path>) -> Result<i32, RunError> {
    let text = report.to_json_string();
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    if cli.json {
        print_out(&text);
    } else if !cli.quiet {
        print_out(&report.summary_lines().join("\n"));
    }
    Ok(report.exit_code())
}

fn run(cli: &Cli) -> Result<i32, RunError> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::from_path(p)?,
        None => RunConfig::default(),
    };
    match &cli.command {
        Cmd::Build { family, k, n, graph, out } => {
            let target = match family {
                FamilyArg::Mk => BuildTarget::Mk { k: k.ok_or_else(|| RunError::Config("--k is required for mk".into()))? },
                FamilyArg::Mng => {
                    let n = n.ok_or_else(|| RunError::Config("--n is required for mng".into()))?;
                    let g = graph.as_deref().ok_or_else(|| RunError::Config("--graph is required for mng".into()))?;
                    BuildTarget::Mng { n, graph: resolve_graph(g)? }
                }
            };
            let model = cmd_build(&target)?;
            let text = model.to_json_string();
            match out {
                Some(p) => {
                    write_file(p, &text)?;
                    if !cli.quiet && !cli.json {
                        println!("wrote {}", p.display());
                    }
                }
                None => print_out(&text),
            }
            Ok(0)
        }
        Cmd::Analyze { model, checks } => {
            let m = load_model(model)?;
            let report = cmd_analyze(&m, &AnalyzeCheck::parse_list(checks)?)?;
            emit(cli, &report, None)
        }
        Cmd::VerifyArith { family, k_max, n_max } => {
            let report = match family {
                FamilyArg::Mk => cmd_verify_arith("mk", k_max.unwrap_or(cfg.k_max))?,
                FamilyArg::Mng => cmd_verify_arith("mng", n_max.unwrap_or(cfg.n_max))?,
            };
            emit(cli, &report, None)
        }
        Cmd::Aut { graph } => emit(cli, &cmd_aut(&resolve_graph(graph)?)?, None),
        Cmd::Endos { model, report } => {
            let m = load_model(model)?;
            let (r, monoid) = cmd_endos(&m)?;
            if let Some(p) = report {
                write_file(p, &serde_json::to_string_pretty(&monoid).expect("monoid report serializes"))?;
            }
            emit(cli, &r, None)
        }
        Cmd::Realize { group, group_file, n } => {
            let spec: GroupSpec = match (group, group_file) {
                (Some(name), _) => FiniteGroup::preset(name).map_err(|e| RunError::Config(e.to_string()))?.spec(None),
                (None, Some(p)) => serde_json::from_str(&read_file(p)?).map_err(|e| RunError::Io(format!("{}: {e}", p.display())))?,
                (None, None) => return Err(RunError::Config("--group or --group-file is required".into())),
            };
            emit(cli, &cmd_realize(&spec, *n)?, None)
        }
        Cmd::VerifyAll { out } => {
            let report = cmd_verify_all(&cfg)?;
            emit(cli, &report, out.as_deref().or(cfg.output.as_deref()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("sullivan: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
