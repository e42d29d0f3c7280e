//! `subdepth`: depth invariants of subgroup and Hopf subalgebra pairs.

mod reports;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use subdepth::corpus::{run_sweep, CorpusGroup, SweepReport, SweepSpec};
use subdepth::depthmat::depth_report;
use subdepth::hopfcore::{HopfInput, DEFAULT_TENSOR_CAP};
use subdepth::permgroup::GroupInput;
use subdepth::Error;

use reports::Caps;

#[derive(Parser)]
#[command(
    name = "subdepth",
    version,
    about = "Depth of subgroups and Hopf subalgebras, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Format of the report on standard output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write Graphviz DOT of the bipartite graph and McKay quiver to this file.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Largest group order enumerated.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap_order: usize,
    /// Largest tensor-power dimension (times dim H for trace ideals).
    #[arg(long, global = true, default_value_t = DEFAULT_TENSOR_CAP)]
    cap_tensor_dim: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Depth report for a group pair or a bare inclusion matrix.
    Depth {
        #[command(subcommand)]
        source: DepthSource,
    },
    /// Mackey decomposition of the n-th tensor power of Q = k[G/H].
    Mackey {
        file: PathBuf,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Hecke algebra of the subgroup.
    Hecke {
        file: PathBuf,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Character table of a group, or a check of an imported one.
    Chartab {
        file: PathBuf,
        /// Table in JSON to validate against the group.
        #[arg(long)]
        import: Option<PathBuf>,
    },
    /// Quotient module, annihilators, integrals and trace ideals of a Hopf pair.
    Hopf {
        file: PathBuf,
        #[arg(long)]
        sub: Option<String>,
    },
    /// Depth of every subgroup class of every catalogued group.
    Sweep {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        /// Exit nonzero when some pair has d_0 > d_h.
        #[arg(long)]
        conjecture: bool,
        /// Extra groups: a JSON list of group descriptions.
        #[arg(long)]
        extra: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DepthSource {
    Group {
        file: PathBuf,
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// `{"m": [[...]]}` or a bare array of rows.
    Matrix { file: PathBuf },
}

enum Failure {
    Usage(String),
    Run(Error),
    Violations(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Malformed(_) => Failure::Usage(e.to_string()),
            e => Failure::Run(e),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Usage(format!(
            "{}: line {} column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

/// Serialises, re-parses and compares before printing.
fn emit_json<T>(value: &T) -> Result<String, Failure>
where
    T: Serialize + serde::de::DeserializeOwned + PartialEq,
{
    let text = serde_json::to_string_pretty(value).expect("serialisable");
    let back: T = serde_json::from_str(&text).map_err(|e| {
        Failure::Run(Error::Assertion(format!(
            "emitted JSON does not parse: {e}"
        )))
    })?;
    if back != *value {
        return Err(Failure::Run(Error::Assertion(
            "emitted JSON does not round-trip".into(),
        )));
    }
    Ok(text)
}

/// Text for stdout plus the optional JSON and DOT artifacts.
struct Output {
    text: String,
    json: String,
    dot: Option<String>,
}

fn write_artifact(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let caps = Caps {
        order: cli.global.cap_order,
        tensor_dim: cli.global.cap_tensor_dim,
    };
    if caps.order == 0 || caps.tensor_dim == 0 {
        return Err(Failure::Usage("caps must be positive".into()));
    }
    let mut violations = 0;
    let out = match cli.command {
        Command::Depth { source } => {
            let (r, text, json) = match source {
                DepthSource::Group { file, subgroup } => {
                    let input: GroupInput = parse_json(&file)?;
                    let pair = reports::load_pair(&input, subgroup.as_deref(), caps)?;
                    let r = reports::group_pair_report(&pair, caps)?;
                    let text = reports::group_pair_text(&r);
                    let json = emit_json(&r)?;
                    (r.depth, text, json)
                }
                DepthSource::Matrix { file } => {
                    let m = reports::parse_matrix(&read(&file)?)?;
                    let r = depth_report(&m, None)?;
                    r.validate()?;
                    let json = emit_json(&r)?;
                    (r.clone(), r.to_text(), json)
                }
            };
            Output {
                text,
                json,
                dot: Some(reports::depth_dot(&r)),
            }
        }
        Command::Mackey {
            file,
            subgroup,
            power,
        } => {
            if power == 0 {
                return Err(Failure::Usage("--power must be at least 1".into()));
            }
            let input: GroupInput = parse_json(&file)?;
            let pair = reports::load_pair(&input, subgroup.as_deref(), caps)?;
            let r = reports::mackey_report(&pair, power)?;
            Output {
                text: reports::mackey_text(&r),
                json: emit_json(&r)?,
                dot: None,
            }
        }
        Command::Hecke { file, subgroup } => {
            let input: GroupInput = parse_json(&file)?;
            let pair = reports::load_pair(&input, subgroup.as_deref(), caps)?;
            let h = reports::hecke_report(&pair)?;
            Output {
                text: reports::hecke_text(&h),
                json: emit_json(&h)?,
                dot: None,
            }
        }
        Command::Chartab { file, import } => {
            let input: GroupInput = parse_json(&file)?;
            let imported = import.as_deref().map(read).transpose()?;
            let t = reports::chartab(&input, imported.as_deref(), caps)?;
            Output {
                text: reports::chartab_text(&t),
                json: emit_json(&t.to_json())?,
                dot: None,
            }
        }
        Command::Hopf { file, sub } => {
            let input = HopfInput::from_json(&read(&file)?)?;
            let bundle = input.build()?;
            let sub = sub.or_else(|| input.subalgebras.keys().next().cloned());
            let r = reports::hopf_pair_report(&bundle, sub.as_deref(), caps)?;
            Output {
                text: reports::hopf_text(&r),
                json: emit_json(&r)?,
                dot: None,
            }
        }
        Command::Sweep {
            max_order,
            conjecture,
            extra,
        } => {
            let mut spec = SweepSpec::catalogue(max_order);
            if let Some(path) = extra {
                let groups: Vec<GroupInput> = parse_json(&path)?;
                for (i, g) in groups.into_iter().enumerate() {
                    let order = g.build(caps.order)?.order();
                    spec.groups.push(CorpusGroup {
                        name: g.name.clone().unwrap_or_else(|| format!("extra{i}")),
                        order,
                        degree: g.degree,
                        generators: g.generators,
                    });
                }
            }
            let report: SweepReport = run_sweep(&spec, caps.order)?;
            if conjecture {
                violations = report.violations.len();
            }
            Output {
                text: reports::sweep_text(&report),
                json: emit_json(&report)?,
                dot: None,
            }
        }
    };
    if let Some(path) = &cli.global.json {
        write_artifact(path, &out.json)?;
    }
    if let Some(path) = &cli.global.dot {
        match &out.dot {
            Some(d) => write_artifact(path, d)?,
            None => return Err(Failure::Usage("--dot applies to depth reports only".into())),
        }
    }
    let stdout = match cli.global.format {
        Format::Text => out.text,
        Format::Json => out.json,
    };
    if violations > 0 {
        print!("{stdout}");
        return Err(Failure::Violations(violations));
    }
    Ok(stdout)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Violations(n)) => {
            eprintln!("{n} pairs have d_0 > d_h");
            ExitCode::from(3)
        }
    }
}
