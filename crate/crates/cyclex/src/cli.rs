//! The `cyclex` command line.
//!
//! Machine output is JSON on stdout; human summaries go to stderr. Exit
//! codes: 0 cycle-extendable (or success), 1 not cycle-extendable, 2 not
//! applicable, 3 internal error, 4 unreadable or malformed input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cyclex_core::families::{self, FamilySpec, G0Part, G0Spec, G1Spec, G2Spec, HalfBiwheelSpec, RingSpec};
use cyclex_core::recognizer::{self, Mode, Verdict};
use cyclex_core::{decomposition, limits, reduction, Graph};
use serde::Serialize;

use crate::corpus::{self, CorpusParams};
use crate::formats::{self, Highlights};

pub const EXIT_CE: i32 = 0;
pub const EXIT_NOT_CE: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "cyclex",
    version,
    about = "Cycle-extendability of planar matching covered graphs"
)]
pub struct Cli {
    /// Vertex cap for exhaustive routines.
    #[arg(long, env = "CYCLEX_DESK_CAP", global = true)]
    pub desk_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide cycle-extendability.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
        mode: ModeArg,
        /// Print the full decision as JSON.
        #[arg(long)]
        json: bool,
        /// Run the oracle even on non-planar input (oracle mode only).
        #[arg(long)]
        allow_nonplanar: bool,
        /// Write the witness, if any, as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Tight cut decomposition as JSON.
    Decompose { path: PathBuf },
    /// Series and parallel reduction to irreducible form.
    Reduce {
        path: PathBuf,
        /// Include the step-by-step trace.
        #[arg(long)]
        trace: bool,
    },
    /// Family certificate of an irreducible graph.
    Recognize { path: PathBuf },
    /// Build a family member.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Parameters as JSON.
        #[arg(long, conflicts_with_all = ["lengths", "k"])]
        spec: Option<String>,
        /// Shorthand: comma-separated half biwheel path lengths.
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
        /// Shorthand for wheels and prisms.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a labelled corpus.
    Corpus {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
        /// Orders to sample random planar matching covered graphs at.
        #[arg(long, value_delimiter = ',')]
        sample_orders: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        sample_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        family_max_order: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Fast,
    Oracle,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Fast => Mode::Fast,
            ModeArg::Oracle => Mode::Oracle,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    G0,
    G1,
    G2,
    G3,
    Wheel,
    Prism,
    Halfbiwheel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
    Dot,
}

/// Failures mapped to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<cyclex_core::Error> for CliError {
    fn from(e: cyclex_core::Error) -> Self {
        match e {
            cyclex_core::Error::InvalidSpec(_) => CliError::Parse(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<corpus::CorpusError> for CliError {
    fn from(e: corpus::CorpusError) -> Self {
        CliError::Internal(e.to_string())
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    formats::parse_auto(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    if let Some(cap) = cli.desk_cap {
        limits::set_desk_cap(cap);
    }
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Check {
            path,
            mode,
            json: as_json,
            allow_nonplanar,
            dot,
        } => {
            let g = read_graph(&path)?;
            let d = recognizer::decide_with(&g, mode.into(), !allow_nonplanar)?;
            let code = match d.verdict {
                Verdict::Ce => EXIT_CE,
                Verdict::NotCe => EXIT_NOT_CE,
                Verdict::NotApplicable => EXIT_NOT_APPLICABLE,
            };
            let family = d.chain.as_ref().and_then(|c| match &c.terminal {
                recognizer::TerminalClass::Family { certificate } => Some(certificate.tag),
                _ => None,
            });
            let mut summary = format!("{:?}", d.verdict);
            if let Some(tag) = family {
                summary.push_str(&format!(" (irreducible graph in {tag:?})"));
            }
            if let Some(r) = &d.reason {
                summary.push_str(&format!(": {r}"));
            }
            writeln!(err, "{summary}")?;
            if as_json {
                writeln!(out, "{}", json(&d)?)?;
            } else {
                let verdict = match d.verdict {
                    Verdict::Ce => "CE",
                    Verdict::NotCe => "NotCE",
                    Verdict::NotApplicable => "NotApplicable",
                };
                writeln!(out, "{verdict}")?;
                if let Some(c) = &d.witness {
                    let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "witness {}", vs.join(" "))?;
                }
            }
            if let (Some(path), Some(c)) = (dot, &d.witness) {
                let h = Highlights::edges(c.edges.iter().copied());
                fs::write(path, formats::to_dot(&g, Some(&h)))?;
            }
            Ok(code)
        }
        Command::Decompose { path } => {
            let g = read_graph(&path)?;
            let s = decomposition::tight_cut_decomposition(&g)?;
            writeln!(err, "{} pieces, b = {}, p = {}", s.pieces.len(), s.b, s.p)?;
            writeln!(out, "{}", json(&s)?)?;
            Ok(0)
        }
        Command::Reduce { path, trace } => {
            let g = read_graph(&path)?;
            let (h, t) = reduction::to_irreducible(&g)?;
            writeln!(err, "{} steps, {} vertices left", t.steps.len(), h.order())?;
            #[derive(Serialize)]
            struct Reduced<'a> {
                graph: String,
                k2_degenerate: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                trace: Option<&'a reduction::ReductionTrace>,
            }
            let r = Reduced {
                graph: formats::to_edgelist(&h),
                k2_degenerate: t.k2_degenerate,
                trace: trace.then_some(&t),
            };
            writeln!(out, "{}", json(&r)?)?;
            Ok(0)
        }
        Command::Recognize { path } => {
            let g = read_graph(&path)?;
            match families::recognize_family(&g)? {
                Some(c) => {
                    writeln!(err, "member of {:?}", c.tag)?;
                    writeln!(out, "{}", json(&c)?)?;
                    Ok(0)
                }
                None => {
                    writeln!(err, "not a family member")?;
                    writeln!(out, "null")?;
                    Ok(1)
                }
            }
        }
        Command::Generate {
            family,
            spec,
            lengths,
            k,
            format,
            out: path,
        } => {
            let (g, cert) = generate(family, spec.as_deref(), &lengths, k)?;
            let text = match format {
                FormatArg::Edgelist => formats::to_edgelist(&g),
                FormatArg::Graph6 => formats::to_graph6(&g).map_err(|e| CliError::Internal(e.to_string()))? + "\n",
                FormatArg::Dot => formats::to_dot(&g, None),
            };
            writeln!(err, "{} vertices, {} edges", g.order(), g.size())?;
            match path {
                Some(p) => {
                    fs::write(p, &text)?;
                    if let Some(c) = cert {
                        writeln!(out, "{}", json(&c)?)?;
                    }
                }
                None => {
                    write!(out, "{text}")?;
                    if let Some(c) = cert {
                        writeln!(err, "{}", json(&c)?)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Corpus {
            n_max,
            out: dir,
            sample_orders,
            sample_count,
            seed,
            family_max_order,
        } => {
            let params = CorpusParams {
                n_max,
                sample_orders,
                sample_count,
                seed,
                family_max_order,
            };
            let m = corpus::build(&params)?;
            corpus::write(&dir, &m)?;
            let ce = m.records.iter().filter(|r| r.ce == Some(true)).count();
            writeln!(err, "{} graphs, {ce} cycle-extendable", m.records.len())?;
            writeln!(out, "{}", dir.join("manifest.json").display())?;
            Ok(0)
        }
    }
}

fn parse_spec<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("spec: {e}")))
}

fn one_length(lengths: &[usize]) -> Result<HalfBiwheelSpec, CliError> {
    match lengths {
        [l] => Ok(HalfBiwheelSpec { path_length: *l }),
        _ => Err(CliError::Parse(String::from("expected exactly one path length"))),
    }
}

/// Builds the graph and, for the four families, its certificate.
pub fn generate(
    family: FamilyArg,
    spec: Option<&str>,
    lengths: &[usize],
    k: Option<usize>,
) -> Result<(Graph, Option<families::FamilyCertificate>), CliError> {
    let ring = |k: Option<usize>| -> Result<RingSpec, CliError> {
        match (spec, k) {
            (Some(s), _) => parse_spec(s),
            (None, Some(k)) => Ok(RingSpec { k }),
            (None, None) => Err(CliError::Parse(String::from("need --spec or --k"))),
        }
    };
    let fam = match family {
        FamilyArg::Wheel => return Ok((families::gen_wheel(ring(k)?)?, None)),
        FamilyArg::Prism => return Ok((families::gen_prism(ring(k)?)?, None)),
        FamilyArg::Halfbiwheel => {
            let s = match spec {
                Some(s) => parse_spec(s)?,
                None => one_length(lengths)?,
            };
            return Ok((families::gen_half_biwheel(s)?.graph, None));
        }
        FamilyArg::G0 => FamilySpec::G0(match spec {
            Some(s) => parse_spec(s)?,
            None => G0Spec {
                parts: lengths
                    .iter()
                    .map(|&path_length| G0Part {
                        path_length,
                        hub_in_a: true,
                    })
                    .collect(),
            },
        }),
        FamilyArg::G1 => FamilySpec::G1(match spec {
            Some(s) => parse_spec(s)?,
            None => G1Spec {
                parts: lengths
                    .iter()
                    .map(|&path_length| HalfBiwheelSpec { path_length })
                    .collect(),
            },
        }),
        FamilyArg::G2 => FamilySpec::G2(match (spec, lengths) {
            (Some(s), _) => parse_spec(s)?,
            (None, [a, b]) => G2Spec {
                first: HalfBiwheelSpec { path_length: *a },
                second: HalfBiwheelSpec { path_length: *b },
            },
            _ => return Err(CliError::Parse(String::from("expected two path lengths"))),
        }),
        FamilyArg::G3 => FamilySpec::G3(match spec {
            Some(s) => parse_spec(s)?,
            None => one_length(lengths)?,
        }),
    };
    let g = fam.generate()?.graph;
    let cert = families::certify(&g, &fam)?
        .ok_or_else(|| CliError::Internal(String::from("generated member failed its own certificate")))?;
    Ok((g, Some(cert)))
}
