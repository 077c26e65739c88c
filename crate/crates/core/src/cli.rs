//! Command-line front end. Exit codes: 0 success, 1 data error, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::agreement::{gamma_alpha, gamma_exact, GammaBreakdown};
use crate::error::{Error, Result};
use crate::fuzzyset::{grid, DEFAULT_SAMPLES};
use crate::iaa::build_iaa;
use crate::intervals::{Interval, IntervalCollection};
use crate::numfmt::{round6, sig6};
use crate::survey::{self, series_to_csv, series_to_json, GammaMode, InputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "iaa",
    version,
    about = "Interval Agreement Approach fuzzy sets and agreement ratios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Agreement ratio of an interval list, with its per-level breakdown
    Gamma(CommonOpts),
    /// Sampled IAA membership of an interval list
    Build(CommonOpts),
    /// Height, centroid, support and core of the IAA set of an interval list
    Attrs(CommonOpts),
    /// Per-group, per-term agreement report for a survey file
    Report(SurveyOpts),
    /// Sampled IAA membership for one survey cell
    Series(SeriesOpts),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Alpha,
}

#[derive(Debug, Clone, Args)]
struct CommonOpts {
    /// Input file, or - for stdin
    #[arg(long, default_value = "-", value_name = "PATH")]
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Number of alpha cuts in alpha mode
    #[arg(long = "alpha-cuts", default_value_t = 10, value_name = "K")]
    alpha_cuts: usize,
    /// Grid resolution for sampled quantities
    #[arg(long, default_value_t = DEFAULT_SAMPLES, value_name = "S")]
    samples: usize,
    /// Response scale bounds
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    scale: Option<Vec<f64>>,
    /// How agreement ratios are computed
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
}

#[derive(Debug, Clone, Args)]
struct SurveyOpts {
    #[command(flatten)]
    common: CommonOpts,
    /// Survey file format; inferred from the file extension when omitted
    #[arg(long = "input-format", value_enum)]
    input_format: Option<SurveyFormat>,
}

#[derive(Debug, Clone, Args)]
struct SeriesOpts {
    #[command(flatten)]
    survey: SurveyOpts,
    /// Group name, including the derived PS and ALL groups
    #[arg(long)]
    group: String,
    /// Term code or full wording
    #[arg(long)]
    term: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SurveyFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gamma,
    Build,
    Attrs,
    Report,
    Series,
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: CommandKind,
    /// `None` reads stdin.
    pub input: Option<String>,
    pub format: OutputFormat,
    pub alpha_cuts: usize,
    pub samples: usize,
    /// `None` when `--scale` was not given.
    pub scale: Option<Interval>,
    pub mode: Mode,
}

impl CliConfig {
    fn from_opts(command: CommandKind, opts: &CommonOpts) -> std::result::Result<Self, String> {
        if opts.alpha_cuts < 2 {
            return Err(format!(
                "--alpha-cuts must be at least 2, got {}",
                opts.alpha_cuts
            ));
        }
        if opts.samples < 2 {
            return Err(format!(
                "--samples must be at least 2, got {}",
                opts.samples
            ));
        }
        let scale = match opts.scale.as_deref() {
            None => None,
            Some(&[lo, hi]) if lo.is_finite() && hi.is_finite() && lo < hi => {
                Some(Interval::new(lo, hi).expect("checked bounds"))
            }
            Some(v) => return Err(format!("--scale needs finite LO < HI, got {v:?}")),
        };
        Ok(Self {
            command,
            input: (opts.input != "-").then(|| opts.input.clone()),
            format: opts.format,
            alpha_cuts: opts.alpha_cuts,
            samples: opts.samples,
            scale,
            mode: opts.mode,
        })
    }

    fn source_name(&self) -> &str {
        self.input.as_deref().unwrap_or("<stdin>")
    }

    fn survey_scale(&self) -> Interval {
        self.scale
            .unwrap_or_else(|| Interval::new(0.0, 10.0).expect("default scale"))
    }

    fn gamma_mode(&self) -> GammaMode {
        match self.mode {
            Mode::Exact => GammaMode::Exact,
            Mode::Alpha => GammaMode::Alpha {
                cuts: self.alpha_cuts,
            },
        }
    }
}

/// Parses an interval list: one `l,r` per line, `#` starts a comment.
pub fn parse_interval_list(text: &str) -> Result<IntervalCollection> {
    let mut intervals = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        let [l, r] = fields.as_slice() else {
            return Err(Error::Parse(format!("expected `l,r`, found {content:?}")).at_line(line));
        };
        let number = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| Error::Parse(format!("not a number: {s:?}")).at_line(line))
        };
        intervals.push(Interval::new(number(l)?, number(r)?).map_err(|e| e.at_line(line))?);
    }
    IntervalCollection::new(intervals)
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            message,
        }
    }

    fn data(source: &str, err: &Error) -> Self {
        let message = match err {
            Error::AtLine {
                line,
                source: inner,
            } => format!("{source}:{line}: {inner}"),
            other => format!("{source}: {other}"),
        };
        Self {
            code: EXIT_DATA,
            message,
        }
    }
}

/// Runs the CLI against explicit streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            return if informational {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            } else {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            };
        }
    };

    match dispatch(cli, stdin, stderr) {
        Ok(output) => match stdout.write_all(output.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: writing output: {e}");
                EXIT_DATA
            }
        },
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(
    cli: Cli,
    stdin: &mut dyn Read,
    stderr: &mut dyn Write,
) -> std::result::Result<String, Failure> {
    let (kind, opts, survey_opts, cell) = match &cli.command {
        Command::Gamma(o) => (CommandKind::Gamma, o, None, None),
        Command::Build(o) => (CommandKind::Build, o, None, None),
        Command::Attrs(o) => (CommandKind::Attrs, o, None, None),
        Command::Report(s) => (CommandKind::Report, &s.common, Some(s), None),
        Command::Series(s) => (
            CommandKind::Series,
            &s.survey.common,
            Some(&s.survey),
            Some((s.group.as_str(), s.term.as_str())),
        ),
    };
    let config = CliConfig::from_opts(kind, opts).map_err(Failure::usage)?;
    let text = read_input(&config, stdin)?;
    let name = config.source_name().to_string();
    let data_err = |e: Error| Failure::data(&name, &e);

    match kind {
        CommandKind::Gamma | CommandKind::Build | CommandKind::Attrs => {
            let collection = parse_interval_list(&text).map_err(data_err)?;
            match kind {
                CommandKind::Gamma => gamma_command(&config, &collection).map_err(data_err),
                CommandKind::Build => Ok(build_command(&config, &collection)),
                _ => attrs_command(&config, &collection).map_err(data_err),
            }
        }
        CommandKind::Report | CommandKind::Series => {
            let format = survey_format(&config, survey_opts.and_then(|s| s.input_format));
            let ds = survey::load_survey(text.as_bytes(), format, config.survey_scale())
                .map_err(data_err)?;
            match cell {
                None => {
                    let rep = survey::report(&ds, config.gamma_mode(), config.samples)
                        .map_err(data_err)?;
                    for s in &rep.skipped {
                        let _ = writeln!(
                            stderr,
                            "warning: skipped {}/{}: {}",
                            s.group, s.term, s.error
                        );
                    }
                    Ok(match config.format {
                        OutputFormat::Csv => rep.to_csv(),
                        OutputFormat::Json => rep.to_json(),
                    })
                }
                Some((group, term)) => {
                    let series = ds
                        .emit_series(group, term, config.samples)
                        .map_err(data_err)?;
                    Ok(render_series(config.format, &series))
                }
            }
        }
    }
}

fn read_input(config: &CliConfig, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    let outcome = match &config.input {
        None => stdin.read_to_string(&mut text),
        Some(path) => File::open(path).and_then(|f| BufReader::new(f).read_to_string(&mut text)),
    };
    outcome.map_err(|e| Failure {
        code: EXIT_DATA,
        message: format!("{}: {e}", config.source_name()),
    })?;
    Ok(text)
}

fn survey_format(config: &CliConfig, explicit: Option<SurveyFormat>) -> InputFormat {
    let from_ext = config
        .input
        .as_deref()
        .and_then(|p| Path::new(p).extension())
        .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    match explicit {
        Some(SurveyFormat::Json) => InputFormat::Json,
        Some(SurveyFormat::Csv) => InputFormat::Csv,
        None if from_ext => InputFormat::Json,
        None => InputFormat::Csv,
    }
}

fn render_series(format: OutputFormat, series: &[(f64, f64)]) -> String {
    match format {
        OutputFormat::Csv => series_to_csv(series),
        OutputFormat::Json => series_to_json(series),
    }
}

fn gamma_command(config: &CliConfig, collection: &IntervalCollection) -> Result<String> {
    let breakdown = match config.mode {
        Mode::Exact => gamma_exact(collection)?,
        Mode::Alpha => {
            if collection.len() < 2 {
                return Err(Error::TooFewSources(collection.len()));
            }
            let mf = build_iaa(collection).membership();
            gamma_alpha(&mf, config.alpha_cuts, config.samples)?
        }
    };
    Ok(render_gamma(config.format, &breakdown))
}

fn render_gamma(format: OutputFormat, g: &GammaBreakdown) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = format!(
                "gamma,{}\nweight_sum,{}\nlevel,length,lower_length,ratio\n",
                sig6(g.gamma),
                sig6(g.weight_sum)
            );
            for t in &g.terms {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    sig6(t.level),
                    sig6(t.length),
                    sig6(t.lower_length),
                    sig6(t.ratio)
                ));
            }
            out
        }
        OutputFormat::Json => {
            let terms: Vec<_> = g
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "level": round6(t.level),
                        "length": round6(t.length),
                        "lower_length": round6(t.lower_length),
                        "ratio": round6(t.ratio),
                    })
                })
                .collect();
            let doc = json!({
                "gamma": round6(g.gamma),
                "weight_sum": round6(g.weight_sum),
                "terms": terms,
            });
            serde_json::to_string_pretty(&doc).expect("gamma serializes") + "\n"
        }
    }
}

fn build_command(config: &CliConfig, collection: &IntervalCollection) -> String {
    let fs = build_iaa(collection);
    let window = config.scale.unwrap_or_else(|| collection.hull());
    let series: Vec<(f64, f64)> = grid(window, config.samples)
        .into_iter()
        .map(|x| (x, fs.mu(x)))
        .collect();
    render_series(config.format, &series)
}

fn attrs_command(config: &CliConfig, collection: &IntervalCollection) -> Result<String> {
    let a = build_iaa(collection)
        .membership()
        .attributes(config.samples)?;
    Ok(match config.format {
        OutputFormat::Csv => format!(
            "height,centroid,support,core\n{},{},{},{}\n",
            sig6(a.height),
            sig6(a.centroid),
            sig6(a.support_length),
            sig6(a.core_length)
        ),
        OutputFormat::Json => {
            let doc = json!({
                "height": round6(a.height),
                "centroid": round6(a.centroid),
                "support": round6(a.support_length),
                "core": round6(a.core_length),
            });
            serde_json::to_string_pretty(&doc).expect("attributes serialize") + "\n"
        }
    })
}
