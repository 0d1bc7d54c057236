//! The `seg17` command line.
//!
//! Exit codes: 0 success, 1 domain error (unknown script, unsupported value,
//! bad display configuration), 2 usage error, 3 data file error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use seg17::codec::{self, Scope};
use seg17::render::{self, RenderStyle};
use seg17::sim::{self, DisplayConfig};
use seg17::synth;
use seg17::tables::{self, Registry};
use seg17::SegmentSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Domain,
    Usage,
    Data,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Domain => 1,
            ExitStatus::Usage => 2,
            ExitStatus::Data => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "seg17", version, about = "17-segment numeral display toolkit")]
struct Cli {
    /// SEGTAB/1 file to use instead of the built-in tables.
    #[arg(long, global = true, value_name = "FILE")]
    data: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List script tables.
    List {
        /// Also show the languages each table covers.
        #[arg(long)]
        aliases: bool,
    },
    /// Encode digits or text as segment patterns.
    Encode(EncodeArgs),
    /// Find the digits a segment pattern stands for.
    Decode(DecodeArgs),
    /// Draw text as SVG or terminal art.
    Render(RenderArgs),
    /// Generate decoder logic.
    Synth(SynthArgs),
    /// Simulate a multiplexed display and write a CSV trace.
    Simulate(SimulateArgs),
    /// Check the glyph tables.
    Validate,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).multiple(false).args(["digits", "text"])))]
struct EncodeArgs {
    #[arg(long)]
    script: String,
    /// Digit values, space or comma separated.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    digits: Option<Vec<u32>>,
    #[arg(long)]
    text: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Names)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Names,
    Hex,
    Bin,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("pattern").required(true).multiple(false).args(["word", "segments"])))]
struct DecodeArgs {
    /// Packed word, e.g. 0x0000C.
    #[arg(long)]
    word: Option<String>,
    /// Segment names, e.g. b,c.
    #[arg(long)]
    segments: Option<String>,
    #[arg(long, default_value = "all")]
    scope: String,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).multiple(false).args(["svg", "terminal"])))]
struct RenderArgs {
    #[arg(long)]
    script: String,
    #[arg(long)]
    text: String,
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
    #[arg(long)]
    terminal: bool,
    /// Pixels per digit width.
    #[arg(long)]
    scale: Option<f64>,
    #[arg(long)]
    show_off: bool,
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    emit: Emit,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Build a single-script decoder without script select lines.
    #[arg(long)]
    script: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Emit {
    Sop,
    Hdl,
    Lut,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[arg(long)]
    script: String,
    #[arg(long)]
    text: String,
    #[arg(long)]
    positions: usize,
    #[arg(long)]
    refresh_hz: u32,
    #[arg(long)]
    ticks: u64,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
    Data(String),
}

impl From<seg17::Error> for Failure {
    fn from(e: seg17::Error) -> Self {
        match e {
            seg17::Error::Parse { .. } | seg17::Error::Invalid(_) => Failure::Data(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    ExitStatus::Success
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    ExitStatus::Usage
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => ExitStatus::Success,
        Err(f) => {
            let (status, msg) = match f {
                Failure::Domain(m) => (ExitStatus::Domain, m),
                Failure::Usage(m) => (ExitStatus::Usage, m),
                Failure::Data(m) => (ExitStatus::Data, m),
            };
            let _ = writeln!(err, "error: {msg}");
            status
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    if let Command::Validate = cli.command {
        return validate(cli.data.as_deref(), out);
    }
    let owned;
    let registry: &Registry = match &cli.data {
        Some(path) => {
            owned = tables::load_tables(&read_data(path)?)?;
            &owned
        }
        None => Registry::canonical(),
    };
    match cli.command {
        Command::List { aliases } => list(registry, aliases, out),
        Command::Encode(a) => encode(registry, a, out),
        Command::Decode(a) => decode(registry, a, out, err),
        Command::Render(a) => render(registry, a, out),
        Command::Synth(a) => synthesize(registry, a),
        Command::Simulate(a) => simulate(registry, a),
        Command::Validate => unreachable!(),
    }
}

fn read_data(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Outcome {
    fs::write(path, bytes).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Domain(format!("writing output: {e}")))
}

fn list(registry: &Registry, aliases: bool, out: &mut dyn Write) -> Outcome {
    let mut text = String::new();
    for t in registry.tables() {
        if aliases {
            text.push_str(&format!(
                "{:>2}  {:<12} {}\n",
                t.id,
                t.key,
                t.languages.join(", ")
            ));
        } else {
            text.push_str(&format!("{:>2}  {:<12} {}\n", t.id, t.key, t.display_name));
        }
    }
    emit(out, &text)
}

fn encode(registry: &Registry, a: EncodeArgs, out: &mut dyn Write) -> Outcome {
    let script = registry.lookup_script(&a.script)?;
    let digits = match (&a.digits, &a.text) {
        (Some(d), _) => codec::encode_number(script, d)?,
        (None, Some(t)) => codec::encode_text(script, t)?,
        (None, None) => unreachable!("clap enforces the input group"),
    };
    let mut text = String::new();
    for d in digits {
        let line = match a.format {
            Format::Names => d.set.to_string(),
            Format::Hex => d.set.to_hex(),
            Format::Bin => d.set.to_bin(),
        };
        text.push_str(&line);
        text.push('\n');
    }
    emit(out, &text)
}

fn parse_word(text: &str) -> Result<SegmentSet, Failure> {
    let t = text.trim();
    let hex = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    let word = u32::from_str_radix(hex, 16)
        .map_err(|_| Failure::Usage(format!("invalid hex word {text:?}")))?;
    Ok(SegmentSet::from_word(word)?)
}

fn decode(registry: &Registry, a: DecodeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let set = match (&a.word, &a.segments) {
        (Some(w), _) => parse_word(w)?,
        (None, Some(s)) => s.parse::<SegmentSet>()?,
        (None, None) => unreachable!("clap enforces the pattern group"),
    };
    let scope = if a.scope.eq_ignore_ascii_case("all") {
        Scope::All
    } else {
        Scope::Script(registry.lookup_script(&a.scope)?.id)
    };
    let found = codec::decode_set(registry, set, scope);
    if found.is_empty() {
        let _ = writeln!(err, "no glyph matches {{{set}}}");
    }
    let mut text = String::new();
    for c in found {
        let key = registry.by_id(c.script_id).map_or("?", |t| t.key.as_str());
        text.push_str(&format!("{key} {}\n", c.value));
    }
    emit(out, &text)
}

fn render(registry: &Registry, a: RenderArgs, out: &mut dyn Write) -> Outcome {
    let script = registry.lookup_script(&a.script)?;
    let sets: Vec<SegmentSet> = codec::encode_text(script, &a.text)?
        .into_iter()
        .map(|d| d.set)
        .collect();
    if a.terminal {
        return emit(out, &render::render_terminal(&sets));
    }
    let mut style = RenderStyle {
        show_off: a.show_off,
        ..RenderStyle::default()
    };
    if let Some(scale) = a.scale {
        style.scale = scale;
    }
    let svg = render::render_svg(&sets, &style)?;
    let path = a.svg.expect("clap enforces the target group");
    write_file(&path, svg.as_bytes())
}

fn synthesize(registry: &Registry, a: SynthArgs) -> Outcome {
    let (table, module) = match &a.script {
        Some(name) => {
            let script = registry.lookup_script(name)?;
            (
                synth::build_script_truth_table(script),
                format!("seg17_decoder_{}", script.key.replace('-', "_")),
            )
        }
        None => (
            synth::build_truth_table(registry),
            "seg17_decoder".to_string(),
        ),
    };
    let bytes = match a.emit {
        Emit::Lut => table.to_lut(),
        Emit::Sop => synth::emit_sop(&table, &synth::minimize_all(&table)).into_bytes(),
        Emit::Hdl => synth::emit_hdl(&table, &synth::minimize_all(&table), &module).into_bytes(),
    };
    write_file(&a.out, &bytes)
}

fn simulate(registry: &Registry, a: SimulateArgs) -> Outcome {
    let script = registry.lookup_script(&a.script)?;
    let content = codec::encode_text(script, &a.text)?
        .into_iter()
        .map(|d| d.set)
        .collect();
    let cfg = DisplayConfig::new(a.positions, a.refresh_hz, content)?;
    let trace = sim::run_simulation(&cfg, a.ticks)?;
    write_file(&a.out, sim::trace_to_csv(&trace).as_bytes())
}

fn validate(data: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let source = match data {
        Some(path) => read_data(path)?,
        None => tables::CANONICAL_SEGTAB.to_string(),
    };
    let registry = tables::parse_tables(&source)?;
    let report = tables::validate(&registry);
    let mut text = String::new();
    for e in &report.errors {
        text.push_str(&format!("error: {e}\n"));
    }
    for w in &report.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    text.push_str(&format!(
        "{} tables, {} glyphs, {} errors, {} warnings\n",
        registry.len(),
        registry.glyph_count(),
        report.errors.len(),
        report.warnings.len()
    ));
    emit(out, &text)?;
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failure::Data(format!(
            "{} validation errors",
            report.errors.len()
        )))
    }
}
