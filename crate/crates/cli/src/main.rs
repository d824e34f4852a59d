mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use topolap_core::complex::{self, rips_complex_with};
use topolap_core::digraph::{self, DEFAULT_MAX_LEN};
use topolap_core::hyperdigraph;
use topolap_core::hypergraph::{self, Hypergraph};
use topolap_core::io::{self, CloudFormat, Combinatorial, CombinatorialKind, CurveFormat, Scale};
use topolap_core::persistence::{self, build_filtration_with};
use topolap_core::{Error, InfimumChainData, PointCloud, Result, RipsParams, Tolerance};

use report::SpectrumRow;

const C20_XYZ: &str = include_str!("../../../data/c20.xyz");
const C60_XYZ: &str = include_str!("../../../data/c60.xyz");

/// Betti numbers, Laplacian spectra and harmonic generators of point clouds,
/// hypergraphs, digraphs and hyperdigraphs.
#[derive(Parser)]
#[command(name = "topolap", version)]
struct Cli {
    /// More log output (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    /// Only report errors.
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Rips complex of a point cloud.
    Rips(CloudCmd),
    /// Betti numbers of the Rips complex.
    Betti(CloudCmd),
    /// Hodge Laplacian spectrum in one dimension.
    Laplacian(CloudCmd),
    /// Betti and spectral-gap curves over a threshold sweep.
    Curve(CurveCmd),
    /// Follow persistent harmonic generators through a threshold sweep.
    HarmonicTrack(TrackCmd),
    /// Embedded homology of a hypergraph, or of the two-color Rips hypergraph of a labelled cloud.
    Hypergraph(CombinatorialCmd),
    /// Path homology of a digraph.
    Digraph(CombinatorialCmd),
    /// Homology of a hyperdigraph.
    Hyperdigraph(CombinatorialCmd),
    /// Curves of the bundled fullerene geometries.
    Demo(DemoCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Csv,
    Xyz,
    /// Whitespace-separated vertex ids, one edge per line.
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for CurveFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => CurveFormat::Csv,
            OutputFormat::Json => CurveFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Distance,
    Radius,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Rips,
    TwoColor,
}

#[derive(Clone, Copy, ValueEnum)]
enum Molecule {
    C20,
    C60,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    /// Defaults from the file extension: .csv, .xyz, anything else is an edge list.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

impl InputArgs {
    fn format(&self) -> InputFormat {
        self.input_format.unwrap_or_else(|| match self.input.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => InputFormat::Csv,
            Some(e) if e.eq_ignore_ascii_case("xyz") => InputFormat::Xyz,
            _ => InputFormat::Edges,
        })
    }

    fn cloud(&self) -> Result<PointCloud> {
        let format = match self.format() {
            InputFormat::Csv => CloudFormat::Csv,
            InputFormat::Xyz => CloudFormat::Xyz,
            InputFormat::Edges => return Err(Error::Input("this command needs a csv or xyz point cloud".into())),
        };
        io::parse_point_cloud(&self.input, format)
    }
}

#[derive(Args)]
struct ThresholdArgs {
    #[arg(long, conflicts_with_all = ["thresholds", "range"])]
    threshold: Option<f64>,
    /// Comma-separated, strictly increasing.
    #[arg(long, conflicts_with = "range")]
    thresholds: Option<String>,
    /// Inclusive grid `start:stop:step`.
    #[arg(long)]
    range: Option<String>,
    #[arg(long, value_enum, default_value = "distance")]
    scale: ScaleArg,
    /// Admit pairs at exactly the threshold distance.
    #[arg(long)]
    closed_threshold: bool,
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
}

impl ThresholdArgs {
    fn params(&self) -> RipsParams {
        RipsParams { max_dim: self.max_dim, closed: self.closed_threshold }
    }

    fn list(&self) -> Result<Vec<f64>> {
        let raw = match (&self.threshold, &self.thresholds, &self.range) {
            (Some(t), _, _) => vec![*t],
            (_, Some(list), _) => io::parse_threshold_list(list)?,
            (_, _, Some(range)) => io::parse_range(range)?,
            _ => return Err(Error::Input("give --threshold, --thresholds or --range".into())),
        };
        let scale = match self.scale {
            ScaleArg::Distance => Scale::Distance,
            ScaleArg::Radius => Scale::Radius,
        };
        io::resolve_thresholds(&raw, scale)
    }

    fn single(&self) -> Result<f64> {
        match self.list()?.as_slice() {
            [t] => Ok(*t),
            _ => Err(Error::Input("this command takes a single threshold".into())),
        }
    }
}

#[derive(Args)]
struct TolArgs {
    /// Relative singular-value cutoff factor for ranks.
    #[arg(long, default_value_t = 1e-12)]
    tol_rank: f64,
    /// Eigenvalues at or below this magnitude count as zero.
    #[arg(long, default_value_t = 1e-8)]
    tol_zero: f64,
}

impl TolArgs {
    fn get(&self) -> Result<Tolerance> {
        Tolerance::new(self.tol_rank, self.tol_zero)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

#[derive(Args)]
struct CloudCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    thresholds: ThresholdArgs,
    /// Dimension for `laplacian` (default 0).
    #[arg(long)]
    dim: Option<usize>,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CurveCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    thresholds: ThresholdArgs,
    #[arg(long, value_enum, default_value = "rips")]
    model: Model,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TrackCmd {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    thresholds: ThresholdArgs,
    #[arg(long, default_value_t = 1)]
    dim: usize,
    /// Decimal places in printed generators.
    #[arg(long, default_value_t = 7)]
    decimals: usize,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CombinatorialCmd {
    #[command(flatten)]
    input: InputArgs,
    /// Threshold for a labelled point cloud (hypergraph only).
    #[command(flatten)]
    thresholds: ThresholdArgs,
    /// Report only this dimension.
    #[arg(long)]
    dim: Option<usize>,
    /// Longest path considered (digraph only).
    #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
    max_len: usize,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DemoCmd {
    #[arg(long, value_enum, default_value = "c20")]
    molecule: Molecule,
    /// Inclusive grid `start:stop:step` in angstroms.
    #[arg(long, default_value = "1.0:3.0:0.25")]
    range: String,
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
    #[command(flatten)]
    tol: TolArgs,
    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(2);
        }
    };
    let level = match (cli.quiet, cli.verbose) {
        (true, _) => log::LevelFilter::Error,
        (false, 0) => log::LevelFilter::Warn,
        (false, 1) => log::LevelFilter::Info,
        (false, 2) => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    env_logger::Builder::new().filter_level(level).format_target(false).init();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("error: {}: {msg}", e.category());
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Rips(c) => {
            let cloud = c.input.cloud()?;
            let t = c.thresholds.single()?;
            let k = rips_complex_with(&cloud, t, c.thresholds.params())?;
            write_out(&c.output, &report::rips(t, &k, c.output.format)?)
        }
        Command::Betti(c) => {
            let cloud = c.input.cloud()?;
            let t = c.thresholds.single()?;
            let tol = c.tol.get()?;
            let k = rips_complex_with(&cloud, t, c.thresholds.params())?;
            let betti = complex::betti_numbers(&k, &tol)?;
            write_out(&c.output, &report::betti(t, &betti, c.output.format)?)
        }
        Command::Laplacian(c) => {
            let cloud = c.input.cloud()?;
            let t = c.thresholds.single()?;
            let tol = c.tol.get()?;
            let k = rips_complex_with(&cloud, t, c.thresholds.params())?;
            let r = complex::spectral_report(&k, c.dim.unwrap_or(0), &tol)?;
            write_out(&c.output, &report::spectra(&[SpectrumRow::from(&r)], c.output.format)?)
        }
        Command::Curve(c) => {
            let cloud = c.input.cloud()?;
            let ts = c.thresholds.list()?;
            let tol = c.tol.get()?;
            let records = match c.model {
                Model::Rips => {
                    io::rips_curve_records(&build_filtration_with(&cloud, &ts, c.thresholds.params())?, &tol)?
                }
                Model::TwoColor => io::two_color_curve_records(&cloud, &ts, c.thresholds.params(), &tol)?,
            };
            write_out(&c.output, &io::format_curves(&records, c.output.format.into())?)
        }
        Command::HarmonicTrack(c) => {
            let cloud = c.input.cloud()?;
            let ts = c.thresholds.list()?;
            let tol = c.tol.get()?;
            let f = build_filtration_with(&cloud, &ts, c.thresholds.params())?;
            let track = persistence::track_harmonics(&f, c.dim, &tol)?;
            write_out(&c.output, &report::track(&track, c.decimals, c.output.format)?)
        }
        Command::Hypergraph(c) => {
            let tol = c.tol.get()?;
            let h = match c.input.format() {
                InputFormat::Edges => match io::parse_combinatorial(&c.input.input, CombinatorialKind::Hypergraph)? {
                    Combinatorial::Hypergraph(h) => h,
                    _ => unreachable!("parsed as a hypergraph"),
                },
                _ => {
                    let cloud = c.input.cloud()?;
                    let t = c.thresholds.single()?;
                    hypergraph::two_color_rips_hypergraph_with(&cloud, t, c.thresholds.params())?
                }
            };
            infimum_report(&hypergraph_data(&h, &tol)?, c.dim, None, &tol, &c.output)
        }
        Command::Digraph(c) => {
            let tol = c.tol.get()?;
            let Combinatorial::Digraph(g) = io::parse_combinatorial(&c.input.input, CombinatorialKind::Digraph)? else {
                unreachable!("parsed as a digraph")
            };
            let basis = digraph::enumerate_paths(&g, c.max_len);
            let data = digraph::path_infimum_data(&basis, &tol)?;
            infimum_report(&data, c.dim, Some(c.max_len), &tol, &c.output)
        }
        Command::Hyperdigraph(c) => {
            let tol = c.tol.get()?;
            let Combinatorial::Hyperdigraph(h) =
                io::parse_combinatorial(&c.input.input, CombinatorialKind::Hyperdigraph)?
            else {
                unreachable!("parsed as a hyperdigraph")
            };
            infimum_report(&hyperdigraph::hyperdigraph_infimum_data(&h, &tol)?, c.dim, None, &tol, &c.output)
        }
        Command::Demo(c) => {
            let text = match c.molecule {
                Molecule::C20 => C20_XYZ,
                Molecule::C60 => C60_XYZ,
            };
            let cloud = io::parse_point_cloud_str(text, CloudFormat::Xyz)?;
            let ts = io::resolve_thresholds(&io::parse_range(&c.range)?, Scale::Distance)?;
            let tol = c.tol.get()?;
            let f = build_filtration_with(&cloud, &ts, RipsParams::new(c.max_dim))?;
            write_out(&c.output, &io::format_curves(&io::rips_curve_records(&f, &tol)?, c.output.format.into())?)
        }
    }
}

fn hypergraph_data(h: &Hypergraph, tol: &Tolerance) -> Result<InfimumChainData> {
    if h.hyperedges().is_empty() {
        return Err(Error::Input("the hypergraph has no hyperedges".into()));
    }
    hypergraph::infimum_data(h, tol)
}

/// Betti numbers and spectra of every dimension, or of `dim` alone. With
/// `cap`, dimensions at or above it are dropped.
fn infimum_report(
    data: &InfimumChainData,
    dim: Option<usize>,
    cap: Option<usize>,
    tol: &Tolerance,
    out: &OutputArgs,
) -> Result<()> {
    let betti = data.betti_by_stacking(tol)?;
    let top = cap.map_or(data.len(), |c| c.min(data.len()));
    let dims: Vec<usize> = match dim {
        Some(p) if p < top => vec![p],
        Some(p) => return Err(Error::Input(format!("dimension {p} is out of range (0..{top})"))),
        None => (0..top).collect(),
    };
    let rows = dims
        .into_iter()
        .map(|p| {
            let r = data.spectral_report(p, tol)?;
            if r.betti != betti[p] {
                log::warn!("dimension {p}: {} zero eigenvalues but Betti number {}", r.betti, betti[p]);
            }
            Ok(SpectrumRow::from(&r))
        })
        .collect::<Result<Vec<_>>>()?;
    write_out(out, &report::spectra(&rows, out.format)?)
}

fn write_out(out: &OutputArgs, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
