use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pantsdrill::carried::{
    compression_witness, enumerate_carried_with, heegaard_lower_bound, Carrier, EnumerationConfig, DEFAULT_ORBIT_CAP,
    DEFAULT_SELECTION_CAP,
};
use pantsdrill::drilling::build_drilled_complex_with_twist;
use pantsdrill::fan::{build_fan_path, FanPathSpec};
use pantsdrill::io::{
    complex_to_json, parse_complex_json, parse_path_json, path_to_json, surfaces_to_json, to_json,
    triangulation_to_json, SurfacesFile,
};
use pantsdrill::pants_graph::validate_path;
use pantsdrill::pipeline::{run_pipeline, PipelineConfig, TriFormat};
use pantsdrill::triangulation::{to_tri_text, triangulate, volume_bound};

#[derive(Parser)]
#[command(
    name = "pantsdrill",
    version,
    about = "Drilled braid complements from pants-graph paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate or check pants-graph paths.
    #[command(subcommand)]
    Path(PathCommand),
    /// Drill a closed path into a pants-cell complex.
    Drill {
        file: PathBuf,
        /// Record filling slope 1/k on each loop (default k = n).
        #[arg(long)]
        twist: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Ideal triangulation of a drilled complex.
    Triangulate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Tri)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Surfaces carried by the complex of the two-fan path.
    #[command(subcommand)]
    Surfaces(SurfacesCommand),
    /// Summary numbers for the two-fan path on n punctures.
    Stats {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        rounds: Option<u32>,
    },
    /// Run every stage and write all artifacts to a directory.
    Pipeline {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        rounds: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SELECTION_CAP)]
        cap: usize,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Tri)]
        format: Format,
        #[arg(long)]
        twist: Option<u64>,
    },
}

#[derive(Subcommand)]
enum PathCommand {
    /// The two-fan path, `rounds` rounds of n - 3 flips each.
    Gen {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        rounds: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Check every move and the closing condition.
    Validate { file: PathBuf },
}

#[derive(Subcommand)]
enum SurfacesCommand {
    Enumerate {
        #[arg(short)]
        n: u32,
        /// Only use once-punctured annuli.
        #[arg(long)]
        annuli_only: bool,
        /// Largest surface, in cells.
        #[arg(long, default_value_t = DEFAULT_SELECTION_CAP)]
        cap: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tri,
}

impl From<Format> for TriFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => TriFormat::Json,
            Format::Tri => TriFormat::Tri,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Path(PathCommand::Gen { n, rounds, out }) => {
            let path = build_fan_path(FanPathSpec::new(n, rounds.unwrap_or(n))?)?;
            out.emit(&path_to_json(&path))?;
        }
        Command::Path(PathCommand::Validate { file }) => {
            let path = parse_path_json(&read(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            let report = validate_path(&path);
            print!("{}", to_json(&report));
            return Ok(report.ok);
        }
        Command::Drill { file, twist, out } => {
            let path = parse_path_json(&read(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            let complex = build_drilled_complex_with_twist(&path, twist.unwrap_or(path.n as u64))?;
            out.emit(&complex_to_json(&complex))?;
        }
        Command::Triangulate { file, format, out } => {
            let complex = parse_complex_json(&read(&file)?).with_context(|| format!("parsing {}", file.display()))?;
            let (tri, report) = triangulate(&complex)?;
            out.emit(&match format {
                Format::Json => triangulation_to_json(&tri),
                Format::Tri => to_tri_text(&tri),
            })?;
            eprint!("{}", to_json(&report));
        }
        Command::Surfaces(SurfacesCommand::Enumerate {
            n,
            annuli_only,
            cap,
            out,
        }) => {
            let path = build_fan_path(FanPathSpec::closed(n)?)?;
            let complex = build_drilled_complex_with_twist(&path, n as u64)?;
            let surfaces = enumerate_carried_with(
                &complex,
                EnumerationConfig {
                    annuli_only,
                    max_cells: cap,
                },
            )?;
            let classes = Carrier::new(&complex).classify(&surfaces, DEFAULT_ORBIT_CAP);
            let witness = compression_witness(&complex)?;
            let file = SurfacesFile::new(&complex, annuli_only, &surfaces, &classes, Some(witness));
            out.emit(&surfaces_to_json(&file))?;
        }
        Command::Stats { n, rounds } => {
            let path = build_fan_path(FanPathSpec::new(n, rounds.unwrap_or(n))?)?;
            let report = validate_path(&path);
            let bound = volume_bound(&path);
            println!("n                {n}");
            println!(
                "moves            {} (A {}, S {})",
                report.length, report.a_moves, report.s_moves
            );
            println!("monodromy        {}", report.monodromy);
            println!("closes           {}", report.closes);
            println!("volume bound     {:.10} ({} octahedra)", bound.bound, bound.octahedra());
            println!("heegaard genus   >= {}", heegaard_lower_bound(n)?);
            if report.closes {
                let complex = build_drilled_complex_with_twist(&path, n as u64)?;
                let (_, tri) = triangulate(&complex)?;
                println!("tetrahedra       {}", tri.tetrahedra);
                println!("cusps            {}", tri.cusps);
                println!("cusp links tori  {}", tri.all_links_tori());
            }
            return Ok(report.ok);
        }
        Command::Pipeline {
            n,
            rounds,
            cap,
            out,
            format,
            twist,
        } => {
            let config = PipelineConfig {
                n,
                rounds: rounds.unwrap_or(n),
                cap,
                out_dir: out,
                format: format.into(),
                twist,
            };
            let report = run_pipeline(&config)?;
            print!("{}", to_json(&report));
            return Ok(report.ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
