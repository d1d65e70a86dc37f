use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bipinfluence::io::{builtin_southern_women, load, write_projection, Format};
use bipinfluence::pipeline::{ablate_many, compare_all, score_many, Analysis};
use bipinfluence::report::{emit_report, format_fixed4, r2_csv, scores_csv, OutputPaths, Report};
use bipinfluence::{
    hh_scores, AblationConfig, AnomalyType, BipartiteGraph, Direction, Error, Measure, Mode,
    Result, DEFAULT_FRACTION, DEFAULT_MIN_SIZE,
};

/// Input name that selects the embedded Southern Women network.
const BUILTIN_SOUTHERN_WOMEN: &str = "builtin:southern-women";

#[derive(Parser)]
#[command(
    name = "bipinfluence",
    version,
    about = "Community-creating nodes of bipartite networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis on a bundled dataset.
    Demo {
        #[arg(value_enum)]
        dataset: DemoDataset,
        /// Smallest clique counted as a community.
        #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
        min_size: usize,
        /// Bar chart of every measure.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Full report: scores, communities and R².
        #[arg(long)]
        json: Option<PathBuf>,
        /// Scores as `node,measure,raw,normalized`.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write the one-mode projection with edge provenance.
    Project {
        #[command(flatten)]
        input: InputArgs,
        /// Projection file to write.
        #[arg(long)]
        output: PathBuf,
    },
    /// List the maximal-clique communities of the projection.
    Communities {
        #[command(flatten)]
        input: InputArgs,
        /// Smallest clique counted as a community.
        #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
        min_size: usize,
        /// Also write a JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Score the nodes opposite the projection.
    Score {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MeasureArg::Hh)]
        measure: MeasureArg,
        /// Smallest clique counted as a community.
        #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
        min_size: usize,
        #[command(flatten)]
        outputs: OutputArgs,
    },
    /// Remove the top or bottom scoring nodes and classify community changes.
    Ablate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MeasureArg::Hh)]
        measure: MeasureArg,
        /// Share of scored nodes to remove; at least one is removed.
        #[arg(long, default_value_t = DEFAULT_FRACTION)]
        fraction: f64,
        #[arg(long, value_enum, default_value_t = DirectionArg::Top)]
        direction: DirectionArg,
        /// Smallest clique counted as a community.
        #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
        min_size: usize,
        /// Also write a JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Pairwise R² between all five measures.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Smallest clique counted as a community.
        #[arg(long, default_value_t = DEFAULT_MIN_SIZE)]
        min_size: usize,
        /// Also write a JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Edge list path, or `builtin:southern-women`.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    format: FormatArg,
    /// Mode to project onto; the other mode is scored.
    #[arg(long, value_enum, default_value_t = ModeArg::A)]
    onto: ModeArg,
}

#[derive(Args)]
struct OutputArgs {
    /// Scores as `node,measure,raw,normalized`.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Scores and communities as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Grouped bar chart of normalized scores.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoDataset {
    SouthernWomen,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Konect,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MeasureArg {
    Hh,
    Degree,
    Betweenness,
    Closeness,
    Eigenvector,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Top,
    Bottom,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::A => Mode::A,
            ModeArg::B => Mode::B,
        }
    }
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Top => Direction::Top,
            DirectionArg::Bottom => Direction::Bottom,
        }
    }
}

impl MeasureArg {
    fn measures(self) -> Vec<Measure> {
        match self {
            MeasureArg::Hh => vec![Measure::HH],
            MeasureArg::Degree => vec![Measure::Degree],
            MeasureArg::Betweenness => vec![Measure::Betweenness],
            MeasureArg::Closeness => vec![Measure::Closeness],
            MeasureArg::Eigenvector => vec![Measure::Eigenvector],
            MeasureArg::All => Measure::ALL.to_vec(),
        }
    }
}

impl InputArgs {
    fn load(&self) -> Result<BipartiteGraph> {
        if self.input == Path::new(BUILTIN_SOUTHERN_WOMEN) {
            return Ok(builtin_southern_women());
        }
        let format = match self.format {
            FormatArg::Tsv => Format::Tsv,
            FormatArg::Konect => Format::Konect,
        };
        let g = load(&self.input, format)?;
        g.validate()?;
        Ok(g)
    }
}

fn check_min_size(min_size: usize) -> Result<()> {
    if min_size < 2 {
        return Err(Error::InvalidConfig(format!(
            "--min-size must be at least 2, got {min_size}"
        )));
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.to_owned(),
        source: e,
    })
}

fn run(cli: Cli, out: &mut impl std::io::Write) -> Result<()> {
    let stdout_err = |e: std::io::Error| Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match cli.command {
        Command::Demo {
            dataset: DemoDataset::SouthernWomen,
            min_size,
            svg,
            json,
            csv,
        } => {
            check_min_size(min_size)?;
            let g = builtin_southern_women();
            g.validate()?;
            let analysis = Analysis::new(&g, Mode::A, min_size)?;
            let hh = hh_scores(&analysis.projection, &analysis.communities)?;
            let tables = score_many(&g, Mode::A, &Measure::ALL, min_size)?;
            let r2 = compare_all(&g, Mode::A, min_size)?;

            let mut text = String::new();
            text.push_str(&format!(
                "Southern Women: {} women, {} events, {} edges; projection has {} edges\n\n",
                g.mode_len(Mode::A),
                g.mode_len(Mode::B),
                g.edge_count(),
                analysis.projection.edge_count()
            ));
            text.push_str(&format!(
                "Communities (maximal cliques, size >= {min_size}): {}\n",
                analysis.communities.len()
            ));
            for c in &analysis.communities {
                text.push_str(&format!("  k={:<3} {}\n", c.size(), c.labels().join(" ")));
            }
            text.push_str("\nH.H score of events\nevent\tnormalized\tscore\n");
            for e in &hh.table.entries {
                text.push_str(&format!(
                    "{}\t{}\t{}\n",
                    e.node,
                    format_fixed4(e.normalized),
                    format_fixed4(e.raw)
                ));
            }
            text.push_str("\nR^2 between normalized measures\n");
            text.push_str(&r2_csv(&r2));
            out.write_all(text.as_bytes()).map_err(stdout_err)?;

            let paths = OutputPaths { csv, json, svg };
            if paths.csv.is_some() || paths.json.is_some() || paths.svg.is_some() {
                let report = Report {
                    onto: Mode::A,
                    min_size,
                    tables: &tables,
                    communities: Some(&analysis.communities),
                    r2: Some(&r2),
                    ablations: &[],
                };
                emit_report(&report, &paths)?;
            }
        }
        Command::Project { input, output } => {
            let g = input.load()?;
            let p = bipinfluence::project(&g, input.onto.into());
            write_file(&output, &write_projection(&p))?;
            writeln!(
                out,
                "{} nodes, {} edges -> {}",
                p.node_count(),
                p.edge_count(),
                output.display()
            )
            .map_err(stdout_err)?;
        }
        Command::Communities {
            input,
            min_size,
            json,
        } => {
            check_min_size(min_size)?;
            let g = input.load()?;
            let onto = input.onto.into();
            let analysis = Analysis::new(&g, onto, min_size)?;
            let mut text = String::new();
            for c in &analysis.communities {
                text.push_str(&format!("{}\t{}\n", c.size(), c.labels().join("\t")));
            }
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            if let Some(path) = json {
                let report = Report {
                    onto,
                    min_size,
                    tables: &[],
                    communities: Some(&analysis.communities),
                    r2: None,
                    ablations: &[],
                };
                emit_report(
                    &report,
                    &OutputPaths {
                        json: Some(path),
                        ..Default::default()
                    },
                )?;
            }
        }
        Command::Score {
            input,
            measure,
            min_size,
            outputs,
        } => {
            check_min_size(min_size)?;
            let g = input.load()?;
            let onto = input.onto.into();
            let tables = score_many(&g, onto, &measure.measures(), min_size)?;
            out.write_all(scores_csv(&tables).as_bytes())
                .map_err(stdout_err)?;
            let paths = OutputPaths {
                csv: outputs.csv,
                json: outputs.json,
                svg: outputs.svg,
            };
            if paths.csv.is_some() || paths.json.is_some() || paths.svg.is_some() {
                let report = Report {
                    onto,
                    min_size,
                    tables: &tables,
                    communities: None,
                    r2: None,
                    ablations: &[],
                };
                emit_report(&report, &paths)?;
            }
        }
        Command::Ablate {
            input,
            measure,
            fraction,
            direction,
            min_size,
            json,
        } => {
            check_min_size(min_size)?;
            let g = input.load()?;
            let config = AblationConfig {
                onto: input.onto.into(),
                fraction,
                direction: direction.into(),
                min_size,
            };
            let reports = ablate_many(&g, &measure.measures(), &config)?;
            let mut text = String::from(
                "measure,removed,before,after,born,vanish,grow,merge,split,shrink,unchanged,change_rate\n",
            );
            for r in &reports {
                text.push_str(&format!(
                    "{},{},{},{}",
                    r.measure,
                    r.removed.len(),
                    r.before.len(),
                    r.after.len()
                ));
                for t in AnomalyType::ALL {
                    text.push_str(&format!(",{}", r.count(t)));
                }
                text.push_str(&format!(",{}\n", format_fixed4(r.change_rate())));
            }
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            if let Some(path) = json {
                let report = Report {
                    onto: config.onto,
                    min_size,
                    tables: &[],
                    communities: None,
                    r2: None,
                    ablations: &reports,
                };
                emit_report(
                    &report,
                    &OutputPaths {
                        json: Some(path),
                        ..Default::default()
                    },
                )?;
            }
        }
        Command::Compare {
            input,
            min_size,
            json,
        } => {
            check_min_size(min_size)?;
            let g = input.load()?;
            let onto = input.onto.into();
            let r2 = compare_all(&g, onto, min_size)?;
            out.write_all(r2_csv(&r2).as_bytes()).map_err(stdout_err)?;
            if let Some(path) = json {
                let report = Report {
                    onto,
                    min_size,
                    tables: &[],
                    communities: None,
                    r2: Some(&r2),
                    ablations: &[],
                };
                emit_report(
                    &report,
                    &OutputPaths {
                        json: Some(path),
                        ..Default::default()
                    },
                )?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
