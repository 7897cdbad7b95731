use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use heisenberg_core::export::{ball_csv, growth_csv, polyomino_svg, word_list, PolyominoRecord};
use heisenberg_core::language::{
    extend_to_dead_end, generate_dead_end_words, DEFAULT_GENERATION_CEILING,
};
use heisenberg_core::metric::{geodesic_extensions, is_dead_end_element, try_length};
use heisenberg_core::oracle::{bfs_ball, geodesic_growth, Limits};
use heisenberg_core::polyomino::{enumerate_min_perimeter, OrientedBoundary, DEFAULT_AREA_CEILING};
use heisenberg_core::verify::{run_criterion, CriterionReport, CRITERIA};
use heisenberg_core::{element::try_evaluate, parse_word, Error, GroupElement, Word};

#[derive(Parser)]
#[command(
    name = "hgeo",
    version,
    about = "Geodesics and dead ends in the discrete Heisenberg group"
)]
struct Cli {
    /// Output format. Each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout. For SVG this is a directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
    Words,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a word such as `a2bA3`.
    Eval { word: String },
    /// Word length of the element (n, m, k).
    #[command(allow_negative_numbers = true)]
    Len { n: i64, m: i64, k: i64 },
    /// Whether a word is geodesic, and its geodesic one-letter extensions.
    Geodesic { word: String },
    /// Distance table of the ball around the identity.
    Ball {
        #[arg(long, default_value_t = Limits::default().ball_radius)]
        radius: u32,
        #[arg(long, default_value_t = Limits::default().ball_radius)]
        ceiling: u32,
    },
    /// Sphere sizes and geodesic growth up to a length.
    Growth {
        #[arg(long, default_value_t = Limits::default().growth_nmax)]
        max: u32,
        #[arg(long, default_value_t = Limits::default().growth_nmax)]
        ceiling: u32,
    },
    /// Every dead-end word of area k or -k.
    Deadends {
        #[arg(long)]
        area: u64,
        #[arg(long, default_value_t = DEFAULT_GENERATION_CEILING)]
        ceiling: u64,
    },
    /// Minimal-perimeter polyominoes of a given area.
    Polyominoes {
        #[arg(long)]
        area: u64,
        #[arg(long, default_value_t = DEFAULT_AREA_CEILING)]
        ceiling: u64,
    },
    /// Extend a geodesic word to a dead-end word.
    Complete {
        word: String,
        #[arg(long, default_value_t = DEFAULT_AREA_CEILING)]
        max_area: u64,
    },
    /// Run acceptance criteria: `all` or a number from 1 to 11.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

enum Failure {
    Verification,
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct Coords {
    n: i64,
    m: i64,
}

#[derive(Serialize)]
struct EvalRecord {
    word: String,
    n: i64,
    m: i64,
    k: i64,
    coords: Coords,
    area: i64,
    length: u64,
    geodesic: bool,
    dead_end: bool,
    extensions: Vec<String>,
}

#[derive(Serialize)]
struct GeodesicRecord {
    word: String,
    geodesic: bool,
    dead_end: bool,
    extensions: Vec<String>,
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("hgeo: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("hgeo: {msg}");
            ExitCode::from(3)
        }
    }
}

fn pick(requested: Option<Format>, allowed: &[Format]) -> std::result::Result<Format, Failure> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(format!(
            "format {f:?} is not available for this command (choose from {allowed:?})"
        ))),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// A JSON array with one element per line.
fn to_json_rows<T: Serialize>(rows: &[T]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| serde_json::to_string(r).expect("plain data serializes"))
        .collect();
    if body.is_empty() {
        "[]\n".to_owned()
    } else {
        format!("[\n{}\n]\n", body.join(",\n"))
    }
}

fn parse(text: &str) -> std::result::Result<Word, Failure> {
    parse_word(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn letters(ls: &[heisenberg_core::Letter]) -> Vec<String> {
    ls.iter().map(|l| l.to_string()).collect()
}

fn run(cli: &Cli) -> Outcome {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Eval { word } => {
            pick(cli.format, &[Format::Json])?;
            let w = parse(word)?;
            let g = try_evaluate(&w)?;
            let length = try_length(g)?;
            let extensions = geodesic_extensions(&w).unwrap_or_default();
            let geodesic = length == w.len() as u64;
            emit(
                out,
                &to_json(&EvalRecord {
                    word: w.to_string(),
                    n: g.n,
                    m: g.m,
                    k: g.k,
                    coords: Coords { n: g.n, m: g.m },
                    area: g.k,
                    length,
                    geodesic,
                    dead_end: geodesic && extensions.is_empty(),
                    extensions: letters(&extensions),
                }),
            )
        }
        Command::Len { n, m, k } => {
            let format = pick(cli.format, &[Format::Words, Format::Json])?;
            let g = GroupElement::new(*n, *m, *k);
            let length = try_length(g)?;
            let text = match format {
                Format::Json => to_json(&json!({
                    "n": n, "m": m, "k": k,
                    "length": length,
                    "dead_end": is_dead_end_element(g),
                })),
                _ => format!("{length}\n"),
            };
            emit(out, &text)
        }
        Command::Geodesic { word } => {
            pick(cli.format, &[Format::Json])?;
            let w = parse(word)?;
            let extensions = geodesic_extensions(&w);
            let geodesic = extensions.is_ok();
            let extensions = extensions.unwrap_or_default();
            emit(
                out,
                &to_json(&GeodesicRecord {
                    word: w.to_string(),
                    geodesic,
                    dead_end: geodesic && extensions.is_empty(),
                    extensions: letters(&extensions),
                }),
            )
        }
        Command::Ball { radius, ceiling } => {
            let format = pick(cli.format, &[Format::Csv, Format::Json])?;
            let limits = Limits {
                ball_radius: *ceiling,
                ..Limits::default()
            };
            let ball = bfs_ball(*radius, &limits)?;
            let text = match format {
                Format::Json => to_json_rows(
                    &ball
                        .sorted_entries()
                        .iter()
                        .map(|(g, d)| json!({"n": g.n, "m": g.m, "k": g.k, "dist": d}))
                        .collect::<Vec<_>>(),
                ),
                _ => ball_csv(&ball),
            };
            emit(out, &text)
        }
        Command::Growth { max, ceiling } => {
            let format = pick(cli.format, &[Format::Csv, Format::Json])?;
            let limits = Limits {
                growth_nmax: *ceiling,
                ..Limits::default()
            };
            let rows = geodesic_growth(*max, &limits)?;
            let text = match format {
                Format::Json => to_json_rows(
                    &rows
                        .iter()
                        .map(|r| json!({"n": r.n, "sphere": r.sphere, "gamma": r.gamma}))
                        .collect::<Vec<_>>(),
                ),
                _ => growth_csv(&rows),
            };
            emit(out, &text)
        }
        Command::Deadends { area, ceiling } => {
            let format = pick(cli.format, &[Format::Words, Format::Json])?;
            let words = generate_dead_end_words(*area, *ceiling)?;
            let text = match format {
                Format::Json => {
                    to_json_rows(&words.iter().map(|w| w.to_string()).collect::<Vec<_>>())
                }
                _ => word_list(&words),
            };
            emit(out, &text)
        }
        Command::Polyominoes { area, ceiling } => {
            let format = pick(cli.format, &[Format::Json, Format::Svg])?;
            let shapes = enumerate_min_perimeter(*area, *ceiling)?;
            match format {
                Format::Svg => {
                    let drawings = shapes
                        .iter()
                        .map(|s| {
                            let ob = OrientedBoundary::all_of(s)?
                                .into_iter()
                                .next()
                                .ok_or(Error::Internal("polyomino without boundary"))?;
                            Ok(polyomino_svg(&ob))
                        })
                        .collect::<heisenberg_core::Result<Vec<_>>>()?;
                    match out {
                        Some(dir) => {
                            fs::create_dir_all(dir)?;
                            for (i, svg) in drawings.iter().enumerate() {
                                fs::write(dir.join(format!("polyomino-{area}-{i:03}.svg")), svg)?;
                            }
                            Ok(())
                        }
                        None => emit(None, &drawings.concat()),
                    }
                }
                _ => {
                    let records: Vec<PolyominoRecord> =
                        shapes.iter().map(PolyominoRecord::from).collect();
                    emit(out, &to_json_rows(&records))
                }
            }
        }
        Command::Complete { word, max_area } => {
            let format = pick(cli.format, &[Format::Words, Format::Json])?;
            let w = parse(word)?;
            let c = extend_to_dead_end(&w, *max_area)?;
            let text = match format {
                Format::Json => to_json(&json!({
                    "word": w.to_string(),
                    "completion": c.word.to_string(),
                    "area": c.area,
                    "length": c.word.len(),
                })),
                _ => format!("{}\n", c.word),
            };
            emit(out, &text)
        }
        Command::Verify { suite } => verify(
            suite,
            pick(cli.format, &[Format::Words, Format::Json])?,
            out,
        ),
    }
}

fn verify(suite: &str, format: Format, out: Option<&Path>) -> Outcome {
    let ids: Vec<u8> = if suite == "all" {
        CRITERIA.iter().map(|c| c.0).collect()
    } else {
        match suite.parse::<u8>() {
            Ok(id) if CRITERIA.iter().any(|c| c.0 == id) => vec![id],
            _ => {
                return Err(Failure::Usage(format!(
                    "unknown suite {suite:?}: use `all` or 1-11"
                )))
            }
        }
    };
    let mut reports: Vec<CriterionReport> = Vec::new();
    for id in ids {
        let report = run_criterion(id)?;
        if format == Format::Words && out.is_none() {
            println!("{report}");
        }
        reports.push(report);
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let summary = format!("{passed}/{} criteria passed", reports.len());
    match format {
        Format::Json => emit(
            out,
            &to_json_rows(
                &reports
                    .iter()
                    .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
                    .collect::<Vec<_>>(),
            ),
        )?,
        _ => match out {
            Some(_) => {
                let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
                text.push_str(&summary);
                text.push('\n');
                emit(out, &text)?;
            }
            None => println!("{summary}"),
        },
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
