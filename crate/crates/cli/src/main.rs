//! Command line front end: generate tilings from triples, verify tiling
//! files, convert between the combinatorial models, enumerate desk-scale
//! families and render tiling windows.
//!
//! Exit codes: 0 success, 2 parse error, 3 invalid triple, 4 validation
//! failure, 5 unsupported conversion, 6 enumeration bound exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use friezetile::embedding::{merge_into_common_polygon, polygons_from_triple};
use friezetile::enumerate::{
    enumerate_quiddities, enumerate_s_matrices, enumerate_triangulations, enumerate_triples,
    quiddity_classes,
};
use friezetile::farey::polygon_quiddity;
use friezetile::frieze::{
    frieze_from_quiddity, polygon_from_quiddity, quiddity_from_triangulation,
    triangulation_from_quiddity,
};
use friezetile::tiling::{tiling_from_triple, triple_from_tiling};
use friezetile::{Error, FareyPolygon, FriezePattern, Quiddity, SL2Tiling, Triangulation, Triple};

#[derive(Parser)]
#[command(
    name = "friezetile",
    version,
    about = "Exact-integer friezes, SL2-tilings and Farey polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the positive-window tiling of a triple file (q / q' / a b c d).
    Generate {
        /// Triple file: two quiddity lines and one matrix line.
        triple: PathBuf,
        /// Write the tiling file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the signed (2m)x(2n) window.
        #[arg(long)]
        render: bool,
    },
    /// Validate a tiling file and recover its triple.
    Verify {
        /// Tiling file: "m n" header and m rows of n positive integers.
        tiling: PathBuf,
    },
    /// Convert between quiddity, triangulation, frieze, polygon, triple,
    /// polygon-pair and merged-ngon.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Input: a file path, or the literal text of the object.
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream a desk-scale family, one object per line.
    Enumerate {
        #[arg(value_enum)]
        kind: Family,
        /// Polygon/quiddity order n.
        #[arg(short = 'n', long)]
        order: Option<usize>,
        /// Second quiddity order m (triples only).
        #[arg(short = 'm', long)]
        row_order: Option<usize>,
        /// Entry bound for matrices.
        #[arg(long)]
        bound: Option<u64>,
        /// Print only the number of objects.
        #[arg(long)]
        count_only: bool,
        /// Group quiddities into cyclic classes.
        #[arg(long)]
        classes: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the signed (2m)x(2n) window of a tiling file.
    Render { tiling: PathBuf },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Quiddity,
    Triangulation,
    Frieze,
    Polygon,
    Triple,
    PolygonPair,
    MergedNgon,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Triangulations,
    Quiddities,
    SMatrices,
    Triples,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse { .. } | Error::NonCanonicalFraction(_) => 2,
            Error::InvalidTriple(_) => 3,
            Error::BoundExceeded { .. } => 6,
            _ => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            triple,
            out,
            render,
        } => generate(&triple, out.as_deref(), render),
        Command::Verify { tiling } => verify(&tiling),
        Command::Convert {
            from,
            to,
            input,
            out,
        } => convert(from, to, &input, out.as_deref()),
        Command::Enumerate {
            kind,
            order,
            row_order,
            bound,
            count_only,
            classes,
            out,
        } => enumerate(
            kind,
            order,
            row_order,
            bound,
            count_only,
            classes,
            out.as_deref(),
        ),
        Command::Render { tiling } => {
            let t = read_tiling(&tiling)?;
            print!("{}", t.render_window());
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure {
            code: 2,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_tiling(path: &Path) -> Result<SL2Tiling, Failure> {
    Ok(SL2Tiling::from_file_str(&read_file(path)?)?)
}

fn generate(triple_path: &Path, out: Option<&Path>, render: bool) -> Result<(), Failure> {
    let triple = Triple::from_file_str(&read_file(triple_path)?)?;
    let tiling = tiling_from_triple(&triple)?;
    write_output(out, &tiling.to_file_string())?;
    if render {
        print!("{}", tiling.render_window());
    }
    Ok(())
}

fn verify(tiling_path: &Path) -> Result<(), Failure> {
    let tiling = read_tiling(tiling_path)?;
    let report = tiling.validate();
    println!("{report}");
    if !report.all_pass() {
        return Err(Failure {
            code: 4,
            message: "tiling failed validation".into(),
        });
    }
    let triple = triple_from_tiling(&tiling)?;
    print!("{}", triple.to_file_string());
    Ok(())
}

/// Input arguments may be file paths or literal object text.
fn read_input(input: &str) -> Result<String, Failure> {
    if Path::new(input).is_file() {
        read_file(Path::new(input))
    } else {
        Ok(input.to_string())
    }
}

fn convert(from: Kind, to: Kind, input: &str, out: Option<&Path>) -> Result<(), Failure> {
    let text = read_input(input)?;
    let unsupported = || Failure {
        code: 5,
        message: "unsupported conversion pair".into(),
    };

    // The combinatorial kinds all pass through their common quiddity.
    let quiddity: Option<Quiddity> = match from {
        Kind::Quiddity => Some(text.trim().parse()?),
        Kind::Triangulation => {
            let t: Triangulation = text.trim().parse()?;
            Some(quiddity_from_triangulation(&t))
        }
        Kind::Polygon => {
            let p: FareyPolygon = text.trim().parse()?;
            Some(polygon_quiddity(&p))
        }
        Kind::Frieze => Some(FriezePattern::parse_staircase(&text)?.quiddity()),
        Kind::Triple | Kind::PolygonPair | Kind::MergedNgon => None,
    };

    let rendered = match (quiddity, from, to) {
        (Some(_), f, t) if f == t => return Err(unsupported()),
        (Some(q), _, Kind::Quiddity) => format!("{q}\n"),
        (Some(q), _, Kind::Triangulation) => format!("{}\n", triangulation_from_quiddity(&q)?),
        (Some(q), _, Kind::Frieze) => frieze_from_quiddity(&q)?.staircase(),
        (Some(q), _, Kind::Polygon) => format!("{}\n", polygon_from_quiddity(&q)?),
        (None, Kind::Triple, Kind::PolygonPair) => {
            let triple = Triple::from_file_str(&text)?;
            let pair = polygons_from_triple(&triple)?;
            format!("v: {}\nv': {}\n", pair.ngon(), pair.mgon())
        }
        (None, Kind::Triple, Kind::MergedNgon) => {
            let triple = Triple::from_file_str(&text)?;
            let pair = polygons_from_triple(&triple)?;
            format!("N: {}\n", merge_into_common_polygon(&pair))
        }
        _ => return Err(unsupported()),
    };
    write_output(out, &rendered)
}

fn enumerate(
    kind: Family,
    order: Option<usize>,
    row_order: Option<usize>,
    bound: Option<u64>,
    count_only: bool,
    classes: bool,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let need_order = || {
        order.ok_or(Failure {
            code: 2,
            message: "missing --order".into(),
        })
    };
    let need_bound = || {
        bound.ok_or(Failure {
            code: 2,
            message: "missing --bound".into(),
        })
    };

    let lines: Vec<String> = match kind {
        Family::Triangulations => enumerate_triangulations(need_order()?)?
            .iter()
            .map(|t| t.to_string())
            .collect(),
        Family::Quiddities => {
            if classes {
                quiddity_classes(need_order()?)?
                    .iter()
                    .map(|c| c.representative.to_string())
                    .collect()
            } else {
                enumerate_quiddities(need_order()?)?
                    .iter()
                    .map(|q| q.to_string())
                    .collect()
            }
        }
        Family::SMatrices => enumerate_s_matrices(need_bound()?)?
            .iter()
            .map(|m| m.to_string())
            .collect(),
        Family::Triples => {
            let n = need_order()?;
            let m = row_order.unwrap_or(n);
            enumerate_triples(n, m, need_bound()?)?
                .map(|t| t.to_line())
                .collect()
        }
    };

    let content = if count_only {
        format!("{}\n", lines.len())
    } else {
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        body
    };
    write_output(out, &content)
}
