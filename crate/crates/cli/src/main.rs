//! `pvgtool`: build point visibility graphs, decide small colourability
//! questions exactly, run the 3-SAT embedding and render SVG.
//!
//! Exit codes: 0 yes / success, 1 no, 2 error.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pvg_colour::example_g6::{build_g6, verify_g6};
use pvg_colour::four_colour::decide_four_colouring;
use pvg_colour::geometry::{build_pvg, format_point_set, parse_point_set, PointSet};
use pvg_colour::graph::{chromatic_number, clique_number, is_valid_colouring, Budget, Colouring};
use pvg_colour::layout::metadata_json;
use pvg_colour::sat_reduction::{build_zeta, parse_dimacs, verify_reduction};
use pvg_colour::svg::render_svg;
use pvg_colour::three_colour::{three_colourable, two_colourable};

#[derive(Parser)]
#[command(name = "pvgtool", version, about = "Exact point visibility graph colouring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the visibility graph of a point set.
    Pvg { points: PathBuf },
    /// Decide k-colourability for k in {2, 3, 4} and print a colouring.
    Colour {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        k: u8,
        points: PathBuf,
        /// Write the colouring here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact chromatic and clique numbers by exhaustive search.
    Chromatic {
        points: PathBuf,
        /// Refuse inputs with more points than this.
        #[arg(long, default_value_t = 25)]
        max_n: usize,
    },
    /// Embed a 3-CNF formula as a point set on three lines.
    ReduceSat {
        cnf: PathBuf,
        #[arg(long)]
        out_points: PathBuf,
        #[arg(long)]
        out_meta: PathBuf,
        /// Check the embedding and print the report; exit 1 unless the
        /// formula, the outer 3-colouring and the 5-colouring all agree.
        #[arg(long)]
        verify: bool,
        /// Node limit for exact colouring searches.
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Build the example with clique number 4 and chromatic number 6.
    ExampleG6 {
        #[arg(long)]
        out_points: PathBuf,
        #[arg(long)]
        out_meta: PathBuf,
        /// Verify both numbers and print the report; exit 1 if either
        /// differs.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Exit 0 iff the colouring is proper.
    Verify { points: PathBuf, colouring: PathBuf },
    /// Render points, visibility edges and an optional colouring.
    Svg {
        points: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print distinct random points from a square lattice.
    RandomPoints {
        #[arg(long)]
        n: usize,
        /// Coordinates range over 0..side.
        #[arg(long)]
        side: i64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] pvg_colour::Error),
    #[error("IoError: {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("UsageError: {0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_points(path: &Path) -> CliResult<PointSet> {
    Ok(parse_point_set(&read(path)?)?)
}

fn budget(max_nodes: Option<u64>) -> Budget {
    max_nodes.map_or(Budget::UNLIMITED, Budget::nodes)
}

fn verdict(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Pvg { points } => {
            let ps = load_points(&points)?;
            print!("{}", build_pvg(&ps).to_graph_file());
            Ok(ExitCode::SUCCESS)
        }
        Command::Colour { k, points, out } => {
            let ps = load_points(&points)?;
            let found = match k {
                2 => two_colourable(&ps),
                3 => three_colourable(&ps)?,
                _ => decide_four_colouring(&ps)?,
            };
            let Some(c) = found else {
                println!("NO");
                return Ok(ExitCode::from(1));
            };
            match out {
                Some(path) => write(&path, &c.to_file())?,
                None => print!("{}", c.to_file()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chromatic { points, max_n } => {
            let ps = load_points(&points)?;
            if ps.len() > max_n {
                return Err(CliError::Usage(format!(
                    "{} points exceed --max-n {max_n}",
                    ps.len()
                )));
            }
            let g = build_pvg(&ps);
            println!("chromatic {}", chromatic_number(&g, Budget::UNLIMITED)?);
            println!("clique {}", clique_number(&g, Budget::UNLIMITED)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::ReduceSat {
            cnf,
            out_points,
            out_meta,
            verify,
            max_nodes,
        } => {
            let f = parse_dimacs(&read(&cnf)?)?;
            let z = build_zeta(&f)?;
            write(&out_points, &format_point_set(&z.points))?;
            write(&out_meta, &metadata_json(&z.metadata()))?;
            if !verify {
                return Ok(ExitCode::SUCCESS);
            }
            let report = verify_reduction(&f, &z, budget(max_nodes))?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            Ok(verdict(report.equivalent && report.matches_xi))
        }
        Command::ExampleG6 {
            out_points,
            out_meta,
            verify,
            max_nodes,
        } => {
            let e = build_g6()?;
            write(&out_points, &format_point_set(&e.points))?;
            write(&out_meta, &metadata_json(&e.metadata()))?;
            if !verify {
                return Ok(ExitCode::SUCCESS);
            }
            let report = verify_g6(&e, budget(max_nodes))?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            Ok(verdict(report.clique_number == 4 && report.chromatic_number == 6 && report.colouring.is_some()))
        }
        Command::Verify { points, colouring } => {
            let ps = load_points(&points)?;
            let c = Colouring::parse_file(&read(&colouring)?)?;
            let valid = is_valid_colouring(&build_pvg(&ps), &c)?;
            println!("{}", if valid { "VALID" } else { "INVALID" });
            Ok(verdict(valid))
        }
        Command::Svg { points, colouring, out } => {
            let ps = load_points(&points)?;
            let g = build_pvg(&ps);
            let c = colouring.map(|p| read(&p)).transpose()?;
            let c = c.map(|text| Colouring::parse_file(&text)).transpose()?;
            if let Some(c) = &c {
                if c.len() != ps.len() {
                    return Err(pvg_colour::Error::SizeMismatch {
                        graph: ps.len(),
                        colouring: c.len(),
                    }
                    .into());
                }
            }
            write(&out, &render_svg(&ps, &g, c.as_ref()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::RandomPoints { n, side, seed } => {
            if side <= 0 || (n as u128) > (side as u128).pow(2) {
                return Err(CliError::Usage(format!("{n} distinct points do not fit in a {side}x{side} lattice")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen = BTreeSet::new();
            let mut order = Vec::with_capacity(n);
            while order.len() < n {
                let p = (rng.gen_range(0..side), rng.gen_range(0..side));
                if chosen.insert(p) {
                    order.push(p);
                }
            }
            print!("{}", format_point_set(&PointSet::from_ints(&order)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
