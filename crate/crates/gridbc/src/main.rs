use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use gridbc::format::{cover_to_json, read_cover, write_cover, FormatError};
use gridbc::report::{analyze, AnalysisJson, NormalizedJson, VerifyJson};
use gridbc::solve::solve_with_budget;
use gridbc::svg::render_svg;
use gridbc::table::bc_table;
use gridbc::{bc_line, format};
use gridbc_core::theory::{branch, Branch};
use gridbc_core::{checkerboard_cover, normalize_cover, optimal_cover, verify_cover, Cover, Grid, SolveOutcome};

#[derive(Parser)]
#[command(name = "gridbc", version, about = "Biclique covers of grid graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Smallest known cover (same as optimal, without the fallback note).
    Auto,
    Checkerboard,
    Optimal,
}

#[derive(Subcommand)]
enum Command {
    /// Print the biclique covering number of the p x q grid.
    Bc { p: u32, q: u32 },
    /// Build a cover and write it as JSON.
    Cover {
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a cover file.
    Verify {
        file: PathBuf,
        /// Also normalize the boundary stars.
        #[arg(long)]
        normalize: bool,
        /// Also report fences, links and staircases of the normalized cover.
        #[arg(long)]
        analyze: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute the covering number by exhaustive search.
    Solve {
        p: u32,
        q: u32,
        /// Give up after this many seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV of covering numbers for p ≤ pmax, p ≤ q ≤ qmax.
    Table { pmax: u32, qmax: u32 },
    /// Draw a cover file as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1.
    Semantic(String),
    /// Exit 2.
    Usage(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn grid(p: u32, q: u32) -> Result<Grid, Failure> {
    Grid::new(p, q).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_cover(p: u32, q: u32, method: Method, out: Option<PathBuf>) -> Result<(), Failure> {
    let g = grid(p, q)?;
    let cover = if g.edge_count() == 0 {
        Cover::empty(g.dims())
    } else {
        match method {
            Method::Checkerboard => checkerboard_cover(p, q),
            Method::Auto => optimal_cover(p, q),
            Method::Optimal => {
                if branch(p, q) == Branch::Floor {
                    eprintln!("note: {p}x{q} is on the floor branch; the checkerboard cover is optimal");
                }
                optimal_cover(p, q)
            }
        }
        .map_err(|e| Failure::Semantic(e.to_string()))?
    };
    let report = verify_cover(&g, &cover);
    if !report.valid {
        return Err(Failure::Semantic(format!("internal error: constructed cover of {p}x{q} is invalid")));
    }
    let text = cover_to_json(&cover);
    if format::cover_from_json(&text).ok().as_ref() != Some(&cover) {
        return Err(Failure::Semantic("internal error: cover file does not read back".into()));
    }
    emit(&text, out.as_ref())
}

fn cmd_verify(file: PathBuf, normalize: bool, analyze_cover: bool, json: bool) -> Result<(), Failure> {
    let cover = read_cover(&file)?;
    let g = Grid::from_dims(cover.dims());
    let report = verify_cover(&g, &cover);
    let mut out = VerifyJson::new(&report);
    let mut lines = Vec::new();
    if report.valid {
        lines.push(format!("valid, size {}, waste {}", report.size, report.waste));
    } else {
        lines.push(format!(
            "invalid, size {}: {} uncovered edge(s), {} element(s) outside the grid",
            report.size,
            report.uncovered.len(),
            report.invalid_elements.len()
        ));
    }
    if report.valid && normalize {
        match normalize_cover(&g, &gridbc_core::maximalize(&g, &cover)) {
            Ok(n) => {
                lines.push(format!(
                    "normalized: {} rewrite(s), size {}, padded {}, dropped {}",
                    n.steps.len(),
                    n.cover.len(),
                    n.padded,
                    n.dropped
                ));
                out.normalized = Some(NormalizedJson::new(&n));
            }
            Err(e) => lines.push(format!("normalize: {e}")),
        }
    }
    if report.valid && analyze_cover {
        match analyze(&g, &cover) {
            Ok(a) => {
                let j = AnalysisJson::new(&g, &a);
                let sizes: Vec<String> = j.b.iter().map(|(i, n)| format!("{n}x{i}")).collect();
                lines.push(format!(
                    "fences: {} [{}], max size {}, beta {}, corners {}",
                    j.fences.len(),
                    sizes.join(" "),
                    a.boundary.max_fence_size(),
                    j.beta,
                    j.c
                ));
                lines.push(format!(
                    "staircases: {}, pyramids {}, double staircases {}, unclassified {}",
                    j.staircases.len(),
                    j.n,
                    j.m,
                    j.unclassified.len()
                ));
                lines.push(format!("w = tau + n + m: {}", if j.waste_matches { "yes" } else { "no" }));
                match &j.identity {
                    Ok(w) => lines.push(format!(
                        "w >= beta + tau: {}, boundary identity: {}",
                        if w.inequality_holds { "yes" } else { "no" },
                        if w.identity_holds { "holds" } else { "fails" }
                    )),
                    Err(e) => lines.push(format!("boundary identity: {e}")),
                }
                out.analysis = Some(j);
            }
            Err(e) => lines.push(format!("analyze: {e}")),
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&out).expect("plain data serializes"));
    } else {
        for l in &lines {
            println!("{l}");
        }
    }
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Semantic(String::new()))
    }
}

fn cmd_solve(p: u32, q: u32, budget: Option<f64>, out: Option<PathBuf>) -> Result<(), Failure> {
    let g = grid(p, q)?;
    let budget = match budget {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure::Usage(format!("invalid budget {s}"))),
        None => None,
    };
    match solve_with_budget(&g, budget) {
        SolveOutcome::Optimal { size, witness, .. } => {
            println!("{size}");
            if let Some(path) = out {
                write_cover(&path, &witness)?;
            }
            Ok(())
        }
        SolveOutcome::Incomplete { lower, upper, best, .. } => {
            let ub = upper.map_or("?".to_string(), |u| u.to_string());
            println!("incomplete [{lower}, {ub}]");
            if let (Some(path), Some(best)) = (out, best) {
                write_cover(&path, &best)?;
            }
            Err(Failure::Semantic(String::new()))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Bc { p, q } => {
            println!("{}", bc_line(grid(p, q)?.dims()));
            Ok(())
        }
        Command::Cover { p, q, method, out } => cmd_cover(p, q, method, out),
        Command::Verify { file, normalize, analyze, json } => cmd_verify(file, normalize, analyze, json),
        Command::Solve { p, q, budget, out } => cmd_solve(p, q, budget, out),
        Command::Table { pmax, qmax } => {
            print!("{}", bc_table(pmax, qmax));
            Ok(())
        }
        Command::Render { file, svg } => {
            let cover = read_cover(&file)?;
            emit(&render_svg(&cover), svg.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
