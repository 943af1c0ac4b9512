//! The `lfec` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! requested property fails (a coloring with violations, no coloring within
//! the bound, an unexplained audit), and 2 for usage, I/O and parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use lfec_core::discharge::{apply_rules, audit};
use lfec_core::exact::{default_kmax, SolveError, MAX_K};
use lfec_core::facial::{verify, FacialError};
use lfec_core::generate::{generate, GeneratorSpec};
use lfec_core::reduce::{construct_7_coloring, K, L};
use lfec_core::PlaneGraph;

use crate::format::{parse_col, parse_pg, serialize_col, serialize_pg, InFile};
use crate::report::{audit_text, trace_text, violation_line};
use crate::solve::min_colors_parallel;

#[derive(Debug, Parser)]
#[command(name = "lfec", version, about = "Facial edge colorings of plane graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated plane graph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Size parameter: cycle length, rim or prism size, or the number of
        /// vertices of the random triangulation.
        #[arg(long)]
        n: Option<usize>,
        /// Facial distance parameter of `tight-family` and `subdivided-k4`.
        #[arg(long = "l")]
        l: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print the exact ℓ-facial chromatic index.
    Solve {
        #[arg(long = "l", value_parser = clap::value_parser!(u16).range(1..))]
        l: u16,
        /// Largest palette tried; defaults to 3ℓ+3.
        #[arg(long = "max-colors")]
        max_colors: Option<usize>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Also write an optimal coloring here.
        #[arg(long)]
        witness: Option<PathBuf>,
        input: PathBuf,
    },
    /// Check a coloring and list every violating pair.
    Verify {
        #[arg(long = "l", value_parser = clap::value_parser!(u16).range(1..))]
        l: u16,
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Build a 2-facial edge coloring with at most 7 colors by reductions.
    Construct {
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Run the discharging rules and report the final charges.
    Audit {
        input: PathBuf,
        /// List every transfer.
        #[arg(long)]
        log: bool,
    },
    /// Write the medial graph.
    Medial {
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Wheel,
    Prism,
    Cube,
    Dodecahedron,
    Octahedron,
    TightFamily,
    SubdividedK4,
    RandomPlanar,
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<(), Failure>;

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "lfec: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen { family, n, l, seed, output } => gen(family, n, l, seed, output.as_deref(), out),
        Command::Solve { l, max_colors, jobs, witness, input } => {
            solve(&input, l as usize, max_colors, jobs as usize, witness.as_deref(), out)
        }
        Command::Verify { l, graph, coloring } => verify_cmd(&graph, &coloring, l as usize, out),
        Command::Construct { input, output, trace } => construct(&input, &output, trace.as_deref(), out),
        Command::Audit { input, log } => audit_cmd(&input, log, out),
        Command::Medial { input, output } => {
            let g = read_graph(&input)?;
            let m = g.medial_graph().map_err(|e| Failure::Domain(e.to_string()))?;
            write_file(&output, &serialize_pg(&m))
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<PlaneGraph, Failure> {
    let text = read(path)?;
    parse_pg(&text).map_err(|e| Failure::Usage(InFile(&path.display().to_string(), &e).to_string()))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("standard output: {e}")))
}

fn gen(
    family: Family,
    n: Option<usize>,
    l: Option<usize>,
    seed: u64,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let need = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| Failure::Usage(format!("--family {} needs {flag}", name(family))))
    };
    let spec = match family {
        Family::Cycle => GeneratorSpec::Cycle(need(n, "--n")?),
        Family::Wheel => GeneratorSpec::Wheel(need(n, "--n")?),
        Family::Prism => GeneratorSpec::Prism(need(n, "--n")?),
        Family::Cube => GeneratorSpec::Cube,
        Family::Dodecahedron => GeneratorSpec::Dodecahedron,
        Family::Octahedron => GeneratorSpec::Octahedron,
        Family::TightFamily => GeneratorSpec::TightFamily(need(l, "--l")?),
        Family::SubdividedK4 => GeneratorSpec::SubdividedK4(need(l, "--l")?),
        Family::RandomPlanar => GeneratorSpec::RandomPlanar { vertices: need(n, "--n")?, seed },
    };
    let g = generate(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
    let text = serialize_pg(&g);
    match output {
        Some(path) => write_file(path, &text),
        None => emit(out, &text),
    }
}

fn name(family: Family) -> String {
    family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn solve(
    input: &Path,
    l: usize,
    max_colors: Option<usize>,
    jobs: usize,
    witness: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let kmax = max_colors.unwrap_or_else(|| default_kmax(l));
    if kmax > MAX_K {
        return Err(Failure::Usage(format!("--max-colors {kmax} is above {MAX_K}")));
    }
    let g = read_graph(input)?;
    match min_colors_parallel(&g, l, kmax, jobs) {
        Ok(report) => {
            if let Some(path) = witness {
                write_file(path, &serialize_col(&report.witness))?;
            }
            emit(out, &format!("chi={}\n", report.chi))
        }
        Err(SolveError::AboveBound { kmax, .. }) => {
            emit(out, &format!("chi>{kmax}\n"))?;
            Err(Failure::Domain(format!("no {l}-facial edge coloring with at most {kmax} colors")))
        }
        Err(e) => Err(Failure::Domain(e.to_string())),
    }
}

fn verify_cmd(graph: &Path, coloring: &Path, l: usize, out: &mut dyn Write) -> Outcome {
    let g = read_graph(graph)?;
    let text = read(coloring)?;
    let phi = parse_col(&text, g.num_edges())
        .map_err(|e| Failure::Usage(InFile(&coloring.display().to_string(), &e).to_string()))?;
    let violations = verify(&g, l, &phi).map_err(|e| match e {
        FacialError::Uncolored(_) => Failure::Domain(format!("coloring is not total: {e}")),
        other => Failure::Domain(other.to_string()),
    })?;
    if violations.is_empty() {
        return emit(out, "ok\n");
    }
    let mut text = String::new();
    for v in &violations {
        text.push_str(&violation_line(v));
        text.push('\n');
    }
    text.push_str(&format!("violations {}\n", violations.len()));
    emit(out, &text)?;
    Err(Failure::Domain(format!("{} violating pairs", violations.len())))
}

fn construct(input: &Path, output: &Path, trace: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let g = read_graph(input)?;
    let c = construct_7_coloring(&g).map_err(|e| Failure::Domain(e.to_string()))?;
    let bad = verify(&g, L, &c.coloring).map_err(|e| Failure::Domain(e.to_string()))?;
    if !bad.is_empty() || c.coloring.k > K {
        return Err(Failure::Domain(format!("constructed coloring fails verification with {} violations", bad.len())));
    }
    write_file(output, &serialize_col(&c.coloring))?;
    if let Some(path) = trace {
        write_file(path, &trace_text(&c))?;
    }
    emit(out, &format!("colors={} steps={} detect-gaps={}\n", c.coloring.colors_used(), c.steps, c.detect_gaps))
}

fn audit_cmd(input: &Path, log: bool, out: &mut dyn Write) -> Outcome {
    let g = read_graph(input)?;
    let a = audit(&g);
    let transfers = log.then(|| apply_rules(&g).1);
    emit(out, &audit_text(&a, transfers.as_ref()))?;
    if a.final_total != a.initial_total {
        return Err(Failure::Domain("charge is not conserved".into()));
    }
    if a.is_unexplained() && g.num_edges() > 12 {
        return Err(Failure::Domain("negative charge with no reducible configuration".into()));
    }
    Ok(())
}
