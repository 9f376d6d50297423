//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::{self, IsTerminal, Write};

use chord_census::counting::{d_double_star, d_n_class, d_o, d_star, double_factorial, factorial};
use chord_census::{
    build_table, surface_type, trace_cycles, BigUint, ColorDiagram, DiagramClass, Enumerator, Error, Gluing,
    Progress, Symmetry,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::render::render_svg;
use crate::verify::{verify, Mutation};

pub const DEFAULT_BUDGET: u64 = 40_000_000;

#[derive(Debug, Parser)]
#[command(name = "chord-census", version, about = "Exact counts and brute-force census of color chord diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; svg is only accepted by `render`.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Largest number of gluings a brute-force scan may visit.
    #[arg(
        long,
        global = true,
        env = "CHORD_CENSUS_BUDGET",
        default_value_t = DEFAULT_BUDGET,
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub budget: u64,
    /// Worker threads for brute force (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    O,
    N,
}

impl From<ClassArg> for DiagramClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::All => DiagramClass::All,
            ClassArg::O => DiagramClass::O,
            ClassArg::N => DiagramClass::N,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of non-isomorphic diagrams from the closed forms.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        /// Count uncolored diagrams (all 2n rotations); needs --class all.
        #[arg(long)]
        uncolored: bool,
    },
    /// Table of totals and orbit counts over a range of n.
    Table {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
    },
    /// Streams every gluing of a class in lexicographic order.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
    },
    /// Brute-force orbit census.
    Orbits {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        /// List each orbit's least member with its size and stabilizer.
        #[arg(long)]
        orbit_reps: bool,
        /// Use all 2n rotations (uncolored diagrams); needs --class all.
        #[arg(long)]
        uncolored: bool,
        /// Report progress per shard on stderr even when it is not a terminal.
        #[arg(long)]
        progress: bool,
    },
    /// Boundary cycles and surface type of a gluing.
    Cycles { gluing: String },
    /// Least member of the gluing's isomorphism class.
    Canon { gluing: String },
    /// Whether two gluings give isomorphic color diagrams.
    Iso { left: String, right: String },
    /// O or N.
    Classify { gluing: String },
    /// Checks every closed form against brute force.
    Verify {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        from: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        to: u64,
        #[arg(long, value_enum, hide = true)]
        mutate: Option<Mutation>,
    },
    /// SVG drawing of a gluing.
    Render { gluing: String },
}

/// A failed run: message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. }
            | Error::DivisibilityViolation { .. }
            | Error::ThreadPool(_)
            | Error::InconsistentTopology(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        // a closed pipe (`| head`) ends the output early, it is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure { code: 0, message: String::new() };
        }
        Failure { code: 1, message: e.to_string() }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` and runs the command, writing to `out`. Returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code() as u8;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(f) if f.message.is_empty() => f.code,
        Err(f) => {
            eprintln!("chord-census: {}", f.message);
            f.code
        }
    }
}

fn parse(text: &str) -> std::result::Result<ColorDiagram, Failure> {
    text.parse::<ColorDiagram>().map_err(|e| Failure::usage(format!("invalid gluing {text:?}: {e}")))
}

/// Stable key order: round-trip through a map-backed value.
fn json_text<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    serde_json::to_string_pretty(&v).expect("serializable output")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable output");
    serde_json::to_string(&v).expect("serializable output")
}

fn to_usize(v: u64) -> std::result::Result<usize, Failure> {
    usize::try_from(v).map_err(|_| Failure::usage(format!("{v} is too large")))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let g = &cli.global;
    let format = g.format;
    let is_render = matches!(cli.command, Command::Render { .. });
    if format == Some(Format::Svg) && !is_render {
        return Err(Failure::usage("--format svg is only valid for render"));
    }
    if is_render && !matches!(format, None | Some(Format::Svg)) {
        return Err(Failure::usage("render only produces svg"));
    }
    let csv_ok = matches!(cli.command, Command::Table { .. });
    if format == Some(Format::Csv) && !csv_ok {
        return Err(Failure::usage("--format csv is only valid for table"));
    }
    let json = format == Some(Format::Json);
    let enumerator = Enumerator::new()
        .with_budget(g.budget)
        .with_workers(g.workers.map(to_usize).transpose()?);

    match &cli.command {
        Command::Count { n, class, uncolored } => count(out, to_usize(*n)?, (*class).into(), *uncolored, json),
        Command::Table { from, to } => {
            let table = build_table(to_usize(*from)?, to_usize(*to)?)?;
            match format {
                Some(Format::Csv) => write!(out, "{}", table.to_csv())?,
                Some(Format::Json) => writeln!(out, "{}", json_text(&table))?,
                _ => write_table_text(out, &table)?,
            }
            Ok(())
        }
        Command::Enumerate { n, class } => enumerate(out, &enumerator, to_usize(*n)?, (*class).into(), json),
        Command::Orbits { n, class, orbit_reps, uncolored, progress } => {
            let n = to_usize(*n)?;
            let class: DiagramClass = (*class).into();
            if *uncolored && class != DiagramClass::All {
                return Err(Failure::usage("--uncolored needs --class all"));
            }
            let symmetry = if *uncolored { Symmetry::Full } else { Symmetry::Even };
            let report = *progress || io::stderr().is_terminal();
            let tick = |p: Progress| {
                if report {
                    eprintln!(
                        "shard {}/{}: {} gluings, {} orbits so far",
                        p.shards_done, p.shards_total, p.processed, p.orbits
                    );
                }
            };
            let census = enumerator.census(n, class, symmetry, *orbit_reps, &tick)?;
            if json {
                writeln!(out, "{}", json_text(&census))?;
            } else {
                writeln!(
                    out,
                    "n={} class={} symmetry={} orbits={} gluings={}",
                    census.n,
                    census.class,
                    if *uncolored { "full" } else { "even" },
                    census.orbit_count,
                    census.total_gluings
                )?;
                for orbit in census.orbits.iter().flatten() {
                    writeln!(out, "{} size={} stabilizer={}", orbit.representative, orbit.size, orbit.stabilizer)?;
                }
            }
            Ok(())
        }
        Command::Cycles { gluing } => cycles(out, &parse(gluing)?, json),
        Command::Canon { gluing } => {
            let d = parse(gluing)?;
            let canon = d.canonical_form();
            if json {
                #[derive(Serialize)]
                struct Canon<'a> {
                    input: &'a Gluing,
                    canonical: &'a Gluing,
                    stabilizer: usize,
                    orbit_size: usize,
                }
                let stabilizer = d.stabilizer_order();
                let report = Canon {
                    input: d.gluing(),
                    canonical: &canon,
                    stabilizer,
                    orbit_size: d.n() / stabilizer,
                };
                writeln!(out, "{}", json_text(&report))?;
            } else {
                writeln!(out, "{canon}")?;
            }
            Ok(())
        }
        Command::Iso { left, right } => {
            let (a, b) = (parse(left)?, parse(right)?);
            let iso = a.n() == b.n() && a.isomorphic(&b)?;
            if json {
                writeln!(out, "{}", json_text(&serde_json::json!({ "isomorphic": iso })))?;
            } else {
                writeln!(out, "{iso}")?;
            }
            Ok(())
        }
        Command::Classify { gluing } => {
            let d = parse(gluing)?;
            let class = d.classify();
            if json {
                let report = serde_json::json!({
                    "gluing": d.gluing(),
                    "class": class,
                    "orientable": class == DiagramClass::O,
                });
                writeln!(out, "{}", json_text(&report))?;
            } else {
                writeln!(out, "{class}")?;
            }
            Ok(())
        }
        Command::Verify { from, to, mutate } => {
            let (from, to) = (to_usize(*from)?, to_usize(*to)?);
            let report = verify(enumerator, from, to, *mutate)?;
            if json {
                writeln!(out, "{}", json_text(&report))?;
            } else {
                for c in &report.checks {
                    writeln!(
                        out,
                        "{} n={} {} formula={} brute_force={}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.n,
                        c.name,
                        c.formula,
                        c.brute_force
                    )?;
                }
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                writeln!(out, "verify n={from}..{to}: {} checks, {failed} failed", report.checks.len())?;
            }
            out.flush()?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure { code: 1, message: String::new() })
            }
        }
        Command::Render { gluing } => {
            write!(out, "{}", render_svg(&parse(gluing)?))?;
            Ok(())
        }
    }
}

fn count(out: &mut dyn Write, n: usize, class: DiagramClass, uncolored: bool, json: bool) -> Outcome {
    if uncolored && class != DiagramClass::All {
        return Err(Failure::usage("--uncolored needs --class all"));
    }
    let value = if uncolored {
        d_star(n)?
    } else {
        match class {
            DiagramClass::All => d_double_star(n)?,
            DiagramClass::O => d_o(n)?,
            DiagramClass::N => d_n_class(n)?,
        }
    };
    let symmetry = if uncolored { "full" } else { "even" };
    if json {
        #[derive(Serialize)]
        struct Count<'a> {
            n: usize,
            class: DiagramClass,
            symmetry: &'a str,
            #[serde(serialize_with = "chord_census::serde_big::serialize")]
            count: BigUint,
        }
        writeln!(out, "{}", json_text(&Count { n, class, symmetry, count: value }))?;
    } else {
        writeln!(out, "n={n} class={class} symmetry={symmetry} count={value}")?;
    }
    Ok(())
}

fn write_table_text(out: &mut dyn Write, table: &chord_census::CountTable) -> io::Result<()> {
    let header = ["n", "total", "o_total", "d_star", "d_double_star", "d_o", "d_n"];
    let rows: Vec<[String; 7]> = table
        .rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.total.to_string(),
                r.o_total.to_string(),
                r.d_star.to_string(),
                r.d_double_star.to_string(),
                r.d_o.to_string(),
                r.d_n.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..7)
        .map(|i| rows.iter().map(|r| r[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in &rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn enumerate(out: &mut dyn Write, e: &Enumerator, n: usize, class: DiagramClass, json: bool) -> Outcome {
    let required = match class {
        DiagramClass::O => factorial(n as u64),
        _ => double_factorial(2 * n as i64 - 1)?,
    };
    if required > BigUint::from(e.budget()) {
        return Err(Error::BudgetExceeded { required, budget: e.budget() }.into());
    }
    let stream: Box<dyn Iterator<Item = Gluing>> = match class {
        DiagramClass::O => Box::new(chord_census::enumerate_o_gluings(n)),
        DiagramClass::All => Box::new(chord_census::enumerate_gluings(n)),
        DiagramClass::N => Box::new(chord_census::enumerate_gluings(n).filter(|g| !g.is_orientable())),
    };
    for g in stream {
        if json {
            writeln!(out, "{}", json_line(&g))?;
        } else {
            writeln!(out, "{g}")?;
        }
    }
    Ok(())
}

fn cycles(out: &mut dyn Write, d: &ColorDiagram, json: bool) -> Outcome {
    let dec = trace_cycles(d);
    let surface = surface_type(d)?;
    let (b, w) = dec.lambda();
    if json {
        let report = serde_json::json!({
            "gluing": d.gluing(),
            "class": d.classify(),
            "cycles": dec,
            "lambda_b": b,
            "lambda_w": w,
            "lambda": b + w,
            "surface": surface,
        });
        writeln!(out, "{}", json_text(&report))?;
    } else {
        write!(out, "{dec}")?;
        writeln!(out, "lambda_b={b} lambda_w={w} lambda={}", b + w)?;
        writeln!(out, "class={} surface: {surface}", d.classify())?;
    }
    Ok(())
}
