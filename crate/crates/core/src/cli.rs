//! Command-line front end.
//!
//! Exit status: 0 on success (including an expected search outcome), 1 on
//! usage errors, 2 when a verification fails.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::acceptance::{self, Config, PROPERTY_SEED};
use crate::constructions::{
    asterisk_ridge_cover, pair_split_ridge_cover, sharp_facet_cover, ConstructionReport,
};
use crate::cover::{cover_report, Cover, VerificationReport};
use crate::error::Error;
use crate::face::{count_faces, enumerate_faces};
use crate::search::{
    enumerate_antipode_free_sets, exists_cover, probe_d5, SearchOptions, SearchProblem,
    SearchResult,
};
use crate::SCHEMA;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "antipode-lab",
    version,
    about = "Antipodal faces and ridge covers of the d-cube"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Output rendering
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    /// d sets of two facets, no antipodal facets
    Facet,
    /// antipodal ridge pairs split across two sets
    PairSplit,
    /// four asterisk sets plus ceil(d/3) leftover sets
    Asterisk,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of k-faces of the d-cube
    Count {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: i32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// List the k-faces of the d-cube in canonical order
    Faces {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: i32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Build an explicit cover and check its guarantees
    Construct {
        #[arg(value_enum)]
        kind: Construction,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Verify a cover file (`-` reads stdin)
    Verify {
        #[arg(long)]
        input: String,
        /// Also fail when some set holds an antipodal pair of this dimension
        #[arg(long = "forbid-k")]
        forbid_k: Option<i32>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Exhaustive search for a cover with no antipodal forbid-k pair in any set
    Search {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        sets: u32,
        #[arg(long, default_value_t = 2)]
        codim: u32,
        #[arg(long = "forbid-k")]
        forbid_k: i32,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// All antipode-free face sets of a given size
    Enumerate {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 2)]
        codim: u32,
        #[arg(long = "forbid-k")]
        forbid_k: i32,
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Budgeted search of the open five-dimensional case
    #[command(name = "probe-d5")]
    ProbeD5 {
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run every acceptance criterion
    Selftest {
        /// Seed for the randomized checks
        #[arg(long, default_value_t = PROPERTY_SEED)]
        seed: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn Read) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err, stdin };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(io.err, "verification failed: {msg}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn emit_json<T: Serialize>(io: &mut Io, kind: &str, body: &T) -> Outcome {
    let mut value = serde_json::to_value(body).map_err(|e| Failure::Usage(e.to_string()))?;
    let obj = value
        .as_object_mut()
        .expect("report bodies serialize as objects");
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("kind".into(), json!(kind));
    doc.append(obj);
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(io.out, "{text}")?;
    Ok(())
}

fn dispatch(cmd: Command, io: &mut Io) -> Outcome {
    match cmd {
        Command::Count { d, k, fmt } => {
            let n = count_faces(d, k)?;
            match fmt.format {
                Format::Text => writeln!(io.out, "{n}")?,
                Format::Json => emit_json(io, "count", &json!({"d": d, "k": k, "count": n}))?,
            }
            Ok(())
        }
        Command::Faces { d, k, fmt } => {
            let faces = enumerate_faces(d, k)?;
            match fmt.format {
                Format::Text => {
                    for f in &faces {
                        writeln!(io.out, "{f}")?;
                    }
                }
                Format::Json => emit_json(io, "faces", &json!({"d": d, "k": k, "faces": faces}))?,
            }
            Ok(())
        }
        Command::Construct { kind, d, fmt } => construct(kind, d, fmt.format, io),
        Command::Verify {
            input,
            forbid_k,
            fmt,
        } => verify(&input, forbid_k, fmt.format, io),
        Command::Search {
            d,
            sets,
            codim,
            forbid_k,
            budget,
            threads,
            fmt,
        } => {
            let p = SearchProblem::new(d, sets, codim, forbid_k)?;
            let r = exists_cover(&p, SearchOptions::new(budget).with_threads(threads))?;
            render_search(&r, fmt.format, io)
        }
        Command::Enumerate {
            d,
            codim,
            forbid_k,
            size,
            fmt,
        } => {
            let sets = enumerate_antipode_free_sets(d, codim, forbid_k, size)?;
            match fmt.format {
                Format::Text => {
                    writeln!(io.out, "{} sets", sets.len())?;
                    for s in &sets {
                        let line: Vec<String> = s.faces().iter().map(|f| f.to_string()).collect();
                        writeln!(io.out, "{}", line.join(","))?;
                    }
                }
                Format::Json => emit_json(
                    io,
                    "enumeration",
                    &json!({
                        "d": d, "codim": codim, "forbid_k": forbid_k, "size": size,
                        "count": sets.len(), "sets": sets,
                    }),
                )?,
            }
            Ok(())
        }
        Command::ProbeD5 {
            budget,
            threads,
            fmt,
        } => {
            if budget == 0 {
                return Err(Failure::Usage("budget must be positive".into()));
            }
            let r = probe_d5(SearchOptions::new(budget).with_threads(threads))?;
            render_search(&r, fmt.format, io)
        }
        Command::Selftest { seed, fmt } => {
            let results = acceptance::run_all(&Config { seed });
            let failed = results.iter().filter(|r| !r.passed).count();
            match fmt.format {
                Format::Text => {
                    for r in &results {
                        writeln!(io.out, "{}", r.line())?;
                    }
                    writeln!(
                        io.out,
                        "{} of {} criteria passed",
                        results.len() - failed,
                        results.len()
                    )?;
                }
                Format::Json => emit_json(
                    io,
                    "selftest",
                    &json!({"seed": seed, "passed": failed == 0, "criteria": results}),
                )?,
            }
            if failed > 0 {
                Err(Failure::Verify(format!("{failed} criteria failed")))
            } else {
                Ok(())
            }
        }
    }
}

#[derive(Serialize)]
struct ConstructionDoc<'a> {
    construction: &'static str,
    d: u32,
    cover: &'a Cover,
    cover_text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonempty_sets: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    doubly_covered: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leftover_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_d_set_cover: Option<bool>,
    report: &'a VerificationReport,
    contract_holds: bool,
}

/// Checks a construction's promises; returns a description of the first
/// broken one.
fn construction_contract(
    kind: Construction,
    d: u32,
    report: &VerificationReport,
    extra: Option<&ConstructionReport>,
) -> Option<String> {
    if !report.is_complete {
        return Some(format!("{} faces uncovered", report.uncovered.len()));
    }
    let di = d as i32;
    let per = &report.per_set_self_antipodality;
    match kind {
        Construction::Facet if per.iter().any(|&k| k != di - 2) => Some(format!(
            "per-set self-antipodality {per:?}, expected all {}",
            di - 2
        )),
        Construction::PairSplit if per.iter().any(|&k| k > di - 3) => Some(format!(
            "per-set self-antipodality {per:?} exceeds {}",
            di - 3
        )),
        Construction::Asterisk => {
            let rep = extra.expect("asterisk report");
            let formula = crate::constructions::doubly_covered_count(d).ok()?;
            if report.max_self_antipodality > di - 4 {
                Some(format!(
                    "max self-antipodality {} exceeds {}",
                    report.max_self_antipodality,
                    di - 4
                ))
            } else if rep.doubly_covered != formula || rep.leftover_count != formula {
                Some(format!(
                    "doubly covered {} / leftover {} differ from {formula}",
                    rep.doubly_covered, rep.leftover_count
                ))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn construct(kind: Construction, d: u32, format: Format, io: &mut Io) -> Outcome {
    let (cover, extra) = match kind {
        Construction::Facet => (sharp_facet_cover(d)?, None),
        Construction::PairSplit => (pair_split_ridge_cover(d)?, None),
        Construction::Asterisk => {
            let rep = asterisk_ridge_cover(d)?;
            (rep.cover.clone(), Some(rep))
        }
    };
    let report = cover_report(&cover);
    let broken = construction_contract(kind, d, &report, extra.as_ref());
    match format {
        Format::Text => write!(io.out, "{}", cover.to_text())?,
        Format::Json => {
            let name = match kind {
                Construction::Facet => "facet",
                Construction::PairSplit => "pair-split",
                Construction::Asterisk => "asterisk",
            };
            let doc = ConstructionDoc {
                construction: name,
                d,
                cover: &cover,
                cover_text: cover.to_text(),
                nonempty_sets: extra.as_ref().map(|r| r.nonempty_sets),
                doubly_covered: extra.as_ref().map(|r| r.doubly_covered),
                leftover_count: extra.as_ref().map(|r| r.leftover_count),
                is_d_set_cover: extra.as_ref().map(|r| r.is_d_set_cover),
                report: &report,
                contract_holds: broken.is_none(),
            };
            emit_json(io, "construction", &doc)?;
        }
    }
    if let Some(rep) = &extra {
        if !rep.is_d_set_cover {
            writeln!(
                io.err,
                "note: {} nonempty sets exceed d={d}; not a d-set cover",
                rep.nonempty_sets
            )?;
        }
    }
    match broken {
        Some(msg) => Err(Failure::Verify(msg)),
        None => Ok(()),
    }
}

fn verify(input: &str, forbid_k: Option<i32>, format: Format, io: &mut Io) -> Outcome {
    let mut text = String::new();
    if input == "-" {
        io.stdin.read_to_string(&mut text)?;
    } else {
        text =
            std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
    }
    let cover = Cover::parse(&text)?;
    let report = cover_report(&cover);
    match format {
        Format::Text => {
            let per: Vec<String> = report
                .per_set_self_antipodality
                .iter()
                .map(|k| k.to_string())
                .collect();
            writeln!(
                io.out,
                "cover: d={} codim={} sets={}",
                report.d, report.codim, report.n_sets
            )?;
            writeln!(
                io.out,
                "complete: {}",
                if report.is_complete { "yes" } else { "no" }
            )?;
            if !report.is_complete {
                let missing: Vec<String> = report.uncovered.iter().map(|f| f.to_string()).collect();
                writeln!(io.out, "uncovered: {}", missing.join(","))?;
            }
            writeln!(io.out, "per-set self-antipodality: {}", per.join(" "))?;
            writeln!(
                io.out,
                "max self-antipodality: {}",
                report.max_self_antipodality
            )?;
            if let Some(k) = report.expected_k {
                writeln!(io.out, "guaranteed for {} sets: {k}", report.d)?;
            }
            if let Some(w) = &report.witness {
                writeln!(
                    io.out,
                    "witness: set {} holds {} and {} with antipodal {}-faces {} / {}",
                    w.set_index + 1,
                    w.pair.face_a,
                    w.pair.face_b,
                    w.pair.k,
                    w.pair.sub_a,
                    w.pair.sub_b
                )?;
            }
        }
        Format::Json => emit_json(io, "verification", &report)?,
    }
    if !report.is_complete {
        return Err(Failure::Verify(format!(
            "{} faces uncovered",
            report.uncovered.len()
        )));
    }
    if let Some(k) = forbid_k {
        if report.max_self_antipodality >= k {
            return Err(Failure::Verify(format!(
                "a set holds antipodal {}-faces (forbidden: {k})",
                report.max_self_antipodality
            )));
        }
    }
    Ok(())
}

fn render_search(r: &SearchResult, format: Format, io: &mut Io) -> Outcome {
    match format {
        Format::Text => {
            writeln!(io.out, "{}", r.outcome.label())?;
            writeln!(io.out, "nodes_expanded: {}", r.nodes_expanded)?;
            writeln!(io.out, "budget: {}", r.budget)?;
            if let Some(c) = r.outcome.witness() {
                write!(io.out, "{}", c.to_text())?;
            }
        }
        Format::Json => emit_json(io, "search", r)?,
    }
    if let Some(c) = r.outcome.witness() {
        if !cover_report(c).avoids(r.problem.forbid_k) {
            return Err(Failure::Verify("witness failed re-verification".into()));
        }
    }
    Ok(())
}
