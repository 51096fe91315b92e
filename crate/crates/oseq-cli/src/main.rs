//! `oseq`: construct matroid and order-ideal families, compute f/h-vectors,
//! screen candidate h-vectors, and search for realizing pure order ideals.
//!
//! Exit codes: 0 = success / realized; 1 = definite negative or search
//! exhausted without proof (the diagnostic message states which); 2 = input
//! or usage error.

use std::fs;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use oseq::complex::{h_vector, HVector};
use oseq::constructions::{
    delta_t, delta_t_class_facets, fano, fano_series_extension, gamma_t, schubert, uniform,
    WeightVector,
};
use oseq::ideal::OrderIdeal;
use oseq::io;
use oseq::matroid::{filter_checks, Matroid};
use oseq::search::{
    enumerate_pure_o_sequences, feasible_orderings, guided_search, is_pure_o_sequence,
    IterationOrder, SearchConfig, SearchStatus,
};
use oseq::Error;

#[derive(Parser)]
#[command(name = "oseq", version, about = "Matroid h-vectors and pure O-sequence searches")]
struct Cli {
    /// Output format for structured results
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Guided,
    Enumerate,
}

#[derive(Subcommand)]
enum Command {
    /// Print the f- and h-vectors of a complex or matroid file
    Hvector {
        path: PathBuf,
        /// Also print the h-vector of the cover side (the dual matroid's
        /// face ring); requires the input to be a matroid
        #[arg(long)]
        cover: bool,
    },
    /// List all distinct f-vectors of pure order ideals with the given socle
    Enumerate {
        /// Number of variables
        #[arg(long)]
        vars: usize,
        /// Common degree of the socle generators
        #[arg(long)]
        socle_degree: u32,
        /// Number of socle generators
        #[arg(long = "type")]
        socle_type: usize,
        /// Restrict to a colex rank interval `a..b` of the socle space
        #[arg(long, value_parser = parse_range)]
        range: Option<Range<u128>>,
        /// Worker threads (defaults to the ambient pool)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Search for a pure order ideal realizing a matroid's cover h-vector
    Check {
        path: PathBuf,
        /// Comma-separated ordering of the parallel classes for the guided
        /// method; omitted = try every ordering with a transversal head
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "guided")]
        method: Method,
        /// Randomize traversal order (deterministic per seed)
        #[arg(long)]
        seed: Option<u64>,
        /// 1-based position at which guided lifts insert the trailing block
        #[arg(long)]
        insertion_position: Option<usize>,
        /// Worker threads (defaults to the ambient pool)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the necessary-condition screens on a candidate h-vector
    Filter {
        /// Comma-separated candidate h-vector, starting with 1
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<i64>,
        /// Largest multiplier for the alternating-sum screens
        #[arg(long, default_value_t = 3)]
        b_max: u32,
        /// Parallel-class count for the type bound
        #[arg(long, requires = "rank")]
        classes: Option<usize>,
        /// Rank for the type bound
        #[arg(long, requires = "classes")]
        rank: Option<usize>,
    },
    /// Write a named matroid or order-ideal family to stdout
    Construct {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Rank-3 matroid on 7 points whose 28 bases avoid the seven lines
    Fano,
    /// Rank-4 series extension of the previous one: 8 points, 44 bases
    FanoSeriesExtension,
    /// All rank-sized subsets of the vertex set
    Uniform { rank: usize, vertices: usize },
    /// Facets {i1<…<id} with i_j bounded by the j-th entry
    Schubert {
        vertices: usize,
        /// Comma-separated, strictly increasing bounds; their count is the rank
        #[arg(value_delimiter = ',', required = true)]
        bounds: Vec<usize>,
    },
    /// Weighted transversal matroid over numbered parallel classes
    DeltaT {
        rank: usize,
        classes: usize,
        /// Comma-separated class sizes
        #[arg(value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        /// Number of trailing classes joined to every facet
        tail: usize,
    },
    /// Interval-partition order ideal matching the weighted family
    GammaT {
        rank: usize,
        classes: usize,
        /// Comma-separated class sizes
        #[arg(value_delimiter = ',', required = true)]
        weights: Vec<u32>,
        /// Number of trailing singleton blocks
        tail: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<u8, String>;

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Hvector { path, cover } => cmd_hvector(&path, cover, cli.format),
        Command::Enumerate { vars, socle_degree, socle_type, range, jobs } => {
            cmd_enumerate(vars, socle_degree, socle_type, range, jobs, cli.format)
        }
        Command::Check { path, order, method, seed, insertion_position, jobs } => {
            cmd_check(&path, order, method, seed, insertion_position, jobs, cli.format)
        }
        Command::Filter { h, b_max, classes, rank } => {
            cmd_filter(h, b_max, classes.zip(rank), cli.format)
        }
        Command::Construct { family } => cmd_construct(family, cli.format),
    }
}

fn estr(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read_input(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_range(s: &str) -> Result<Range<u128>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let start = a.trim().parse::<u128>().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let end = b.trim().parse::<u128>().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    Ok(start..end)
}

fn max_candidates() -> Result<u64, String> {
    match std::env::var("OSEQ_MAX_CANDIDATES") {
        Ok(v) => {
            v.trim().parse::<u64>().map_err(|_| format!("invalid OSEQ_MAX_CANDIDATES {v:?}"))
        }
        Err(std::env::VarError::NotPresent) => Ok(u64::MAX),
        Err(e) => Err(format!("OSEQ_MAX_CANDIDATES: {e}")),
    }
}

/// Runs `f` on a dedicated pool of the requested size; `None` keeps the
/// ambient pool (or plain sequential execution without the feature).
#[cfg(feature = "parallel")]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err("--jobs must be at least 1".into()),
        Some(k) => {
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(k).build().map_err(estr)?;
            Ok(pool.install(f))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    if jobs == Some(0) {
        return Err("--jobs must be at least 1".into());
    }
    Ok(f())
}

fn print_ideal(ideal: &OrderIdeal, format: Format) {
    let out = match format {
        Format::Text => io::write_order_ideal_text(ideal),
        Format::Json => io::write_order_ideal_json(ideal),
    };
    print!("{out}");
}

fn render_matroid(m: &Matroid, format: Format) -> String {
    match format {
        Format::Text => io::write_matroid_text(m),
        Format::Json => io::write_complex_json(m.complex()),
    }
}

fn cmd_hvector(path: &Path, cover: bool, format: Format) -> CliResult {
    let text = read_input(path)?;
    let (f, h, cover_h) = if cover {
        let m = io::parse_matroid(&text).map_err(estr)?;
        (m.complex().f_vector(), m.h_vector(), Some(m.cover_h_vector()))
    } else {
        let c = io::parse_complex(&text).map_err(estr)?;
        let f = c.f_vector();
        let h = h_vector(&f);
        (f, h, None)
    };
    match format {
        Format::Text => {
            println!("f: {f}");
            println!("h: {h}");
            if let Some(ch) = &cover_h {
                println!("cover-h: {ch}");
            }
        }
        Format::Json => {
            let mut doc = serde_json::json!({ "f": f, "h": h });
            if let Some(ch) = &cover_h {
                doc["cover_h"] = serde_json::json!(ch);
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("plain data"));
        }
    }
    Ok(0)
}

fn cmd_enumerate(
    vars: usize,
    socle_degree: u32,
    socle_type: usize,
    range: Option<Range<u128>>,
    jobs: Option<usize>,
    format: Format,
) -> CliResult {
    if vars == 0 || socle_degree == 0 || socle_type == 0 {
        return Err("vars, socle degree, and type must all be at least 1".into());
    }
    let cfg = SearchConfig {
        max_candidates: max_candidates()?,
        range,
        order: IterationOrder::Lexicographic,
        insertion_position: None,
    };
    let result = with_jobs(jobs, || enumerate_pure_o_sequences(vars, socle_degree, socle_type, &cfg))?
        .map_err(estr)?;
    match format {
        Format::Text => {
            for fv in &result.f_vectors {
                println!("{fv}");
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&result.f_vectors).expect("plain data"));
        }
    }
    eprintln!(
        "socle candidates visited: {}; ideals expanded: {}; distinct f-vectors: {}",
        result.visited,
        result.expanded,
        result.f_vectors.len()
    );
    Ok(0)
}

struct GuidedRun {
    realized: Option<(Vec<usize>, u64, OrderIdeal)>,
    limited: bool,
    infeasible: usize,
}

fn cmd_check(
    path: &Path,
    order: Option<Vec<usize>>,
    method: Method,
    seed: Option<u64>,
    insertion_position: Option<usize>,
    jobs: Option<usize>,
    format: Format,
) -> CliResult {
    let text = read_input(path)?;
    let m = io::parse_matroid(&text).map_err(estr)?;
    let cfg = SearchConfig {
        max_candidates: max_candidates()?,
        range: None,
        order: seed.map(IterationOrder::Seeded).unwrap_or(IterationOrder::Lexicographic),
        insertion_position,
    };
    match method {
        Method::Enumerate => {
            let h = m.cover_h_vector();
            let Some(target) = h.to_fvector() else {
                return Err(format!("cover h-vector ({h}) has negative entries"));
            };
            let outcome =
                with_jobs(jobs, || is_pure_o_sequence(&target, &cfg))?.map_err(estr)?;
            match outcome.status {
                SearchStatus::Realized(ideal) => {
                    eprintln!(
                        "realized cover h-vector ({h}) after examining {} socle candidates",
                        outcome.stats.examined
                    );
                    print_ideal(&ideal, format);
                    Ok(0)
                }
                SearchStatus::Exhausted => {
                    eprintln!(
                        "definite: ({h}) is not a pure O-sequence; the full socle space \
                         ({} candidates) was exhausted",
                        outcome.stats.examined
                    );
                    Ok(1)
                }
                SearchStatus::LimitReached => {
                    eprintln!(
                        "inconclusive: candidate limit reached after {} socle candidates \
                         without a realization",
                        outcome.stats.examined
                    );
                    Ok(1)
                }
            }
        }
        Method::Guided => {
            let orders: Vec<Vec<usize>> = match order {
                Some(o) => vec![o],
                None => feasible_orderings(&m).map_err(estr)?,
            };
            if orders.is_empty() {
                eprintln!("inconclusive: no class ordering admits a transversal head");
                return Ok(1);
            }
            let tried = orders.len();
            let summary = with_jobs(jobs, || -> Result<GuidedRun, Error> {
                let mut run =
                    GuidedRun { realized: None, limited: false, infeasible: 0 };
                for ord in &orders {
                    match guided_search(&m, ord, &cfg) {
                        Ok(out) => match out.status {
                            SearchStatus::Realized(ideal) => {
                                run.realized =
                                    Some((ord.clone(), out.stats.examined, ideal));
                                return Ok(run);
                            }
                            SearchStatus::Exhausted => {}
                            SearchStatus::LimitReached => run.limited = true,
                        },
                        Err(
                            Error::OrderingInfeasible(_) | Error::ChoiceInfeasible { .. },
                        ) => run.infeasible += 1,
                        Err(e) => return Err(e),
                    }
                }
                Ok(run)
            })?
            .map_err(estr)?;
            if let Some((ord, examined, ideal)) = summary.realized {
                let order_str =
                    ord.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                eprintln!(
                    "realized under class ordering {order_str} after examining \
                     {examined} guided candidates"
                );
                print_ideal(&ideal, format);
                return Ok(0);
            }
            let mut msg = format!(
                "inconclusive: guided search over {tried} class ordering(s) found no \
                 realization"
            );
            if summary.infeasible > 0 {
                msg += &format!(" ({} infeasible)", summary.infeasible);
            }
            if summary.limited {
                msg += "; at least one ordering hit the candidate limit";
            }
            msg += "; this does not prove impossibility";
            eprintln!("{msg}");
            Ok(1)
        }
    }
}

fn cmd_filter(
    h: Vec<i64>,
    b_max: u32,
    class_rank: Option<(usize, usize)>,
    format: Format,
) -> CliResult {
    if h.first() != Some(&1) {
        return Err("the candidate h-vector must start with 1".into());
    }
    let h = HVector::new(h);
    let report = filter_checks(&h, b_max, class_rank);
    match format {
        Format::Text => {
            println!("half-symmetry: {}", verdict(report.half_symmetry));
            for &(b, ok) in &report.brown_colbourn {
                println!("brown-colbourn b={b}: {}", verdict(ok));
            }
            if let Some(tb) = &report.type_bound {
                let minimum = tb.classes as i128 - tb.rank as i128 + 1;
                println!(
                    "type-bound (classes={}, rank={}): last entry {} vs minimum {}: {}",
                    tb.classes,
                    tb.rank,
                    h.last(),
                    minimum,
                    verdict(tb.passed)
                );
            }
            println!("result: {}", verdict(report.all_pass()));
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("plain data"));
        }
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_construct(family: Family, format: Format) -> CliResult {
    let out = match family {
        Family::Fano => render_matroid(&fano(), format),
        Family::FanoSeriesExtension => render_matroid(&fano_series_extension(), format),
        Family::Uniform { rank, vertices } => {
            render_matroid(&uniform(rank, vertices).map_err(estr)?, format)
        }
        Family::Schubert { vertices, bounds } => {
            render_matroid(&schubert(vertices, &bounds).map_err(estr)?, format)
        }
        Family::DeltaT { rank, classes, weights, tail } => {
            let a = WeightVector::new(weights).map_err(estr)?;
            delta_t(rank, classes, &a, tail).map_err(estr)?;
            let class_facets = delta_t_class_facets(rank, classes, tail).map_err(estr)?;
            match format {
                Format::Text => io::write_class_matroid_text(&class_facets, &a),
                Format::Json => io::write_class_matroid_json(&class_facets, &a),
            }
        }
        Family::GammaT { rank, classes, weights, tail } => {
            let a = WeightVector::new(weights).map_err(estr)?;
            let g = gamma_t(rank, classes, &a, tail).map_err(estr)?;
            match format {
                Format::Text => io::write_order_ideal_text(&g),
                Format::Json => io::write_order_ideal_json(&g),
            }
        }
    };
    print!("{out}");
    Ok(0)
}
