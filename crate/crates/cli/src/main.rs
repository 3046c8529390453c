//! `skewsupp`: expansions, overlap partitions and exhaustive sweeps from the
//! command line. Every payload is deterministic so outputs can be diffed.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewsupp::cache::ExpansionCache;
use skewsupp::comparisons::{relate_unchecked, verify_figure6};
use skewsupp::posets::{build_poset, multfree_check, saturation_check, verify_conjecture, PosetKind};
use skewsupp::qsym::AnyExpansion;
use skewsupp::shapes::enumerate_shapes;
use skewsupp::tableaux::enumerate_syt;
use skewsupp::{Basis, Limits, OverlapProfile, Shard, SkewShape};

/// Exit statuses: a proved statement failing means the implementation is
/// wrong; a conjecture failing is a discovery.
const EXIT_USAGE: u8 = 1;
const EXIT_THEOREM_VIOLATION: u8 = 2;
const EXIT_CONJECTURE_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "skewsupp", version, about = "Skew Schur function supports and overlap partitions")]
struct Cli {
    /// Largest number of boxes accepted by any command.
    #[arg(long, global = true, env = "SKEWSUPP_MAX_SIZE", default_value_t = skewsupp::config::DEFAULT_MAX_SIZE,
          value_parser = positive)]
    max_size: usize,

    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, env = "SKEWSUPP_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Suppf,
    Nc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Schur,
    F,
    M,
    S,
    D,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Schur => Basis::Schur,
            BasisArg::F => Basis::F,
            BasisArg::M => Basis::M,
            BasisArg::S => Basis::S,
            BasisArg::D => Basis::D,
        }
    }
}

#[derive(Args)]
struct SizeArg {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the skew shapes in basic form with N boxes.
    Shapes {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Expand s_A in a basis.
    Expand {
        shape: String,
        #[arg(long, value_enum)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Row and column overlap partitions of a shape.
    Overlaps {
        shape: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Every positivity, support and overlap relation of the pair (A, B).
    Compare { a: String, b: String },
    /// Exhaustive sweeps.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Emit SuppF_N or NC_N.
    Poset {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Check the F-multiplicity-free classification and comparabilities.
    Multfree {
        #[command(flatten)]
        size: SizeArg,
    },
    /// Compare F-support containment before and after scaling.
    Saturation {
        #[command(flatten)]
        size: SizeArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        scale: u32,
    },
    /// List standard tableaux of a shape.
    Tableaux {
        shape: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Check every implication among the relations on all pairs up to size N.
    Figure6 {
        #[command(flatten)]
        size: SizeArg,
    },
    /// Check that F-support containment and overlap dominance agree.
    Conjecture {
        #[command(flatten)]
        size: SizeArg,
        /// Run only slice i of k.
        #[arg(long, default_value = "1/1")]
        shard: Shard,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err("expected a positive integer".into()),
    }
}

struct Outcome {
    output: String,
    code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("payloads serialize");
    s.push('\n');
    s
}

fn parse_shape(s: &str, limits: &Limits) -> skewsupp::Result<SkewShape> {
    let shape: SkewShape = s.parse()?;
    limits.check(shape.size())?;
    Ok(shape)
}

/// Nonempty `rows_k` and `cols_l`, entry `i` holding the partition for `i + 1`.
fn overlap_lists(shape: &SkewShape) -> [(&'static str, Vec<skewsupp::Partition>); 2] {
    let p = OverlapProfile::of(shape);
    [("rows", (1..=p.depth()).map(|k| p.rows(k)).collect()), ("cols", (1..=p.col_depth()).map(|l| p.cols(l)).collect())]
}

fn run(cli: Cli) -> skewsupp::Result<Outcome> {
    let limits = Limits { max_size: cli.max_size };
    let cache = ExpansionCache::new();
    let out = match cli.command {
        Command::Shapes { size, format } => {
            let shapes = enumerate_shapes(size.n, &limits)?;
            match format {
                TextFormat::Json => Outcome::ok(pretty(&shapes)),
                TextFormat::Text => Outcome::ok(shapes.iter().map(|s| format!("{s}\n")).collect()),
            }
        }
        Command::Expand { shape, basis, format } => {
            let shape = parse_shape(&shape, &limits)?;
            let e = AnyExpansion::of(&shape, basis.into())?;
            let text = match &e {
                AnyExpansion::Schur(x) => x.to_string(),
                AnyExpansion::Qsym(x) => x.to_string(),
            };
            match format {
                TextFormat::Text => Outcome::ok(format!("{text}\n")),
                TextFormat::Json => {
                    let terms = match &e {
                        AnyExpansion::Schur(x) => json!(x),
                        AnyExpansion::Qsym(x) => json!(x),
                    };
                    let basis: Basis = basis.into();
                    Outcome::ok(pretty(&json!({ "shape": shape, "basis": basis.name(), "terms": terms })))
                }
            }
        }
        Command::Overlaps { shape, format } => {
            let shape = parse_shape(&shape, &limits)?;
            let [(_, rows), (_, cols)] = overlap_lists(&shape);
            match format {
                TextFormat::Json => Outcome::ok(pretty(&json!({ "shape": shape, "rows": rows, "cols": cols }))),
                TextFormat::Text => {
                    let mut s = String::new();
                    for (key, list) in overlap_lists(&shape) {
                        for (i, p) in list.iter().enumerate() {
                            writeln!(s, "{key}({}) = {p}", i + 1).unwrap();
                        }
                    }
                    Outcome::ok(s)
                }
            }
        }
        Command::Compare { a, b } => {
            let (a, b) = (parse_shape(&a, &limits)?, parse_shape(&b, &limits)?);
            let r = relate_unchecked(&cache, &a, &b)?;
            let violated = r.violated_arrows();
            let code = if violated.is_empty() { 0 } else { EXIT_THEOREM_VIOLATION };
            let output = pretty(&json!({ "a": a, "b": b, "relations": r, "violated_arrows": violated }));
            Outcome { output, code }
        }
        Command::Verify { what: Verify::Figure6 { size } } => {
            let report = verify_figure6(size.n, &limits, &cache)?;
            let code = if report.passed() { 0 } else { EXIT_THEOREM_VIOLATION };
            Outcome { output: pretty(&report), code }
        }
        Command::Verify { what: Verify::Conjecture { size, shard } } => {
            let report = verify_conjecture(size.n, &limits, &cache, shard)?;
            let code = if !report.forward_violations.is_empty() {
                EXIT_THEOREM_VIOLATION
            } else if !report.passed() {
                EXIT_CONJECTURE_COUNTEREXAMPLE
            } else {
                0
            };
            Outcome { output: pretty(&report), code }
        }
        Command::Poset { size, which, format } => {
            let kind = match which {
                Which::Suppf => PosetKind::SuppF,
                Which::Nc => PosetKind::NC,
            };
            let poset = build_poset(kind, size.n, &limits, &cache)?;
            match format {
                GraphFormat::Dot => Outcome::ok(poset.to_dot()),
                GraphFormat::Json => Outcome::ok(pretty(&poset)),
            }
        }
        Command::Multfree { size } => {
            let report = multfree_check(size.n, &limits, &cache)?;
            let code = if report.passed() { 0 } else { EXIT_THEOREM_VIOLATION };
            Outcome { output: pretty(&report), code }
        }
        Command::Saturation { size, scale } => {
            let report = saturation_check(size.n, scale, &limits, &cache)?;
            let code = if report.schur_regression.reproduced() { 0 } else { EXIT_THEOREM_VIOLATION };
            Outcome { output: pretty(&report), code }
        }
        Command::Tableaux { shape, limit, format } => {
            let shape = parse_shape(&shape, &limits)?;
            let tableaux: Vec<_> = enumerate_syt(&shape)?.take(limit.unwrap_or(usize::MAX)).collect();
            match format {
                TextFormat::Text => {
                    let blocks: Vec<String> =
                        tableaux.iter().map(|t| format!("{t}descents: {}\n", t.descent_composition())).collect();
                    Outcome::ok(blocks.join("\n"))
                }
                TextFormat::Json => {
                    let list: Vec<Value> = tableaux
                        .iter()
                        .map(|t| json!({ "rows": t.rows(), "descent_composition": t.descent_composition() }))
                        .collect();
                    Outcome::ok(pretty(&json!({ "shape": shape, "count": list.len(), "tableaux": list })))
                }
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(Outcome { output, code }) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
