//! Command-line front end.
//!
//! `run` parses an argument vector, dispatches to one library operation and
//! renders an [`OutputEnvelope`] as JSON (default) or as an aligned table.
//! Exit codes: 0 success, 1 violated precondition, 2 usage error.

mod output;
pub mod selftest;

pub use output::OutputEnvelope;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cite;
use crate::error::{Error, Result};
use crate::irrationality::{build_certificate, irr};
use crate::lattice::{l_of_v, pullback_cover, MukaiVector, NumClass, Polarization};
use crate::surface::{intermediate_covers, CoverKind, SurfaceType};
use crate::ulrich::{
    decide_with, enumerate_candidates, enumerate_candidates_divisible, every_rank_witness,
    EngineOptions, Hypotheses, UlrichStatus,
};
use crate::walls::{
    component_count, enumerate_walls, enumerate_walls_in_box, moduli_nonempty, wall_through, Tri,
};
use crate::wbn::{wbn, WbnStatus};
use selftest::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "bielliptic", version, about = "Sheaf-theoretic invariants of bielliptic surfaces")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn parse_type(s: &str) -> std::result::Result<SurfaceType, Error> {
    let id: i64 = s.trim().parse().map_err(|_| Error::Parse {
        input: s.to_string(),
        expected: "a surface type 1..=7",
    })?;
    SurfaceType::new(id)
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Surface type, 1..=7.
    #[arg(long = "type", value_parser = parse_type)]
    surface: SurfaceType,
}

#[derive(Debug, Args)]
struct VArg {
    /// Mukai vector `r,a,b,s`.
    #[arg(long, allow_hyphen_values = true)]
    v: MukaiVector,
}

#[derive(Debug, Args)]
struct HArg {
    /// Polarization `a,b`.
    #[arg(long = "H", allow_hyphen_values = true)]
    h: NumClass,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariant table row.
    Surface(TypeArg),
    /// Euler characteristic of `v`.
    Chi(VArg),
    /// Mukai pairing `<v, w>`.
    Pair {
        #[command(flatten)]
        v: VArg,
        #[arg(long, allow_hyphen_values = true)]
        w: MukaiVector,
    },
    /// `v . e^D`.
    Twist {
        #[command(flatten)]
        v: VArg,
        /// Twisting class `a,b`.
        #[arg(long, allow_hyphen_values = true)]
        class: NumClass,
    },
    /// Pullback of `v` along a cover (default: the canonical cover).
    Pullback {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        v: VArg,
        /// Position in the list of covers printed by this command.
        #[arg(long)]
        cover: Option<usize>,
    },
    /// Weak Brill-Noether report for line bundles of a numerical class.
    Wbn {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        class: NumClass,
    },
    /// Walls in the ample cone for `v`.
    Walls {
        #[command(flatten)]
        v: VArg,
        /// Only walls with `|xi| <= N` coefficientwise.
        #[arg(long = "box")]
        bound: Option<i64>,
    },
    /// Whether `H` lies on no wall for `v`.
    Generic {
        #[command(flatten)]
        h: HArg,
        #[command(flatten)]
        v: VArg,
    },
    /// Number of irreducible components of `M_H(v)`.
    Components {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        v: VArg,
    },
    /// Non-emptiness of `M_H(v)` and its stable locus.
    Nonempty {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        h: HArg,
        #[command(flatten)]
        v: VArg,
    },
    /// Ulrich candidates and verdicts.
    Ulrich {
        #[command(subcommand)]
        command: UlrichCommand,
    },
    #[command(name = "ulrich-enumerate")]
    UlrichEnumerate(EnumerateArgs),
    #[command(name = "ulrich-decide")]
    UlrichDecide(DecideArgs),
    /// Degree of irrationality.
    Irr {
        #[command(flatten)]
        t: TypeArg,
        /// Include the numeric certificate for the upper bound.
        #[arg(long)]
        certificate: bool,
    },
    /// Runs the built-in invariant suites.
    Selftest {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
}

#[derive(Debug, Subcommand)]
enum UlrichCommand {
    Enumerate(EnumerateArgs),
    Decide(DecideArgs),
    /// Smallest certified `k` in rank `r`.
    Witness {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        rank: i64,
    },
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// When given, each candidate carries its verdict on this type.
    #[arg(long = "type", value_parser = parse_type)]
    surface: Option<SurfaceType>,
    #[command(flatten)]
    h: HArg,
    #[arg(long)]
    rank: i64,
}

#[derive(Debug, Args)]
struct DecideArgs {
    #[command(flatten)]
    t: TypeArg,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    k: i64,
    /// Check the hypotheses against this polarization instead of asserting them.
    #[arg(long = "H", allow_hyphen_values = true)]
    h: Option<NumClass>,
    /// Enable the rank-doubling rule for multiples of `H`.
    #[arg(long)]
    doubling: bool,
}

struct Response {
    result: Value,
    citations: Vec<String>,
    warnings: Vec<String>,
    code: i32,
}

impl Response {
    fn new(result: impl Serialize, citations: Vec<&str>) -> Self {
        Response {
            result: serde_json::to_value(result).expect("results serialize"),
            citations: citations.into_iter().map(String::from).collect(),
            warnings: Vec::new(),
            code: EXIT_OK,
        }
    }

    fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let (envelope, code) = match dispatch(cli.command) {
        Ok(resp) => {
            let code = resp.code;
            (OutputEnvelope::success(resp.result, resp.citations, resp.warnings), code)
        }
        Err(e) => (OutputEnvelope::failure(e.to_string()), EXIT_PRECONDITION),
    };
    let stdout = match cli.format {
        Format::Json => envelope.to_json(),
        Format::Table => envelope.to_table(),
    };
    let stderr = envelope.error.as_ref().map(|e| format!("error: {e}\n")).unwrap_or_default();
    Outcome { code, stdout, stderr }
}

fn dispatch(command: Command) -> Result<Response> {
    match command {
        Command::Surface(TypeArg { surface: t }) => {
            let inv = t.invariants();
            let result = json!({
                "type": t,
                "group_order": inv.group_order,
                "canonical_order": inv.canonical_order,
                "lambda": inv.lambda,
                "multiplicities": inv.multiplicities,
                "torsion_order": inv.torsion_order,
                "torsion_structure": inv.torsion_structure,
            });
            Ok(Response::new(result, vec![cite::INVARIANT_TABLE]))
        }
        Command::Chi(VArg { v }) => {
            Ok(Response::new(json!({ "v": v, "chi": v.chi() }), vec![cite::RIEMANN_ROCH]))
        }
        Command::Pair { v: VArg { v }, w } => {
            Ok(Response::new(json!({ "v": v, "w": w, "pair": v.pair(w) }), vec![cite::RIEMANN_ROCH]))
        }
        Command::Twist { v: VArg { v }, class } => Ok(Response::new(
            json!({ "v": v, "class": class, "twist": v.twist(class) }),
            vec![cite::HYPERBOLIC_NUM],
        )),
        Command::Pullback { t: TypeArg { surface: t }, v: VArg { v }, cover } => pullback(t, v, cover),
        Command::Wbn { t: TypeArg { surface: t }, class } => {
            let report = wbn(t, class);
            let mut resp = Response::new(&report, report.citation.split("; ").collect());
            for c in &report.components {
                if c.status == WbnStatus::Unknown {
                    resp = resp.warn(format!(
                        "component {} of type {t} class {class}: UNKNOWN cohomology",
                        c.index.index()
                    ));
                }
            }
            Ok(resp)
        }
        Command::Walls { v: VArg { v }, bound } => {
            let walls = match bound {
                Some(n) => enumerate_walls_in_box(v, n)?,
                None => enumerate_walls(v)?,
            };
            Ok(Response::new(
                json!({ "v": v, "walls": walls }),
                vec![cite::WALLS_LOCALLY_FINITE, cite::BOGOMOLOV],
            ))
        }
        Command::Generic { h: HArg { h }, v: VArg { v } } => {
            let h = Polarization::new(h)?;
            let through = wall_through(h, v);
            let result = json!({
                "H": h,
                "v": v,
                "generic": through.is_none(),
                "wall": through.map(|(w, _)| w),
                "splitting": through.map(|(_, s)| s),
            });
            Ok(Response::new(result, vec![cite::WALLS_LOCALLY_FINITE]))
        }
        Command::Components { t: TypeArg { surface: t }, v: VArg { v } } => {
            let n = component_count(v, t)?;
            Ok(Response::new(json!({ "type": t, "v": v, "components": n }), vec![cite::COMPONENT_COUNT]))
        }
        Command::Nonempty { t: TypeArg { surface: t }, h: HArg { h }, v: VArg { v } } => {
            let h = Polarization::new(h)?;
            let verdict = moduli_nonempty(v, h, t)?;
            let mut resp = Response::new(&verdict, verdict.reason.clone());
            if verdict.stable_nonempty == Tri::Unknown {
                resp = resp.warn("stable_nonempty is UNKNOWN");
            }
            Ok(resp)
        }
        Command::Ulrich { command } => match command {
            UlrichCommand::Enumerate(args) => ulrich_enumerate(args),
            UlrichCommand::Decide(args) => ulrich_decide(args),
            UlrichCommand::Witness { t: TypeArg { surface: t }, rank } => {
                let w = every_rank_witness(t, rank)?;
                let cites = w.verdict.certificate.iter().map(|s| s.cite).collect();
                Ok(Response::new(&w, cites))
            }
        },
        Command::UlrichEnumerate(args) => ulrich_enumerate(args),
        Command::UlrichDecide(args) => ulrich_decide(args),
        Command::Irr { t: TypeArg { surface: t }, certificate } => {
            let res = irr(t);
            let mut cites = res.citations.clone();
            let result = if certificate {
                let cert = build_certificate(t)?;
                cites.extend(cert.assumptions.iter().map(|a| a.cite));
                cites.push(cite::DEGREE_12_NONDIVISIBLE);
                json!({ "irr": res, "certificate": cert })
            } else {
                json!({ "irr": res })
            };
            Ok(Response::new(result, cites))
        }
        Command::Selftest { suite } => {
            let reports = selftest::run_suites(suite);
            let all_passed = reports.iter().all(|r| r.passed());
            let mut resp = Response::new(json!({ "passed": all_passed, "suites": reports }), Vec::new());
            if !all_passed {
                resp.code = EXIT_PRECONDITION;
            }
            Ok(resp)
        }
    }
}

fn pullback(t: SurfaceType, v: MukaiVector, cover: Option<usize>) -> Result<Response> {
    let covers = intermediate_covers(t);
    let index = cover.unwrap_or(covers.len() - 1);
    let Some(c) = covers.get(index) else {
        return Err(Error::HypothesisViolated(format!(
            "cover index {index} out of range: type {t} has {} covers",
            covers.len()
        )));
    };
    let cite = match c.kind {
        CoverKind::CanonicalCover => cite::CANONICAL_COVER_PULLBACK,
        CoverKind::IntermediateOrderQuotient => cite::INTERMEDIATE_COMPOSITE_ORDER,
        CoverKind::IntermediateSplit => cite::INTERMEDIATE_SPLIT,
    };
    let mut result = json!({
        "type": t,
        "v": v,
        "cover": c,
        "pullback": pullback_cover(v, c),
        "covers": covers,
    });
    let mut citations = vec![cite];
    if c.kind == CoverKind::CanonicalCover && v.is_primitive() {
        result["l"] = json!(l_of_v(v, t)?);
        citations.push(cite::L_OF_V);
    }
    Ok(Response::new(result, citations))
}

fn ulrich_enumerate(args: EnumerateArgs) -> Result<Response> {
    let h = Polarization::new(args.h.h)?;
    let mut warnings = Vec::new();
    let (candidates, mut citations) = if h.is_primitive() {
        (enumerate_candidates(h, args.rank)?, vec![cite::ULRICH_CANDIDATES])
    } else {
        warnings.push(format!("H = {} is divisible; enumerating the nef segment", h.class()));
        (enumerate_candidates_divisible(h, args.rank)?, vec![cite::ULRICH_DIVISIBLE])
    };
    let mut rows = Vec::new();
    for c in &candidates {
        let mut row = serde_json::to_value(c).expect("candidate serializes");
        if let Some(t) = args.surface {
            let hyp = Hypotheses::check(t, h, c.r, c.k)?;
            let violations = hyp.violations();
            if violations.is_empty() {
                let verdict = decide_with(t, c.r, c.k, hyp, EngineOptions::default())?;
                citations.extend(verdict.certificate.iter().map(|s| s.cite));
                if verdict.status == UlrichStatus::Unknown {
                    warnings.push(format!("({},{}) on type {t}: UNKNOWN", c.r, c.k));
                }
                row["status"] = json!(verdict.status);
            } else {
                warnings.push(format!("({},{}) on type {t}: hypotheses fail: {}", c.r, c.k, violations.join("; ")));
                row["status"] = Value::Null;
            }
        }
        rows.push(row);
    }
    let result = json!({ "H": h, "rank": args.rank, "candidates": rows });
    let mut resp = Response::new(result, citations);
    resp.warnings = warnings;
    Ok(resp)
}

fn ulrich_decide(args: DecideArgs) -> Result<Response> {
    let t = args.t.surface;
    let (hypotheses, polarization) = match args.h {
        Some(cls) => {
            let h = Polarization::new(cls)?;
            (Hypotheses::check(t, h, args.r, args.k)?, Some(h))
        }
        None => (Hypotheses::asserted(), None),
    };
    let options = EngineOptions { doubling_for_multiples: args.doubling };
    let verdict = decide_with(t, args.r, args.k, hypotheses, options)?;
    let mut citations: Vec<&'static str> = verdict.certificate.iter().map(|s| s.cite).collect();
    let mut result = serde_json::to_value(&verdict).expect("verdict serializes");
    if let Some(h) = polarization {
        result["v"] = json!(verdict.candidate(h)?.v);
        citations.push(cite::ULRICH_CANDIDATES);
    }
    let mut resp = Response::new(result, citations);
    if polarization.is_none() {
        resp = resp.warn("hypotheses asserted by caller, not checked against a polarization");
    }
    if verdict.status == UlrichStatus::Unknown {
        resp = resp.warn(format!("({},{}) on type {t}: UNKNOWN", args.r, args.k));
    }
    Ok(resp)
}
