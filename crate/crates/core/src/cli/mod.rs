//! Command-line front end: job files in, deterministic JSON reports out.
//!
//! Exit codes: `0` on success, `2` when a search ends `Unknown` or a
//! resource cap is hit, `1` for usage, schema and JSON errors.

pub mod job;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::bendcalc::{bend, contains, Congruence, RelationPair, SearchBudget, Verdict};
use crate::error::Error;
use crate::semiring::SemiringTag;
use crate::tropicalize::{
    default_degree, default_grid, default_sample, is_valuation_point, limit_points, pi_map,
    settheoretic_member, solve_points, trop_ideal_truncated, trop_presentation,
    universal_embedding, universal_trop, LimitOptions, PointSample, Sample, DEFAULT_NODE_CAP,
};
use crate::valuation::ring::RingElement;
use crate::valuation::{check_axioms, check_table_axioms, ValuationTable};
use job::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Truncated tropicalization of an embedding.
    Trop,
    /// Whether a point lies in the tropicalization.
    Member,
    /// Universal kernel generators and tropicalization.
    Univ,
    /// Test a map A -> T for being a valuation.
    Valcheck,
    /// Push a valuation point to an embedding's tropicalization.
    Pi,
    /// Compatible families over a diagram of embeddings.
    Limit,
    /// Search for a derivation of a relation from generators.
    Derive,
    /// Check the valuation axioms.
    Axioms,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Trop => "trop",
            Command::Member => "member",
            Command::Univ => "univ",
            Command::Valcheck => "valcheck",
            Command::Pi => "pi",
            Command::Limit => "limit",
            Command::Derive => "derive",
            Command::Axioms => "axioms",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bendtrop",
    version,
    about = "Scheme-theoretic tropicalization over idempotent semirings"
)]
pub struct Cli {
    pub command: Command,
    /// JSON job file.
    #[arg(long)]
    pub job: PathBuf,
    /// Largest multiplier degree in derivation search.
    #[arg(long)]
    pub budget_degree: Option<u32>,
    /// Largest number of saturation rounds.
    #[arg(long)]
    pub budget_chain: Option<usize>,
    /// Largest number of rewrite moves.
    #[arg(long)]
    pub budget_frontier: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Result of running one job.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Value>,
    pub summary: String,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Resource(_) => 2,
            _ => 1,
        };
        Outcome {
            code,
            report: None,
            summary: e.to_string(),
        }
    }
}

type CmdResult = Result<(Value, bool, String), Error>;

fn parse_job<T: DeserializeOwned>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid job file: {e}")))
}

#[derive(Deserialize)]
struct Envelope {
    #[serde(default)]
    command: Option<String>,
    #[serde(default)]
    budget: BudgetSpec,
}

/// Runs a job given as JSON text. `threads` caps worker threads.
pub fn run_job(command: Command, text: &str, overrides: &BudgetSpec, threads: usize) -> Outcome {
    let env: Envelope = match serde_json::from_str::<Value>(text)
        .map_err(|e| Error::parse(format!("invalid JSON: {e}")))
        .and_then(|v| {
            let mut v = v;
            let obj = v.as_object_mut().ok_or_else(|| Error::parse("job file must be a JSON object"))?;
            let env = json!({ "command": obj.remove("command"), "budget": obj.remove("budget").unwrap_or(json!({})) });
            serde_json::from_value(env).map_err(|e| Error::parse(format!("invalid job envelope: {e}")))
        }) {
        Ok(e) => e,
        Err(e) => return Outcome::error(&e),
    };
    if let Some(c) = &env.command {
        if c != command.name() {
            return Outcome::error(&Error::usage(format!(
                "job is for `{c}` but `{}` was requested",
                command.name()
            )));
        }
    }
    let budget = match env.budget.resolve(overrides) {
        Ok(b) => b,
        Err(e) => return Outcome::error(&e),
    };
    let body = strip_envelope(text);
    let result = match command {
        Command::Trop => cmd_trop(&body),
        Command::Member => cmd_member(&body),
        Command::Univ => cmd_univ(&body),
        Command::Valcheck => cmd_valcheck(&body),
        Command::Pi => cmd_pi(&body),
        Command::Limit => cmd_limit(&body, threads),
        Command::Derive => cmd_derive(&body, &budget),
        Command::Axioms => cmd_axioms(&body),
    };
    match result {
        Ok((mut value, unknown, summary)) => {
            let obj = value.as_object_mut().expect("reports are objects");
            obj.insert("command".into(), json!(command.name()));
            obj.insert(
                "budget".into(),
                serde_json::to_value(budget).expect("budget serializes"),
            );
            obj.entry("degree").or_insert(Value::Null);
            Outcome {
                code: if unknown { 2 } else { 0 },
                report: Some(value),
                summary,
            }
        }
        Err(e) => Outcome::error(&e),
    }
}

fn strip_envelope(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).expect("validated above");
    if let Some(o) = v.as_object_mut() {
        o.remove("command");
        o.remove("budget");
    }
    v.to_string()
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TropJob {
    embedding: EmbeddingSpec,
    #[serde(default)]
    degree: Option<u64>,
}

fn cmd_trop(text: &str) -> CmdResult {
    let j: TropJob = parse_job(text)?;
    let e = j.embedding.build()?;
    let d = j.degree.unwrap_or_else(|| default_degree(&e));
    let p = trop_presentation(&e, d)?;
    let summary = format!(
        "degree {d}: {} basis polynomials, {} bend pairs",
        p.basis.len(),
        p.congruence.generators().len()
    );
    Ok((
        json!({ "degree": d, "presentation": to_value(&p) }),
        false,
        summary,
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MemberJob {
    embedding: EmbeddingSpec,
    point: BTreeMap<String, String>,
    #[serde(default)]
    degree: Option<u64>,
}

fn cmd_member(text: &str) -> CmdResult {
    let j: MemberJob = parse_job(text)?;
    let e = j.embedding.build()?;
    let d = j.degree.unwrap_or_else(|| default_degree(&e));
    let basis = trop_ideal_truncated(&e, d)?;
    let p = build_tpoint(e.monoid(), e.tag(), &j.point)?;
    let member = settheoretic_member(&p, &basis)?;
    Ok((
        json!({ "member": member, "degree": d, "point": to_value(&p), "basis_size": basis.len() }),
        false,
        format!("member: {member}"),
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct UnivJob {
    ring: RingSpec,
    valuation: ValuationSpec,
    #[serde(default)]
    sample: Option<SampleSpec>,
}

fn cmd_univ(text: &str) -> CmdResult {
    let j: UnivJob = parse_job(text)?;
    let a = Arc::new(j.ring.build()?);
    let v = j.valuation.build()?;
    let sample = match &j.sample {
        None => Sample::All,
        Some(s) => {
            let (elements, scalars) = s.build(&a)?;
            Sample::Elements { elements, scalars }
        }
    };
    let e = universal_embedding(a.clone(), v.clone(), &sample)?;
    let pres = universal_trop(a, v, &sample)?;
    let gens: Vec<String> = e.kernel().iter().map(|g| g.format(e.monoid())).collect();
    let mut out = json!({ "generators": gens, "presentation": to_value(&pres) });
    let mut unknown = false;
    let mut summary = format!("{} kernel generators", gens.len());
    if e.algebra().elements().is_some() && pres.tag == SemiringTag::Trop {
        let pts = solve_points(&pres.monoid, &pres.basis, &default_grid(), DEFAULT_NODE_CAP)?;
        unknown = !pts.complete;
        summary.push_str(&format!(", {} points", pts.points.len()));
        out["points"] = to_value(&pts);
    }
    Ok((out, unknown, summary))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValcheckJob {
    ring: RingSpec,
    valuation: ValuationSpec,
    point: AlgebraPointSpec,
    #[serde(default)]
    sample: Option<SampleSpec>,
}

fn cmd_valcheck(text: &str) -> CmdResult {
    let j: ValcheckJob = parse_job(text)?;
    let a = j.ring.build()?;
    let v = j.valuation.build()?;
    let alpha = j.point.build(&a, &v)?;
    let sample = match &j.sample {
        None => default_sample(&a)?,
        Some(s) => {
            let (elements, scalars) = s.build(&a)?;
            PointSample { elements, scalars }
        }
    };
    let r = is_valuation_point(&a, &alpha, &v, &sample)?;
    let summary = format!("valuation point: {}", r.is_valuation);
    Ok((json!({ "report": to_value(&r) }), false, summary))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PiJob {
    embedding: EmbeddingSpec,
    point: AlgebraPointSpec,
    #[serde(default)]
    degree: Option<u64>,
}

fn cmd_pi(text: &str) -> CmdResult {
    let j: PiJob = parse_job(text)?;
    let e = j.embedding.build()?;
    let alpha = j.point.build(e.algebra(), e.valuation())?;
    let p = pi_map(&e, &alpha)?;
    let d = j.degree.unwrap_or_else(|| default_degree(&e));
    let member = settheoretic_member(&p, &trop_ideal_truncated(&e, d)?)?;
    Ok((
        json!({ "point": to_value(&p), "member": member, "degree": d }),
        false,
        format!("π lands in trop: {member}"),
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LimitJob {
    nodes: Vec<EmbeddingSpec>,
    #[serde(default)]
    edges: Vec<EdgeSpec>,
    #[serde(default)]
    degree: Option<u64>,
    #[serde(default)]
    grid: Option<Vec<String>>,
}

fn cmd_limit(text: &str, threads: usize) -> CmdResult {
    let j: LimitJob = parse_job(text)?;
    let nodes = j
        .nodes
        .iter()
        .map(EmbeddingSpec::build)
        .collect::<Result<Vec<_>, _>>()?;
    let edges = j
        .edges
        .iter()
        .map(|e| e.build(&nodes))
        .collect::<Result<Vec<_>, _>>()?;
    let grid = match &j.grid {
        Some(g) => g
            .iter()
            .map(|x| crate::semiring::parse_rational(x))
            .collect::<Result<Vec<_>, _>>()?,
        None => default_grid(),
    };
    let opts = LimitOptions {
        degree: j.degree,
        grid,
        threads,
        node_cap: DEFAULT_NODE_CAP,
    };
    let r = limit_points(&nodes, &edges, &opts)?;
    let summary = format!(
        "{} compatible families{}; matches valuation points: {}",
        r.families.len(),
        if r.complete {
            ""
        } else {
            " (incomplete: grid fallback or cap)"
        },
        r.matches_valuation_points
            .map_or("n/a".to_string(), |b| b.to_string())
    );
    Ok((
        json!({ "limit": to_value(&r), "degree": j.degree }),
        !r.complete,
        summary,
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DeriveJob {
    monoid: MonoidSpec,
    #[serde(default)]
    semiring: Option<String>,
    #[serde(default)]
    generators: Vec<(String, String)>,
    /// Polynomials whose bend relations are added to the generators.
    #[serde(default)]
    bends: Vec<String>,
    goal: (String, String),
}

fn cmd_derive(text: &str, budget: &SearchBudget) -> CmdResult {
    let j: DeriveJob = parse_job(text)?;
    let m = Arc::new(j.monoid.build()?);
    let tag: SemiringTag = j.semiring.as_deref().unwrap_or("trop").parse()?;
    let mut gens = Vec::new();
    for (l, r) in &j.generators {
        gens.push(RelationPair::new(
            parse_trop(&m, tag, l)?,
            parse_trop(&m, tag, r)?,
        )?);
    }
    for f in &j.bends {
        gens.extend(bend(&parse_trop(&m, tag, f)?));
    }
    let c = Congruence::new(m.clone(), tag, gens)?;
    let goal = RelationPair::new(
        parse_trop(&m, tag, &j.goal.0)?,
        parse_trop(&m, tag, &j.goal.1)?,
    )?;
    let v = contains(&c, &goal, budget)?;
    let summary = match &v {
        Verdict::Proven(d) => format!("proven, derivation of length {}", d.len()),
        Verdict::Unknown { reason, .. } => format!("unknown: {reason}"),
    };
    let unknown = !v.is_proven();
    Ok((
        json!({ "goal": [goal.lhs, goal.rhs], "result": to_value(&v) }),
        unknown,
        summary,
    ))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableSpec {
    ring: RingSpec,
    values: BTreeMap<String, String>,
    #[serde(default)]
    semiring: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AxiomsJob {
    #[serde(default)]
    valuation: Option<ValuationSpec>,
    #[serde(default)]
    pairs: Option<Vec<(String, String)>>,
    #[serde(default)]
    table: Option<TableSpec>,
}

/// Small deterministic sample used when a job gives no pairs.
fn default_axiom_elements(field: crate::tropicalize::CoeffField) -> Vec<&'static str> {
    match field {
        crate::tropicalize::CoeffField::RationalFunctions => {
            vec![
                "0",
                "1",
                "-1",
                "t",
                "t^2 + t",
                "1/t",
                "(t + 1)/(t^2 - 3)",
                "2t",
                "3/4",
                "t - 1",
                "-t^3 + 5",
            ]
        }
        _ => vec![
            "0", "1", "-1", "2", "12", "-6", "3/8", "5", "9/2", "7", "-24", "1/3",
        ],
    }
}

fn cmd_axioms(text: &str) -> CmdResult {
    let j: AxiomsJob = parse_job(text)?;
    let report = match (&j.valuation, &j.table) {
        (Some(vs), None) => {
            let v = vs.build()?;
            let field = domain_field(&v);
            let pairs: Vec<(String, String)> = match &j.pairs {
                Some(p) => p.clone(),
                None => {
                    let els = default_axiom_elements(field);
                    els.iter()
                        .flat_map(|a| els.iter().map(move |b| (a.to_string(), b.to_string())))
                        .collect()
                }
            };
            let parsed = pairs
                .iter()
                .map(|(a, b)| {
                    Ok((
                        crate::tropicalize::parse_scalar(field, a)?,
                        crate::tropicalize::parse_scalar(field, b)?,
                    ))
                })
                .collect::<Result<Vec<(RingElement, RingElement)>, Error>>()?;
            check_axioms(&v, &parsed)?
        }
        (None, Some(t)) => {
            let crate::tropicalize::AffineAlgebra::Finite(r) = t.ring.build()? else {
                return Err(Error::usage("valuation tables need a finite ring"));
            };
            let tag: SemiringTag = t.semiring.as_deref().unwrap_or("trop").parse()?;
            let vals = r
                .names()
                .iter()
                .map(|n| match t.values.get(n) {
                    Some(x) => crate::semiring::SemiringValue::parse(tag, x),
                    None => Err(Error::usage(format!("no value for element `{n}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            check_table_axioms(&ValuationTable::new(r, vals)?)?
        }
        _ => return Err(Error::usage("give exactly one of `valuation` and `table`")),
    };
    let summary = format!(
        "{} pairs checked, {} violations",
        report.checked_pairs,
        report.violations.len()
    );
    Ok((
        json!({ "passed": report.passed(), "report": to_value(&report) }),
        false,
        summary,
    ))
}

/// Parses arguments, runs the job and writes the report. Returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let threads = std::env::var("BENDTROP_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let text = match std::fs::read_to_string(&cli.job) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.job.display());
            return 1;
        }
    };
    let overrides = BudgetSpec {
        degree: cli.budget_degree,
        chain: cli.budget_chain,
        frontier: cli.budget_frontier,
        context: None,
    };
    let outcome = run_job(cli.command, &text, &overrides, threads);
    if let Some(report) = &outcome.report {
        let body = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
        match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 1;
                }
            }
            None => print!("{body}"),
        }
        eprintln!("{}", outcome.summary);
    } else {
        eprintln!("error: {}", outcome.summary);
    }
    outcome.code
}
