//! Command-line surface for `toric-hyper`.
//!
//! [`run`] is the whole program minus process I/O: it takes the argument list
//! and the input bytes and returns the exit code with stdout and stderr.
//! Exit codes: 0 success, 1 other failure, 2 parse or usage error, 3 resource
//! limit (stderr then carries a JSON object with any partial result).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use toric_hyper::bouquet::{
    bouquet_monomial, default_bound, matching_pair_primitive, recognize_bouquet, recognize_matching_pair, Side,
    SunflowerDecomposition,
};
use toric_hyper::discrepancy::{direct_balanced_coloring, discrepancy, is_monomial_via_dual, primitive_via_dual};
use toric_hyper::fiber::{enumerate_fiber_capped, fiber_connected, margin, random_walk, FiberPoint, DEFAULT_POINT_CAP};
use toric_hyper::graver::{
    classify_graph_walk, graver_basis, proper_conformal_subvector, squarefree, GraverConfig, Method, DEFAULT_MAX_WORK,
};
use toric_hyper::io::{
    bicoloring_json, multihypergraph_doc, parse_bicoloring, parse_binomial, parse_edge_list, parse_hypergraph_value,
    parse_vector, walk_vector_json, Parsed,
};
use toric_hyper::{decompose, dual, in_ideal, is_balanced, Bicoloring, Error, Hypergraph, WalkVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "toric-hyper",
    version,
    about = "Toric ideals of hypergraphs: Graver bases, walks, bouquets, discrepancy, fibers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input file (read by the binary; `-` or absent means stdin).
    #[arg(long, short, global = true)]
    pub input: Option<PathBuf>,

    /// Read the input as a plain-text edge list instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,

    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    /// Indented JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Work cap for Graver computations and fiber enumeration.
    #[arg(long, global = true, env = "TORIC_HYPER_MAX_WORK")]
    pub max_work: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graver basis of the toric ideal.
    Graver(GraverArgs),
    /// Decide whether a kernel vector is primitive.
    Primitive(VectorArgs),
    /// Check the balancing condition of a bicoloring.
    Balance(VectorArgs),
    /// Split a balanced bicoloring into monomial walks.
    Decompose(VectorArgs),
    /// Recognize a matching pair or sunflower bouquet and certify it.
    Bouquet(BouquetArgs),
    /// Exact discrepancy.
    Disc(DiscArgs),
    /// The dual hypergraph.
    Dual,
    /// Enumerate or walk a fiber of the monomial map.
    Fiber(FiberArgs),
    /// Membership of a binomial in the toric ideal.
    IdealMember(IdealArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Completion,
    Oracle,
}

#[derive(Debug, Args)]
pub struct GraverArgs {
    #[arg(long, value_enum, default_value = "completion")]
    pub method: MethodArg,
    /// Degree bound; required by the oracle.
    #[arg(long)]
    pub degree_bound: Option<u64>,
    /// Keep only elements with entries in {−1, 0, 1}.
    #[arg(long)]
    pub squarefree_only: bool,
}

#[derive(Debug, Args)]
pub struct VectorArgs {
    /// Coefficient vector as JSON; overrides a `vector` key in the input.
    #[arg(long, conflicts_with = "bicoloring")]
    pub vector: Option<String>,
    /// `{"blue": [...], "red": [...]}`; overrides a `bicoloring` key in the input.
    #[arg(long)]
    pub bicoloring: Option<String>,
}

#[derive(Debug, Args)]
pub struct BouquetArgs {
    /// Largest multiplicity searched (default from the component sizes).
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DiscArgs {
    /// Also compare the dual test against a direct search of edge colorings.
    #[arg(long)]
    pub dual_check: bool,
}

#[derive(Debug, Args)]
pub struct FiberArgs {
    /// Vertex margin as a JSON array.
    #[arg(long)]
    pub margin: Option<String>,
    /// Starting edge counts as a JSON array (defines the margin when none is given).
    #[arg(long)]
    pub start: Option<String>,
    /// List every point of the fiber.
    #[arg(long)]
    pub enumerate: bool,
    /// Run a seeded walk of this many steps; prints one point per line.
    #[arg(long, conflicts_with_all = ["enumerate", "check_connected"])]
    pub walk: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Whether Graver moves connect the fiber.
    #[arg(long)]
    pub check_connected: bool,
    /// Use only the squarefree Graver elements as moves.
    #[arg(long)]
    pub squarefree_only: bool,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// For example `t13t24 - t12t34` or `t_{e0}*t_{e5} - t_{e1}*t_{e4}`.
    #[arg(long)]
    pub binomial: Option<String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { resource, limit, partial } => Failure {
                code: EXIT_RESOURCE,
                message: json!({
                    "error": "resource-limit",
                    "resource": resource,
                    "limit": limit,
                    "partial": partial,
                })
                .to_string(),
            },
            Error::Parse(_) => Failure { code: EXIT_PARSE, message: format!("error: {e}") },
            other => Failure { code: EXIT_FAILURE, message: format!("error: {other}") },
        }
    }
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_PARSE, message: format!("error: {}", message.into()) }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, input: &[u8]) -> (i32, Vec<u8>, Vec<u8>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return if e.use_stderr() { (EXIT_PARSE, Vec::new(), text) } else { (EXIT_OK, text, Vec::new()) };
        }
    };
    match execute(&cli, input) {
        Ok(Output::Json(v)) => {
            let mut s = if cli.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) }
                .expect("values serialize");
            s.push('\n');
            (EXIT_OK, s.into_bytes(), Vec::new())
        }
        Ok(Output::Lines(lines)) => {
            let mut s = String::new();
            for l in lines {
                s.push_str(&serde_json::to_string(&l).expect("values serialize"));
                s.push('\n');
            }
            (EXIT_OK, s.into_bytes(), Vec::new())
        }
        Err(f) => {
            let mut m = f.message;
            m.push('\n');
            (f.code, Vec::new(), m.into_bytes())
        }
    }
}

enum Output {
    Json(Value),
    Lines(Vec<Value>),
}

/// Parsed input plus the optional extra keys a document may carry.
struct Input {
    parsed: Parsed,
    extra: serde_json::Map<String, Value>,
}

const EXTRA_KEYS: [&str; 5] = ["vector", "bicoloring", "binomial", "margin", "start"];

fn read_input(cli: &Cli, bytes: &[u8]) -> Result<Input, Failure> {
    if cli.text {
        let text = std::str::from_utf8(bytes).map_err(|e| parse_failure(format!("input is not UTF-8: {e}")))?;
        let parsed = parse_edge_list(text).map_err(|e| parse_failure(e.to_string()))?;
        return Ok(Input { parsed, extra: Default::default() });
    }
    let mut v: Value = serde_json::from_slice(bytes).map_err(|e| parse_failure(format!("input JSON: {e}")))?;
    let mut extra = serde_json::Map::new();
    if let Value::Object(map) = &mut v {
        for k in EXTRA_KEYS {
            if let Some(x) = map.remove(k) {
                extra.insert(k.to_string(), x);
            }
        }
    }
    let parsed = parse_hypergraph_value(v).map_err(|e| parse_failure(e.to_string()))?;
    Ok(Input { parsed, extra })
}

/// A flag value (JSON text) or the same-named key of the input document.
fn flag_or_key(flag: &Option<String>, input: &Input, key: &str) -> Result<Option<Value>, Failure> {
    match flag {
        Some(s) => serde_json::from_str(s).map(Some).map_err(|e| parse_failure(format!("--{key}: {e}"))),
        None => Ok(input.extra.get(key).cloned()),
    }
}

fn max_work(cli: &Cli) -> u64 {
    cli.max_work.unwrap_or(DEFAULT_MAX_WORK)
}

fn execute(cli: &Cli, bytes: &[u8]) -> Result<Output, Failure> {
    let input = read_input(cli, bytes)?;
    let h = input.parsed.hypergraph().clone();
    match &cli.command {
        Command::Graver(a) => graver_cmd(cli, &h, a),
        Command::Primitive(a) => primitive_cmd(&h, &input, a),
        Command::Balance(a) => balance_cmd(&h, &input, a),
        Command::Decompose(a) => decompose_cmd(&h, &input, a),
        Command::Bouquet(a) => bouquet_cmd(&input, a),
        Command::Disc(a) => disc_cmd(&h, a),
        Command::Dual => {
            let d = dual(&h)?;
            let doc = if d.hypergraph.is_simple() {
                toric_hyper::io::hypergraph_doc(d.hypergraph.base())
            } else {
                multihypergraph_doc(&d.hypergraph)
            };
            Ok(Output::Json(serde_json::to_value(doc).expect("documents serialize")))
        }
        Command::Fiber(a) => fiber_cmd(cli, &h, &input, a),
        Command::IdealMember(a) => {
            let text = match &a.binomial {
                Some(s) => s.clone(),
                None => match input.extra.get("binomial") {
                    Some(Value::String(s)) => s.clone(),
                    _ => return Err(parse_failure("ideal-member needs --binomial")),
                },
            };
            let b = parse_binomial(&h, &text).map_err(|e| parse_failure(e.to_string()))?;
            Ok(Output::Json(Value::Bool(in_ideal(&b))))
        }
    }
}

fn graver_config(cli: &Cli, a: &GraverArgs) -> GraverConfig {
    GraverConfig {
        method: match a.method {
            MethodArg::Completion => Method::Completion,
            MethodArg::Oracle => Method::BoundedOracle,
        },
        degree_bound: a.degree_bound,
        max_work: max_work(cli),
    }
}

fn graver_cmd(cli: &Cli, h: &Hypergraph, a: &GraverArgs) -> Result<Output, Failure> {
    let g = graver_basis(h, &graver_config(cli, a))?;
    let elements = if a.squarefree_only { squarefree(&g.elements) } else { g.elements };
    Ok(Output::Json(Value::Array(elements.iter().map(walk_vector_json).collect())))
}

/// The kernel vector given by `--vector` or `--bicoloring` (or input keys).
fn vector_input(h: &Hypergraph, input: &Input, a: &VectorArgs) -> Result<Vec<i64>, Failure> {
    if let Some(v) = flag_or_key(&a.vector, input, "vector")? {
        return parse_vector(h, &v).map_err(|e| parse_failure(e.to_string()));
    }
    let c = bicoloring_input(h, input, a)?;
    Ok(c.difference()?)
}

fn bicoloring_input(h: &Hypergraph, input: &Input, a: &VectorArgs) -> Result<Bicoloring, Failure> {
    if let Some(v) = flag_or_key(&a.bicoloring, input, "bicoloring")? {
        return parse_bicoloring(h, &v).map_err(|e| parse_failure(e.to_string()));
    }
    if let Some(v) = flag_or_key(&a.vector, input, "vector")? {
        let u = parse_vector(h, &v).map_err(|e| parse_failure(e.to_string()))?;
        let blue = u.iter().map(|&x| x.max(0) as u64).collect();
        let red = u.iter().map(|&x| (-x).max(0) as u64).collect();
        return Ok(Bicoloring::new(h.clone(), blue, red)?);
    }
    Err(parse_failure("expected --vector or --bicoloring"))
}

fn primitive_cmd(h: &Hypergraph, input: &Input, a: &VectorArgs) -> Result<Output, Failure> {
    let u = vector_input(h, input, a)?;
    let w = WalkVector::new(h.clone(), u)?;
    if w.is_zero() {
        return Err(Error::ZeroVector.into());
    }
    let sub = proper_conformal_subvector(h, w.coeffs());
    let mut out = json!({
        "primitive": sub.is_none(),
        "vector": walk_vector_json(&w),
        "subwalk": sub,
    });
    if h.is_uniform(2) {
        let shape = classify_graph_walk(h, w.coeffs()).map(|k| format!("{k:?}"));
        out["graph_shape"] = json!(shape);
    }
    Ok(Output::Json(out))
}

fn balance_cmd(h: &Hypergraph, input: &Input, a: &VectorArgs) -> Result<Output, Failure> {
    let c = bicoloring_input(h, input, a)?;
    let mut out = json!({ "balanced": is_balanced(&c) });
    if let Some((v, blue, red)) = c.first_unbalanced() {
        out["vertex"] = json!(v);
        out["blue"] = json!(blue);
        out["red"] = json!(red);
    }
    Ok(Output::Json(out))
}

fn decompose_cmd(h: &Hypergraph, input: &Input, a: &VectorArgs) -> Result<Output, Failure> {
    let c = bicoloring_input(h, input, a)?;
    let walks = decompose(&c)?;
    let list: Vec<Value> = walks.iter().map(|w| json!({ "steps": w.steps, "length": w.len() })).collect();
    Ok(Output::Json(json!({ "walks": list })))
}

fn bouquet_cmd(input: &Input, a: &BouquetArgs) -> Result<Output, Failure> {
    let h = input.parsed.hypergraph();
    if let Some(pair) = recognize_matching_pair(h) {
        let multi = input.parsed.clone().into_multi();
        let primitive = matching_pair_primitive(h, &multi)?;
        return Ok(Output::Json(json!({
            "classification": "matching-pair",
            "red": pair.red,
            "blue": pair.blue,
            "primitive": primitive,
        })));
    }
    let Some(d) = recognize_bouquet(h) else {
        return Ok(Output::Json(json!({ "classification": "none" })));
    };
    let bound = a.bound.unwrap_or_else(|| default_bound(&d));
    let cert = bouquet_monomial(&d, bound)?;
    let mut out = decomposition_json(&d);
    out["bound"] = json!(bound);
    out["certificate"] = match cert {
        None => Value::Null,
        Some(c) => json!({
            "partition": { "J": c.side(Side::J), "K": c.side(Side::K) },
            "multiplicities": c.multiplicities,
            "primitive": c.primitive,
            "witness": bicoloring_json(&c.witness),
        }),
    };
    Ok(Output::Json(out))
}

fn decomposition_json(d: &SunflowerDecomposition) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .zip(&d.petal_counts)
        .map(|(c, g)| json!({ "vertices": c.vertices, "edges": c.edges, "petals": g }))
        .collect();
    json!({
        "classification": d.kind.as_str(),
        "core": d.core,
        "sunflowers": d.sunflowers,
        "matching": d.matching,
        "components": components,
    })
}

fn disc_cmd(h: &Hypergraph, a: &DiscArgs) -> Result<Output, Failure> {
    let r = discrepancy(h)?;
    let mut out = json!({ "value": r.value, "witness": r.witness.chi });
    if a.dual_check {
        let via_dual = is_monomial_via_dual(h)?;
        let direct = direct_balanced_coloring(h)?;
        let primitive = match &via_dual {
            Some(_) => Some(primitive_via_dual(h)?),
            None => None,
        };
        out["dual_check"] = json!({
            "monomial": via_dual.is_some(),
            "bicoloring": via_dual.as_ref().map(bicoloring_json),
            "direct": direct.is_some(),
            "agree": via_dual.is_some() == direct.is_some(),
            "primitive": primitive,
        });
    }
    Ok(Output::Json(out))
}

fn fiber_cmd(cli: &Cli, h: &Hypergraph, input: &Input, a: &FiberArgs) -> Result<Output, Failure> {
    let start = match flag_or_key(&a.start, input, "start")? {
        Some(v) => {
            let counts: Vec<u64> = serde_json::from_value(v).map_err(|e| parse_failure(format!("start: {e}")))?;
            Some(FiberPoint::new(h.clone(), counts).map_err(|e| parse_failure(e.to_string()))?)
        }
        None => None,
    };
    let b: Vec<u64> = match (flag_or_key(&a.margin, input, "margin")?, &start) {
        (Some(v), _) => serde_json::from_value(v).map_err(|e| parse_failure(format!("margin: {e}")))?,
        (None, Some(p)) => margin(p),
        (None, None) => return Err(parse_failure("fiber needs --margin or --start")),
    };
    if b.len() != h.n() {
        return Err(parse_failure(format!("margin has {} entries, expected {}", b.len(), h.n())));
    }
    if let Some(p) = &start {
        if margin(p) != b {
            return Err(Failure {
                code: EXIT_FAILURE,
                message: "error: start point does not have the given margin".into(),
            });
        }
    }
    let cfg = GraverConfig { max_work: max_work(cli), ..GraverConfig::default() };
    let moves = || -> Result<Vec<WalkVector>, Failure> {
        let g = graver_basis(h, &cfg)?;
        Ok(if a.squarefree_only { squarefree(&g.elements) } else { g.elements })
    };
    let cap = cli.max_work.unwrap_or(DEFAULT_POINT_CAP);

    if let Some(steps) = a.walk {
        let p = match start {
            Some(p) => p,
            None => {
                let f = enumerate_fiber_capped(h, &b, cap)?;
                f.points
                    .into_iter()
                    .next()
                    .ok_or_else(|| Failure { code: EXIT_FAILURE, message: "error: the fiber is empty".into() })?
            }
        };
        let trace = random_walk(&p, &moves()?, steps, a.seed)?;
        return Ok(Output::Lines(trace.iter().map(|q| json!(q.counts())).collect()));
    }

    let f = enumerate_fiber_capped(h, &b, cap)?;
    let mut out = json!({ "margin": b, "count": f.len() });
    if a.enumerate || !a.check_connected {
        out["points"] = json!(f.points.iter().map(|p| p.counts().to_vec()).collect::<Vec<_>>());
    }
    if a.check_connected {
        out["connected"] = json!(fiber_connected(&f, &moves()?));
    }
    Ok(Output::Json(out))
}
