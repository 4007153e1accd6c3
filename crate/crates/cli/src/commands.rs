//! Subcommand implementations. Each returns the text for stdout.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use qchar_core::analysis::{build_graph, dual_character, pole_candidates, tensor_scan, AnalysisError};
use qchar_core::engine::fundamental_seed;
use qchar_core::json::{from_json, monomial_triples, to_json, JsonError};
use qchar_core::restriction::{group_by_z, ZMonomial};
use qchar_core::{
    run_with, verify_character, EngineError, FundamentalCharacters, Limits, QCharacter, RootData, RootDataError,
    RunOptions, TotalOrder, YMonomial,
};

use crate::cache::{Cache, Miss};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Json(#[from] JsonError),
    #[error("verification failed")]
    Verification(String),
    #[error("engine failure on node {node}: {source}")]
    Engine { node: usize, source: EngineError },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 2,
            CliError::Engine { source: EngineError::LimitExceeded { .. }, .. } => 4,
            CliError::Engine { .. } => 3,
            _ => 1,
        }
    }

    /// Machine-readable diagnostic for stderr.
    pub fn diagnostic(&self) -> Value {
        match self {
            CliError::Engine { node, source } => {
                let mut v = json!({"error": "engine", "node": node, "message": source.to_string()});
                match source {
                    EngineError::LimitExceeded { kind, stats, partial } => {
                        v["error"] = json!("limits");
                        v["limit"] = json!(kind.to_string());
                        v["stats"] = json!(stats);
                        v["partial_terms"] = json!(partial.len());
                    }
                    EngineError::AdmissibilityFailure { stats, partial, .. } => {
                        v["stats"] = json!(stats);
                        v["partial_terms"] = json!(partial.len());
                    }
                    _ => {}
                }
                v
            }
            CliError::Verification(_) => json!({"error": "verification", "message": self.to_string()}),
            CliError::Json(e @ JsonError::Syntax { line, column, .. }) => {
                json!({"error": "input", "line": line, "column": column, "message": e.to_string()})
            }
            other => json!({"error": "input", "message": other.to_string()}),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Engine { node, source } => CliError::Engine { node, source },
            AnalysisError::RootData(e) => CliError::RootData(e),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Engine settings and cache shared by every subcommand.
pub struct Context {
    pub limits: Limits,
    pub order: TotalOrder,
    pub cache: Option<Cache>,
}

impl Context {
    /// JSON text of `chi_q(V_{omega_node}(0))`, from the cache when possible.
    pub fn fundamental_json(&self, rd: &RootData, node: usize) -> Result<String, CliError> {
        rd.check_node(node)?;
        if let Some(cache) = &self.cache {
            match cache.load(rd, node) {
                Ok(text) => return Ok(text),
                Err(Miss::Absent) => {}
                Err(miss) => eprintln!("qchar: ignoring cache entry for {}{}-{node}: {miss:?}", rd.label(), rd.rank()),
            }
        }
        let start = Instant::now();
        let options = RunOptions { limits: self.limits, order: self.order };
        let chi = run_with(rd, &fundamental_seed(node), options, |_| {})
            .map_err(|source| CliError::Engine { node, source })?;
        let wall_ms = start.elapsed().as_millis() as u64;
        let text = to_json(rd, Some(node), &chi);
        if let Some(cache) = &self.cache {
            if let Err(e) = cache.store(rd, node, &text, chi.len(), wall_ms) {
                eprintln!("qchar: could not write cache: {e}");
            }
        }
        Ok(text)
    }

    pub fn fundamental(&self, rd: &RootData, node: usize) -> Result<QCharacter, CliError> {
        Ok(from_json(&self.fundamental_json(rd, node)?)?.character)
    }

    /// A character store preloaded with the requested nodes.
    fn store(&self, rd: &RootData, nodes: impl IntoIterator<Item = usize>) -> Result<FundamentalCharacters, CliError> {
        let mut fc = FundamentalCharacters::with_limits(rd.clone(), self.limits);
        for node in nodes.into_iter().collect::<BTreeSet<_>>() {
            fc.insert(node, self.fundamental(rd, node)?);
        }
        Ok(fc)
    }
}

#[derive(Serialize)]
struct TermOut {
    m: Vec<[i64; 3]>,
    c: String,
}

fn terms_out<'a>(terms: impl Iterator<Item = (&'a YMonomial, String)>) -> Vec<TermOut> {
    terms.map(|(m, c)| TermOut { m: monomial_triples(m), c }).collect()
}

fn character_terms(chi: &QCharacter) -> Vec<TermOut> {
    terms_out(chi.terms().map(|(m, c)| (m, c.to_string())))
}

fn line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("output serializes");
    s.push('\n');
    s
}

pub fn compute(ctx: &Context, rd: &RootData, nodes: &[usize]) -> Result<String, CliError> {
    if let [node] = nodes {
        return ctx.fundamental_json(rd, *node);
    }
    let docs = nodes
        .iter()
        .map(|&n| ctx.fundamental_json(rd, n).map(|s| s.trim_end().to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("[\n{}\n]\n", docs.join(",\n")))
}

pub fn verify(text: &str) -> Result<String, CliError> {
    let file = from_json(text)?;
    let report = verify_character(&file.root_data, &file.character);
    let out = line(&json!({
        "passed": report.passed(),
        "fundamental": report.fundamental,
        "checks": report.checks,
    }));
    if report.passed() {
        Ok(out)
    } else {
        Err(CliError::Verification(out))
    }
}

pub fn poles(ctx: &Context, rd: &RootData, i: usize, j: usize) -> Result<String, CliError> {
    rd.check_node(i)?;
    rd.check_node(j)?;
    let mut fc = ctx.store(rd, [i, j])?;
    let k: Vec<i32> = pole_candidates(&mut fc, i, j)?.into_iter().collect();
    Ok(line(&json!({ "k": k })))
}

/// Parses `node@shift`.
pub fn parse_factor(s: &str) -> Result<(usize, i32), CliError> {
    let bad = || CliError::Input(format!("factor {s:?} is not of the form node@shift"));
    let (node, shift) = s.split_once('@').ok_or_else(bad)?;
    Ok((node.trim().parse().map_err(|_| bad())?, shift.trim().parse().map_err(|_| bad())?))
}

pub fn tensor(ctx: &Context, rd: &RootData, factors: &[(usize, i32)]) -> Result<String, CliError> {
    for &(node, _) in factors {
        rd.check_node(node)?;
    }
    let mut fc = ctx.store(rd, factors.iter().map(|f| f.0))?;
    let scan = tensor_scan(&mut fc, factors)?;
    if !scan.reducible() {
        return Ok(line(&json!({ "reducible": false })));
    }
    let witnesses = terms_out(scan.witnesses.iter().map(|(m, c)| (m, c.to_string())));
    Ok(line(&json!({ "reducible": true, "witnesses": witnesses })))
}

pub fn dual(ctx: &Context, rd: &RootData, node: usize) -> Result<String, CliError> {
    rd.check_node(node)?;
    let bar = rd.bar(node);
    let chi = dual_character(&ctx.fundamental(rd, node)?);
    let expected = ctx.fundamental(rd, bar)?.shifted(-rd.rh());
    Ok(line(&json!({
        "node": node,
        "bar": bar,
        "shift": -rd.rh(),
        "matches_shifted_fundamental": chi == expected,
        "terms": character_terms(&chi),
    })))
}

pub fn restrict(ctx: &Context, rd: &RootData, node: usize, subset: &[usize]) -> Result<String, CliError> {
    for &j in subset {
        rd.check_node(j)?;
    }
    let j: BTreeSet<usize> = subset.iter().copied().collect();
    let chi = ctx.fundamental(rd, node)?;
    let groups: Vec<Value> = group_by_z(rd, &j, &chi)
        .iter()
        .map(|g| {
            json!({
                "z": monomial_triples(&g.z_part),
                "label": ZMonomial::z_string(&g.z_part),
                "terms": character_terms(&g.character),
            })
        })
        .collect();
    Ok(line(&json!({ "subset": j, "groups": groups })))
}

pub fn graph(ctx: &Context, rd: &RootData, node: usize, dot: bool) -> Result<String, CliError> {
    let chi = ctx.fundamental(rd, node)?;
    let g = build_graph(rd, &chi);
    if dot {
        let mut out = format!("digraph \"{}{} node {node}\" {{\n", rd.lie_type(), rd.rank());
        for (k, (m, c)) in g.vertices.iter().enumerate() {
            let mult = if *c == 1u32.into() { String::new() } else { format!(" (x{c})") };
            out.push_str(&format!("  v{k} [label=\"{m}{mult}\"];\n"));
        }
        for e in &g.edges {
            out.push_str(&format!("  v{} -> v{} [label=\"{},{}\"];\n", e.from, e.to, e.node, e.shift));
        }
        out.push_str("}\n");
        return Ok(out);
    }
    Ok(line(&json!({
        "connected": g.is_connected(),
        "vertices": terms_out(g.vertices.iter().map(|(m, c)| (m, c.to_string()))),
        "edges": g.edges,
    })))
}
