//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every exported function takes plain strings and numbers and returns a JSON
//! string; errors surface as JavaScript exceptions carrying the message.

use serde_json::json;
use wasm_bindgen::prelude::*;

use qchar_core::analysis::{pole_candidates, FundamentalCharacters};
use qchar_core::engine::fundamental_seed;
use qchar_core::json::{from_json, to_json};
use qchar_core::{run, verify_character, LieType, Limits, RootData};

/// Smaller than the native defaults: a browser tab should fail fast.
const LIMITS: Limits = Limits { max_terms: 200_000, max_steps: 2_000_000 };

/// Monomials shown on the page; the JSON always carries all of them.
const SHOWN: usize = 400;

fn root_data(lie_type: &str, rank: usize) -> Result<RootData, String> {
    let t: LieType = lie_type.parse().map_err(|e: qchar_core::RootDataError| e.to_string())?;
    RootData::new(t, rank).map_err(|e| e.to_string())
}

fn compute_inner(lie_type: &str, rank: usize, node: usize) -> Result<String, String> {
    let rd = root_data(lie_type, rank)?;
    rd.check_node(node).map_err(|e| e.to_string())?;
    let chi = run(&rd, &fundamental_seed(node), LIMITS).map_err(|e| e.to_string())?;
    let lines: Vec<String> = chi
        .terms()
        .take(SHOWN)
        .map(|(m, c)| if *c == 1u32.into() { m.to_string() } else { format!("{c} {m}") })
        .collect();
    Ok(json!({
        "label": format!("{}{}", rd.lie_type(), rd.rank()),
        "node": node,
        "terms": chi.len(),
        "dimension": chi.dimension().to_string(),
        "shown": lines,
        "json": to_json(&rd, Some(node), &chi),
    })
    .to_string())
}

fn verify_inner(text: &str) -> Result<String, String> {
    let file = from_json(text).map_err(|e| e.to_string())?;
    let report = verify_character(&file.root_data, &file.character);
    Ok(json!({ "passed": report.passed(), "checks": report.checks }).to_string())
}

fn poles_inner(lie_type: &str, rank: usize, i: usize, j: usize) -> Result<String, String> {
    let rd = root_data(lie_type, rank)?;
    let mut chars = FundamentalCharacters::with_limits(rd, LIMITS);
    let k: Vec<i32> = pole_candidates(&mut chars, i, j).map_err(|e| e.to_string())?.into_iter().collect();
    Ok(json!({ "i": i, "j": j, "k": k }).to_string())
}

#[wasm_bindgen]
pub fn compute(lie_type: &str, rank: usize, node: usize) -> Result<String, JsError> {
    compute_inner(lie_type, rank, node).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(text: &str) -> Result<String, JsError> {
    verify_inner(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn poles(lie_type: &str, rank: usize, i: usize, j: usize) -> Result<String, JsError> {
    poles_inner(lie_type, rank, i, j).map_err(|e| JsError::new(&e))
}
