//! Browser bindings: eigenvalue spectra, the traceless projector in the
//! normalized bracelet basis, and Littlewood-Richardson coefficients.
//!
//! Every function returns a JSON string. Failures come back as
//! `{"error": "..."}` so the page never has to catch a JS exception.

use serde_json::{json, Value};
use traceless::projector::{spectrum_universal, universal_projector};
use traceless::young::{lr_coefficient, Partition};
use traceless::{Eps, GroupParams, Regime};
use wasm_bindgen::prelude::wasm_bindgen;

fn regime(dim: u32, eps: i32) -> traceless::Result<Regime> {
    if dim == 0 {
        return Ok(Regime::Generic);
    }
    let eps = Eps::from_sign(eps as i64)?;
    Ok(Regime::Group(GroupParams::new(dim as usize, eps)?))
}

fn respond(r: traceless::Result<Value>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() })).to_string()
}

/// Distinct eigenvalues of `A_n`. `dim = 0` asks for the generic spectrum.
#[wasm_bindgen]
pub fn spectrum(n: u32, dim: u32, eps: i32) -> String {
    respond((|| {
        let entries = spectrum_universal(n as usize, regime(dim, eps)?)?;
        let eigenvalues: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "value": e.value.to_string(),
                    "specialized": e.specialized,
                    "f": e.f,
                    "skew": e.skew.to_string(),
                })
            })
            .collect();
        Ok(json!({ "n": n, "eigenvalues": eigenvalues }))
    })())
}

/// The universal traceless projector on `n` points (the splitting
/// idempotent when `dim = 0`).
#[wasm_bindgen]
pub fn project(n: u32, dim: u32, eps: i32) -> String {
    const MAX_POINTS: u32 = 6;
    if n > MAX_POINTS {
        return json!({ "error": format!("the demo stops at n = {MAX_POINTS}") }).to_string();
    }
    respond(regime(dim, eps).and_then(|r| universal_projector(n as usize, r)).and_then(|p| p.to_json()))
}

/// `c^μ_{λν}` for comma-separated partitions.
#[wasm_bindgen]
pub fn lr(mu: &str, lambda: &str, nu: &str) -> String {
    respond((|| {
        let parse = |s: &str| s.parse::<Partition>();
        let c = lr_coefficient(&parse(mu)?, &parse(lambda)?, &parse(nu)?);
        Ok(json!({ "coefficient": c }))
    })())
}
