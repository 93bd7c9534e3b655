use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::calculus::{derive, trace_tau, ExtendedPolynomial};
use super::monomial::{BraceletMonomial, BraceletVector};
use crate::exactnum::{ratio, RationalFunction};
use crate::Result;

type DeltaCache = Mutex<HashMap<BraceletMonomial, BraceletVector>>;

fn delta_cache() -> &'static DeltaCache {
    static CACHE: OnceLock<DeltaCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Δ(ζ) = ½ τ(∂²ζ)`: the coordinates of `A_n·e_ζ` in the basis `e_ξ`.
/// Memoized per monomial.
pub fn delta_op(zeta: &BraceletMonomial) -> Result<BraceletVector> {
    if let Some(hit) = delta_cache().lock().expect("delta cache poisoned").get(zeta) {
        return Ok(hit.clone());
    }
    let d2 = derive(&derive(&ExtendedPolynomial::from_monomial(zeta)));
    let v = if d2.is_zero() {
        BraceletVector::zero(zeta.degree())
    } else {
        trace_tau(&d2)?.scale(&RationalFunction::constant(ratio(1, 2)))
    };
    delta_cache().lock().expect("delta cache poisoned").insert(zeta.clone(), v.clone());
    Ok(v)
}

/// `A_n·v` for `v` given over the normalized basis `ě_ζ`, using
/// `A·ě_ζ = Σ_ξ (st(ξ)/st(ζ))·Δ^ξ_ζ·ě_ξ`.
pub fn a_action_normalized(v: &BraceletVector) -> Result<BraceletVector> {
    let parts: Vec<Result<BraceletVector>> = v
        .terms()
        .par_iter()
        .map(|(zeta, c)| {
            let col = delta_op(zeta)?;
            let st_zeta = zeta.stability_index() as i64;
            let mut part = BraceletVector::zero(v.n());
            for (xi, d) in col.terms() {
                let w = RationalFunction::constant(ratio(xi.stability_index() as i64, st_zeta));
                part.add_term(xi.clone(), &(&(d * &w) * c));
            }
            Ok(part)
        })
        .collect();
    let mut out = BraceletVector::zero(v.n());
    for p in parts {
        out.add_scaled(&p?, &RationalFunction::one());
    }
    Ok(out)
}

/// `A_n·v` for `v` given over the class-sum basis `e_ζ`.
pub fn a_action(v: &BraceletVector) -> Result<BraceletVector> {
    let mut out = BraceletVector::zero(v.n());
    for (zeta, c) in v.terms() {
        out.add_scaled(&delta_op(zeta)?, c);
    }
    Ok(out)
}
