//! Ternary bracelets as coordinates on the centralizer of `S_n` in `B_n(δ)`.
//!
//! A conjugacy class of diagrams is a product of bracelets over `{n, s, p}`.
//! Left multiplication by `A_n` becomes the second order operator
//! `Δ = ½ τ∘∂²` on such products.

pub mod calculus;
mod delta;
mod monomial;
mod phi;
mod word;

pub use calculus::{derive, trace_tau, ExtendedPolynomial};
pub use delta::{a_action, a_action_normalized, delta_op};
pub use monomial::{BraceletMonomial, BraceletVector};
pub use phi::{
    admissible_bracelets, basis_monomials, class_diagrams, class_from_monomial, phi, representative,
    stability_index, star,
};
pub use word::Bracelet;

use crate::brauer::AlgebraElement;
use crate::exactnum::RationalFunction;
use crate::Result;

/// Expands coordinates over `ě_ζ` (or `e_ζ` when `normalized` is false) into
/// an element of the Brauer algebra.
pub fn vector_to_element(v: &BraceletVector, normalized: bool) -> Result<AlgebraElement> {
    let mut x = AlgebraElement::zero(v.n());
    for (zeta, c) in v.terms() {
        let weight = if normalized {
            c.clone()
        } else {
            c.scale(&crate::exactnum::rat(zeta.stability_index() as i64))
        };
        for d in class_diagrams(zeta)?.iter() {
            x.add_term(d.clone(), &weight);
        }
    }
    Ok(x)
}

/// Reads off coordinates over `ě_ζ` from a central element: the coefficient
/// of any diagram in the class. Returns `None` if `x` is not constant on
/// classes.
pub fn element_to_vector(x: &AlgebraElement) -> Option<BraceletVector> {
    let mut v = BraceletVector::zero(x.n());
    let mut seen: std::collections::HashMap<BraceletMonomial, (RationalFunction, usize)> = Default::default();
    for (d, c) in x.terms() {
        let zeta = phi(d);
        match seen.get_mut(&zeta) {
            Some((prev, _)) if prev != c => return None,
            Some((_, k)) => *k += 1,
            None => {
                seen.insert(zeta, (c.clone(), 1));
            }
        }
    }
    for (zeta, (c, present)) in seen {
        if class_diagrams(&zeta).ok()?.len() != present {
            return None;
        }
        v.add_term(zeta, &c);
    }
    Some(v)
}
