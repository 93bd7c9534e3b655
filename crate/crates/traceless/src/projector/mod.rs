//! Spectra of `A_n` and the traceless projector in bracelet coordinates.
//!
//! Every projector here is a product `∏ (1 − A_n/α)` over a list of
//! eigenvalues. Starting from the unit `ě_{[p]^n}`, each factor is one
//! application of [`a_action_normalized`], so the coordinates over the
//! normalized class sums `ě_ζ` come out directly.

mod spectrum;

pub use spectrum::{spectrum_reduced, spectrum_reduced_generic, spectrum_universal, spectrum_values, SpectrumEntry};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bracelets::{a_action_normalized, element_to_vector, vector_to_element, BraceletMonomial, BraceletVector};
use crate::brauer::{central_young_symmetriser, multiply_elements, AlgebraElement};
use crate::exactnum::{rat, RationalFunction};
use crate::young::{admissible_lambda, Partition};
use crate::{Eps, Error, GroupParams, Regime, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectorKind {
    Universal,
    Reduced(Partition),
    QuasiAdditive,
    Splitting,
}

/// A projector given by its coordinates over `ě_ζ`, together with the
/// eigenvalues that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorForm {
    pub kind: ProjectorKind,
    pub regime: Regime,
    pub coordinates: BraceletVector,
    pub provenance: Vec<SpectrumEntry>,
}

/// Expands `∏ (1 − A_n/α)·ě_{[p]^n}` over a list of eigenvalues.
///
/// The product is rewritten as `∏ (α − A_n) / ∏ α`, so only the powers
/// `A_n^j·ě_{[p]^n}` are needed. Those have polynomial coordinates, and the
/// single division by `∏ α` happens at the end. The result equals applying
/// `v ← v − (1/α)·A_n v` once per eigenvalue.
///
/// Eigenvalues enter as polynomials in `δ`. An eigenvalue that vanishes,
/// identically or at the chosen `δ = εN`, is refused: the caller is
/// expected to drop that factor.
pub fn expand_factorized(n: usize, spectrum: &[SpectrumEntry]) -> Result<BraceletVector> {
    for entry in spectrum {
        if entry.value.is_zero() || entry.specialized == Some(0) {
            return Err(Error::ZeroEigenvalue(format!("{} from {}", entry.value, entry.skew)));
        }
    }
    let alphas = spectrum_values(spectrum);
    // Coefficients of ∏ (α − t) as a polynomial in t.
    let mut poly = vec![RationalFunction::one()];
    let mut denominator = RationalFunction::one();
    for alpha in &alphas {
        let mut next = vec![RationalFunction::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j] += &(c * alpha);
            next[j + 1] -= c;
        }
        poly = next;
        denominator *= alpha;
    }
    let mut power = BraceletVector::basis(BraceletMonomial::p_power(n));
    let mut numerator = BraceletVector::zero(n);
    for (j, c) in poly.iter().enumerate() {
        if j > 0 {
            power = a_action_normalized(&power)?;
        }
        numerator.add_scaled(&power, c);
    }
    Ok(numerator.scale(&denominator.inv()?))
}

/// `P_n` for a group, or the splitting idempotent `P̄_n` when generic.
pub fn universal_projector(n: usize, regime: Regime) -> Result<ProjectorForm> {
    let provenance = spectrum_universal(n, regime)?;
    let coordinates = expand_factorized(n, &provenance)?;
    let kind = match regime {
        Regime::Generic => ProjectorKind::Splitting,
        Regime::Group(_) => ProjectorKind::Universal,
    };
    Ok(ProjectorForm { kind, regime, coordinates, provenance })
}

/// `P̄_n`: the product over the generic spectrum.
pub fn splitting_idempotent(n: usize) -> Result<ProjectorForm> {
    universal_projector(n, Regime::Generic)
}

/// `P_n^(μ)`, the projector restricted to the symmetry type `μ`. The unit
/// when the reduced spectrum is empty.
pub fn reduced_projector(mu: &Partition, regime: Regime) -> Result<ProjectorForm> {
    let provenance = match regime {
        Regime::Generic => spectrum_reduced_generic(mu),
        Regime::Group(g) => spectrum_reduced(mu, g.dim, g.eps)?,
    };
    let coordinates = expand_factorized(mu.size(), &provenance)?;
    Ok(ProjectorForm { kind: ProjectorKind::Reduced(mu.clone()), regime, coordinates, provenance })
}

/// `Σ_ζ a_ζ ě_ζ` written out over diagrams.
pub fn to_algebra_element(p: &ProjectorForm) -> Result<AlgebraElement> {
    vector_to_element(&p.coordinates, true)
}

/// `P̃_n = Σ_{μ ∈ Λ_{n,N}} P_n^(μ) z^(μ)`, computed on diagrams.
///
/// Coefficients are evaluated at `δ = εN`. Equal to `P_n` as an operator
/// on `V⊗n`, not necessarily in the algebra.
pub fn quasi_additive(n: usize, dim: usize, eps: Eps) -> Result<AlgebraElement> {
    let g = GroupParams::new(dim, eps)?;
    let labels = admissible_lambda(n, dim, eps)?;
    let parts: Vec<Result<AlgebraElement>> = labels
        .par_iter()
        .map(|mu| {
            let p = to_algebra_element(&reduced_projector(mu, Regime::Group(g))?)?;
            multiply_elements(&p, &central_young_symmetriser(mu))?.specialize(&rat(g.delta()))
        })
        .collect();
    let mut sum = AlgebraElement::zero(n);
    for p in parts {
        sum = sum.add(&p?)?;
    }
    Ok(sum)
}

/// [`quasi_additive`] read back into bracelet coordinates. Each summand
/// commutes with the permutations, so the sum is constant on classes.
pub fn quasi_additive_form(n: usize, dim: usize, eps: Eps) -> Result<ProjectorForm> {
    let g = GroupParams::new(dim, eps)?;
    let x = quasi_additive(n, dim, eps)?;
    let coordinates = element_to_vector(&x).expect("sums of P^(μ)z^(μ) are central");
    let mut provenance = Vec::new();
    for mu in admissible_lambda(n, dim, eps)? {
        provenance.extend(spectrum_reduced(&mu, dim, eps)?);
    }
    Ok(ProjectorForm { kind: ProjectorKind::QuasiAdditive, regime: Regime::Group(g), coordinates, provenance })
}

impl ProjectorForm {
    pub fn n(&self) -> usize {
        self.coordinates.n()
    }

    /// Coordinates with `δ = εN` substituted. Generic forms are returned unchanged.
    pub fn specialized_coordinates(&self) -> Result<BraceletVector> {
        let Regime::Group(g) = self.regime else {
            return Ok(self.coordinates.clone());
        };
        self.coordinates.specialize(&rat(g.delta()))
    }

    /// The JSON export:
    /// `{"n", "delta", "basis": "normalized_bracelet", "terms", "spectrum"}`.
    /// With a group fixed, the coefficients are the values at `δ = εN`.
    pub fn to_json(&self) -> Result<Value> {
        let coordinates = self.specialized_coordinates()?;
        let terms: Vec<Value> = coordinates
            .terms()
            .iter()
            .map(|(z, c)| json!({"monomial": z.to_string(), "coefficient": c}))
            .collect();
        let spectrum: Vec<Value> = self
            .provenance
            .iter()
            .map(|e| json!({"f": e.f, "skew": e.skew, "value": e.value}))
            .collect();
        Ok(json!({
            "n": self.n(),
            "delta": self.regime.to_string(),
            "kind": self.kind,
            "basis": "normalized_bracelet",
            "terms": terms,
            "spectrum": spectrum,
        }))
    }
}
