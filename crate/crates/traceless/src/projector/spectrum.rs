use serde::Serialize;

use crate::exactnum::{Polynomial, RationalFunction};
use crate::young::{
    admissible_lambda, closure_set, closure_set_generic, in_lambda, in_sigma, jdt_quotient, partitions_of, Partition,
    SkewShape,
};
use crate::{Eps, Error, GroupParams, Regime, Result};

/// One nonzero eigenvalue candidate of `A_n`, with the skew shape it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub f: usize,
    pub skew: SkewShape,
    /// `(δ−1)f + c(skew)`.
    pub value: RationalFunction,
    /// The value at `δ = εN`, when a group is fixed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialized: Option<i64>,
}

impl SpectrumEntry {
    fn new(f: usize, outer: &Partition, inner: &Partition, group: Option<GroupParams>) -> SpectrumEntry {
        let skew = SkewShape::new(outer.clone(), inner.clone()).expect("inner label sits inside outer label");
        let c = skew.content();
        let f_i = f as i64;
        let value = RationalFunction::from_poly(Polynomial::from_ints(&[c - f_i, f_i]));
        let specialized = group.map(|g| (g.delta() - 1) * f_i + c);
        SpectrumEntry { f, skew, value, specialized }
    }

    /// Whether the specialized value is a nonzero integer of sign `ε`.
    fn in_eps_naturals(&self, eps: Eps) -> bool {
        matches!(self.specialized, Some(v) if v != 0 && v.signum() == eps.sign())
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidLabel(format!("spectra need n ≥ 2, got {n}")));
    }
    Ok(())
}

/// Keeps the first entry of every eigenvalue. Eigenvalues are compared after
/// specialization when a group is fixed and as polynomials otherwise.
fn merge_duplicates(entries: Vec<SpectrumEntry>) -> Vec<SpectrumEntry> {
    let mut out: Vec<SpectrumEntry> = Vec::new();
    for e in entries {
        let dup = out.iter().any(|o| match (o.specialized, e.specialized) {
            (Some(a), Some(b)) => a == b,
            _ => o.value == e.value,
        });
        if !dup {
            out.push(e);
        }
    }
    out
}

/// The distinct eigenvalues of `A_n`.
///
/// For a group: `{(εN−1)f + c(μ\λ)} ∩ εℕ` over `λ ∈ Λ_{n−2f,N}` and
/// `μ ∈ cl^(f)_N(λ)`. Generic: the same construction with no restriction on
/// the labels and no sign filter, as polynomials in `δ`.
pub fn spectrum_universal(n: usize, regime: Regime) -> Result<Vec<SpectrumEntry>> {
    check_degree(n)?;
    let mut entries = Vec::new();
    for f in 1..=n / 2 {
        match regime {
            Regime::Generic => {
                for lambda in partitions_of(n - 2 * f, None) {
                    for mu in closure_set_generic(&lambda, f) {
                        entries.push(SpectrumEntry::new(f, &mu, &lambda, None));
                    }
                }
            }
            Regime::Group(g) => {
                for lambda in admissible_lambda(n - 2 * f, g.dim, g.eps)? {
                    for mu in closure_set(&lambda, f, n, g.dim, g.eps)? {
                        let e = SpectrumEntry::new(f, &mu, &lambda, Some(g));
                        if e.in_eps_naturals(g.eps) {
                            entries.push(e);
                        }
                    }
                }
            }
        }
    }
    Ok(merge_duplicates(entries))
}

/// The labels `σ` with `|μ| − |σ| = 2f` for some `f ≥ 1` that sit in
/// `μ⫽ν` for an even `ν ⊢ 2f`, grouped with their `f`.
fn reduced_labels(mu: &Partition) -> Vec<(usize, Partition)> {
    let mut out = Vec::new();
    for f in 1..=mu.size() / 2 {
        let mut sigmas = std::collections::BTreeSet::new();
        for nu in partitions_of(2 * f, None).into_iter().filter(|nu| nu.is_even() && mu.contains(nu)) {
            sigmas.extend(jdt_quotient(mu, &nu));
        }
        out.extend(sigmas.into_iter().map(|s| (f, s)));
    }
    out
}

/// Eigenvalues of `A_n` on the `μ` isotypic part: `(εN−1)f + c(μ\σ)` over `σ ∈ Λ^(μ)_N`, kept
/// when they lie in `εℕ`.
pub fn spectrum_reduced(mu: &Partition, dim: usize, eps: Eps) -> Result<Vec<SpectrumEntry>> {
    let g = GroupParams::new(dim, eps)?;
    if !in_sigma(mu, g) {
        return Err(Error::InvalidLabel(format!("{mu} does not label a module of V⊗{} for N={dim}, eps={eps}", mu.size())));
    }
    let entries = reduced_labels(mu)
        .into_iter()
        .filter(|(_, sigma)| in_lambda(sigma, g))
        .map(|(f, sigma)| SpectrumEntry::new(f, mu, &sigma, Some(g)))
        .filter(|e| e.in_eps_naturals(eps))
        .collect();
    Ok(merge_duplicates(entries))
}

/// The `μ` eigenvalues with the size restrictions and the sign filter dropped.
pub fn spectrum_reduced_generic(mu: &Partition) -> Vec<SpectrumEntry> {
    let entries = reduced_labels(mu).into_iter().map(|(f, sigma)| SpectrumEntry::new(f, mu, &sigma, None)).collect();
    merge_duplicates(entries)
}

/// The eigenvalues as functions of `δ`. Group entries keep their
/// polynomial form too, so expanded coefficients stay rational functions
/// that specialize correctly at `δ = εN`.
pub fn spectrum_values(entries: &[SpectrumEntry]) -> Vec<RationalFunction> {
    entries.iter().map(|e| e.value.clone()).collect()
}
