use std::collections::{BTreeSet, VecDeque};

use super::diagram::BrauerDiagram;
use super::element::AlgebraElement;
use crate::exactnum::{rat, RationalFunction};
use crate::young::factorial;
use crate::Result;

/// The orbit `{s b s⁻¹ : s ∈ S_n}`, found by breadth-first search under
/// conjugation by adjacent transpositions. Sorted.
pub fn conjugacy_class(b: &BrauerDiagram) -> Vec<BrauerDiagram> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(b.clone());
    queue.push_back(b.clone());
    while let Some(x) = queue.pop_front() {
        for i in 0..b.n().saturating_sub(1) {
            let y = x.conjugate_adjacent(i);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// `γ_b = |C_{S_n}(b)|·Σ_{b′∼b} b′`, or the plain orbit sum when `normalized`.
pub fn class_sum(b: &BrauerDiagram, normalized: bool) -> Result<AlgebraElement> {
    let orbit = conjugacy_class(b);
    let weight = if normalized {
        RationalFunction::one()
    } else {
        RationalFunction::constant(rat((factorial(b.n()) / orbit.len() as u64) as i64))
    };
    AlgebraElement::from_terms(b.n(), orbit.into_iter().map(|d| (d, weight.clone())))
}
