//! The Brauer algebra `B_n(δ)`.
//!
//! Diagrams multiply by stacking: in `b1·b2` the diagram `b1` sits below
//! `b2`, and every closed loop contributes a factor `δ`. Tensors enter at
//! the top, so `b2` acts first.

mod classes;
mod diagram;
mod element;
mod named;
mod symmetriser;

pub use classes::{class_sum, conjugacy_class};
pub use diagram::{multiply_diagrams, BrauerDiagram, Node};
pub use element::{flip_star, multiply_elements, AlgebraElement};
pub use named::{build_named_element, contraction, transposition, NamedElement};
pub use symmetriser::{central_young_symmetriser, cycle_type, permutations, young_symmetriser};

/// `𝚒(b)`: minimal number of crossings, as the circular interleaving count.
pub fn min_crossings(b: &BrauerDiagram) -> usize {
    b.min_crossings()
}

/// Number of arcs in the top row.
pub fn arc_count(b: &BrauerDiagram) -> usize {
    b.arc_count()
}
