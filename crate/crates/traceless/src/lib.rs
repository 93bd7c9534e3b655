//! Traceless projectors for rank-n tensors of O(N) and Sp(N).
//!
//! The projector lives in the Brauer algebra `B_n(δ)`. It is a polynomial in
//! the contraction class sum `A_n`, which acts on the centralizer of the
//! permutations through a second-order operator on ternary bracelets. All
//! coefficients are exact rational functions of `δ`; tensors carry exact
//! rational entries, so every check in the test-suite is an equality.
//!
//! Module overview:
//!
//! * [`exactnum`]: big rationals, polynomials and rational functions in `δ`.
//! * [`young`]: partitions, Littlewood-Richardson coefficients, jeu de taquin.
//! * [`brauer`]: diagrams, their product, class sums and named elements.
//! * [`bracelets`]: bracelet coordinates and the operator `Δ = ½ τ∘∂²`.
//! * [`projector`]: spectra of `A_n` and the expanded projectors.
//! * [`tensor`]: dense tensors and the action of the algebra on them.

pub mod bracelets;
pub mod brauer;
pub mod error;
pub mod exactnum;
pub mod projector;
pub mod tensor;
pub mod verify;
pub mod young;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};

use std::fmt;

/// The symmetry type of the metric: `ε = +1` for O(N), `ε = −1` for Sp(N).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eps {
    Orthogonal,
    Symplectic,
}

impl Eps {
    pub fn sign(self) -> i64 {
        match self {
            Eps::Orthogonal => 1,
            Eps::Symplectic => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Result<Eps> {
        match sign {
            1 => Ok(Eps::Orthogonal),
            -1 => Ok(Eps::Symplectic),
            other => Err(Error::InvalidMetric(format!("eps must be +1 or -1, got {other}"))),
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sign())
    }
}

/// A concrete group: dimension `N` and metric type. Symplectic needs even `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupParams {
    pub dim: usize,
    pub eps: Eps,
}

impl GroupParams {
    pub fn new(dim: usize, eps: Eps) -> Result<GroupParams> {
        if dim == 0 {
            return Err(Error::InvalidMetric("N must be at least 1".into()));
        }
        if eps == Eps::Symplectic && dim % 2 == 1 {
            return Err(Error::InvalidMetric(format!("Sp(N) needs even N, got {dim}")));
        }
        Ok(GroupParams { dim, eps })
    }

    /// The specialization `δ = εN`.
    pub fn delta(&self) -> i64 {
        self.eps.sign() * self.dim as i64
    }
}

/// Either a generic parameter `δ` or a specialization to a concrete group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Generic,
    Group(GroupParams),
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Generic => write!(f, "generic"),
            Regime::Group(g) => write!(f, "N={},eps={}", g.dim, g.eps),
        }
    }
}
