use super::classes::class_sum;
use super::diagram::BrauerDiagram;
use super::element::AlgebraElement;
use crate::exactnum::{ratio, Polynomial, RationalFunction};
use crate::{Error, Result};

/// The transposition diagram `s_ij`, 1-based, `i ≠ j`.
pub fn transposition(n: usize, i: usize, j: usize) -> Result<BrauerDiagram> {
    check_pair(n, i, j)?;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i - 1, j - 1);
    Ok(BrauerDiagram::from_permutation(&perm))
}

/// The contraction diagram `d_ij`: arcs `t_i–t_j` and `b_i–b_j`, all other lines vertical.
pub fn contraction(n: usize, i: usize, j: usize) -> Result<BrauerDiagram> {
    check_pair(n, i, j)?;
    Ok(arc_diagram(n, &[(i - 1, j - 1)]))
}

/// Diagram with the given 0-based position pairs as arcs in both rows.
pub(crate) fn arc_diagram(n: usize, arcs: &[(usize, usize)]) -> BrauerDiagram {
    let mut partner: Vec<u8> = (0..2 * n).map(|k| if k < n { (k + n) as u8 } else { (k - n) as u8 }).collect();
    for &(i, j) in arcs {
        partner[i] = j as u8;
        partner[j] = i as u8;
        partner[n + i] = (n + j) as u8;
        partner[n + j] = (n + i) as u8;
    }
    BrauerDiagram::from_partner_unchecked(n, partner)
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::IndexOutOfRange(format!("pair ({i},{j}) in B_{n}")));
    }
    Ok(())
}

/// Named elements of `B_n(δ)`. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedElement {
    Identity,
    /// `s_i = s_{i,i+1}`.
    S(usize),
    /// `d_i = d_{i,i+1}`.
    D(usize),
    Sij(usize, usize),
    Dij(usize, usize),
    /// `A_n = Σ_{i<j} d_ij`.
    An,
    /// `A_n^(f)`, the normalized class sum of diagrams with `f` arcs per row.
    Af(usize),
    /// The Jucys-Murphy element `x_k`.
    X(usize),
    /// `X_B = n(δ−1)/2 + X_S − A_n`.
    XB,
    /// `X_S = Σ_{i<j} s_ij`.
    XS,
}

pub fn build_named_element(name: NamedElement, n: usize) -> Result<AlgebraElement> {
    let half_delta_minus_one = RationalFunction::from_poly(Polynomial::linear(ratio(-1, 2), ratio(1, 2)));
    Ok(match name {
        NamedElement::Identity => AlgebraElement::identity(n),
        NamedElement::S(i) => AlgebraElement::from_diagram(transposition(n, i, i + 1)?),
        NamedElement::D(i) => AlgebraElement::from_diagram(contraction(n, i, i + 1)?),
        NamedElement::Sij(i, j) => AlgebraElement::from_diagram(transposition(n, i, j)?),
        NamedElement::Dij(i, j) => AlgebraElement::from_diagram(contraction(n, i, j)?),
        NamedElement::An => sum_pairs(n, contraction),
        NamedElement::XS => sum_pairs(n, transposition),
        NamedElement::Af(f) => {
            if f == 0 || 2 * f > n {
                return Err(Error::IndexOutOfRange(format!("A^({f}) in B_{n}")));
            }
            let arcs: Vec<(usize, usize)> = (0..f).map(|k| (2 * k, 2 * k + 1)).collect();
            class_sum(&arc_diagram(n, &arcs), true)?
        }
        NamedElement::X(k) => {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange(format!("x_{k} in B_{n}")));
            }
            let mut x = AlgebraElement::identity(n).scale(&half_delta_minus_one);
            for j in 1..k {
                x.add_term(transposition(n, j, k)?, &RationalFunction::one());
                x.add_term(contraction(n, j, k)?, &RationalFunction::from_int(-1));
            }
            x
        }
        NamedElement::XB => {
            let c = half_delta_minus_one.scale(&ratio(n as i64, 1));
            let mut x = AlgebraElement::identity(n).scale(&c);
            x = x.add(&sum_pairs(n, transposition))?;
            x.sub(&sum_pairs(n, contraction))?
        }
    })
}

fn sum_pairs(n: usize, f: fn(usize, usize, usize) -> Result<BrauerDiagram>) -> AlgebraElement {
    let mut x = AlgebraElement::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            x.add_term(f(n, i, j).expect("indices in range"), &RationalFunction::one());
        }
    }
    x
}
