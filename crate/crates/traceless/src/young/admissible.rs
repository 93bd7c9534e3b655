use super::lr::lr_coefficient;
use super::partition::{partitions_of, Partition};
use crate::{Eps, GroupParams, Result};

/// `Λ_{l,N}`: labels whose traceless projection is a nonzero irreducible module.
///
/// For O(N) the first two columns hold at most `N` cells together; for
/// Sp(N) the first row has at most `N/2` cells.
pub fn admissible_lambda(l: usize, dim: usize, eps: Eps) -> Result<Vec<Partition>> {
    let g = GroupParams::new(dim, eps)?;
    Ok(partitions_of(l, None).into_iter().filter(|p| in_lambda(p, g)).collect())
}

pub(crate) fn in_lambda(p: &Partition, g: GroupParams) -> bool {
    match g.eps {
        Eps::Orthogonal => {
            let c = p.conjugate();
            c.row_len(0) + c.row_len(1) <= g.dim
        }
        Eps::Symplectic => p.row_len(0) <= g.dim / 2,
    }
}

/// `Σ_{n,N}`: at most `N` rows for O(N), first row at most `N` for Sp(N).
pub fn admissible_sigma(n: usize, dim: usize, eps: Eps) -> Result<Vec<Partition>> {
    let g = GroupParams::new(dim, eps)?;
    Ok(partitions_of(n, None).into_iter().filter(|p| in_sigma(p, g)).collect())
}

pub(crate) fn in_sigma(p: &Partition, g: GroupParams) -> bool {
    match g.eps {
        Eps::Orthogonal => p.len() <= g.dim,
        Eps::Symplectic => p.row_len(0) <= g.dim,
    }
}

/// `cl^(f)_N(λ)`: the `μ ∈ Σ_{n,N}` containing `λ` with `|μ\λ| = 2f` and
/// some even `ν ⊢ 2f` such that `c^μ_{νλ} ≠ 0`.
pub fn closure_set(lambda: &Partition, f: usize, n: usize, dim: usize, eps: Eps) -> Result<Vec<Partition>> {
    let g = GroupParams::new(dim, eps)?;
    Ok(closure(lambda, f, n).into_iter().filter(|m| in_sigma(m, g)).collect())
}

/// The closure set with the size restrictions dropped.
pub fn closure_set_generic(lambda: &Partition, f: usize) -> Vec<Partition> {
    closure(lambda, f, lambda.size() + 2 * f)
}

fn closure(lambda: &Partition, f: usize, n: usize) -> Vec<Partition> {
    if lambda.size() + 2 * f != n {
        return Vec::new();
    }
    let evens: Vec<Partition> = partitions_of(2 * f, None).into_iter().filter(Partition::is_even).collect();
    partitions_of(n, None)
        .into_iter()
        .filter(|mu| mu.contains(lambda) && evens.iter().any(|nu| lr_coefficient(mu, lambda, nu) > 0))
        .collect()
}
