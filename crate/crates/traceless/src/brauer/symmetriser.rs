use super::diagram::BrauerDiagram;
use super::element::{multiply_elements, AlgebraElement};
use crate::exactnum::{rat, ratio, RationalFunction};
use crate::young::{factorial, hook_dim, mn_character, Partition, Tableau};
use crate::{Error, Result};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Cycle type of a permutation given by its images.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(lens).expect("cycle lengths are positive")
}

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)));
    if inversions.filter(|&(i, j)| perm[i] > perm[j]).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `z^(μ) = (f^μ/n!) Σ_{s ∈ S_n} χ^μ(s)·s`, the central idempotent of `μ` in the group algebra.
pub fn central_young_symmetriser(mu: &Partition) -> AlgebraElement {
    let n = mu.size();
    let scale = ratio(hook_dim(mu) as i64, factorial(n) as i64);
    let mut chars = std::collections::HashMap::new();
    let mut x = AlgebraElement::zero(n);
    for perm in permutations(n) {
        let ct = cycle_type(&perm);
        let chi = *chars.entry(ct.clone()).or_insert_with(|| mn_character(mu, &ct));
        if chi != 0 {
            x.add_term(BrauerDiagram::from_permutation(&perm), &RationalFunction::constant(&scale * rat(chi)));
        }
    }
    x
}

/// `Y_t = (f^λ/n!)·R_t·C_t`: row symmetrizer times column antisymmetrizer of
/// a standard tableau. Idempotent.
pub fn young_symmetriser(t: &Tableau) -> Result<AlgebraElement> {
    if !t.is_standard() {
        return Err(Error::NotStandard(t.to_string()));
    }
    let shape = t.shape().outer().clone();
    let n = shape.size();
    let rows: Vec<Vec<usize>> = t.rows().iter().map(|r| r.iter().map(|&v| v as usize - 1).collect()).collect();
    let cols: Vec<Vec<usize>> = (0..shape.row_len(0))
        .map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    let row_sym = block_sum(n, &rows, false);
    let col_anti = block_sum(n, &cols, true);
    let y = multiply_elements(&row_sym, &col_anti)?;
    Ok(y.scale(&RationalFunction::constant(ratio(hook_dim(&shape) as i64, factorial(n) as i64))))
}

/// Sum over the permutations preserving each block, optionally signed.
fn block_sum(n: usize, blocks: &[Vec<usize>], signed: bool) -> AlgebraElement {
    let mut acc = vec![(0..n).collect::<Vec<usize>>()];
    let mut signs = vec![1i64];
    for block in blocks {
        let mut next = Vec::new();
        let mut next_signs = Vec::new();
        for local in permutations(block.len()) {
            let s = sign(&local);
            for (p, &ps) in acc.iter().zip(&signs) {
                let mut q = p.clone();
                for (a, &b) in local.iter().enumerate() {
                    q[block[a]] = block[b];
                }
                next.push(q);
                next_signs.push(ps * s);
            }
        }
        acc = next;
        signs = next_signs;
    }
    let mut x = AlgebraElement::zero(n);
    for (p, s) in acc.iter().zip(signs) {
        let c = if signed { s } else { 1 };
        x.add_term(BrauerDiagram::from_permutation(p), &RationalFunction::from_int(c));
    }
    x
}
