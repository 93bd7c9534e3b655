use std::collections::{BTreeSet, HashSet, VecDeque};

use super::partition::{Partition, SkewShape};
use super::tableau::{rectify, semistandard_tableaux, Tableau};

/// Littlewood-Richardson coefficient `c^μ_{λν}`.
///
/// Counts semistandard tableaux of shape `μ\λ` and weight `ν` whose row word
/// is a Yamanouchi word. Cells are filled in reverse reading order (top row
/// first, right to left) so the lattice condition is checked on prefixes.
pub fn lr_coefficient(mu: &Partition, lambda: &Partition, nu: &Partition) -> u64 {
    if !mu.contains(lambda) || nu.size() + lambda.size() != mu.size() {
        return 0;
    }
    let shape = SkewShape::new(mu.clone(), lambda.clone()).expect("containment checked");
    let mut cells: Vec<(usize, usize)> = Vec::with_capacity(shape.size());
    for i in 1..=mu.len() {
        for j in (lambda.row_len(i - 1) + 1..=mu.row_len(i - 1)).rev() {
            cells.push((i, j));
        }
    }
    let pos = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let right: Vec<Option<usize>> = cells.iter().map(|&(i, j)| pos(i, j + 1)).collect();
    let above: Vec<Option<usize>> = cells.iter().map(|&(i, j)| if i > 1 { pos(i - 1, j) } else { None }).collect();
    let weight = nu.parts().to_vec();
    let mut fill = vec![0u32; cells.len()];
    let mut counts = vec![0usize; weight.len()];

    fn rec(
        k: usize,
        fill: &mut [u32],
        counts: &mut [usize],
        weight: &[usize],
        right: &[Option<usize>],
        above: &[Option<usize>],
    ) -> u64 {
        if k == fill.len() {
            return 1;
        }
        let hi = right[k].map_or(weight.len() as u32, |r| fill[r]);
        let lo = above[k].map_or(1, |a| fill[a] + 1);
        let mut total = 0;
        for v in lo..=hi {
            let idx = v as usize - 1;
            if counts[idx] == weight[idx] || (idx > 0 && counts[idx] == counts[idx - 1]) {
                continue;
            }
            counts[idx] += 1;
            fill[k] = v;
            total += rec(k + 1, fill, counts, weight, right, above);
            counts[idx] -= 1;
        }
        total
    }
    rec(0, &mut fill, &mut counts, &weight, &right, &above)
}

/// The same coefficient counted through rectification: tableaux of shape
/// `μ\λ` and weight `ν` whose rectification is `E(ν)`. Slower; used as a
/// cross-check of [`lr_coefficient`].
pub fn lr_coefficient_by_rectification(mu: &Partition, lambda: &Partition, nu: &Partition) -> u64 {
    if !mu.contains(lambda) || nu.size() + lambda.size() != mu.size() {
        return 0;
    }
    let shape = SkewShape::new(mu.clone(), lambda.clone()).expect("containment checked");
    let target = Tableau::superstandard(nu);
    semistandard_tableaux(&shape, nu.parts()).iter().filter(|t| rectify(t) == target).count() as u64
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Slot {
    Inner,
    Entry(u32),
    Vacant,
}

/// `μ⫽ν`: the inner shapes reached by reverse slides from `E(ν)` placed in `μ`.
///
/// Starting with `E(ν)` inside `μ` and the cells of `μ\ν` vacant, each move
/// picks a vacant cell addable to the occupied region and slides it backwards
/// (the larger of the left and upper neighbours moves in, the upper one on a
/// tie) until it becomes an inner corner. Once no vacant cell is left, the
/// inner cells form one element of the set. Configurations are explored
/// breadth-first with memoization.
pub fn jdt_quotient(mu: &Partition, nu: &Partition) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    if !mu.contains(nu) {
        return out;
    }
    let start: Vec<Vec<Slot>> = (0..mu.len())
        .map(|i| {
            (0..mu.row_len(i))
                .map(|j| if j < nu.row_len(i) { Slot::Entry(i as u32 + 1) } else { Slot::Vacant })
                .collect()
        })
        .collect();
    let mut seen: HashSet<Vec<Vec<Slot>>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cfg) = queue.pop_front() {
        let corners = vacant_corners(&cfg);
        if corners.is_empty() {
            let inner = cfg.iter().map(|r| r.iter().filter(|s| **s == Slot::Inner).count()).collect();
            out.insert(Partition::new(inner).expect("inner cells form a diagram"));
            continue;
        }
        for c in corners {
            let mut next = cfg.clone();
            reverse_slide(&mut next, c);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    out
}

fn slot(cfg: &[Vec<Slot>], i: isize, j: isize) -> Option<Slot> {
    if i < 0 || j < 0 {
        return None;
    }
    cfg.get(i as usize).and_then(|r| r.get(j as usize)).copied()
}

/// Vacant cells whose left and upper neighbours are occupied or off the board.
fn vacant_corners(cfg: &[Vec<Slot>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in cfg.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            if *s != Slot::Vacant {
                continue;
            }
            let (ii, jj) = (i as isize, j as isize);
            let ok = |x: Option<Slot>| x != Some(Slot::Vacant);
            if ok(slot(cfg, ii, jj - 1)) && ok(slot(cfg, ii - 1, jj)) {
                out.push((i, j));
            }
        }
    }
    out
}

fn reverse_slide(cfg: &mut [Vec<Slot>], (mut i, mut j): (usize, usize)) {
    loop {
        let entry = |s: Option<Slot>| match s {
            Some(Slot::Entry(v)) => Some(v),
            _ => None,
        };
        let left = entry(slot(cfg, i as isize, j as isize - 1));
        let up = entry(slot(cfg, i as isize - 1, j as isize));
        let go_up = match (left, up) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(l), Some(u)) => u >= l,
        };
        if go_up {
            cfg[i][j] = cfg[i - 1][j];
            i -= 1;
        } else {
            cfg[i][j] = cfg[i][j - 1];
            j -= 1;
        }
    }
    cfg[i][j] = Slot::Inner;
}
