use std::collections::HashMap;

use super::partition::Partition;

/// Number of standard tableaux of shape `μ`, by the hook-length formula.
pub fn hook_dim(mu: &Partition) -> u64 {
    let num: u128 = (1..=mu.size() as u128).product();
    let hooks: u128 = mu.cells().map(|(i, j)| mu.hook_length(i, j) as u128).product();
    (num / hooks) as u64
}

/// `n!` as an integer.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = ∏ k^{m_k} m_k!`, the centralizer order of a permutation of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> u64 {
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &k in rho.parts() {
        *mult.entry(k).or_default() += 1;
    }
    mult.iter().map(|(&k, &m)| (k as u64).pow(m as u32) * factorial(m)).product()
}

/// Number of permutations of cycle type `ρ`.
pub fn class_size(rho: &Partition) -> u64 {
    factorial(rho.size()) / centralizer_order(rho)
}

/// `χ^μ(ρ)` by the Murnaghan-Nakayama rule, on beta-sets with memoization.
pub fn mn_character(mu: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(mu.size(), cycle_type.size(), "character arguments must have equal size");
    let mut memo = HashMap::new();
    mn_rec(mu, cycle_type.parts(), &mut memo)
}

fn mn_rec(mu: &Partition, rest: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&r, tail)) = rest.split_first() else {
        return 1;
    };
    let key = (mu.clone(), rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = mu.len();
    let beta: Vec<usize> = (0..l).map(|i| mu.row_len(i) + (l - 1 - i)).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
        let smaller = Partition::new(parts).expect("beta-set removal yields a partition");
        total += sign * mn_rec(&smaller, tail, memo);
    }
    memo.insert(key, total);
    total
}
