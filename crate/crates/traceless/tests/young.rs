use std::collections::BTreeSet;

use proptest::prelude::*;
use traceless::young::*;
use traceless::Eps;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn set(ps: &[&[usize]]) -> BTreeSet<Partition> {
    ps.iter().map(|x| p(x)).collect()
}

#[test]
fn partitions_of_four() {
    let got: Vec<Partition> = partitions_of(4, None);
    let want: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]].iter().map(|x| p(x)).collect();
    assert_eq!(got, want);
}

#[test]
fn partitions_of_zero_is_the_empty_partition() {
    assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
}

#[test]
fn partitions_with_row_bound() {
    assert_eq!(partitions_of(3, Some(Bound::Rows(2))), vec![p(&[3]), p(&[2, 1])]);
    assert_eq!(partitions_of(3, Some(Bound::Columns(2))), vec![p(&[2, 1]), p(&[1, 1, 1])]);
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n, None).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn conjugation_examples() {
    assert_eq!(transpose(&p(&[3, 1]), Eps::Symplectic), p(&[2, 1, 1]));
    assert_eq!(transpose(&p(&[2, 2]), Eps::Symplectic), p(&[2, 2]));
    assert_eq!(transpose(&p(&[3, 1]), Eps::Orthogonal), p(&[3, 1]));
}

#[test]
fn partition_text_and_json() {
    let x: Partition = "4,2,1".parse().unwrap();
    assert_eq!(x, p(&[4, 2, 1]));
    assert_eq!(x.to_string(), "(4,2,1)");
    assert_eq!("(4,2,1)".parse::<Partition>().unwrap(), x);
    assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
    assert_eq!(serde_json::to_string(&x).unwrap(), "[4,2,1]");
    assert!("2,3".parse::<Partition>().is_err());
    let s = SkewShape::new(p(&[4, 2, 1]), p(&[2, 1])).unwrap();
    assert_eq!(serde_json::to_value(&s).unwrap(), serde_json::json!({"outer": [4, 2, 1], "inner": [2, 1]}));
    assert!(SkewShape::new(p(&[2]), p(&[1, 1])).is_err());
}

#[test]
fn skew_contents() {
    let s = SkewShape::new(p(&[4, 2, 2, 1]), p(&[2, 1])).unwrap();
    assert_eq!(skew_content(&s), -1);
    let lam = p(&[3, 2]);
    assert_eq!(skew_content(&SkewShape::new(lam.clone(), lam).unwrap()), 0);
    for n in 0..8usize {
        let row = SkewShape::straight(Partition::row(n));
        assert_eq!(skew_content(&row), (n * n.saturating_sub(1) / 2) as i64);
    }
}

#[test]
fn lr_examples() {
    assert_eq!(lr_coefficient(&p(&[4, 2, 1]), &p(&[2, 1]), &p(&[3, 1])), 2);
    let mu = p(&[3, 2, 1]);
    assert_eq!(lr_coefficient(&mu, &mu, &Partition::empty()), 1);
    assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1]), &p(&[2])), 0);
    assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &Partition::empty()), 0);
}

#[test]
fn the_two_yamanouchi_tableaux() {
    let shape = SkewShape::new(p(&[4, 2, 1]), p(&[2, 1])).unwrap();
    let all = semistandard_tableaux(&shape, &[3, 1]);
    let yam: Vec<String> = all.iter().filter(|t| is_yamanouchi(&t.row_word())).map(|t| t.to_string()).collect();
    assert_eq!(yam.len(), 2);
    let t1 = Tableau::from_offsets(&[(2, vec![1, 1]), (1, vec![1]), (0, vec![2])]).unwrap();
    let t2 = Tableau::from_offsets(&[(2, vec![1, 1]), (1, vec![2]), (0, vec![1])]).unwrap();
    assert_eq!(t1.row_word(), vec![2, 1, 1, 1]);
    assert_eq!(t2.row_word(), vec![1, 2, 1, 1]);
    assert!(yam.contains(&t1.to_string()) && yam.contains(&t2.to_string()));
}

#[test]
fn rectification_examples() {
    let t1 = Tableau::from_offsets(&[(2, vec![1, 1]), (1, vec![1]), (0, vec![2])]).unwrap();
    let t2 = Tableau::from_offsets(&[(2, vec![1, 1]), (1, vec![2]), (0, vec![1])]).unwrap();
    let want = Tableau::straight(vec![vec![1, 1, 1], vec![2]]).unwrap();
    assert_eq!(rectify(&t1), want);
    assert_eq!(rectify(&t2), want);
    let straight = Tableau::straight(vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
    assert_eq!(rectify(&straight), straight);
}

#[test]
fn jdt_quotient_examples() {
    assert_eq!(jdt_quotient(&p(&[4, 2, 1]), &p(&[3, 1])), set(&[&[1, 1, 1], &[2, 1], &[3]]));
    let mu = p(&[3, 1, 1]);
    assert_eq!(jdt_quotient(&mu, &Partition::empty()), [mu.clone()].into_iter().collect());
}

fn all_partitions_up_to(m: usize) -> Vec<Partition> {
    (0..=m).flat_map(|k| partitions_of(k, None)).collect()
}

#[test]
fn jdt_quotient_matches_positive_lr_coefficients() {
    for mu in all_partitions_up_to(7) {
        for nu in all_partitions_up_to(mu.size()) {
            if !mu.contains(&nu) {
                continue;
            }
            let oracle: BTreeSet<Partition> = partitions_of(mu.size() - nu.size(), None)
                .into_iter()
                .filter(|lam| lr_coefficient(&mu, lam, &nu) > 0)
                .collect();
            assert_eq!(jdt_quotient(&mu, &nu), oracle, "{mu} / {nu}");
        }
    }
}

#[test]
fn both_lr_definitions_agree_and_are_symmetric() {
    for mu in all_partitions_up_to(8) {
        for lam in all_partitions_up_to(mu.size()) {
            if !mu.contains(&lam) {
                continue;
            }
            for nu in partitions_of(mu.size() - lam.size(), None) {
                let c = lr_coefficient(&mu, &lam, &nu);
                assert_eq!(c, lr_coefficient_by_rectification(&mu, &lam, &nu), "{mu} {lam} {nu}");
                assert_eq!(c, lr_coefficient(&mu, &nu, &lam), "symmetry {mu} {lam} {nu}");
            }
        }
    }
}

#[test]
fn lr_coefficients_vanish_outside_support() {
    assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[3]), &Partition::empty()), 0);
    assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1])), 0);
}

#[test]
fn admissible_label_examples() {
    assert_eq!(admissible_lambda(4, 2, Eps::Symplectic).unwrap(), vec![p(&[1, 1, 1, 1])]);
    assert_eq!(admissible_lambda(5, 5, Eps::Orthogonal).unwrap(), partitions_of(5, None));
    // Both (2) and (1,1) have two cells in their first two columns.
    assert_eq!(admissible_lambda(2, 1, Eps::Orthogonal).unwrap(), Vec::<Partition>::new());
    assert_eq!(admissible_lambda(2, 2, Eps::Orthogonal).unwrap(), vec![p(&[2]), p(&[1, 1])]);
    assert!(admissible_lambda(2, 3, Eps::Symplectic).is_err());
    assert_eq!(admissible_sigma(3, 2, Eps::Orthogonal).unwrap(), vec![p(&[3]), p(&[2, 1])]);
    assert_eq!(admissible_sigma(4, 4, Eps::Orthogonal).unwrap(), partitions_of(4, None));
    assert_eq!(admissible_sigma(3, 2, Eps::Symplectic).unwrap(), vec![p(&[2, 1]), p(&[1, 1, 1])]);
}

#[test]
fn admissible_lambda_is_the_filtered_partition_list() {
    for l in 0..8 {
        for dim in 1..7 {
            let want: Vec<Partition> = partitions_of(l, None)
                .into_iter()
                .filter(|x| {
                    let c = x.conjugate().parts().to_vec();
                    c.first().copied().unwrap_or(0) + c.get(1).copied().unwrap_or(0) <= dim
                })
                .collect();
            assert_eq!(admissible_lambda(l, dim, Eps::Orthogonal).unwrap(), want);
        }
    }
}

#[test]
fn closure_examples() {
    let cl = closure_set(&p(&[1]), 1, 3, 3, Eps::Orthogonal).unwrap();
    assert_eq!(cl.into_iter().collect::<BTreeSet<_>>(), set(&[&[3], &[2, 1]]));
    let lam = p(&[2, 1]);
    assert_eq!(closure_set(&lam, 0, 3, 5, Eps::Orthogonal).unwrap(), vec![lam]);
    let cl = closure_set(&p(&[2, 2]), 2, 8, 4, Eps::Orthogonal).unwrap();
    assert!(cl.contains(&p(&[2, 2, 2, 2])));
    assert_eq!(closure_set_generic(&p(&[1]), 1).into_iter().collect::<BTreeSet<_>>(), set(&[&[3], &[2, 1]]));
}

#[test]
fn hook_dimensions() {
    for n in 1..9 {
        assert_eq!(hook_dim(&Partition::row(n)), 1);
        assert_eq!(hook_dim(&Partition::column(n)), 1);
    }
    assert_eq!(hook_dim(&p(&[2, 1])), 2);
    for mu in all_partitions_up_to(7).into_iter().skip(1) {
        let standard = semistandard_tableaux(&SkewShape::straight(mu.clone()), &vec![1; mu.size()]);
        assert_eq!(hook_dim(&mu), standard.len() as u64, "{mu}");
    }
}

#[test]
fn squares_of_dimensions_sum_to_factorial() {
    for n in 1..=8 {
        let s: u64 = partitions_of(n, None).iter().map(|m| hook_dim(m).pow(2)).sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn character_examples() {
    for n in 1..7 {
        for rho in partitions_of(n, None) {
            assert_eq!(mn_character(&Partition::row(n), &rho), 1);
            let even = rho.parts().iter().map(|&l| l - 1).sum::<usize>() % 2 == 0;
            assert_eq!(mn_character(&Partition::column(n), &rho), if even { 1 } else { -1 });
        }
    }
    assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
    assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), -1);
    assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
}

#[test]
fn character_column_orthogonality() {
    for n in 1..=6 {
        let parts = partitions_of(n, None);
        for mu in &parts {
            for nu in &parts {
                let s: i64 = parts
                    .iter()
                    .map(|rho| class_size(rho) as i64 * mn_character(mu, rho) * mn_character(nu, rho))
                    .sum();
                assert_eq!(s, if mu == nu { factorial(n) as i64 } else { 0 });
            }
        }
    }
}

/// Number of row tabloids of shape `lam` fixed by a permutation with cycle
/// lengths `cycles`: ways to distribute the cycles over the rows.
fn tabloid_fixed_points(lam: &[usize], cycles: &[usize]) -> i64 {
    fn go(rows: &mut Vec<usize>, cycles: &[usize]) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return rows.iter().all(|&r| r == 0) as i64;
        };
        let mut total = 0;
        for i in 0..rows.len() {
            if rows[i] >= c {
                rows[i] -= c;
                total += go(rows, rest);
                rows[i] += c;
            }
        }
        total
    }
    go(&mut lam.to_vec(), cycles)
}

#[test]
fn characters_match_permutation_module_decomposition() {
    // The tabloid character of shape λ is Σ_μ K_{μλ} χ^μ with Kostka numbers
    // K counting semistandard tableaux; solve the unitriangular system.
    for n in 1..=6 {
        let parts = partitions_of(n, None);
        let mut chars: Vec<Vec<i64>> = Vec::new();
        for (k, lam) in parts.iter().enumerate() {
            let mut row: Vec<i64> = parts.iter().map(|rho| tabloid_fixed_points(lam.parts(), rho.parts())).collect();
            for (j, mu) in parts.iter().enumerate().take(k) {
                let kostka = semistandard_tableaux(&SkewShape::straight(mu.clone()), lam.parts()).len() as i64;
                for (x, c) in row.iter_mut().zip(&chars[j]) {
                    *x -= kostka * c;
                }
            }
            for (rho, x) in parts.iter().zip(&row) {
                assert_eq!(mn_character(lam, rho), *x, "χ^{lam}({rho})");
            }
            chars.push(row);
        }
    }
}

fn skew_tableau() -> impl Strategy<Value = Tableau> {
    (2usize..=7, any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<prop::sample::Index>())
        .prop_filter_map("no tableau", |(m, i_mu, i_lam, i_t)| {
            let mus = partitions_of(m, None);
            let mu = i_mu.get(&mus).clone();
            let lams: Vec<Partition> = all_partitions_up_to(m - 1).into_iter().filter(|l| mu.contains(l)).collect();
            let lam = i_lam.get(&lams).clone();
            let shape = SkewShape::new(mu, lam).ok()?;
            let k = shape.size();
            let weights = partitions_of(k, None);
            let all: Vec<Tableau> =
                weights.iter().flat_map(|w| semistandard_tableaux(&shape, w.parts())).collect();
            if all.is_empty() {
                None
            } else {
                Some(i_t.get(&all).clone())
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rectification_is_order_independent(t in skew_tableau(), picks in prop::collection::vec(0usize..4, 0..16)) {
        let mut it = picks.into_iter();
        let random = rectify_with(&t, |corners| it.next().unwrap_or(0) % corners.len());
        let first = rectify_with(&t, |_| 0);
        prop_assert_eq!(&random, &rectify(&t));
        prop_assert_eq!(&first, &rectify(&t));
        prop_assert!(random.shape().inner().is_empty());
        prop_assert_eq!(random.weight(), t.weight());
    }
}
