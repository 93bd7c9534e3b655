use std::collections::BTreeSet;

use proptest::prelude::*;
use traceless::bracelets::{a_action_normalized, BraceletMonomial, BraceletVector};
use traceless::brauer::*;
use traceless::exactnum::{rat, RationalFunction};
use traceless::projector::*;
use traceless::young::Partition;
use traceless::{Eps, Error, GroupParams, Regime};

fn rf(s: &str) -> RationalFunction {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn mono(s: &str) -> BraceletMonomial {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn group(dim: usize, eps: Eps) -> Regime {
    Regime::Group(GroupParams::new(dim, eps).unwrap())
}

fn specialized(entries: &[SpectrumEntry]) -> BTreeSet<i64> {
    entries.iter().map(|e| e.specialized.unwrap()).collect()
}

fn symbolic(entries: &[SpectrumEntry]) -> BTreeSet<String> {
    entries.iter().map(|e| e.value.to_string()).collect()
}

fn linear(a: i64, b: i64) -> String {
    RationalFunction::from_poly(traceless::exactnum::Polynomial::from_ints(&[b, a])).to_string()
}

/// Applies `v ↦ ∏ (1 − A/α) v` with the projector's own eigenvalues.
fn apply_factors(p: &ProjectorForm, v: &BraceletVector) -> BraceletVector {
    let mut v = v.clone();
    for alpha in spectrum_values(&p.provenance) {
        let av = a_action_normalized(&v).unwrap();
        v.add_scaled(&av, &-alpha.inv().unwrap());
    }
    v
}

#[test]
fn spectrum_for_two_points() {
    for dim in 2..=6 {
        let s = spectrum_universal(2, group(dim, Eps::Orthogonal)).unwrap();
        assert_eq!(specialized(&s), BTreeSet::from([dim as i64]));
        assert_eq!(s[0].value, rf("d"));
    }
    assert_eq!(symbolic(&spectrum_universal(2, Regime::Generic).unwrap()), BTreeSet::from(["δ".to_string()]));
}

#[test]
fn spectrum_for_three_points() {
    for dim in 2..=7 {
        let s = spectrum_universal(3, group(dim, Eps::Orthogonal)).unwrap();
        assert_eq!(specialized(&s), BTreeSet::from([dim as i64 - 1, dim as i64 + 2]), "N = {dim}");
    }
    let s = spectrum_universal(3, group(4, Eps::Symplectic)).unwrap();
    assert_eq!(specialized(&s), BTreeSet::from([-2, -5]));
}

#[test]
fn two_dimensional_symplectic_spectrum() {
    for n in 2..=6 {
        let s = spectrum_universal(n, group(2, Eps::Symplectic)).unwrap();
        let want: BTreeSet<i64> = (1..=n as i64 / 2).map(|f| -(n as i64 - f + 1) * f).collect();
        assert_eq!(specialized(&s), want, "n = {n}");
    }
}

#[test]
fn generic_spectrum_for_four_points() {
    let s = spectrum_universal(4, Regime::Generic).unwrap();
    let want: BTreeSet<String> =
        ["d + 4", "2d + 4", "d", "d + 2", "d - 2", "2d - 2"].iter().map(|x| rf(x).to_string()).collect();
    assert_eq!(symbolic(&s), want);
    assert_eq!(s.len(), 6);
    assert!(s.iter().all(|e| e.specialized.is_none()));
}

#[test]
fn one_dimensional_spectrum_contains_the_full_contraction_count() {
    for n in 2..=6 {
        let s = spectrum_universal(n, group(1, Eps::Orthogonal)).unwrap();
        assert!(specialized(&s).contains(&(n as i64 * (n as i64 - 1) / 2)), "n = {n}");
    }
}

#[test]
fn spectrum_rejects_bad_inputs() {
    assert!(spectrum_universal(1, Regime::Generic).is_err());
    assert!(matches!(GroupParams::new(3, Eps::Symplectic), Err(Error::InvalidMetric(_))));
    assert!(matches!(spectrum_reduced(&part("1,1,1,1"), 3, Eps::Orthogonal), Err(Error::InvalidLabel(_))));
    assert!(matches!(spectrum_reduced(&part("3"), 2, Eps::Symplectic), Err(Error::InvalidLabel(_))));
}

#[test]
fn reduced_spectrum_of_symmetric_tensors() {
    for n in 2..=8usize {
        let want: BTreeSet<String> = (1..=n as i64 / 2).map(|f| linear(f, 2 * (n as i64 - f - 1) * f)).collect();
        assert_eq!(symbolic(&spectrum_reduced_generic(&Partition::row(n))), want, "n = {n}");
        let dim = 5;
        let want: BTreeSet<i64> = (1..=n as i64 / 2).map(|f| (dim + 2 * (n as i64 - f - 1)) * f).collect();
        assert_eq!(specialized(&spectrum_reduced(&Partition::row(n), dim as usize, Eps::Orthogonal).unwrap()), want);
    }
}

#[test]
fn reduced_spectrum_of_the_maximal_hook() {
    for n in 2..=8usize {
        let mu = Partition::hook(2, n - 2);
        assert_eq!(symbolic(&spectrum_reduced_generic(&mu)), BTreeSet::from([linear(1, 2 - n as i64)]));
        for dim in n - 1..=n + 2 {
            let s = spectrum_reduced(&mu, dim, Eps::Orthogonal).unwrap();
            assert_eq!(specialized(&s), BTreeSet::from([dim as i64 - n as i64 + 2]), "n = {n}, N = {dim}");
        }
    }
}

#[test]
fn reduced_spectrum_of_general_hooks() {
    for n in 3..=8usize {
        for m in 2..n {
            let mu = Partition::hook(m, n - m);
            let (m, n) = (m as i64, n as i64);
            let mut want: BTreeSet<String> = (1..=m / 2).map(|f| linear(f, 2 * (m - f) * f - n)).collect();
            want.extend((1..=(m - 1) / 2).map(|f| linear(f, 2 * (m - 1 - f) * f)));
            assert_eq!(symbolic(&spectrum_reduced_generic(&mu)), want, "μ = {mu}");
        }
    }
}

#[test]
fn reduced_spectrum_of_antisymmetric_tensors_is_empty() {
    for n in 2..=6 {
        assert!(spectrum_reduced_generic(&Partition::column(n)).is_empty());
        assert!(spectrum_reduced(&Partition::column(n), n, Eps::Orthogonal).unwrap().is_empty());
        let p = reduced_projector(&Partition::column(n), group(n, Eps::Orthogonal)).unwrap();
        assert_eq!(p.coordinates, BraceletVector::basis(BraceletMonomial::p_power(n)));
    }
}

#[test]
fn reduced_spectra_for_the_weyl_components() {
    let r = |s: &str| specialized(&spectrum_reduced(&part(s), 3, Eps::Orthogonal).unwrap());
    assert_eq!(r("3,1"), BTreeSet::from([3, 5]));
    assert_eq!(r("2,2"), BTreeSet::from([1, 4]));
    assert_eq!(r("2,1,1"), BTreeSet::from([1]));
    let p = reduced_projector(&part("3,1"), group(3, Eps::Orthogonal)).unwrap();
    let mut want = BraceletVector::zero(4);
    for (z, c) in [("[p]^4", "1"), ("[ns][ns]", "2/15"), ("[nsp][p]", "1/15"), ("[ns][p][p]", "-1/3")] {
        want.add_term(mono(z), &rf(c));
    }
    assert_eq!(p.specialized_coordinates().unwrap(), want);
}

#[test]
fn reduced_spectra_are_subsets_of_the_full_spectrum() {
    for (n, dim) in [(3, 3), (4, 3), (4, 4), (5, 4), (6, 6)] {
        let full = specialized(&spectrum_universal(n, group(dim, Eps::Orthogonal)).unwrap());
        for mu in traceless::young::admissible_sigma(n, dim, Eps::Orthogonal).unwrap() {
            let red = specialized(&spectrum_reduced(&mu, dim, Eps::Orthogonal).unwrap());
            assert!(red.is_subset(&full), "{mu}");
            if n >= 3 && mu != Partition::row(n) {
                assert!(red.len() < full.len(), "{mu}");
            }
        }
    }
}

#[test]
fn three_point_projector_coefficients() {
    for (eps, dim, arc, loop_) in [
        (Eps::Orthogonal, 5, "-(d + 1)/((d - 1)(d + 2))", "1/((d - 1)(d + 2))"),
        (Eps::Symplectic, 4, "(d - 1)/((d - 2)(d + 1))", "1/((d - 2)(d + 1))"),
    ] {
        let p = universal_projector(3, group(dim, eps)).unwrap();
        let c = |z: &str| p.coordinates.coeff(&mono(z)).rescale_variable(&rat(eps.sign()));
        assert_eq!(c("[p]^3"), rf("1"));
        assert_eq!(c("[ns][p]"), rf(arc));
        assert_eq!(c("[nsp]"), rf(loop_));
        assert_eq!(p.coordinates.len(), 3);
    }
}

#[test]
fn three_point_projector_on_diagrams() {
    for (eps, dim, arc, loop_) in [
        (Eps::Orthogonal, 5, "-(d + 1)/((d - 1)(d + 2))", "1/((d - 1)(d + 2))"),
        (Eps::Symplectic, 4, "(d - 1)/((d - 2)(d + 1))", "1/((d - 2)(d + 1))"),
    ] {
        let x = to_algebra_element(&universal_projector(3, group(dim, eps)).unwrap()).unwrap();
        assert_eq!(x.len(), 10);
        let n_fn = |c: RationalFunction| c.rescale_variable(&rat(eps.sign()));
        for (b, c) in x.terms() {
            let want = match b.arc_count() {
                0 if *b == BrauerDiagram::identity(3) => rf("1"),
                1 if (1..=3).any(|k| b.partner(Node::Top(k)) == Node::Bottom(k)) => rf(arc),
                1 => rf(loop_),
                _ => panic!("unexpected diagram {b}"),
            };
            assert_eq!(n_fn(c.clone()), want, "{b}");
        }
    }
}

#[test]
fn splitting_idempotent_for_two_points() {
    let p = splitting_idempotent(2).unwrap();
    let x = to_algebra_element(&p).unwrap();
    let mut want = AlgebraElement::identity(2);
    want.add_term(contraction(2, 1, 2).unwrap(), &rf("-1/d"));
    assert_eq!(x, want);
}

#[test]
fn splitting_idempotent_for_four_points() {
    let p = splitting_idempotent(4).unwrap();
    let table = [
        ("[p]^4", "1"),
        ("[ns][p][p]", "-(d^2(d+4)-4)/((d-2)d(d+2)(d+4))"),
        ("[ns][pp]", "4/((d-2)d(d+2)(d+4))"),
        ("[nsp][p]", "(d+3)/((d-2)(d+2)(d+4))"),
        ("[nspp]", "-1/((d-2)(d+2)(d+4))"),
        ("[npsp]", "-2/((d-2)d(d+4))"),
        ("[ns][ns]", "(d(d+3)+6)/((d-2)(d-1)(d+2)(d+4))"),
        ("[nsns]", "-(3d+2)/((d-2)(d-1)(d+2)(d+4))"),
    ];
    let mut want = BraceletVector::zero(4);
    for (z, c) in table {
        want.add_term(mono(z), &rf(c));
    }
    assert_eq!(p.coordinates, want);
    assert_eq!(p.kind, ProjectorKind::Splitting);
}

#[test]
fn empty_spectrum_gives_the_unit() {
    assert_eq!(expand_factorized(3, &[]).unwrap(), BraceletVector::basis(BraceletMonomial::p_power(3)));
}

#[test]
fn zero_eigenvalue_is_refused() {
    let mut s = spectrum_universal(3, Regime::Generic).unwrap();
    s[0].value = RationalFunction::zero();
    assert!(matches!(expand_factorized(3, &s), Err(Error::ZeroEigenvalue(_))));
    let mut s = spectrum_universal(3, group(3, Eps::Orthogonal)).unwrap();
    s[0].specialized = Some(0);
    assert!(matches!(expand_factorized(3, &s), Err(Error::ZeroEigenvalue(_))));
}

#[test]
fn splitting_idempotent_is_annihilated_by_contractions() {
    for n in 2..=7 {
        let p = splitting_idempotent(n).unwrap();
        assert!(a_action_normalized(&p.coordinates).unwrap().is_zero(), "n = {n}");
        assert_eq!(apply_factors(&p, &p.coordinates), p.coordinates, "n = {n}");
    }
}

#[test]
fn universal_projectors_are_annihilated_at_generic_points() {
    for (n, dim) in [(3, 3), (4, 4), (5, 5), (6, 6)] {
        let p = universal_projector(n, group(dim, Eps::Orthogonal)).unwrap();
        let residual = a_action_normalized(&p.coordinates).unwrap();
        assert!(residual.specialize(&rat(dim as i64)).unwrap().is_zero(), "n = {n}");
    }
}

#[test]
fn splitting_idempotent_squares_to_itself_on_diagrams() {
    for n in 2..=5 {
        let x = to_algebra_element(&splitting_idempotent(n).unwrap()).unwrap();
        assert_eq!(multiply_elements(&x, &x).unwrap(), x, "n = {n}");
        let a = build_named_element(NamedElement::An, n).unwrap();
        assert!(multiply_elements(&a, &x).unwrap().is_zero());
    }
}

#[test]
fn splitting_idempotent_is_self_adjoint() {
    for n in 2..=6 {
        let x = to_algebra_element(&splitting_idempotent(n).unwrap()).unwrap();
        assert_eq!(flip_star(&x), x, "n = {n}");
    }
}

#[test]
fn quasi_additive_examples() {
    let x = quasi_additive(2, 5, Eps::Orthogonal).unwrap();
    let mut want = AlgebraElement::identity(2);
    want.add_term(contraction(2, 1, 2).unwrap(), &rf("-1/5"));
    assert_eq!(x, want);
    assert_eq!(format!("{x}"), "1 − (1/5)·[d_12]");
    let x = quasi_additive(3, 2, Eps::Symplectic).unwrap();
    assert_eq!(x, central_young_symmetriser(&Partition::column(3)));
}

#[test]
fn quasi_additive_form_is_central() {
    let p = quasi_additive_form(3, 4, Eps::Orthogonal).unwrap();
    assert_eq!(p.kind, ProjectorKind::QuasiAdditive);
    assert_eq!(to_algebra_element(&p).unwrap(), quasi_additive(3, 4, Eps::Orthogonal).unwrap());
}

#[test]
fn json_export() {
    let p = splitting_idempotent(4).unwrap();
    let j = p.to_json().unwrap();
    assert_eq!(j["n"], 4);
    assert_eq!(j["delta"], "generic");
    assert_eq!(j["basis"], "normalized_bracelet");
    assert_eq!(j["terms"].as_array().unwrap().len(), 8);
    assert_eq!(j["spectrum"].as_array().unwrap().len(), 6);
    let first = &j["spectrum"][0];
    assert_eq!(first["f"], 1);
    assert!(first["skew"]["outer"].is_array());
    assert!(first["value"]["num"].is_array());
    let term = j["terms"].as_array().unwrap().iter().find(|t| t["monomial"] == "[nsns]").unwrap();
    let c: RationalFunction = serde_json::from_value(term["coefficient"].clone()).unwrap();
    assert_eq!(c, rf("-(3d+2)/((d-2)(d-1)(d+2)(d+4))"));
    let q = universal_projector(3, group(4, Eps::Symplectic)).unwrap().to_json().unwrap();
    assert_eq!(q["delta"], "N=4,eps=-1");
    let arc = q["terms"].as_array().unwrap().iter().find(|t| t["monomial"] == "[ns][p]").unwrap();
    let c: RationalFunction = serde_json::from_value(arc["coefficient"].clone()).unwrap();
    assert_eq!(c, rf("3/10"));
    let again = universal_projector(3, group(4, Eps::Symplectic)).unwrap().to_json().unwrap();
    assert_eq!(serde_json::to_string(&q).unwrap(), serde_json::to_string(&again).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn expansion_is_independent_of_factor_order(seed in any::<u64>(), n in 3usize..=5) {
        let spectrum = spectrum_universal(n, Regime::Generic).unwrap();
        let mut shuffled = spectrum.clone();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        prop_assert_eq!(expand_factorized(n, &shuffled).unwrap(), expand_factorized(n, &spectrum).unwrap());
    }
}
