//! Acceptance run: one PASS/FAIL line per criterion, all checks exact.
//!
//! Criterion 12 has an expected failure. The asserted `2(δ+1)` vs `2δ`
//! discrepancy at six points does not occur: `A_n` is central in the
//! centralizer, so both sides equal `2δ + 2`. The line prints FAIL with the
//! computed values; the run only exits nonzero if some other check fails,
//! or if this one unexpectedly starts to pass.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use traceless::bracelets::{
    a_action_normalized, basis_monomials, class_from_monomial, delta_op, element_to_vector, star, BraceletMonomial,
    BraceletVector,
};
use traceless::brauer::{
    build_named_element, central_young_symmetriser, flip_star, multiply_elements, transposition, AlgebraElement,
    BrauerDiagram, NamedElement, Node,
};
use traceless::exactnum::{rat, ratio, Polynomial, RationalFunction};
use traceless::projector::{
    quasi_additive, reduced_projector, spectrum_reduced, spectrum_reduced_generic, spectrum_universal,
    splitting_idempotent, to_algebra_element, universal_projector, SpectrumEntry,
};
use traceless::tensor::{apply_element, is_traceless, make_metric, random_tensor, trace_ij, Metric};
use traceless::young::{factorial, hook_dim, jdt_quotient, lr_coefficient, lr_coefficient_by_rectification, partitions_of, Partition};
use traceless::{Eps, GroupParams, Regime};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rf(s: &str) -> RationalFunction {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn mono(s: &str) -> BraceletMonomial {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn vector(n: usize, terms: &[(&str, &str)]) -> BraceletVector {
    let mut v = BraceletVector::zero(n);
    for (z, c) in terms {
        v.add_term(mono(z), &rf(c));
    }
    v
}

fn group(dim: usize, eps: Eps) -> Regime {
    Regime::Group(GroupParams::new(dim, eps).unwrap())
}

fn linear(a: i64, b: i64) -> String {
    RationalFunction::from_poly(Polynomial::from_ints(&[b, a])).to_string()
}

fn symbolic(entries: &[SpectrumEntry]) -> BTreeSet<String> {
    entries.iter().map(|e| e.value.to_string()).collect()
}

fn specialized(entries: &[SpectrumEntry]) -> BTreeSet<i64> {
    entries.iter().map(|e| e.specialized.unwrap()).collect()
}

/// Coordinates over the class sums `e_ζ` of a centralizer element.
fn e_coordinates(x: &AlgebraElement) -> BraceletVector {
    let v = element_to_vector(x).expect("element is constant on classes");
    let mut out = BraceletVector::zero(x.n());
    for (z, c) in v.terms() {
        out.add_term(z.clone(), &c.scale(&ratio(1, z.stability_index() as i64)));
    }
    out
}

fn universal(n: usize, m: &Metric) -> AlgebraElement {
    to_algebra_element(&universal_projector(n, group(m.dim, m.eps)).unwrap()).unwrap()
}

fn splitting_four_points() -> Outcome {
    let p = splitting_idempotent(4).map_err(|e| e.to_string())?;
    let table = [
        ("[ns][p][p]", "-(d^2(d+4)-4)/((d-2)d(d+2)(d+4))"),
        ("[ns][pp]", "4/((d-2)d(d+2)(d+4))"),
        ("[nsp][p]", "(d+3)/((d-2)(d+2)(d+4))"),
        ("[nspp]", "-1/((d-2)(d+2)(d+4))"),
        ("[npsp]", "-2/((d-2)d(d+4))"),
        ("[ns][ns]", "(d(d+3)+6)/((d-2)(d-1)(d+2)(d+4))"),
        ("[nsns]", "-(3d+2)/((d-2)(d-1)(d+2)(d+4))"),
    ];
    for (z, c) in table {
        let got = p.coordinates.coeff(&mono(z));
        ensure(got == rf(c), || format!("a{z} = {got}, expected {c}"))?;
    }
    ensure(p.coordinates.coeff(&BraceletMonomial::p_power(4)) == RationalFunction::one(), || "unit coefficient".into())?;
    ensure(p.coordinates.len() == 8, || format!("{} terms", p.coordinates.len()))
}

fn laplacian_tables() -> Outcome {
    let three: [(&str, &[(&str, &str)]); 5] = [
        ("[p]^3", &[("[ns][p]", "3")]),
        ("[pp][p]", &[("[ns][p]", "1"), ("[nsp]", "2")]),
        ("[ppp]", &[("[nsp]", "3")]),
        ("[ns][p]", &[("[ns][p]", "d"), ("[nsp]", "2")]),
        ("[nsp]", &[("[ns][p]", "1"), ("[nsp]", "d + 1")]),
    ];
    for (z, want) in three {
        let got = delta_op(&mono(z)).map_err(|e| e.to_string())?;
        ensure(got == vector(3, want), || format!("Δ{z} = {got}"))?;
    }
    let four: [(&str, &[(&str, &str)]); 7] = [
        ("[ns][p][p]", &[("[ns][p][p]", "d"), ("[nsp][p]", "1"), ("[ns][ns]", "2")]),
        ("[ns][pp]", &[("[ns][pp]", "d"), ("[nspp]", "1"), ("[ns][ns]", "2")]),
        ("[nsp][p]", &[("[nsp][p]", "d + 1"), ("[ns][p][p]", "4"), ("[nspp]", "1"), ("[npsp]", "2"), ("[nsns]", "4")]),
        ("[nspp]", &[("[nspp]", "d + 1"), ("[ns][pp]", "4"), ("[nsp][p]", "1"), ("[npsp]", "2"), ("[nsns]", "4")]),
        ("[npsp]", &[("[npsp]", "d"), ("[nsp][p]", "1"), ("[nspp]", "1"), ("[ns][ns]", "4")]),
        ("[ns][ns]", &[("[ns][ns]", "2d"), ("[nsns]", "2")]),
        ("[nsns]", &[("[nsns]", "2d + 2"), ("[ns][ns]", "4")]),
    ];
    for (z, want) in four {
        let got = a_action_normalized(&BraceletVector::basis(mono(z))).map_err(|e| e.to_string())?;
        ensure(got == vector(4, want), || format!("A·ě{z} = {got}"))?;
    }
    Ok(())
}

fn stability_indices() -> Outcome {
    let st: Vec<u64> = ["[ns][p][p]", "[ns][pp]", "[nsp][p]", "[nspp]", "[npsp]", "[ns][ns]", "[nsns]"]
        .iter()
        .map(|z| mono(z).stability_index())
        .collect();
    ensure(st == [4, 4, 1, 1, 2, 8, 4], || format!("{st:?}"))
}

fn three_point_expansions() -> Outcome {
    for (eps, arc, loop_) in [
        (Eps::Orthogonal, "-(d + 1)/((d - 1)(d + 2))", "1/((d - 1)(d + 2))"),
        (Eps::Symplectic, "(d - 1)/((d - 2)(d + 1))", "1/((d - 2)(d + 1))"),
    ] {
        // The symbolic coefficients do not depend on which N is fixed.
        let dim = 4;
        let x = to_algebra_element(&universal_projector(3, group(dim, eps)).unwrap()).map_err(|e| e.to_string())?;
        ensure(x.len() == 10, || format!("{} terms at eps = {eps}", x.len()))?;
        for (b, c) in x.terms() {
            let in_n = c.rescale_variable(&rat(eps.sign()));
            let want = if *b == BrauerDiagram::identity(3) {
                RationalFunction::one()
            } else if b.arc_count() == 1 && (1..=3).any(|k| b.partner(Node::Top(k)) == Node::Bottom(k)) {
                rf(arc)
            } else {
                rf(loop_)
            };
            ensure(in_n == want, || format!("eps = {eps}, [{b}]: {in_n}"))?;
        }
    }
    Ok(())
}

fn spectra() -> Outcome {
    for dim in 1..=8 {
        let s = spectrum_universal(2, group(dim, Eps::Orthogonal)).map_err(|e| e.to_string())?;
        ensure(specialized(&s) == BTreeSet::from([dim as i64]), || format!("n = 2, N = {dim}"))?;
        if dim >= 2 {
            let s = spectrum_universal(3, group(dim, Eps::Orthogonal)).map_err(|e| e.to_string())?;
            let want = BTreeSet::from([dim as i64 - 1, dim as i64 + 2]);
            ensure(specialized(&s) == want, || format!("n = 3, N = {dim}: {:?}", specialized(&s)))?;
        }
    }
    ensure(symbolic(&spectrum_universal(3, Regime::Generic).unwrap()) == BTreeSet::from([linear(1, -1), linear(1, 2)]), || {
        "generic n = 3".into()
    })?;
    for n in 2..=6i64 {
        let s = spectrum_universal(n as usize, group(2, Eps::Symplectic)).map_err(|e| e.to_string())?;
        let want: BTreeSet<i64> = (1..=n / 2).map(|f| -(n - f + 1) * f).collect();
        ensure(specialized(&s) == want, || format!("Sp(2), n = {n}: {:?}", specialized(&s)))?;
    }
    let four: BTreeSet<String> =
        [(1, 4), (2, 4), (1, 0), (1, 2), (1, -2), (2, -2)].iter().map(|&(a, b)| linear(a, b)).collect();
    let s = spectrum_universal(4, Regime::Generic).unwrap();
    ensure(s.len() == 6 && symbolic(&s) == four, || format!("generic n = 4: {:?}", symbolic(&s)))?;

    for n in 2..=8i64 {
        let row = symbolic(&spectrum_reduced_generic(&Partition::row(n as usize)));
        let want: BTreeSet<String> = (1..=n / 2).map(|f| linear(f, 2 * (n - f - 1) * f)).collect();
        ensure(row == want, || format!("symmetric, n = {n}: {row:?}"))?;
        let hook = symbolic(&spectrum_reduced_generic(&Partition::hook(2, n as usize - 2)));
        ensure(hook == BTreeSet::from([linear(1, 2 - n)]), || format!("maximal hook, n = {n}: {hook:?}"))?;
        for m in 2..n {
            let got = symbolic(&spectrum_reduced_generic(&Partition::hook(m as usize, (n - m) as usize)));
            let mut want: BTreeSet<String> = (1..=m / 2).map(|f| linear(f, 2 * (m - f) * f - n)).collect();
            want.extend((1..=(m - 1) / 2).map(|f| linear(f, 2 * (m - 1 - f) * f)));
            ensure(got == want, || format!("hook ({m},1^{}): {got:?}", n - m))?;
        }
    }
    Ok(())
}

fn combinatorics() -> Outcome {
    let c = lr_coefficient(&part("4,2,1"), &part("2,1"), &part("3,1"));
    ensure(c == 2, || format!("c = {c}"))?;
    let q: BTreeSet<String> = jdt_quotient(&part("4,2,1"), &part("3,1")).iter().map(ToString::to_string).collect();
    let want: BTreeSet<String> = ["(3)", "(2,1)", "(1,1,1)"].iter().map(|s| s.to_string()).collect();
    ensure(q == want, || format!("quotient {q:?}"))?;
    let mut compared = 0;
    for size in 0..=8 {
        for mu in partitions_of(size, None) {
            for k in 0..=size {
                for lambda in partitions_of(k, None).into_iter().filter(|l| mu.contains(l)) {
                    for nu in partitions_of(size - k, None) {
                        let (a, b) = (lr_coefficient(&mu, &lambda, &nu), lr_coefficient_by_rectification(&mu, &lambda, &nu));
                        ensure(a == b, || format!("c^{mu}_{{{lambda},{nu}}}: {a} vs {b}"))?;
                        compared += 1;
                    }
                }
            }
        }
    }
    ensure(compared > 0, || "no triples".into())?;
    for n in 0..=8 {
        let sum: u64 = partitions_of(n, None).iter().map(|mu| hook_dim(mu).pow(2)).sum();
        ensure(sum == factorial(n), || format!("Σ f² = {sum} for n = {n}"))?;
    }
    Ok(())
}

fn laplacian_oracle() -> Outcome {
    for n in 1..=5 {
        let a = build_named_element(NamedElement::An, n).map_err(|e| e.to_string())?;
        for z in basis_monomials(n) {
            let e = class_from_monomial(&z, false).map_err(|e| e.to_string())?;
            let prod = multiply_elements(&a, &e).map_err(|e| e.to_string())?;
            let got = delta_op(&z).map_err(|e| e.to_string())?;
            ensure(got == e_coordinates(&prod), || format!("Δ{z}"))?;
        }
    }
    Ok(())
}

fn structural_counts() -> Outcome {
    for n in 1..=7u64 {
        let double_factorial: u64 = (1..=2 * n - 1).step_by(2).product();
        let count = BrauerDiagram::all(n as usize).len() as u64;
        ensure(count == double_factorial, || format!("n = {n}: {count}"))?;
    }
    let basis: BTreeSet<String> = basis_monomials(3).iter().map(ToString::to_string).collect();
    let want: BTreeSet<String> = ["[p]^3", "[pp][p]", "[ppp]", "[ns][p]", "[nsp]"].iter().map(|z| mono(z).to_string()).collect();
    ensure(basis == want, || format!("{basis:?}"))
}

fn projector_laws() -> Outcome {
    let x4 = to_algebra_element(&splitting_idempotent(4).unwrap()).unwrap();
    let a4 = build_named_element(NamedElement::An, 4).unwrap();
    ensure(multiply_elements(&a4, &x4).unwrap().is_zero(), || "A_4·P̄_4 ≠ 0".into())?;
    ensure(multiply_elements(&x4, &x4).unwrap() == x4, || "P̄_4² ≠ P̄_4".into())?;
    for n in 2..=7 {
        let p = splitting_idempotent(n).unwrap();
        ensure(a_action_normalized(&p.coordinates).unwrap().is_zero(), || format!("A_{n}·P̄_{n} ≠ 0"))?;
        if n <= 6 {
            let x = to_algebra_element(&p).unwrap();
            ensure(flip_star(&x) == x, || format!("P̄_{n}* ≠ P̄_{n}"))?;
        }
    }
    Ok(())
}

fn tensor_properties() -> Outcome {
    for (n, dim, eps) in [(3, 3, 1), (4, 3, 1), (4, 4, 1), (3, 4, -1), (4, 4, -1)] {
        let m = make_metric(dim, Eps::from_sign(eps).unwrap()).unwrap();
        let p = universal(n, &m);
        let q = quasi_additive(n, dim, m.eps).unwrap();
        let tag = format!("n = {n}, N = {dim}, eps = {eps}");
        for seed in 0..5 {
            let t = random_tensor(n, dim, seed);
            let pt = apply_element(&p, &t, &m).unwrap();
            ensure(is_traceless(&pt, &m), || format!("{tag}, seed {seed}: image has a trace"))?;
            ensure(apply_element(&p, &pt, &m).unwrap() == pt, || format!("{tag}, seed {seed}: not idempotent"))?;
            for i in 1..n {
                let s = AlgebraElement::from_diagram(transposition(n, i, i + 1).unwrap());
                let lhs = apply_element(&p, &apply_element(&s, &t, &m).unwrap(), &m).unwrap();
                ensure(lhs == apply_element(&s, &pt, &m).unwrap(), || format!("{tag}: s_{i} does not commute"))?;
            }
            ensure(apply_element(&q, &t, &m).unwrap() == pt, || format!("{tag}, seed {seed}: quasi-additive form differs"))?;
        }
    }
    Ok(())
}

fn degenerate_cases() -> Outcome {
    let one = make_metric(1, Eps::Orthogonal).unwrap();
    for n in 2..=4 {
        let p = universal(n, &one);
        for seed in 0..5 {
            ensure(apply_element(&p, &random_tensor(n, 1, seed), &one).unwrap().is_zero(), || format!("N = 1, n = {n}"))?;
        }
    }
    let sp2 = make_metric(2, Eps::Symplectic).unwrap();
    let form = universal_projector(3, group(2, Eps::Symplectic)).unwrap();
    let want = vector(3, &[("[p]^3", "1"), ("[ns][p]", "1/3")]);
    ensure(form.specialized_coordinates().unwrap() == want, || "P_3 ≠ 1 + A_3/3".into())?;
    let p = to_algebra_element(&form).unwrap();
    for seed in 0..5 {
        let image = apply_element(&p, &random_tensor(3, 2, seed), &sp2).unwrap();
        ensure(is_traceless(&image, &sp2), || format!("Sp(2), seed {seed}: image has a trace"))?;
    }
    Ok(())
}

/// Returns `(small cases hold, six-point claim holds, description)`.
fn commutativity() -> (bool, bool, String) {
    let mut small = true;
    for n in 1..=5 {
        for z in basis_monomials(n) {
            small &= delta_op(&z).unwrap() == delta_op(&star(&z)).unwrap().star();
        }
    }
    let z = mono("[nsnpsp]");
    let lhs = delta_op(&z).unwrap().coeff(&z);
    let rhs = delta_op(&star(&z)).unwrap().star().coeff(&z);
    let claim = lhs == rf("2d + 2") && rhs == rf("2d") && lhs != rhs;
    let a = build_named_element(NamedElement::An, 6).unwrap();
    let e = class_from_monomial(&z, true).unwrap();
    let central = multiply_elements(&a, &e).unwrap() == multiply_elements(&e, &a).unwrap();
    let text = format!(
        "n ≤ 5 symmetric: {small}; at [nsnpsp] Δ gives {lhs}, (Δ(ζ*))* gives {rhs}; A_6·ě = ě·A_6 on diagrams: {central}"
    );
    (small, claim, text)
}

fn weyl_demo() -> Outcome {
    let m4 = make_metric(4, Eps::Orthogonal).unwrap();
    let p4 = universal(4, &m4);
    for seed in 0..3 {
        let r = random_tensor(4, 4, seed).antisymmetrize_pair(3, 4).unwrap();
        let w = apply_element(&p4, &r, &m4).unwrap();
        ensure(!w.is_zero(), || "N = 4: projection vanished".into())?;
        ensure(w.add(&w.permute_slots(&[0, 1, 3, 2]).unwrap()).unwrap().is_zero(), || "lost antisymmetry".into())?;
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            ensure(trace_ij(&w, i, j, &m4).unwrap().is_zero(), || format!("N = 4: tr_{i}{j} ≠ 0"))?;
        }
    }
    let m3 = make_metric(3, Eps::Orthogonal).unwrap();
    let p3 = universal(4, &m3);
    let z22 = central_young_symmetriser(&part("2,2"));
    for seed in 0..3 {
        let t = apply_element(&z22, &random_tensor(4, 3, seed), &m3).unwrap();
        ensure(apply_element(&p3, &t, &m3).unwrap().is_zero(), || "N = 3: (2,2) part survives".into())?;
    }
    let p31 = reduced_projector(&part("3,1"), group(3, Eps::Orthogonal)).unwrap();
    let want = vector(4, &[("[p]^4", "1"), ("[ns][ns]", "2/15"), ("[nsp][p]", "1/15"), ("[ns][p][p]", "-1/3")]);
    let got = p31.specialized_coordinates().unwrap();
    ensure(got == want, || format!("P_4^(3,1) = {got}"))?;
    let s = |mu: &str| specialized(&spectrum_reduced(&part(mu), 3, Eps::Orthogonal).unwrap());
    ensure(s("3,1") == BTreeSet::from([3, 5]) && s("2,2") == BTreeSet::from([1, 4]) && s("2,1,1") == BTreeSet::from([1]), || {
        "reduced spectra at N = 3".into()
    })
}

fn run(f: fn() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
        let msg = panic.downcast_ref::<String>().cloned().or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    })
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("1 splitting idempotent, n = 4", splitting_four_points),
        ("2 Δ tables, n = 3 and 4", laplacian_tables),
        ("3 stability indices", stability_indices),
        ("4 three-point expansions on diagrams", three_point_expansions),
        ("5 spectra", spectra),
        ("6 combinatorics", combinatorics),
        ("7 Δ against diagram multiplication, n ≤ 5", laplacian_oracle),
        ("8 structural counts", structural_counts),
        ("9 symbolic projector laws", projector_laws),
        ("10 tensor properties", tensor_properties),
        ("11 degenerate cases", degenerate_cases),
        ("13 Weyl demo", weyl_demo),
    ];
    let mut unexpected = 0;
    let start = Instant::now();
    for (name, f) in criteria {
        if name.starts_with("13") {
            unexpected += commutativity_line();
        }
        let t = Instant::now();
        match run(f) {
            Ok(()) => println!("PASS {name} ({:.2?})", t.elapsed()),
            Err(msg) => {
                println!("FAIL {name}: {msg}");
                unexpected += 1;
            }
        }
    }
    println!("total {:.2?}", start.elapsed());
    if unexpected > 0 {
        println!("{unexpected} unexpected result(s)");
        std::process::exit(1);
    }
}

/// Prints criterion 12 and returns how many of its outcomes are unexpected.
fn commutativity_line() -> usize {
    let t = Instant::now();
    match catch_unwind(commutativity) {
        Ok((small, claim, text)) => {
            if small && claim {
                println!("PASS 12 commutativity dichotomy ({:.2?}): {text}", t.elapsed());
                println!("  the six-point case was expected to fail but now matches the asserted discrepancy");
                1
            } else if small {
                println!("FAIL 12 commutativity dichotomy (expected failure, {:.2?}): {text}", t.elapsed());
                0
            } else {
                println!("FAIL 12 commutativity dichotomy: {text}");
                1
            }
        }
        Err(_) => {
            println!("FAIL 12 commutativity dichotomy: panicked");
            1
        }
    }
}
