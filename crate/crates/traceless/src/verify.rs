//! Self-checks run by `traceless verify`.
//!
//! * `relations`: the defining relations of `B_n(δ)` on diagrams, the flip
//!   anti-involution, and the tensor action on products of generators.
//! * `projector`: algebraic laws of `P̄_n` and the projector properties on
//!   random tensors.
//! * `golden`: reference tables for three and four points, spectra and the
//!   combinatorial examples.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bracelets::{a_action_normalized, class_from_monomial, delta_op, element_to_vector, BraceletMonomial, BraceletVector};
use crate::brauer::{
    build_named_element, contraction, flip_star, multiply_elements, transposition, AlgebraElement, NamedElement,
};
use crate::exactnum::{rat, ratio, Polynomial, RationalFunction};
use crate::projector::{
    reduced_projector, spectrum_reduced, spectrum_reduced_generic, spectrum_universal, splitting_idempotent,
    to_algebra_element, universal_projector, SpectrumEntry,
};
use crate::tensor::{apply_element, is_traceless, make_metric, random_tensor};
use crate::young::{jdt_quotient, lr_coefficient, Partition};
use crate::{Eps, Error, GroupParams, Regime, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Projector,
    Golden,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "relations" => Ok(Suite::Relations),
            "projector" => Ok(Suite::Projector),
            "golden" => Ok(Suite::Golden),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Projector => "projector",
            Suite::Golden => "golden",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS {}", c.name)?;
            } else {
                writeln!(f, "FAIL {}: {}", c.name, c.detail)?;
            }
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{}: {ok}/{} checks passed", self.suite, self.checks.len())
    }
}

pub fn run_suite(suite: Suite) -> Result<Report> {
    let checks = match suite {
        Suite::Relations => relations()?,
        Suite::Projector => projector_laws()?,
        Suite::Golden => golden()?,
    };
    Ok(Report { suite, checks })
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    let detail = if passed { String::new() } else { detail.into() };
    Check { name: name.into(), passed, detail }
}

fn compare<T: PartialEq + fmt::Display>(name: impl Into<String>, got: &T, want: &T) -> Check {
    check(name, got == want, format!("got {got}, expected {want}"))
}

fn rf(s: &str) -> Result<RationalFunction> {
    s.parse()
}

fn mono(s: &str) -> Result<BraceletMonomial> {
    s.parse()
}

fn part(s: &str) -> Result<Partition> {
    s.parse()
}

fn vector(n: usize, terms: &[(&str, &str)]) -> Result<BraceletVector> {
    let mut v = BraceletVector::zero(n);
    for (z, c) in terms {
        v.add_term(mono(z)?, &rf(c)?);
    }
    Ok(v)
}

fn group(dim: usize, eps: Eps) -> Result<Regime> {
    Ok(Regime::Group(GroupParams::new(dim, eps)?))
}

fn mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    multiply_elements(a, b)
}

fn relations() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let s = |i: usize| Ok::<_, Error>(AlgebraElement::from_diagram(transposition(n, i, i + 1)?));
        let d = |i: usize| Ok::<_, Error>(AlgebraElement::from_diagram(contraction(n, i, i + 1)?));
        let delta = RationalFunction::delta();
        let one = AlgebraElement::identity(n);
        let mut ok = [true; 4];
        for i in 1..n {
            let (si, di) = (s(i)?, d(i)?);
            ok[0] &= mul(&si, &si)? == one
                && mul(&di, &di)? == di.scale(&delta)
                && mul(&di, &si)? == di
                && mul(&si, &di)? == di;
            for j in i + 2..n {
                let (sj, dj) = (s(j)?, d(j)?);
                ok[1] &= mul(&si, &sj)? == mul(&sj, &si)?
                    && mul(&di, &sj)? == mul(&sj, &di)?
                    && mul(&si, &dj)? == mul(&dj, &si)?
                    && mul(&di, &dj)? == mul(&dj, &di)?;
            }
            if i + 1 < n {
                let (sk, dk) = (s(i + 1)?, d(i + 1)?);
                ok[2] &= mul(&mul(&si, &sk)?, &si)? == mul(&mul(&sk, &si)?, &sk)?
                    && mul(&mul(&di, &dk)?, &di)? == di
                    && mul(&mul(&dk, &di)?, &dk)? == dk;
                ok[3] &= mul(&mul(&si, &dk)?, &di)? == mul(&sk, &di)? && mul(&mul(&dk, &di)?, &sk)? == mul(&dk, &si)?;
            }
        }
        let names = ["involutions and loops", "distant generators commute", "braid relations", "mixed braid relations"];
        for (name, passed) in names.iter().zip(ok) {
            out.push(check(format!("{name}, n = {n}"), passed, "relation violated"));
        }

        let gens: Vec<AlgebraElement> = (1..n).map(s).chain((1..n).map(d)).collect::<Result<_>>()?;
        let mut flip_ok = true;
        for x in &gens {
            for y in &gens {
                flip_ok &= flip_star(&mul(x, y)?) == mul(&flip_star(y), &flip_star(x))?;
            }
        }
        out.push(check(format!("flip reverses products, n = {n}"), flip_ok, "(xy)* ≠ y*x*"));
    }

    for (dim, eps) in [(3, Eps::Orthogonal), (2, Eps::Symplectic), (4, Eps::Symplectic)] {
        let m = make_metric(dim, eps)?;
        let n = 3;
        let gens: Vec<AlgebraElement> = (1..n)
            .flat_map(|i| [transposition(n, i, i + 1), contraction(n, i, i + 1)])
            .map(|b| b.map(AlgebraElement::from_diagram))
            .collect::<Result<_>>()?;
        let t = random_tensor(n, dim, 17);
        let mut ok = true;
        for x in &gens {
            for y in &gens {
                ok &= apply_element(&mul(x, y)?, &t, &m)? == apply_element(x, &apply_element(y, &t, &m)?, &m)?;
            }
        }
        out.push(check(format!("tensor action is multiplicative, N = {dim}, eps = {eps}"), ok, "r(xy) ≠ r(x)r(y)"));
    }
    Ok(out)
}

fn projector_laws() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=6 {
        let p = splitting_idempotent(n)?;
        out.push(check(
            format!("A·P̄ = 0, n = {n}"),
            a_action_normalized(&p.coordinates)?.is_zero(),
            "nonzero residual",
        ));
        let x = to_algebra_element(&p)?;
        out.push(check(format!("P̄ is fixed by the flip, n = {n}"), flip_star(&x) == x, "P̄* ≠ P̄"));
        if n <= 4 {
            out.push(check(format!("P̄² = P̄ on diagrams, n = {n}"), mul(&x, &x)? == x, "not idempotent"));
        }
    }
    for (n, dim, eps) in [(3, 3, Eps::Orthogonal), (4, 3, Eps::Orthogonal), (3, 4, Eps::Symplectic), (4, 4, Eps::Symplectic)]
    {
        let m = make_metric(dim, eps)?;
        let p = to_algebra_element(&universal_projector(n, group(dim, eps)?)?)?;
        let (mut traceless, mut idempotent, mut symmetric) = (true, true, true);
        for seed in 0..2 {
            let t = random_tensor(n, dim, seed);
            let pt = apply_element(&p, &t, &m)?;
            traceless &= is_traceless(&pt, &m);
            idempotent &= apply_element(&p, &pt, &m)? == pt;
            for i in 1..n {
                let s = AlgebraElement::from_diagram(transposition(n, i, i + 1)?);
                symmetric &= apply_element(&p, &apply_element(&s, &t, &m)?, &m)? == apply_element(&s, &pt, &m)?;
            }
        }
        let tag = format!("n = {n}, N = {dim}, eps = {eps}");
        out.push(check(format!("image is traceless, {tag}"), traceless, "a trace survives"));
        out.push(check(format!("idempotent on tensors, {tag}"), idempotent, "P(PT) ≠ PT"));
        out.push(check(format!("commutes with transpositions, {tag}"), symmetric, "P s T ≠ s P T"));
    }
    let m = make_metric(1, Eps::Orthogonal)?;
    for n in 2..=4 {
        let p = to_algebra_element(&universal_projector(n, group(1, Eps::Orthogonal)?)?)?;
        let zero = apply_element(&p, &random_tensor(n, 1, 3), &m)?.is_zero();
        out.push(check(format!("one-dimensional projector vanishes, n = {n}"), zero, "nonzero image"));
    }
    let sp2 = make_metric(2, Eps::Symplectic)?;
    let p = to_algebra_element(&universal_projector(3, group(2, Eps::Symplectic)?)?)?;
    let ok = (0..3).map(|seed| apply_element(&p, &random_tensor(3, 2, seed), &sp2)).all(|r| matches!(r, Ok(t) if is_traceless(&t, &sp2)));
    out.push(check("Sp(2), n = 3: images of 1 + A/3 are traceless", ok, "a trace survives"));
    Ok(out)
}

fn specialized_set(entries: &[SpectrumEntry]) -> String {
    let set: BTreeSet<i64> = entries.iter().filter_map(|e| e.specialized).collect();
    format!("{set:?}")
}

fn symbolic_set(entries: &[SpectrumEntry]) -> String {
    let set: BTreeSet<String> = entries.iter().map(|e| e.value.to_string()).collect();
    format!("{set:?}")
}

fn symbolic_strings(values: &[&str]) -> Result<String> {
    let set: BTreeSet<String> = values.iter().map(|v| rf(v).map(|r| r.to_string())).collect::<Result<_>>()?;
    Ok(format!("{set:?}"))
}

fn golden() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let p4 = splitting_idempotent(4)?;
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
    out.push(compare("splitting idempotent, n = 4", &p4.coordinates, &vector(4, &table)?));

    let delta3: [(&str, &[(&str, &str)]); 5] = [
        ("[p]^3", &[("[ns][p]", "3")]),
        ("[pp][p]", &[("[ns][p]", "1"), ("[nsp]", "2")]),
        ("[ppp]", &[("[nsp]", "3")]),
        ("[ns][p]", &[("[ns][p]", "d"), ("[nsp]", "2")]),
        ("[nsp]", &[("[ns][p]", "1"), ("[nsp]", "d + 1")]),
    ];
    for (z, want) in delta3 {
        out.push(compare(format!("Δ{z}"), &delta_op(&mono(z)?)?, &vector(3, want)?));
    }
    let normalized4: [(&str, &[(&str, &str)]); 7] = [
        ("[ns][p][p]", &[("[ns][p][p]", "d"), ("[nsp][p]", "1"), ("[ns][ns]", "2")]),
        ("[ns][pp]", &[("[ns][pp]", "d"), ("[nspp]", "1"), ("[ns][ns]", "2")]),
        ("[nsp][p]", &[("[nsp][p]", "d + 1"), ("[ns][p][p]", "4"), ("[nspp]", "1"), ("[npsp]", "2"), ("[nsns]", "4")]),
        ("[nspp]", &[("[nspp]", "d + 1"), ("[ns][pp]", "4"), ("[nsp][p]", "1"), ("[npsp]", "2"), ("[nsns]", "4")]),
        ("[npsp]", &[("[npsp]", "d"), ("[nsp][p]", "1"), ("[nspp]", "1"), ("[ns][ns]", "4")]),
        ("[ns][ns]", &[("[ns][ns]", "2d"), ("[nsns]", "2")]),
        ("[nsns]", &[("[nsns]", "2d + 2"), ("[ns][ns]", "4")]),
    ];
    for (z, want) in normalized4 {
        let got = a_action_normalized(&BraceletVector::basis(mono(z)?))?;
        out.push(compare(format!("A·ě{z}"), &got, &vector(4, want)?));
    }

    let st: Vec<u64> = ["[ns][p][p]", "[ns][pp]", "[nsp][p]", "[nspp]", "[npsp]", "[ns][ns]", "[nsns]"]
        .iter()
        .map(|z| mono(z).map(|m| m.stability_index()))
        .collect::<Result<_>>()?;
    out.push(check("stability indices, n = 4", st == [4, 4, 1, 1, 2, 8, 4], format!("got {st:?}")));

    for (eps, dim, arc, loop_) in [
        (Eps::Orthogonal, 5, "-(d + 1)/((d - 1)(d + 2))", "1/((d - 1)(d + 2))"),
        (Eps::Symplectic, 4, "(d - 1)/((d - 2)(d + 1))", "1/((d - 2)(d + 1))"),
    ] {
        let p = universal_projector(3, group(dim, eps)?)?;
        let in_n = |z: &str| Ok::<_, Error>(p.coordinates.coeff(&mono(z)?).rescale_variable(&rat(eps.sign())));
        let got = [in_n("[p]^3")?, in_n("[ns][p]")?, in_n("[nsp]")?];
        let want = [RationalFunction::one(), rf(arc)?, rf(loop_)?];
        let diagrams = to_algebra_element(&p)?.len();
        let ok = got == want && diagrams == 10;
        out.push(check(
            format!("three-point projector, eps = {eps}"),
            ok,
            format!("got {}, {}, {} on {diagrams} diagrams", got[0], got[1], got[2]),
        ));
    }

    out.push(compare("spectrum, n = 2", &symbolic_set(&spectrum_universal(2, Regime::Generic)?), &symbolic_strings(&["d"])?));
    out.push(compare(
        "spectrum, n = 3",
        &symbolic_set(&spectrum_universal(3, Regime::Generic)?),
        &symbolic_strings(&["d - 1", "d + 2"])?,
    ));
    out.push(compare(
        "spectrum, n = 4",
        &symbolic_set(&spectrum_universal(4, Regime::Generic)?),
        &symbolic_strings(&["d + 4", "2d + 4", "d", "d + 2", "d - 2", "2d - 2"])?,
    ));
    for n in 2..=6i64 {
        let want: BTreeSet<i64> = (1..=n / 2).map(|f| -(n - f + 1) * f).collect();
        out.push(compare(
            format!("spectrum, Sp(2), n = {n}"),
            &specialized_set(&spectrum_universal(n as usize, group(2, Eps::Symplectic)?)?),
            &format!("{want:?}"),
        ));
    }
    for (mu, want) in [("3,1", "{3, 5}"), ("2,2", "{1, 4}"), ("2,1,1", "{1}")] {
        out.push(compare(
            format!("reduced spectrum of ({mu}), N = 3"),
            &specialized_set(&spectrum_reduced(&part(mu)?, 3, Eps::Orthogonal)?),
            &want.to_string(),
        ));
    }
    for n in 3..=8usize {
        for m in 2..n {
            let mu = Partition::hook(m, n - m);
            let (mi, ni) = (m as i64, n as i64);
            let linear = |a: i64, b: i64| RationalFunction::from_poly(Polynomial::from_ints(&[b, a])).to_string();
            let mut want: BTreeSet<String> = (1..=mi / 2).map(|f| linear(f, 2 * (mi - f) * f - ni)).collect();
            want.extend((1..=(mi - 1) / 2).map(|f| linear(f, 2 * (mi - 1 - f) * f)));
            out.push(compare(
                format!("reduced spectrum of {mu}"),
                &symbolic_set(&spectrum_reduced_generic(&mu)),
                &format!("{want:?}"),
            ));
        }
    }

    let p31 = reduced_projector(&part("3,1")?, group(3, Eps::Orthogonal)?)?;
    let want = vector(4, &[("[p]^4", "1"), ("[ns][ns]", "2/15"), ("[nsp][p]", "1/15"), ("[ns][p][p]", "-1/3")])?;
    out.push(compare("reduced projector of (3,1), N = 3", &p31.specialized_coordinates()?, &want));

    let lr = lr_coefficient(&part("4,2,1")?, &part("2,1")?, &part("3,1")?);
    out.push(check("LR coefficient c^(4,2,1)_(2,1),(3,1)", lr == 2, format!("got {lr}")));
    let q: BTreeSet<String> = jdt_quotient(&part("4,2,1")?, &part("3,1")?).iter().map(ToString::to_string).collect();
    let want: BTreeSet<String> = ["(3)", "(2,1)", "(1,1,1)"].iter().map(|s| s.to_string()).collect();
    out.push(check("(4,2,1)⫽(3,1)", q == want, format!("got {q:?}")));

    let z = mono("[nsnpsp]")?;
    let xi = mono("[nsp]^2")?;
    let a2 = build_named_element(NamedElement::Af(2), 6)?;
    let e = class_from_monomial(&z, false)?;
    let coords = |x: &AlgebraElement| -> Result<(RationalFunction, RationalFunction)> {
        let v = element_to_vector(x).ok_or_else(|| Error::Parse("product left the centralizer".into()))?;
        let c = |m: &BraceletMonomial| v.coeff(m).scale(&ratio(1, m.stability_index() as i64));
        Ok((c(&z), c(&xi)))
    };
    let left = coords(&mul(&a2, &e)?)?;
    let right = coords(&mul(&e, &a2)?)?;
    let ok = left == (rf("d^2 + 2d")?, rf("d + 2")?) && right == (rf("d^2 + d + 2")?, rf("2d + 2")?);
    out.push(check(
        "A^(2)_6 and e_[nsnpsp] do not commute",
        ok,
        format!("left {}, {}; right {}, {}", left.0, left.1, right.0, right.1),
    ));
    Ok(out)
}
