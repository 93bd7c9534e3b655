//! Dotted bracelets, the derivation `∂` and the trace `τ`.
//!
//! Text form uses primes for dots: `s'` is `ṡ`, `p'` is `ṗ`, `s''` is `s̈`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::monomial::{BraceletMonomial, BraceletVector};
use super::word::{
    base, canonical, count, derive_letter, dihedral_orbit, dots, is_admissible, parse_letters, reversed, word_str,
    Bracelet, N, P, P_DOT, S, S_DDOT, S_DOT,
};
use crate::exactnum::{rat, RationalFunction};
use crate::{Error, Result};

type ExtMonomial = Vec<Vec<u8>>;

fn normalize(mut factors: ExtMonomial) -> ExtMonomial {
    for f in &mut factors {
        *f = canonical(f);
    }
    factors.sort();
    factors
}

/// Integer combination of monomials in possibly dotted bracelets.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExtendedPolynomial {
    terms: BTreeMap<ExtMonomial, i64>,
}

impl ExtendedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(zeta: &BraceletMonomial) -> Self {
        let mut x = Self::zero();
        x.add(zeta.factors().iter().map(|b| b.codes().to_vec()).collect(), 1);
        x
    }

    fn add(&mut self, m: ExtMonomial, c: i64) {
        if c == 0 {
            return;
        }
        let m = normalize(m);
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of the monomials, if nonzero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.iter().map(Vec::len).sum())
    }

    /// Highest total number of dots over all monomials.
    pub fn max_dots(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().flatten().map(|&c| dots(c)).sum()).max().unwrap_or(0)
    }

    /// The monomials and coefficients as text, in internal order.
    pub fn terms_text(&self) -> Vec<(String, i64)> {
        self.terms.iter().map(|(m, &c)| (monomial_text(m), c)).collect()
    }
}

fn monomial_text(m: &ExtMonomial) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < m.len() {
        let mut j = i;
        while j < m.len() && m[j] == m[i] {
            j += 1;
        }
        out.push('[');
        out.push_str(&word_str(&m[i]));
        out.push(']');
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

impl fmt::Display for ExtendedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str(&monomial_text(m))?;
        }
        Ok(())
    }
}

impl FromStr for ExtendedPolynomial {
    type Err = Error;
    /// Parses sums like `[ns''][p] + 2[ns'][p']`, or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut x = Self::zero();
        let text = s.trim();
        if text == "0" {
            return Ok(x);
        }
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            if i == chars.len() {
                break;
            }
            let mut sign = 1i64;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected '+' or '-' in {s:?}")));
            }
            first = false;
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            let digits: String = chars[i..].iter().take_while(|c| c.is_ascii_digit()).collect();
            i += digits.len();
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| Error::Parse(format!("bad coefficient in {s:?}")))?
            };
            while i < chars.len() && (chars[i].is_whitespace() || chars[i] == '*' || chars[i] == '·') {
                i += 1;
            }
            let mut factors = Vec::new();
            while i < chars.len() && chars[i] == '[' {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == ']')
                    .ok_or_else(|| Error::Parse(format!("missing ']' in {s:?}")))?;
                let body: String = chars[i + 1..i + close].iter().collect();
                let word = parse_letters(&body, true)?;
                i += close + 1;
                let mut mult = 1;
                if i < chars.len() && chars[i] == '^' {
                    let d: String = chars[i + 1..].iter().take_while(|c| c.is_ascii_digit()).collect();
                    mult = d.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                    i += 1 + d.len();
                }
                factors.extend(std::iter::repeat_n(word, mult));
            }
            if factors.is_empty() {
                return Err(Error::Parse(format!("expected a bracelet in {s:?}")));
            }
            x.add(factors, sign * coeff);
        }
        Ok(x)
    }
}

/// `∂`, extended from single letters by the Leibniz rule.
pub fn derive(x: &ExtendedPolynomial) -> ExtendedPolynomial {
    let mut out = ExtendedPolynomial::zero();
    for (m, &c) in &x.terms {
        for (fi, w) in m.iter().enumerate() {
            for (j, &letter) in w.iter().enumerate() {
                if let Some(d) = derive_letter(letter) {
                    let mut m2 = m.clone();
                    m2[fi][j] = d;
                    out.add(m2, c);
                }
            }
        }
    }
    out
}

/// Each `s` is eventually followed by an `n`, and the word is empty or admissible.
fn is_fit(u: &[u8]) -> bool {
    if u.is_empty() {
        return true;
    }
    if !is_admissible(u) {
        return false;
    }
    match u.iter().rposition(|&c| c == N) {
        Some(last_n) => !u[last_n..].contains(&S),
        None => !u.contains(&S),
    }
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Rotations and reflected rotations with a dotted letter in front.
fn dotted_first(w: &[u8]) -> Vec<Vec<u8>> {
    dihedral_orbit(w).into_iter().filter(|r| dots(r[0]) > 0).collect()
}

/// Words produced by `τ` on the dotted part, with coefficients. Every entry
/// is a list of undotted factors.
type TraceOut = Vec<(Vec<Vec<u8>>, RationalFunction)>;

fn int(c: i64) -> RationalFunction {
    RationalFunction::from_int(c)
}

fn tau_single_factor(w: &[u8]) -> Option<TraceOut> {
    let reps = dotted_first(w);
    // [s̈u] -> 2δ[su]
    if w.contains(&S_DDOT) {
        let r = &reps[0];
        let two_delta = RationalFunction::delta().scale(&rat(2));
        return Some(vec![(vec![cat(&[&[S], &r[1..]])], two_delta)]);
    }
    let split = |r: &Vec<u8>| {
        let k = 1 + r[1..].iter().position(|&c| dots(c) > 0).expect("second dot");
        (r[0], r[k], r[1..k].to_vec(), r[k + 1..].to_vec())
    };
    let mut candidates: Vec<(u8, u8, Vec<u8>, Vec<u8>)> = reps.iter().map(split).collect();
    candidates.dedup();
    // [ṡuṡv] -> 2([suṡI(v)] + [su][sv])
    if let Some((_, _, u, v)) = candidates.iter().find(|c| c.0 == S_DOT && c.1 == S_DOT) {
        return Some(vec![
            (vec![cat(&[&[S], u, &[S], &reversed(v)])], int(2)),
            (vec![cat(&[&[S], u]), cat(&[&[S], v])], int(2)),
        ]);
    }
    // [ṗuṡv] -> [puṡI(v)] + [pu][sv], u fit
    if let Some((_, _, u, v)) = candidates.iter().find(|c| c.0 == P_DOT && c.1 == S_DOT && is_fit(&c.2)) {
        return Some(vec![
            (vec![cat(&[&[P], u, &[S], &reversed(v)])], int(1)),
            (vec![cat(&[&[P], u]), cat(&[&[S], v])], int(1)),
        ]);
    }
    // [ṗuṗv] -> [nusI(v)] when u, v are fit
    if let Some((_, _, u, v)) =
        candidates.iter().find(|c| c.0 == P_DOT && c.1 == P_DOT && is_fit(&c.2) && is_fit(&c.3))
    {
        return Some(vec![(vec![cat(&[&[N], u, &[S], &reversed(v)])], int(1))]);
    }
    // [ṗuṗv] -> [nu][sv] when |u|_s > |u|_n
    if let Some((_, _, u, v)) =
        candidates.iter().find(|c| c.0 == P_DOT && c.1 == P_DOT && count(&c.2, S) > count(&c.2, N))
    {
        return Some(vec![(vec![cat(&[&[N], u]), cat(&[&[S], v])], int(1))]);
    }
    None
}

fn tau_two_factors(w1: &[u8], w2: &[u8]) -> Option<TraceOut> {
    let (a, b) = if base(dotted_letter(w1)) == P { (w1, w2) } else { (w2, w1) };
    let ra = dotted_first(a);
    let rb = dotted_first(b);
    let da = ra[0][0];
    let db = rb[0][0];
    match (da, db) {
        // [ṡu][ṡv] -> 2([susv] + [susI(v)])
        (S_DOT, S_DOT) => {
            let (u, v) = (&ra[0][1..], &rb[0][1..]);
            Some(vec![
                (vec![cat(&[&[S], u, &[S], v])], int(2)),
                (vec![cat(&[&[S], u, &[S], &reversed(v)])], int(2)),
            ])
        }
        // [ṗu][ṡv] -> [pusv] + [pusI(v)], u fit
        (P_DOT, S_DOT) => {
            let r = ra.iter().find(|r| is_fit(&r[1..]))?;
            let (u, v) = (&r[1..], &rb[0][1..]);
            Some(vec![
                (vec![cat(&[&[P], u, &[S], v])], int(1)),
                (vec![cat(&[&[P], u, &[S], &reversed(v)])], int(1)),
            ])
        }
        // [ṗu][ṗv] -> [nusI(v)], u and v fit
        (P_DOT, P_DOT) => {
            let r1 = ra.iter().find(|r| is_fit(&r[1..]))?;
            let r2 = rb.iter().find(|r| is_fit(&r[1..]))?;
            let (u, v) = (&r1[1..], &r2[1..]);
            Some(vec![(vec![cat(&[&[N], u, &[S], &reversed(v)])], int(1))])
        }
        _ => None,
    }
}

fn dotted_letter(w: &[u8]) -> u8 {
    *w.iter().find(|&&c| dots(c) > 0).expect("dotted factor")
}

fn tau_monomial(m: &ExtMonomial) -> Result<TraceOut> {
    let total: u32 = m.iter().flatten().map(|&c| dots(c)).sum();
    let fail = || Error::NoTraceRule(monomial_text(m));
    if total != 2 {
        return Err(fail());
    }
    let dotted: Vec<usize> = (0..m.len()).filter(|&i| m[i].iter().any(|&c| dots(c) > 0)).collect();
    let rest: Vec<Vec<u8>> = (0..m.len()).filter(|i| !dotted.contains(i)).map(|i| m[i].clone()).collect();
    let core = match dotted[..] {
        [i] => tau_single_factor(&m[i]),
        [i, j] => tau_two_factors(&m[i], &m[j]),
        _ => None,
    }
    .ok_or_else(fail)?;
    Ok(core
        .into_iter()
        .map(|(mut words, c)| {
            words.extend(rest.iter().cloned());
            (words, c)
        })
        .collect())
}

/// `τ`: removes the two dots of each monomial following the trace rules.
/// Fails on a monomial that does not carry exactly two dots or matches no
/// rule.
pub fn trace_tau(x: &ExtendedPolynomial) -> Result<BraceletVector> {
    let mut out = BraceletVector::zero(x.degree().unwrap_or(0));
    for (m, &c) in &x.terms {
        for (words, k) in tau_monomial(m)? {
            if words.iter().any(|w| !is_admissible(w)) {
                return Err(Error::NoTraceRule(format!("{} produced an inadmissible word", monomial_text(m))));
            }
            let zeta = BraceletMonomial::new(words.iter().map(|w| Bracelet::from_codes(w)).collect());
            out.add_term(zeta, &k.scale(&rat(c)));
        }
    }
    Ok(out)
}
