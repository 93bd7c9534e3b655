use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{Bracelet, P};
use crate::exactnum::{format_combination, RationalFunction};
use crate::young::factorial;
use crate::{Error, Result};

/// A product of bracelets, kept as a sorted list of factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BraceletMonomial {
    factors: Vec<Bracelet>,
}

impl BraceletMonomial {
    pub fn new(mut factors: Vec<Bracelet>) -> Self {
        factors.sort();
        BraceletMonomial { factors }
    }

    /// `[p]^n`, the image of the identity diagram.
    pub fn p_power(n: usize) -> Self {
        BraceletMonomial { factors: vec![Bracelet::from_codes(&[P]); n] }
    }

    pub fn factors(&self) -> &[Bracelet] {
        &self.factors
    }

    /// Total length of the words.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(Bracelet::len).sum()
    }

    /// Distinct factors with their multiplicities, in order.
    pub fn grouped(&self) -> Vec<(&Bracelet, usize)> {
        let mut out: Vec<(&Bracelet, usize)> = Vec::new();
        for f in &self.factors {
            match out.last_mut() {
                Some((b, m)) if *b == f => *m += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    pub fn is_admissible(&self) -> bool {
        self.factors.iter().all(Bracelet::is_admissible)
    }

    /// Number of top arcs of the diagrams in the class.
    pub fn arc_count(&self) -> usize {
        self.factors.iter().map(|b| super::word::count(b.codes(), super::word::N)).sum()
    }

    /// `st(ζ) = ∏ st([w])^m · m!` over distinct factors `[w]` of multiplicity `m`.
    pub fn stability_index(&self) -> u64 {
        self.grouped().iter().map(|(b, m)| b.stability().pow(*m as u32) * factorial(*m)).product()
    }

    /// Exchanges `n` and `s` in every factor.
    pub fn star(&self) -> BraceletMonomial {
        BraceletMonomial::new(self.factors.iter().map(Bracelet::star).collect())
    }
}

impl fmt::Display for BraceletMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (b, m) in self.grouped() {
            if m == 1 {
                write!(f, "{b}")?;
            } else {
                write!(f, "{b}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for BraceletMonomial {
    type Err = Error;
    /// Parses `[nsp][p]^2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
            let close = body.find(']').ok_or_else(|| Error::Parse(format!("missing ']' in {s:?}")))?;
            let b = Bracelet::new(&body[..close])?;
            rest = body[close + 1..].trim_start();
            let mut mult = 1;
            if let Some(after) = rest.strip_prefix('^') {
                let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
                mult = digits.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                rest = after[digits.len()..].trim_start();
            }
            factors.extend(std::iter::repeat_n(b, mult));
        }
        Ok(BraceletMonomial::new(factors))
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    word: String,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    factors: Vec<FactorJson>,
}

impl Serialize for BraceletMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let factors = self.grouped().into_iter().map(|(b, mult)| FactorJson { word: b.word(), mult }).collect();
        MonomialJson { factors }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BraceletMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MonomialJson::deserialize(d)?;
        let mut factors = Vec::new();
        for f in raw.factors {
            let b = Bracelet::new(&f.word).map_err(serde::de::Error::custom)?;
            factors.extend(std::iter::repeat_n(b, f.mult));
        }
        Ok(BraceletMonomial::new(factors))
    }
}

/// Sparse coordinates over bracelet monomials of a fixed degree `n`.
///
/// Whether the coordinates refer to the class sums `e_ζ` or to the
/// normalized sums `ě_ζ` is up to the caller.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraceletVector {
    n: usize,
    terms: BTreeMap<BraceletMonomial, RationalFunction>,
}

impl BraceletVector {
    pub fn zero(n: usize) -> Self {
        BraceletVector { n, terms: BTreeMap::new() }
    }

    pub fn basis(zeta: BraceletMonomial) -> Self {
        let mut v = Self::zero(zeta.degree());
        v.add_term(zeta, &RationalFunction::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BraceletMonomial, RationalFunction> {
        &self.terms
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

    pub fn coeff(&self, zeta: &BraceletMonomial) -> RationalFunction {
        self.terms.get(zeta).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn add_term(&mut self, zeta: BraceletMonomial, c: &RationalFunction) {
        debug_assert_eq!(zeta.degree(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(zeta).or_insert_with(RationalFunction::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &BraceletVector, c: &RationalFunction) {
        for (z, a) in &other.terms {
            self.add_term(z.clone(), &(a * c));
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> BraceletVector {
        let mut v = Self::zero(self.n);
        v.add_scaled(self, c);
        v
    }

    /// Substitutes a value for `δ` in every coefficient.
    pub fn specialize(&self, delta: &BigRational) -> Result<BraceletVector> {
        let mut v = Self::zero(self.n);
        for (z, c) in &self.terms {
            v.add_term(z.clone(), &RationalFunction::constant(c.evaluate(delta)?));
        }
        Ok(v)
    }

    /// Applies `ζ ↦ ζ*` to every monomial.
    pub fn star(&self) -> BraceletVector {
        let mut v = Self::zero(self.n);
        for (z, c) in &self.terms {
            v.add_term(z.star(), c);
        }
        v
    }

    /// Terms in display order: fewer arcs first, then monomial order.
    pub fn display_terms(&self, prefix: &str) -> Vec<(String, RationalFunction)> {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by_key(|(z, _)| (z.arc_count(), (*z).clone()));
        items.into_iter().map(|(z, c)| (format!("{prefix}{z}"), c.clone())).collect()
    }

    /// Formats as `Σ c·{prefix}ζ`, e.g. with prefix `ě`.
    pub fn format_with(&self, prefix: &str, var: &str) -> String {
        format_combination(&self.display_terms(prefix), var)
    }
}

impl fmt::Display for BraceletVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("", "δ"))
    }
}
