use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::diagram::{compose, BrauerDiagram};
use crate::exactnum::{format_combination, rat, Polynomial, RationalFunction};
use crate::{Error, Result};

/// A finite linear combination of diagrams with coefficients in `Q(δ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<BrauerDiagram, RationalFunction>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n))
    }

    pub fn from_diagram(b: BrauerDiagram) -> Self {
        let n = b.n();
        let mut terms = BTreeMap::new();
        terms.insert(b, RationalFunction::one());
        AlgebraElement { n, terms }
    }

    /// Sums the given terms; diagrams must all have size `n`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BrauerDiagram, RationalFunction)>) -> Result<Self> {
        let mut x = Self::zero(n);
        for (b, c) in terms {
            if b.n() != n {
                return Err(Error::SizeMismatch(n, b.n()));
            }
            x.add_term(b, &c);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, RationalFunction> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &BrauerDiagram) -> RationalFunction {
        self.terms.get(b).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn add_term(&mut self, b: BrauerDiagram, c: &RationalFunction) {
        debug_assert_eq!(b.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut x = self.clone();
        for (b, c) in &other.terms {
            x.add_term(b.clone(), c);
        }
        Ok(x)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&RationalFunction::from_int(-1)))
    }

    pub fn scale(&self, c: &RationalFunction) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(b, a)| (b.clone(), a * c)).collect() }
    }

    /// Substitutes a value for `δ` in every coefficient.
    pub fn specialize(&self, delta: &BigRational) -> Result<AlgebraElement> {
        let mut x = Self::zero(self.n);
        for (b, c) in &self.terms {
            x.add_term(b.clone(), &RationalFunction::constant(c.evaluate(delta)?));
        }
        Ok(x)
    }

    /// Applies a diagram-wise linear map that permutes diagrams.
    pub fn map_diagrams(&self, f: impl Fn(&BrauerDiagram) -> BrauerDiagram) -> AlgebraElement {
        let mut x = Self::zero(self.n);
        for (b, c) in &self.terms {
            x.add_term(f(b), c);
        }
        x
    }

    /// Terms ordered for display: identity first, then by arc count.
    pub fn display_terms(&self) -> Vec<(String, RationalFunction)> {
        let mut items: Vec<(&BrauerDiagram, &RationalFunction)> = self.terms.iter().collect();
        let id = BrauerDiagram::identity(self.n);
        items.sort_by_key(|(b, _)| (**b != id, b.arc_count(), !b.is_permutation(), (*b).clone()));
        items.into_iter().map(|(b, c)| (b.name(), c.clone())).collect()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.display_terms(), "δ"))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            diagram: &'a BrauerDiagram,
            coefficient: &'a RationalFunction,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            n: usize,
            terms: Vec<Term<'a>>,
        }
        let terms = self.terms.iter().map(|(diagram, coefficient)| Term { diagram, coefficient }).collect();
        Out { n: self.n, terms }.serialize(s)
    }
}

/// Groups the diagrams of an element by coefficient.
fn group_by_coefficient(x: &AlgebraElement) -> Vec<(RationalFunction, Vec<&BrauerDiagram>)> {
    let mut groups: HashMap<&RationalFunction, Vec<&BrauerDiagram>> = HashMap::new();
    for (b, c) in &x.terms {
        groups.entry(c).or_default().push(b);
    }
    let mut out: Vec<_> = groups.into_iter().map(|(c, v)| (c.clone(), v)).collect();
    out.sort_by(|a, b| a.1[0].cmp(b.1[0]));
    out
}

/// Numerators collected per denominator, so that most additions avoid gcds.
type Buckets = HashMap<Polynomial, Polynomial>;

/// The algebra product `a·b`, extending the diagram product bilinearly.
///
/// Terms sharing a coefficient are grouped, closed loops are tallied as
/// integer polynomials in `δ`, and numerators are summed per denominator
/// before the final reduction. The left factor's groups are processed in
/// parallel.
pub fn multiply_elements(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    let ga = group_by_coefficient(a);
    let gb = group_by_coefficient(b);
    let partials: Vec<HashMap<BrauerDiagram, Buckets>> = ga
        .par_iter()
        .map(|(ca, da)| {
            let mut acc: HashMap<BrauerDiagram, Buckets> = HashMap::new();
            for (cb, db) in &gb {
                let c = ca * cb;
                let mut tally: HashMap<BrauerDiagram, Vec<i64>> = HashMap::new();
                for x in da {
                    for y in db {
                        let (loops, r) = compose(x, y);
                        let slot = tally.entry(r).or_default();
                        if slot.len() <= loops as usize {
                            slot.resize(loops as usize + 1, 0);
                        }
                        slot[loops as usize] += 1;
                    }
                }
                for (r, counts) in tally {
                    let poly = Polynomial::from_coeffs(counts.iter().map(|&k| rat(k)).collect());
                    let num = c.num() * &poly;
                    let bucket = acc.entry(r).or_default();
                    match bucket.get_mut(c.den()) {
                        Some(existing) => *existing = &*existing + &num,
                        None => {
                            bucket.insert(c.den().clone(), num);
                        }
                    }
                }
            }
            acc
        })
        .collect();
    let mut merged: HashMap<BrauerDiagram, Buckets> = HashMap::new();
    for part in partials {
        for (r, buckets) in part {
            let target = merged.entry(r).or_default();
            for (den, num) in buckets {
                match target.get_mut(&den) {
                    Some(existing) => *existing = &*existing + &num,
                    None => {
                        target.insert(den, num);
                    }
                }
            }
        }
    }
    let mut out = AlgebraElement::zero(a.n);
    for (r, buckets) in merged {
        let mut sum = RationalFunction::zero();
        let mut parts: Vec<(Polynomial, Polynomial)> = buckets.into_iter().collect();
        parts.sort();
        for (den, num) in parts {
            sum += &RationalFunction::new(num, den).expect("denominators are nonzero");
        }
        out.add_term(r, &sum);
    }
    Ok(out)
}

/// The flip anti-involution `x ↦ x*`, mirroring every diagram.
pub fn flip_star(x: &AlgebraElement) -> AlgebraElement {
    x.map_diagrams(BrauerDiagram::flip)
}
