//! Exact dense tensors in `V⊗n` and the action of the Brauer algebra on them.
//!
//! A diagram acts by placing the tensor factors on its top row: vertical
//! lines move indices, top arcs contract with `g_ab`, bottom arcs insert
//! `g^ab`, and the result picks up `ε^{crossings}`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::brauer::{AlgebraElement, BrauerDiagram, Node};
use crate::exactnum::{parse_rational, rat};
use crate::{Eps, Error, GroupParams, Result};

/// Entries of [`random_tensor`] lie in `-RANDOM_MAGNITUDE..=RANDOM_MAGNITUDE`.
pub const RANDOM_MAGNITUDE: i64 = 5;

/// A canonical metric on `V = Q^N`: the identity for `ε = +1`, and
/// `N/2` diagonal blocks `[[0,1],[−1,0]]` for `ε = −1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    pub dim: usize,
    pub eps: Eps,
    /// `g_ab`.
    pub g: Vec<Vec<BigRational>>,
    /// `g^ab`, the inverse matrix.
    pub g_inv: Vec<Vec<BigRational>>,
}

pub fn make_metric(dim: usize, eps: Eps) -> Result<Metric> {
    GroupParams::new(dim, eps).map_err(|_| Error::InvalidMetric(format!("N = {dim} with eps = {eps}")))?;
    let mut g = vec![vec![BigRational::zero(); dim]; dim];
    match eps {
        Eps::Orthogonal => {
            for (a, row) in g.iter_mut().enumerate() {
                row[a] = BigRational::one();
            }
        }
        Eps::Symplectic => {
            for a in (0..dim).step_by(2) {
                g[a][a + 1] = BigRational::one();
                g[a + 1][a] = -BigRational::one();
            }
        }
    }
    // Both canonical forms are orthogonal matrices, so the inverse is the transpose.
    let g_inv = (0..dim).map(|a| (0..dim).map(|b| g[b][a].clone()).collect()).collect();
    Ok(Metric { dim, eps, g, g_inv })
}

impl Metric {
    pub fn delta(&self) -> i64 {
        self.eps.sign() * self.dim as i64
    }

    pub fn form(&self) -> &'static str {
        match self.eps {
            Eps::Orthogonal => "identity",
            Eps::Symplectic => "adjacent_2x2_blocks",
        }
    }

    /// `⟨v, w⟩ = g_ab v^a w^b`.
    pub fn pairing(&self, v: &[BigRational], w: &[BigRational]) -> BigRational {
        let mut s = BigRational::zero();
        for (a, row) in self.g.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    s += x * &v[a] * &w[b];
                }
            }
        }
        s
    }

    fn nonzero(m: &[Vec<BigRational>]) -> Vec<Vec<(usize, BigRational)>> {
        m.iter()
            .map(|row| row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(b, x)| (b, x.clone())).collect())
            .collect()
    }

    /// `E = e_a ⊗ e_b g^ab` as a rank-two tensor.
    pub fn pure_trace(&self) -> DenseTensor {
        let entries = self.g_inv.iter().flat_map(|row| row.iter().cloned()).collect();
        DenseTensor { n: 2, dim: self.dim, entries }
    }
}

/// A tensor `T^{a_1…a_n}` with `N^n` exact entries, row-major with `a_1`
/// the slowest index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTensor {
    n: usize,
    dim: usize,
    entries: Vec<BigRational>,
}

impl DenseTensor {
    pub fn zero(n: usize, dim: usize) -> Self {
        DenseTensor { n, dim, entries: vec![BigRational::zero(); dim.pow(n as u32)] }
    }

    pub fn from_entries(n: usize, dim: usize, entries: Vec<BigRational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ShapeMismatch("N must be at least 1".into()));
        }
        let want = dim.checked_pow(n as u32).ok_or_else(|| Error::ShapeMismatch(format!("{dim}^{n} entries")))?;
        if entries.len() != want {
            return Err(Error::ShapeMismatch(format!("{} entries for n = {n}, N = {dim}; expected {want}", entries.len())));
        }
        Ok(DenseTensor { n, dim, entries })
    }

    /// `v_1 ⊗ … ⊗ v_n`.
    pub fn from_vectors(vectors: &[Vec<BigRational>]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::ShapeMismatch("no factors".into()));
        };
        let dim = first.len();
        let mut t = DenseTensor { n: 0, dim, entries: vec![BigRational::one()] };
        for v in vectors {
            if v.len() != dim {
                return Err(Error::ShapeMismatch(format!("factor of length {} in V = Q^{dim}", v.len())));
            }
            t = t.outer(&DenseTensor { n: 1, dim, entries: v.clone() })?;
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn offset(&self, index: &[usize]) -> usize {
        index.iter().fold(0, |acc, &a| acc * self.dim + a)
    }

    fn multi_index(&self, mut offset: usize) -> Vec<usize> {
        let mut index = vec![0; self.n];
        for slot in index.iter_mut().rev() {
            *slot = offset % self.dim;
            offset /= self.dim;
        }
        index
    }

    pub fn get(&self, index: &[usize]) -> &BigRational {
        &self.entries[self.offset(index)]
    }

    fn check_same_shape(&self, other: &DenseTensor) -> Result<()> {
        if self.n != other.n || self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!(
                "rank {} dim {} vs rank {} dim {}",
                self.n, self.dim, other.n, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &DenseTensor) -> Result<DenseTensor> {
        self.check_same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(DenseTensor { n: self.n, dim: self.dim, entries })
    }

    pub fn sub(&self, other: &DenseTensor) -> Result<DenseTensor> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> DenseTensor {
        DenseTensor { n: self.n, dim: self.dim, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// `self ⊗ other`.
    pub fn outer(&self, other: &DenseTensor) -> Result<DenseTensor> {
        if self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!("dimensions {} and {}", self.dim, other.dim)));
        }
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for a in &self.entries {
            entries.extend(other.entries.iter().map(|b| a * b));
        }
        Ok(DenseTensor { n: self.n + other.n, dim: self.dim, entries })
    }

    /// Moves slot `i` to slot `perm[i]` (0-based), without any sign.
    pub fn permute_slots(&self, perm: &[usize]) -> Result<DenseTensor> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::ShapeMismatch(format!("{perm:?} is not a permutation of {} slots", self.n)));
        }
        let mut out = DenseTensor::zero(self.n, self.dim);
        let mut target = vec![0; self.n];
        for (k, x) in self.entries.iter().enumerate() {
            for (i, a) in self.multi_index(k).into_iter().enumerate() {
                target[perm[i]] = a;
            }
            let o = out.offset(&target);
            out.entries[o] = x.clone();
        }
        Ok(out)
    }

    /// `T − T|_{slots i ↔ j}` for 1-based slots.
    pub fn antisymmetrize_pair(&self, i: usize, j: usize) -> Result<DenseTensor> {
        if i == 0 || j == 0 || i > self.n || j > self.n || i == j {
            return Err(Error::IndexOutOfRange(format!("slots {i}, {j} in rank {}", self.n)));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(i - 1, j - 1);
        self.sub(&self.permute_slots(&perm)?)
    }

    /// `{"n", "N", "entries": ["p/q", …], "metric": {"eps", "form"}}`.
    pub fn to_json(&self, m: &Metric) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "N": self.dim,
            "entries": self.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "metric": {"eps": m.eps.sign(), "form": m.form()},
        })
    }
}

impl fmt::Display for DenseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Serialize for DenseTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            #[serde(rename = "N")]
            dim: usize,
            entries: Vec<String>,
        }
        Repr { n: self.n, dim: self.dim, entries: self.entries.iter().map(ToString::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DenseTensor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            #[serde(rename = "N")]
            dim: usize,
            entries: Vec<Entry>,
        }
        let r = Repr::deserialize(d)?;
        let entries = r
            .entries
            .into_iter()
            .map(|e| match e {
                Entry::Int(k) => Ok(rat(k)),
                Entry::Text(s) => parse_rational(&s),
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        DenseTensor::from_entries(r.n, r.dim, entries).map_err(serde::de::Error::custom)
    }
}

fn check_metric(t: &DenseTensor, m: &Metric) -> Result<()> {
    if t.dim != m.dim {
        return Err(Error::ShapeMismatch(format!("tensor over Q^{} with a metric on Q^{}", t.dim, m.dim)));
    }
    Ok(())
}

/// `g_{a_i a_j} T^{…a_i…a_j…}` for 1-based `i < j`.
pub fn trace_ij(t: &DenseTensor, i: usize, j: usize, m: &Metric) -> Result<DenseTensor> {
    check_metric(t, m)?;
    if i == 0 || i >= j || j > t.n {
        return Err(Error::IndexOutOfRange(format!("trace over slots {i}, {j} of a rank-{} tensor", t.n)));
    }
    let (i, j) = (i - 1, j - 1);
    let mut out = DenseTensor::zero(t.n - 2, t.dim);
    for (k, x) in t.entries.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let index = t.multi_index(k);
        let g = &m.g[index[i]][index[j]];
        if g.is_zero() {
            continue;
        }
        let rest: Vec<usize> = index.iter().enumerate().filter(|&(s, _)| s != i && s != j).map(|(_, &a)| a).collect();
        let o = out.offset(&rest);
        out.entries[o] += g * x;
    }
    Ok(out)
}

/// Whether every trace `tr_ij` vanishes.
pub fn is_traceless(t: &DenseTensor, m: &Metric) -> bool {
    (1..=t.n).all(|i| (i + 1..=t.n).all(|j| trace_ij(t, i, j, m).map(|x| x.is_zero()).unwrap_or(false)))
}

enum Line {
    Through { top: usize, bottom: usize },
    TopArc(usize, usize),
    BottomArc(usize, usize),
}

/// `𝔯(b)·T`.
pub fn apply_diagram(b: &BrauerDiagram, t: &DenseTensor, m: &Metric) -> Result<DenseTensor> {
    check_metric(t, m)?;
    if b.n() != t.n {
        return Err(Error::ShapeMismatch(format!("diagram on {} points applied to a rank-{} tensor", b.n(), t.n)));
    }
    let n = t.n;
    let lines: Vec<Line> = b
        .pairs()
        .into_iter()
        .map(|pair| match pair {
            (Node::Top(i), Node::Bottom(k)) | (Node::Bottom(k), Node::Top(i)) => Line::Through { top: i - 1, bottom: k - 1 },
            (Node::Top(i), Node::Top(j)) => Line::TopArc(i - 1, j - 1),
            (Node::Bottom(k), Node::Bottom(l)) => Line::BottomArc(k - 1, l - 1),
        })
        .collect();
    let g = Metric::nonzero(&m.g);
    let g_inv = Metric::nonzero(&m.g_inv);
    let strides: Vec<usize> = (0..n).map(|s| t.dim.pow((n - 1 - s) as u32)).collect();
    let mut out = DenseTensor::zero(n, t.dim);

    struct Walk<'a> {
        lines: &'a [Line],
        g: &'a [Vec<(usize, BigRational)>],
        g_inv: &'a [Vec<(usize, BigRational)>],
        strides: &'a [usize],
        dim: usize,
        input: &'a [BigRational],
        output: &'a mut [BigRational],
    }
    fn walk(w: &mut Walk<'_>, line: usize, src: usize, dst: usize, coeff: &BigRational) {
        let Some(l) = w.lines.get(line) else {
            let x = &w.input[src];
            if !x.is_zero() {
                w.output[dst] += coeff * x;
            }
            return;
        };
        match *l {
            Line::Through { top, bottom } => {
                for a in 0..w.dim {
                    walk(w, line + 1, src + a * w.strides[top], dst + a * w.strides[bottom], coeff);
                }
            }
            Line::TopArc(i, j) => {
                for (a, row) in w.g.iter().enumerate() {
                    for (c, x) in row {
                        walk(w, line + 1, src + a * w.strides[i] + c * w.strides[j], dst, &(coeff * x));
                    }
                }
            }
            Line::BottomArc(k, l) => {
                for (a, row) in w.g_inv.iter().enumerate() {
                    for (c, x) in row {
                        walk(w, line + 1, src, dst + a * w.strides[k] + c * w.strides[l], &(coeff * x));
                    }
                }
            }
        }
    }

    let sign = if b.min_crossings() % 2 == 1 { rat(m.eps.sign()) } else { BigRational::one() };
    let mut w = Walk {
        lines: &lines,
        g: &g,
        g_inv: &g_inv,
        strides: &strides,
        dim: t.dim,
        input: &t.entries,
        output: &mut out.entries,
    };
    walk(&mut w, 0, 0, 0, &sign);
    Ok(out)
}

/// `𝔯(x)·T` with the coefficients of `x` evaluated at `δ = εN`.
pub fn apply_element(x: &AlgebraElement, t: &DenseTensor, m: &Metric) -> Result<DenseTensor> {
    check_metric(t, m)?;
    if x.n() != t.n {
        return Err(Error::ShapeMismatch(format!("element of B_{} applied to a rank-{} tensor", x.n(), t.n)));
    }
    let delta = rat(m.delta());
    let parts: Vec<Result<DenseTensor>> = x
        .terms()
        .par_iter()
        .map(|(b, c)| {
            let c = c.evaluate(&delta).map_err(|e| match e {
                Error::Pole { at, factor } => Error::PoleOnTensors { at, factor },
                other => other,
            })?;
            Ok(apply_diagram(b, t, m)?.scale(&c))
        })
        .collect();
    let mut out = DenseTensor::zero(t.n, t.dim);
    for p in parts {
        out = out.add(&p?)?;
    }
    Ok(out)
}

/// A reproducible tensor with integer entries of size at most [`RANDOM_MAGNITUDE`].
pub fn random_tensor(n: usize, dim: usize, seed: u64) -> DenseTensor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..dim.pow(n as u32)).map(|_| rat(rng.gen_range(-RANDOM_MAGNITUDE..=RANDOM_MAGNITUDE))).collect();
    DenseTensor { n, dim, entries }
}

/// The largest absolute value among the entries.
pub fn max_abs_entry(t: &DenseTensor) -> BigRational {
    t.entries.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}
