use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Eps, Error, Result};

/// An integer partition stored as weakly decreasing positive parts.
///
/// Cells are addressed `(row, col)` starting from 1, and the content of a
/// cell is `col - row`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidLabel(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, a single row.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`, a single column.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(m, 1^k)`.
    pub fn hook(m: usize, k: usize) -> Self {
        let mut parts = vec![m];
        parts.extend(std::iter::repeat_n(1, k));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (0-based), zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.row_len(0);
        Partition((0..first).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect())
    }

    /// True if `other ⊆ self` cell-wise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All cells `(row, col)`, 1-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Sum of the contents `j - i` over all cells.
    pub fn content(&self) -> i64 {
        self.cells().map(|(i, j)| j as i64 - i as i64).sum()
    }

    /// Every row has even length; the empty partition counts as even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Hook length of the 1-based cell `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.row_len(i - 1) - j;
        let leg = self.0.iter().skip(i).take_while(|&&p| p >= j).count();
        arm + leg + 1
    }

    /// 0-based rows where a cell can be added keeping a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len()).filter(|&i| i == 0 || self.row_len(i) < self.row_len(i - 1)).collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order, optionally bounded.
pub fn partitions_of(n: usize, bound: Option<Bound>) -> Vec<Partition> {
    let (max_rows, max_part) = match bound {
        None => (usize::MAX, usize::MAX),
        Some(Bound::Rows(r)) => (r, usize::MAX),
        Some(Bound::Columns(c)) => (usize::MAX, c),
    };
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, max_part, max_rows, &mut cur, &mut out);
    out
}

/// Size bounds for [`partitions_of`]: at most this many rows, or parts at most this long.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Rows(usize),
    Columns(usize),
}

/// `λ` for `ε = +1`, the conjugate `λ′` for `ε = −1`.
pub fn transpose(lambda: &Partition, eps: Eps) -> Partition {
    match eps {
        Eps::Orthogonal => lambda.clone(),
        Eps::Symplectic => lambda.conjugate(),
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `4,2,1`, `(4,2,1)`, and `∅`, `0` or the empty string for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// The cells of `outer` that are not in `inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidLabel(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// 1-based cells in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer.cells().filter(|&(i, j)| j > self.inner.row_len(i - 1))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.outer.row_len(i - 1) && j > self.inner.row_len(i - 1)
    }

    pub fn content(&self) -> i64 {
        self.outer.content() - self.inner.content()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            outer: Partition,
            inner: Partition,
        }
        let raw = Raw::deserialize(d)?;
        SkewShape::new(raw.outer, raw.inner).map_err(serde::de::Error::custom)
    }
}

/// Content of the skew shape `outer \ inner`.
pub fn skew_content(s: &SkewShape) -> i64 {
    s.content()
}
