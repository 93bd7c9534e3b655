use std::fmt;

use super::partition::{Partition, SkewShape};
use crate::{Error, Result};

/// A semistandard filling of a skew shape.
///
/// `rows[i]` lists the entries of row `i + 1`, left to right, for the cells
/// outside the inner shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len() {
            return Err(Error::InvalidLabel(format!("{} rows given for shape {shape}", rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != outer.row_len(i) - inner.row_len(i) {
                return Err(Error::InvalidLabel(format!("row {} has the wrong length for {shape}", i + 1)));
            }
        }
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidLabel(format!("{t} is not semistandard")));
        }
        Ok(t)
    }

    /// Builds a tableau from rows given with their number of leading inner
    /// cells, e.g. `[(2,[1,1]), (1,[1]), (0,[2])]`.
    pub fn from_offsets(rows: &[(usize, Vec<u32>)]) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|(o, r)| o + r.len()).collect())?;
        let inner = Partition::new(rows.iter().map(|(o, _)| *o).collect())?;
        let shape = SkewShape::new(outer, inner)?;
        Tableau::new(shape, rows.iter().map(|(_, r)| r.clone()).collect())
    }

    /// A straight-shape tableau from its rows.
    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// `E(ν)`: the straight tableau of shape `ν` whose row `i` is filled with `i`.
    pub fn superstandard(nu: &Partition) -> Tableau {
        let rows = nu.parts().iter().enumerate().map(|(i, &p)| vec![i as u32 + 1; p]).collect();
        Tableau { shape: SkewShape::straight(nu.clone()), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry of the 1-based cell `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        if !self.shape.contains_cell(i, j) {
            return None;
        }
        let off = self.shape.inner().row_len(i - 1);
        Some(self.rows[i - 1][j - 1 - off])
    }

    fn is_semistandard(&self) -> bool {
        for (i, j) in self.shape.cells() {
            let v = self.entry(i, j).expect("cell in shape");
            if v == 0 {
                return false;
            }
            if let Some(l) = self.entry(i, j.wrapping_sub(1)) {
                if l > v {
                    return false;
                }
            }
            if i > 1 {
                if let Some(a) = self.entry(i - 1, j) {
                    if a >= v {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Straight shape with entries `1..=n`, each used once.
    pub fn is_standard(&self) -> bool {
        if !self.shape.inner().is_empty() {
            return false;
        }
        let mut seen: Vec<u32> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(k, &v)| v == k as u32 + 1)
    }

    /// `weight[k]` counts the entries equal to `k + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut w = vec![0; max];
        for &v in self.rows.iter().flatten() {
            w[v as usize - 1] += 1;
        }
        w
    }

    /// Rows read left to right, starting from the bottom row.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.shape.inner();
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut s = "x".repeat(inner.row_len(i));
                for v in r {
                    s.push_str(&v.to_string());
                }
                s
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Every suffix has at least as many `k` as `k + 1`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word.iter().rev() {
        let k = v as usize;
        if counts.len() < k + 1 {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
        if k > 1 && counts[k] > counts[k - 1] {
            return false;
        }
    }
    true
}

/// Working grid for forward slides: `None` marks inner (empty) cells.
struct SlideGrid {
    rows: Vec<Vec<Option<u32>>>,
}

impl SlideGrid {
    fn from_tableau(t: &Tableau) -> Self {
        let inner = t.shape().inner();
        let rows = t
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = vec![None; inner.row_len(i)];
                row.extend(r.iter().map(|&v| Some(v)));
                row
            })
            .collect();
        SlideGrid { rows }
    }

    fn inner_len(&self, i: usize) -> usize {
        self.rows.get(i).map_or(0, |r| r.iter().take_while(|c| c.is_none()).count())
    }

    /// 0-based inner corners: the last empty cell of a row with no empty cell below it.
    fn inner_corners(&self) -> Vec<(usize, usize)> {
        (0..self.rows.len())
            .filter_map(|i| {
                let k = self.inner_len(i);
                (k > 0 && self.inner_len(i + 1) < k).then(|| (i, k - 1))
            })
            .collect()
    }

    fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i).and_then(|r| r.get(j)).copied().flatten()
    }

    fn slide(&mut self, (mut i, mut j): (usize, usize)) {
        loop {
            let right = self.get(i, j + 1);
            let below = self.get(i + 1, j);
            let go_down = match (right, below) {
                (None, None) => break,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(r), Some(b)) => b <= r,
            };
            if go_down {
                self.rows[i][j] = below;
                self.rows[i + 1][j] = None;
                i += 1;
            } else {
                self.rows[i][j] = right;
                self.rows[i][j + 1] = None;
                j += 1;
            }
        }
        // The empty cell reached an outer corner and leaves the shape.
        debug_assert_eq!(j + 1, self.rows[i].len());
        self.rows[i].pop();
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    fn into_tableau(self) -> Tableau {
        let rows: Vec<Vec<u32>> =
            self.rows.into_iter().map(|r| r.into_iter().map(|c| c.expect("rectified")).collect()).collect();
        Tableau::straight(rows).expect("jeu de taquin preserves semistandardness")
    }
}

/// Jeu-de-taquin rectification, always sliding into the bottom-most inner corner.
pub fn rectify(t: &Tableau) -> Tableau {
    rectify_with(t, |corners| corners.len() - 1)
}

/// Rectification where `choose` picks which of the current inner corners
/// (0-based `(row, col)`, top to bottom) to slide into next.
pub fn rectify_with(t: &Tableau, mut choose: impl FnMut(&[(usize, usize)]) -> usize) -> Tableau {
    let mut g = SlideGrid::from_tableau(t);
    loop {
        let corners = g.inner_corners();
        if corners.is_empty() {
            break;
        }
        let k = choose(&corners).min(corners.len() - 1);
        g.slide(corners[k]);
    }
    g.into_tableau()
}

/// All semistandard tableaux of shape `shape` with weight `weight`.
pub fn semistandard_tableaux(shape: &SkewShape, weight: &[usize]) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    if cells.len() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut fill = vec![0u32; cells.len()];
    let mut counts = vec![0usize; weight.len()];
    let mut out = Vec::new();
    let index_of = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let left: Vec<Option<usize>> = cells.iter().map(|&(i, j)| index_of(i, j.wrapping_sub(1))).collect();
    let above: Vec<Option<usize>> = cells.iter().map(|&(i, j)| index_of(i.wrapping_sub(1), j)).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        fill: &mut [u32],
        counts: &mut [usize],
        weight: &[usize],
        left: &[Option<usize>],
        above: &[Option<usize>],
        shape: &SkewShape,
        out: &mut Vec<Tableau>,
    ) {
        if k == fill.len() {
            let mut rows = vec![Vec::new(); shape.outer().len()];
            for ((i, _), &v) in shape.cells().zip(fill.iter()) {
                rows[i - 1].push(v);
            }
            out.push(Tableau::new(shape.clone(), rows).expect("constructed semistandard"));
            return;
        }
        let lo = left[k].map_or(1, |l| fill[l]).max(above[k].map_or(1, |a| fill[a] + 1));
        for v in lo..=weight.len() as u32 {
            let idx = v as usize - 1;
            if counts[idx] == weight[idx] {
                continue;
            }
            counts[idx] += 1;
            fill[k] = v;
            rec(k + 1, fill, counts, weight, left, above, shape, out);
            counts[idx] -= 1;
        }
    }
    rec(0, &mut fill, &mut counts, weight, &left, &above, shape, &mut out);
    out
}
