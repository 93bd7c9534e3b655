use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A node of a Brauer diagram, 1-based within its row.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Node {
    Top(usize),
    Bottom(usize),
}

impl Node {
    fn index(self, n: usize) -> usize {
        match self {
            Node::Top(i) => i - 1,
            Node::Bottom(i) => n + i - 1,
        }
    }

    fn from_index(k: usize, n: usize) -> Node {
        if k < n {
            Node::Top(k + 1)
        } else {
            Node::Bottom(k - n + 1)
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Top(i) => write!(f, "t{i}"),
            Node::Bottom(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Node {
    type Err = Error;
    fn from_str(s: &str) -> Result<Node> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad node {s:?}"));
        let (Some(row), Some(num)) = (s.get(..1), s.get(1..)) else {
            return Err(bad());
        };
        let i: usize = num.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match row {
            "t" => Ok(Node::Top(i)),
            "b" => Ok(Node::Bottom(i)),
            _ => Err(bad()),
        }
    }
}

/// A perfect matching on `n` top and `n` bottom nodes.
///
/// Stored as the partner of every node, with nodes numbered
/// `top_1..top_n` as `0..n` and `bottom_1..bottom_n` as `n..2n`; this is the
/// same information as the sorted pair list and gives a canonical key.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|k| if k < n { (k + n) as u8 } else { (k - n) as u8 }).collect();
        BrauerDiagram { n, partner }
    }

    /// Joins `top_i` to `bottom_{perm[i]}` (0-based images).
    pub fn from_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut partner = vec![0u8; 2 * n];
        for (i, &p) in perm.iter().enumerate() {
            partner[i] = (n + p) as u8;
            partner[n + p] = i as u8;
        }
        BrauerDiagram { n, partner }
    }

    pub fn from_pairs(n: usize, pairs: &[(Node, Node)]) -> Result<Self> {
        if n > 100 {
            return Err(Error::IndexOutOfRange(format!("n = {n} is too large")));
        }
        let mut partner = vec![u8::MAX; 2 * n];
        for &(a, b) in pairs {
            for x in [a, b] {
                let (Node::Top(i) | Node::Bottom(i)) = x;
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange(format!("node {x} in a diagram with n = {n}")));
                }
            }
            let (ia, ib) = (a.index(n), b.index(n));
            if ia == ib || partner[ia] != u8::MAX || partner[ib] != u8::MAX {
                return Err(Error::InvalidLabel(format!("node used twice in pair {a}-{b}")));
            }
            partner[ia] = ib as u8;
            partner[ib] = ia as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(Error::InvalidLabel("every node must lie on exactly one line".into()));
        }
        Ok(BrauerDiagram { n, partner })
    }

    pub(crate) fn from_partner_unchecked(n: usize, partner: Vec<u8>) -> Self {
        debug_assert!(partner.iter().enumerate().all(|(k, &p)| partner[p as usize] as usize == k && p as usize != k));
        BrauerDiagram { n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partner of the node with global index `k` (`0..2n`).
    pub(crate) fn partner_of(&self, k: usize) -> usize {
        self.partner[k] as usize
    }

    /// The partner of a node.
    pub fn partner(&self, node: Node) -> Node {
        Node::from_index(self.partner[node.index(self.n)] as usize, self.n)
    }

    /// The lines as sorted pairs in the node order `t1 < … < tn < b1 < … < bn`.
    pub fn pairs(&self) -> Vec<(Node, Node)> {
        (0..2 * self.n)
            .filter(|&k| (self.partner[k] as usize) > k)
            .map(|k| (Node::from_index(k, self.n), Node::from_index(self.partner[k] as usize, self.n)))
            .collect()
    }

    /// The permutation `i ↦ s(i)` (0-based) if every line is vertical.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        (0..self.n).map(|i| (self.partner[i] as usize).checked_sub(self.n)).collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.arc_count() == 0
    }

    /// Number of arcs in the top row, which equals the number in the bottom row.
    pub fn arc_count(&self) -> usize {
        (0..self.n).filter(|&i| (self.partner[i] as usize) < self.n).count() / 2
    }

    /// Mirror image in the horizontal axis.
    pub fn flip(&self) -> Self {
        let n = self.n;
        let swap = |k: usize| if k < n { k + n } else { k - n };
        let mut partner = vec![0u8; 2 * n];
        for k in 0..2 * n {
            partner[swap(k)] = swap(self.partner[k] as usize) as u8;
        }
        BrauerDiagram { n, partner }
    }

    /// Relabels positions by `perm` in both rows, i.e. `s b s⁻¹`.
    pub fn conjugate_by(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let map = |k: usize| if k < n { perm[k] } else { n + perm[k - n] };
        let mut partner = vec![0u8; 2 * n];
        for k in 0..2 * n {
            partner[map(k)] = map(self.partner[k] as usize) as u8;
        }
        BrauerDiagram { n, partner }
    }

    /// Conjugation by the adjacent transposition of positions `i, i+1` (0-based).
    pub fn conjugate_adjacent(&self, i: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(i, i + 1);
        self.conjugate_by(&perm)
    }

    /// Number of interleaving pairs of lines when the nodes are read around
    /// the boundary: top row left to right, then bottom row right to left.
    pub fn min_crossings(&self) -> usize {
        let n = self.n;
        let pos = |k: usize| if k < n { k } else { 3 * n - 1 - k };
        let chords: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&k| (self.partner[k] as usize) > k)
            .map(|k| {
                let (a, b) = (pos(k), pos(self.partner[k] as usize));
                (a.min(b), a.max(b))
            })
            .collect();
        let mut count = 0;
        for (x, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[x + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    count += 1;
                }
            }
        }
        count
    }

    /// All `(2n−1)!!` diagrams of `B_n`, in a fixed order.
    pub fn all(n: usize) -> Vec<BrauerDiagram> {
        fn rec(partner: &mut Vec<u8>, n: usize, out: &mut Vec<BrauerDiagram>) {
            let Some(first) = partner.iter().position(|&p| p == u8::MAX) else {
                out.push(BrauerDiagram { n, partner: partner.clone() });
                return;
            };
            for other in first + 1..2 * n {
                if partner[other] == u8::MAX {
                    partner[first] = other as u8;
                    partner[other] = first as u8;
                    rec(partner, n, out);
                    partner[first] = u8::MAX;
                    partner[other] = u8::MAX;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![u8::MAX; 2 * n], n, &mut out);
        out
    }

    /// A short name: `1` for the identity, `s_ij` / `d_ij` for a single
    /// transposition or contraction, otherwise the pair list.
    pub fn name(&self) -> String {
        if *self == BrauerDiagram::identity(self.n) {
            return "1".into();
        }
        let n = self.n;
        let moved: Vec<usize> = (0..n).filter(|&i| self.partner[i] as usize != i + n).collect();
        if moved.len() == 2 {
            let (i, j) = (moved[0], moved[1]);
            if self.partner[i] as usize == j {
                return format!("[d_{}{}]", i + 1, j + 1);
            }
            if self.partner[i] as usize == j + n {
                return format!("[s_{}{}]", i + 1, j + 1);
            }
        }
        format!("[{self}]")
    }
}

/// The product `b1·b2`: `b1` is drawn below `b2`, so the top row of `b1` is
/// glued to the bottom row of `b2`. Returns the number of closed loops and
/// the straightened diagram.
pub fn multiply_diagrams(b1: &BrauerDiagram, b2: &BrauerDiagram) -> Result<(u32, BrauerDiagram)> {
    if b1.n != b2.n {
        return Err(Error::SizeMismatch(b1.n, b2.n));
    }
    Ok(compose(b1, b2))
}

pub(crate) fn compose(lower: &BrauerDiagram, upper: &BrauerDiagram) -> (u32, BrauerDiagram) {
    let n = lower.n;
    let mut res = vec![u8::MAX; 2 * n];
    let mut mid_seen = vec![false; n];
    for start in 0..2 * n {
        if res[start] != u8::MAX {
            continue;
        }
        // Result top nodes belong to `upper`, result bottom nodes to `lower`.
        let mut in_upper = start < n;
        let mut node = start;
        let end = loop {
            if in_upper {
                let p = upper.partner[node] as usize;
                if p < n {
                    break p;
                }
                let m = p - n;
                mid_seen[m] = true;
                in_upper = false;
                node = m;
            } else {
                let p = lower.partner[node] as usize;
                if p >= n {
                    break p;
                }
                mid_seen[p] = true;
                in_upper = true;
                node = n + p;
            }
        };
        res[start] = end as u8;
        res[end] = start as u8;
    }
    let mut loops = 0;
    for m in 0..n {
        if mid_seen[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            mid_seen[cur] = true;
            let q = upper.partner[n + cur] as usize - n;
            mid_seen[q] = true;
            cur = lower.partner[q] as usize;
            if cur == m {
                break;
            }
        }
    }
    (loops, BrauerDiagram { n, partner: res })
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(", "))
    }
}

impl BrauerDiagram {
    /// Parses the pair list `t1-b3, t2-t4, …`; `n` is the largest node index.
    pub fn parse(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut n = 0;
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item.split_once('-').ok_or_else(|| Error::Parse(format!("bad pair {item:?}")))?;
            let (a, b): (Node, Node) = (a.parse()?, b.parse()?);
            for x in [a, b] {
                let (Node::Top(i) | Node::Bottom(i)) = x;
                n = n.max(i);
            }
            pairs.push((a, b));
        }
        BrauerDiagram::from_pairs(n, &pairs)
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BrauerDiagram::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    pairs: Vec<(String, String)>,
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = self.pairs().iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        DiagramJson { n: self.n, pairs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let pairs = raw
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.parse::<Node>()?, b.parse::<Node>()?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        BrauerDiagram::from_pairs(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}
