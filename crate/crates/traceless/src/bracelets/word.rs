//! Letters and canonical words.
//!
//! Letters are small integer codes ordered `n < s < p < ṡ < ṗ < s̈`. The
//! dotted codes only appear inside the derivation and trace machinery.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

pub(crate) const N: u8 = 0;
pub(crate) const S: u8 = 1;
pub(crate) const P: u8 = 2;
pub(crate) const S_DOT: u8 = 3;
pub(crate) const P_DOT: u8 = 4;
pub(crate) const S_DDOT: u8 = 5;

pub(crate) fn base(c: u8) -> u8 {
    match c {
        S_DOT | S_DDOT => S,
        P_DOT => P,
        other => other,
    }
}

pub(crate) fn dots(c: u8) -> u32 {
    match c {
        S_DOT | P_DOT => 1,
        S_DDOT => 2,
        _ => 0,
    }
}

/// `∂` on a single letter; `None` where the derivative vanishes.
pub(crate) fn derive_letter(c: u8) -> Option<u8> {
    match c {
        S => Some(S_DOT),
        P => Some(P_DOT),
        S_DOT => Some(S_DDOT),
        _ => None,
    }
}

pub(crate) fn letter_str(c: u8) -> &'static str {
    match c {
        N => "n",
        S => "s",
        P => "p",
        S_DOT => "s'",
        P_DOT => "p'",
        S_DDOT => "s''",
        _ => "?",
    }
}

/// Parses `n`, `s`, `p` with optional primes marking dots (`s'`, `p'`, `s''`).
pub(crate) fn parse_letters(s: &str, allow_dots: bool) -> Result<Vec<u8>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = match chars[i] {
            'n' => N,
            's' => S,
            'p' => P,
            other => return Err(Error::Parse(format!("bad bracelet letter {other:?} in {s:?}"))),
        };
        i += 1;
        let mut primes = 0;
        while i < chars.len() && chars[i] == '\'' {
            primes += 1;
            i += 1;
        }
        if primes > 0 && !allow_dots {
            return Err(Error::Parse(format!("dotted letters are not allowed here: {s:?}")));
        }
        let code = match (c, primes) {
            (c, 0) => c,
            (S, 1) => S_DOT,
            (S, 2) => S_DDOT,
            (P, 1) => P_DOT,
            _ => return Err(Error::Parse(format!("invalid dotted letter in {s:?}"))),
        };
        out.push(code);
    }
    if out.is_empty() {
        return Err(Error::Parse("empty bracelet".into()));
    }
    Ok(out)
}

pub(crate) fn reversed(w: &[u8]) -> Vec<u8> {
    w.iter().rev().copied().collect()
}

/// All rotations of `w` and of its reversal.
pub(crate) fn dihedral_orbit(w: &[u8]) -> Vec<Vec<u8>> {
    let l = w.len();
    let r = reversed(w);
    let mut out = Vec::with_capacity(2 * l);
    for src in [w, &r[..]] {
        for k in 0..l {
            let mut v = Vec::with_capacity(l);
            v.extend_from_slice(&src[k..]);
            v.extend_from_slice(&src[..k]);
            out.push(v);
        }
    }
    out
}

/// Lexicographic minimum over the dihedral orbit.
pub(crate) fn canonical(w: &[u8]) -> Vec<u8> {
    let l = w.len();
    let r = reversed(w);
    let mut best: Vec<u8> = w.to_vec();
    for src in [w, &r[..]] {
        for k in 0..l {
            let better = {
                let rot = src[k..].iter().chain(&src[..k]);
                rot.cmp(best.iter()) == std::cmp::Ordering::Less
            };
            if better {
                best.clear();
                best.extend_from_slice(&src[k..]);
                best.extend_from_slice(&src[..k]);
            }
        }
    }
    best
}

/// Membership in the admissible family: as many `n` as `s` (dots ignored),
/// and cyclically the `n` and `s` letters alternate.
pub(crate) fn is_admissible(w: &[u8]) -> bool {
    let ns: Vec<u8> = w.iter().map(|&c| base(c)).filter(|&c| c != P).collect();
    if ns.len() % 2 == 1 {
        return false;
    }
    (0..ns.len()).all(|i| ns[i] != ns[(i + 1) % ns.len()])
}

pub(crate) fn count(w: &[u8], letter: u8) -> usize {
    w.iter().filter(|&&c| base(c) == letter).count()
}

pub(crate) fn word_str(w: &[u8]) -> String {
    w.iter().map(|&c| letter_str(c)).collect()
}

/// A bracelet over `{n, s, p}`: a word up to rotation and reversal, stored as
/// its lexicographically least representative.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Bracelet {
    word: Vec<u8>,
}

impl Bracelet {
    /// Builds a bracelet from a word over `n`, `s`, `p`.
    pub fn new(word: &str) -> Result<Self> {
        Ok(Bracelet { word: canonical(&parse_letters(word, false)?) })
    }

    pub(crate) fn from_codes(word: &[u8]) -> Self {
        debug_assert!(word.iter().all(|&c| c <= P));
        Bracelet { word: canonical(word) }
    }

    pub(crate) fn codes(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The canonical word, e.g. `"nsp"`.
    pub fn word(&self) -> String {
        word_str(&self.word)
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(&self.word)
    }

    /// Number of cyclic shifts that fix the word or map it to its reversal.
    pub fn stability(&self) -> u64 {
        let l = self.word.len();
        let rev = reversed(&self.word);
        (0..l)
            .filter(|&h| {
                let rot: Vec<u8> = self.word[h..].iter().chain(&self.word[..h]).copied().collect();
                rot == self.word || rot == rev
            })
            .count() as u64
    }

    /// Exchanges `n` and `s`.
    pub fn star(&self) -> Bracelet {
        let w: Vec<u8> = self
            .word
            .iter()
            .map(|&c| match c {
                N => S,
                S => N,
                other => other,
            })
            .collect();
        Bracelet::from_codes(&w)
    }
}

impl fmt::Display for Bracelet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word())
    }
}

impl FromStr for Bracelet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Bracelet::new(s.trim().trim_start_matches('[').trim_end_matches(']'))
    }
}
