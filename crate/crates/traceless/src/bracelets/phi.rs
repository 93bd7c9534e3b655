use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::monomial::BraceletMonomial;
use super::word::{canonical, is_admissible, Bracelet, N, P, S};
use crate::brauer::{conjugacy_class, AlgebraElement, BrauerDiagram};
use crate::exactnum::{rat, RationalFunction};
use crate::{Error, Result};

/// The bracelet monomial of a diagram's class, so that `Φ(b) = ζ/n!`.
///
/// Each top node is glued to the bottom node below it; the closed curves
/// that result are read as words, top arcs giving `n`, bottom arcs `s` and
/// vertical lines `p`.
pub fn phi(b: &BrauerDiagram) -> BraceletMonomial {
    let n = b.n();
    let mut visited = vec![false; n];
    let mut factors = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut word = Vec::new();
        let mut node = start;
        loop {
            visited[node % n] = true;
            let q = b.partner_of(node);
            word.push(match (node < n, q < n) {
                (true, true) => N,
                (false, false) => S,
                _ => P,
            });
            let other = if q < n { q + n } else { q - n };
            if other == start {
                break;
            }
            node = other;
        }
        factors.push(Bracelet::from_codes(&word));
    }
    BraceletMonomial::new(factors)
}

#[derive(Clone, Copy, PartialEq)]
enum Row {
    Top,
    Bottom,
}

/// One diagram whose curves read off as `zeta`, with the factors laid out on
/// consecutive blocks of positions.
pub fn representative(zeta: &BraceletMonomial) -> Result<BrauerDiagram> {
    if !zeta.is_admissible() {
        return Err(Error::InadmissibleMonomial(zeta.to_string()));
    }
    let n = zeta.degree();
    let node = |pos: usize, row: Row| if row == Row::Top { pos } else { pos + n };
    let mut partner = vec![u8::MAX; 2 * n];
    let mut base = 0;
    for factor in zeta.factors() {
        let w = factor.codes();
        let l = w.len();
        let first_row = match w.iter().find(|&&c| c != P) {
            Some(&S) => Row::Bottom,
            _ => Row::Top,
        };
        let mut leave = first_row;
        for (k, &c) in w.iter().enumerate() {
            let arrive = match c {
                N if leave == Row::Top => Row::Top,
                S if leave == Row::Bottom => Row::Bottom,
                P => {
                    if leave == Row::Top {
                        Row::Bottom
                    } else {
                        Row::Top
                    }
                }
                _ => return Err(Error::InadmissibleMonomial(zeta.to_string())),
            };
            let a = node(base + k, leave);
            let z = node(base + (k + 1) % l, arrive);
            partner[a] = z as u8;
            partner[z] = a as u8;
            leave = if arrive == Row::Top { Row::Bottom } else { Row::Top };
        }
        if leave != first_row {
            return Err(Error::InadmissibleMonomial(zeta.to_string()));
        }
        base += l;
    }
    Ok(BrauerDiagram::from_partner_unchecked(n, partner))
}

type ClassCache = Mutex<HashMap<BraceletMonomial, Arc<Vec<BrauerDiagram>>>>;

fn class_cache() -> &'static ClassCache {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All diagrams `b` with `phi(b) == zeta`, sorted. Memoized.
pub fn class_diagrams(zeta: &BraceletMonomial) -> Result<Arc<Vec<BrauerDiagram>>> {
    if let Some(hit) = class_cache().lock().expect("class cache poisoned").get(zeta) {
        return Ok(hit.clone());
    }
    let rep = representative(zeta)?;
    let orbit = Arc::new(conjugacy_class(&rep));
    class_cache().lock().expect("class cache poisoned").insert(zeta.clone(), orbit.clone());
    Ok(orbit)
}

/// `e_ζ = γ_b`, or `ě_ζ = e_ζ/st(ζ)` (the plain orbit sum) when `normalized`.
pub fn class_from_monomial(zeta: &BraceletMonomial, normalized: bool) -> Result<AlgebraElement> {
    let orbit = class_diagrams(zeta)?;
    let c = if normalized {
        RationalFunction::one()
    } else {
        RationalFunction::constant(rat(zeta.stability_index() as i64))
    };
    AlgebraElement::from_terms(zeta.degree(), orbit.iter().map(|d| (d.clone(), c.clone())))
}

/// Admissible bracelets of length `l`, in canonical order.
pub fn admissible_bracelets(l: usize) -> Vec<Bracelet> {
    if l == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut word = vec![N; l];
    loop {
        if is_admissible(&word) && canonical(&word) == word {
            out.push(Bracelet::from_codes(&word));
        }
        // odometer over {n, s, p}^l
        let mut i = l;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if word[i] < P {
                word[i] += 1;
                break;
            }
            word[i] = N;
        }
    }
}

/// Every admissible monomial of degree `n`, in monomial order. The count is
/// the number of conjugacy classes of diagrams in `B_n`.
pub fn basis_monomials(n: usize) -> Vec<BraceletMonomial> {
    let pool: Vec<Bracelet> = (1..=n).flat_map(admissible_bracelets).collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(pool: &[Bracelet], from: usize, left: usize, stack: &mut Vec<Bracelet>, out: &mut Vec<BraceletMonomial>) {
        if left == 0 {
            out.push(BraceletMonomial::new(stack.clone()));
            return;
        }
        for i in from..pool.len() {
            if pool[i].len() <= left {
                stack.push(pool[i].clone());
                rec(pool, i, left - pool[i].len(), stack, out);
                stack.pop();
            }
        }
    }
    rec(&pool, 0, n, &mut stack, &mut out);
    out.sort();
    out
}

/// `st(ζ)`, the order of the centralizer of any diagram in the class.
pub fn stability_index(zeta: &BraceletMonomial) -> u64 {
    zeta.stability_index()
}

/// `ζ*`: `n` and `s` exchanged.
pub fn star(zeta: &BraceletMonomial) -> BraceletMonomial {
    zeta.star()
}
