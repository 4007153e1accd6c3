//! Rank-one building blocks: q-strings and irreducible `U_q(sl2^)` characters.
//!
//! Node `i` of a larger algebra behaves like a copy of `sl2` whose spectral
//! parameters move in steps of `2 r_i`. A dominant monomial in the `Y_{i,*}`
//! alone splits uniquely into q-strings in general position, and the
//! irreducible character is the product of the string characters.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::character::QCharacter;
use crate::monomial::YMonomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Sl2Error {
    #[error("monomial {0} is not dominant in direction {1}")]
    NotDominant(String, usize),
    #[error("monomial {0} involves nodes other than {1}")]
    ForeignNode(String, usize),
    #[error("step r must be positive, got {0}")]
    BadStep(i32),
}

/// The string `{start, start + 2r, ..., start + 2r(len - 1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QString {
    pub start: i32,
    pub len: u32,
}

impl QString {
    pub fn points(&self, r: i32) -> impl Iterator<Item = i32> {
        let (start, len) = (self.start, self.len as i32);
        (0..len).map(move |j| start + 2 * r * j)
    }

    pub fn end(&self, r: i32) -> i32 {
        self.start + 2 * r * (self.len as i32 - 1)
    }

    fn contains(&self, other: &QString, r: i32) -> bool {
        (other.start - self.start).rem_euclid(2 * r) == 0
            && other.start >= self.start
            && other.end(r) <= self.end(r)
    }
}

/// Two strings are in general position when their union is not a string or
/// one contains the other.
pub fn in_general_position(a: &QString, b: &QString, r: i32) -> bool {
    if a.contains(b, r) || b.contains(a, r) {
        return true;
    }
    if (a.start - b.start).rem_euclid(2 * r) != 0 {
        return true;
    }
    // Same coset: the union is a string iff they overlap or touch.
    let (lo, hi) = if a.start <= b.start { (a, b) } else { (b, a) };
    hi.start > lo.end(r) + 2 * r
}

/// Splits a multiset of shifts (with multiplicities) into strings in general position.
///
/// Repeatedly takes the smallest remaining shift and extends it as far as the
/// multiset allows.
pub fn string_decompose(shifts: &BTreeMap<i32, u32>, r: i32) -> Vec<QString> {
    assert!(r > 0, "string step must be positive");
    let mut left: BTreeMap<i32, u32> = shifts.iter().filter(|(_, &e)| e > 0).map(|(&a, &e)| (a, e)).collect();
    let mut out = Vec::new();
    while let Some((&start, _)) = left.iter().next() {
        let mut len = 0u32;
        let mut at = start;
        while let Some(e) = left.get_mut(&at) {
            *e -= 1;
            if *e == 0 {
                left.remove(&at);
            }
            len += 1;
            at += 2 * r;
        }
        out.push(QString { start, len });
    }
    out.sort();
    out
}

/// Character of the evaluation string module: for `l = 0..=len` the term with
/// the top `l` factors lowered, returned as the list of `A`-centers divided out.
///
/// Term `l` equals `Y_string * prod_{j=len-l}^{len-1} A^{-1}_{start + 2rj + r}`.
pub fn string_character_centers(s: &QString, r: i32) -> Vec<Vec<i32>> {
    let len = s.len as i32;
    (0..=len)
        .map(|l| (len - l..len).map(|j| s.start + 2 * r * j + r).collect())
        .collect()
}

/// One term of an irreducible rank-one character, relative to its highest
/// monomial: divide by `A_c` for each listed center, with multiplicity `mult`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sl2Term {
    pub centers: Vec<i32>,
    pub mult: u64,
}

/// Terms of the irreducible character with highest monomial `prod Y_{i,a}^{e_a}`.
///
/// The first term is always the highest monomial itself (no centers, multiplicity 1).
pub fn sl2_terms(shifts: &BTreeMap<i32, u32>, r: i32) -> Vec<Sl2Term> {
    let strings = string_decompose(shifts, r);
    let mut acc: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
    acc.insert(Vec::new(), 1);
    for s in &strings {
        let choices = string_character_centers(s, r);
        let mut next: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
        for (centers, mult) in &acc {
            for extra in &choices {
                let mut c = centers.clone();
                c.extend_from_slice(extra);
                c.sort_unstable();
                let slot = next.entry(c).or_insert(0);
                *slot = slot.checked_add(*mult).expect("sl2 multiplicity overflow");
            }
        }
        acc = next;
    }
    let mut terms: Vec<Sl2Term> = acc.into_iter().map(|(centers, mult)| Sl2Term { centers, mult }).collect();
    terms.sort_by(|a, b| a.centers.len().cmp(&b.centers.len()).then_with(|| a.cmp(b)));
    terms
}

/// Shifts and exponents of the `Y_{i,*}` part of `m`, which must be `i`-dominant.
pub fn node_shifts(m: &YMonomial, i: usize) -> Result<BTreeMap<i32, u32>, Sl2Error> {
    let mut out = BTreeMap::new();
    for f in m.factors().iter().filter(|f| f.node == i) {
        if f.exp < 0 {
            return Err(Sl2Error::NotDominant(m.to_string(), i));
        }
        out.insert(f.shift, f.exp as u32);
    }
    Ok(out)
}

/// `Y_{i,c-r} Y_{i,c+r}`, the rank-one `A` at center `c`.
pub fn sl2_a(i: usize, c: i32, r: i32) -> YMonomial {
    YMonomial::from_factors([(i, c - r, 1), (i, c + r, 1)])
}

/// Irreducible character in the variables `Y_{i,*}` with step `2r`.
pub fn irreducible_sl2_character(m: &YMonomial, i: usize, r: i32) -> Result<QCharacter, Sl2Error> {
    if r <= 0 {
        return Err(Sl2Error::BadStep(r));
    }
    if m.factors().iter().any(|f| f.node != i) {
        return Err(Sl2Error::ForeignNode(m.to_string(), i));
    }
    let shifts = node_shifts(m, i)?;
    let mut out = QCharacter::zero();
    for t in sl2_terms(&shifts, r) {
        let mut mono = m.clone();
        for &c in &t.centers {
            mono = mono.div(&sl2_a(i, c, r));
        }
        out.add_term(mono, t.mult.into());
    }
    Ok(out)
}
