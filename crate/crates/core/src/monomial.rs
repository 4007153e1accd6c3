//! Monomials in the variables `Y_{i,q^n}` on a single spectral lattice.
//!
//! A [`YMonomial`] is stored in reduced form: a list of `(node, shift, exp)`
//! factors sorted by `(node, shift)` with nonzero exponents. Structural
//! equality, hashing and ordering all act on that list, so two monomials are
//! equal exactly when they are the same element of the group.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootdata::RootData;

/// One factor `Y_{node, q^shift}^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub node: usize,
    pub shift: i32,
    pub exp: i32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial {
    factors: Vec<Factor>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse monomial {input:?}: {reason}")]
pub struct ParseMonomialError {
    pub input: String,
    pub reason: String,
}

fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("monomial exponent overflow")
}

impl YMonomial {
    /// The identity monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// `Y_{node, q^shift}`.
    pub fn y(node: usize, shift: i32) -> Self {
        Self::y_pow(node, shift, 1)
    }

    pub fn y_pow(node: usize, shift: i32, exp: i32) -> Self {
        Self::from_factors([(node, shift, exp)])
    }

    /// Builds a reduced monomial from arbitrary `(node, shift, exp)` triples.
    pub fn from_factors<I: IntoIterator<Item = (usize, i32, i32)>>(triples: I) -> Self {
        let mut acc: BTreeMap<(usize, i32), i32> = BTreeMap::new();
        for (node, shift, exp) in triples {
            let e = acc.entry((node, shift)).or_insert(0);
            *e = add_exp(*e, exp);
        }
        let factors = acc
            .into_iter()
            .filter(|&(_, e)| e != 0)
            .map(|((node, shift), exp)| Factor { node, shift, exp })
            .collect();
        YMonomial { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Canonical `(node, shift, exp)` triples.
    pub fn triples(&self) -> impl Iterator<Item = (usize, i32, i32)> + '_ {
        self.factors.iter().map(|f| (f.node, f.shift, f.exp))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, node: usize, shift: i32) -> i32 {
        self.factors
            .binary_search_by(|f| (f.node, f.shift).cmp(&(node, shift)))
            .map(|idx| self.factors[idx].exp)
            .unwrap_or(0)
    }

    /// Degree in all variables counted with sign.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|f| i64::from(f.exp)).sum()
    }

    pub fn inverse(&self) -> Self {
        YMonomial {
            factors: self.factors.iter().map(|f| Factor { exp: -f.exp, ..*f }).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        YMonomial {
            factors: self
                .factors
                .iter()
                .map(|f| Factor {
                    exp: f.exp.checked_mul(k).expect("monomial exponent overflow"),
                    ..*f
                })
                .collect(),
        }
    }

    pub fn div(&self, other: &YMonomial) -> Self {
        self * &other.inverse()
    }

    /// Relabels every `Y_{i,n}` to `Y_{i,n+k}`.
    pub fn shifted(&self, k: i32) -> Self {
        YMonomial {
            factors: self.factors.iter().map(|f| Factor { shift: f.shift + k, ..*f }).collect(),
        }
    }

    /// Replaces every `Y_{i,n}^e` by `Y_{i,-n}^-e`.
    pub fn reflected(&self) -> Self {
        Self::from_factors(self.triples().map(|(i, n, e)| (i, -n, -e)))
    }

    /// Keeps only the factors at nodes accepted by `keep`.
    pub fn restrict<F: Fn(usize) -> bool>(&self, keep: F) -> Self {
        YMonomial {
            factors: self.factors.iter().copied().filter(|f| keep(f.node)).collect(),
        }
    }

    /// Keeps only the factors at `node`.
    pub fn restrict_to_node(&self, node: usize) -> Self {
        self.restrict(|j| j == node)
    }

    pub fn max_shift(&self) -> Option<i32> {
        self.factors.iter().map(|f| f.shift).max()
    }

    pub fn min_shift(&self) -> Option<i32> {
        self.factors.iter().map(|f| f.shift).min()
    }

    /// No negative exponents (vacuously true for `1`).
    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|f| f.exp > 0)
    }

    /// No positive exponents (vacuously true for `1`).
    pub fn is_antidominant(&self) -> bool {
        self.factors.iter().all(|f| f.exp < 0)
    }

    /// No `Y_{i,*}^-1` factors.
    pub fn is_i_dominant(&self, i: usize) -> bool {
        self.factors.iter().all(|f| f.node != i || f.exp > 0)
    }

    /// All factors at the maximal shift carry negative exponents. The
    /// identity monomial has no maximal shift and is reported as `false`.
    pub fn is_right_negative(&self) -> bool {
        match self.max_shift() {
            None => false,
            Some(top) => self.factors.iter().filter(|f| f.shift == top).all(|f| f.exp < 0),
        }
    }

    /// Weight in fundamental-weight coordinates for an algebra of the given rank.
    pub fn weight(&self, rank: usize) -> Weight {
        let mut w = vec![0i64; rank];
        for f in &self.factors {
            w[f.node - 1] += i64::from(f.exp);
        }
        Weight(w)
    }

    /// Returns the `(node, shift)` factors with negative exponent, repeated by multiplicity.
    pub fn negative_part(&self) -> YMonomial {
        YMonomial {
            factors: self.factors.iter().copied().filter(|f| f.exp < 0).collect(),
        }
    }

    pub fn positive_part(&self) -> YMonomial {
        YMonomial {
            factors: self.factors.iter().copied().filter(|f| f.exp > 0).collect(),
        }
    }
}

impl Mul for &YMonomial {
    type Output = YMonomial;

    fn mul(self, rhs: &YMonomial) -> YMonomial {
        let (a, b) = (&self.factors, &rhs.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match (a[i].node, a[i].shift).cmp(&(b[j].node, b[j].shift)) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let exp = add_exp(a[i].exp, b[j].exp);
                    if exp != 0 {
                        out.push(Factor { exp, ..a[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        YMonomial { factors: out }
    }
}

impl Mul for YMonomial {
    type Output = YMonomial;
    fn mul(self, rhs: YMonomial) -> YMonomial {
        &self * &rhs
    }
}

impl fmt::Display for YMonomial {
    /// Canonical text form `Y{i,n}^e * ...`, sorted by `(i, n)`; the identity is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "Y{{{},{}}}^{}", fac.node, fac.shift, fac.exp)?;
        }
        Ok(())
    }
}

impl FromStr for YMonomial {
    type Err = ParseMonomialError;

    /// Accepts the canonical form; `^e` may be omitted for exponent 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseMonomialError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(YMonomial::one());
        }
        let mut triples = Vec::new();
        for part in trimmed.split('*') {
            let part = part.trim();
            let body = part
                .strip_prefix("Y{")
                .ok_or_else(|| err("factor must start with Y{"))?;
            let (inside, rest) = body.split_once('}').ok_or_else(|| err("missing }"))?;
            let (node, shift) = inside.split_once(',').ok_or_else(|| err("expected Y{i,n}"))?;
            let node: usize = node.trim().parse().map_err(|_| err("bad node index"))?;
            let shift: i32 = shift.trim().parse().map_err(|_| err("bad shift"))?;
            let exp: i32 = match rest.trim() {
                "" => 1,
                r => r
                    .strip_prefix('^')
                    .ok_or_else(|| err("expected ^ after factor"))?
                    .trim()
                    .parse()
                    .map_err(|_| err("bad exponent"))?,
            };
            if node == 0 {
                return Err(err("nodes are numbered from 1"));
            }
            triples.push((node, shift, exp));
        }
        Ok(YMonomial::from_factors(triples))
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `omega_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    /// `alpha_j = sum_i C_ij omega_i`.
    pub fn simple_root(rd: &RootData, j: usize) -> Self {
        Weight(rd.simple_root_weight(j))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `self >= other` in the dominance order: the difference is a non-negative
    /// integral combination of simple roots.
    pub fn dominates(&self, other: &Weight, rd: &RootData) -> bool {
        let diff = self - other;
        rd.root_coords(&diff.0)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// `A_{i, q^n}` written in the `Y` variables.
pub fn a_monomial(rd: &RootData, i: usize, n: i32) -> YMonomial {
    let ri = rd.r(i);
    let mut triples = vec![(i, n + ri, 1), (i, n - ri, 1)];
    for j in rd.nodes() {
        if j == i {
            continue;
        }
        match rd.cartan(j, i) {
            0 => {}
            -1 => triples.push((j, n, -1)),
            -2 => triples.extend([(j, n + 1, -1), (j, n - 1, -1)]),
            -3 => triples.extend([(j, n + 2, -1), (j, n, -1), (j, n - 2, -1)]),
            c => unreachable!("Cartan entry {c} outside finite type"),
        }
    }
    YMonomial::from_factors(triples)
}

/// Multiset of `(node, shift)` pairs: `m = m_plus * prod A_{node,shift}^-1`.
pub type AFactorization = BTreeMap<(usize, i32), u32>;

/// Writes `ratio` as a product `prod A_{i,c}^{e}` with signed exponents, if possible.
///
/// The factor of `A_{i,c}` at its largest shift is always `Y_{i,c+r_i}^{+1}`, so
/// peeling off the current top shift determines the exponents uniquely.
pub fn a_exponents(rd: &RootData, ratio: &YMonomial) -> Option<BTreeMap<(usize, i32), i32>> {
    let mut rest = ratio.clone();
    let mut out: BTreeMap<(usize, i32), i32> = BTreeMap::new();
    let floor = match ratio.min_shift() {
        None => return Some(out),
        Some(s) => s,
    };
    for f in rest.factors() {
        if !rd.nodes().contains(&f.node) {
            return None;
        }
    }
    while let Some(top) = rest.max_shift() {
        let tops: Vec<(usize, i32)> = rest
            .factors()
            .iter()
            .filter(|f| f.shift == top)
            .map(|f| (f.node, f.exp))
            .collect();
        for (node, exp) in tops {
            let center = top - rd.r(node);
            if center - rd.r(node) < floor {
                return None;
            }
            *out.entry((node, center)).or_insert(0) += exp;
            rest = rest.div(&a_monomial(rd, node, center).pow(exp));
        }
        if rest.max_shift().is_some_and(|t| t >= top) {
            return None;
        }
    }
    out.retain(|_, e| *e != 0);
    Some(out)
}

/// Solves `m = m_plus * prod A_{i_k,c_k}^-1`; `None` if `m / m_plus` is not a
/// product of inverse `A`'s.
pub fn factor_over_a(rd: &RootData, m_plus: &YMonomial, m: &YMonomial) -> Option<AFactorization> {
    let ratio = m_plus.div(m);
    let signed = a_exponents(rd, &ratio)?;
    signed
        .into_iter()
        .map(|(key, e)| u32::try_from(e).ok().map(|e| (key, e)))
        .collect()
}
