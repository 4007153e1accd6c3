//! Finitely supported combinations of [`YMonomial`]s.
//!
//! [`QCharacter`] only ever holds strictly positive coefficients, so every
//! value of that type lies in `Z_+[Y^{+-1}]`. Differences and screening
//! coefficients go through [`SignedPoly`] instead.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::monomial::{Weight, YMonomial};
use crate::rootdata::RootData;

/// A q-character: monomials with positive integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QCharacter {
    terms: BTreeMap<YMonomial, BigUint>,
}

impl QCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The character of the trivial module, the monomial `1`.
    pub fn one() -> Self {
        Self::from_monomial(YMonomial::one())
    }

    pub fn from_monomial(m: YMonomial) -> Self {
        let mut c = Self::zero();
        c.add_term(m, BigUint::one());
        c
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (YMonomial, C)>,
        C: Into<BigUint>,
    {
        let mut c = Self::zero();
        for (m, k) in terms {
            c.add_term(m, k.into());
        }
        c
    }

    /// Adds `coeff * m`. A zero coefficient is ignored.
    pub fn add_term(&mut self, m: YMonomial, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(m).or_default() += coeff;
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigUint)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &YMonomial> {
        self.terms.keys()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &YMonomial) -> BigUint {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn contains(&self, m: &YMonomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &QCharacter) -> QCharacter {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Ring product.
    pub fn multiply(&self, other: &QCharacter) -> QCharacter {
        let mut acc: HashMap<YMonomial, BigUint> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a * b).or_default() += x * y;
            }
        }
        QCharacter {
            terms: acc.into_iter().collect(),
        }
    }

    /// Applies a monomial map termwise, merging collisions.
    pub fn map_monomials<F: Fn(&YMonomial) -> YMonomial>(&self, f: F) -> QCharacter {
        let mut out = QCharacter::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Relabels every `Y_{i,n}` to `Y_{i,n+k}`.
    pub fn shifted(&self, k: i32) -> QCharacter {
        self.map_monomials(|m| m.shifted(k))
    }

    pub fn to_signed(&self) -> SignedPoly {
        let mut p = SignedPoly::zero();
        for (m, c) in &self.terms {
            p.add_term(m.clone(), BigInt::from(c.clone()));
        }
        p
    }

    /// Terms whose monomial has no negative exponents, in canonical order.
    pub fn dominant_monomials(&self) -> Vec<(YMonomial, BigUint)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_dominant())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    pub fn antidominant_monomials(&self) -> Vec<(YMonomial, BigUint)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_antidominant())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    fn extremal_terms(&self, rd: &RootData, highest: bool) -> Vec<(YMonomial, BigUint)> {
        let mut by_weight: BTreeMap<Weight, Vec<(&YMonomial, &BigUint)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_weight.entry(m.weight(rd.rank())).or_default().push((m, c));
        }
        let weights: Vec<&Weight> = by_weight.keys().collect();
        let extremal = |w: &Weight| {
            !weights.iter().any(|&v| {
                v != w && if highest { v.dominates(w, rd) } else { w.dominates(v, rd) }
            })
        };
        by_weight
            .iter()
            .filter(|(w, _)| extremal(w))
            .flat_map(|(_, ts)| ts.iter().map(|(m, c)| ((*m).clone(), (*c).clone())))
            .collect()
    }

    /// Terms of maximal weight under the dominance order (all maximal elements).
    pub fn highest_terms(&self, rd: &RootData) -> Vec<(YMonomial, BigUint)> {
        self.extremal_terms(rd, true)
    }

    /// Terms of minimal weight under the dominance order.
    pub fn lowest_terms(&self, rd: &RootData) -> Vec<(YMonomial, BigUint)> {
        self.extremal_terms(rd, false)
    }

    /// Ordinary character: collapses each monomial to its weight.
    pub fn specialize_beta(&self, rank: usize) -> BTreeMap<Weight, BigUint> {
        let mut out: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (m, c) in &self.terms {
            *out.entry(m.weight(rank)).or_default() += c;
        }
        out
    }

    /// Dominant monomials of `self * other`, without forming the full product.
    ///
    /// A product `a * b` can only be dominant if every negative factor of `a`
    /// is cancelled by a positive factor of `b`, so `other` is indexed by its
    /// positive factors and only matching pairs are multiplied.
    pub fn dominant_products(&self, other: &QCharacter) -> Vec<(YMonomial, BigUint)> {
        let others: Vec<(&YMonomial, &BigUint)> = other.terms.iter().collect();
        let mut by_positive: HashMap<(usize, i32), Vec<usize>> = HashMap::new();
        for (idx, (m, _)) in others.iter().enumerate() {
            for f in m.factors().iter().filter(|f| f.exp > 0) {
                by_positive.entry((f.node, f.shift)).or_default().push(idx);
            }
        }
        let all: Vec<usize> = (0..others.len()).collect();
        let mut acc: BTreeMap<YMonomial, BigUint> = BTreeMap::new();
        for (a, x) in &self.terms {
            let negative = a.negative_part();
            let candidates: &[usize] = if negative.is_one() {
                &all
            } else {
                let shortest = negative
                    .factors()
                    .iter()
                    .map(|f| by_positive.get(&(f.node, f.shift)).map_or(&[][..], |v| v.as_slice()))
                    .min_by_key(|v| v.len())
                    .unwrap_or(&[]);
                shortest
            };
            for &idx in candidates {
                let (b, y) = others[idx];
                let p = a * b;
                if p.is_dominant() {
                    *acc.entry(p).or_default() += x * y;
                }
            }
        }
        acc.into_iter().collect()
    }
}

/// Integer combination of monomials with possibly negative coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedPoly {
    terms: BTreeMap<YMonomial, BigInt>,
}

impl SignedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: YMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, BigInt::one());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (YMonomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: YMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&YMonomial, &BigInt)> {
        self.terms.iter()
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

    pub fn coeff(&self, m: &YMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &SignedPoly) -> SignedPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SignedPoly) -> SignedPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SignedPoly) -> SignedPoly {
        let mut acc: HashMap<YMonomial, BigInt> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a * b).or_default() += x * y;
            }
        }
        SignedPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Multiplies every term by the monomial `m`.
    pub fn times_monomial(&self, m: &YMonomial) -> SignedPoly {
        SignedPoly {
            terms: self.terms.iter().map(|(a, c)| (a * m, c.clone())).collect(),
        }
    }

    pub fn shifted(&self, k: i32) -> SignedPoly {
        SignedPoly {
            terms: self.terms.iter().map(|(a, c)| (a.shifted(k), c.clone())).collect(),
        }
    }

    /// Converts back to a character when all coefficients are positive.
    pub fn to_character(&self) -> Option<QCharacter> {
        let mut out = QCharacter::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.to_biguint()?);
        }
        Some(out)
    }
}

/// Coefficient `s` of a monomial plus its per-direction colorings `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTerm {
    pub coeff: u64,
    pub colors: Vec<u64>,
}

impl ColoredTerm {
    /// Coloring for node `i` (1-based).
    pub fn color(&self, i: usize) -> u64 {
        self.colors[i - 1]
    }
}

/// Colored polynomial manipulated by the expansion algorithm.
#[derive(Clone, Debug, Default)]
pub struct ColoredCharacter {
    rank: usize,
    terms: HashMap<YMonomial, ColoredTerm>,
}

impl ColoredCharacter {
    /// A single monomial with coefficient 1 and all colorings zero.
    pub fn seed(m: YMonomial, rank: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(
            m,
            ColoredTerm {
                coeff: 1,
                colors: vec![0; rank],
            },
        );
        ColoredCharacter { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, m: &YMonomial) -> Option<&ColoredTerm> {
        self.terms.get(m)
    }

    pub fn get_mut(&mut self, m: &YMonomial) -> Option<&mut ColoredTerm> {
        self.terms.get_mut(m)
    }

    pub fn insert(&mut self, m: YMonomial, term: ColoredTerm) {
        assert!(term.coeff > 0, "colored coefficients are positive");
        assert_eq!(term.colors.len(), self.rank);
        self.terms.insert(m, term);
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&YMonomial, &ColoredTerm)> {
        self.terms.iter()
    }

    /// Drops the colorings.
    pub fn to_character(&self) -> QCharacter {
        QCharacter::from_terms(self.terms.iter().map(|(m, t)| (m.clone(), t.coeff)))
    }

    /// Checks `s_i <= s` everywhere and `max_i s_i = s` away from `seed`.
    pub fn check_colorings(&self, seed: &YMonomial) -> Result<(), String> {
        for (m, t) in &self.terms {
            if let Some(i) = t.colors.iter().position(|&c| c > t.coeff) {
                return Err(format!("{m}: coloring s_{} = {} exceeds s = {}", i + 1, t.colors[i], t.coeff));
            }
            let max = t.colors.iter().copied().max().unwrap_or(0);
            if m != seed && max != t.coeff {
                return Err(format!("{m}: max coloring {max} differs from s = {}", t.coeff));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn sl2_fund(shift: i32) -> QCharacter {
        QCharacter::from_terms([
            (YMonomial::y(1, shift), 1u32),
            (YMonomial::y_pow(1, shift + 2, -1), 1u32),
        ])
    }

    #[test]
    fn product_of_two_sl2_fundamentals() {
        let p = sl2_fund(0).multiply(&sl2_fund(2));
        let expected = QCharacter::from_terms([
            (m("Y{1,0} * Y{1,2}"), 1u32),
            (m("Y{1,0} * Y{1,4}^-1"), 1u32),
            (YMonomial::one(), 1u32),
            (m("Y{1,2}^-1 * Y{1,4}^-1"), 1u32),
        ]);
        assert_eq!(p, expected);
        let dom: Vec<YMonomial> = p.dominant_monomials().into_iter().map(|(m, _)| m).collect();
        assert_eq!(dom, vec![YMonomial::one(), m("Y{1,0} * Y{1,2}")]);
        assert_eq!(sl2_fund(0).dominant_products(&sl2_fund(2)), p.dominant_monomials());
    }

    #[test]
    fn identity_and_square() {
        let p = sl2_fund(0);
        assert_eq!(p.multiply(&QCharacter::one()), p);
        let sq = p.multiply(&p);
        assert_eq!(sq.coeff(&m("Y{1,0} * Y{1,2}^-1")), BigUint::from(2u32));
        assert_eq!(sq.coeff(&m("Y{1,0}^2")), BigUint::one());
        assert_eq!(sq.coeff(&m("Y{1,2}^-2")), BigUint::one());
        assert_eq!(sq.dimension(), BigUint::from(4u32));
    }

    #[test]
    fn dominant_and_extremal_terms() {
        let rd = RootData::new(LieType::A, 1).unwrap();
        let p = sl2_fund(0);
        assert_eq!(p.dominant_monomials(), vec![(m("Y{1,0}"), BigUint::one())]);
        assert!(QCharacter::zero().dominant_monomials().is_empty());
        assert_eq!(p.highest_terms(&rd), vec![(m("Y{1,0}"), BigUint::one())]);
        assert_eq!(p.lowest_terms(&rd), vec![(m("Y{1,2}^-1"), BigUint::one())]);
    }

    #[test]
    fn highest_terms_can_be_an_antichain() {
        let rd = RootData::new(LieType::A, 2).unwrap();
        // omega_1 and omega_2 are incomparable.
        let p = QCharacter::from_terms([(m("Y{1,0}"), 1u32), (m("Y{2,0}"), 1u32)]);
        assert_eq!(p.highest_terms(&rd).len(), 2);
    }

    #[test]
    fn beta_specialization() {
        let beta = sl2_fund(0).specialize_beta(1);
        assert_eq!(
            beta,
            BTreeMap::from([(Weight(vec![-1]), BigUint::one()), (Weight(vec![1]), BigUint::one())])
        );
        assert_eq!(
            QCharacter::one().specialize_beta(2),
            BTreeMap::from([(Weight(vec![0, 0]), BigUint::one())])
        );
    }

    #[test]
    fn signed_poly_cancels() {
        let p = sl2_fund(0).to_signed();
        assert!(p.sub(&p).is_zero());
        let q = SignedPoly::from_terms([(m("Y{1,0}"), BigInt::from(-3))]);
        assert_eq!(p.add(&q).coeff(&m("Y{1,0}")), BigInt::from(-2));
        assert!(p.add(&q).to_character().is_none());
        assert_eq!(p.to_character(), Some(sl2_fund(0)));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut c = QCharacter::zero();
        c.add_term(m("Y{1,0}"), BigUint::zero());
        assert!(c.is_empty());
        let mut s = SignedPoly::from_monomial(m("Y{1,0}"));
        s.add_term(m("Y{1,3}"), BigInt::from(2));
        s.add_term(m("Y{1,0}"), BigInt::from(-1));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn coloring_invariant_check() {
        let seed = m("Y{1,0}");
        let mut c = ColoredCharacter::seed(seed.clone(), 2);
        assert!(c.check_colorings(&seed).is_ok());
        c.insert(m("Y{1,2}^-1"), ColoredTerm { coeff: 1, colors: vec![0, 0] });
        assert!(c.check_colorings(&seed).is_err());
        c.get_mut(&m("Y{1,2}^-1")).unwrap().colors[0] = 1;
        assert!(c.check_colorings(&seed).is_ok());
    }
}
