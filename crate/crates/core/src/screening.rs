//! Screening operators and kernel membership.
//!
//! `S_i` is the derivation with `S_i(Y_{j,n}) = delta_ij Y_{i,n} S_{i,n}`,
//! taking values in the module spanned by the symbols `S_{i,n}` modulo
//! `S_{i,n+2r_i} = A_{i,n+r_i} S_{i,n}`. Every symbol is rewritten to the
//! representative of its class `n mod 2r_i` in `0..2r_i`, moving up or down as
//! needed, so an image is a finite family of polynomial coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::character::{QCharacter, SignedPoly};
use crate::monomial::{a_monomial, YMonomial};
use crate::rootdata::RootData;

/// `S_i(p)` as coefficients of the class representatives `S_{i,c}`, `0 <= c < 2 r_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScreeningImage {
    pub node: usize,
    pub classes: BTreeMap<i32, SignedPoly>,
}

impl ScreeningImage {
    pub fn is_zero(&self) -> bool {
        self.classes.values().all(SignedPoly::is_zero)
    }

    /// Number of nonzero terms across all classes.
    pub fn residual_terms(&self) -> usize {
        self.classes.values().map(SignedPoly::len).sum()
    }

    pub fn class(&self, c: i32) -> SignedPoly {
        self.classes.get(&c).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &ScreeningImage) -> ScreeningImage {
        let mut out = self.clone();
        for (c, p) in &other.classes {
            let sum = out.class(*c).add(p);
            out.set(*c, sum);
        }
        out
    }

    /// Multiplies every class coefficient by `p`.
    pub fn mul_poly(&self, p: &SignedPoly) -> ScreeningImage {
        let mut out = ScreeningImage { node: self.node, classes: BTreeMap::new() };
        for (c, q) in &self.classes {
            out.set(*c, q.mul(p));
        }
        out
    }

    fn set(&mut self, c: i32, p: SignedPoly) {
        if p.is_zero() {
            self.classes.remove(&c);
        } else {
            self.classes.insert(c, p);
        }
    }
}

/// Rewrites `S_{i,n}` as `ratio * S_{i,c}` with `c = n mod 2r_i`.
struct Rewriter<'a> {
    rd: &'a RootData,
    i: usize,
    r: i32,
    cache: HashMap<i32, YMonomial>,
}

impl<'a> Rewriter<'a> {
    fn new(rd: &'a RootData, i: usize) -> Self {
        Rewriter { rd, i, r: rd.r(i), cache: HashMap::new() }
    }

    fn class_of(&self, n: i32) -> i32 {
        n.rem_euclid(2 * self.r)
    }

    fn ratio(&mut self, n: i32) -> YMonomial {
        if let Some(m) = self.cache.get(&n) {
            return m.clone();
        }
        let (rd, i, r) = (self.rd, self.i, self.r);
        let c = self.class_of(n);
        let mut out = YMonomial::one();
        if n > c {
            // S_{i,n} = A_{i,n-r} A_{i,n-3r} ... A_{i,c+r} S_{i,c}
            for j in 1..=(n - c) / (2 * r) {
                out = &out * &a_monomial(rd, i, n - (2 * j - 1) * r);
            }
        } else {
            // S_{i,n} = A_{i,n+r}^-1 A_{i,n+3r}^-1 ... A_{i,c-r}^-1 S_{i,c}
            for j in 0..(c - n) / (2 * r) {
                out = out.div(&a_monomial(rd, i, n + (2 * j + 1) * r));
            }
        }
        self.cache.insert(n, out.clone());
        out
    }
}

fn screen_terms<'t, I>(rd: &RootData, i: usize, terms: I) -> ScreeningImage
where
    I: IntoIterator<Item = (&'t YMonomial, BigInt)>,
{
    let mut rw = Rewriter::new(rd, i);
    let mut acc: HashMap<(i32, YMonomial), BigInt> = HashMap::new();
    for (m, coeff) in terms {
        for f in m.factors().iter().filter(|f| f.node == i) {
            let c = rw.class_of(f.shift);
            let mono = m * &rw.ratio(f.shift);
            *acc.entry((c, mono)).or_insert_with(BigInt::zero) += &coeff * f.exp;
        }
    }
    let mut grouped: BTreeMap<i32, Vec<(YMonomial, BigInt)>> = BTreeMap::new();
    for ((c, mono), k) in acc {
        if !k.is_zero() {
            grouped.entry(c).or_default().push((mono, k));
        }
    }
    ScreeningImage {
        node: i,
        classes: grouped
            .into_iter()
            .map(|(c, ts)| (c, SignedPoly::from_terms(ts)))
            .filter(|(_, p)| !p.is_zero())
            .collect(),
    }
}

/// `S_i(p)`.
pub fn screen(rd: &RootData, i: usize, p: &SignedPoly) -> ScreeningImage {
    screen_terms(rd, i, p.terms().map(|(m, c)| (m, c.clone())))
}

/// `S_i(chi)` for a positive character.
pub fn screen_character(rd: &RootData, i: usize, chi: &QCharacter) -> ScreeningImage {
    screen_terms(rd, i, chi.terms().map(|(m, c)| (m, BigInt::from(c.clone()))))
}

/// Images under every `S_i`, in node order.
pub fn residuals(rd: &RootData, chi: &QCharacter) -> Vec<ScreeningImage> {
    let nodes: Vec<usize> = rd.nodes().collect();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        nodes.par_iter().map(|&i| screen_character(rd, i, chi)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        nodes.iter().map(|&i| screen_character(rd, i, chi)).collect()
    }
}

/// Whether `chi` lies in the kernel of every screening operator.
pub fn in_kernel_all(rd: &RootData, chi: &QCharacter) -> bool {
    residuals(rd, chi).iter().all(ScreeningImage::is_zero)
}
