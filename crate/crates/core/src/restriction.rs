//! Restriction to the subalgebra attached to a node subset `J`.
//!
//! `beta_J` simply forgets the variables outside `J`. The refined map `tau_J`
//! keeps track of them through auxiliary variables `Z_{j,n}`, `j` outside `J`,
//! so that it stays injective and each `Z`-class of a character is a
//! character of the subalgebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::character::QCharacter;
use crate::monomial::YMonomial;
use crate::rootdata::RootData;

/// `y_part * z_part` with `y_part` in the `Y_{j,*}`, `j` in `J`, and `z_part`
/// a monomial in the `Z_{k,*}`, `k` outside `J` (stored with the same
/// `(node, shift, exp)` layout as a `YMonomial`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZMonomial {
    pub y_part: YMonomial,
    pub z_part: YMonomial,
}

impl ZMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn mul(&self, other: &ZMonomial) -> ZMonomial {
        ZMonomial {
            y_part: &self.y_part * &other.y_part,
            z_part: &self.z_part * &other.z_part,
        }
    }

    pub fn pow(&self, k: i32) -> ZMonomial {
        ZMonomial {
            y_part: self.y_part.pow(k),
            z_part: self.z_part.pow(k),
        }
    }

    pub fn inverse(&self) -> ZMonomial {
        self.pow(-1)
    }

    /// Human-readable form with `Z{k,n}` for the auxiliary variables.
    pub fn z_string(z: &YMonomial) -> String {
        if z.is_one() {
            return "1".to_string();
        }
        z.to_string().replace('Y', "Z")
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.y_part.is_one(), self.z_part.is_one()) {
            (true, true) => f.write_str("1"),
            (false, true) => write!(f, "{}", self.y_part),
            (true, false) => f.write_str(&Self::z_string(&self.z_part)),
            (false, false) => write!(f, "{} * {}", self.y_part, Self::z_string(&self.z_part)),
        }
    }
}

/// Node subset together with its complement.
fn split(rd: &RootData, j: &BTreeSet<usize>) -> Vec<usize> {
    rd.nodes().filter(|k| !j.contains(k)).collect()
}

/// `tau_J(Y_{i,a})`.
pub fn tau_generator(rd: &RootData, j: &BTreeSet<usize>, i: usize, a: i32) -> ZMonomial {
    let y_part = if j.contains(&i) { YMonomial::y(i, a) } else { YMonomial::one() };
    let mut triples = Vec::new();
    for k in split(rd, j) {
        for (shift, c) in rd.p_coeffs(i, k).terms() {
            let exp = i32::try_from(c).expect("p coefficient fits in i32");
            triples.push((k, a + shift, exp));
        }
    }
    ZMonomial {
        y_part,
        z_part: YMonomial::from_factors(triples),
    }
}

/// Multiplicative extension of [`tau_generator`].
pub fn tau_j(rd: &RootData, j: &BTreeSet<usize>, m: &YMonomial) -> ZMonomial {
    let mut out = ZMonomial::one();
    for f in m.factors() {
        out = out.mul(&tau_generator(rd, j, f.node, f.shift).pow(f.exp));
    }
    out
}

/// Drops every factor at a node outside `J`.
pub fn beta_j(j: &BTreeSet<usize>, m: &YMonomial) -> YMonomial {
    m.restrict(|node| j.contains(&node))
}

/// `B_{i,a} = prod_k Z_{i,a+k}^{s_i(k)}`.
pub fn b_monomial(rd: &RootData, i: usize, a: i32) -> YMonomial {
    YMonomial::from_factors(rd.s_coeffs(i).terms().map(|(k, c)| {
        (i, a + k, i32::try_from(c).expect("s coefficient fits in i32"))
    }))
}

/// One summand of a restricted character: the `Z`-class and its `Y`-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionGroup {
    pub z_part: YMonomial,
    pub character: QCharacter,
}

/// Applies `tau_J` termwise and groups the results by their `Z`-part, in
/// canonical `Z` order.
pub fn group_by_z(rd: &RootData, j: &BTreeSet<usize>, chi: &QCharacter) -> Vec<RestrictionGroup> {
    let mut groups: BTreeMap<YMonomial, QCharacter> = BTreeMap::new();
    for (m, c) in chi.terms() {
        let t = tau_j(rd, j, m);
        groups.entry(t.z_part).or_default().add_term(t.y_part, c.clone());
    }
    groups
        .into_iter()
        .map(|(z_part, character)| RestrictionGroup { z_part, character })
        .collect()
}
