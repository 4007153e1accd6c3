//! Laurent polynomials in the formal variable `q` with integer coefficients.
//!
//! These carry the quantized Cartan data: `[n]_q`, the entries of `C(q)`,
//! `D(q)` and the cleared inverse `C~'(q)`. Coefficients are `i64` with
//! overflow-checked arithmetic; every entry that occurs for simple Lie types
//! stays far below that range.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse Laurent polynomial `sum c_k q^k`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    coeffs: BTreeMap<i32, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("QLaurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("QLaurent coefficient overflow")
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 1)
    }

    /// `c q^k`.
    pub fn term(k: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// The quantum integer `[n]_q = (q^n - q^-n) / (q - q^-1)`, valid for any sign of `n`.
    pub fn q_int(n: i32) -> Self {
        let sign = n.signum() as i64;
        let m = n.abs();
        Self::from_terms((0..m).map(|j| (m - 1 - 2 * j, sign)))
    }

    /// `q^k + q^-k`.
    pub fn q_sym(k: i32) -> Self {
        Self::from_terms([(k, 1), (-k, 1)])
    }

    pub fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert(0);
        *entry = checked_add(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest exponent present; `None` for zero.
    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent present; `None` for zero.
    pub fn low_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Invariant under `q -> q^-1`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(&k, &c)| self.coeff(-k) == c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    /// Substitutes `q -> q^s` (so `[n]_{q^s}` etc.).
    pub fn dilate(&self, s: i32) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k * s, c)))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(k, a)| (k, checked_mul(a, c))))
    }

    /// Exact division. Returns `None` if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &QLaurent) -> Option<QLaurent> {
        let (d_hi, d_lo) = (divisor.degree()?, divisor.low_degree()?);
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = QLaurent::zero();
        while let Some(r_hi) = rem.degree() {
            let r_lo = rem.low_degree().expect("nonzero");
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let c = rem.coeff(r_hi);
            if c % lead != 0 {
                return None;
            }
            let t = QLaurent::term(r_hi - d_hi, c / lead);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c);
        }
        out
    }
}

// Exponents add when terms multiply.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, checked_mul(x, y));
            }
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $f(self, rhs: QLaurent) -> QLaurent {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let (k, c) = (*k, *c);
            if idx > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
