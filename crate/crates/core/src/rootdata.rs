//! Per-type constants of a simple Lie algebra.
//!
//! Node numbering follows Bourbaki. In particular `B_l` has its short root at
//! node `l`, `C_l` its long root at node `l`, `F_4` is `1 - 2 => 3 - 4` with
//! nodes 1, 2 long, and `G_2` has the short root at node 1.
//!
//! The dual Coxeter number and the involution `i -> bar(i)` (defined by
//! `w_0(alpha_i) = -alpha_bar(i)`) are computed from the root system at
//! construction rather than tabulated.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, RangeInclusive, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qlaurent::QLaurent;

/// Cartan–Killing family. The rank is carried separately by [`RootData`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    pub fn as_str(self) -> &'static str {
        match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::E => "E",
            LieType::F => "F",
            LieType::G => "G",
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LieType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            "E" | "e" => Ok(LieType::E),
            "F" | "f" => Ok(LieType::F),
            "G" | "g" => Ok(LieType::G),
            other => Err(RootDataError::UnknownType(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unknown Lie type {0:?} (expected one of A B C D E F G)")]
    UnknownType(String),
    #[error("{lie_type}{rank} is not a simple Lie type ({reason})")]
    InvalidRank {
        lie_type: LieType,
        rank: usize,
        reason: &'static str,
    },
    #[error("node {node} out of range 1..={rank}")]
    InvalidNode { node: usize, rank: usize },
}

/// Immutable root data. All node arguments of the accessors are 1-based.
#[derive(Clone, Debug)]
pub struct RootData {
    lie_type: LieType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    r: Vec<i32>,
    r_dual: i32,
    h_dual: i32,
    bar: Vec<usize>,
    d_poly: QLaurent,
    cartan_q: Vec<Vec<QLaurent>>,
    c_tilde_prime: Vec<Vec<QLaurent>>,
    p_coeffs: Vec<Vec<QLaurent>>,
    s_coeffs: Vec<QLaurent>,
    cartan_det: i64,
    cartan_adj: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

fn validate(lie_type: LieType, rank: usize) -> Result<(), RootDataError> {
    let bad = |reason| {
        Err(RootDataError::InvalidRank {
            lie_type,
            rank,
            reason,
        })
    };
    match lie_type {
        LieType::A if rank < 1 => bad("A requires rank >= 1"),
        LieType::B if rank < 2 => bad("B requires rank >= 2"),
        LieType::C if rank < 2 => bad("C requires rank >= 2"),
        LieType::D if rank < 4 => bad("D requires rank >= 4"),
        LieType::E if !(6..=8).contains(&rank) => bad("E requires rank 6, 7 or 8"),
        LieType::F if rank != 4 => bad("F requires rank 4"),
        LieType::G if rank != 2 => bad("G requires rank 2"),
        _ if rank > 12 => bad("ranks above 12 are not supported"),
        _ => Ok(()),
    }
}

fn cartan_matrix(lie_type: LieType, rank: usize) -> Vec<Vec<i64>> {
    let l = rank;
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match lie_type {
        LieType::A | LieType::B | LieType::C => {
            for i in 0..l - 1 {
                link(i, i + 1);
            }
        }
        LieType::D => {
            for i in 0..l - 2 {
                link(i, i + 1);
            }
            link(l - 3, l - 1);
        }
        LieType::E => {
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 3..l - 1 {
                link(i, i + 1);
            }
        }
        LieType::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        LieType::G => link(0, 1),
    }
    match lie_type {
        LieType::B => c[l - 1][l - 2] = -2,
        LieType::C => c[l - 2][l - 1] = -2,
        LieType::F => c[2][1] = -2,
        LieType::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// The fixed choice of `d(q)` per type.
fn d_polynomial(lie_type: LieType, rank: usize) -> QLaurent {
    let l = rank as i32;
    let sym = QLaurent::q_sym;
    match lie_type {
        LieType::A => QLaurent::q_int(l + 1),
        LieType::B => sym(2 * l - 1),
        LieType::C => sym(l + 1),
        LieType::D => &sym(1) * &sym(l - 1),
        LieType::E => match rank {
            6 => &QLaurent::q_int(3) * &sym(6),
            7 => &sym(1) * &sym(9),
            _ => &sym(1) * &sym(15),
        },
        LieType::F => sym(9),
        LieType::G => sym(6),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Symmetrizer `r` with `r_i C_ij = r_j C_ji`, normalized to coprime positive integers.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i32> {
    let l = cartan.len();
    // Propagate rational ratios along the (connected) Dynkin diagram.
    let mut num = vec![0i64; l];
    let mut den = vec![0i64; l];
    num[0] = 1;
    den[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if j != i && cartan[i][j] != 0 && num[j] == 0 {
                // r_j = r_i C_ij / C_ji
                let n = num[i] * cartan[i][j];
                let d = den[i] * cartan[j][i];
                let g = gcd(n, d);
                num[j] = n / g;
                den[j] = d / g;
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
    }
    let lcm = den.iter().fold(1i64, |acc, &d| acc / gcd(acc, d) * d);
    let ints: Vec<i64> = (0..l).map(|i| num[i] * (lcm / den[i])).collect();
    let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x));
    ints.iter().map(|&x| (x / g) as i32).collect()
}

/// Determinant by Laplace expansion along rows, memoized on the set of used columns.
fn determinant<T>(m: &[Vec<T>], zero: &T, one: &T) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    fn go<T>(m: &[Vec<T>], row: usize, mask: u64, ring: (&T, &T), memo: &mut HashMap<u64, T>) -> T
    where
        T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
    {
        let n = m.len();
        if row == n {
            return ring.1.clone();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = ring.0.clone();
        let mut parity = 0;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                continue;
            }
            let term = m[row][col].clone() * go(m, row + 1, mask | (1 << col), ring, memo);
            acc = if parity % 2 == 0 { acc + term } else { acc - term };
            parity += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    go(m, 0, 0, (zero, one), &mut HashMap::new())
}

fn minor<T: Clone>(m: &[Vec<T>], skip_row: usize, skip_col: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Classical adjugate: `m * adj(m) = det(m) * Id`.
fn adjugate<T>(m: &[Vec<T>], zero: &T, one: &T) -> Vec<Vec<T>>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let n = m.len();
    let mut adj = vec![vec![zero.clone(); n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let cof = determinant(&minor(m, j, i), zero, one);
            *entry = if (i + j) % 2 == 0 {
                cof
            } else {
                zero.clone() - cof
            };
        }
    }
    adj
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under simple reflections.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|k| i64::from(k == i)).collect())
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut idx = 0;
    while idx < roots.len() {
        let root = roots[idx].clone();
        for j in 0..l {
            let pairing: i64 = (0..l).map(|i| root[i] * cartan[j][i]).sum();
            let mut image = root.clone();
            image[j] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && seen.insert(image.clone()) {
                roots.push(image);
            }
        }
        idx += 1;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

/// Reflects a vector given in simple-root coordinates through `alpha_j`.
fn reflect_root(cartan: &[Vec<i64>], j: usize, v: &mut [i64]) {
    let pairing: i64 = (0..v.len()).map(|i| v[i] * cartan[j][i]).sum();
    v[j] -= pairing;
}

/// Reduced word of the longest Weyl element: walk `rho` to `-rho` by simple
/// reflections, recording the reflection order.
fn longest_element_word(cartan: &[Vec<i64>]) -> Vec<usize> {
    let l = cartan.len();
    let mut weight = vec![1i64; l];
    let mut word = Vec::new();
    while let Some(j) = (0..l).find(|&j| weight[j] > 0) {
        let coord = weight[j];
        for (i, w) in weight.iter_mut().enumerate() {
            *w -= coord * cartan[i][j];
        }
        word.push(j);
    }
    word
}

/// Everything else is derived from the type and rank.
impl PartialEq for RootData {
    fn eq(&self, other: &Self) -> bool {
        (self.lie_type, self.rank) == (other.lie_type, other.rank)
    }
}

impl Eq for RootData {}

impl RootData {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self, RootDataError> {
        validate(lie_type, rank)?;
        let l = rank;
        let cartan = cartan_matrix(lie_type, rank);
        let r = symmetrizer(&cartan);
        let r_dual = *r.iter().max().expect("rank >= 1");

        let cartan_q: Vec<Vec<QLaurent>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        if i == j {
                            QLaurent::q_sym(r[i])
                        } else {
                            QLaurent::q_int(cartan[i][j] as i32)
                        }
                    })
                    .collect()
            })
            .collect();
        let (zero, one) = (QLaurent::zero(), QLaurent::one());
        let det_q = determinant(&cartan_q, &zero, &one);
        let adj_q = adjugate(&cartan_q, &zero, &one);
        let d_poly = d_polynomial(lie_type, rank);
        let c_tilde_prime: Vec<Vec<QLaurent>> = adj_q
            .iter()
            .map(|row| {
                row.iter()
                    .map(|a| {
                        (&d_poly * a)
                            .div_exact(&det_q)
                            .expect("d(q) clears the denominators of C(q)^-1")
                    })
                    .collect()
            })
            .collect();
        let p_coeffs: Vec<Vec<QLaurent>> = (0..l)
            .map(|i| {
                let d_ii = QLaurent::q_int(r[i]);
                (0..l).map(|j| &d_ii * &c_tilde_prime[i][j]).collect()
            })
            .collect();
        let s_coeffs = r.iter().map(|&ri| &d_poly * &QLaurent::q_int(ri)).collect();

        let cartan_det = determinant(&cartan, &0, &1);
        let cartan_adj = adjugate(&cartan, &0, &1);
        let roots = positive_roots(&cartan);

        let highest = roots.last().expect("nonempty root system");
        // Comarks: a_i^vee = a_i r_i / r_dual, since the highest root is long.
        let comark_sum: i64 = (0..l).map(|i| highest[i] * i64::from(r[i])).sum::<i64>() / i64::from(r_dual);
        let h_dual = (1 + comark_sum) as i32;

        let word = longest_element_word(&cartan);
        let bar = (0..l)
            .map(|i| {
                let mut v: Vec<i64> = (0..l).map(|k| i64::from(k == i)).collect();
                for &j in &word {
                    reflect_root(&cartan, j, &mut v);
                }
                let target = v.iter().position(|&c| c == -1).expect("w0 maps simple roots to negative simple roots");
                debug_assert_eq!(v.iter().filter(|&&c| c != 0).count(), 1);
                target + 1
            })
            .collect();

        Ok(RootData {
            lie_type,
            rank,
            cartan,
            r,
            r_dual,
            h_dual,
            bar,
            d_poly,
            cartan_q,
            c_tilde_prime,
            p_coeffs,
            s_coeffs,
            cartan_det,
            cartan_adj,
            positive_roots: roots,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `A2`, `E6`, ...
    pub fn label(&self) -> String {
        format!("{}{}", self.lie_type, self.rank)
    }

    pub fn nodes(&self) -> RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn check_node(&self, node: usize) -> Result<(), RootDataError> {
        if (1..=self.rank).contains(&node) {
            Ok(())
        } else {
            Err(RootDataError::InvalidNode {
                node,
                rank: self.rank,
            })
        }
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `r_i = (alpha_i, alpha_i) / 2` in the rescaled inner product.
    pub fn r(&self, i: usize) -> i32 {
        self.r[i - 1]
    }

    pub fn r_dual(&self) -> i32 {
        self.r_dual
    }

    pub fn h_dual(&self) -> i32 {
        self.h_dual
    }

    /// `r^vee h^vee`, the width of fundamental lattice supports.
    pub fn rh(&self) -> i32 {
        self.r_dual * self.h_dual
    }

    pub fn bar(&self, i: usize) -> usize {
        self.bar[i - 1]
    }

    pub fn d_poly(&self) -> &QLaurent {
        &self.d_poly
    }

    /// Entry of the quantized Cartan matrix `C(q)`.
    pub fn cartan_q(&self, i: usize, j: usize) -> &QLaurent {
        &self.cartan_q[i - 1][j - 1]
    }

    /// Entry of `C~'(q) = d(q) C(q)^-1`.
    pub fn c_tilde_prime(&self, i: usize, j: usize) -> &QLaurent {
        &self.c_tilde_prime[i - 1][j - 1]
    }

    /// `(D(q) C~'(q))_ij = sum_k p_ij(k) q^k`.
    pub fn p_coeffs(&self, i: usize, j: usize) -> &QLaurent {
        &self.p_coeffs[i - 1][j - 1]
    }

    /// `d(q) [r_i]_q = sum_k s_i(k) q^k`.
    pub fn s_coeffs(&self, i: usize) -> &QLaurent {
        &self.s_coeffs[i - 1]
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty")
    }

    /// `alpha_j` in fundamental-weight coordinates (column `j` of `C`).
    pub fn simple_root_weight(&self, j: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.cartan[i][j - 1]).collect()
    }

    /// Simple-root coordinates of a weight given in fundamental-weight
    /// coordinates, if they are integral.
    pub fn root_coords(&self, weight: &[i64]) -> Option<Vec<i64>> {
        let l = self.rank;
        let mut out = Vec::with_capacity(l);
        for i in 0..l {
            let num: i64 = (0..l).map(|k| self.cartan_adj[i][k] * weight[k]).sum();
            if num % self.cartan_det != 0 {
                return None;
            }
            out.push(num / self.cartan_det);
        }
        Some(out)
    }

    /// Simple reflection `s_j` on a weight in fundamental-weight coordinates.
    pub fn reflect_weight(&self, j: usize, weight: &[i64]) -> Vec<i64> {
        let c = weight[j - 1];
        (0..self.rank).map(|i| weight[i] - c * self.cartan[i][j - 1]).collect()
    }

    /// Symmetric form `(lambda, mu)` on weights, scaled by `det C` to stay integral.
    pub fn scaled_form(&self, lambda: &[i64], mu: &[i64]) -> i64 {
        // (omega_i, alpha_j) = delta_ij r_j, so (lambda, mu) = sum_j mu^alpha_j r_j lambda_j
        // with mu^alpha = adj(C) mu / det C.
        let l = self.rank;
        (0..l)
            .map(|j| {
                let mu_alpha: i64 = (0..l).map(|k| self.cartan_adj[j][k] * mu[k]).sum();
                mu_alpha * i64::from(self.r[j]) * lambda[j]
            })
            .sum()
    }

    pub fn cartan_det(&self) -> i64 {
        self.cartan_det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<(LieType, usize)> {
        let mut v = Vec::new();
        for l in 1..=6 {
            v.push((LieType::A, l));
        }
        for l in 2..=6 {
            v.push((LieType::B, l));
            v.push((LieType::C, l));
        }
        for l in 4..=7 {
            v.push((LieType::D, l));
        }
        v.extend([(LieType::E, 6), (LieType::E, 7), (LieType::E, 8), (LieType::F, 4), (LieType::G, 2)]);
        v
    }

    #[test]
    fn g2_d_poly() {
        let rd = RootData::new(LieType::G, 2).unwrap();
        assert_eq!(rd.d_poly(), &QLaurent::q_sym(6));
        assert_eq!(rd.r(1), 1);
        assert_eq!(rd.r(2), 3);
        assert_eq!(rd.r_dual(), 3);
        assert_eq!(rd.h_dual(), 4);
    }

    #[test]
    fn a1_basics() {
        let rd = RootData::new(LieType::A, 1).unwrap();
        assert_eq!(rd.cartan_matrix(), &[vec![2]]);
        assert_eq!(rd.r(1), 1);
        assert_eq!(rd.d_poly(), &QLaurent::q_sym(1));
        assert_eq!(rd.c_tilde_prime(1, 1), &QLaurent::one());
    }

    #[test]
    fn a2_bar_and_coxeter() {
        let rd = RootData::new(LieType::A, 2).unwrap();
        assert_eq!((rd.bar(1), rd.bar(2)), (2, 1));
        assert_eq!(rd.h_dual(), 3);
        assert_eq!(rd.r_dual(), 1);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(RootData::new(LieType::B, 1).is_err());
        assert!(RootData::new(LieType::E, 5).is_err());
        assert!(RootData::new(LieType::E, 9).is_err());
        assert!(RootData::new(LieType::D, 3).is_err());
        assert!(RootData::new(LieType::G, 3).is_err());
        assert!(RootData::new(LieType::A, 0).is_err());
        assert!("X".parse::<LieType>().is_err());
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expected = |t: LieType, l: i32| match t {
            LieType::A => l + 1,
            LieType::B => 2 * l - 1,
            LieType::C => l + 1,
            LieType::D => 2 * l - 2,
            LieType::E => [12, 18, 30][(l - 6) as usize],
            LieType::F => 9,
            LieType::G => 4,
        };
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            assert_eq!(rd.h_dual(), expected(t, l as i32), "{t}{l}");
        }
    }

    #[test]
    fn positive_root_counts() {
        let count = |t: LieType, l: usize| match t {
            LieType::A => l * (l + 1) / 2,
            LieType::B | LieType::C => l * l,
            LieType::D => l * (l - 1),
            LieType::E => [36, 63, 120][l - 6],
            LieType::F => 24,
            LieType::G => 6,
        };
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            assert_eq!(rd.positive_roots().len(), count(t, l), "{t}{l}");
        }
    }

    #[test]
    fn cartan_is_symmetrizable_and_r_coprime() {
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            let mut g = 0;
            for i in rd.nodes() {
                assert_eq!(rd.cartan(i, i), 2);
                g = gcd(g, i64::from(rd.r(i)));
                for j in rd.nodes() {
                    if i != j {
                        assert!(rd.cartan(i, j) <= 0);
                    }
                    assert_eq!(
                        i64::from(rd.r(i)) * rd.cartan(i, j),
                        i64::from(rd.r(j)) * rd.cartan(j, i)
                    );
                }
            }
            assert_eq!(g, 1, "{t}{l}");
        }
    }

    #[test]
    fn inverse_identity_and_shape() {
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            let d = rd.d_poly();
            assert!(d.is_palindromic() && d.is_nonnegative());
            let deg_d = d.degree().unwrap();
            for i in rd.nodes() {
                for j in rd.nodes() {
                    let mut sum = QLaurent::zero();
                    for k in rd.nodes() {
                        sum = &sum + &(rd.cartan_q(i, k) * rd.c_tilde_prime(k, j));
                    }
                    let expected = if i == j { d.clone() } else { QLaurent::zero() };
                    assert_eq!(sum, expected, "{t}{l} ({i},{j})");
                    let c = rd.c_tilde_prime(i, j);
                    assert!(c.is_palindromic() && c.is_nonnegative(), "{t}{l} ({i},{j}) = {c}");
                    assert!(c.degree().unwrap() < deg_d, "{t}{l} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn bar_is_involution_and_nontrivial_only_where_expected() {
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            let nontrivial = rd.nodes().any(|i| rd.bar(i) != i);
            for i in rd.nodes() {
                assert_eq!(rd.bar(rd.bar(i)), i);
            }
            let expect = match t {
                LieType::A => l > 1,
                LieType::D => l % 2 == 1,
                LieType::E => l == 6,
                _ => false,
            };
            assert_eq!(nontrivial, expect, "{t}{l}");
        }
    }

    #[test]
    fn a_type_bar_reverses() {
        let rd = RootData::new(LieType::A, 5).unwrap();
        for i in 1..=5 {
            assert_eq!(rd.bar(i), 6 - i);
        }
        let e6 = RootData::new(LieType::E, 6).unwrap();
        let bars: Vec<usize> = e6.nodes().map(|i| e6.bar(i)).collect();
        assert_eq!(bars, vec![6, 2, 5, 4, 3, 1]);
    }

    #[test]
    fn root_coords_invert_simple_root_weights() {
        for (t, l) in all_types() {
            let rd = RootData::new(t, l).unwrap();
            for j in rd.nodes() {
                let coords = rd.root_coords(&rd.simple_root_weight(j)).unwrap();
                let expected: Vec<i64> = (1..=l).map(|k| i64::from(k == j)).collect();
                assert_eq!(coords, expected);
            }
        }
        let a2 = RootData::new(LieType::A, 2).unwrap();
        assert_eq!(a2.root_coords(&[1, 0]), None);
    }

    #[test]
    fn s_coeffs_are_d_times_qint() {
        let rd = RootData::new(LieType::B, 3).unwrap();
        assert_eq!(rd.s_coeffs(1), &(rd.d_poly() * &QLaurent::q_int(2)));
        assert_eq!(rd.s_coeffs(3), rd.d_poly());
    }

    #[test]
    fn classical_c_tilde_spot_check() {
        // A_l: C~'_{11} = [l]_q, so its degree is l-1.
        for l in 1..=6 {
            let rd = RootData::new(LieType::A, l).unwrap();
            assert_eq!(rd.c_tilde_prime(1, 1), &QLaurent::q_int(l as i32));
            assert_eq!(rd.c_tilde_prime(1, l), &QLaurent::one());
        }
    }
}
