//! Structural consequences read off computed characters: monomial graphs,
//! reducibility of tensor products, pole candidates of normalized R-matrices,
//! duals and lowest monomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::character::QCharacter;
use crate::engine::{fundamental_seed, run, EngineError, Limits};
use crate::monomial::{a_monomial, factor_over_a, YMonomial};
use crate::rootdata::{RootData, RootDataError};

#[derive(Debug, Error, Clone)]
pub enum AnalysisError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("computing the character of node {node} failed: {source}")]
    Engine { node: usize, source: EngineError },
    #[error("{monomial} is not the highest monomial times inverse A's")]
    Factorization { monomial: String },
    #[error("tensor product needs at least one factor")]
    EmptyTensor,
}

/// Memoized fundamental characters `chi_q(V_{omega_i}(0))` of one algebra.
pub struct FundamentalCharacters {
    rd: RootData,
    limits: Limits,
    chars: HashMap<usize, Arc<QCharacter>>,
}

impl FundamentalCharacters {
    pub fn new(rd: RootData) -> Self {
        Self::with_limits(rd, Limits::default())
    }

    pub fn with_limits(rd: RootData, limits: Limits) -> Self {
        FundamentalCharacters { rd, limits, chars: HashMap::new() }
    }

    pub fn root_data(&self) -> &RootData {
        &self.rd
    }

    /// Supplies a character computed elsewhere (for example loaded from a cache).
    pub fn insert(&mut self, node: usize, chi: QCharacter) {
        self.chars.insert(node, Arc::new(chi));
    }

    pub fn get(&mut self, node: usize) -> Result<Arc<QCharacter>, AnalysisError> {
        self.rd.check_node(node)?;
        if let Some(c) = self.chars.get(&node) {
            return Ok(Arc::clone(c));
        }
        let chi = run(&self.rd, &fundamental_seed(node), self.limits)
            .map_err(|source| AnalysisError::Engine { node, source })?;
        let chi = Arc::new(chi);
        self.chars.insert(node, Arc::clone(&chi));
        Ok(chi)
    }
}

/// Arrow `from -> to` with `to = from * A_{node,shift}^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub node: usize,
    pub shift: i32,
}

/// Distinct monomials of a character with their multiplicities, and all arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialGraph {
    pub vertices: Vec<(YMonomial, BigUint)>,
    pub edges: Vec<Edge>,
}

impl MonomialGraph {
    /// Sum of vertex multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.vertices.iter().map(|(_, c)| c).sum()
    }

    /// Connected when orientation is ignored. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        reach(&adj, 0).len() == n
    }

    /// Every vertex is reachable along arrows from `root`.
    pub fn is_reachable_from(&self, root: &YMonomial) -> bool {
        let Some(start) = self.vertices.iter().position(|(m, _)| m == root) else {
            return false;
        };
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        reach(&adj, start).len() == self.vertices.len()
    }

    /// Vertices without incoming arrows.
    pub fn sources(&self) -> Vec<usize> {
        let targets: BTreeSet<usize> = self.edges.iter().map(|e| e.to).collect();
        (0..self.vertices.len()).filter(|v| !targets.contains(v)).collect()
    }
}

fn reach(adj: &[Vec<usize>], start: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// All arrows between monomials of `chi`.
pub fn build_graph(rd: &RootData, chi: &QCharacter) -> MonomialGraph {
    let vertices: Vec<(YMonomial, BigUint)> = chi.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let index: HashMap<&YMonomial, usize> = vertices.iter().enumerate().map(|(k, (m, _))| (m, k)).collect();
    let (lo, hi) = vertices.iter().fold((i32::MAX, i32::MIN), |(lo, hi), (m, _)| {
        (lo.min(m.min_shift().unwrap_or(lo)), hi.max(m.max_shift().unwrap_or(hi)))
    });
    let mut edges = Vec::new();
    if lo <= hi {
        for i in rd.nodes() {
            let r = rd.r(i);
            let a_inv: Vec<(i32, YMonomial)> = (lo - 2 * r..=hi + 2 * r).map(|x| (x, a_monomial(rd, i, x).inverse())).collect();
            for (from, (m, _)) in vertices.iter().enumerate() {
                for (x, a) in &a_inv {
                    if let Some(&to) = index.get(&(m * a)) {
                        edges.push(Edge { from, to, node: i, shift: *x });
                    }
                }
            }
        }
    }
    edges.sort();
    MonomialGraph { vertices, edges }
}

/// Dominant monomials of a tensor product other than the product of the highest monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorScan {
    pub highest: YMonomial,
    pub witnesses: Vec<(YMonomial, BigUint)>,
}

impl TensorScan {
    pub fn reducible(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Scans `prod_k chi_q(V_{omega_{i_k}}(q^{b_k}))` for extra dominant monomials.
pub fn tensor_scan(chars: &mut FundamentalCharacters, factors: &[(usize, i32)]) -> Result<TensorScan, AnalysisError> {
    let Some((&(last_node, last_shift), init)) = factors.split_last() else {
        return Err(AnalysisError::EmptyTensor);
    };
    let mut acc = QCharacter::one();
    for &(node, shift) in init {
        acc = acc.multiply(&chars.get(node)?.shifted(shift));
    }
    let last = chars.get(last_node)?.shifted(last_shift);
    Ok(scan_product(&acc, &last, factors))
}

fn scan_product(left: &QCharacter, right: &QCharacter, factors: &[(usize, i32)]) -> TensorScan {
    let highest = YMonomial::from_factors(factors.iter().map(|&(i, b)| (i, b, 1)));
    let witnesses = left
        .dominant_products(right)
        .into_iter()
        .filter(|(m, c)| *m != highest || *c > BigUint::from(1u32))
        .collect();
    TensorScan { highest, witnesses }
}

/// Shifts `k` in `window` for which
/// `V_{omega_i}(0) (x) V_{omega_j}(q^k)` has an extra dominant monomial.
pub fn reducible_shifts(
    chars: &mut FundamentalCharacters,
    i: usize,
    j: usize,
    window: std::ops::RangeInclusive<i32>,
) -> Result<BTreeSet<i32>, AnalysisError> {
    let ci = chars.get(i)?;
    let cj = chars.get(j)?;
    let shifts: Vec<i32> = window.collect();
    let test = |k: i32| scan_product(&ci, &cj.shifted(k), &[(i, 0), (j, k)]).reducible();
    #[cfg(feature = "parallel")]
    let hits: Vec<bool> = {
        use rayon::prelude::*;
        shifts.par_iter().map(|&k| test(k)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let hits: Vec<bool> = shifts.iter().map(|&k| test(k)).collect();
    Ok(shifts.into_iter().zip(hits).filter(|(_, h)| *h).map(|(k, _)| k).collect())
}

/// Shifts `k` with `2 <= |k| <= r^v h^v` at which the tensor product of
/// `V_{omega_i}(0)` and `V_{omega_j}(q^k)` is reducible.
pub fn pole_candidates(chars: &mut FundamentalCharacters, i: usize, j: usize) -> Result<BTreeSet<i32>, AnalysisError> {
    let rh = chars.root_data().rh();
    let mut out = reducible_shifts(chars, i, j, -rh..=rh)?;
    out.retain(|k| k.abs() >= 2);
    Ok(out)
}

/// Diagonal entry `prod_k q_i (1 - q^{a_k - b - r_i} z) / (1 - q^{a_k - b + r_i} z)`
/// of the normalized R-matrix on `v (x) v_{omega_i}`, `V_{omega_i}` at `q^b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalEntry {
    pub node: usize,
    pub base: i32,
    pub r: i32,
    /// The shifts `a_k` of the `A_{node,*}^-1` factors, sorted, with repeats.
    pub a_shifts: Vec<i32>,
}

impl DiagonalEntry {
    /// `z`-exponents of the denominator roots, `b - a_k - r_i`, with repeats.
    pub fn pole_exponents(&self) -> Vec<i32> {
        self.a_shifts.iter().map(|a| self.base - a - self.r).collect()
    }

    /// `z`-exponents of the numerator roots, `b - a_k + r_i`, with repeats.
    pub fn zero_exponents(&self) -> Vec<i32> {
        self.a_shifts.iter().map(|a| self.base - a + self.r).collect()
    }

    /// Pole exponents left after cancelling against zeros, with multiplicity.
    pub fn reduced_poles(&self) -> BTreeMap<i32, u32> {
        let mut count: BTreeMap<i32, i64> = BTreeMap::new();
        for p in self.pole_exponents() {
            *count.entry(p).or_default() += 1;
        }
        for z in self.zero_exponents() {
            *count.entry(z).or_default() -= 1;
        }
        count
            .into_iter()
            .filter(|(_, c)| *c > 0)
            .map(|(k, c)| (k, c as u32))
            .collect()
    }

    /// The entry is identically 1 exactly when there are no factors.
    pub fn is_one(&self) -> bool {
        self.a_shifts.is_empty()
    }
}

/// Diagonal entry for the monomial `m` of a character with highest monomial `m_plus`.
pub fn diagonal_entry(
    rd: &RootData,
    m_plus: &YMonomial,
    m: &YMonomial,
    i: usize,
    b: i32,
) -> Result<DiagonalEntry, AnalysisError> {
    rd.check_node(i)?;
    let fact = factor_over_a(rd, m_plus, m).ok_or_else(|| AnalysisError::Factorization { monomial: m.to_string() })?;
    let mut a_shifts = Vec::new();
    for ((node, shift), e) in fact {
        if node == i {
            a_shifts.extend(std::iter::repeat_n(shift, e as usize));
        }
    }
    Ok(DiagonalEntry { node: i, base: b, r: rd.r(i), a_shifts })
}

/// `Y_{j,n}^e -> Y_{j,-n}^{-e}` applied termwise.
pub fn dual_character(chi: &QCharacter) -> QCharacter {
    chi.map_monomials(YMonomial::reflected)
}

/// The same transform for a module based at `q^base`: shifts are reflected about `base`.
pub fn dual_character_at(chi: &QCharacter, base: i32) -> QCharacter {
    dual_character(&chi.shifted(-base)).shifted(base)
}

/// The expected lowest monomial `Y_{bar i, r^v h^v}^-1` of `chi_q(V_{omega_i}(0))`.
pub fn expected_lowest(rd: &RootData, i: usize) -> YMonomial {
    YMonomial::y_pow(rd.bar(i), rd.rh(), -1)
}

/// The character has a unique lowest-weight term, equal to `Y_{bar i, r^v h^v}^-1`
/// with multiplicity one.
pub fn lowest_monomial_check(rd: &RootData, i: usize, chi: &QCharacter) -> bool {
    let lowest = chi.lowest_terms(rd);
    lowest.len() == 1 && lowest[0].0 == expected_lowest(rd, i) && lowest[0].1 == BigUint::from(1u32)
}
