//! Iterated colored expansion from a dominant seed monomial.
//!
//! Starting from the seed with all colorings zero, monomials are expanded in
//! every rank-one direction in batches of equal weight, highest weights first.
//! Each `i`-expansion multiplies the monomial by the terms of the rank-one
//! irreducible character of its `Y_{i,*}` part (with `A_{i,c}` in place of the
//! rank-one `A`) and merges them back with the max rule on colorings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::character::{ColoredCharacter, ColoredTerm, QCharacter};
use crate::monomial::{a_monomial, YMonomial};
use crate::rootdata::RootData;
use crate::sl2::{node_shifts, sl2_terms};

/// Safety caps on the size of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub max_terms: usize,
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 2_000_000,
            max_steps: 10_000_000,
        }
    }
}

/// How weights of equal height are ordered. Both refine the dominance order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TotalOrder {
    /// Height of `seed - weight`, then lexicographic on root coordinates.
    #[default]
    HeightLex,
    /// Height, then lexicographic on the reversed coordinate vector, descending.
    HeightRevLex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Calls to `i_expand`, including no-ops.
    pub steps: u64,
    /// Expansions that actually added or recolored terms.
    pub expansions: u64,
    /// Times a generated monomial was already present.
    pub merges: u64,
    /// Weight batches processed.
    pub batches: u64,
    pub max_terms: usize,
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} batches, {} steps, {} expansions, {} merges, {} terms",
            self.batches, self.steps, self.expansions, self.merges, self.max_terms
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitKind {
    Terms,
    Steps,
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitKind::Terms => "term",
            LimitKind::Steps => "step",
        })
    }
}

#[derive(Debug, Error, Clone)]
pub enum EngineError {
    #[error("seed {0} is not dominant")]
    NonDominantSeed(String),
    #[error("seed {seed} uses node {node} outside rank {rank}")]
    SeedNodeOutOfRange { seed: String, node: usize, rank: usize },
    #[error("algorithm fails at {monomial}: not {node}-dominant but s_{node} = {color} < s = {coeff}")]
    AdmissibilityFailure {
        monomial: String,
        node: usize,
        coeff: u64,
        color: u64,
        stats: Stats,
        partial: Box<QCharacter>,
    },
    #[error("{kind} limit exceeded ({stats})")]
    LimitExceeded {
        kind: LimitKind,
        stats: Stats,
        partial: Box<QCharacter>,
    },
    #[error("coefficient overflow while expanding {0}")]
    Overflow(String),
    #[error("monomial {0} does not lie below the seed weight")]
    WeightOutsideCone(String),
}

type OrderKey = (i64, Vec<i64>);

/// Working state of one run.
pub struct ExpansionState<'a> {
    rd: &'a RootData,
    seed: YMonomial,
    order: TotalOrder,
    limits: Limits,
    chi: ColoredCharacter,
    frontier: BTreeMap<OrderKey, BTreeSet<YMonomial>>,
    a_cache: HashMap<(usize, i32), YMonomial>,
    stats: Stats,
}

impl<'a> ExpansionState<'a> {
    pub fn new(rd: &'a RootData, seed: YMonomial, order: TotalOrder, limits: Limits) -> Result<Self, EngineError> {
        if !seed.is_dominant() {
            return Err(EngineError::NonDominantSeed(seed.to_string()));
        }
        if let Some(f) = seed.factors().iter().find(|f| f.node == 0 || f.node > rd.rank()) {
            return Err(EngineError::SeedNodeOutOfRange {
                seed: seed.to_string(),
                node: f.node,
                rank: rd.rank(),
            });
        }
        let mut state = ExpansionState {
            rd,
            chi: ColoredCharacter::seed(seed.clone(), rd.rank()),
            seed: seed.clone(),
            order,
            limits,
            frontier: BTreeMap::new(),
            a_cache: HashMap::new(),
            stats: Stats {
                max_terms: 1,
                ..Stats::default()
            },
        };
        let key = state.key(&seed)?;
        state.frontier.entry(key).or_default().insert(seed);
        Ok(state)
    }

    pub fn chi(&self) -> &ColoredCharacter {
        &self.chi
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    pub fn seed(&self) -> &YMonomial {
        &self.seed
    }

    /// Whether unexpanded weights remain.
    pub fn is_done(&self) -> bool {
        self.frontier.is_empty()
    }

    fn key(&self, m: &YMonomial) -> Result<OrderKey, EngineError> {
        let diff = &self.seed.weight(self.rd.rank()) - &m.weight(self.rd.rank());
        let coords = self
            .rd
            .root_coords(diff.coords())
            .filter(|c| c.iter().all(|&x| x >= 0))
            .ok_or_else(|| EngineError::WeightOutsideCone(m.to_string()))?;
        let height = coords.iter().sum();
        Ok(match self.order {
            TotalOrder::HeightLex => (height, coords),
            TotalOrder::HeightRevLex => (height, coords.iter().rev().map(|x| -x).collect()),
        })
    }

    fn a_inverse_product(&mut self, i: usize, centers: &[i32]) -> YMonomial {
        let mut out = YMonomial::one();
        for &c in centers {
            let a = self
                .a_cache
                .entry((i, c))
                .or_insert_with(|| a_monomial(self.rd, i, c));
            out = &out * a;
        }
        out.inverse()
    }

    fn partial(&self) -> Box<QCharacter> {
        Box::new(self.chi.to_character())
    }

    /// The `i`-expansion with respect to `m`, which must be present.
    pub fn i_expand(&mut self, m: &YMonomial, i: usize) -> Result<(), EngineError> {
        self.stats.steps += 1;
        if self.stats.steps > self.limits.max_steps {
            return Err(EngineError::LimitExceeded {
                kind: LimitKind::Steps,
                stats: self.stats,
                partial: self.partial(),
            });
        }
        let term = self.chi.get(m).expect("expanded monomial is present");
        let (s, s_i) = (term.coeff, term.color(i));
        if s_i == s {
            return Ok(());
        }
        if !m.is_i_dominant(i) {
            return Err(EngineError::AdmissibilityFailure {
                monomial: m.to_string(),
                node: i,
                coeff: s,
                color: s_i,
                stats: self.stats,
                partial: self.partial(),
            });
        }
        self.stats.expansions += 1;
        let shifts = node_shifts(m, i).expect("checked i-dominant");
        let gap = s - s_i;
        for t in sl2_terms(&shifts, self.rd.r(i)) {
            let n = m * &self.a_inverse_product(i, &t.centers);
            let add = t
                .mult
                .checked_mul(gap)
                .ok_or_else(|| EngineError::Overflow(m.to_string()))?;
            match self.chi.get_mut(&n) {
                Some(existing) => {
                    self.stats.merges += 1;
                    let colored = existing.colors[i - 1]
                        .checked_add(add)
                        .ok_or_else(|| EngineError::Overflow(m.to_string()))?;
                    existing.colors[i - 1] = colored;
                    existing.coeff = existing.coeff.max(colored);
                }
                None => {
                    let mut colors = vec![0; self.rd.rank()];
                    colors[i - 1] = add;
                    let key = self.key(&n)?;
                    self.frontier.entry(key).or_default().insert(n.clone());
                    self.chi.insert(n, ColoredTerm { coeff: add, colors });
                    self.stats.max_terms = self.stats.max_terms.max(self.chi.len());
                    if self.chi.len() > self.limits.max_terms {
                        return Err(EngineError::LimitExceeded {
                            kind: LimitKind::Terms,
                            stats: self.stats,
                            partial: self.partial(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks admissibility of `m`, then expands it in directions `1..=rank`.
    pub fn expand_all_directions(&mut self, m: &YMonomial) -> Result<(), EngineError> {
        let term = self.chi.get(m).expect("expanded monomial is present");
        for j in self.rd.nodes() {
            if term.color(j) < term.coeff && !m.is_i_dominant(j) {
                return Err(EngineError::AdmissibilityFailure {
                    monomial: m.to_string(),
                    node: j,
                    coeff: term.coeff,
                    color: term.color(j),
                    stats: self.stats,
                    partial: self.partial(),
                });
            }
        }
        for i in self.rd.nodes() {
            self.i_expand(m, i)?;
        }
        Ok(())
    }

    /// Expands every monomial of the highest pending weight. Returns `false`
    /// when nothing was left to expand.
    pub fn step_batch(&mut self) -> Result<bool, EngineError> {
        let Some((_, batch)) = self.frontier.pop_first() else {
            return Ok(false);
        };
        self.stats.batches += 1;
        for m in &batch {
            self.expand_all_directions(m)?;
        }
        Ok(true)
    }

    pub fn into_character(self) -> QCharacter {
        self.chi.to_character()
    }
}

/// Options for [`run_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub limits: Limits,
    pub order: TotalOrder,
}

/// Runs the expansion to completion with default order.
pub fn run(rd: &RootData, seed: &YMonomial, limits: Limits) -> Result<QCharacter, EngineError> {
    run_with(rd, seed, RunOptions { limits, ..RunOptions::default() }, |_| {})
}

/// Runs the expansion, calling `progress` after each weight batch.
pub fn run_with<F: FnMut(&Stats)>(
    rd: &RootData,
    seed: &YMonomial,
    options: RunOptions,
    mut progress: F,
) -> Result<QCharacter, EngineError> {
    let mut state = ExpansionState::new(rd, seed.clone(), options.order, options.limits)?;
    while state.step_batch()? {
        progress(&state.stats);
    }
    debug_assert!(state.chi.check_colorings(seed).is_ok());
    Ok(state.into_character())
}

/// The fundamental seed `Y_{i,0}`.
pub fn fundamental_seed(i: usize) -> YMonomial {
    YMonomial::y(i, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::LieType;

    fn m(s: &str) -> YMonomial {
        s.parse().unwrap()
    }

    fn rd(t: LieType, n: usize) -> RootData {
        RootData::new(t, n).unwrap()
    }

    #[test]
    fn sl2_fundamental() {
        let a1 = rd(LieType::A, 1);
        let chi = run(&a1, &m("Y{1,0}"), Limits::default()).unwrap();
        assert_eq!(chi, QCharacter::from_terms([(m("Y{1,0}"), 1u32), (m("Y{1,2}^-1"), 1u32)]));
    }

    #[test]
    fn single_expansions() {
        let a1 = rd(LieType::A, 1);
        let mut st = ExpansionState::new(&a1, m("Y{1,0}"), TotalOrder::HeightLex, Limits::default()).unwrap();
        st.i_expand(&m("Y{1,0}"), 1).unwrap();
        let t = st.chi().get(&m("Y{1,2}^-1")).unwrap();
        assert_eq!((t.coeff, t.colors.clone()), (1, vec![1]));
        // Now s_1 = s for the seed, so expanding again is a no-op.
        let before: Vec<_> = st.chi().to_character().terms().map(|(a, b)| (a.clone(), b.clone())).collect();
        st.i_expand(&m("Y{1,0}"), 1).unwrap();
        let after: Vec<_> = st.chi().to_character().terms().map(|(a, b)| (a.clone(), b.clone())).collect();
        assert_eq!(before, after);

        let a2 = rd(LieType::A, 2);
        let mut st = ExpansionState::new(&a2, m("Y{1,0}"), TotalOrder::HeightLex, Limits::default()).unwrap();
        st.i_expand(&m("Y{1,0}"), 1).unwrap();
        let mid = m("Y{1,2}^-1 * Y{2,1}");
        assert!(st.chi().get(&mid).is_some());
        st.i_expand(&mid, 2).unwrap();
        assert!(st.chi().get(&m("Y{2,3}^-1")).is_some());
    }

    #[test]
    fn a2_first_fundamental() {
        let a2 = rd(LieType::A, 2);
        let chi = run(&a2, &m("Y{1,0}"), Limits::default()).unwrap();
        assert_eq!(
            chi,
            QCharacter::from_terms([
                (m("Y{1,0}"), 1u32),
                (m("Y{1,2}^-1 * Y{2,1}"), 1u32),
                (m("Y{2,3}^-1"), 1u32),
            ])
        );
    }

    #[test]
    fn kr_seed_in_rank_one() {
        let a1 = rd(LieType::A, 1);
        let chi = run(&a1, &m("Y{1,0} * Y{1,2}"), Limits::default()).unwrap();
        assert_eq!(chi.len(), 3);
        assert_eq!(chi, crate::sl2::irreducible_sl2_character(&m("Y{1,0} * Y{1,2}"), 1, 1).unwrap());
    }

    #[test]
    fn rejects_bad_seeds() {
        let a2 = rd(LieType::A, 2);
        assert!(matches!(
            run(&a2, &m("Y{1,0}^-1"), Limits::default()),
            Err(EngineError::NonDominantSeed(_))
        ));
        assert!(matches!(
            run(&a2, &m("Y{3,0}"), Limits::default()),
            Err(EngineError::SeedNodeOutOfRange { node: 3, .. })
        ));
    }

    #[test]
    fn limits_are_enforced() {
        let d4 = rd(LieType::D, 4);
        let tight = Limits { max_terms: 5, max_steps: 1_000 };
        match run(&d4, &m("Y{2,0}"), tight) {
            Err(EngineError::LimitExceeded { kind: LimitKind::Terms, partial, .. }) => {
                assert!(partial.len() > 5);
            }
            other => panic!("expected term limit, got {other:?}"),
        }
        let tight = Limits { max_terms: 1_000, max_steps: 3 };
        assert!(matches!(
            run(&d4, &m("Y{2,0}"), tight),
            Err(EngineError::LimitExceeded { kind: LimitKind::Steps, .. })
        ));
    }

    #[test]
    fn orders_agree_and_colorings_hold() {
        let b3 = rd(LieType::B, 3);
        for i in b3.nodes() {
            let seed = fundamental_seed(i);
            let mut a = ExpansionState::new(&b3, seed.clone(), TotalOrder::HeightLex, Limits::default()).unwrap();
            while a.step_batch().unwrap() {}
            a.chi().check_colorings(&seed).unwrap();
            let b = run_with(
                &b3,
                &seed,
                RunOptions { order: TotalOrder::HeightRevLex, ..RunOptions::default() },
                |_| {},
            )
            .unwrap();
            assert_eq!(a.into_character(), b);
        }
    }

    #[test]
    fn progress_is_reported() {
        let a3 = rd(LieType::A, 3);
        let mut calls = 0;
        let chi = run_with(&a3, &m("Y{2,0}"), RunOptions::default(), |_| calls += 1).unwrap();
        assert_eq!(chi.len(), 6);
        assert!(calls >= 5);
    }
}
