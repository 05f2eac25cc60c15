//! Two paving matroids that differ only on a hidden pair of sets.
//!
//! On `4t` elements split into `2t` pairs, `M` makes every parity set of size
//! `2t` (a union of `t` pairs) a non-basis, so no partition into two parity
//! bases exists. `M0` additionally keeps `X0` and `S - X0` as bases, which
//! makes `X0 ∪ (S - X0)` a solution. An algorithm that never asks about `X0`
//! or `S - X0` sees identical answers from both.

use serde::Serialize;

use crate::constructions::{paving_matroid, HyperplaneFamily, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::matroid::{with_query_log, Matroid};
use crate::reductions::ParityInstance;
use crate::set::{all_subsets, k_subsets, ElementSet};
use crate::solvers::solve_parity_bases;

#[derive(Debug, Clone)]
pub struct AdversaryPair {
    pub t: usize,
    pub pairing: PartitionOfGroundSet,
    pub x0: ElementSet,
    /// Parity `2t`-sets: the hyperplanes of `M`.
    pub hyperplanes: Vec<ElementSet>,
    pub m: Matroid,
    pub m0: Matroid,
}

impl AdversaryPair {
    pub fn ground_size(&self) -> usize {
        4 * self.t
    }

    /// `{X0, S - X0}`.
    pub fn hidden_sets(&self) -> [ElementSet; 2] {
        [self.x0.clone(), self.x0.complement()]
    }
}

/// Unions of `t` of the pairs.
pub fn parity_sets(pairing: &PartitionOfGroundSet, t: usize) -> Vec<ElementSet> {
    let ids: Vec<usize> = (0..pairing.len()).collect();
    k_subsets(&ids, t).map(|chosen| pairing.union_of(chosen)).collect()
}

/// Build `(M, M0)`. Defaults: pairs `{2i, 2i+1}` and `X0` the first `t` pairs.
pub fn build_adversary(t: usize, pairing: Option<PartitionOfGroundSet>, x0: Option<ElementSet>) -> Result<AdversaryPair> {
    if t == 0 {
        return Err(Error::precondition("t must be at least 1"));
    }
    let n = 4 * t;
    let pairing = match pairing {
        Some(p) => p,
        None => PartitionOfGroundSet::consecutive_pairs(n)?,
    };
    if pairing.universe() != n || pairing.len() != 2 * t || pairing.blocks().iter().any(|b| b.len() != 2) {
        return Err(Error::precondition(format!("pairing must split {n} elements into {} pairs", 2 * t)));
    }
    let x0 = x0.unwrap_or_else(|| pairing.union_of(0..t));
    if x0.universe() != n || x0.len() != 2 * t || !pairing.is_modular(&x0) {
        return Err(Error::precondition(format!("X0 = {x0} is not a parity set of size {}", 2 * t)));
    }
    let hyperplanes = parity_sets(&pairing, t);
    let complement = x0.complement();
    let reduced: Vec<ElementSet> = hyperplanes
        .iter()
        .filter(|h| **h != x0 && **h != complement)
        .cloned()
        .collect();
    let m = paving_matroid(HyperplaneFamily::new(n, 2 * t, hyperplanes.clone())?);
    let m0 = paving_matroid(HyperplaneFamily::new(n, 2 * t, reduced)?);
    Ok(AdversaryPair {
        t,
        pairing,
        x0,
        hyperplanes,
        m,
        m0,
    })
}

/// Number of choices of `X0`: parity `2t`-sets, `C(2t, t)`.
pub fn count_parity_hiding_sets(t: usize) -> u64 {
    assert!(t <= 16, "t = {t} exceeds 16");
    (0..t as u64).fold(1u64, |acc, i| acc * (2 * t as u64 - i) / (i + 1))
}

/// Every subset on which `M` and `M0` answer differently.
pub fn disagreements(pair: &AdversaryPair, cap: usize) -> Result<Vec<ElementSet>> {
    Ok(all_subsets(pair.ground_size(), cap)?
        .filter(|x| pair.m.independent(x) != pair.m0.independent(x))
        .collect())
}

/// A procedure under test: sees only an oracle handle and the pairing, and
/// answers whether a partition into two parity bases exists.
pub trait OracleSolver {
    fn name(&self) -> &str;
    fn decide(&self, oracle: &Matroid, pairing: &PartitionOfGroundSet) -> Result<bool>;
}

/// Built-in procedures for the experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinSolver {
    /// [`solve_parity_bases`]: backtracking over pairs.
    ParityBases,
    /// Queries every subset in order of size, then decides from the answers.
    SizeOrderSweep,
    /// Queries every subset except parity `2t`-sets and answers NO. Wrong on
    /// `M0`, and the experiment shows it cannot tell.
    AvoidParitySets,
}

impl BuiltinSolver {
    pub const ALL: [BuiltinSolver; 3] = [
        BuiltinSolver::ParityBases,
        BuiltinSolver::SizeOrderSweep,
        BuiltinSolver::AvoidParitySets,
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::Format(format!("unknown adversary solver {name:?}")))
    }
}

fn sets_by_size(n: usize) -> Result<Vec<ElementSet>> {
    let mut all: Vec<ElementSet> = all_subsets(n, n)?.collect();
    all.sort_by_key(ElementSet::len);
    Ok(all)
}

impl OracleSolver for BuiltinSolver {
    fn name(&self) -> &str {
        match self {
            BuiltinSolver::ParityBases => "parity-bases",
            BuiltinSolver::SizeOrderSweep => "size-order",
            BuiltinSolver::AvoidParitySets => "avoid-parity",
        }
    }

    fn decide(&self, oracle: &Matroid, pairing: &PartitionOfGroundSet) -> Result<bool> {
        let n = oracle.size();
        match self {
            BuiltinSolver::ParityBases => {
                let inst = ParityInstance::new(oracle.clone(), pairing.clone())?;
                Ok(solve_parity_bases(&inst, pairing.len())?.is_some())
            }
            BuiltinSolver::SizeOrderSweep => {
                let independent: Vec<ElementSet> = sets_by_size(n)?.into_iter().filter(|x| oracle.independent(x)).collect();
                let r = independent.iter().map(ElementSet::len).max().unwrap_or(0);
                Ok(2 * r == n
                    && independent
                        .iter()
                        .any(|x| x.len() == r && pairing.is_modular(x) && independent.contains(&x.complement())))
            }
            BuiltinSolver::AvoidParitySets => {
                for x in sets_by_size(n)? {
                    if !(2 * x.len() == n && pairing.is_modular(&x)) {
                        oracle.independent(&x);
                    }
                }
                Ok(false)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub t: usize,
    pub solver: String,
    /// Distinct queries issued against `M0`.
    pub total_queries: usize,
    /// Distinct queries issued against `M`.
    pub total_queries_m: usize,
    /// Position (0-based, in the `M0` run's query log) of the first query
    /// answered differently by `M` and `M0`.
    pub distinguishing_query_index: Option<usize>,
    pub distinguishing_set: Option<Vec<usize>>,
    /// Every differing query of either run is `X0` or `S - X0`, and the two
    /// runs coincide query for query up to the first one.
    pub agreement_verified: bool,
    pub answer_m: bool,
    pub answer_m0: bool,
}

/// Run `solver` on logged handles of `M0` and `M`, then replay both logs
/// against both matroids.
pub fn run_indistinguishability(pair: &AdversaryPair, solver: &dyn OracleSolver) -> Result<ExperimentReport> {
    let (logged_m0, log_m0) = with_query_log(&pair.m0);
    let answer_m0 = solver.decide(&logged_m0, &pair.pairing)?;
    let (logged_m, log_m) = with_query_log(&pair.m);
    let answer_m = solver.decide(&logged_m, &pair.pairing)?;

    let q0 = log_m0.queries();
    let qm = log_m.queries();
    let differs = |x: &ElementSet| pair.m.independent(x) != pair.m0.independent(x);
    let hidden = pair.hidden_sets();
    let first = q0.iter().position(differs);
    let first_m = qm.iter().position(differs);

    let only_hidden = q0.iter().chain(&qm).filter(|x| differs(x)).all(|x| hidden.contains(x));
    // a deterministic solver must issue the same queries until the first
    // differing answer
    let prefix = first.unwrap_or(q0.len()).min(first_m.unwrap_or(qm.len()));
    let same_prefix = q0[..prefix] == qm[..prefix];
    let answers_explained = answer_m == answer_m0 || (first.is_some() && first_m.is_some());

    Ok(ExperimentReport {
        t: pair.t,
        solver: solver.name().to_string(),
        total_queries: q0.len(),
        total_queries_m: qm.len(),
        distinguishing_query_index: first,
        distinguishing_set: first.map(|i| q0[i].to_vec()),
        agreement_verified: only_hidden && same_prefix && answers_explained,
        answer_m,
        answer_m0,
    })
}
