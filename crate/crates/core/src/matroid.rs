//! The independence-oracle matroid, derived rank/basis queries and query
//! accounting.
//!
//! A [`Matroid`] is an immutable, cheaply clonable handle. Every construction in
//! [`crate::constructions`] produces one; all derived quantities go through
//! [`Matroid::independent`], so wrapping a matroid with [`with_query_log`]
//! observes every underlying independence query.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::constructions::{HyperplaneFamily, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::field::MatrixOverField;
use crate::graph::{BipartiteGraph, MultiGraph};
use crate::set::{all_subsets, check_cap, ElementSet, GroundSet};

pub type OracleFn = dyn Fn(&ElementSet) -> bool + Send + Sync;

pub(crate) enum Node {
    Free,
    Uniform {
        rank: usize,
    },
    Partition {
        partition: PartitionOfGroundSet,
        caps: Vec<usize>,
    },
    Graphic(MultiGraph),
    Transversal(BipartiteGraph),
    Paving(HyperplaneFamily),
    Linear(MatrixOverField),
    DirectSum {
        parts: Vec<Matroid>,
        offsets: Vec<usize>,
    },
    Truncate {
        inner: Matroid,
        k: usize,
    },
    Dual {
        inner: Matroid,
    },
    ParallelCopies {
        inner: Matroid,
        k: usize,
    },
    /// New element `i` is `inner` element `order[i]`.
    Permute {
        inner: Matroid,
        order: Vec<usize>,
    },
    Oracle {
        name: String,
        f: Arc<OracleFn>,
    },
    Logged {
        inner: Matroid,
        log: QueryLog,
    },
}

struct Inner {
    ground: GroundSet,
    node: Node,
    full_rank: OnceLock<usize>,
}

/// A matroid over a dense ground set, accessed through its independence oracle.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("kind", &self.kind_name())
            .field("size", &self.size())
            .finish()
    }
}

impl Matroid {
    pub(crate) fn from_node(ground: GroundSet, node: Node) -> Self {
        Matroid {
            inner: Arc::new(Inner {
                ground,
                node,
                full_rank: OnceLock::new(),
            }),
        }
    }

    /// A matroid backed by an arbitrary oracle closure. The closure must satisfy
    /// the independence axioms; [`crate::axioms::check_independence_axioms`]
    /// can confirm that at desk scale.
    pub fn from_oracle<F>(ground: GroundSet, name: impl Into<String>, f: F) -> Self
    where
        F: Fn(&ElementSet) -> bool + Send + Sync + 'static,
    {
        Self::from_node(
            ground,
            Node::Oracle {
                name: name.into(),
                f: Arc::new(f),
            },
        )
    }

    pub(crate) fn node(&self) -> &Node {
        &self.inner.node
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn size(&self) -> usize {
        self.inner.ground.size()
    }

    /// Same oracle, different labels.
    pub fn relabeled(&self, ground: GroundSet) -> Result<Matroid> {
        if ground.size() != self.size() {
            return Err(Error::UniverseMismatch {
                expected: self.size(),
                found: ground.size(),
            });
        }
        let order = (0..self.size()).collect();
        Ok(Self::from_node(
            ground,
            Node::Permute {
                inner: self.clone(),
                order,
            },
        ))
    }

    pub fn kind_name(&self) -> &str {
        match self.node() {
            Node::Free => "free",
            Node::Uniform { .. } => "uniform",
            Node::Partition { .. } => "partition",
            Node::Graphic(_) => "graphic",
            Node::Transversal(_) => "transversal",
            Node::Paving(_) => "paving",
            Node::Linear(_) => "linear",
            Node::DirectSum { .. } => "direct_sum",
            Node::Truncate { .. } => "truncate",
            Node::Dual { .. } => "dual",
            Node::ParallelCopies { .. } => "parallel_copies",
            Node::Permute { .. } => "permute",
            Node::Oracle { name, .. } => name,
            Node::Logged { .. } => "logged",
        }
    }

    fn check(&self, set: &ElementSet) -> Result<()> {
        if set.universe() != self.size() {
            return Err(Error::UniverseMismatch {
                expected: self.size(),
                found: set.universe(),
            });
        }
        Ok(())
    }

    /// Independence query with a universe check.
    pub fn is_independent(&self, set: &ElementSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.independent(set))
    }

    /// Independence query. Panics if `set` is over a different universe.
    pub fn independent(&self, set: &ElementSet) -> bool {
        assert_eq!(set.universe(), self.size(), "set over the wrong universe");
        match self.node() {
            Node::Free => true,
            Node::Uniform { rank } => set.len() <= *rank,
            Node::Partition { partition, caps } => {
                let mut counts = vec![0usize; caps.len()];
                set.iter().all(|e| {
                    let b = partition.block_of(e);
                    counts[b] += 1;
                    counts[b] <= caps[b]
                })
            }
            Node::Graphic(g) => g.is_forest(set),
            Node::Transversal(g) => g.saturates(set),
            Node::Paving(h) => h.is_independent(set),
            Node::Linear(a) => a.columns_independent(set),
            Node::DirectSum { parts, offsets } => parts
                .iter()
                .zip(offsets)
                .all(|(m, &off)| m.independent(&set.slice(off, m.size()))),
            Node::Truncate { inner, k } => set.len() <= *k && inner.independent(set),
            Node::Dual { inner } => {
                let rest = set.complement();
                inner.rank_of(&rest) == inner.full_rank()
            }
            Node::ParallelCopies { inner, k: _ } => {
                let n = inner.size();
                let mut projected = ElementSet::empty(n);
                for e in set.iter() {
                    if !projected.insert(e % n) {
                        return false;
                    }
                }
                inner.independent(&projected)
            }
            Node::Permute { inner, order } => {
                let mapped = ElementSet::from_indices(inner.size(), set.iter().map(|i| order[i]));
                inner.independent(&mapped)
            }
            Node::Oracle { f, .. } => f(set),
            Node::Logged { inner, log } => {
                log.record(set);
                inner.independent(set)
            }
        }
    }

    /// Greedy rank: scan `set` in ascending index order, keeping an element iff
    /// the kept set stays independent.
    pub fn rank(&self, set: &ElementSet) -> Result<usize> {
        self.check(set)?;
        Ok(self.rank_of(set))
    }

    pub fn rank_of(&self, set: &ElementSet) -> usize {
        self.greedy_basis(set).len()
    }

    /// The greedy maximal independent subset of `set`.
    pub fn greedy_basis(&self, set: &ElementSet) -> ElementSet {
        let mut kept = ElementSet::empty(self.size());
        for e in set.iter() {
            kept.insert(e);
            if !self.independent(&kept) {
                kept.remove(e);
            }
        }
        kept
    }

    pub fn full_rank(&self) -> usize {
        *self
            .inner
            .full_rank
            .get_or_init(|| self.rank_of(&ElementSet::full(self.size())))
    }

    pub fn is_basis(&self, set: &ElementSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.basis(set))
    }

    pub fn basis(&self, set: &ElementSet) -> bool {
        set.len() == self.full_rank() && self.independent(set)
    }

    /// Every basis, in increasing bitset order.
    pub fn enumerate_bases(&self, cap: usize) -> Result<Vec<ElementSet>> {
        check_cap("enumerate_bases", self.size(), cap)?;
        let r = self.full_rank();
        Ok(all_subsets(self.size(), cap)?
            .filter(|x| x.len() == r && self.independent(x))
            .collect())
    }

    /// Oracle equality on every subset of the ground set.
    pub fn oracle_equivalent(&self, other: &Matroid, cap: usize) -> Result<bool> {
        if self.size() != other.size() {
            return Ok(false);
        }
        Ok(all_subsets(self.size(), cap)?.all(|x| self.independent(&x) == other.independent(&x)))
    }
}

#[derive(Default)]
struct LogState {
    seen: HashSet<ElementSet>,
    order: Vec<ElementSet>,
}

/// Distinct independence queries in first-query order.
///
/// The log is shared between clones and is safe under concurrent appends: a
/// mutex guards the sequence and its dedup index together.
#[derive(Clone, Default)]
pub struct QueryLog {
    state: Arc<Mutex<LogState>>,
}

impl QueryLog {
    fn record(&self, set: &ElementSet) {
        let mut st = self.state.lock().expect("query log poisoned");
        if st.seen.insert(set.clone()) {
            st.order.push(set.clone());
        }
    }

    pub fn count(&self) -> usize {
        self.state.lock().expect("query log poisoned").order.len()
    }

    pub fn queries(&self) -> Vec<ElementSet> {
        self.state.lock().expect("query log poisoned").order.clone()
    }

    pub fn clear(&self) {
        let mut st = self.state.lock().expect("query log poisoned");
        st.seen.clear();
        st.order.clear();
    }
}

impl fmt::Debug for QueryLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QueryLog").field("count", &self.count()).finish()
    }
}

/// Wrap `m` so that every distinct independence query is logged. The wrapper
/// answers exactly as `m` does.
pub fn with_query_log(m: &Matroid) -> (Matroid, QueryLog) {
    let log = QueryLog::default();
    let wrapped = Matroid::from_node(
        m.ground().clone(),
        Node::Logged {
            inner: m.clone(),
            log: log.clone(),
        },
    );
    (wrapped, log)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{free_matroid, graphic_matroid, uniform_matroid};

    #[test]
    fn empty_set_is_independent() {
        let m = uniform_matroid(GroundSet::new(4), 2).unwrap();
        assert!(m.is_independent(&ElementSet::empty(4)).unwrap());
        assert!(!m.is_independent(&ElementSet::from_indices(4, [0, 1, 2])).unwrap());
    }

    #[test]
    fn universe_mismatch_is_a_domain_error() {
        let m = free_matroid(GroundSet::new(3));
        assert!(matches!(
            m.is_independent(&ElementSet::empty(4)),
            Err(Error::UniverseMismatch { expected: 3, found: 4 })
        ));
        assert!(m.rank(&ElementSet::empty(2)).is_err());
    }

    #[test]
    fn rank_and_bases() {
        let u42 = uniform_matroid(GroundSet::new(4), 2).unwrap();
        assert_eq!(u42.rank(&ElementSet::full(4)).unwrap(), 2);
        assert!(u42.is_basis(&ElementSet::from_indices(4, [0, 1])).unwrap());
        assert!(!u42.is_basis(&ElementSet::from_indices(4, [0])).unwrap());
        let free = free_matroid(GroundSet::new(5));
        assert_eq!(free.rank(&ElementSet::from_indices(5, [1, 3, 4])).unwrap(), 3);
        let u31 = uniform_matroid(GroundSet::new(3), 1).unwrap();
        let bases = u31.enumerate_bases(24).unwrap();
        assert_eq!(
            bases,
            vec![
                ElementSet::from_indices(3, [0]),
                ElementSet::from_indices(3, [1]),
                ElementSet::from_indices(3, [2])
            ]
        );
    }

    #[test]
    fn triangle_bases_are_spanning_trees() {
        let tri = graphic_matroid(MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
        assert!(!tri.independent(&ElementSet::full(3)));
        let bases = tri.enumerate_bases(24).unwrap();
        assert_eq!(bases.len(), 3);
        assert!(bases.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn enumerate_bases_respects_cap() {
        let m = free_matroid(GroundSet::new(30));
        assert!(matches!(m.enumerate_bases(24), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn query_log_deduplicates() {
        let m = uniform_matroid(GroundSet::new(4), 2).unwrap();
        let (logged, log) = with_query_log(&m);
        logged.independent(&ElementSet::empty(4));
        logged.independent(&ElementSet::empty(4));
        assert_eq!(log.count(), 1);
        logged.independent(&ElementSet::from_indices(4, [0]));
        logged.independent(&ElementSet::from_indices(4, [0, 1]));
        assert_eq!(log.count(), 3);
    }

    #[test]
    fn greedy_rank_issues_one_query_per_element() {
        let m = uniform_matroid(GroundSet::new(4), 2).unwrap();
        let (logged, log) = with_query_log(&m);
        assert_eq!(logged.rank(&ElementSet::full(4)).unwrap(), 2);
        // {0}, {0,1}, {0,1,2}, {0,1,3}
        assert_eq!(log.count(), 4);
        assert_eq!(
            log.queries(),
            vec![
                ElementSet::from_indices(4, [0]),
                ElementSet::from_indices(4, [0, 1]),
                ElementSet::from_indices(4, [0, 1, 2]),
                ElementSet::from_indices(4, [0, 1, 3]),
            ]
        );
    }

    #[test]
    fn query_log_is_safe_under_concurrent_appends() {
        use rayon::prelude::*;
        let m = free_matroid(GroundSet::new(10));
        let (logged, log) = with_query_log(&m);
        (0u64..1024).into_par_iter().for_each(|mask| {
            logged.independent(&ElementSet::from_mask(10, mask));
            logged.independent(&ElementSet::from_mask(10, mask));
        });
        assert_eq!(log.count(), 1024);
    }
}
