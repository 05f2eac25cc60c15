//! Polynomial-time matroid intersection and matroid partition (union).
//!
//! Both run on one augmenting-path engine over the exchange graph. Partition
//! into `k` independent sets is intersection of the `k`-fold copy sum of `M`
//! with the partition matroid that allows one copy of each element.

use std::collections::VecDeque;

use serde::Serialize;

use crate::constructions::{direct_sum_all, partition_matroid, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// A maximum-cardinality common independent set of `m1` and `m2`.
///
/// Augments along shortest paths of the exchange graph. BFS visits sources and
/// neighbours in ascending element order, so the result is deterministic.
pub fn max_common_independent(m1: &Matroid, m2: &Matroid) -> Result<ElementSet> {
    if m1.size() != m2.size() {
        return Err(Error::UniverseMismatch {
            expected: m1.size(),
            found: m2.size(),
        });
    }
    let n = m1.size();
    let mut current = ElementSet::empty(n);
    while let Some(path) = shortest_augmenting_path(m1, m2, &current) {
        for e in path {
            if !current.remove(e) {
                current.insert(e);
            }
        }
    }
    Ok(current)
}

fn shortest_augmenting_path(m1: &Matroid, m2: &Matroid, current: &ElementSet) -> Option<Vec<usize>> {
    let n = m1.size();
    let inside: Vec<usize> = current.iter().collect();
    let outside: Vec<usize> = current.complement().iter().collect();

    let sinks: Vec<bool> = (0..n)
        .map(|y| !current.contains(y) && m2.independent(&current.with(y)))
        .collect();

    let mut pred = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &y in &outside {
        if m1.independent(&current.with(y)) {
            seen[y] = true;
            queue.push_back(y);
        }
    }
    while let Some(v) = queue.pop_front() {
        if sinks[v] {
            let mut path = vec![v];
            let mut at = v;
            while pred[at] != usize::MAX {
                at = pred[at];
                path.push(at);
            }
            return Some(path);
        }
        if current.contains(v) {
            // v = x in I: arc x -> y when I - x + y is independent in M1
            let base = current.without(v);
            for &y in &outside {
                if !seen[y] && m1.independent(&base.with(y)) {
                    seen[y] = true;
                    pred[y] = v;
                    queue.push_back(y);
                }
            }
        } else {
            // v = y outside I: arc y -> x when I - x + y is independent in M2
            let plus = current.with(v);
            for &x in &inside {
                if !seen[x] && m2.independent(&plus.without(x)) {
                    seen[x] = true;
                    pred[x] = v;
                    queue.push_back(x);
                }
            }
        }
    }
    None
}

/// Partition the ground set of `m` into at most `k` independent sets, or `None`
/// when impossible. The returned vector always has `k` classes, some possibly
/// empty.
pub fn partition_into_independent(m: &Matroid, k: usize) -> Result<Option<Vec<ElementSet>>> {
    if k == 0 {
        return Err(Error::precondition("partition needs k >= 1"));
    }
    let n = m.size();
    let copies = direct_sum_all(std::iter::repeat(m.clone()).take(k));
    let blocks = (0..n).map(|e| (0..k).map(|j| j * n + e).collect()).collect();
    let one_copy = partition_matroid(PartitionOfGroundSet::new(k * n, blocks)?, vec![1; n])?;
    let common = max_common_independent(&copies, &one_copy)?;
    if common.len() < n {
        return Ok(None);
    }
    Ok(Some((0..k).map(|j| common.slice(j * n, n)).collect()))
}

#[derive(Debug, Clone, Serialize)]
pub struct NecessaryCheck {
    pub k: usize,
    pub ground_size: usize,
    pub rank1: usize,
    pub rank2: usize,
    pub size_condition: bool,
    pub m1_partition: Option<Vec<ElementSet>>,
    pub m2_partition: Option<Vec<ElementSet>>,
}

impl NecessaryCheck {
    pub fn passed(&self) -> bool {
        self.size_condition && self.m1_partition.is_some() && self.m2_partition.is_some()
    }
}

/// `|S| = k r1 = k r2` and both matroids partition into `k` independent sets.
/// Passing does not imply that a partition into common bases exists.
pub fn common_bases_necessary_check(m1: &Matroid, m2: &Matroid, k: usize) -> Result<NecessaryCheck> {
    if m1.size() != m2.size() {
        return Err(Error::UniverseMismatch {
            expected: m1.size(),
            found: m2.size(),
        });
    }
    let n = m1.size();
    let (rank1, rank2) = (m1.full_rank(), m2.full_rank());
    let size_condition = n == k * rank1 && n == k * rank2;
    let (m1_partition, m2_partition) = if size_condition {
        (partition_into_independent(m1, k)?, partition_into_independent(m2, k)?)
    } else {
        (None, None)
    };
    Ok(NecessaryCheck {
        k,
        ground_size: n,
        rank1,
        rank2,
        size_condition,
        m1_partition,
        m2_partition,
    })
}
