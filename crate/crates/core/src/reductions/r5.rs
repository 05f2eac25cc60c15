//! General common bases -> the case where one matroid is a partition matroid.
//!
//! For `k = 2`, `M_big = M1 ⊕ M2*` on `S ∪ S#` and `M_part` allows one element
//! of every block `{e, e#1}`. A class of a solution picks `X` from `S` and
//! `(S - X)#` from the copy, so `X` is a basis of `M1` and of `M2` exactly when
//! both classes are bases of both output matroids.

use crate::certificate::verify_common_bases;
use crate::constructions::{direct_sum, dual, parallel_copies, partition_matroid, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::reductions::{CommonBasesInstance, Provenance};
use crate::set::ElementSet;

#[derive(Debug, Clone)]
pub struct R5Output {
    pub instance: CommonBasesInstance,
    pub source: CommonBasesInstance,
    pub partition: PartitionOfGroundSet,
    pub provenance: Provenance,
}

pub fn r5_to_partition_matroid_case(inst: &CommonBasesInstance) -> Result<R5Output> {
    let k = inst.k();
    if k != 2 {
        return Err(Error::precondition(format!("only k = 2 is supported, got k = {k}")));
    }
    let n = inst.size();
    let (r1, r2) = (inst.m1().full_rank(), inst.m2().full_rank());
    if n != k * r1 || n != k * r2 {
        return Err(Error::precondition(format!(
            "need |S| = k r1 = k r2, got |S| = {n}, r1 = {r1}, r2 = {r2}"
        )));
    }
    let copies = parallel_copies(&dual(inst.m2()), k - 1)?;
    let big = direct_sum(inst.m1(), &copies);
    let blocks = (0..n).map(|e| (0..k).map(|j| j * n + e).collect()).collect();
    let partition = PartitionOfGroundSet::new(k * n, blocks)?;
    let part = partition_matroid(partition.clone(), vec![1; n])?.relabeled(big.ground().clone())?;
    let roles = (0..n)
        .map(|e| format!("M1 element {e}"))
        .chain((1..k).flat_map(|j| (0..n).map(move |e| format!("copy {j} of M2* element {e}"))))
        .collect();
    Ok(R5Output {
        instance: CommonBasesInstance::new(big, part, k)?,
        source: inst.clone(),
        partition,
        provenance: Provenance { roles },
    })
}

/// `S ∩ A_i` of a verified output solution.
pub fn r5_pull_solution(out: &R5Output, classes: &[ElementSet]) -> Result<Vec<ElementSet>> {
    verify_common_bases(&out.instance, classes)?;
    Ok(classes.iter().map(|c| c.slice(0, out.source.size())).collect())
}

/// `A_1 = B_1 ∪ B_2#`, `A_2 = B_2 ∪ B_1#`.
pub fn r5_lift_solution(out: &R5Output, classes: &[ElementSet]) -> Result<Vec<ElementSet>> {
    verify_common_bases(&out.source, classes)?;
    let n = out.source.size();
    let total = out.instance.size();
    let lift = |own: &ElementSet, other: &ElementSet| own.embed(total, 0).union(&other.embed(total, n));
    Ok(vec![lift(&classes[0], &classes[1]), lift(&classes[1], &classes[0])])
}
