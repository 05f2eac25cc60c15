//! Modular bases -> common bases.
//!
//! Every module `P` gets its own gadget copy `S_P` with `l = |P|`. Ground set
//! `S' = S` followed by the `S_P` in module order, so `|S'| = 10 |S|`.
//! `M1` is the `|S'|/2`-truncation of `M` plus all `M'_P`; `M2` sums, per
//! module, the `5|P|`-truncation of `free(P) + M''_P`.

use std::collections::HashMap;

use crate::certificate::{verify_common_bases, verify_modular_bases};
use crate::constructions::{direct_sum, direct_sum_all, free_matroid, permute, truncate};
use crate::error::Result;
use crate::gadget::{build_gadget, element_label, GadgetBlockLabeling, GadgetPair};
use crate::matroid::Matroid;
use crate::reductions::{CommonBasesInstance, ModularInstance, Provenance};
use crate::set::{ElementSet, GroundSet};

#[derive(Debug, Clone)]
pub struct R1Output {
    pub instance: CommonBasesInstance,
    pub source: ModularInstance,
    /// Start of `S_P` in `S'`, per module.
    pub gadget_offsets: Vec<usize>,
    /// Gadget of each module, `l = |P|`.
    pub gadgets: Vec<GadgetPair>,
    pub provenance: Provenance,
}

impl R1Output {
    pub fn source_size(&self) -> usize {
        self.source.matroid().size()
    }

    /// Elements of `S_P` as a set over `S'`.
    pub fn gadget_part(&self, module: usize) -> ElementSet {
        let n = self.instance.size();
        let start = self.gadget_offsets[module];
        ElementSet::from_indices(n, start..start + self.gadgets[module].size())
    }
}

pub fn r1_modular_to_common(inst: &ModularInstance, labeling: &GadgetBlockLabeling) -> Result<R1Output> {
    let m = inst.matroid();
    let modules = inst.modules();
    let n = m.size();

    let mut cache: HashMap<usize, GadgetPair> = HashMap::new();
    let mut gadgets = Vec::with_capacity(modules.len());
    for block in modules.blocks() {
        let ell = block.len();
        if !cache.contains_key(&ell) {
            cache.insert(ell, build_gadget(labeling, ell)?);
        }
        gadgets.push(cache[&ell].clone());
    }

    let mut gadget_offsets = Vec::with_capacity(modules.len());
    let mut labels: Vec<String> = (0..n).map(|e| m.ground().label(e)).collect();
    let mut roles: Vec<String> = labels.iter().map(|l| format!("source {l}")).collect();
    for (idx, g) in gadgets.iter().enumerate() {
        gadget_offsets.push(labels.len());
        for e in 0..g.size() {
            labels.push(format!("P{idx}:{}", element_label(e)));
            roles.push(format!("gadget of module {idx} (l = {}), {}", g.ell, element_label(e)));
        }
    }
    let total = labels.len();
    let ground = GroundSet::labeled(labels)?;

    let m1_sum = direct_sum_all(std::iter::once(m.clone()).chain(gadgets.iter().map(|g| g.prime.clone())));
    let m1 = truncate(&m1_sum, total / 2).relabeled(ground.clone())?;

    // natural layout of the M2 sum: per module, P's elements then S_P
    let mut order = vec![0; total];
    let mut parts: Vec<Matroid> = Vec::with_capacity(modules.len());
    let mut base = 0;
    for (idx, (block, g)) in modules.blocks().iter().zip(&gadgets).enumerate() {
        let p = block.len();
        for (pos, e) in block.iter().enumerate() {
            order[e] = base + pos;
        }
        for e in 0..g.size() {
            order[gadget_offsets[idx] + e] = base + p + e;
        }
        let local = direct_sum(&free_matroid(GroundSet::new(p)), &g.double);
        parts.push(truncate(&local, 5 * p));
        base += 10 * p;
    }
    let m2 = permute(&direct_sum_all(parts), order)?.relabeled(ground)?;

    Ok(R1Output {
        instance: CommonBasesInstance::new(m1, m2, 2)?,
        source: inst.clone(),
        gadget_offsets,
        gadgets,
        provenance: Provenance { roles },
    })
}

/// `B_i = S ∩ B'_i` for a verified partition of `S'` into common bases.
pub fn r1_pull_solution(out: &R1Output, classes: &[ElementSet]) -> Result<Vec<ElementSet>> {
    verify_common_bases(&out.instance, classes)?;
    Ok(classes.iter().map(|c| c.slice(0, out.source_size())).collect())
}

/// `B'_1 = B_1 ∪ {I1_P : P ⊆ B_1} ∪ {I2_P : P ⊆ B_2}` and symmetrically for
/// `B'_2`, where `I1_P` is the gadget's `{a,b,c,i}` class and `I2_P` its
/// `{d,e,f,g,h}` class.
pub fn r1_lift_solution(out: &R1Output, classes: &[ElementSet]) -> Result<Vec<ElementSet>> {
    verify_modular_bases(&out.source, classes)?;
    let total = out.instance.size();
    let mut lifted: Vec<ElementSet> = classes.iter().map(|c| c.embed(total, 0)).collect();
    for (idx, block) in out.source.modules().blocks().iter().enumerate() {
        let g = &out.gadgets[idx];
        let small = g.small_class().embed(total, out.gadget_offsets[idx]);
        let large = g.large_class().embed(total, out.gadget_offsets[idx]);
        let (own, other) = if block.is_subset(&classes[0]) { (0, 1) } else { (1, 0) };
        lifted[own] = lifted[own].union(&small);
        lifted[other] = lifted[other].union(&large);
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{uniform_matroid, PartitionOfGroundSet};
    use crate::gadget::certified_labeling;

    fn u42() -> ModularInstance {
        ModularInstance::new(
            uniform_matroid(GroundSet::new(4), 2).unwrap(),
            PartitionOfGroundSet::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn sizes_and_ranks() {
        let out = r1_modular_to_common(&u42(), certified_labeling()).unwrap();
        assert_eq!(out.instance.size(), 40);
        assert_eq!(out.instance.m1().full_rank(), 20);
        assert_eq!(out.instance.m2().full_rank(), 20);
        assert_eq!(out.instance.m1().ground().label(4), "P0:a_1");
        assert_eq!(out.instance.m2().ground().label(22), "P1:a_1");
        assert_eq!(out.gadget_offsets, vec![4, 22]);
    }

    #[test]
    fn lift_and_pull_u42() {
        let out = r1_modular_to_common(&u42(), certified_labeling()).unwrap();
        let b = vec![ElementSet::from_indices(4, [0, 1]), ElementSet::from_indices(4, [2, 3])];
        let lifted = r1_lift_solution(&out, &b).unwrap();
        assert!(lifted.iter().all(|c| c.len() == 20));
        verify_common_bases(&out.instance, &lifted).unwrap();
        assert_eq!(r1_pull_solution(&out, &lifted).unwrap(), b);
    }

    #[test]
    fn pull_rejects_unverified_input() {
        let out = r1_modular_to_common(&u42(), certified_labeling()).unwrap();
        let bogus = vec![ElementSet::empty(40), ElementSet::full(40)];
        assert!(r1_pull_solution(&out, &bogus).is_err());
    }
}
