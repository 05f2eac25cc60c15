//! Exhaustive checks of the independence axioms (I1)-(I3) and the basis
//! axioms (B1)-(B2), reporting a concrete witness on failure.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::Result;
use crate::matroid::Matroid;
use crate::set::{all_subsets, check_cap, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AxiomOutcome {
    Pass,
    /// `x` and `y` are the witness sets; `missing` is the element whose
    /// absence (I2, B2) or the exchange that fails (I3) explains the violation.
    Fail {
        x: Option<ElementSet>,
        y: Option<ElementSet>,
        detail: String,
    },
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomOutcome::Pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub axioms: Vec<(String, AxiomOutcome)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|(_, o)| o.passed())
    }

    pub fn outcome(&self, name: &str) -> Option<&AxiomOutcome> {
        self.axioms.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }
}

/// Checks (I1)-(I3) for the independent-set family given by `is_indep` over
/// `0..n`. For (I3) it suffices to check pairs with `|Y| = |X| + 1` once (I2)
/// holds.
pub fn check_family_axioms(n: usize, cap: usize, is_indep: impl Fn(&ElementSet) -> bool) -> Result<AxiomReport> {
    check_cap("axiom check", n, cap)?;
    let family: Vec<ElementSet> = all_subsets(n, cap)?.filter(|x| is_indep(x)).collect();
    let members: HashSet<&ElementSet> = family.iter().collect();

    let i1 = if members.contains(&ElementSet::empty(n)) {
        AxiomOutcome::Pass
    } else {
        AxiomOutcome::Fail {
            x: Some(ElementSet::empty(n)),
            y: None,
            detail: "the empty set is dependent".into(),
        }
    };

    let mut i2 = AxiomOutcome::Pass;
    'outer: for y in &family {
        for e in y.iter() {
            let x = y.without(e);
            if !members.contains(&x) {
                i2 = AxiomOutcome::Fail {
                    x: Some(x),
                    y: Some(y.clone()),
                    detail: format!("removing {e} from an independent set gives a dependent set"),
                };
                break 'outer;
            }
        }
    }

    let mut by_size: Vec<Vec<&ElementSet>> = vec![Vec::new(); n + 1];
    for s in &family {
        by_size[s.len()].push(s);
    }
    let mut i3 = AxiomOutcome::Pass;
    'outer3: for k in 0..n {
        for x in &by_size[k] {
            for y in &by_size[k + 1] {
                let ok = y.difference(x).iter().any(|e| members.contains(&x.with(e)));
                if !ok {
                    i3 = AxiomOutcome::Fail {
                        x: Some((*x).clone()),
                        y: Some((*y).clone()),
                        detail: "no element of Y - X extends X".into(),
                    };
                    break 'outer3;
                }
            }
        }
    }

    Ok(AxiomReport {
        axioms: vec![("I1".into(), i1), ("I2".into(), i2), ("I3".into(), i3)],
    })
}

pub fn check_independence_axioms(m: &Matroid, cap: usize) -> Result<AxiomReport> {
    check_family_axioms(m.size(), cap, |x| m.independent(x))
}

/// Checks (B1) non-emptiness and (B2) basis exchange for a family of sets.
pub fn check_basis_axioms(family: &[ElementSet]) -> AxiomReport {
    let b1 = if family.is_empty() {
        AxiomOutcome::Fail {
            x: None,
            y: None,
            detail: "the family of bases is empty".into(),
        }
    } else {
        AxiomOutcome::Pass
    };
    let members: HashSet<&ElementSet> = family.iter().collect();
    let mut b2 = AxiomOutcome::Pass;
    'outer: for b1s in family {
        for b2s in family {
            for u in b1s.difference(b2s).iter() {
                let base = b1s.without(u);
                let ok = b2s.difference(b1s).iter().any(|v| members.contains(&base.with(v)));
                if !ok {
                    b2 = AxiomOutcome::Fail {
                        x: Some(b1s.clone()),
                        y: Some(b2s.clone()),
                        detail: format!("no exchange partner in B2 - B1 for u = {u}"),
                    };
                    break 'outer;
                }
            }
        }
    }
    AxiomReport {
        axioms: vec![("B1".into(), b1), ("B2".into(), b2)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::free_matroid;
    use crate::set::GroundSet;

    #[test]
    fn free_matroid_passes() {
        assert!(check_independence_axioms(&free_matroid(GroundSet::new(5)), 24)
            .unwrap()
            .passed());
    }

    #[test]
    fn non_downward_closed_family_fails_i2() {
        let allowed = [ElementSet::empty(2), ElementSet::from_indices(2, [0, 1])];
        let report = check_family_axioms(2, 24, |x| allowed.contains(x)).unwrap();
        assert!(report.outcome("I1").unwrap().passed());
        match report.outcome("I2").unwrap() {
            AxiomOutcome::Fail { x, y, .. } => {
                assert_eq!(y.as_ref().unwrap(), &ElementSet::from_indices(2, [0, 1]));
                assert_eq!(x.as_ref().unwrap().len(), 1);
            }
            AxiomOutcome::Pass => panic!("I2 should fail"),
        }
    }

    #[test]
    fn i3_failure_has_witness() {
        // {0,1} and {2} independent, but neither {0,2} nor {1,2}
        let allowed: Vec<ElementSet> = [vec![], vec![0], vec![1], vec![2], vec![0, 1]]
            .into_iter()
            .map(|v| ElementSet::from_indices(3, v))
            .collect();
        let report = check_family_axioms(3, 24, |x| allowed.contains(x)).unwrap();
        assert!(report.outcome("I2").unwrap().passed());
        assert!(!report.outcome("I3").unwrap().passed());
    }

    #[test]
    fn basis_axioms() {
        let fam = vec![ElementSet::from_indices(3, [0, 1]), ElementSet::from_indices(3, [1, 2])];
        assert!(check_basis_axioms(&fam).passed());
        let report = check_basis_axioms(&[]);
        assert!(!report.outcome("B1").unwrap().passed());
        let bad = vec![ElementSet::from_indices(4, [0, 1]), ElementSet::from_indices(4, [2, 3])];
        assert!(!check_basis_axioms(&bad).outcome("B2").unwrap().passed());
    }
}
