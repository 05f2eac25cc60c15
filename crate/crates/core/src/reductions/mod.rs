//! Instance types of the packing problems and the five reductions between
//! them. Every reduction returns its output instance together with a
//! provenance map (output element -> construction role) and the data its
//! solution maps need.

mod r1;
mod r2;
mod r3;
mod r4;
mod r5;

pub use r1::{r1_lift_solution, r1_modular_to_common, r1_pull_solution, R1Output};
pub use r2::{r2_lift_trees, VariableEdges, r2_naesat_to_modular_trees, r2_pull_assignment, R2Output};
pub use r3::{arcs_of, r3_evenfactor_to_c4k2, r3_factor_to_two_factor, r3_two_factor_to_factor, R3Output};
pub use r4::{r4_c4k2_to_paritybases, r4_parity_to_two_factor, r4_two_factor_to_parity, R4Output};
pub use r5::{r5_lift_solution, r5_pull_solution, r5_to_partition_matroid_case, R5Output};

use serde::Serialize;

use crate::constructions::{graphic_matroid, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::matroid::Matroid;

/// `M` on a ground set of size `2 rank(M)` with a module partition.
#[derive(Debug, Clone)]
pub struct ModularInstance {
    matroid: Matroid,
    modules: PartitionOfGroundSet,
}

impl ModularInstance {
    pub fn new(matroid: Matroid, modules: PartitionOfGroundSet) -> Result<Self> {
        check_partition(&matroid, &modules)?;
        if matroid.size() != 2 * matroid.full_rank() {
            return Err(Error::precondition(format!(
                "modular instance needs |S| = 2 rank(S), got |S| = {} and rank {}",
                matroid.size(),
                matroid.full_rank()
            )));
        }
        Ok(ModularInstance { matroid, modules })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn modules(&self) -> &PartitionOfGroundSet {
        &self.modules
    }
}

/// Two matroids on one ground set and the number `k` of common bases wanted.
#[derive(Debug, Clone)]
pub struct CommonBasesInstance {
    m1: Matroid,
    m2: Matroid,
    k: usize,
}

impl CommonBasesInstance {
    pub fn new(m1: Matroid, m2: Matroid, k: usize) -> Result<Self> {
        if m1.size() != m2.size() {
            return Err(Error::UniverseMismatch {
                expected: m1.size(),
                found: m2.size(),
            });
        }
        if k == 0 {
            return Err(Error::precondition("k must be at least 1"));
        }
        Ok(CommonBasesInstance { m1, m2, k })
    }

    pub fn m1(&self) -> &Matroid {
        &self.m1
    }

    pub fn m2(&self) -> &Matroid {
        &self.m2
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.m1.size()
    }
}

/// `M` with its ground set split into pairs.
#[derive(Debug, Clone)]
pub struct ParityInstance {
    matroid: Matroid,
    pairs: PartitionOfGroundSet,
}

impl ParityInstance {
    pub fn new(matroid: Matroid, pairs: PartitionOfGroundSet) -> Result<Self> {
        check_partition(&matroid, &pairs)?;
        if let Some(b) = pairs.blocks().iter().position(|b| b.len() != 2) {
            return Err(Error::precondition(format!("block {b} is not a pair")));
        }
        Ok(ParityInstance { matroid, pairs })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn pairs(&self) -> &PartitionOfGroundSet {
        &self.pairs
    }
}

/// A multigraph whose edge set is split into modules; asks for two modular
/// spanning trees.
#[derive(Debug, Clone)]
pub struct ModularTreesInstance {
    graph: MultiGraph,
    modules: PartitionOfGroundSet,
}

impl ModularTreesInstance {
    pub fn new(graph: MultiGraph, modules: PartitionOfGroundSet) -> Result<Self> {
        if modules.universe() != graph.edge_count() {
            return Err(Error::UniverseMismatch {
                expected: graph.edge_count(),
                found: modules.universe(),
            });
        }
        Ok(ModularTreesInstance { graph, modules })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn modules(&self) -> &PartitionOfGroundSet {
        &self.modules
    }

    pub fn matroid(&self) -> Matroid {
        graphic_matroid(self.graph.clone())
    }
}

fn check_partition(m: &Matroid, p: &PartitionOfGroundSet) -> Result<()> {
    if p.universe() != m.size() {
        return Err(Error::UniverseMismatch {
            expected: m.size(),
            found: p.universe(),
        });
    }
    Ok(())
}

/// Role of every output element, indexed like the output ground set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub roles: Vec<String>,
}

impl Provenance {
    pub fn role(&self, e: usize) -> &str {
        &self.roles[e]
    }
}
