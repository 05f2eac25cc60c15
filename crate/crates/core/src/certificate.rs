//! Problems, instances, certificates and their polynomial-time verification.
//!
//! Verification checks only the defining conditions through oracles, degree
//! counts and cycle lengths; it never enumerates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cnf::CnfFormula;
use crate::constructions::PartitionOfGroundSet;
use crate::error::{Error, Result};
use crate::graph::{cycle_factor_lengths, two_factor_cycle_lengths, BipartiteGraph, Digraph};
use crate::matroid::Matroid;
use crate::reductions::{CommonBasesInstance, ModularInstance, ModularTreesInstance, ParityInstance};
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    CommonBases,
    ModularBases,
    ParityBases,
    ModularTrees,
    Naesat,
    PerfectEvenFactor,
    #[serde(rename = "c4k2-2factor")]
    C4k2TwoFactor,
}

impl Problem {
    pub const ALL: [Problem; 7] = [
        Problem::CommonBases,
        Problem::ModularBases,
        Problem::ParityBases,
        Problem::ModularTrees,
        Problem::Naesat,
        Problem::PerfectEvenFactor,
        Problem::C4k2TwoFactor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::CommonBases => "common-bases",
            Problem::ModularBases => "modular-bases",
            Problem::ParityBases => "parity-bases",
            Problem::ModularTrees => "modular-trees",
            Problem::Naesat => "naesat",
            Problem::PerfectEvenFactor => "perfect-even-factor",
            Problem::C4k2TwoFactor => "c4k2-2factor",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Problem::ALL.iter().map(|p| p.name()).collect();
                Error::Format(format!("unknown problem {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone)]
pub enum Instance {
    CommonBases(CommonBasesInstance),
    ModularBases(ModularInstance),
    ParityBases(ParityInstance),
    ModularTrees(ModularTreesInstance),
    Naesat(CnfFormula),
    PerfectEvenFactor(Digraph),
    C4k2TwoFactor(BipartiteGraph),
}

impl Instance {
    pub fn problem(&self) -> Problem {
        match self {
            Instance::CommonBases(_) => Problem::CommonBases,
            Instance::ModularBases(_) => Problem::ModularBases,
            Instance::ParityBases(_) => Problem::ParityBases,
            Instance::ModularTrees(_) => Problem::ModularTrees,
            Instance::Naesat(_) => Problem::Naesat,
            Instance::PerfectEvenFactor(_) => Problem::PerfectEvenFactor,
            Instance::C4k2TwoFactor(_) => Problem::C4k2TwoFactor,
        }
    }
}

/// Witness of a YES answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Partition of the ground (or edge) set into classes.
    Partition(Vec<ElementSet>),
    /// Truth value per variable.
    Assignment(Vec<bool>),
    /// Indices into the digraph's arc list.
    ArcSet(Vec<usize>),
    /// Indices into the bipartite graph's edge list.
    EdgeSet(Vec<usize>),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Partition(_) => "partition",
            Certificate::Assignment(_) => "assignment",
            Certificate::ArcSet(_) => "arc_set",
            Certificate::EdgeSet(_) => "edge_set",
        }
    }

    pub fn classes(&self) -> Option<&[ElementSet]> {
        match self {
            Certificate::Partition(c) => Some(c),
            _ => None,
        }
    }
}

fn reject<T>(reason: impl Into<String>) -> Result<T> {
    Err(Error::certificate(reason))
}

fn expect_partition<'a>(cert: &'a Certificate, problem: Problem) -> Result<&'a [ElementSet]> {
    cert.classes()
        .ok_or_else(|| Error::certificate(format!("{problem} needs a partition certificate, got {}", cert.kind())))
}

/// `classes` must be pairwise disjoint, cover `0..n`, and number `k`.
fn check_partition_shape(classes: &[ElementSet], n: usize, k: usize) -> Result<()> {
    if classes.len() != k {
        return reject(format!("expected {k} classes, got {}", classes.len()));
    }
    let mut covered = ElementSet::empty(n);
    for (i, c) in classes.iter().enumerate() {
        if c.universe() != n {
            return reject(format!("class {i} is over {} elements, expected {n}", c.universe()));
        }
        if !c.is_disjoint(&covered) {
            return reject(format!("class {i} overlaps an earlier class"));
        }
        covered = covered.union(c);
    }
    if covered.len() != n {
        let missing = covered.complement().first().expect("uncovered element");
        return reject(format!("element {missing} is in no class"));
    }
    Ok(())
}

fn check_bases(m: &Matroid, classes: &[ElementSet], which: &str) -> Result<()> {
    for (i, c) in classes.iter().enumerate() {
        if !m.independent(c) {
            return reject(format!("class {i} is dependent in {which}"));
        }
        if c.len() != m.full_rank() {
            return reject(format!(
                "class {i} has {} elements but {which} has rank {}",
                c.len(),
                m.full_rank()
            ));
        }
    }
    Ok(())
}

fn check_modular(modules: &PartitionOfGroundSet, classes: &[ElementSet]) -> Result<()> {
    for (i, c) in classes.iter().enumerate() {
        if let Some(b) = modules.blocks().iter().position(|b| !(b.is_subset(c) || b.is_disjoint(c))) {
            return reject(format!("class {i} splits module {b}"));
        }
    }
    Ok(())
}

pub fn verify_common_bases(inst: &CommonBasesInstance, classes: &[ElementSet]) -> Result<()> {
    check_partition_shape(classes, inst.size(), inst.k())?;
    check_bases(inst.m1(), classes, "M1")?;
    check_bases(inst.m2(), classes, "M2")
}

pub fn verify_modular_bases(inst: &ModularInstance, classes: &[ElementSet]) -> Result<()> {
    check_partition_shape(classes, inst.matroid().size(), 2)?;
    check_modular(inst.modules(), classes)?;
    check_bases(inst.matroid(), classes, "M")
}

pub fn verify_parity_bases(inst: &ParityInstance, classes: &[ElementSet]) -> Result<()> {
    check_partition_shape(classes, inst.matroid().size(), 2)?;
    check_modular(inst.pairs(), classes)?;
    check_bases(inst.matroid(), classes, "M")
}

pub fn verify_modular_trees(inst: &ModularTreesInstance, classes: &[ElementSet]) -> Result<()> {
    let g = inst.graph();
    check_partition_shape(classes, g.edge_count(), 2)?;
    check_modular(inst.modules(), classes)?;
    let spanning = g.vertex_count().saturating_sub(1);
    for (i, c) in classes.iter().enumerate() {
        if c.len() != spanning || !g.is_forest(c) {
            return reject(format!("class {i} is not a spanning tree"));
        }
    }
    Ok(())
}

pub fn verify_nae(formula: &CnfFormula, assignment: &[bool]) -> Result<()> {
    if assignment.len() != formula.num_vars() {
        return reject(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            formula.num_vars()
        ));
    }
    match formula.first_all_equal_clause(assignment) {
        Some(c) => reject(format!("clause {} has all literals equal", c + 1)),
        None => Ok(()),
    }
}

fn distinct_indices(indices: &[usize], bound: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; bound];
    for &i in indices {
        if i >= bound {
            return reject(format!("{what} index {i} out of range 0..{bound}"));
        }
        if std::mem::replace(&mut seen[i], true) {
            return reject(format!("{what} {i} listed twice"));
        }
    }
    Ok(())
}

/// Cycle lengths of a perfect even factor given by arc indices.
pub fn verify_even_factor(d: &Digraph, arcs: &[usize]) -> Result<Vec<usize>> {
    distinct_indices(arcs, d.arcs().len(), "arc")?;
    let chosen: Vec<(usize, usize)> = arcs.iter().map(|&a| d.arcs()[a]).collect();
    let Some(lengths) = cycle_factor_lengths(d.vertex_count(), &chosen) else {
        return reject("arcs do not give every vertex in- and out-degree 1");
    };
    if let Some(l) = lengths.iter().find(|&&l| l % 2 != 0) {
        return reject(format!("dicycle of odd length {l}"));
    }
    Ok(lengths)
}

/// Endpoints of bipartite edges with `T` vertices shifted past `S`.
pub fn bipartite_edge_pairs(g: &BipartiteGraph, edges: &[usize]) -> Vec<(usize, usize)> {
    edges
        .iter()
        .map(|&e| {
            let (s, t) = g.edges()[e];
            (s, g.left_size() + t)
        })
        .collect()
}

/// Cycle lengths of a 2-factor without cycles of length 2 mod 4.
pub fn verify_c4k2_two_factor(g: &BipartiteGraph, edges: &[usize]) -> Result<Vec<usize>> {
    distinct_indices(edges, g.edges().len(), "edge")?;
    let pairs = bipartite_edge_pairs(g, edges);
    let Some(lengths) = two_factor_cycle_lengths(g.left_size() + g.right_size(), &pairs) else {
        return reject("edges do not give every vertex degree 2");
    };
    if let Some(l) = lengths.iter().find(|&&l| l % 4 != 0) {
        return reject(format!("cycle of length {l}, not a multiple of 4"));
    }
    Ok(lengths)
}

/// Check `cert` against `inst`. `Err(InvalidCertificate)` carries the reason.
pub fn verify_certificate(inst: &Instance, cert: &Certificate) -> Result<()> {
    let problem = inst.problem();
    match (inst, cert) {
        (Instance::CommonBases(i), c) => verify_common_bases(i, expect_partition(c, problem)?),
        (Instance::ModularBases(i), c) => verify_modular_bases(i, expect_partition(c, problem)?),
        (Instance::ParityBases(i), c) => verify_parity_bases(i, expect_partition(c, problem)?),
        (Instance::ModularTrees(i), c) => verify_modular_trees(i, expect_partition(c, problem)?),
        (Instance::Naesat(f), Certificate::Assignment(a)) => verify_nae(f, a),
        (Instance::PerfectEvenFactor(d), Certificate::ArcSet(a)) => verify_even_factor(d, a).map(drop),
        (Instance::C4k2TwoFactor(g), Certificate::EdgeSet(e)) => verify_c4k2_two_factor(g, e).map(drop),
        (_, c) => reject(format!("{problem} does not take a {} certificate", c.kind())),
    }
}
