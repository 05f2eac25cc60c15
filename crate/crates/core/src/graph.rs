//! Edge-labeled graph carriers: multigraphs (graphic matroids and modular
//! trees), bipartite graphs (transversal matroids and 2-factors) and digraphs
//! (even factors).

use std::collections::HashSet;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementSet, GroundSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

/// Undirected multigraph; parallel edges and self-loops are allowed. Edge `i`
/// is element `i` of the graphic matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawMultiGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl<'de> Deserialize<'de> for MultiGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMultiGraph::deserialize(d)?;
        MultiGraph::new(raw.vertex_count, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut labels = HashSet::new();
        for e in &edges {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(Error::precondition(format!(
                    "edge {} has an endpoint outside 0..{vertex_count}",
                    e.label
                )));
            }
            if !labels.insert(e.label.as_str()) {
                return Err(Error::precondition(format!("duplicate edge label {:?}", e.label)));
            }
        }
        Ok(MultiGraph {
            vertex_count,
            edges,
        })
    }

    /// Edges labeled by their index.
    pub fn from_pairs(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| Edge {
                u,
                v,
                label: format!("e{i}"),
            })
            .collect();
        Self::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::with_labels_unchecked(
            self.edges.len(),
            Some(self.edges.iter().map(|e| e.label.clone()).collect()),
        )
    }

    /// True iff the edges in `set` form a forest. Self-loops and parallel pairs
    /// are cycles.
    pub fn is_forest(&self, set: &ElementSet) -> bool {
        let mut uf = UnionFind::<usize>::new(self.vertex_count);
        set.iter().all(|i| {
            let e = &self.edges[i];
            uf.union(e.u, e.v)
        })
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::<usize>::new(self.vertex_count);
        let mut comps = self.vertex_count;
        for e in &self.edges {
            if uf.union(e.u, e.v) {
                comps -= 1;
            }
        }
        comps
    }

    /// GF(2) vertex-edge incidence matrix, row-major `vertex_count x edge_count`.
    /// Self-loops give a zero column.
    pub fn incidence_gf2(&self) -> Vec<Vec<u64>> {
        let mut rows = vec![vec![0u64; self.edges.len()]; self.vertex_count];
        for (j, e) in self.edges.iter().enumerate() {
            if e.u != e.v {
                rows[e.u][j] = 1;
                rows[e.v][j] = 1;
            }
        }
        rows
    }
}

/// Bipartite graph `G = (S, T; E)` with no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    left: GroundSet,
    right: GroundSet,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawBipartite {
    left: GroundSet,
    right: GroundSet,
    edges: Vec<(usize, usize)>,
}

impl<'de> Deserialize<'de> for BipartiteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBipartite::deserialize(d)?;
        BipartiteGraph::with_grounds(raw.left, raw.right, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_grounds(GroundSet::new(left), GroundSet::new(right), edges)
    }

    pub fn with_grounds(left: GroundSet, right: GroundSet, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); left.size()];
        for &(s, t) in &edges {
            if s >= left.size() || t >= right.size() {
                return Err(Error::precondition(format!(
                    "edge ({s},{t}) outside {}x{}",
                    left.size(),
                    right.size()
                )));
            }
            if !seen.insert((s, t)) {
                return Err(Error::precondition(format!("duplicate edge ({s},{t})")));
            }
            adjacency[s].push(t);
        }
        Ok(BipartiteGraph {
            left,
            right,
            edges,
            adjacency,
        })
    }

    pub fn left(&self) -> &GroundSet {
        &self.left
    }

    pub fn right(&self) -> &GroundSet {
        &self.right
    }

    pub fn left_size(&self) -> usize {
        self.left.size()
    }

    pub fn right_size(&self) -> usize {
        self.right.size()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, s: usize) -> &[usize] {
        &self.adjacency[s]
    }

    pub fn edge_index(&self, s: usize, t: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == (s, t))
    }

    /// Maximum matching restricted to the left vertices in `subset`, by
    /// augmenting paths. Returns `mate[t] = Some(s)`.
    pub fn max_matching(&self, subset: &ElementSet) -> Vec<Option<usize>> {
        let mut mate = vec![None; self.right.size()];
        let mut visited = vec![false; self.right.size()];
        for s in subset.iter() {
            visited.fill(false);
            self.augment(s, &mut mate, &mut visited);
        }
        mate
    }

    /// True iff some matching saturates every left vertex of `subset`.
    pub fn saturates(&self, subset: &ElementSet) -> bool {
        if subset.len() > self.right.size() {
            return false;
        }
        let mut mate = vec![None; self.right.size()];
        let mut visited = vec![false; self.right.size()];
        subset.iter().all(|s| {
            visited.fill(false);
            self.augment(s, &mut mate, &mut visited)
        })
    }

    fn augment(&self, s: usize, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
        for &t in &self.adjacency[s] {
            if visited[t] {
                continue;
            }
            visited[t] = true;
            match mate[t] {
                None => {
                    mate[t] = Some(s);
                    return true;
                }
                Some(other) => {
                    if self.augment(other, mate, visited) {
                        mate[t] = Some(s);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Directed graph without self-loops or repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawDigraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDigraph::deserialize(d)?;
        Digraph::new(raw.vertex_count, raw.arcs).map_err(serde::de::Error::custom)
    }
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(u, v) in &arcs {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::precondition(format!("arc ({u},{v}) outside 0..{vertex_count}")));
            }
            if u == v {
                return Err(Error::precondition(format!(
                    "self-loop at vertex {u} cannot lie on an even dicycle"
                )));
            }
            if !seen.insert((u, v)) {
                return Err(Error::precondition(format!("repeated arc ({u},{v})")));
            }
        }
        Ok(Digraph { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.iter().position(|&a| a == (u, v))
    }
}

/// Cycle lengths of a 2-regular edge set on `vertex_count` vertices given as
/// endpoint pairs. Returns `None` if some vertex does not have degree exactly 2.
pub fn two_factor_cycle_lengths(vertex_count: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (k, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(k);
        incident[b].push(k);
    }
    if incident.iter().any(|inc| inc.len() != 2) {
        return None;
    }
    let mut used = vec![false; edges.len()];
    let mut lengths = Vec::new();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        let mut len = 0;
        let mut edge = start;
        let mut at = edges[start].1;
        loop {
            used[edge] = true;
            len += 1;
            let (a, b) = edges[edge];
            // step to the other endpoint, then leave by the other incident edge
            let next_vertex = if a == at { b } else { a };
            at = next_vertex;
            let inc = &incident[at];
            let next = if inc[0] == edge { inc[1] } else { inc[0] };
            if used[next] {
                break;
            }
            edge = next;
        }
        lengths.push(len);
    }
    Some(lengths)
}

/// Cycle lengths of a set of arcs forming a permutation (every vertex with in-
/// and out-degree exactly one). `None` otherwise.
pub fn cycle_factor_lengths(vertex_count: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut succ = vec![None; vertex_count];
    let mut indeg = vec![0usize; vertex_count];
    for &(u, v) in arcs {
        if succ[u].is_some() {
            return None;
        }
        succ[u] = Some(v);
        indeg[v] += 1;
    }
    if indeg.iter().any(|&d| d != 1) || succ.iter().any(Option::is_none) {
        return None;
    }
    let mut seen = vec![false; vertex_count];
    let mut lengths = Vec::new();
    for start in 0..vertex_count {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = succ[v].unwrap();
        }
        lengths.push(len);
    }
    Some(lengths)
}
