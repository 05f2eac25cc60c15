//! Perfect even factor -> 2-factor without cycles of length 2 mod 4.
//!
//! Vertex `v` becomes a path `v' w1 w2 w3 w4 v''` of length 5 and arc `uv`
//! becomes the edge `u'v''`. Side `S` holds `v' = 3v`, `w2 = 3v+1`,
//! `w4 = 3v+2`; side `T` holds `w1 = 3v`, `w3 = 3v+1`, `v'' = 3v+2`.

use crate::certificate::{verify_c4k2_two_factor, verify_even_factor};
use crate::error::Result;
use crate::graph::{BipartiteGraph, Digraph};
use crate::reductions::Provenance;
use crate::set::GroundSet;

#[derive(Debug, Clone)]
pub struct R3Output {
    pub graph: BipartiteGraph,
    pub source: Digraph,
    /// The five edges of `P_v`, per vertex.
    pub path_edges: Vec<[usize; 5]>,
    /// Edge `u'v''`, per arc.
    pub arc_edges: Vec<usize>,
    pub provenance: Provenance,
}

pub fn r3_evenfactor_to_c4k2(d: &Digraph) -> Result<R3Output> {
    let n = d.vertex_count();
    let s_labels = (0..n).flat_map(|v| [format!("{v}'"), format!("w{v}.2"), format!("w{v}.4")]);
    let t_labels = (0..n).flat_map(|v| [format!("w{v}.1"), format!("w{v}.3"), format!("{v}''")]);
    let mut edges = Vec::with_capacity(5 * n + d.arcs().len());
    let mut roles = Vec::with_capacity(edges.capacity());
    let mut path_edges = Vec::with_capacity(n);
    for v in 0..n {
        let b = 3 * v;
        let path = [(b, b), (b + 1, b), (b + 1, b + 1), (b + 2, b + 1), (b + 2, b + 2)];
        let start = edges.len();
        edges.extend(path);
        roles.extend((1..=5).map(|k| format!("path P_{v} edge {k}")));
        path_edges.push(std::array::from_fn(|k| start + k));
    }
    let mut arc_edges = Vec::with_capacity(d.arcs().len());
    for &(u, v) in d.arcs() {
        arc_edges.push(edges.len());
        edges.push((3 * u, 3 * v + 2));
        roles.push(format!("arc {u}->{v}"));
    }
    let graph = BipartiteGraph::with_grounds(GroundSet::labeled(s_labels)?, GroundSet::labeled(t_labels)?, edges)?;
    Ok(R3Output {
        graph,
        source: d.clone(),
        path_edges,
        arc_edges,
        provenance: Provenance { roles },
    })
}

/// `N = E_F ∪ ⋃ P_v` for a verified perfect even factor `F`.
pub fn r3_factor_to_two_factor(out: &R3Output, arcs: &[usize]) -> Result<Vec<usize>> {
    verify_even_factor(&out.source, arcs)?;
    let mut edges: Vec<usize> = out.path_edges.iter().flatten().copied().collect();
    edges.extend(arcs.iter().map(|&a| out.arc_edges[a]));
    edges.sort_unstable();
    Ok(edges)
}

/// Arcs whose edge `u'v''` lies in a verified factor.
pub fn r3_two_factor_to_factor(out: &R3Output, edges: &[usize]) -> Result<Vec<usize>> {
    verify_c4k2_two_factor(&out.graph, edges)?;
    Ok(arcs_of(out, edges))
}

/// Arcs whose edge lies in `edges`, without verification.
pub fn arcs_of(out: &R3Output, edges: &[usize]) -> Vec<usize> {
    let mut arcs: Vec<usize> = out
        .arc_edges
        .iter()
        .enumerate()
        .filter(|(_, e)| edges.contains(e))
        .map(|(a, _)| a)
        .collect();
    arcs.sort_unstable();
    arcs
}
