//! NAE-SAT -> two modular spanning trees.
//!
//! Variable `x_j` becomes `H[p_j, q_j]`: a `u`-path from `s^j` to `t^j` with
//! one inner node per positive occurrence, a `v`-path with one inner node per
//! negative occurrence, and a pendant node `w` (resp. `z`) hanging off every
//! inner node. Consecutive gadgets share `t^j = s^{j+1}`. Each pendant node is
//! joined to the last junction `t^n`, and the pendant nodes of each clause are
//! joined in a cycle.
//!
//! Vertices: junctions `0..=n` (`s^j = j - 1`, `t^j = j` for 1-based `j`),
//! then `u_k, w_k` per positive and `v_k, z_k` per negative occurrence.

use crate::certificate::{verify_modular_trees, verify_nae};
use crate::cnf::{CnfFormula, Literal};
use crate::constructions::PartitionOfGroundSet;
use crate::error::Result;
use crate::graph::{Edge, MultiGraph};
use crate::reductions::{ModularTreesInstance, Provenance};
use crate::set::ElementSet;

/// Edge indices of one variable gadget.
#[derive(Debug, Clone, Default)]
pub struct VariableEdges {
    /// `P_j`, or the single edge `st+` when `p_j = 0`.
    pub positive_path: Vec<usize>,
    /// `N_j`, or the single edge `st-` when `q_j = 0`.
    pub negative_path: Vec<usize>,
    /// `M^j_k = {u_k w_k, w_k t^n}`.
    pub positive_pairs: Vec<[usize; 2]>,
    /// `N^j_k = {v_k z_k, z_k t^n}`.
    pub negative_pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone)]
pub struct R2Output {
    pub instance: ModularTreesInstance,
    pub formula: CnfFormula,
    pub variables: Vec<VariableEdges>,
    /// Per clause, edge `k` joins the pendant nodes of literals `k - 1` and
    /// `k` (cyclically).
    pub clause_edges: Vec<Vec<usize>>,
    pub provenance: Provenance,
}

struct Builder {
    edges: Vec<Edge>,
    roles: Vec<String>,
    vertices: usize,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    fn edge(&mut self, u: usize, v: usize, label: String, role: String) -> usize {
        self.edges.push(Edge { u, v, label });
        self.roles.push(role);
        self.edges.len() - 1
    }

    /// Path `s -> inner_1 -> ... -> t`, labeled `{prefix}{k}`.
    fn path(&mut self, s: usize, inner: &[usize], t: usize, var: usize, prefix: &str, single: &str) -> Vec<usize> {
        if inner.is_empty() {
            return vec![self.edge(s, t, format!("x{var}:{single}"), format!("x{var} single s-t edge"))];
        }
        let stops: Vec<usize> = std::iter::once(s).chain(inner.iter().copied()).chain([t]).collect();
        stops
            .windows(2)
            .enumerate()
            .map(|(k, w)| {
                self.edge(
                    w[0],
                    w[1],
                    format!("x{var}:{prefix}{}", k + 1),
                    format!("x{var} path {prefix} edge {}", k + 1),
                )
            })
            .collect()
    }
}

pub fn r2_naesat_to_modular_trees(formula: &CnfFormula) -> Result<R2Output> {
    let n = formula.num_vars();
    let last = n;
    let mut b = Builder {
        edges: Vec::new(),
        roles: Vec::new(),
        vertices: n + 1,
    };
    // pendant node of each (clause, position)
    let mut pendant: Vec<Vec<usize>> = formula.clauses().iter().map(|c| vec![0; c.len()]).collect();
    let mut variables = Vec::with_capacity(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for j in 0..n {
        let var = j + 1;
        let pos = formula.occurrences(Literal::pos(j));
        let neg = formula.occurrences(Literal::neg(j));
        let u: Vec<usize> = pos.iter().map(|_| b.vertex()).collect();
        let w: Vec<usize> = pos.iter().map(|_| b.vertex()).collect();
        let v: Vec<usize> = neg.iter().map(|_| b.vertex()).collect();
        let z: Vec<usize> = neg.iter().map(|_| b.vertex()).collect();
        for (k, &(ci, at)) in pos.iter().enumerate() {
            pendant[ci][at] = w[k];
        }
        for (k, &(ci, at)) in neg.iter().enumerate() {
            pendant[ci][at] = z[k];
        }

        let mut ve = VariableEdges {
            positive_path: b.path(j, &u, j + 1, var, "P", "st+"),
            negative_path: b.path(j, &v, j + 1, var, "N", "st-"),
            ..Default::default()
        };
        for k in 0..pos.len() {
            let a = b.edge(u[k], w[k], format!("x{var}:uw{}", k + 1), format!("x{var} pendant u{0}w{0}", k + 1));
            let c = b.edge(w[k], last, format!("x{var}:wt{}", k + 1), format!("x{var} closing w{} t^n", k + 1));
            ve.positive_pairs.push([a, c]);
        }
        for k in 0..neg.len() {
            let a = b.edge(v[k], z[k], format!("x{var}:vz{}", k + 1), format!("x{var} pendant v{0}z{0}", k + 1));
            let c = b.edge(z[k], last, format!("x{var}:zt{}", k + 1), format!("x{var} closing z{} t^n", k + 1));
            ve.negative_pairs.push([a, c]);
        }

        blocks.push(ve.positive_path.clone());
        blocks.push(ve.negative_path.clone());
        blocks.extend(ve.positive_pairs.iter().chain(&ve.negative_pairs).map(|p| p.to_vec()));
        variables.push(ve);
    }

    let mut clause_edges = Vec::with_capacity(formula.clauses().len());
    for (ci, ys) in pendant.iter().enumerate() {
        let len = ys.len();
        let edges: Vec<usize> = (0..len)
            .map(|k| {
                b.edge(
                    ys[(k + len - 1) % len],
                    ys[k],
                    format!("C{}:y{}", ci + 1, k + 1),
                    format!("clause {} cycle edge {}", ci + 1, k + 1),
                )
            })
            .collect();
        blocks.extend(edges.iter().map(|&e| vec![e]));
        clause_edges.push(edges);
    }

    let edge_count = b.edges.len();
    let graph = MultiGraph::new(b.vertices, b.edges)?;
    let modules = PartitionOfGroundSet::new(edge_count, blocks)?;
    Ok(R2Output {
        instance: ModularTreesInstance::new(graph, modules)?,
        formula: formula.clone(),
        variables,
        clause_edges,
        provenance: Provenance { roles: b.roles },
    })
}

/// `x_j = 1` iff its positive path (or `st+`) lies in the first tree.
pub fn r2_pull_assignment(out: &R2Output, classes: &[ElementSet]) -> Result<Vec<bool>> {
    verify_modular_trees(&out.instance, classes)?;
    Ok(out
        .variables
        .iter()
        .map(|v| classes[0].contains(v.positive_path[0]))
        .collect())
}

/// `T1` takes `P_j` and every `N^j_k` for true `x_j`, `N_j` and every `M^j_k`
/// for false `x_j`, and clause edge `k` whenever literal `k` is true. `T2` is
/// the complement.
pub fn r2_lift_trees(out: &R2Output, assignment: &[bool]) -> Result<Vec<ElementSet>> {
    verify_nae(&out.formula, assignment)?;
    let m = out.instance.graph().edge_count();
    let mut t1 = ElementSet::empty(m);
    for (v, &value) in out.variables.iter().zip(assignment) {
        let (path, pairs) = if value {
            (&v.positive_path, &v.negative_pairs)
        } else {
            (&v.negative_path, &v.positive_pairs)
        };
        for &e in path.iter().chain(pairs.iter().flatten()) {
            t1.insert(e);
        }
    }
    for (clause, edges) in out.formula.clauses().iter().zip(&out.clause_edges) {
        for (lit, &e) in clause.iter().zip(edges) {
            if lit.value(assignment) {
                t1.insert(e);
            }
        }
    }
    let t2 = t1.complement();
    Ok(vec![t1, t2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1_or_x2() -> CnfFormula {
        CnfFormula::from_dimacs(2, &[vec![1, 2]]).unwrap()
    }

    #[test]
    fn two_literal_clause_counts() {
        let out = r2_naesat_to_modular_trees(&x1_or_x2()).unwrap();
        let g = out.instance.graph();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.vertex_count(), 7);
        let labels: Vec<&str> = g.edges().iter().map(|e| e.label.as_str()).collect();
        assert_eq!(
            labels,
            [
                "x1:P1", "x1:P2", "x1:st-", "x1:uw1", "x1:wt1", "x2:P1", "x2:P2", "x2:st-", "x2:uw1", "x2:wt1",
                "C1:y1", "C1:y2"
            ]
        );
        // P1, P2, st-, M11 per variable, then two clause singletons
        assert_eq!(out.instance.modules().len(), 8);
    }

    #[test]
    fn lift_pull_two_literal_clause() {
        let out = r2_naesat_to_modular_trees(&x1_or_x2()).unwrap();
        let trees = r2_lift_trees(&out, &[true, false]).unwrap();
        verify_modular_trees(&out.instance, &trees).unwrap();
        assert_eq!(r2_pull_assignment(&out, &trees).unwrap(), vec![true, false]);
        let swapped = vec![trees[1].clone(), trees[0].clone()];
        assert_eq!(r2_pull_assignment(&out, &swapped).unwrap(), vec![false, true]);
        assert!(r2_lift_trees(&out, &[true, true]).is_err());
    }

    #[test]
    fn empty_formula_is_two_parallel_edges_per_variable() {
        let f = CnfFormula::new(2, vec![]).unwrap();
        let out = r2_naesat_to_modular_trees(&f).unwrap();
        assert_eq!(out.instance.graph().edge_count(), 4);
        assert_eq!(out.instance.graph().vertex_count(), 3);
        let trees = r2_lift_trees(&out, &[false, true]).unwrap();
        verify_modular_trees(&out.instance, &trees).unwrap();
    }
}
