//! Exact decision procedures at desk scale. Every YES comes with a
//! certificate accepted by [`crate::certificate::verify_certificate`].
//!
//! Symmetry breaking: the first element (module, variable) always goes to the
//! first class (is true); complement and class-swap symmetric solutions are
//! found from that side. Partition solvers backtrack and prune on
//! independence and class size, which is exact because independence is
//! closed under subsets.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::certificate::{bipartite_edge_pairs, Certificate, Instance, Problem};
use crate::cnf::CnfFormula;
use crate::constructions::PartitionOfGroundSet;
use crate::error::{Error, Result};
use crate::graph::{two_factor_cycle_lengths, BipartiteGraph, Digraph};
use crate::matroid::Matroid;
use crate::reductions::{CommonBasesInstance, ModularInstance, ModularTreesInstance, ParityInstance};
use crate::set::{ElementSet, DEFAULT_EXHAUSTIVE_CAP};

/// Largest digraph the even-factor solver accepts by default.
pub const DIGRAPH_VERTEX_CAP: usize = 12;
/// Largest edge count the 2-factor enumeration accepts by default.
pub const TWO_FACTOR_EDGE_CAP: usize = 64;

/// Default size cap for a problem: elements for common bases, modules for the
/// modular problems, variables for NAE-SAT, vertices for even factors, edges
/// for 2-factors.
pub fn default_cap(problem: Problem) -> usize {
    match problem {
        Problem::PerfectEvenFactor => DIGRAPH_VERTEX_CAP,
        Problem::C4k2TwoFactor => TWO_FACTOR_EDGE_CAP,
        _ => DEFAULT_EXHAUSTIVE_CAP,
    }
}

fn cap_check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::ResourceLimit { what, size, cap });
    }
    Ok(())
}

/// Partition into `k` common bases of `m1` and `m2`.
pub fn solve_common_bases(inst: &CommonBasesInstance, cap: usize) -> Result<Option<Vec<ElementSet>>> {
    let n = inst.size();
    cap_check("common bases", n, cap)?;
    let k = inst.k();
    let r = inst.m1().full_rank();
    if n != k * r || inst.m2().full_rank() != r {
        return Ok(None);
    }
    let mut classes = vec![ElementSet::empty(n); k];
    let found = assign_elements(inst.m1(), inst.m2(), r, 0, 0, &mut classes);
    Ok(found.then_some(classes))
}

fn assign_elements(m1: &Matroid, m2: &Matroid, r: usize, e: usize, opened: usize, classes: &mut [ElementSet]) -> bool {
    if e == m1.size() {
        return true;
    }
    let k = classes.len();
    // a class may only be opened after all earlier ones
    for c in 0..(opened + 1).min(k) {
        if classes[c].len() == r {
            continue;
        }
        let grown = classes[c].with(e);
        if m1.independent(&grown) && m2.independent(&grown) {
            let previous = std::mem::replace(&mut classes[c], grown);
            if assign_elements(m1, m2, r, e + 1, opened.max(c + 1), classes) {
                return true;
            }
            classes[c] = previous;
        }
    }
    false
}

/// Two modular bases of `m`: modules are assigned whole to either class.
fn solve_modular_partition(m: &Matroid, modules: &PartitionOfGroundSet, cap: usize) -> Result<Option<Vec<ElementSet>>> {
    cap_check("modular sweep", modules.len(), cap)?;
    let n = m.size();
    let r = m.full_rank();
    if n != 2 * r {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..modules.len()).collect();
    // big modules first prune hardest
    order.sort_by_key(|&b| std::cmp::Reverse(modules.blocks()[b].len()));
    let mut classes = [ElementSet::empty(n), ElementSet::empty(n)];
    let found = assign_modules(m, modules, &order, r, 0, &mut classes);
    Ok(found.then(|| classes.to_vec()))
}

fn assign_modules(m: &Matroid, modules: &PartitionOfGroundSet, order: &[usize], r: usize, i: usize, classes: &mut [ElementSet; 2]) -> bool {
    let Some(&b) = order.get(i) else {
        return true;
    };
    let block = &modules.blocks()[b];
    let sides: &[usize] = if i == 0 { &[0] } else { &[0, 1] };
    for &c in sides {
        if classes[c].len() + block.len() > r {
            continue;
        }
        let grown = classes[c].union(block);
        if m.independent(&grown) {
            let previous = std::mem::replace(&mut classes[c], grown);
            if assign_modules(m, modules, order, r, i + 1, classes) {
                return true;
            }
            classes[c] = previous;
        }
    }
    false
}

pub fn solve_modular_bases(inst: &ModularInstance, cap: usize) -> Result<Option<Vec<ElementSet>>> {
    solve_modular_partition(inst.matroid(), inst.modules(), cap)
}

pub fn solve_parity_bases(inst: &ParityInstance, cap: usize) -> Result<Option<Vec<ElementSet>>> {
    solve_modular_partition(inst.matroid(), inst.pairs(), cap)
}

/// Two modular spanning trees; needs `|E| = 2 (|V| - 1)` and a connected graph.
pub fn solve_modular_trees(inst: &ModularTreesInstance, cap: usize) -> Result<Option<Vec<ElementSet>>> {
    let g = inst.graph();
    cap_check("modular sweep", inst.modules().len(), cap)?;
    if g.vertex_count() == 0 || g.edge_count() != 2 * (g.vertex_count() - 1) || g.component_count() != 1 {
        return Ok(None);
    }
    solve_modular_partition(&inst.matroid(), inst.modules(), cap)
}

/// First not-all-equal assignment with `x_1` true, scanning the other
/// variables as a binary counter (`x_2` lowest bit).
pub fn solve_naesat(formula: &CnfFormula, cap: usize) -> Result<Option<Vec<bool>>> {
    let n = formula.num_vars();
    cap_check("NAE-SAT sweep", n, cap)?;
    if n == 0 {
        return Ok(formula.clauses().is_empty().then(Vec::new));
    }
    let decode = |mask: u64| -> Vec<bool> { (0..n).map(|j| j == 0 || mask >> (j - 1) & 1 == 1).collect() };
    Ok((0..1u64 << (n - 1))
        .into_par_iter()
        .map(decode)
        .find_first(|a| formula.nae_satisfied(a)))
}

/// Perfect even factor as arc indices: choose a successor for every vertex
/// along its out-arcs, rejecting odd cycles as soon as they close.
pub fn solve_perfect_even_factor(d: &Digraph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = d.vertex_count();
    cap_check("even factor search", n, cap)?;
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, &(u, _)) in d.arcs().iter().enumerate() {
        out_arcs[u].push(a);
    }
    let mut succ = vec![None; n];
    let mut has_pred = vec![false; n];
    let mut chosen = Vec::with_capacity(n);
    if pick_successor(d, &out_arcs, 0, &mut succ, &mut has_pred, &mut chosen) {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn pick_successor(
    d: &Digraph,
    out_arcs: &[Vec<usize>],
    v: usize,
    succ: &mut [Option<usize>],
    has_pred: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    if v == succ.len() {
        return true;
    }
    for &a in &out_arcs[v] {
        let w = d.arcs()[a].1;
        if has_pred[w] {
            continue;
        }
        succ[v] = Some(w);
        // walk forward from w; if it returns to v the cycle just closed
        let mut len = 1;
        let mut at = w;
        let mut closed = false;
        while let Some(next) = succ[at] {
            len += 1;
            if next == v {
                closed = true;
                break;
            }
            at = next;
        }
        let closed_odd = (closed && len % 2 == 1) || w == v;
        if !closed_odd {
            has_pred[w] = true;
            chosen.push(a);
            if pick_successor(d, out_arcs, v + 1, succ, has_pred, chosen) {
                return true;
            }
            chosen.pop();
            has_pred[w] = false;
        }
        succ[v] = None;
    }
    false
}

/// Calls `visit` with every 2-factor of `g` (sorted edge indices) until it
/// breaks.
pub fn for_each_two_factor(g: &BipartiteGraph, cap: usize, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) -> Result<()> {
    let m = g.edges().len();
    cap_check("2-factor enumeration", m, cap)?;
    let vertices = g.left_size() + g.right_size();
    let ends: Vec<(usize, usize)> = bipartite_edge_pairs(g, &(0..m).collect::<Vec<_>>());
    // edges still undecided at each vertex, for the reachability bound
    let mut open = vec![0usize; vertices];
    for &(a, b) in &ends {
        open[a] += 1;
        open[b] += 1;
    }
    if open.iter().any(|&d| d < 2) {
        return Ok(());
    }
    let mut degree = vec![0usize; vertices];
    let mut chosen = Vec::with_capacity(vertices);
    let _ = two_factor_search(&ends, 0, &mut degree, &mut open, &mut chosen, &mut visit);
    Ok(())
}

fn two_factor_search(
    ends: &[(usize, usize)],
    e: usize,
    degree: &mut [usize],
    open: &mut [usize],
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if e == ends.len() {
        return if degree.iter().all(|&d| d == 2) {
            visit(chosen)
        } else {
            ControlFlow::Continue(())
        };
    }
    let (a, b) = ends[e];
    open[a] -= 1;
    open[b] -= 1;
    let mut flow = ControlFlow::Continue(());
    if degree[a] < 2 && degree[b] < 2 {
        degree[a] += 1;
        degree[b] += 1;
        chosen.push(e);
        flow = two_factor_search(ends, e + 1, degree, open, chosen, visit);
        chosen.pop();
        degree[a] -= 1;
        degree[b] -= 1;
    }
    if flow.is_continue() && degree[a] + open[a] >= 2 && degree[b] + open[b] >= 2 {
        flow = two_factor_search(ends, e + 1, degree, open, chosen, visit);
    }
    open[a] += 1;
    open[b] += 1;
    flow
}

/// First 2-factor, in enumeration order, whose cycles all have length
/// divisible by 4.
pub fn solve_c4k2_2factor(g: &BipartiteGraph, cap: usize) -> Result<Option<Vec<usize>>> {
    let vertices = g.left_size() + g.right_size();
    let mut found = None;
    for_each_two_factor(g, cap, |edges| {
        let pairs = bipartite_edge_pairs(g, edges);
        let lengths = two_factor_cycle_lengths(vertices, &pairs).expect("2-regular");
        if lengths.iter().all(|l| l % 4 == 0) {
            found = Some(edges.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Dispatch on the instance's problem.
pub fn solve(inst: &Instance, cap: usize) -> Result<Option<Certificate>> {
    Ok(match inst {
        Instance::CommonBases(i) => solve_common_bases(i, cap)?.map(Certificate::Partition),
        Instance::ModularBases(i) => solve_modular_bases(i, cap)?.map(Certificate::Partition),
        Instance::ParityBases(i) => solve_parity_bases(i, cap)?.map(Certificate::Partition),
        Instance::ModularTrees(i) => solve_modular_trees(i, cap)?.map(Certificate::Partition),
        Instance::Naesat(f) => solve_naesat(f, cap)?.map(Certificate::Assignment),
        Instance::PerfectEvenFactor(d) => solve_perfect_even_factor(d, cap)?.map(Certificate::ArcSet),
        Instance::C4k2TwoFactor(g) => solve_c4k2_2factor(g, cap)?.map(Certificate::EdgeSet),
    })
}
