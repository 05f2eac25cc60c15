//! Reference answers by plain enumeration, plus seeded random instances.
//! The only library calls made by the reference functions are independence
//! queries.

#![allow(dead_code)]

use std::collections::HashSet;

use matroid_packing::constructions::{
    direct_sum, dual, free_matroid, graphic_matroid, linear_matroid, parallel_copies, partition_matroid,
    paving_matroid, permute, transversal_matroid, truncate, uniform_matroid, HyperplaneFamily, PartitionOfGroundSet,
};
use matroid_packing::field::MatrixOverField;
use matroid_packing::graph::{BipartiteGraph, Digraph, MultiGraph};
use matroid_packing::{ElementSet, GroundSet, Matroid};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    assert!(n < 64);
    (0..1u64 << n).map(move |m| ElementSet::from_mask(n, m))
}

pub fn rank_brute(m: &Matroid, x: &ElementSet) -> usize {
    let items = x.to_vec();
    (0..1u64 << items.len())
        .map(|mask| ElementSet::from_indices(m.size(), items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)))
        .filter(|y| m.independent(y))
        .map(|y| y.len())
        .max()
        .unwrap_or(0)
}

/// Rank by a single greedy pass (valid for matroids); used where the ground
/// set is too large for [`rank_brute`].
pub fn greedy_rank(m: &Matroid) -> usize {
    let mut acc = ElementSet::empty(m.size());
    for e in 0..m.size() {
        let grown = acc.with(e);
        if m.independent(&grown) {
            acc = grown;
        }
    }
    acc.len()
}

/// (I1), (I2) and (I3) over all subsets; `Err` names the first violation.
pub fn axioms_brute(m: &Matroid) -> Result<(), String> {
    let n = m.size();
    if !m.independent(&ElementSet::empty(n)) {
        return Err("empty set is dependent".into());
    }
    let indep: Vec<ElementSet> = subsets(n).filter(|x| m.independent(x)).collect();
    let lookup: HashSet<ElementSet> = indep.iter().cloned().collect();
    for x in &indep {
        for e in x.iter() {
            if !lookup.contains(&x.without(e)) {
                return Err(format!("{x} independent but {} is not", x.without(e)));
            }
        }
    }
    for x in &indep {
        for y in indep.iter().filter(|y| y.len() == x.len() + 1) {
            if !y.difference(x).iter().any(|e| lookup.contains(&x.with(e))) {
                return Err(format!("no exchange from {y} into {x}"));
            }
        }
    }
    Ok(())
}

pub fn max_common_brute(m1: &Matroid, m2: &Matroid) -> usize {
    subsets(m1.size())
        .filter(|x| m1.independent(x) && m2.independent(x))
        .map(|x| x.len())
        .max()
        .unwrap_or(0)
}

/// Whether the ground set splits into `k` independent sets, trying every
/// assignment of elements to classes.
pub fn partition_brute(m: &Matroid, k: usize) -> bool {
    let n = m.size();
    let total = (k as u64).pow(n as u32);
    (0..total).any(|code| {
        let mut classes = vec![ElementSet::empty(n); k];
        let mut c = code;
        for e in 0..n {
            classes[(c % k as u64) as usize].insert(e);
            c /= k as u64;
        }
        classes.iter().all(|x| m.independent(x))
    })
}

/// Two common bases of `m1` and `m2` partitioning the ground set.
pub fn common_bases_brute(m1: &Matroid, m2: &Matroid) -> Option<[ElementSet; 2]> {
    let n = m1.size();
    let (r1, r2) = (greedy_rank(m1), greedy_rank(m2));
    if n != 2 * r1 || n != 2 * r2 {
        return None;
    }
    let base = |x: &ElementSet| x.len() == r1 && m1.independent(x) && m2.independent(x);
    subsets(n).find_map(|x| {
        let y = x.complement();
        (base(&x) && base(&y)).then_some([x, y])
    })
}

/// Two bases of `m`, each a union of blocks, partitioning the ground set.
/// Blocks are tried in the given order; a class is abandoned as soon as it is
/// dependent, which loses nothing because independence is closed under
/// subsets.
pub fn modular_brute(m: &Matroid, blocks: &[ElementSet]) -> Option<[ElementSet; 2]> {
    let n = m.size();
    let r = greedy_rank(m);
    if n != 2 * r {
        return None;
    }
    fn go(m: &Matroid, blocks: &[ElementSet], r: usize, i: usize, classes: &mut [ElementSet; 2]) -> bool {
        if i == blocks.len() {
            return true;
        }
        for c in 0..2 {
            let grown = classes[c].union(&blocks[i]);
            if grown.len() <= r && m.independent(&grown) {
                let old = std::mem::replace(&mut classes[c], grown);
                if go(m, blocks, r, i + 1, classes) {
                    return true;
                }
                classes[c] = old;
            }
        }
        false
    }
    let mut classes = [ElementSet::empty(n), ElementSet::empty(n)];
    go(m, blocks, r, 0, &mut classes).then_some(classes)
}

/// Not-all-equal satisfying assignment, scanning all `2^n` assignments.
pub fn nae_brute(num_vars: usize, clauses: &[Vec<i64>]) -> Option<Vec<bool>> {
    (0..1u64 << num_vars).find_map(|mask| {
        let value = |lit: i64| {
            let v = mask >> (lit.unsigned_abs() - 1) & 1 == 1;
            if lit > 0 {
                v
            } else {
                !v
            }
        };
        clauses
            .iter()
            .all(|c| c.iter().any(|&l| value(l)) && c.iter().any(|&l| !value(l)))
            .then(|| (0..num_vars).map(|j| mask >> j & 1 == 1).collect())
    })
}

/// Perfect even factor as arc indices: tries every permutation `v -> s(v)`
/// along arcs and keeps one whose cycles are all even.
pub fn even_factor_brute(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    fn go(v: usize, n: usize, arcs: &[(usize, usize)], succ: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if v == n {
            let mut seen = vec![false; n];
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let (mut x, mut len) = (start, 0);
                while !seen[x] {
                    seen[x] = true;
                    x = arcs[succ[x]].1;
                    len += 1;
                }
                if len % 2 == 1 {
                    return false;
                }
            }
            return true;
        }
        for (i, &(a, b)) in arcs.iter().enumerate() {
            if a == v && !used[b] {
                used[b] = true;
                succ[v] = i;
                if go(v + 1, n, arcs, succ, used) {
                    return true;
                }
                used[b] = false;
            }
        }
        false
    }
    let mut succ = vec![0; n];
    let mut used = vec![false; n];
    go(0, n, arcs, &mut succ, &mut used).then(|| {
        let mut s = succ;
        s.sort_unstable();
        s
    })
}

/// Cycle lengths of a 2-regular edge set on `vertices` vertices.
pub fn cycle_lengths(vertices: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); vertices];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push(i);
        adj[b].push(i);
    }
    let mut used = vec![false; edges.len()];
    let mut lengths = Vec::new();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        let (mut e, mut at, mut len) = (start, edges[start].1, 0);
        loop {
            used[e] = true;
            len += 1;
            let Some(&next) = adj[at].iter().find(|&&f| !used[f]) else { break };
            at = if edges[next].0 == at { edges[next].1 } else { edges[next].0 };
            e = next;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// 2-factor of the bipartite graph with every cycle length divisible by 4, as
/// edge indices. Edges are included or excluded one at a time, keeping every
/// degree at most 2 and able to reach 2.
pub fn c4k2_brute(left: usize, right: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let vertices = left + right;
    let ends: Vec<(usize, usize)> = edges.iter().map(|&(s, t)| (s, left + t)).collect();
    let mut remaining = vec![0usize; vertices];
    for &(a, b) in &ends {
        remaining[a] += 1;
        remaining[b] += 1;
    }
    if left != right || remaining.iter().any(|&r| r < 2) {
        return None;
    }
    struct State<'a> {
        ends: &'a [(usize, usize)],
        deg: Vec<usize>,
        remaining: Vec<usize>,
        chosen: Vec<usize>,
    }
    fn go(st: &mut State, i: usize) -> bool {
        if i == st.ends.len() {
            let pairs: Vec<(usize, usize)> = st.chosen.iter().map(|&e| st.ends[e]).collect();
            return cycle_lengths(st.deg.len(), &pairs).iter().all(|l| l % 4 == 0);
        }
        let (a, b) = st.ends[i];
        st.remaining[a] -= 1;
        st.remaining[b] -= 1;
        let mut found = false;
        if st.deg[a] < 2 && st.deg[b] < 2 {
            st.deg[a] += 1;
            st.deg[b] += 1;
            st.chosen.push(i);
            found = go(st, i + 1);
            if !found {
                st.chosen.pop();
            }
            st.deg[a] -= 1;
            st.deg[b] -= 1;
        }
        if !found && st.deg[a] + st.remaining[a] >= 2 && st.deg[b] + st.remaining[b] >= 2 {
            found = go(st, i + 1);
        }
        st.remaining[a] += 1;
        st.remaining[b] += 1;
        found
    }
    let mut st = State {
        ends: &ends,
        deg: vec![0; vertices],
        remaining,
        chosen: Vec::new(),
    };
    go(&mut st, 0).then_some(st.chosen)
}

/// Every normalized clause over `n` variables: at least two literals, no
/// variable twice, literals in increasing variable order.
pub fn all_clauses(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for vars in 1u32..1 << n {
        if vars.count_ones() < 2 {
            continue;
        }
        let chosen: Vec<i64> = (0..n as i64).filter(|v| vars >> v & 1 == 1).map(|v| v + 1).collect();
        for signs in 0u32..1 << chosen.len() {
            out.push(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if signs >> i & 1 == 1 { -v } else { v })
                    .collect(),
            );
        }
    }
    out
}

/// Multisets of at most `m` clauses drawn from `clauses`.
pub fn clause_multisets(clauses: &[Vec<i64>], m: usize) -> Vec<Vec<Vec<i64>>> {
    fn go(clauses: &[Vec<i64>], m: usize, from: usize, cur: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        out.push(cur.clone());
        if cur.len() == m {
            return;
        }
        for i in from..clauses.len() {
            cur.push(clauses[i].clone());
            go(clauses, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(clauses, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let arcs = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(density))
        .collect();
    Digraph::new(n, arcs).expect("simple digraph")
}

pub fn random_bipartite(rng: &mut impl Rng, left: usize, right: usize, density: f64) -> BipartiteGraph {
    let edges = (0..left)
        .flat_map(|s| (0..right).map(move |t| (s, t)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    BipartiteGraph::new(left, right, edges).expect("simple bipartite graph")
}

fn random_partition(rng: &mut impl Rng, n: usize, max_block: usize) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut blocks = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=max_block.min(rest.len()));
        blocks.push(rest[..size].to_vec());
        rest = &rest[size..];
    }
    blocks
}

pub fn random_modules(rng: &mut impl Rng, n: usize, max_block: usize) -> PartitionOfGroundSet {
    PartitionOfGroundSet::new(n, random_partition(rng, n, max_block)).expect("partition")
}

fn random_paving(rng: &mut impl Rng, n: usize) -> Matroid {
    let rank = rng.gen_range(2..=n.min(4));
    let mut sets: Vec<ElementSet> = Vec::new();
    if n > rank {
        for _ in 0..6 {
            let size = rng.gen_range(rank..n.min(rank + 2));
            let mut items: Vec<usize> = (0..n).collect();
            items.shuffle(rng);
            let h = ElementSet::from_indices(n, items[..size].iter().copied());
            if sets.iter().all(|s| s.intersection(&h).len() + 2 <= rank) {
                sets.push(h);
            }
        }
    }
    paving_matroid(HyperplaneFamily::new(n, rank, sets).expect("valid hyperplane family"))
}

/// A leaf matroid of each class, chosen by `kind` (0..7).
pub fn random_leaf(rng: &mut impl Rng, n: usize, kind: usize) -> Matroid {
    let ground = GroundSet::new(n);
    match kind {
        0 => free_matroid(ground),
        1 => uniform_matroid(ground, rng.gen_range(0..=n)).expect("rank <= n"),
        2 => {
            let blocks = random_partition(rng, n, 3);
            let caps = blocks.iter().map(|b| rng.gen_range(0..=b.len())).collect();
            partition_matroid(PartitionOfGroundSet::new(n, blocks).expect("partition"), caps).expect("caps")
        }
        3 => {
            let v = rng.gen_range(1..=5);
            let pairs: Vec<(usize, usize)> = (0..n).map(|_| (rng.gen_range(0..v), rng.gen_range(0..v))).collect();
            graphic_matroid(MultiGraph::from_pairs(v, &pairs).expect("graph"))
        }
        4 => {
            let t = rng.gen_range(1..=4);
            transversal_matroid(random_bipartite(rng, n, t, 0.5))
        }
        5 if n >= 2 => random_paving(rng, n),
        5 => uniform_matroid(ground, n).expect("rank <= n"),
        _ => {
            let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
            let rows = rng.gen_range(1..=4);
            let entries = (0..rows * n).map(|_| rng.gen_range(0..p)).collect();
            linear_matroid(MatrixOverField::over_prime(p, rows, n, entries).expect("matrix"))
        }
    }
}

pub const LEAF_KINDS: usize = 7;

/// A random matroid on exactly `n` elements: a leaf, or with probability
/// one half a combinator over smaller random matroids.
pub fn random_matroid(rng: &mut impl Rng, n: usize, depth: usize) -> Matroid {
    if depth == 0 || n < 2 || rng.gen_bool(0.5) {
        let kind = rng.gen_range(0..LEAF_KINDS);
        return random_leaf(rng, n, kind);
    }
    match rng.gen_range(0..5) {
        0 => {
            let a = rng.gen_range(1..n);
            direct_sum(&random_matroid(rng, a, depth - 1), &random_matroid(rng, n - a, depth - 1))
        }
        1 => {
            let m = random_matroid(rng, n, depth - 1);
            let k = rng.gen_range(0..=n);
            truncate(&m, k)
        }
        2 => dual(&random_matroid(rng, n, depth - 1)),
        3 if n % 2 == 0 => parallel_copies(&random_matroid(rng, n / 2, depth - 1), 2).expect("copies"),
        3 => random_matroid(rng, n, depth - 1),
        _ => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            permute(&random_matroid(rng, n, depth - 1), order).expect("permutation")
        }
    }
}

/// Random matroid of rank exactly `n / 2`; retries until one is drawn.
pub fn random_half_rank_matroid(rng: &mut impl Rng, n: usize) -> Matroid {
    loop {
        let m = random_matroid(rng, n, 2);
        if 2 * greedy_rank(&m) == n {
            return m;
        }
    }
}
