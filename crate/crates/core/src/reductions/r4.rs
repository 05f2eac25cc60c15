//! 2-factor without cycles of length 2 mod 4 -> parity bases.
//!
//! `G+` doubles every `s` into `s' = 2s` and `s'' = 2s + 1`, each adjacent to
//! the neighbours of `s`. The instance is the transversal matroid of `G+` on
//! `S' ∪ S''` with pairs `{s', s''}`. Edge `e = st` of `G` gives edges `2e`
//! (`s't`) and `2e + 1` (`s''t`) of `G+`.

use crate::certificate::{verify_c4k2_two_factor, verify_parity_bases};
use crate::constructions::{free_matroid, transversal_matroid, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::reductions::{ParityInstance, Provenance};
use crate::set::{ElementSet, GroundSet};

#[derive(Debug, Clone)]
pub struct R4Output {
    pub instance: ParityInstance,
    pub source: BipartiteGraph,
    /// `G+`; `None` for the trivial NO output.
    pub doubled: Option<BipartiteGraph>,
    /// `|S| != |T|`: the output is a fixed NO instance.
    pub trivial_no: bool,
    pub provenance: Provenance,
}

/// Free matroid on one pair: two disjoint bases of size 2 cannot exist.
fn trivial_no_instance() -> ParityInstance {
    ParityInstance::new(
        free_matroid(GroundSet::new(2)),
        PartitionOfGroundSet::consecutive_pairs(2).expect("one pair"),
    )
    .expect("valid parity instance")
}

pub fn r4_c4k2_to_paritybases(g: &BipartiteGraph) -> Result<R4Output> {
    if g.left_size() != g.right_size() {
        return Ok(R4Output {
            instance: trivial_no_instance(),
            source: g.clone(),
            doubled: None,
            trivial_no: true,
            provenance: Provenance {
                roles: vec!["trivial NO: |S| != |T|".into(); 2],
            },
        });
    }
    let n = g.left_size();
    let labels = (0..n).flat_map(|s| {
        let l = g.left().label(s);
        [format!("{l}'"), format!("{l}''")]
    });
    let left = GroundSet::labeled(labels)?;
    let edges = g.edges().iter().flat_map(|&(s, t)| [(2 * s, t), (2 * s + 1, t)]).collect();
    let doubled = BipartiteGraph::with_grounds(left.clone(), g.right().clone(), edges)?;
    let matroid = transversal_matroid(doubled.clone()).relabeled(left)?;
    let roles = (0..n)
        .flat_map(|s| [format!("first copy of {s}"), format!("second copy of {s}")])
        .collect();
    Ok(R4Output {
        instance: ParityInstance::new(matroid, PartitionOfGroundSet::consecutive_pairs(2 * n)?)?,
        source: g.clone(),
        doubled: Some(doubled),
        trivial_no: false,
        provenance: Provenance { roles },
    })
}

/// Matchings covering the two classes, read back as edges of `G`.
pub fn r4_parity_to_two_factor(out: &R4Output, classes: &[ElementSet]) -> Result<Vec<usize>> {
    verify_parity_bases(&out.instance, classes)?;
    let doubled = out
        .doubled
        .as_ref()
        .ok_or_else(|| Error::precondition("the trivial NO instance has no solutions"))?;
    let mut edges = Vec::with_capacity(2 * out.source.right_size());
    for class in classes {
        let mate = doubled.max_matching(class);
        for (t, s_plus) in mate.iter().enumerate() {
            if let Some(s_plus) = *s_plus {
                let e = out
                    .source
                    .edge_index(s_plus / 2, t)
                    .expect("edge of G+ comes from an edge of G");
                edges.push(e);
            }
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// Walk every cycle `s_1 t_1 s_2 t_2 ...` of a verified factor and put the
/// odd-position `s` into the first class, the even-position ones into the
/// second.
pub fn r4_two_factor_to_parity(out: &R4Output, edges: &[usize]) -> Result<Vec<ElementSet>> {
    if out.trivial_no {
        return Err(Error::precondition("|S| != |T|: no 2-factor exists"));
    }
    verify_c4k2_two_factor(&out.source, edges)?;
    let n = out.source.left_size();
    let mut at_s: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut at_t: Vec<Vec<usize>> = vec![Vec::new(); out.source.right_size()];
    for &e in edges {
        let (s, t) = out.source.edges()[e];
        at_s[s].push(e);
        at_t[t].push(e);
    }
    let mut side = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        let (mut s, mut via, mut odd) = (start, at_s[start][0].min(at_s[start][1]), true);
        while side[s].is_none() {
            side[s] = Some(odd);
            let t = out.source.edges()[via].1;
            let back = if at_t[t][0] == via { at_t[t][1] } else { at_t[t][0] };
            s = out.source.edges()[back].0;
            via = if at_s[s][0] == back { at_s[s][1] } else { at_s[s][0] };
            odd = !odd;
        }
    }
    let mut classes = vec![ElementSet::empty(2 * n), ElementSet::empty(2 * n)];
    for (s, odd) in side.into_iter().enumerate() {
        let c = if odd == Some(true) { 0 } else { 1 };
        classes[c].insert(2 * s);
        classes[c].insert(2 * s + 1);
    }
    Ok(classes)
}
