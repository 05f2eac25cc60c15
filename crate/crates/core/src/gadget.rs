//! The gadget pair `(M'_l, M''_l)`: two graphic matroids of rank `5l` on `9l`
//! elements whose common-independent bipartitions always split `5l / 4l`.
//!
//! Each block `W_j = {a_j, ..., i_j}` contributes a `K4` to both graphs. In
//! `G'` the `K4` carries `a..f`, `g` and `h` are pendant edges and `i_j` is
//! parallel to `h_j`. In `G''` the `K4` carries `a, b, c, d, g, h`, `e` and `f`
//! are pendant edges and `i_j` is parallel to `f_{j+1}`, with block indices
//! taken cyclically. Which `K4` edge carries which label is not fixed a priori:
//! [`search_block_labeling`] finds the first labeling (in lexicographic order)
//! whose gadget certifies exhaustively at `l = 1` and `l = 2`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::graphic_matroid;
use crate::error::{Error, Result};
use crate::graph::{Edge, MultiGraph};
use crate::matroid::Matroid;
use crate::set::{check_cap, ElementSet, DEFAULT_EXHAUSTIVE_CAP};

pub const BLOCK_LETTERS: [char; 9] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i'];

/// `K4` edge slots on vertices `0..4`, in the order labels are assigned.
pub const K4_SLOTS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

const VERTICES_PER_BLOCK: usize = 6;

fn letter_index(c: char) -> usize {
    BLOCK_LETTERS
        .iter()
        .position(|&l| l == c)
        .unwrap_or_else(|| panic!("not a block letter: {c}"))
}

/// Label assignment for one block of both graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GadgetBlockLabeling {
    /// Labels on [`K4_SLOTS`] in `G'`; a permutation of `a..f`.
    pub prime_k4: [char; 6],
    /// Labels on [`K4_SLOTS`] in `G''`; a permutation of `a, b, c, d, g, h`.
    pub double_k4: [char; 6],
    /// `(label, K4 vertex)` of the two pendant edges of `G'` (`g`, `h`).
    pub prime_pendants: [(char, usize); 2],
    /// `(label, K4 vertex)` of the two pendant edges of `G''` (`e`, `f`).
    pub double_pendants: [(char, usize); 2],
}

/// One block edge: endpoints relative to the block's vertex offset.
#[derive(Debug, Clone, Serialize)]
pub struct TemplateEdge {
    pub label: char,
    pub u: usize,
    pub v: usize,
}

impl GadgetBlockLabeling {
    pub fn new(prime_k4: [char; 6], double_k4: [char; 6]) -> Result<Self> {
        let l = GadgetBlockLabeling {
            prime_k4,
            double_k4,
            prime_pendants: [('g', 0), ('h', 0)],
            double_pendants: [('e', 0), ('f', 0)],
        };
        l.validate()?;
        Ok(l)
    }

    pub fn validate(&self) -> Result<()> {
        let sorted = |xs: &[char]| xs.iter().copied().sorted().collect::<Vec<_>>();
        if sorted(&self.prime_k4) != vec!['a', 'b', 'c', 'd', 'e', 'f'] {
            return Err(Error::precondition("G' K4 must carry exactly a..f"));
        }
        if sorted(&self.double_k4) != vec!['a', 'b', 'c', 'd', 'g', 'h'] {
            return Err(Error::precondition("G'' K4 must carry exactly a, b, c, d, g, h"));
        }
        if self.prime_pendants.map(|p| p.0) != ['g', 'h'] || self.double_pendants.map(|p| p.0) != ['e', 'f'] {
            return Err(Error::precondition("pendant edges must be (g, h) in G' and (e, f) in G''"));
        }
        if self
            .prime_pendants
            .iter()
            .chain(&self.double_pendants)
            .any(|&(_, v)| v >= 4)
        {
            return Err(Error::precondition("pendant edges must hang off a K4 vertex"));
        }
        Ok(())
    }

    fn template(k4: &[char; 6], pendants: &[(char, usize); 2]) -> Vec<TemplateEdge> {
        let mut edges: Vec<TemplateEdge> = K4_SLOTS
            .iter()
            .zip(k4)
            .map(|(&(u, v), &label)| TemplateEdge { label, u, v })
            .collect();
        for (k, &(label, at)) in pendants.iter().enumerate() {
            edges.push(TemplateEdge { label, u: at, v: 4 + k });
        }
        edges.sort_by_key(|e| letter_index(e.label));
        edges
    }

    /// Block template of `G'` without the chained `i` edge.
    pub fn prime_template(&self) -> Vec<TemplateEdge> {
        Self::template(&self.prime_k4, &self.prime_pendants)
    }

    /// Block template of `G''` without the chained `i` edge.
    pub fn double_template(&self) -> Vec<TemplateEdge> {
        Self::template(&self.double_k4, &self.double_pendants)
    }

    /// Labels forming triangles of the `K4`; determines its graphic matroid.
    fn triangle_signature(k4: &[char; 6]) -> Vec<[char; 3]> {
        const TRIANGLES: [[usize; 3]; 4] = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];
        let mut sig: Vec<[char; 3]> = TRIANGLES
            .iter()
            .map(|t| {
                let mut tri = t.map(|s| k4[s]);
                tri.sort();
                tri
            })
            .collect();
        sig.sort();
        sig
    }
}

/// Built gadget: both graphs, both graphic matroids, ground `a_1 .. i_l`.
#[derive(Debug, Clone)]
pub struct GadgetPair {
    pub ell: usize,
    pub labeling: GadgetBlockLabeling,
    pub prime_graph: MultiGraph,
    pub double_graph: MultiGraph,
    pub prime: Matroid,
    pub double: Matroid,
}

/// Index of `letter_j` (1-based block `j`) in the gadget ground set.
pub fn element(block: usize, letter: char) -> usize {
    assert!(block >= 1, "blocks are 1-based");
    9 * (block - 1) + letter_index(letter)
}

pub fn element_label(index: usize) -> String {
    format!("{}_{}", BLOCK_LETTERS[index % 9], index / 9 + 1)
}

/// Instantiate `ell` chained blocks.
pub fn build_gadget(labeling: &GadgetBlockLabeling, ell: usize) -> Result<GadgetPair> {
    if ell == 0 {
        return Err(Error::precondition("gadget needs l >= 1"));
    }
    labeling.validate()?;
    let prime_t = labeling.prime_template();
    let double_t = labeling.double_template();
    let endpoints = |t: &[TemplateEdge], letter: char, block: usize| {
        let e = t.iter().find(|e| e.label == letter).expect("template letter");
        let off = block * VERTICES_PER_BLOCK;
        (e.u + off, e.v + off)
    };

    let mut prime_edges = Vec::with_capacity(9 * ell);
    let mut double_edges = Vec::with_capacity(9 * ell);
    for j in 0..ell {
        let off = j * VERTICES_PER_BLOCK;
        for (tp, td) in prime_t.iter().zip(&double_t) {
            prime_edges.push(Edge {
                u: tp.u + off,
                v: tp.v + off,
                label: format!("{}_{}", tp.label, j + 1),
            });
            double_edges.push(Edge {
                u: td.u + off,
                v: td.v + off,
                label: format!("{}_{}", td.label, j + 1),
            });
        }
        let (u, v) = endpoints(&prime_t, 'h', j);
        prime_edges.push(Edge {
            u,
            v,
            label: format!("i_{}", j + 1),
        });
        let (u, v) = endpoints(&double_t, 'f', (j + 1) % ell);
        double_edges.push(Edge {
            u,
            v,
            label: format!("i_{}", j + 1),
        });
    }
    let prime_graph = MultiGraph::new(ell * VERTICES_PER_BLOCK, prime_edges)?;
    let double_graph = MultiGraph::new(ell * VERTICES_PER_BLOCK, double_edges)?;
    Ok(GadgetPair {
        ell,
        labeling: labeling.clone(),
        prime: graphic_matroid(prime_graph.clone()),
        double: graphic_matroid(double_graph.clone()),
        prime_graph,
        double_graph,
    })
}

impl GadgetPair {
    pub fn size(&self) -> usize {
        9 * self.ell
    }

    fn letters(&self, letters: &[char]) -> ElementSet {
        ElementSet::from_indices(
            self.size(),
            (1..=self.ell).flat_map(|j| letters.iter().map(move |&c| element(j, c))),
        )
    }

    /// The `4l`-element class `{a_j, b_j, c_j, i_j}`.
    pub fn small_class(&self) -> ElementSet {
        self.letters(&['a', 'b', 'c', 'i'])
    }

    /// The `5l`-element class `{d_j, e_j, f_j, g_j, h_j}`.
    pub fn large_class(&self) -> ElementSet {
        self.letters(&['d', 'e', 'f', 'g', 'h'])
    }

    pub fn common_independent(&self, set: &ElementSet) -> bool {
        self.prime.independent(set) && self.double.independent(set)
    }

    pub fn render(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(element_label).collect()
    }
}

/// Outcome of the exhaustive sweep over all bipartitions with `a_1` fixed in
/// the first class.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetCertificate {
    pub ell: usize,
    pub ground_size: usize,
    pub prime_rank: usize,
    pub double_rank: usize,
    pub bipartitions_checked: u64,
    pub feasible_bipartitions: u64,
    /// Condition (a): the `{d,e,f,g,h} / {a,b,c,i}` partition, when it is a
    /// partition into common independent sets.
    pub witness: Option<(Vec<String>, Vec<String>)>,
    /// Condition (b): a feasible bipartition whose sizes are not `{5l, 4l}`.
    pub size_counterexample: Option<(Vec<String>, Vec<String>)>,
    /// Every feasible bipartition splits each `W_j - i_j` as 5/3 with
    /// `e_j, f_j, g_j, h_j` together.
    pub blocks_split_five_three: bool,
    /// Every feasible bipartition puts all `e, f, g, h` in one class and all
    /// `i_j` in the other.
    pub i_edges_opposite: bool,
}

impl GadgetCertificate {
    pub fn condition_a(&self) -> bool {
        self.witness.is_some()
    }

    pub fn condition_b(&self) -> bool {
        self.feasible_bipartitions > 0 && self.size_counterexample.is_none()
    }

    pub fn ranks_ok(&self) -> bool {
        self.prime_rank == 5 * self.ell && self.double_rank == 5 * self.ell
    }

    pub fn certified(&self) -> bool {
        self.ranks_ok() && self.condition_a() && self.condition_b() && self.blocks_split_five_three && self.i_edges_opposite
    }
}

#[derive(Default)]
struct SweepStats {
    checked: u64,
    feasible: u64,
    counterexample: Option<u64>,
    five_three: bool,
    opposite: bool,
}

impl SweepStats {
    fn merge(mut self, other: SweepStats) -> SweepStats {
        self.checked += other.checked;
        self.feasible += other.feasible;
        self.counterexample = match (self.counterexample, other.counterexample) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.five_three &= other.five_three;
        self.opposite &= other.opposite;
        self
    }
}

/// Sweep all `2^(9l - 1)` bipartitions (fixing `a_1` in the first class, which
/// is legitimate because conditions (a) and (b) are symmetric in the classes).
pub fn verify_gadget(pair: &GadgetPair, cap: usize) -> Result<GadgetCertificate> {
    let n = pair.size();
    check_cap("gadget sweep", n, cap)?;
    let ell = pair.ell;
    let full = (1u64 << n) - 1;
    let per_block = |letters: &[char]| -> Vec<u64> {
        (1..=ell)
            .map(|j| letters.iter().map(|&c| 1u64 << element(j, c)).fold(0, |a, b| a | b))
            .collect()
    };
    let efgh = per_block(&['e', 'f', 'g', 'h']);
    let hat = per_block(&['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h']);
    let i_bits = per_block(&['i']);
    let all_i = i_bits.iter().fold(0, |a, b| a | b);
    let all_efgh = efgh.iter().fold(0, |a, b| a | b);

    let free_bits = n - 1;
    let total: u64 = 1 << free_bits;
    let chunk: u64 = 1 << free_bits.min(12);
    let stats = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut st = SweepStats {
                five_three: true,
                opposite: true,
                ..Default::default()
            };
            for rest in c * chunk..((c + 1) * chunk).min(total) {
                let s1 = 1 | (rest << 1);
                let s2 = full & !s1;
                st.checked += 1;
                let x1 = ElementSet::from_mask(n, s1);
                let x2 = ElementSet::from_mask(n, s2);
                if !(pair.common_independent(&x1) && pair.common_independent(&x2)) {
                    continue;
                }
                st.feasible += 1;
                let sizes = (s1.count_ones() as usize, s2.count_ones() as usize);
                if sizes != (5 * ell, 4 * ell) && sizes != (4 * ell, 5 * ell) {
                    st.counterexample.get_or_insert(s1);
                }
                for j in 0..ell {
                    let together = efgh[j] & s1 == efgh[j] || efgh[j] & s2 == efgh[j];
                    let k1 = (hat[j] & s1).count_ones();
                    if !together || !(k1 == 5 || k1 == 3) {
                        st.five_three = false;
                    }
                }
                let big = if s1 & efgh[0] != 0 { s1 } else { s2 };
                let small = full & !big;
                if big & all_efgh != all_efgh || small & all_i != all_i {
                    st.opposite = false;
                }
            }
            st
        })
        .reduce(
            || SweepStats {
                five_three: true,
                opposite: true,
                ..Default::default()
            },
            SweepStats::merge,
        );

    let large = pair.large_class();
    let small = pair.small_class();
    let witness = (pair.common_independent(&large) && pair.common_independent(&small))
        .then(|| (pair.render(&large), pair.render(&small)));
    let size_counterexample = stats.counterexample.map(|s1| {
        let x1 = ElementSet::from_mask(n, s1);
        (pair.render(&x1), pair.render(&x1.complement()))
    });
    Ok(GadgetCertificate {
        ell,
        ground_size: n,
        prime_rank: pair.prime.full_rank(),
        double_rank: pair.double.full_rank(),
        bipartitions_checked: stats.checked,
        feasible_bipartitions: stats.feasible,
        witness,
        size_counterexample,
        blocks_split_five_three: stats.five_three,
        i_edges_opposite: stats.opposite,
    })
}

/// All feasible bipartitions `(S1, S2)` of the gadget, both orientations.
/// Used to cross-check reductions built on the gadget; exhaustive.
pub fn feasible_bipartitions(pair: &GadgetPair, cap: usize) -> Result<Vec<(ElementSet, ElementSet)>> {
    let n = pair.size();
    check_cap("gadget sweep", n, cap)?;
    let full = (1u64 << n) - 1;
    Ok((0..1u64 << n)
        .into_par_iter()
        .filter_map(|s1| {
            let x1 = ElementSet::from_mask(n, s1);
            let x2 = ElementSet::from_mask(n, full & !s1);
            (pair.common_independent(&x1) && pair.common_independent(&x2)).then_some((x1, x2))
        })
        .collect())
}

/// Distinct `K4` labelings (by triangle structure) in lexicographic order.
fn k4_labelings(labels: [char; 6]) -> Vec<[char; 6]> {
    let mut seen = BTreeSet::new();
    labels
        .iter()
        .copied()
        .permutations(6)
        .filter_map(|p| {
            let arr: [char; 6] = p.try_into().expect("six labels");
            seen.insert(GadgetBlockLabeling::triangle_signature(&arr)).then_some(arr)
        })
        .collect()
}

/// Search summary alongside the labeling found.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub labeling: GadgetBlockLabeling,
    pub candidates_tried: usize,
}

/// First labeling, in lexicographic order of `(G' K4 labels, G'' K4 labels)`,
/// whose gadget certifies at `l = 1` and `l = 2`. Labelings that give the same
/// `K4` triangles are the same matroid and are tried once. The pendant
/// attachment vertex does not change the matroid (a pendant edge is a
/// coloop wherever it hangs), so pendants hang off vertex 0.
pub fn search_block_labeling() -> Result<SearchOutcome> {
    let primes = k4_labelings(['a', 'b', 'c', 'd', 'e', 'f']);
    let doubles = k4_labelings(['a', 'b', 'c', 'd', 'g', 'h']);
    let mut tried = 0;
    for p in &primes {
        for d in &doubles {
            tried += 1;
            let labeling = GadgetBlockLabeling::new(*p, *d)?;
            if certifies(&labeling, 1)? && certifies(&labeling, 2)? {
                return Ok(SearchOutcome {
                    labeling,
                    candidates_tried: tried,
                });
            }
        }
    }
    Err(Error::precondition(
        "gadget search exhausted without a certified labeling",
    ))
}

fn certifies(labeling: &GadgetBlockLabeling, ell: usize) -> Result<bool> {
    let pair = build_gadget(labeling, ell)?;
    if pair.prime.full_rank() != 5 * ell || pair.double.full_rank() != 5 * ell {
        return Ok(false);
    }
    Ok(verify_gadget(&pair, DEFAULT_EXHAUSTIVE_CAP)?.certified())
}

/// The certified labeling, searched once per process.
pub fn certified_labeling() -> &'static GadgetBlockLabeling {
    static LABELING: OnceLock<GadgetBlockLabeling> = OnceLock::new();
    LABELING.get_or_init(|| {
        search_block_labeling()
            .expect("gadget search must find a certified labeling")
            .labeling
    })
}
