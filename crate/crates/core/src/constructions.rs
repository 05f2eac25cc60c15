//! Concrete matroid classes and combinators.
//!
//! Every constructor returns a [`Matroid`] whose structure is also available as
//! a serializable [`MatroidDescriptor`], so instances can be written to JSON and
//! rebuilt exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, MatrixOverField, PRIME_LIMIT};
use crate::graph::{BipartiteGraph, MultiGraph};
use crate::matroid::{Matroid, Node};
use crate::set::{ElementSet, GroundSet};

/// A partition of `0..n` into non-empty disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionOfGroundSet {
    universe: usize,
    blocks: Vec<ElementSet>,
    block_of: Vec<usize>,
}

impl PartitionOfGroundSet {
    pub fn new(universe: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; universe];
        let mut sets = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::precondition(format!("block {b} is empty")));
            }
            for &e in block {
                if e >= universe {
                    return Err(Error::ElementOutOfRange {
                        element: e,
                        size: universe,
                    });
                }
                if block_of[e] != usize::MAX {
                    return Err(Error::precondition(format!(
                        "element {e} appears in blocks {} and {b}",
                        block_of[e]
                    )));
                }
                block_of[e] = b;
            }
            sets.push(ElementSet::from_indices(universe, block.iter().copied()));
        }
        if let Some(e) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::precondition(format!("element {e} is in no block")));
        }
        Ok(PartitionOfGroundSet {
            universe,
            blocks: sets,
            block_of,
        })
    }

    pub fn singletons(universe: usize) -> Self {
        Self::new(universe, (0..universe).map(|e| vec![e]).collect()).expect("singletons partition")
    }

    /// Consecutive pairs `{2i, 2i+1}`.
    pub fn consecutive_pairs(universe: usize) -> Result<Self> {
        if universe % 2 != 0 {
            return Err(Error::precondition("pairing needs an even ground set"));
        }
        Self::new(universe, (0..universe / 2).map(|i| vec![2 * i, 2 * i + 1]).collect())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, e: usize) -> usize {
        self.block_of[e]
    }

    pub fn block_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(ElementSet::to_vec).collect()
    }

    /// True iff `set` is a union of blocks.
    pub fn is_modular(&self, set: &ElementSet) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset(set) || b.is_disjoint(set))
    }

    /// Union of the selected blocks.
    pub fn union_of(&self, selected: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut s = ElementSet::empty(self.universe);
        for b in selected {
            s = s.union(&self.blocks[b]);
        }
        s
    }
}

impl Serialize for PartitionOfGroundSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.block_lists().serialize(s)
    }
}

/// The family `H` defining a paving matroid of rank `rank`: bases are the
/// `rank`-sets contained in no member of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneFamily {
    universe: usize,
    rank: usize,
    sets: Vec<ElementSet>,
}

impl HyperplaneFamily {
    /// Validates `rank >= 2`, `universe >= rank`, every set proper with at least
    /// `rank` elements, and pairwise intersections of at most `rank - 2`.
    pub fn new(universe: usize, rank: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::precondition(format!("paving rank must be >= 2, got {rank}")));
        }
        if universe < rank {
            return Err(Error::precondition(format!(
                "ground set of {universe} elements is smaller than rank {rank}"
            )));
        }
        for (i, h) in sets.iter().enumerate() {
            if h.universe() != universe {
                return Err(Error::UniverseMismatch {
                    expected: universe,
                    found: h.universe(),
                });
            }
            if h.len() < rank || h.len() >= universe {
                return Err(Error::precondition(format!(
                    "H[{i}] = {h} must be a proper subset with at least {rank} elements"
                )));
            }
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let common = sets[i].intersection(&sets[j]).len();
                if common + 2 > rank {
                    return Err(Error::precondition(format!(
                        "H[{i}] = {} and H[{j}] = {} share {common} elements (at most {} allowed)",
                        sets[i],
                        sets[j],
                        rank - 2
                    )));
                }
            }
        }
        Ok(HyperplaneFamily {
            universe,
            rank,
            sets,
        })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub(crate) fn is_independent(&self, x: &ElementSet) -> bool {
        let n = x.len();
        if n < self.rank {
            return true;
        }
        n == self.rank && self.sets.iter().all(|h| !x.is_subset(h))
    }
}

pub fn free_matroid(ground: GroundSet) -> Matroid {
    Matroid::from_node(ground, Node::Free)
}

/// `U(n, r)`: independent iff at most `r` elements.
pub fn uniform_matroid(ground: GroundSet, rank: usize) -> Result<Matroid> {
    if rank > ground.size() {
        return Err(Error::precondition(format!(
            "uniform rank {rank} exceeds ground size {}",
            ground.size()
        )));
    }
    Ok(Matroid::from_node(ground, Node::Uniform { rank }))
}

pub fn partition_matroid(partition: PartitionOfGroundSet, caps: Vec<usize>) -> Result<Matroid> {
    if caps.len() != partition.len() {
        return Err(Error::precondition(format!(
            "{} caps for {} blocks",
            caps.len(),
            partition.len()
        )));
    }
    for (b, (&cap, block)) in caps.iter().zip(partition.blocks()).enumerate() {
        if cap > block.len() {
            return Err(Error::precondition(format!(
                "cap {cap} exceeds size {} of block {b}",
                block.len()
            )));
        }
    }
    Ok(Matroid::from_node(
        GroundSet::new(partition.universe()),
        Node::Partition { partition, caps },
    ))
}

/// Edge sets independent iff they form a forest. Ground labels are the edge labels.
pub fn graphic_matroid(graph: MultiGraph) -> Matroid {
    Matroid::from_node(graph.ground(), Node::Graphic(graph))
}

/// Left vertex sets independent iff some matching saturates them.
pub fn transversal_matroid(graph: BipartiteGraph) -> Matroid {
    Matroid::from_node(graph.left().clone(), Node::Transversal(graph))
}

pub fn paving_matroid(family: HyperplaneFamily) -> Matroid {
    Matroid::from_node(GroundSet::new(family.universe()), Node::Paving(family))
}

/// Columns independent iff linearly independent over the matrix's field.
pub fn linear_matroid(matrix: MatrixOverField) -> Matroid {
    Matroid::from_node(GroundSet::new(matrix.cols()), Node::Linear(matrix))
}

/// Second summand's elements are offset by the first's size.
pub fn direct_sum(m1: &Matroid, m2: &Matroid) -> Matroid {
    direct_sum_all([m1.clone(), m2.clone()])
}

/// n-ary direct sum over consecutive blocks of the ground set.
pub fn direct_sum_all(parts: impl IntoIterator<Item = Matroid>) -> Matroid {
    let parts: Vec<Matroid> = parts.into_iter().collect();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut ground = GroundSet::new(0);
    let mut all_labeled = true;
    let mut labels = Vec::new();
    for p in &parts {
        offsets.push(ground.size());
        ground = GroundSet::new(ground.size() + p.size());
        match p.ground().labels() {
            Some(l) if all_labeled => labels.extend(l.iter().cloned()),
            _ => all_labeled = false,
        }
    }
    if all_labeled {
        if let Ok(g) = GroundSet::labeled(labels) {
            ground = g;
        }
    }
    Matroid::from_node(ground, Node::DirectSum { parts, offsets })
}

/// Independent sets of `m` with at most `k` elements.
pub fn truncate(m: &Matroid, k: usize) -> Matroid {
    Matroid::from_node(
        m.ground().clone(),
        Node::Truncate {
            inner: m.clone(),
            k,
        },
    )
}

/// `X` independent iff `S - X` spans `m`.
pub fn dual(m: &Matroid) -> Matroid {
    Matroid::from_node(m.ground().clone(), Node::Dual { inner: m.clone() })
}

/// Replace every element by `k` parallel copies. Copy `j` (1-based) of element
/// `e` sits at index `(j - 1) * n + e` and is labeled `"e#j"`.
pub fn parallel_copies(m: &Matroid, k: usize) -> Result<Matroid> {
    if k == 0 {
        return Err(Error::precondition("parallel_copies needs k >= 1"));
    }
    let n = m.size();
    let labels = (1..=k).flat_map(|j| (0..n).map(move |e| (j, e))).map(|(j, e)| format!("{}#{j}", m.ground().label(e)));
    let ground = GroundSet::labeled(labels)?;
    Ok(Matroid::from_node(
        ground,
        Node::ParallelCopies {
            inner: m.clone(),
            k,
        },
    ))
}

/// Reorder the ground set: new element `i` is `m`'s element `order[i]`.
pub fn permute(m: &Matroid, order: Vec<usize>) -> Result<Matroid> {
    let n = m.size();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::precondition(format!("permutation of length {} for {n} elements", order.len())));
    }
    for &o in &order {
        if o >= n || std::mem::replace(&mut seen[o], true) {
            return Err(Error::precondition("order is not a permutation"));
        }
    }
    let labels = m
        .ground()
        .labels()
        .map(|l| order.iter().map(|&o| l[o].clone()).collect());
    Ok(Matroid::from_node(
        GroundSet::with_labels_unchecked(n, labels),
        Node::Permute {
            inner: m.clone(),
            order,
        },
    ))
}

/// Randomized linear representation of a transversal matroid over GF(p): entry
/// `(t, s)` is a uniform nonzero field element when `st` is an edge, 0
/// otherwise. Correct with probability at least `1 - |S| 2^|S| / p`.
pub fn transversal_linear_representation(graph: &BipartiteGraph, p: u64, seed: u64) -> Result<MatrixOverField> {
    if p < 1_000_000 {
        return Err(Error::precondition(format!(
            "modulus {p} is too small for a generic representation (need >= 10^6)"
        )));
    }
    if p >= PRIME_LIMIT || !is_prime(p) {
        return Err(Error::precondition(format!("{p} is not a prime below 2^31")));
    }
    let rows = graph.right_size();
    let cols = graph.left_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = vec![0u64; rows * cols];
    for &(s, t) in graph.edges() {
        entries[t * cols + s] = rng.gen_range(1..p);
    }
    MatrixOverField::over_prime(p, rows, cols, entries)
}

/// Serializable mirror of the constructor tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatroidDescriptor {
    Free {
        size: usize,
    },
    Uniform {
        size: usize,
        rank: usize,
    },
    Partition {
        size: usize,
        blocks: Vec<Vec<usize>>,
        caps: Vec<usize>,
    },
    Graphic {
        graph: MultiGraph,
    },
    Transversal {
        graph: BipartiteGraph,
    },
    Paving {
        size: usize,
        rank: usize,
        hyperplanes: Vec<Vec<usize>>,
    },
    Linear {
        matrix: MatrixOverField,
    },
    DirectSum {
        parts: Vec<MatroidDescriptor>,
    },
    Truncate {
        inner: Box<MatroidDescriptor>,
        k: usize,
    },
    Dual {
        inner: Box<MatroidDescriptor>,
    },
    ParallelCopies {
        inner: Box<MatroidDescriptor>,
        k: usize,
    },
    Permute {
        inner: Box<MatroidDescriptor>,
        order: Vec<usize>,
    },
}

impl MatroidDescriptor {
    /// Build the matroid; ground labels come from the leaves and combinators.
    pub fn build(&self) -> Result<Matroid> {
        Ok(match self {
            MatroidDescriptor::Free { size } => free_matroid(GroundSet::new(*size)),
            MatroidDescriptor::Uniform { size, rank } => uniform_matroid(GroundSet::new(*size), *rank)?,
            MatroidDescriptor::Partition { size, blocks, caps } => {
                partition_matroid(PartitionOfGroundSet::new(*size, blocks.clone())?, caps.clone())?
            }
            MatroidDescriptor::Graphic { graph } => graphic_matroid(graph.clone()),
            MatroidDescriptor::Transversal { graph } => transversal_matroid(graph.clone()),
            MatroidDescriptor::Paving {
                size,
                rank,
                hyperplanes,
            } => {
                let sets = hyperplanes
                    .iter()
                    .map(|h| ElementSet::try_from_indices(*size, h.iter().copied()))
                    .collect::<Result<Vec<_>>>()?;
                paving_matroid(HyperplaneFamily::new(*size, *rank, sets)?)
            }
            MatroidDescriptor::Linear { matrix } => linear_matroid(matrix.clone()),
            MatroidDescriptor::DirectSum { parts } => {
                direct_sum_all(parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?)
            }
            MatroidDescriptor::Truncate { inner, k } => truncate(&inner.build()?, *k),
            MatroidDescriptor::Dual { inner } => dual(&inner.build()?),
            MatroidDescriptor::ParallelCopies { inner, k } => parallel_copies(&inner.build()?, *k)?,
            MatroidDescriptor::Permute { inner, order } => permute(&inner.build()?, order.clone())?,
        })
    }
}

impl Matroid {
    /// Descriptor tree of this matroid. Oracle-backed and logged matroids have
    /// no descriptor.
    pub fn descriptor(&self) -> Result<MatroidDescriptor> {
        let boxed = |m: &Matroid| m.descriptor().map(Box::new);
        Ok(match self.node() {
            Node::Free => MatroidDescriptor::Free { size: self.size() },
            Node::Uniform { rank } => MatroidDescriptor::Uniform {
                size: self.size(),
                rank: *rank,
            },
            Node::Partition { partition, caps } => MatroidDescriptor::Partition {
                size: self.size(),
                blocks: partition.block_lists(),
                caps: caps.clone(),
            },
            Node::Graphic(g) => MatroidDescriptor::Graphic { graph: g.clone() },
            Node::Transversal(g) => MatroidDescriptor::Transversal { graph: g.clone() },
            Node::Paving(h) => MatroidDescriptor::Paving {
                size: h.universe(),
                rank: h.rank(),
                hyperplanes: h.sets().iter().map(ElementSet::to_vec).collect(),
            },
            Node::Linear(a) => MatroidDescriptor::Linear { matrix: a.clone() },
            Node::DirectSum { parts, .. } => MatroidDescriptor::DirectSum {
                parts: parts.iter().map(Matroid::descriptor).collect::<Result<_>>()?,
            },
            Node::Truncate { inner, k } => MatroidDescriptor::Truncate {
                inner: boxed(inner)?,
                k: *k,
            },
            Node::Dual { inner } => MatroidDescriptor::Dual { inner: boxed(inner)? },
            Node::ParallelCopies { inner, k } => MatroidDescriptor::ParallelCopies {
                inner: boxed(inner)?,
                k: *k,
            },
            Node::Permute { inner, order } if order.iter().enumerate().all(|(i, &o)| i == o) => {
                return inner.descriptor()
            }
            Node::Permute { inner, order } => MatroidDescriptor::Permute {
                inner: boxed(inner)?,
                order: order.clone(),
            },
            Node::Oracle { name, .. } => {
                return Err(Error::Format(format!("oracle matroid {name:?} has no descriptor")))
            }
            Node::Logged { .. } => return Err(Error::Format("logged matroid has no descriptor".into())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_independence_axioms;
    use crate::set::DEFAULT_EXHAUSTIVE_CAP as CAP;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    fn k4() -> MultiGraph {
        MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn free_and_uniform() {
        let free = free_matroid(GroundSet::new(4));
        assert!(free.independent(&ElementSet::full(4)));
        assert_eq!(free.full_rank(), 4);
        let u = uniform_matroid(GroundSet::new(4), 2).unwrap();
        assert!(u.independent(&set(4, &[0, 1])));
        assert!(!u.independent(&set(4, &[0, 1, 2])));
        let u44 = uniform_matroid(GroundSet::new(4), 4).unwrap();
        assert!(u44.oracle_equivalent(&free, CAP).unwrap());
        assert!(uniform_matroid(GroundSet::new(3), 4).is_err());
    }

    #[test]
    fn partition_matroid_caps() {
        let p = PartitionOfGroundSet::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let m = partition_matroid(p.clone(), vec![1, 1]).unwrap();
        assert!(m.independent(&set(4, &[0, 2])));
        assert!(!m.independent(&set(4, &[0, 1])));
        assert_eq!(m.full_rank(), 2);
        assert!(partition_matroid(p, vec![3, 1]).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionOfGroundSet::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(PartitionOfGroundSet::new(3, vec![vec![0, 1]]).is_err());
        assert!(PartitionOfGroundSet::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
    }

    #[test]
    fn graphic_rank_is_vertices_minus_components() {
        let g = MultiGraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 4), (3, 4)]).unwrap();
        let m = graphic_matroid(g.clone());
        assert_eq!(m.full_rank(), g.vertex_count() - g.component_count());
        assert_eq!(m.full_rank(), 3);
        assert!(!m.independent(&set(6, &[4])));
        assert!(!m.independent(&set(6, &[3, 5])));
    }

    #[test]
    fn transversal_star_and_matching() {
        let star = BipartiteGraph::new(3, 1, vec![(0, 0), (1, 0), (2, 0)]).unwrap();
        let m = transversal_matroid(star);
        assert!((0..3).all(|i| m.independent(&set(3, &[i]))));
        assert!(!m.independent(&set(3, &[0, 1])));
        let pm = transversal_matroid(BipartiteGraph::new(3, 3, vec![(0, 0), (1, 1), (2, 2)]).unwrap());
        assert!(pm.independent(&ElementSet::full(3)));
    }

    #[test]
    fn paving_examples() {
        let h = HyperplaneFamily::new(4, 2, vec![set(4, &[0, 1]), set(4, &[2, 3])]).unwrap();
        let m = paving_matroid(h);
        assert!(!m.independent(&set(4, &[0, 1])));
        assert!(m.independent(&set(4, &[0, 2])));
        assert!(m.independent(&set(4, &[3])));
        let empty = paving_matroid(HyperplaneFamily::new(5, 3, vec![]).unwrap());
        assert!(empty.oracle_equivalent(&uniform_matroid(GroundSet::new(5), 3).unwrap(), CAP).unwrap());
    }

    #[test]
    fn paving_family_violations_are_reported() {
        let err = HyperplaneFamily::new(5, 3, vec![set(5, &[0, 1, 2]), set(5, &[1, 2, 3])]).unwrap_err();
        assert!(err.to_string().contains("share 2"));
        assert!(HyperplaneFamily::new(4, 1, vec![]).is_err());
        assert!(HyperplaneFamily::new(4, 2, vec![set(4, &[0])]).is_err());
        assert!(HyperplaneFamily::new(4, 2, vec![ElementSet::full(4)]).is_err());
    }

    #[test]
    fn linear_examples() {
        let id = linear_matroid(MatrixOverField::identity_gf(2, 4).unwrap());
        assert!(id.oracle_equivalent(&free_matroid(GroundSet::new(4)), CAP).unwrap());
        // column 0 repeated as column 2
        let a = MatrixOverField::over_prime(2, 2, 3, vec![1, 0, 1, 1, 1, 1]).unwrap();
        let m = linear_matroid(a);
        assert!(!m.independent(&set(3, &[0, 2])));
        assert!(m.independent(&set(3, &[0, 1])));
    }

    #[test]
    fn graphic_equals_gf2_incidence() {
        let g = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 4), (1, 1), (3, 4)])
            .unwrap();
        let rows = g.incidence_gf2();
        let entries = rows.iter().flatten().copied().collect();
        let a = MatrixOverField::over_prime(2, g.vertex_count(), g.edge_count(), entries).unwrap();
        assert!(graphic_matroid(g).oracle_equivalent(&linear_matroid(a), CAP).unwrap());
    }

    #[test]
    fn direct_sum_examples() {
        let f2 = free_matroid(GroundSet::new(2));
        let f3 = free_matroid(GroundSet::new(3));
        assert!(direct_sum(&f2, &f3).oracle_equivalent(&free_matroid(GroundSet::new(5)), CAP).unwrap());
        let u21 = uniform_matroid(GroundSet::new(2), 1).unwrap();
        let s = direct_sum(&u21, &u21);
        assert!(s.independent(&set(4, &[0, 2])));
        assert!(!s.independent(&set(4, &[0, 1])));
        assert_eq!(s.full_rank(), 2);
    }

    #[test]
    fn truncation_examples() {
        let t = truncate(&free_matroid(GroundSet::new(5)), 2);
        assert!(t.oracle_equivalent(&uniform_matroid(GroundSet::new(5), 2).unwrap(), CAP).unwrap());
        let m = graphic_matroid(k4());
        assert!(truncate(&m, m.full_rank()).oracle_equivalent(&m, CAP).unwrap());
    }

    #[test]
    fn dual_examples() {
        let u = uniform_matroid(GroundSet::new(5), 2).unwrap();
        assert!(dual(&u).oracle_equivalent(&uniform_matroid(GroundSet::new(5), 3).unwrap(), CAP).unwrap());
        let m = graphic_matroid(k4());
        assert_eq!(dual(&m).full_rank(), 3);
        assert!(dual(&dual(&m)).oracle_equivalent(&m, CAP).unwrap());
    }

    #[test]
    fn parallel_copy_examples() {
        let m = graphic_matroid(k4());
        let one = parallel_copies(&m, 1).unwrap();
        assert!(one.oracle_equivalent(&m, CAP).unwrap());
        let three = parallel_copies(&m, 3).unwrap();
        assert_eq!(three.size(), 18);
        assert_eq!(three.full_rank(), m.full_rank());
        assert!(!three.independent(&set(18, &[0, 6])));
        assert_eq!(three.ground().label(6), "e0#2");
        assert!(parallel_copies(&m, 0).is_err());
    }

    #[test]
    fn every_construction_satisfies_the_axioms() {
        let h = HyperplaneFamily::new(6, 3, vec![set(6, &[0, 1, 2]), set(6, &[2, 3, 4])]).unwrap();
        let bip = BipartiteGraph::new(4, 3, vec![(0, 0), (1, 0), (1, 1), (2, 2), (3, 2), (3, 1)]).unwrap();
        let ms = vec![
            free_matroid(GroundSet::new(4)),
            uniform_matroid(GroundSet::new(5), 3).unwrap(),
            graphic_matroid(k4()),
            transversal_matroid(bip),
            paving_matroid(h),
            dual(&graphic_matroid(k4())),
            truncate(&graphic_matroid(k4()), 2),
            parallel_copies(&uniform_matroid(GroundSet::new(3), 2).unwrap(), 2).unwrap(),
        ];
        for m in ms {
            let report = check_independence_axioms(&m, CAP).unwrap();
            assert!(report.passed(), "{} failed: {report:?}", m.kind_name());
        }
    }

    #[test]
    fn transversal_representation_rejects_small_moduli() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(transversal_linear_representation(&g, 101, 1).is_err());
        assert!(transversal_linear_representation(&g, 1_000_001, 1).is_err()); // composite
    }

    #[test]
    fn transversal_representation_examples() {
        let p = 2_147_483_647;
        let pm = BipartiteGraph::new(3, 3, vec![(0, 0), (1, 1), (2, 2)]).unwrap();
        let a = transversal_linear_representation(&pm, p, 7).unwrap();
        assert_eq!(a.column_rank(&ElementSet::full(3)), 3);
        let isolated = BipartiteGraph::new(3, 2, vec![(0, 0), (1, 1)]).unwrap();
        let m = linear_matroid(transversal_linear_representation(&isolated, p, 7).unwrap());
        assert!(!m.independent(&set(3, &[2])));
        assert_eq!(
            transversal_linear_representation(&isolated, p, 9).unwrap(),
            transversal_linear_representation(&isolated, p, 9).unwrap()
        );
    }

    #[test]
    fn descriptor_round_trip() {
        let m = truncate(
            &direct_sum(&graphic_matroid(k4()), &dual(&uniform_matroid(GroundSet::new(3), 1).unwrap())),
            4,
        );
        let d = m.descriptor().unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: MatroidDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(back.build().unwrap().oracle_equivalent(&m, CAP).unwrap());
    }
}
