//! Ground sets and bitset-backed element sets.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Default cap on ground-set size for operations that sweep all subsets.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

/// A dense ground set `0..size` with optional display labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroundSet")]
pub struct GroundSet {
    size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawGroundSet {
    size: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawGroundSet> for GroundSet {
    type Error = Error;

    fn try_from(raw: RawGroundSet) -> Result<Self> {
        match raw.labels {
            None => Ok(GroundSet::new(raw.size)),
            Some(labels) if labels.len() == raw.size => GroundSet::labeled(labels),
            Some(labels) => Err(Error::Format(format!(
                "ground set of size {} has {} labels",
                raw.size,
                labels.len()
            ))),
        }
    }
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, labels: None }
    }

    /// Labels must be unique; the ground set size is the number of labels.
    pub fn labeled<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::precondition(format!("duplicate ground label {l:?}")));
            }
        }
        Ok(GroundSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of element `i`; falls back to the index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i| i < self.size),
        }
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    /// Concatenation used by direct sums: `other`'s elements are offset by `self.size()`.
    /// Labels are kept only if both sides carry them and stay unique.
    pub fn concat(&self, other: &GroundSet) -> GroundSet {
        let size = self.size + other.size;
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => {
                let joined: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
                GroundSet::labeled(joined).ok().and_then(|g| g.labels)
            }
            _ => None,
        };
        GroundSet { size, labels }
    }

    pub(crate) fn with_labels_unchecked(size: usize, labels: Option<Vec<String>>) -> Self {
        debug_assert!(labels.as_ref().map_or(true, |l| l.len() == size));
        GroundSet { size, labels }
    }

    /// Human-readable rendering of a set using this ground set's labels.
    pub fn render(&self, set: &ElementSet) -> String {
        let parts: Vec<String> = set.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

const INLINE_WORDS: usize = 4;

/// A subset of `0..universe`, stored as a bitset.
///
/// Sets up to 256 elements live inline; larger universes spill to the heap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: SmallVec<[u64; INLINE_WORDS]>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Panics if an index is outside the universe; use [`ElementSet::try_from_indices`]
    /// for untrusted input.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    pub fn try_from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for i in items {
            if i >= universe {
                return Err(Error::ElementOutOfRange {
                    element: i,
                    size: universe,
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Bit `i` of `mask` is element `i`. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "from_mask needs a universe of at most 64 elements");
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "element {i} outside universe {}", self.universe);
        let had = self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        !had
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let had = self.contains(i);
        if had {
            self.words[i / 64] &= !(1 << (i % 64));
        }
        had
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation across different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Re-embed into a larger universe, shifting every element by `offset`.
    pub fn embed(&self, universe: usize, offset: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in self.iter() {
            s.insert(i + offset);
        }
        s
    }

    /// Elements in `offset..offset + len`, shifted down to `0..len`.
    pub fn slice(&self, offset: usize, len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in self.iter() {
            if i >= offset && i < offset + len {
                s.insert(i - offset);
            }
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Orders by bitset encoding, read as a little-endian multiword integer.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    std::cmp::Ordering::Equal => continue,
                    o => return o,
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// All subsets of `0..n` in increasing bitset order. Fails above `cap`.
pub fn all_subsets(n: usize, cap: usize) -> Result<impl Iterator<Item = ElementSet>> {
    check_cap("subset sweep", n, cap)?;
    Ok((0..1u64 << n).map(move |m| ElementSet::from_mask(n, m)))
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap || size > 63 {
        return Err(Error::ResourceLimit { what, size, cap });
    }
    Ok(())
}

/// All `k`-subsets of `items` in lexicographic order of positions.
pub fn k_subsets(items: &[usize], k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    use itertools::Itertools;
    items.iter().copied().combinations(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_stays_in_universe() {
        let a = ElementSet::from_indices(70, [0, 3, 65, 69]);
        let b = ElementSet::from_indices(70, [3, 4, 69]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 4, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 69]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        let c = a.complement();
        assert_eq!(c.len(), 66);
        assert!(c.iter().all(|i| i < 70));
        assert!(a.is_disjoint(&c));
    }

    #[test]
    fn full_and_empty() {
        assert_eq!(ElementSet::full(5).len(), 5);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(0).len(), 0);
        assert!(ElementSet::empty(300).is_empty());
        assert_eq!(ElementSet::full(300).complement(), ElementSet::empty(300));
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(ElementSet::try_from_indices(3, [0, 3]).is_err());
    }

    #[test]
    fn order_follows_bitset_encoding() {
        let a = ElementSet::from_mask(4, 0b0011);
        let b = ElementSet::from_mask(4, 0b0100);
        assert!(a < b);
        let big_a = ElementSet::from_indices(100, [70]);
        let big_b = ElementSet::from_indices(100, [0, 1, 2]);
        assert!(big_b < big_a);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(GroundSet::labeled(["a", "b", "a"]).is_err());
        let g = GroundSet::labeled(["a", "b"]).unwrap();
        assert_eq!(g.index_of("b"), Some(1));
    }

    #[test]
    fn subset_sweep_respects_cap() {
        assert_eq!(all_subsets(4, 24).unwrap().count(), 16);
        assert!(matches!(
            all_subsets(25, 24),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
