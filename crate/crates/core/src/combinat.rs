//! Subsets of `[n-1]`, compositions and integer partitions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest integer that may appear in a [`Subset`].
pub const SUBSET_CAPACITY: usize = 64;

/// A finite set of positive integers `<= 64`, stored as a bitmask (bit `i - 1` for `i`).
///
/// Ordering is lexicographic on the increasing element sequence, so `{} < {1} < {1,2} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > SUBSET_CAPACITY {
                return Err(Error::InvalidSubset(format!(
                    "element {e} outside [1, {SUBSET_CAPACITY}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// The interval `[lo, hi]` (empty when `lo > hi`).
    pub fn interval(lo: usize, hi: usize) -> Self {
        let mut s = Subset::EMPTY;
        for i in lo.max(1)..=hi {
            s.insert(i);
        }
        s
    }

    /// `[n-1]`, every possible descent of a permutation of degree `n`.
    pub fn full(n: usize) -> Self {
        Subset::interval(1, n.saturating_sub(1))
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=SUBSET_CAPACITY).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!((1..=SUBSET_CAPACITY).contains(&e));
        self.0 |= 1 << (e - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(t + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under `f`.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Subset {
        let mut out = Subset::EMPTY;
        for e in self.iter() {
            out.insert(f(e));
        }
        out
    }

    /// The composition `co(J)` of `n`.
    pub fn composition(self, n: usize) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        let mut prev = 0;
        for j in self.iter() {
            parts.push(j - prev);
            prev = j;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        parts
    }

    /// Inverse of [`Subset::composition`]: the partial sums of all but the last part.
    pub fn from_composition(parts: &[usize]) -> Result<Subset> {
        validate_composition(parts)?;
        let mut s = Subset::EMPTY;
        let mut acc = 0;
        for &p in &parts[..parts.len().saturating_sub(1)] {
            acc += p;
            if acc > SUBSET_CAPACITY {
                return Err(Error::InvalidComposition(format!("{parts:?} is too large")));
            }
            s.insert(acc);
        }
        Ok(s)
    }

    /// Every subset of `[n-1]`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Subset> {
        let m = n.saturating_sub(1);
        assert!(m < 32, "too many subsets to enumerate");
        let mut out: Vec<Subset> = (0..1u64 << m).map(Subset).collect();
        out.sort();
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let t = diff.trailing_zeros();
        // Both sets agree below element t+1 and exactly one of them contains it.
        // That one is smaller unless the other set stops before t+1.
        let self_has = self.0 >> t & 1 == 1;
        let lacking = if self_has { other.0 } else { self.0 };
        let lacking_continues = t < 63 && lacking >> (t + 1) != 0;
        if self_has == lacking_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Subset::from_elements(v).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn validate_composition(parts: &[usize]) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::InvalidComposition(format!(
            "{parts:?} has a zero part"
        )));
    }
    Ok(())
}

/// A subset `J` of `[n-1]` together with its composition `co(J)`.
///
/// Ordered lexicographically by composition, which is how F/M coefficient
/// vectors list their terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SubsetComposition {
    n: usize,
    subset: Subset,
    parts: Vec<usize>,
}

impl SubsetComposition {
    pub fn from_subset(n: usize, subset: Subset) -> Result<Self> {
        if subset.max().is_some_and(|m| m >= n) {
            return Err(Error::InvalidSubset(format!(
                "{subset} is not contained in [{}]",
                n.saturating_sub(1)
            )));
        }
        Ok(SubsetComposition {
            n,
            subset,
            parts: subset.composition(n),
        })
    }

    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let subset = Subset::from_composition(parts)?;
        Ok(SubsetComposition {
            n: parts.iter().sum(),
            subset,
            parts: parts.to_vec(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn subset(&self) -> Subset {
        self.subset
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

impl Ord for SubsetComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for SubsetComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All compositions of `n` in lexicographic order (`[]` alone for `n = 0`).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// `J ~ K`: the compositions `co(J)` and `co(K)` are rearrangements of each other.
pub fn rearrangement_equivalent(n: usize, j: Subset, k: Subset) -> bool {
    let mut a = j.composition(n);
    let mut b = k.composition(n);
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Groups the subsets of `[n-1]` into `~`-classes. Classes are listed by their
/// lexicographically smallest member, and each class is sorted.
pub fn rearrangement_classes(n: usize) -> Vec<Vec<Subset>> {
    let mut classes: Vec<(Vec<usize>, Vec<Subset>)> = Vec::new();
    for j in Subset::all(n) {
        let mut key = j.composition(n);
        key.sort_unstable();
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(j),
            None => classes.push((key, vec![j])),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&r| r >= c).count()).collect())
    }

    /// Dominance order: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centralizer order of the cycle type.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let max = self.0.first().copied().unwrap_or(0);
        for i in 1..=max {
            let m = self.0.iter().filter(|&&p| p == i).count() as u32;
            z *= (i as u128).pow(m);
            z *= (1..=m as u128).product::<u128>();
        }
        z
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_parts(&self.0))
    }
}

pub(crate) fn fmt_parts(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

/// All partitions of `n` in decreasing lexicographic order, starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n! / Π parts_i!`.
pub fn multinomial(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}
