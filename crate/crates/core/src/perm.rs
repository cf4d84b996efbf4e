//! Permutations, words, multisets of permutations and their descent statistics.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, Partition, Subset, SubsetComposition, SUBSET_CAPACITY};
use crate::error::{Error, Result};

/// Largest supported degree; descent sets must fit in a [`Subset`].
pub const MAX_DEGREE: usize = SUBSET_CAPACITY;

/// A permutation of `[n]` in one-line notation, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new<I>(word: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let word: Vec<usize> = word.into_iter().collect();
        let n = word.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            word: word.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub(crate) fn from_raw(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.iter().map(|&v| v as usize)).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn raw(&self) -> &[u8] {
        &self.word
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word: inv }
    }

    pub fn descent_set(&self) -> Subset {
        let mut bits = 0u64;
        for (i, w) in self.word.windows(2).enumerate() {
            if w[0] > w[1] {
                bits |= 1 << i;
            }
        }
        Subset::from_bits(bits)
    }

    /// Group product `(π·τ)(i) = π(τ(i))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Permutation> {
        if self.degree() != tau.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: tau.degree(),
            });
        }
        Ok(Permutation {
            word: tau.word.iter().map(|&t| self.word[t as usize - 1]).collect(),
        })
    }

    /// Cycle type, as a partition.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] as usize - 1;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths).expect("cycle lengths are positive")
    }

    /// Next permutation in lexicographic order, if any.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut w = self.word.clone();
        let n = w.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] >= w[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while w[j] <= w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        Some(Permutation { word: w })
    }
}

impl fmt::Display for Permutation {
    /// Digit-string form for degree `<= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::InvalidPermutation(format!("{s:?}: {e}")))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("{s:?}: bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    assert!(n <= 10, "refusing to enumerate S_{n}");
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur = Some(Permutation::identity(n));
    while let Some(p) = cur {
        cur = p.next_lex();
        out.push(p);
    }
    out
}

/// A sequence of pairwise distinct letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidWord(format!("letter {} repeats", w[0])));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Positions where the word decreases (1-based).
    pub fn descent_set(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, w) in self.letters.windows(2).enumerate() {
            if w[0] > w[1] {
                s.insert(i + 1);
            }
        }
        s
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Word {
            letters: p.raw().iter().map(|&v| v as u32).collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The permutation order-isomorphic to `w`.
pub fn standardize(w: &Word) -> Permutation {
    standardize_letters(w.letters())
}

pub(crate) fn standardize_letters<T: Ord + Copy>(letters: &[T]) -> Permutation {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| letters[i]);
    let mut word = vec![0u8; letters.len()];
    for (rank, &i) in order.iter().enumerate() {
        word[i] = (rank + 1) as u8;
    }
    Permutation { word }
}

/// All interleavings of `u` and `v` keeping each word's internal order, sorted.
pub fn shuffle(u: &Word, v: &Word) -> Result<Vec<Word>> {
    if let Some(&shared) = u.letters().iter().find(|x| v.letters().contains(x)) {
        return Err(Error::OverlappingAlphabets(shared));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(u.len() + v.len());
    shuffle_into(u.letters(), v.letters(), &mut cur, &mut |w| {
        out.push(Word { letters: w.to_vec() })
    });
    out.sort();
    Ok(out)
}

fn shuffle_into<T: Copy>(a: &[T], b: &[T], cur: &mut Vec<T>, emit: &mut impl FnMut(&[T])) {
    if a.is_empty() && b.is_empty() {
        emit(cur);
        return;
    }
    if let Some((&x, rest)) = a.split_first() {
        cur.push(x);
        shuffle_into(rest, b, cur, emit);
        cur.pop();
    }
    if let Some((&y, rest)) = b.split_first() {
        cur.push(y);
        shuffle_into(a, rest, cur, emit);
        cur.pop();
    }
}

/// `π ⧢ τ^{+n}` where `n` is the degree of `π`.
pub fn shifted_shuffle(pi: &Permutation, tau: &Permutation) -> Vec<Permutation> {
    let n = pi.degree() as u8;
    let shifted: Vec<u8> = tau.raw().iter().map(|&t| t + n).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(pi.degree() + tau.degree());
    shuffle_into(pi.raw(), &shifted, &mut cur, &mut |w| {
        out.push(Permutation::from_raw(w.to_vec()))
    });
    out.sort();
    out
}

/// `R_J^{-1}`: inverses of permutations whose descent set lies in `J`, sorted.
///
/// Generated as the shuffle of the consecutive runs `1..j_1`, `j_1+1..j_2`, ...
pub fn inverse_j_class(n: usize, j: Subset) -> Result<Vec<Permutation>> {
    let parts = SubsetComposition::from_subset(n, j)?.parts().to_vec();
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut next = 1u8;
    for p in parts {
        let run: Vec<u8> = (next..next + p as u8).collect();
        next += p as u8;
        let mut grown = Vec::new();
        for w in &words {
            let mut cur = Vec::with_capacity(w.len() + run.len());
            shuffle_into(w, &run, &mut cur, &mut |x| grown.push(x.to_vec()));
        }
        words = grown;
    }
    let mut out: Vec<Permutation> = words.into_iter().map(Permutation::from_raw).collect();
    out.sort();
    Ok(out)
}

/// `D_J^{-1}`: inverses of permutations whose descent set is exactly `J`, sorted.
pub fn d_class(n: usize, j: Subset) -> Result<Vec<Permutation>> {
    Ok(inverse_j_class(n, j)?
        .into_iter()
        .filter(|p| p.inverse().descent_set() == j)
        .collect())
}

/// Permutations of `[n]` with cycle type `lambda`, sorted.
pub fn conjugacy_class(n: usize, lambda: &Partition) -> Result<Vec<Permutation>> {
    if lambda.size() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {n}"
        )));
    }
    Ok(all_permutations(n)
        .into_iter()
        .filter(|p| p.cycle_type() == *lambda)
        .collect())
}

/// A finite multiset of permutations of a common degree.
///
/// Iteration is in lexicographic order of the permutations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PermMultiset {
    degree: usize,
    entries: BTreeMap<Permutation, u64>,
}

impl PermMultiset {
    pub fn new(degree: usize) -> Self {
        PermMultiset {
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_perms<I: IntoIterator<Item = Permutation>>(degree: usize, perms: I) -> Result<Self> {
        let mut b = PermMultiset::new(degree);
        for p in perms {
            b.insert(p, 1)?;
        }
        Ok(b)
    }

    /// Parses digit-string permutations, e.g. `["1324", "4132"]`.
    pub fn parse_list(degree: usize, perms: &[&str]) -> Result<Self> {
        let parsed = perms
            .iter()
            .map(|s| s.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        PermMultiset::from_perms(degree, parsed)
    }

    pub fn insert(&mut self, p: Permutation, multiplicity: u64) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        if multiplicity > 0 {
            *self.entries.entry(p).or_insert(0) += multiplicity;
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Total size, counting multiplicity.
    pub fn size(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, p: &Permutation) -> u64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, u64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    /// Every element repeated according to its multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<Permutation> {
        self.iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p.clone(), m as usize))
            .collect()
    }

    /// Disjoint union.
    pub fn union(&self, other: &PermMultiset) -> Result<PermMultiset> {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.insert(p.clone(), m)?;
        }
        Ok(out)
    }

    /// `AB`: every product `π·τ`, multiplicities multiplied.
    pub fn product(&self, other: &PermMultiset) -> Result<PermMultiset> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = PermMultiset::new(self.degree);
        for (p, m) in self.iter() {
            for (t, k) in other.iter() {
                *out.entries.entry(p.compose(t)?).or_insert(0) += m * k;
            }
        }
        Ok(out)
    }

    pub fn descent_statistic(&self) -> DescentStatistic {
        let mut counts = BTreeMap::new();
        for (p, m) in self.iter() {
            *counts.entry(p.descent_set()).or_insert(0) += m;
        }
        DescentStatistic {
            degree: self.degree,
            counts,
        }
    }

    /// `A ≡ B`: equal descent statistics.
    pub fn equivalent(&self, other: &PermMultiset) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(self.descent_statistic() == other.descent_statistic())
    }

    /// `|B_J|`, the number of elements whose descent set lies in `J`.
    pub fn count_descents_within(&self, j: Subset) -> u64 {
        self.iter()
            .filter(|(p, _)| p.descent_set().is_subset_of(j))
            .map(|(_, m)| m)
            .sum()
    }
}

impl fmt::Display for PermMultiset {
    /// Canonical one-line form, e.g. `{1324, 4132 x2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p} x{m}")?;
            }
        }
        f.write_str("}")
    }
}

/// The multiset `{Des(π) : π ∈ B}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DescentStatistic {
    degree: usize,
    counts: BTreeMap<Subset, u64>,
}

impl DescentStatistic {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn count(&self, j: Subset) -> u64 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, u64)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(p("1234").descent_set(), Subset::EMPTY);
        assert_eq!(p("4132").descent_set(), set(&[1, 3]));
        assert_eq!(p("3412").descent_set(), set(&[2]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4132").to_string(), "4132");
        let big: Permutation = "10,1,2,3,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(big.degree(), 10);
        assert_eq!(big.to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("12x4".parse::<Permutation>().is_err());
        assert!("0123".parse::<Permutation>().is_err());
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&Word::new(vec![9, 1, 4]).unwrap()), p("312"));
        assert_eq!(standardize(&Word::new(vec![5, 2, 8]).unwrap()), p("213"));
        assert_eq!(standardize(&Word::new(vec![1, 2, 3, 4]).unwrap()), p("1234"));
        assert!(Word::new(vec![1, 2, 1]).is_err());
    }

    #[test]
    fn shuffles() {
        let w12 = Word::new(vec![1, 2]).unwrap();
        assert_eq!(shuffle(&w12, &Word::empty()).unwrap(), vec![w12.clone()]);
        let a = Word::new(vec![1, 2, 3]).unwrap();
        let b = Word::new(vec![4, 5]).unwrap();
        assert_eq!(shuffle(&a, &b).unwrap().len(), 10);
        assert!(matches!(
            shuffle(&a, &Word::new(vec![3, 7]).unwrap()),
            Err(Error::OverlappingAlphabets(3))
        ));
    }

    #[test]
    fn shifted_shuffle_example() {
        let got = shifted_shuffle(&p("12"), &p("21"));
        let mut want: Vec<Permutation> = ["1243", "1423", "4123", "1432", "4132", "4312"]
            .iter()
            .map(|s| p(s))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(shifted_shuffle(&p("1"), &p("1")), vec![p("12"), p("21")]);
        assert_eq!(shifted_shuffle(&p("12"), &p("12")).len(), 6);
    }

    #[test]
    fn composition_of_permutations() {
        let pi = p("914528736");
        let delta = p("415627839");
        assert_eq!(pi.compose(&delta).unwrap(), p("592817346"));
        let tau = p("2413");
        assert_eq!(Permutation::identity(4).compose(&tau).unwrap(), tau);
        assert_eq!(pi.compose(&pi.inverse()).unwrap(), Permutation::identity(9));
        assert!(matches!(
            pi.compose(&tau),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn j_class_table() {
        let got = inverse_j_class(4, set(&[2])).unwrap();
        let want: Vec<Permutation> = ["1234", "1324", "1342", "3124", "3142", "3412"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(got, want);
        assert_eq!(inverse_j_class(4, Subset::EMPTY).unwrap(), vec![Permutation::identity(4)]);
        assert_eq!(inverse_j_class(4, Subset::full(4)).unwrap(), all_permutations(4));
    }

    #[test]
    fn j_class_matches_definition() {
        for n in 1..=6 {
            let perms = all_permutations(n);
            for j in Subset::all(n) {
                let mut brute: Vec<Permutation> = perms
                    .iter()
                    .filter(|q| q.descent_set().is_subset_of(j))
                    .map(|q| q.inverse())
                    .collect();
                brute.sort();
                assert_eq!(inverse_j_class(n, j).unwrap(), brute);
            }
        }
    }

    #[test]
    fn d_classes_partition_the_group() {
        assert_eq!(d_class(4, Subset::EMPTY).unwrap(), vec![Permutation::identity(4)]);
        assert_eq!(d_class(4, set(&[2])).unwrap().len(), 5);
        for n in 1..=6 {
            let total: usize = Subset::all(n).iter().map(|&j| d_class(n, j).unwrap().len()).sum();
            assert_eq!(total as u128, factorial(n));
        }
    }

    #[test]
    fn conjugacy_classes() {
        let id = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(conjugacy_class(3, &id).unwrap(), vec![Permutation::identity(3)]);
        let three = Partition::new(vec![3]).unwrap();
        assert_eq!(conjugacy_class(3, &three).unwrap(), vec![p("231"), p("312")]);
        for n in 1..=6 {
            for lambda in crate::combinat::partitions(n) {
                let class = conjugacy_class(n, &lambda).unwrap();
                assert_eq!(class.len() as u128, factorial(n) / lambda.z());
            }
        }
        assert!(conjugacy_class(4, &three).is_err());
    }

    #[test]
    fn multiset_products() {
        let a = PermMultiset::parse_list(4, &["1324", "4132"]).unwrap();
        let b = PermMultiset::parse_list(4, &["2143", "2314"]).unwrap();
        let id = PermMultiset::parse_list(4, &["1234"]).unwrap();
        assert_eq!(id.product(&b).unwrap(), b);
        assert_eq!(a.product(&b).unwrap().size(), 4);
        assert!(a.equivalent(&b).unwrap());
        let x = PermMultiset::parse_list(4, &["1234"]).unwrap();
        let y = PermMultiset::parse_list(4, &["2134"]).unwrap();
        assert!(!x.equivalent(&y).unwrap());
    }

    #[test]
    fn descent_statistic_of_j_class() {
        let b = PermMultiset::from_perms(4, inverse_j_class(4, set(&[2])).unwrap()).unwrap();
        let stat = b.descent_statistic();
        assert_eq!(stat.count(Subset::EMPTY), 1);
        // 3124 -> {1}; 1324 and 3412 -> {2}
        assert_eq!(stat.count(set(&[1])), 1);
        assert_eq!(stat.count(set(&[2])), 2);
        assert_eq!(stat.count(set(&[3])), 1);
        assert_eq!(stat.count(set(&[1, 3])), 1);
        assert_eq!(stat.total(), 6);
    }

    #[test]
    fn display_multiset() {
        let mut b = PermMultiset::parse_list(4, &["4132", "1324"]).unwrap();
        b.insert(p("4132"), 1).unwrap();
        assert_eq!(b.to_string(), "{1324, 4132 x2}");
        assert_eq!(b.size(), 3);
    }
}
