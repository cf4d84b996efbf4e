//! Graded coefficient vectors in the quasisymmetric bases `F`, `M` and the
//! symmetric bases `m`, `s`, with exact integer change of basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{compositions, fmt_parts, partitions, Partition, Subset};
use crate::error::{Error, Result};
use crate::perm::PermMultiset;
use crate::tableau::standard_tableaux;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    /// Gessel's fundamental quasisymmetric functions `F_α`.
    #[serde(rename = "F")]
    Fundamental,
    /// Monomial quasisymmetric functions `M_α`.
    #[serde(rename = "M")]
    Monomial,
    /// Monomial symmetric functions `m_λ`.
    #[serde(rename = "m")]
    MonomialSymmetric,
    /// Schur functions `s_λ`.
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Fundamental => "F",
            Basis::Monomial => "M",
            Basis::MonomialSymmetric => "m",
            Basis::Schur => "s",
        }
    }

    /// Whether terms are indexed by compositions (rather than partitions).
    pub fn composition_indexed(self) -> bool {
        matches!(self, Basis::Fundamental | Basis::Monomial)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A homogeneous element of degree `n` written in one fixed basis.
///
/// Terms are kept sorted lexicographically by index and zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedVector {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl GradedVector {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        GradedVector {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_index(&self, index: &[usize]) -> Result<()> {
        if index.iter().sum::<usize>() != self.degree || index.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{index:?} is not a composition of {}",
                self.degree
            )));
        }
        if !self.basis.composition_indexed() && index.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{index:?} indexes the {} basis but is not a partition",
                self.basis
            )));
        }
        Ok(())
    }

    pub fn add_term(&mut self, index: &[usize], coeff: impl Into<BigInt>) -> Result<()> {
        self.check_index(index)?;
        self.add_unchecked(index, coeff.into());
        Ok(())
    }

    fn add_unchecked(&mut self, index: &[usize], coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(index.to_vec()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(index);
        }
    }

    pub fn coeff(&self, index: &[usize]) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    /// Coefficient at `co(J)`; only meaningful for `F`/`M` vectors.
    pub fn coeff_subset(&self, j: Subset) -> Result<BigInt> {
        self.expect_any(&[Basis::Fundamental, Basis::Monomial])?;
        Ok(self.coeff(&j.composition(self.degree)))
    }

    pub fn add(&self, other: &GradedVector) -> Result<GradedVector> {
        other.expect(self.basis)?;
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_unchecked(k, v.clone());
        }
        Ok(out)
    }

    fn expect(&self, basis: Basis) -> Result<()> {
        self.expect_any(&[basis])
    }

    fn expect_any(&self, allowed: &[Basis]) -> Result<()> {
        if allowed.contains(&self.basis) {
            return Ok(());
        }
        let expected: Vec<&str> = allowed.iter().map(|b| b.symbol()).collect();
        Err(Error::BasisMismatch {
            expected: expected.join("|"),
            found: self.basis.symbol().to_string(),
        })
    }
}

impl fmt::Display for GradedVector {
    /// One `B[(index)] : coeff` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.terms {
            writeln!(f, "{}[{}] : {}", self.basis, fmt_parts(k), v)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    index: Vec<usize>,
    coeff: CoeffRepr,
}

/// Coefficients serialize as JSON integers, falling back to decimal strings
/// beyond the `i64` range.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    degree: usize,
    basis: Basis,
    terms: Vec<TermRepr>,
}

impl Serialize for GradedVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| TermRepr {
                index: k.clone(),
                coeff: match v.to_i64() {
                    Some(c) => CoeffRepr::Small(c),
                    None => CoeffRepr::Big(v.to_string()),
                },
            })
            .collect();
        VectorRepr {
            degree: self.degree,
            basis: self.basis,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = VectorRepr::deserialize(d)?;
        let mut v = GradedVector::zero(repr.degree, repr.basis);
        for t in repr.terms {
            let c: BigInt = match t.coeff {
                CoeffRepr::Small(c) => c.into(),
                CoeffRepr::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            v.add_term(&t.index, c).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}

/// `Q(B) = Σ_{π∈B} F_{Des(π)}`.
pub fn q_of(b: &PermMultiset) -> GradedVector {
    let n = b.degree();
    let mut v = GradedVector::zero(n, Basis::Fundamental);
    for (j, count) in b.descent_statistic().iter() {
        v.add_unchecked(&j.composition(n), count.into());
    }
    v
}

fn for_each_superset(j: Subset, n: usize, mut f: impl FnMut(Subset)) {
    let free = Subset::full(n).difference(j).bits();
    let mut s = free;
    loop {
        f(Subset::from_bits(j.bits() | s));
        if s == 0 {
            break;
        }
        s = (s - 1) & free;
    }
}

/// Expands `F_α = Σ_{β refines α} M_β`.
pub fn f_to_m(v: &GradedVector) -> Result<GradedVector> {
    v.expect(Basis::Fundamental)?;
    let n = v.degree;
    let mut out = GradedVector::zero(n, Basis::Monomial);
    for (alpha, c) in &v.terms {
        let j = Subset::from_composition(alpha)?;
        for_each_superset(j, n, |k| out.add_unchecked(&k.composition(n), c.clone()));
    }
    Ok(out)
}

/// Inverse of [`f_to_m`] by Möbius inversion on the subset lattice.
pub fn m_to_f(v: &GradedVector) -> Result<GradedVector> {
    v.expect(Basis::Monomial)?;
    let n = v.degree;
    let mut out = GradedVector::zero(n, Basis::Fundamental);
    for (alpha, c) in &v.terms {
        let j = Subset::from_composition(alpha)?;
        for_each_superset(j, n, |k| {
            let sign = if (k.len() - j.len()) % 2 == 0 { 1 } else { -1 };
            out.add_unchecked(&k.composition(n), c * sign);
        });
    }
    Ok(out)
}

fn sorted_desc(parts: &[usize]) -> Vec<usize> {
    let mut p = parts.to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// A pair of rearrangement-equivalent compositions with different coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AsymmetryWitness {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub alpha_coeff: String,
    pub beta_coeff: String,
}

impl From<AsymmetryWitness> for Error {
    fn from(w: AsymmetryWitness) -> Self {
        Error::NotSymmetric {
            alpha: w.alpha,
            beta: w.beta,
            alpha_coeff: w.alpha_coeff,
            beta_coeff: w.beta_coeff,
        }
    }
}

/// The lexicographically smallest pair `(α, β)`, `α < β`, `α ~ β`, whose
/// coefficients differ; `None` when the vector is symmetric.
pub fn asymmetry_witness(v: &GradedVector) -> Result<Option<AsymmetryWitness>> {
    v.expect(Basis::Monomial)?;
    let all = compositions(v.degree);
    let keys: Vec<Vec<usize>> = all.iter().map(|a| sorted_desc(a)).collect();
    for (i, alpha) in all.iter().enumerate() {
        let ca = v.coeff(alpha);
        for (j, beta) in all.iter().enumerate().skip(i + 1) {
            if keys[i] == keys[j] {
                let cb = v.coeff(beta);
                if ca != cb {
                    return Ok(Some(AsymmetryWitness {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        alpha_coeff: ca.to_string(),
                        beta_coeff: cb.to_string(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Whether an `M`-expansion is constant on rearrangement classes.
pub fn is_symmetric(v: &GradedVector) -> Result<bool> {
    v.expect(Basis::Monomial)?;
    let mut seen: HashMap<Vec<usize>, &BigInt> = HashMap::new();
    let mut class_sizes: HashMap<Vec<usize>, usize> = HashMap::new();
    for (alpha, c) in &v.terms {
        let key = sorted_desc(alpha);
        *class_sizes.entry(key.clone()).or_default() += 1;
        match seen.get(&key) {
            Some(&prev) if prev != c => return Ok(false),
            Some(_) => {}
            None => {
                seen.insert(key, c);
            }
        }
    }
    // A nonzero class must be fully populated, since absent terms are zero.
    Ok(class_sizes
        .iter()
        .all(|(key, &count)| count == rearrangement_count(key)))
}

/// Number of distinct rearrangements of a multiset of parts.
fn rearrangement_count(parts: &[usize]) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    let mult: Vec<usize> = counts.values().copied().collect();
    crate::combinat::multinomial(&mult) as usize
}

/// Collapses a symmetric `M`-expansion onto the `m` basis.
pub fn to_m_basis(v: &GradedVector) -> Result<GradedVector> {
    if let Some(w) = asymmetry_witness(v)? {
        return Err(w.into());
    }
    let mut out = GradedVector::zero(v.degree, Basis::MonomialSymmetric);
    for (alpha, c) in &v.terms {
        if alpha.windows(2).all(|w| w[0] >= w[1]) {
            out.add_unchecked(alpha, c.clone());
        }
    }
    Ok(out)
}

/// `m_λ = Σ_{α ~ λ} M_α`.
pub fn m_to_monomial(v: &GradedVector) -> Result<GradedVector> {
    v.expect(Basis::MonomialSymmetric)?;
    let mut out = GradedVector::zero(v.degree, Basis::Monomial);
    for alpha in compositions(v.degree) {
        let c = v.coeff(&sorted_desc(&alpha));
        out.add_unchecked(&alpha, c);
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
///
/// Enumerated by peeling off the largest entry as a horizontal strip.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    Ok(count_ssyt(lambda.parts(), mu.parts()))
}

fn count_ssyt(shape: &[usize], content: &[usize]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    let mut inner = vec![0; shape.len()];
    strips(shape, 0, last, &mut inner, &mut |nu| total += count_ssyt(nu, rest));
    total
}

/// Enumerates `nu ⊆ shape` with `shape / nu` a horizontal strip of `size` boxes:
/// `shape[i+1] <= nu[i] <= shape[i]`.
fn strips(shape: &[usize], row: usize, size: usize, nu: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if row == shape.len() {
        if size == 0 {
            let end = nu.iter().rposition(|&r| r > 0).map_or(0, |i| i + 1);
            f(&nu[..end]);
        }
        return;
    }
    let lo = shape.get(row + 1).copied().unwrap_or(0);
    let hi = shape[row];
    for keep in lo..=hi {
        let removed = hi - keep;
        if removed > size {
            continue;
        }
        nu[row] = keep;
        strips(shape, row + 1, size - removed, nu, f);
    }
}

/// All Kostka numbers of one degree; partitions listed in decreasing lexicographic order.
#[derive(Debug)]
pub struct KostkaTable {
    degree: usize,
    partitions: Vec<Partition>,
    entries: Vec<Vec<u64>>,
}

impl KostkaTable {
    pub fn compute(n: usize) -> Self {
        let parts = partitions(n);
        let entries = parts
            .iter()
            .map(|l| parts.iter().map(|m| count_ssyt(l.parts(), m.parts())).collect())
            .collect();
        KostkaTable {
            degree: n,
            partitions: parts,
            entries,
        }
    }

    /// Shared, lazily computed table for degree `n`.
    pub fn for_degree(n: usize) -> Arc<KostkaTable> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("kostka cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(KostkaTable::compute(n));
        cache
            .write()
            .expect("kostka cache poisoned")
            .entry(n)
            .or_insert(table)
            .clone()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<u64> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        let j = self.partitions.iter().position(|p| p == mu)?;
        Some(self.entries[i][j])
    }
}

/// Solves `v = Σ c_λ s_λ` using `s_λ = Σ_μ K_{λμ} m_μ`, unitriangular in
/// lexicographic order.
pub fn m_to_s(v: &GradedVector) -> Result<GradedVector> {
    v.expect(Basis::MonomialSymmetric)?;
    let table = KostkaTable::for_degree(v.degree);
    let parts = table.partitions();
    let mut c: Vec<BigInt> = Vec::with_capacity(parts.len());
    for (j, mu) in parts.iter().enumerate() {
        let mut cj = v.coeff(mu.parts());
        for (i, ci) in c.iter().enumerate() {
            let k = table.entries[i][j];
            if k != 0 {
                cj -= ci * k;
            }
        }
        debug_assert_eq!(table.entries[j][j], 1);
        c.push(cj);
    }
    let mut out = GradedVector::zero(v.degree, Basis::Schur);
    for (lambda, cl) in parts.iter().zip(c) {
        out.add_unchecked(lambda.parts(), cl);
    }
    Ok(out)
}

/// `Σ c_λ s_λ` rewritten in the `m` basis.
pub fn s_to_m(v: &GradedVector) -> Result<GradedVector> {
    v.expect(Basis::Schur)?;
    let table = KostkaTable::for_degree(v.degree);
    let parts = table.partitions();
    let mut out = GradedVector::zero(v.degree, Basis::MonomialSymmetric);
    for (i, lambda) in parts.iter().enumerate() {
        let cl = v.coeff(lambda.parts());
        if cl.is_zero() {
            continue;
        }
        for (j, mu) in parts.iter().enumerate() {
            let k = table.entries[i][j];
            if k != 0 {
                out.add_unchecked(mu.parts(), &cl * k);
            }
        }
    }
    Ok(out)
}

/// `s_λ = Σ_{Q ∈ SYT(λ)} F_{Des Q}`.
pub fn schur_in_f(lambda: &Partition) -> GradedVector {
    let n = lambda.size();
    let mut out = GradedVector::zero(n, Basis::Fundamental);
    for q in standard_tableaux(lambda) {
        out.add_unchecked(&q.descent_set().composition(n), BigInt::from(1));
    }
    out
}

/// Outcome of the `Q → M → m → s` pipeline.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Classification {
    NotSymmetric { witness: AsymmetryWitness },
    SymmetricNotFine { schur: GradedVector },
    Fine { schur: GradedVector },
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::NotSymmetric { .. } => "not_symmetric",
            Classification::SymmetricNotFine { .. } => "symmetric_not_fine",
            Classification::Fine { .. } => "fine",
        }
    }

    pub fn is_symmetric(&self) -> bool {
        !matches!(self, Classification::NotSymmetric { .. })
    }

    pub fn is_fine(&self) -> bool {
        matches!(self, Classification::Fine { .. })
    }

    pub fn schur(&self) -> Option<&GradedVector> {
        match self {
            Classification::NotSymmetric { .. } => None,
            Classification::SymmetricNotFine { schur } | Classification::Fine { schur } => Some(schur),
        }
    }
}

/// Classifies a quasisymmetric `F`-expansion.
pub fn classify_q(q: &GradedVector) -> Result<Classification> {
    let m = f_to_m(q)?;
    if let Some(witness) = asymmetry_witness(&m)? {
        return Ok(Classification::NotSymmetric { witness });
    }
    let schur = m_to_s(&to_m_basis(&m)?)?;
    if schur.terms.values().any(|c| c.is_negative()) {
        Ok(Classification::SymmetricNotFine { schur })
    } else {
        Ok(Classification::Fine { schur })
    }
}

/// Not symmetric, symmetric but not Schur-positive, or fine.
pub fn classify(b: &PermMultiset) -> Classification {
    classify_q(&q_of(b)).expect("Q(B) is an F-expansion")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(basis: Basis, n: usize, terms: &[(&[usize], i64)]) -> GradedVector {
        let mut v = GradedVector::zero(n, basis);
        for (k, c) in terms {
            v.add_term(k, *c).unwrap();
        }
        v
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn m_sym_example() -> GradedVector {
        vec_of(
            Basis::MonomialSymmetric,
            4,
            &[(&[2, 2], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 2)],
        )
    }

    #[test]
    fn f_to_m_basics() {
        for n in 1..=6 {
            let top = vec_of(Basis::Fundamental, n, &[(&[n], 1)]);
            let m = f_to_m(&top).unwrap();
            assert_eq!(m.num_terms(), 1 << (n - 1));
            let ones = vec![1; n];
            let bottom = vec_of(Basis::Fundamental, n, &[(&ones, 1)]);
            assert_eq!(f_to_m(&bottom).unwrap(), vec_of(Basis::Monomial, n, &[(&ones, 1)]));
        }
        let wrong = vec_of(Basis::Monomial, 2, &[(&[2], 1)]);
        assert!(matches!(f_to_m(&wrong), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn f_m_round_trip_on_basis_vectors() {
        for n in 1..=6 {
            for alpha in compositions(n) {
                let f = vec_of(Basis::Fundamental, n, &[(&alpha, 1)]);
                assert_eq!(m_to_f(&f_to_m(&f).unwrap()).unwrap(), f);
            }
        }
    }

    #[test]
    fn q_of_small_sets() {
        let b = PermMultiset::parse_list(4, &["1234"]).unwrap();
        assert_eq!(q_of(&b), vec_of(Basis::Fundamental, 4, &[(&[4], 1)]));
        let b = PermMultiset::parse_list(4, &["2143", "2314"]).unwrap();
        assert_eq!(
            q_of(&b),
            vec_of(Basis::Fundamental, 4, &[(&[1, 2, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn counterexample_expansions() {
        let expected_m = m_to_monomial(&m_sym_example()).unwrap();
        for list in [["1324", "4132"], ["2143", "2314"]] {
            let b = PermMultiset::parse_list(4, &list).unwrap();
            let m = f_to_m(&q_of(&b)).unwrap();
            assert_eq!(m, expected_m);
            assert!(is_symmetric(&m).unwrap());
            assert_eq!(to_m_basis(&m).unwrap(), m_sym_example());
        }
    }

    #[test]
    fn asymmetric_product() {
        let v = vec_of(
            Basis::Monomial,
            4,
            &[
                (&[3, 1], 1),
                (&[2, 2], 1),
                (&[1, 1, 2], 2),
                (&[1, 2, 1], 2),
                (&[2, 1, 1], 2),
                (&[1, 1, 1, 1], 4),
            ],
        );
        assert!(!is_symmetric(&v).unwrap());
        let w = asymmetry_witness(&v).unwrap().unwrap();
        assert_eq!((w.alpha.as_slice(), w.beta.as_slice()), (&[1, 3][..], &[3, 1][..]));
        assert!(matches!(to_m_basis(&v), Err(Error::NotSymmetric { .. })));
        assert!(is_symmetric(&GradedVector::zero(4, Basis::Monomial)).unwrap());
    }

    #[test]
    fn kostka_values() {
        for n in 1..=6 {
            for l in partitions(n) {
                assert_eq!(kostka(&l, &l).unwrap(), 1);
                for m in partitions(n) {
                    let k = kostka(&l, &m).unwrap();
                    assert_eq!(k > 0, l.dominates(&m), "{l} {m}");
                }
            }
        }
        assert_eq!(kostka(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&part(&[1, 1]), &part(&[2])).unwrap(), 0);
        assert_eq!(kostka(&part(&[3, 2]), &part(&[2, 2, 1])).unwrap(), 2);
        assert!(kostka(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn m_to_s_small() {
        // m_2 = s_2 - s_11
        let v = vec_of(Basis::MonomialSymmetric, 2, &[(&[2], 1)]);
        assert_eq!(
            m_to_s(&v).unwrap(),
            vec_of(Basis::Schur, 2, &[(&[2], 1), (&[1, 1], -1)])
        );
    }

    #[test]
    fn m_s_round_trip() {
        for n in 1..=6 {
            for l in partitions(n) {
                let v = vec_of(Basis::MonomialSymmetric, n, &[(l.parts(), 1)]);
                assert_eq!(s_to_m(&m_to_s(&v).unwrap()).unwrap(), v);
            }
        }
    }

    #[test]
    fn schur_in_f_agrees_with_kostka() {
        assert_eq!(
            schur_in_f(&part(&[2, 1])),
            vec_of(Basis::Fundamental, 3, &[(&[1, 2], 1), (&[2, 1], 1)])
        );
        for n in 1..=6 {
            assert_eq!(schur_in_f(&part(&[n])), vec_of(Basis::Fundamental, n, &[(&[n], 1)]));
            let ones = vec![1; n];
            assert_eq!(
                schur_in_f(&Partition::new(ones.clone()).unwrap()),
                vec_of(Basis::Fundamental, n, &[(&ones, 1)])
            );
            for l in partitions(n) {
                let m = f_to_m(&schur_in_f(&l)).unwrap();
                assert!(is_symmetric(&m).unwrap());
                let small_m = to_m_basis(&m).unwrap();
                for mu in partitions(n) {
                    let k = kostka(&l, &mu).unwrap();
                    assert_eq!(small_m.coeff(mu.parts()), BigInt::from(k));
                }
                let s = m_to_s(&small_m).unwrap();
                assert_eq!(s, vec_of(Basis::Schur, n, &[(l.parts(), 1)]));
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = m_sym_example();
        let js = serde_json::to_value(&v).unwrap();
        assert_eq!(js["basis"], "m");
        assert_eq!(js["degree"], 4);
        assert_eq!(js["terms"][0]["index"], serde_json::json!([1, 1, 1, 1]));
        assert_eq!(js["terms"][0]["coeff"], 2);
        let back: GradedVector = serde_json::from_value(js).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn empty_multiset_is_fine() {
        let b = PermMultiset::new(4);
        assert!(classify(&b).is_fine());
    }
}
