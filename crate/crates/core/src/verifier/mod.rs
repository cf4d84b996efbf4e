//! Decision procedures for the five equivalent conditions on a multiset `B`,
//! the corollary checks built on them, and the objects used in their proofs.
//!
//! The checkers here evaluate the definitions literally (products are formed
//! permutation by permutation). [`kernel`] holds a table-driven engine for
//! bulk campaigns, cross-checked against these.

pub mod campaign;
pub mod kernel;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::combinat::{rearrangement_equivalent, Subset};
use crate::error::{Error, Result};
use crate::ordered_partition::{enumerate_partitions, OrderedSetPartition};
use crate::perm::{d_class, inverse_j_class, DescentStatistic, PermMultiset};
use crate::qsym::{classify, f_to_m, is_symmetric, q_of};

/// Largest degree accepted by the per-multiset checkers.
pub const MAX_CHECK_DEGREE: usize = 6;

/// Counterexample data attached to a failed condition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `U` for which the two descent generating functions differ.
    Partition { partition: OrderedSetPartition },
    /// `J` for which `B·R_J⁻¹ ≢ R_J⁻¹·B` (or the `D_J⁻¹` analogue).
    Subset { j: Subset },
    /// `J ~ K` whose products are not equivalent.
    SubsetPair { j: Subset, k: Subset },
    /// `J ~ K` with `|B_J| ≠ |B_K|`.
    CountPair { j: Subset, k: Subset, count_j: u64, count_k: u64 },
}

/// Result of one checker.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Check {
    fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Witness) -> Self {
        Check {
            holds: false,
            witness: Some(w),
        }
    }
}

pub(crate) fn ensure_checkable(n: usize) -> Result<()> {
    if n > MAX_CHECK_DEGREE {
        return Err(Error::Infeasible(format!(
            "condition checks are limited to degree {MAX_CHECK_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

/// `R_J⁻¹` as a multiset.
pub fn j_class_multiset(n: usize, j: Subset) -> Result<PermMultiset> {
    PermMultiset::from_perms(n, inverse_j_class(n, j)?)
}

/// `D_J⁻¹` as a multiset.
pub fn d_class_multiset(n: usize, j: Subset) -> Result<PermMultiset> {
    PermMultiset::from_perms(n, d_class(n, j)?)
}

/// `(r(U), s(U)) = ([n-1] \ U*, [n-1] \ δ_U(U*))`.
pub fn r_s_of(u: &OrderedSetPartition) -> (Subset, Subset) {
    let n = u.degree();
    let all = Subset::full(n);
    let star = u.u_star();
    let delta = u.delta();
    (all.difference(star), all.difference(star.map(|s| delta.at(s))))
}

/// a) via the generating-function criterion: for every `U`, the multisets
/// `{δ_U(Des π ∩ U*)}` and `{Des π ∩ δ_U(U*)}` agree.
pub fn check_a_d_symmetric(b: &PermMultiset) -> Result<Check> {
    let n = b.degree();
    ensure_checkable(n)?;
    let stat = b.descent_statistic();
    for u in enumerate_partitions(n, None)? {
        let star = u.u_star();
        let delta = u.delta();
        let moved = star.map(|s| delta.at(s));
        let mut lhs: BTreeMap<Subset, u64> = BTreeMap::new();
        let mut rhs: BTreeMap<Subset, u64> = BTreeMap::new();
        for (d, c) in stat.iter() {
            *lhs.entry(d.intersection(star).map(|s| delta.at(s))).or_default() += c;
            *rhs.entry(d.intersection(moved)).or_default() += c;
        }
        if lhs != rhs {
            return Ok(Check::fail(Witness::Partition { partition: u }));
        }
    }
    Ok(Check::pass())
}

fn product_statistics(b: &PermMultiset) -> Result<(Vec<Subset>, Vec<DescentStatistic>, Vec<DescentStatistic>)> {
    let n = b.degree();
    let subsets = Subset::all(n);
    let mut right = Vec::with_capacity(subsets.len());
    let mut left = Vec::with_capacity(subsets.len());
    for &j in &subsets {
        let r = j_class_multiset(n, j)?;
        right.push(b.product(&r)?.descent_statistic());
        left.push(r.product(b)?.descent_statistic());
    }
    Ok((subsets, right, left))
}

fn first_inequivalent_pair<T: PartialEq>(n: usize, subsets: &[Subset], values: &[T]) -> Option<(Subset, Subset)> {
    for (x, &j) in subsets.iter().enumerate() {
        for (y, &k) in subsets.iter().enumerate().skip(x + 1) {
            if rearrangement_equivalent(n, j, k) && values[x] != values[y] {
                return Some((j, k));
            }
        }
    }
    None
}

/// b) `B·R_J⁻¹ ≡ R_J⁻¹·B` for every `J`.
pub fn check_b_d_commutative(b: &PermMultiset) -> Result<Check> {
    ensure_checkable(b.degree())?;
    let (subsets, right, left) = product_statistics(b)?;
    Ok(first_mismatch(&subsets, &right, &left).map_or_else(Check::pass, |j| Check::fail(Witness::Subset { j })))
}

fn first_mismatch<T: PartialEq>(subsets: &[Subset], a: &[T], b: &[T]) -> Option<Subset> {
    subsets
        .iter()
        .zip(a.iter().zip(b))
        .find(|(_, (x, y))| x != y)
        .map(|(&j, _)| j)
}

/// c) `B·R_J⁻¹ ≡ B·R_K⁻¹` whenever `J ~ K`.
pub fn check_c_right(b: &PermMultiset) -> Result<Check> {
    ensure_checkable(b.degree())?;
    let (subsets, right, _) = product_statistics(b)?;
    Ok(pair_check(b.degree(), &subsets, &right))
}

/// d) `R_J⁻¹·B ≡ R_K⁻¹·B` whenever `J ~ K`.
pub fn check_d_left(b: &PermMultiset) -> Result<Check> {
    ensure_checkable(b.degree())?;
    let (subsets, _, left) = product_statistics(b)?;
    Ok(pair_check(b.degree(), &subsets, &left))
}

fn pair_check(n: usize, subsets: &[Subset], stats: &[DescentStatistic]) -> Check {
    match first_inequivalent_pair(n, subsets, stats) {
        Some((j, k)) => Check::fail(Witness::SubsetPair { j, k }),
        None => Check::pass(),
    }
}

/// e) `|B_J| = |B_K|` whenever `J ~ K`, cross-checked against the
/// quasisymmetric expansion.
pub fn check_e_symmetric(b: &PermMultiset) -> Result<Check> {
    let n = b.degree();
    ensure_checkable(n)?;
    let subsets = Subset::all(n);
    let counts: Vec<u64> = subsets.iter().map(|&j| b.count_descents_within(j)).collect();
    let check = match first_inequivalent_pair(n, &subsets, &counts) {
        Some((j, k)) => {
            let at = |s: Subset| counts[subsets.iter().position(|&x| x == s).unwrap()];
            Check::fail(Witness::CountPair {
                j,
                k,
                count_j: at(j),
                count_k: at(k),
            })
        }
        None => Check::pass(),
    };
    let via_qsym = is_symmetric(&f_to_m(&q_of(b))?)?;
    if via_qsym != check.holds {
        return Err(Error::Internal(format!(
            "symmetry of {b}: counting says {}, expansion says {via_qsym}",
            check.holds
        )));
    }
    Ok(check)
}

/// The five flags, their witnesses and per-condition wall time.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ConditionReport {
    pub a_d_symmetric: Check,
    pub b_d_commutative: Check,
    pub c_right_invariant: Check,
    pub d_left_invariant: Check,
    pub e_symmetric: Check,
    /// Seconds spent in each checker, in order a to e.
    pub timings: [f64; 5],
}

impl ConditionReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.a_d_symmetric.holds,
            self.b_d_commutative.holds,
            self.c_right_invariant.holds,
            self.d_left_invariant.holds,
            self.e_symmetric.holds,
        ]
    }

    /// Whether all five conditions agree.
    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64()))
}

/// Runs all five checkers independently.
pub fn check_theorem(b: &PermMultiset) -> Result<ConditionReport> {
    let (a, ta) = timed(|| check_a_d_symmetric(b))?;
    let (bb, tb) = timed(|| check_b_d_commutative(b))?;
    let (c, tc) = timed(|| check_c_right(b))?;
    let (d, td) = timed(|| check_d_left(b))?;
    let (e, te) = timed(|| check_e_symmetric(b))?;
    Ok(ConditionReport {
        a_d_symmetric: a,
        b_d_commutative: bb,
        c_right_invariant: c,
        d_left_invariant: d,
        e_symmetric: e,
        timings: [ta, tb, tc, td, te],
    })
}

/// `B·D_J⁻¹ ≡ D_J⁻¹·B` for every `J`; `fine` records whether the hypothesis held.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ErCheck {
    pub holds: bool,
    pub witness: Option<Subset>,
    pub fine: bool,
}

pub fn check_er_conjecture(b: &PermMultiset) -> Result<ErCheck> {
    let n = b.degree();
    ensure_checkable(n)?;
    let fine = classify(b).is_fine();
    for j in Subset::all(n) {
        let d = d_class_multiset(n, j)?;
        if !b.product(&d)?.equivalent(&d.product(b)?)? {
            return Ok(ErCheck {
                holds: false,
                witness: Some(j),
                fine,
            });
        }
    }
    Ok(ErCheck {
        holds: true,
        witness: None,
        fine,
    })
}

/// Whether `B·R_J⁻¹` and `R_J⁻¹·B` are both symmetric; `B` must be symmetric.
pub fn check_closure(b: &PermMultiset, j: Subset) -> Result<bool> {
    ensure_checkable(b.degree())?;
    let e = check_e_symmetric(b)?;
    if let Some(Witness::CountPair { j: a, k, count_j, count_k }) = e.witness {
        return Err(Error::NotSymmetric {
            alpha: a.composition(b.degree()),
            beta: k.composition(b.degree()),
            alpha_coeff: count_j.to_string(),
            beta_coeff: count_k.to_string(),
        });
    }
    let r = j_class_multiset(b.degree(), j)?;
    Ok(check_e_symmetric(&b.product(&r)?)?.holds && check_e_symmetric(&r.product(b)?)?.holds)
}

/// `α(I)`: the parts indexed by `I` (1-based, increasing) followed by the rest.
pub fn reorder_composition(alpha: &[usize], i: Subset) -> Vec<usize> {
    let pick = |want: bool| (0..alpha.len()).filter(move |x| i.contains(x + 1) == want).map(|x| alpha[x]);
    pick(true).chain(pick(false)).collect()
}

/// `S_k'(α)`: index sets `I ⊆ [p]` with `Σ_{i∈I} α_i = k`, excluding an initial
/// segment `[m]`. Sorted.
pub fn index_sets(k: usize, alpha: &[usize]) -> Vec<Subset> {
    let p = alpha.len();
    let mut out: Vec<Subset> = (0..1u64 << p)
        .map(Subset::from_bits)
        .filter(|i| i.iter().map(|x| alpha[x - 1]).sum::<usize>() == k)
        .filter(|i| *i != Subset::interval(1, i.len()))
        .collect();
    out.sort();
    out
}

/// `Γ_k(α)`: partitions of shape `α` into intervals with `Des(δ_U) = {k}`. Sorted.
pub fn gamma_set(k: usize, alpha: &[usize]) -> Result<Vec<OrderedSetPartition>> {
    let n: usize = alpha.iter().sum();
    let target = Subset::from_elements([k])?;
    Ok(enumerate_partitions(n, Some(alpha))?
        .into_iter()
        .filter(|u| u.delta().descent_set() == target)
        .filter(|u| u.blocks().iter().all(|b| b.last().unwrap() - b[0] + 1 == b.len()))
        .collect())
}

/// The map `S_k'(α) → Γ_k(α)`: blocks indexed by `I` tile `[k]` in index order
/// and the remaining blocks tile `[k+1, n]` in index order.
pub fn gamma_map(k: usize, alpha: &[usize], i: Subset) -> Result<OrderedSetPartition> {
    let n: usize = alpha.iter().sum();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("{k} is not in [1, {}]", n.saturating_sub(1)),
        });
    }
    let mut blocks = vec![Vec::new(); alpha.len()];
    let mut next = [1usize, k + 1];
    for (x, &size) in alpha.iter().enumerate() {
        let side = usize::from(!i.contains(x + 1));
        blocks[x] = (next[side]..next[side] + size).collect();
        next[side] += size;
    }
    if next != [k + 1, n + 1] {
        return Err(Error::InvalidSubset(format!("{i} does not index parts summing to {k}")));
    }
    OrderedSetPartition::new(blocks)
}

/// The Gamma map on all of `S_k'(α)`, with its target set for comparison.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GammaBijection {
    pub k: usize,
    pub alpha: Vec<usize>,
    pub pairs: Vec<(Subset, OrderedSetPartition)>,
    pub target: Vec<OrderedSetPartition>,
}

impl GammaBijection {
    /// The image is exactly the target, without repeats.
    pub fn is_bijective(&self) -> bool {
        let mut img: Vec<&OrderedSetPartition> = self.pairs.iter().map(|(_, u)| u).collect();
        img.sort();
        img.dedup();
        img.len() == self.pairs.len() && img.into_iter().eq(self.target.iter())
    }

    /// `co(r(f(I))) = α(I)` for every `I`.
    pub fn preserves_shape(&self) -> bool {
        let n: usize = self.alpha.iter().sum();
        self.pairs
            .iter()
            .all(|(i, u)| r_s_of(u).0.composition(n) == reorder_composition(&self.alpha, *i))
    }
}

pub fn gamma_bijection(k: usize, alpha: &[usize]) -> Result<GammaBijection> {
    let pairs = index_sets(k, alpha)
        .into_iter()
        .map(|i| Ok((i, gamma_map(k, alpha, i)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GammaBijection {
        k,
        alpha: alpha.to_vec(),
        pairs,
        target: gamma_set(k, alpha)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{compositions, partitions};
    use crate::perm::{all_permutations, conjugacy_class};
    use crate::tableau::{knuth_class, standard_tableaux};

    fn ms(list: &[&str]) -> PermMultiset {
        PermMultiset::parse_list(list[0].len(), list).unwrap()
    }

    fn set(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied()).unwrap()
    }

    #[test]
    fn full_group_satisfies_everything() {
        for n in 1..=4 {
            let b = PermMultiset::from_perms(n, all_permutations(n)).unwrap();
            let r = check_theorem(&b).unwrap();
            assert_eq!(r.flags(), [true; 5]);
        }
    }

    #[test]
    fn counterexample_pair_is_symmetric() {
        let b = ms(&["1324", "4132"]);
        let r = check_theorem(&b).unwrap();
        assert_eq!(r.flags(), [true; 5]);
        assert!(check_er_conjecture(&b).unwrap().holds);
    }

    #[test]
    fn single_transposition_fails_everywhere() {
        let b = ms(&["2134"]);
        let r = check_theorem(&b).unwrap();
        assert_eq!(r.flags(), [false; 5]);
        assert!(r.agree());
        // for a single permutation the criterion compares Des∩U* moved by δ_U with Des∩δ_U(U*)
        let pi: crate::perm::Permutation = "2134".parse().unwrap();
        let des = pi.descent_set();
        let first_bad = enumerate_partitions(4, None)
            .unwrap()
            .into_iter()
            .find(|u| {
                let (d, star) = (u.delta(), u.u_star());
                des.intersection(star).map(|s| d.at(s)) != des.intersection(star.map(|s| d.at(s)))
            })
            .unwrap();
        assert_eq!(r.a_d_symmetric.witness, Some(Witness::Partition { partition: first_bad.clone() }));
        assert_eq!(first_bad.blocks().len(), 3);
        assert_eq!(r.b_d_commutative.witness, Some(Witness::Subset { j: set(&[1]) }));
        assert_eq!(r.c_right_invariant.witness, Some(Witness::SubsetPair { j: set(&[1]), k: set(&[3]) }));
        assert!(!check_er_conjecture(&b).unwrap().holds);
    }

    #[test]
    fn asymmetric_product_is_not_symmetric() {
        let a = ms(&["1324", "4132"]);
        let b = ms(&["2143", "2314"]);
        let ab = a.product(&b).unwrap();
        let e = check_e_symmetric(&ab).unwrap();
        assert!(!e.holds);
        assert!(check_e_symmetric(&PermMultiset::new(4)).unwrap().holds);
    }

    #[test]
    fn knuth_classes_of_s4_satisfy_everything() {
        for l in partitions(4) {
            for t in standard_tableaux(&l) {
                let b = PermMultiset::from_perms(4, knuth_class(&t).iter().cloned()).unwrap();
                assert_eq!(check_theorem(&b).unwrap().flags(), [true; 5], "{t:?}");
                let er = check_er_conjecture(&b).unwrap();
                assert!(er.holds && er.fine);
            }
        }
    }

    #[test]
    fn j_classes_satisfy_everything() {
        for n in 1..=4 {
            for j in Subset::all(n) {
                let b = j_class_multiset(n, j).unwrap();
                assert_eq!(check_theorem(&b).unwrap().flags(), [true; 5]);
            }
        }
    }

    #[test]
    fn closure_examples() {
        let b = ms(&["1324", "4132"]);
        for j in Subset::all(4) {
            assert!(check_closure(&b, j).unwrap());
        }
        let c = PermMultiset::from_perms(4, conjugacy_class(4, &crate::Partition::new(vec![2, 2]).unwrap()).unwrap()).unwrap();
        for j in Subset::all(4) {
            assert!(check_closure(&c, j).unwrap());
        }
        assert!(matches!(check_closure(&ms(&["2134"]), Subset::EMPTY), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn degree_limit() {
        let b = PermMultiset::from_perms(7, [crate::Permutation::identity(7)]).unwrap();
        assert!(matches!(check_theorem(&b), Err(Error::Infeasible(_))));
    }

    #[test]
    fn r_and_s() {
        let u = OrderedSetPartition::intervals(&[2, 1, 3]).unwrap();
        assert_eq!(r_s_of(&u), (set(&[2, 3]), set(&[2, 3])));
        let u = OrderedSetPartition::new(vec![vec![2, 5, 8], vec![1, 3, 4], vec![6, 7, 9]]).unwrap();
        let (r, s) = r_s_of(&u);
        assert_eq!(r, set(&[1, 2, 4, 5, 7, 8]));
        assert!(rearrangement_equivalent(9, r, s));
        for n in 1..=6 {
            for u in enumerate_partitions(n, None).unwrap() {
                let (r, s) = r_s_of(&u);
                assert!(rearrangement_equivalent(n, r, s), "{u}");
            }
        }
    }

    #[test]
    fn gamma_equal_parts() {
        // p equal parts, k one part: every singleton except {1}
        for p in 2..=5 {
            let alpha = vec![1; p];
            let g = gamma_bijection(1, &alpha).unwrap();
            assert_eq!(g.pairs.len(), p - 1);
            assert_eq!(g.target.len(), p - 1);
            assert!(g.is_bijective());
        }
    }

    #[test]
    fn gamma_exhaustive() {
        for n in 2..=6 {
            for alpha in compositions(n) {
                for k in 1..n {
                    let g = gamma_bijection(k, &alpha).unwrap();
                    assert!(g.is_bijective(), "{k} {alpha:?}");
                    assert!(g.preserves_shape(), "{k} {alpha:?}");
                }
            }
        }
    }

    #[test]
    fn reorder_examples() {
        assert_eq!(reorder_composition(&[1, 2, 3], set(&[2])), vec![2, 1, 3]);
        assert_eq!(reorder_composition(&[1, 2, 3], set(&[1, 2])), vec![1, 2, 3]);
        assert_eq!(reorder_composition(&[1, 2, 3], set(&[3, 1])), vec![1, 3, 2]);
    }
}
