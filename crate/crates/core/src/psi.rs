//! Explicit bijections `Ψ_U : B → B` witnessing D-symmetry.
//!
//! On a union of Knuth classes `Ψ_U` keeps the insertion tableau and promotes
//! the recording tableau; two-block partitions use `∂_V` directly and longer
//! partitions are reduced to a chain of two-block steps. Fine multisets are
//! handled by transport to a canonical union of Knuth classes, and symmetric
//! ones by subtracting a fine complement.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::combinat::{Partition, Subset};
use crate::error::{Error, Result};
use crate::ordered_partition::OrderedSetPartition;
use crate::perm::{PermMultiset, Permutation};
use crate::qsym::{classify, Classification};
use crate::tableau::{knuth_class, promote_v, rs, rs_inverse, StandardTableau};

/// Whether `u ∈ Des(π) ⟺ δ_U(u) ∈ Des(image)` for every `u ∈ U*`.
pub fn satisfies_condition(u: &OrderedSetPartition, pi: &Permutation, image: &Permutation) -> bool {
    let delta = u.delta();
    let (d, e) = (pi.descent_set(), image.descent_set());
    u.u_star().iter().all(|s| d.contains(s) == e.contains(delta.at(s)))
}

/// Descent form of the condition for precomputed `star = U*` and `delta = δ_U`:
/// `δ_U(d ∩ U*) = e ∩ δ_U(U*)`.
#[inline]
pub(crate) fn condition_holds(star: Subset, delta: &Permutation, d: Subset, e: Subset) -> bool {
    d.intersection(star).map(|s| delta.at(s)) == e.intersection(star.map(|s| delta.at(s)))
}

/// The sequence of promotion sets realizing `Ψ_U` on Knuth classes.
///
/// `Ψ_U(π) = RS⁻¹(P, ∂_{V_m} ∘ ... ∘ ∂_{V_1} Q)` where `steps = [V_1, ..., V_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiPlan {
    partition: OrderedSetPartition,
    steps: Vec<Vec<usize>>,
}

impl PsiPlan {
    pub fn new(u: &OrderedSetPartition) -> Self {
        PsiPlan {
            partition: u.clone(),
            steps: plan_steps(u),
        }
    }

    pub fn partition(&self) -> &OrderedSetPartition {
        &self.partition
    }

    pub fn steps(&self) -> &[Vec<usize>] {
        &self.steps
    }

    pub fn apply(&self, pi: &Permutation) -> Result<Permutation> {
        check_degree(self.partition.degree(), pi)?;
        if self.steps.is_empty() {
            return Ok(pi.clone());
        }
        let pair = rs(pi);
        let mut q = pair.q;
        for v in &self.steps {
            q = promote_v(&q, v)?;
        }
        rs_inverse(&pair.p, &q)
    }

    /// The plan applied to every permutation of a Knuth class, as positions in
    /// the sorted class.
    pub fn on_class(&self, class: &[Permutation]) -> Result<Vec<usize>> {
        class
            .iter()
            .map(|pi| {
                let img = self.apply(pi)?;
                class
                    .binary_search(&img)
                    .map_err(|_| Error::Internal(format!("Ψ left the Knuth class of {pi}")))
            })
            .collect()
    }
}

fn plan_steps(u: &OrderedSetPartition) -> Vec<Vec<usize>> {
    match u.num_blocks() {
        0 | 1 => Vec::new(),
        2 => vec![u.block(1)],
        _ => {
            let (v, w) = reduction_pair(u).expect("at least two blocks");
            let mut steps = plan_steps(&v);
            steps.push(w.block(1));
            steps
        }
    }
}

fn check_degree(n: usize, pi: &Permutation) -> Result<()> {
    if pi.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: pi.degree(),
        });
    }
    Ok(())
}

/// `π ↦ RS⁻¹(P, ∂_V Q)` for a partition `(U, V)` with at most two blocks.
pub fn psi_two_block(u: &OrderedSetPartition, pi: &Permutation) -> Result<Permutation> {
    if u.num_blocks() > 2 {
        return Err(Error::InvalidOrderedPartition(format!(
            "{u} has {} blocks, expected at most 2",
            u.num_blocks()
        )));
    }
    PsiPlan::new(u).apply(pi)
}

/// `Ψ_U` on a union of Knuth classes, built as `Ψ_W ∘ Ψ_V` recursively.
pub fn psi_general(u: &OrderedSetPartition, pi: &Permutation) -> Result<Permutation> {
    PsiPlan::new(u).apply(pi)
}

/// One reduction step: `V` merges the last two blocks of `U` and
/// `W = ([n] \ δ_V(U_p), δ_V(U_p))`, so that `δ_U = δ_W ∘ δ_V`. `None` for a
/// single block.
pub fn reduction_pair(u: &OrderedSetPartition) -> Option<(OrderedSetPartition, OrderedSetPartition)> {
    let blocks = u.blocks();
    let p = blocks.len();
    if p < 2 {
        return None;
    }
    let mut merged = blocks[..p - 2].to_vec();
    let mut tail = blocks[p - 2].clone();
    tail.extend_from_slice(&blocks[p - 1]);
    merged.push(tail);
    let v = OrderedSetPartition::new(merged).ok()?;
    let delta_v = v.delta();
    let w_block: Vec<usize> = blocks[p - 1].iter().map(|&x| delta_v.at(x)).collect();
    let rest: Vec<usize> = (1..=u.degree()).filter(|x| !w_block.contains(x)).collect();
    let w = OrderedSetPartition::new(vec![rest, w_block]).ok()?;
    Some((v, w))
}

/// A union of copies of superstandard Knuth classes laid out contiguously.
#[derive(Clone, Debug)]
struct KnuthUnion {
    items: Vec<Permutation>,
    /// `(start, class)` per copy.
    blocks: Vec<(usize, Arc<[Permutation]>)>,
    block_of: Vec<usize>,
}

impl KnuthUnion {
    fn new(copies: &[(Partition, usize)]) -> Self {
        let mut u = KnuthUnion {
            items: Vec::new(),
            blocks: Vec::new(),
            block_of: Vec::new(),
        };
        for (lambda, count) in copies {
            let class = knuth_class(&StandardTableau::superstandard(lambda));
            for _ in 0..*count {
                let b = u.blocks.len();
                u.blocks.push((u.items.len(), Arc::clone(&class)));
                u.items.extend(class.iter().cloned());
                u.block_of.extend(std::iter::repeat_n(b, class.len()));
            }
        }
        u
    }

    fn len(&self) -> usize {
        self.items.len()
    }

    fn apply(&self, psi: &impl Fn(&Permutation) -> Permutation) -> Result<Vec<usize>> {
        (0..self.items.len())
            .map(|i| {
                let (start, class) = &self.blocks[self.block_of[i]];
                let img = psi(&self.items[i]);
                class
                    .binary_search(&img)
                    .map(|p| start + p)
                    .map_err(|_| Error::Internal(format!("Ψ left the Knuth class of {}", self.items[i])))
            })
            .collect()
    }
}

/// A descent-preserving bijection from `items` onto a Knuth union, as indices.
///
/// Prefers matching by recording tableau (so a literal union of Knuth classes is
/// acted on by `Ψ` itself) and falls back to matching by descent set.
fn transport(items: &[Permutation], target: &KnuthUnion) -> Result<Vec<usize>> {
    if items.len() != target.len() {
        return Err(Error::Internal("transport between multisets of different size".into()));
    }
    let by_q = |perms: &[Permutation]| {
        let mut keyed: Vec<(StandardTableau, StandardTableau, usize)> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let pair = rs(p);
                (pair.q, pair.p, i)
            })
            .collect();
        keyed.sort();
        keyed
    };
    let src = by_q(items);
    let dst = by_q(&target.items);
    let mut map = vec![usize::MAX; items.len()];
    if src.iter().zip(&dst).all(|(a, b)| a.0 == b.0) {
        for (a, b) in src.iter().zip(&dst) {
            map[a.2] = b.2;
        }
        return Ok(map);
    }
    let by_des = |perms: &[Permutation]| {
        let mut keyed: Vec<(Subset, usize)> = perms.iter().map(Permutation::descent_set).zip(0..).collect();
        keyed.sort();
        keyed
    };
    let src = by_des(items);
    let dst = by_des(&target.items);
    for (a, b) in src.iter().zip(&dst) {
        if a.0 != b.0 {
            return Err(Error::Internal("descent statistics differ under transport".into()));
        }
        map[a.1] = b.1;
    }
    Ok(map)
}

fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![usize::MAX; map.len()];
    for (i, &j) in map.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// A bijection of a multiset, as indices into its expanded item list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiOutcome {
    pub image: Vec<usize>,
    /// Longest run of the subtraction loop over all items.
    pub max_steps: usize,
}

/// `Ψ_U` for a symmetric multiset `B`.
///
/// `Q(B) = Σ c_λ s_λ`; the complement `A` is `|c_λ|` copies of `K(P_λ)` for
/// every negative `c_λ`, with `P_λ` superstandard. `A ⊔ B` and `A` are fine, and
/// `Ψ_B` is extracted by iterating `Ψ_{A⊔B}` and `Ψ_A⁻¹` until the image leaves `A`.
#[derive(Clone, Debug)]
pub struct SymmetricPsi {
    degree: usize,
    items: Vec<Permutation>,
    complement: KnuthUnion,
    positive: KnuthUnion,
    /// `A ⊔ B` (complement first) onto `positive`.
    to_positive: Vec<usize>,
    from_positive: Vec<usize>,
}

impl SymmetricPsi {
    pub fn new(b: &PermMultiset) -> Result<Self> {
        let schur = match classify(b) {
            Classification::NotSymmetric { witness } => return Err(witness.into()),
            c => c.schur().cloned().expect("symmetric classification carries a Schur vector"),
        };
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (lambda, c) in schur.terms() {
            let lambda = Partition::new(lambda.to_vec())?;
            let count = c
                .abs()
                .to_usize()
                .ok_or_else(|| Error::Infeasible(format!("coefficient {c} is too large")))?;
            if c.is_negative() {
                negative.push((lambda, count));
            } else {
                positive.push((lambda, count));
            }
        }
        let complement = KnuthUnion::new(&negative);
        let positive = KnuthUnion::new(&positive);
        let items: Vec<Permutation> = b.expanded();
        let mut joint = complement.items.clone();
        joint.extend(items.iter().cloned());
        let to_positive = transport(&joint, &positive)?;
        let from_positive = invert(&to_positive);
        Ok(SymmetricPsi {
            degree: b.degree(),
            items,
            complement,
            positive,
            to_positive,
            from_positive,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The expanded multiset, sorted; bijections act on these indices.
    pub fn items(&self) -> &[Permutation] {
        &self.items
    }

    /// The fine complement `A`.
    pub fn complement(&self) -> &[Permutation] {
        &self.complement.items
    }

    /// The step bound `|A ⊔ B|`.
    pub fn step_bound(&self) -> usize {
        self.complement.len() + self.items.len()
    }

    pub fn bijection(&self, u: &OrderedSetPartition) -> Result<PsiOutcome> {
        if u.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: u.degree(),
            });
        }
        let plan = PsiPlan::new(u);
        self.bijection_with(|pi| plan.apply(pi).expect("degree checked"))
    }

    /// Runs the construction with `psi` as the Knuth-class map.
    pub fn bijection_with(&self, psi: impl Fn(&Permutation) -> Permutation) -> Result<PsiOutcome> {
        let on_positive = self.positive.apply(&psi)?;
        let on_complement = self.complement.apply(&psi)?;
        let complement_inverse = invert(&on_complement);
        let joint = |i: usize| self.from_positive[on_positive[self.to_positive[i]]];
        let a = self.complement.len();
        let bound = self.step_bound();
        let mut image = Vec::with_capacity(self.items.len());
        let mut max_steps = 0;
        for i in a..a + self.items.len() {
            let mut y = joint(i);
            let mut steps = 0;
            while y < a {
                steps += 1;
                if steps > bound {
                    return Err(Error::Internal(format!(
                        "subtraction loop exceeded {bound} steps"
                    )));
                }
                y = joint(complement_inverse[y]);
            }
            max_steps = max_steps.max(steps);
            image.push(y - a);
        }
        Ok(PsiOutcome { image, max_steps })
    }
}

/// `Ψ_U(π)` for the first copy of `π` in a symmetric multiset `B`.
pub fn psi_symmetric(u: &OrderedSetPartition, b: &PermMultiset, pi: &Permutation) -> Result<Permutation> {
    let sp = SymmetricPsi::new(b)?;
    let idx = sp.items.partition_point(|p| p < pi);
    if sp.items.get(idx) != Some(pi) {
        return Err(Error::OutOfRange {
            what: "permutation",
            detail: format!("{pi} is not in the multiset"),
        });
    }
    let out = sp.bijection(u)?;
    Ok(sp.items[out.image[idx]].clone())
}

/// Checks that `image` is a bijection of `items` satisfying the D-symmetry
/// condition for `u`.
pub fn validate_bijection(u: &OrderedSetPartition, items: &[Permutation], image: &[usize]) -> bool {
    if image.len() != items.len() {
        return false;
    }
    let mut hit = vec![false; items.len()];
    for &j in image {
        if j >= items.len() || std::mem::replace(&mut hit[j], true) {
            return false;
        }
    }
    let star = u.u_star();
    let delta = u.delta();
    image
        .iter()
        .enumerate()
        .all(|(i, &j)| condition_holds(star, &delta, items[i].descent_set(), items[j].descent_set()))
}

/// Precomputed `Ψ_U` on all of `S_n` for every `U ⊢ [n]`, indexed by the
/// lexicographic rank of the permutation.
pub struct PsiTable {
    pub partitions: Vec<OrderedSetPartition>,
    pub perms: Vec<Permutation>,
    rank: HashMap<Permutation, usize>,
    table: Vec<Vec<usize>>,
}

impl PsiTable {
    pub fn new(n: usize) -> Result<Self> {
        if n > 7 {
            return Err(Error::Infeasible(format!("Ψ table for degree {n} is too large")));
        }
        let partitions = crate::ordered_partition::enumerate_partitions(n, None)?;
        let perms = crate::perm::all_permutations(n);
        let rank: HashMap<Permutation, usize> = perms.iter().cloned().zip(0..).collect();
        let mut memo: BTreeMap<Vec<Vec<usize>>, Vec<usize>> = BTreeMap::new();
        let mut table = Vec::with_capacity(partitions.len());
        for u in &partitions {
            let plan = PsiPlan::new(u);
            let row = match memo.get(plan.steps()) {
                Some(r) => r.clone(),
                None => {
                    let r: Vec<usize> = perms
                        .iter()
                        .map(|p| rank[&plan.apply(p).expect("degree matches")])
                        .collect();
                    memo.insert(plan.steps().to_vec(), r.clone());
                    r
                }
            };
            table.push(row);
        }
        Ok(PsiTable {
            partitions,
            perms,
            rank,
            table,
        })
    }

    pub fn rank(&self, pi: &Permutation) -> usize {
        self.rank[pi]
    }

    pub fn apply(&self, u_index: usize, pi: &Permutation) -> &Permutation {
        &self.perms[self.table[u_index][self.rank[pi]]]
    }
}
