//! Table-driven evaluation of the conditions for bulk campaigns.
//!
//! Every condition is a family of integer linear forms in the multiplicity
//! vector `(w_π)_{π ∈ S_n}` that must all vanish; for instance condition b) is
//! `Σ_π w_π (#{τ ∈ R_J⁻¹ : Des(πτ) = D} - #{τ ∈ R_J⁻¹ : Des(τπ) = D}) = 0` for
//! every `J, D`. The per-permutation coefficients are tabulated once from
//! literal products, so adding or removing one permutation only touches its
//! column. The generic checkers in the parent module are the reference.

use std::collections::HashMap;

use crate::combinat::{rearrangement_classes, Subset};
use crate::error::{Error, Result};
use crate::ordered_partition::{enumerate_partitions, OrderedSetPartition};
use crate::perm::{all_permutations, Permutation};

use super::{ensure_checkable, MAX_CHECK_DEGREE};

/// Index of each tracked condition in [`Tally::flags`].
pub mod cond {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    /// `B·R_J⁻¹` is symmetric for every `J`.
    pub const CLOSURE_RIGHT: usize = 5;
    /// `R_J⁻¹·B` is symmetric for every `J`.
    pub const CLOSURE_LEFT: usize = 6;
    /// `B·D_J⁻¹ ≡ D_J⁻¹·B` for every `J`.
    pub const ER: usize = 7;
    pub const COUNT: usize = 8;
    pub const NAMES: [&str; COUNT] = [
        "a_d_symmetric",
        "b_d_commutative",
        "c_right_invariant",
        "d_left_invariant",
        "e_symmetric",
        "closure_right",
        "closure_left",
        "er_commutative",
    ];
}

/// Coefficient tables for one degree.
pub struct Kernel {
    n: usize,
    perms: Vec<Permutation>,
    rank: HashMap<Permutation, usize>,
    des: Vec<u32>,
    /// `(form, coefficient)` per permutation rank.
    columns: Vec<Vec<(u32, i32)>>,
    form_condition: Vec<u8>,
    /// Partitions kept for condition a), one per distinct descent signature,
    /// each the lexicographically smallest with that signature.
    a_partitions: Vec<OrderedSetPartition>,
}

/// Histograms of `Des(π·τ)` over `τ` in a class, per permutation and class index.
struct ProductTables {
    width: usize,
    data: Vec<u32>,
}

impl ProductTables {
    fn new(perms: usize, width: usize) -> Self {
        ProductTables {
            width,
            data: vec![0; perms * width * width],
        }
    }

    fn at(&self, p: usize, j: usize, d: usize) -> i32 {
        self.data[(p * self.width + j) * self.width + d] as i32
    }

    fn bump(&mut self, p: usize, j: usize, d: usize) {
        self.data[(p * self.width + j) * self.width + d] += 1;
    }

    /// `Σ_{D ⊆ K}` of the histogram at `(p, j)`.
    fn within(&self, p: usize, j: usize, k: usize) -> i32 {
        (0..self.width).filter(|&d| d & !k == 0).map(|d| self.at(p, j, d)).sum()
    }
}

struct FormBuilder {
    columns: Vec<Vec<(u32, i32)>>,
    form_condition: Vec<u8>,
}

impl FormBuilder {
    fn form(&mut self, condition: usize, coeffs: impl Iterator<Item = (usize, i32)>) {
        let id = self.form_condition.len() as u32;
        let mut any = false;
        for (p, c) in coeffs {
            if c != 0 {
                self.columns[p].push((id, c));
                any = true;
            }
        }
        if any {
            self.form_condition.push(condition as u8);
        }
    }
}

impl Kernel {
    pub fn new(n: usize) -> Result<Self> {
        ensure_checkable(n)?;
        if n == 0 {
            return Err(Error::Infeasible("degree 0 has no conditions to tabulate".into()));
        }
        let perms = all_permutations(n);
        let size = perms.len();
        let rank: HashMap<Permutation, usize> = perms.iter().cloned().zip(0..).collect();
        let des: Vec<u32> = perms.iter().map(|p| p.descent_set().bits() as u32).collect();
        let width = 1usize << (n - 1);
        let inv_des: Vec<usize> = perms.iter().map(|p| p.inverse().descent_set().bits() as usize).collect();

        // R_J⁻¹ contains τ for every J ⊇ Des(τ⁻¹); D_J⁻¹ only for J = Des(τ⁻¹).
        let mut right = ProductTables::new(size, width);
        let mut left = ProductTables::new(size, width);
        let mut right_d = ProductTables::new(size, width);
        let mut left_d = ProductTables::new(size, width);
        for (x, pi) in perms.iter().enumerate() {
            for (y, tau) in perms.iter().enumerate() {
                let k = inv_des[y];
                let dr = pi.compose(tau).expect("same degree").descent_set().bits() as usize;
                let dl = tau.compose(pi).expect("same degree").descent_set().bits() as usize;
                right_d.bump(x, k, dr);
                left_d.bump(x, k, dl);
                for j in 0..width {
                    if j & k == k {
                        right.bump(x, j, dr);
                        left.bump(x, j, dl);
                    }
                }
            }
        }

        let mut fb = FormBuilder {
            columns: vec![Vec::new(); size],
            form_condition: Vec::new(),
        };
        let ranks = 0..size;

        // a) one form per (signature, target subset).
        let mut seen: HashMap<(Vec<u32>, Vec<u32>), ()> = HashMap::new();
        let mut a_partitions = Vec::new();
        for u in enumerate_partitions(n, None)? {
            let star = u.u_star();
            let delta = u.delta();
            let moved = star.map(|s| delta.at(s));
            let (k1, k2): (Vec<u32>, Vec<u32>) = (0..width as u64)
                .map(|d| {
                    let d = Subset::from_bits(d);
                    (
                        d.intersection(star).map(|s| delta.at(s)).bits() as u32,
                        d.intersection(moved).bits() as u32,
                    )
                })
                .unzip();
            if k1 == k2 || seen.insert((k1.clone(), k2.clone()), ()).is_some() {
                continue;
            }
            a_partitions.push(u);
            for x in 0..width as u32 {
                fb.form(
                    cond::A,
                    ranks.clone().map(|p| {
                        let d = des[p] as usize;
                        (p, i32::from(k1[d] == x) - i32::from(k2[d] == x))
                    }),
                );
            }
        }

        // b) and the D-class analogue.
        for j in 0..width {
            for d in 0..width {
                fb.form(cond::B, ranks.clone().map(|p| (p, right.at(p, j, d) - left.at(p, j, d))));
                fb.form(cond::ER, ranks.clone().map(|p| (p, right_d.at(p, j, d) - left_d.at(p, j, d))));
            }
        }

        // c), d), e) and closure, each member of a ~-class against the class minimum.
        let classes = rearrangement_classes(n);
        let pairs: Vec<(usize, usize)> = classes
            .iter()
            .flat_map(|cls| {
                let rep = cls[0].bits() as usize;
                cls[1..].iter().map(move |k| (k.bits() as usize, rep))
            })
            .collect();
        for &(k, rep) in &pairs {
            for d in 0..width {
                fb.form(cond::C, ranks.clone().map(|p| (p, right.at(p, k, d) - right.at(p, rep, d))));
                fb.form(cond::D, ranks.clone().map(|p| (p, left.at(p, k, d) - left.at(p, rep, d))));
            }
            fb.form(
                cond::E,
                ranks.clone().map(|p| {
                    let d = des[p] as usize;
                    (p, i32::from(d & !k == 0) - i32::from(d & !rep == 0))
                }),
            );
            for j in 0..width {
                fb.form(
                    cond::CLOSURE_RIGHT,
                    ranks.clone().map(|p| (p, right.within(p, j, k) - right.within(p, j, rep))),
                );
                fb.form(
                    cond::CLOSURE_LEFT,
                    ranks.clone().map(|p| (p, left.within(p, j, k) - left.within(p, j, rep))),
                );
            }
        }

        Ok(Kernel {
            n,
            perms,
            rank,
            des,
            columns: fb.columns,
            form_condition: fb.form_condition,
            a_partitions,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `S_n` in lexicographic order; ranks index into this.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn rank(&self, pi: &Permutation) -> Option<usize> {
        self.rank.get(pi).copied()
    }

    pub fn descent_bits(&self, rank: usize) -> u32 {
        self.des[rank]
    }

    pub fn num_forms(&self) -> usize {
        self.form_condition.len()
    }

    /// Partitions whose descent signature is checked for condition a).
    pub fn a_partitions(&self) -> &[OrderedSetPartition] {
        &self.a_partitions
    }

    pub fn tally(&self) -> Tally<'_> {
        Tally {
            kernel: self,
            values: vec![0; self.form_condition.len()],
            nonzero: [0; cond::COUNT],
            hist: vec![0; 1 << (self.n - 1)],
        }
    }

    /// Condition flags for a multiset given as `(rank, multiplicity)` pairs.
    pub fn evaluate(&self, support: &[(usize, u64)]) -> [bool; cond::COUNT] {
        let mut t = self.tally();
        for &(r, m) in support {
            t.add(r, m as i64);
        }
        t.flags()
    }
}

impl std::fmt::Debug for Kernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Kernel")
            .field("degree", &self.n)
            .field("forms", &self.num_forms())
            .finish()
    }
}

/// Running values of every form, with per-condition counts of nonzero forms.
#[derive(Clone)]
pub struct Tally<'k> {
    kernel: &'k Kernel,
    values: Vec<i64>,
    nonzero: [u32; cond::COUNT],
    hist: Vec<i64>,
}

impl Tally<'_> {
    /// Adds `mult` copies of the permutation of rank `rank` (negative removes).
    pub fn add(&mut self, rank: usize, mult: i64) {
        let k = self.kernel;
        self.hist[k.des[rank] as usize] += mult;
        for &(form, c) in &k.columns[rank] {
            let v = &mut self.values[form as usize];
            let before = *v != 0;
            *v += mult * c as i64;
            let after = *v != 0;
            if before != after {
                let slot = &mut self.nonzero[k.form_condition[form as usize] as usize];
                if after {
                    *slot += 1;
                } else {
                    *slot -= 1;
                }
            }
        }
    }

    pub fn flags(&self) -> [bool; cond::COUNT] {
        self.nonzero.map(|z| z == 0)
    }

    /// Descent histogram, indexed by the bitmask of the descent set.
    pub fn histogram(&self) -> &[i64] {
        &self.hist
    }
}

/// The largest degree a kernel can be built for.
pub const MAX_KERNEL_DEGREE: usize = MAX_CHECK_DEGREE;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermMultiset;
    use crate::verifier::{check_closure, check_er_conjecture, check_theorem};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn support(k: &Kernel, b: &PermMultiset) -> Vec<(usize, u64)> {
        b.iter().map(|(p, m)| (k.rank(p).unwrap(), m)).collect()
    }

    fn reference(b: &PermMultiset) -> [bool; cond::COUNT] {
        let r = check_theorem(b).unwrap();
        let mut out = [false; cond::COUNT];
        out[..5].copy_from_slice(&r.flags());
        let n = b.degree();
        let (mut right, mut left) = (true, true);
        for j in Subset::all(n) {
            let rj = crate::verifier::j_class_multiset(n, j).unwrap();
            let e = |m: &PermMultiset| crate::verifier::check_e_symmetric(m).unwrap().holds;
            right &= e(&b.product(&rj).unwrap());
            left &= e(&rj.product(b).unwrap());
        }
        out[cond::CLOSURE_RIGHT] = right;
        out[cond::CLOSURE_LEFT] = left;
        out[cond::ER] = check_er_conjecture(b).unwrap().holds;
        out
    }

    #[test]
    fn matches_generic_checkers_on_random_multisets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4 {
            let k = Kernel::new(n).unwrap();
            for _ in 0..60 {
                let mut b = PermMultiset::new(n);
                for p in k.perms() {
                    if rng.random_bool(0.3) {
                        b.insert(p.clone(), rng.random_range(1..=3)).unwrap();
                    }
                }
                assert_eq!(k.evaluate(&support(&k, &b)), reference(&b), "{b}");
            }
        }
    }

    #[test]
    fn known_multisets() {
        let k = Kernel::new(4).unwrap();
        let sym = PermMultiset::parse_list(4, &["1324", "4132"]).unwrap();
        assert_eq!(k.evaluate(&support(&k, &sym)), [true; cond::COUNT]);
        let bad = PermMultiset::parse_list(4, &["2134"]).unwrap();
        let f = k.evaluate(&support(&k, &bad));
        assert_eq!(f[..5], [false; 5]);
        assert!(check_closure(&sym, Subset::EMPTY).unwrap());
    }

    #[test]
    fn incremental_matches_batch() {
        let k = Kernel::new(3).unwrap();
        let mut t = k.tally();
        for mask in 0u32..64 {
            let mut fresh = k.tally();
            for r in 0..6 {
                if mask >> r & 1 == 1 {
                    fresh.add(r, 1);
                }
            }
            // walk there incrementally from the previous state
            let prev = mask.wrapping_sub(1) & 63;
            if mask > 0 {
                for r in 0..6 {
                    let (was, now) = (prev >> r & 1, mask >> r & 1);
                    if was != now {
                        t.add(r, now as i64 - was as i64);
                    }
                }
            }
            assert_eq!(t.flags(), fresh.flags(), "{mask}");
            assert_eq!(t.histogram(), fresh.histogram());
        }
    }

    #[test]
    fn a_partitions_are_lexicographically_first() {
        let k = Kernel::new(4).unwrap();
        let all = enumerate_partitions(4, None).unwrap();
        let mut last = 0;
        for u in k.a_partitions() {
            let pos = all.iter().position(|x| x == u).unwrap();
            assert!(pos >= last);
            last = pos;
        }
    }
}
