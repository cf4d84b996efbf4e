//! Ordered set partitions of `[n]` and the maps `δ_U`, `σ_U`, `ρ_U`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{compositions, validate_composition, Subset};
use crate::error::{Error, Result};
use crate::perm::{standardize_letters, Permutation, MAX_DEGREE};

/// A sequence of nonempty, pairwise disjoint blocks whose union is `[n]`.
///
/// Blocks are kept sorted; their order is significant. Ordering between
/// partitions is lexicographic on the block sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<u8>>,
    n: usize,
}

impl OrderedSetPartition {
    /// Builds a partition, sorting each block and dropping empty ones.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n > MAX_DEGREE {
            return Err(Error::InvalidOrderedPartition(format!(
                "degree {n} exceeds {MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                continue;
            }
            block.sort_unstable();
            for &v in &block {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidOrderedPartition(format!(
                        "value {v} is repeated or outside [{n}]"
                    )));
                }
                seen[v] = true;
            }
            out.push(block.into_iter().map(|v| v as u8).collect());
        }
        Ok(OrderedSetPartition { blocks: out, n })
    }

    fn from_raw(n: usize, blocks: Vec<Vec<u8>>) -> Self {
        OrderedSetPartition { blocks, n }
    }

    /// The single-block partition `([n])`.
    pub fn single_block(n: usize) -> Self {
        let blocks = if n == 0 {
            Vec::new()
        } else {
            vec![(1..=n as u8).collect()]
        };
        OrderedSetPartition::from_raw(n, blocks)
    }

    /// Interval blocks of the given sizes, in natural order.
    pub fn intervals(sizes: &[usize]) -> Result<Self> {
        validate_composition(sizes)?;
        let mut start = 1;
        let mut blocks = Vec::with_capacity(sizes.len());
        for &s in sizes {
            blocks.push((start..start + s).collect());
            start += s;
        }
        OrderedSetPartition::new(blocks)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, i: usize) -> Vec<usize> {
        self.blocks[i].iter().map(|&v| v as usize).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.blocks.len()).map(|i| self.block(i)).collect()
    }

    /// Block sizes, a composition of `n`.
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The subset `J` with `co(J)` equal to the shape.
    pub fn shape_subset(&self) -> Subset {
        Subset::from_composition(&self.shape()).expect("blocks are nonempty")
    }

    /// `U* = {i : i and i+1 lie in the same block}`.
    pub fn u_star(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for block in &self.blocks {
            for w in block.windows(2) {
                if w[1] == w[0] + 1 {
                    s.insert(w[0] as usize);
                }
            }
        }
        s
    }

    /// `δ_U`: the positions of block `i` carry the `i`-th run of consecutive values, increasingly.
    pub fn delta(&self) -> Permutation {
        let mut word = vec![0u8; self.n];
        let mut next = 1u8;
        for block in &self.blocks {
            for &pos in block {
                word[pos as usize - 1] = next;
                next += 1;
            }
        }
        Permutation::from_raw(word)
    }

    /// `σ_U(π)`: block `i` carries `std` of the `i`-th segment of `π` (segments cut
    /// by the shape), shifted by the sizes of the earlier blocks.
    pub fn sigma(&self, pi: &Permutation) -> Result<Permutation> {
        self.check_degree(pi)?;
        let raw = pi.raw();
        let mut word = vec![0u8; self.n];
        let mut offset = 0usize;
        for block in &self.blocks {
            let segment = &raw[offset..offset + block.len()];
            let std = standardize_letters(segment);
            for (&pos, &v) in block.iter().zip(std.raw()) {
                word[pos as usize - 1] = v + offset as u8;
            }
            offset += block.len();
        }
        Ok(Permutation::from_raw(word))
    }

    /// The blockwise image `(π(U_1), π(U_2), ...)`.
    pub fn image(&self, pi: &Permutation) -> Result<OrderedSetPartition> {
        self.check_degree(pi)?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut img: Vec<u8> = b.iter().map(|&u| pi.raw()[u as usize - 1]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Ok(OrderedSetPartition::from_raw(self.n, blocks))
    }

    /// `ρ_U(π) = δ_W · π` with `W = π(U)`.
    pub fn rho(&self, pi: &Permutation) -> Result<Permutation> {
        self.image(pi)?.delta().compose(pi)
    }

    fn check_degree(&self, pi: &Permutation) -> Result<()> {
        if pi.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: pi.degree(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<Vec<usize>>> for OrderedSetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        OrderedSetPartition::new(blocks)
    }
}

impl From<OrderedSetPartition> for Vec<Vec<usize>> {
    fn from(u: OrderedSetPartition) -> Self {
        u.blocks()
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let vals: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", vals.join(","))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Π(α)` when a shape is given, otherwise all of `Π(n)`; sorted lexicographically
/// by block sequence.
pub fn enumerate_partitions(n: usize, shape: Option<&[usize]>) -> Result<Vec<OrderedSetPartition>> {
    let shapes = match shape {
        Some(alpha) => {
            validate_composition(alpha)?;
            if alpha.iter().sum::<usize>() != n {
                return Err(Error::InvalidComposition(format!(
                    "{alpha:?} is not a composition of {n}"
                )));
            }
            vec![alpha.to_vec()]
        }
        None => compositions(n),
    };
    let mut out = Vec::new();
    for alpha in shapes {
        let remaining: Vec<u8> = (1..=n as u8).collect();
        fill_blocks(n, &alpha, &remaining, &mut Vec::new(), &mut out);
    }
    out.sort();
    Ok(out)
}

fn fill_blocks(
    n: usize,
    sizes: &[usize],
    remaining: &[u8],
    cur: &mut Vec<Vec<u8>>,
    out: &mut Vec<OrderedSetPartition>,
) {
    let Some((&size, rest)) = sizes.split_first() else {
        out.push(OrderedSetPartition::from_raw(n, cur.clone()));
        return;
    };
    for_each_combination(remaining, size, &mut |chosen| {
        let left: Vec<u8> = remaining.iter().copied().filter(|v| !chosen.contains(v)).collect();
        cur.push(chosen.to_vec());
        fill_blocks(n, rest, &left, cur, out);
        cur.pop();
    });
}

fn for_each_combination(items: &[u8], k: usize, f: &mut impl FnMut(&[u8])) {
    fn rec(items: &[u8], k: usize, start: usize, cur: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len() - need {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, inverse_j_class};

    fn osp(blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn fubini(n: usize) -> usize {
        // a(n) = Σ_k C(n,k) a(n-k)
        let mut a = vec![1usize; n + 1];
        for m in 1..=n {
            let mut c = 1usize;
            let mut s = 0;
            for k in 1..=m {
                c = c * (m - k + 1) / k;
                s += c * a[m - k];
            }
            a[m] = s;
        }
        a[n]
    }

    #[test]
    fn rejects_invalid_blocks() {
        assert!(OrderedSetPartition::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(OrderedSetPartition::new(vec![vec![1, 4]]).is_err());
        let u = OrderedSetPartition::new(vec![vec![2, 1], vec![], vec![3]]).unwrap();
        assert_eq!(u.blocks(), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(4, Some(&[2, 2])).unwrap().len(), 6);
        assert_eq!(enumerate_partitions(3, None).unwrap().len(), 13);
        for n in 0..=6 {
            assert_eq!(enumerate_partitions(n, None).unwrap().len(), fubini(n));
        }
        let all = enumerate_partitions(9, Some(&[3, 3, 3])).unwrap();
        assert!(all.contains(&osp(&[&[2, 5, 8], &[1, 3, 4], &[6, 7, 9]])));
        assert_eq!(all.len(), 1680);
    }

    #[test]
    fn delta_examples() {
        let u = osp(&[&[2, 5, 8], &[1, 3, 4], &[6, 7, 9]]);
        assert_eq!(u.delta(), p("415627839"));
        assert_eq!(u.shape_subset(), Subset::from_elements([3, 6]).unwrap());
        assert_eq!(osp(&[&[1, 2], &[3, 4]]).delta(), p("1234"));
        assert_eq!(osp(&[&[3, 4], &[1, 2]]).delta(), p("3412"));
    }

    #[test]
    fn delta_image_is_the_j_class() {
        for n in 1..=6 {
            for alpha in compositions(n) {
                let j = Subset::from_composition(&alpha).unwrap();
                let mut img: Vec<Permutation> = enumerate_partitions(n, Some(&alpha))
                    .unwrap()
                    .iter()
                    .map(OrderedSetPartition::delta)
                    .collect();
                img.sort();
                assert_eq!(img, inverse_j_class(n, j).unwrap());
            }
        }
    }

    #[test]
    fn u_star_examples() {
        assert_eq!(osp(&[&[1, 3], &[2, 4]]).u_star(), Subset::EMPTY);
        assert_eq!(
            osp(&[&[1, 2, 3], &[4]]).u_star(),
            Subset::from_elements([1, 2]).unwrap()
        );
        assert_eq!(OrderedSetPartition::single_block(5).u_star(), Subset::full(5));
    }

    #[test]
    fn sigma_and_rho_examples() {
        let pi = p("2143");
        assert_eq!(osp(&[&[1, 2], &[3, 4]]).sigma(&pi).unwrap(), p("2143"));
        assert_eq!(osp(&[&[1, 3], &[2, 4]]).sigma(&pi).unwrap(), p("2413"));
        assert_eq!(osp(&[&[1, 3], &[2, 4]]).rho(&pi).unwrap(), p("1324"));
        assert_eq!(OrderedSetPartition::single_block(4).rho(&pi).unwrap(), pi);
        assert!(osp(&[&[1], &[2]]).sigma(&pi).is_err());
    }

    #[test]
    fn descent_laws_hold_exhaustively() {
        for n in 1..=5 {
            let perms = all_permutations(n);
            for u in enumerate_partitions(n, None).unwrap() {
                let delta = u.delta();
                let d_delta = delta.descent_set();
                let star = u.u_star();
                for pi in &perms {
                    let d = pi.descent_set();
                    let rho = u.rho(pi).unwrap().descent_set();
                    assert_eq!(rho, d_delta.union(d.intersection(star)), "rho {u} {pi}");
                    let mut expected = d_delta;
                    for s in star.iter() {
                        if d.contains(delta.at(s)) {
                            expected.insert(s);
                        }
                    }
                    assert_eq!(u.sigma(pi).unwrap().descent_set(), expected, "sigma {u} {pi}");
                }
            }
        }
    }
}
