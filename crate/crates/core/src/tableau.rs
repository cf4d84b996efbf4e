//! Standard Young tableaux, Robinson–Schensted, Knuth classes and the
//! promotion operators `∂_a^b` and `∂_V`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, Subset};
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

/// A filling of a Young diagram by `[n]` with rows and columns strictly increasing.
///
/// Boxes are addressed in 1-based matrix coordinates `(row, col)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let n: usize = rows.iter().map(Vec::len).sum();
        if n > MAX_DEGREE {
            return Err(Error::InvalidTableau(format!("size {n} exceeds {MAX_DEGREE}")));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidTableau(format!(
                        "value {v} is repeated or outside [{n}]"
                    )));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(StandardTableau {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as u8).collect())
                .collect(),
        })
    }

    /// The superstandard tableau of shape `lambda`: rows filled left to right, top to bottom.
    pub fn superstandard(lambda: &Partition) -> Self {
        let mut next = 1u8;
        let rows = lambda
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<u8> = (next..next + len as u8).collect();
                next += len as u8;
                row
            })
            .collect();
        StandardTableau { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows weakly decrease")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Value in box `(row, col)`, 1-based.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows
            .get(row.wrapping_sub(1))?
            .get(col.wrapping_sub(1))
            .map(|&v| v as usize)
    }

    /// Box containing `v`, 1-based.
    pub fn position(&self, v: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&x| x as usize == v)
                .map(|c| (r + 1, c + 1))
        })
    }

    /// `{i : i+1 lies in a lower row than i}`.
    pub fn descent_set(&self) -> Subset {
        let n = self.size();
        let mut row_of = vec![0usize; n + 2];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        let mut s = Subset::EMPTY;
        for i in 1..n {
            if row_of[i + 1] > row_of[i] {
                s.insert(i);
            }
        }
        s
    }

    /// Conjugate tableau (reflection in the main diagonal).
    pub fn transpose(&self) -> StandardTableau {
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        StandardTableau { rows }
    }

    /// `P_{<m}`: the subtableau of entries smaller than `m`.
    pub fn restrict_below(&self, m: usize) -> StandardTableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| (v as usize) < m).collect::<Vec<u8>>())
            .filter(|r| !r.is_empty())
            .collect();
        StandardTableau { rows }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows()
    }
}

impl fmt::Display for StandardTableau {
    /// One row per line, values separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", vals.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl std::str::FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: i + 1,
                    message: format!("{line:?}: {e}"),
                })?;
            rows.push(row);
        }
        StandardTableau::new(rows)
    }
}

/// All standard tableaux of shape `lambda`, sorted.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &[usize], rows: &mut Vec<Vec<u8>>, next: u8, n: u8, out: &mut Vec<StandardTableau>) {
        if next > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                rec(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(lambda.parts(), &mut rows, 1, lambda.size() as u8, &mut out);
    out.sort();
    out
}

/// Insertion tableau `p` and recording tableau `q` of equal shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: StandardTableau,
    pub q: StandardTableau,
}

impl TableauPair {
    pub fn new(p: StandardTableau, q: StandardTableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::ShapeMismatch(p.shape().into(), q.shape().into()));
        }
        Ok(TableauPair { p, q })
    }
}

/// Robinson–Schensted row insertion.
pub fn rs(pi: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (i, &v) in pi.raw().iter().enumerate() {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![(i + 1) as u8]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push((i + 1) as u8);
                    break;
                }
            }
        }
    }
    TableauPair {
        p: StandardTableau { rows: p },
        q: StandardTableau { rows: q },
    }
}

/// Inverse of [`rs`] by reverse bumping.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(p.shape().into(), q.shape().into()));
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    let mut word = vec![0u8; n];
    for step in (1..=n).rev() {
        let (r, c) = q.position(step).expect("q is standard");
        debug_assert_eq!(c, rows[r - 1].len(), "recording entry must be a corner");
        let mut x = rows[r - 1].pop().expect("corner exists");
        for row in rows[..r - 1].iter_mut().rev() {
            let c = row
                .iter()
                .rposition(|&y| y < x)
                .expect("a smaller entry exists in the row above");
            std::mem::swap(&mut row[c], &mut x);
        }
        word[step - 1] = x;
        if rows[r - 1].is_empty() {
            rows.pop();
        }
    }
    Ok(Permutation::from_raw(word))
}

/// `K(P)`: all permutations with insertion tableau `p`, sorted.
///
/// Results are memoized in a process-wide cache shared by all threads.
pub fn knuth_class(p: &StandardTableau) -> Arc<[Permutation]> {
    static CACHE: OnceLock<RwLock<HashMap<StandardTableau, Arc<[Permutation]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("knuth cache poisoned").get(p) {
        return Arc::clone(hit);
    }
    let mut perms: Vec<Permutation> = standard_tableaux(&p.shape())
        .iter()
        .map(|q| rs_inverse(p, q).expect("shapes agree"))
        .collect();
    perms.sort();
    let perms: Arc<[Permutation]> = perms.into();
    cache
        .write()
        .expect("knuth cache poisoned")
        .entry(p.clone())
        .or_insert(perms)
        .clone()
}

/// The boxes visited by a promotion slide, and its value window `[a, b]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PromotionTrace {
    pub path: Vec<(usize, usize)>,
    pub window: (usize, usize),
}

fn check_window(t: &StandardTableau, a: usize, b: usize) -> Result<()> {
    let n = t.size();
    if a < 1 || a > b || b > n {
        return Err(Error::OutOfRange {
            what: "promotion window",
            detail: format!("[{a}, {b}] is not a window of [1, {n}]"),
        });
    }
    Ok(())
}

fn find(rows: &[Vec<u8>], v: u8) -> (usize, usize) {
    rows.iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&x| x == v).map(|c| (r, c)))
        .expect("value present")
}

/// `∂_a^b`: delete `a`, slide along the `a`-promotion path inside the window
/// `[a, b]`, write `b + 1` in the vacated box and decrement the window.
pub fn promote(t: &StandardTableau, a: usize, b: usize) -> Result<(StandardTableau, PromotionTrace)> {
    check_window(t, a, b)?;
    let in_window = |v: u8| (a..=b).contains(&(v as usize));
    let mut rows = t.rows.clone();
    let mut path = vec![find(&rows, a as u8)];
    loop {
        let (r, c) = *path.last().unwrap();
        let below = rows.get(r + 1).and_then(|row| row.get(c)).copied().filter(|&v| in_window(v));
        let right = rows[r].get(c + 1).copied().filter(|&v| in_window(v));
        let next = match (below, right) {
            (Some(x), Some(y)) => {
                assert_ne!(x, y, "promotion neighbours must differ");
                if x < y { (r + 1, c) } else { (r, c + 1) }
            }
            (Some(_), None) => (r + 1, c),
            (None, Some(_)) => (r, c + 1),
            (None, None) => break,
        };
        path.push(next);
    }
    for i in 0..path.len() - 1 {
        let (r, c) = path[i + 1];
        let v = rows[r][c];
        let (r0, c0) = path[i];
        rows[r0][c0] = v;
    }
    let (rl, cl) = *path.last().unwrap();
    rows[rl][cl] = 0;
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            if (a + 1..=b).contains(&(*v as usize)) {
                *v -= 1;
            }
        }
    }
    // b + 1 lands in the vacated box and is decremented with the window.
    rows[rl][cl] = b as u8;
    let trace = PromotionTrace {
        path: path.iter().map(|&(r, c)| (r + 1, c + 1)).collect(),
        window: (a, b),
    };
    Ok((StandardTableau { rows }, trace))
}

/// Inverse of [`promote`]: delete `b`, slide toward the upper left choosing the
/// larger neighbour, increment the window and write `a` in the vacated box.
pub fn inverse_promote(t: &StandardTableau, a: usize, b: usize) -> Result<StandardTableau> {
    check_window(t, a, b)?;
    let in_window = |v: u8| (a..=b).contains(&(v as usize));
    let mut rows = t.rows.clone();
    let mut path = vec![find(&rows, b as u8)];
    loop {
        let (r, c) = *path.last().unwrap();
        let above = (r > 0).then(|| rows[r - 1][c]).filter(|&v| in_window(v));
        let left = (c > 0).then(|| rows[r][c - 1]).filter(|&v| in_window(v));
        let next = match (above, left) {
            (Some(x), Some(y)) => {
                assert_ne!(x, y, "promotion neighbours must differ");
                if x > y { (r - 1, c) } else { (r, c - 1) }
            }
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
            (None, None) => break,
        };
        path.push(next);
    }
    for i in 0..path.len() - 1 {
        let (r, c) = path[i + 1];
        let v = rows[r][c];
        let (r0, c0) = path[i];
        rows[r0][c0] = v;
    }
    let (rl, cl) = *path.last().unwrap();
    rows[rl][cl] = 0;
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            if (a..b).contains(&(*v as usize)) {
                *v += 1;
            }
        }
    }
    rows[rl][cl] = a as u8;
    Ok(StandardTableau { rows })
}

/// `∂_V = ∂_{v_1}^{k+1} ∘ ∂_{v_2}^{k+2} ∘ ... ∘ ∂_{v_m}^{n}` with `k = n - |V|`,
/// applied right to left. `∂_∅` is the identity.
pub fn promote_v(t: &StandardTableau, v: &[usize]) -> Result<StandardTableau> {
    let n = t.size();
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != v.len() || sorted.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::OutOfRange {
            what: "promotion set",
            detail: format!("{v:?} is not a subset of [{n}]"),
        });
    }
    let k = n - sorted.len();
    let mut cur = t.clone();
    for (i, &vi) in sorted.iter().enumerate().rev() {
        cur = promote(&cur, vi, k + i + 1)?.0;
    }
    Ok(cur)
}
