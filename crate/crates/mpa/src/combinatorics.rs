//! Enumeration and ordering primitives: multisets under graded lexicographic
//! order, weak composition matrices M(n,λ), integer partitions, hook lengths,
//! and semistandard multiset tableaux (SSMT).

use num::BigInt;
use num::One;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A multiset over the ordered alphabet {1..s}, stored as a sorted sequence.
///
/// The empty multiset is the global minimum of the graded lexicographic
/// order and is a legal tableau entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn new(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        Multiset(entries)
    }

    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    /// The multiset {1^{v₁}, 2^{v₂}, …} from a multiplicity vector.
    pub fn from_multiplicities(v: &[u32]) -> Self {
        let mut entries = Vec::new();
        for (sym, &mult) in v.iter().enumerate() {
            entries.extend(std::iter::repeat(sym as u32 + 1).take(mult as usize));
        }
        Multiset(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity vector over {1..s}.
    pub fn multiplicities(&self, s: usize) -> Vec<u32> {
        let mut v = vec![0u32; s];
        for &e in &self.0 {
            v[(e - 1) as usize] += 1;
        }
        v
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        Multiset::new(entries)
    }
}

/// Graded lexicographic order: smaller cardinality wins, ties broken by
/// lexicographic comparison of the sorted entry sequences.
pub fn graded_lex_compare(a: &Multiset, b: &Multiset) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_lex_compare(self, other)
    }
}

/// An s×n grid of non-negative integers whose i-th row sums to λᵢ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeakCompositionMatrix {
    pub rows: Vec<Vec<u32>>,
}

impl WeakCompositionMatrix {
    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn s(&self) -> usize {
        self.rows.len()
    }

    /// Column j as an s-vector.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }
}

/// All weak compositions of `total` into `n` parts, in lexicographic order.
pub fn weak_compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, idx: usize, rem: u32, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == cur.len() {
            cur[idx] = rem;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[idx] = v;
            rec(cur, idx + 1, rem - v, out);
        }
    }
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut cur, 0, total, &mut out);
    out
}

/// All of M(n,λ) in row-major lexicographic order;
/// count = ∏ᵢ C(n+λᵢ−1, λᵢ).
pub fn enumerate_weak_compositions(n: usize, lambda: &[u32]) -> Vec<WeakCompositionMatrix> {
    let per_row: Vec<Vec<Vec<u32>>> = lambda.iter().map(|&l| weak_compositions(n, l)).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Vec<u32>> = Vec::new();
    fn rec(
        per_row: &[Vec<Vec<u32>>],
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<WeakCompositionMatrix>,
    ) {
        if cur.len() == per_row.len() {
            out.push(WeakCompositionMatrix { rows: cur.clone() });
            return;
        }
        for row in &per_row[cur.len()] {
            cur.push(row.clone());
            rec(per_row, cur, out);
            cur.pop();
        }
    }
    rec(&per_row, &mut cur, &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPartition(pub Vec<u32>);

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        IntegerPartition(parts)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn num_cells(&self) -> usize {
        self.size() as usize
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> IntegerPartition {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.0.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        IntegerPartition(parts)
    }

    /// Hook length of the cell in row r, column c (0-based).
    pub fn hook_length(&self, r: usize, c: usize) -> u32 {
        let arm = self.0[r] - c as u32 - 1;
        let leg = self.0[r + 1..].iter().filter(|&&p| p as usize > c).count() as u32;
        arm + leg + 1
    }

    /// b(ν) = Σᵢ (i−1)·νᵢ.
    pub fn b_statistic(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }
}

/// All partitions of n, in descending lexicographic order; (0) gives the
/// single empty partition.
pub fn enumerate_partitions(n: u32) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if rem == 0 {
            out.push(IntegerPartition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Number of standard Young tableaux of shape ν by the hook length formula.
pub fn count_syt(nu: &IntegerPartition) -> BigInt {
    let n = nu.size() as u64;
    let mut hooks = BigInt::one();
    for r in 0..nu.0.len() {
        for c in 0..nu.0[r] as usize {
            hooks *= BigInt::from(nu.hook_length(r, c));
        }
    }
    factorial(n) / hooks
}

/// A filling of the Young diagram of `shape` by multisets; rows weakly
/// increase and columns strictly increase in graded lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultisetTableau {
    pub shape: IntegerPartition,
    pub rows: Vec<Vec<Multiset>>,
}

impl MultisetTableau {
    pub fn is_valid(&self) -> bool {
        if self.rows.len() != self.shape.0.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.0[r] as usize {
                return false;
            }
            for c in 1..row.len() {
                if row[c - 1] > row[c] {
                    return false;
                }
            }
            if r > 0 {
                for c in 0..row.len() {
                    if self.rows[r - 1][c] >= row[c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn content(&self) -> Multiset {
        let mut acc = Multiset::empty();
        for row in &self.rows {
            for cell in row {
                acc = acc.union(cell);
            }
        }
        acc
    }
}

/// Distinct submultisets of `content`, sorted in graded lex order.
fn submultisets(content: &Multiset, s: usize) -> Vec<Multiset> {
    let mult = content.multiplicities(s);
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    fn rec(mult: &[u32], cur: &mut Vec<u32>, idx: usize, out: &mut Vec<Multiset>) {
        if idx == mult.len() {
            out.push(Multiset::from_multiplicities(cur));
            return;
        }
        for v in 0..=mult[idx] {
            cur[idx] = v;
            rec(mult, cur, idx + 1, out);
        }
        cur[idx] = 0;
    }
    rec(&mult, &mut cur, 0, &mut out);
    out.sort();
    out
}

/// All SSMT of shape ν whose entry-union equals `content` (over {1..s}).
///
/// Cells are filled in column-reading order with pruning by remaining
/// content; output order is lexicographic in the sequence of chosen entries.
pub fn enumerate_ssmt(nu: &IntegerPartition, content: &Multiset) -> Vec<MultisetTableau> {
    let s = content.entries().last().copied().unwrap_or(0).max(1) as usize;
    let candidates = submultisets(content, s);
    let col_lens = nu.conjugate();
    // Column-reading order: (col, row) pairs, top to bottom within a column.
    let mut cells = Vec::new();
    for c in 0..col_lens.0.len() {
        for r in 0..col_lens.0[c] as usize {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<Option<Multiset>>> =
        nu.0.iter().map(|&w| vec![None; w as usize]).collect();
    let mut remaining = content.multiplicities(s);
    let mut out = Vec::new();

    fn fits(rem: &[u32], cand: &Multiset, s: usize) -> bool {
        cand.multiplicities(s).iter().zip(rem).all(|(c, r)| c <= r)
    }

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        candidates: &[Multiset],
        grid: &mut Vec<Vec<Option<Multiset>>>,
        remaining: &mut Vec<u32>,
        s: usize,
        nu: &IntegerPartition,
        out: &mut Vec<MultisetTableau>,
    ) {
        if idx == cells.len() {
            if remaining.iter().all(|&r| r == 0) {
                out.push(MultisetTableau {
                    shape: nu.clone(),
                    rows: grid
                        .iter()
                        .map(|row| row.iter().map(|c| c.clone().unwrap()).collect())
                        .collect(),
                });
            }
            return;
        }
        let (r, c) = cells[idx];
        for cand in candidates {
            if !fits(remaining, cand, s) {
                continue;
            }
            // weak increase along rows, strict increase down columns
            if c > 0 {
                if let Some(left) = &grid[r][c - 1] {
                    if cand < left {
                        continue;
                    }
                }
            }
            if r > 0 {
                if let Some(above) = &grid[r - 1][c] {
                    if cand <= above {
                        continue;
                    }
                }
            }
            let cm = cand.multiplicities(s);
            for (rem, m) in remaining.iter_mut().zip(&cm) {
                *rem -= m;
            }
            grid[r][c] = Some(cand.clone());
            rec(cells, idx + 1, candidates, grid, remaining, s, nu, out);
            grid[r][c] = None;
            for (rem, m) in remaining.iter_mut().zip(&cm) {
                *rem += m;
            }
        }
    }

    rec(&cells, 0, &candidates, &mut grid, &mut remaining, s, nu, &mut out);
    out
}
