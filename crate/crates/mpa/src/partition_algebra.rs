//! The classical partition algebra P_k(ξ): diagram basis, orbit basis, both
//! multiplications, the unitriangular basis change, the involution i, the
//! block statistic α_d, and the tensor-action matrices φ_k on (Fⁿ)^{⊗k}.
//!
//! Vertices are stored internally as 0..2k: 0..k-1 is the top row 1..k and
//! k..2k-1 is the bottom row 1'..k'. The JSON wire form uses signed labels
//! (positive j for j, negative j for j').

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::arith::{falling_factorial, rat_from_string, rat_to_string, PolyXi, Rat};
use crate::combinatorics::factorial;
use crate::error::MpaError;

/// A set partition of {1..k, 1'..k'} in canonical block order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionDiagram {
    k: usize,
    /// Disjoint sorted blocks covering 0..2k, sorted by minimal vertex.
    blocks: Vec<Vec<usize>>,
}

impl SetPartitionDiagram {
    pub fn new(k: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        debug_assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), 2 * k);
        debug_assert!({
            let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
            all.sort_unstable();
            all == (0..2 * k).collect::<Vec<_>>()
        });
        SetPartitionDiagram { k, blocks }
    }

    /// Build from signed labels: positive j is top vertex j, negative j is j'.
    pub fn from_signed(k: usize, blocks: &[Vec<i64>]) -> Result<Self, MpaError> {
        let mut internal = Vec::with_capacity(blocks.len());
        let mut seen = HashSet::new();
        for b in blocks {
            let mut ib = Vec::with_capacity(b.len());
            for &v in b {
                let u = if v > 0 && v as usize <= k {
                    v as usize - 1
                } else if v < 0 && (-v) as usize <= k {
                    k + (-v) as usize - 1
                } else {
                    return Err(MpaError::Malformed(format!(
                        "vertex {v} out of range for k = {k}"
                    )));
                };
                if !seen.insert(u) {
                    return Err(MpaError::Malformed(format!("vertex {v} appears twice")));
                }
                ib.push(u);
            }
            internal.push(ib);
        }
        if seen.len() != 2 * k {
            return Err(MpaError::Malformed(format!(
                "blocks must cover all {} vertices",
                2 * k
            )));
        }
        Ok(SetPartitionDiagram::new(k, internal))
    }

    pub fn identity(k: usize) -> Self {
        SetPartitionDiagram::new(k, (0..k).map(|j| vec![j, k + j]).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| {
                        if v < self.k {
                            v as i64 + 1
                        } else {
                            -((v - self.k) as i64 + 1)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Restriction of the blocks to the top row (non-empty parts only).
    pub fn top_partition(&self) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&v| v < self.k).collect())
            .filter(|p: &Vec<usize>| !p.is_empty())
            .collect();
        parts.sort();
        parts
    }

    /// Restriction to the bottom row, with j' relabelled to j.
    pub fn bottom_partition(&self) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&v| v >= self.k).map(|&v| v - self.k).collect())
            .filter(|p: &Vec<usize>| !p.is_empty())
            .collect();
        parts.sort();
        parts
    }

    /// Bottom-row block sizes, including zeros for top-only blocks.
    pub fn bottom_block_sizes(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| b.iter().filter(|&&v| v >= self.k).count())
            .collect()
    }

    /// Per-block (top size, bottom size) pairs.
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .map(|b| {
                let top = b.iter().filter(|&&v| v < self.k).count();
                (top, b.len() - top)
            })
            .collect()
    }
}

/// Debug prints the signed-label block form, e.g. {{1,2,-1},{-2}}.
impl fmt::Debug for SetPartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.signed_blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Concatenation d1∘d2 with d2 placed on top: returns the stacked-and-
/// contracted diagram and the number of wholly-middle components.
pub fn compose_diagrams(
    d1: &SetPartitionDiagram,
    d2: &SetPartitionDiagram,
) -> Result<(SetPartitionDiagram, usize), MpaError> {
    if d1.k != d2.k {
        return Err(MpaError::KMismatch);
    }
    let k = d1.k;
    // 3k virtual vertices: 0..k top (top of d2), k..2k middle, 2k..3k bottom.
    let mut uf = UnionFind::new(3 * k);
    for b in &d2.blocks {
        for w in b.windows(2) {
            uf.union(w[0], w[1]); // top of d2 -> 0..k, bottom of d2 -> k..2k
        }
    }
    for b in &d1.blocks {
        let shifted: Vec<usize> = b.iter().map(|&v| v + k).collect();
        for w in shifted.windows(2) {
            uf.union(w[0], w[1]); // top of d1 -> k..2k, bottom of d1 -> 2k..3k
        }
    }
    let mut comp_members: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..3 * k {
        comp_members.entry(uf.find(v)).or_default().push(v);
    }
    let mut blocks = Vec::new();
    let mut middle = 0usize;
    for (_, members) in comp_members {
        let outer: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| v < k || v >= 2 * k)
            .map(|v| if v < k { v } else { v - k })
            .collect();
        if outer.is_empty() {
            middle += 1;
        } else {
            blocks.push(outer);
        }
    }
    Ok((SetPartitionDiagram::new(k, blocks), middle))
}

/// Swap j ↔ j' in every block.
pub fn involution_i(d: &SetPartitionDiagram) -> SetPartitionDiagram {
    let k = d.k;
    SetPartitionDiagram::new(
        k,
        d.blocks
            .iter()
            .map(|b| b.iter().map(|&v| if v < k { v + k } else { v - k }).collect())
            .collect(),
    )
}

/// α_d = k!/(b₁!⋯b_n!) with bᵢ the bottom-row block sizes.
pub fn alpha(d: &SetPartitionDiagram) -> Rat {
    let mut denom = num::BigInt::one();
    for b in d.bottom_block_sizes() {
        denom *= factorial(b as u64);
    }
    Rat::new(factorial(d.k as u64), denom)
}

/// All set partitions of {0..n-1} via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(assign: &mut Vec<usize>, idx: usize, max_used: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if idx == assign.len() {
            let nblocks = max_used;
            let mut blocks = vec![Vec::new(); nblocks];
            for (i, &b) in assign.iter().enumerate() {
                blocks[b].push(i);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max_used {
            assign[idx] = b;
            rec(assign, idx + 1, max_used.max(b + 1), out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(&mut assign, 0, 0, &mut out);
    out
}

/// All diagrams in A_k; |A_k| = Bell(2k).
pub fn enumerate_diagrams(k: usize) -> Vec<SetPartitionDiagram> {
    set_partitions(2 * k)
        .into_iter()
        .map(|blocks| SetPartitionDiagram::new(k, blocks))
        .collect()
}

/// All coarsenings of d (including d itself): merge blocks along every set
/// partition of the block set.
pub fn coarsenings(d: &SetPartitionDiagram) -> Vec<SetPartitionDiagram> {
    let m = d.num_blocks();
    set_partitions(m)
        .into_iter()
        .map(|grouping| {
            let blocks = grouping
                .into_iter()
                .map(|group| {
                    let mut merged = Vec::new();
                    for i in group {
                        merged.extend_from_slice(&d.blocks[i]);
                    }
                    merged
                })
                .collect();
            SetPartitionDiagram::new(d.k, blocks)
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Diagram,
    Orbit,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::Diagram => "diagram",
            Basis::Orbit => "orbit",
        }
    }
}

/// A finite linear combination of A_k basis labels with PolyXi coefficients,
/// tagged with the basis it is expressed in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PAElement {
    pub k: usize,
    pub basis: Basis,
    terms: BTreeMap<SetPartitionDiagram, PolyXi>,
}

impl PAElement {
    pub fn zero(k: usize, basis: Basis) -> Self {
        PAElement { k, basis, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(k: usize, basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (SetPartitionDiagram, PolyXi)>,
    {
        let mut e = PAElement::zero(k, basis);
        for (d, c) in terms {
            e.add_term(d, c);
        }
        e
    }

    pub fn basis_element(d: SetPartitionDiagram, basis: Basis) -> Self {
        let k = d.k;
        PAElement::from_terms(k, basis, [(d, PolyXi::one())])
    }

    pub fn add_term(&mut self, d: SetPartitionDiagram, c: PolyXi) {
        debug_assert_eq!(d.k, self.k);
        let entry = self.terms.entry(d).or_insert_with(PolyXi::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            // re-fetch key to remove; BTreeMap has no entry-remove, do lazily
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartitionDiagram, &PolyXi)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> PAElement {
        PAElement::from_terms(
            self.k,
            self.basis,
            self.terms.iter().map(|(d, p)| (d.clone(), p.scale(c))),
        )
    }

    pub fn add(&self, other: &PAElement) -> PAElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PAElement) -> PAElement {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn apply_involution(&self) -> PAElement {
        PAElement::from_terms(
            self.k,
            self.basis,
            self.terms.iter().map(|(d, c)| (involution_i(d), c.clone())),
        )
    }
}

/// Bilinear extension of d1·d2 = ξ^l · (d1∘d2).
pub fn multiply_diagram_basis(a: &PAElement, b: &PAElement) -> Result<PAElement, MpaError> {
    if a.basis != Basis::Diagram || b.basis != Basis::Diagram {
        return Err(MpaError::BasisMismatch {
            expected: "diagram",
            got: if a.basis != Basis::Diagram { a.basis.name() } else { b.basis.name() },
        });
    }
    if a.k != b.k {
        return Err(MpaError::KMismatch);
    }
    let mut out = PAElement::zero(a.k, Basis::Diagram);
    for (d1, c1) in &a.terms {
        for (d2, c2) in &b.terms {
            let (prod, l) = compose_diagrams(d1, d2)?;
            let mut coeff = c1.mul(c2);
            for _ in 0..l {
                coeff = coeff.mul(&PolyXi::xi());
            }
            out.add_term(prod, coeff);
        }
    }
    Ok(out)
}

/// Change of basis d = Σ_{d' ≤ d} x_{d'} applied term by term.
pub fn orbit_from_diagram(a: &PAElement) -> Result<PAElement, MpaError> {
    if a.basis != Basis::Diagram {
        return Err(MpaError::BasisMismatch { expected: "diagram", got: a.basis.name() });
    }
    let mut out = PAElement::zero(a.k, Basis::Orbit);
    for (d, c) in &a.terms {
        for d_coarser in coarsenings(d) {
            out.add_term(d_coarser, c.clone());
        }
    }
    Ok(out)
}

/// Inverse basis change by triangular back-substitution:
/// x_d = d − Σ_{d' < d} x_{d'}.
pub fn diagram_from_orbit(a: &PAElement) -> Result<PAElement, MpaError> {
    if a.basis != Basis::Orbit {
        return Err(MpaError::BasisMismatch { expected: "orbit", got: a.basis.name() });
    }
    let mut memo: HashMap<SetPartitionDiagram, PAElement> = HashMap::new();
    let mut out = PAElement::zero(a.k, Basis::Diagram);
    for (d, c) in &a.terms {
        let expansion = orbit_vector_in_diagram_basis(d, &mut memo);
        for (dd, cc) in &expansion.terms {
            out.add_term(dd.clone(), cc.mul(c));
        }
    }
    Ok(out)
}

fn orbit_vector_in_diagram_basis(
    d: &SetPartitionDiagram,
    memo: &mut HashMap<SetPartitionDiagram, PAElement>,
) -> PAElement {
    if let Some(e) = memo.get(d) {
        return e.clone();
    }
    let mut result = PAElement::basis_element(d.clone(), Basis::Diagram);
    for d_coarser in coarsenings(d) {
        if &d_coarser == d {
            continue;
        }
        let sub = orbit_vector_in_diagram_basis(&d_coarser, memo);
        result = result.sub(&sub);
    }
    memo.insert(d.clone(), result.clone());
    result
}

/// Orbit-basis product x_{d1}·x_{d2} per the structure-constant theorem:
/// zero unless d1∘d2 matches in the middle, otherwise a sum over partial
/// matchings of top-only blocks of d2 with bottom-only blocks of d1, with
/// coefficient (ξ − |d|)_{[d1∘d2]}.
pub fn multiply_orbit_basis(a: &PAElement, b: &PAElement) -> Result<PAElement, MpaError> {
    if a.basis != Basis::Orbit || b.basis != Basis::Orbit {
        return Err(MpaError::BasisMismatch {
            expected: "orbit",
            got: if a.basis != Basis::Orbit { a.basis.name() } else { b.basis.name() },
        });
    }
    if a.k != b.k {
        return Err(MpaError::KMismatch);
    }
    let mut out = PAElement::zero(a.k, Basis::Orbit);
    for (d1, c1) in &a.terms {
        for (d2, c2) in &b.terms {
            let prod = orbit_pair_product(d1, d2)?;
            for (d, c) in &prod.terms {
                out.add_term(d.clone(), c.mul(&c1.mul(c2)));
            }
        }
    }
    Ok(out)
}

fn orbit_pair_product(
    d1: &SetPartitionDiagram,
    d2: &SetPartitionDiagram,
) -> Result<PAElement, MpaError> {
    let k = d1.k;
    // middle match: d1 restricted to its top row equals d2 restricted to its
    // bottom row (primes ignored)
    if d1.top_partition() != d2.bottom_partition() {
        return Ok(PAElement::zero(k, Basis::Orbit));
    }
    let (composed, middle) = compose_diagrams(d1, d2)?;
    // Top-only blocks of d2 and bottom-only blocks of d1 survive unchanged in
    // the composed diagram; locate their indices there.
    let top_only: Vec<usize> = d2
        .blocks
        .iter()
        .filter(|b| b.iter().all(|&v| v < k))
        .map(|b| {
            composed
                .blocks
                .iter()
                .position(|cb| cb == b)
                .expect("top-only block of d2 must survive composition")
        })
        .collect();
    let bottom_only: Vec<usize> = d1
        .blocks
        .iter()
        .filter(|b| b.iter().all(|&v| v >= k))
        .map(|b| {
            composed
                .blocks
                .iter()
                .position(|cb| cb == b)
                .expect("bottom-only block of d1 must survive composition")
        })
        .collect();

    let mut out = PAElement::zero(k, Basis::Orbit);
    // Enumerate partial injective matchings top_only -> bottom_only.
    let mut used = vec![false; bottom_only.len()];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    fn rec(
        idx: usize,
        top_only: &[usize],
        bottom_only: &[usize],
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        composed: &SetPartitionDiagram,
        middle: usize,
        out: &mut PAElement,
    ) {
        if idx == top_only.len() {
            // merge the matched pairs
            let mut blocks = composed.blocks.clone();
            for &(t, b) in pairs.iter() {
                let merged: Vec<usize> =
                    blocks[t].iter().chain(blocks[b].iter()).copied().collect();
                blocks[t] = merged;
                blocks[b] = Vec::new();
            }
            blocks.retain(|b| !b.is_empty());
            let d = SetPartitionDiagram::new(composed.k, blocks);
            let coeff = falling_factorial(
                &PolyXi::xi_plus(-(d.num_blocks() as i64)),
                middle,
            );
            out.add_term(d, coeff);
            return;
        }
        // leave top_only[idx] unmatched
        rec(idx + 1, top_only, bottom_only, used, pairs, composed, middle, out);
        for j in 0..bottom_only.len() {
            if !used[j] {
                used[j] = true;
                pairs.push((top_only[idx], bottom_only[j]));
                rec(idx + 1, top_only, bottom_only, used, pairs, composed, middle, out);
                pairs.pop();
                used[j] = false;
            }
        }
    }
    rec(0, &top_only, &bottom_only, &mut used, &mut pairs, &composed, middle, &mut out);
    Ok(out)
}

/// Dense square matrix of exact rationals.
pub type RatMatrix = Vec<Vec<Rat>>;

/// The tensor-action matrix of an orbit-basis element on (Fⁿ)^{⊗k},
/// coefficients evaluated at ξ = n. Rows and columns are indexed by the n^k
/// index tuples in lexicographic order.
pub fn phi_k_matrix(x: &PAElement, n: usize, cap: usize) -> Result<RatMatrix, MpaError> {
    if x.basis != Basis::Orbit {
        return Err(MpaError::BasisMismatch { expected: "orbit", got: x.basis.name() });
    }
    let k = x.k;
    let dim = n
        .checked_pow(k as u32)
        .filter(|&d| d <= cap)
        .ok_or(MpaError::ResourceLimit { dim: n.saturating_pow(k as u32), cap })?;
    let mut m = vec![vec![Rat::zero(); dim]; dim];
    for (d, c) in &x.terms {
        let v = c.eval_int(n as i64);
        if v.is_zero() || d.num_blocks() > n {
            continue;
        }
        // Assign distinct values in 1..n to blocks; read off the index tuples.
        let nb = d.num_blocks();
        let mut values = vec![0usize; nb];
        let mut used = vec![false; n];
        fn assign(
            bi: usize,
            d: &SetPartitionDiagram,
            n: usize,
            values: &mut Vec<usize>,
            used: &mut Vec<bool>,
            v: &Rat,
            m: &mut RatMatrix,
        ) {
            let k = d.k();
            if bi == d.num_blocks() {
                let mut vertex_val = vec![0usize; 2 * k];
                for (i, b) in d.blocks().iter().enumerate() {
                    for &vx in b {
                        vertex_val[vx] = values[i];
                    }
                }
                let col = (0..k).fold(0usize, |acc, j| acc * n + vertex_val[j]);
                let row = (0..k).fold(0usize, |acc, j| acc * n + vertex_val[k + j]);
                m[row][col] += v;
                return;
            }
            for val in 0..n {
                if !used[val] {
                    used[val] = true;
                    values[bi] = val;
                    assign(bi + 1, d, n, values, used, v, m);
                    used[val] = false;
                }
            }
        }
        assign(0, d, n, &mut values, &mut used, &v, &mut m);
    }
    Ok(m)
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[l][j].is_zero() {
                    let prod = &a[i][l] * &b[l][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

/// Rank over ℚ by Gaussian elimination; rows may have any common length.
pub fn mat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = Rat::one() / m[rank][col].clone();
        for c in col..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let sub = &m[rank][c] * &f;
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

// --- JSON wire forms -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    k: usize,
    blocks: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PATermWire {
    blocks: Vec<Vec<i64>>,
    coeff: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct PAElementWire {
    k: usize,
    basis: Basis,
    terms: Vec<PATermWire>,
}

impl SetPartitionDiagram {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DiagramWire { k: self.k, blocks: self.signed_blocks() }).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MpaError> {
        let w: DiagramWire = serde_json::from_value(v.clone())
            .map_err(|e| MpaError::Malformed(format!("diagram json: {e}")))?;
        SetPartitionDiagram::from_signed(w.k, &w.blocks)
    }
}

impl PAElement {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PAElementWire {
            k: self.k,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| PATermWire {
                    blocks: d.signed_blocks(),
                    coeff: c.coeffs().iter().map(rat_to_string).collect(),
                })
                .collect(),
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MpaError> {
        let w: PAElementWire = serde_json::from_value(v.clone())
            .map_err(|e| MpaError::Malformed(format!("algebra element json: {e}")))?;
        let mut e = PAElement::zero(w.k, w.basis);
        for t in w.terms {
            let d = SetPartitionDiagram::from_signed(w.k, &t.blocks)?;
            let coeffs = t
                .coeff
                .iter()
                .map(|s| rat_from_string(s))
                .collect::<Result<Vec<_>, _>>()?;
            e.add_term(d, PolyXi::from_coeffs(coeffs));
        }
        Ok(e)
    }
}

pub fn rat_matrix_to_json(basis_labels: Vec<serde_json::Value>, m: &RatMatrix) -> serde_json::Value {
    serde_json::json!({
        "basis": basis_labels,
        "rows": m.iter()
            .map(|r| r.iter().map(rat_to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn d(k: usize, blocks: &[&[i64]]) -> SetPartitionDiagram {
        SetPartitionDiagram::from_signed(k, &blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(enumerate_diagrams(1).len(), 2);
        assert_eq!(enumerate_diagrams(2).len(), 15);
        assert_eq!(enumerate_diagrams(3).len(), 203);
    }

    #[test]
    fn worked_k5_composition() {
        let d1 = d(5, &[&[1, -1], &[2], &[3], &[4], &[-2, -3], &[5, -4, -5]]);
        let d2 = d(5, &[&[1, 2, -1], &[3, 5], &[-2, -3], &[-4], &[4, -5]]);
        let (prod, middle) = compose_diagrams(&d1, &d2).unwrap();
        assert_eq!(middle, 2);
        let expect = d(5, &[&[1, 2, -1], &[3, 5], &[4, -4, -5], &[-2, -3]]);
        assert_eq!(prod, expect);

        // full diagram-basis product carries ξ²
        let a = PAElement::basis_element(d1, Basis::Diagram);
        let b = PAElement::basis_element(d2, Basis::Diagram);
        let prod = multiply_diagram_basis(&a, &b).unwrap();
        assert_eq!(prod.num_terms(), 1);
        let (_, c) = prod.terms().next().unwrap();
        assert_eq!(c, &PolyXi::from_coeffs(vec![rat_int(0), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn identity_composition() {
        let k = 3;
        let id = SetPartitionDiagram::identity(k);
        for dg in enumerate_diagrams(k).into_iter().take(40) {
            let (p, l) = compose_diagrams(&dg, &id).unwrap();
            assert_eq!((p, l), (dg.clone(), 0));
            let (p, l) = compose_diagrams(&id, &dg).unwrap();
            assert_eq!((p, l), (dg, 0));
        }
    }

    #[test]
    fn singleton_square_has_middle_loop() {
        let s = d(1, &[&[1], &[-1]]);
        let (p, l) = compose_diagrams(&s, &s).unwrap();
        assert_eq!(p, s);
        assert_eq!(l, 1);
        let a = PAElement::basis_element(s.clone(), Basis::Diagram);
        let prod = multiply_diagram_basis(&a, &a).unwrap();
        let (dd, c) = prod.terms().next().unwrap();
        assert_eq!(dd, &s);
        assert_eq!(c, &PolyXi::xi());
    }

    #[test]
    fn basis_change_k1() {
        let bar = d(1, &[&[1, -1]]);
        let split = d(1, &[&[1], &[-1]]);
        // {{1,1'}} -> x_{{1,1'}}
        let e = orbit_from_diagram(&PAElement::basis_element(bar.clone(), Basis::Diagram)).unwrap();
        assert_eq!(e, PAElement::basis_element(bar.clone(), Basis::Orbit));
        // {{1},{1'}} -> x_{{1},{1'}} + x_{{1,1'}}
        let e = orbit_from_diagram(&PAElement::basis_element(split.clone(), Basis::Diagram)).unwrap();
        let expect = PAElement::from_terms(
            1,
            Basis::Orbit,
            [(split, PolyXi::one()), (bar, PolyXi::one())],
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn basis_change_roundtrip_k3() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let all = enumerate_diagrams(3);
        for _ in 0..5 {
            let mut e = PAElement::zero(3, Basis::Diagram);
            for _ in 0..4 {
                let dg = all.choose(&mut rng).unwrap().clone();
                e.add_term(dg, PolyXi::from_int(rng.gen_range(-3..=3)));
            }
            let back = diagram_from_orbit(&orbit_from_diagram(&e).unwrap()).unwrap();
            assert_eq!(back, e);
        }
    }

    #[test]
    fn orbit_product_k1() {
        let bar = d(1, &[&[1, -1]]);
        let split = d(1, &[&[1], &[-1]]);
        let xb = PAElement::basis_element(bar.clone(), Basis::Orbit);
        let xs = PAElement::basis_element(split.clone(), Basis::Orbit);
        // x_{{1,1'}}² = x_{{1,1'}}
        assert_eq!(multiply_orbit_basis(&xb, &xb).unwrap(), xb);
        // x_{{1},{1'}}² = (ξ−2)x_{{1},{1'}} + (ξ−1)x_{{1,1'}}
        let prod = multiply_orbit_basis(&xs, &xs).unwrap();
        let expect = PAElement::from_terms(
            1,
            Basis::Orbit,
            [(split, PolyXi::xi_plus(-2)), (bar, PolyXi::xi_plus(-1))],
        );
        assert_eq!(prod, expect);
    }

    #[test]
    fn orbit_and_diagram_products_agree_k2() {
        let all = enumerate_diagrams(2);
        for d1 in &all {
            for d2 in &all {
                let x1 = PAElement::basis_element(d1.clone(), Basis::Orbit);
                let x2 = PAElement::basis_element(d2.clone(), Basis::Orbit);
                let direct = multiply_orbit_basis(&x1, &x2).unwrap();
                let via_diagram = orbit_from_diagram(
                    &multiply_diagram_basis(
                        &diagram_from_orbit(&x1).unwrap(),
                        &diagram_from_orbit(&x2).unwrap(),
                    )
                    .unwrap(),
                )
                .unwrap();
                assert_eq!(direct, via_diagram, "d1={d1:?} d2={d2:?}");
            }
        }
    }

    #[test]
    fn involution_examples() {
        let sym = d(2, &[&[1, -2], &[2, -1]]);
        assert_eq!(involution_i(&sym), sym);
        let d5 = d(5, &[&[1, 2, -1, -3], &[3, 5, -4], &[4, -2, -5]]);
        let expect = d(5, &[&[-1, -2, 1, 3], &[-3, -5, 4], &[-4, 2, 5]]);
        assert_eq!(involution_i(&d5), expect);
        for dg in enumerate_diagrams(2) {
            assert_eq!(involution_i(&involution_i(&dg)), dg);
        }
    }

    #[test]
    fn involution_is_antiautomorphism_k2() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let all = enumerate_diagrams(2);
        for _ in 0..30 {
            let d1 = all.choose(&mut rng).unwrap().clone();
            let d2 = all.choose(&mut rng).unwrap().clone();
            let a = PAElement::basis_element(d1, Basis::Diagram);
            let b = PAElement::basis_element(d2, Basis::Diagram);
            let lhs = multiply_diagram_basis(&a, &b).unwrap().apply_involution();
            let rhs =
                multiply_diagram_basis(&b.apply_involution(), &a.apply_involution()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&d(2, &[&[1, -1], &[2, -2]])), rat_int(2));
        assert_eq!(alpha(&d(2, &[&[1, 2, -1, -2]])), rat_int(1));
        assert_eq!(alpha(&d(3, &[&[1, -1], &[2, 3, -2, -3]])), rat_int(3));
    }

    #[test]
    fn phi_k_examples() {
        let bar = PAElement::basis_element(d(1, &[&[1, -1]]), Basis::Orbit);
        let m = phi_k_matrix(&bar, 2, 20_000).unwrap();
        assert_eq!(m, vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]);
        let split = PAElement::basis_element(d(1, &[&[1], &[-1]]), Basis::Orbit);
        let m = phi_k_matrix(&split, 2, 20_000).unwrap();
        assert_eq!(m, vec![vec![rat_int(0), rat_int(1)], vec![rat_int(1), rat_int(0)]]);
        // more blocks than n -> zero matrix
        let three_blocks = PAElement::basis_element(d(2, &[&[1], &[2, -2], &[-1]]), Basis::Orbit);
        let m = phi_k_matrix(&three_blocks, 2, 20_000).unwrap();
        assert!(m.iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn phi_k_is_homomorphism() {
        for n in 2..=4usize {
            let all = enumerate_diagrams(2);
            for d1 in all.iter().step_by(3) {
                for d2 in all.iter().step_by(4) {
                    let x1 = PAElement::basis_element(d1.clone(), Basis::Orbit);
                    let x2 = PAElement::basis_element(d2.clone(), Basis::Orbit);
                    let lhs =
                        phi_k_matrix(&multiply_orbit_basis(&x1, &x2).unwrap(), n, 20_000).unwrap();
                    let rhs = mat_mul(
                        &phi_k_matrix(&x1, n, 20_000).unwrap(),
                        &phi_k_matrix(&x2, n, 20_000).unwrap(),
                    );
                    assert_eq!(lhs, rhs, "n={n} d1={d1:?} d2={d2:?}");
                }
            }
        }
    }

    #[test]
    fn phi_k_kernel_dimension() {
        // span{x_d : |d| > n} is exactly the kernel: rank of the image equals
        // the number of diagrams with at most n blocks (k = 2, n = 2, 3)
        for n in [2usize, 3] {
            let all = enumerate_diagrams(2);
            let rows: Vec<Vec<Rat>> = all
                .iter()
                .map(|dg| {
                    let x = PAElement::basis_element(dg.clone(), Basis::Orbit);
                    phi_k_matrix(&x, n, 20_000).unwrap().into_iter().flatten().collect()
                })
                .collect();
            let expected = all.iter().filter(|dg| dg.num_blocks() <= n).count();
            assert_eq!(mat_rank(&rows), expected, "n={n}");
        }
    }

    #[test]
    fn diagram_product_associativity_k3() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let all = enumerate_diagrams(3);
        for _ in 0..15 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                PAElement::basis_element(all.choose(rng).unwrap().clone(), Basis::Diagram)
            };
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let lhs =
                multiply_diagram_basis(&multiply_diagram_basis(&a, &b).unwrap(), &c).unwrap();
            let rhs =
                multiply_diagram_basis(&a, &multiply_diagram_basis(&b, &c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn json_roundtrip() {
        let dg = d(5, &[&[1, 2, -1, -3], &[3, 5, -4], &[4, -2, -5]]);
        let v = dg.to_json();
        assert_eq!(SetPartitionDiagram::from_json(&v).unwrap(), dg);
        let e = PAElement::from_terms(
            5,
            Basis::Diagram,
            [(dg, PolyXi::xi_plus(-2))],
        );
        assert_eq!(PAElement::from_json(&e.to_json()).unwrap(), e);
    }
}
