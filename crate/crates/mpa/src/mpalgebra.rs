//! The multiset partition algebra MP_λ(ξ): diagram basis, path-configuration
//! multiplication with its structure-constant polynomials Φ, the identity
//! element, the balanced subalgebra, the canonical partition diagram d_Γ, the
//! S_λ×S_λ orbit bijection, the embedding η̃_λ into P_k(ξ) with k = |λ|, and
//! the idempotent e with image e·P_k(ξ)·e.

use itertools::Itertools;
use num::{BigInt, One};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{falling_factorial, rat_from_string, rat_to_string, PolyXi, Rat};
use crate::combinatorics::factorial;
use crate::error::MpaError;
use crate::partition_algebra::{enumerate_diagrams, Basis, PAElement, SetPartitionDiagram};

/// A vertex label: one coordinate per part of λ.
pub type Vertex = Vec<u32>;

/// A bipartite multigraph class in B̃_λ: a canonical sorted multiset of
/// non-zero weighted edges (I, J) whose top weights sum to λ and bottom
/// weights sum to λ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetDiagram {
    lambda: Vec<u32>,
    edges: Vec<(Vertex, Vertex)>,
}

impl MultisetDiagram {
    /// Drops (𝟎,𝟎) edges, sorts, and checks the weight condition.
    pub fn new(lambda: Vec<u32>, raw_edges: Vec<(Vertex, Vertex)>) -> Result<Self, MpaError> {
        let s = lambda.len();
        let mut edges = Vec::new();
        for (i, j) in raw_edges {
            if i.len() != s || j.len() != s {
                return Err(MpaError::Malformed(format!(
                    "edge endpoint length must equal {s}"
                )));
            }
            if i.iter().all(|&c| c == 0) && j.iter().all(|&c| c == 0) {
                continue;
            }
            edges.push((i, j));
        }
        edges.sort();
        let d = MultisetDiagram { lambda, edges };
        for (side, pick) in [("top", 0usize), ("bottom", 1)] {
            let mut total = vec![0u32; s];
            for e in &d.edges {
                let v = if pick == 0 { &e.0 } else { &e.1 };
                for (t, &c) in total.iter_mut().zip(v) {
                    *t += c;
                }
            }
            if total != d.lambda {
                return Err(MpaError::WeightMismatch { side });
            }
        }
        Ok(d)
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Number of stored (non-zero) edges.
    pub fn rank(&self) -> usize {
        self.edges.len()
    }

    /// True iff every edge satisfies |I| = |J|.
    pub fn is_balanced(&self) -> bool {
        self.edges
            .iter()
            .all(|(i, j)| i.iter().sum::<u32>() == j.iter().sum::<u32>())
    }
}

impl fmt::Debug for MultisetDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Γ{:?}", self.edges)
    }
}

/// All vertex labels I with 0 ≤ i_j ≤ λ_j, in increasing lexicographic order
/// starting with 𝟎.
pub fn vertex_set(lambda: &[u32]) -> Vec<Vertex> {
    let mut out = vec![Vec::new()];
    for &l in lambda {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=l).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// All diagrams in B̃_λ in deterministic order.
pub fn enumerate_basis(lambda: &[u32]) -> Vec<MultisetDiagram> {
    let verts = vertex_set(lambda);
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for i in &verts {
        for j in &verts {
            if i.iter().any(|&c| c > 0) || j.iter().any(|&c| c > 0) {
                pairs.push((i.clone(), j.clone()));
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
    enumerate_rec(lambda, &pairs, 0, &lambda.to_vec(), &lambda.to_vec(), &mut chosen, &mut out);
    out.sort();
    out
}

fn enumerate_rec(
    lambda: &[u32],
    pairs: &[(Vertex, Vertex)],
    idx: usize,
    rem_top: &Vec<u32>,
    rem_bot: &Vec<u32>,
    chosen: &mut Vec<(Vertex, Vertex)>,
    out: &mut Vec<MultisetDiagram>,
) {
    if rem_top.iter().all(|&c| c == 0) && rem_bot.iter().all(|&c| c == 0) {
        out.push(MultisetDiagram {
            lambda: lambda.to_vec(),
            edges: {
                let mut e = chosen.clone();
                e.sort();
                e
            },
        });
        return;
    }
    if idx == pairs.len() {
        return;
    }
    let (i, j) = &pairs[idx];
    // maximum multiplicity of this edge that fits in the remaining weight
    let mut max_m = u32::MAX;
    for (c, r) in i.iter().zip(rem_top) {
        if *c > 0 {
            max_m = max_m.min(r / c);
        }
    }
    for (c, r) in j.iter().zip(rem_bot) {
        if *c > 0 {
            max_m = max_m.min(r / c);
        }
    }
    debug_assert!(max_m < u32::MAX);
    for m in 0..=max_m {
        if m > 0 {
            chosen.push((i.clone(), j.clone()));
        }
        let rt: Vec<u32> = rem_top.iter().zip(i).map(|(r, c)| r - m * c).collect();
        let rb: Vec<u32> = rem_bot.iter().zip(j).map(|(r, c)| r - m * c).collect();
        enumerate_rec(lambda, pairs, idx + 1, &rt, &rb, chosen, out);
    }
    for _ in 0..max_m {
        chosen.pop();
    }
}

/// A linear combination of B̃_λ classes over F[ξ].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPElement {
    pub lambda: Vec<u32>,
    terms: BTreeMap<MultisetDiagram, PolyXi>,
}

impl MPElement {
    pub fn zero(lambda: Vec<u32>) -> Self {
        MPElement { lambda, terms: BTreeMap::new() }
    }

    pub fn basis_element(d: MultisetDiagram) -> Self {
        let lambda = d.lambda.clone();
        MPElement::from_terms(lambda, [(d, PolyXi::one())])
    }

    pub fn from_terms<I>(lambda: Vec<u32>, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultisetDiagram, PolyXi)>,
    {
        let mut e = MPElement::zero(lambda);
        for (d, c) in terms {
            e.add_term(d, c);
        }
        e
    }

    pub fn add_term(&mut self, d: MultisetDiagram, c: PolyXi) {
        debug_assert_eq!(d.lambda, self.lambda);
        let entry = self.terms.entry(d).or_insert_with(PolyXi::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultisetDiagram, &PolyXi)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> MPElement {
        MPElement::from_terms(
            self.lambda.clone(),
            self.terms.iter().map(|(d, p)| (d.clone(), p.scale(c))),
        )
    }

    pub fn add(&self, other: &MPElement) -> MPElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPElement) -> MPElement {
        self.add(&other.scale(&-Rat::one()))
    }
}

/// The identity id = Σ_{[Γ]∈U_λ} [Γ]: all classes whose edges are diagonal.
pub fn identity(lambda: &[u32]) -> MPElement {
    let terms = enumerate_basis(lambda)
        .into_iter()
        .filter(|d| d.edges.iter().all(|(i, j)| i == j))
        .map(|d| (d, PolyXi::one()));
    MPElement::from_terms(lambda.to_vec(), terms)
}

/// A multiset of paths (I, L, J) satisfying the covering condition.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct PathConfiguration {
    /// Sorted multiset of triples; length is the padding size n.
    pub paths: Vec<(Vertex, Vertex, Vertex)>,
}

/// All path configurations for the ordered pair (Γ1, Γ2) with both diagrams
/// padded to n edges, grouped by the induced diagram Γ_P. Γ2 sits on top, so
/// a path (a, b, c) pairs an edge (a,b) of Γ2 with an edge (b,c) of Γ1.
pub fn path_configurations(
    g1: &MultisetDiagram,
    g2: &MultisetDiagram,
    n: usize,
) -> Result<BTreeMap<MultisetDiagram, Vec<PathConfiguration>>, MpaError> {
    if g1.lambda != g2.lambda {
        return Err(MpaError::LambdaMismatch);
    }
    if n < g1.rank().max(g2.rank()) {
        return Err(MpaError::Malformed(format!(
            "padding {n} below max rank {}",
            g1.rank().max(g2.rank())
        )));
    }
    let s = g1.lambda.len();
    let zero: Vertex = vec![0; s];

    // Padded top edges of Γ2 grouped by middle label, bottom edges of Γ1
    // likewise; each group keeps per-endpoint multiplicities.
    let mut top_by_mid: BTreeMap<Vertex, BTreeMap<Vertex, usize>> = BTreeMap::new();
    let mut bot_by_mid: BTreeMap<Vertex, BTreeMap<Vertex, usize>> = BTreeMap::new();
    for (a, b) in g2.edges.iter().cloned().chain(
        std::iter::repeat((zero.clone(), zero.clone())).take(n - g2.rank()),
    ) {
        *top_by_mid.entry(b).or_default().entry(a).or_insert(0) += 1;
    }
    for (b, c) in g1.edges.iter().cloned().chain(
        std::iter::repeat((zero.clone(), zero.clone())).take(n - g1.rank()),
    ) {
        *bot_by_mid.entry(b).or_default().entry(c).or_insert(0) += 1;
    }

    let mut out: BTreeMap<MultisetDiagram, Vec<PathConfiguration>> = BTreeMap::new();
    // Covering requires matching per-middle-label degree on both sides.
    let mids: Vec<&Vertex> = top_by_mid.keys().collect();
    if mids.len() != bot_by_mid.len()
        || mids.iter().any(|m| !bot_by_mid.contains_key(*m))
        || mids.iter().any(|m| {
            top_by_mid[*m].values().sum::<usize>() != bot_by_mid[*m].values().sum::<usize>()
        })
    {
        return Ok(out);
    }

    // Per middle label, a configuration restricted to that label is a
    // contingency table: rows = distinct tops, columns = distinct bottoms.
    let mut per_mid_choices: Vec<Vec<Vec<(Vertex, Vertex, Vertex)>>> = Vec::new();
    for m in &mids {
        let tops: Vec<(&Vertex, usize)> = top_by_mid[*m].iter().map(|(v, &c)| (v, c)).collect();
        let bots: Vec<(&Vertex, usize)> = bot_by_mid[*m].iter().map(|(v, &c)| (v, c)).collect();
        let tables = contingency_tables(
            &tops.iter().map(|&(_, c)| c).collect::<Vec<_>>(),
            &bots.iter().map(|&(_, c)| c).collect::<Vec<_>>(),
        );
        let choices = tables
            .into_iter()
            .map(|t| {
                let mut paths = Vec::new();
                for (ri, row) in t.iter().enumerate() {
                    for (ci, &cnt) in row.iter().enumerate() {
                        for _ in 0..cnt {
                            paths.push((tops[ri].0.clone(), (*m).clone(), bots[ci].0.clone()));
                        }
                    }
                }
                paths
            })
            .collect();
        per_mid_choices.push(choices);
    }

    if per_mid_choices.is_empty() {
        // λ = 𝟎 with no padding: the unique empty configuration
        let induced = MultisetDiagram::new(g1.lambda.clone(), Vec::new())?;
        out.entry(induced)
            .or_default()
            .push(PathConfiguration { paths: Vec::new() });
        return Ok(out);
    }
    for combo in per_mid_choices.iter().multi_cartesian_product() {
        let mut paths: Vec<(Vertex, Vertex, Vertex)> =
            combo.into_iter().flatten().cloned().collect();
        paths.sort();
        let induced = MultisetDiagram::new(
            g1.lambda.clone(),
            paths.iter().map(|(a, _, c)| (a.clone(), c.clone())).collect(),
        )?;
        out.entry(induced).or_default().push(PathConfiguration { paths });
    }
    Ok(out)
}

/// All non-negative matrices with the given row and column sums.
fn contingency_tables(row_sums: &[usize], col_sums: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut table: Vec<Vec<usize>> = Vec::new();
    fn rec(
        row_sums: &[usize],
        col_rem: &mut Vec<usize>,
        r: usize,
        table: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if r == row_sums.len() {
            if col_rem.iter().all(|&c| c == 0) {
                out.push(table.clone());
            }
            return;
        }
        // fill row r cell by cell
        let ncols = col_rem.len();
        let mut row = vec![0usize; ncols];
        fn fill(
            c: usize,
            left: usize,
            row: &mut Vec<usize>,
            col_rem: &mut Vec<usize>,
            row_sums: &[usize],
            r: usize,
            table: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if c == row.len() {
                if left == 0 {
                    table.push(row.clone());
                    rec(row_sums, col_rem, r + 1, table, out);
                    table.pop();
                }
                return;
            }
            for v in 0..=left.min(col_rem[c]) {
                row[c] = v;
                col_rem[c] -= v;
                fill(c + 1, left - v, row, col_rem, row_sums, r, table, out);
                col_rem[c] += v;
            }
            row[c] = 0;
        }
        fill(0, row_sums[r], &mut row, col_rem, row_sums, r, table, out);
    }
    let mut col_rem = col_sums.to_vec();
    rec(row_sums, &mut col_rem, 0, &mut table, &mut out);
    out
}

/// All structure-constant polynomials of [Γ1]*[Γ2] at once, keyed by the
/// target class.
///
/// Padding is rank Γ1 + rank Γ2: a configuration has at most that many
/// non-trivial paths, and one with m of them contributes a term that
/// vanishes at every integer below m, so this single padding yields the
/// polynomials that agree with operator composition at all n ≥ the ranks.
pub fn structure_polys(
    g1: &MultisetDiagram,
    g2: &MultisetDiagram,
) -> Result<BTreeMap<MultisetDiagram, PolyXi>, MpaError> {
    let n = g1.rank() + g2.rank();
    let s = g1.lambda.len();
    let zero: Vertex = vec![0; s];
    let grouped = path_configurations(g1, g2, n)?;
    let mut out = BTreeMap::new();
    for (gamma, configs) in grouped {
        let mut poly = PolyXi::zero();
        for p in configs {
            // per-endpoint-pair middle multiplicities
            let mut by_pair: BTreeMap<(&Vertex, &Vertex), BTreeMap<&Vertex, usize>> =
                BTreeMap::new();
            for (a, b, c) in &p.paths {
                *by_pair.entry((a, c)).or_default().entry(b).or_insert(0) += 1;
            }
            let mut bracket = 0usize; // paths (0, L, 0) with L ≠ 0
            let mut kp_num = BigInt::one();
            let mut kp_den = BigInt::one();
            for ((a, c), mids) in &by_pair {
                if **a == zero && **c == zero {
                    for (b, &cnt) in mids {
                        if **b != zero {
                            bracket += cnt;
                            kp_den *= factorial(cnt as u64);
                        }
                    }
                } else {
                    let total: usize = mids.values().sum();
                    kp_num *= factorial(total as u64);
                    for &cnt in mids.values() {
                        kp_den *= factorial(cnt as u64);
                    }
                }
            }
            let kp = Rat::new(kp_num, kp_den);
            let ff = falling_factorial(&PolyXi::xi_plus(-(gamma.rank() as i64)), bracket);
            poly = poly.add(&ff.scale(&kp));
        }
        if !poly.is_zero() {
            out.insert(gamma, poly);
        }
    }
    Ok(out)
}

/// Φ^{[Γ]}_{[Γ1][Γ2]}(ξ); the zero polynomial when Γ does not occur.
pub fn structure_poly(
    g1: &MultisetDiagram,
    g2: &MultisetDiagram,
    gamma: &MultisetDiagram,
) -> Result<PolyXi, MpaError> {
    Ok(structure_polys(g1, g2)?.get(gamma).cloned().unwrap_or_else(PolyXi::zero))
}

/// Bilinear extension of [Γ1]*[Γ2] = Σ Φ^{[Γ]}·[Γ]. In a·b, the terms of a
/// play the Γ1 role and the terms of b the Γ2 role.
pub fn multiply(a: &MPElement, b: &MPElement) -> Result<MPElement, MpaError> {
    if a.lambda != b.lambda {
        return Err(MpaError::LambdaMismatch);
    }
    let mut out = MPElement::zero(a.lambda.clone());
    for (g1, c1) in &a.terms {
        for (g2, c2) in &b.terms {
            let coeff = c1.mul(c2);
            for (gamma, phi) in structure_polys(g1, g2)? {
                out.add_term(gamma, phi.mul(&coeff));
            }
        }
    }
    Ok(out)
}

/// The canonical partition diagram d_Γ in A_{|λ|} built from the canonical
/// biword by consecutive-interval allocation, one interval per part of λ.
pub fn canonical_partition_diagram(g: &MultisetDiagram) -> SetPartitionDiagram {
    let s = g.lambda.len();
    let k: u32 = g.lambda.iter().sum();
    let base: Vec<u32> = (0..s)
        .map(|i| g.lambda[..i].iter().sum::<u32>())
        .collect();
    let mut top_used = vec![0u32; s];
    let mut bot_used = vec![0u32; s];
    let mut blocks = Vec::new();
    for (i, j) in &g.edges {
        let mut block = Vec::new();
        for color in 0..s {
            for t in 0..i[color] {
                block.push((base[color] + top_used[color] + t) as usize);
            }
            for t in 0..j[color] {
                block.push((k + base[color] + bot_used[color] + t) as usize);
            }
            top_used[color] += i[color];
            bot_used[color] += j[color];
        }
        blocks.push(block);
    }
    SetPartitionDiagram::new(k as usize, blocks)
}

/// All permutations of 0..k fixing the λ-intervals setwise (the Young
/// subgroup S_λ as value maps).
fn young_subgroup_perms(lambda: &[u32]) -> Vec<Vec<usize>> {
    let mut interval_perms: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut start = 0usize;
    for &l in lambda {
        let items: Vec<usize> = (start..start + l as usize).collect();
        interval_perms.push(items.iter().copied().permutations(l as usize).collect());
        start += l as usize;
    }
    let mut out = Vec::new();
    for combo in interval_perms.iter().multi_cartesian_product() {
        let mut perm = Vec::new();
        for part in combo {
            perm.extend_from_slice(part);
        }
        out.push(perm);
    }
    out
}

fn apply_value_perm(
    d: &SetPartitionDiagram,
    sigma: &[usize],
    tau: &[usize],
) -> SetPartitionDiagram {
    let k = d.k();
    SetPartitionDiagram::new(
        k,
        d.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| if v < k { sigma[v] } else { k + tau[v - k] })
                    .collect()
            })
            .collect(),
    )
}

/// The S_λ×S_λ orbit O_{d_Γ} of the canonical partition diagram.
pub fn orbit(g: &MultisetDiagram) -> Vec<SetPartitionDiagram> {
    let d = canonical_partition_diagram(g);
    let perms = young_subgroup_perms(&g.lambda);
    let mut set = std::collections::BTreeSet::new();
    for sigma in &perms {
        for tau in &perms {
            set.insert(apply_value_perm(&d, sigma, tau));
        }
    }
    set.into_iter().collect()
}

/// α_d relative to λ: the number of ways to refill the bottom-row blocks
/// with the λ-colored alphabet, ∏_i λ_i!/∏_j |B_j^l ∩ color i|!.
/// For s = 1 this is the plain k!/(b_1!⋯b_n!).
pub fn alpha_lambda(d: &SetPartitionDiagram, lambda: &[u32]) -> Rat {
    let k: usize = lambda.iter().sum::<u32>() as usize;
    debug_assert_eq!(d.k(), k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for &l in lambda {
        num *= factorial(l as u64);
    }
    let mut start = 0usize;
    for &l in lambda {
        let interval = start..start + l as usize;
        for b in d.blocks() {
            let cnt = b
                .iter()
                .filter(|&&v| v >= k && interval.contains(&(v - k)))
                .count();
            den *= factorial(cnt as u64);
        }
        start += l as usize;
    }
    Rat::new(num, den)
}

/// η̃_λ: [Γ] ↦ (1/α_{d_Γ}) Σ_{d ∈ O_{d_Γ}} x_d, extended linearly.
pub fn embed(a: &MPElement) -> PAElement {
    let k: u32 = a.lambda.iter().sum();
    let mut out = PAElement::zero(k as usize, Basis::Orbit);
    for (g, c) in &a.terms {
        let d = canonical_partition_diagram(g);
        let inv_alpha = Rat::one() / alpha_lambda(&d, &a.lambda);
        for dd in orbit(g) {
            out.add_term(dd, c.scale(&inv_alpha));
        }
    }
    out
}

/// Y_λ: diagrams whose every block meets each λ-interval in equally many top
/// and bottom vertices.
pub fn enumerate_y(lambda: &[u32]) -> Vec<SetPartitionDiagram> {
    let k: u32 = lambda.iter().sum();
    let mut intervals = Vec::new();
    let mut start = 0usize;
    for &l in lambda {
        intervals.push(start..start + l as usize);
        start += l as usize;
    }
    enumerate_diagrams(k as usize)
        .into_iter()
        .filter(|d| {
            d.blocks().iter().all(|b| {
                intervals.iter().all(|iv| {
                    let top = b.iter().filter(|&&v| v < k as usize && iv.contains(&v)).count();
                    let bot = b
                        .iter()
                        .filter(|&&v| v >= k as usize && iv.contains(&(v - k as usize)))
                        .count();
                    top == bot
                })
            })
        })
        .collect()
}

/// e = Σ_{d ∈ Y_λ} (1/α_d)·x_d.
pub fn idempotent_e(lambda: &[u32]) -> PAElement {
    let k: u32 = lambda.iter().sum();
    let mut out = PAElement::zero(k as usize, Basis::Orbit);
    for d in enumerate_y(lambda) {
        let c = Rat::one() / alpha_lambda(&d, lambda);
        out.add_term(d, PolyXi::constant(c));
    }
    out
}

/// The balanced classes B̃^bal_λ.
pub fn balanced_basis(lambda: &[u32]) -> Vec<MultisetDiagram> {
    enumerate_basis(lambda).into_iter().filter(|d| d.is_balanced()).collect()
}

// --- JSON wire forms -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MPDiagramWire {
    lambda: Vec<u32>,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
struct MPTermWire {
    edges: Vec<(Vertex, Vertex)>,
    coeff: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct MPElementWire {
    lambda: Vec<u32>,
    terms: Vec<MPTermWire>,
}

impl MultisetDiagram {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MPDiagramWire {
            lambda: self.lambda.clone(),
            edges: self.edges.clone(),
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MpaError> {
        let w: MPDiagramWire = serde_json::from_value(v.clone())
            .map_err(|e| MpaError::Malformed(format!("multiset diagram json: {e}")))?;
        MultisetDiagram::new(w.lambda, w.edges)
    }
}

impl MPElement {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MPElementWire {
            lambda: self.lambda.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| MPTermWire {
                    edges: d.edges.clone(),
                    coeff: c.coeffs().iter().map(rat_to_string).collect(),
                })
                .collect(),
        })
        .unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MpaError> {
        let w: MPElementWire = serde_json::from_value(v.clone())
            .map_err(|e| MpaError::Malformed(format!("algebra element json: {e}")))?;
        let mut e = MPElement::zero(w.lambda.clone());
        for t in w.terms {
            let d = MultisetDiagram::new(w.lambda.clone(), t.edges)?;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::partition_algebra::multiply_orbit_basis;

    fn md(lambda: &[u32], edges: &[(&[u32], &[u32])]) -> MultisetDiagram {
        MultisetDiagram::new(
            lambda.to_vec(),
            edges.iter().map(|(i, j)| (i.to_vec(), j.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn canonicalize_drops_zero_edges() {
        let with_pad = MultisetDiagram::new(
            vec![2],
            vec![
                (vec![0], vec![0]),
                (vec![2], vec![1]),
                (vec![0], vec![1]),
            ],
        )
        .unwrap();
        let bare = md(&[2], &[(&[0], &[1]), (&[2], &[1])]);
        assert_eq!(with_pad, bare);
        assert_eq!(bare.rank(), 2);
    }

    #[test]
    fn canonicalize_rejects_weight_mismatch() {
        assert!(MultisetDiagram::new(vec![2], vec![(vec![1], vec![1])]).is_err());
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(&[1]).len(), 2);
        assert_eq!(enumerate_basis(&[2]).len(), 9);
        assert_eq!(enumerate_basis(&[1, 1]).len(), 15);
    }

    #[test]
    fn basis_count_1k_is_bell_2k() {
        assert_eq!(enumerate_basis(&[1, 1, 1]).len(), 203);
    }

    #[test]
    fn worked_k2_configurations() {
        let g = md(&[2], &[(&[0], &[1]), (&[1], &[0]), (&[1], &[1])]);
        let grouped = path_configurations(&g, &g, 4).unwrap();
        let total: usize = grouped.values().map(|v| v.len()).sum();
        assert_eq!(total, 4);
        assert_eq!(grouped[&g].len(), 2);
    }

    #[test]
    fn worked_k2_product() {
        let g = md(&[2], &[(&[0], &[1]), (&[1], &[0]), (&[1], &[1])]);
        let doubled = md(&[2], &[(&[1], &[1]), (&[1], &[1])]);
        let crossed = md(&[2], &[(&[0], &[1]), (&[0], &[1]), (&[1], &[0]), (&[1], &[0])]);
        let prod = multiply(&MPElement::basis_element(g.clone()), &MPElement::basis_element(g.clone()))
            .unwrap();
        let expect = MPElement::from_terms(
            vec![2],
            [
                (g, PolyXi::xi_plus(-2)),
                (doubled, PolyXi::xi_plus(-2).scale(&rat_int(2))),
                (crossed, PolyXi::from_int(4)),
            ],
        );
        assert_eq!(prod, expect);
    }

    #[test]
    fn identity_law() {
        for lambda in [vec![2u32], vec![1, 1], vec![2, 1]] {
            let id = identity(&lambda);
            for d in enumerate_basis(&lambda).into_iter().step_by(2) {
                let a = MPElement::basis_element(d);
                assert_eq!(multiply(&id, &a).unwrap(), a);
                assert_eq!(multiply(&a, &id).unwrap(), a);
            }
        }
    }

    #[test]
    fn associativity_random_triples() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for lambda in [vec![2u32], vec![1, 1]] {
            let basis = enumerate_basis(&lambda);
            for _ in 0..4 {
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                    MPElement::basis_element(basis.choose(rng).unwrap().clone())
                };
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let lhs = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
                let rhs = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn canonical_diagram_biword_example() {
        // biword columns (0,0),(0,1),(2,1) over λ=(2)
        let g = md(&[2], &[(&[0], &[1]), (&[2], &[1])]);
        let expect = SetPartitionDiagram::from_signed(2, &[vec![-1], vec![1, 2, -2]]).unwrap();
        assert_eq!(canonical_partition_diagram(&g), expect);
    }

    #[test]
    fn canonical_diagram_lambda_21_example() {
        let g = md(
            &[2, 1],
            &[(&[0, 0], &[1, 0]), (&[0, 1], &[1, 1]), (&[2, 0], &[0, 0])],
        );
        let expect = SetPartitionDiagram::from_signed(
            3,
            &[vec![-1], vec![3, -2, -3], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(canonical_partition_diagram(&g), expect);
    }

    #[test]
    fn orbit_of_biword_example() {
        let g = md(&[2], &[(&[0], &[1]), (&[2], &[1])]);
        let mut o = orbit(&g);
        o.sort();
        let d1 = SetPartitionDiagram::from_signed(2, &[vec![-1], vec![1, 2, -2]]).unwrap();
        let d2 = SetPartitionDiagram::from_signed(2, &[vec![-2], vec![1, 2, -1]]).unwrap();
        let mut expect = vec![d1, d2];
        expect.sort();
        assert_eq!(o, expect);
    }

    #[test]
    fn orbits_partition_a_k() {
        for lambda in [vec![2u32], vec![1, 1]] {
            let mut seen = std::collections::BTreeSet::new();
            let mut total = 0usize;
            for g in enumerate_basis(&lambda) {
                let o = orbit(&g);
                total += o.len();
                for d in o {
                    assert!(seen.insert(d));
                }
            }
            assert_eq!(total, enumerate_diagrams(2).len());
            assert_eq!(seen.len(), 15);
        }
    }

    #[test]
    fn embed_biword_example() {
        let g = md(&[2], &[(&[0], &[1]), (&[2], &[1])]);
        let e = embed(&MPElement::basis_element(g));
        let d1 = SetPartitionDiagram::from_signed(2, &[vec![-1], vec![1, 2, -2]]).unwrap();
        let d2 = SetPartitionDiagram::from_signed(2, &[vec![-2], vec![1, 2, -1]]).unwrap();
        let half = PolyXi::constant(Rat::new(1.into(), 2.into()));
        let expect = PAElement::from_terms(2, Basis::Orbit, [(d1, half.clone()), (d2, half)]);
        assert_eq!(e, expect);
    }

    #[test]
    fn embed_is_multiplicative_lambda_2() {
        let basis = enumerate_basis(&[2]);
        for g1 in &basis {
            for g2 in &basis {
                let lhs = embed(&multiply(
                    &MPElement::basis_element(g1.clone()),
                    &MPElement::basis_element(g2.clone()),
                )
                .unwrap());
                let rhs = multiply_orbit_basis(
                    &embed(&MPElement::basis_element(g1.clone())),
                    &embed(&MPElement::basis_element(g2.clone())),
                )
                .unwrap();
                assert_eq!(lhs, rhs, "g1={g1:?} g2={g2:?}");
            }
        }
    }

    #[test]
    fn idempotent_k2_matches_display() {
        let e = idempotent_e(&[2]);
        let d1 = SetPartitionDiagram::from_signed(2, &[vec![1, -1], vec![2, -2]]).unwrap();
        let d2 = SetPartitionDiagram::from_signed(2, &[vec![1, -2], vec![2, -1]]).unwrap();
        let d3 = SetPartitionDiagram::from_signed(2, &[vec![1, 2, -1, -2]]).unwrap();
        let half = PolyXi::constant(Rat::new(1.into(), 2.into()));
        let expect = PAElement::from_terms(
            2,
            Basis::Orbit,
            [(d1, half.clone()), (d2, half), (d3, PolyXi::one())],
        );
        assert_eq!(e, expect);
    }

    #[test]
    fn idempotent_properties() {
        for lambda in [vec![1u32], vec![2], vec![3], vec![1, 1], vec![2, 1]] {
            let e = idempotent_e(&lambda);
            assert_eq!(multiply_orbit_basis(&e, &e).unwrap(), e, "λ={lambda:?}");
            assert_eq!(e.apply_involution(), e, "λ={lambda:?}");
        }
    }

    #[test]
    fn identity_embeds_to_idempotent() {
        for lambda in [vec![1u32], vec![2], vec![1, 1], vec![2, 1]] {
            assert_eq!(embed(&identity(&lambda)), idempotent_e(&lambda), "λ={lambda:?}");
        }
    }

    #[test]
    fn e_x_e_is_multiple_of_embedded_basis_element() {
        // e·x_{d0}·e lands on a single embedded class, scaled
        let e = idempotent_e(&[2]);
        let images: Vec<PAElement> = enumerate_basis(&[2])
            .iter()
            .map(|g| embed(&MPElement::basis_element(g.clone())))
            .collect();
        for d0 in enumerate_diagrams(2) {
            let x = PAElement::basis_element(d0.clone(), Basis::Orbit);
            let exe =
                multiply_orbit_basis(&multiply_orbit_basis(&e, &x).unwrap(), &e).unwrap();
            if exe.is_zero() {
                continue;
            }
            // exe must equal (some polynomial ratio)·img for one image; image
            // coefficients are constant rationals so the ratio is read off
            // the first shared term
            let found = images.iter().any(|img| {
                let pairs: Vec<_> = img.terms().collect();
                let (d_ref, c_ref) = pairs[0];
                let Some(c_exe) = exe.terms().find(|(d, _)| *d == d_ref).map(|(_, c)| c)
                else {
                    return false;
                };
                let ratio = c_exe.scale(&(Rat::one() / c_ref.coeffs()[0].clone()));
                let scaled: BTreeMap<_, _> = pairs
                    .iter()
                    .map(|(d, c)| ((*d).clone(), ratio.scale(&c.coeffs()[0])))
                    .collect();
                scaled == exe.terms().map(|(d, c)| (d.clone(), c.clone())).collect()
            });
            assert!(found, "e·x·e not a multiple of an embedded class for d0={d0:?}");
        }
    }

    #[test]
    fn balanced_closure_and_xi_freeness() {
        let bal = balanced_basis(&[2]);
        assert!(md(&[2], &[(&[1], &[1]), (&[1], &[1])]).is_balanced());
        assert!(!md(&[2], &[(&[2], &[1]), (&[0], &[1])]).is_balanced());
        for g1 in &bal {
            for g2 in &bal {
                for (gamma, phi) in structure_polys(g1, g2).unwrap() {
                    assert!(gamma.is_balanced());
                    assert!(phi.is_constant());
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let g = md(&[2, 1], &[(&[0, 1], &[1, 1]), (&[2, 0], &[1, 0])]);
        assert_eq!(MultisetDiagram::from_json(&g.to_json()).unwrap(), g);
        let e = MPElement::from_terms(vec![2, 1], [(g, PolyXi::xi_plus(3))]);
        assert_eq!(MPElement::from_json(&e.to_json()).unwrap(), e);
    }
}
