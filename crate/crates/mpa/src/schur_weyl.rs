//! Explicit matrices for the S_n permutation module F[M(n,λ)]: integral
//! operators T_[Γ], the evaluation map φ at ξ = n, brute-force structure
//! counts, orbit counting, and commutant checks.

use std::collections::BTreeMap;

use num::ToPrimitive;
use num::Zero;

use crate::arith::{rat_int, rat_to_string, Rat};
use crate::combinatorics::{binomial, enumerate_weak_compositions, WeakCompositionMatrix};
use crate::config::Config;
use crate::error::MpaError;
use crate::mpalgebra::{MPElement, MultisetDiagram};
use crate::partition_algebra::{mat_rank, RatMatrix};

/// dim F[M(n,λ)] = ∏ᵢ C(n+λᵢ−1, λᵢ).
pub fn module_dimension(n: usize, lambda: &[u32]) -> usize {
    lambda
        .iter()
        .map(|&l| binomial((n as u64) + (l as u64) - 1, l as u64))
        .product::<num::BigInt>()
        .to_usize()
        .unwrap_or(usize::MAX)
}

/// A square matrix on F[M(n,λ)] with the row-major lexicographic basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorMatrix {
    pub n: usize,
    pub lambda: Vec<u32>,
    pub basis: Vec<WeakCompositionMatrix>,
    /// rows[b][a] is the coefficient of 1_b in the image of 1_a.
    pub rows: RatMatrix,
}

impl OperatorMatrix {
    pub fn zero(n: usize, lambda: Vec<u32>) -> Self {
        let basis = enumerate_weak_compositions(n, &lambda);
        let dim = basis.len();
        OperatorMatrix { n, lambda, basis, rows: vec![vec![Rat::zero(); dim]; dim] }
    }

    pub fn identity(n: usize, lambda: Vec<u32>) -> Self {
        let mut m = OperatorMatrix::zero(n, lambda);
        for i in 0..m.basis.len() {
            m.rows[i][i] = rat_int(1);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.n, self.lambda.clone());
        out.rows = crate::partition_algebra::mat_mul(&self.rows, &other.rows);
        out
    }

    pub fn add_scaled(&mut self, other: &OperatorMatrix, c: &Rat) {
        for (ro, rs) in self.rows.iter_mut().zip(other.rows.iter()) {
            for (eo, es) in ro.iter_mut().zip(rs.iter()) {
                *eo += es * c;
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "lambda": self.lambda,
            "basis": self.basis.iter().map(|a| a.rows.clone()).collect::<Vec<_>>(),
            "rows": self.rows.iter()
                .map(|r| r.iter().map(rat_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// The orbit invariant of a pair (a, b): the diagram with edge multiset
/// {(a_j, b_j)}, zero columns dropped. Complete for the S_n action by
/// simultaneous column permutation.
pub fn orbit_of_pair(a: &WeakCompositionMatrix, b: &WeakCompositionMatrix) -> MultisetDiagram {
    let lambda: Vec<u32> = a.rows.iter().map(|r| r.iter().sum()).collect();
    let edges: Vec<(Vec<u32>, Vec<u32>)> =
        (0..a.n()).map(|j| (a.column(j), b.column(j))).collect();
    MultisetDiagram::new(lambda, edges).expect("columns of M(n,λ) elements sum to λ")
}

/// T_[Γ]: the 0/1 operator whose column a has ones exactly at the rows b
/// with orbit_of_pair(a, b) = Γ.
pub fn integral_operator(gamma: &MultisetDiagram, n: usize) -> Result<OperatorMatrix, MpaError> {
    if gamma.rank() > n {
        return Err(MpaError::RankExceedsN { rank: gamma.rank(), n });
    }
    let mut m = OperatorMatrix::zero(n, gamma.lambda().to_vec());
    for (col, a) in m.basis.iter().enumerate() {
        for (row, b) in m.basis.iter().enumerate() {
            if orbit_of_pair(a, b) == *gamma {
                m.rows[row][col] = rat_int(1);
            }
        }
    }
    Ok(m)
}

/// φ at ξ = n: diagrams of rank > n contribute zero, all other coefficients
/// evaluate at n.
pub fn phi(a: &MPElement, n: usize, cfg: &Config) -> Result<OperatorMatrix, MpaError> {
    let lambda = a.lambda.clone();
    let dim = module_dimension(n, &lambda);
    if dim > cfg.matrix_cap {
        return Err(MpaError::ResourceLimit { dim, cap: cfg.matrix_cap });
    }
    let mut out = OperatorMatrix::zero(n, lambda);
    for (gamma, coeff) in a.terms() {
        if gamma.rank() > n {
            continue;
        }
        let c = coeff.eval_int(n as i64);
        if c.is_zero() {
            continue;
        }
        out.add_scaled(&integral_operator(gamma, n)?, &c);
    }
    Ok(out)
}

/// All structure counts with target Γ at once: fix one pair (a, c) realizing
/// Γ, then bin every middle b by (Γ_{b,c}, Γ_{a,b}) = (Γ1, Γ2).
pub fn brute_force_structure_table(
    gamma: &MultisetDiagram,
    n: usize,
) -> Result<BTreeMap<(MultisetDiagram, MultisetDiagram), u64>, MpaError> {
    if gamma.rank() > n {
        return Err(MpaError::RankExceedsN { rank: gamma.rank(), n });
    }
    let basis = enumerate_weak_compositions(n, gamma.lambda());
    let pair = basis
        .iter()
        .flat_map(|a| basis.iter().map(move |c| (a, c)))
        .find(|(a, c)| orbit_of_pair(a, c) == *gamma)
        .ok_or(MpaError::UnrealizableTarget)?;
    let (a, c) = pair;
    let mut table: BTreeMap<(MultisetDiagram, MultisetDiagram), u64> = BTreeMap::new();
    for b in &basis {
        let g2 = orbit_of_pair(a, b);
        let g1 = orbit_of_pair(b, c);
        *table.entry((g1, g2)).or_insert(0) += 1;
    }
    Ok(table)
}

/// |{b ∈ M(n,λ) : Γ_{a,b} = Γ2, Γ_{b,c} = Γ1}| for any fixed (a, c)
/// realizing Γ; independent of the representative.
pub fn brute_force_structure_count(
    g1: &MultisetDiagram,
    g2: &MultisetDiagram,
    gamma: &MultisetDiagram,
    n: usize,
) -> Result<u64, MpaError> {
    if g1.rank() > n {
        return Err(MpaError::RankExceedsN { rank: g1.rank(), n });
    }
    if g2.rank() > n {
        return Err(MpaError::RankExceedsN { rank: g2.rank(), n });
    }
    let table = brute_force_structure_table(gamma, n)?;
    Ok(table.get(&(g1.clone(), g2.clone())).copied().unwrap_or(0))
}

/// Number of S_n-orbits on M(n,λ)², by hashing the complete orbit invariant.
pub fn centralizer_dimension(n: usize, lambda: &[u32]) -> usize {
    let basis = enumerate_weak_compositions(n, lambda);
    let mut seen = std::collections::BTreeSet::new();
    for a in &basis {
        for b in &basis {
            seen.insert(orbit_of_pair(a, b));
        }
    }
    seen.len()
}

/// Column permutation action: (w·a) places column j of a at position w(j).
pub fn apply_column_perm(w: &[usize], a: &WeakCompositionMatrix) -> WeakCompositionMatrix {
    let n = a.n();
    let mut rows = vec![vec![0u32; n]; a.s()];
    for (i, row) in a.rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            rows[i][w[j]] = v;
        }
    }
    WeakCompositionMatrix { rows }
}

/// Generators of S_n on {0..n−1}: the transposition (0 1) and the n-cycle.
pub fn sn_generators(n: usize) -> Vec<Vec<usize>> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|j| (j + 1) % n).collect());
    }
    gens
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorSet {
    /// Permutation matrices of S_n acting on columns.
    SymmetricGroup,
    /// S_n together with the diagonal torus: monomial matrices.
    Monomial,
}

fn column_weights(a: &WeakCompositionMatrix) -> Vec<u32> {
    (0..a.n()).map(|j| a.column(j).iter().sum()).collect()
}

/// Whether M commutes with the chosen generator set. The torus part is the
/// equivalent combinatorial criterion: nonzero entries only between basis
/// elements with equal column-sum profiles.
pub fn commutant_check(m: &OperatorMatrix, gens: GeneratorSet) -> bool {
    let index: BTreeMap<&WeakCompositionMatrix, usize> =
        m.basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
    for w in sn_generators(m.n) {
        // P_w M = M P_w ⇔ M[w·b][w·a] = M[b][a] for all a, b
        for (ai, a) in m.basis.iter().enumerate() {
            let wa = index[&apply_column_perm(&w, a)];
            for (bi, b) in m.basis.iter().enumerate() {
                let wb = index[&apply_column_perm(&w, b)];
                if m.rows[bi][ai] != m.rows[wb][wa] {
                    return false;
                }
            }
        }
    }
    if gens == GeneratorSet::Monomial {
        for (ai, a) in m.basis.iter().enumerate() {
            let wa = column_weights(a);
            for (bi, b) in m.basis.iter().enumerate() {
                if !m.rows[bi][ai].is_zero() && wa != column_weights(b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Dimension of the span of a family of operators on the same module,
/// by flattening each matrix to a vector and computing the rank over ℚ.
pub fn operator_span_dimension(mats: &[OperatorMatrix]) -> usize {
    let flat: Vec<Vec<Rat>> = mats
        .iter()
        .map(|m| m.rows.iter().flat_map(|r| r.iter().cloned()).collect())
        .collect();
    mat_rank(&flat)
}

/// Dimension of the full commutant of the S_n permutation action: the number
/// of orbits of the generated group on index pairs, found by flood fill.
/// Independent of the diagram-invariant route in centralizer_dimension.
pub fn full_commutant_dimension(n: usize, lambda: &[u32]) -> usize {
    let basis = enumerate_weak_compositions(n, lambda);
    let index: BTreeMap<&WeakCompositionMatrix, usize> =
        basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let perms: Vec<Vec<usize>> = sn_generators(n)
        .iter()
        .map(|w| basis.iter().map(|a| index[&apply_column_perm(w, a)]).collect())
        .collect();
    let dim = basis.len();
    let mut seen = vec![false; dim * dim];
    let mut orbits = 0;
    for start in 0..dim * dim {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(p) = stack.pop() {
            let (a, b) = (p / dim, p % dim);
            for perm in &perms {
                let q = perm[a] * dim + perm[b];
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    orbits
}
