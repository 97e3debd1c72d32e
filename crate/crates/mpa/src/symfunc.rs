//! Multiplicities a_ν^λ (tableau count vs. plethysm coefficient), the set
//! Λ_{k,n}, the principal specialization identity, and restriction
//! coefficients r_ν^λ with an independent character-theoretic oracle.

use itertools::Itertools;
use num::{One, Zero};

use crate::arith::Rat;
use crate::combinatorics::{
    enumerate_partitions, enumerate_ssmt, factorial, IntegerPartition, Multiset,
};

/// a_ν^λ as a count of semistandard multiset tableaux of shape ν with
/// content {1^{λ₁}, …, s^{λ_s}}. Accepts any weak composition λ.
pub fn a_coeff_ssmt(nu: &IntegerPartition, lambda: &[u32]) -> u64 {
    let content = Multiset::from_multiplicities(lambda);
    enumerate_ssmt(nu, &content).len() as u64
}

/// The monomial alphabet {q₁^{i₁}⋯q_s^{i_s} : iⱼ ≤ λⱼ} in graded lex order.
fn monomial_alphabet(lambda: &[u32]) -> Vec<Vec<u32>> {
    let mut letters = Vec::new();
    let mut cur = vec![0u32; lambda.len()];
    fn rec(caps: &[u32], cur: &mut Vec<u32>, idx: usize, out: &mut Vec<Vec<u32>>) {
        if idx == caps.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=caps[idx] {
            cur[idx] = v;
            rec(caps, cur, idx + 1, out);
        }
        cur[idx] = 0;
    }
    rec(lambda, &mut cur, 0, &mut letters);
    letters.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    letters
}

/// a_ν^λ as the coefficient of q^λ in the Schur polynomial over the
/// truncated monomial alphabet, by direct SSYT enumeration.
pub fn a_coeff_plethysm(nu: &IntegerPartition, lambda: &[u32]) -> u64 {
    let letters = monomial_alphabet(lambda);
    let col_lens = nu.conjugate();
    let mut cells = Vec::new();
    for c in 0..col_lens.parts().len() {
        for r in 0..col_lens.parts()[c] as usize {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> =
        nu.parts().iter().map(|&w| vec![usize::MAX; w as usize]).collect();
    let mut weight = vec![0u32; lambda.len()];
    let mut count = 0u64;

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        letters: &[Vec<u32>],
        target: &[u32],
        grid: &mut Vec<Vec<usize>>,
        weight: &mut Vec<u32>,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            if weight == target {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[idx];
        for (li, e) in letters.iter().enumerate() {
            // weak rows, strict columns on the alphabet order
            if c > 0 && grid[r][c - 1] != usize::MAX && li < grid[r][c - 1] {
                continue;
            }
            if r > 0 && li <= grid[r - 1][c] {
                continue;
            }
            if weight.iter().zip(e).zip(target).any(|((w, x), t)| w + x > *t) {
                continue;
            }
            for (w, x) in weight.iter_mut().zip(e) {
                *w += x;
            }
            grid[r][c] = li;
            rec(cells, idx + 1, letters, target, grid, weight, count);
            grid[r][c] = usize::MAX;
            for (w, x) in weight.iter_mut().zip(e) {
                *w -= x;
            }
        }
    }

    rec(&cells, 0, &letters, lambda, &mut grid, &mut weight, &mut count);
    count
}

/// Λ_{k,n}: partitions ν ⊢ n with b(ν) = Σ (i−1)νᵢ ≤ k.
pub fn lambda_set(k: u32, n: u32) -> Vec<IntegerPartition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|nu| nu.b_statistic() <= k)
        .collect()
}

/// Both sides of s_ν(1, q, q², …) = q^{b(ν)} / ∏_u (1 − q^{h(u)}) as
/// coefficient vectors up to degree D; callers assert equality.
pub fn principal_specialization(nu: &IntegerPartition, d: usize) -> (Vec<u64>, Vec<u64>) {
    // left side: SSYT over {0, 1, 2, …} weighted by entry sum, cut at D
    let col_lens = nu.conjugate();
    let mut cells = Vec::new();
    for c in 0..col_lens.parts().len() {
        for r in 0..col_lens.parts()[c] as usize {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<u32>> =
        nu.parts().iter().map(|&w| vec![u32::MAX; w as usize]).collect();
    let mut left = vec![0u64; d + 1];

    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        d: usize,
        grid: &mut Vec<Vec<u32>>,
        used: usize,
        left: &mut Vec<u64>,
    ) {
        if idx == cells.len() {
            left[used] += 1;
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 0u32;
        if c > 0 && grid[r][c - 1] != u32::MAX {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=(d as u32) {
            if used + v as usize > d {
                break;
            }
            grid[r][c] = v;
            rec(cells, idx + 1, d, grid, used + v as usize, left);
            grid[r][c] = u32::MAX;
        }
    }
    rec(&cells, 0, d, &mut grid, 0, &mut left);

    // right side: q^{b(ν)} with a geometric factor per hook length
    let mut right = vec![0u64; d + 1];
    let b = nu.b_statistic() as usize;
    if b <= d {
        right[b] = 1;
        for r in 0..nu.parts().len() {
            for c in 0..nu.parts()[r] as usize {
                let h = nu.hook_length(r, c) as usize;
                for i in h..=d {
                    right[i] += right[i - h];
                }
            }
        }
    }
    (left, right)
}

/// r_ν^λ by the signed Jacobi–Trudi sum Σ_{w∈S_n} sgn(w) a^{w·λ}_ν where
/// (w·λ)ᵢ = λᵢ + w(i) − i; any negative coordinate kills the term.
pub fn r_coeff(lambda: &[u32], nu: &IntegerPartition) -> i64 {
    let n = nu.size() as usize;
    assert!(lambda.len() <= n, "λ must have at most n parts");
    let mut padded = lambda.to_vec();
    padded.resize(n, 0);
    let mut total = 0i64;
    for w in (1..=n as i64).permutations(n) {
        let mut sign = 1i64;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    sign = -sign;
                }
            }
        }
        let mut mu = Vec::with_capacity(n);
        let mut ok = true;
        for i in 0..n {
            let v = padded[i] as i64 + w[i] - (i as i64 + 1);
            if v < 0 {
                ok = false;
                break;
            }
            mu.push(v as u32);
        }
        if ok {
            total += sign * a_coeff_ssmt(nu, &mu) as i64;
        }
    }
    total
}

/// z_μ = ∏ i^{mᵢ} mᵢ! for a partition μ.
fn z_of(mu: &[u32]) -> Rat {
    let mut z = num::BigInt::one();
    let mut i = 0;
    while i < mu.len() {
        let mut j = i;
        while j < mu.len() && mu[j] == mu[i] {
            j += 1;
        }
        let m = (j - i) as u64;
        z *= num::BigInt::from(mu[i]).pow(m as u32);
        z *= factorial(m);
        i = j;
    }
    Rat::from_integer(z)
}

/// Irreducible S_n character χ_ν at cycle type ρ by the Murnaghan–Nakayama
/// rule, via beta numbers (border strip of size r = move one beta down by r).
pub fn mn_character(nu: &[u32], rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return if nu.iter().all(|&x| x == 0) { 1 } else { 0 };
    }
    let len = nu.len().max(1);
    let betas: Vec<i64> =
        (0..len).map(|i| nu.get(i).copied().unwrap_or(0) as i64 + (len - 1 - i) as i64).collect();
    let r = rho[0] as i64;
    let rest = &rho[1..];
    let mut total = 0i64;
    for (pos, &b) in betas.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || betas.contains(&nb) {
            continue;
        }
        let crossed = betas.iter().filter(|&&x| nb < x && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut nbetas = betas.clone();
        nbetas[pos] = nb;
        nbetas.sort_unstable_by(|a, b| b.cmp(a));
        let mut shape: Vec<u32> = nbetas
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (nbetas.len() - 1 - i) as i64) as u32)
            .collect();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        total += sign * mn_character(&shape, rest);
    }
    total
}

/// χ_{W_λ}(σ) = s_λ(eigenvalues of σ) for σ of cycle type μ, through the
/// power-sum expansion s_λ = Σ_ρ (χ_λ(ρ)/z_ρ) p_ρ with
/// p_r(σ) = Σ_{c ∈ cycles} c·[c | r]. Integer-valued, exact rationals inside.
pub fn gl_character(lambda: &[u32], mu: &[u32]) -> Rat {
    let k: u32 = lambda.iter().sum();
    let p_r = |r: u32| -> i64 {
        mu.iter().filter(|&&c| c != 0 && r % c == 0).map(|&c| c as i64).sum()
    };
    let mut val = Rat::zero();
    for rho in enumerate_partitions(k) {
        let chi = mn_character(lambda, rho.parts());
        if chi == 0 {
            continue;
        }
        let mut term = Rat::from_integer(chi.into()) / z_of(rho.parts());
        for &r in rho.parts() {
            term *= Rat::from_integer(p_r(r).into());
        }
        val += term;
    }
    val
}

/// Independent oracle for r_ν^λ: (1/n!) Σ_σ χ_{W_λ}(σ) χ_ν(σ), evaluated per
/// cycle type with class sizes n!/z_μ.
pub fn r_coeff_character_oracle(lambda: &[u32], nu: &IntegerPartition) -> i64 {
    let n = nu.size();
    let mut total = Rat::zero();
    for mu in enumerate_partitions(n) {
        let chi_nu = mn_character(nu.parts(), mu.parts());
        if chi_nu == 0 {
            continue;
        }
        let chi_w = gl_character(lambda, mu.parts());
        total += chi_w * Rat::from_integer(chi_nu.into()) / z_of(mu.parts());
    }
    assert!(total.is_integer(), "character inner product must be an integer");
    let (sign, digits) = total.to_integer().to_u64_digits();
    let mag = digits.first().copied().unwrap_or(0) as i64;
    match sign {
        num::bigint::Sign::Minus => -mag,
        _ => mag,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial, count_syt};
    use num::BigInt;

    fn part(v: Vec<u32>) -> IntegerPartition {
        IntegerPartition::new(v)
    }

    #[test]
    fn a_coeff_examples() {
        assert_eq!(a_coeff_ssmt(&part(vec![5]), &[2]), 2);
        assert_eq!(a_coeff_ssmt(&part(vec![4, 1]), &[2]), 2);
        assert_eq!(a_coeff_ssmt(&part(vec![3, 2]), &[2]), 1);
        assert_eq!(a_coeff_ssmt(&part(vec![3, 1, 1]), &[2]), 0);
        assert_eq!(a_coeff_ssmt(&part(vec![4, 1]), &[1]), 1);
    }

    #[test]
    fn dimension_identity_n5_k2() {
        // 1·2 + 4·2 + 5·1 = 15 = C(6,2)
        let mut total = BigInt::from(0);
        for nu in enumerate_partitions(5) {
            total += BigInt::from(a_coeff_ssmt(&nu, &[2])) * count_syt(&nu);
        }
        assert_eq!(total, binomial(6, 2));
    }

    #[test]
    fn ssmt_equals_plethysm() {
        let lambdas: Vec<Vec<u32>> =
            vec![vec![1], vec![2], vec![3], vec![1, 1], vec![2, 1], vec![1, 1, 1]];
        for n in 1..=5u32 {
            for nu in enumerate_partitions(n) {
                for lam in &lambdas {
                    assert_eq!(
                        a_coeff_ssmt(&nu, lam),
                        a_coeff_plethysm(&nu, lam),
                        "nu={nu:?} lam={lam:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn plethysm_trivial_case() {
        assert_eq!(a_coeff_plethysm(&part(vec![1]), &[1]), 1);
        assert_eq!(a_coeff_plethysm(&part(vec![5]), &[2]), 2);
    }

    #[test]
    fn lambda_set_examples() {
        let got: Vec<Vec<u32>> =
            lambda_set(2, 5).iter().map(|p| p.parts().to_vec()).collect();
        let mut expect = vec![vec![5], vec![4, 1], vec![3, 2]];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        expect.sort();
        assert_eq!(got_sorted, expect);
        for n in 1..=5 {
            let only: Vec<Vec<u32>> =
                lambda_set(0, n).iter().map(|p| p.parts().to_vec()).collect();
            assert_eq!(only, vec![vec![n]]);
        }
    }

    #[test]
    fn lambda_set_is_nonzero_support() {
        for k in 0..=3u32 {
            for n in 1..=5u32 {
                let support: Vec<Vec<u32>> = enumerate_partitions(n)
                    .into_iter()
                    .filter(|nu| a_coeff_ssmt(nu, &[k]) > 0)
                    .map(|p| p.parts().to_vec())
                    .collect();
                let mut set: Vec<Vec<u32>> =
                    lambda_set(k, n).iter().map(|p| p.parts().to_vec()).collect();
                let mut support = support;
                support.sort();
                set.sort();
                assert_eq!(support, set, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn principal_specialization_examples() {
        let (l, r) = principal_specialization(&part(vec![1, 1]), 5);
        assert_eq!(l, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(l, r);
        // single row: partitions into parts of size ≤ n
        let (l, r) = principal_specialization(&part(vec![3]), 6);
        assert_eq!(l, r);
        assert_eq!(l, vec![1, 1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn principal_specialization_agrees_and_starts_at_b() {
        for n in 1..=5u32 {
            for nu in enumerate_partitions(n) {
                let (l, r) = principal_specialization(&nu, 8);
                assert_eq!(l, r, "nu={nu:?}");
                let lowest = l.iter().position(|&c| c != 0);
                let b = nu.b_statistic() as usize;
                assert_eq!(lowest, if b <= 8 { Some(b) } else { None }, "nu={nu:?}");
            }
        }
    }

    #[test]
    fn r_coeff_examples() {
        assert_eq!(r_coeff(&[1, 1], &part(vec![5])), 0);
        assert_eq!(r_coeff(&[1, 1], &part(vec![4, 1])), 1);
        for n in 2..=4u32 {
            let mut full: Vec<u32> = vec![n];
            assert_eq!(r_coeff(&[1], &part(full.clone())), 1);
            full = vec![n - 1, 1];
            assert_eq!(r_coeff(&[1], &part(full)), 1);
        }
        // single-row λ: restriction multiplicities are the a-coefficients
        for nu in enumerate_partitions(5) {
            assert_eq!(r_coeff(&[2], &nu), a_coeff_ssmt(&nu, &[2]) as i64);
        }
    }

    #[test]
    fn mn_character_basics() {
        // χ at the identity is the number of standard tableaux
        for n in 1..=5u32 {
            for nu in enumerate_partitions(n) {
                let id = vec![1u32; n as usize];
                assert_eq!(
                    BigInt::from(mn_character(nu.parts(), &id)),
                    count_syt(&nu)
                );
            }
        }
        // sign character on a transposition
        assert_eq!(mn_character(&[1, 1, 1], &[2, 1]), -1);
        // orthogonality: Σ_μ χ_ν(μ)²/z_μ = 1
        for nu in enumerate_partitions(4) {
            let mut s = Rat::zero();
            for mu in enumerate_partitions(4) {
                let c = mn_character(nu.parts(), mu.parts());
                s += Rat::from_integer((c * c).into()) / z_of(mu.parts());
            }
            assert_eq!(s, Rat::one());
        }
    }

    #[test]
    fn oracle_matches_signed_sum() {
        let lambdas: Vec<Vec<u32>> =
            vec![vec![1], vec![2], vec![3], vec![1, 1], vec![2, 1]];
        for n in 2..=4u32 {
            for nu in enumerate_partitions(n) {
                for lam in &lambdas {
                    if lam.len() > n as usize {
                        continue;
                    }
                    let r = r_coeff(lam, &nu);
                    assert!(r >= 0, "multiplicity must be non-negative");
                    assert_eq!(
                        r,
                        r_coeff_character_oracle(lam, &nu),
                        "nu={nu:?} lam={lam:?}"
                    );
                }
            }
        }
        // spot checks at n = 5
        assert_eq!(r_coeff_character_oracle(&[1, 1], &part(vec![5])), 0);
        assert_eq!(r_coeff_character_oracle(&[1, 1], &part(vec![4, 1])), 1);
        assert_eq!(r_coeff_character_oracle(&[2], &part(vec![3, 2])), 1);
    }
}
