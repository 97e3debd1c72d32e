//! The acceptance battery: nine independent checks, each pitting a fast
//! implementation against a worked example or a brute-force oracle. Shared by
//! the `verify` CLI subcommand and the integration test.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::arith::{rat_int, PolyXi, Rat};
use crate::combinatorics::{
    binomial, count_syt, enumerate_partitions, enumerate_ssmt, enumerate_weak_compositions,
    IntegerPartition, Multiset,
};
use crate::config::Config;
use crate::error::MpaError;
use crate::mpalgebra::{
    balanced_basis, embed, enumerate_basis, idempotent_e, identity, multiply, structure_polys,
    MPElement, MultisetDiagram,
};
use crate::partition_algebra::{
    diagram_from_orbit, enumerate_diagrams, multiply_diagram_basis, multiply_orbit_basis,
    orbit_from_diagram, Basis, PAElement, SetPartitionDiagram,
};
use crate::rsk::{inverse_rsk, rsk_partition, symmetry_check, transpose_partition};
use crate::schur_weyl::{
    centralizer_dimension, commutant_check, integral_operator, operator_span_dimension,
    orbit_of_pair, phi, GeneratorSet,
};
use crate::symfunc::{a_coeff_plethysm, a_coeff_ssmt, lambda_set, r_coeff, r_coeff_character_oracle};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const CRITERION_NAMES: [&str; 9] = [
    "worked-example fidelity",
    "structure-constant oracle equivalence",
    "evaluation homomorphism and kernel",
    "embedding and idempotent",
    "orbit/diagram basis consistency",
    "multiplicity engine",
    "restriction coefficients",
    "rsk bijection and symmetry",
    "balanced subalgebra",
];

/// Accumulates named checks; the first few failures are kept for the report.
struct Checker {
    checks: usize,
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Fn() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        }
    }

    fn finish(self, id: usize) -> CriterionResult {
        let passed = self.failures.is_empty();
        let detail = if passed {
            format!("{} checks", self.checks)
        } else {
            format!("{} checks, first failures: {}", self.checks, self.failures.join("; "))
        };
        CriterionResult { id, name: CRITERION_NAMES[id - 1], passed, detail }
    }
}

fn md(lambda: Vec<u32>, edges: Vec<(Vec<u32>, Vec<u32>)>) -> MultisetDiagram {
    MultisetDiagram::new(lambda, edges).expect("well-formed diagram literal")
}

fn gamma1() -> MultisetDiagram {
    md(vec![2], vec![(vec![0], vec![1]), (vec![1], vec![0]), (vec![1], vec![1])])
}

/// 1: the four worked examples, reproduced exactly.
fn criterion_1() -> CriterionResult {
    let mut c = Checker::new();

    // k=2 product: [Γ₁]² = (ξ−2)[Γ₁] + 2(ξ−2)[{(1,1)²}] + 4[{(0,1)²,(1,0)²}]
    let g1 = MPElement::basis_element(gamma1());
    let product = multiply(&g1, &g1).expect("same λ");
    let mut expect = MPElement::zero(vec![2]);
    expect.add_term(gamma1(), PolyXi::xi_plus(-2));
    expect.add_term(
        md(vec![2], vec![(vec![1], vec![1]), (vec![1], vec![1])]),
        PolyXi::xi_plus(-2).scale(&rat_int(2)),
    );
    expect.add_term(
        md(vec![2], vec![(vec![0], vec![1]); 2].into_iter()
            .chain([(vec![1], vec![0]), (vec![1], vec![0])])
            .collect()),
        PolyXi::from_int(4),
    );
    c.check(product == expect, || "k=2 product".into());

    // k=5 diagram-basis product with a doubly-closed middle component
    let d1 = SetPartitionDiagram::from_signed(
        5,
        &[vec![1, -1], vec![2], vec![3], vec![4], vec![-2, -3], vec![5, -4, -5]],
    )
    .unwrap();
    let d2 = SetPartitionDiagram::from_signed(
        5,
        &[vec![1, 2, -1], vec![3, 5], vec![-2, -3], vec![-4], vec![4, -5]],
    )
    .unwrap();
    let prod = multiply_diagram_basis(
        &PAElement::basis_element(d1, Basis::Diagram),
        &PAElement::basis_element(d2, Basis::Diagram),
    )
    .unwrap();
    let expect_d = SetPartitionDiagram::from_signed(
        5,
        &[vec![1, 2, -1], vec![3, 5], vec![4, -4, -5], vec![-2, -3]],
    )
    .unwrap();
    let xi2 = PolyXi::xi().mul(&PolyXi::xi());
    let mut expect_p = PAElement::zero(5, Basis::Diagram);
    expect_p.add_term(expect_d, xi2);
    c.check(prod == expect_p, || "k=5 diagram product".into());

    // integral operator on M(3, (2)) for the class with edges {(0,1),(2,1)}
    let g = md(vec![2], vec![(vec![0], vec![1]), (vec![2], vec![1])]);
    let t = integral_operator(&g, 3).unwrap();
    let idx = |v: Vec<u32>| t.basis.iter().position(|a| a.rows[0] == v).unwrap();
    let col = idx(vec![2, 0, 0]);
    let mut ones: Vec<usize> = (0..t.dim()).filter(|&r| !t.rows[r][col].is_zero()).collect();
    ones.sort_unstable();
    let mut want = vec![idx(vec![1, 1, 0]), idx(vec![1, 0, 1])];
    want.sort_unstable();
    c.check(ones == want, || "integral operator image of 1_(2,0,0)".into());
    let col2 = idx(vec![1, 1, 0]);
    c.check(
        (0..t.dim()).all(|r| t.rows[r][col2].is_zero()),
        || "integral operator kills 1_(1,1,0)".into(),
    );

    // λ=(2,2,1) insertion pair
    let d = md(
        vec![2, 2, 1],
        vec![
            (vec![1, 1, 0], vec![0, 0, 0]),
            (vec![0, 0, 0], vec![1, 1, 0]),
            (vec![1, 0, 1], vec![1, 0, 0]),
            (vec![0, 1, 0], vec![0, 1, 0]),
            (vec![0, 0, 0], vec![0, 0, 1]),
        ],
    );
    let (tt, ss) = rsk_partition(&d, 6).unwrap();
    let ms = |v: Vec<u32>| Multiset::new(v);
    c.check(
        tt.rows
            == vec![
                vec![ms(vec![]), ms(vec![]), ms(vec![1])],
                vec![ms(vec![2]), ms(vec![1, 2])],
                vec![ms(vec![3])],
            ],
        || "rsk insertion tableau".into(),
    );
    c.check(
        ss.rows
            == vec![
                vec![ms(vec![]), ms(vec![]), ms(vec![])],
                vec![ms(vec![2]), ms(vec![1, 3])],
                vec![ms(vec![1, 2])],
            ],
        || "rsk recording tableau".into(),
    );

    c.finish(1)
}

/// 2: every structure polynomial evaluated at every n in the window equals
/// the operator-composition count over M(n,λ).
fn criterion_2() -> CriterionResult {
    let mut c = Checker::new();
    let lambdas: Vec<Vec<u32>> = vec![vec![1], vec![2], vec![3], vec![1, 1], vec![2, 1]];
    for lambda in &lambdas {
        let basis = enumerate_basis(lambda);
        let index: BTreeMap<&MultisetDiagram, usize> =
            basis.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let max_rank = basis.iter().map(|g| g.rank()).max().unwrap();
        // all structure polynomials, once per ordered pair
        let mut polys: HashMap<(usize, usize), BTreeMap<usize, PolyXi>> = HashMap::new();
        for (i, g1) in basis.iter().enumerate() {
            for (j, g2) in basis.iter().enumerate() {
                let by_target = structure_polys(g1, g2).unwrap();
                polys.insert(
                    (i, j),
                    by_target.into_iter().map(|(g, p)| (index[&g], p)).collect(),
                );
            }
        }
        for n in max_rank..=max_rank + 4 {
            let module = enumerate_weak_compositions(n, lambda);
            // one representative pair (a, c) per realizable target class
            let mut reps: HashMap<usize, (usize, usize)> = HashMap::new();
            for (ai, a) in module.iter().enumerate() {
                for (ci, cc) in module.iter().enumerate() {
                    let t = index[&orbit_of_pair(a, cc)];
                    reps.entry(t).or_insert((ai, ci));
                }
            }
            // every basis class has rank ≤ 2|λ| ≤ n here, so all are realized
            c.check(reps.len() == basis.len(), || {
                format!("λ={lambda:?} n={n}: {} of {} classes realized", reps.len(), basis.len())
            });
            // bin every middle point b for each target
            let mut counts: HashMap<(usize, usize, usize), u64> = HashMap::new();
            for (&t, &(ai, ci)) in &reps {
                let (a, cc) = (&module[ai], &module[ci]);
                for b in &module {
                    let i1 = index[&orbit_of_pair(b, cc)];
                    let i2 = index[&orbit_of_pair(a, b)];
                    *counts.entry((i1, i2, t)).or_insert(0) += 1;
                }
            }
            // polynomial side covers the count side
            for ((i, j), by_target) in &polys {
                for (t, p) in by_target {
                    let expected = counts.get(&(*i, *j, *t)).copied().unwrap_or(0);
                    c.check(p.eval_int(n as i64) == rat_int(expected as i64), || {
                        format!("λ={lambda:?} n={n}: poly({i},{j}→{t}) ≠ count {expected}")
                    });
                }
            }
            // count side covers the polynomial side
            for (&(i, j, t), &cnt) in &counts {
                let got = polys[&(i, j)]
                    .get(&t)
                    .map_or(Rat::zero(), |p| p.eval_int(n as i64));
                c.check(got == rat_int(cnt as i64), || {
                    format!("λ={lambda:?} n={n}: count({i},{j}→{t})={cnt} has no matching poly")
                });
            }
        }
    }
    c.finish(2)
}

/// 3: the evaluation map at ξ = n is an algebra homomorphism with the
/// predicted kernel and, in the stable range, the predicted image dimension.
fn criterion_3() -> CriterionResult {
    let mut c = Checker::new();
    let cfg = Config::default();
    let lambda = vec![2u32];
    let basis = enumerate_basis(&lambda);
    for n in 2..=5usize {
        let images: Vec<_> = basis
            .iter()
            .map(|g| phi(&MPElement::basis_element(g.clone()), n, &cfg).unwrap())
            .collect();
        for (i, g1) in basis.iter().enumerate() {
            for (j, g2) in basis.iter().enumerate() {
                let a = MPElement::basis_element(g1.clone());
                let b = MPElement::basis_element(g2.clone());
                let lhs = phi(&multiply(&a, &b).unwrap(), n, &cfg).unwrap();
                let rhs = images[i].mul(&images[j]);
                c.check(lhs == rhs, || format!("n={n}: image of product ≠ product of images ({i},{j})"));
            }
        }
        let span = operator_span_dimension(&images);
        let kernel = basis.len() - span;
        let expect_kernel = basis.iter().filter(|g| g.rank() > n).count();
        c.check(kernel == expect_kernel, || {
            format!("n={n}: kernel dim {kernel} ≠ rank-excess count {expect_kernel}")
        });
        if n >= 4 {
            c.check(span == basis.len(), || format!("n={n}: span {span} ≠ {}", basis.len()));
            let cd = centralizer_dimension(n, &lambda);
            c.check(cd == basis.len(), || format!("n={n}: centralizer dim {cd}"));
        }
    }
    c.finish(3)
}

/// 4: the embedding is multiplicative, sends the identity to the idempotent
/// e with e² = e and i(e) = e, and the single-column basis count is the Bell
/// number of the doubled index.
fn criterion_4() -> CriterionResult {
    let mut c = Checker::new();
    let lambdas: Vec<Vec<u32>> =
        vec![vec![1], vec![2], vec![3], vec![1, 1], vec![2, 1], vec![1, 1, 1]];
    for lambda in &lambdas {
        let e = idempotent_e(lambda);
        c.check(embed(&identity(lambda)) == e, || format!("λ={lambda:?}: embed(id) ≠ e"));
        let ee = multiply_orbit_basis(&e, &e).unwrap();
        c.check(ee == e, || format!("λ={lambda:?}: e² ≠ e"));
        c.check(e.apply_involution() == e, || format!("λ={lambda:?}: i(e) ≠ e"));
    }
    let basis = enumerate_basis(&[2]);
    for g1 in &basis {
        for g2 in &basis {
            let a = MPElement::basis_element(g1.clone());
            let b = MPElement::basis_element(g2.clone());
            let lhs = embed(&multiply(&a, &b).unwrap());
            let rhs = multiply_orbit_basis(&embed(&a), &embed(&b)).unwrap();
            c.check(lhs == rhs, || "λ=(2): embedding not multiplicative".into());
        }
    }
    for (k, bell_2k) in [(1usize, 2usize), (2, 15), (3, 203)] {
        let count = enumerate_basis(&vec![1; k]).len();
        c.check(count == bell_2k, || format!("λ=(1^{k}): {count} classes ≠ Bell {bell_2k}"));
    }
    c.finish(4)
}

/// 5: the orbit-basis product agrees with the diagram-basis product through
/// the triangular basis change, over the full diagram square for k ≤ 3.
fn criterion_5() -> CriterionResult {
    let mut c = Checker::new();
    for k in 1..=3usize {
        let diagrams = enumerate_diagrams(k);
        // Möbius expansion of each x_d, computed once
        let expansions: Vec<PAElement> = diagrams
            .iter()
            .map(|d| {
                diagram_from_orbit(&PAElement::basis_element(d.clone(), Basis::Orbit)).unwrap()
            })
            .collect();
        for (i, d1) in diagrams.iter().enumerate() {
            for (j, d2) in diagrams.iter().enumerate() {
                let fast = multiply_orbit_basis(
                    &PAElement::basis_element(d1.clone(), Basis::Orbit),
                    &PAElement::basis_element(d2.clone(), Basis::Orbit),
                )
                .unwrap();
                let via_diagram = orbit_from_diagram(
                    &multiply_diagram_basis(&expansions[i], &expansions[j]).unwrap(),
                )
                .unwrap();
                c.check(fast == via_diagram, || format!("k={k}: pair ({i},{j}) disagrees"));
            }
        }
    }
    c.finish(5)
}

/// 6: tableau counts equal plethysm coefficients, the support is the
/// predicted partition set, and multiplicities satisfy the dimension count.
fn criterion_6() -> CriterionResult {
    let mut c = Checker::new();
    let lambdas: Vec<Vec<u32>> = (1..=4u32)
        .flat_map(enumerate_partitions)
        .map(|p| p.parts().to_vec())
        .collect();
    for n in 1..=6u32 {
        let nus = enumerate_partitions(n);
        for lambda in &lambdas {
            let mut dim_sum = num::BigInt::from(0);
            for nu in &nus {
                let a = a_coeff_ssmt(nu, lambda);
                c.check(a == a_coeff_plethysm(nu, lambda), || {
                    format!("ν={nu:?} λ={lambda:?}: tableau count ≠ plethysm coefficient")
                });
                dim_sum += num::BigInt::from(a) * count_syt(nu);
            }
            let expect: num::BigInt = lambda
                .iter()
                .map(|&l| binomial(n as u64 + l as u64 - 1, l as u64))
                .product();
            c.check(dim_sum == expect, || {
                format!("n={n} λ={lambda:?}: dimension identity fails")
            });
        }
        for k in 0..=3u32 {
            let support: Vec<Vec<u32>> = nus
                .iter()
                .filter(|nu| a_coeff_ssmt(nu, &[k]) > 0)
                .map(|p| p.parts().to_vec())
                .collect();
            let set: Vec<Vec<u32>> =
                lambda_set(k, n).iter().map(|p| p.parts().to_vec()).collect();
            c.check(support == set, || format!("k={k} n={n}: support ≠ Λ set"));
        }
    }
    // the concrete (n, k) = (5, 2) instance: 1·2 + 4·2 + 5·1 = 15
    let inst = [(vec![5u32], 1u64, 2u64), (vec![4, 1], 4, 2), (vec![3, 2], 5, 1)];
    let mut total = 0u64;
    for (nu, dim, a) in &inst {
        let p = IntegerPartition::new(nu.clone());
        c.check(a_coeff_ssmt(&p, &[2]) == *a, || format!("ν={nu:?}: multiplicity ≠ {a}"));
        c.check(count_syt(&p) == num::BigInt::from(*dim), || format!("ν={nu:?}: dim ≠ {dim}"));
        total += dim * a;
    }
    c.check(total == 15, || "dimension instance ≠ 15".into());
    c.finish(6)
}

/// 7: the signed sum for restriction coefficients equals the character-
/// theoretic inner product, with the two spot values at n = 5.
fn criterion_7() -> CriterionResult {
    let mut c = Checker::new();
    let lambdas: Vec<Vec<u32>> = (1..=4u32)
        .flat_map(enumerate_partitions)
        .map(|p| p.parts().to_vec())
        .collect();
    for n in 1..=5u32 {
        for nu in enumerate_partitions(n) {
            for lambda in &lambdas {
                if lambda.len() > n as usize {
                    continue;
                }
                let r = r_coeff(lambda, &nu);
                c.check(r >= 0, || format!("ν={nu:?} λ={lambda:?}: negative multiplicity"));
                c.check(r == r_coeff_character_oracle(lambda, &nu), || {
                    format!("ν={nu:?} λ={lambda:?}: signed sum ≠ character oracle")
                });
            }
        }
    }
    c.check(r_coeff(&[1, 1], &IntegerPartition::new(vec![5])) == 0, || "r at (5)".into());
    c.check(r_coeff(&[1, 1], &IntegerPartition::new(vec![4, 1])) == 1, || "r at (4,1)".into());
    c.finish(7)
}

/// 8: the insertion map is a bijection onto same-shape tableau pairs, with
/// the shape-count identity and transpose symmetry.
fn criterion_8() -> CriterionResult {
    let mut c = Checker::new();
    for lambda in [vec![2u32], vec![3], vec![1, 1]] {
        let k: u32 = lambda.iter().sum();
        let all = enumerate_basis(&lambda);
        for n in 1..=(2 * k) as usize {
            let diagrams: Vec<&MultisetDiagram> =
                all.iter().filter(|d| d.rank() <= n).collect();
            let mut images = std::collections::BTreeSet::new();
            let mut by_shape: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for d in &diagrams {
                let (t, s) = rsk_partition(d, n).unwrap();
                c.check(t.is_valid() && s.is_valid() && t.shape == s.shape, || {
                    format!("λ={lambda:?} n={n}: invalid pair")
                });
                c.check(inverse_rsk(&t, &s).unwrap() == **d, || {
                    format!("λ={lambda:?} n={n}: roundtrip failed")
                });
                *by_shape.entry(t.shape.parts().to_vec()).or_insert(0) += 1;
                c.check(images.insert((t.rows, s.rows)), || {
                    format!("λ={lambda:?} n={n}: not injective")
                });
                let dt = transpose_partition(d);
                let (t2, s2) = rsk_partition(&dt, n).unwrap();
                let (t1, s1) = rsk_partition(d, n).unwrap();
                c.check((t2, s2) == (s1, t1), || {
                    format!("λ={lambda:?} n={n}: transpose does not swap the pair")
                });
                c.check(symmetry_check(d, n).unwrap(), || {
                    format!("λ={lambda:?} n={n}: odd-column count ≠ fixed-block count")
                });
            }
            // surjectivity: the image exhausts all same-shape content-λ pairs
            let content = Multiset::from_multiplicities(&lambda);
            let mut pair_count = 0usize;
            for nu in enumerate_partitions(n as u32) {
                let m = enumerate_ssmt(&nu, &content).len();
                pair_count += m * m;
                if let Some(&cnt) = by_shape.get(&nu.parts().to_vec()) {
                    c.check(cnt == m * m, || {
                        format!("λ={lambda:?} n={n} ν={nu:?}: shape count mismatch")
                    });
                }
            }
            c.check(images.len() == pair_count, || {
                format!("λ={lambda:?} n={n}: image size {} ≠ {pair_count}", images.len())
            });
        }
    }
    c.finish(8)
}

/// 9: balanced classes close under multiplication with constant structure
/// polynomials, and balancedness is exactly monomial-commutant membership.
fn criterion_9() -> CriterionResult {
    let mut c = Checker::new();
    for lambda in [vec![2u32], vec![1, 1]] {
        let balanced = balanced_basis(&lambda);
        for g1 in &balanced {
            for g2 in &balanced {
                for (gamma, p) in structure_polys(g1, g2).unwrap() {
                    c.check(gamma.is_balanced(), || {
                        format!("λ={lambda:?}: product leaves the balanced span")
                    });
                    c.check(p.is_constant(), || {
                        format!("λ={lambda:?}: structure polynomial depends on ξ")
                    });
                }
            }
        }
        let n = 3;
        for g in enumerate_basis(&lambda).iter().filter(|g| g.rank() <= n) {
            let t = integral_operator(g, n).unwrap();
            c.check(commutant_check(&t, GeneratorSet::SymmetricGroup), || {
                format!("λ={lambda:?}: operator leaves the permutation commutant")
            });
            c.check(commutant_check(&t, GeneratorSet::Monomial) == g.is_balanced(), || {
                format!("λ={lambda:?}: monomial membership ≠ balancedness for {g:?}")
            });
        }
    }
    c.finish(9)
}

pub fn run_criterion(id: usize) -> Result<CriterionResult, MpaError> {
    match id {
        1 => Ok(criterion_1()),
        2 => Ok(criterion_2()),
        3 => Ok(criterion_3()),
        4 => Ok(criterion_4()),
        5 => Ok(criterion_5()),
        6 => Ok(criterion_6()),
        7 => Ok(criterion_7()),
        8 => Ok(criterion_8()),
        9 => Ok(criterion_9()),
        _ => Err(MpaError::Malformed(format!("no criterion {id}; valid ids are 1..=9"))),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=9).map(|id| run_criterion(id).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion_is_rejected() {
        assert!(run_criterion(0).is_err());
        assert!(run_criterion(10).is_err());
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 4, 6, 9] {
            let r = run_criterion(id).unwrap();
            assert!(r.passed, "criterion {id}: {}", r.detail);
        }
    }
}
