//! Schur-Weyl duality at work: integral operators on F[M(n,lambda)], the
//! evaluation homomorphism at xi = n, and its kernel.

use mpa::config::Config;
use num::Zero;

use mpa::mpalgebra::{enumerate_basis, multiply, MPElement, MultisetDiagram};
use mpa::schur_weyl::{
    brute_force_structure_count, centralizer_dimension, integral_operator,
    operator_span_dimension, phi,
};

fn main() {
    let cfg = Config::default();

    // T_[Gamma] 1_(2,0,0) = 1_(1,1,0) + 1_(1,0,1) for edges {(0,1),(2,1)}
    let gamma = MultisetDiagram::new(vec![2], vec![(vec![0], vec![1]), (vec![2], vec![1])]).unwrap();
    let t = integral_operator(&gamma, 3).unwrap();
    let col = t.basis.iter().position(|a| a.rows[0] == vec![2, 0, 0]).unwrap();
    print!("T 1_(2,0,0) =");
    for (row, b) in t.basis.iter().enumerate() {
        if !t.rows[row][col].is_zero() {
            print!(" + 1_{:?}", b.rows[0]);
        }
    }
    println!();

    // phi is a homomorphism; diagrams of rank > n span its kernel
    let basis = enumerate_basis(&[2]);
    for n in [3usize, 4] {
        let images: Vec<_> = basis
            .iter()
            .map(|g| phi(&MPElement::basis_element(g.clone()), n, &cfg).unwrap())
            .collect();
        let a = MPElement::basis_element(basis[2].clone());
        let b = MPElement::basis_element(basis[5].clone());
        assert_eq!(
            phi(&multiply(&a, &b).unwrap(), n, &cfg).unwrap(),
            phi(&a, n, &cfg).unwrap().mul(&phi(&b, n, &cfg).unwrap())
        );
        let span = operator_span_dimension(&images);
        println!(
            "n={n}: span {span}, kernel {}, centralizer dim {}",
            basis.len() - span,
            centralizer_dimension(n, &[2])
        );
    }

    // structure polynomials at xi = n count operator compositions
    let g1 = MultisetDiagram::new(
        vec![2],
        vec![(vec![0], vec![1]), (vec![1], vec![0]), (vec![1], vec![1])],
    )
    .unwrap();
    let count = brute_force_structure_count(&g1, &g1, &g1, 3).unwrap();
    println!("brute-force count of [Gamma1][Gamma1] -> [Gamma1] at n=3: {count}");
}
