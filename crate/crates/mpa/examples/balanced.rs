//! The balanced subalgebra: blocks with equal primed and unprimed sizes
//! close under multiplication with xi-free constants, and correspond exactly
//! to the commutant of the monomial matrices.

use mpa::mpalgebra::{balanced_basis, enumerate_basis, structure_polys};
use mpa::schur_weyl::{commutant_check, integral_operator, GeneratorSet};

fn main() {
    let lambda = vec![2u32];
    let balanced = balanced_basis(&lambda);
    println!("balanced classes for lambda {lambda:?}:");
    for g in &balanced {
        println!("  {:?}", g.edges());
    }

    // products of balanced classes stay balanced with constant coefficients
    for g1 in &balanced {
        for g2 in &balanced {
            for (gamma, p) in structure_polys(g1, g2).unwrap() {
                assert!(gamma.is_balanced());
                assert!(p.is_constant());
            }
        }
    }
    println!("closure with xi-free structure constants: ok");

    // at n = 3, monomial-commutant membership is exactly balancedness
    for g in enumerate_basis(&lambda).iter().filter(|g| g.rank() <= 3) {
        let t = integral_operator(g, 3).unwrap();
        assert!(commutant_check(&t, GeneratorSet::SymmetricGroup));
        assert_eq!(commutant_check(&t, GeneratorSet::Monomial), g.is_balanced());
    }
    println!("monomial commutant = balanced span at n=3: ok");
}
