//! Multiset partition algebra MP_lambda(xi): basis enumeration and products
//! with polynomial structure constants.

use mpa::mpalgebra::{enumerate_basis, multiply, MPElement, MultisetDiagram};

fn main() {
    for lambda in [vec![1u32], vec![2], vec![1, 1], vec![2, 1]] {
        println!("lambda {lambda:?}: {} classes", enumerate_basis(&lambda).len());
    }

    // [Gamma1]^2 = (xi-2)[Gamma1] + 2(xi-2)[{(1,1)^2}] + 4[{(0,1)^2,(1,0)^2}]
    let gamma1 = MultisetDiagram::new(
        vec![2],
        vec![(vec![0], vec![1]), (vec![1], vec![0]), (vec![1], vec![1])],
    )
    .unwrap();
    let a = MPElement::basis_element(gamma1);
    let square = multiply(&a, &a).unwrap();
    println!("\n[Gamma1]^2 =");
    for (d, c) in square.terms() {
        println!("  ({c}) * {:?}", d.edges());
    }
}
