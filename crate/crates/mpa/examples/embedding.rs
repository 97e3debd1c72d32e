//! The embedding of MP_lambda(xi) into P_k(xi), k = |lambda|, and the
//! idempotent e that realizes MP_lambda(xi) as e P_k(xi) e.

use mpa::mpalgebra::{
    canonical_partition_diagram, embed, idempotent_e, identity, multiply, MPElement,
    MultisetDiagram,
};
use mpa::partition_algebra::multiply_orbit_basis;

fn main() {
    let lambda = vec![2u32];
    let gamma1 = MultisetDiagram::new(
        lambda.clone(),
        vec![(vec![0], vec![1]), (vec![1], vec![0]), (vec![1], vec![1])],
    )
    .unwrap();

    // every class has a canonical partition diagram representative
    let d = canonical_partition_diagram(&gamma1);
    println!("canonical diagram of Gamma1: {:?}", d.signed_blocks());

    // the embedding is an algebra homomorphism into the orbit basis
    let a = MPElement::basis_element(gamma1);
    let img = embed(&a);
    println!("\nembedded Gamma1:");
    for (dd, c) in img.terms() {
        println!("  ({c}) * x_{:?}", dd.signed_blocks());
    }
    let lhs = embed(&multiply(&a, &a).unwrap());
    let rhs = multiply_orbit_basis(&img, &img).unwrap();
    assert_eq!(lhs, rhs);

    // the identity maps to an idempotent fixed by the involution
    let e = idempotent_e(&lambda);
    assert_eq!(embed(&identity(&lambda)), e);
    assert_eq!(multiply_orbit_basis(&e, &e).unwrap(), e);
    assert_eq!(e.apply_involution(), e);
    println!("\ne = embed(identity), e^2 = e, i(e) = e: ok");
}
