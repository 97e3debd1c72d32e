//! Classical partition algebra P_k(xi): diagram basis, orbit basis, and the
//! triangular change of basis between them.

use mpa::partition_algebra::{
    diagram_from_orbit, enumerate_diagrams, multiply_diagram_basis, multiply_orbit_basis,
    orbit_from_diagram, Basis, PAElement, SetPartitionDiagram,
};

fn main() {
    // |A_k| is the Bell number of 2k
    for k in 1..=3 {
        println!("|A_{k}| = {}", enumerate_diagrams(k).len());
    }

    // the k=5 worked product: the closed middle component contributes xi^2
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
    println!("\nk=5 product:");
    for (d, c) in prod.terms() {
        println!("  ({c}) * {:?}", d.signed_blocks());
    }

    // orbit and diagram products agree through the basis change
    let diagrams = enumerate_diagrams(2);
    let d = &diagrams[3];
    let x = PAElement::basis_element(d.clone(), Basis::Orbit);
    let fast = multiply_orbit_basis(&x, &x).unwrap();
    let slow = orbit_from_diagram(
        &multiply_diagram_basis(&diagram_from_orbit(&x).unwrap(), &diagram_from_orbit(&x).unwrap())
            .unwrap(),
    )
    .unwrap();
    assert_eq!(fast, slow);
    println!("\nx_d * x_d for d = {:?}:", d.signed_blocks());
    for (dd, c) in fast.terms() {
        println!("  ({c}) * x_{:?}", dd.signed_blocks());
    }
}
