//! Multiplicities of Specht modules in Sym^lambda(F^n): tableau counts,
//! plethysm coefficients, the support set, and the dimension identity.

use mpa::combinatorics::{binomial, count_syt, enumerate_partitions};
use mpa::symfunc::{a_coeff_plethysm, a_coeff_ssmt, lambda_set, principal_specialization};

fn main() {
    // both computations of a_nu^lambda agree; dims sum to C(n+1, 2) at k=2
    let n = 5u32;
    let mut total = num::BigInt::from(0);
    println!("n = {n}, lambda = (2):");
    for nu in enumerate_partitions(n) {
        let a = a_coeff_ssmt(&nu, &[2]);
        assert_eq!(a, a_coeff_plethysm(&nu, &[2]));
        if a > 0 {
            println!("  a_{:?} = {a}, dim = {}", nu.parts(), count_syt(&nu));
        }
        total += num::BigInt::from(a) * count_syt(&nu);
    }
    assert_eq!(total, binomial(6, 2));
    println!("  total dimension {total} = C(6,2)");

    // the support is exactly the partitions with b(nu) <= k
    let set: Vec<_> = lambda_set(2, 5).iter().map(|p| p.parts().to_vec()).collect();
    println!("\nLambda(2,5) = {set:?}");

    // principal specialization: tableau sum vs hook-product expansion
    let nu = mpa::combinatorics::IntegerPartition::new(vec![1, 1]);
    let (left, right) = principal_specialization(&nu, 5);
    assert_eq!(left, right);
    println!("\ns_(1,1)(1,q,q^2,...) mod q^6: {left:?}");
}
