//! Restriction of irreducible polynomial GL_n-modules to S_n: the signed
//! Jacobi-Trudi sum against the character-theoretic inner product.

use mpa::combinatorics::enumerate_partitions;
use mpa::symfunc::{r_coeff, r_coeff_character_oracle};

fn main() {
    // W_(1,1) restricted to S_5 contains V_(4,1) once and V_(5) not at all
    let lambda = vec![1u32, 1];
    println!("lambda = {lambda:?}, n = 5:");
    for nu in enumerate_partitions(5) {
        let r = r_coeff(&lambda, &nu);
        assert_eq!(r, r_coeff_character_oracle(&lambda, &nu));
        if r > 0 {
            println!("  r_{:?} = {r}", nu.parts());
        }
    }

    // dim W_(1,1) at n=5 is 10 = 4 + 6, matching the multiplicities
    let dim: i64 = enumerate_partitions(5)
        .iter()
        .map(|nu| {
            let syt: i64 = mpa::combinatorics::count_syt(nu).try_into().unwrap();
            r_coeff(&lambda, nu) * syt
        })
        .sum();
    println!("dim W_(1,1) over F^5 = {dim}");
}
