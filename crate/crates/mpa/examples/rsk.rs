//! RSK for multiset partitions: biword, insertion pair, inverse, and the
//! transpose symmetry.

use mpa::mpalgebra::MultisetDiagram;
use mpa::rsk::{inverse_rsk, rsk_partition, to_biword, transpose_partition};

fn main() {
    // blocks {1,2}, {1',2'}, {1,3,1'}, {2,2'}, {3'} with lambda = (2,2,1)
    let d = MultisetDiagram::new(
        vec![2, 2, 1],
        vec![
            (vec![1, 1, 0], vec![0, 0, 0]),
            (vec![0, 0, 0], vec![1, 1, 0]),
            (vec![1, 0, 1], vec![1, 0, 0]),
            (vec![0, 1, 0], vec![0, 1, 0]),
            (vec![0, 0, 0], vec![0, 0, 1]),
        ],
    )
    .unwrap();

    let bw = to_biword(&d, 6).unwrap();
    println!("biword columns:");
    for (bu, bl) in &bw.columns {
        println!("  ({:?}, {:?})", bu.entries(), bl.entries());
    }

    let (t, s) = rsk_partition(&d, 6).unwrap();
    println!("\ninsertion tableau rows (primed entries):");
    for row in &t.rows {
        println!("  {:?}", row.iter().map(|m| m.entries()).collect::<Vec<_>>());
    }
    println!("recording tableau rows:");
    for row in &s.rows {
        println!("  {:?}", row.iter().map(|m| m.entries()).collect::<Vec<_>>());
    }

    // the correspondence inverts, and transposing swaps the pair
    assert_eq!(inverse_rsk(&t, &s).unwrap(), d);
    let (t2, s2) = rsk_partition(&transpose_partition(&d), 6).unwrap();
    assert_eq!((t2, s2), (s, t));
    println!("\nroundtrip and transpose symmetry: ok");
}
