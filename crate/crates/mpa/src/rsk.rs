//! RSK for multiset partitions: diagrams of rank ≤ n correspond to pairs
//! (T, S) of same-shape semistandard multiset tableaux of size n, T with the
//! primed content and S with the unprimed content. Insertion uses Schensted
//! bumping under graded lexicographic comparison, weak rows and strict
//! columns; the transpose of a diagram swaps the two tableaux.

use crate::combinatorics::{IntegerPartition, Multiset, MultisetTableau};
use crate::error::MpaError;
use crate::mpalgebra::MultisetDiagram;

/// The two-line array of a multiset partition: n columns (Bᵘ, Bˡ), sorted so
/// Bᵘ weakly increases and Bˡ weakly increases within equal-Bᵘ runs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPBiword {
    pub columns: Vec<(Multiset, Multiset)>,
}

/// Split every block into its unprimed and primed halves, pad with empty
/// columns to length n, and sort into the canonical biword.
pub fn to_biword(d: &MultisetDiagram, n: usize) -> Result<MPBiword, MpaError> {
    if d.rank() > n {
        return Err(MpaError::RankExceedsN { rank: d.rank(), n });
    }
    let mut columns: Vec<(Multiset, Multiset)> = d
        .edges()
        .iter()
        .map(|(i, j)| (Multiset::from_multiplicities(i), Multiset::from_multiplicities(j)))
        .collect();
    columns.resize(n, (Multiset::empty(), Multiset::empty()));
    columns.sort();
    Ok(MPBiword { columns })
}

/// Row-insert x: replace the leftmost entry strictly greater than x, bump it
/// to the next row; returns the cell where a new entry settled.
fn row_insert(rows: &mut Vec<Vec<Multiset>>, mut x: Multiset) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![x]);
            return (r, 0);
        }
        match rows[r].iter().position(|y| *y > x) {
            None => {
                rows[r].push(x);
                return (r, rows[r].len() - 1);
            }
            Some(j) => {
                std::mem::swap(&mut rows[r][j], &mut x);
                r += 1;
            }
        }
    }
}

fn tableau(rows: Vec<Vec<Multiset>>) -> MultisetTableau {
    let shape = IntegerPartition::new(rows.iter().map(|r| r.len() as u32).collect());
    MultisetTableau { shape, rows }
}

/// Insert the bottom line, record the top line: (insertion T, recording S).
pub fn rsk(bw: &MPBiword) -> (MultisetTableau, MultisetTableau) {
    let mut t_rows: Vec<Vec<Multiset>> = Vec::new();
    let mut s_rows: Vec<Vec<Multiset>> = Vec::new();
    for (bu, bl) in &bw.columns {
        let (r, c) = row_insert(&mut t_rows, bl.clone());
        if r == s_rows.len() {
            s_rows.push(Vec::new());
        }
        debug_assert_eq!(c, s_rows[r].len());
        s_rows[r].push(bu.clone());
    }
    (tableau(t_rows), tableau(s_rows))
}

/// rsk ∘ to_biword in one call.
pub fn rsk_partition(
    d: &MultisetDiagram,
    n: usize,
) -> Result<(MultisetTableau, MultisetTableau), MpaError> {
    Ok(rsk(&to_biword(d, n)?))
}

/// Reverse one bump path starting at the removed corner (r, c); returns the
/// entry ejected from row 0.
fn reverse_bump(rows: &mut Vec<Vec<Multiset>>, r: usize, c: usize) -> Multiset {
    debug_assert_eq!(c + 1, rows[r].len(), "removed cell must be a corner");
    let mut x = rows[r].pop().unwrap();
    if rows[r].is_empty() {
        rows.pop();
    }
    for i in (0..r).rev() {
        let j = rows[i]
            .iter()
            .rposition(|y| *y < x)
            .expect("reverse bumping always finds a smaller entry");
        std::mem::swap(&mut rows[i][j], &mut x);
    }
    x
}

/// Rebuild the multiset partition from (T, S): remove recording cells in
/// decreasing graded lex order of their S entries, rightmost column first
/// among equal entries, reverse-bumping T at each step.
pub fn inverse_rsk(
    t: &MultisetTableau,
    s: &MultisetTableau,
) -> Result<MultisetDiagram, MpaError> {
    if t.shape != s.shape {
        return Err(MpaError::Malformed("tableau shapes differ".into()));
    }
    if !t.is_valid() || !s.is_valid() {
        return Err(MpaError::Malformed("not a semistandard multiset tableau".into()));
    }
    let max_sym = |m: &Multiset| m.entries().last().copied().unwrap_or(0);
    let s_syms = max_sym(&t.content()).max(max_sym(&s.content())) as usize;
    let lambda_t = t.content().multiplicities(s_syms);
    let lambda_s = s.content().multiplicities(s_syms);
    if lambda_t != lambda_s {
        return Err(MpaError::Malformed("tableau contents disagree".into()));
    }

    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, row) in s.rows.iter().enumerate() {
        for c in 0..row.len() {
            cells.push((r, c));
        }
    }
    cells.sort_by(|&(r1, c1), &(r2, c2)| {
        s.rows[r1][c1].cmp(&s.rows[r2][c2]).then(c1.cmp(&c2)).reverse()
    });

    let mut t_rows = t.rows.clone();
    let mut columns: Vec<(Multiset, Multiset)> = Vec::new();
    for (r, c) in cells {
        let bl = reverse_bump(&mut t_rows, r, c);
        columns.push((s.rows[r][c].clone(), bl));
    }
    columns.reverse();

    let edges: Vec<(Vec<u32>, Vec<u32>)> = columns
        .iter()
        .filter(|(bu, bl)| !bu.is_empty() || !bl.is_empty())
        .map(|(bu, bl)| (bu.multiplicities(s_syms), bl.multiplicities(s_syms)))
        .collect();
    MultisetDiagram::new(lambda_t, edges)
}

/// dᵗ: swap the primed and unprimed halves of every block.
pub fn transpose_partition(d: &MultisetDiagram) -> MultisetDiagram {
    let edges = d.edges().iter().map(|(i, j)| (j.clone(), i.clone())).collect();
    MultisetDiagram::new(d.lambda().to_vec(), edges)
        .expect("transposing preserves both weight sums")
}

/// Both transpose-symmetry claims at once: rsk(dᵗ) is the swapped pair, and
/// a self-transpose d has as many odd-length shape columns as fixed blocks.
pub fn symmetry_check(d: &MultisetDiagram, n: usize) -> Result<bool, MpaError> {
    let (t, s) = rsk_partition(d, n)?;
    let dt = transpose_partition(d);
    let (tt, st) = rsk_partition(&dt, n)?;
    if (tt, st) != (s.clone(), t.clone()) {
        return Ok(false);
    }
    if dt == *d {
        let odd_columns = t
            .shape
            .conjugate()
            .parts()
            .iter()
            .filter(|&&len| len % 2 == 1)
            .count();
        // empty padding blocks are fixed too
        let fixed_blocks =
            d.edges().iter().filter(|(i, j)| i == j).count() + (n - d.rank());
        return Ok(odd_columns == fixed_blocks);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_ssmt;
    use crate::mpalgebra::enumerate_basis;
    use std::collections::BTreeMap;

    fn ms(v: Vec<u32>) -> Multiset {
        Multiset::new(v)
    }

    fn worked_partition() -> MultisetDiagram {
        // blocks {1,2}, {1',2'}, {1,3,1'}, {2,2'}, {3'} with λ = (2,2,1)
        MultisetDiagram::new(
            vec![2, 2, 1],
            vec![
                (vec![1, 1, 0], vec![0, 0, 0]),
                (vec![0, 0, 0], vec![1, 1, 0]),
                (vec![1, 0, 1], vec![1, 0, 0]),
                (vec![0, 1, 0], vec![0, 1, 0]),
                (vec![0, 0, 0], vec![0, 0, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn biword_example() {
        let bw = to_biword(&worked_partition(), 6).unwrap();
        let expect = vec![
            (ms(vec![]), ms(vec![])),
            (ms(vec![]), ms(vec![3])),
            (ms(vec![]), ms(vec![1, 2])),
            (ms(vec![2]), ms(vec![2])),
            (ms(vec![1, 2]), ms(vec![])),
            (ms(vec![1, 3]), ms(vec![1])),
        ];
        assert_eq!(bw.columns, expect);
        // rank above n is refused
        assert!(to_biword(&worked_partition(), 4).is_err());
    }

    #[test]
    fn biword_trivial() {
        let d = MultisetDiagram::new(vec![1], vec![(vec![1], vec![1])]).unwrap();
        let bw = to_biword(&d, 1).unwrap();
        assert_eq!(bw.columns, vec![(ms(vec![1]), ms(vec![1]))]);
    }

    #[test]
    fn rsk_worked_example() {
        let (t, s) = rsk_partition(&worked_partition(), 6).unwrap();
        assert_eq!(
            t.rows,
            vec![
                vec![ms(vec![]), ms(vec![]), ms(vec![1])],
                vec![ms(vec![2]), ms(vec![1, 2])],
                vec![ms(vec![3])],
            ]
        );
        assert_eq!(
            s.rows,
            vec![
                vec![ms(vec![]), ms(vec![]), ms(vec![])],
                vec![ms(vec![2]), ms(vec![1, 3])],
                vec![ms(vec![1, 2])],
            ]
        );
        assert!(t.is_valid() && s.is_valid());
        assert_eq!(inverse_rsk(&t, &s).unwrap(), worked_partition());
    }

    #[test]
    fn rsk_single_column() {
        let d = MultisetDiagram::new(vec![1], vec![(vec![1], vec![1])]).unwrap();
        let (t, s) = rsk_partition(&d, 1).unwrap();
        assert_eq!(t.rows, vec![vec![ms(vec![1])]]);
        assert_eq!(s.rows, vec![vec![ms(vec![1])]]);
    }

    #[test]
    fn all_singletons_identity_is_one_row() {
        // λ = (1,1), identity partition {{1,1'},{2,2'}}: sorted biword is
        // weakly increasing, so insertion never bumps
        let d = MultisetDiagram::new(
            vec![1, 1],
            vec![(vec![1, 0], vec![1, 0]), (vec![0, 1], vec![0, 1])],
        )
        .unwrap();
        let (t, s) = rsk_partition(&d, 2).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows, s.rows);
    }

    #[test]
    fn roundtrip_and_bijectivity() {
        for (lambda, n) in [(vec![2u32], 4usize), (vec![1, 1], 3), (vec![3], 4)] {
            let diagrams: Vec<MultisetDiagram> = enumerate_basis(&lambda)
                .into_iter()
                .filter(|d| d.rank() <= n)
                .collect();
            let mut images = std::collections::BTreeSet::new();
            for d in &diagrams {
                let (t, s) = rsk_partition(d, n).unwrap();
                assert!(t.is_valid() && s.is_valid());
                assert_eq!(t.shape, s.shape);
                assert_eq!(t.shape.size() as usize, n);
                assert_eq!(inverse_rsk(&t, &s).unwrap(), *d, "roundtrip failed");
                assert!(images.insert((t.rows, s.rows)), "rsk not injective");
            }
            // image = all same-shape SSMT pairs with content λ on both lines
            let content = Multiset::from_multiplicities(&lambda);
            let mut pair_count = 0usize;
            for nu in crate::combinatorics::enumerate_partitions(n as u32) {
                let c = enumerate_ssmt(&nu, &content).len();
                pair_count += c * c;
            }
            assert_eq!(images.len(), pair_count, "λ={lambda:?} n={n}");
        }
    }

    #[test]
    fn shape_count_identity() {
        let lambda = vec![2u32];
        let n = 4usize;
        let mut by_shape: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for d in enumerate_basis(&lambda).iter().filter(|d| d.rank() <= n) {
            let (t, _) = rsk_partition(d, n).unwrap();
            *by_shape.entry(t.shape.parts().to_vec()).or_insert(0) += 1;
        }
        let content = Multiset::from_multiplicities(&lambda);
        for (shape, count) in by_shape {
            let c = enumerate_ssmt(&IntegerPartition::new(shape), &content).len();
            assert_eq!(count, c * c);
        }
    }

    #[test]
    fn transpose_symmetry() {
        for (lambda, n) in [(vec![2u32], 4usize), (vec![1, 1], 4)] {
            for d in enumerate_basis(&lambda).into_iter().filter(|d| d.rank() <= n) {
                assert_eq!(transpose_partition(&transpose_partition(&d)), d);
                let (t, s) = rsk_partition(&d, n).unwrap();
                let (tt, st) = rsk_partition(&transpose_partition(&d), n).unwrap();
                assert_eq!((tt, st), (s, t), "d={d:?}");
                assert!(symmetry_check(&d, n).unwrap());
            }
        }
    }

    #[test]
    fn inverse_rejects_mismatched_pair() {
        let (t, _) = rsk_partition(&worked_partition(), 6).unwrap();
        let bad = MultisetTableau {
            shape: IntegerPartition::new(vec![6]),
            rows: vec![vec![Multiset::empty(); 6]],
        };
        assert!(inverse_rsk(&t, &bad).is_err());
    }
}
