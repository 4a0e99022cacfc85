//! Exact rational Gaussian elimination: rank, linear solve, inversion.

use super::Rat;
use num_traits::Zero;

/// Row-reduce in place, returning the rank. `width` columns participate in
/// pivoting; any extra columns are carried along (augmented systems).
fn eliminate(rows: &mut Vec<Vec<Rat>>, width: usize) -> usize {
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = {
            let p = &rows[rank][col];
            Rat::new(p.denom().clone(), p.numer().clone())
        };
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..rows[r].len() {
                    let t = &f * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &t;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank_rat(matrix: &[Vec<Rat>]) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let width = matrix[0].len();
    let mut rows: Vec<Vec<Rat>> = matrix.to_vec();
    eliminate(&mut rows, width)
}

/// One solution of `A x = b` if the system is consistent.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 {
        return Some(vec![]);
    }
    let n = a[0].len();
    assert_eq!(b.len(), m);
    let mut rows: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    eliminate(&mut rows, n);
    let mut x = vec![Rat::zero(); n];
    for row in &rows {
        let lead = (0..n).find(|&c| !row[c].is_zero());
        match lead {
            Some(c) => x[c] = row[n].clone(),
            None => {
                if !row[n].is_zero() {
                    return None; // inconsistent
                }
            }
        }
    }
    Some(x)
}

pub fn invert_rat(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    if n == 0 {
        return Some(vec![]);
    }
    assert!(a.iter().all(|r| r.len() == n));
    let mut rows: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::from_integer(1.into()) } else { Rat::zero() });
            }
            r
        })
        .collect();
    if eliminate(&mut rows, n) < n {
        return None;
    }
    // rows are fully reduced; reorder by pivot column
    let mut out = vec![vec![Rat::zero(); n]; n];
    for row in &rows {
        let c = (0..n).find(|&c| !row[c].is_zero()).expect("full rank");
        out[c] = row[n..].to_vec();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rat {
        Rat::from_integer(x.into())
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(rank_rat(&a), 1);
        let b = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        assert_eq!(rank_rat(&b), 2);
        let x = solve_rat(&b, &[r(5), r(11)]).unwrap();
        assert_eq!(x, vec![r(1), r(2)]);
        assert!(solve_rat(&a, &[r(1), r(3)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let b = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        let inv = invert_rat(&b).unwrap();
        // b * inv = id
        for i in 0..2 {
            for j in 0..2 {
                let mut s = Rat::zero();
                for k in 0..2 {
                    s = &s + &(&b[i][k] * &inv[k][j]);
                }
                assert_eq!(s, if i == j { r(1) } else { r(0) });
            }
        }
        let singular = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(invert_rat(&singular).is_none());
    }
}
