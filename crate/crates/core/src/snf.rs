//! Smith normal form over the integers and solvability of `A x = b`.

pub type Matrix = Vec<Vec<i64>>;

/// `left · a · right = diag(diagonal)` with unimodular `left`, `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub diagonal: Vec<i64>,
    pub left: Matrix,
    pub right: Matrix,
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

fn row_op(m: &mut Matrix, target: usize, source: usize, q: i64) {
    for j in 0..m[0].len() {
        m[target][j] -= q * m[source][j];
    }
}

fn col_op(m: &mut Matrix, target: usize, source: usize, q: i64) {
    for row in m.iter_mut() {
        row[target] -= q * row[source];
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith(a: &[Vec<i64>]) -> Smith {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut d: Matrix = a.to_vec();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the remaining block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| (d[i][j].abs(), i, j));
            let Some((pi, pj)) = pivot else {
                break;
            };
            d.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut right, t, pj);
            let p = d[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(p);
                row_op(&mut d, i, t, q);
                row_op(&mut left, i, t, q);
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(p);
                col_op(&mut d, j, t, q);
                col_op(&mut right, j, t, q);
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold a bad row into the pivot row and go again
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % p != 0));
            match bad {
                Some(i) => {
                    row_op(&mut d, t, i, -1);
                    row_op(&mut left, t, i, -1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in left[t].iter_mut() {
                *x = -*x;
            }
        }
        diagonal.push(d[t][t]);
    }
    Smith { diagonal, left, right }
}

pub fn mat_vec(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

/// An integer solution of `a x = b`, if one exists.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let s = smith(a);
    let c = mat_vec(&s.left, b);
    let mut y = vec![0; cols];
    for i in 0..rows {
        let d = s.diagonal.get(i).copied().unwrap_or(0);
        if d == 0 {
            if c[i] != 0 {
                return None;
            }
        } else if c[i] % d != 0 {
            return None;
        } else {
            y[i] = c[i] / d;
        }
    }
    Some(mat_vec(&s.right, &y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Matrix {
        let inner = b.len();
        let cols = if inner == 0 { 0 } else { b[0].len() };
        a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
    }

    #[test]
    fn one_by_one() {
        assert_eq!(solve(&[vec![-2]], &[1]), None);
        assert_eq!(solve(&[vec![-2]], &[4]), Some(vec![-2]));
        assert_eq!(solve(&[vec![0]], &[0]), Some(vec![0]));
    }

    #[test]
    fn swap_minus_identity() {
        // ψ swapping the two coordinates of ℤ²
        let a = vec![vec![-1, 1], vec![1, -1]];
        let x = solve(&a, &[1, -1]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![1, -1]);
        assert_eq!(solve(&a, &[1, 0]), None);
    }

    #[test]
    fn known_invariants() {
        let s = smith(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(s.diagonal, vec![2, 6, 12]);
    }

    proptest! {
        #[test]
        fn decomposition_holds(a in prop::collection::vec(prop::collection::vec(-6i64..6, 3), 1..4)) {
            let s = smith(&a);
            let d = mat_mul(&mat_mul(&s.left, &a), &s.right);
            for (i, row) in d.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    let expected = if i == j { s.diagonal.get(i).copied().unwrap_or(0) } else { 0 };
                    prop_assert_eq!(x, expected);
                }
            }
            for w in s.diagonal.windows(2) {
                prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
            }
        }

        #[test]
        fn solutions_check_and_box_agrees(a in prop::collection::vec(prop::collection::vec(-3i64..3, 2), 2),
                                          b in prop::collection::vec(-4i64..4, 2)) {
            match solve(&a, &b) {
                Some(x) => prop_assert_eq!(mat_vec(&a, &x), b),
                None => {
                    for x0 in -10..=10 {
                        for x1 in -10..=10 {
                            prop_assert_ne!(mat_vec(&a, &[x0, x1]), b.clone());
                        }
                    }
                }
            }
        }
    }
}
