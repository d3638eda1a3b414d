//! Dense linear algebra over ℚ. Vectors are rows; a "span" is a list of rows.

use num_traits::{One, Zero};

use super::poly::Rational;

pub type Row = Vec<Rational>;

/// Reduced row echelon form and pivot columns.
pub fn rref(rows: &[Row]) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Row]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by its rows, over `ncols` unknowns.
pub fn nullspace(rows: &[Row], ncols: usize) -> Vec<Row> {
    let (m, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn span_contains(basis: &[Row], v: &Row) -> bool {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let mut ext = basis.to_vec();
    ext.push(v.clone());
    rank(&ext) == rank(basis)
}

/// Basis (in reduced echelon form) of the intersection of two spans.
pub fn intersect_spans(a: &[Row], b: &[Row], dim: usize) -> Vec<Row> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σλᵢaᵢ − Σμⱼbⱼ = 0; the columns of the system are the vectors.
    let n = a.len() + b.len();
    let system: Vec<Row> = (0..dim)
        .map(|k| {
            a.iter()
                .map(|r| r[k].clone())
                .chain(b.iter().map(|r| -r[k].clone()))
                .collect()
        })
        .collect();
    let sols = nullspace(&system, n);
    let vecs: Vec<Row> = sols
        .iter()
        .map(|s| {
            (0..dim)
                .map(|k| {
                    a.iter()
                        .zip(s)
                        .fold(Rational::zero(), |acc, (r, l)| acc + &r[k] * l)
                })
                .collect()
        })
        .collect();
    rref(&vecs).0
}

/// Canonical basis of a span: the nonzero rows of its reduced echelon form.
pub fn canonical_basis(rows: &[Row]) -> Vec<Row> {
    rref(rows).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn row(v: &[i64]) -> Row {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for r in &m {
            let dot = r.iter().zip(&ns[0]).fold(int(0), |a, (x, y)| a + x * y);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_intersection() {
        let a = vec![row(&[1, 0, 0]), row(&[0, 1, 0])];
        let b = vec![row(&[0, 1, 0]), row(&[0, 0, 1])];
        assert_eq!(intersect_spans(&a, &b, 3), vec![row(&[0, 1, 0])]);
        assert!(span_contains(&a, &row(&[3, -2, 0])));
        assert!(!span_contains(&a, &row(&[0, 0, 1])));
    }
}
