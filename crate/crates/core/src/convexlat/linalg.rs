//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::lattice::{qi, LatVec, QVec, Q};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::from_integer(1.into()) / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
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

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// A basis of `{x : row · x = 0 for every row}`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (m, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = qi(1);
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn lat_rows(vs: &[LatVec]) -> Vec<Vec<Q>> {
    vs.iter().map(|v| v.0.iter().map(|&c| qi(c)).collect()).collect()
}

/// Primitive integer vector on the ray through a rational vector.
pub fn primitive_of(v: &[Q]) -> LatVec {
    QVec(v.to_vec()).ray_direction()
}

/// Integer basis of the orthogonal complement of the span of `vs`.
pub fn orthogonal_complement(vs: &[LatVec], n: usize) -> Vec<LatVec> {
    nullspace(&lat_rows(vs), n).iter().map(|v| primitive_of(v)).collect()
}
