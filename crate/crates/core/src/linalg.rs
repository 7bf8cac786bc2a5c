//! Exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Q>>`; the sizes here never exceed the
//! rank of the root system (at most a few dozen), so plain Gaussian
//! elimination is all that is needed.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zeros(n: usize) -> Vec<Q> {
    (0..n).map(|_| Q::zero()).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

/// `a*x - b*y` for scalars `a, b`.
pub fn lincomb(a: &Q, x: &[Q], b: &Q, y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(u, v)| a * u - b * v).collect()
}

pub fn from_ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Returns the integer coordinates of `v`, or `None` if some coordinate is
/// not an integer or does not fit into `i64`.
pub fn to_ints(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

/// Rescales `v` by a positive rational so that it becomes a primitive integer
/// vector. The zero vector is returned unchanged.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Reduced row echelon form. Returns the non-zero rows and the pivot columns.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
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
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// A basis (in reduced echelon form) of the row space.
pub fn row_basis(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    rref(rows, ncols).0
}

/// Basis of `{x : row . x = 0 for every row}`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (m, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = zeros(ncols);
        v[free] = Q::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[Vec<Q>], b: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut perp = nullspace(a, n);
    perp.extend(nullspace(b, n));
    nullspace(&perp, n)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Q>], v: &[Q], n: usize) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank(basis, n) == rank(&rows, n)
}

pub fn transpose(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Q], m: &[Vec<Q>]) -> Vec<Q> {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| v.iter().zip(m).fold(Q::zero(), |acc, (x, row)| acc + x * &row[j]))
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    a.iter().map(|row| vec_mat(row, b)).collect()
}

/// Exact inverse of a square matrix, `None` when singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit(n, i));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Orthogonal projection (standard dot product) of `v` onto the orthogonal
/// complement of `span(basis)`.
pub fn project_away(v: &[Q], basis: &[Vec<Q>]) -> Vec<Q> {
    if basis.is_empty() {
        return v.to_vec();
    }
    // Gram-Schmidt without normalization keeps everything rational.
    let mut ortho: Vec<Vec<Q>> = Vec::new();
    for b in basis {
        let mut w = b.clone();
        for o in &ortho {
            let c = dot(&w, o) / dot(o, o);
            w = sub(&w, &scale(o, &c));
        }
        if !is_zero_vec(&w) {
            ortho.push(w);
        }
    }
    let mut out = v.to_vec();
    for o in &ortho {
        let c = dot(&out, o) / dot(o, o);
        out = sub(&out, &scale(o, &c));
    }
    out
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inverse_of_a2_cartan() {
        let a = vec![from_ints(&[2, -1]), from_ints(&[-1, 2])];
        let inv = invert(&a).unwrap();
        assert_eq!(inv[0], vec![qfrac(2, 3), qfrac(1, 3)]);
        assert_eq!(mat_mul(&a, &inv), vec![unit(2, 0), unit(2, 1)]);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = vec![from_ints(&[1, 2]), from_ints(&[2, 4])];
        assert!(invert(&a).is_none());
        assert_eq!(rank(&a, 2), 1);
        assert_eq!(nullspace(&a, 2), vec![from_ints(&[-2, 1])]);
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive(&[qfrac(1, 2), qfrac(-3, 4)]), from_ints(&[2, -3]));
        assert_eq!(primitive(&from_ints(&[0, 6, 9])), from_ints(&[0, 2, 3]));
    }

    #[test]
    fn subspace_intersection() {
        let a = vec![from_ints(&[1, 0, 0]), from_ints(&[0, 1, 0])];
        let b = vec![from_ints(&[0, 1, 0]), from_ints(&[0, 0, 1])];
        let i = intersect(&a, &b, 3);
        assert_eq!(i.len(), 1);
        assert!(in_span(&i, &from_ints(&[0, 5, 0]), 3));
    }

    #[test]
    fn projection_is_orthogonal() {
        let p = project_away(&from_ints(&[1, 1]), &[from_ints(&[1, 0])]);
        assert_eq!(p, from_ints(&[0, 1]));
    }
}
