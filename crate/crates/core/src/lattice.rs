// Integer lattice helpers: saturation tests and integral kernels.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type Mat = Vec<Vec<BigInt>>;

/// Product of the non-zero diagonal entries after unimodular diagonalization,
/// i.e. the gcd of the maximal non-vanishing minors.
fn determinantal_divisor(rows: &[Vec<BigInt>]) -> BigInt {
    let mut m: Mat = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prod = BigInt::one();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest non-zero entry in the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            if !m[i][t].is_zero() {
                let f = m[i][t].div_floor(&m[t][t]);
                for j in t..ncols {
                    let v = &f * &m[t][j];
                    m[i][j] -= v;
                }
                clean &= m[i][t].is_zero();
            }
        }
        for j in t + 1..ncols {
            if !m[t][j].is_zero() {
                let f = m[t][j].div_floor(&m[t][t]);
                for i in t..nrows {
                    let v = &f * &m[i][t];
                    m[i][j] -= v;
                }
                clean &= m[t][j].is_zero();
            }
        }
        if clean {
            prod *= m[t][t].abs();
            t += 1;
        }
    }
    prod
}

/// Whether the lattice spanned by the integer `rows` equals its saturation
/// `span_Q(rows) ∩ Z^n`.
pub fn is_saturated(rows: &[Vec<BigInt>]) -> bool {
    determinantal_divisor(rows).is_one()
}

/// A basis of the integer kernel `{z ∈ Z^c : m z = 0}`.
pub fn integer_kernel(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    // Column operations on [m; I] bring m into column echelon form; the
    // identity block records the unimodular transform.
    let nrows = m.len();
    let mut cols: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut c: Vec<BigInt> = m.iter().map(|row| row[j].clone()).collect();
            c.extend((0..ncols).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            c
        })
        .collect();
    let mut next = 0;
    for r in 0..nrows {
        loop {
            let nz: Vec<usize> = (next..ncols).filter(|&j| !cols[j][r].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    cols.swap(next, j);
                    next += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| cols[j][r].abs()).unwrap();
            for &j in &nz {
                if j != p {
                    let f = cols[j][r].div_floor(&cols[p][r]);
                    let pc = cols[p].clone();
                    for (x, y) in cols[j].iter_mut().zip(&pc) {
                        *x -= &f * y;
                    }
                }
            }
        }
    }
    cols[next..].iter().map(|c| c[nrows..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn saturation() {
        assert!(is_saturated(&[b(&[1, 0]), b(&[0, 1])]));
        assert!(!is_saturated(&[b(&[2, 0]), b(&[0, 1])]));
        assert!(is_saturated(&[b(&[2, 3])]));
        assert!(!is_saturated(&[b(&[2, 4])]));
        assert!(is_saturated(&[b(&[2, 1]), b(&[1, 1])]));
    }

    #[test]
    fn kernel_is_integral_and_complete() {
        let m = vec![b(&[2, 4, 6])];
        let k = integer_kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = v.iter().zip(&m[0]).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
        assert!(is_saturated(&k));
    }
}
