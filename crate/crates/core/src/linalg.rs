//! Kernel of a small square scalar matrix.

use core::array;

use crate::scalar::{Scalar, Tolerance};

pub(crate) type Mat8<S> = [[S; 8]; 8];

/// A nonzero kernel vector of `m`, or `None` when `m` is nonsingular.
///
/// Gauss-Jordan elimination to reduced row echelon form. Exact scalars pivot
/// on the first nonzero entry; floats pivot on the largest entry of the
/// column and treat entries that are zero at the scale of the matrix as zero.
/// The vector returned belongs to the first free column, normalized so its
/// first nonzero coordinate is 1 (exact) or its largest coordinate has
/// magnitude 1 (float).
pub(crate) fn kernel_vector<S: Scalar>(m: &Mat8<S>, tol: &Tolerance) -> Option<[S; 8]> {
    let scale = m
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x.magnitude())
        .fold(0.0, f64::max);
    let mut a: Mat8<S> = m.clone();
    let mut pivot_cols: [Option<usize>; 8] = [None; 8]; // row -> pivot column
    let mut is_pivot = [false; 8];
    let mut row = 0;
    for col in 0..8 {
        if row == 8 {
            break;
        }
        let pick = if S::EXACT {
            (row..8).find(|&r| !a[r][col].is_zero())
        } else {
            (row..8)
                .max_by(|&x, &y| {
                    a[x][col]
                        .magnitude()
                        .partial_cmp(&a[y][col].magnitude())
                        .unwrap_or(core::cmp::Ordering::Equal)
                })
                .filter(|&r| !a[r][col].is_negligible(scale, tol))
        };
        let Some(p) = pick else { continue };
        a.swap(row, p);
        let inv = S::one() / a[row][col].clone();
        for c in 0..8 {
            a[row][c] = a[row][c].clone() * inv.clone();
        }
        for r in 0..8 {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..8 {
                    a[r][c] = a[r][c].clone() - f.clone() * a[row][c].clone();
                }
            }
        }
        pivot_cols[row] = Some(col);
        is_pivot[col] = true;
        row += 1;
    }
    let free = (0..8).find(|&c| !is_pivot[c])?;
    let mut v: [S; 8] = array::from_fn(|_| S::zero());
    v[free] = S::one();
    for (r, pc) in pivot_cols.iter().enumerate() {
        if let Some(pc) = pc {
            v[*pc] = -a[r][free].clone();
        }
    }
    if S::EXACT {
        let first = v.iter().find(|x| !x.is_zero())?.clone();
        Some(v.map(|x| x / first.clone()))
    } else {
        let big = v
            .iter()
            .max_by(|x, y| {
                x.magnitude()
                    .partial_cmp(&y.magnitude())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })?
            .clone();
        Some(v.map(|x| x / big.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn identity<S: Scalar>() -> Mat8<S> {
        array::from_fn(|r| array::from_fn(|c| if r == c { S::one() } else { S::zero() }))
    }

    #[test]
    fn nonsingular_has_no_kernel() {
        let tol = Tolerance::default();
        assert!(kernel_vector(&identity::<Rational>(), &tol).is_none());
        assert!(kernel_vector(&identity::<f64>(), &tol).is_none());
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let tol = Tolerance::default();
        let mut m = identity::<Rational>();
        // column 3 = 2·column 1 - column 0
        for r in 0..8 {
            m[r][3] = Rational::from_i64(2) * m[r][1].clone() - m[r][0].clone();
        }
        let v = kernel_vector(&m, &tol).unwrap();
        let expect = [-1, 2, 0, -1, 0, 0, 0, 0].map(|x| Rational::from_ratio(x, -1));
        assert_eq!(v, expect);
        for row in &m {
            let dot = row
                .iter()
                .zip(v.iter())
                .fold(Rational::from_i64(0), |acc, (a, b)| acc + a.clone() * b.clone());
            assert_eq!(dot, Rational::from_i64(0));
        }
    }

    #[test]
    fn zero_matrix_kernel_is_first_basis_vector() {
        let z: Mat8<Rational> = array::from_fn(|_| array::from_fn(|_| Rational::from_i64(0)));
        let v = kernel_vector(&z, &Tolerance::default()).unwrap();
        assert_eq!(v[0], Rational::from_i64(1));
        assert!(v[1..].iter().all(|x| *x == Rational::from_i64(0)));
    }
}
