//! Square matrices over the Laurent ring and their exact determinants.

use std::ops::Mul;

use super::laurent::LaurentPoly;

/// A square matrix of Laurent polynomials, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let mut entries = vec![LaurentPoly::zero(); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = LaurentPoly::one();
        }
        PolyMatrix { dim, entries }
    }

    /// Builds a matrix from its rows; panics unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(
            dim >= 1 && rows.iter().all(|r| r.len() == dim),
            "rows must form a square"
        );
        PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for k in 0..self.dim {
            let v = m.get(k, k) - &LaurentPoly::one();
            m.set(k, k, v);
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact division.
    pub fn det(&self) -> LaurentPoly {
        let n = self.dim;
        let mut a = self.rows();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotients are exact over an integral domain");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Determinant by Laplace expansion along the first row. Exponential cost;
    /// intended for small matrices and as an independent cross-check.
    pub fn det_cofactor(&self) -> LaurentPoly {
        let rows = self.rows();
        let cols: Vec<usize> = (0..self.dim).collect();
        laplace(&rows, 0, &cols)
    }
}

fn laplace(rows: &[Vec<LaurentPoly>], row: usize, cols: &[usize]) -> LaurentPoly {
    if cols.len() == 1 {
        return rows[row][cols[0]].clone();
    }
    let mut total = LaurentPoly::zero();
    for (k, &c) in cols.iter().enumerate() {
        if rows[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &rows[row][c] * &laplace(rows, row + 1, &rest);
        total = if k % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        PolyMatrix { dim: n, entries }
    }
}

/// Exact determinant of `m`.
pub fn poly_det(m: &PolyMatrix) -> LaurentPoly {
    m.det()
}
