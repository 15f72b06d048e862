//! Dense exact matrices and the row-reduction primitives built on them.
//!
//! A linear map `V -> W` is stored with `rows = dim W` and `cols = dim V`, so
//! it acts on column coordinate vectors from the left.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.field.format_vec(self.row(r)))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { field, rows: n, cols, data }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        let f = self.field;
        let mut out = f.zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, x));
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    if !f.is_zero(b) {
                        out.data[base + j] = f.add(&out.data[base + j], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        Matrix { field: f, rows: self.rows, cols: self.cols, data: f.scale(c, &self.data) }
    }

    /// Row-major flattening, used when a matrix is an unknown in a linear system.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let mut out = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    /// `Σ c_i m_i` for matrices of one shape; `None` when `mats` is empty.
    pub fn combination(coeffs: &[Scalar], mats: &[Matrix]) -> Option<Matrix> {
        let first = mats.first()?;
        let f = first.field;
        let mut data = f.zeros(first.data.len());
        for (c, m) in coeffs.iter().zip(mats) {
            f.axpy(&mut data, c, &m.data);
        }
        Some(Matrix { field: f, rows: first.rows, cols: first.cols, data })
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    /// Reduced row-echelon form and pivot columns. Pivot rows are chosen as the
    /// first nonzero entry at or below the current row, so the result is
    /// deterministic; the RREF itself is unique.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in c..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("nonzero pivot");
            if !f.is_one(&inv) {
                for j in c..cols {
                    let x = &self.data[r * cols + j];
                    if !f.is_zero(x) {
                        self.data[r * cols + j] = f.mul(x, &inv);
                    }
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..cols)
                .filter_map(|j| {
                    let x = self.get(r, j);
                    (!f.is_zero(x)).then(|| (j, x.clone()))
                })
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (j, x) in &pivot_row {
                    let idx = i * cols + j;
                    self.data[idx] = f.sub(&self.data[idx], &f.mul(&factor, x));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = f.zeros(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the null space, one vector per free column (not yet canonicalised).
    pub fn null_space_vectors(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = f.zeros(self.cols);
                v[free] = f.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_examples() {
        let i3 = Matrix::identity(Q, 3);
        assert_eq!(i3.rref(), (i3.clone(), vec![0, 1, 2]));
        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let m = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]), vec![0]));
    }

    #[test]
    fn solve_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>();
        assert_eq!(Matrix::identity(Q, 2).solve(&v(&[3, 5])), Some(v(&[3, 5])));
        assert_eq!(Matrix::from_i64(Q, &[&[1, 1]]).solve(&v(&[2])), Some(v(&[2, 0])));
        assert_eq!(Matrix::from_i64(Q, &[&[1], &[1]]).solve(&v(&[1, 2])), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..4, r * c)
                .prop_map(move |xs| Matrix::from_vec(field, r, c, xs.into_iter().map(|x| field.from_i64(x)).collect()))
        })
    }

    fn check_linear_facts(m: &Matrix, b_seed: i64) {
        let f = m.field();
        let (r, pivots) = m.rref();
        assert_eq!(r.rank(), pivots.len());
        assert_eq!(m.rank(), r.rank());
        let kernel = m.null_space_vectors();
        assert_eq!(kernel.len() + pivots.len(), m.cols());
        for v in &kernel {
            assert!(m.mul_vec(v).iter().all(|x| f.is_zero(x)));
        }
        let b: Vec<Scalar> = (0..m.rows()).map(|i| f.from_i64(b_seed + i as i64)).collect();
        if let Some(x) = m.solve(&b) {
            assert_eq!(m.mul_vec(&x), b);
        }
    }

    proptest! {
        #[test]
        fn rank_solve_kernel_over_q(m in small_matrix(Field::Rationals), s in -3i64..3) {
            check_linear_facts(&m, s);
        }

        #[test]
        fn rank_solve_kernel_over_f5(m in small_matrix(Field::PrimeField { p: 5 }), s in -3i64..3) {
            check_linear_facts(&m, s);
        }
    }
}
