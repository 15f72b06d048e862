//! Canonical subspaces of `k^n`.
//!
//! A subspace is stored by its reduced row-echelon basis, which makes equality
//! a bitwise comparison.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec());
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient: m.cols(), basis: Matrix::from_rows(m.field(), m.cols(), rows), pivots }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    /// Reduces `v` modulo this subspace; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&w[p]) {
                let c = f.neg(&w[p]);
                f.axpy(&mut w, &c, self.basis.row(r));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    pub fn contains_all(&self, vs: &[Vec<Scalar>]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut v = f.zeros(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            f.axpy(&mut v, c, self.basis.row(r));
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Subspace::span(self.field(), self.ambient, &rows))
    }

    /// Zassenhaus: row-reduce `[U | U; W | 0]`; rows with vanishing left half span the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        let n = self.ambient;
        let mut rows = Vec::new();
        for u in self.basis_vectors() {
            let mut r = u.clone();
            r.extend(u);
            rows.push(r);
        }
        for w in other.basis_vectors() {
            let mut r = w;
            r.extend(f.zeros(n));
            rows.push(r);
        }
        let (red, pivots) = Matrix::from_rows(f, 2 * n, rows).rref();
        let inter: Vec<Vec<Scalar>> = pivots.iter().enumerate().filter(|(_, &p)| p >= n).map(|(r, _)| red.row(r)[n..].to_vec()).collect();
        Ok(Subspace::span(f, n, &inter))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.contains_all(&self.basis_vectors()))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Images of this subspace's basis under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let imgs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(self.field(), map.rows(), &imgs)
    }

    /// Deterministic representatives of `self / sub`. For the full ambient space
    /// these are the unit vectors at the non-pivot columns of `sub`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.check(sub)?;
        if !sub.is_subspace_of(self)? {
            return Err(Error::Dimension("quotient by a subspace that is not contained".into()));
        }
        let reduced: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| sub.reduce(v)).collect();
        Ok(Subspace::span(self.field(), self.ambient, &reduced).basis_vectors())
    }

    /// For the full ambient space: the projection `k^n -> k^n / self` in the
    /// coordinates of [`Subspace::complement_columns`], and its section.
    pub fn quotient_maps(&self) -> (Matrix, Matrix) {
        let f = self.field();
        let free = self.complement_columns();
        let q = free.len();
        let mut slot = vec![usize::MAX; self.ambient];
        for (k, &c) in free.iter().enumerate() {
            slot[c] = k;
        }
        let mut proj = Matrix::zeros(f, q, self.ambient);
        for (k, &c) in free.iter().enumerate() {
            proj.set(k, c, f.one());
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            let row = self.basis.row(r);
            for (k, &c) in free.iter().enumerate() {
                if !f.is_zero(&row[c]) {
                    proj.set(k, p, f.neg(&row[c]));
                }
            }
        }
        let mut section = Matrix::zeros(f, self.ambient, q);
        for (k, &c) in free.iter().enumerate() {
            section.set(c, k, f.one());
        }
        (proj, section)
    }

    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Canonical null space of `a`.
pub fn kernel(a: &Matrix) -> Subspace {
    Subspace::span(a.field(), a.cols(), &a.null_space_vectors())
}

/// Row-reduced echelon form with its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    m.rref()
}

/// A solution of `a x = b` with free variables zeroed.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    a.solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(Q, 3)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(Q, 2, 3)), Subspace::full(Q, 3));
        let k = kernel(&Matrix::from_i64(Q, &[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&v(&[1, -1, 0])));
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::span(Q, 3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(Q, 3)).unwrap(), a);
        let x = Subspace::span(Q, 2, &[v(&[1, 0])]);
        let y = Subspace::span(Q, 2, &[v(&[0, 1])]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(Q, 2));
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        let e1 = Subspace::span(Q, 3, &[v(&[1, 0, 0])]);
        let reps = Subspace::full(Q, 3).quotient_basis(&e1).unwrap();
        assert_eq!(reps, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(x.sum(&Subspace::zero(Q, 3)).is_err());
        let plane = Subspace::span(Q, 3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert_eq!(plane.intersect(&a).unwrap().dim(), 1);
        assert!(plane.intersect(&a).unwrap().contains(&v(&[0, 1, 1])));
    }

    #[test]
    fn quotient_maps_split() {
        let w = Subspace::span(Q, 4, &[v(&[1, 1, 0, 0]), v(&[0, 0, 1, -1])]);
        let (p, s) = w.quotient_maps();
        assert_eq!(p.mul(&s), Matrix::identity(Q, 2));
        for b in w.basis_vectors() {
            assert!(p.mul_vec(&b).iter().all(|x| x == &Q.zero()));
        }
    }

    proptest! {
        #[test]
        fn canonical_under_change_of_spanning_set(
            xs in proptest::collection::vec(-3i64..4, 12),
            mix in proptest::collection::vec(-2i64..3, 9),
        ) {
            let f = Field::PrimeField { p: 5 };
            let vecs: Vec<Vec<Scalar>> = xs.chunks(4).map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let a = Subspace::span(f, 4, &vecs);
            let mut mixed: Vec<Vec<Scalar>> = (0..3).map(|i| {
                let mut w = f.zeros(4);
                for j in 0..3 {
                    f.axpy(&mut w, &f.from_i64(mix[i * 3 + j]), &vecs[j]);
                }
                w
            }).collect();
            mixed.extend(vecs.iter().cloned());
            mixed.reverse();
            let b = Subspace::span(f, 4, &mixed);
            prop_assert_eq!(a.basis(), b.basis());
        }
    }
}
