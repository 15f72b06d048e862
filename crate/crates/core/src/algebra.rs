//! Finite-dimensional unital algebras by structure constants, extensions and
//! subalgebras.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groups::{Group, Groupoid};
use crate::matrix::Matrix;
use crate::report::{tuples, CheckSet};
use crate::subspace::{kernel, Subspace};

/// A unital algebra with basis `e_0..e_{n-1}`; `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    field: Field,
    dim: usize,
    /// `products[i * dim + j]` holds the coordinates of `e_i e_j`.
    products: Vec<Vec<Scalar>>,
    unit: Vec<Scalar>,
    generators: Option<Vec<usize>>,
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.products == other.products && self.unit == other.unit
    }
}

impl Eq for StructureAlgebra {}

/// A failed associativity or unit identity, by basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDefect {
    pub identity: &'static str,
    pub indices: Vec<usize>,
}

impl StructureAlgebra {
    /// Builds an algebra without checking the axioms; see [`StructureAlgebra::validate`].
    pub fn new(field: Field, dim: usize, products: Vec<Vec<Scalar>>, unit: Vec<Scalar>) -> Result<Self> {
        if products.len() != dim * dim || products.iter().any(|p| p.len() != dim) || unit.len() != dim {
            return Err(Error::Dimension(format!("structure constants do not fit dimension {dim}")));
        }
        Ok(StructureAlgebra { field, dim, products, unit, generators: None })
    }

    /// Builds an algebra from sparse triples `(i, j, k, c)`: `e_i e_j` gains `c e_k`.
    pub fn from_triples(field: Field, dim: usize, unit: Vec<Scalar>, triples: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut products = vec![field.zeros(dim); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Dimension(format!("index ({i},{j},{k}) out of range for dimension {dim}")));
            }
            let slot = &mut products[i * dim + j][*k];
            *slot = field.add(slot, c);
        }
        Self::new(field, dim, products, unit)
    }

    /// Declares a set of basis elements that generates the algebra. Used only
    /// to shrink equivariance systems; every result is re-verified on the full basis.
    pub fn with_generators(mut self, generators: Vec<usize>) -> Self {
        self.generators = Some(generators);
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim, i)
    }

    /// Sparse triples with nonzero coefficient, in index order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !self.field.is_zero(c) {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::Dimension(format!("vectors of length {} and {} in an algebra of dimension {}", x.len(), y.len(), self.dim)));
        }
        Ok(self.mul(x, y))
    }

    /// Product of two coordinate vectors; panics on length mismatch.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert!(x.len() == self.dim && y.len() == self.dim, "length mismatch in algebra product");
        let f = self.field;
        let mut out = f.zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                f.axpy(&mut out, &f.mul(xi, yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn mul3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.mul(&self.mul(x, y), z)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Every failed associativity or unit identity. Empty means the algebra is valid.
    pub fn validate(&self) -> Vec<AlgebraDefect> {
        let f = self.field;
        let mut defects = Vec::new();
        for i in 0..self.dim {
            let ei = self.basis_vector(i);
            if self.mul(&self.unit, &ei) != ei {
                defects.push(AlgebraDefect { identity: "left-unit", indices: vec![i] });
            }
            if self.mul(&ei, &self.unit) != ei {
                defects.push(AlgebraDefect { identity: "right-unit", indices: vec![i] });
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let mut lhs = f.zeros(self.dim);
                    for (m, c) in ij.iter().enumerate() {
                        if !f.is_zero(c) {
                            f.axpy(&mut lhs, c, self.basis_product(m, k));
                        }
                    }
                    let mut rhs = f.zeros(self.dim);
                    for (m, c) in self.basis_product(j, k).iter().enumerate() {
                        if !f.is_zero(c) {
                            f.axpy(&mut rhs, c, self.basis_product(i, m));
                        }
                    }
                    if lhs != rhs {
                        defects.push(AlgebraDefect { identity: "associativity", indices: vec![i, j, k] });
                    }
                }
            }
        }
        defects
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The validation result as a check set (`associativity`, `unit`).
    pub fn checks(&self) -> CheckSet {
        let mut cs = CheckSet::new();
        let n = self.dim;
        cs.compare(self.field, "associativity", tuples(n, 3), |t| {
            let (x, y, z) = (self.basis_vector(t[0]), self.basis_vector(t[1]), self.basis_vector(t[2]));
            (self.mul3(&x, &y, &z), self.mul(&x, &self.mul(&y, &z)))
        });
        cs.compare(self.field, "unit", tuples(n, 1), |t| {
            let x = self.basis_vector(t[0]);
            let mut both = self.mul(&self.unit, &x);
            both.extend(self.mul(&x, &self.unit));
            let mut twice = x.clone();
            twice.extend(x);
            (both, twice)
        });
        cs
    }

    pub fn opposite(&self) -> StructureAlgebra {
        let n = self.dim;
        let products = (0..n * n).map(|ij| self.products[(ij % n) * n + ij / n].clone()).collect();
        StructureAlgebra { field: self.field, dim: n, products, unit: self.unit.clone(), generators: self.generators.clone() }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// The same structure constants read in another field (integral or
    /// invertible-denominator constants only).
    pub fn to_field(&self, target: Field) -> Result<StructureAlgebra> {
        if target == self.field {
            return Ok(self.clone());
        }
        if self.field != Field::Rationals {
            return Err(Error::Input("only rational algebras can be moved to another field".into()));
        }
        let conv = |v: &Vec<Scalar>| v.iter().map(|x| target.import(x)).collect::<Result<Vec<_>>>();
        let products = self.products.iter().map(conv).collect::<Result<Vec<_>>>()?;
        Ok(StructureAlgebra { field: target, dim: self.dim, products, unit: conv(&self.unit)?, generators: self.generators.clone() })
    }

    /// Basis indices generating the algebra: the declared set when present,
    /// otherwise a greedy choice in index order.
    pub fn generators(&self) -> Vec<usize> {
        if let Some(g) = &self.generators {
            return g.clone();
        }
        let mut gens = Vec::new();
        let mut span = self.generated(&[]);
        for i in 0..self.dim {
            let ei = self.basis_vector(i);
            if !span.contains(&ei) {
                gens.push(i);
                let vs: Vec<Vec<Scalar>> = gens.iter().map(|&g| self.basis_vector(g)).collect();
                span = self.generated(&vs);
            }
        }
        gens
    }

    /// The subalgebra generated by the given elements.
    pub fn generated(&self, elements: &[Vec<Scalar>]) -> Subspace {
        let mut vs = vec![self.unit.clone()];
        vs.extend(elements.iter().cloned());
        let mut span = Subspace::span(self.field, self.dim, &vs);
        loop {
            let mut next = span.basis_vectors();
            for w in span.basis_vectors() {
                for x in elements {
                    next.push(self.mul(&w, x));
                }
            }
            let grown = Subspace::span(self.field, self.dim, &next);
            if grown.dim() == span.dim() {
                return span;
            }
            span = grown;
        }
    }

    /// Sum of two elements; convenience over the field helpers.
    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.field.add_vec(x, y)
    }

    pub fn zero(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim)
    }
}

/// Group algebra with basis the group elements in table order.
pub fn group_algebra(field: Field, group: &Group) -> StructureAlgebra {
    let n = group.order();
    let products = (0..n * n).map(|ij| field.unit_vector(n, group.mul(ij / n, ij % n))).collect();
    let unit = field.unit_vector(n, group.identity());
    StructureAlgebra { field, dim: n, products, unit, generators: Some(group.generators()) }
}

/// `M_n(k)` with matrix units `e_ij` at index `i * n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> StructureAlgebra {
    groupoid_algebra(field, &Groupoid::pair(n))
}

/// Groupoid algebra: arrows as basis, non-composable products vanish.
pub fn groupoid_algebra(field: Field, g: &Groupoid) -> StructureAlgebra {
    let n = g.arrows.len();
    let products = (0..n * n)
        .map(|ij| match g.compose[ij / n][ij % n] {
            Some(c) => field.unit_vector(n, c),
            None => field.zeros(n),
        })
        .collect();
    let mut unit = field.zeros(n);
    for x in 0..g.objects {
        unit[g.identity_at(x).expect("validated groupoid")] = field.one();
    }
    StructureAlgebra { field, dim: n, products, unit, generators: None }
}

/// A unital subalgebra, closed under multiplication by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    space: Subspace,
}

impl Subalgebra {
    pub fn new(ambient: &StructureAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient() != ambient.dim() {
            return Err(Error::Dimension("subspace lives in a different ambient space".into()));
        }
        if !space.contains(ambient.unit()) {
            return Err(Error::InvalidAlgebra("subspace does not contain the unit".into()));
        }
        let basis = space.basis_vectors();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if !space.contains(&ambient.mul(x, y)) {
                    return Err(Error::InvalidAlgebra(format!("subspace not closed: product of basis vectors {i} and {j}")));
                }
            }
        }
        Ok(Subalgebra { space })
    }

    pub fn generated_by(ambient: &StructureAlgebra, elements: &[Vec<Scalar>]) -> Self {
        Subalgebra { space: ambient.generated(elements) }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.space.contains(x)
    }

    /// The subalgebra as an algebra in its echelon basis, with the inclusion
    /// map (ambient dim × sub dim).
    pub fn to_algebra(&self, ambient: &StructureAlgebra) -> (StructureAlgebra, Matrix) {
        let f = ambient.field();
        let basis = self.space.basis_vectors();
        let d = basis.len();
        let coords = |v: &[Scalar]| self.space.coordinates(v).expect("closed subalgebra");
        let mut products = Vec::with_capacity(d * d);
        for x in &basis {
            for y in &basis {
                products.push(coords(&ambient.mul(x, y)));
            }
        }
        let alg = StructureAlgebra { field: f, dim: d, products, unit: coords(ambient.unit()), generators: None };
        (alg, Matrix::from_columns(f, ambient.dim(), &basis))
    }
}

/// A unital injective algebra map `ι: B -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    b: StructureAlgebra,
    a: StructureAlgebra,
    /// `dim A × dim B`; column `i` is `ι(e_i)`.
    iota: Matrix,
}

impl Extension {
    pub fn new(b: StructureAlgebra, a: StructureAlgebra, iota: Matrix) -> Result<Self> {
        if b.field() != a.field() || iota.field() != a.field() {
            return Err(Error::InvalidExtension("algebras over different fields".into()));
        }
        if iota.rows() != a.dim() || iota.cols() != b.dim() {
            return Err(Error::Dimension(format!("iota is {}x{}, expected {}x{}", iota.rows(), iota.cols(), a.dim(), b.dim())));
        }
        for (name, alg) in [("B", &b), ("A", &a)] {
            if let Some(d) = alg.validate().first() {
                return Err(Error::InvalidAlgebra(format!("{name} fails {} at {:?}", d.identity, d.indices)));
            }
        }
        if iota.rank() != b.dim() {
            return Err(Error::InvalidExtension("iota is not injective".into()));
        }
        if iota.mul_vec(b.unit()) != a.unit() {
            return Err(Error::InvalidExtension("iota is not unital".into()));
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let lhs = iota.mul_vec(b.basis_product(i, j));
                let rhs = a.mul(&iota.column(i), &iota.column(j));
                if lhs != rhs {
                    return Err(Error::InvalidExtension(format!("iota is not multiplicative at ({i},{j})")));
                }
            }
        }
        Ok(Extension { b, a, iota })
    }

    /// `A` over itself.
    pub fn trivial(a: StructureAlgebra) -> Result<Self> {
        let iota = Matrix::identity(a.field(), a.dim());
        Self::new(a.clone(), a, iota)
    }

    /// `A` over the scalars `k·1`.
    pub fn over_scalars(a: StructureAlgebra) -> Result<Self> {
        let f = a.field();
        let k = StructureAlgebra::new(f, 1, vec![vec![f.one()]], vec![f.one()])?;
        let iota = Matrix::from_columns(f, a.dim(), &[a.unit().to_vec()]);
        Self::new(k, a, iota)
    }

    /// `A` over a closed subalgebra, in the subalgebra's echelon basis.
    pub fn from_subalgebra(a: StructureAlgebra, sub: &Subalgebra) -> Result<Self> {
        let (b, iota) = sub.to_algebra(&a);
        Self::new(b, a, iota)
    }

    pub fn b(&self) -> &StructureAlgebra {
        &self.b
    }

    pub fn a(&self) -> &StructureAlgebra {
        &self.a
    }

    pub fn iota(&self) -> &Matrix {
        &self.iota
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// `ι(e_i)` in `A`.
    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.iota.column(i)
    }

    /// Images of every basis element of `B`.
    pub fn images(&self) -> Vec<Vec<Scalar>> {
        self.iota.columns()
    }

    /// Images of a generating set of `B`.
    pub fn generator_images(&self) -> Vec<Vec<Scalar>> {
        self.b.generators().into_iter().map(|i| self.image(i)).collect()
    }

    pub fn image_space(&self) -> Subspace {
        Subspace::span(self.field(), self.a.dim(), &self.images())
    }

    /// The centralizer `R = {r ∈ A : r ι(b) = ι(b) r}`.
    pub fn centralizer(&self) -> Subalgebra {
        let f = self.field();
        let blocks: Vec<Matrix> = self.images().iter().map(|b| self.a.right_mul(b).sub(&self.a.left_mul(b))).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let space = kernel(&Matrix::vstack(f, self.a.dim(), &refs));
        Subalgebra::new(&self.a, space).expect("a centralizer is a subalgebra")
    }

    /// `B^op -> A^op` with the same `ι`.
    pub fn opposite(&self) -> Extension {
        Extension { b: self.b.opposite(), a: self.a.opposite(), iota: self.iota.clone() }
    }

    pub fn to_field(&self, target: Field) -> Result<Extension> {
        let conv = |m: &Matrix| -> Result<Matrix> {
            let cols = m.columns().iter().map(|c| c.iter().map(|x| target.import(x)).collect()).collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(target, m.rows(), &cols))
        };
        Extension::new(self.b.to_field(target)?, self.a.to_field(target)?, conv(&self.iota)?)
    }
}

/// `opposite_extension(ext)`.
pub fn opposite_extension(ext: &Extension) -> Extension {
    ext.opposite()
}

/// Extension of group algebras from a subgroup given by its elements.
pub fn subgroup_extension(field: Field, group: &Group, elements: &[usize]) -> Result<Extension> {
    let (sub, embed) = group.subgroup(elements)?;
    let a = group_algebra(field, group);
    let b = group_algebra(field, &sub);
    let cols: Vec<Vec<Scalar>> = embed.iter().map(|&g| field.unit_vector(group.order(), g)).collect();
    Extension::new(b, a, Matrix::from_columns(field, group.order(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn s3() -> (Group, StructureAlgebra) {
        let g = Group::symmetric3();
        let a = group_algebra(Q, &g);
        (g, a)
    }

    #[test]
    fn validate_examples() {
        assert!(matrix_algebra(Q, 2).is_valid());
        assert!(s3().1.is_valid());
        let m = matrix_algebra(Q, 2);
        let mut products = m.products.clone();
        products[0][0] = Q.from_i64(2);
        let bad = StructureAlgebra::new(Q, 4, products, m.unit.clone()).unwrap();
        let defects = bad.validate();
        assert!(!defects.is_empty());
        assert!(defects.iter().any(|d| d.indices.starts_with(&[0, 0])));
        assert!(!bad.checks().all_pass());
    }

    #[test]
    fn multiply_examples() {
        let m = matrix_algebra(Q, 2);
        let e = |i: usize| m.basis_vector(i);
        assert_eq!(m.multiply(m.unit(), &e(1)).unwrap(), e(1));
        // e12 = index 1, e21 = index 2, e11 = index 0
        assert_eq!(m.mul(&e(1), &e(2)), e(0));
        assert!(m.multiply(&e(1), &Q.zeros(3)).is_err());
        let (g, a) = s3();
        let p = |n: &str| a.basis_vector(g.index_of(n).unwrap());
        assert_eq!(a.mul(&p("(12)"), &p("(123)")), p("(23)"));
    }

    #[test]
    fn unit_of_matrix_algebra() {
        let m = matrix_algebra(Q, 2);
        let mut one = Q.zeros(4);
        one[0] = Q.one();
        one[3] = Q.one();
        assert_eq!(m.unit(), one.as_slice());
        let c2 = group_algebra(Q, &Group::cyclic(2));
        assert_eq!(c2.mul(&c2.basis_vector(1), &c2.basis_vector(1)), c2.basis_vector(0));
    }

    #[test]
    fn pair_groupoid_is_matrix_algebra() {
        for n in 1..=3 {
            let g = groupoid_algebra(Q, &Groupoid::pair(n));
            let mut products = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            let mut v = Q.zeros(n * n);
                            if j == k {
                                v[i * n + l] = Q.one();
                            }
                            products.push(v);
                        }
                    }
                }
            }
            assert_eq!(g.products, products);
        }
    }

    #[test]
    fn centralizer_examples() {
        let m2 = matrix_algebra(Q, 2);
        assert_eq!(Extension::trivial(m2.clone()).unwrap().centralizer().dim(), 1);
        let ext = Extension::over_scalars(m2).unwrap();
        assert_eq!(ext.centralizer().dim(), 4);

        // Oracle: the centralizer of a subgroup algebra has a basis of
        // orbit sums for the conjugation action of the subgroup.
        let (g, _) = s3();
        for gens in [vec![g.index_of("(123)").unwrap()], vec![g.index_of("(12)").unwrap()]] {
            let h = g.closure(&gens);
            let mut seen = vec![false; g.order()];
            let mut orbits = 0;
            for x in 0..g.order() {
                if seen[x] {
                    continue;
                }
                orbits += 1;
                for &y in &h {
                    seen[g.mul(g.mul(y, x), g.inverse(y))] = true;
                }
            }
            let ext = subgroup_extension(Q, &g, &h).unwrap();
            let r = ext.centralizer();
            assert_eq!(r.dim(), orbits);
            assert_eq!(r.dim(), 4);
        }
    }

    #[test]
    fn opposite_is_involution() {
        let (_, a) = s3();
        assert_eq!(a.opposite().opposite(), a);
        let c4 = group_algebra(Q, &Group::cyclic(4));
        assert_eq!(c4.opposite(), c4);
        // transpose e_ij -> e_ji is an isomorphism M2^op -> M2
        let m = matrix_algebra(Q, 2);
        let op = m.opposite();
        let t = |i: usize| (i % 2) * 2 + i / 2;
        for i in 0..4 {
            for j in 0..4 {
                let lhs: Vec<Scalar> = (0..4).map(|k| op.basis_product(i, j)[t(k)].clone()).collect();
                assert_eq!(lhs, m.basis_product(t(i), t(j)));
            }
        }
    }

    #[test]
    fn subalgebra_rejects_non_closed() {
        let m = matrix_algebra(Q, 2);
        let sp = Subspace::span(Q, 4, &[m.unit().to_vec(), m.basis_vector(1)]);
        assert!(Subalgebra::new(&m, sp).is_ok());
        let sp = Subspace::span(Q, 4, &[m.unit().to_vec(), m.basis_vector(1), m.basis_vector(2)]);
        assert!(Subalgebra::new(&m, sp).is_err());
    }

    #[test]
    fn greedy_generators_generate() {
        let m = matrix_algebra(Q, 3);
        let gens: Vec<Vec<Scalar>> = m.generators().iter().map(|&i| m.basis_vector(i)).collect();
        assert_eq!(m.generated(&gens).dim(), 9);
    }
}
