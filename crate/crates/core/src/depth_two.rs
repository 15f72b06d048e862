//! Depth two by quasibase search.
//!
//! Right D2 means there are `u_j ∈ T = (A⊗_B A)^B` and `γ_j ∈ S = End_B A_B`
//! with `Σ_j a γ_j(a′) u_j = a ⊗ a′`; left D2 means there are `t_i ∈ T`,
//! `β_i ∈ S` with `Σ_i t_i β_i(a) a′ = a ⊗ a′`. Taking a basis of `T` as the
//! `u` (or `t`) family, the `γ` (or `β`) become the unknowns of one linear
//! system; any quasibase of any length exists exactly when this system is
//! solvable.

use serde::Serialize;

use crate::algebra::{Extension, StructureAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::report::{tuples, CheckSet};
use crate::subspace::Subspace;
use crate::tensor::{
    bimodule_hom, centralized_subspace, end_algebra, tensor_square_algebra, tensor_square_product, ActionModule, Equivariance, HomSpace,
    TensorSpace,
};

/// The spaces attached to an extension `A|B`: the centralizer `R`, the tensor
/// square `A ⊗_B A`, `T = (A⊗_B A)^B` and `S = End_B A_B`.
#[derive(Clone, Debug)]
pub struct Constructs {
    pub ext: Extension,
    pub r: Subalgebra,
    pub r_alg: StructureAlgebra,
    /// `dim A × dim R`; columns are the echelon basis of `R`.
    pub r_incl: Matrix,
    pub q: TensorSpace,
    pub t_space: Subspace,
    pub t_alg: StructureAlgebra,
    pub s: HomSpace,
    pub s_alg: StructureAlgebra,
}

impl Constructs {
    pub fn build(ext: &Extension) -> Result<Self> {
        let a = ext.a();
        let f = a.field();
        let id = Matrix::identity(f, a.dim());
        let ga = a.generators();
        let gb = ext.b().generators();
        let left = ActionModule::over(a, &id, ga.clone(), ext.iota(), gb.clone());
        let right = ActionModule::over(a, ext.iota(), gb.clone(), &id, ga);
        let q = TensorSpace::new(vec![left, right])?;
        let t_space = centralized_subspace(&q, &ext.images());
        let t_alg = tensor_square_algebra(a, &q, &t_space)?;
        let mid = ActionModule::over(a, ext.iota(), gb.clone(), ext.iota(), gb);
        let s = bimodule_hom(&mid, &mid, Equivariance::Both)?;
        let s_alg = end_algebra(&s)?;
        let r = ext.centralizer();
        let (r_alg, r_incl) = r.to_algebra(a);
        Ok(Constructs { ext: ext.clone(), r, r_alg, r_incl, q, t_space, t_alg, s, s_alg })
    }

    pub fn field(&self) -> Field {
        self.ext.field()
    }

    pub fn a(&self) -> &StructureAlgebra {
        self.ext.a()
    }

    pub fn dim_t(&self) -> usize {
        self.t_space.dim()
    }

    pub fn dim_s(&self) -> usize {
        self.s.dim()
    }

    pub fn dim_r(&self) -> usize {
        self.r.dim()
    }

    /// Element of `T` (given in `T`-coordinates) as a vector of `A ⊗_B A`.
    pub fn t_elem(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.t_space.combine(coords)
    }

    pub fn t_coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.t_space.coordinates(v)
    }

    /// Element of `S` (given in `S`-coordinates) as a matrix on `A`.
    pub fn s_elem(&self, coords: &[Scalar]) -> Matrix {
        self.s.element(coords)
    }

    pub fn s_coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.s.coordinates(m)
    }

    /// `R`-coordinates of an element of `A` lying in `R`.
    pub fn r_coords(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.r.space().coordinates(x)
    }

    /// Element of `A` from `R`-coordinates.
    pub fn r_elem(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.r_incl.mul_vec(coords)
    }

    /// `x ↦ a x` on `A ⊗_B A`.
    pub fn lambda(&self, a: &[Scalar]) -> Matrix {
        self.q.left_action(a)
    }

    /// `x ↦ x a` on `A ⊗_B A`.
    pub fn rho(&self, a: &[Scalar]) -> Matrix {
        self.q.right_action(a)
    }

    pub fn pure(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.q.pure(&[x, y])
    }

    pub fn pure_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.q.pure_basis(&[i, j])
    }

    /// Multiplication `A ⊗_B A -> A`, as a `dim A × dim Q` matrix.
    pub fn mu(&self) -> Matrix {
        let a = self.a();
        let f = self.field();
        let cols: Vec<Vec<Scalar>> = (0..self.q.dim())
            .map(|k| {
                let mut v = f.zeros(a.dim());
                for (c, idx) in self.q.representative(&f.unit_vector(self.q.dim(), k)) {
                    f.axpy(&mut v, &c, a.basis_product(idx[0], idx[1]));
                }
                v
            })
            .collect();
        Matrix::from_columns(f, a.dim(), &cols)
    }

    /// `t t′` in `A ⊗_B A` coordinates.
    pub fn t_product(&self, t: &[Scalar], t2: &[Scalar]) -> Vec<Scalar> {
        tensor_square_product(self.a(), &self.q, t, t2)
    }

    /// `1 ⊗ 1`.
    pub fn one_one(&self) -> Vec<Scalar> {
        self.pure(self.a().unit(), self.a().unit())
    }
}

/// `u_j ∈ T`, `γ_j ∈ S` satisfying `Σ_j a γ_j(a′) u_j = a ⊗ a′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightQuasibase {
    /// `T`-coordinates.
    pub u: Vec<Vec<Scalar>>,
    /// `S`-coordinates.
    pub gamma: Vec<Vec<Scalar>>,
}

/// `t_i ∈ T`, `β_i ∈ S` satisfying `Σ_i t_i β_i(a) a′ = a ⊗ a′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftQuasibase {
    pub t: Vec<Vec<Scalar>>,
    pub beta: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasibaseJson {
    pub length: usize,
    pub t_coordinates: Vec<Vec<String>>,
    pub s_coordinates: Vec<Vec<String>>,
}

impl RightQuasibase {
    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn to_json(&self, f: Field) -> QuasibaseJson {
        QuasibaseJson {
            length: self.len(),
            t_coordinates: self.u.iter().map(|v| f.format_vec(v)).collect(),
            s_coordinates: self.gamma.iter().map(|v| f.format_vec(v)).collect(),
        }
    }
}

impl LeftQuasibase {
    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn to_json(&self, f: Field) -> QuasibaseJson {
        QuasibaseJson {
            length: self.len(),
            t_coordinates: self.t.iter().map(|v| f.format_vec(v)).collect(),
            s_coordinates: self.beta.iter().map(|v| f.format_vec(v)).collect(),
        }
    }
}

fn stacked_columns(f: Field, columns: Vec<Vec<Scalar>>, rows: usize) -> Matrix {
    Matrix::from_columns(f, rows, &columns)
}

/// Solves `Σ_k γ_k(a′) family_k = 1 ⊗ a′` for `γ_k ∈ S`; returns `S`-coordinates.
pub fn solve_right_gammas(c: &Constructs, family: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let f = c.field();
    let n = c.a().dim();
    let qd = c.q.dim();
    let ns = c.dim_s();
    let us: Vec<Vec<Scalar>> = family.iter().map(|u| c.t_elem(u)).collect();
    let mut cols = Vec::with_capacity(us.len() * ns);
    for u in &us {
        for s in c.s.basis() {
            let mut col = Vec::with_capacity(n * qd);
            for m in 0..n {
                col.extend(c.lambda(&s.column(m)).mul_vec(u));
            }
            cols.push(col);
        }
    }
    let mut rhs = Vec::with_capacity(n * qd);
    for m in 0..n {
        rhs.extend(c.pure(c.a().unit(), &c.a().basis_vector(m)));
    }
    if cols.is_empty() {
        return None;
    }
    let x = stacked_columns(f, cols, n * qd).solve(&rhs)?;
    Some(x.chunks(ns).map(|ch| ch.to_vec()).collect())
}

/// Solves `Σ_k family_k β_k(a) = a ⊗ 1` for `β_k ∈ S`.
pub fn solve_left_betas(c: &Constructs, family: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let f = c.field();
    let n = c.a().dim();
    let qd = c.q.dim();
    let ns = c.dim_s();
    let ts: Vec<Vec<Scalar>> = family.iter().map(|t| c.t_elem(t)).collect();
    let mut cols = Vec::with_capacity(ts.len() * ns);
    for t in &ts {
        for s in c.s.basis() {
            let mut col = Vec::with_capacity(n * qd);
            for m in 0..n {
                col.extend(c.rho(&s.column(m)).mul_vec(t));
            }
            cols.push(col);
        }
    }
    let mut rhs = Vec::with_capacity(n * qd);
    for m in 0..n {
        rhs.extend(c.pure(&c.a().basis_vector(m), c.a().unit()));
    }
    if cols.is_empty() {
        return None;
    }
    let x = stacked_columns(f, cols, n * qd).solve(&rhs)?;
    Some(x.chunks(ns).map(|ch| ch.to_vec()).collect())
}

/// A basis of `T` (in `T`-coordinates) beginning with `1 ⊗ 1`, then the
/// echelon basis vectors that extend it.
fn t_basis(c: &Constructs) -> Vec<Vec<Scalar>> {
    let f = c.field();
    let n = c.dim_t();
    let one = c.t_coords(&c.one_one()).expect("1⊗1 lies in T");
    let mut family = vec![one];
    for k in 0..n {
        let e = f.unit_vector(n, k);
        let mut trial = family.clone();
        trial.push(e);
        if Subspace::span(f, n, &trial).dim() == trial.len() {
            family = trial;
        }
    }
    family
}

/// Whether `(a_k) ↦ Σ a_k u_k` maps onto `A ⊗_B A`.
fn right_surjective(c: &Constructs, family: &[Vec<Scalar>]) -> bool {
    let mut vs = Vec::new();
    for u in family {
        let u = c.t_elem(u);
        for m in 0..c.a().dim() {
            vs.push(c.lambda(&c.a().basis_vector(m)).mul_vec(&u));
        }
    }
    Subspace::span(c.field(), c.q.dim(), &vs).dim() == c.q.dim()
}

fn left_surjective(c: &Constructs, family: &[Vec<Scalar>]) -> bool {
    let mut vs = Vec::new();
    for t in family {
        let t = c.t_elem(t);
        for m in 0..c.a().dim() {
            vs.push(c.rho(&c.a().basis_vector(m)).mul_vec(&t));
        }
    }
    Subspace::span(c.field(), c.q.dim(), &vs).dim() == c.q.dim()
}

/// Pairs whose map is zero contribute nothing to the quasibase equations.
fn drop_zero_pairs(f: Field, xs: Vec<Vec<Scalar>>, maps: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    xs.into_iter().zip(maps).filter(|(_, m)| m.iter().any(|c| !f.is_zero(c))).unzip()
}

/// Right D2 quasibase drawn from a basis of `T` (pairs with `γ = 0`
/// dropped), or `None` when the extension is not right depth two. The result is verified on every basis pair.
pub fn find_right_quasibase(c: &Constructs) -> Result<Option<RightQuasibase>> {
    let u = t_basis(c);
    if !right_surjective(c, &u) {
        return Ok(None);
    }
    let Some(gamma) = solve_right_gammas(c, &u) else {
        return Ok(None);
    };
    let (u, gamma) = drop_zero_pairs(c.field(), u, gamma);
    let qb = RightQuasibase { u, gamma };
    let report = verify_right_quasibase(c, &qb);
    if !report.all_pass() {
        return Err(Error::Quasibase(format!("{:?}", report.failures())));
    }
    Ok(Some(qb))
}

/// Left D2 quasibase drawn from a basis of `T`, or `None`.
pub fn find_left_quasibase(c: &Constructs) -> Result<Option<LeftQuasibase>> {
    let t = t_basis(c);
    if !left_surjective(c, &t) {
        return Ok(None);
    }
    let Some(beta) = solve_left_betas(c, &t) else {
        return Ok(None);
    };
    let (t, beta) = drop_zero_pairs(c.field(), t, beta);
    let qb = LeftQuasibase { t, beta };
    let report = verify_left_quasibase(c, &qb);
    if !report.all_pass() {
        return Err(Error::Quasibase(format!("{:?}", report.failures())));
    }
    Ok(Some(qb))
}

/// Checks `Σ_j a γ_j(a′) u_j = a ⊗ a′` on all basis pairs.
pub fn verify_right_quasibase(c: &Constructs, qb: &RightQuasibase) -> CheckSet {
    let a = c.a();
    let us: Vec<Vec<Scalar>> = qb.u.iter().map(|u| c.t_elem(u)).collect();
    let gs: Vec<Matrix> = qb.gamma.iter().map(|g| c.s_elem(g)).collect();
    let mut cs = CheckSet::new();
    let mut members = true;
    for u in &us {
        members &= c.t_space.contains(u);
    }
    cs.record("u-in-T", members, format!("{} elements", us.len()));
    cs.compare(c.field(), "right-quasibase", tuples(a.dim(), 2), |p| {
        let f = c.field();
        let mut lhs = f.zeros(c.q.dim());
        for (u, g) in us.iter().zip(&gs) {
            let x = a.mul(&a.basis_vector(p[0]), &g.column(p[1]));
            f.axpy(&mut lhs, &f.one(), &c.lambda(&x).mul_vec(u));
        }
        (lhs, c.pure_basis(p[0], p[1]))
    });
    cs
}

/// Checks `Σ_i t_i β_i(a) a′ = a ⊗ a′` on all basis pairs.
pub fn verify_left_quasibase(c: &Constructs, qb: &LeftQuasibase) -> CheckSet {
    let a = c.a();
    let ts: Vec<Vec<Scalar>> = qb.t.iter().map(|t| c.t_elem(t)).collect();
    let bs: Vec<Matrix> = qb.beta.iter().map(|b| c.s_elem(b)).collect();
    let mut cs = CheckSet::new();
    let members = ts.iter().all(|t| c.t_space.contains(t));
    cs.record("t-in-T", members, format!("{} elements", ts.len()));
    cs.compare(c.field(), "left-quasibase", tuples(a.dim(), 2), |p| {
        let f = c.field();
        let mut lhs = f.zeros(c.q.dim());
        for (t, b) in ts.iter().zip(&bs) {
            let x = a.mul(&b.column(p[0]), &a.basis_vector(p[1]));
            f.axpy(&mut lhs, &f.one(), &c.rho(&x).mul_vec(t));
        }
        (lhs, c.pure_basis(p[0], p[1]))
    });
    cs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct D2Flags {
    pub left: bool,
    pub right: bool,
}

/// Both quasibase searches, run concurrently, with the quasibases kept.
#[derive(Clone, Debug)]
pub struct D2Result {
    pub flags: D2Flags,
    pub left: Option<LeftQuasibase>,
    pub right: Option<RightQuasibase>,
}

pub fn is_d2(c: &Constructs) -> Result<D2Result> {
    let (left, right) = rayon::join(|| find_left_quasibase(c), || find_right_quasibase(c));
    let (left, right) = (left?, right?);
    Ok(D2Result { flags: D2Flags { left: left.is_some(), right: right.is_some() }, left, right })
}

/// The flip `x ⊗ y ↦ y ⊗ x` from `A ⊗_B A` to `A^op ⊗_{B^op} A^op`.
pub fn flip_to_opposite(c: &Constructs, op: &Constructs, v: &[Scalar]) -> Vec<Scalar> {
    let f = c.field();
    let mut out = f.zeros(op.q.dim());
    for (coef, idx) in c.q.representative(v) {
        f.axpy(&mut out, &coef, &op.pure_basis(idx[1], idx[0]));
    }
    out
}

/// Carries a left quasibase of `A|B` to a right quasibase of the opposite
/// extension: `u_i = flip(t_i)`, `γ_i = β_i` (the same linear maps of `A`).
pub fn transport_left_to_opposite(c: &Constructs, op: &Constructs, lqb: &LeftQuasibase) -> Option<RightQuasibase> {
    let u = lqb.t.iter().map(|t| op.t_coords(&flip_to_opposite(c, op, &c.t_elem(t)))).collect::<Option<Vec<_>>>()?;
    let gamma = lqb.beta.iter().map(|b| op.s_coords(&c.s_elem(b))).collect::<Option<Vec<_>>>()?;
    Some(RightQuasibase { u, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, matrix_algebra, subgroup_extension};
    use crate::groups::Group;

    const Q: Field = Field::Rationals;

    fn s3_sub(gen: &str) -> Extension {
        let g = Group::symmetric3();
        subgroup_extension(Q, &g, &g.closure(&[g.index_of(gen).unwrap()])).unwrap()
    }

    #[test]
    fn trivial_extension_has_length_one_quasibases() {
        let a = group_algebra(Q, &Group::symmetric3());
        let c = Constructs::build(&Extension::trivial(a).unwrap()).unwrap();
        // T is the center of A here.
        assert_eq!(c.dim_t(), 3);
        let r = find_right_quasibase(&c).unwrap().unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(c.t_elem(&r.u[0]), c.one_one());
        assert_eq!(c.s_elem(&r.gamma[0]), Matrix::identity(Q, 6));
        assert_eq!(find_left_quasibase(&c).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn s3_over_a3_is_d2() {
        let c = Constructs::build(&s3_sub("(123)")).unwrap();
        let d2 = is_d2(&c).unwrap();
        assert_eq!(d2.flags, D2Flags { left: true, right: true });
        let r = d2.right.unwrap();
        assert_eq!(verify_right_quasibase(&c, &r).get("right-quasibase").unwrap().detail, "36 cases");
        // Round trip: the found family must be accepted again.
        assert!(solve_right_gammas(&c, &r.u).is_some());
        assert!(solve_left_betas(&c, &d2.left.unwrap().t).is_some());
    }

    #[test]
    fn s3_over_c2_is_not_d2() {
        let c = Constructs::build(&s3_sub("(12)")).unwrap();
        let d2 = is_d2(&c).unwrap();
        assert_eq!(d2.flags, D2Flags { left: false, right: false });
    }

    #[test]
    fn left_transports_to_opposite_right() {
        let ext = s3_sub("(123)");
        let c = Constructs::build(&ext).unwrap();
        let op = Constructs::build(&ext.opposite()).unwrap();
        let l = find_left_quasibase(&c).unwrap().unwrap();
        let r = transport_left_to_opposite(&c, &op, &l).unwrap();
        assert!(verify_right_quasibase(&op, &r).all_pass());
        assert_eq!(r.len(), l.len());
        assert!(find_right_quasibase(&op).unwrap().is_some());
    }

    #[test]
    fn matrix_units_over_diagonal() {
        let m = matrix_algebra(Q, 2);
        let diag = Subalgebra::generated_by(&m, &[m.basis_vector(0)]);
        let ext = Extension::from_subalgebra(m, &diag).unwrap();
        let c = Constructs::build(&ext).unwrap();
        assert_eq!(is_d2(&c).unwrap().flags, D2Flags { left: true, right: true });
    }
}
