//! Finite-dimensional (weak) bialgebras by structure constants, Hopf
//! subalgebras, normality, quotient coalgebras and the Hopf-Galois harness.
//!
//! `Δ` is stored as a `dim² × dim` matrix whose column `i` is `Δ(e_i)` in the
//! row-major basis `e_j ⊗ e_k` of the plain tensor square.

use serde::Serialize;

use crate::algebra::{group_algebra, groupoid_algebra, StructureAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::galois::tensor_square;
use crate::groups::{Group, Groupoid};
use crate::matrix::Matrix;
use crate::report::{tuples, CheckSet};
use crate::subspace::{kernel, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: StructureAlgebra,
    pub comul: Matrix,
    pub counit: Vec<Scalar>,
    /// Columns are images of basis elements.
    pub antipode: Option<Matrix>,
}

impl Bialgebra {
    pub fn new(algebra: StructureAlgebra, comul: Matrix, counit: Vec<Scalar>, antipode: Option<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if comul.rows() != n * n || comul.cols() != n {
            return Err(Error::Dimension(format!("comultiplication is {}x{}, expected {}x{n}", comul.rows(), comul.cols(), n * n)));
        }
        if counit.len() != n {
            return Err(Error::Dimension(format!("counit has length {}, expected {n}", counit.len())));
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return Err(Error::Dimension(format!("antipode is {}x{}, expected {n}x{n}", s.rows(), s.cols())));
            }
        }
        Ok(Bialgebra { algebra, comul, counit, antipode })
    }

    /// `Δ(e_i) = Σ c e_j ⊗ e_k` from `(i, j, k, c)` entries.
    pub fn from_triples(
        algebra: StructureAlgebra,
        comul: &[(usize, usize, usize, Scalar)],
        counit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let f = algebra.field();
        let mut m = Matrix::zeros(f, n * n, n);
        for (i, j, k, c) in comul {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidTable(format!("comultiplication entry ({i},{j},{k}) out of range")));
            }
            let old = m.get(j * n + k, *i).clone();
            m.set(j * n + k, *i, f.add(&old, c));
        }
        Self::new(algebra, m, counit, antipode)
    }

    /// `k[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group(f: Field, g: &Group) -> Self {
        let n = g.order();
        let comul = (0..n).map(|i| (i, i, i, f.one())).collect::<Vec<_>>();
        let s = Matrix::from_columns(f, n, &(0..n).map(|i| f.unit_vector(n, g.inverse(i))).collect::<Vec<_>>());
        Self::from_triples(group_algebra(f, g), &comul, vec![f.one(); n], Some(s)).expect("group structure has matching shapes")
    }

    /// `k[G]` for a groupoid: `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`. For the
    /// pair groupoid this is `M_n` with `S(e_ij) = e_ji`.
    pub fn groupoid(f: Field, g: &Groupoid) -> Self {
        let n = g.arrows.len();
        let comul = (0..n).map(|i| (i, i, i, f.one())).collect::<Vec<_>>();
        let s = Matrix::from_columns(f, n, &(0..n).map(|i| f.unit_vector(n, g.inverse(i))).collect::<Vec<_>>());
        Self::from_triples(groupoid_algebra(f, g), &comul, vec![f.one(); n], Some(s)).expect("groupoid structure has matching shapes")
    }

    /// `M_n` as the groupoid algebra of the pair groupoid.
    pub fn matrix(f: Field, n: usize) -> Self {
        Self::groupoid(f, &Groupoid::pair(n))
    }

    /// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
    /// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(x) = x ⊗ 1 + g ⊗ x`, `S(x) = −gx`.
    pub fn sweedler(f: Field) -> Self {
        let one = f.one();
        let neg = f.neg(&one);
        let t = |i, j, k, c: &Scalar| (i, j, k, c.clone());
        let products = [
            t(0, 0, 0, &one),
            t(0, 1, 1, &one),
            t(0, 2, 2, &one),
            t(0, 3, 3, &one),
            t(1, 0, 1, &one),
            t(1, 1, 0, &one),
            t(1, 2, 3, &one),
            t(1, 3, 2, &one),
            t(2, 0, 2, &one),
            t(2, 1, 3, &neg),
            t(3, 0, 3, &one),
            t(3, 1, 2, &neg),
        ];
        let alg = StructureAlgebra::from_triples(f, 4, f.unit_vector(4, 0), &products).expect("valid table").with_generators(vec![1, 2]);
        let comul = [t(0, 0, 0, &one), t(1, 1, 1, &one), t(2, 2, 0, &one), t(2, 1, 2, &one), t(3, 3, 1, &one), t(3, 0, 3, &one)];
        let s = Matrix::from_columns(
            f,
            4,
            &[f.unit_vector(4, 0), f.unit_vector(4, 1), f.scale(&neg, &f.unit_vector(4, 3)), f.unit_vector(4, 2)],
        );
        Self::from_triples(alg, &comul, vec![one.clone(), one, f.zero(), f.zero()], Some(s)).expect("valid shapes")
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.comul.mul_vec(x)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Scalar {
        self.field().dot(&self.counit, x)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        self.antipode.as_ref().map(|s| s.mul_vec(x))
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(i)
    }

    /// Nonzero entries of an element of `H ⊗ H` as `(coefficient, j, k)`.
    pub fn terms(&self, u: &[Scalar]) -> Vec<(Scalar, usize, usize)> {
        let n = self.dim();
        let f = self.field();
        u.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(p, c)| (c.clone(), p / n, p % n)).collect()
    }

    /// Product in the algebra `H ⊗ H`.
    pub fn tensor_mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let n = self.dim();
        let mut out = f.zeros(n * n);
        let tv = self.terms(v);
        for (c, i, j) in self.terms(u) {
            for (d, k, l) in &tv {
                let w = f.kron(self.algebra.basis_product(i, *k), self.algebra.basis_product(j, *l));
                f.axpy(&mut out, &f.mul(&c, d), &w);
            }
        }
        out
    }

    /// `(Δ ⊗ id)` and `(id ⊗ Δ)` applied to an element of `H ⊗ H`.
    pub fn delta_left(&self, u: &[Scalar]) -> Vec<Scalar> {
        let id = Matrix::identity(self.field(), self.dim());
        self.comul.kron(&id).mul_vec(u)
    }

    pub fn delta_right(&self, u: &[Scalar]) -> Vec<Scalar> {
        let id = Matrix::identity(self.field(), self.dim());
        id.kron(&self.comul).mul_vec(u)
    }

    /// Coalgebra identities: coassociativity and both counit laws.
    pub fn coalgebra_checks(&self) -> CheckSet {
        let f = self.field();
        let n = self.dim();
        let id = Matrix::identity(f, n);
        let l = self.comul.kron(&id).mul(&self.comul);
        let r = id.kron(&self.comul).mul(&self.comul);
        let eps_row = Matrix::from_rows(f, n, vec![self.counit.clone()]);
        let el = eps_row.kron(&id).mul(&self.comul);
        let er = id.kron(&eps_row).mul(&self.comul);
        let mut cs = CheckSet::new();
        cs.compare(f, "coassociativity", tuples(n, 1), |p| (l.column(p[0]), r.column(p[0])));
        cs.compare(f, "counit-left", tuples(n, 1), |p| (el.column(p[0]), self.basis(p[0])));
        cs.compare(f, "counit-right", tuples(n, 1), |p| (er.column(p[0]), self.basis(p[0])));
        cs
    }

    /// `S(x₁)x₂` and `x₁S(x₂)`.
    pub fn antipode_sweeps(&self, s: &Matrix, x: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let f = self.field();
        let n = self.dim();
        let (mut l, mut r) = (f.zeros(n), f.zeros(n));
        for (c, j, k) in self.terms(&self.delta(x)) {
            f.axpy(&mut l, &c, &self.algebra.mul(&s.column(j), &self.basis(k)));
            f.axpy(&mut r, &c, &self.algebra.mul(&self.basis(j), &s.column(k)));
        }
        (l, r)
    }

    /// The transpose structure on the dual space: product `Δᵀ`, coproduct
    /// `mᵀ`, unit `ε`, counit `1`, antipode `Sᵀ`.
    pub fn dual(&self) -> Result<Bialgebra> {
        let f = self.field();
        let n = self.dim();
        let mut products = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                products.push(self.comul.row(j * n + k).to_vec());
            }
        }
        let algebra = StructureAlgebra::new(f, n, products, self.counit.clone())?;
        let mut comul = Matrix::zeros(f, n * n, n);
        for j in 0..n {
            for k in 0..n {
                for (i, c) in self.algebra.basis_product(j, k).iter().enumerate() {
                    comul.set(j * n + k, i, c.clone());
                }
            }
        }
        Bialgebra::new(algebra, comul, self.algebra.unit().to_vec(), self.antipode.as_ref().map(|s| s.transpose()))
    }
}

/// Algebra, bialgebra and antipode identities on basis elements.
pub fn validate_hopf(h: &Bialgebra) -> CheckSet {
    let f = h.field();
    let n = h.dim();
    let a = &h.algebra;
    let mut cs = CheckSet::new();
    cs.extend(a.checks());
    cs.extend(h.coalgebra_checks());
    let one = a.unit();
    cs.compare(f, "comul-unit", [vec![]], |_| (h.delta(one), f.kron(one, one)));
    cs.compare(f, "counit-unit", [vec![]], |_| (vec![h.epsilon(one)], vec![f.one()]));
    cs.compare(f, "comul-multiplicative", tuples(n, 2), |p| {
        (h.delta(a.basis_product(p[0], p[1])), h.tensor_mul(&h.delta(&h.basis(p[0])), &h.delta(&h.basis(p[1]))))
    });
    cs.compare(f, "counit-multiplicative", tuples(n, 2), |p| {
        (vec![h.epsilon(a.basis_product(p[0], p[1]))], vec![f.mul(&h.counit[p[0]], &h.counit[p[1]])])
    });
    match &h.antipode {
        Some(s) => {
            let sweeps: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..n).map(|i| h.antipode_sweeps(s, &h.basis(i))).collect();
            cs.compare(f, "antipode-left", tuples(n, 1), |p| (sweeps[p[0]].0.clone(), f.scale(&h.counit[p[0]], one)));
            cs.compare(f, "antipode-right", tuples(n, 1), |p| (sweeps[p[0]].1.clone(), f.scale(&h.counit[p[0]], one)));
        }
        None => cs.record("antipode-left", false, "no antipode"),
    }
    cs
}

/// The span of all products `x y` with `x ∈ X`, `y ∈ Y`.
pub fn product_space(a: &StructureAlgebra, x: &Subspace, y: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for u in x.basis_vectors() {
        for v in y.basis_vectors() {
            vs.push(a.mul(&u, &v));
        }
    }
    Subspace::span(a.field(), a.dim(), &vs)
}

/// `X ⊗ Y` inside the plain tensor square.
fn tensor_subspace(f: Field, n: usize, x: &Subspace, y: &Subspace) -> Subspace {
    let mut vs = Vec::new();
    for u in x.basis_vectors() {
        for v in y.basis_vectors() {
            vs.push(f.kron(&u, &v));
        }
    }
    Subspace::span(f, n * n, &vs)
}

/// A subspace closed under product, unit, `Δ` and the antipode.
#[derive(Clone, Debug)]
pub struct HopfSubalgebra {
    pub space: Subspace,
}

impl HopfSubalgebra {
    pub fn new(h: &Bialgebra, space: Subspace) -> Result<Self> {
        let f = h.field();
        let sub = Subalgebra::new(&h.algebra, space.clone())?;
        let kk = tensor_subspace(f, h.dim(), &space, &space);
        for v in space.basis_vectors() {
            if !kk.contains(&h.delta(&v)) {
                return Err(Error::InvalidAlgebra("subspace is not a subcoalgebra".into()));
            }
            if let Some(s) = h.antipode_of(&v) {
                if !space.contains(&s) {
                    return Err(Error::InvalidAlgebra("subspace is not stable under the antipode".into()));
                }
            }
        }
        Ok(HopfSubalgebra { space: sub.space().clone() })
    }

    /// The Hopf subalgebra spanned by the listed basis elements.
    pub fn from_basis(h: &Bialgebra, indices: &[usize]) -> Result<Self> {
        let vs: Vec<Vec<Scalar>> = indices.iter().map(|&i| h.basis(i)).collect();
        Self::new(h, Subspace::span(h.field(), h.dim(), &vs))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subalgebra(&self, h: &Bialgebra) -> Result<Subalgebra> {
        Subalgebra::new(&h.algebra, self.space.clone())
    }
}

/// `K⁺ = K ∩ ker ε`.
pub fn augmentation_ideal(h: &Bialgebra, k: &HopfSubalgebra) -> Subspace {
    let f = h.field();
    let basis = k.space.basis_vectors();
    let row = Matrix::from_rows(f, basis.len(), vec![basis.iter().map(|v| h.epsilon(v)).collect()]);
    let coeffs = kernel(&row).basis_vectors();
    let vs: Vec<Vec<Scalar>> = coeffs.iter().map(|c| k.space.combine(c)).collect();
    Subspace::span(f, h.dim(), &vs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Normality {
    pub ideal_equality: bool,
    pub ad_left: bool,
    pub ad_right: bool,
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        self.ideal_equality && self.ad_left && self.ad_right
    }

    /// The two characterizations agree.
    pub fn consistent(&self) -> bool {
        self.ideal_equality == (self.ad_left && self.ad_right)
    }
}

/// `HK⁺` and `K⁺H`.
pub fn augmentation_ideals(h: &Bialgebra, k: &HopfSubalgebra) -> (Subspace, Subspace) {
    let full = Subspace::full(h.field(), h.dim());
    let kp = augmentation_ideal(h, k);
    (product_space(&h.algebra, &full, &kp), product_space(&h.algebra, &kp, &full))
}

/// `HK⁺ = K⁺H`, and independently the adjoint stability of `K` on both sides.
pub fn is_normal(h: &Bialgebra, k: &HopfSubalgebra) -> Result<Normality> {
    let s = h.antipode.as_ref().ok_or_else(|| Error::InvalidAlgebra("normality needs an antipode".into()))?;
    let (hk, kh) = augmentation_ideals(h, k);
    let ideal_equality = hk.equals(&kh)?;
    let a = &h.algebra;
    let (mut ad_left, mut ad_right) = (true, true);
    for i in 0..h.dim() {
        let terms = h.terms(&h.delta(&h.basis(i)));
        for x in k.space.basis_vectors() {
            let f = h.field();
            let (mut l, mut r) = (f.zeros(h.dim()), f.zeros(h.dim()));
            for (c, j, m) in &terms {
                f.axpy(&mut l, c, &a.mul3(&s.column(*j), &x, &h.basis(*m)));
                f.axpy(&mut r, c, &a.mul3(&h.basis(*j), &x, &s.column(*m)));
            }
            ad_left &= k.space.contains(&l);
            ad_right &= k.space.contains(&r);
        }
    }
    Ok(Normality { ideal_equality, ad_left, ad_right })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

/// `H/I` for a coideal `I` that is an ideal on the declared side.
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub ideal: Subspace,
    pub side: IdealSide,
    /// `q × n`.
    pub project: Matrix,
    /// `n × q`.
    pub section: Matrix,
    /// `q² × q`.
    pub comul: Matrix,
    pub counit: Vec<Scalar>,
    /// Induced action of each basis element of `H` (left for a left ideal,
    /// right for a right ideal, left for a two-sided ideal).
    pub action: Vec<Matrix>,
    /// The quotient bialgebra when the ideal is two-sided.
    pub bialgebra: Option<Bialgebra>,
}

impl QuotientCoalgebra {
    pub fn dim(&self) -> usize {
        self.project.rows()
    }
}

pub fn quotient_coalgebra(h: &Bialgebra, ideal: &Subspace, side: IdealSide) -> Result<QuotientCoalgebra> {
    let f = h.field();
    let n = h.dim();
    let a = &h.algebra;
    let (project, section) = ideal.quotient_maps();
    let pp = project.kron(&project);
    for v in ideal.basis_vectors() {
        if !f.is_zero(&h.epsilon(&v)) {
            return Err(Error::Ideal("counit does not vanish on the ideal".into()));
        }
        if pp.mul_vec(&h.delta(&v)).iter().any(|c| !f.is_zero(c)) {
            return Err(Error::Ideal("not a coideal".into()));
        }
        for i in 0..n {
            let e = h.basis(i);
            let left_ok = ideal.contains(&a.mul(&e, &v));
            let right_ok = ideal.contains(&a.mul(&v, &e));
            let ok = match side {
                IdealSide::Left => left_ok,
                IdealSide::Right => right_ok,
                IdealSide::TwoSided => left_ok && right_ok,
            };
            if !ok {
                return Err(Error::Ideal(format!("not a {side:?} ideal")));
            }
        }
    }
    let comul = pp.mul(&h.comul).mul(&section);
    let counit = Matrix::from_rows(f, n, vec![h.counit.clone()]).mul(&section).row(0).to_vec();
    let action = (0..n)
        .map(|i| {
            let e = h.basis(i);
            let m = match side {
                IdealSide::Right => a.right_mul(&e),
                _ => a.left_mul(&e),
            };
            project.mul(&m).mul(&section)
        })
        .collect();
    let bialgebra = if side == IdealSide::TwoSided {
        let q = project.rows();
        let mut products = Vec::with_capacity(q * q);
        for x in section.columns() {
            for y in section.columns() {
                products.push(project.mul_vec(&a.mul(&x, &y)));
            }
        }
        let alg = StructureAlgebra::new(f, q, products, project.mul_vec(a.unit()))?;
        let antipode = h.antipode.as_ref().map(|s| project.mul(s).mul(&section));
        Some(Bialgebra::new(alg, comul.clone(), counit.clone(), antipode)?)
    } else {
        None
    };
    Ok(QuotientCoalgebra { ideal: ideal.clone(), side, project, section, comul, counit, action, bialgebra })
}

/// Outcome of the Hopf-Galois construction over `H̄ = H/HK⁺`.
#[derive(Clone, Debug)]
pub struct HopfGalois {
    pub quotient_dim: usize,
    /// `β` respects the balancing over `K`.
    pub well_defined: bool,
    pub coinvariants_equal_k: bool,
    pub bijective: bool,
    pub inverse_matches: bool,
    pub report: CheckSet,
}

impl HopfGalois {
    pub fn is_galois(&self) -> bool {
        self.well_defined && self.coinvariants_equal_k && self.bijective
    }
}

/// Coaction `h ↦ h₁ ⊗ h̄₂` of `H̄ = H/HK⁺`, its coinvariants, and the Galois
/// map `β(a ⊗ a′) = a a′₁ ⊗ ā′₂` on `H ⊗_K H`, with the closed-form inverse
/// `x ⊗ ȳ ↦ x S(y₁) ⊗ y₂` compared when `β` is bijective.
pub fn hopf_galois_check(h: &Bialgebra, k: &HopfSubalgebra) -> Result<HopfGalois> {
    let f = h.field();
    let n = h.dim();
    let a = &h.algebra;
    let (hk, _) = augmentation_ideals(h, k);
    let (project, section) = hk.quotient_maps();
    let q = project.rows();
    let id = Matrix::identity(f, n);
    let coaction = id.kron(&project).mul(&h.comul);
    let one_bar = project.mul_vec(a.unit());
    let trivial = Matrix::from_columns(f, n * q, &(0..n).map(|i| f.kron(&h.basis(i), &one_bar)).collect::<Vec<_>>());
    let coinv = kernel(&coaction.sub(&trivial));
    let coinvariants_equal_k = coinv.equals(&k.space)?;
    let ksub = k.subalgebra(h)?;
    let src = tensor_square(a, &ksub)?;
    let mut full = Matrix::zeros(f, n * q, n * n);
    for i in 0..n {
        let left = a.left_mul(&h.basis(i)).kron(&Matrix::identity(f, q));
        for j in 0..n {
            let v = left.mul_vec(&coaction.column(j));
            for (r, x) in v.into_iter().enumerate() {
                full.set(r, i * n + j, x);
            }
        }
    }
    let sec = src.full_section();
    let through = full.mul(&sec).mul(&src.full_projection());
    let well_defined = through == full;
    let beta = full.mul(&sec);
    let inverse = if well_defined && beta.rows() == beta.cols() { beta.inverse() } else { None };
    let bijective = inverse.is_some();
    let s = h.antipode.as_ref().ok_or_else(|| Error::InvalidAlgebra("Hopf-Galois check needs an antipode".into()))?;
    let inverse_matches = match &inverse {
        Some(inv) => {
            let mut closed = Matrix::zeros(f, src.dim(), n * q);
            for i in 0..n {
                for jb in 0..q {
                    let y = section.column(jb);
                    let mut out = f.zeros(src.dim());
                    for (c, k1, k2) in h.terms(&h.delta(&y)) {
                        let x = a.mul(&h.basis(i), &s.column(k1));
                        f.axpy(&mut out, &c, &src.pure(&[&x, &h.basis(k2)]));
                    }
                    for (r, x) in out.into_iter().enumerate() {
                        closed.set(r, i * q + jb, x);
                    }
                }
            }
            closed == *inv
        }
        None => false,
    };
    let mut report = CheckSet::new();
    report.record("beta-well-defined", well_defined, format!("H⊗_K H has dimension {}", src.dim()));
    report.record("coinvariants-equal-K", coinvariants_equal_k, format!("coinvariants dimension {}", coinv.dim()));
    report.record("beta-bijective", bijective, format!("{}x{}", beta.rows(), beta.cols()));
    if bijective {
        report.record("closed-form-inverse", inverse_matches, "x⊗ȳ ↦ xS(y₁)⊗y₂");
    } else {
        report.not_applicable("closed-form-inverse", "β is not bijective");
    }
    Ok(HopfGalois { quotient_dim: q, well_defined, coinvariants_equal_k, bijective, inverse_matches, report })
}

/// `Φ = (ε_H ⊗ id)∘ρ: H -> W` for a coaction `ρ: H -> H ⊗ W` (matrix
/// `dim H · dim W × dim H`), with its homomorphism, comodule and
/// surjectivity checks and `K⁺ ⊆ ker Φ` for the coinvariants `K`.
pub fn phi_map(h: &Bialgebra, w: &Bialgebra, rho: &Matrix) -> (Matrix, CheckSet) {
    let f = h.field();
    let (n, m) = (h.dim(), w.dim());
    let eps = Matrix::from_rows(f, n, vec![h.counit.clone()]);
    let phi = eps.kron(&Matrix::identity(f, m)).mul(rho);
    let mut cs = CheckSet::new();
    cs.compare(f, "multiplicative", tuples(n, 2), |p| {
        (phi.mul_vec(h.algebra.basis_product(p[0], p[1])), w.algebra.mul(&phi.column(p[0]), &phi.column(p[1])))
    });
    cs.compare(f, "unital", [vec![]], |_| (phi.mul_vec(h.algebra.unit()), w.algebra.unit().to_vec()));
    cs.compare(f, "augmented", tuples(n, 1), |p| (vec![w.epsilon(&phi.column(p[0]))], vec![h.counit[p[0]].clone()]));
    let lhs = phi.kron(&Matrix::identity(f, m)).mul(rho);
    let rhs = w.comul.mul(&phi);
    cs.compare(f, "comodule-morphism", tuples(n, 1), |p| (lhs.column(p[0]), rhs.column(p[0])));
    let rank = phi.rank();
    cs.record("surjective", rank == m, format!("rank {rank} of {m}"));
    let trivial = Matrix::from_columns(f, n * m, &(0..n).map(|i| f.kron(&h.basis(i), w.algebra.unit())).collect::<Vec<_>>());
    let coinv = kernel(&rho.sub(&trivial));
    let kills = coinv.basis_vectors().iter().all(|v| {
        let e = h.epsilon(v);
        let plus = f.sub_vec(v, &f.scale(&e, h.algebra.unit()));
        phi.mul_vec(&plus).iter().all(|c| f.is_zero(c))
    });
    cs.record("kernel-contains-augmentation", kills, format!("coinvariants dimension {}", coinv.dim()));
    (phi, cs)
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub galois: bool,
    pub ideal_equality: bool,
    pub ad_left: bool,
    pub ad_right: bool,
    /// `dim H / dim K`.
    pub rank: usize,
    pub dim_h_bar: usize,
    pub dim_h_bar_bar: usize,
    /// `dim W` for `W = H/HK⁺` when that is a Hopf algebra coacting Galois.
    pub dim_w: Option<usize>,
    pub consistent: bool,
}

/// Both sides of "normal ⟺ Hopf-Galois", evaluated independently, with the
/// dimension bookkeeping on Galois instances.
pub fn normality_theorem_harness(h: &Bialgebra, k: &HopfSubalgebra) -> Result<NormalityVerdict> {
    if !h.dim().is_multiple_of(k.dim()) {
        return Err(Error::Rank(h.dim(), k.dim()));
    }
    let rank = h.dim() / k.dim();
    let (normality, galois) = rayon::join(|| is_normal(h, k), || hopf_galois_check(h, k));
    let (normality, galois) = (normality?, galois?);
    let (hk, kh) = augmentation_ideals(h, k);
    let (dim_h_bar, dim_h_bar_bar) = (h.dim() - hk.dim(), h.dim() - kh.dim());
    let dim_w = if galois.is_galois() {
        match quotient_coalgebra(h, &hk, IdealSide::TwoSided) {
            Ok(qc) => {
                let w = qc.bialgebra.expect("two-sided quotient");
                let rho = Matrix::identity(h.field(), h.dim()).kron(&qc.project).mul(&h.comul);
                let (_, cs) = phi_map(h, &w, &rho);
                cs.all_pass().then_some(w.dim())
            }
            Err(_) => None,
        }
    } else {
        None
    };
    let is_galois = galois.is_galois();
    let dims_ok = !is_galois || (dim_w == Some(rank) && dim_h_bar == rank && dim_h_bar_bar == rank);
    let consistent = normality.consistent() && normality.is_normal() == is_galois && dims_ok;
    Ok(NormalityVerdict {
        normal: normality.is_normal(),
        galois: is_galois,
        ideal_equality: normality.ideal_equality,
        ad_left: normality.ad_left,
        ad_right: normality.ad_right,
        rank,
        dim_h_bar,
        dim_h_bar_bar,
        dim_w,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn assert_pass(cs: &CheckSet) {
        assert!(cs.all_pass(), "{:#?}", cs.failures());
    }

    fn s3_a3() -> (Bialgebra, HopfSubalgebra) {
        let g = Group::symmetric3();
        let h = Bialgebra::group(Q, &g);
        let k = HopfSubalgebra::from_basis(&h, &g.closure(&[g.index_of("(123)").unwrap()])).unwrap();
        (h, k)
    }

    fn sweedler_k() -> (Bialgebra, HopfSubalgebra) {
        let h = Bialgebra::sweedler(Q);
        let k = HopfSubalgebra::from_basis(&h, &[0, 1]).unwrap();
        (h, k)
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn validation_examples() {
        assert_pass(&validate_hopf(&Bialgebra::group(Q, &Group::cyclic(2))));
        assert_pass(&validate_hopf(&Bialgebra::sweedler(Q)));
        assert_pass(&validate_hopf(&Bialgebra::group(Q, &Group::symmetric3())));
        let mut broken = Bialgebra::sweedler(Q);
        broken.antipode = Some(Matrix::zeros(Q, 4, 4));
        let cs = validate_hopf(&broken);
        assert!(!cs.get("antipode-left").unwrap().passed());
    }

    #[test]
    fn augmentation_ideal_examples() {
        let (h, k) = s3_a3();
        assert_eq!(augmentation_ideal(&h, &k).dim(), 2);
        let unit = HopfSubalgebra::from_basis(&h, &[0]).unwrap();
        assert_eq!(augmentation_ideal(&h, &unit).dim(), 0);
        let (h4, kg) = sweedler_k();
        let kp = augmentation_ideal(&h4, &kg);
        assert!(kp.equals(&Subspace::span(Q, 4, &[v(&[-1, 1, 0, 0])])).unwrap());
    }

    #[test]
    fn sweedler_ideals_by_hand() {
        // x·(g − 1) = xg − x = −gx − x and (g − 1)·x = gx − x.
        let (h, k) = sweedler_k();
        let (hk, kh) = augmentation_ideals(&h, &k);
        assert!(hk.equals(&Subspace::span(Q, 4, &[v(&[-1, 1, 0, 0]), v(&[0, 0, 1, 1])])).unwrap());
        assert!(kh.equals(&Subspace::span(Q, 4, &[v(&[-1, 1, 0, 0]), v(&[0, 0, -1, 1])])).unwrap());
        let n = is_normal(&h, &k).unwrap();
        assert!(!n.ideal_equality && n.consistent());
    }

    #[test]
    fn normality_examples() {
        let (h, k) = s3_a3();
        let n = is_normal(&h, &k).unwrap();
        assert!(n.is_normal());
        let all = HopfSubalgebra::new(&h, Subspace::full(Q, 6)).unwrap();
        assert!(is_normal(&h, &all).unwrap().is_normal());
        let unit = HopfSubalgebra::from_basis(&h, &[0]).unwrap();
        assert!(is_normal(&h, &unit).unwrap().is_normal());
    }

    #[test]
    fn group_normality_matches_group_theory() {
        let g = Group::symmetric3();
        let h = Bialgebra::group(Q, &g);
        for x in 0..6 {
            let elems = g.closure(&[x]);
            let k = HopfSubalgebra::from_basis(&h, &elems).unwrap();
            assert_eq!(is_normal(&h, &k).unwrap().is_normal(), g.is_normal_subgroup(&elems));
        }
    }

    #[test]
    fn quotient_examples() {
        let (h, k) = s3_a3();
        let zero = quotient_coalgebra(&h, &Subspace::zero(Q, 6), IdealSide::TwoSided).unwrap();
        assert_eq!(zero.dim(), 6);
        let (hk, _) = augmentation_ideals(&h, &k);
        let qc = quotient_coalgebra(&h, &hk, IdealSide::TwoSided).unwrap();
        assert_eq!(qc.dim(), 2);
        let w = qc.bialgebra.unwrap();
        assert_pass(&validate_hopf(&w));
        assert!(w.algebra.is_commutative());
        let (h4, kg) = sweedler_k();
        let (hk4, _) = augmentation_ideals(&h4, &kg);
        assert!(quotient_coalgebra(&h4, &hk4, IdealSide::Left).is_ok());
        assert!(matches!(quotient_coalgebra(&h4, &hk4, IdealSide::TwoSided), Err(Error::Ideal(_))));
    }

    #[test]
    fn hopf_galois_examples() {
        let (h, k) = s3_a3();
        let g = hopf_galois_check(&h, &k).unwrap();
        assert_pass(&g.report);
        assert!(g.is_galois() && g.inverse_matches);
        let (h4, kg) = sweedler_k();
        assert!(!hopf_galois_check(&h4, &kg).unwrap().is_galois());
        let all = HopfSubalgebra::new(&h, Subspace::full(Q, 6)).unwrap();
        let g = hopf_galois_check(&h, &all).unwrap();
        assert_eq!(g.quotient_dim, 1);
        assert!(g.is_galois());
    }

    #[test]
    fn phi_examples() {
        let (h, k) = s3_a3();
        let (hk, _) = augmentation_ideals(&h, &k);
        let qc = quotient_coalgebra(&h, &hk, IdealSide::TwoSided).unwrap();
        let w = qc.bialgebra.clone().unwrap();
        let rho = Matrix::identity(Q, 6).kron(&qc.project).mul(&h.comul);
        let (phi, cs) = phi_map(&h, &w, &rho);
        assert_pass(&cs);
        assert_eq!(phi, qc.project);
        let (phi, cs) = phi_map(&h, &h, &h.comul);
        assert_pass(&cs);
        assert_eq!(phi, Matrix::identity(Q, 6));
    }

    #[test]
    fn harness_examples() {
        let (h, k) = s3_a3();
        let v = normality_theorem_harness(&h, &k).unwrap();
        assert!(v.normal && v.galois && v.consistent);
        assert_eq!((v.rank, v.dim_h_bar, v.dim_h_bar_bar, v.dim_w), (2, 2, 2, Some(2)));
        let (h4, kg) = sweedler_k();
        let v = normality_theorem_harness(&h4, &kg).unwrap();
        assert!(!v.normal && !v.galois && v.consistent);
        let c4 = Group::cyclic(4);
        let h = Bialgebra::group(Q, &c4);
        let k = HopfSubalgebra::from_basis(&h, &[0, 2]).unwrap();
        let v = normality_theorem_harness(&h, &k).unwrap();
        assert!(v.normal && v.galois && v.consistent);
    }

    #[test]
    fn dual_of_cyclic_group_is_pointwise() {
        let h = Bialgebra::group(Q, &Group::cyclic(2));
        let d = h.dual().unwrap();
        assert_eq!(d.algebra.basis_product(0, 0), &v(&[1, 0])[..]);
        assert_eq!(d.algebra.basis_product(0, 1), &v(&[0, 0])[..]);
        assert_eq!(d.dual().unwrap(), h);
    }
}
