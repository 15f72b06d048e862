//! Comodule algebras over bialgebroids, coinvariants, Galois maps, the
//! balanced-module test and the characterization harness.
//!
//! A right coaction is `δ: A -> A ⊗_R H`, `a ↦ a₀ ⊗ a₁`, for a right
//! bialgebroid `H`; a left coaction is `δ: A -> H ⊗_R A`, `a ↦ a₋₁ ⊗ a₀`, for a
//! left bialgebroid. The base acts on `A` through an algebra map `R -> A`.

use serde::Serialize;

use crate::algebra::{Extension, StructureAlgebra, Subalgebra};
use crate::bialgebroid::{build_t, build_t_from_left, Bialgebroid, Handedness, OppositeAssignment};
use crate::depth_two::{find_left_quasibase, find_right_quasibase, Constructs, LeftQuasibase, RightQuasibase};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::report::{grid, tuples, CheckSet};
use crate::subspace::{kernel, Subspace};
use crate::tensor::{bimodule_hom, commutant, ActionModule, Equivariance, TensorSpace};

#[derive(Clone, Debug)]
pub struct Coaction {
    pub side: Handedness,
    pub bialgebroid: Bialgebroid,
    pub algebra: StructureAlgebra,
    /// `dim A × dim R`.
    pub base_map: Matrix,
    /// `A ⊗_R H` (right) or `H ⊗_R A` (left).
    pub tensor: TensorSpace,
    /// `dim tensor × dim A`.
    pub delta: Matrix,
}

impl Coaction {
    /// Assembles a coaction; `delta` receives the target space and returns
    /// `δ` of each basis element of `A` in its coordinates.
    pub fn new(
        bialgebroid: Bialgebroid,
        algebra: StructureAlgebra,
        base_map: Matrix,
        delta: impl FnOnce(&TensorSpace) -> Result<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let side = bialgebroid.handedness;
        let f = algebra.field();
        if base_map.rows() != algebra.dim() || base_map.cols() != bialgebroid.base.dim() {
            return Err(Error::Dimension("base map has the wrong shape".into()));
        }
        let images = base_map.columns();
        let gens = bialgebroid.base.generators();
        let (left, right): (Vec<Matrix>, Vec<Matrix>) = match side {
            Handedness::Right => (
                (0..algebra.dim()).map(|i| algebra.left_mul(&algebra.basis_vector(i))).collect(),
                images.iter().map(|r| algebra.right_mul(r)).collect(),
            ),
            Handedness::Left => (
                images.iter().map(|r| algebra.left_mul(r)).collect(),
                (0..algebra.dim()).map(|i| algebra.right_mul(&algebra.basis_vector(i))).collect(),
            ),
        };
        let a_mod = ActionModule::new(f, algebra.dim(), left, right)?;
        let a_mod = match side {
            Handedness::Right => a_mod.with_generators(algebra.generators(), gens),
            Handedness::Left => a_mod.with_generators(gens, algebra.generators()),
        };
        let h_mod = bialgebroid.tensor.factors()[0].clone();
        let factors = match side {
            Handedness::Right => vec![a_mod, h_mod],
            Handedness::Left => vec![h_mod, a_mod],
        };
        let tensor = TensorSpace::new(factors)?;
        let cols = delta(&tensor)?;
        if cols.len() != algebra.dim() || cols.iter().any(|c| c.len() != tensor.dim()) {
            return Err(Error::Dimension("coaction has the wrong shape".into()));
        }
        let delta = Matrix::from_columns(f, tensor.dim(), &cols);
        Ok(Coaction { side, bialgebroid, algebra, base_map, tensor, delta })
    }

    /// `δ(a) = a ⊗ 1` (or `1 ⊗ a`) over the one-dimensional bialgebroid `k`.
    pub fn trivial(algebra: &StructureAlgebra, side: Handedness) -> Result<Self> {
        let f = algebra.field();
        let h = trivial_bialgebroid(f, side)?;
        let base_map = Matrix::from_columns(f, algebra.dim(), &[algebra.unit().to_vec()]);
        let n = algebra.dim();
        let one = [f.one()];
        Coaction::new(h, algebra.clone(), base_map, |ts| {
            Ok((0..n)
                .map(|i| {
                    let a = f.unit_vector(n, i);
                    match side {
                        Handedness::Right => ts.pure(&[&a, &one]),
                        Handedness::Left => ts.pure(&[&one, &a]),
                    }
                })
                .collect())
        })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn apply(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.delta.mul_vec(a)
    }

    /// The class of `a ⊗ h` (right) or `h ⊗ a` (left).
    pub fn pure(&self, a: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        match self.side {
            Handedness::Right => self.tensor.pure(&[a, h]),
            Handedness::Left => self.tensor.pure(&[h, a]),
        }
    }

    fn r_image(&self, i: usize) -> Vec<Scalar> {
        self.base_map.column(i)
    }

    /// Factorwise product on representatives.
    fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let h = &self.bialgebroid.total;
        let (first, second) = match self.side {
            Handedness::Right => (&self.algebra, h),
            Handedness::Left => (h, &self.algebra),
        };
        let mut full = f.zeros(first.dim() * second.dim());
        let ry = self.tensor.representative(y);
        for (c, ij) in self.tensor.representative(x) {
            for (d, kl) in &ry {
                let v = f.kron(first.basis_product(ij[0], kl[0]), second.basis_product(ij[1], kl[1]));
                f.axpy(&mut full, &f.mul(&c, d), &v);
            }
        }
        self.tensor.project(&full)
    }

    /// Comodule-algebra checks: unit, counit, coassociativity, compatibility
    /// with the base, base-linearity, multiplicativity and injectivity.
    pub fn checks(&self) -> CheckSet {
        let f = self.field();
        let a = &self.algebra;
        let hb = &self.bialgebroid;
        let (n, nh, m) = (a.dim(), hb.dim(), hb.base.dim());
        let e = |i: usize| a.basis_vector(i);
        let mut cs = CheckSet::new();
        cs.compare(f, "unit", [vec![]], |_| (self.apply(a.unit()), self.pure(a.unit(), hb.total.unit())));
        let sec = self.tensor.full_section();
        let rep = sec.mul(&self.delta);
        let id_a = Matrix::identity(f, n);
        let id_h = Matrix::identity(f, nh);
        let mut counit = Matrix::zeros(f, n, n * nh);
        for i in 0..n {
            for k in 0..nh {
                let r = self.base_map.mul_vec(&hb.epsilon(&hb.total.basis_vector(k)));
                let (col, v) = match self.side {
                    Handedness::Right => (i * nh + k, a.mul(&e(i), &r)),
                    Handedness::Left => (k * n + i, a.mul(&r, &e(i))),
                };
                for (row, x) in v.into_iter().enumerate() {
                    counit.set(row, col, x);
                }
            }
        }
        let counit = counit.mul(&rep);
        cs.compare(f, "counit", tuples(n, 1), |p| (counit.column(p[0]), e(p[0])));
        let h_mod = hb.tensor.factors()[0].clone();
        let factors = self.tensor.factors();
        let triple = match self.side {
            Handedness::Right => TensorSpace::new(vec![factors[0].clone(), h_mod.clone(), h_mod]),
            Handedness::Left => TensorSpace::new(vec![h_mod.clone(), h_mod, factors[1].clone()]),
        };
        match triple {
            Ok(triple) => {
                let hh = hb.tensor.full_section().mul(&hb.comul);
                let (lhs, rhs) = match self.side {
                    Handedness::Right => (
                        triple.last_projection().mul(&self.delta.kron(&id_h)).mul(&rep),
                        triple.full_projection().mul(&id_a.kron(&hh)).mul(&rep),
                    ),
                    Handedness::Left => (
                        triple.last_projection().mul(&hb.comul.kron(&id_a)).mul(&rep),
                        triple.full_projection().mul(&id_h.kron(&sec.mul(&self.delta))).mul(&rep),
                    ),
                };
                cs.compare(f, "coassociativity", tuples(n, 1), |p| (lhs.column(p[0]), rhs.column(p[0])));
            }
            Err(err) => cs.record("coassociativity", false, err.to_string()),
        }
        let compat: Vec<(Matrix, Matrix)> = (0..m)
            .map(|i| {
                let r = hb.base.basis_vector(i);
                match self.side {
                    Handedness::Right => {
                        (self.tensor.map(&[&a.left_mul(&self.r_image(i)), &id_h]), self.tensor.map(&[&id_a, &hb.total.left_mul(&hb.t(&r))]))
                    }
                    Handedness::Left => (
                        self.tensor.map(&[&id_h, &a.right_mul(&self.r_image(i))]),
                        self.tensor.map(&[&hb.total.right_mul(&hb.t(&r)), &id_a]),
                    ),
                }
            })
            .collect();
        cs.compare(f, "base-compatibility", grid(&[m, n]), |p| {
            let d = self.apply(&e(p[1]));
            (compat[p[0]].0.mul_vec(&d), compat[p[0]].1.mul_vec(&d))
        });
        cs.compare(f, "base-linear", grid(&[m, n]), |p| {
            let r = hb.base.basis_vector(p[0]);
            match self.side {
                Handedness::Right => {
                    (self.apply(&a.mul(&e(p[1]), &self.r_image(p[0]))), self.tensor.right_action(&r).mul_vec(&self.apply(&e(p[1]))))
                }
                Handedness::Left => {
                    (self.apply(&a.mul(&self.r_image(p[0]), &e(p[1]))), self.tensor.left_action(&r).mul_vec(&self.apply(&e(p[1]))))
                }
            }
        });
        let deltas = self.delta.columns();
        cs.compare(f, "multiplicative", tuples(n, 2), |p| {
            (self.apply(a.basis_product(p[0], p[1])), self.product(&deltas[p[0]], &deltas[p[1]]))
        });
        let rank = self.delta.rank();
        cs.record("injective", rank == n, format!("rank {rank} of {n}"));
        cs
    }
}

/// `k` as a bialgebroid over itself.
pub fn trivial_bialgebroid(f: Field, side: Handedness) -> Result<Bialgebroid> {
    let k = StructureAlgebra::new(f, 1, vec![vec![f.one()]], vec![f.one()])?;
    let one = Matrix::identity(f, 1);
    Bialgebroid::new(side, k.clone(), k, one.clone(), one.clone(), one, |ts| Ok(vec![ts.pure(&[&[f.one()], &[f.one()]])]))
}

/// `{a : δ(a) = a ⊗ 1}` (or `1 ⊗ a`), verified to be a unital subalgebra.
pub fn coinvariants(c: &Coaction) -> Result<Subalgebra> {
    let f = c.field();
    let n = c.algebra.dim();
    let one = c.bialgebroid.total.unit();
    let trivial: Vec<Vec<Scalar>> = (0..n).map(|i| c.pure(&f.unit_vector(n, i), one)).collect();
    let diff = c.delta.sub(&Matrix::from_columns(f, c.tensor.dim(), &trivial));
    Subalgebra::new(&c.algebra, kernel(&diff))
}

#[derive(Clone, Debug)]
pub struct GaloisData {
    pub coinvariants: Subalgebra,
    /// `A ⊗_B A` over the coinvariants.
    pub source: TensorSpace,
    /// `dim (A ⊗_R H) × dim (A ⊗_B A)`.
    pub beta: Matrix,
    pub bijective: bool,
    pub inverse: Option<Matrix>,
}

/// `A ⊗_B A` for a unital subalgebra `B`, with the outer `A`-actions.
pub fn tensor_square(a: &StructureAlgebra, b: &Subalgebra) -> Result<TensorSpace> {
    let (b_alg, incl) = b.to_algebra(a);
    let id = Matrix::identity(a.field(), a.dim());
    let left = ActionModule::over(a, &id, a.generators(), &incl, b_alg.generators());
    let right = ActionModule::over(a, &incl, b_alg.generators(), &id, a.generators());
    TensorSpace::new(vec![left, right])
}

/// `β(a ⊗ a′) = a a′₀ ⊗ a′₁` (right) or `β(a ⊗ a′) = a₋₁ ⊗ a₀ a′` (left)
/// over the coinvariants; bijectivity decided by rank.
pub fn galois_map(c: &Coaction) -> Result<GaloisData> {
    let f = c.field();
    let a = &c.algebra;
    let coinv = coinvariants(c)?;
    let source = tensor_square(a, &coinv)?;
    let cols: Vec<Vec<Scalar>> = (0..source.dim())
        .map(|q| {
            let mut out = f.zeros(c.tensor.dim());
            for (coef, idx) in source.representative(&f.unit_vector(source.dim(), q)) {
                let v = match c.side {
                    Handedness::Right => c.tensor.left_action(&a.basis_vector(idx[0])).mul_vec(&c.delta.column(idx[1])),
                    Handedness::Left => c.tensor.right_action(&a.basis_vector(idx[1])).mul_vec(&c.delta.column(idx[0])),
                };
                f.axpy(&mut out, &coef, &v);
            }
            out
        })
        .collect();
    let beta = Matrix::from_columns(f, c.tensor.dim(), &cols);
    let inverse = if beta.rows() == beta.cols() { beta.inverse() } else { None };
    Ok(GaloisData { coinvariants: coinv, source, beta, bijective: inverse.is_some(), inverse })
}

/// `β` is `A`-`B`-bilinear for `a″·(a⊗h)·b = a″ab ⊗ h` (right case).
pub fn galois_bimodule_check(c: &Coaction, g: &GaloisData) -> CheckSet {
    let f = c.field();
    let a = &c.algebra;
    let mut cs = CheckSet::new();
    if c.side == Handedness::Left {
        cs.not_applicable("beta-bilinear", "left coaction");
        return cs;
    }
    let bs = g.coinvariants.space().basis_vectors();
    let id_h = Matrix::identity(f, c.bialgebroid.dim());
    cs.compare(f, "beta-bilinear", grid(&[a.dim(), g.source.dim(), bs.len()]), |p| {
        let x = f.unit_vector(g.source.dim(), p[1]);
        let ax = g.source.left_action(&a.basis_vector(p[0])).mul_vec(&x);
        let axb = g.source.right_action(&bs[p[2]]).mul_vec(&ax);
        let bx = g.beta.mul_vec(&x);
        let lhs = c.tensor.left_action(&a.basis_vector(p[0])).mul_vec(&bx);
        let rhs = c.tensor.map(&[&a.right_mul(&bs[p[2]]), &id_h]).mul_vec(&lhs);
        (g.beta.mul_vec(&axb), rhs)
    });
    cs
}

/// `a ↦ Σ_j γ_j(a) ⊗ u_j` into `A ⊗_R T`, checked on construction.
pub fn canonical_coaction(c: &Constructs, rqb: &RightQuasibase, t: &Bialgebroid) -> Result<Coaction> {
    let f = c.field();
    let n = c.a().dim();
    let gammas: Vec<Matrix> = rqb.gamma.iter().map(|g| c.s_elem(g)).collect();
    let co = Coaction::new(t.clone(), c.a().clone(), c.r_incl.clone(), |ts| {
        Ok((0..n)
            .map(|i| {
                let mut out = f.zeros(ts.dim());
                for (g, u) in gammas.iter().zip(&rqb.u) {
                    f.axpy(&mut out, &f.one(), &ts.pure(&[&g.column(i), u]));
                }
                out
            })
            .collect())
    })?;
    ensure(co.checks())?;
    Ok(co)
}

/// `a ↦ Σ_i t_i ⊗ β_i(a)` into `T ⊗_R A` over the left bialgebroid `h`
/// (the opposite of `T`), checked on construction.
pub fn canonical_left_coaction(c: &Constructs, lqb: &LeftQuasibase, h: &Bialgebroid) -> Result<Coaction> {
    let f = c.field();
    let n = c.a().dim();
    let betas: Vec<Matrix> = lqb.beta.iter().map(|b| c.s_elem(b)).collect();
    let co = Coaction::new(h.clone(), c.a().clone(), c.r_incl.clone(), |ts| {
        Ok((0..n)
            .map(|i| {
                let mut out = f.zeros(ts.dim());
                for (b, t) in betas.iter().zip(&lqb.t) {
                    f.axpy(&mut out, &f.one(), &ts.pure(&[t, &b.column(i)]));
                }
                out
            })
            .collect())
    })?;
    ensure(co.checks())?;
    Ok(co)
}

fn ensure(cs: CheckSet) -> Result<()> {
    if cs.all_pass() {
        Ok(())
    } else {
        let ids: Vec<&str> = cs.failures().iter().map(|c| c.id.as_str()).collect();
        Err(Error::Coaction(format!("failing checks: {}", ids.join(", "))))
    }
}

/// `a ⊗ t ↦ a t¹ ⊗ t²` from `A ⊗_R T` to `A ⊗_B A`.
pub fn canonical_inverse(c: &Constructs, co: &Coaction) -> Matrix {
    let f = c.field();
    let cols: Vec<Vec<Scalar>> = (0..co.tensor.dim())
        .map(|k| {
            let mut out = f.zeros(c.q.dim());
            for (coef, idx) in co.tensor.representative(&f.unit_vector(co.tensor.dim(), k)) {
                let t = c.t_elem(&f.unit_vector(c.dim_t(), idx[1]));
                f.axpy(&mut out, &coef, &c.lambda(&c.a().basis_vector(idx[0])).mul_vec(&t));
            }
            out
        })
        .collect();
    Matrix::from_columns(f, c.q.dim(), &cols)
}

/// `t ⊗ a ↦ t¹ ⊗ t² a` from `T ⊗_R A` to `A ⊗_B A`.
pub fn canonical_left_inverse(c: &Constructs, co: &Coaction) -> Matrix {
    let f = c.field();
    let cols: Vec<Vec<Scalar>> = (0..co.tensor.dim())
        .map(|k| {
            let mut out = f.zeros(c.q.dim());
            for (coef, idx) in co.tensor.representative(&f.unit_vector(co.tensor.dim(), k)) {
                let t = c.t_elem(&f.unit_vector(c.dim_t(), idx[0]));
                f.axpy(&mut out, &coef, &c.rho(&c.a().basis_vector(idx[1])).mul_vec(&t));
            }
            out
        })
        .collect();
    Matrix::from_columns(f, c.q.dim(), &cols)
}

/// Outcome of running the canonical construction on one side.
#[derive(Clone, Debug)]
pub struct CanonicalGalois {
    pub coaction: Coaction,
    pub galois: GaloisData,
    /// Coinvariants are exactly the image of `B`.
    pub coinvariants_are_b: bool,
    /// The closed-form inverse agrees with the matrix inverse (or is at least
    /// a left inverse when `β` is not square).
    pub closed_form_inverse: bool,
    pub report: CheckSet,
}

impl CanonicalGalois {
    pub fn is_galois(&self) -> bool {
        self.coinvariants_are_b && self.galois.bijective
    }
}

fn same_space(x: &Subspace, y: &Subspace) -> bool {
    x.equals(y).unwrap_or(false)
}

/// The right coaction of `T` on `A` with its Galois map.
pub fn right_galois(c: &Constructs, rqb: &RightQuasibase) -> Result<CanonicalGalois> {
    let t = build_t(c, rqb)?;
    let co = canonical_coaction(c, rqb, &t)?;
    let galois = galois_map(&co)?;
    let inv = canonical_inverse(c, &co);
    finish(c, co, galois, inv)
}

/// The left coaction of `T^op` on `A` built from a left quasibase, with its Galois map.
pub fn left_coaction(c: &Constructs, lqb: &LeftQuasibase) -> Result<CanonicalGalois> {
    let t = build_t_from_left(c, lqb)?;
    let h = t.opposite(OppositeAssignment::Exchanged)?;
    let co = canonical_left_coaction(c, lqb, &h)?;
    let galois = galois_map(&co)?;
    let inv = canonical_left_inverse(c, &co);
    finish(c, co, galois, inv)
}

fn finish(c: &Constructs, co: Coaction, galois: GaloisData, closed: Matrix) -> Result<CanonicalGalois> {
    let f = c.field();
    let coinvariants_are_b = same_space(galois.coinvariants.space(), &c.ext.image_space());
    // With coinvariants equal to `B`, the source of `β` is `c.q` coordinate for coordinate.
    let closed_form_inverse = coinvariants_are_b
        && match &galois.inverse {
            Some(inv) => *inv == closed,
            None => false,
        };
    let mut report = CheckSet::new();
    report.extend_prefixed("comodule", co.checks());
    report.record("coinvariants-equal-B", coinvariants_are_b, format!("dim {}", galois.coinvariants.dim()));
    report.record("beta-bijective", galois.bijective, format!("{}x{}", galois.beta.rows(), galois.beta.cols()));
    report.record(
        "beta-dimension-identity",
        !galois.bijective || galois.source.dim() == co.tensor.dim(),
        format!("dim A⊗_B A = {}, dim target = {}", galois.source.dim(), co.tensor.dim()),
    );
    report.record("closed-form-inverse", closed_form_inverse, "matches the matrix inverse");
    report.extend(galois_bimodule_check(&co, &galois));
    let commute = galois.coinvariants.space().basis_vectors().iter().all(|b| {
        (0..c.dim_r()).all(|i| {
            let r = c.r_elem(&f.unit_vector(c.dim_r(), i));
            c.a().mul(b, &r) == c.a().mul(&r, b)
        })
    });
    report.record("coinvariants-commute-with-R", commute, "");
    Ok(CanonicalGalois { coaction: co, galois, coinvariants_are_b, closed_form_inverse, report })
}

/// `A_B` is balanced: the commutant of `End(A_B)` in `End_k(A)` is `ρ(B)`.
pub fn is_balanced_right(ext: &Extension) -> Result<bool> {
    balanced(ext, Handedness::Right)
}

/// `_B A` is balanced: the commutant of `End(_B A)` is `λ(B)`.
pub fn is_balanced_left(ext: &Extension) -> Result<bool> {
    balanced(ext, Handedness::Left)
}

fn balanced(ext: &Extension, side: Handedness) -> Result<bool> {
    let a = ext.a();
    let f = a.field();
    let n = a.dim();
    let mults: Vec<Matrix> = ext
        .images()
        .iter()
        .map(|b| match side {
            Handedness::Right => a.right_mul(b),
            Handedness::Left => a.left_mul(b),
        })
        .collect();
    let gens = ext.b().generators();
    let module = match side {
        Handedness::Right => ActionModule::new(f, n, vec![], mults.clone())?.with_generators(vec![], gens),
        Handedness::Left => ActionModule::new(f, n, mults.clone(), vec![])?.with_generators(gens, vec![]),
    };
    let eq = match side {
        Handedness::Right => Equivariance::Right,
        Handedness::Left => Equivariance::Left,
    };
    let e = bimodule_hom(&module, &module, eq)?;
    let comm = commutant(f, n, e.basis());
    let flat: Vec<Vec<Scalar>> = mults.iter().map(|m| m.to_vec()).collect();
    let image = Subspace::span(f, n * n, &flat);
    Ok(image.dim() == ext.b().dim() && same_space(comm.space(), &image))
}

/// Both sides of the characterization, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub left_d2: bool,
    pub right_d2: bool,
    pub left_balanced: bool,
    pub right_balanced: bool,
    pub galois_right: bool,
    pub galois_left: bool,
    pub consistent: bool,
}

/// Runs the depth-two searches, the balance tests and the canonical Galois
/// constructions (the left one directly and through the opposite extension),
/// and checks `Galois ⟺ D2 ∧ balanced` on each side.
pub fn characterize(ext: &Extension) -> Result<Verdict> {
    let op_ext = ext.opposite();
    let ((c, op), (rb, lb)) = rayon::join(
        || rayon::join(|| Constructs::build(ext), || Constructs::build(&op_ext)),
        || rayon::join(|| is_balanced_right(ext), || is_balanced_left(ext)),
    );
    let (c, op, right_balanced, left_balanced) = (c?, op?, rb?, lb?);
    let side = |c: &Constructs| -> Result<(bool, bool)> {
        match find_right_quasibase(c)? {
            Some(rqb) => Ok((true, right_galois(c, &rqb)?.is_galois())),
            None => Ok((false, false)),
        }
    };
    let direct_left = |c: &Constructs| -> Result<(bool, bool)> {
        match find_left_quasibase(c)? {
            Some(lqb) => Ok((true, left_coaction(c, &lqb)?.is_galois())),
            None => Ok((false, false)),
        }
    };
    let ((right, mirrored), direct) = rayon::join(|| rayon::join(|| side(&c), || side(&op)), || direct_left(&c));
    let ((right_d2, galois_right), (op_right_d2, galois_left), (left_d2, direct_galois_left)) = (right?, mirrored?, direct?);
    let consistent = galois_right == (right_d2 && right_balanced)
        && galois_left == (left_d2 && left_balanced)
        && op_right_d2 == left_d2
        && direct_galois_left == galois_left;
    Ok(Verdict { left_d2, right_d2, left_balanced, right_balanced, galois_right, galois_left, consistent })
}

/// If `β` of a right coaction on `A` with coinvariants `B` has an
/// `A`-`B`-bilinear retraction, the extension must be right D2, right
/// balanced and right Galois over its canonical bialgebroid.
pub fn split_monic_check(ext: &Extension, co: &Coaction) -> Result<CheckSet> {
    let mut cs = CheckSet::new();
    if co.side != Handedness::Right {
        cs.not_applicable("retraction", "left coaction");
        return Ok(cs);
    }
    let f = co.field();
    let a = &co.algebra;
    let coinv = coinvariants(co)?;
    if !same_space(coinv.space(), &ext.image_space()) {
        cs.not_applicable("retraction", format!("coinvariants have dimension {}, B has dimension {}", coinv.dim(), ext.b().dim()));
        return Ok(cs);
    }
    let g = galois_map(co)?;
    let bs = ext.images();
    let gens = ext.b().generators();
    let id_h = Matrix::identity(f, co.bialgebroid.dim());
    let src = ActionModule::new(
        f,
        co.tensor.dim(),
        co.tensor.outer_left().to_vec(),
        bs.iter().map(|b| co.tensor.map(&[&a.right_mul(b), &id_h])).collect(),
    )?
    .with_generators(a.generators(), gens.clone());
    let dst = ActionModule::new(f, g.source.dim(), g.source.outer_left().to_vec(), bs.iter().map(|b| g.source.right_action(b)).collect())?
        .with_generators(a.generators(), gens);
    let homs = bimodule_hom(&src, &dst, Equivariance::Both)?;
    let cols: Vec<Vec<Scalar>> = homs.basis().iter().map(|h| h.mul(&g.beta).to_vec()).collect();
    let target = Matrix::identity(f, g.source.dim()).to_vec();
    let solution = if cols.is_empty() { None } else { Matrix::from_columns(f, target.len(), &cols).solve(&target) };
    let Some(x) = solution else {
        cs.not_applicable("retraction", "no A-B-bilinear retraction of β");
        return Ok(cs);
    };
    let sigma = homs.element(&x);
    cs.record("retraction", sigma.mul(&g.beta) == Matrix::identity(f, g.source.dim()), format!("{} bimodule maps searched", homs.dim()));
    if let Some(inv) = &g.inverse {
        cs.record("retraction-is-inverse", *inv == sigma, "β bijective");
    }
    let c = Constructs::build(ext)?;
    match find_right_quasibase(&c)? {
        Some(rqb) => {
            cs.record("right-d2", true, format!("quasibase of length {}", rqb.len()));
            cs.record("right-galois", right_galois(&c, &rqb)?.is_galois(), "canonical bialgebroid");
        }
        None => cs.record("right-d2", false, "no right quasibase"),
    }
    cs.record("right-balanced", is_balanced_right(ext)?, "");
    Ok(cs)
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

    fn assert_pass(cs: &CheckSet) {
        assert!(cs.all_pass(), "{:#?}", cs.failures());
    }

    #[test]
    fn trivial_extension_coaction_is_trivial() {
        let a = matrix_algebra(Q, 2);
        let c = Constructs::build(&Extension::trivial(a.clone()).unwrap()).unwrap();
        let rqb = find_right_quasibase(&c).unwrap().unwrap();
        let g = right_galois(&c, &rqb).unwrap();
        assert_pass(&g.report);
        let one = g.coaction.bialgebroid.total.unit().to_vec();
        for i in 0..4 {
            let x = a.basis_vector(i);
            assert_eq!(g.coaction.apply(&x), g.coaction.pure(&x, &one));
        }
        assert_eq!(g.galois.coinvariants.dim(), 4);
        assert_eq!(g.galois.beta, Matrix::identity(Q, 4));
    }

    #[test]
    fn s3_over_a3_right_galois() {
        let ext = s3_sub("(123)");
        let c = Constructs::build(&ext).unwrap();
        let rqb = find_right_quasibase(&c).unwrap().unwrap();
        let g = right_galois(&c, &rqb).unwrap();
        assert_pass(&g.report);
        assert!(g.is_galois());
        assert_eq!(g.galois.source.dim(), g.coaction.tensor.dim());
        for b in ext.images() {
            assert_eq!(g.coaction.apply(&b), g.coaction.pure(&b, g.coaction.bialgebroid.total.unit()));
        }
    }

    #[test]
    fn s3_over_a3_left_galois() {
        let c = Constructs::build(&s3_sub("(123)")).unwrap();
        let lqb = find_left_quasibase(&c).unwrap().unwrap();
        let g = left_coaction(&c, &lqb).unwrap();
        assert_pass(&g.report);
        assert!(g.is_galois());
    }

    #[test]
    fn left_base_compatibility_uses_the_target() {
        // a₋₁ t(r) ⊗ a₀ = a₋₁ ⊗ a₀ r holds; the variant with the source does not.
        let c = Constructs::build(&s3_sub("(123)")).unwrap();
        let lqb = find_left_quasibase(&c).unwrap().unwrap();
        let co = left_coaction(&c, &lqb).unwrap().coaction;
        let h = &co.bialgebroid;
        let id_a = Matrix::identity(Q, 6);
        let holds = |use_target: bool| {
            (0..h.base.dim()).all(|i| {
                let r = h.base.basis_vector(i);
                let u = if use_target { h.t(&r) } else { h.s(&r) };
                let lhs = co.tensor.map(&[&h.total.right_mul(&u), &id_a]);
                let rhs = co.tensor.map(&[&Matrix::identity(Q, h.dim()), &c.a().right_mul(&c.r_elem(&r))]);
                (0..6).all(|k| lhs.mul_vec(&co.delta.column(k)) == rhs.mul_vec(&co.delta.column(k)))
            })
        };
        assert!(holds(true));
        assert!(!holds(false));
    }

    #[test]
    fn balanced_examples() {
        let m2 = matrix_algebra(Q, 2);
        assert!(is_balanced_right(&Extension::over_scalars(m2.clone()).unwrap()).unwrap());
        assert!(is_balanced_right(&s3_sub("(123)")).unwrap());
        let s3 = group_algebra(Q, &Group::symmetric3());
        assert!(is_balanced_right(&Extension::trivial(s3.clone()).unwrap()).unwrap());
        assert!(is_balanced_left(&Extension::trivial(s3).unwrap()).unwrap());
    }

    #[test]
    fn characterize_examples() {
        let v = characterize(&s3_sub("(123)")).unwrap();
        assert!(v.right_d2 && v.right_balanced && v.galois_right && v.galois_left && v.consistent);
        let v = characterize(&s3_sub("(12)")).unwrap();
        assert!(!v.right_d2 && !v.left_d2 && !v.galois_right && !v.galois_left && v.consistent);
        let v = characterize(&Extension::trivial(matrix_algebra(Q, 2)).unwrap()).unwrap();
        assert!(v.left_d2 && v.right_d2 && v.left_balanced && v.right_balanced && v.galois_left && v.galois_right && v.consistent);
    }

    #[test]
    fn coinvariants_of_trivial_coaction() {
        let a = group_algebra(Q, &Group::symmetric3());
        let co = Coaction::trivial(&a, Handedness::Right).unwrap();
        assert_pass(&co.checks());
        assert_eq!(coinvariants(&co).unwrap().dim(), 6);
    }

    #[test]
    fn split_monic_examples() {
        let ext = s3_sub("(123)");
        let c = Constructs::build(&ext).unwrap();
        let rqb = find_right_quasibase(&c).unwrap().unwrap();
        let g = right_galois(&c, &rqb).unwrap();
        let cs = split_monic_check(&ext, &g.coaction).unwrap();
        assert_pass(&cs);
        assert!(cs.get("retraction-is-inverse").unwrap().passed());
        let non_d2 = s3_sub("(12)");
        let trivial = Coaction::trivial(non_d2.a(), Handedness::Right).unwrap();
        let cs = split_monic_check(&non_d2, &trivial).unwrap();
        assert_eq!(cs.get("retraction").unwrap().status, crate::report::Status::NotApplicable);
    }
}
