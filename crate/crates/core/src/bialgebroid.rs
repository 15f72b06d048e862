//! Bialgebroids stored as matrices in fixed bases, with checkers for the
//! coring and bialgebroid axioms, the right bialgebroid `T` and the left
//! bialgebroid `S` of a depth-two extension, and the pairing between them.
//!
//! Bimodule conventions over the base `R`:
//! right-handed `r·x·r′ = x s(r′) t(r)`, left-handed `r·x·r′ = s(r) t(r′) x`.

use serde::Serialize;

use crate::algebra::StructureAlgebra;
use crate::depth_two::{verify_left_quasibase, verify_right_quasibase, Constructs, LeftQuasibase, RightQuasibase};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::report::{grid, tuples, CheckSet};
use crate::subspace::{kernel, Subspace};
use crate::tensor::{bimodule_hom, ActionModule, Equivariance, HomSpace, TensorSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub handedness: Handedness,
    pub total: StructureAlgebra,
    pub base: StructureAlgebra,
    /// `dim total × dim base`, columns are images of basis elements.
    pub source: Matrix,
    pub target: Matrix,
    /// `total ⊗_R total` for the bimodule fixed by the handedness.
    pub tensor: TensorSpace,
    /// `dim tensor × dim total`.
    pub comul: Matrix,
    /// `dim base × dim total`.
    pub counit: Matrix,
}

/// The `R`-bimodule underlying a bialgebroid.
pub fn underlying_bimodule(
    h: Handedness,
    total: &StructureAlgebra,
    base: &StructureAlgebra,
    source: &Matrix,
    target: &Matrix,
) -> ActionModule {
    let (left, right): (Vec<Matrix>, Vec<Matrix>) = match h {
        Handedness::Right => {
            (target.columns().iter().map(|x| total.right_mul(x)).collect(), source.columns().iter().map(|x| total.right_mul(x)).collect())
        }
        Handedness::Left => {
            (source.columns().iter().map(|x| total.left_mul(x)).collect(), target.columns().iter().map(|x| total.left_mul(x)).collect())
        }
    };
    let gens = base.generators();
    ActionModule::new(total.field(), total.dim(), left, right)
        .expect("multiplication matrices are square")
        .with_generators(gens.clone(), gens)
}

impl Bialgebroid {
    /// Assembles a bialgebroid; `comul` receives the tensor square and returns
    /// `Δ` of each basis element in its coordinates.
    pub fn new(
        handedness: Handedness,
        total: StructureAlgebra,
        base: StructureAlgebra,
        source: Matrix,
        target: Matrix,
        counit: Matrix,
        comul: impl FnOnce(&TensorSpace) -> Result<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let (n, m) = (total.dim(), base.dim());
        for (name, mat, rows, cols) in [("source", &source, n, m), ("target", &target, n, m), ("counit", &counit, m, n)] {
            if mat.rows() != rows || mat.cols() != cols {
                return Err(Error::Dimension(format!("{name} is {}x{}, expected {rows}x{cols}", mat.rows(), mat.cols())));
            }
        }
        let module = underlying_bimodule(handedness, &total, &base, &source, &target);
        let tensor = TensorSpace::new(vec![module.clone(), module])?;
        let cols = comul(&tensor)?;
        if cols.len() != n || cols.iter().any(|c| c.len() != tensor.dim()) {
            return Err(Error::Dimension("comultiplication has the wrong shape".into()));
        }
        let comul = Matrix::from_columns(total.field(), tensor.dim(), &cols);
        Ok(Bialgebroid { handedness, total, base, source, target, tensor, comul, counit })
    }

    pub fn field(&self) -> Field {
        self.total.field()
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn s(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.source.mul_vec(r)
    }

    pub fn t(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.target.mul_vec(r)
    }

    pub fn epsilon(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.counit.mul_vec(x)
    }

    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.comul.mul_vec(x)
    }

    /// `r · x`.
    pub fn act_left(&self, r: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        match self.handedness {
            Handedness::Right => self.total.mul(x, &self.t(r)),
            Handedness::Left => self.total.mul(&self.s(r), x),
        }
    }

    /// `x · r`.
    pub fn act_right(&self, x: &[Scalar], r: &[Scalar]) -> Vec<Scalar> {
        match self.handedness {
            Handedness::Right => self.total.mul(x, &self.s(r)),
            Handedness::Left => self.total.mul(&self.t(r), x),
        }
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        self.total.basis_vector(i)
    }

    /// Factorwise product of two elements of `total ⊗_R total`, computed on
    /// representatives and re-projected.
    pub fn tensor_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let n = self.dim();
        let mut full = f.zeros(n * n);
        let ry = self.tensor.representative(y);
        for (c, ij) in self.tensor.representative(x) {
            for (d, kl) in &ry {
                let cd = f.mul(&c, d);
                let v = f.kron(self.total.basis_product(ij[0], kl[0]), self.total.basis_product(ij[1], kl[1]));
                f.axpy(&mut full, &cd, &v);
            }
        }
        self.tensor.project(&full)
    }

    /// The pair of maps on `total ⊗_R total` whose equalizer is the Takeuchi
    /// product, for the base element `r`.
    fn balance_maps(&self, r: &[Scalar]) -> (Matrix, Matrix) {
        let id = Matrix::identity(self.field(), self.dim());
        match self.handedness {
            Handedness::Right => {
                (self.tensor.map(&[&self.total.left_mul(&self.s(r)), &id]), self.tensor.map(&[&id, &self.total.left_mul(&self.t(r))]))
            }
            Handedness::Left => {
                (self.tensor.map(&[&self.total.right_mul(&self.t(r)), &id]), self.tensor.map(&[&id, &self.total.right_mul(&self.s(r))]))
            }
        }
    }

    /// The Takeuchi product `total ×_R total` as a subspace of `total ⊗_R total`.
    pub fn takeuchi(&self) -> Subspace {
        let f = self.field();
        let blocks: Vec<Matrix> = (0..self.base.dim())
            .map(|i| {
                let (l, r) = self.balance_maps(&self.base.basis_vector(i));
                l.sub(&r)
            })
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        kernel(&Matrix::vstack(f, self.tensor.dim(), &refs))
    }

    /// Same total algebra and coproduct formula with the opposite handedness:
    /// the total algebra becomes its opposite and the new source and target are
    /// chosen by `assignment`.
    pub fn opposite(&self, assignment: OppositeAssignment) -> Result<Bialgebroid> {
        let handedness = match self.handedness {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        };
        let (source, target) = match assignment {
            OppositeAssignment::Exchanged => (self.target.clone(), self.source.clone()),
            OppositeAssignment::TargetTwice => (self.target.clone(), self.target.clone()),
        };
        let full = self.tensor.full_section().mul(&self.comul);
        Bialgebroid::new(handedness, self.total.opposite(), self.base.clone(), source, target, self.counit.clone(), |ts| {
            Ok(ts.full_projection().mul(&full).columns())
        })
    }
}

/// Candidate source/target pairs for the opposite of a bialgebroid:
/// `Exchanged` is `s′ = t, t′ = s`; `TargetTwice` is `s′ = t′ = t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OppositeAssignment {
    Exchanged,
    TargetTwice,
}

/// Homomorphism and commutation properties of `s`, `t`, and `R`-bilinearity
/// of `ε` and `Δ`.
pub fn check_structure(b: &Bialgebroid) -> CheckSet {
    let f = b.field();
    let base = &b.base;
    let m = base.dim();
    let r = |i: usize| base.basis_vector(i);
    let mut cs = CheckSet::new();
    cs.compare(f, "source-unital", [vec![]], |_| (b.s(base.unit()), b.total.unit().to_vec()));
    cs.compare(f, "target-unital", [vec![]], |_| (b.t(base.unit()), b.total.unit().to_vec()));
    cs.compare(f, "source-multiplicative", tuples(m, 2), |p| {
        (b.s(base.basis_product(p[0], p[1])), b.total.mul(&b.s(&r(p[0])), &b.s(&r(p[1]))))
    });
    cs.compare(f, "target-antimultiplicative", tuples(m, 2), |p| {
        (b.t(base.basis_product(p[0], p[1])), b.total.mul(&b.t(&r(p[1])), &b.t(&r(p[0]))))
    });
    cs.compare(f, "source-target-commute", tuples(m, 2), |p| {
        let (s, t) = (b.s(&r(p[0])), b.t(&r(p[1])));
        (b.total.mul(&s, &t), b.total.mul(&t, &s))
    });
    let triples = grid(&[m, b.dim(), m]);
    cs.compare(f, "counit-bilinear", triples.clone(), |p| {
        let x = b.act_right(&b.act_left(&r(p[0]), &b.basis(p[1])), &r(p[2]));
        (b.epsilon(&x), base.mul3(&r(p[0]), &b.epsilon(&b.basis(p[1])), &r(p[2])))
    });
    cs.compare(f, "comul-bilinear", triples, |p| {
        let x = b.act_right(&b.act_left(&r(p[0]), &b.basis(p[1])), &r(p[2]));
        let d = b.delta(&b.basis(p[1]));
        let rhs = b.tensor.right_action(&r(p[2])).mul(&b.tensor.left_action(&r(p[0]))).mul_vec(&d);
        (b.delta(&x), rhs)
    });
    cs
}

/// Coassociativity in the iterated quotient `total ⊗_R total ⊗_R total` and
/// both counit laws, on every basis element.
pub fn check_coring(b: &Bialgebroid) -> CheckSet {
    let f = b.field();
    let n = b.dim();
    let mut cs = CheckSet::new();
    let s2 = b.tensor.full_section();
    let rep = s2.mul(&b.comul);
    let (coassoc, counit) = rayon::join(
        || {
            let module = b.tensor.factors()[0].clone();
            let triple = match TensorSpace::new(vec![module.clone(), module.clone(), module]) {
                Ok(t) => t,
                Err(e) => return Err(e),
            };
            let id = Matrix::identity(f, n);
            let lhs = triple.last_projection().mul(&b.comul.kron(&id)).mul(&rep);
            let inner = id.kron(&s2).mul(&id.kron(&b.comul));
            let rhs = triple.full_projection().mul(&inner).mul(&rep);
            Ok((lhs, rhs))
        },
        || {
            let mut e1 = Matrix::zeros(f, n, n * n);
            let mut e2 = Matrix::zeros(f, n, n * n);
            for i in 0..n {
                for j in 0..n {
                    let c1 = b.act_left(&b.epsilon(&b.basis(i)), &b.basis(j));
                    let c2 = b.act_right(&b.basis(i), &b.epsilon(&b.basis(j)));
                    for k in 0..n {
                        e1.set(k, i * n + j, c1[k].clone());
                        e2.set(k, i * n + j, c2[k].clone());
                    }
                }
            }
            (e1.mul(&rep), e2.mul(&rep))
        },
    );
    match coassoc {
        Ok((lhs, rhs)) => cs.compare(f, "coassociativity", tuples(n, 1), |p| (lhs.column(p[0]), rhs.column(p[0]))),
        Err(e) => cs.record("coassociativity", false, e.to_string()),
    }
    let (l1, l2) = counit;
    cs.compare(f, "left-counit", tuples(n, 1), |p| (l1.column(p[0]), b.basis(p[0])));
    cs.compare(f, "right-counit", tuples(n, 1), |p| (l2.column(p[0]), b.basis(p[0])));
    cs
}

/// The five bialgebroid axioms for the declared handedness:
/// 1. `Δ(1) = 1 ⊗ 1`; 2. `ε(1) = 1`; 3. the counit identities for products;
/// 4. `Δ` lands in the Takeuchi product; 5. `Δ` is multiplicative there.
pub fn check_bialgebroid_axioms(b: &Bialgebroid) -> CheckSet {
    let f = b.field();
    let n = b.dim();
    let base = &b.base;
    let one = b.total.unit().to_vec();
    let mut cs = CheckSet::new();
    cs.compare(f, "1-comul-unit", [vec![]], |_| (b.delta(&one), b.tensor.pure(&[&one, &one])));
    cs.compare(f, "2-counit-unit", [vec![]], |_| (b.epsilon(&one), base.unit().to_vec()));
    let e = |i: usize| b.basis(i);
    match b.handedness {
        Handedness::Right => {
            cs.compare(f, "3-counit-source", tuples(n, 2), |p| {
                let lhs = b.epsilon(b.total.basis_product(p[0], p[1]));
                (lhs, b.epsilon(&b.total.mul(&b.s(&b.epsilon(&e(p[0]))), &e(p[1]))))
            });
            cs.compare(f, "3-counit-target", tuples(n, 2), |p| {
                let lhs = b.epsilon(b.total.basis_product(p[0], p[1]));
                (lhs, b.epsilon(&b.total.mul(&b.t(&b.epsilon(&e(p[0]))), &e(p[1]))))
            });
        }
        Handedness::Left => {
            cs.compare(f, "3-counit-source", tuples(n, 2), |p| {
                let lhs = b.epsilon(b.total.basis_product(p[0], p[1]));
                (lhs, b.epsilon(&b.total.mul(&e(p[0]), &b.s(&b.epsilon(&e(p[1]))))))
            });
            cs.compare(f, "3-counit-target", tuples(n, 2), |p| {
                let lhs = b.epsilon(b.total.basis_product(p[0], p[1]));
                (lhs, b.epsilon(&b.total.mul(&e(p[0]), &b.t(&b.epsilon(&e(p[1]))))))
            });
        }
    }
    let maps: Vec<(Matrix, Matrix)> = (0..base.dim()).map(|i| b.balance_maps(&base.basis_vector(i))).collect();
    cs.compare(f, "4-takeuchi-balance", grid(&[base.dim(), n]), |p| {
        let d = b.comul.column(p[1]);
        (maps[p[0]].0.mul_vec(&d), maps[p[0]].1.mul_vec(&d))
    });
    let tak = b.takeuchi();
    let inside = (0..n).all(|i| tak.contains(&b.comul.column(i)));
    cs.record("5-image-in-takeuchi", inside, format!("takeuchi dimension {}", tak.dim()));
    let deltas: Vec<Vec<Scalar>> = b.comul.columns();
    let products: Vec<Vec<Scalar>> = {
        use rayon::prelude::*;
        tuples(n, 2).into_par_iter().map(|p| b.tensor_product(&deltas[p[0]], &deltas[p[1]])).collect()
    };
    cs.compare(f, "5-comul-multiplicative", tuples(n, 2), |p| {
        (b.delta(b.total.basis_product(p[0], p[1])), products[p[0] * n + p[1]].clone())
    });
    cs
}

/// Structure, coring and bialgebroid checks together.
pub fn check_all(b: &Bialgebroid) -> CheckSet {
    let mut cs = CheckSet::new();
    cs.extend_prefixed("structure", check_structure(b));
    cs.extend_prefixed("coring", check_coring(b));
    cs.extend_prefixed("axioms", check_bialgebroid_axioms(b));
    cs
}

fn ensure_right_quasibase(c: &Constructs, rqb: &RightQuasibase) -> Result<()> {
    let report = verify_right_quasibase(c, rqb);
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::Quasibase(format!("{:?}", report.failures())))
    }
}

fn coords<T>(x: Option<T>, what: &str) -> Result<T> {
    x.ok_or_else(|| Error::Quasibase(format!("{what} left its space")))
}

/// Source, target and counit of `T`: `s(r) = 1 ⊗ r`, `t(r) = r ⊗ 1`, `ε(t) = t¹t²`.
fn t_structure(c: &Constructs) -> Result<(Matrix, Matrix, Matrix)> {
    let f = c.field();
    let one = c.a().unit();
    let (m, n) = (c.dim_r(), c.dim_t());
    let r_elems: Vec<Vec<Scalar>> = (0..m).map(|i| c.r_elem(&f.unit_vector(m, i))).collect();
    let src = r_elems.iter().map(|r| coords(c.t_coords(&c.pure(one, r)), "1⊗r")).collect::<Result<Vec<_>>>()?;
    let tgt = r_elems.iter().map(|r| coords(c.t_coords(&c.pure(r, one)), "r⊗1")).collect::<Result<Vec<_>>>()?;
    let mu = c.mu();
    let eps = (0..n).map(|k| coords(c.r_coords(&mu.mul_vec(&c.t_elem(&f.unit_vector(n, k)))), "t¹t²")).collect::<Result<Vec<_>>>()?;
    Ok((Matrix::from_columns(f, n, &src), Matrix::from_columns(f, n, &tgt), Matrix::from_columns(f, m, &eps)))
}

/// The right bialgebroid `T = (A⊗_B A)^B` over `R = A^B` with
/// `Δ(t) = Σ_j (t¹ ⊗ γ_j(t²)) ⊗_R u_j`.
pub fn build_t(c: &Constructs, rqb: &RightQuasibase) -> Result<Bialgebroid> {
    ensure_right_quasibase(c, rqb)?;
    let f = c.field();
    let n = c.dim_t();
    let (src, tgt, eps) = t_structure(c)?;
    let id = Matrix::identity(f, c.a().dim());
    let gamma_maps: Vec<Matrix> = rqb.gamma.iter().map(|g| c.q.map(&[&id, &c.s_elem(g)])).collect();
    Bialgebroid::new(Handedness::Right, c.t_alg.clone(), c.r_alg.clone(), src, tgt, eps, |ts| {
        (0..n)
            .map(|k| {
                let t = c.t_elem(&f.unit_vector(n, k));
                let mut out = f.zeros(ts.dim());
                for (g, u) in gamma_maps.iter().zip(&rqb.u) {
                    let x = coords(c.t_coords(&g.mul_vec(&t)), "t¹⊗γ(t²)")?;
                    f.axpy(&mut out, &f.one(), &ts.pure(&[&x, u]));
                }
                Ok(out)
            })
            .collect()
    })
}

/// The same bialgebroid with the coproduct written through a left quasibase:
/// `Δ(t) = Σ_i t_i ⊗_R (β_i(t¹) ⊗ t²)`.
pub fn build_t_from_left(c: &Constructs, lqb: &LeftQuasibase) -> Result<Bialgebroid> {
    let report = verify_left_quasibase(c, lqb);
    if !report.all_pass() {
        return Err(Error::Quasibase(format!("{:?}", report.failures())));
    }
    let f = c.field();
    let n = c.dim_t();
    let (src, tgt, eps) = t_structure(c)?;
    let id = Matrix::identity(f, c.a().dim());
    let beta_maps: Vec<Matrix> = lqb.beta.iter().map(|b| c.q.map(&[&c.s_elem(b), &id])).collect();
    Bialgebroid::new(Handedness::Right, c.t_alg.clone(), c.r_alg.clone(), src, tgt, eps, |ts| {
        (0..n)
            .map(|k| {
                let t = c.t_elem(&f.unit_vector(n, k));
                let mut out = f.zeros(ts.dim());
                for (b, ti) in beta_maps.iter().zip(&lqb.t) {
                    let x = coords(c.t_coords(&b.mul_vec(&t)), "β(t¹)⊗t²")?;
                    f.axpy(&mut out, &f.one(), &ts.pure(&[ti, &x]));
                }
                Ok(out)
            })
            .collect()
    })
}

/// `x ↦ Σ u¹ α(u² x)` for `u ∈ A ⊗_B A`.
fn conjugate(c: &Constructs, u: &[Scalar], alpha: &Matrix) -> Matrix {
    let f = c.field();
    let a = c.a();
    let mut out = Matrix::zeros(f, a.dim(), a.dim());
    for (coef, idx) in c.q.representative(u) {
        let term = a.left_mul(&a.basis_vector(idx[0])).mul(alpha).mul(&a.left_mul(&a.basis_vector(idx[1])));
        out = out.add(&term.scale(&coef));
    }
    out
}

/// The left bialgebroid `S = End_B A_B` over `R`: `s(r) = λ(r)`, `t(r) = ρ(r)`,
/// `ε(α) = α(1)`, `Δ(α) = Σ_j γ_j ⊗_R u_j¹ α(u_j² −)`.
pub fn build_s(c: &Constructs, rqb: &RightQuasibase) -> Result<Bialgebroid> {
    ensure_right_quasibase(c, rqb)?;
    let f = c.field();
    let a = c.a();
    let (m, n) = (c.dim_r(), c.dim_s());
    let r_elems: Vec<Vec<Scalar>> = (0..m).map(|i| c.r_elem(&f.unit_vector(m, i))).collect();
    let src = r_elems.iter().map(|r| coords(c.s_coords(&a.left_mul(r)), "λ(r)")).collect::<Result<Vec<_>>>()?;
    let tgt = r_elems.iter().map(|r| coords(c.s_coords(&a.right_mul(r)), "ρ(r)")).collect::<Result<Vec<_>>>()?;
    let eps = (0..n).map(|k| coords(c.r_coords(&c.s_elem(&f.unit_vector(n, k)).mul_vec(a.unit())), "α(1)")).collect::<Result<Vec<_>>>()?;
    let us: Vec<Vec<Scalar>> = rqb.u.iter().map(|u| c.t_elem(u)).collect();
    Bialgebroid::new(
        Handedness::Left,
        c.s_alg.clone(),
        c.r_alg.clone(),
        Matrix::from_columns(f, n, &src),
        Matrix::from_columns(f, n, &tgt),
        Matrix::from_columns(f, m, &eps),
        |ts| {
            (0..n)
                .map(|k| {
                    let alpha = c.s_elem(&f.unit_vector(n, k));
                    let mut out = f.zeros(ts.dim());
                    for (g, u) in rqb.gamma.iter().zip(&us) {
                        let y = coords(c.s_coords(&conjugate(c, u, &alpha)), "u¹α(u²−)")?;
                        f.axpy(&mut out, &f.one(), &ts.pure(&[g, &y]));
                    }
                    Ok(out)
                })
                .collect()
        },
    )
}

/// The pairing `⟨t|α⟩ = t¹ α(t²)` with values in `R`.
#[derive(Clone, Debug)]
pub struct PairingData {
    /// `values[k][l]` is `⟨t_k|α_l⟩` in `R`-coordinates.
    pub values: Vec<Vec<Vec<Scalar>>>,
    /// `Hom(S_R, R_R)` with `α·r = t_L(r) ∘ α`.
    pub dual: HomSpace,
    /// `dim dual × dim T`: coordinates of `η(t) = ⟨t|−⟩`.
    pub eta: Matrix,
}

/// `x¹ φ(x²)` for `x ∈ A ⊗_B A` and a linear map `φ` of `A`, as an element of `A`.
fn contract(c: &Constructs, x: &[Scalar], phi: &Matrix) -> Vec<Scalar> {
    let f = c.field();
    let a = c.a();
    let mut out = f.zeros(a.dim());
    for (coef, idx) in c.q.representative(x) {
        f.axpy(&mut out, &coef, &a.mul(&a.basis_vector(idx[0]), &phi.column(idx[1])));
    }
    out
}

/// `φ(x¹) x²`.
fn contract_left(c: &Constructs, phi: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
    let f = c.field();
    let a = c.a();
    let mut out = f.zeros(a.dim());
    for (coef, idx) in c.q.representative(x) {
        f.axpy(&mut out, &coef, &a.mul(&phi.column(idx[0]), &a.basis_vector(idx[1])));
    }
    out
}

pub fn pairing(c: &Constructs, t: &Bialgebroid, s: &Bialgebroid) -> Result<PairingData> {
    let f = c.field();
    let (nt, ns, m) = (t.dim(), s.dim(), c.dim_r());
    let alphas: Vec<Matrix> = (0..ns).map(|l| c.s_elem(&f.unit_vector(ns, l))).collect();
    let mut values = Vec::with_capacity(nt);
    for k in 0..nt {
        let x = c.t_elem(&f.unit_vector(nt, k));
        let row = alphas.iter().map(|al| coords(c.r_coords(&contract(c, &x, al)), "⟨t|α⟩")).collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    let s_right: Vec<Matrix> = (0..m).map(|i| s.total.left_mul(&s.t(&s.base.basis_vector(i)))).collect();
    let r_right: Vec<Matrix> = (0..m).map(|i| s.base.right_mul(&s.base.basis_vector(i))).collect();
    let gens = s.base.generators();
    let s_mod = ActionModule::new(f, ns, vec![], s_right)?.with_generators(vec![], gens.clone());
    let r_mod = ActionModule::new(f, m, vec![], r_right)?.with_generators(vec![], gens);
    let dual = bimodule_hom(&s_mod, &r_mod, Equivariance::Right)?;
    let eta_cols = (0..nt)
        .map(|k| {
            let cols: Vec<Vec<Scalar>> = values[k].clone();
            dual.coordinates(&Matrix::from_columns(f, m, &cols)).ok_or_else(|| Error::Quasibase("⟨t|−⟩ is not right R-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let eta = Matrix::from_columns(f, dual.dim(), &eta_cols);
    Ok(PairingData { values, dual, eta })
}

/// Checks of the pairing between `T` and `S` built from the same right
/// quasibase: `η` bijective with inverse `φ ↦ Σ_j φ(γ_j) u_j`, compatibility
/// with `Δ_T` and `ε_T`, and nondegeneracy of both pairings.
pub fn verify_duality(c: &Constructs, rqb: &RightQuasibase, t: &Bialgebroid, s: &Bialgebroid) -> CheckSet {
    let f = c.field();
    let (nt, ns, m) = (t.dim(), s.dim(), c.dim_r());
    let mut cs = CheckSet::new();
    let pd = match pairing(c, t, s) {
        Ok(p) => p,
        Err(e) => {
            cs.record("pairing-right-linear", false, e.to_string());
            return cs;
        }
    };
    cs.record("pairing-right-linear", true, format!("{nt} elements"));
    let rank = pd.eta.rank();
    cs.record("eta-bijective", rank == nt && pd.dual.dim() == nt, format!("rank {rank}, dim T {nt}, dim Hom(S_R, R_R) {}", pd.dual.dim()));
    let inverse = |phi: &Matrix| -> Vec<Scalar> {
        let mut out = f.zeros(nt);
        for (g, u) in rqb.gamma.iter().zip(&rqb.u) {
            f.axpy(&mut out, &f.one(), &t.act_left(&phi.mul_vec(g), u));
        }
        out
    };
    cs.compare(f, "eta-inverse-on-T", tuples(nt, 1), |p| {
        let phi = pd.dual.element(&pd.eta.column(p[0]));
        (inverse(&phi), f.unit_vector(nt, p[0]))
    });
    cs.compare(f, "eta-inverse-on-dual", tuples(pd.dual.dim(), 1), |p| {
        let phi = &pd.dual.basis()[p[0]];
        (pd.eta.mul_vec(&inverse(phi)), f.unit_vector(pd.dual.dim(), p[0]))
    });
    let pair = |x: &[Scalar], l: usize| -> Vec<Scalar> {
        let mut out = f.zeros(m);
        for (k, xk) in x.iter().enumerate() {
            f.axpy(&mut out, xk, &pd.values[k][l]);
        }
        out
    };
    let reps: Vec<Vec<(Scalar, Vec<usize>)>> = (0..nt).map(|k| t.tensor.representative(&t.comul.column(k))).collect();
    cs.compare(f, "comul-compatible", grid(&[nt, ns, ns]), |p| {
        let mut lhs = f.zeros(m);
        for (coef, ij) in &reps[p[0]] {
            let x = t.act_right(&t.basis(ij[0]), &pd.values[ij[1]][p[2]]);
            f.axpy(&mut lhs, coef, &pair(&x, p[1]));
        }
        let prod = s.total.basis_product(p[1], p[2]);
        let mut rhs = f.zeros(m);
        for (l, cl) in prod.iter().enumerate() {
            f.axpy(&mut rhs, cl, &pd.values[p[0]][l]);
        }
        (lhs, rhs)
    });
    let id = s.total.unit().to_vec();
    cs.compare(f, "counit-compatible", tuples(nt, 1), |p| {
        let mut v = f.zeros(m);
        for (l, cl) in id.iter().enumerate() {
            f.axpy(&mut v, cl, &pd.values[p[0]][l]);
        }
        (v, t.epsilon(&t.basis(p[0])))
    });
    let flat_t = Matrix::from_rows(f, ns * m, pd.values.iter().map(|row| row.concat()).collect());
    let flat_s = Matrix::from_rows(f, nt * m, (0..ns).map(|l| pd.values.iter().flat_map(|row| row[l].clone()).collect()).collect());
    let (rt, rs) = (flat_t.rank(), flat_s.rank());
    cs.record("pairing-rank", rt == nt && rs == ns && nt == ns, format!("ranks {rt}, {rs}; dim T {nt}, dim S {ns}"));
    let left = (0..ns)
        .map(|l| {
            let al = c.s_elem(&f.unit_vector(ns, l));
            (0..nt).map(|k| c.r_coords(&contract_left(c, &al, &c.t_elem(&f.unit_vector(nt, k))))).collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>();
    match left {
        Some(table) => {
            let by_alpha = Matrix::from_rows(f, nt * m, table.iter().map(|row| row.concat()).collect());
            let by_t = Matrix::from_rows(f, ns * m, (0..nt).map(|k| table.iter().flat_map(|row| row[k].clone()).collect()).collect());
            let (ra, rt) = (by_alpha.rank(), by_t.rank());
            cs.record("left-pairing-nondegenerate", ra == ns && rt == nt, format!("ranks {ra}, {rt}"));
        }
        None => cs.record("left-pairing-nondegenerate", false, "[α|t] is not in R"),
    }
    cs
}

/// Dual-basis witnesses of finite projectivity: `α = Σ_j t_L(h_j(α)) ∘ γ_j`
/// with `h_j(α) = u_j¹ α(u_j²)`, and, given a left quasibase,
/// `t = Σ_i t_i · f_i(t)` with `f_i(t) = β_i(t¹) t²`.
pub fn projectivity_witnesses(
    c: &Constructs,
    rqb: &RightQuasibase,
    lqb: Option<&LeftQuasibase>,
    t: &Bialgebroid,
    s: &Bialgebroid,
) -> CheckSet {
    let f = c.field();
    let (nt, ns) = (t.dim(), s.dim());
    let mut cs = CheckSet::new();
    let us: Vec<Vec<Scalar>> = rqb.u.iter().map(|u| c.t_elem(u)).collect();
    cs.compare(f, "S-dual-basis", tuples(ns, 1), |p| {
        let alpha = c.s_elem(&f.unit_vector(ns, p[0]));
        let mut sum = f.zeros(ns);
        for (g, u) in rqb.gamma.iter().zip(&us) {
            match c.r_coords(&contract(c, u, &alpha)) {
                Some(h) => f.axpy(&mut sum, &f.one(), &s.act_right(g, &h)),
                None => return (vec![], f.unit_vector(ns, p[0])),
            }
        }
        (sum, f.unit_vector(ns, p[0]))
    });
    match lqb {
        Some(lqb) if verify_left_quasibase(c, lqb).all_pass() => {
            cs.compare(f, "T-dual-basis", tuples(nt, 1), |p| {
                let x = c.t_elem(&f.unit_vector(nt, p[0]));
                let mut sum = f.zeros(nt);
                for (ti, bi) in lqb.t.iter().zip(&lqb.beta) {
                    match c.r_coords(&contract_left(c, &c.s_elem(bi), &x)) {
                        Some(h) => f.axpy(&mut sum, &f.one(), &t.act_right(ti, &h)),
                        None => return (vec![], f.unit_vector(nt, p[0])),
                    }
                }
                (sum, f.unit_vector(nt, p[0]))
            });
        }
        Some(_) => cs.record("T-dual-basis", false, "left quasibase fails verification"),
        None => cs.not_applicable("T-dual-basis", "no left quasibase"),
    }
    cs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, matrix_algebra, subgroup_extension, Extension};
    use crate::depth_two::{find_left_quasibase, find_right_quasibase};
    use crate::groups::Group;

    const Q: Field = Field::Rationals;

    fn s3_a3() -> Constructs {
        let g = Group::symmetric3();
        let ext = subgroup_extension(Q, &g, &g.closure(&[g.index_of("(123)").unwrap()])).unwrap();
        Constructs::build(&ext).unwrap()
    }

    fn both(c: &Constructs) -> (RightQuasibase, Bialgebroid, Bialgebroid) {
        let rqb = find_right_quasibase(c).unwrap().unwrap();
        let t = build_t(c, &rqb).unwrap();
        let s = build_s(c, &rqb).unwrap();
        (rqb, t, s)
    }

    fn assert_pass(cs: &CheckSet) {
        assert!(cs.all_pass(), "{:#?}", cs.failures());
    }

    #[test]
    fn matrix_algebra_over_itself_is_one_dimensional() {
        let c = Constructs::build(&Extension::trivial(matrix_algebra(Q, 2)).unwrap()).unwrap();
        let (rqb, t, s) = both(&c);
        assert_eq!((t.dim(), s.dim(), t.base.dim()), (1, 1, 1));
        assert_eq!(t.tensor.dim(), 1);
        assert_eq!(t.delta(t.total.unit()), t.tensor.pure(&[t.total.unit(), t.total.unit()]));
        assert_eq!(t.epsilon(t.total.unit()), vec![Q.one()]);
        assert_pass(&check_all(&t));
        assert_pass(&check_all(&s));
        let d = verify_duality(&c, &rqb, &t, &s);
        assert_pass(&d);
        let pd = pairing(&c, &t, &s).unwrap();
        assert_eq!(pd.values, vec![vec![vec![Q.one()]]]);
    }

    #[test]
    fn s3_over_a3_bialgebroids() {
        let c = s3_a3();
        let (rqb, t, s) = both(&c);
        assert_eq!((t.dim(), s.dim(), t.base.dim()), (8, 8, 4));
        for b in [&t, &s] {
            let cs = check_all(b);
            assert_pass(&cs);
            assert_eq!(cs.get("axioms.3-counit-source").unwrap().detail, "64 cases");
        }
        assert_pass(&verify_duality(&c, &rqb, &t, &s));
        let lqb = find_left_quasibase(&c).unwrap().unwrap();
        assert_pass(&projectivity_witnesses(&c, &rqb, Some(&lqb), &t, &s));
    }

    #[test]
    fn counit_is_multiplication_on_one() {
        let c = s3_a3();
        let (_, t, _) = both(&c);
        let one = c.r_coords(c.a().unit()).unwrap();
        assert_eq!(t.epsilon(t.total.unit()), one);
    }

    #[test]
    fn zero_comultiplication_breaks_counit_law() {
        let c = s3_a3();
        let (_, mut t, _) = both(&c);
        t.comul = Matrix::zeros(Q, t.tensor.dim(), t.dim());
        let cs = check_coring(&t);
        assert!(!cs.get("left-counit").unwrap().passed());
        assert!(!cs.get("right-counit").unwrap().passed());
    }

    #[test]
    fn swapped_source_and_target_break_axioms() {
        let c = s3_a3();
        let (_, mut t, _) = both(&c);
        std::mem::swap(&mut t.source, &mut t.target);
        let cs = check_bialgebroid_axioms(&t);
        let three = cs.get("3-counit-source").unwrap().passed() && cs.get("3-counit-target").unwrap().passed();
        assert!(!three || !cs.get("4-takeuchi-balance").unwrap().passed());
    }

    #[test]
    fn scalar_base_group_algebra() {
        for n in [2, 3] {
            let a = group_algebra(Q, &Group::cyclic(n));
            let c = Constructs::build(&Extension::over_scalars(a).unwrap()).unwrap();
            let (rqb, t, s) = both(&c);
            // T = A ⊗ A, R = A.
            assert_eq!(t.dim(), n * n);
            assert_eq!(t.base.dim(), n);
            let cs = check_all(&t);
            assert_pass(&cs);
            assert!(cs.get("axioms.4-takeuchi-balance").is_some());
            assert_pass(&check_all(&s));
            assert_pass(&verify_duality(&c, &rqb, &t, &s));
        }
    }

    #[test]
    fn opposite_with_exchanged_source_and_target() {
        let c = s3_a3();
        let (_, t, _) = both(&c);
        let left = t.opposite(OppositeAssignment::Exchanged).unwrap();
        assert_eq!(left.handedness, Handedness::Left);
        assert_pass(&check_all(&left));
        let printed = t.opposite(OppositeAssignment::TargetTwice).unwrap();
        assert!(!check_all(&printed).all_pass());
    }

    #[test]
    fn quasibase_failing_verification_is_rejected() {
        let c = s3_a3();
        let mut rqb = find_right_quasibase(&c).unwrap().unwrap();
        rqb.gamma.pop();
        rqb.u.pop();
        assert!(matches!(build_t(&c, &rqb), Err(Error::Quasibase(_))));
        assert!(matches!(build_s(&c, &rqb), Err(Error::Quasibase(_))));
    }

    #[test]
    fn left_and_right_quasibases_give_the_same_coproduct() {
        let c = s3_a3();
        let rqb = find_right_quasibase(&c).unwrap().unwrap();
        let lqb = find_left_quasibase(&c).unwrap().unwrap();
        let from_right = build_t(&c, &rqb).unwrap();
        let from_left = build_t_from_left(&c, &lqb).unwrap();
        assert_eq!(from_right.comul, from_left.comul);
        assert_eq!(from_right.counit, from_left.counit);
    }
}
