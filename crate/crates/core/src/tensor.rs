//! Bimodules given by action matrices, balanced tensor products as explicit
//! quotient spaces, centralized subspaces and spaces of equivariant maps.
//!
//! A `k`-fold product `M_1 ⊗ … ⊗ M_k` is built left to right: step `i` forms
//! `Q_{i-1} ⊗ M_i` and divides by the balancing relations over the algebra
//! acting between `M_{i-1}` and `M_i`. Full-space coordinates are row-major in
//! the factor indices.

use std::sync::OnceLock;

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::report::{tuples, CheckSet};
use crate::subspace::{kernel, Subspace};

/// A vector space with a left action of one algebra and a right action of
/// another, one matrix per basis element of each acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionModule {
    field: Field,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    left_gens: Vec<usize>,
    right_gens: Vec<usize>,
}

impl ActionModule {
    pub fn new(field: Field, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        for m in left.iter().chain(&right) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!("action matrix is {}x{}, module has dimension {dim}", m.rows(), m.cols())));
            }
        }
        let left_gens = (0..left.len()).collect();
        let right_gens = (0..right.len()).collect();
        Ok(ActionModule { field, dim, left, right, left_gens, right_gens })
    }

    /// Restricts equivariance systems to the given generators of the acting algebras.
    pub fn with_generators(mut self, left_gens: Vec<usize>, right_gens: Vec<usize>) -> Self {
        self.left_gens = left_gens;
        self.right_gens = right_gens;
        self
    }

    /// `a` as a module by multiplication through `left_map: L -> A` and
    /// `right_map: R -> A` (columns are images of basis elements).
    pub fn over(a: &StructureAlgebra, left_map: &Matrix, left_gens: Vec<usize>, right_map: &Matrix, right_gens: Vec<usize>) -> Self {
        let left = left_map.columns().iter().map(|x| a.left_mul(x)).collect();
        let right = right_map.columns().iter().map(|x| a.right_mul(x)).collect();
        ActionModule { field: a.field(), dim: a.dim(), left, right, left_gens, right_gens }
    }

    /// `a` as an `a`-`a`-bimodule.
    pub fn regular(a: &StructureAlgebra) -> Self {
        let id = Matrix::identity(a.field(), a.dim());
        Self::over(a, &id, a.generators(), &id, a.generators())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left_gens(&self) -> &[usize] {
        &self.left_gens
    }

    pub fn right_gens(&self) -> &[usize] {
        &self.right_gens
    }

    /// Left action of the element with the given coordinates.
    pub fn left_action(&self, r: &[Scalar]) -> Matrix {
        Matrix::combination(r, &self.left).unwrap_or_else(|| Matrix::zeros(self.field, self.dim, self.dim))
    }

    pub fn right_action(&self, r: &[Scalar]) -> Matrix {
        Matrix::combination(r, &self.right).unwrap_or_else(|| Matrix::zeros(self.field, self.dim, self.dim))
    }

    /// Unitality, multiplicativity (on basis pairs) and commutation of the two actions.
    pub fn checks(&self, left_alg: &StructureAlgebra, right_alg: &StructureAlgebra) -> CheckSet {
        let f = self.field;
        let id = Matrix::identity(f, self.dim).to_vec();
        let mut cs = CheckSet::new();
        cs.compare(f, "left-unital", [vec![]], |_| (self.left_action(left_alg.unit()).to_vec(), id.clone()));
        cs.compare(f, "right-unital", [vec![]], |_| (self.right_action(right_alg.unit()).to_vec(), id.clone()));
        cs.compare(f, "left-multiplicative", tuples(self.left.len(), 2), |t| {
            (self.left_action(left_alg.basis_product(t[0], t[1])).to_vec(), self.left[t[0]].mul(&self.left[t[1]]).to_vec())
        });
        cs.compare(f, "right-multiplicative", tuples(self.right.len(), 2), |t| {
            (self.right_action(right_alg.basis_product(t[0], t[1])).to_vec(), self.right[t[1]].mul(&self.right[t[0]]).to_vec())
        });
        let pairs = crate::report::grid(&[self.left.len(), self.right.len()]);
        cs.compare(f, "actions-commute", pairs, |t| {
            (self.left[t[0]].mul(&self.right[t[1]]).to_vec(), self.right[t[1]].mul(&self.left[t[0]]).to_vec())
        });
        cs
    }
}

#[derive(Clone, Debug)]
struct Step {
    left_dim: usize,
    factor_dim: usize,
    project: Matrix,
    section: Matrix,
}

/// `M_1 ⊗_{R_1} M_2 ⊗ … ⊗_{R_{k-1}} M_k` as a quotient of the full tensor space.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    field: Field,
    factors: Vec<ActionModule>,
    steps: Vec<Step>,
    dim: usize,
    outer_left: OnceLock<Vec<Matrix>>,
    outer_right: OnceLock<Vec<Matrix>>,
}

impl TensorSpace {
    pub fn new(factors: Vec<ActionModule>) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::Dimension("no factors".into()))?;
        let field = first.field;
        let mut steps = Vec::new();
        let mut dim = first.dim;
        let mut right_actions: Vec<Matrix> = first.right.clone();
        for (k, pair) in factors.windows(2).enumerate() {
            let (x, y) = (&pair[0], &pair[1]);
            if x.right.len() != y.left.len() || y.field != field {
                return Err(Error::ActionMismatch(format!(
                    "factor {k} has {} right actions, factor {} has {} left actions",
                    x.right.len(),
                    k + 1,
                    y.left.len()
                )));
            }
            let mut gens: Vec<usize> = x.right_gens.iter().chain(&y.left_gens).copied().collect();
            gens.sort_unstable();
            gens.dedup();
            let id_y = Matrix::identity(field, y.dim);
            let id_x = Matrix::identity(field, dim);
            let mut rel_rows = Matrix::zeros(field, 0, dim * y.dim);
            for &g in &gens {
                let rel = right_actions[g].kron(&id_y).sub(&id_x.kron(&y.left[g]));
                for r in rel.transpose().row_vecs() {
                    if r.iter().any(|c| !field.is_zero(c)) {
                        rel_rows.push_row(r);
                    }
                }
            }
            let relations = Subspace::row_space(&rel_rows);
            let (project, section) = relations.quotient_maps();
            let q = project.rows();
            let step = Step { left_dim: dim, factor_dim: y.dim, project, section };
            right_actions = y.right.iter().map(|r| step.project.mul(&id_x.kron(r)).mul(&step.section)).collect();
            steps.push(step);
            dim = q;
        }
        Ok(TensorSpace { field, factors, steps, dim, outer_left: OnceLock::new(), outer_right: OnceLock::new() })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[ActionModule] {
        &self.factors
    }

    pub fn full_dim(&self) -> usize {
        self.factors.iter().map(|m| m.dim).product()
    }

    /// Class of a pure tensor `x_1 ⊗ … ⊗ x_k`.
    pub fn pure(&self, xs: &[&[Scalar]]) -> Vec<Scalar> {
        assert_eq!(xs.len(), self.factors.len(), "wrong number of tensor factors");
        let mut v = xs[0].to_vec();
        for (step, x) in self.steps.iter().zip(&xs[1..]) {
            v = step.project.mul_vec(&self.field.kron(&v, x));
        }
        v
    }

    /// `p ⊗ x` where `p` is given in the coordinates of the product of the
    /// first `k - 1` factors (which is built exactly as that shorter product).
    pub fn append(&self, prefix: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        self.last_projection().mul_vec(&self.field.kron(prefix, x))
    }

    /// Projection of the last step, from `Q_{k-1} ⊗ M_k` onto the quotient.
    pub fn last_projection(&self) -> &Matrix {
        &self.steps.last().expect("at least two factors").project
    }

    /// Class of a basis pure tensor.
    pub fn pure_basis(&self, idx: &[usize]) -> Vec<Scalar> {
        let vs: Vec<Vec<Scalar>> = idx.iter().zip(&self.factors).map(|(&i, m)| self.field.unit_vector(m.dim, i)).collect();
        let refs: Vec<&[Scalar]> = vs.iter().map(|v| v.as_slice()).collect();
        self.pure(&refs)
    }

    /// Projection from the full tensor space (dim × full_dim).
    pub fn full_projection(&self) -> Matrix {
        let f = self.field;
        let mut p = Matrix::identity(f, self.factors[0].dim);
        for step in &self.steps {
            p = step.project.mul(&p.kron(&Matrix::identity(f, step.factor_dim)));
        }
        p
    }

    /// Chosen representatives in the full tensor space (full_dim × dim).
    pub fn full_section(&self) -> Matrix {
        let f = self.field;
        let mut s = Matrix::identity(f, self.factors[0].dim);
        for step in &self.steps {
            s = s.kron(&Matrix::identity(f, step.factor_dim)).mul(&step.section);
        }
        s
    }

    pub fn project(&self, full: &[Scalar]) -> Vec<Scalar> {
        self.full_projection().mul_vec(full)
    }

    pub fn section(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.full_section().mul_vec(v)
    }

    /// Representative of `v` as a list of `(coefficient, basis indices)` pure tensors.
    pub fn representative(&self, v: &[Scalar]) -> Vec<(Scalar, Vec<usize>)> {
        let f = self.field;
        let dims: Vec<usize> = self.factors.iter().map(|m| m.dim).collect();
        let full = self.section(v);
        let mut out = Vec::new();
        for (flat, c) in full.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let mut idx = vec![0; dims.len()];
            let mut rest = flat;
            for (slot, d) in idx.iter_mut().zip(&dims).rev() {
                *slot = rest % d;
                rest /= d;
            }
            out.push((c.clone(), idx));
        }
        out
    }

    /// The map `target ← self` induced by factorwise maps `f_i: M_i -> N_i`.
    /// The maps must respect the balancing relations.
    pub fn map_to(&self, target: &TensorSpace, maps: &[&Matrix]) -> Matrix {
        assert_eq!(maps.len(), self.factors.len());
        assert_eq!(target.factors.len(), self.factors.len());
        let mut m = maps[0].clone();
        for ((src, dst), f) in self.steps.iter().zip(&target.steps).zip(&maps[1..]) {
            m = dst.project.mul(&m.kron(f)).mul(&src.section);
        }
        m
    }

    /// The endomorphism induced by factorwise endomorphisms.
    pub fn map(&self, maps: &[&Matrix]) -> Matrix {
        self.map_to(self, maps)
    }

    /// Induced action of the outer left algebra, one matrix per basis element.
    pub fn outer_left(&self) -> &[Matrix] {
        self.outer_left.get_or_init(|| {
            let f = self.field;
            self.factors[0]
                .left
                .iter()
                .map(|l| {
                    let mut m = l.clone();
                    for step in &self.steps {
                        m = step.project.mul(&m.kron(&Matrix::identity(f, step.factor_dim))).mul(&step.section);
                    }
                    m
                })
                .collect()
        })
    }

    /// Induced action of the outer right algebra.
    pub fn outer_right(&self) -> &[Matrix] {
        self.outer_right.get_or_init(|| {
            let last = self.factors.last().unwrap();
            match self.steps.last() {
                None => last.right.clone(),
                Some(step) => {
                    let id = Matrix::identity(self.field, step.left_dim);
                    last.right.iter().map(|r| step.project.mul(&id.kron(r)).mul(&step.section)).collect()
                }
            }
        })
    }

    pub fn left_action(&self, r: &[Scalar]) -> Matrix {
        Matrix::combination(r, self.outer_left()).unwrap_or_else(|| Matrix::zeros(self.field, self.dim, self.dim))
    }

    pub fn right_action(&self, r: &[Scalar]) -> Matrix {
        Matrix::combination(r, self.outer_right()).unwrap_or_else(|| Matrix::zeros(self.field, self.dim, self.dim))
    }

    /// The quotient with its outer actions, for nesting in further products.
    pub fn as_module(&self) -> ActionModule {
        ActionModule {
            field: self.field,
            dim: self.dim,
            left: self.outer_left().to_vec(),
            right: self.outer_right().to_vec(),
            left_gens: self.factors[0].left_gens.clone(),
            right_gens: self.factors.last().unwrap().right_gens.clone(),
        }
    }

    /// Structural invariants: full-rank projection, right-inverse section, and
    /// every balancing relation (on all basis elements) projecting to zero.
    pub fn checks(&self) -> CheckSet {
        let f = self.field;
        let mut cs = CheckSet::new();
        let p = self.full_projection();
        let s = self.full_section();
        cs.record("projection-full-rank", p.rank() == self.dim, format!("rank {} of {}", p.rank(), self.dim));
        cs.compare(f, "section-right-inverse", [vec![]], |_| (p.mul(&s).to_vec(), Matrix::identity(f, self.dim).to_vec()));
        let dims: Vec<usize> = self.factors.iter().map(|m| m.dim).collect();
        for k in 0..self.steps.len() {
            let (x, y) = (&self.factors[k], &self.factors[k + 1]);
            let mut cases = Vec::new();
            for r in 0..x.right.len() {
                for t in crate::report::grid(&dims) {
                    let mut c = vec![r];
                    c.extend(t);
                    cases.push(c);
                }
            }
            cs.compare(f, &format!("relations-vanish-{k}"), cases, |c| {
                let r = c[0];
                let idx = &c[1..];
                let units: Vec<Vec<Scalar>> = idx.iter().zip(&dims).map(|(&i, &d)| f.unit_vector(d, i)).collect();
                let mut lhs = units.clone();
                lhs[k] = x.right[r].mul_vec(&units[k]);
                let mut rhs = units;
                rhs[k + 1] = y.left[r].mul_vec(&rhs[k + 1]);
                let refs = |v: &Vec<Vec<Scalar>>| -> Vec<Scalar> {
                    let slices: Vec<&[Scalar]> = v.iter().map(|x| x.as_slice()).collect();
                    self.pure(&slices)
                };
                (refs(&lhs), refs(&rhs))
            });
        }
        cs
    }
}

/// `tensor_over(factors)`: the balanced product of the given modules; each
/// adjacent pair is balanced over the algebra acting between them.
pub fn tensor_over(factors: &[ActionModule]) -> Result<TensorSpace> {
    TensorSpace::new(factors.to_vec())
}

/// The canonical map `(X ⊗ Y) ⊗ Z -> X ⊗ (Y ⊗ Z)` between the two nested
/// constructions; returns the map with both spaces.
pub fn rebracket(x: &ActionModule, y: &ActionModule, z: &ActionModule) -> Result<(Matrix, TensorSpace, TensorSpace)> {
    let f = x.field;
    let xy = TensorSpace::new(vec![x.clone(), y.clone()])?;
    let yz = TensorSpace::new(vec![y.clone(), z.clone()])?;
    let left = TensorSpace::new(vec![xy.as_module(), z.clone()])?;
    let right = TensorSpace::new(vec![x.clone(), yz.as_module()])?;
    let to_full = xy.full_section().kron(&Matrix::identity(f, z.dim)).mul(&left.full_section());
    let from_full = right.full_projection().mul(&Matrix::identity(f, x.dim).kron(&yz.full_projection()));
    Ok((from_full.mul(&to_full), left, right))
}

/// Coordinates of `map` restricted to an invariant subspace, in its echelon basis.
pub fn restrict(map: &Matrix, space: &Subspace) -> Option<Matrix> {
    let cols = space.basis_vectors().iter().map(|v| space.coordinates(&map.mul_vec(v))).collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(map.field(), space.dim(), &cols))
}

/// Elements `x` of the tensor space with `l_i x = r_i x` for every pair.
#[derive(Clone, Debug)]
pub struct CentralizedSubspace {
    pub space: Subspace,
    pub algebra: Option<StructureAlgebra>,
}

/// The subspace of `ts` on which the outer left and right actions of each
/// element of `b` agree (`b` given as coordinate vectors in the outer algebra).
pub fn centralized_subspace(ts: &TensorSpace, b: &[Vec<Scalar>]) -> Subspace {
    let f = ts.field();
    let blocks: Vec<Matrix> = b.iter().map(|x| ts.left_action(x).sub(&ts.right_action(x))).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    kernel(&Matrix::vstack(f, ts.dim(), &refs))
}

/// For the tensor square `A ⊗_B A` with outer `A`-actions and a centralized
/// subspace `T`: the algebra `tt′ = t′¹t¹ ⊗ t²t′²` with unit `1 ⊗ 1`, in the
/// echelon basis of `T`.
pub fn tensor_square_algebra(a: &StructureAlgebra, ts: &TensorSpace, space: &Subspace) -> Result<StructureAlgebra> {
    let f = a.field();
    let basis = space.basis_vectors();
    let d = basis.len();
    let mut products = Vec::with_capacity(d * d);
    for t in &basis {
        for t2 in &basis {
            let prod = tensor_square_product(a, ts, t, t2);
            products.push(space.coordinates(&prod).ok_or_else(|| Error::InvalidAlgebra("centralized subspace not closed".into()))?);
        }
    }
    let one = ts.pure(&[a.unit(), a.unit()]);
    let unit = space.coordinates(&one).ok_or_else(|| Error::NonUnital("1⊗1 not in the centralized subspace".into()))?;
    let alg = StructureAlgebra::new(f, d, products, unit)?;
    if let Some(defect) = alg.validate().first() {
        return Err(Error::InvalidAlgebra(format!("{} fails at {:?}", defect.identity, defect.indices)));
    }
    Ok(alg)
}

/// `t t′` for elements of `A ⊗_B A` (quotient coordinates), using a representative of `t′`.
pub fn tensor_square_product(a: &StructureAlgebra, ts: &TensorSpace, t: &[Scalar], t2: &[Scalar]) -> Vec<Scalar> {
    let f = a.field();
    let mut out = f.zeros(ts.dim());
    for (c, idx) in ts.representative(t2) {
        let v = ts.outer_left()[idx[0]].mul(&ts.outer_right()[idx[1]]).mul_vec(t);
        f.axpy(&mut out, &c, &v);
    }
    out
}

/// Which actions a homomorphism must commute with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivariance {
    None,
    Left,
    Right,
    Both,
}

/// A space of linear maps `M -> N`, stored by row-major flattening.
#[derive(Clone, Debug)]
pub struct HomSpace {
    field: Field,
    domain: usize,
    codomain: usize,
    space: Subspace,
    basis: Vec<Matrix>,
}

impl HomSpace {
    fn from_space(field: Field, domain: usize, codomain: usize, space: Subspace) -> Self {
        let basis = space.basis_vectors().into_iter().map(|v| Matrix::from_vec(field, codomain, domain, v)).collect();
        HomSpace { field, domain, codomain, space, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn domain_dim(&self) -> usize {
        self.domain
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(&m.to_vec())
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coordinates(&m.to_vec())
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        Matrix::from_vec(self.field, self.codomain, self.domain, self.space.combine(coords))
    }
}

/// Linear system whose solutions are the `X: n_dom -> n_cod` with `X m_i = n_i X`.
fn intertwiner_rows(field: Field, dom: usize, cod: usize, pairs: &[(&Matrix, &Matrix)]) -> Matrix {
    let id_dom = Matrix::identity(field, dom);
    let id_cod = Matrix::identity(field, cod);
    let mut rows = Matrix::zeros(field, 0, dom * cod);
    for (m, n) in pairs {
        // vec(N X) = (N ⊗ I) vec X and vec(X M) = (I ⊗ Mᵀ) vec X, row-major.
        let block = n.kron(&id_dom).sub(&id_cod.kron(&m.transpose()));
        for r in block.row_vecs() {
            if r.iter().any(|c| !field.is_zero(c)) {
                rows.push_row(r);
            }
        }
    }
    rows
}

/// Maps `M -> N` commuting with the declared actions. Constraints use the
/// generators of the acting algebras; the result is re-verified on every
/// basis element and an inconsistency is an [`Error::ActionMismatch`].
pub fn bimodule_hom(m: &ActionModule, n: &ActionModule, eq: Equivariance) -> Result<HomSpace> {
    let f = m.field;
    let (use_left, use_right) = match eq {
        Equivariance::None => (false, false),
        Equivariance::Left => (true, false),
        Equivariance::Right => (false, true),
        Equivariance::Both => (true, true),
    };
    if use_left && m.left.len() != n.left.len() || use_right && m.right.len() != n.right.len() {
        return Err(Error::ActionMismatch("domain and codomain are acted on by different algebras".into()));
    }
    let mut pairs = Vec::new();
    if use_left {
        pairs.extend(m.left_gens.iter().map(|&g| (&m.left[g], &n.left[g])));
    }
    if use_right {
        pairs.extend(m.right_gens.iter().map(|&g| (&m.right[g], &n.right[g])));
    }
    let space = kernel(&intertwiner_rows(f, m.dim, n.dim, &pairs));
    let hs = HomSpace::from_space(f, m.dim, n.dim, space);
    let mut all: Vec<(&Matrix, &Matrix)> = Vec::new();
    if use_left {
        all.extend(m.left.iter().zip(&n.left));
    }
    if use_right {
        all.extend(m.right.iter().zip(&n.right));
    }
    for x in &hs.basis {
        for (a, b) in &all {
            if x.mul(a) != b.mul(x) {
                return Err(Error::ActionMismatch("generator constraints do not imply full equivariance".into()));
            }
        }
    }
    Ok(hs)
}

/// All `X ∈ End_k(k^n)` commuting with every given matrix.
pub fn commutant(field: Field, n: usize, mats: &[Matrix]) -> HomSpace {
    let pairs: Vec<(&Matrix, &Matrix)> = mats.iter().map(|m| (m, m)).collect();
    HomSpace::from_space(field, n, n, kernel(&intertwiner_rows(field, n, n, &pairs)))
}

/// Composition algebra of an endomorphism space: `x·y = x ∘ y`.
pub fn end_algebra(hs: &HomSpace) -> Result<StructureAlgebra> {
    if hs.domain != hs.codomain {
        return Err(Error::Dimension("not an endomorphism space".into()));
    }
    let d = hs.dim();
    let mut products = Vec::with_capacity(d * d);
    for x in &hs.basis {
        for y in &hs.basis {
            products.push(hs.coordinates(&x.mul(y)).ok_or_else(|| Error::InvalidAlgebra("not closed under composition".into()))?);
        }
    }
    let unit =
        hs.coordinates(&Matrix::identity(hs.field, hs.domain)).ok_or_else(|| Error::NonUnital("identity map is not in the span".into()))?;
    StructureAlgebra::new(hs.field, d, products, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, matrix_algebra, subgroup_extension, Extension};
    use crate::groups::Group;

    const Q: Field = Field::Rationals;

    fn bimodules(ext: &Extension) -> (ActionModule, ActionModule) {
        let a = ext.a();
        let id = Matrix::identity(Q, a.dim());
        let gb = ext.b().generators();
        let ga = a.generators();
        (ActionModule::over(a, &id, ga.clone(), ext.iota(), gb.clone()), ActionModule::over(a, ext.iota(), gb, &id, ga))
    }

    fn s3_a3() -> Extension {
        let g = Group::symmetric3();
        subgroup_extension(Q, &g, &g.closure(&[g.index_of("(123)").unwrap()])).unwrap()
    }

    #[test]
    fn tensor_dimensions() {
        let a = group_algebra(Q, &Group::symmetric3());
        let (x, y) = bimodules(&Extension::trivial(a.clone()).unwrap());
        assert_eq!(TensorSpace::new(vec![x, y]).unwrap().dim(), 6);
        let (x, y) = bimodules(&Extension::over_scalars(a).unwrap());
        assert_eq!(TensorSpace::new(vec![x, y]).unwrap().dim(), 36);
        let (x, y) = bimodules(&s3_a3());
        let ts = TensorSpace::new(vec![x, y]).unwrap();
        assert_eq!(ts.dim(), 12);
        assert!(ts.checks().all_pass());
    }

    #[test]
    fn action_mismatch_rejected() {
        let a = matrix_algebra(Q, 2);
        let m = ActionModule::regular(&a);
        let c2 = group_algebra(Q, &Group::cyclic(2));
        let n = ActionModule::regular(&c2);
        assert!(matches!(TensorSpace::new(vec![m, n]), Err(Error::ActionMismatch(_))));
    }

    #[test]
    fn module_checks_pass() {
        let ext = s3_a3();
        let (x, _) = bimodules(&ext);
        assert!(x.checks(ext.a(), ext.b()).all_pass());
    }

    #[test]
    fn rebracketing_is_isomorphism() {
        let ext = s3_a3();
        let (x, y) = bimodules(&ext);
        let mid = ActionModule::over(ext.a(), ext.iota(), ext.b().generators(), ext.iota(), ext.b().generators());
        let (m, left, right) = rebracket(&x, &mid, &y).unwrap();
        assert_eq!(left.dim(), right.dim());
        assert_eq!(m.rank(), left.dim());
        assert!(left.checks().all_pass());
        let three = TensorSpace::new(vec![x, mid, y]).unwrap();
        assert_eq!(three.dim(), left.dim());
        assert!(three.checks().all_pass());
    }

    #[test]
    fn centralized_examples() {
        let a = group_algebra(Q, &Group::cyclic(4));
        let ext = Extension::over_scalars(a.clone()).unwrap();
        let (x, y) = bimodules(&ext);
        let ts = TensorSpace::new(vec![x, y]).unwrap();
        let t = centralized_subspace(&ts, &ext.images());
        assert_eq!(t.dim(), 16);
        let ext = Extension::trivial(a.clone()).unwrap();
        let (x, y) = bimodules(&ext);
        let ts = TensorSpace::new(vec![x, y]).unwrap();
        let t = centralized_subspace(&ts, &ext.images());
        assert_eq!(t.dim(), 4);
        let alg = tensor_square_algebra(&a, &ts, &t).unwrap();
        assert!(alg.is_commutative());

        let ext = s3_a3();
        let (x, y) = bimodules(&ext);
        let ts = TensorSpace::new(vec![x, y]).unwrap();
        let t = centralized_subspace(&ts, &ext.images());
        assert!(t.contains(&ts.pure(&[ext.a().unit(), ext.a().unit()])));
        assert_eq!(t.dim(), 8);
        assert!(tensor_square_algebra(ext.a(), &ts, &t).unwrap().is_valid());
    }

    #[test]
    fn hom_space_examples() {
        let m2 = matrix_algebra(Q, 2);
        let reg = ActionModule::regular(&m2);
        assert_eq!(bimodule_hom(&reg, &reg, Equivariance::None).unwrap().dim(), 16);
        let z = bimodule_hom(&reg, &reg, Equivariance::Both).unwrap();
        assert_eq!(z.dim(), 1);
        assert_eq!(end_algebra(&z).unwrap().dim(), 1);

        let k2 = StructureAlgebra::new(Q, 1, vec![vec![Q.one()]], vec![Q.one()]).unwrap();
        let plane = ActionModule::new(Q, 2, vec![Matrix::identity(Q, 2)], vec![]).unwrap();
        let e = end_algebra(&bimodule_hom(&plane, &plane, Equivariance::Left).unwrap()).unwrap();
        assert_eq!(e.dim(), 4);
        assert!(e.is_valid());
        assert!(plane.checks(&k2, &k2).get("left-unital").unwrap().passed());

        let ext = s3_a3();
        let mid = ActionModule::over(ext.a(), ext.iota(), ext.b().generators(), ext.iota(), ext.b().generators());
        let s = bimodule_hom(&mid, &mid, Equivariance::Both).unwrap();
        assert_eq!(s.dim(), 8);
        assert!(end_algebra(&s).unwrap().is_valid());
    }

    #[test]
    fn non_unital_hom_space_rejected() {
        let plane = ActionModule::new(Q, 2, vec![], vec![]).unwrap();
        let hs = HomSpace::from_space(Q, 2, 2, Subspace::span(Q, 4, &[vec![Q.one(), Q.zero(), Q.zero(), Q.zero()]]));
        assert!(matches!(end_algebra(&hs), Err(Error::NonUnital(_))));
        assert_eq!(plane.dim(), 2);
    }
}
