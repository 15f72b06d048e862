use d2lab_core::depth_two::Constructs;
use d2lab_core::galois::characterize;
use d2lab_core::groups::Group;
use d2lab_core::hopf::{is_normal, Bialgebra, HopfSubalgebra};
use d2lab_core::schema::{parse_hopf, HopfJson};
use d2lab_core::weak_hopf::{counital_projections, tensor_mul};
use d2lab_core::{algebra::subgroup_extension, registry, Field, Scalar};
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn instance(i: usize, f: Field) -> Bialgebra {
    let names = ["matrix:2", "group:C3", "group:S3", "sweedler4", "groupoid:pair:2xC2", "matrix:3"];
    registry::hopf(names[i % names.len()], f).unwrap()
}

fn field(p: usize) -> Field {
    [Q, Field::PrimeField { p: 2 }, Field::PrimeField { p: 3 }, Field::PrimeField { p: 7 }][p % 4]
}

fn element(f: Field, coeffs: &[i64], n: usize) -> Vec<Scalar> {
    (0..n).map(|i| f.from_i64(coeffs[i % coeffs.len()])).collect()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..4, 1..10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(p in 0usize..4, a in -50i64..50, b in -50i64..50, c in 1i64..50) {
        let f = field(p);
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.sub(&f.add(&a, &b), &b), a.clone());
        prop_assert_eq!(f.parse(&f.format(&a)).unwrap(), a.clone());
        if let Some(inv) = f.inv(&c) {
            prop_assert!(f.is_one(&f.mul(&c, &inv)));
        } else {
            prop_assert!(f.is_zero(&c));
        }
    }

    #[test]
    fn comultiplication_is_multiplicative(i in 0usize..6, p in 0usize..4, x in coeffs(), y in coeffs()) {
        let h = instance(i, field(p));
        let f = h.field();
        let (x, y) = (element(f, &x, h.dim()), element(f, &y, h.dim()));
        let lhs = h.delta(&h.algebra.mul(&x, &y));
        prop_assert_eq!(lhs, h.tensor_mul(&h.delta(&x), &h.delta(&y)));
    }

    #[test]
    fn antipode_reverses_products(i in 0usize..6, p in 0usize..4, x in coeffs(), y in coeffs()) {
        let h = instance(i, field(p));
        let f = h.field();
        let (x, y) = (element(f, &x, h.dim()), element(f, &y, h.dim()));
        let s = |v: &[Scalar]| h.antipode_of(v).unwrap();
        prop_assert_eq!(s(&h.algebra.mul(&x, &y)), h.algebra.mul(&s(&y), &s(&x)));
    }

    #[test]
    fn tensor_products_associate(i in 0usize..6, x in coeffs(), y in coeffs(), z in coeffs()) {
        let h = instance(i, Q);
        let n = h.dim();
        let factors = [&h.algebra, &h.algebra];
        let (x, y, z) = (element(Q, &x, n * n), element(Q, &y, n * n), element(Q, &z, n * n));
        let left = tensor_mul(&factors, &tensor_mul(&factors, &x, &y), &z);
        let right = tensor_mul(&factors, &x, &tensor_mul(&factors, &y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn double_dual_is_the_original(i in 0usize..6, p in 0usize..4) {
        let h = instance(i, field(p));
        let dd = h.dual().unwrap().dual().unwrap();
        prop_assert_eq!(&dd.algebra, &h.algebra);
        prop_assert_eq!(&dd.comul, &h.comul);
        prop_assert_eq!(&dd.counit, &h.counit);
        prop_assert_eq!(&dd.antipode, &h.antipode);
    }

    #[test]
    fn counital_projections_are_idempotent(i in 0usize..6, p in 0usize..4, x in coeffs()) {
        let w = instance(i, field(p));
        let (proj, _) = counital_projections(&w);
        let x = element(w.field(), &x, w.dim());
        for m in [&proj.pi_l, &proj.pi_r, &proj.pi_bar_l, &proj.pi_bar_r] {
            let once = m.mul_vec(&x);
            prop_assert_eq!(m.mul_vec(&once), once);
        }
    }

    #[test]
    fn schema_round_trip(i in 0usize..6, p in 0usize..4) {
        let h = instance(i, field(p));
        let text = serde_json::to_string(&HopfJson::from_bialgebra(&h)).unwrap();
        let back = parse_hopf(&text, None).unwrap();
        prop_assert_eq!(back, h);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// For `H ⊆ G` the balanced tensor square `k[G] ⊗_(k[H]) k[G]` has
    /// dimension `|G|²/|H|`.
    #[test]
    fn balanced_square_of_subgroup(n in 2usize..7, d in 1usize..7) {
        prop_assume!(n % d == 0);
        let g = Group::cyclic(n);
        let ext = subgroup_extension(Q, &g, &g.closure(&[n / d % n])).unwrap();
        prop_assert_eq!(Constructs::build(&ext).unwrap().q.dim(), n * n / d);
    }

    /// Subgroups of abelian groups are normal, so the characterization
    /// must come out Galois on both sides.
    #[test]
    fn cyclic_subgroups_are_galois(n in 2usize..6, d in 1usize..6) {
        prop_assume!(n % d == 0);
        let g = Group::cyclic(n);
        let v = characterize(&subgroup_extension(Q, &g, &g.closure(&[n / d % n])).unwrap()).unwrap();
        prop_assert!(v.consistent && v.galois_right && v.galois_left, "{:?}", v);
        let h = Bialgebra::group(Q, &g);
        let k = HopfSubalgebra::from_basis(&h, &g.closure(&[n / d % n])).unwrap();
        let normal = is_normal(&h, &k).unwrap();
        prop_assert!(normal.is_normal() && normal.consistent());
    }
}
