use num_bigint::BigInt;
use octoforge::analysis::is_alternative;
use octoforge::generators::{disguise, octonion_algebra, quaternion_algebra};
use octoforge::{forge, Algebra, Classification, Element, FieldSpec, ForgeOptions, Matrix, Sampling, Scalar};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::rational()
}

fn f7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| q().from_fraction(BigInt::from(n), BigInt::from(d)).unwrap())
}

fn residue() -> impl Strategy<Value = Scalar> {
    (0i64..7).prop_map(|n| f7().from_i64(n))
}

fn nonzero_int() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&x| q().from_i64(x)).collect()).collect();
        Matrix::from_rows(q(), n, rows).unwrap()
    })
}

fn coords(dim: usize) -> impl Strategy<Value = Element> {
    proptest::collection::vec(rational(), dim).prop_map(Element::new)
}

fn octonions() -> Algebra {
    octonion_algebra(q(), &q().from_i64(-1), &q().from_i64(-1), &q().from_i64(-1)).unwrap()
}

// Direct sum over the structure constants, bypassing the cached integer table.
fn reference_product(a: &Algebra, x: &Element, y: &Element) -> Element {
    let mut out = vec![a.field().zero(); a.dim()];
    for (i, j, k, c) in a.entries() {
        out[k] = &out[k] + &(&(&x.coords()[i] * &y.coords()[j]) * c);
    }
    Element::new(out)
}

fn field_axioms(x: &Scalar, y: &Scalar, z: &Scalar) {
    assert_eq!(x + y, y + x);
    assert_eq!(x * y, y * x);
    assert_eq!(&(x + y) + z, x + &(y + z));
    assert_eq!(&(x * y) * z, x * &(y * z));
    assert_eq!(x * &(y + z), &(x * y) + &(x * z));
    assert_eq!(x + &(-x), x.field().zero());
    if !x.is_zero() {
        assert!((x * &x.inverse().unwrap()).is_one());
    }
}

proptest! {
    #[test]
    fn rational_field_axioms(x in rational(), y in rational(), z in rational()) {
        field_axioms(&x, &y, &z);
    }

    #[test]
    fn prime_field_axioms(x in residue(), y in residue(), z in residue()) {
        field_axioms(&x, &y, &z);
    }

    #[test]
    fn scalar_text_round_trip(x in rational(), y in residue()) {
        prop_assert_eq!(Scalar::parse(&x.to_string(), q()).unwrap(), x);
        prop_assert_eq!(Scalar::parse(&y.to_string(), f7()).unwrap(), y);
    }

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(m in square(4)) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.rank + m.kernel().dim(), 4);
        for v in m.kernel().basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in square(3), b in square(3)) {
        let ab = a.mul_mat(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
        prop_assert_eq!(a.is_singular().unwrap(), a.determinant().unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_bilinear(x in coords(8), y in coords(8), z in coords(8), s in rational()) {
        let o = octonions();
        prop_assert_eq!(o.multiply(&(&x + &y), &z), &o.multiply(&x, &z) + &o.multiply(&y, &z));
        prop_assert_eq!(o.multiply(&x.scale(&s), &y), o.multiply(&x, &y).scale(&s));
        prop_assert_eq!(o.multiply(&x, &y), reference_product(&o, &x, &y));
    }

    #[test]
    fn multiplication_matrices_agree(x in coords(8), y in coords(8)) {
        let o = octonions();
        let xy = o.multiply(&x, &y).into_coords();
        prop_assert_eq!(o.left_mul_matrix(&x).mul_vec(y.coords()).unwrap(), xy.clone());
        prop_assert_eq!(o.right_mul_matrix(&y).mul_vec(x.coords()).unwrap(), xy);
    }

    #[test]
    fn commutator_is_antisymmetric(x in coords(8), y in coords(8)) {
        let o = octonions();
        prop_assert_eq!(o.commutator(&x, &y), -&o.commutator(&y, &x));
    }

    // Any two elements of an octonion algebra generate an associative subalgebra.
    #[test]
    fn octonions_satisfy_artin(x in coords(8), y in coords(8)) {
        let o = octonions();
        prop_assert!(o.associator(&x, &x, &y).is_zero());
        prop_assert!(o.associator(&x, &y, &x).is_zero());
        prop_assert!(o.associator(&x, &y, &y).is_zero());
        let xy = o.multiply(&x, &y);
        prop_assert!(o.associator(&xy, &x, &y).is_zero());
    }
}

fn check_forge(a: &Algebra, expected: Classification) -> Result<(), TestCaseError> {
    let result = forge(a, ForgeOptions { sampling: Sampling::new(20, 1), ..Default::default() });
    match result.classification {
        Classification::HypothesisViolated => {
            let w = result.witness.expect("violations carry a witness");
            prop_assert!(w.verify(a));
            prop_assert!(result.frame.is_none());
        }
        c => {
            prop_assert_eq!(c, expected);
            let frame = result.frame.expect("saturated results carry a frame");
            prop_assert!(frame.validate(a).is_ok());
            prop_assert!(frame.span(a).is_full());
            prop_assert!(!result.change_of_basis.unwrap().determinant().unwrap().is_zero());
            let gammas = frame.squares().len();
            prop_assert_eq!(result.norm_diagonal.unwrap().len(), gammas + 1);
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quaternion_forge_invariants(alpha in nonzero_int(), beta in nonzero_int(), seed in 0u64..1000) {
        let h = quaternion_algebra(q(), &q().from_i64(alpha), &q().from_i64(beta)).unwrap();
        let (d, _) = disguise(&h, seed);
        check_forge(&d, Classification::QuaternionSaturated)?;
    }

    #[test]
    fn finite_field_quaternions_are_split(alpha in 1i64..7, beta in 1i64..7) {
        let h = quaternion_algebra(f7(), &f7().from_i64(alpha), &f7().from_i64(beta)).unwrap();
        let result = forge(&h, ForgeOptions::default());
        prop_assert_eq!(result.classification, Classification::HypothesisViolated);
        prop_assert!(result.witness.unwrap().verify(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn octonion_forge_invariants(alpha in nonzero_int(), beta in nonzero_int(), gamma in nonzero_int()) {
        let o = octonion_algebra(q(), &q().from_i64(alpha), &q().from_i64(beta), &q().from_i64(gamma)).unwrap();
        prop_assert!(is_alternative(&o));
        check_forge(&o, Classification::OctonionSaturated)?;
    }
}
