mod common;

use common::*;
use proptest::prelude::*;
use tvar_core::convexlat::{qi, qr};
use tvar_core::funcfield::{
    binomial_in_field, binomial_lucas, binomial_signed, binomial_via_bigint, certify_irreducible, check_section,
    multinomial_bigint, ord_at, principal_divisor, rational_roots, section_module, Curve, CurvePoint, Poly, PrimeField,
    QDivisor, RatFunc, SectionBasis,
};

fn field() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![0u64, 2, 3, 5, 7, 101]).prop_map(|p| PrimeField::new(p).unwrap())
}

fn poly_in(f: PrimeField) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..=5).prop_map(move |c| Poly::from_i64s(f, &c))
}

fn nonzero_poly_in(f: PrimeField) -> impl Strategy<Value = Poly> {
    poly_in(f).prop_filter("nonzero", |p| !p.is_zero())
}

#[test]
fn fields_are_validated() {
    assert!(PrimeField::fp(4).is_err());
    assert!(PrimeField::fp(1).is_err());
    assert_eq!(PrimeField::fp(7).unwrap().exponent_base(), 7);
    assert_eq!(PrimeField::rationals().exponent_base(), 1);
    let f = PrimeField::fp(5).unwrap();
    assert_eq!(f.from_q(&qr(1, 2)).unwrap(), f.from_i64(3));
    assert!(f.from_q(&qr(1, 5)).is_err());
}

#[test]
fn small_binomials() {
    assert_eq!(binomial_lucas(10, 3, 2), 0);
    assert_eq!(binomial_lucas(10, 2, 3), 0);
    assert_eq!(binomial_lucas(7, 3, 5), 0);
    assert_eq!(multinomial_bigint(&[2, 1, 1]), 12u32.into());
    let q = PrimeField::rationals();
    assert_eq!(binomial_signed(-1, 5, q), q.from_i64(-1));
    assert_eq!(binomial_signed(-2, 3, q), q.from_i64(-4));
}

#[test]
fn orders_on_the_projective_line() {
    let q = PrimeField::rationals();
    let f = rf(q, &[1, -2, 1], &[0, 1]);
    assert_eq!(ord_at(&f, &at(q, 1)).unwrap(), 2);
    assert_eq!(ord_at(&f, &at(q, 0)).unwrap(), -1);
    assert_eq!(ord_at(&f, &CurvePoint::Infinity).unwrap(), -1);
    let d = principal_divisor(&f, &[at(q, 0)], Curve::Projective).unwrap();
    assert_eq!(d.get(&at(q, 1)), qi(2));
    assert_eq!(d.degree(), qi(0));
}

#[test]
fn irreducible_points() {
    let f2 = PrimeField::fp(2).unwrap();
    assert!(certify_irreducible(&poly(f2, &[1, 1, 1])).is_ok());
    assert!(certify_irreducible(&poly(f2, &[1, 0, 1])).is_err());
    let q = PrimeField::rationals();
    assert!(certify_irreducible(&poly(q, &[-2, 0, 1])).is_ok());
    assert!(CurvePoint::finite(poly(q, &[-2, 0, 1])).unwrap().degree() == 2);
    assert_eq!(rational_roots(&poly(q, &[-1, 0, 4])).unwrap(), vec![fe_q(-1, 2), fe_q(1, 2)]);
}

fn fe_q(n: i64, d: i64) -> tvar_core::funcfield::Fe {
    PrimeField::rationals().from_q(&qr(n, d)).unwrap()
}

#[test]
fn sections_of_fractional_divisors() {
    let q = PrimeField::rationals();
    let d = QDivisor::from_pairs([(at(q, 0), qr(1, 2)), (at(q, 1), qr(3, 2)), (CurvePoint::Infinity, qr(-1, 3))]);
    match section_module(&d, Curve::Projective, q) {
        SectionBasis::Projective { basis } => {
            assert_eq!(basis.len(), 1);
            for b in &basis {
                check_section(&d, b, Curve::Projective).unwrap();
            }
        }
        other => panic!("{other:?}"),
    }
    let neg = QDivisor::from_pairs([(CurvePoint::Infinity, qr(-1, 2))]);
    assert!(section_module(&neg, Curve::Projective, q).is_zero());
    match section_module(&d, Curve::Affine, q) {
        SectionBasis::Affine { generator } => assert_eq!(generator, rf(q, &[1], &[-1, 1])),
        other => panic!("{other:?}"),
    }
    assert!(check_section(&d, &rf(q, &[1], &[0, 0, 1]), Curve::Affine).is_err());
}

proptest! {
    #[test]
    fn field_axioms(f in field(), a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        if f.characteristic() > 0 {
            prop_assert_eq!(a.pow(f.characteristic()), a);
        }
    }

    #[test]
    fn lucas_matches_bigint(f in field(), n in 0u64..300, i in 0u64..300) {
        prop_assert_eq!(binomial_in_field(n, i, f), binomial_via_bigint(n, i, f));
    }

    #[test]
    fn signed_binomials_satisfy_pascal(f in field(), n in -40i64..40, i in 1u64..40) {
        prop_assert_eq!(
            binomial_signed(n, i, f),
            &binomial_signed(n - 1, i, f) + &binomial_signed(n - 1, i - 1, f)
        );
    }

    #[test]
    fn division_with_remainder((a, b) in field().prop_flat_map(|f| (poly_in(f), nonzero_poly_in(f)))) {
        let (q, r) = a.divrem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
    }

    #[test]
    fn ratfunc_arithmetic((a, b, c) in field().prop_flat_map(|f| (nonzero_poly_in(f), nonzero_poly_in(f), nonzero_poly_in(f)))) {
        let x = RatFunc::new(a.clone(), b.clone()).unwrap();
        let y = RatFunc::new(c.clone(), a.clone()).unwrap();
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert!(x.den().is_monic());
        prop_assert!(x.num().gcd(x.den()).is_constant());
    }

    #[test]
    fn order_is_a_valuation((a, b) in field().prop_flat_map(|f| (nonzero_poly_in(f), nonzero_poly_in(f))), z in 0i64..3) {
        let f = a.field();
        let x = RatFunc::from_poly(a);
        let y = RatFunc::new(Poly::one(f), b).unwrap();
        for p in [at(f, z), CurvePoint::Infinity] {
            prop_assert_eq!(ord_at(&(&x * &y), &p).unwrap(), ord_at(&x, &p).unwrap() + ord_at(&y, &p).unwrap());
        }
    }

    #[test]
    fn section_basis_matches_degree(n0 in -6i64..6, n1 in -6i64..6, ninf in -6i64..6, d in 1i64..4) {
        let q = PrimeField::rationals();
        let div = QDivisor::from_pairs([(at(q, 0), qr(n0, d)), (at(q, 1), qr(n1, d)), (CurvePoint::Infinity, qr(ninf, d))]);
        let deg = div.floor().degree();
        let basis = section_module(&div, Curve::Projective, q);
        let want = if deg < qi(0) { 0 } else { tvar_core::convexlat::floor_i64(&deg) as usize + 1 };
        prop_assert_eq!(basis.dim(), Some(want));
        for b in basis.elements() {
            prop_assert!(check_section(&div, &b, Curve::Projective).is_ok());
        }
    }
}
