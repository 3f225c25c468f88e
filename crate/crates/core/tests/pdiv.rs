mod common;

use common::*;
use proptest::prelude::*;
use tvar_core::classify::piece_generators;
use tvar_core::convexlat::{qi, qr, Cone, LatVec, SigmaPolyhedron};
use tvar_core::funcfield::{Curve, CurvePoint, PrimeField, RatFunc};
use tvar_core::graded::GradedElement;
use tvar_core::pdiv::{linear_vertex_on, normalize_for_horizontal, PolyDivisor};
use tvar_core::Error;

fn weight(rank: usize, r: i64) -> impl Strategy<Value = LatVec> {
    prop::collection::vec(0..=r, rank).prop_map(LatVec::new)
}

#[test]
fn evaluation_on_the_quadrant() {
    let q = PrimeField::rationals();
    let d = p1_quadrant(q);
    let dm = d.evaluate(&lv(&[2, 0])).unwrap();
    assert_eq!(dm.get(&at(q, 0)), qi(1));
    assert_eq!(dm.get(&at(q, 1)), qi(-1));
    assert_eq!(dm.get(&CurvePoint::Infinity), qi(1));
    assert!(matches!(d.evaluate(&lv(&[-1, 0])), Err(Error::OutsideDualCone(_))));
    assert!(matches!(d.evaluate(&lv(&[1])), Err(Error::RankMismatch { .. })));
}

#[test]
fn quasifan_of_the_quadrant_divisor() {
    let d = p1_quadrant(PrimeField::rationals());
    let fan = d.quasifan(None);
    assert_eq!(fan.cells().len(), 2);
    assert!(fan.position(&cone(2, &[&[0, 1], &[1, 1]])).is_some());
    assert_eq!(d.quasifan(Some(&at(PrimeField::rationals(), 1))).cells().len(), 1);
}

#[test]
fn improper_divisors_have_no_pieces() {
    let q = PrimeField::rationals();
    let s = quadrant();
    let at_origin = SigmaPolyhedron::new(vec![qv(&[(0, 1), (0, 1)])], s.clone()).unwrap();
    let d = PolyDivisor::new(q, Curve::Projective, s.clone(), vec![(at(q, 0), at_origin)]).unwrap();
    assert!(!d.is_proper().0);
    assert!(matches!(d.graded_piece(&lv(&[1, 0])), Err(Error::Improper(_))));
    let neg = SigmaPolyhedron::new(vec![qv(&[(-1, 1), (0, 1)])], s.clone()).unwrap();
    let d = PolyDivisor::new(q, Curve::Projective, s.clone(), vec![(at(q, 0), neg)]).unwrap();
    assert!(!d.is_proper().0);
}

#[test]
fn constructor_rejects_bad_input() {
    let q = PrimeField::rationals();
    let s = quadrant();
    let p = SigmaPolyhedron::tail_only(s.clone());
    assert!(PolyDivisor::new(q, Curve::Affine, s.clone(), vec![(CurvePoint::Infinity, p.clone())]).is_err());
    assert!(PolyDivisor::new(q, Curve::Affine, Cone::full(2), vec![]).is_err());
    let other = SigmaPolyhedron::tail_only(skew_cone());
    assert!(matches!(
        PolyDivisor::new(q, Curve::Affine, s.clone(), vec![(at(q, 0), other)]),
        Err(Error::TailMismatch)
    ));
    let f2 = PrimeField::fp(2).unwrap();
    assert!(matches!(
        PolyDivisor::new(q, Curve::Affine, s, vec![(at(f2, 0), p)]),
        Err(Error::FieldMismatch)
    ));
}

#[test]
fn nonrational_points_are_supported() {
    let f3 = PrimeField::fp(3).unwrap();
    let s = Cone::zero(1);
    let z = CurvePoint::finite(poly(f3, &[1, 0, 1])).unwrap();
    let d = PolyDivisor::new(
        f3,
        Curve::Affine,
        s.clone(),
        vec![(z.clone(), SigmaPolyhedron::new(vec![qv(&[(1, 2)])], s).unwrap())],
    )
    .unwrap();
    let piece = d.graded_piece(&lv(&[2])).unwrap();
    assert_eq!(piece.basis.elements(), vec![RatFunc::new(poly(f3, &[1]), poly(f3, &[1, 0, 1])).unwrap()]);
    assert!(d.check_membership(&el(RatFunc::one(f3), &[2])));
    assert!(!d.check_membership(&el(RatFunc::one(f3), &[-2])));
}

#[test]
fn normalization_moves_points() {
    let q = PrimeField::rationals();
    let d = p1_quadrant(q);
    let omega = cone(2, &[&[0, 1], &[1, 1]]);
    let v = linear_vertex_on(&d.coefficient(&at(q, 1)), &omega).unwrap();
    assert_eq!(v, qv(&[(0, 1), (0, 1)]));
    assert!(linear_vertex_on(&d.coefficient(&at(q, 1)), &quadrant()).is_none());
    assert!(matches!(
        normalize_for_horizontal(&d, &at(q, 1), Some(&CurvePoint::Infinity), &omega),
        Err(Error::Normalization(_))
    ));

    // Move [t - 1] to [t] and shift the integral coefficient at the old origin away.
    let f3 = PrimeField::fp(3).unwrap();
    let s = Cone::zero(1);
    let pt = |v: (i64, i64)| SigmaPolyhedron::new(vec![qv(&[v])], s.clone()).unwrap();
    let d = PolyDivisor::new(f3, Curve::Affine, s.clone(), vec![(at(f3, 0), pt((2, 1))), (at(f3, 1), pt((1, 3)))]).unwrap();
    let (n, tr) = normalize_for_horizontal(&d, &at(f3, 1), None, &half_line()).unwrap();
    assert!(!tr.is_identity());
    assert_eq!(n.coefficient(&at(f3, 0)).vertices(), &[qv(&[(1, 3)])]);
    for m in [-4i64, -1, 0, 3, 5] {
        for b in piece_generators(&d, 5).unwrap().into_iter().filter(|b| b.homogeneous_degree() == Some(&lv(&[m]))) {
            let w = tr.forward(&b);
            assert!(n.check_membership(&w), "{b} -> {w}");
            assert_eq!(tr.backward(&w), b);
        }
    }
}

#[test]
fn graded_cover_round_trip() {
    let f2 = PrimeField::fp(2).unwrap();
    let a = el(rf(f2, &[1, 1], &[0, 1]), &[3]);
    let lifted = a.lift(5);
    assert_eq!(lifted.cover(), 5);
    assert_eq!(lifted.descend().unwrap(), a);
    assert_eq!((&a * &a).component(&lv(&[6])), rf(f2, &[1, 0, 1], &[0, 0, 1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_superadditive(m in weight(2, 4), n in weight(2, 4)) {
        let d = p1_quadrant(PrimeField::rationals());
        let (a, b, c) = (d.evaluate(&m).unwrap(), d.evaluate(&n).unwrap(), d.evaluate(&(&m + &n)).unwrap());
        for z in d.points() {
            prop_assert!(a.get(&z) + b.get(&z) <= c.get(&z));
        }
    }

    #[test]
    fn evaluation_is_homogeneous(m in weight(2, 4), k in 1i64..5) {
        let d = p1_quadrant(PrimeField::rationals());
        let a = d.evaluate(&m).unwrap();
        let b = d.evaluate(&m.scale(k)).unwrap();
        for z in d.points() {
            prop_assert_eq!(a.get(&z) * qi(k), b.get(&z));
        }
    }

    #[test]
    fn pieces_multiply_into_the_algebra(i in 0usize..64, j in 0usize..64, p in prop::sample::select(vec![0u64, 2, 3])) {
        let f = PrimeField::new(p).unwrap();
        let d = p1_quadrant(f);
        let gens = piece_generators(&d, 3).unwrap();
        let (a, b) = (&gens[i % gens.len()], &gens[j % gens.len()]);
        prop_assert!(d.check_membership(a));
        prop_assert!(d.check_membership(&(a * b)));
        prop_assert!(d.check_membership(&(a + b)));
    }

    #[test]
    fn piece_dimension_is_floor_degree_plus_one(m in weight(2, 5)) {
        let d = p1_quadrant(PrimeField::rationals());
        let dm = d.evaluate(&m).unwrap();
        let deg = dm.floor().degree();
        let dim = d.graded_piece(&m).unwrap().basis.dim().unwrap();
        prop_assert_eq!(qi(dim as i64) - qi(1), if deg < qi(0) { qi(-1) } else { deg });
    }

    #[test]
    fn graded_product_is_commutative(a in -3i64..4, b in 1i64..4, m in -3i64..4) {
        let q = PrimeField::rationals();
        let x = &el(rf(q, &[a, 1], &[0, 1]), &[m]) + &GradedElement::character(q, lv(&[1]));
        let y = el(RatFunc::constant(q.from_q(&qr(b, 2)).unwrap()), &[m + 1]);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &y, &(&x * &y) + &(&y * &y));
    }
}
