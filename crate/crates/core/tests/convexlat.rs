mod common;

use common::*;
use proptest::prelude::*;
use tvar_core::convexlat::{
    common_refinement, hilbert_points, parse_q, qi, qr, Cone, LatVec, LatticeBox, QVec, SigmaPolyhedron, SupportValue,
};

fn latvec(rank: usize, r: i64) -> impl Strategy<Value = LatVec> {
    prop::collection::vec(-r..=r, rank).prop_map(LatVec::new)
}

fn cone_strategy() -> impl Strategy<Value = Cone> {
    (2usize..=3)
        .prop_flat_map(|n| prop::collection::vec(latvec(n, 3), 1..=4).prop_map(move |g| Cone::new(n, &g).unwrap()))
}

fn pointed_polys() -> impl Strategy<Value = (SigmaPolyhedron, SigmaPolyhedron)> {
    let vert = || prop::collection::vec(((-4i64..=4), (1i64..=3), (-4i64..=4), (1i64..=3)), 1..=3);
    (vert(), vert()).prop_map(|(a, b)| {
        let mk = |v: Vec<(i64, i64, i64, i64)>| {
            let vs = v.into_iter().map(|(a, b, c, d)| QVec::new(vec![qr(a, b), qr(c, d)])).collect();
            SigmaPolyhedron::new(vs, skew_cone()).unwrap()
        };
        (mk(a), mk(b))
    })
}

fn box_points(rank: usize, bound: i64) -> impl Iterator<Item = LatVec> {
    let bx = LatticeBox::new(rank, bound);
    (0..bx.len()).map(move |i| bx.point(i))
}

#[test]
fn quadrant_is_self_dual() {
    assert!(quadrant().dual().same_set(&quadrant()));
    assert!(Cone::zero(2).dual().same_set(&Cone::full(2)));
}

#[test]
fn skew_cone_dual_rays() {
    let d = skew_cone().dual();
    assert!(d.same_set(&cone(2, &[&[1, 0], &[1, 2]])));
    assert_eq!(d.rays().len(), 2);
}

#[test]
fn rationals_parse_and_print() {
    assert_eq!(parse_q("-3/6").unwrap(), qr(-1, 2));
    assert_eq!(parse_q("7").unwrap(), qi(7));
    assert!(parse_q("1/0").is_err());
    assert_eq!(qv(&[(1, 2), (-2, 1)]).to_string(), "(1/2,-2)");
}

#[test]
fn box_is_lexicographic() {
    let pts: Vec<LatVec> = box_points(2, 1).collect();
    assert_eq!(pts.len(), 9);
    assert_eq!(pts[0], lv(&[-1, -1]));
    assert_eq!(pts[1], lv(&[-1, 0]));
    assert_eq!(pts[8], lv(&[1, 1]));
}

#[test]
fn hilbert_basis_of_skew_dual() {
    let mut h = hilbert_points(&skew_cone().dual(), 4);
    h.sort();
    assert_eq!(h, vec![lv(&[1, 0]), lv(&[1, 1]), lv(&[1, 2])]);
}

#[test]
fn segment_normal_fan() {
    let seg = SigmaPolyhedron::new(vec![qv(&[(0, 1), (0, 1)]), qv(&[(-1, 2), (1, 2)])], quadrant()).unwrap();
    let fan = seg.normal_fan();
    assert_eq!(fan.cells().len(), 2);
    assert!(fan.position(&cone(2, &[&[0, 1], &[1, 1]])).is_some());
    assert!(fan.position(&cone(2, &[&[1, 0], &[1, 1]])).is_some());
    assert!(fan.support().same_set(&quadrant()));
    let both = common_refinement(&[fan.clone(), SigmaPolyhedron::tail_only(quadrant()).normal_fan()]).unwrap();
    assert_eq!(both.cells().len(), 2);
}

#[test]
fn support_value_outside_dual_is_infinite() {
    let p = SigmaPolyhedron::new(vec![qv(&[(1, 2), (0, 1)])], quadrant()).unwrap();
    assert_eq!(p.support_value(&lv(&[-1, 0])).unwrap(), SupportValue::NegInfinity);
    assert_eq!(p.support_value(&lv(&[2, 3])).unwrap(), SupportValue::Finite(qi(1)));
}

#[test]
fn redundant_vertices_are_dropped() {
    let p = SigmaPolyhedron::new(vec![qv(&[(0, 1), (0, 1)]), qv(&[(1, 1), (1, 1)])], quadrant()).unwrap();
    assert_eq!(p.vertices(), &[qv(&[(0, 1), (0, 1)])]);
}

proptest! {
    #[test]
    fn dual_is_an_involution(c in cone_strategy()) {
        prop_assert!(c.dual().dual().same_set(&c));
    }

    #[test]
    fn generators_pair_nonnegatively_with_dual(c in cone_strategy()) {
        let d = c.dual();
        for g in c.generators() {
            for u in d.generators() {
                prop_assert!(g.dot(&u) >= 0);
            }
        }
    }

    #[test]
    fn relint_point_is_inside(c in cone_strategy()) {
        let p = c.relint_point();
        prop_assert!(c.contains(&p));
        prop_assert!(c.contains_relint(&p));
    }

    #[test]
    fn intersection_is_contained_in_both(a in cone_strategy(), b in cone_strategy()) {
        prop_assume!(a.rank() == b.rank());
        let i = a.intersect(&b);
        prop_assert!(a.contains_cone(&i));
        prop_assert!(b.contains_cone(&i));
    }

    #[test]
    fn support_is_additive((p, q) in pointed_polys()) {
        let s = p.minkowski_sum(&q).unwrap();
        for m in box_points(2, 3) {
            let (a, b) = (p.support_value(&m).unwrap(), q.support_value(&m).unwrap());
            let want = match (a, b) {
                (SupportValue::Finite(x), SupportValue::Finite(y)) => SupportValue::Finite(x + y),
                _ => SupportValue::NegInfinity,
            };
            prop_assert_eq!(s.support_value(&m).unwrap(), want);
        }
    }

    #[test]
    fn dilation_scales_support((p, _q) in pointed_polys(), k in 1u64..5) {
        let d = p.dilate(k).unwrap();
        for m in box_points(2, 2) {
            match (p.support_value(&m).unwrap(), d.support_value(&m).unwrap()) {
                (SupportValue::Finite(x), SupportValue::Finite(y)) => prop_assert_eq!(x * qi(k as i64), y),
                (a, b) => prop_assert_eq!(a, b),
            }
        }
    }

    #[test]
    fn minimizing_vertex_attains_support((p, _q) in pointed_polys(), m in latvec(2, 3)) {
        if let SupportValue::Finite(h) = p.support_value(&m).unwrap() {
            prop_assert_eq!(m.pair(p.minimizing_vertex(&m)), h);
        }
    }

    #[test]
    fn vertices_belong_to_polyhedron((p, q) in pointed_polys()) {
        for v in p.vertices() {
            prop_assert!(p.contains(v).unwrap());
        }
        let s = p.minkowski_sum(&q).unwrap();
        prop_assert!(s.contains(&(&p.vertices()[0] + &q.vertices()[0])).unwrap());
    }
}
