mod common;

use common::*;
use proptest::prelude::*;
use tvar_core::convexlat::{Cone, LatVec};
use tvar_core::exec::Exec;
use tvar_core::roots::{enumerate_roots, enumerate_roots_with, is_root};
use tvar_core::Error;

fn pointed_cone() -> impl Strategy<Value = Cone> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 1..=4)
            .prop_map(move |g| Cone::new(n, &g.into_iter().map(LatVec::new).collect::<Vec<_>>()).unwrap())
            .prop_filter("pointed with rays", |c| c.is_strongly_convex() && !c.rays().is_empty())
    })
}

#[test]
fn quadrant_roots() {
    let roots = enumerate_roots(&quadrant(), 2).unwrap();
    let on_x: Vec<_> = roots.iter().filter(|r| r.ray == lv(&[1, 0])).map(|r| r.e.clone()).collect();
    assert_eq!(on_x, vec![lv(&[-1, 0]), lv(&[-1, 1]), lv(&[-1, 2])]);
    assert_eq!(roots.len(), 6);
}

#[test]
fn skew_cone_root_and_non_roots() {
    let sigma = skew_cone();
    assert_eq!(is_root(&sigma, &lv(&[0, -1])).unwrap().unwrap().ray, lv(&[0, 1]));
    assert_eq!(is_root(&sigma, &lv(&[0, 1])).unwrap().unwrap().ray, lv(&[2, -1]));
    assert!(is_root(&sigma, &lv(&[1, 1])).unwrap().is_none());
    assert!(is_root(&sigma, &lv(&[0, -2])).unwrap().is_none());
}

#[test]
fn invalid_cones_are_rejected() {
    assert!(matches!(is_root(&Cone::full(2), &lv(&[1, 0])), Err(Error::NotStronglyConvex)));
    assert!(matches!(is_root(&Cone::zero(2), &lv(&[1, 0])), Err(Error::NoRays)));
    assert!(matches!(is_root(&quadrant(), &lv(&[1])), Err(Error::RankMismatch { .. })));
}

#[test]
fn nonpositive_bound_gives_nothing() {
    assert!(enumerate_roots(&quadrant(), 0).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerated_roots_are_roots(c in pointed_cone()) {
        for r in enumerate_roots(&c, 2).unwrap() {
            prop_assert_eq!(is_root(&c, &r.e).unwrap(), Some(r.clone()));
            prop_assert_eq!(r.e.dot(&r.ray), -1);
            for other in c.rays().iter().filter(|x| **x != r.ray) {
                prop_assert!(r.e.dot(other) >= 0);
            }
        }
    }

    #[test]
    fn parallel_matches_sequential(c in pointed_cone()) {
        prop_assert_eq!(
            enumerate_roots_with(&c, 3, Exec::Parallel).unwrap(),
            enumerate_roots_with(&c, 3, Exec::Sequential).unwrap()
        );
    }

    #[test]
    fn roots_shift_along_kernel(c in pointed_cone()) {
        // e + u stays a root with the same ray whenever u lies in the dual and vanishes on the ray.
        let d = c.dual();
        for r in enumerate_roots(&c, 1).unwrap() {
            for u in d.generators().into_iter().filter(|u| u.dot(&r.ray) == 0) {
                let shifted = &r.e + &u;
                prop_assert_eq!(is_root(&c, &shifted).unwrap().map(|x| x.ray), Some(r.ray.clone()));
            }
        }
    }
}
