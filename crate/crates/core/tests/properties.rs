//! Property tests for the gauge machinery and arrangement checks: exact
//! algebraic identities on random rational inputs, plus cross-checks of
//! independent code paths.

use minkarr::arrangement::{Arrangement, Homothet};
use minkarr::rat::{rat, rat_int, Rat, RatVec, Scalar};
use minkarr::{ConvexBody, Halfspace};
use num::{One, Signed};
use proptest::prelude::*;
use std::cmp::Ordering;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-60i64..60, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn arb_vec2() -> impl Strategy<Value = RatVec> {
    (arb_rat(), arb_rat()).prop_map(|(x, y)| RatVec(vec![x, y]))
}

fn arb_positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

/// Random 2-D polytope with the origin strictly interior: a triangle
/// around the origin plus a few extra points.
fn arb_polygon() -> impl Strategy<Value = ConvexBody> {
    (
        2i64..8,
        2i64..8,
        2i64..8,
        proptest::collection::vec((-6i64..6, -6i64..6), 0..4),
    )
        .prop_map(|(a, b, c, extra)| {
            let mut vs = vec![
                RatVec(vec![rat(a, 1), rat(a, 2)]),
                RatVec(vec![rat(-b, 2), rat(b, 1)]),
                RatVec(vec![rat(-c, 2), rat(-c, 1)]),
            ];
            vs.extend(extra.into_iter().map(|(x, y)| RatVec(vec![rat(x, 1), rat(y, 1)])));
            ConvexBody::vpolytope(2, vs).expect("origin interior by construction")
        })
}

fn bodies_under_test() -> Vec<ConvexBody> {
    vec![
        ConvexBody::cube(2),
        ConvexBody::triangle(),
        ConvexBody::simplex(3),
        ConvexBody::cross_polytope(2),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn positive_homogeneity(x in arb_vec2(), t in arb_positive_rat()) {
        for body in bodies_under_test().iter().filter(|b| b.dim() == 2) {
            let n_x = body.norm(&x).unwrap();
            let n_tx = body.norm(&x.scale(&t)).unwrap();
            let expect = match n_x {
                Scalar::Exact(v) => Scalar::Exact(v * &t),
                Scalar::Approx(_) => unreachable!(),
            };
            prop_assert_eq!(n_tx, expect);
        }
    }

    #[test]
    fn triangle_inequality(x in arb_vec2(), y in arb_vec2()) {
        for body in bodies_under_test().iter().filter(|b| b.dim() == 2) {
            let nx = body.norm(&x).unwrap().as_exact().unwrap().clone();
            let ny = body.norm(&y).unwrap().as_exact().unwrap().clone();
            let nxy = body.norm(&x.add(&y)).unwrap().as_exact().unwrap().clone();
            prop_assert!(nxy <= nx + ny);
        }
    }

    #[test]
    fn membership_matches_norm(x in arb_vec2(), body in arb_polygon()) {
        let inside = body.contains(&x).unwrap();
        let by_norm = body.norm_cmp(&x, &Rat::one()).unwrap() != Ordering::Greater;
        prop_assert_eq!(inside, by_norm);
    }

    #[test]
    fn symmetric_core_identity(x in arb_vec2(), body in arb_polygon()) {
        // Explicit core body vs the max(norm(x), norm(-x)) identity.
        let core = body.symmetric_core().unwrap();
        let explicit = core.body().expect("explicit in the plane");
        let lhs = explicit.norm(&x).unwrap();
        let rhs = body.core_norm(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_norm_is_max_of_blocks(x in arb_vec2(), y in arb_vec2()) {
        let t = ConvexBody::triangle();
        let c = ConvexBody::cube(2);
        let p = ConvexBody::product(vec![t.clone(), c.clone()]).unwrap();
        let joint = RatVec::concat(&[x.clone(), y.clone()]);
        let expect = t.norm(&x).unwrap().max(c.norm(&y).unwrap());
        prop_assert_eq!(p.norm(&joint).unwrap(), expect);
    }

    #[test]
    fn theta_dominates_reversed_vertices(body in arb_polygon()) {
        let theta = body.theta().unwrap().as_exact().unwrap().clone();
        let mut attained = false;
        for v in body.vertices().unwrap() {
            // Vertices of the body itself sit on the unit sphere of its gauge.
            prop_assert_eq!(body.norm_cmp(v, &Rat::one()).unwrap(), Ordering::Equal);
            let n = body.norm(&v.neg()).unwrap().as_exact().unwrap().clone();
            prop_assert!(n <= theta);
            if n == theta {
                attained = true;
            }
        }
        prop_assert!(attained);
    }

    #[test]
    fn normalization_lands_on_boundary(x in arb_vec2(), body in arb_polygon()) {
        prop_assume!(!x.is_zero());
        let unit = body.normalize(&x).unwrap();
        prop_assert_eq!(body.norm_cmp(&unit, &Rat::one()).unwrap(), Ordering::Equal);
    }

    #[test]
    fn symmetral_norm_agrees_with_explicit(x in arb_vec2(), body in arb_polygon()) {
        let sym = body.central_symmetral().unwrap();
        let explicit = sym.body().expect("explicit in the plane");
        let via_body = explicit.norm(&x).unwrap().as_exact().unwrap().clone();
        let via_lp = body.symmetral_norm_lp(&x).unwrap();
        prop_assert_eq!(via_body, via_lp);
    }
}

// ---------------------------------------------------------------------------
// Seeded bulk invariants (larger scale than proptest defaults)
// ---------------------------------------------------------------------------

fn random_arrangement(rng: &mut impl rand::Rng, body: &ConvexBody, n: usize) -> Arrangement {
    let homothets = (0..n)
        .map(|_| Homothet {
            lambda: rat(rng.random_range(1..30), 10),
            v: RatVec(vec![
                rat(rng.random_range(-25..25), 10),
                rat(rng.random_range(-25..25), 10),
            ]),
        })
        .collect();
    Arrangement::new(body.clone(), homothets).unwrap()
}

#[test]
fn strict_implies_nonstrict_on_random_arrangements() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let bodies = [ConvexBody::cube(2), ConvexBody::triangle(), ConvexBody::disc()];
    let mut strict_seen = 0usize;
    for trial in 0..10_000 {
        let body = &bodies[trial % bodies.len()];
        let a = random_arrangement(&mut rng, body, 3);
        if a.is_strict_minkowski().unwrap() {
            strict_seen += 1;
            assert!(a.is_minkowski().unwrap(), "strict must imply non-strict");
        }
    }
    assert!(strict_seen > 100, "sampler should produce strict instances");
}

#[test]
fn narrow_ratio_arrangements_satisfy_symmetrized_norm_bounds() {
    // For a verified pairwise-intersecting Minkowski arrangement with all
    // ratios in [1, 1+delta): core distance >= 1 and symmetral distance
    // <= 2(1+delta) for every center pair, checked exactly.
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let delta = rat(1, 4);
    let two_one_delta = rat_int(2) * (Rat::one() + &delta);
    let bodies = [ConvexBody::triangle(), ConvexBody::cube(2)];
    let mut checked = 0usize;
    for trial in 0..4000 {
        let body = &bodies[trial % bodies.len()];
        let homothets: Vec<Homothet> = (0..3)
            .map(|_| Homothet {
                // lambda in [1, 1 + delta)
                lambda: Rat::one() + rat(rng.random_range(0..25), 100),
                v: RatVec(vec![
                    rat(rng.random_range(-14..14), 10),
                    rat(rng.random_range(-14..14), 10),
                ]),
            })
            .collect();
        let a = Arrangement::new(body.clone(), homothets).unwrap();
        if !(a.is_minkowski().unwrap() && a.is_pairwise_intersecting().unwrap()) {
            continue;
        }
        checked += 1;
        let sym = body.central_symmetral().unwrap();
        let hs = a.homothets();
        for i in 0..hs.len() {
            for j in 0..hs.len() {
                if i == j {
                    continue;
                }
                let d = hs[i].v.sub(&hs[j].v);
                assert_ne!(
                    body.core_norm_cmp(&d, &Rat::one()).unwrap(),
                    Ordering::Less,
                    "core norm below 1 for a verified arrangement"
                );
                assert_ne!(
                    sym.norm_cmp(&d, &two_one_delta).unwrap(),
                    Ordering::Greater,
                    "symmetral norm above 2(1+delta)"
                );
            }
        }
    }
    assert!(checked > 40, "need enough verified instances, got {checked}");
}

#[test]
fn hform_and_vform_agree_on_random_bodies() {
    // Build a body from vertices, rebuild from its facets, and compare
    // norms on a grid of rational points.
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for _ in 0..60 {
        let vs: Vec<RatVec> = vec![
            RatVec(vec![rat(rng.random_range(1..8), 1), rat(rng.random_range(-3..4), 1)]),
            RatVec(vec![rat(rng.random_range(-7..-1), 1), rat(rng.random_range(1..8), 1)]),
            RatVec(vec![rat(rng.random_range(-5..0), 1), rat(rng.random_range(-8..-1), 1)]),
            RatVec(vec![rat(rng.random_range(1..6), 1), rat(rng.random_range(1..6), 1)]),
        ];
        let Ok(from_v) = ConvexBody::vpolytope(2, vs) else { continue };
        let from_h =
            ConvexBody::hpolytope(2, from_v.facets().unwrap().to_vec()).unwrap();
        for x in [-3i64, -1, 0, 2, 5] {
            for y in [-4i64, 0, 1, 3] {
                let p = RatVec::from_ints(&[x, y]);
                assert_eq!(from_v.norm(&p).unwrap(), from_h.norm(&p).unwrap());
            }
        }
    }
}

#[test]
fn halfspace_canonicalization_is_scale_invariant() {
    let h = Halfspace::new(RatVec(vec![rat(4, 1), rat(-2, 1)]), rat(6, 1));
    let h2 = Halfspace::new(RatVec(vec![rat(2, 1), rat(-1, 1)]), rat(3, 1));
    assert_eq!(h.canonical(), h2.canonical());
    assert!(h.canonical().normal.0[0].is_positive());
}

#[cfg(feature = "parallel")]
#[test]
fn seeded_outputs_identical_across_thread_counts() {
    // One stream per index makes results independent of the schedule: a
    // one-thread pool must reproduce the default pool bit for bit.
    use minkarr::probabilistic::{estimate_f, sample_uniform, RandomConfig};
    let body = ConvexBody::simplex(3);
    let cfg = RandomConfig::with_seed(77);
    let here = sample_uniform(&body, 32, &cfg).unwrap();
    let est_here = estimate_f(&body, 1.0, 20_000, &cfg).unwrap();
    let grid = minkarr::constructions::cube_grid_witness(2).unwrap();
    let report_here = grid.verify().unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let (there, est_there, report_there) = pool.install(|| {
        (
            sample_uniform(&body, 32, &cfg).unwrap(),
            estimate_f(&body, 1.0, 20_000, &cfg).unwrap(),
            grid.verify().unwrap(),
        )
    });
    assert_eq!(here, there);
    assert_eq!(est_here, est_there);
    assert_eq!(report_here.first_violation, report_there.first_violation);
}
