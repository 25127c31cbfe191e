use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srkd::geometry::{inner_box, outer_box};
use srkd::metrics::reeds_shepp_distance;
use srkd::oracle::{sample_in_box, simulate_reachable};
use srkd::Se2Point;
use std::f64::consts::PI;

fn random_center(rng: &mut ChaCha8Rng) -> Se2Point {
    Se2Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-PI..PI))
}

#[test]
fn reachable_points_stay_in_the_outer_box() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for eps in [0.02, 0.05, 0.1, 0.5, 1.0] {
        for _ in 0..20 {
            let q = random_center(&mut rng);
            let outer = outer_box(&q, eps * (1.0 + 1e-6)).unwrap();
            for y in simulate_reachable(&q, eps, 200, &mut rng).unwrap() {
                assert!(outer.contains(&y), "eps {eps}: {q:?} -> {y:?}");
            }
        }
    }
}

#[test]
fn inner_box_points_are_within_reach() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for eps in [0.02, 0.05, 0.1] {
        for _ in 0..300 {
            let q = random_center(&mut rng);
            let y = sample_in_box(&inner_box(&q, eps).unwrap(), &mut rng);
            let d = reeds_shepp_distance(&q, &y);
            assert!(d <= eps * (1.0 + 1e-3), "eps {eps}: d {d}");
        }
    }
}
