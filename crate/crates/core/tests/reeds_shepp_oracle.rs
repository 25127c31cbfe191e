use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srkd::metrics::reeds_shepp_distance;
use srkd::oracle::rs_distance_upper_bound;
use srkd::Se2Point;
use std::f64::consts::PI;

fn pair(rng: &mut ChaCha8Rng) -> (Se2Point, Se2Point) {
    let mut pt = |h: f64| Se2Point::new(rng.gen_range(-h..h), rng.gen_range(-h..h), rng.gen_range(-PI..PI));
    (pt(2.0), pt(2.0))
}

#[test]
fn closed_form_never_exceeds_the_oracle_and_the_gap_shrinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let resolutions = [100usize, 200, 400];
    let mut gap_sum = [0.0; 3];
    let mut gap_max = [0.0f64; 3];
    for _ in 0..200 {
        let (a, b) = pair(&mut rng);
        let d = reeds_shepp_distance(&a, &b);
        let mut prev = f64::INFINITY;
        for (i, &res) in resolutions.iter().enumerate() {
            let ub = rs_distance_upper_bound(&a, &b, res).unwrap();
            assert!(d <= ub + 1e-9, "{a:?} {b:?}: closed {d} oracle {ub}");
            // doubling the resolution refines the grid, so the bound is monotone
            assert!(ub <= prev + 1e-12);
            prev = ub;
            gap_sum[i] += ub - d;
            gap_max[i] = gap_max[i].max(ub - d);
        }
    }
    assert!(gap_sum[1] < gap_sum[0] && gap_sum[2] < gap_sum[1], "{gap_sum:?}");
    for (i, &res) in resolutions.iter().enumerate() {
        assert!(gap_max[i] <= 2.0 * (2.0 * PI / res as f64), "res {res}: max gap {}", gap_max[i]);
    }
}

#[test]
fn small_lateral_shift_matches_a_fine_oracle() {
    let a = Se2Point::new(0.0, 0.0, 0.0);
    let b = Se2Point::new(0.0, 0.05, 0.0);
    let d = reeds_shepp_distance(&a, &b);
    let ub = rs_distance_upper_bound(&a, &b, 2003).unwrap();
    assert!(d <= ub && ub - d < 1e-6, "closed {d} oracle {ub}");
    assert!((d - 0.629236163416188).abs() < 1e-9);
}

#[test]
fn straight_and_pure_rotation_words() {
    let o = Se2Point::new(0.0, 0.0, 0.0);
    assert!((reeds_shepp_distance(&o, &Se2Point::new(5.0, 0.0, 0.0)) - 5.0).abs() < 1e-12);
    assert!((rs_distance_upper_bound(&o, &Se2Point::new(5.0, 0.0, 0.0), 100).unwrap() - 5.0).abs() < 1e-9);
    // a quarter turn on the unit circle
    let q = Se2Point::new(1.0, 1.0, PI / 2.0);
    assert!((reeds_shepp_distance(&o, &q) - PI / 2.0).abs() < 1e-12);
    assert!((rs_distance_upper_bound(&o, &q, 100).unwrap() - PI / 2.0).abs() < 1e-9);
}
