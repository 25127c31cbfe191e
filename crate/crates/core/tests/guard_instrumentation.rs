use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srkd::{BuildMode, Guard, KdTree, ReedsShepp, Se2Point, Splitting};
use std::f64::consts::PI;

fn cloud(n: usize, rng: &mut ChaCha8Rng) -> Vec<Se2Point> {
    (0..n)
        .map(|_| Se2Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0), rng.gen_range(-PI..PI)))
        .collect()
}

#[test]
fn box_guard_visits_no_more_vertices_in_almost_every_query() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pts = cloud(20_000, &mut rng);
    let queries = cloud(500, &mut rng);
    for mode in [BuildMode::Batch, BuildMode::Incremental(Splitting::Classic), BuildMode::Incremental(Splitting::Lie)] {
        let tree = KdTree::build(&pts, mode);
        let mut no_worse = 0;
        for q in &queries {
            let (a, sa) = tree.query(q, 1, &ReedsShepp, Guard::Bb).unwrap();
            let (b, sb) = tree.query(q, 1, &ReedsShepp, Guard::Eb).unwrap();
            assert_eq!(a[0].distance, b[0].distance);
            no_worse += (sa.vertices_visited <= sb.vertices_visited) as usize;
        }
        assert!(no_worse * 100 >= 95 * queries.len(), "{mode}: {no_worse}/{}", queries.len());
    }
}
