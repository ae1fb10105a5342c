use bridgeworks::generate::{gen_circle_pair, gen_random_tree, BBox};
use bridgeworks::geometry::{segments_cross, segments_intersect, tree_diameter, DistanceTable, Point, WeightedTree};
use bridgeworks::{Backend, Length};
use proptest::prelude::*;

mod common;

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

#[test]
fn pythagorean_edges_stay_exact() {
    let t = WeightedTree::geometric(vec![pt(0, 0), pt(3, 4), pt(3, 0)], &[(0, 1), (1, 2)], Backend::Rational).unwrap();
    assert_eq!(t.edges()[0].length, Length::from_int(5));
    assert_eq!(tree_diameter(&t).2, Length::from_int(9));
}

#[test]
fn irrational_edge_falls_back_to_double() {
    let t = WeightedTree::geometric(vec![pt(0, 0), pt(1, 1)], &[(0, 1)], Backend::Rational).unwrap();
    assert!(!t.edges()[0].length.is_exact());
    assert!((t.edges()[0].length.to_f64() - 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn rejects_cycles_and_forests() {
    let pts = vec![pt(0, 0), pt(1, 0), pt(0, 1)];
    assert!(WeightedTree::geometric(pts.clone(), &[(0, 1), (1, 2), (2, 0)], Backend::Rational).is_err());
    assert!(WeightedTree::geometric(pts, &[(0, 1)], Backend::Rational).is_err());
}

#[test]
fn circle_pairs_are_exact_everywhere() {
    for seed in 0..20 {
        let (t1, t2) = gen_circle_pair(6, 7, seed);
        assert!(t1.all_lengths_exact() && t2.all_lengths_exact());
        for p in t1.points() {
            for q in t2.points() {
                assert!(bridgeworks::geometry::euclidean_distance(p, q, Backend::Rational).is_exact());
            }
        }
    }
}

#[test]
fn touching_segments_intersect_but_do_not_cross() {
    assert!(segments_intersect(&pt(0, 0), &pt(2, 0), &pt(1, 0), &pt(1, 5)));
    assert!(!segments_cross(&pt(0, 0), &pt(2, 0), &pt(1, 0), &pt(1, 5)));
    assert!(segments_cross(&pt(0, 0), &pt(2, 2), &pt(0, 2), &pt(2, 0)));
    assert!(!segments_intersect(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Distance table rows agree with per-source traversals and with Dijkstra.
    #[test]
    fn distance_table_matches_dijkstra(n in 1usize..25, seed in any::<u64>()) {
        let t = gen_random_tree(n, seed, &BBox::default());
        let table = DistanceTable::build(&t);
        let g = common::joined_graph(&t, &WeightedTree::single(pt(0, 0)), &[]);
        for u in 0..n {
            let d = g.dijkstra(u);
            let traversal = t.distances_from(u);
            for v in 0..n {
                let want = d[v].clone().unwrap();
                prop_assert!(table.get(u, v).approx_eq(&want));
                prop_assert!(traversal[v].approx_eq(&want));
            }
        }
        let (a, b, len) = tree_diameter(&t);
        prop_assert!(table.get(a, b).approx_eq(&len));
        prop_assert!((0..n).all(|u| !len.definitely_lt(table.eccentricity(u))));
    }
}
