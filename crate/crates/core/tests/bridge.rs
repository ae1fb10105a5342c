use bridgeworks::bridge::{
    approx_greedy, bichromatic_closest_pair, closest_pair_scan, gen_fig2_instance, one_bridge_decide, score_bridge,
    solve_exact,
};
use bridgeworks::generate::{gen_circle_pair, gen_random_tree, BBox};
use bridgeworks::geometry::{DistanceTable, Point};
use bridgeworks::length::parse_rational;
use bridgeworks::Length;
use proptest::prelude::*;

mod common;

fn points(raw: &[(i32, i32)]) -> Vec<Point> {
    raw.iter().map(|&(x, y)| Point::from_ints(x.into(), y.into())).collect()
}

#[test]
fn fig2_caption_values() {
    for (n, eps) in [(1u64, "1/2"), (10, "1/10"), (250, "1/1000")] {
        let e = parse_rational(eps).unwrap();
        let (t1, t2) = gen_fig2_instance(n, &e).unwrap();
        let exact = solve_exact(&t1, &t2).value;
        let greedy = approx_greedy(&t1, &t2).value;
        assert_eq!(exact, Length::from_int(2 * n as i64 + 1));
        assert_eq!(greedy, Length::Exact(parse_rational(&(4 * n + 1).to_string()).unwrap() - e));
    }
}

#[test]
fn exact_solution_is_consistent_with_scoring() {
    for seed in 0..30 {
        let (t1, t2) = gen_circle_pair(5, 8, seed);
        let s = solve_exact(&t1, &t2);
        let scored = score_bridge(&t1, &t2, s.p, s.q);
        assert_eq!((&scored.value, &scored.bridge_length), (&s.value, &s.bridge_length));
        assert_eq!(s.value, common::bridge_value_by_dijkstra(&t1, &t2, s.p, s.q));
    }
}

/// Slow second decider: every bridge and leaf pair, exact arithmetic.
fn decide_by_scan(
    t1: &bridgeworks::geometry::WeightedTree,
    t2: &bridgeworks::geometry::WeightedTree,
    c1: &Length,
    c2: &Length,
) -> bool {
    let (d1, d2) = (DistanceTable::build(t1), DistanceTable::build(t2));
    (0..t1.len()).any(|p| {
        (0..t2.len()).any(|q| {
            let len = common::bridge_length(t1, t2, p, q);
            len == *c1
                && t1
                    .leaves()
                    .iter()
                    .any(|&x| t2.leaves().iter().any(|&y| &(d1.get(x, p) + &len) + d2.get(q, y) == *c2))
        })
    })
}

#[test]
fn decide_matches_scan_on_realized_and_perturbed_targets() {
    for seed in 0..40 {
        let (t1, t2) = gen_circle_pair(4, 5, seed);
        let (d1, d2) = (DistanceTable::build(&t1), DistanceTable::build(&t2));
        let (p, q) = ((seed as usize) % 4, (seed as usize / 4) % 5);
        let c1 = common::bridge_length(&t1, &t2, p, q);
        let (x, y) = (t1.leaves()[0], t2.leaves()[0]);
        let c2 = &(d1.get(x, p) + &c1) + d2.get(q, y);
        for target in [c2.clone(), &c2 + &Length::ratio(1, 7)] {
            let got = one_bridge_decide(&t1, &t2, &c1, &target);
            assert_eq!(got.is_some(), decide_by_scan(&t1, &t2, &c1, &target), "seed {seed}");
            if let Some(w) = got {
                assert_eq!(common::bridge_length(&t1, &t2, w.p, w.q), c1);
                assert_eq!(&(d1.get(w.x, w.p) + &c1) + d2.get(w.q, w.y), target);
            }
        }
        assert!(one_bridge_decide(&t1, &t2, &Length::from_int(-1), &c2).is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closest_pair_matches_scan(
        a in prop::collection::vec((-60i32..60, -60i32..60), 1..40),
        b in prop::collection::vec((-60i32..60, -60i32..60), 1..40),
    ) {
        let (a, b) = (points(&a), points(&b));
        let fast = bichromatic_closest_pair(&a, &b).unwrap();
        let slow = closest_pair_scan(&a, &b).unwrap();
        prop_assert_eq!(&fast.2, &slow.2);
        prop_assert_eq!(a[fast.0].squared_distance(&b[fast.1]), fast.2);
    }

    #[test]
    fn greedy_within_factor_two(n1 in 1usize..30, n2 in 1usize..30, seed in any::<u64>()) {
        let t1 = gen_random_tree(n1, seed, &BBox::default());
        let t2 = gen_random_tree(n2, seed ^ 0x9e37, &BBox::default());
        let exact = solve_exact(&t1, &t2).value;
        let greedy = approx_greedy(&t1, &t2).value;
        prop_assert!(!greedy.definitely_lt(&exact));
        prop_assert!(!(&exact + &exact).definitely_lt(&greedy));
    }
}
