use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Point, WeightedTree};
use crate::length::Length;

/// The greedy-tightness instance: paths `(a, b, c)` and `(d, e, f)` with all
/// tree edges of length `n`, `|be| = 1` and `|cf| = 1 - eps`.
///
/// `b = (0, 0)`, `e = (1, 0)`, the outer arms `a`, `d` point down and `c`, `f`
/// lean towards each other at height `n`. Tree edges carry explicit weight `n`
/// (the leaning arms are a hair longer geometrically); every bridge length is
/// geometric and exact on the pairs that matter. Vertex order is `a, b, c` and
/// `d, e, f`.
pub fn gen_fig2_instance(n: u64, eps: &BigRational) -> Result<(WeightedTree, WeightedTree)> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if !(eps > &BigRational::zero() && eps < &BigRational::one()) {
        return Err(Error::InvalidInput("eps must lie in (0, 1)".into()));
    }
    let nn = BigRational::from_integer(BigInt::from(n));
    let zero = BigRational::zero();
    let one = BigRational::one();
    let half_eps = eps / BigRational::from_integer(BigInt::from(2));

    let a = Point::new(zero.clone(), -nn.clone());
    let b = Point::new(zero.clone(), zero.clone());
    let c = Point::new(half_eps.clone(), nn.clone());
    let d = Point::new(one.clone(), -nn.clone());
    let e = Point::new(one.clone(), zero);
    let f = Point::new(&one - &half_eps, nn.clone());

    let w = Length::Exact(nn);
    let t1 = WeightedTree::weighted(vec![a, b, c], vec![(0, 1, w.clone()), (1, 2, w.clone())])?.with_labels(vec![
        "a".into(),
        "b".into(),
        "c".into(),
    ])?;
    let t2 = WeightedTree::weighted(vec![d, e, f], vec![(0, 1, w.clone()), (1, 2, w)])?.with_labels(vec![
        "d".into(),
        "e".into(),
        "f".into(),
    ])?;
    Ok((t1, t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::{approx_greedy, solve_exact};
    use crate::geometry::point::rational;
    use crate::geometry::tree_diameter;

    #[test]
    fn caption_values() {
        let (t1, t2) = gen_fig2_instance(10, &rational(1, 10)).unwrap();
        assert_eq!(tree_diameter(&t1), (0, 2, Length::from_int(20)));
        let exact = solve_exact(&t1, &t2);
        assert_eq!((exact.p, exact.q), (1, 1));
        assert_eq!(exact.value, Length::from_int(21));
        let greedy = approx_greedy(&t1, &t2);
        assert_eq!((greedy.p, greedy.q), (2, 2));
        assert_eq!(greedy.value, Length::ratio(409, 10));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gen_fig2_instance(0, &rational(1, 10)).is_err());
        assert!(gen_fig2_instance(3, &rational(1, 1)).is_err());
    }
}
