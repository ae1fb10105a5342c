use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::point::rational;
use crate::geometry::{Point, WeightedTree};
use crate::length::Backend;

/// Two paths `T1 = (x, a, b, y)` and `T2 = (z, c, d, w)` whose optimal twin
/// bridges cross.
///
/// `b = (0, 0)`, `c = (1, 0)` and `d = (18/25, 24/25)` give `|bc| = |cd| = 1`
/// and `|bd| = 6/5`; `a = (3831/7925, -92/7925)` sits just below `bc` with
/// `|ad| = 1`, so the bridge `ad` crosses `bc`. The pendants `x, y, z, w` hang
/// at distance `eps` from `a, b, c, d`. Requires `0 < eps <= 1/10`.
pub fn gen_fig3_instance(eps: &BigRational) -> Result<(WeightedTree, WeightedTree)> {
    if !(eps > &BigRational::zero() && eps <= &rational(1, 10)) {
        return Err(Error::InvalidInput("eps must lie in (0, 1/10]".into()));
    }
    let b = Point::new(rational(0, 1), rational(0, 1));
    let c = Point::new(rational(1, 1), rational(0, 1));
    let d = Point::new(rational(18, 25), rational(24, 25));
    let a = Point::new(rational(3831, 7925), rational(-92, 7925));
    let hang = |p: &Point, dx: BigRational, dy: BigRational| p.translate(&(eps * dx), &(eps * dy));
    let x = hang(&a, rational(0, 1), rational(1, 1));
    let y = hang(&b, rational(-1, 1), rational(0, 1));
    let z = hang(&c, rational(-3, 5), rational(4, 5));
    let w = hang(&d, rational(1, 1), rational(0, 1));

    let chain = [(0, 1), (1, 2), (2, 3)];
    let t1 = WeightedTree::geometric(vec![x, a, b, y], &chain, Backend::Rational)?
        .with_labels(["x", "a", "b", "y"].map(String::from).to_vec())?;
    let t2 = WeightedTree::geometric(vec![z, c, d, w], &chain, Backend::Rational)?
        .with_labels(["z", "c", "d", "w"].map(String::from).to_vec())?;
    Ok((t1, t2))
}
