use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::length::{format_rational, Backend, Length};

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    /// Exact conversion of the given doubles (every finite double is rational).
    pub fn from_f64(x: f64, y: f64) -> Option<Self> {
        Some(Point { x: BigRational::from_f64(x)?, y: BigRational::from_f64(y)? })
    }

    pub fn origin() -> Self {
        Point::from_ints(0, 0)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (Length::Exact(self.x.clone()).to_f64(), Length::Exact(self.y.clone()).to_f64())
    }

    pub fn squared_distance(&self, other: &Point) -> BigRational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn translate(&self, dx: &BigRational, dy: &BigRational) -> Point {
        Point { x: &self.x + dx, y: &self.y + dy }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Euclidean distance `|pq|`.
///
/// Exact in the rational backend whenever the squared distance is a perfect
/// rational square (always the case for axis-aligned pairs); a double otherwise.
pub fn euclidean_distance(p: &Point, q: &Point, backend: Backend) -> Length {
    if backend == Backend::Double {
        let (px, py) = p.to_f64();
        let (qx, qy) = q.to_f64();
        return Length::Approx((px - qx).hypot(py - qy));
    }
    if p.x == q.x {
        return Length::Exact((&p.y - &q.y).abs());
    }
    if p.y == q.y {
        return Length::Exact((&p.x - &q.x).abs());
    }
    Length::sqrt_of(&p.squared_distance(q), backend)
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    det.cmp(&BigRational::zero())
}

fn within_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ly, hy) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &p.x >= lx && &p.x <= hx && &p.y >= ly && &p.y <= hy
}

/// Closed-segment intersection test (touching and collinear overlap count).
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2
        && o3 != o4
        && o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        return true;
    }
    (o1 == Ordering::Equal && within_box(c, a, b))
        || (o2 == Ordering::Equal && within_box(d, a, b))
        || (o3 == Ordering::Equal && within_box(a, c, d))
        || (o4 == Ordering::Equal && within_box(b, c, d))
}

/// Proper crossing: the open segments meet in exactly one interior point.
pub fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o1 != o2
        && o3 != o4
}

pub(crate) fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
