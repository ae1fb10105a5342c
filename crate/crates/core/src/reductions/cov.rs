use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bridge::{one_bridge_decide, DecisionWitness};
use crate::error::{Error, Result};
use crate::geometry::{Edge, Point, WeightedTree};
use crate::length::Length;
use crate::reductions::sat::{one_in_three_sat_brute_force, partial, OneInThreeSat, MAX_VARIABLES};

/// A vector over `{0, 1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TernaryVector(Vec<u8>);

impl TernaryVector {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some(e) = entries.iter().find(|&&e| e > 2) {
            return Err(Error::InvalidInput(format!("ternary entry {e} outside 0..=2")));
        }
        Ok(TernaryVector(entries))
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Both binary and `u_i + v_i = 1` everywhere.
    pub fn complements(&self, other: &TernaryVector) -> bool {
        self.is_binary() && other.is_binary() && self.0.iter().zip(&other.0).all(|(a, b)| a + b == 1)
    }
}

/// Which variables and partial assignments produced a COV instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub v_a: Vec<usize>,
    pub v_b: Vec<usize>,
    /// Bit `i` of `alpha_a[j]` is the value of `v_a[i]` for vector `a[j]`.
    pub alpha_a: Vec<u64>,
    pub alpha_b: Vec<u64>,
    /// An unused variable was appended to make `n` even.
    pub padded: bool,
}

/// Complementary Orthogonal Vectors: is some binary `u` in `A` the digitwise
/// complement of some binary `v` in `B`?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CovInstance {
    pub m: usize,
    pub a: Vec<TernaryVector>,
    pub b: Vec<TernaryVector>,
    pub provenance: Option<Provenance>,
}

impl CovInstance {
    pub fn new(m: usize, a: Vec<TernaryVector>, b: Vec<TernaryVector>) -> Result<Self> {
        if a.iter().chain(&b).any(|v| v.len() != m) {
            return Err(Error::InvalidInput(format!("all vectors must have dimension {m}")));
        }
        Ok(CovInstance { m, a, b, provenance: None })
    }
}

/// Entry of a vector for a clause with `t` true literals under a partial
/// assignment: 0 for exactly one, 1 for none, 2 for two or more.
fn cov_entry(t: usize) -> u8 {
    match t {
        0 => 1,
        1 => 0,
        _ => 2,
    }
}

/// Splits the variables into index halves, padding `n` to even.
pub(crate) fn halves(phi: &OneInThreeSat, force: bool) -> Result<(OneInThreeSat, bool, Vec<usize>, Vec<usize>)> {
    if phi.n > MAX_VARIABLES && !force {
        return Err(Error::SizeGuard(format!("{} variables (limit {MAX_VARIABLES})", phi.n)));
    }
    let (padded, added) = phi.padded();
    let half = padded.n / 2;
    let v_a = (1..=half).collect();
    let v_b = (half + 1..=padded.n).collect();
    Ok((padded, added, v_a, v_b))
}

/// One `m`-vector per partial assignment of each half of the variables.
pub fn sat_to_cov(phi: &OneInThreeSat, force: bool) -> Result<CovInstance> {
    let (phi, padded, v_a, v_b) = halves(phi, force)?;
    let side = |vars: &[usize]| -> (Vec<TernaryVector>, Vec<u64>) {
        (0u64..1 << vars.len())
            .map(|mask| {
                let assign = partial(vars, mask);
                let entries = phi.clauses.iter().map(|c| cov_entry(OneInThreeSat::true_literals(c, &assign))).collect();
                (TernaryVector(entries), mask)
            })
            .unzip()
    };
    let (a, alpha_a) = side(&v_a);
    let (b, alpha_b) = side(&v_b);
    Ok(CovInstance { m: phi.m(), a, b, provenance: Some(Provenance { v_a, v_b, alpha_a, alpha_b, padded }) })
}

/// First `(i, j)` (lexicographically) with `a[i]` and `b[j]` binary complements.
pub fn cov_brute_force(inst: &CovInstance) -> Option<(usize, usize)> {
    for (i, u) in inst.a.iter().enumerate() {
        if !u.is_binary() {
            continue;
        }
        for (j, v) in inst.b.iter().enumerate() {
            if u.complements(v) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `(1/3)^k` exactly.
pub fn third_power(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(3), k))
}

/// `C = 1 + 1/3 + ... + (1/3)^(m-1) = (3/2)(1 - (1/3)^m)`.
pub fn c_value(m: usize) -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(2)) * (BigRational::one() - third_power(m))
}

/// Segment lengths of the path for `u`: `(1/3)^(i-1)` for a 0 entry, `0` for
/// a 1 and `4` for a 2.
pub fn segment_lengths(u: &TernaryVector) -> Vec<BigRational> {
    u.entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| match e {
            0 => third_power(i),
            1 => BigRational::zero(),
            _ => BigRational::from_integer(BigInt::from(4)),
        })
        .collect()
}

/// Total length of the path for `u`.
pub fn path_depth(u: &TernaryVector) -> BigRational {
    segment_lengths(u).into_iter().sum()
}

/// `(1/3)^i > sum_{j=i+1}^{m-1} (1/3)^j` for every `0 <= i < m - 1`.
pub fn lemma1_holds(m: usize) -> bool {
    (0..m.saturating_sub(1)).all(|i| {
        let tail: BigRational = (i + 1..m).map(third_power).sum();
        third_power(i) > tail
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OneBridgeReductionParams {
    pub m: usize,
    pub c: Length,
    pub c1: Length,
    pub c2: Length,
    /// Segment lengths of the paths built from `A` (in order), then `B`.
    pub ell_a: Vec<Vec<Length>>,
    pub ell_b: Vec<Vec<Length>>,
}

/// Placement of the vector paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// Only path endpoints and the anchors sit on the Y-axis; hubs and interior
    /// path vertices are moved sideways (one column per path). Tree distances
    /// are unchanged because all trees carry explicit weights.
    OffAxis,
    /// Every vertex of a 4-free path on the Y-axis, as drawn in the original
    /// construction. Interior vertices of different trees can then coincide
    /// and create zero-length bridges that do not come from complementary
    /// vectors; kept to demonstrate exactly that.
    OnAxis,
}

/// Builds the one-bridge instance with [`Layout::OffAxis`].
///
/// T1: anchor `(0, C+1)` (vertex 0), hub at height `C` (vertex 1), then the
/// `m` vertices of each path of `A` in order, going down. T2 mirrors it with
/// anchor `(0, -1)`, hub at height 0 and paths going up. Vertex `k` (1-based)
/// of path `j` has index `2 + j*m + k - 1`.
pub fn cov_to_one_bridge(inst: &CovInstance) -> Result<(WeightedTree, WeightedTree, OneBridgeReductionParams)> {
    cov_to_one_bridge_with(inst, Layout::OffAxis)
}

pub fn cov_to_one_bridge_with(
    inst: &CovInstance,
    layout: Layout,
) -> Result<(WeightedTree, WeightedTree, OneBridgeReductionParams)> {
    if inst.m == 0 {
        return Err(Error::InvalidInput("the one-bridge construction needs m >= 1".into()));
    }
    let c = c_value(inst.m);
    let t1 = build_side(&inst.a, &c, layout, true)?;
    let t2 = build_side(&inst.b, &c, layout, false)?;
    let lengths = |vs: &[TernaryVector]| -> Vec<Vec<Length>> {
        vs.iter().map(|v| segment_lengths(v).into_iter().map(Length::Exact).collect()).collect()
    };
    let params = OneBridgeReductionParams {
        m: inst.m,
        c: Length::Exact(c.clone()),
        c1: Length::zero(),
        c2: Length::Exact(&c + BigRational::from_integer(BigInt::from(2))),
        ell_a: lengths(&inst.a),
        ell_b: lengths(&inst.b),
    };
    Ok((t1, t2, params))
}

fn build_side(vectors: &[TernaryVector], c: &BigRational, layout: Layout, upper: bool) -> Result<WeightedTree> {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // T1 hangs down from height C, T2 grows up from 0; T1 columns go right, T2 left
    let (base, dir, side) = if upper { (c.clone(), -1, 1) } else { (BigRational::zero(), 1, -1) };
    let height = |depth: &BigRational| &base + depth * int(dir);
    let anchor = Point::new(int(0), if upper { c + int(1) } else { int(-1) });
    let hub_x = match layout {
        Layout::OffAxis => &half * int(side),
        Layout::OnAxis => int(0),
    };
    let mut points = vec![anchor, Point::new(hub_x, base.clone())];
    let mut edges = vec![Edge { u: 0, v: 1, length: Length::from_int(1) }];

    for (j, vec) in vectors.iter().enumerate() {
        let column = int(side * (j as i64 + 1));
        let straight = vec.entries().iter().all(|&e| e < 2);
        let mut depth = BigRational::zero();
        let mut prev = 1;
        let lengths = segment_lengths(vec);
        for (k, len) in lengths.iter().enumerate() {
            depth += len;
            let on_axis = straight && (layout == Layout::OnAxis || k + 1 == lengths.len());
            let x = if on_axis { int(0) } else { column.clone() };
            points.push(Point::new(x, height(&depth)));
            let idx = points.len() - 1;
            edges.push(Edge { u: prev, v: idx, length: Length::Exact(len.clone()) });
            prev = idx;
        }
    }
    WeightedTree::from_parts(points, edges, true)
}

/// Outcome of the three-way equivalence check for one formula.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IffReport {
    pub sat: Option<Vec<bool>>,
    pub cov: Option<(usize, usize)>,
    pub bridge: Option<DecisionWitness>,
}

impl IffReport {
    pub fn agree(&self) -> bool {
        self.sat.is_some() == self.cov.is_some() && self.cov.is_some() == self.bridge.is_some()
    }
}

/// Runs the SAT brute force, the COV brute force on the reduced instance and
/// the one-bridge decision with `C1 = 0`, `C2 = C + 2` on its trees.
pub fn verify_one_bridge_iff(phi: &OneInThreeSat) -> Result<IffReport> {
    let sat = one_in_three_sat_brute_force(phi)?;
    let inst = sat_to_cov(phi, false)?;
    let cov = cov_brute_force(&inst);
    let (t1, t2, params) = cov_to_one_bridge(&inst)?;
    let bridge = one_bridge_decide(&t1, &t2, &params.c1, &params.c2);
    Ok(IffReport { sat, cov, bridge })
}
