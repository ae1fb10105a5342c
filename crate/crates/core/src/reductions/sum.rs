use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::reductions::cov::halves;
use crate::reductions::sat::{partial, OneInThreeSat, MAX_VARIABLES};

/// Largest product of part sizes the k-SUM brute force scans.
pub const KSUM_LIMIT: u128 = 10_000_000;

/// The integer written as `digits` ones.
pub fn repunit(digits: usize) -> BigInt {
    (0..digits).fold(BigInt::zero(), |acc, _| acc * 10 + 1)
}

/// Reads base-10 digits, most significant first.
pub fn from_digits(digits: &[u8]) -> BigInt {
    digits.iter().fold(BigInt::zero(), |acc, &d| acc * 10 + d)
}

/// Zero-padded decimal digits of a non-negative integer.
pub fn to_digits(value: &BigInt, width: usize) -> Vec<u8> {
    let s = value.to_string();
    let mut out = vec![0; width.saturating_sub(s.len())];
    out.extend(s.bytes().map(|b| b - b'0'));
    out
}

/// Clause digit for `t` true literals: 0 for none, 1 for exactly one, 2 for
/// two or more. Note the roles of 0 and 1 are swapped relative to the COV
/// entries.
fn sum_digit(t: usize) -> u8 {
    t.min(2) as u8
}

fn clause_digits(phi: &OneInThreeSat, vars: &[usize], mask: u64) -> Vec<u8> {
    let assign = partial(vars, mask);
    phi.clauses.iter().map(|c| sum_digit(OneInThreeSat::true_literals(c, &assign))).collect()
}

/// 3-SUM instance: `s` lists the `A` integers, then `B`, then `-repunit(digits)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeSumInstance {
    #[serde(serialize_with = "ser_ints")]
    pub s: Vec<BigInt>,
    pub digits: usize,
    pub a_len: usize,
    pub b_len: usize,
    pub v_a: Vec<usize>,
    pub v_b: Vec<usize>,
    pub padded: bool,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl ThreeSumInstance {
    pub fn target_position(&self) -> usize {
        self.a_len + self.b_len
    }
}

/// Each partial assignment of a half becomes an `(m + 2)`-digit integer: one
/// digit per clause (most significant first), then the tag digits `10` for
/// the first half and `01` for the second.
pub fn sat_to_threesum(phi: &OneInThreeSat, force: bool) -> Result<ThreeSumInstance> {
    let (phi, padded, v_a, v_b) = halves(phi, force)?;
    let digits = phi.m() + 2;
    let side = |vars: &[usize], tag: [u8; 2]| -> Vec<BigInt> {
        (0u64..1 << vars.len())
            .map(|mask| {
                let mut d = clause_digits(&phi, vars, mask);
                d.extend(tag);
                from_digits(&d)
            })
            .collect()
    };
    let mut s = side(&v_a, [1, 0]);
    let b = side(&v_b, [0, 1]);
    let (a_len, b_len) = (s.len(), b.len());
    s.extend(b);
    s.push(-repunit(digits));
    Ok(ThreeSumInstance { s, digits, a_len, b_len, v_a, v_b, padded })
}

/// Lexicographically first positions `i < j < k` with `s[i] + s[j] + s[k] = 0`.
/// O(N^2 log N) with a value-to-positions index.
pub fn threesum_brute_force(s: &[BigInt]) -> Option<[usize; 3]> {
    let mut index: HashMap<&BigInt, Vec<usize>> = HashMap::new();
    for (i, x) in s.iter().enumerate() {
        index.entry(x).or_default().push(i);
    }
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let need = -(&s[i] + &s[j]);
            if let Some(pos) = index.get(&need) {
                let at = pos.partition_point(|&k| k <= j);
                if let Some(&k) = pos.get(at) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// k-SUM instance with one part per variable group plus the target part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KSumInstance {
    pub k: usize,
    #[serde(serialize_with = "ser_parts")]
    pub parts: Vec<Vec<BigInt>>,
    pub digits: usize,
    pub groups: Vec<Vec<usize>>,
}

fn ser_parts<S: serde::Serializer>(v: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
}

/// Splits the variables into `k - 1` contiguous groups of at most
/// `ceil(n / (k - 1))` (trailing groups may be empty). Integers carry one digit
/// per clause and `k - 1` tag digits, the `g`-th set for group `g`; the last
/// part is `{-repunit(m + k - 1)}`.
///
/// Picking one integer per part, each clause digit sums to the total number of
/// true literals capped per group, which is at most 3, so no carries occur.
pub fn sat_to_ksum(phi: &OneInThreeSat, k: usize, force: bool) -> Result<KSumInstance> {
    if !(3..=6).contains(&k) {
        return Err(Error::InvalidInput(format!("k = {k} outside 3..=6")));
    }
    if phi.n > MAX_VARIABLES && !force {
        return Err(Error::SizeGuard(format!("{} variables (limit {MAX_VARIABLES})", phi.n)));
    }
    let width = phi.n.div_ceil(k - 1).max(1);
    let groups: Vec<Vec<usize>> =
        (0..k - 1).map(|g| (g * width + 1..=((g + 1) * width).min(phi.n)).collect()).collect();
    let digits = phi.m() + k - 1;
    let mut parts: Vec<Vec<BigInt>> = groups
        .iter()
        .enumerate()
        .map(|(g, vars)| {
            (0u64..1 << vars.len())
                .map(|mask| {
                    let mut d = clause_digits(phi, vars, mask);
                    d.extend((0..k - 1).map(|t| u8::from(t == g)));
                    from_digits(&d)
                })
                .collect()
        })
        .collect();
    parts.push(vec![-repunit(digits)]);
    Ok(KSumInstance { k, parts, digits, groups })
}

/// First choice of one index per part (lexicographic) summing to zero.
pub fn ksum_brute_force(inst: &KSumInstance) -> Result<Option<Vec<usize>>> {
    let total: u128 = inst.parts.iter().map(|p| p.len() as u128).product();
    if total > KSUM_LIMIT {
        return Err(Error::SizeGuard(format!("{total} combinations (limit {KSUM_LIMIT})")));
    }
    if inst.parts.iter().any(|p| p.is_empty()) {
        return Ok(None);
    }
    let mut choice = vec![0; inst.parts.len()];
    loop {
        let sum: BigInt = choice.iter().zip(&inst.parts).map(|(&i, p)| &p[i]).sum();
        if sum.is_zero() {
            return Ok(Some(choice));
        }
        // odometer, last part fastest
        let mut pos = inst.parts.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < inst.parts[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Five two-digit addends `02` and one `01` sum to `11`: summing more than
/// five digit-2 entries carries into the next digit, which is why the
/// construction stops at six parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarryDemo {
    pub addends: Vec<String>,
    pub sum: String,
}

pub fn carry_demo() -> CarryDemo {
    let addends: Vec<Vec<u8>> = std::iter::repeat_n(vec![0, 2], 5).chain([vec![0, 1]]).collect();
    let sum: BigInt = addends.iter().map(|d| from_digits(d)).sum();
    let show = |d: &[u8]| d.iter().map(|x| char::from(b'0' + x)).collect::<String>();
    CarryDemo { addends: addends.iter().map(|d| show(d)).collect(), sum: show(&to_digits(&sum, 2)) }
}

/// Digitwise sums of two non-negative integers (no carries propagated).
pub fn digit_sums(a: &BigInt, b: &BigInt, width: usize) -> Vec<u8> {
    to_digits(a, width).into_iter().zip(to_digits(b, width)).map(|(x, y)| x + y).collect()
}

/// `true` iff `a + b` equals the repunit of `width` digits and no position
/// carries.
pub fn digitwise_matches(a: &BigInt, b: &BigInt, width: usize) -> bool {
    digit_sums(a, b, width).iter().all(|&d| d == 1) && a + b == repunit(width)
}

impl KSumInstance {
    pub fn target(&self) -> BigInt {
        -repunit(self.digits)
    }

    pub fn is_witness(&self, choice: &[usize]) -> bool {
        choice.len() == self.parts.len()
            && choice.iter().zip(&self.parts).map(|(&i, p)| &p[i]).sum::<BigInt>().is_zero()
    }
}
