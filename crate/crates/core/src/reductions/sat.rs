use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count the exhaustive routines accept without `force`.
pub const MAX_VARIABLES: usize = 24;

/// One-in-Three SAT: every clause needs exactly one true literal.
///
/// Literals are signed 1-based variable indices (`-3` is "not x3").
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneInThreeSat {
    pub n: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl OneInThreeSat {
    pub fn new(n: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > n {
                    return Err(Error::InvalidInput(format!("clause {}: literal {lit} outside 1..={n}", i + 1)));
                }
            }
        }
        Ok(OneInThreeSat { n, clauses })
    }

    pub fn m(&self) -> usize {
        self.clauses.len()
    }

    /// Adds an unused variable when `n` is odd; returns whether it did.
    pub fn padded(&self) -> (OneInThreeSat, bool) {
        if self.n.is_multiple_of(2) {
            (self.clone(), false)
        } else {
            (OneInThreeSat { n: self.n + 1, clauses: self.clauses.clone() }, true)
        }
    }

    /// True literals of `clause` among those whose variable `assign` decides.
    /// `assign(v)` is `None` for variables outside the partial assignment.
    pub fn true_literals(clause: &[i32; 3], assign: impl Fn(usize) -> Option<bool>) -> usize {
        clause.iter().filter(|&&lit| assign(lit.unsigned_abs() as usize) == Some(lit > 0)).count()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| Self::true_literals(c, |v| Some(assignment[v - 1])) == 1)
    }
}

/// Bit `i` of `mask` is the value of the `i`-th variable of `vars`.
pub(crate) fn partial(vars: &[usize], mask: u64) -> impl Fn(usize) -> Option<bool> + '_ {
    move |v| vars.iter().position(|&w| w == v).map(|i| mask >> i & 1 == 1)
}

/// Exhaustive scan over all `2^n` assignments; bit `i - 1` of the counter is
/// `x_i`, so the first witness found has the smallest counter value.
pub fn one_in_three_sat_brute_force(phi: &OneInThreeSat) -> Result<Option<Vec<bool>>> {
    if phi.n > MAX_VARIABLES {
        return Err(Error::SizeGuard(format!("{} variables", phi.n)));
    }
    for mask in 0u64..1 << phi.n {
        let assignment: Vec<bool> = (0..phi.n).map(|i| mask >> i & 1 == 1).collect();
        if phi.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
