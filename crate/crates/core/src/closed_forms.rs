//! Closed-form `N_j` / `M_j` for the three parameter families that have one.
//!
//! * family 1: `q = 2`, `e1 = e2 = 1`, `gcd(k1, k2) = 1`, `k1, k2 >= 2`;
//! * family 2: `e1 = 1`, `e2 = q - 1`, `gcd(k1, k2) = 1`, `k2` odd;
//! * family 3: `e1 = q - 1`, `e2 = 1`, `gcd(k1, k2) = 1`, `k1` odd.
//!
//! Families 2 and 3 additionally need `gcd(k_odd, q - 1) = 1` (that is what
//! makes `gcd(n1, n2) = 1`); for `q <= 3` this is the same as oddness.
//! Branches follow the printed case split exactly and sums are evaluated
//! term by term, empty sums being zero.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::codes::CodeSpec;
use crate::gf::prime_power;
use crate::{gcd, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corollary {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `k1 <= k2`
    K1LeK2,
    /// `1 <= j <= k2 < k1`
    JLeK2LtK1,
    /// `k2 < j <= k1`
    K2LtJLeK1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCase {
    pub which: Corollary,
    pub q: u64,
    pub k1: u32,
    pub k2: u32,
    pub j: u32,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: CorollaryCase,
    pub n: BigInt,
    pub n_j: BigInt,
    pub m_j: BigInt,
}

fn pow(q: u64, e: i64) -> BigInt {
    debug_assert!(e >= 0);
    num_traits::pow(BigInt::from(q), e as usize)
}

/// `sum_{t = lo}^{hi} q^t`, zero when `lo > hi`.
fn geometric(q: u64, lo: i64, hi: i64) -> BigInt {
    (lo..=hi).fold(BigInt::zero(), |acc, t| acc + pow(q, t))
}

fn branch(k1: u32, k2: u32, j: u32) -> Branch {
    if k1 <= k2 {
        Branch::K1LeK2
    } else if j <= k2 {
        Branch::JLeK2LtK1
    } else {
        Branch::K2LtJLeK1
    }
}

fn check_j(k1: u32, j: u32) -> Result<()> {
    if j == 0 || j > k1 {
        return Err(Error::RangeError { value: j as u64, min: 1, max: k1 as u64 });
    }
    Ok(())
}

fn finish(case: CorollaryCase, n: BigInt, n_j: BigInt) -> Result<ClosedForm> {
    let m_j = &n - &n_j;
    if !n_j.is_positive() || !m_j.is_positive() {
        return Err(Error::NonPositive);
    }
    Ok(ClosedForm { case, n, n_j, m_j })
}

/// Binary m-sequence family.
pub fn corollary1_nj(k1: u32, k2: u32, j: u32) -> Result<ClosedForm> {
    if k1 < 2 || k2 < 2 {
        return Err(Error::HypothesisViolated("k1, k2 >= 2"));
    }
    if gcd(k1 as u64, k2 as u64) != 1 {
        return Err(Error::HypothesisViolated("gcd(k1, k2) = 1"));
    }
    check_j(k1, j)?;
    let q = 2u64;
    let (k1i, k2i, ji) = (k1 as i64, k2 as i64, j as i64);
    let br = branch(k1, k2, j);
    let n_j = match br {
        Branch::K1LeK2 | Branch::JLeK2LtK1 => {
            pow(q, k1i + k2i - ji) - pow(q, k1i - ji) - pow(q, k2i - ji) + BigInt::one()
        }
        Branch::K2LtJLeK1 => pow(q, k1i + k2i - ji) - pow(q, k1i - ji),
    };
    let n = (pow(q, k1i) - 1) * (pow(q, k2i) - 1);
    finish(CorollaryCase { which: Corollary::One, q, k1, k2, j, branch: br }, n, n_j)
}

/// Shared display of families 2 and 3.
fn second_formula(which: Corollary, q: u64, k1: u32, k2: u32, j: u32) -> Result<ClosedForm> {
    let (k1i, k2i, ji) = (k1 as i64, k2 as i64, j as i64);
    let br = branch(k1, k2, j);
    let n_j = match br {
        Branch::K1LeK2 => geometric(q, k2i - ji, k1i + k2i - ji - 1) - geometric(q, 0, k1i - ji - 1),
        Branch::JLeK2LtK1 => geometric(q, k1i - ji, k1i + k2i - ji - 1) - geometric(q, 0, k2i - ji - 1),
        Branch::K2LtJLeK1 => pow(q, k1i - ji) * geometric(q, 0, k2i - 1),
    };
    let n = (pow(q, k1i) - 1) * (pow(q, k2i) - 1) / BigInt::from(q - 1);
    finish(CorollaryCase { which, q, k1, k2, j, branch: br }, n, n_j)
}

fn common_hypotheses(q: u64, k1: u32, k2: u32) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::HypothesisViolated("q is a prime power"));
    }
    if k1 == 0 || k2 == 0 || gcd(k1 as u64, k2 as u64) != 1 {
        return Err(Error::HypothesisViolated("gcd(k1, k2) = 1"));
    }
    Ok(())
}

/// `e1 = 1`, `e2 = q - 1`.
pub fn corollary2_nj(q: u64, k1: u32, k2: u32, j: u32) -> Result<ClosedForm> {
    common_hypotheses(q, k1, k2)?;
    if k2.is_multiple_of(2) {
        return Err(Error::HypothesisViolated("k2 odd"));
    }
    if gcd(k2 as u64, q - 1) != 1 {
        return Err(Error::HypothesisViolated("gcd(k2, q - 1) = 1"));
    }
    // n1 = q^k1 - 1, n2 = (q^k2 - 1)/(q - 1)
    if q == 2 && k1 == 1 {
        return Err(Error::DegenerateOrder { side: 1 });
    }
    if k2 == 1 {
        return Err(Error::DegenerateOrder { side: 2 });
    }
    check_j(k1, j)?;
    second_formula(Corollary::Two, q, k1, k2, j)
}

/// `e1 = q - 1`, `e2 = 1`.
pub fn corollary3_nj(q: u64, k1: u32, k2: u32, j: u32) -> Result<ClosedForm> {
    common_hypotheses(q, k1, k2)?;
    if k1.is_multiple_of(2) {
        return Err(Error::HypothesisViolated("k1 odd"));
    }
    if gcd(k1 as u64, q - 1) != 1 {
        return Err(Error::HypothesisViolated("gcd(k1, q - 1) = 1"));
    }
    if k1 == 1 {
        return Err(Error::DegenerateOrder { side: 1 });
    }
    if q == 2 && k2 == 1 {
        return Err(Error::DegenerateOrder { side: 2 });
    }
    check_j(k1, j)?;
    second_formula(Corollary::Three, q, k1, k2, j)
}

/// The closed form that applies to `spec`, trying families 1, 2, 3 in
/// order; `None` when no family's hypotheses hold.
pub fn closed_form_for(spec: &CodeSpec, j: u32) -> Option<ClosedForm> {
    let (q, k1, k2) = (spec.q() as u64, spec.k1(), spec.k2());
    let (e1, e2) = (spec.e1(), spec.e2());
    let mut candidates = [None, None, None];
    if q == 2 && e1 == 1 && e2 == 1 {
        candidates[0] = corollary1_nj(k1, k2, j).ok();
    }
    if e1 == 1 && e2 == q - 1 {
        candidates[1] = corollary2_nj(q, k1, k2, j).ok();
    }
    if e1 == q - 1 && e2 == 1 {
        candidates[2] = corollary3_nj(q, k1, k2, j).ok();
    }
    candidates.into_iter().flatten().next()
}
