//! The RGHW `M_j(C, C')` along two enumeration routes.
//!
//! * brute force: minimize `|Supp(D)|` over `j`-dimensional `D` in `C` with
//!   `D ∩ C' = {0}`. `D` is enumerated through its preimage `H` in
//!   `GF(Q1) x GF(Q2)`, where the condition reads `ker(pi_1|H) = 0`.
//! * dual maximization: `M_j = n - N_j`, `N_j` the largest number of points
//!   `(a1^i, a2^i)` inside a `(k1 + k2 - j)`-dimensional `H` with
//!   `pi_2(H) = GF(Q2)`.
//!
//! Both are expressed per enumeration partition so that callers can fan the
//! work out; the sequential entry points fold partitions in order, which
//! makes the reported witness the first optimum in enumeration order.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::closed_forms::{closed_form_for, ClosedForm};
use crate::codes::{support, CodeSpec};
use crate::subspaces::{
    dual_subspace, intersect_with_cyclic_group, SubspaceBasis, SubspaceEnumerator, DEFAULT_ENUMERATION_CAP,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    BruteForce,
    Theorem1,
    ClosedForm,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::BruteForce, Route::Theorem1, Route::ClosedForm];

    pub fn name(self) -> &'static str {
        match self {
            Route::BruteForce => "bruteforce",
            Route::Theorem1 => "theorem1",
            Route::ClosedForm => "closed_form",
        }
    }
}

/// Optimum of one search, with the first subspace attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub witness: SubspaceBasis,
}

/// `RangeError` unless `1 <= j <= k1`.
pub fn check_range(spec: &CodeSpec, j: usize) -> Result<()> {
    let k1 = spec.k1() as usize;
    if j == 0 || j > k1 {
        return Err(Error::RangeError { value: j as u64, min: 1, max: k1 as u64 });
    }
    Ok(())
}

/// `|Supp(phi(H))|` for `H` in the product ambient.
pub fn support_size(spec: &CodeSpec, h: &SubspaceBasis) -> Result<usize> {
    let words = h.rows().map(|r| spec.encode(r)).collect::<Result<Vec<_>>>()?;
    Ok(support(&words)?.len())
}

/// Whether `phi(H) ∩ C' = {0}`, tested as injectivity of `pi_1` on `H`.
pub fn meets_subcode_trivially(spec: &CodeSpec, h: &SubspaceBasis) -> bool {
    h.rank_of_columns(spec.base(), 0..spec.k1() as usize) == h.dim()
}

/// Enumeration plan for the support minimization over `j`-dimensional `H`.
pub fn support_search_plan(spec: &CodeSpec, j: usize, cap: u128) -> Result<SubspaceEnumerator> {
    SubspaceEnumerator::with_cap(spec.ambient(), j, spec.q(), cap)
}

/// Minimum support over one partition; `restricted` keeps only `H` meeting
/// `C'` trivially.
pub fn min_support_in_partition(
    spec: &CodeSpec,
    plan: &SubspaceEnumerator,
    index: usize,
    restricted: bool,
) -> Result<Option<Extremum>> {
    let mut best: Option<Extremum> = None;
    for h in plan.partition(index) {
        if restricted && !meets_subcode_trivially(spec, &h) {
            continue;
        }
        let s = support_size(spec, &h)?;
        if best.as_ref().is_none_or(|b| s < b.value) {
            best = Some(Extremum { value: s, witness: h });
        }
    }
    Ok(best)
}

/// Enumeration plan for the dual side: `(k1 + k2 - j)`-dimensional `H`.
pub fn theorem1_plan(spec: &CodeSpec, j: usize, cap: u128) -> Result<SubspaceEnumerator> {
    check_range(spec, j)?;
    SubspaceEnumerator::with_cap(spec.ambient(), spec.dim() - j, spec.q(), cap)
}

/// Largest `|H ∩ <(a1, a2)>|` over one partition with `pi_2(H) = GF(Q2)`.
pub fn max_intersection_in_partition(spec: &CodeSpec, plan: &SubspaceEnumerator, index: usize) -> Option<Extremum> {
    let k1 = spec.k1() as usize;
    let k2 = spec.k2() as usize;
    let mut best: Option<Extremum> = None;
    for h in plan.partition(index) {
        if h.rank_of_columns(spec.base(), k1..k1 + k2) != k2 {
            continue;
        }
        let c = intersect_with_cyclic_group(spec, &h);
        if best.as_ref().is_none_or(|b| c > b.value) {
            best = Some(Extremum { value: c, witness: h });
        }
    }
    best
}

/// Folds per-partition minima in partition order (ties keep the earlier).
pub fn fold_min<I: IntoIterator<Item = Option<Extremum>>>(parts: I) -> Option<Extremum> {
    parts.into_iter().flatten().fold(None, |best: Option<Extremum>, e| match best {
        Some(b) if b.value <= e.value => Some(b),
        _ => Some(e),
    })
}

/// Folds per-partition maxima in partition order (ties keep the earlier).
pub fn fold_max<I: IntoIterator<Item = Option<Extremum>>>(parts: I) -> Option<Extremum> {
    parts.into_iter().flatten().fold(None, |best: Option<Extremum>, e| match best {
        Some(b) if b.value >= e.value => Some(b),
        _ => Some(e),
    })
}

/// `M_j(C, C')` straight from the definition.
pub fn rghw_bruteforce(spec: &CodeSpec, j: usize) -> Result<Extremum> {
    rghw_bruteforce_with_cap(spec, j, DEFAULT_ENUMERATION_CAP)
}

pub fn rghw_bruteforce_with_cap(spec: &CodeSpec, j: usize, cap: u128) -> Result<Extremum> {
    check_range(spec, j)?;
    let plan = support_search_plan(spec, j, cap)?;
    let parts = (0..plan.partitions())
        .map(|i| min_support_in_partition(spec, &plan, i, true))
        .collect::<Result<Vec<_>>>()?;
    // j <= k1 always leaves some H with pi_1 injective
    fold_min(parts).ok_or(Error::RangeError { value: j as u64, min: 1, max: spec.k1() as u64 })
}

/// Generalized Hamming weight `d_j` of `C`, `1 <= j <= k1 + k2`.
pub fn ghw_bruteforce(spec: &CodeSpec, j: usize) -> Result<Extremum> {
    ghw_bruteforce_with_cap(spec, j, DEFAULT_ENUMERATION_CAP)
}

pub fn ghw_bruteforce_with_cap(spec: &CodeSpec, j: usize, cap: u128) -> Result<Extremum> {
    if j == 0 || j > spec.dim() {
        return Err(Error::RangeError { value: j as u64, min: 1, max: spec.dim() as u64 });
    }
    let plan = support_search_plan(spec, j, cap)?;
    let parts = (0..plan.partitions())
        .map(|i| min_support_in_partition(spec, &plan, i, false))
        .collect::<Result<Vec<_>>>()?;
    fold_min(parts).ok_or(Error::RangeError { value: j as u64, min: 1, max: spec.dim() as u64 })
}

/// `N_j(D)`: coordinates where all of `phi(H)` vanishes.
///
/// Counted twice, as `n - |Supp|` and as the number of points
/// `(a1^i, a2^i)` in `H^perp`; a mismatch is reported as an error.
/// `h` may live in the product ambient or be a subspace of codewords.
pub fn nj_of_subspace(spec: &CodeSpec, h: &SubspaceBasis) -> Result<usize> {
    let h = spec.to_product(h)?;
    let by_support = spec.n() - support_size(spec, &h)?;
    let dual = dual_subspace(spec.base(), &h, spec.inner_product_form())?;
    let by_dual = intersect_with_cyclic_group(spec, &dual);
    if by_support != by_dual {
        return Err(Error::RouteDisagreement { left: by_support as u64, right: by_dual as u64 });
    }
    Ok(by_support)
}

/// Result of the dual-side maximization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1 {
    pub m_j: usize,
    pub n_j: usize,
    pub argmax: SubspaceBasis,
}

/// `M_j = n - N_j` via the dual-side maximization.
pub fn mj_theorem1(spec: &CodeSpec, j: usize) -> Result<Theorem1> {
    mj_theorem1_with_cap(spec, j, DEFAULT_ENUMERATION_CAP)
}

pub fn mj_theorem1_with_cap(spec: &CodeSpec, j: usize, cap: u128) -> Result<Theorem1> {
    let plan = theorem1_plan(spec, j, cap)?;
    let best = fold_max((0..plan.partitions()).map(|i| max_intersection_in_partition(spec, &plan, i)))
        .ok_or(Error::RangeError { value: j as u64, min: 1, max: spec.k1() as u64 })?;
    Ok(Theorem1 { m_j: spec.n() - best.value, n_j: best.value, argmax: best.witness })
}

/// Parameters echoed in every report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecSummary {
    pub q: u32,
    pub k1: u32,
    pub k2: u32,
    pub e1: u64,
    pub e2: u64,
    pub n1: u64,
    pub n2: u64,
    pub d: u64,
    pub n: usize,
}

impl SpecSummary {
    pub fn of(spec: &CodeSpec) -> SpecSummary {
        SpecSummary {
            q: spec.q(),
            k1: spec.k1(),
            k2: spec.k2(),
            e1: spec.e1(),
            e2: spec.e2(),
            n1: spec.n1(),
            n2: spec.n2(),
            d: spec.d(),
            n: spec.n(),
        }
    }
}

/// Per-`j` results of the requested routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RghwReport {
    pub spec: SpecSummary,
    pub j: usize,
    pub bruteforce: Option<usize>,
    pub theorem1: Option<Theorem1>,
    pub closed_form: Option<ClosedForm>,
    /// Milliseconds per route; filled in by callers that can measure time.
    pub timings: Vec<(Route, u64)>,
}

impl RghwReport {
    pub fn new(spec: &CodeSpec, j: usize) -> RghwReport {
        RghwReport {
            spec: SpecSummary::of(spec),
            j,
            bruteforce: None,
            theorem1: None,
            closed_form: None,
            timings: Vec::new(),
        }
    }

    /// All `M_j` values that were computed, in route order.
    pub fn values(&self) -> Vec<(Route, BigInt)> {
        let mut out = Vec::new();
        if let Some(m) = self.bruteforce {
            out.push((Route::BruteForce, BigInt::from(m)));
        }
        if let Some(t) = &self.theorem1 {
            out.push((Route::Theorem1, BigInt::from(t.m_j)));
        }
        if let Some(c) = &self.closed_form {
            out.push((Route::ClosedForm, c.m_j.clone()));
        }
        out
    }

    /// True when every computed route gave the same `M_j`.
    pub fn agree(&self) -> bool {
        let v = self.values();
        v.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn n_j(&self) -> Option<usize> {
        self.theorem1.as_ref().map(|t| t.n_j)
    }
}

/// Runs the requested routes sequentially.
pub fn compute_report(spec: &CodeSpec, j: usize, routes: &[Route], cap: u128) -> Result<RghwReport> {
    check_range(spec, j)?;
    let mut report = RghwReport::new(spec, j);
    for route in routes {
        match route {
            Route::BruteForce => report.bruteforce = Some(rghw_bruteforce_with_cap(spec, j, cap)?.value),
            Route::Theorem1 => report.theorem1 = Some(mj_theorem1_with_cap(spec, j, cap)?),
            Route::ClosedForm => report.closed_form = closed_form_for(spec, j as u32),
        }
    }
    Ok(report)
}
