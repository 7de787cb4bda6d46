//! Partition-parallel versions of the enumeration routes.
//!
//! Work is split by pivot set. Partial optima are collected in partition
//! order before folding, so results and witnesses do not depend on the
//! worker count.

use std::time::Instant;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};
use rghw_core::closed_forms::closed_form_for;
use rghw_core::codes::CodeSpec;
use rghw_core::rghw::{
    check_range, fold_max, fold_min, max_intersection_in_partition, min_support_in_partition, support_search_plan,
    theorem1_plan, Extremum, RghwReport, Route, Theorem1,
};
use rghw_core::{Error, Result};

pub struct Runner {
    pool: ThreadPool,
    cap: u128,
}

impl Runner {
    /// `workers = None` uses the available parallelism.
    pub fn new(workers: Option<usize>, cap: u128) -> Result<Runner, ThreadPoolBuildError> {
        let mut builder = ThreadPoolBuilder::new();
        if let Some(w) = workers {
            builder = builder.num_threads(w.max(1));
        }
        Ok(Runner { pool: builder.build()?, cap })
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    fn min_support(&self, spec: &CodeSpec, j: usize, restricted: bool) -> Result<Extremum> {
        let plan = support_search_plan(spec, j, self.cap)?;
        let parts = self.pool.install(|| {
            (0..plan.partitions())
                .into_par_iter()
                .map(|i| min_support_in_partition(spec, &plan, i, restricted))
                .collect::<Result<Vec<_>>>()
        })?;
        fold_min(parts).ok_or(Error::RangeError { value: j as u64, min: 1, max: spec.dim() as u64 })
    }

    pub fn rghw_bruteforce(&self, spec: &CodeSpec, j: usize) -> Result<Extremum> {
        check_range(spec, j)?;
        self.min_support(spec, j, true)
    }

    pub fn ghw_bruteforce(&self, spec: &CodeSpec, j: usize) -> Result<Extremum> {
        if j == 0 || j > spec.dim() {
            return Err(Error::RangeError { value: j as u64, min: 1, max: spec.dim() as u64 });
        }
        self.min_support(spec, j, false)
    }

    pub fn mj_theorem1(&self, spec: &CodeSpec, j: usize) -> Result<Theorem1> {
        let plan = theorem1_plan(spec, j, self.cap)?;
        let parts: Vec<_> = self.pool.install(|| {
            (0..plan.partitions())
                .into_par_iter()
                .map(|i| max_intersection_in_partition(spec, &plan, i))
                .collect()
        });
        let best = fold_max(parts).ok_or(Error::RangeError { value: j as u64, min: 1, max: spec.k1() as u64 })?;
        Ok(Theorem1 { m_j: spec.n() - best.value, n_j: best.value, argmax: best.witness })
    }

    /// Runs `routes` for one `j`, recording wall-clock milliseconds.
    pub fn report(&self, spec: &CodeSpec, j: usize, routes: &[Route]) -> Result<RghwReport> {
        check_range(spec, j)?;
        let mut report = RghwReport::new(spec, j);
        for &route in routes {
            let start = Instant::now();
            match route {
                Route::BruteForce => report.bruteforce = Some(self.rghw_bruteforce(spec, j)?.value),
                Route::Theorem1 => report.theorem1 = Some(self.mj_theorem1(spec, j)?),
                Route::ClosedForm => report.closed_form = closed_form_for(spec, j as u32),
            }
            report.timings.push((route, start.elapsed().as_millis() as u64));
        }
        Ok(report)
    }
}
