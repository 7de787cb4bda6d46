//! Cross-validation suites: every invariant that can be checked
//! exhaustively or by seeded sampling at desk scale.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rghw_core::charsum::{nj_via_charsum, orthogonality_sum, AdditiveCharacter, CharacterHandle};
use rghw_core::closed_forms::{closed_form_for, corollary2_nj, corollary3_nj};
use rghw_core::codes::{annihilates, build_code, cyclic_shift, parity_check_polynomial, CodeSpec};
use rghw_core::gf::{
    build_field, frobenius_orbit_size, is_prime, minimal_polynomial, Elem, Embedding, FieldTable, TraceMap,
};
use rghw_core::rghw::{meets_subcode_trivially, nj_of_subspace, support_size};
use rghw_core::subspaces::{
    dual_subspace, enumerate_subspaces, gaussian_binomial, intersect_with_cyclic_group, project, Side,
    SubspaceBasis,
};
use serde::{Deserialize, Serialize};

use crate::parallel::Runner;

/// `(q, k1, k2, e1, e2)`
pub type Params = (u64, u32, u32, u64, u64);

/// Instances on which both enumeration routes are run.
pub const DEFAULT_GRID: &[Params] = &[
    (2, 2, 3, 1, 1),
    (2, 3, 2, 1, 1),
    (2, 2, 5, 1, 1),
    (2, 3, 4, 1, 1),
    (3, 2, 3, 1, 2),
    (3, 3, 2, 2, 1),
];

/// Instances covered by a closed form.
pub const CLOSED_FORM_GRID: &[Params] = &[
    (2, 2, 3, 1, 1),
    (2, 3, 2, 1, 1),
    (2, 2, 5, 1, 1),
    (2, 3, 4, 1, 1),
    (2, 4, 3, 1, 1),
    (3, 2, 3, 1, 2),
    (3, 3, 2, 2, 1),
    (5, 1, 3, 1, 4),
    (5, 3, 1, 4, 1),
];

/// Largest field used by the field and Gauss-sum suites.
pub const FIELD_LIMIT: u64 = 81;

pub const IDENTITY_TOLERANCE: f64 = 1e-9;
pub const COUNT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Gf,
    Codes,
    Subspaces,
    Rghw,
    Closed,
    Charsum,
    Gauss,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Gf, Suite::Codes, Suite::Subspaces, Suite::Rghw, Suite::Closed, Suite::Charsum, Suite::Gauss];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gf => "gf",
            Suite::Codes => "codes",
            Suite::Subspaces => "subspaces",
            Suite::Rghw => "rghw",
            Suite::Closed => "closed",
            Suite::Charsum => "charsum",
            Suite::Gauss => "gauss",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<Suite>,
    pub grid: Vec<Params>,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig { seed: 0, samples: 100, suites: Suite::ALL.to_vec(), grid: DEFAULT_GRID.to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: u64,
    pub failures: u64,
    /// Largest numeric deviation seen, for suites that compare floats.
    pub max_residual: Option<f64>,
    /// First few failure descriptions.
    pub messages: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteOutcome>,
    pub passed: bool,
}

impl VerifyDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_pretty(&self) -> String {
        let mut out = format!("{:<10} {:>9} {:>9} {:>13}  status\n", "suite", "checks", "failures", "max_residual");
        for s in &self.suites {
            let res = s.max_residual.map(|r| format!("{r:.3e}")).unwrap_or_else(|| "-".into());
            let status = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{:<10} {:>9} {:>9} {:>13}  {}\n", s.suite.name(), s.checks, s.failures, res, status));
            for m in &s.messages {
                out.push_str(&format!("    {m}\n"));
            }
        }
        out
    }
}

const MAX_MESSAGES: usize = 5;

struct Tally {
    suite: Suite,
    checks: u64,
    failures: u64,
    max_residual: Option<f64>,
    messages: Vec<String>,
}

impl Tally {
    fn new(suite: Suite) -> Tally {
        Tally { suite, checks: 0, failures: 0, max_residual: None, messages: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.messages.len() < MAX_MESSAGES {
                self.messages.push(describe());
            }
        }
    }

    fn residual(&mut self, r: f64, tol: f64, describe: impl FnOnce() -> String) {
        self.max_residual = Some(self.max_residual.map_or(r, |m| m.max(r)));
        self.check(r < tol, describe);
    }

    fn fail(&mut self, describe: String) {
        self.check(false, || describe);
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            suite: self.suite,
            checks: self.checks,
            failures: self.failures,
            max_residual: self.max_residual,
            messages: self.messages,
        }
    }
}

/// All `(p, m)` with `p^m <= limit`.
pub fn prime_powers_up_to(limit: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        let mut m = 1;
        let mut size = p;
        while size <= limit {
            out.push((p, m));
            m += 1;
            size *= p;
        }
    }
    out.sort_by_key(|&(p, m)| p.pow(m));
    out
}

fn build(params: Params, tally: &mut Tally) -> Option<CodeSpec> {
    let (q, k1, k2, e1, e2) = params;
    match build_code(q, k1, k2, e1, e2) {
        Ok(spec) => Some(spec),
        Err(e) => {
            tally.fail(format!("{params:?}: {e}"));
            None
        }
    }
}

pub fn run(cfg: &VerifyConfig, runner: &Runner) -> VerifyDocument {
    let suites: Vec<SuiteOutcome> = cfg.suites.iter().map(|&s| run_suite(s, cfg, runner)).collect();
    let passed = suites.iter().all(SuiteOutcome::passed);
    VerifyDocument { seed: cfg.seed, samples: cfg.samples, suites, passed }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig, runner: &Runner) -> SuiteOutcome {
    let index = Suite::ALL.iter().position(|&s| s == suite).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index));
    let mut t = Tally::new(suite);
    match suite {
        Suite::Gf => gf_suite(&mut t),
        Suite::Codes => codes_suite(&mut t, &cfg.grid),
        Suite::Subspaces => subspaces_suite(&mut t, &cfg.grid, cfg.samples, &mut rng),
        Suite::Rghw => rghw_suite(&mut t, &cfg.grid, cfg.samples, &mut rng, runner),
        Suite::Closed => closed_suite(&mut t, runner),
        Suite::Charsum => charsum_suite(&mut t, &cfg.grid, cfg.samples, &mut rng),
        Suite::Gauss => gauss_suite(&mut t),
    }
    t.finish()
}

fn gf_suite(t: &mut Tally) {
    for (p, m) in prime_powers_up_to(FIELD_LIMIT) {
        let f = match build_field(p, m) {
            Ok(f) => f,
            Err(e) => {
                t.fail(format!("GF({p}^{m}): {e}"));
                continue;
            }
        };
        field_axioms(t, &f);
        for s in (1..=m).filter(|s| m % s == 0) {
            let sub = build_field(p, s).expect("subfield of a built field");
            trace_properties(t, &f, &sub);
        }
    }
}

fn field_axioms(t: &mut Tally, f: &FieldTable) {
    let elems: Vec<Elem> = f.elements().collect();
    for &a in &elems {
        if !a.is_zero() {
            let inv = f.inv(a).expect("nonzero");
            t.check(f.mul(a, inv) == Elem::ONE, || format!("inverse of {a:?} in GF({})", f.size()));
        }
        t.check(f.add(a, f.neg(a)).is_zero(), || format!("negation of {a:?} in GF({})", f.size()));
    }
    if f.size() <= 27 {
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    t.check(lhs == rhs, || format!("distributivity in GF({})", f.size()));
                }
            }
        }
    }
}

fn trace_properties(t: &mut Tally, f: &FieldTable, sub: &FieldTable) {
    let emb = Embedding::new(sub, f).expect("subfield");
    let tr = TraceMap::new(f, sub, &emb).expect("subfield");
    let qs = sub.size() as u64;
    let tag = || format!("GF({})/GF({})", f.size(), qs);
    let elems: Vec<Elem> = f.elements().collect();
    let mut zeros = 0u64;
    for &a in &elems {
        let ta = tr.apply(a);
        if ta.is_zero() {
            zeros += 1;
        }
        for &b in &elems {
            t.check(tr.apply(f.add(a, b)) == sub.add(ta, tr.apply(b)), || format!("trace additivity {}", tag()));
        }
        for c in sub.elements() {
            t.check(tr.apply(f.mul(emb.embed(c), a)) == sub.mul(c, ta), || format!("trace scaling {}", tag()));
        }
        let frob = f.pow(a, qs as i64).expect("power");
        t.check(tr.apply(frob) == ta, || format!("Frobenius invariance {}", tag()));
        if a.is_zero() {
            continue;
        }
        match minimal_polynomial(f, sub, a) {
            Ok(mp) => {
                t.check(mp.embed(&emb).eval(f, a).is_zero(), || format!("minimal polynomial root {}", tag()));
                let orbit = frobenius_orbit_size(f, qs, a) as usize;
                t.check(mp.degree() == Some(orbit), || format!("minimal polynomial degree {}", tag()));
            }
            Err(e) => t.fail(format!("minimal polynomial {}: {e}", tag())),
        }
    }
    let rel = f.degree() / sub.degree();
    let expected = qs.pow(rel - 1);
    t.check(zeros == expected, || format!("trace zero count {}: {zeros} != {expected}", tag()));
}

/// Word limit for the exhaustive code checks.
const WORD_LIMIT: u64 = 100_000;

fn codes_suite(t: &mut Tally, grid: &[Params]) {
    for &params in grid {
        let Some(spec) = build(params, t) else { continue };
        let k = spec.dim() as u32;
        let total = (spec.q() as u64).pow(k);
        if total > WORD_LIMIT {
            continue;
        }
        let f1 = spec.ext(Side::First);
        let f2 = spec.ext(Side::Second);
        let mut words = HashSet::new();
        for b1 in f1.elements() {
            for b2 in f2.elements() {
                let w = spec.codeword(b1, b2).expect("field elements").coords;
                let via_rows = spec.encode(&spec.flatten(b1, b2)).expect("flattened vector");
                t.check(via_rows == w, || format!("{params:?}: generator rows disagree with traces"));
                words.insert(w);
            }
        }
        t.check(words.len() as u64 == total, || format!("{params:?}: {} distinct words, expected {total}", words.len()));
        let mut sub = HashSet::new();
        for b2 in f2.elements() {
            let w = spec.subcode_codeword(b2).expect("field element").coords;
            t.check(words.contains(&w), || format!("{params:?}: subcode word outside the code"));
            sub.insert(w);
        }
        let expected_sub = (spec.q() as u64).pow(spec.k2());
        t.check(sub.len() as u64 == expected_sub, || format!("{params:?}: subcode has {} words", sub.len()));
        for w in &words {
            t.check(words.contains(&cyclic_shift(w)), || format!("{params:?}: shift leaves the code"));
        }
        match parity_check_polynomial(&spec) {
            Ok(h) => {
                t.check(h.degree() == Some(k as usize), || format!("{params:?}: parity-check degree"));
                for w in &words {
                    t.check(annihilates(spec.base(), &h, w), || format!("{params:?}: recurrence fails"));
                }
            }
            Err(e) => t.fail(format!("{params:?}: parity-check polynomial: {e}")),
        }
    }
}

fn subspaces_suite(t: &mut Tally, grid: &[Params], samples: usize, rng: &mut ChaCha8Rng) {
    for q in [2u32, 3] {
        for k in 1..=6usize {
            for j in 0..=k {
                let expected = gaussian_binomial(k as u32, j as u32, q as u64).expect("small");
                let en = match enumerate_subspaces(k, j, q) {
                    Ok(en) => en,
                    Err(e) => {
                        t.fail(format!("enumerate({k},{j},{q}): {e}"));
                        continue;
                    }
                };
                let mut seen = HashSet::new();
                let mut dims_ok = true;
                for s in en.iter() {
                    dims_ok &= s.dim() == j;
                    seen.insert(s.fingerprint().to_vec());
                }
                t.check(seen.len() as u128 == expected && dims_ok, || {
                    format!("enumerate({k},{j},{q}): {} distinct, expected {expected}", seen.len())
                });
            }
        }
    }

    for &params in grid {
        let Some(spec) = build(params, t) else { continue };
        let k = spec.dim();
        for _ in 0..samples {
            let j = rng.random_range(0..=k);
            let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, rng).expect("j <= k");
            let form = spec.inner_product_form();
            let dual = dual_subspace(spec.base(), &h, form).expect("product ambient");
            let back = dual_subspace(spec.base(), &dual, form).expect("product ambient");
            t.check(h.dim() + dual.dim() == k, || format!("{params:?}: dual dimension"));
            t.check(back == h, || format!("{params:?}: double dual differs"));
        }
    }

    let spec = build_code(2, 2, 3, 1, 1).expect("valid parameters");
    for (a, b, c, dim) in characterization_mismatches(&spec) {
        t.check(a == b && b == c, || format!("characterizations disagree in dimension {dim}"));
    }
}

/// The three equivalent descriptions of `H ∩ ({0} x GF(Q2)) = {0}` for every
/// subspace of the product space: direct element scan, trivial kernel of
/// `pi_1`, surjectivity of `pi_2` on the dual.
pub fn characterization_mismatches(spec: &CodeSpec) -> Vec<(bool, bool, bool, usize)> {
    let f = spec.base();
    let k1 = spec.k1() as usize;
    let mut out = Vec::new();
    for dim in 0..=spec.dim() {
        let en = enumerate_subspaces(spec.dim(), dim, spec.q()).expect("small ambient");
        for h in en.iter() {
            let h = SubspaceBasis::span(f, spec.ambient(), &h.rows_vec()).expect("same dimension");
            let direct = h.elements(f).iter().all(|v| v[..k1].iter().any(|&x| x != 0) || v.iter().all(|&x| x == 0));
            let kernel = project(f, &h, Side::First).expect("product ambient").kernel.dim() == 0;
            let dual = dual_subspace(f, &h, spec.inner_product_form()).expect("product ambient");
            let image = project(f, &dual, Side::Second).expect("product ambient").image.dim() == spec.k2() as usize;
            out.push((direct, kernel, image, dim));
        }
    }
    out
}

fn rghw_suite(t: &mut Tally, grid: &[Params], samples: usize, rng: &mut ChaCha8Rng, runner: &Runner) {
    for &params in grid {
        let Some(spec) = build(params, t) else { continue };
        let k1 = spec.k1() as usize;
        let k2 = spec.k2() as usize;
        let mut previous = 0usize;
        for j in 1..=k1 {
            let (bf, th) = match (runner.rghw_bruteforce(&spec, j), runner.mj_theorem1(&spec, j)) {
                (Ok(bf), Ok(th)) => (bf, th),
                (Err(e), _) | (_, Err(e)) => {
                    t.fail(format!("{params:?} j={j}: {e}"));
                    continue;
                }
            };
            t.check(bf.value == th.m_j, || format!("{params:?} j={j}: brute force {} vs dual side {}", bf.value, th.m_j));
            t.check(bf.value > previous, || format!("{params:?} j={j}: M_j not increasing"));
            previous = bf.value;
            t.check(meets_subcode_trivially(&spec, &bf.witness), || format!("{params:?} j={j}: witness meets C'"));
            t.check(th.argmax.dim() == spec.dim() - j, || format!("{params:?} j={j}: argmax dimension"));
            t.check(th.argmax.rank_of_columns(spec.base(), k1..k1 + k2) == k2, || {
                format!("{params:?} j={j}: argmax does not project onto GF(Q2)")
            });
            t.check(intersect_with_cyclic_group(&spec, &th.argmax) == th.n_j, || format!("{params:?} j={j}: argmax count"));
            match runner.ghw_bruteforce(&spec, j) {
                Ok(d) => t.check(d.value <= bf.value, || format!("{params:?} j={j}: d_j > M_j")),
                Err(e) => t.fail(format!("{params:?} j={j}: ghw: {e}")),
            }
        }
        for _ in 0..samples {
            let j = rng.random_range(1..=spec.dim());
            let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, rng).expect("j <= k");
            match (nj_of_subspace(&spec, &h), support_size(&spec, &h)) {
                (Ok(nj), Ok(s)) => t.check(nj + s == spec.n(), || format!("{params:?}: N_j(D) + |Supp D| != n")),
                (Err(e), _) | (_, Err(e)) => t.fail(format!("{params:?}: {e}")),
            }
        }
    }
}

fn closed_suite(t: &mut Tally, runner: &Runner) {
    for &params in CLOSED_FORM_GRID {
        let Some(spec) = build(params, t) else { continue };
        for j in 1..=spec.k1() as usize {
            let Some(cf) = closed_form_for(&spec, j as u32) else {
                t.fail(format!("{params:?} j={j}: no closed form applies"));
                continue;
            };
            let positive = cf.n_j > 0.into() && cf.m_j > 0.into();
            t.check(positive, || format!("{params:?} j={j}: nonpositive closed form"));
            match (runner.rghw_bruteforce(&spec, j), runner.mj_theorem1(&spec, j)) {
                (Ok(bf), Ok(th)) => {
                    t.check(cf.m_j == bf.value.into(), || format!("{params:?} j={j}: closed {} vs brute {}", cf.m_j, bf.value));
                    t.check(cf.m_j == th.m_j.into(), || format!("{params:?} j={j}: closed {} vs dual {}", cf.m_j, th.m_j));
                }
                (Err(e), _) | (_, Err(e)) => t.fail(format!("{params:?} j={j}: {e}")),
            }
        }
    }
    for q in [2u64, 3, 5] {
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                for j in 1..=a {
                    // both families accept (a, b) when a and b are odd
                    if let (Ok(x), Ok(y)) = (corollary2_nj(q, a, b, j), corollary3_nj(q, a, b, j)) {
                        t.check(x.n_j == y.n_j, || format!("families 2/3 differ at q={q} ({a},{b}) j={j}"));
                    }
                }
            }
        }
    }
}

fn charsum_suite(t: &mut Tally, grid: &[Params], samples: usize, rng: &mut ChaCha8Rng) {
    for &params in grid {
        let Some(spec) = build(params, t) else { continue };
        if spec.d() != 1 {
            continue;
        }
        for _ in 0..samples {
            let j = rng.random_range(1..=spec.k1() as usize);
            let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, rng).expect("j <= k");
            match (nj_via_charsum(&spec, &h), nj_of_subspace(&spec, &h)) {
                (Ok(cs), Ok(count)) => {
                    let r = (cs.value - count as f64).abs();
                    t.residual(r, COUNT_TOLERANCE, || format!("{params:?} j={j}: {} vs {count}", cs.value));
                }
                (Err(e), _) | (_, Err(e)) => t.fail(format!("{params:?} j={j}: {e}")),
            }
        }
    }
}

fn gauss_suite(t: &mut Tally) {
    for (p, m) in prime_powers_up_to(FIELD_LIMIT) {
        let f = build_field(p, m).expect("small field");
        let q = f.size() as f64;
        let order = f.order() as u64;
        let add = AdditiveCharacter::new(&f);
        for l in 0..order {
            let chi = CharacterHandle::canonical(&f, order, l).expect("divides");
            let g0 = add.gauss_sum(&chi, Elem::ZERO);
            if chi.is_trivial() {
                t.check(g0.re == q - 1.0 && g0.im == 0.0, || format!("GF({}) G(1; 0) = {g0}", f.size()));
                continue;
            }
            t.residual(g0.norm(), IDENTITY_TOLERANCE, || format!("GF({}) l={l}: G(chi; 0) = {g0}", f.size()));
            let g = add.gauss_sum(&chi, Elem::ONE);
            t.residual((g.norm() - q.sqrt()).abs(), IDENTITY_TOLERANCE, || format!("GF({}) l={l}: |G| = {}", f.size(), g.norm()));
            for beta in f.nonzero_elements() {
                let lhs = add.gauss_sum(&chi, beta);
                let rhs = rghw_core::charsum::char_eval(&chi, beta).expect("nonzero").conj() * g;
                t.residual((lhs - rhs).norm(), IDENTITY_TOLERANCE, || format!("GF({}) l={l}: scaling identity", f.size()));
            }
        }
        for e in (1..=order).filter(|e| order.is_multiple_of(*e)) {
            for x in f.nonzero_elements() {
                let s = orthogonality_sum(&f, f.generator(), x, e).expect("nonzero");
                let residue = (x.log().expect("nonzero") as u64).is_multiple_of(e);
                let expected = if residue { e as f64 } else { 0.0 };
                t.residual((s.re - expected).abs() + s.im.abs(), IDENTITY_TOLERANCE, || {
                    format!("GF({}) e={e}: orthogonality at {x:?}", f.size())
                });
            }
        }
    }
}
