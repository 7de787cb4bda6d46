//! Multiplicative characters, Gauss sums and the character-sum expansion
//! of `N_j(D)`.
//!
//! With `H` the preimage of `D` in `GF(Q1) x GF(Q2)`,
//!
//! ```text
//! q^j N_j(D) = n + A + A' + B
//! ```
//!
//! where `A` collects the elements `(b1, 0)`, `A'` the elements `(0, b2)` and
//! `B` those with both parts nonzero. `A'` vanishes when `D ∩ C' = {0}`.
//! `A` and `A'` are sums of Gauss sums of the characters trivial on
//! `GF(q)^*`; `B` is the double expansion over `(l1, l2)` and needs
//! `gcd(n1, n2) = 1`.
//!
//! Characters vanish at zero in incomplete sums.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::codes::CodeSpec;
use crate::gf::{Elem, Embedding, FieldTable};
use crate::subspaces::{SubspaceBasis, Side};
use crate::{gcd, mod_inverse, Error, Result};

pub type ComplexValue = Complex64;

/// Largest tolerated imaginary part of `N_j(D)`.
pub const IMAGINARY_TOLERANCE: f64 = 1e-6;

/// `zeta_l^t` for `0 <= t < l`.
#[derive(Clone, Debug)]
pub struct RootTable {
    values: Vec<Complex64>,
}

impl RootTable {
    pub fn new(order: u64) -> RootTable {
        assert!(order > 0, "root of unity of order 0");
        let values = (0..order)
            .map(|t| {
                let theta = 2.0 * PI * t as f64 / order as f64;
                Complex64::new(Float::cos(theta), Float::sin(theta))
            })
            .collect();
        RootTable { values }
    }

    pub fn order(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn get(&self, t: u64) -> Complex64 {
        self.values[(t % self.order()) as usize]
    }
}

/// `chi` of order dividing `order` with `chi(generator) = zeta_order^exponent`.
#[derive(Clone, Debug)]
pub struct CharacterHandle<'a> {
    field: &'a FieldTable,
    order: u64,
    exponent: u64,
    generator: Elem,
    /// `log_g(generator)^(-1) mod order`, `g` the table generator.
    log_scale: u64,
    roots: RootTable,
}

impl<'a> CharacterHandle<'a> {
    pub fn new(field: &'a FieldTable, order: u64, exponent: u64, generator: Elem) -> Result<CharacterHandle<'a>> {
        let group = field.order() as u64;
        if order == 0 || !group.is_multiple_of(order) {
            return Err(Error::HypothesisViolated("character order divides the group order"));
        }
        let c = generator.log().ok_or(Error::ZeroArgument)?;
        if !field.contains(generator) || gcd(c as u64, group) != 1 {
            return Err(Error::HypothesisViolated("generator is primitive"));
        }
        let log_scale = mod_inverse(c as u64 % order, order).unwrap_or(0);
        Ok(CharacterHandle {
            field,
            order,
            exponent: exponent % order,
            generator,
            log_scale,
            roots: RootTable::new(order),
        })
    }

    /// Character with respect to the table generator.
    pub fn canonical(field: &'a FieldTable, order: u64, exponent: u64) -> Result<CharacterHandle<'a>> {
        CharacterHandle::new(field, order, exponent, field.generator())
    }

    pub fn field(&self) -> &'a FieldTable {
        self.field
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    /// `chi^t`.
    pub fn power(&self, t: u64) -> CharacterHandle<'a> {
        let mut c = self.clone();
        c.exponent = (self.exponent as u128 * t as u128 % self.order as u128) as u64;
        c
    }

    /// Exponent `k` with `chi(x) = zeta_order^k`, for `x != 0`.
    fn exponent_at(&self, x: Elem) -> Option<u64> {
        let a = x.log()? as u128;
        let log_gamma = a * self.log_scale as u128 % self.order as u128;
        Some((self.exponent as u128 * log_gamma % self.order as u128) as u64)
    }
}

/// `chi(x)`; `ZeroArgument` at zero.
pub fn char_eval(chi: &CharacterHandle<'_>, x: Elem) -> Result<ComplexValue> {
    let k = chi.exponent_at(x).ok_or(Error::ZeroArgument)?;
    Ok(chi.roots.get(k))
}

/// Absolute trace to the prime field, tabulated by discrete log, together
/// with the additive character `x -> zeta_p^T(x)`.
#[derive(Clone, Debug)]
pub struct AdditiveCharacter<'a> {
    field: &'a FieldTable,
    by_log: Vec<u32>,
    roots: RootTable,
}

impl<'a> AdditiveCharacter<'a> {
    pub fn new(field: &'a FieldTable) -> AdditiveCharacter<'a> {
        let p = field.characteristic() as u64;
        let group = field.order() as u64;
        let by_log = (0..group)
            .map(|i| {
                let mut acc = Elem::ZERO;
                let mut e = i;
                for _ in 0..field.degree() {
                    acc = field.add(acc, field.element(e as i64));
                    e = e * p % group;
                }
                field.to_value(acc)
            })
            .collect();
        AdditiveCharacter { field, by_log, roots: RootTable::new(p) }
    }

    /// Absolute trace of `x` as an integer in `0..p`.
    pub fn trace(&self, x: Elem) -> u32 {
        match x.log() {
            None => 0,
            Some(l) => self.by_log[l as usize],
        }
    }

    pub fn eval(&self, x: Elem) -> ComplexValue {
        self.roots.get(self.trace(x) as u64)
    }

    /// `G(chi; beta) = sum_{x != 0} chi(x) zeta_p^T(beta x)`.
    pub fn gauss_sum(&self, chi: &CharacterHandle<'_>, beta: Elem) -> ComplexValue {
        debug_assert!(chi.field.same_field(self.field));
        let f = self.field;
        f.nonzero_elements()
            .map(|x| {
                let k = chi.exponent_at(x).unwrap_or(0);
                chi.roots.get(k) * self.eval(f.mul(beta, x))
            })
            .sum()
    }
}

/// `G(chi; beta)`.
pub fn gauss_sum(chi: &CharacterHandle<'_>, beta: Elem) -> ComplexValue {
    AdditiveCharacter::new(chi.field).gauss_sum(chi, beta)
}

/// `sum_{l < e} chi^l(x)` for `chi(theta) = zeta_e`: `e` on the `e`-th
/// powers of `theta`, zero elsewhere.
pub fn orthogonality_sum(field: &FieldTable, theta: Elem, x: Elem, e: u64) -> Result<ComplexValue> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let chi = CharacterHandle::new(field, e, 1, theta)?;
    (0..e).map(|l| char_eval(&chi.power(l), x)).sum()
}

/// `sum_{x in xs, x != 0} psi(x)`.
pub fn incomplete_sum<I: IntoIterator<Item = Elem>>(psi: &CharacterHandle<'_>, xs: I) -> ComplexValue {
    xs.into_iter().filter_map(|x| char_eval(psi, x).ok()).sum()
}

/// All elements of the `GF(q)`-span of `gens` inside the extension, zero
/// first.
pub fn fq_span(sup: &FieldTable, sub: &FieldTable, emb: &Embedding, gens: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO];
    for &g in gens {
        if out.contains(&g) {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * sub.size() as usize);
        for c in sub.elements() {
            let cg = sup.mul(emb.embed(c), g);
            next.extend(out.iter().map(|&x| sup.add(x, cg)));
        }
        out = next;
    }
    out
}

/// Terms of the expansion for one `D`.
#[derive(Clone, Debug)]
pub struct CharsumBreakdown {
    /// `gcd(e1, (Q1 - 1)/(q - 1))`
    pub e1_prime: u64,
    /// `gcd(e2, (Q2 - 1)/(q - 1))`
    pub e2_prime: u64,
    pub a: ComplexValue,
    pub a_prime: ComplexValue,
    pub b: ComplexValue,
    /// `(n + A + A' + B) / q^j`
    pub total: ComplexValue,
    pub value: f64,
    pub residual: f64,
}

impl CharsumBreakdown {
    pub fn rounded(&self) -> i64 {
        Float::round(self.value) as i64
    }
}

/// Contribution of the elements `(b, 0)` (or `(0, b)`) of `H`:
/// `n / (e n_s) * sum_{tau < e'} G(psi^tau) * sum_b conj(psi^tau(b))`.
fn one_sided_term(spec: &CodeSpec, side: Side, betas: &[Elem], add: &AdditiveCharacter<'_>) -> Result<(u64, Complex64)> {
    let (e, ns) = match side {
        Side::First => (spec.e1(), spec.n1()),
        Side::Second => (spec.e2(), spec.n2()),
    };
    let ext = spec.ext(side);
    let r = ext.order() as u64 / (spec.q() as u64 - 1);
    let e_prime = gcd(e, r);
    if betas.is_empty() {
        return Ok((e_prime, Complex64::new(0.0, 0.0)));
    }
    let psi = CharacterHandle::new(ext, e_prime, 1, spec.gamma(side))?;
    let mut acc = Complex64::new(0.0, 0.0);
    for tau in 0..e_prime {
        let chi = psi.power(tau);
        let g = add.gauss_sum(&chi, Elem::ONE);
        acc += g * incomplete_sum(&chi, betas.iter().copied()).conj();
    }
    let scale = spec.n() as f64 / (e as f64 * ns as f64);
    Ok((e_prime, acc * scale))
}

/// `N_j(D)` through the character-sum expansion. `h` is `D` either as a
/// subspace of codewords or through its preimage in the product space.
pub fn nj_via_charsum(spec: &CodeSpec, h: &SubspaceBasis) -> Result<CharsumBreakdown> {
    if spec.d() != 1 {
        return Err(Error::NonCoprimeOrders { n1: spec.n1(), n2: spec.n2() });
    }
    let h = spec.to_product(h)?;
    let base = spec.base();
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut both = Vec::new();
    for v in h.elements(base) {
        let (b1, b2) = spec.unflatten(&v)?;
        match (b1.is_zero(), b2.is_zero()) {
            (true, true) => {}
            (false, true) => first.push(b1),
            (true, false) => second.push(b2),
            (false, false) => both.push((b1, b2)),
        }
    }

    let ext1 = spec.ext(Side::First);
    let ext2 = spec.ext(Side::Second);
    let add1 = AdditiveCharacter::new(ext1);
    let add2 = AdditiveCharacter::new(ext2);
    let (e1_prime, a) = one_sided_term(spec, Side::First, &first, &add1)?;
    let (e2_prime, a_prime) = one_sided_term(spec, Side::Second, &second, &add2)?;

    let (e1, e2) = (spec.e1(), spec.e2());
    let q1 = spec.q() as u128 - 1;
    let r1 = ext1.order() as u128 / q1;
    let r2 = ext2.order() as u128 / q1;
    let modulus = e1 as u128 * e2 as u128;
    let mut b = Complex64::new(0.0, 0.0);
    if !both.is_empty() {
        let chi1 = CharacterHandle::new(ext1, e1, 1, spec.gamma(Side::First))?;
        let chi2 = CharacterHandle::new(ext2, e2, 1, spec.gamma(Side::Second))?;
        let g1: Vec<Complex64> = (0..e1).map(|l| add1.gauss_sum(&chi1.power(l), Elem::ONE)).collect();
        let g2: Vec<Complex64> = (0..e2).map(|l| add2.gauss_sum(&chi2.power(l), Elem::ONE)).collect();
        for l1 in 0..e1 {
            for l2 in 0..e2 {
                if !(l1 as u128 * e2 as u128 * r1 + l2 as u128 * e1 as u128 * r2).is_multiple_of(modulus) {
                    continue;
                }
                let c1 = chi1.power(l1);
                let c2 = chi2.power(l2);
                let inner: Complex64 = both
                    .iter()
                    .map(|&(b1, b2)| {
                        let v1 = c1.roots.get(c1.exponent_at(b1).unwrap_or(0));
                        let v2 = c2.roots.get(c2.exponent_at(b2).unwrap_or(0));
                        (v1 * v2).conj()
                    })
                    .sum();
                b += g1[l1 as usize] * g2[l2 as usize] * inner;
            }
        }
        b /= modulus as f64;
    }

    let qj = Float::powi(spec.q() as f64, h.dim() as i32);
    let total = (Complex64::new(spec.n() as f64, 0.0) + a + a_prime + b) / qj;
    let residual = Float::abs(total.im);
    if residual > IMAGINARY_TOLERANCE {
        return Err(Error::Precision { residual });
    }
    Ok(CharsumBreakdown { e1_prime, e2_prime, a, a_prime, b, total, value: total.re, residual })
}
