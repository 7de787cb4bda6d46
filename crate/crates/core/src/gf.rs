//! Table-driven finite fields `GF(p^m)`.
//!
//! Nonzero elements are stored as discrete logarithms with respect to the
//! root of the field's primitive polynomial; zero is kept out of band. With
//! that representation multiplication, inversion and powering are index
//! arithmetic, and addition goes through a Zech logarithm table:
//! `g^i + g^j = g^(i + Z(j - i))` where `1 + g^k = g^Z(k)`.
//!
//! The "value" of an element is its coordinate vector in the polynomial
//! basis `1, x, .., x^(m-1)` read as a base-`p` integer. Prime-subfield
//! elements therefore have values `0..p`, and `0`/`1` are the values of
//! zero and one in every field.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{gcd, mod_inverse, Error, Result};

/// Default upper bound on `p^m` for a table-backed field.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 20;

const NONE: u32 = u32::MAX;

/// A field element in log form. Only meaningful together with the
/// [`FieldTable`] it came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(NONE);
    pub const ONE: Elem = Elem(0);

    /// Element `g^log`. The caller is responsible for `log < order`.
    pub const fn from_log(log: u32) -> Elem {
        Elem(log)
    }

    pub fn log(self) -> Option<u32> {
        if self.0 == NONE {
            None
        } else {
            Some(self.0)
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == NONE
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => write!(f, "0"),
            Some(l) => write!(f, "g^{l}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^m`; `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// A concrete finite field with exp/log/Zech tables.
///
/// Immutable after construction, so it can be shared freely between threads.
#[derive(Clone)]
pub struct FieldTable {
    p: u32,
    m: u32,
    size: u32,
    /// Monic, low to high, length `m + 1`.
    poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    /// `log(-1)`.
    neg_shift: u32,
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("primitive_polynomial", &self.poly)
            .finish_non_exhaustive()
    }
}

/// Builds `GF(p^m)` with the default size cap.
pub fn build_field(p: u64, m: u32) -> Result<FieldTable> {
    build_field_with_cap(p, m, DEFAULT_SIZE_CAP)
}

/// Builds `GF(p^m)`. The primitive polynomial `x^m + c_(m-1) x^(m-1) + .. + c_0`
/// is the first one in increasing order of `c_0 + c_1 p + .. + c_(m-1) p^(m-1)`.
pub fn build_field_with_cap(p: u64, m: u32, cap: u64) -> Result<FieldTable> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidDegree(m));
    }
    let size = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    if size > cap as u128 || size > (NONE as u128) {
        return Err(Error::SizeCapExceeded { size, cap });
    }
    let (p32, size) = (p as u32, size as u32);
    let order = size - 1;
    let m_us = m as usize;

    let mut low = vec![0u32; m_us];
    let mut digits = vec![0u32; m_us];
    let mut exp = Vec::with_capacity(order as usize);
    for code in 0..size {
        let mut c = code;
        for slot in low.iter_mut() {
            *slot = c % p32;
            c /= p32;
        }
        if low[0] == 0 {
            continue;
        }
        exp.clear();
        digits.iter_mut().for_each(|d| *d = 0);
        digits[0] = 1;
        let mut ok = true;
        for i in 0..order {
            exp.push(digits_value(&digits, p32));
            times_x(&mut digits, &low, p32);
            let v = digits_value(&digits, p32);
            if v == 1 && i + 1 < order {
                ok = false;
                break;
            }
        }
        if !ok || digits_value(&digits, p32) != 1 {
            continue;
        }
        let mut poly = low.clone();
        poly.push(1);
        return Ok(FieldTable::from_exp(p32, m, size, poly, exp));
    }
    unreachable!("every finite field has a primitive polynomial")
}

fn digits_value(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

/// Multiplies by `x` modulo `x^m + sum low[i] x^i`.
fn times_x(digits: &mut [u32], low: &[u32], p: u32) {
    let m = digits.len();
    let top = digits[m - 1] as u64;
    for i in (1..m).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    if top != 0 {
        let p = p as u64;
        for (d, &c) in digits.iter_mut().zip(low) {
            let sub = top * c as u64 % p;
            *d = ((*d as u64 + p - sub) % p) as u32;
        }
    }
}

impl FieldTable {
    fn from_exp(p: u32, m: u32, size: u32, poly: Vec<u32>, exp: Vec<u32>) -> FieldTable {
        let order = size - 1;
        let mut log = vec![NONE; size as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let zech = exp
            .iter()
            .map(|&v| {
                // adding 1 bumps the constant digit
                let w = if v % p == p - 1 { v - (p - 1) } else { v + 1 };
                if w == 0 {
                    NONE
                } else {
                    log[w as usize]
                }
            })
            .collect();
        let neg_shift = if p == 2 { 0 } else { order / 2 };
        FieldTable { p, m, size, poly, exp, log, zech, neg_shift }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the multiplicative group, `size - 1`.
    pub fn order(&self) -> u32 {
        self.size - 1
    }

    /// Coefficients of the primitive polynomial over `GF(p)`, low to high.
    pub fn primitive_polynomial(&self) -> &[u32] {
        &self.poly
    }

    /// `exp_table()[i]` is the value of `g^i`.
    pub fn exp_table(&self) -> &[u32] {
        &self.exp
    }

    /// `log_table()[v]` is the discrete log of the element with value `v`;
    /// entry 0 holds `u32::MAX`.
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    /// `zech_table()[i] = log(1 + g^i)`, `u32::MAX` where `1 + g^i = 0`.
    pub fn zech_table(&self) -> &[u32] {
        &self.zech
    }

    /// Same characteristic, degree and primitive polynomial.
    pub fn same_field(&self, other: &FieldTable) -> bool {
        self.p == other.p && self.m == other.m && self.poly == other.poly
    }

    /// The canonical primitive element (root of the primitive polynomial).
    pub fn generator(&self) -> Elem {
        Elem(1 % self.order())
    }

    /// `g^k` for any integer `k`.
    pub fn element(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.order() as i64) as u32)
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.is_zero() || a.0 < self.order()
    }

    pub fn from_value(&self, v: u32) -> Result<Elem> {
        match self.log.get(v as usize) {
            None => Err(Error::FieldMismatch),
            Some(&l) => Ok(Elem(l)),
        }
    }

    pub fn to_value(&self, a: Elem) -> u32 {
        match a.log() {
            None => 0,
            Some(l) => self.exp[l as usize],
        }
    }

    /// Zero first, then `g^0, g^1, ..`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        core::iter::once(Elem::ZERO).chain((0..self.order()).map(Elem))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (i, j) = match (a.log(), b.log()) {
            (None, _) => return b,
            (_, None) => return a,
            (Some(i), Some(j)) => (i, j),
        };
        let ord = self.order();
        let diff = if j >= i { j - i } else { j + ord - i };
        match self.zech[diff as usize] {
            NONE => Elem::ZERO,
            z => Elem(((i as u64 + z as u64) % ord as u64) as u32),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        match a.log() {
            None => a,
            Some(i) => Elem(((i as u64 + self.neg_shift as u64) % self.order() as u64) as u32),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match (a.log(), b.log()) {
            (Some(i), Some(j)) => Elem(((i as u64 + j as u64) % self.order() as u64) as u32),
            _ => Elem::ZERO,
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match a.log() {
            None => Err(Error::ZeroElement),
            Some(i) => Ok(Elem((self.order() - i) % self.order())),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k`; `0^0 = 1`, negative powers of zero are an error.
    pub fn pow(&self, a: Elem, k: i64) -> Result<Elem> {
        match a.log() {
            None if k == 0 => Ok(Elem::ONE),
            None if k < 0 => Err(Error::ZeroElement),
            None => Ok(Elem::ZERO),
            Some(i) => {
                let ord = self.order() as i128;
                Ok(Elem((i as i128 * k as i128).rem_euclid(ord) as u32))
            }
        }
    }

    pub fn val_add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        self.to_value(self.add(Elem(self.log[a as usize]), Elem(self.log[b as usize])))
    }

    pub fn val_sub(&self, a: u32, b: u32) -> u32 {
        self.val_add(a, self.val_neg(b))
    }

    pub fn val_neg(&self, a: u32) -> u32 {
        self.to_value(self.neg(Elem(self.log[a as usize])))
    }

    pub fn val_mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % self.order() as u64) as usize]
    }

    /// Inverse in value form; zero maps to zero.
    pub fn val_inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize];
        self.exp[((self.order() - l) % self.order()) as usize]
    }
}

/// Multiplicative order of a nonzero element: `(size-1)/gcd(size-1, log a)`.
pub fn element_order(field: &FieldTable, a: Elem) -> Result<u64> {
    if !field.contains(a) {
        return Err(Error::FieldMismatch);
    }
    let l = a.log().ok_or(Error::ZeroElement)? as u64;
    let ord = field.order() as u64;
    Ok(ord / gcd(ord, l))
}

/// Size of the orbit of `a` under `x -> x^q`.
pub fn frobenius_orbit_size(field: &FieldTable, q: u64, a: Elem) -> u32 {
    let Some(l0) = a.log() else { return 1 };
    let ord = field.order() as u64;
    let mut l = l0 as u64 * q % ord;
    let mut size = 1;
    while l != l0 as u64 {
        l = l * q % ord;
        size += 1;
    }
    size
}

/// Ring embedding of a subfield `GF(p^s)` into `GF(p^m)`, `s | m`.
///
/// The sub-generator is sent to `g^(r t)` with `r = (p^m - 1)/(p^s - 1)` and
/// `t` the smallest unit modulo `p^s - 1` for which `g^(r t)` is a root of
/// the subfield's primitive polynomial. Usually `t = 1`.
#[derive(Clone, Debug)]
pub struct Embedding {
    p: u32,
    sub_m: u32,
    sup_m: u32,
    sub_order: u32,
    sup_order: u32,
    ratio: u32,
    twist: u32,
    twist_inv: u32,
}

impl Embedding {
    pub fn new(sub: &FieldTable, sup: &FieldTable) -> Result<Embedding> {
        if sub.p != sup.p || !sup.m.is_multiple_of(sub.m) {
            return Err(Error::NotASubfield);
        }
        let (sub_order, sup_order) = (sub.order(), sup.order());
        let ratio = sup_order / sub_order;
        let twist = (1..=sub_order)
            .filter(|&t| gcd(t as u64, sub_order as u64) == 1)
            .find(|&t| {
                let root = sup.element(ratio as i64 * t as i64);
                let mut acc = Elem::ZERO;
                for &c in sub.poly.iter().rev() {
                    acc = sup.add(sup.mul(acc, root), Elem(sup.log[c as usize]));
                }
                acc.is_zero()
            })
            .ok_or(Error::NotASubfield)?;
        let twist_inv = mod_inverse(twist as u64, sub_order as u64).ok_or(Error::NotASubfield)? as u32;
        Ok(Embedding {
            p: sub.p,
            sub_m: sub.m,
            sup_m: sup.m,
            sub_order,
            sup_order,
            ratio,
            twist,
            twist_inv,
        })
    }

    /// Relative degree `[sup : sub]`.
    pub fn degree(&self) -> u32 {
        self.sup_m / self.sub_m
    }

    /// Size of the subfield.
    pub fn sub_size(&self) -> u64 {
        self.sub_order as u64 + 1
    }

    /// Whether this embedding was built for exactly this pair of fields.
    pub fn fits(&self, sub: &FieldTable, sup: &FieldTable) -> bool {
        self.p == sub.p && self.sub_m == sub.m && self.sup_m == sup.m
    }

    /// Discrete log (in the superfield) of the image of the sub-generator.
    pub fn image_of_generator(&self) -> Elem {
        Elem(((self.ratio as u64 * self.twist as u64) % self.sup_order as u64) as u32)
    }

    pub fn embed(&self, x: Elem) -> Elem {
        match x.log() {
            None => x,
            Some(l) => {
                let e = l as u64 * self.ratio as u64 % self.sup_order as u64;
                Elem((e * self.twist as u64 % self.sup_order as u64) as u32)
            }
        }
    }

    /// Inverse of [`Embedding::embed`]; `None` outside the image.
    pub fn restrict(&self, y: Elem) -> Option<Elem> {
        let Some(l) = y.log() else { return Some(y) };
        if l % self.ratio != 0 {
            return None;
        }
        let u = (l / self.ratio) as u64;
        Some(Elem((u * self.twist_inv as u64 % self.sub_order as u64) as u32))
    }
}

/// Relative trace `a + a^q + .. + a^(q^(d-1))` from `sup` down to `sub`.
pub fn trace(sup: &FieldTable, sub: &FieldTable, a: Elem) -> Result<Elem> {
    let emb = Embedding::new(sub, sup)?;
    trace_with(sup, sub, &emb, a)
}

/// [`trace`] with a prebuilt embedding.
pub fn trace_with(sup: &FieldTable, sub: &FieldTable, emb: &Embedding, a: Elem) -> Result<Elem> {
    if !sup.contains(a) || !emb.fits(sub, sup) {
        return Err(Error::FieldMismatch);
    }
    let q = sub.size() as u64;
    let ord = sup.order() as u64;
    let Some(l0) = a.log() else { return Ok(Elem::ZERO) };
    let mut l = l0 as u64;
    let mut acc = Elem::ZERO;
    for _ in 0..emb.degree() {
        acc = sup.add(acc, Elem(l as u32));
        l = l * q % ord;
    }
    emb.restrict(acc).ok_or(Error::FieldMismatch)
}

/// Precomputed trace values indexed by discrete log.
#[derive(Clone, Debug)]
pub struct TraceMap {
    table: Vec<Elem>,
}

impl TraceMap {
    pub fn new(sup: &FieldTable, sub: &FieldTable, emb: &Embedding) -> Result<TraceMap> {
        let table = sup
            .nonzero_elements()
            .map(|a| trace_with(sup, sub, emb, a))
            .collect::<Result<_>>()?;
        Ok(TraceMap { table })
    }

    pub fn apply(&self, a: Elem) -> Elem {
        match a.log() {
            None => Elem::ZERO,
            Some(l) => self.table[l as usize],
        }
    }

    /// Trace of `g^log`.
    pub fn of_log(&self, log: u64) -> Elem {
        self.table[(log % self.table.len() as u64) as usize]
    }
}

/// Polynomial with coefficients in a [`FieldTable`], low degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Elem>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Elem>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn one() -> Polynomial {
        Polynomial { coeffs: vec![Elem::ONE] }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    pub fn mul(&self, other: &Polynomial, field: &FieldTable) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, field: &FieldTable, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// Coefficients mapped into a superfield.
    pub fn embed(&self, emb: &Embedding) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| emb.embed(c)).collect())
    }
}

/// Minimal polynomial over `sub` of `a` in `sup`: the product of `x - c` over
/// the Frobenius orbit of `a`.
pub fn minimal_polynomial(sup: &FieldTable, sub: &FieldTable, a: Elem) -> Result<Polynomial> {
    if !sup.contains(a) {
        return Err(Error::FieldMismatch);
    }
    let l0 = a.log().ok_or(Error::ZeroElement)?;
    let emb = Embedding::new(sub, sup)?;
    let q = sub.size() as u64;
    let ord = sup.order() as u64;
    let mut prod = Polynomial::one();
    let mut l = l0 as u64;
    loop {
        let factor = Polynomial::new(vec![sup.neg(Elem(l as u32)), Elem::ONE]);
        prod = prod.mul(&factor, sup);
        l = l * q % ord;
        if l == l0 as u64 {
            break;
        }
    }
    let coeffs = prod
        .coeffs
        .iter()
        .map(|&c| emb.restrict(c).ok_or(Error::FieldMismatch))
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}
