//! The cyclic code with two nonzeros and its irreducible subcode.
//!
//! For `b1` in `GF(Q1)` and `b2` in `GF(Q2)` the codeword `c(b1, b2)` has
//! coordinate `i` equal to `Tr1(b1 a1^i) + Tr2(b2 a2^i)`, `0 <= i < n`,
//! where `Tr_s` is the trace down to `GF(q)` and `a_s = g_s^(e_s)`.
//! `C` collects all of them; `C'` only those with `b1 = 0`.
//!
//! Both traces land in one base table: each extension carries its own
//! embedding of `GF(q)`, and `g2` is chosen so that
//! `g1^((Q1-1)/(q-1))` and `g2^((Q2-1)/(q-1))` restrict to the same element
//! `delta` of `GF(q)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{
    build_field, element_order, frobenius_orbit_size, minimal_polynomial, prime_power, Elem, Embedding, FieldTable,
    Polynomial, TraceMap,
};
use crate::subspaces::{rref, Ambient, BilinearForm, Side, SubspaceBasis};
use crate::{gcd, Error, Result};

const UNSET: u32 = u32::MAX;

/// Everything that defines `C` and `C'`.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    q: u32,
    k: [u32; 2],
    e: [u64; 2],
    base: FieldTable,
    ext: [FieldTable; 2],
    emb: [Embedding; 2],
    traces: [TraceMap; 2],
    gamma: [Elem; 2],
    alpha: [Elem; 2],
    orders: [u64; 2],
    d: u64,
    n: usize,
    delta: Elem,
    /// Value of an extension element -> packed base-`q` coordinate index.
    coord_index: [Vec<u32>; 2],
    form: BilinearForm,
    points: Vec<Vec<u32>>,
    generator: Vec<Vec<u32>>,
}

fn idx(side: Side) -> usize {
    match side {
        Side::First => 0,
        Side::Second => 1,
    }
}

/// Builds `C` and `C'` from `(q, k1, k2, e1, e2)`.
pub fn build_code(q: u64, k1: u32, k2: u32, e1: u64, e2: u64) -> Result<CodeSpec> {
    let (p, mq) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    for k in [k1, k2] {
        if k == 0 {
            return Err(Error::InvalidDegree(k));
        }
    }
    let base = build_field(p, mq)?;
    let ext = [build_field(p, mq * k1)?, build_field(p, mq * k2)?];
    let emb = [Embedding::new(&base, &ext[0])?, Embedding::new(&base, &ext[1])?];
    let e = [e1, e2];
    for s in 0..2 {
        let group = ext[s].order() as u64;
        if e[s] == 0 || !group.is_multiple_of(e[s]) {
            return Err(Error::BadIndex { side: s as u8 + 1, e: e[s], group_order: group });
        }
    }

    let q_minus_1 = (q - 1).max(1) as i64;
    let gamma1 = ext[0].generator();
    let r1 = ext[0].order() as i64 / q_minus_1;
    let delta = emb[0]
        .restrict(ext[0].pow(gamma1, r1)?)
        .ok_or(Error::FieldMismatch)?;
    let gamma2 = {
        let ord2 = ext[1].order() as i64;
        let r2 = ord2 / q_minus_1;
        (1..=ord2)
            .filter(|&s| gcd(s as u64, ord2 as u64) == 1)
            .map(|s| ext[1].element(s))
            .find(|&g| emb[1].restrict(ext[1].pow(g, r2).unwrap_or(Elem::ZERO)) == Some(delta))
            .ok_or(Error::FieldMismatch)?
    };
    let gamma = [gamma1, gamma2];

    let mut alpha = [Elem::ONE; 2];
    let mut orders = [0u64; 2];
    for s in 0..2 {
        alpha[s] = ext[s].pow(gamma[s], e[s] as i64)?;
        orders[s] = element_order(&ext[s], alpha[s])?;
        debug_assert_eq!(orders[s], ext[s].order() as u64 / e[s]);
        if orders[s] == 1 {
            return Err(Error::DegenerateOrder { side: s as u8 + 1 });
        }
    }
    for s in 0..2 {
        let degree = frobenius_orbit_size(&ext[s], q, alpha[s]);
        if degree != [k1, k2][s] {
            return Err(Error::ProperSubfield { side: s as u8 + 1, degree });
        }
    }
    if k1 == k2 && ext[0].same_field(&ext[1]) {
        let ord = ext[0].order() as u64;
        let (l1, l2) = (alpha[0].log().unwrap_or(0) as u64, alpha[1].log().unwrap_or(0) as u64);
        let mut l = l1;
        for _ in 0..k1 {
            if l == l2 {
                return Err(Error::ConjugateNonzeros);
            }
            l = l * q % ord;
        }
    }

    let d = gcd(orders[0], orders[1]);
    let n = (orders[0] / d * orders[1]) as usize;
    let traces = [
        TraceMap::new(&ext[0], &base, &emb[0])?,
        TraceMap::new(&ext[1], &base, &emb[1])?,
    ];
    let coord_index = [
        coordinate_table(&base, &ext[0], &emb[0], gamma[0], k1),
        coordinate_table(&base, &ext[1], &emb[1], gamma[1], k2),
    ];

    let k = (k1 + k2) as usize;
    let mut gram = vec![0u32; k * k];
    for (s, range) in [(0usize, 0..k1 as usize), (1, k1 as usize..k)] {
        for a in range.clone() {
            for b in range.clone() {
                let (la, lb) = (a - range.start, b - range.start);
                let x = ext[s].pow(gamma[s], (la + lb) as i64)?;
                gram[a * k + b] = base.to_value(traces[s].apply(x));
            }
        }
    }
    let form = BilinearForm::new(k, gram)?;

    let mut spec = CodeSpec {
        q: q as u32,
        k: [k1, k2],
        e,
        base,
        ext,
        emb,
        traces,
        gamma,
        alpha,
        orders,
        d,
        n,
        delta,
        coord_index,
        form,
        points: Vec::new(),
        generator: Vec::new(),
    };
    spec.points = (0..n as i64)
        .map(|i| {
            let a1 = spec.ext[0].pow(spec.alpha[0], i)?;
            let a2 = spec.ext[1].pow(spec.alpha[1], i)?;
            Ok(spec.flatten(a1, a2))
        })
        .collect::<Result<_>>()?;
    spec.generator = (0..k)
        .map(|a| {
            let (b1, b2) = if a < k1 as usize {
                (spec.ext[0].pow(spec.gamma[0], a as i64)?, Elem::ZERO)
            } else {
                (Elem::ZERO, spec.ext[1].pow(spec.gamma[1], (a - k1 as usize) as i64)?)
            };
            spec.codeword(b1, b2).map(|c| c.coords)
        })
        .collect::<Result<_>>()?;
    Ok(spec)
}

/// Packed coordinates of every element in the basis `1, g, .., g^(k-1)`.
fn coordinate_table(base: &FieldTable, ext: &FieldTable, emb: &Embedding, gamma: Elem, k: u32) -> Vec<u32> {
    let q = base.size();
    let powers: Vec<Elem> = (0..k as i64).map(|t| ext.pow(gamma, t).unwrap_or(Elem::ZERO)).collect();
    let mut table = vec![UNSET; ext.size() as usize];
    for packed in 0..ext.size() {
        let mut rest = packed;
        let mut acc = Elem::ZERO;
        for &g in &powers {
            let c = base.from_value(rest % q).unwrap_or(Elem::ZERO);
            rest /= q;
            acc = ext.add(acc, ext.mul(emb.embed(c), g));
        }
        let slot = &mut table[ext.to_value(acc) as usize];
        debug_assert_eq!(*slot, UNSET, "powers of gamma must be a basis");
        *slot = packed;
    }
    table
}

/// A codeword of `C` together with the pair it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    /// `GF(q)` values, length `n`.
    pub coords: Vec<u32>,
    pub beta: (Elem, Elem),
}

impl Codeword {
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }
}

impl AsRef<[u32]> for Codeword {
    fn as_ref(&self) -> &[u32] {
        &self.coords
    }
}

impl CodeSpec {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k1(&self) -> u32 {
        self.k[0]
    }

    pub fn k2(&self) -> u32 {
        self.k[1]
    }

    /// `dim C = k1 + k2`.
    pub fn dim(&self) -> usize {
        (self.k[0] + self.k[1]) as usize
    }

    pub fn e1(&self) -> u64 {
        self.e[0]
    }

    pub fn e2(&self) -> u64 {
        self.e[1]
    }

    pub fn n1(&self) -> u64 {
        self.orders[0]
    }

    pub fn n2(&self) -> u64 {
        self.orders[1]
    }

    /// `gcd(n1, n2)`.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Code length `lcm(n1, n2)`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &FieldTable {
        &self.base
    }

    pub fn ext(&self, side: Side) -> &FieldTable {
        &self.ext[idx(side)]
    }

    pub fn embedding(&self, side: Side) -> &Embedding {
        &self.emb[idx(side)]
    }

    pub fn trace_map(&self, side: Side) -> &TraceMap {
        &self.traces[idx(side)]
    }

    /// The primitive element `g_side` (`g2` is re-selected for `delta`).
    pub fn gamma(&self, side: Side) -> Elem {
        self.gamma[idx(side)]
    }

    pub fn alpha(&self, side: Side) -> Elem {
        self.alpha[idx(side)]
    }

    /// The common primitive element of `GF(q)`, as a base-field element.
    pub fn delta(&self) -> Elem {
        self.delta
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::Product { k1: self.k[0] as usize, k2: self.k[1] as usize }
    }

    /// Gram matrix of `<(x1,y1),(x2,y2)> = Tr1(x1 x2) + Tr2(y1 y2)`.
    pub fn inner_product_form(&self) -> &BilinearForm {
        &self.form
    }

    /// Flattened `(a1^i, a2^i)` for `i` in `0..n`.
    pub fn cyclic_points(&self) -> &[Vec<u32>] {
        &self.points
    }

    /// Codewords of the flattened unit vectors; row `t < k1` is
    /// `c(g1^t, 0)`, row `k1 + t` is `c(0, g2^t)`.
    pub fn generator_rows(&self) -> &[Vec<u32>] {
        &self.generator
    }

    /// Coordinates of `x` in `1, g_s, .., g_s^(k_s - 1)` as base values.
    pub fn coordinates(&self, side: Side, x: Elem) -> Vec<u32> {
        let s = idx(side);
        let q = self.q;
        let mut packed = self.coord_index[s][self.ext[s].to_value(x) as usize];
        (0..self.k[s])
            .map(|_| {
                let c = packed % q;
                packed /= q;
                c
            })
            .collect()
    }

    /// Inverse of [`CodeSpec::coordinates`].
    pub fn element_from_coordinates(&self, side: Side, coords: &[u32]) -> Result<Elem> {
        let s = idx(side);
        if coords.len() != self.k[s] as usize {
            return Err(Error::LengthMismatch { expected: self.k[s] as usize, found: coords.len() });
        }
        let ext = &self.ext[s];
        let mut acc = Elem::ZERO;
        for (t, &c) in coords.iter().enumerate() {
            let c = self.emb[s].embed(self.base.from_value(c)?);
            acc = ext.add(acc, ext.mul(c, ext.pow(self.gamma[s], t as i64)?));
        }
        Ok(acc)
    }

    pub fn flatten(&self, b1: Elem, b2: Elem) -> Vec<u32> {
        let mut v = self.coordinates(Side::First, b1);
        v.extend(self.coordinates(Side::Second, b2));
        v
    }

    pub fn unflatten(&self, v: &[u32]) -> Result<(Elem, Elem)> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), found: v.len() });
        }
        let k1 = self.k[0] as usize;
        Ok((
            self.element_from_coordinates(Side::First, &v[..k1])?,
            self.element_from_coordinates(Side::Second, &v[k1..])?,
        ))
    }

    /// `c(b1, b2)` straight from the trace definition.
    pub fn codeword(&self, b1: Elem, b2: Elem) -> Result<Codeword> {
        if !self.ext[0].contains(b1) || !self.ext[1].contains(b2) {
            return Err(Error::FieldMismatch);
        }
        let part = |s: usize, b: Elem, i: usize| -> Elem {
            match (b.log(), self.alpha[s].log()) {
                (Some(lb), Some(la)) => self.traces[s].of_log(lb as u64 + la as u64 * i as u64),
                _ => Elem::ZERO,
            }
        };
        let coords = (0..self.n)
            .map(|i| self.base.to_value(self.base.add(part(0, b1, i), part(1, b2, i))))
            .collect();
        Ok(Codeword { coords, beta: (b1, b2) })
    }

    /// `c(0, b2)`, a codeword of `C'`.
    pub fn subcode_codeword(&self, b2: Elem) -> Result<Codeword> {
        self.codeword(Elem::ZERO, b2)
    }

    /// Codeword of a flattened product-space vector, via the generator rows.
    pub fn encode(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), found: v.len() });
        }
        let f = &self.base;
        let mut out = vec![0u32; self.n];
        for (&c, row) in v.iter().zip(&self.generator) {
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row) {
                *x = f.val_add(*x, f.val_mul(c, y));
            }
        }
        Ok(out)
    }

    /// The product-space vector encoding to `word`; `FieldMismatch` when
    /// `word` is not in `C`.
    pub fn preimage(&self, word: &[u32]) -> Result<Vec<u32>> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: word.len() });
        }
        let k = self.dim();
        let mut rows: Vec<Vec<u32>> = (0..self.n)
            .map(|i| {
                let mut r: Vec<u32> = self.generator.iter().map(|g| g[i]).collect();
                r.push(word[i]);
                r
            })
            .collect();
        let pivots = rref(&self.base, &mut rows, k + 1);
        if pivots.contains(&k) {
            return Err(Error::FieldMismatch);
        }
        let mut x = vec![0u32; k];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r][k];
        }
        Ok(x)
    }

    /// `h` rewritten in the product ambient; subspaces of codewords are
    /// pulled back through the encoder.
    pub fn to_product(&self, h: &SubspaceBasis) -> Result<SubspaceBasis> {
        match h.ambient() {
            Ambient::Product { k1, k2 } if k1 == self.k[0] as usize && k2 == self.k[1] as usize => Ok(h.clone()),
            Ambient::Codewords { n } if n == self.n => {
                let rows = h.rows().map(|w| self.preimage(w)).collect::<Result<Vec<_>>>()?;
                SubspaceBasis::span(&self.base, self.ambient(), &rows)
            }
            _ => Err(Error::FieldMismatch),
        }
    }
}

/// Positions where some word is nonzero, increasing.
pub fn support<W: AsRef<[u32]>>(words: &[W]) -> Result<Vec<usize>> {
    let Some(first) = words.first() else { return Ok(Vec::new()) };
    let len = first.as_ref().len();
    let mut hit = vec![false; len];
    for w in words {
        let w = w.as_ref();
        if w.len() != len {
            return Err(Error::LengthMismatch { expected: len, found: w.len() });
        }
        for (h, &c) in hit.iter_mut().zip(w) {
            *h |= c != 0;
        }
    }
    Ok(hit.iter().enumerate().filter(|(_, &h)| h).map(|(i, _)| i).collect())
}

/// `h1(x) h2(x)`, the product of the minimal polynomials of `a1^-1` and
/// `a2^-1` over `GF(q)`.
pub fn parity_check_polynomial(spec: &CodeSpec) -> Result<Polynomial> {
    let base = spec.base();
    let mut h = Polynomial::one();
    for side in [Side::First, Side::Second] {
        let ext = spec.ext(side);
        let inv = ext.inv(spec.alpha(side))?;
        h = h.mul(&minimal_polynomial(ext, base, inv)?, base);
    }
    Ok(h)
}

/// Whether `sum_t h_t c_(i - t) = 0` for every `i` (indices mod `n`).
pub fn annihilates(base: &FieldTable, h: &Polynomial, word: &[u32]) -> bool {
    let n = word.len();
    (0..n).all(|i| {
        h.coeffs().iter().enumerate().fold(Elem::ZERO, |acc, (t, &ht)| {
            let c = base.from_value(word[(i + n - t % n) % n]).unwrap_or(Elem::ZERO);
            base.add(acc, base.mul(ht, c))
        }) == Elem::ZERO
    })
}

/// Left cyclic shift `(c_1, .., c_(n-1), c_0)`.
pub fn cyclic_shift(word: &[u32]) -> Vec<u32> {
    let mut out = word.to_vec();
    out.rotate_left(1.min(word.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn parameters_of_examples() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        assert_eq!((c.n1(), c.n2(), c.d(), c.n()), (3, 7, 1, 21));
        let c = build_code(3, 2, 3, 1, 2).unwrap();
        assert_eq!((c.n1(), c.n2(), c.d(), c.n()), (8, 13, 1, 104));
        let c = build_code(2, 3, 4, 1, 1).unwrap();
        assert_eq!(c.n(), 105);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_code(2, 2, 2, 1, 1).unwrap_err(), Error::ConjugateNonzeros);
        assert_eq!(
            build_code(3, 2, 3, 1, 5).unwrap_err(),
            Error::BadIndex { side: 2, e: 5, group_order: 26 }
        );
        assert_eq!(build_code(2, 2, 3, 3, 1).unwrap_err(), Error::DegenerateOrder { side: 1 });
        // g^13 in GF(27) is -1, which lives in GF(3)
        assert_eq!(build_code(3, 2, 3, 1, 13).unwrap_err(), Error::ProperSubfield { side: 2, degree: 1 });
        assert_eq!(build_code(6, 2, 3, 1, 1).unwrap_err(), Error::NotPrimePower(6));
        assert_eq!(build_code(2, 0, 3, 1, 1).unwrap_err(), Error::InvalidDegree(0));
    }

    #[test]
    fn non_conjugate_equal_degrees_are_accepted() {
        // GF(16): a1 = g and a2 = g^3 lie in different Frobenius orbits
        let c = build_code(2, 4, 4, 1, 3).unwrap();
        assert_eq!((c.n1(), c.n2(), c.d(), c.n()), (15, 5, 5, 15));
        assert_eq!(build_code(2, 4, 4, 1, 1).unwrap_err(), Error::ConjugateNonzeros);
        assert_eq!(build_code(2, 4, 4, 3, 3).unwrap_err(), Error::ConjugateNonzeros);
    }

    #[test]
    fn delta_compatibility() {
        for (q, k1, k2, e1, e2) in [(3, 2, 3, 1, 2), (5, 2, 1, 1, 1), (7, 1, 2, 2, 1), (4, 1, 2, 1, 3)] {
            let c = build_code(q, k1, k2, e1, e2).unwrap();
            let q1 = c.ext(Side::First).order() as i64;
            let q2 = c.ext(Side::Second).order() as i64;
            let qm = (q - 1) as i64;
            let d1 = c.embedding(Side::First).restrict(c.ext(Side::First).pow(c.gamma(Side::First), q1 / qm).unwrap());
            let d2 = c.embedding(Side::Second).restrict(c.ext(Side::Second).pow(c.gamma(Side::Second), q2 / qm).unwrap());
            assert_eq!(d1, Some(c.delta()));
            assert_eq!(d2, Some(c.delta()));
            assert_eq!(element_order(c.base(), c.delta()).unwrap(), q - 1);
            assert_eq!(element_order(c.ext(Side::Second), c.gamma(Side::Second)).unwrap(), q2 as u64);
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let c = build_code(3, 2, 3, 1, 2).unwrap();
        for side in [Side::First, Side::Second] {
            for x in c.ext(side).elements() {
                let v = c.coordinates(side, x);
                assert_eq!(c.element_from_coordinates(side, &v).unwrap(), x);
            }
        }
    }

    #[test]
    fn codeword_examples() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        let (f1, f2) = (c.ext(Side::First), c.ext(Side::Second));
        assert!(c.codeword(Elem::ZERO, Elem::ZERO).unwrap().coords.iter().all(|&x| x == 0));
        for b1 in f1.nonzero_elements() {
            for b2 in f2.nonzero_elements() {
                assert_eq!(c.codeword(b1, b2).unwrap().weight(), 10);
            }
        }
        for b2 in f2.nonzero_elements() {
            let w = c.subcode_codeword(b2).unwrap();
            assert_eq!(w.weight(), 12);
            for i in 0..c.n() {
                assert_eq!(w.coords[i], w.coords[(i + 7) % 21]);
            }
        }
        assert_eq!(c.codeword(Elem::from_log(99), Elem::ZERO).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn first_component_repeats_irreducible_codeword() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        let f1 = c.ext(Side::First);
        let gf2 = c.base();
        for b1 in f1.nonzero_elements() {
            let w = c.codeword(b1, Elem::ZERO).unwrap();
            // irreducible codeword of C1, length n1 = 3, computed with the plain trace
            let short: Vec<u32> = (0..3)
                .map(|i| {
                    let x = f1.mul(b1, f1.pow(c.alpha(Side::First), i).unwrap());
                    gf2.to_value(crate::gf::trace(f1, gf2, x).unwrap())
                })
                .collect();
            for i in 0..21 {
                assert_eq!(w.coords[i], short[i % 3]);
            }
        }
    }

    #[test]
    fn support_examples() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        let zero = c.codeword(Elem::ZERO, Elem::ZERO).unwrap();
        assert!(support(&[zero]).unwrap().is_empty());
        let w = c.codeword(Elem::ONE, Elem::ONE).unwrap();
        let s = support(core::slice::from_ref(&w)).unwrap();
        assert_eq!(s.len(), 10);
        assert!(s.iter().all(|&i| w.coords[i] != 0));
        let a = vec![1u32, 0, 0, 0];
        let b = vec![0u32, 0, 1, 1];
        assert_eq!(support(&[a.clone(), b]).unwrap(), vec![0, 2, 3]);
        assert_eq!(
            support(&[a, vec![1, 1]]).unwrap_err(),
            Error::LengthMismatch { expected: 4, found: 2 }
        );
        let none: [Vec<u32>; 0] = [];
        assert!(support(&none).unwrap().is_empty());
    }

    #[test]
    fn encode_matches_codeword() {
        let c = build_code(3, 2, 3, 1, 2).unwrap();
        for b1 in c.ext(Side::First).elements().step_by(3) {
            for b2 in c.ext(Side::Second).elements().step_by(5) {
                let v = c.flatten(b1, b2);
                assert_eq!(c.encode(&v).unwrap(), c.codeword(b1, b2).unwrap().coords);
                assert_eq!(c.unflatten(&v).unwrap(), (b1, b2));
            }
        }
    }

    #[test]
    fn code_structure_binary() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        let all: Vec<Codeword> = c
            .ext(Side::First)
            .elements()
            .flat_map(|b1| c.ext(Side::Second).elements().map(move |b2| (b1, b2)))
            .map(|(b1, b2)| c.codeword(b1, b2).unwrap())
            .collect();
        let set: BTreeSet<Vec<u32>> = all.iter().map(|w| w.coords.clone()).collect();
        assert_eq!(set.len(), 32);
        for w in &all {
            assert!(set.contains(&cyclic_shift(&w.coords)));
        }
        let h = parity_check_polynomial(&c).unwrap();
        assert_eq!(h.degree(), Some(5));
        assert!(h.is_monic());
        for w in &all {
            assert!(annihilates(c.base(), &h, &w.coords));
        }
        // a non-codeword fails the check
        let mut bad = all[5].coords.clone();
        bad[0] ^= 1;
        assert!(!annihilates(c.base(), &h, &bad));
    }

    #[test]
    fn parity_factors() {
        let c = build_code(2, 2, 3, 1, 1).unwrap();
        let gf2 = c.base();
        let f1 = c.ext(Side::First);
        let h1 = minimal_polynomial(f1, gf2, f1.inv(c.alpha(Side::First)).unwrap()).unwrap();
        assert_eq!(h1.coeffs(), &[Elem::ONE, Elem::ONE, Elem::ONE]);
        let h = parity_check_polynomial(&c).unwrap();
        assert_eq!(h.degree(), Some(5));
    }
}
