//! Field dumps, codeword listings and Gauss-sum tables.

use std::fmt::Write as _;

use rghw_core::charsum::{AdditiveCharacter, CharacterHandle};
use rghw_core::codes::CodeSpec;
use rghw_core::gf::{build_field, prime_power, FieldTable};
use rghw_core::subspaces::Side;
use rghw_core::{Error, Result};
use serde::{Deserialize, Serialize};

/// One field with its tables; `null` marks the log of zero and the Zech
/// entry where `1 + g^i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDump {
    pub p: u32,
    pub m: u32,
    pub size: u32,
    pub primitive_polynomial: Vec<u32>,
    pub exp: Vec<u32>,
    pub log: Vec<Option<u32>>,
    pub zech: Vec<Option<u32>>,
}

fn optional(v: &[u32]) -> Vec<Option<u32>> {
    v.iter().map(|&x| (x != u32::MAX).then_some(x)).collect()
}

impl FieldDump {
    pub fn of(f: &FieldTable) -> FieldDump {
        FieldDump {
            p: f.characteristic(),
            m: f.degree(),
            size: f.size(),
            primitive_polynomial: f.primitive_polynomial().to_vec(),
            exp: f.exp_table()[..f.order() as usize].to_vec(),
            log: optional(f.log_table()),
            zech: optional(f.zech_table()),
        }
    }
}

pub fn field_for_size(q: u64) -> Result<FieldTable> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    build_field(p, m)
}

/// Codeword of `C` with its coefficients as field values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodewordRow {
    pub beta: [u32; 2],
    pub coords: Vec<u32>,
}

/// All codewords, `b1` outer and `b2` inner, zero first; `subcode_only`
/// fixes `b1 = 0`.
pub fn codewords(spec: &CodeSpec, subcode_only: bool, limit: u128) -> Result<Vec<CodewordRow>> {
    let (f1, f2) = (spec.ext(Side::First), spec.ext(Side::Second));
    let count = if subcode_only { f2.size() as u128 } else { f1.size() as u128 * f2.size() as u128 };
    if count > limit {
        return Err(Error::CapExceeded { count, cap: limit });
    }
    let firsts: Vec<_> = if subcode_only { vec![rghw_core::gf::Elem::ZERO] } else { f1.elements().collect() };
    let mut out = Vec::with_capacity(count as usize);
    for &b1 in &firsts {
        for b2 in f2.elements() {
            let w = spec.codeword(b1, b2)?;
            out.push(CodewordRow { beta: [f1.to_value(b1), f2.to_value(b2)], coords: w.coords });
        }
    }
    Ok(out)
}

/// Plain-text matrix, one codeword per line.
pub fn codewords_text(rows: &[CodewordRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r.coords.iter().map(u32::to_string).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussRow {
    /// Exponent of the character, `chi(g) = zeta_(q-1)^lambda`.
    pub lambda: u64,
    /// Value encoding of `beta`.
    pub beta: u32,
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

/// `G(chi^lambda; beta)` for the requested exponents (all when `None`).
pub fn gauss_table(q: u64, lambda: Option<u64>, beta: u32) -> Result<Vec<GaussRow>> {
    let f = field_for_size(q)?;
    let b = f.from_value(beta)?;
    let order = f.order() as u64;
    let add = AdditiveCharacter::new(&f);
    let lambdas: Vec<u64> = match lambda {
        Some(l) if l >= order => return Err(Error::RangeError { value: l, min: 0, max: order - 1 }),
        Some(l) => vec![l],
        None => (0..order).collect(),
    };
    lambdas
        .into_iter()
        .map(|l| {
            let chi = CharacterHandle::canonical(&f, order, l)?;
            let g = add.gauss_sum(&chi, b);
            Ok(GaussRow { lambda: l, beta, re: g.re, im: g.im, modulus: g.norm() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rghw_core::codes::build_code;

    #[test]
    fn gauss_rows() {
        let rows = gauss_table(5, None, 1).unwrap();
        assert_eq!(rows.len(), 4);
        assert!((rows[0].re + 1.0).abs() < 1e-12);
        for r in &rows[1..] {
            assert!((r.modulus - 5f64.sqrt()).abs() < 1e-9);
        }
        let rows = gauss_table(2, None, 0).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].re, 1.0);
        assert_eq!(gauss_table(9, Some(0), 0).unwrap()[0].re, 8.0);
        assert!(gauss_table(6, None, 1).is_err());
        assert!(gauss_table(5, Some(4), 1).is_err());
    }

    #[test]
    fn field_dump() {
        let d = FieldDump::of(&field_for_size(8).unwrap());
        assert_eq!(d.primitive_polynomial, vec![1, 1, 0, 1]);
        assert_eq!(d.exp.len(), 7);
        assert_eq!(d.log[0], None);
        assert_eq!(d.log[1], Some(0));
    }

    #[test]
    fn codeword_listing() {
        let spec = build_code(2, 2, 3, 1, 1).unwrap();
        let all = codewords(&spec, false, 1 << 20).unwrap();
        assert_eq!(all.len(), 32);
        assert!(all[0].coords.iter().all(|&c| c == 0));
        assert_eq!(codewords(&spec, true, 1 << 20).unwrap().len(), 8);
        assert!(matches!(codewords(&spec, false, 10), Err(Error::CapExceeded { .. })));
        assert_eq!(codewords_text(&all[..2]).lines().count(), 2);
    }
}
