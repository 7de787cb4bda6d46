//! Route results checked against independent reference computations that
//! work directly from the trace definition of the codewords.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rghw_core::charsum::nj_via_charsum;
use rghw_core::closed_forms::{closed_form_for, corollary1_nj, corollary2_nj};
use rghw_core::codes::{build_code, CodeSpec};
use rghw_core::gf::Elem;
use rghw_core::rghw::{ghw_bruteforce, mj_theorem1, nj_of_subspace, rghw_bruteforce};
use rghw_core::subspaces::{Ambient, Side, SubspaceBasis};

/// Every codeword `c(b1, b2)` with its coefficients.
fn all_words(spec: &CodeSpec) -> Vec<((Elem, Elem), Vec<u32>)> {
    let mut out = Vec::new();
    for b1 in spec.ext(Side::First).elements() {
        for b2 in spec.ext(Side::Second).elements() {
            out.push(((b1, b2), spec.codeword(b1, b2).unwrap().coords));
        }
    }
    out
}

/// Zero coordinates of a subspace, counted on every element of it.
fn zero_positions_by_definition(spec: &CodeSpec, h: &SubspaceBasis) -> usize {
    let words: Vec<Vec<u32>> = h
        .elements(spec.base())
        .iter()
        .map(|v| {
            let (b1, b2) = spec.unflatten(v).unwrap();
            spec.codeword(b1, b2).unwrap().coords
        })
        .collect();
    (0..spec.n()).filter(|&i| words.iter().all(|w| w[i] == 0)).count()
}

/// Minimum support over all `j`-sets of binary codewords that are linearly
/// independent, optionally only those whose span meets the subcode
/// trivially. Works on words, not on the product space.
fn binary_min_support(spec: &CodeSpec, j: usize, restricted: bool) -> usize {
    assert_eq!(spec.q(), 2);
    let words = all_words(spec);
    let nonzero: Vec<_> = words.iter().filter(|(_, w)| w.iter().any(|&x| x != 0)).collect();
    let mut best = usize::MAX;
    let mut idx: Vec<usize> = (0..j).collect();
    loop {
        // span by XOR of all subsets
        let mut ok = true;
        let mut union = vec![0u32; spec.n()];
        for mask in 1u32..(1 << j) {
            let mut w = vec![0u32; spec.n()];
            let mut b1 = Elem::ZERO;
            for (t, &i) in idx.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    for (x, y) in w.iter_mut().zip(&nonzero[i].1) {
                        *x ^= y;
                    }
                    b1 = spec.ext(Side::First).add(b1, nonzero[i].0 .0);
                }
            }
            if w.iter().all(|&x| x == 0) || (restricted && b1.is_zero()) {
                ok = false;
                break;
            }
            for (u, x) in union.iter_mut().zip(&w) {
                *u |= x;
            }
        }
        if ok {
            best = best.min(union.iter().filter(|&&x| x != 0).count());
        }
        // next combination
        let mut t = j;
        loop {
            if t == 0 {
                return best;
            }
            t -= 1;
            if idx[t] < nonzero.len() - j + t {
                idx[t] += 1;
                for u in t + 1..j {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
        }
    }
}

#[test]
fn bruteforce_matches_word_level_search() {
    for (k1, k2) in [(2, 3), (3, 2)] {
        let spec = build_code(2, k1, k2, 1, 1).unwrap();
        for j in 1..=k1 as usize {
            assert_eq!(rghw_bruteforce(&spec, j).unwrap().value, binary_min_support(&spec, j, true), "({k1},{k2}) j={j}");
            assert_eq!(ghw_bruteforce(&spec, j).unwrap().value, binary_min_support(&spec, j, false), "({k1},{k2}) j={j}");
        }
    }
}

#[test]
fn ternary_first_weight_by_scan() {
    // M_1 is the least weight of a codeword outside the subcode
    let spec = build_code(3, 2, 3, 1, 2).unwrap();
    let m1 = all_words(&spec)
        .iter()
        .filter(|((b1, _), _)| !b1.is_zero())
        .map(|(_, w)| w.iter().filter(|&&x| x != 0).count())
        .min()
        .unwrap();
    assert_eq!(m1, 69);
    assert_eq!(rghw_bruteforce(&spec, 1).unwrap().value, m1);
    assert_eq!(mj_theorem1(&spec, 1).unwrap().m_j, m1);
}

#[test]
fn zero_count_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (q, k1, k2, e1, e2) in [(2, 2, 3, 1, 1), (2, 3, 4, 1, 1), (3, 2, 3, 1, 2), (2, 4, 4, 1, 3)] {
        let spec = build_code(q, k1, k2, e1, e2).unwrap();
        for _ in 0..40 {
            let j = rng.random_range(0..=spec.dim());
            let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
            assert_eq!(nj_of_subspace(&spec, &h).unwrap(), zero_positions_by_definition(&spec, &h));
        }
    }
}

#[test]
fn codeword_subspaces_are_accepted() {
    let spec = build_code(3, 2, 3, 1, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let h = SubspaceBasis::random(spec.base(), spec.ambient(), 2, &mut rng).unwrap();
        let words: Vec<Vec<u32>> = h.rows().map(|r| spec.encode(r).unwrap()).collect();
        let d = SubspaceBasis::span(spec.base(), Ambient::Codewords { n: spec.n() }, &words).unwrap();
        assert_eq!(spec.to_product(&d).unwrap(), h);
        assert_eq!(nj_of_subspace(&spec, &d).unwrap(), nj_of_subspace(&spec, &h).unwrap());
    }
    // a word outside the code
    let mut bad = vec![0u32; spec.n()];
    bad[0] = 1;
    let d = SubspaceBasis::span(spec.base(), Ambient::Codewords { n: spec.n() }, &[bad]).unwrap();
    assert!(spec.to_product(&d).is_err());
}

/// Family 1 rewritten with `n_j = n - m_j`, evaluated in machine integers.
fn family_one_reference(k1: u32, k2: u32, j: u32) -> i128 {
    let p = |e: u32| 1i128 << e;
    let n = (p(k1) - 1) * (p(k2) - 1);
    let nj = if k1 <= k2 || j <= k2 {
        p(k1 + k2 - j) - p(k1 - j) - p(k2 - j) + 1
    } else {
        p(k1 + k2 - j) - p(k1 - j)
    };
    n - nj
}

/// Families 2/3 with the geometric sums in closed form.
fn family_two_reference(q: i128, k1: u32, k2: u32, j: u32) -> i128 {
    let p = |e: u32| q.pow(e);
    let geo = |lo: u32, hi_excl: u32| if hi_excl <= lo { 0 } else { (p(hi_excl) - p(lo)) / (q - 1) };
    let nj = if k1 <= k2 {
        geo(k2 - j, k1 + k2 - j) - geo(0, k1 - j)
    } else if j <= k2 {
        geo(k1 - j, k1 + k2 - j) - geo(0, k2 - j)
    } else {
        p(k1 - j) * geo(0, k2)
    };
    (p(k1) - 1) * (p(k2) - 1) / (q - 1) - nj
}

#[test]
fn closed_forms_match_reference_arithmetic() {
    for k1 in 2..=12u32 {
        for k2 in 2..=12u32 {
            for j in 1..=k1 {
                if let Ok(c) = corollary1_nj(k1, k2, j) {
                    assert_eq!(c.m_j, family_one_reference(k1, k2, j).into());
                }
            }
        }
    }
    for q in [2i128, 3, 5, 7, 8, 9] {
        for k1 in 1..=7u32 {
            for k2 in 1..=7u32 {
                for j in 1..=k1 {
                    if let Ok(c) = corollary2_nj(q as u64, k1, k2, j) {
                        assert_eq!(c.m_j, family_two_reference(q, k1, k2, j).into(), "q={q} ({k1},{k2}) j={j}");
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_match_enumeration() {
    for (q, k1, k2, e1, e2) in [
        (2, 2, 3, 1, 1),
        (2, 3, 2, 1, 1),
        (2, 2, 5, 1, 1),
        (2, 4, 3, 1, 1),
        (3, 2, 3, 1, 2),
        (3, 3, 2, 2, 1),
        (5, 1, 3, 1, 4),
        (5, 3, 1, 4, 1),
    ] {
        let spec = build_code(q, k1, k2, e1, e2).unwrap();
        for j in 1..=k1 as usize {
            let cf = closed_form_for(&spec, j as u32).unwrap();
            assert_eq!(cf.n, spec.n().into());
            assert_eq!(cf.m_j, rghw_bruteforce(&spec, j).unwrap().value.into(), "{:?} j={j}", (q, k1, k2, e1, e2));
            assert_eq!(cf.m_j, mj_theorem1(&spec, j).unwrap().m_j.into());
        }
    }
}

#[test]
fn family_two_needs_coprime_odd_degree() {
    // q = 4, k2 = 3: gcd(k2, q - 1) = 3, orders 3 and 21 are not coprime
    let spec = build_code(4, 1, 3, 1, 3).unwrap();
    assert_eq!((spec.n1(), spec.n2(), spec.n()), (3, 21, 21));
    assert_eq!(mj_theorem1(&spec, 1).unwrap().n_j, 12);
    assert!(corollary2_nj(4, 1, 3, 1).is_err());
    assert!(closed_form_for(&spec, 1).is_none());
    // the displayed expression would give 4^2 = 16 here
    assert_ne!(family_two_reference(4, 1, 3, 1), spec.n() as i128 - 12);
}

#[test]
fn strictly_increasing_weights() {
    for (q, k1, k2, e1, e2) in [(2, 3, 2, 1, 1), (2, 3, 4, 1, 1), (3, 2, 3, 1, 2), (3, 3, 2, 2, 1), (2, 4, 4, 1, 3)] {
        let spec = build_code(q, k1, k2, e1, e2).unwrap();
        let m: Vec<usize> = (1..=k1 as usize).map(|j| rghw_bruteforce(&spec, j).unwrap().value).collect();
        assert!(m.windows(2).all(|w| w[0] < w[1]), "{m:?}");
    }
}

#[test]
fn non_coprime_orders_run_through_enumeration() {
    let spec = build_code(2, 4, 4, 1, 3).unwrap();
    assert_eq!(spec.d(), 5);
    for j in 1..=2 {
        assert_eq!(rghw_bruteforce(&spec, j).unwrap().value, mj_theorem1(&spec, j).unwrap().m_j);
    }
}

/// `q^j (q - 1) N_j(D) = q^(k1+k2) - q^k1 + q^j - q^k2 |H ∩ (GF(Q1), 0)|`
/// at `q = 3`, `e = (1, 2)`, for `D` meeting the subcode trivially.
#[test]
fn ternary_zero_count_expression() {
    let spec = build_code(3, 2, 3, 1, 2).unwrap();
    let (k1, k2) = (spec.k1(), spec.k2());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen_first_axis = false;
    let mut tested = 0;
    while tested < 200 {
        let j = rng.random_range(1..=k1 as usize);
        let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
        if h.rank_of_columns(spec.base(), 0..k1 as usize) != j {
            continue;
        }
        tested += 1;
        let on_first_axis = h
            .elements(spec.base())
            .iter()
            .filter(|v| v[k1 as usize..].iter().all(|&x| x == 0))
            .count() as i64;
        seen_first_axis |= on_first_axis > 1;
        let q = 3i64;
        let numer = q.pow(k1 + k2) - q.pow(k1) + q.pow(j as u32) - q.pow(k2) * on_first_axis;
        let denom = q.pow(j as u32) * (q - 1);
        assert_eq!(numer % denom, 0);
        assert_eq!((numer / denom) as usize, nj_of_subspace(&spec, &h).unwrap());
    }
    assert!(seen_first_axis);
}

#[test]
fn charsum_on_subspaces_meeting_the_subcode() {
    let spec = build_code(2, 2, 3, 1, 1).unwrap();
    let f2 = spec.ext(Side::Second);
    let mut seen = HashSet::new();
    for b2 in f2.nonzero_elements() {
        let h = SubspaceBasis::span(spec.base(), spec.ambient(), &[spec.flatten(Elem::ZERO, b2)]).unwrap();
        let cs = nj_via_charsum(&spec, &h).unwrap();
        assert!((cs.value - nj_of_subspace(&spec, &h).unwrap() as f64).abs() < 1e-6);
        assert!(cs.a.norm() < 1e-9);
        seen.insert(cs.rounded());
    }
    assert_eq!(seen.len(), 1);
}

#[test]
fn general_first_term() {
    // e1' = gcd(e1, (Q1 - 1)/(q - 1)) > 1 in both instances
    for (q, k1, k2, e1, e2, e1p) in [(3, 2, 3, 2, 2, 2), (2, 4, 3, 3, 1, 3)] {
        let spec = build_code(q, k1, k2, e1, e2).unwrap();
        assert_eq!(spec.d(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(q ^ e1);
        for _ in 0..50 {
            let j = rng.random_range(1..=k1 as usize);
            let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
            let cs = nj_via_charsum(&spec, &h).unwrap();
            assert_eq!(cs.e1_prime, e1p);
            assert!((cs.value - nj_of_subspace(&spec, &h).unwrap() as f64).abs() < 1e-6);
        }
    }
}
