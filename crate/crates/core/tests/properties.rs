use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rghw_core::charsum::{char_eval, nj_via_charsum, AdditiveCharacter, CharacterHandle};
use rghw_core::closed_forms::{corollary1_nj, corollary2_nj, corollary3_nj};
use rghw_core::codes::{build_code, CodeSpec};
use rghw_core::gf::{build_field, Elem, Embedding, FieldTable, TraceMap};
use rghw_core::rghw::{nj_of_subspace, support_size};
use rghw_core::subspaces::{dual_subspace, gaussian_binomial, Ambient, SubspaceBasis};

const FIELDS: &[(u64, u32)] = &[(2, 1), (2, 3), (2, 4), (3, 2), (3, 3), (5, 1), (5, 2), (7, 2), (2, 6), (11, 1)];

fn field() -> impl Strategy<Value = FieldTable> {
    prop::sample::select(FIELDS).prop_map(|(p, m)| build_field(p, m).unwrap())
}

fn elem(f: &FieldTable, v: u32) -> Elem {
    f.from_value(v % f.size()).unwrap()
}

const CODES: &[(u64, u32, u32, u64, u64)] =
    &[(2, 2, 3, 1, 1), (2, 3, 4, 1, 1), (3, 2, 3, 1, 2), (3, 3, 2, 2, 1), (2, 4, 3, 3, 1), (3, 2, 3, 2, 2)];

fn code() -> impl Strategy<Value = CodeSpec> {
    prop::sample::select(CODES).prop_map(|(q, k1, k2, e1, e2)| build_code(q, k1, k2, e1, e2).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_ring_laws(f in field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            prop_assert_eq!(f.pow(a, f.order() as i64).unwrap(), Elem::ONE);
        }
    }

    #[test]
    fn value_and_log_arithmetic_agree(f in field(), a in any::<u32>(), b in any::<u32>()) {
        let (va, vb) = (a % f.size(), b % f.size());
        let (ea, eb) = (f.from_value(va).unwrap(), f.from_value(vb).unwrap());
        prop_assert_eq!(f.to_value(f.add(ea, eb)), f.val_add(va, vb));
        prop_assert_eq!(f.to_value(f.mul(ea, eb)), f.val_mul(va, vb));
        prop_assert_eq!(f.to_value(f.sub(ea, eb)), f.val_sub(va, vb));
    }

    #[test]
    fn absolute_trace_is_additive(f in field(), a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (elem(&f, a), elem(&f, b));
        let prime = build_field(f.characteristic() as u64, 1).unwrap();
        let emb = Embedding::new(&prime, &f).unwrap();
        let tr = TraceMap::new(&f, &prime, &emb).unwrap();
        let add = AdditiveCharacter::new(&f);
        prop_assert_eq!(add.trace(a), prime.to_value(tr.apply(a)));
        let p = f.characteristic();
        prop_assert_eq!(add.trace(f.add(a, b)), (add.trace(a) + add.trace(b)) % p);
    }

    #[test]
    fn characters_are_multiplicative(f in field(), l in any::<u64>(), a in 0u32..1_000_000, b in 0u32..1_000_000) {
        let order = f.order() as u64;
        let chi = CharacterHandle::canonical(&f, order, l % order).unwrap();
        let (a, b) = (f.element(a as i64), f.element(b as i64));
        let lhs = char_eval(&chi, f.mul(a, b)).unwrap();
        let rhs = char_eval(&chi, a).unwrap() * char_eval(&chi, b).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-9);
        prop_assert!((char_eval(&chi, Elem::ONE).unwrap().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spans_are_canonical(f in field(), k in 1usize..6, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = f.size();
        let amb = Ambient::Coordinates { dim: k };
        let vs: Vec<Vec<u32>> = (0..3).map(|_| (0..k).map(|_| rng.random_range(0..q)).collect()).collect();
        let s = SubspaceBasis::span(&f, amb, &vs).unwrap();
        for v in &vs {
            prop_assert!(s.contains(&f, v));
        }
        // a different spanning set of the same space
        let c = rng.random_range(1..q);
        let mixed: Vec<Vec<u32>> = vec![
            vs[2].clone(),
            vs[1].iter().zip(&vs[2]).map(|(&x, &y)| f.val_add(x, f.val_mul(c, y))).collect(),
            vs[0].iter().map(|&x| f.val_mul(c, x)).collect(),
        ];
        prop_assert_eq!(SubspaceBasis::span(&f, amb, &mixed).unwrap(), s.clone());
        prop_assert_eq!(s.elements(&f).len() as u64, (q as u64).pow(s.dim() as u32));
    }

    #[test]
    fn gaussian_binomial_identities(k in 1u32..10, j in 0u32..10, q in prop::sample::select(vec![2u64, 3, 4, 5])) {
        prop_assume!(j <= k);
        let g = gaussian_binomial(k, j, q).unwrap();
        prop_assert_eq!(g, gaussian_binomial(k, k - j, q).unwrap());
        if j >= 1 && j < k {
            let pascal = gaussian_binomial(k - 1, j - 1, q).unwrap()
                + (q as u128).pow(j) * gaussian_binomial(k - 1, j, q).unwrap();
            prop_assert_eq!(g, pascal);
        }
    }

    #[test]
    fn duality_round_trip(spec in code(), seed in any::<u64>(), j in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let j = j.min(spec.dim());
        let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
        let form = spec.inner_product_form();
        let dual = dual_subspace(spec.base(), &h, form).unwrap();
        prop_assert_eq!(h.dim() + dual.dim(), spec.dim());
        for u in h.rows() {
            for v in dual.rows() {
                prop_assert_eq!(form.pair(spec.base(), u, v), 0);
            }
        }
        prop_assert_eq!(dual_subspace(spec.base(), &dual, form).unwrap(), h);
    }

    #[test]
    fn zero_count_and_support_partition_coordinates(spec in code(), seed in any::<u64>(), j in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let j = j.min(spec.dim());
        let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
        prop_assert_eq!(nj_of_subspace(&spec, &h).unwrap() + support_size(&spec, &h).unwrap(), spec.n());
    }

    #[test]
    fn charsum_matches_count(spec in code(), seed in any::<u64>(), j in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let j = j.min(spec.k1() as usize);
        let h = SubspaceBasis::random(spec.base(), spec.ambient(), j, &mut rng).unwrap();
        let cs = nj_via_charsum(&spec, &h).unwrap();
        prop_assert!((cs.value - nj_of_subspace(&spec, &h).unwrap() as f64).abs() < 1e-6);
    }

    #[test]
    fn closed_forms_positive(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), k1 in 1u32..16, k2 in 1u32..16, j in 1u32..16) {
        prop_assume!(j <= k1);
        for c in [corollary2_nj(q, k1, k2, j), corollary3_nj(q, k1, k2, j)].into_iter().flatten() {
            prop_assert!(c.n_j > 0.into() && c.m_j > 0.into());
            prop_assert_eq!(&c.n_j + &c.m_j, c.n);
        }
        if q == 2 {
            if let Ok(c) = corollary1_nj(k1, k2, j) {
                prop_assert!(c.n_j > 0.into() && c.m_j > 0.into());
            }
        }
    }

    #[test]
    fn families_two_and_three_agree(q in prop::sample::select(vec![2u64, 3, 5, 8]), a in 1u32..9, b in 1u32..9, j in 1u32..9) {
        prop_assume!(j <= a);
        if let (Ok(x), Ok(y)) = (corollary2_nj(q, a, b, j), corollary3_nj(q, a, b, j)) {
            prop_assert_eq!(x.n_j, y.n_j);
        }
    }
}
