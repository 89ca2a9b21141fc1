use std::sync::{Arc, OnceLock};

use fracsusy::afalg::{random_a_element, AAlgebra, AElement};
use fracsusy::cli::{run_captured, without_timestamp};
use fracsusy::duality::{tensor2, Duality};
use fracsusy::hopf::{HopfStructure, MonomialAlgebra};
use fracsusy::kernels::bessel::{bessel_eval, k_quadrature, k_series, BesselKind};
use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::omega::{omega_poly_direct, omega_poly_with};
use fracsusy::kernels::{kernel_eval, quadrant_decompose, EvalMode, KernelParams, OmegaReading, QuadrantPoint};
use fracsusy::pirep::{BasisVector, PiRep};
use fracsusy::scalars::{context, make_context, q_factorial, q_number, FieldContext, FieldScalar};
use fracsusy::ufalg::{parse_u_word, random_u_element, UAlgebra, UGen};
use fracsusy::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ctx_for(p: i64) -> Arc<FieldContext> {
    static CTX: OnceLock<[Arc<FieldContext>; 3]> = OnceLock::new();
    let all = CTX.get_or_init(|| [context(3, 2).unwrap(), context(5, 2).unwrap(), context(7, 2).unwrap()]);
    all[((p - 3) / 2) as usize].clone()
}

fn duality() -> &'static Duality {
    static D: OnceLock<Duality> = OnceLock::new();
    D.get_or_init(|| Duality::new(&context(3, 1).unwrap()).unwrap())
}

fn scalar(ctx: &Arc<FieldContext>, seed: u64) -> FieldScalar {
    FieldScalar::random(ctx, &mut ChaCha8Rng::seed_from_u64(seed), 4)
}

fn odd_p() -> impl Strategy<Value = i64> {
    prop_oneof![Just(3i64), Just(5), Just(7)]
}

const U_TOKENS: [&str; 7] = ["p+", "p-", "k", "k^-1", "P+", "P-", "H"];
const A_TOKENS: [&str; 8] = ["e+", "e-", "d", "d^-1", "z+", "z-", "L", "exp(1/3L)"];

fn word(tokens: &'static [&'static str], max_len: usize) -> impl Strategy<Value = String> {
    prop::collection::vec((0..tokens.len(), 1u32..3), 0..max_len).prop_map(move |fs| {
        fs.iter()
            .map(|&(t, e)| match tokens[t] {
                tok if e == 1 => tok.to_string(),
                tok if tok.ends_with("^-1") => format!("{}^-{e}", &tok[..tok.len() - 3]),
                tok if tok.starts_with("exp(") => vec![tok; e as usize].join(" "),
                tok => format!("{tok}^{e}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_arithmetic_is_canonical(p in odd_p(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let ctx = ctx_for(p);
        let (a, b, c) = (scalar(&ctx, a), scalar(&ctx, b), scalar(&ctx, c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), FieldScalar::one(&ctx));
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(p in odd_p(), a in any::<u64>(), b in any::<u64>()) {
        let ctx = ctx_for(p);
        let (a, b) = (scalar(&ctx, a), scalar(&ctx, b));
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn u_normalization_is_confluent(text in word(&U_TOKENS, 6)) {
        let u = UAlgebra::new(&ctx_for(3), -1);
        let w = parse_u_word(&text).unwrap();
        let one = FieldScalar::one(u.ctx());
        prop_assert_eq!(u.normalize(&w, one.clone()).unwrap(), u.normalize_right(&w, one).unwrap());
    }

    #[test]
    fn u_structure_maps_respect_products(seed in any::<u64>(), p in odd_p()) {
        let u = UAlgebra::new(&ctx_for(p), -1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_u_element(&u, &mut rng, 2);
        let y = random_u_element(&u, &mut rng, 2);
        let z = random_u_element(&u, &mut rng, 2);
        let xy = u.mul(&x, &y);
        prop_assert_eq!(u.mul(&xy, &z), u.mul(&x, &u.mul(&y, &z)));
        prop_assert_eq!(u.coproduct(&xy), u.tensor_mul(&u.coproduct(&x), &u.coproduct(&y)));
        prop_assert_eq!(u.counit(&xy), &u.counit(&x) * &u.counit(&y));
        prop_assert_eq!(u.antipode(&xy), u.mul(&u.antipode(&y), &u.antipode(&x)));
        prop_assert_eq!(u.star(&xy), u.mul(&u.star(&y), &u.star(&x)));
    }

    #[test]
    fn a_structure_maps_respect_products(seed in any::<u64>(), p in odd_p()) {
        let a = AAlgebra::new(&ctx_for(p));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_a_element(&a, &mut rng, 2);
        let y = random_a_element(&a, &mut rng, 2);
        let xy = a.mul(&x, &y);
        prop_assert_eq!(a.coproduct(&xy), a.tensor_mul(&a.coproduct(&x), &a.coproduct(&y)));
        prop_assert_eq!(a.coproduct_left_twice(&x), a.coproduct_right_twice(&x));
        prop_assert_eq!(a.star(&xy), a.mul(&a.star(&y), &a.star(&x)));
        prop_assert_eq!(a.star(&a.star(&x)), x);
    }

    #[test]
    fn grassmann_powers_at_or_above_p_vanish(p in odd_p(), extra in 0u32..3, prefix in word(&A_TOKENS[2..7], 3)) {
        let a = AAlgebra::new(&ctx_for(p));
        for g in ["e+", "e-"] {
            let text = format!("{prefix} {g}^{}", p as u32 + extra);
            prop_assert!(a.parse(&text).unwrap().is_zero());
        }
    }

    #[test]
    fn a_words_normalize_associatively(x in word(&A_TOKENS, 4), y in word(&A_TOKENS, 4)) {
        let a = AAlgebra::new(&ctx_for(3));
        let joined = a.parse(&format!("{x} {y}")).unwrap();
        prop_assert_eq!(joined, a.mul(&a.parse(&x).unwrap(), &a.parse(&y).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pairing_is_a_hopf_pairing(seed in any::<u64>()) {
        let d = duality();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_u_element(d.u(), &mut rng, 2);
        let y = random_u_element(d.u(), &mut rng, 2);
        let b = random_a_element(d.a(), &mut rng, 2);
        let c = random_a_element(d.a(), &mut rng, 2);
        let lhs = d.pair(&d.u().mul(&x, &y), &b);
        prop_assert_eq!(lhs, d.pair_tensor(&tensor2(&x, &y), &d.a().coproduct(&b)));
        let lhs = d.pair(&x, &d.a().mul(&b, &c));
        prop_assert_eq!(lhs, d.pair_tensor(&d.u().coproduct(&x), &tensor2(&b, &c)));
    }

    #[test]
    fn right_action_obeys_leibniz_rules(seed in any::<u64>()) {
        let d = duality();
        let (u, a) = (d.u(), d.a());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_a_element(a, &mut rng, 2);
        let y = random_a_element(a, &mut rng, 2);
        let r = |g: UGen, e: &AElement| d.right_act(&u.gen(g), e);
        let xy = a.mul(&x, &y);
        for g in [UGen::PPlus, UGen::PMinus] {
            let want = &a.mul(&r(g, &x), &r(UGen::Kappa, &y)) + &a.mul(&r(UGen::KappaInv, &x), &r(g, &y));
            prop_assert_eq!(r(g, &xy), want);
        }
        prop_assert_eq!(r(UGen::Kappa, &xy), a.mul(&r(UGen::Kappa, &x), &r(UGen::Kappa, &y)));
        prop_assert_eq!(r(UGen::H, &xy), &a.mul(&r(UGen::H, &x), &y) + &a.mul(&x, &r(UGen::H, &y)));
    }

    #[test]
    fn fractional_root_of_the_right_action(seed in any::<u64>()) {
        let d = duality();
        let (u, a) = (d.u(), d.a());
        let x = random_a_element(a, &mut ChaCha8Rng::seed_from_u64(seed), 3);
        for (small, big) in [(UGen::PPlus, UGen::TransPlus), (UGen::PMinus, UGen::TransMinus)] {
            let mut it = x.clone();
            for _ in 0..d.p() {
                it = d.right_act(&u.gen(small), &it);
            }
            prop_assert_eq!(it, d.right_act(&u.gen(big), &x));
        }
        let cas = u.casimir();
        for g in UGen::ALL {
            let l = d.right_act(&cas, &d.right_act(&u.gen(g), &x));
            prop_assert_eq!(l, d.right_act(&u.gen(g), &d.right_act(&cas, &x)));
        }
    }

    #[test]
    fn representation_is_a_homomorphism(p in odd_p(), num in -6i64..6, j in 0i64..7, x in word(&U_TOKENS, 4), y in word(&U_TOKENS, 4)) {
        let ctx = ctx_for(p);
        let u = UAlgebra::new(&ctx, -1);
        let rep = PiRep::for_algebra(&u);
        let v = BasisVector::new(BigRational::new(BigInt::from(num), BigInt::from(p)), j, p as u32);
        let (ux, uy) = (u.parse(&x).unwrap(), u.parse(&y).unwrap());
        let lhs = rep.apply(&u.mul(&ux, &uy), &v);
        prop_assert_eq!(lhs, rep.apply_vector(&ux, &rep.apply(&uy, &v)));
        for (small, big) in [(UGen::PPlus, UGen::TransPlus), (UGen::PMinus, UGen::TransMinus)] {
            let root = u.pow(&u.gen(small), p as u32);
            prop_assert_eq!(rep.apply(&root, &v), rep.apply(&u.gen(big), &v));
        }
    }

    #[test]
    fn omega_routes_agree_for_any_r(num in 1i64..9, den in 1i64..5, neg in any::<bool>(), p in odd_p(), s in 0u32..7) {
        let r = BigRational::new(BigInt::from(if neg { -num } else { num }), BigInt::from(den));
        let ctx = make_context(p, r).unwrap();
        let s = s % p as u32;
        for reading in [OmegaReading::SummationIndex, OmegaReading::Literal] {
            prop_assert_eq!(omega_poly_with(s, reading, &ctx).unwrap(), omega_poly_direct(s, reading, &ctx).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrant_parametrization_round_trips(zp in -5.0f64..5.0, zm in -5.0f64..5.0, lambda in -2.0f64..2.0) {
        prop_assume!(zp.abs() > 1e-6 && zm.abs() > 1e-6);
        let pt = quadrant_decompose(zp, zm).unwrap();
        let (a, b) = pt.reconstruct();
        prop_assert!((a - zp).abs() <= 1e-14 * zp.abs() && (b - zm).abs() <= 1e-14 * zm.abs());
        let again = QuadrantPoint::new(pt.quadrant, pt.rho, pt.beta, lambda).unwrap();
        prop_assert!((again.z_plus - zp).abs() <= 1e-14 * zp.abs());
    }

    #[test]
    fn strip_condition_is_enforced(a in 1.0f64..5.0, neg in any::<bool>(), q in 1u8..5) {
        let nu = if neg { -a } else { a };
        let params = KernelParams::new(3, 0, nu, 0.0, 1.0);
        let pt = QuadrantPoint::new(q, 1.0, 0.0, 0.0).unwrap();
        for mode in [EvalMode::Integral, EvalMode::Closed] {
            prop_assert!(matches!(kernel_eval(&params, &pt, mode), Err(Error::StripCondition(_))));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kernel_routes_agree(q in 1u8..5, rho in 0.3f64..3.0, beta in -1.5f64..1.5, a in -0.9f64..0.9, s in -2i64..3, r in 0.4f64..2.5) {
        let nu = a - s as f64 / 3.0;
        let params = KernelParams { precision: 1e-20, ..KernelParams::new(3, s, nu, 0.0, r) };
        let pt = QuadrantPoint::new(q, rho, beta, 0.0).unwrap();
        let i = kernel_eval(&params, &pt, EvalMode::Integral).unwrap();
        let c = kernel_eval(&params, &pt, EvalMode::Closed).unwrap();
        prop_assert!(i.rel_diff(&c) < 1e-19, "residual {}", i.rel_diff(&c));
    }

    #[test]
    fn bessel_identities(nu in -0.95f64..0.95, x in 0.2f64..6.0) {
        let prec = Prec(192);
        let (o, z) = (prec.float(nu), prec.float(x));
        let h1 = bessel_eval(prec, BesselKind::H1, &o, &z, 1e-40).unwrap();
        let h2 = bessel_eval(prec, BesselKind::H2, &o, &z, 1e-40).unwrap();
        prop_assert!(h1.value.conj().sub(&h2.value).abs().to_f64() < 1e-40 * h1.value.abs().to_f64());
        let km = bessel_eval(prec, BesselKind::K, &(o.clone() - 1u32), &z, 1e-40).unwrap().to_c64().re;
        let k0 = bessel_eval(prec, BesselKind::K, &o, &z, 1e-40).unwrap().to_c64().re;
        let kp = bessel_eval(prec, BesselKind::K, &(o.clone() + 1u32), &z, 1e-40).unwrap().to_c64().re;
        prop_assert!((kp - km - 2.0 * nu / x * k0).abs() < 1e-13 * kp.abs());
        if (nu - nu.round()).abs() > 1e-3 {
            let (series, _) = k_series(prec, &o, &z).unwrap();
            let quad = k_quadrature(prec, &o, &z, 1e-40).unwrap().to_c64().re;
            prop_assert!((series.to_f64() - quad).abs() < 1e-14 * quad.abs());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn cli_reports_are_reproducible(seed in 0u64..1000) {
        let seed = seed.to_string();
        let args = ["fracsusy", "hopf", "--p", "3", "--samples", "4", "--degree", "2", "--seed", seed.as_str()];
        let a = run_captured(args);
        let b = run_captured(args);
        prop_assert_eq!(a.code, 0);
        let strip = |s: &str| without_timestamp(serde_json::from_str(s).unwrap()).to_string();
        prop_assert_eq!(strip(&a.stdout), strip(&b.stdout));
    }
}

#[test]
fn q_numbers_below_p_are_invertible_and_real() {
    for p in [3, 5, 7] {
        let ctx = ctx_for(p);
        for n in 1..p {
            assert!(!q_number(n, &ctx).is_zero());
            let f = q_factorial(n as u32, &ctx);
            assert_eq!(f.conjugate(), f);
        }
        assert!(q_number(p, &ctx).is_zero());
    }
}

#[test]
fn kappa_conjugation_and_casimir_centrality() {
    for p in [3, 5, 7] {
        let u = UAlgebra::new(&ctx_for(p), -1);
        for n in 0..p {
            for (g, sign) in [("p+", 1), ("p-", -1)] {
                let l = u.parse(&format!("k {g}^{n} k^-1")).unwrap();
                let r = u.parse(&format!("{g}^{n}")).unwrap().scaled(&FieldScalar::q_pow(u.ctx(), sign * n));
                assert_eq!(l, r, "p={p} {g}^{n}");
            }
        }
        let c = u.casimir();
        for g in UGen::ALL {
            assert_eq!(u.mul(&c, &u.gen(g)), u.mul(&u.gen(g), &c));
        }
        for (small, big) in [(UGen::PPlus, UGen::TransPlus), (UGen::PMinus, UGen::TransMinus)] {
            let d = u.coproduct(&u.gen(small));
            let mut acc = d.clone();
            for _ in 1..p {
                acc = u.tensor_mul(&acc, &d);
            }
            assert_eq!(acc, u.coproduct(&u.gen(big)));
        }
    }
}
