use fracsusy::afalg::AAlgebra;
use fracsusy::duality::Duality;
use fracsusy::hopf::{HopfStructure, MonomialAlgebra};
use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::{kernel_eval, omega_poly, quadrant_decompose, EvalMode, KernelParams, QuadrantPoint};
use fracsusy::pirep::{t_r_term, BasisVector, PiRep};
use fracsusy::scalars::{context, q_number, FieldScalar};
use fracsusy::ufalg::{UAlgebra, UGen};
use fracsusy::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn field_examples() {
    let ctx = context(3, 1).unwrap();
    assert_eq!(ctx.degree(), 4);
    let q = FieldScalar::q_pow(&ctx, 1);
    let q2 = FieldScalar::q_pow(&ctx, 2);
    assert_eq!(&q + &q2, FieldScalar::from_int(&ctx, -1));
    assert_eq!(&q * &q2, FieldScalar::one(&ctx));
    assert_eq!(q.conjugate(), q2);
    assert_eq!(FieldScalar::i(&ctx).conjugate(), -&FieldScalar::i(&ctx));
    assert_eq!(FieldScalar::chat(&ctx).conjugate(), FieldScalar::chat(&ctx));
    assert_eq!(q_number(2, &ctx), FieldScalar::from_int(&ctx, -1));
    assert!(q_number(3, &ctx).is_zero());
    assert!(matches!(context(4, 1), Err(Error::InvalidOrder(4))));

    let ctx2 = context(3, 2).unwrap();
    let c = FieldScalar::chat(&ctx2);
    assert_eq!(&c * &c.pow(2), FieldScalar::from_int(&ctx2, 2));

    let ctx5 = context(5, 1).unwrap();
    let lhs = &(&q_number(2, &ctx5) * &q_number(2, &ctx5)) - &(&q_number(1, &ctx5) + &q_number(3, &ctx5));
    assert!(lhs.is_zero());
}

#[test]
fn enveloping_algebra_examples() {
    let ctx = context(3, 1).unwrap();
    let printed = UAlgebra::new(&ctx, 1);
    let q = FieldScalar::q_pow(&ctx, 1);
    let third_i = FieldScalar::i(&ctx).scale(&rat(1, 3));
    assert_eq!(printed.parse("k p+").unwrap(), printed.parse("p+ k").unwrap().scaled(&q));
    assert_eq!(printed.parse("p+^3").unwrap(), printed.gen(UGen::TransPlus));
    let hp = printed.parse("H p+").unwrap();
    let want = &printed.parse("p+ H").unwrap() - &printed.parse("p+").unwrap().scaled(&third_i);
    assert_eq!(hp, want);
    assert_eq!(printed.parse("p+ p-").unwrap(), printed.parse("p- p+").unwrap());
    assert_eq!(printed.parse("k k^2").unwrap(), printed.one());
    let x = printed.parse("p+").unwrap();
    let y = printed.parse("P+").unwrap();
    let s = &x + &y;
    let h = printed.gen(UGen::H);
    let comm = &printed.mul(&s, &h) - &printed.mul(&h, &s);
    let want = &x.scaled(&third_i) + &y.scaled(&FieldScalar::i(&ctx));
    assert_eq!(comm, want);
    let k = printed.gen(UGen::Kappa);
    assert_eq!(printed.coproduct(&k), fracsusy::duality::tensor2(&k, &k));
    let pk = printed.parse("p+ k").unwrap();
    assert_eq!(printed.star(&pk), printed.parse("k p+").unwrap());
}

#[test]
fn function_algebra_examples() {
    let ctx = context(3, 1).unwrap();
    let a = AAlgebra::new(&ctx);
    let q = |k| FieldScalar::q_pow(&ctx, k);
    assert_eq!(a.parse("e- e+").unwrap(), a.parse("e+ e-").unwrap().scaled(&q(2)));
    assert_eq!(a.parse("d e+").unwrap(), a.parse("e+ d").unwrap().scaled(&q(-2)));
    assert!(a.parse("e+^3").unwrap().is_zero());
    assert_eq!(a.parse("exp(1/3L) exp(-1/3L)").unwrap(), a.one());
    let x = a.parse("e+ e-").unwrap();
    assert_eq!(a.mul(&x, &x), a.parse("e+^2 e-^2").unwrap().scaled(&q(2)));
    let z0 = a.zeta_projector(0);
    assert_eq!(a.mul(&z0, &a.parse("d").unwrap()), z0);
    let third = FieldScalar::from_ratio(&ctx, 1, 3);
    let sum = &(&a.one() + &a.parse("d").unwrap()) + &a.parse("d^2").unwrap();
    assert_eq!(z0, sum.scaled(&third));
    let z1 = a.zeta_projector(1);
    assert_eq!(a.mul(&a.parse("d").unwrap(), &z1), z1.scaled(&q(1)));
    let d = a.parse("d").unwrap();
    assert_eq!(a.coproduct(&d), fracsusy::duality::tensor2(&d, &d));
    let ep = a.parse("e+").unwrap();
    assert_eq!(a.antipode(&ep), a.parse("d^2 exp(-1/3L) e+").unwrap().scaled(&FieldScalar::from_int(&ctx, -1)));
    assert_eq!(a.star(&x), a.parse("e- e+").unwrap());
    assert!(a.tensor_pow(&a.coproduct(&ep), 3, 2).is_zero());
    let zp = a.parse("z+").unwrap();
    assert!(a.antipode_convolution(&zp, 0).is_zero());
}

#[test]
fn duality_examples() {
    let ctx = context(3, 1).unwrap();
    let d = Duality::new(&ctx).unwrap();
    let (u, a) = (d.u(), d.a());
    let i = FieldScalar::i(&ctx);
    let ez1 = a.mul(&a.parse("e+").unwrap(), &a.zeta_projector(1));
    assert_eq!(d.pair(&u.parse("p+").unwrap(), &ez1), &i * &d.sqrt_q_pow(1));
    assert_eq!(d.pair(&u.one(), &a.one()), FieldScalar::one(&ctx));
    assert_eq!(d.pair(&u.parse("k").unwrap(), &a.parse("d").unwrap()), FieldScalar::q_pow(&ctx, 1));

    let r = |phi: &str, x: &str| d.right_act(&u.parse(phi).unwrap(), &a.parse(x).unwrap());
    assert_eq!(r("k", "e+"), a.parse("e+").unwrap().scaled(&FieldScalar::q_pow(&ctx, 1)));
    assert_eq!(r("P+", "z+"), a.one().scaled(&i));
    assert!(r("H", "z+ z-").is_zero());
    assert_eq!(r("P+", "z+^2"), a.parse("z+").unwrap().scaled(&FieldScalar::from_int(&ctx, 2)).scaled(&i));
    let l = |phi: &str, x: &str| d.left_act(&u.parse(phi).unwrap(), &a.parse(x).unwrap());
    assert!(l("H", "e+ z+").is_zero());
    assert_eq!(l("k", "e+ e-"), a.parse("e+ e-").unwrap());
    assert_eq!(l("k", "d"), a.parse("d").unwrap().scaled(&FieldScalar::q_pow(&ctx, 1)));

    let top = a.parse("e+^2 e-^2").unwrap();
    assert_eq!(d.grassmann_integral(&top).unwrap(), FieldScalar::q_pow(&ctx, -1));
    assert!(d.grassmann_integral(&a.parse("e+").unwrap()).unwrap().is_zero());
    assert_eq!(d.gaussian_integral(0, 0, 1), FieldScalar::pi(&ctx));
}

#[test]
fn representation_examples() {
    let ctx = context(3, 2).unwrap();
    let rep = PiRep::printed(&ctx);
    let q = FieldScalar::q_pow(&ctx, 1);
    let v01 = BasisVector::new(rat(0, 1), 1, 3);
    assert_eq!(rep.apply_gen(UGen::Kappa, &v01), (q.clone(), v01.clone()));
    let v = BasisVector::new(rat(1, 3), 0, 3);
    let (c, w) = rep.apply_gen(UGen::H, &v);
    assert_eq!((c, w), (-&FieldScalar::i(&ctx).scale(&rat(1, 3)), v.clone()));
    let mut coeff = FieldScalar::one(&ctx);
    let mut cur = BasisVector::origin();
    for _ in 0..3 {
        let (c, w) = rep.apply_gen(UGen::PPlus, &cur);
        coeff = &coeff * &c;
        cur = w;
    }
    assert_eq!((coeff.clone(), cur.clone()), (FieldScalar::from_int(&ctx, -2), BasisVector::new(rat(1, 1), 0, 3)));
    assert_eq!(rep.apply_gen(UGen::TransPlus, &BasisVector::origin()), (coeff, cur));

    let d = Duality::new(&ctx).unwrap();
    let a = d.a();
    let t = t_r_term(&d, [0; 6], &BasisVector::origin()).unwrap();
    assert_eq!(a.to_zeta_basis(&t.coefficient.scaled(&t.scale)), a.to_zeta_basis(&a.zeta_projector(0)));
    assert_eq!(t.vector, BasisVector::origin());
    for j in 0..3 {
        let v = BasisVector::new(rat(0, 1), j, 3);
        let t = t_r_term(&d, [0, 0, 1, 0, 0, 0], &v).unwrap();
        assert_eq!(t.coefficient.scaled(&t.scale), a.zeta_projector(1).scaled(&FieldScalar::q_pow(&ctx, j)));
        assert_eq!(t.vector, v);
    }
    let t = t_r_term(&d, [1, 0, 0, 0, 0, 0], &BasisVector::origin()).unwrap();
    let pairing = &FieldScalar::i(&ctx) * &d.sqrt_q_pow(1);
    let pi_coeff = rep_for(&d).apply_gen(UGen::PPlus, &BasisVector::origin()).0;
    let want = a.mul(&a.parse("e+").unwrap(), &a.zeta_projector(1)).scaled(&pi_coeff.checked_div(&pairing).unwrap());
    assert_eq!(t.coefficient.scaled(&t.scale), want);
    assert_eq!(t.vector, BasisVector::new(rat(1, 3), 1, 3));
}

fn rep_for(d: &Duality) -> PiRep {
    PiRep::for_algebra(d.u())
}

#[test]
fn polynomial_and_kernel_examples() {
    let ctx = context(3, 1).unwrap();
    let chat = FieldScalar::chat(&ctx);
    assert_eq!(omega_poly(2, &ctx).unwrap().coefficients, vec![&chat * &chat]);
    for s in 0..3 {
        assert_eq!(omega_poly(s, &ctx).unwrap().coefficients.len(), 3 - s as usize);
    }

    assert_eq!(quadrant_decompose(1.0, 1.0).unwrap().quadrant, 1);
    assert_eq!(quadrant_decompose(1.0, -2.0).unwrap().quadrant, 2);
    assert_eq!(quadrant_decompose(-1.0, -1.0).unwrap().quadrant, 3);
    assert_eq!(quadrant_decompose(-0.5, 2.0).unwrap().quadrant, 4);
    assert!(matches!(quadrant_decompose(0.0, 1.0), Err(Error::LightCone)));

    let params = KernelParams { precision: 1e-25, ..KernelParams::new(3, 0, 0.0, 0.0, 1.0) };
    let pt = QuadrantPoint::new(3, 1.0, 0.0, 0.0).unwrap();
    let closed = kernel_eval(&params, &pt, EvalMode::Closed).unwrap().to_c64();
    let integral = kernel_eval(&params, &pt, EvalMode::Integral).unwrap().to_c64();
    // -H2_0(1)/2 = -(J_0(1) - i Y_0(1))/2
    let (j0, y0) = (0.765_197_686_557_966_6, 0.088_256_964_215_676_96);
    assert!((closed.re + j0 / 2.0).abs() < 1e-15 && (closed.im - y0 / 2.0).abs() < 1e-15);
    assert!((closed - integral).norm() < 1e-20);
    assert_eq!(Prec::default().0, 256);
}
