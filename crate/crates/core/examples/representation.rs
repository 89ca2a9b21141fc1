use fracsusy::duality::Duality;
use fracsusy::pirep::suite::{gram_signature, pi_axiom_suite};
use fracsusy::pirep::{t_r_term, BasisVector, PiRep, Window};
use fracsusy::scalars::context;
use fracsusy::ufalg::{UAlgebra, UGen};
use num_rational::BigRational;

fn main() -> fracsusy::Result<()> {
    let ctx = context(3, 2)?;
    let u = UAlgebra::new(&ctx, -1);
    let rep = PiRep::for_algebra(&u);
    let v = BasisVector::new(BigRational::new(1.into(), 3.into()), 0, 3);
    for g in UGen::ALL {
        let (c, w) = rep.apply_gen(g, &v);
        println!("pi({}) {v} = ({}) {w}", g.token(), c.canonical());
    }
    let window = Window::parse("-1:1:1/3,jall", 3)?;
    let report = pi_axiom_suite(&u, &window)?;
    println!("pi suite: {}/{} checks pass on {} vectors", report.total - report.failed, report.total, window.len());
    for p in [3, 5, 7] {
        let ctx = context(p, 1)?;
        let s = gram_signature(&ctx);
        println!("p = {p}: signature ({}, {}, {})", s.n_plus, s.n_minus, s.n_zero);
    }
    let d = Duality::new(&ctx)?;
    let t = t_r_term(&d, [1, 0, 0, 1, 0, 0], &BasisVector::origin())?;
    println!("T_r term {}: scale {} vector {}", t.phi, t.scale.canonical(), t.vector);
    Ok(())
}
