use fracsusy::duality::Duality;
use fracsusy::hopf::MonomialAlgebra;
use fracsusy::scalars::context;

fn main() -> fracsusy::Result<()> {
    let ctx = context(3, 1)?;
    let d = Duality::new(&ctx)?;
    println!("convention: {:?}", d.convention());
    for (x, a) in [("p+", "e+"), ("p+^2", "e+^2"), ("k", "d"), ("P+", "z+"), ("H", "L"), ("p+ p-", "e+ e-")] {
        let v = d.pair(&d.u().parse(x)?, &d.a().parse(a)?);
        println!("<{x}, {a}> = {}", v.canonical());
    }
    for (phi, a) in [("p+", "e+ z+"), ("P+", "z+^2"), ("H", "z+ z-"), ("k", "e+ d")] {
        let y = d.right_act(&d.u().parse(phi)?, &d.a().parse(a)?);
        println!("R({phi}) {a} = {}", d.a().display(&y));
    }
    Ok(())
}
