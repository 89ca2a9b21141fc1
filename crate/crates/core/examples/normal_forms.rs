use fracsusy::afalg::AAlgebra;
use fracsusy::hopf::{HopfStructure, MonomialAlgebra};
use fracsusy::scalars::context;
use fracsusy::ufalg::UAlgebra;

fn main() -> fracsusy::Result<()> {
    let ctx = context(3, 1)?;
    let u = UAlgebra::new(&ctx, -1);
    for word in ["k p+", "p- p+", "p+^3", "H p+", "p+ p- p+ k^2"] {
        let x = u.parse(word)?;
        println!("U: {word:<14} = {}", u.display(&x));
    }
    let x = u.parse("p+")?;
    println!("U: Delta(p+) = {}", u.display_tensor(&u.coproduct(&x)));
    println!("U: S(p+)     = {}", u.display(&u.antipode(&x)));

    let a = AAlgebra::new(&ctx);
    for word in ["e- e+", "d e+", "e+^3", "z+ e+ d^2"] {
        let x = a.parse(word)?;
        println!("A: {word:<14} = {}", a.display(&x));
    }
    let e = a.parse("e+")?;
    println!("A: Delta(e+) = {}", a.display_tensor(&a.coproduct(&e)));
    Ok(())
}
