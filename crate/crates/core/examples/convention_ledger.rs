use std::time::Instant;

use fracsusy::duality::integral::integral_suite;
use fracsusy::duality::reo::{reo_conformance, right_action_suite};
use fracsusy::duality::{duality_suite, Duality};
use fracsusy::scalars::context;

fn main() -> fracsusy::Result<()> {
    let p: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let bound: u32 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ctx = context(p, 1)?;
    let start = Instant::now();
    let d = Duality::new(&ctx)?;
    for row in d.scan() {
        println!("{:?} sqrt_q_sign={:+} h_sign={:+}: {} of {} checks fail", row.convention.orientation, row.convention.sqrt_q_sign, row.convention.h_sign, row.failures, row.checks);
    }
    println!("scan took {:.1?}", start.elapsed());
    let suites: Vec<(&str, Box<dyn Fn() -> fracsusy::Result<fracsusy::report::NumericReport>>)> = vec![
        ("reo", Box::new(|| Ok(reo_conformance(&d, 4)))),
        ("integral", Box::new(|| integral_suite(&d, 2))),
        ("right action", Box::new(|| right_action_suite(&d, 4, 20, 7))),
        ("duality", Box::new(|| duality_suite(&d, bound, 20, 7))),
    ];
    for (name, run) in &suites {
        let r = run()?;
        println!("{name}: {}/{} passed ({:.1?})", r.total - r.failed, r.total, start.elapsed());
        for c in r.failures().take(4) {
            println!("  FAIL {}: {} | {}", c.check, c.lhs, c.rhs);
        }
        for c in r.checks.iter().filter(|c| c.informational) {
            println!("  info {} holds={} {} {}", c.check, c.passed, c.lhs, c.rhs);
        }
        for (k, v) in &r.conventions {
            println!("  convention {k} = {v}");
        }
        for n in &r.notes {
            if !n.starts_with("scan") { println!("  note {n}"); }
        }
    }
    Ok(())
}
