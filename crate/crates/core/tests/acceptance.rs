use std::process::ExitCode;
use std::time::Instant;

use fracsusy::afalg::{a_axiom_suite, AAlgebra};
use fracsusy::cli::{run_captured, without_timestamp};
use fracsusy::duality::integral::integral_suite;
use fracsusy::duality::reo::{reo_conformance, right_action_suite};
use fracsusy::duality::{duality_suite, Duality};
use fracsusy::kernels::bessel::bessel_self_tests;
use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::suite::quadrant_tolerance;
use fracsusy::kernels::{d_ladder_suite, discriminate_reading, kernel_grid_suite, KernelGrid, KernelOptions, LadderOptions};
use fracsusy::pirep::suite::{gram_signature, pi_axiom_suite};
use fracsusy::pirep::Window;
use fracsusy::report::NumericReport;
use fracsusy::scalars::context;
use fracsusy::ufalg::{u_axiom_suite, UAlgebra};

/// Criteria that cannot pass as stated; they are still run and printed.
const KNOWN_UNATTAINABLE: &[u32] = &[10];

struct Line {
    id: u32,
    passed: bool,
    detail: String,
}

fn passes(reports: &[&NumericReport], prefix: &str) -> (usize, usize) {
    let mut total = 0;
    let mut failed = 0;
    for r in reports {
        for c in r.checks.iter().filter(|c| c.check.starts_with(prefix) && !c.informational) {
            total += 1;
            failed += usize::from(!c.passed);
        }
    }
    (total, failed)
}

fn first_failure(reports: &[&NumericReport]) -> String {
    reports
        .iter()
        .flat_map(|r| r.failures())
        .next()
        .map(|c| format!("; first failure {}", c.check))
        .unwrap_or_default()
}

fn main() -> ExitCode {
    let all = Instant::now();
    let mut lines: Vec<Line> = Vec::new();
    let mut push = |id: u32, passed: bool, detail: String| {
        let status = if passed { "PASS" } else { "FAIL" };
        let known = if !passed && KNOWN_UNATTAINABLE.contains(&id) { " (known)" } else { "" };
        println!("criterion {id:>2}: {status}{known} | {detail}");
        lines.push(Line { id, passed, detail });
    };

    let start = Instant::now();
    let mut axiom_reports = Vec::new();
    for p in [3, 5, 7] {
        let ctx = context(p, 2).expect("context");
        axiom_reports.push(u_axiom_suite(&UAlgebra::new(&ctx, -1), 3, 200, 1).expect("U suite"));
        axiom_reports.push(a_axiom_suite(&AAlgebra::new(&ctx), 3, 200, 1).expect("A suite"));
    }
    let refs: Vec<&NumericReport> = axiom_reports.iter().collect();
    let total: usize = refs.iter().map(|r| r.total).sum();
    let failed: usize = refs.iter().map(|r| r.failed).sum();
    let t1 = start.elapsed();
    push(
        1,
        failed == 0 && t1.as_secs() < 120,
        format!("{} of {total} exact checks, p in {{3,5,7}}, 200 random elements per algebra, {t1:.1?}{}", total - failed, first_failure(&refs)),
    );

    let start = Instant::now();
    let mut dualities = Vec::new();
    let mut duality_reports = Vec::new();
    for p in [3, 5] {
        let d = Duality::new(&context(p, 1).expect("context")).expect("duality");
        duality_reports.push(duality_suite(&d, 2, 20, 7).expect("duality suite"));
        dualities.push(d);
    }
    let refs: Vec<&NumericReport> = duality_reports.iter().collect();
    let total: usize = refs.iter().map(|r| r.total).sum();
    let failed: usize = refs.iter().map(|r| r.failed).sum();
    push(
        2,
        failed == 0,
        format!("{} of {total} exact pairing checks, exponents <= 2, p in {{3,5}}, {:.1?}{}", total - failed, start.elapsed(), first_failure(&refs)),
    );

    let start = Instant::now();
    let axioms: Vec<&NumericReport> = axiom_reports.iter().collect();
    let (nil_total, nil_failed) = passes(&axioms, "relation_nilpotent_");
    let mut pi_reports = Vec::new();
    for p in [3u32, 5] {
        let ctx = context(p as i64, 2).expect("context");
        let window = Window::parse(&format!("-2:2:1/{p},jall"), p).expect("window");
        pi_reports.push(pi_axiom_suite(&UAlgebra::new(&ctx, -1), &window).expect("pi suite"));
    }
    let pis: Vec<&NumericReport> = pi_reports.iter().collect();
    let (col_total, col_failed) = passes(&pis, "pi_root_collapse");
    let mut action_reports = Vec::new();
    for d in &dualities {
        action_reports.push(right_action_suite(d, 4, 10, 3).expect("right action suite"));
    }
    let acts: Vec<&NumericReport> = action_reports.iter().collect();
    let (root_total, root_failed) = passes(&acts, "fractional_root");
    push(
        3,
        nil_failed == 0 && nil_total == 6 && col_failed == 0 && col_total == 4 && root_failed == 0 && root_total == 4,
        format!(
            "Delta(e+-)^p = 0 {}/{nil_total}; pi root collapse {}/{col_total} on >= 3p columns; R(p+-)^p = R(P+-) on degree <= 4 {}/{root_total}; {:.1?}",
            nil_total - nil_failed,
            col_total - col_failed,
            root_total - root_failed,
            start.elapsed()
        ),
    );

    let (z_total, z_failed) = passes(&axioms, "zeta_");
    push(4, z_failed == 0 && z_total > 0, format!("{} of {z_total} projector identities exact, p in {{3,5,7}}", z_total - z_failed));

    let mut sig_ok = true;
    let mut sig_detail = Vec::new();
    for p in [3u32, 5, 7] {
        let s = gram_signature(&context(p as i64, 1).expect("context"));
        sig_ok &= (s.n_plus, s.n_minus, s.n_zero) == (p.div_ceil(2) as usize, ((p - 1) / 2) as usize, 0);
        sig_detail.push(format!("p={p}: ({}, {}, {})", s.n_plus, s.n_minus, s.n_zero));
    }
    push(5, sig_ok, sig_detail.join(", "));

    let start = Instant::now();
    let mut integral_reports = Vec::new();
    for d in &dualities {
        integral_reports.push(integral_suite(d, 2).expect("integral suite"));
    }
    let ints: Vec<&NumericReport> = integral_reports.iter().collect();
    let failed: usize = ints.iter().map(|r| r.failed).sum();
    let total: usize = ints.iter().map(|r| r.total).sum();
    let recorded: Vec<String> = ints
        .iter()
        .flat_map(|r| r.checks.iter().filter(|c| c.informational && c.check.contains("star_representation")))
        .map(|c| format!("{}={}", c.check, c.passed))
        .collect();
    push(
        6,
        failed == 0 && passes(&ints, "integral_normalization").0 == 2 && passes(&ints, "integral_invariance_exactly_one").0 == 2,
        format!("{} of {total} exact checks, p in {{3,5}}; recorded: {}; {:.1?}{}", total - failed, recorded.join(", "), start.elapsed(), first_failure(&ints)),
    );

    let start = Instant::now();
    let mut reo_reports = Vec::new();
    for d in &dualities {
        reo_reports.push(reo_conformance(d, 4));
    }
    let reos: Vec<&NumericReport> = reo_reports.iter().collect();
    let failed: usize = reos.iter().map(|r| r.failed).sum();
    let ratios: Vec<String> = reos
        .iter()
        .flat_map(|r| r.conventions.iter().filter(|(k, _)| k.starts_with("reo_ratio")))
        .map(|(k, v)| format!("{k} = {v}"))
        .collect();
    push(
        7,
        failed == 0 && passes(&reos, "classical_exact").0 > 0 && passes(&reos, "supercharge_ratio_constant").0 > 0,
        format!("classical exact, p+- ratio constant, p in {{3,5}}; logged: {}; {:.1?}{}", ratios.join(", "), start.elapsed(), first_failure(&reos)),
    );

    let start = Instant::now();
    let opts = KernelOptions { prec: Prec(256), ..KernelOptions::default() };
    let (grid_report, rows) = kernel_grid_suite(3, &KernelGrid::default(), &[1, 2, 3, 4], 1e-20, &opts).expect("kernel grid");
    let mut worst = [0.0f64; 4];
    for r in &rows {
        worst[usize::from(r.quadrant - 1)] = worst[usize::from(r.quadrant - 1)].max(r.residual);
    }
    let within = (1..=4u8).all(|q| worst[usize::from(q - 1)] < quadrant_tolerance(q));
    let t8 = start.elapsed();
    push(
        8,
        within && rows.len() == 324 && t8.as_secs() < 300 && grid_report.passed,
        format!("{} points at 256 bits, max relative residual per quadrant {:.1e} {:.1e} {:.1e} {:.1e}, {t8:.1?}", rows.len(), worst[0], worst[1], worst[2], worst[3]),
    );

    let b = bessel_self_tests(Prec(256), 1e-30).expect("bessel self tests");
    let crit = [("K_half_closed_form", 1e-10), ("K_recurrence", 1e-9), ("H_wronskian", 1e-8), ("H1_conj_H2", 1e-10)];
    let mut ok = b.passed;
    let mut parts = Vec::new();
    for (name, tol) in crit {
        let r = b.max_residual(name);
        ok &= r < tol && passes(&[&b], name).0 > 0;
        parts.push(format!("{name} {r:.1e} < {tol:.0e}"));
    }
    push(9, ok, parts.join(", "));

    let start = Instant::now();
    let mut printed_ok = true;
    let mut counted_ok = true;
    let mut worst_printed = 0.0f64;
    let mut worst_counted = 0.0f64;
    let mut printed_failures = std::collections::BTreeSet::new();
    let mut printed_passes = std::collections::BTreeSet::new();
    let mut readings = Vec::new();
    for r in [1, 2] {
        let d = Duality::new(&context(3, r).expect("context")).expect("duality");
        for n in 0..3 {
            let opts = LadderOptions::new(Prec(256));
            let rep = d_ladder_suite(&d, n, 0.1, &opts).expect("ladder suite");
            for c in rep.checks.iter().filter(|c| !c.informational) {
                if c.check.starts_with("ladder_") {
                    printed_ok &= c.passed;
                    worst_printed = worst_printed.max(c.residual);
                    if c.passed {
                        printed_passes.insert(c.check.clone());
                    } else {
                        printed_failures.insert(c.check.clone());
                    }
                } else if c.check.starts_with("counted_") {
                    counted_ok &= c.passed;
                    worst_counted = worst_counted.max(c.residual);
                }
            }
            if r == 1 && n == 1 {
                readings = discriminate_reading(&d, n, 0.1, &opts).expect("discrimination");
            }
        }
    }
    let reading_text: Vec<String> = readings.iter().map(|(rd, res)| format!("{rd:?} {res:.1e}")).collect();
    let discriminated = readings.len() == 2 && readings[0].1 < 1e-3 && readings[1].1 > 1e-1;
    push(
        10,
        printed_ok && counted_ok && discriminated,
        format!(
            "printed relations fail: {:?} (worst residual {worst_printed:.2}); always holding: {:?}; counted relations pass={counted_ok} (worst {worst_counted:.1e}); omega reading residuals: {}; {:.1?}",
            printed_failures,
            printed_passes.difference(&printed_failures).collect::<Vec<_>>(),
            reading_text.join(", "),
            start.elapsed()
        ),
    );

    let commands: [&[&str]; 5] = [
        &["hopf", "--p", "3", "--samples", "20", "--seed", "5"],
        &["duality-suite", "--p", "3", "--bound", "1", "--seed", "2"],
        &["signature", "--p", "7"],
        &["kernel-verify", "--grid", "rho=1;beta=0;a=0.3", "--format", "json"],
        &["ladder-suite", "--n", "1", "--r", "2"],
    ];
    let mut same = true;
    for cmd in commands {
        let a = run_captured(std::iter::once("fracsusy").chain(cmd.iter().copied()));
        let b = run_captured(std::iter::once("fracsusy").chain(cmd.iter().copied()));
        let strip = |s: &str| serde_json::from_str(s).map(without_timestamp).map(|v| v.to_string()).unwrap_or_default();
        same &= a.code == b.code && !a.stdout.is_empty() && strip(&a.stdout) == strip(&b.stdout);
    }
    let u = UAlgebra::new(&context(5, 2).expect("context"), -1);
    same &= u_axiom_suite(&u, 3, 50, 9).expect("U").to_json() == u_axiom_suite(&u, 3, 50, 9).expect("U").to_json();
    push(11, same, format!("{} cli reports and one library report byte-identical across reruns", commands.len()));

    let unexpected: Vec<u32> = lines.iter().filter(|l| !l.passed && !KNOWN_UNATTAINABLE.contains(&l.id)).map(|l| l.id).collect();
    let passed = lines.iter().filter(|l| l.passed).count();
    println!("{passed} of {} criteria pass in {:.1?}; known unattainable: {KNOWN_UNATTAINABLE:?}", lines.len(), all.elapsed());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for l in lines.iter().filter(|l| unexpected.contains(&l.id)) {
            eprintln!("unexpected failure in criterion {}: {}", l.id, l.detail);
        }
        ExitCode::FAILURE
    }
}
