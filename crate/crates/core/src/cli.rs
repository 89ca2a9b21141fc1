//! Subcommand front end. [`run`] returns the process exit code: 0 when every
//! check passes, 1 on a verification failure, 2 on a usage error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::afalg::{a_axiom_suite, AAlgebra};
use crate::duality::integral::integral_suite;
use crate::duality::reo::{reo_conformance, right_action_suite};
use crate::duality::{duality_suite, Duality, PairingConvention};
use crate::error::{Error, Result};
use crate::hopf::MonomialAlgebra;
use crate::kernels::mp::Prec;
use crate::kernels::omega::omega_poly_with;
use crate::kernels::{
    d_ladder_suite, discriminate_reading, kernel_eval_detailed, kernel_grid_suite, rows_to_csv, ClosedTable, EvalMode,
    KernelGrid, KernelOptions, KernelParams, LadderOptions, OmegaReading, QuadrantPoint,
};
use crate::pirep::suite::{gram_signature, pi_axiom_suite};
use crate::pirep::{t_r_term, BasisVector, Window};
use crate::report::NumericReport;
use crate::scalars::{make_context, parse_rational, FieldContext, FieldScalar};
use crate::ufalg::{u_axiom_suite, UAlgebra};

/// Bumped whenever a frozen convention changes meaning.
pub const CONVENTIONS_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "fracsusy", version, about = "Fractional supersymmetry Hopf algebras, duality and kernels")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Odd order of the root of unity.
    #[arg(long, global = true, default_value_t = 3)]
    pub p: i64,
    /// Representation parameter, a nonzero rational such as `2` or `-1/3`.
    #[arg(long, global = true, default_value = "1")]
    pub r: String,
    /// Working precision in bits for the kernel numerics.
    #[arg(long, global = true, default_value_t = 128)]
    pub prec: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Representation window, `mu0:mu1:step,jall` (see `pi-suite`).
    #[arg(long, global = true)]
    pub window: Option<String>,
    /// Kernel grid, `default` or `r=..;rho=..;beta=..;a=..`. Without `r=` the
    /// grid uses `--r` alone.
    #[arg(long, global = true)]
    pub grid: Option<String>,
    /// Quadrant `1..4`, a list such as `1,3`, or `all`.
    #[arg(long, global = true)]
    pub quad: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraChoice {
    U,
    A,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReadingChoice {
    Summation,
    Literal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeChoice {
    Integral,
    Closed,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableChoice {
    Derived,
    Printed,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Normal form of a word in U, e.g. `"k p+"`.
    NormalizeU { expr: String },
    /// Normal form of a word in A, e.g. `"e+ d"`.
    NormalizeA { expr: String },
    /// Product of two expressions.
    Mul {
        #[arg(long, value_enum, default_value_t = AlgebraChoice::U)]
        algebra: AlgebraChoice,
        x: String,
        y: String,
    },
    /// Hopf axiom suites on generators and seeded random elements.
    Hopf {
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Both)]
        algebra: AlgebraChoice,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// The pairing `<x, a>`.
    Pair { x: String, a: String },
    /// Hopf pairing axioms on basis windows plus the invariant integral.
    DualitySuite {
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Right action `R(phi) a`.
    RightAct { phi: String, a: String },
    /// Closed single-factor right action against the duality-induced one.
    ReoConformance {
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Relations, adjoints and irreducibility of the representation on `--window`.
    PiSuite,
    /// Signature of the Gram form.
    Signature,
    /// One term of the corepresentation.
    Trterm {
        /// `n,m,k,t,s,l`.
        #[arg(long)]
        indices: String,
        /// `mu,j`.
        #[arg(long, default_value = "0,0")]
        vector: String,
    },
    /// Coefficients of the polynomial `omega_s`.
    Omega {
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = ReadingChoice::Summation)]
        reading: ReadingChoice,
    },
    /// `K_s` at one point, by integral, closed form, or both.
    KernelEval {
        #[arg(long, default_value_t = 0)]
        s: i64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_enum, default_value_t = ModeChoice::Both)]
        mode: ModeChoice,
        #[arg(long, value_enum, default_value_t = TableChoice::Derived)]
        table: TableChoice,
        /// Target relative error.
        #[arg(long, default_value_t = 1e-30)]
        precision: f64,
    },
    /// Two-route comparison of `K_s` on `--grid` in `--quad`.
    KernelVerify {
        #[arg(long, default_value_t = 1e-20)]
        precision: f64,
    },
    /// Right-action ladder of the functions `D_n`.
    LadderSuite {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 1e-4)]
        step: f64,
    },
    /// The convention ledger.
    Ledger,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::NormalizeU { .. } => "normalize-u",
            Command::NormalizeA { .. } => "normalize-a",
            Command::Mul { .. } => "mul",
            Command::Hopf { .. } => "hopf",
            Command::Pair { .. } => "pair",
            Command::DualitySuite { .. } => "duality-suite",
            Command::RightAct { .. } => "right-act",
            Command::ReoConformance { .. } => "reo-conformance",
            Command::PiSuite => "pi-suite",
            Command::Signature => "signature",
            Command::Trterm { .. } => "trterm",
            Command::Omega { .. } => "omega",
            Command::KernelEval { .. } => "kernel-eval",
            Command::KernelVerify { .. } => "kernel-verify",
            Command::LadderSuite { .. } => "ladder-suite",
            Command::Ledger => "ledger",
        }
    }

    fn default_format(&self) -> Format {
        match self {
            Command::NormalizeU { .. }
            | Command::NormalizeA { .. }
            | Command::Mul { .. }
            | Command::Pair { .. }
            | Command::RightAct { .. } => Format::Text,
            Command::KernelVerify { .. } => Format::Csv,
            _ => Format::Json,
        }
    }
}

/// Validated global configuration.
#[derive(Clone, Debug)]
pub struct Config {
    pub p: u32,
    pub r: BigRational,
    pub prec: u32,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub window: Option<String>,
    pub grid: Option<String>,
    pub quad: Option<String>,
    ctx: Arc<FieldContext>,
}

impl Config {
    pub fn from_args(args: &ConfigArgs, command: &Command) -> Result<Self> {
        let r = parse_rational(&args.r)?;
        let ctx = make_context(args.p, r.clone())?;
        if !(64..=4096).contains(&args.prec) {
            return Err(Error::Usage(format!("--prec {} outside 64..=4096 bits", args.prec)));
        }
        Ok(Config {
            p: ctx.p(),
            r,
            prec: args.prec,
            seed: args.seed,
            out: args.out.clone(),
            format: args.format.unwrap_or_else(|| command.default_format()),
            window: args.window.clone(),
            grid: args.grid.clone(),
            quad: args.quad.clone(),
            ctx,
        })
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    fn r_f64(&self) -> f64 {
        self.r.to_f64().unwrap_or(f64::NAN)
    }

    fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "r": self.r.to_string(),
            "prec": self.prec,
            "seed": self.seed,
            "format": format!("{:?}", self.format).to_lowercase(),
            "window": self.window,
            "grid": self.grid,
            "quad": self.quad,
        })
    }
}

/// Result of one command before rendering.
#[derive(Clone, Debug)]
pub struct Artifact {
    pub passed: bool,
    pub result: Value,
    pub text: String,
    pub csv: Option<String>,
    pub ledger: BTreeMap<String, String>,
}

impl Artifact {
    fn value(result: Value, text: String, ledger: BTreeMap<String, String>) -> Self {
        Artifact { passed: true, result, text, csv: None, ledger }
    }

    fn reports(reports: Vec<NumericReport>, ledger: BTreeMap<String, String>) -> Self {
        let passed = reports.iter().all(|r| r.passed);
        let mut text = String::new();
        for r in &reports {
            text.push_str(&format!("{}: {}/{} checks passed\n", r.suite, r.total - r.failed, r.total));
            for c in r.failures() {
                text.push_str(&format!("  FAIL {} (residual {:e}) {} | {}\n", c.check, c.residual, c.lhs, c.rhs));
            }
        }
        let result = json!({ "reports": reports });
        Artifact { passed, result, text, csv: None, ledger }
    }
}

/// Conventions in force, independent of the command.
pub fn ledger(conv: PairingConvention, p: u32, scan: Option<&Duality>) -> BTreeMap<String, String> {
    let mut out: BTreeMap<String, String> = conv.describe(p).into_iter().collect();
    let fixed = [
        ("counit_lambda", "0"),
        ("antipode_A", "S(e+-) = -d^-+1 exp(-+lambda/p) e+-, S(z+-) = -exp(-+lambda) z+-"),
        ("delta_index", "k + n + m read mod p"),
        ("pi(H)", if conv.h_sign == 1 { "-i d/dx" } else { "+i d/dx" }),
        ("pi(p+-) coefficient", "-chat, chat the real p-th root of r"),
        ("kernel_closed_table", "derived: Q1 H1, Q2 K, Q3 -H2, Q4 K"),
        ("kernel_contour", "t + i theta(t), theta = pi/4"),
        ("omega_denominator", "[m]! [m+s]!"),
        ("ladder_wrap", "D_(n+p) = D_n"),
    ];
    for (k, v) in fixed {
        out.insert(k.into(), v.into());
    }
    out.insert("scan".into(), if scan.is_some() { "verified" } else { "frozen" }.into());
    if let Some(d) = scan {
        for row in d.scan() {
            out.insert(
                format!("scan[{:?},{:+},{:+}]", row.convention.orientation, row.convention.sqrt_q_sign, row.convention.h_sign),
                format!("{}/{} fail", row.failures, row.checks),
            );
        }
    }
    out
}

fn frozen_ledger(p: u32) -> BTreeMap<String, String> {
    ledger(PairingConvention::FROZEN, p, None)
}

fn scanned(cfg: &Config) -> Result<(Duality, BTreeMap<String, String>)> {
    let d = Duality::new(cfg.ctx())?;
    let l = ledger(d.convention(), cfg.p, Some(&d));
    Ok((d, l))
}

fn quadrants(spec: Option<&str>, default: &[u8]) -> Result<Vec<u8>> {
    match spec.map(str::trim) {
        None => Ok(default.to_vec()),
        Some("all") => Ok(vec![1, 2, 3, 4]),
        Some(s) => s
            .split(',')
            .map(|q| match q.trim().parse::<u8>() {
                Ok(v @ 1..=4) => Ok(v),
                _ => Err(Error::Usage(format!("quadrant `{q}` must be 1..4"))),
            })
            .collect(),
    }
}

fn scalar_json(c: &FieldScalar) -> Value {
    let z = c.to_complex();
    json!({ "exact": c.canonical(), "re": z.re, "im": z.im })
}

fn parse_indices(text: &str) -> Result<[u32; 6]> {
    let v: Vec<u32> = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Usage(format!("index `{t}`"))))
        .collect::<Result<_>>()?;
    v.try_into().map_err(|_| Error::Usage("--indices takes six values n,m,k,t,s,l".into()))
}

fn parse_vector(text: &str, p: u32) -> Result<BasisVector> {
    let (mu, j) = text.split_once(',').ok_or_else(|| Error::Usage("--vector takes mu,j".into()))?;
    let j: i64 = j.trim().parse().map_err(|_| Error::Usage(format!("cyclic index `{j}`")))?;
    Ok(BasisVector::new(parse_rational(mu.trim())?, j, p))
}

/// Runs one command.
pub fn execute(command: &Command, cfg: &Config) -> Result<Artifact> {
    let p = cfg.p;
    let ctx = cfg.ctx();
    match command {
        Command::NormalizeU { expr } => {
            let u = UAlgebra::new(ctx, PairingConvention::FROZEN.h_sign);
            let x = u.parse(expr)?;
            let text = u.display(&x);
            Ok(Artifact::value(json!({ "input": expr, "normal_form": text, "terms": u.to_json(&x) }), text, frozen_ledger(p)))
        }
        Command::NormalizeA { expr } => {
            let a = AAlgebra::new(ctx);
            let x = a.parse(expr)?;
            let text = a.display(&x);
            Ok(Artifact::value(json!({ "input": expr, "normal_form": text, "terms": a.to_json(&x) }), text, frozen_ledger(p)))
        }
        Command::Mul { algebra, x, y } => {
            let (text, terms) = match algebra {
                AlgebraChoice::U => {
                    let u = UAlgebra::new(ctx, PairingConvention::FROZEN.h_sign);
                    let z = u.mul(&u.parse(x)?, &u.parse(y)?);
                    (u.display(&z), u.to_json(&z))
                }
                AlgebraChoice::A => {
                    let a = AAlgebra::new(ctx);
                    let z = a.mul(&a.parse(x)?, &a.parse(y)?);
                    (a.display(&z), a.to_json(&z))
                }
                AlgebraChoice::Both => return Err(Error::Usage("mul takes --algebra u or a".into())),
            };
            Ok(Artifact::value(json!({ "x": x, "y": y, "product": text, "terms": terms }), text, frozen_ledger(p)))
        }
        Command::Hopf { algebra, degree, samples } => {
            let mut reports = Vec::new();
            if matches!(algebra, AlgebraChoice::U | AlgebraChoice::Both) {
                let u = UAlgebra::new(ctx, PairingConvention::FROZEN.h_sign);
                reports.push(u_axiom_suite(&u, *degree, *samples, cfg.seed)?);
            }
            if matches!(algebra, AlgebraChoice::A | AlgebraChoice::Both) {
                reports.push(a_axiom_suite(&AAlgebra::new(ctx), *degree, *samples, cfg.seed)?);
            }
            Ok(Artifact::reports(reports, frozen_ledger(p)))
        }
        Command::Pair { x, a } => {
            let (d, l) = scanned(cfg)?;
            let v = d.pair(&d.u().parse(x)?, &d.a().parse(a)?);
            Ok(Artifact::value(json!({ "x": x, "a": a, "pairing": scalar_json(&v) }), v.to_string(), l))
        }
        Command::DualitySuite { bound, samples } => {
            let (d, l) = scanned(cfg)?;
            let mut main = duality_suite(&d, *bound, *samples, cfg.seed)?;
            d.stamp(&mut main);
            let integral = integral_suite(&d, 2)?;
            Ok(Artifact::reports(vec![main, integral], l))
        }
        Command::RightAct { phi, a } => {
            let (d, l) = scanned(cfg)?;
            let y = d.right_act(&d.u().parse(phi)?, &d.a().parse(a)?);
            let text = d.a().display(&y);
            Ok(Artifact::value(json!({ "phi": phi, "a": a, "result": text, "terms": d.a().to_json(&y) }), text, l))
        }
        Command::ReoConformance { degree, samples } => {
            let (d, l) = scanned(cfg)?;
            let closed = reo_conformance(&d, *degree);
            let anti = right_action_suite(&d, *degree, *samples, cfg.seed)?;
            Ok(Artifact::reports(vec![closed, anti], l))
        }
        Command::PiSuite => {
            let text = cfg.window.clone().unwrap_or_else(|| format!("-2:2:1/{p},jall"));
            let window = Window::parse(&text, p)?;
            let u = UAlgebra::new(ctx, PairingConvention::FROZEN.h_sign);
            Ok(Artifact::reports(vec![pi_axiom_suite(&u, &window)?], frozen_ledger(p)))
        }
        Command::Signature => {
            let s = gram_signature(ctx);
            let expected = ((p as usize + 1) / 2, (p as usize - 1) / 2, 0);
            let passed = (s.n_plus, s.n_minus, s.n_zero) == expected;
            let text = format!("n_plus = {}, n_minus = {}, n_zero = {}", s.n_plus, s.n_minus, s.n_zero);
            let mut art = Artifact::value(serde_json::to_value(&s).expect("serializable"), text, frozen_ledger(p));
            art.passed = passed;
            Ok(art)
        }
        Command::Trterm { indices, vector } => {
            let idx = parse_indices(indices)?;
            let v = parse_vector(vector, p)?;
            let (d, l) = scanned(cfg)?;
            let t = t_r_term(&d, idx, &v)?;
            let coefficient = d.a().display(&t.coefficient);
            let text = format!("{} : ({}) * {} on {}", t.phi, t.scale, coefficient, t.vector);
            let result = json!({
                "indices": idx,
                "input_vector": v,
                "phi": t.phi.to_string(),
                "coefficient": coefficient,
                "scale": scalar_json(&t.scale),
                "denominator": scalar_json(&t.denominator),
                "vector": t.vector,
            });
            Ok(Artifact::value(result, text, l))
        }
        Command::Omega { s, reading } => {
            let reading = match reading {
                ReadingChoice::Summation => OmegaReading::SummationIndex,
                ReadingChoice::Literal => OmegaReading::Literal,
            };
            let w = omega_poly_with(*s, reading, ctx)?;
            let a = AAlgebra::new(ctx);
            let element = a.display(&w.to_element(&a));
            let coefficients: Vec<Value> = w.coefficients.iter().map(scalar_json).collect();
            let result = json!({ "s": s, "reading": reading, "coefficients": coefficients, "element": element });
            Ok(Artifact::value(result, element, frozen_ledger(p)))
        }
        Command::KernelEval { s, nu, mu, rho, beta, lambda, mode, table, precision } => {
            let q = quadrants(cfg.quad.as_deref(), &[3])?;
            let &[quadrant] = q.as_slice() else {
                return Err(Error::Usage("kernel-eval takes a single --quad".into()));
            };
            let params = KernelParams { precision: *precision, ..KernelParams::new(p, *s, *nu, *mu, cfg.r_f64()) };
            let point = QuadrantPoint::new(quadrant, *rho, *beta, *lambda)?;
            let table = match table {
                TableChoice::Derived => ClosedTable::Derived,
                TableChoice::Printed => ClosedTable::Printed,
            };
            let opts = KernelOptions { prec: Prec(cfg.prec), table, ..KernelOptions::default() };
            let modes: &[EvalMode] = match mode {
                ModeChoice::Integral => &[EvalMode::Integral],
                ModeChoice::Closed => &[EvalMode::Closed],
                ModeChoice::Both => &[EvalMode::Integral, EvalMode::Closed],
            };
            let mut evals = Vec::new();
            let mut text = String::new();
            for &m in modes {
                let e = kernel_eval_detailed(&params, &point, m, &opts)?;
                let z = e.value.to_c64();
                text.push_str(&format!("{m:?}: {:.17e} {:+.17e}i (err {:.1e})\n", z.re, z.im, e.value.err_estimate));
                evals.push(e);
            }
            let mut passed = true;
            let mut result = json!({ "params": params, "point": point, "evaluations": evals });
            if let [a, b] = evals.as_slice() {
                let d = a.value.rel_diff(&b.value);
                passed = d <= 10.0 * precision.max(f64::EPSILON.powi(3));
                result["relative_difference"] = json!(d);
                text.push_str(&format!("relative difference {d:.3e}\n"));
            }
            Ok(Artifact { passed, result, text, csv: None, ledger: frozen_ledger(p) })
        }
        Command::KernelVerify { precision } => {
            let spec = cfg.grid.as_deref().unwrap_or("default");
            let mut grid = KernelGrid::parse(spec)?;
            if !spec.split(';').any(|part| part.trim().starts_with("r=")) {
                grid.r = vec![cfg.r_f64()];
            }
            let q = quadrants(cfg.quad.as_deref(), &[1, 2, 3, 4])?;
            let opts = KernelOptions { prec: Prec(cfg.prec), ..KernelOptions::default() };
            let (report, rows) = kernel_grid_suite(p, &grid, &q, *precision, &opts)?;
            let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
            let csv = rows_to_csv(&rows);
            let mut art = Artifact::reports(vec![report], frozen_ledger(p));
            art.result["max_relative_residual"] = json!(worst);
            art.result["grid"] = serde_json::to_value(&grid).expect("serializable");
            art.text.push_str(&format!("max relative residual {worst:.3e}\n"));
            art.csv = Some(csv);
            Ok(art)
        }
        Command::LadderSuite { n, nu, step } => {
            let (d, l) = scanned(cfg)?;
            let mut opts = LadderOptions::new(Prec(cfg.prec));
            opts.h = *step;
            let mut report = d_ladder_suite(&d, *n, *nu, &opts)?;
            for (reading, residual) in discriminate_reading(&d, *n, *nu, &opts)? {
                report.note(format!("omega reading {reading:?}: counted residual {residual:.3e}"));
            }
            Ok(Artifact::reports(vec![report], l))
        }
        Command::Ledger => {
            let (_, l) = scanned(cfg)?;
            let text: String = l.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
            Ok(Artifact::value(json!(l), text, l))
        }
    }
}

/// The JSON document written for a run. `generated_at` is the only field that
/// changes between identical runs.
pub fn envelope(command: &Command, cfg: &Config, art: &Artifact) -> Value {
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    json!({
        "command": command.name(),
        "version": env!("CARGO_PKG_VERSION"),
        "conventions_version": CONVENTIONS_VERSION,
        "config": cfg.to_json(),
        "ledger": art.ledger,
        "passed": art.passed,
        "result": art.result,
        "generated_at": now,
    })
}

/// Drops `generated_at` for reproducibility comparisons.
pub fn without_timestamp(mut v: Value) -> Value {
    if let Some(map) = v.as_object_mut() {
        map.remove("generated_at");
    }
    v
}

/// Rendered output of a run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_)
        | Error::Parse(_)
        | Error::InvalidOrder(_)
        | Error::ZeroParameter
        | Error::OutOfRange(_)
        | Error::LightCone
        | Error::StripCondition(_)
        | Error::NegativeExponent(_) => 2,
        _ => 1,
    }
}

/// Parses, executes and renders without touching the process. Files are still
/// written when `--out` is given.
pub fn run_captured<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let fail = |e: Error| Outcome { code: usage_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") };
    let cfg = match Config::from_args(&cli.config, &cli.command) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let art = match execute(&cli.command, &cfg) {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let env = envelope(&cli.command, &cfg, &art);
    let json_text = serde_json::to_string_pretty(&env).expect("serializable") + "\n";
    let body = match cfg.format {
        Format::Json => json_text.clone(),
        Format::Text => {
            let mut t = art.text.clone();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
        Format::Csv => match &art.csv {
            Some(c) => c.clone(),
            None => return fail(Error::Usage(format!("{} has no csv output", cli.command.name()))),
        },
    };
    let code = if art.passed { 0 } else { 1 };
    let mut stderr = String::new();
    let stdout = match &cfg.out {
        None => body,
        Some(path) => {
            let write = |path: &std::path::Path, text: &str| -> std::result::Result<(), Error> {
                std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
            };
            if let Err(e) = write(path, &body) {
                return fail(e);
            }
            if cfg.format != Format::Json {
                let sidecar = path.with_extension("json");
                if sidecar != *path {
                    if let Err(e) = write(&sidecar, &json_text) {
                        return fail(e);
                    }
                }
            }
            stderr.push_str(&format!("wrote {}\n", path.display()));
            art.text.clone()
        }
    };
    if !art.passed {
        stderr.push_str("verification failed\n");
    }
    Outcome { code, stdout, stderr }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run_captured(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_captured(std::iter::once("fracsusy").chain(args.iter().copied()))
    }

    #[test]
    fn normalizes_a_word() {
        let o = run(&["normalize-u", "--p", "3", "k p+"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "q * p+ k\n"));
    }

    #[test]
    fn signature_at_five() {
        let o = run(&["signature", "--p", "5"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!((v["result"]["n_plus"].as_u64(), v["result"]["n_minus"].as_u64()), (Some(3), Some(2)));
        assert_eq!(v["config"]["p"], 5);
        assert!(v["ledger"]["h_sign"].is_string());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&["frobnicate"]).code, 2);
        assert_eq!(run(&["signature", "--p", "4"]).code, 2);
        assert_eq!(run(&["normalize-u", "k ^"]).code, 2);
        assert_eq!(run(&["signature", "--format", "csv"]).code, 2);
        assert_eq!(run(&["kernel-eval", "--nu", "1.5"]).code, 2);
        assert_eq!(run(&["--help"]).code, 0);
    }

    #[test]
    fn json_is_reproducible() {
        let a = run(&["omega", "--s", "1", "--p", "5"]);
        let b = run(&["omega", "--s", "1", "--p", "5"]);
        let strip = |s: &str| without_timestamp(serde_json::from_str(s).unwrap());
        assert_eq!(strip(&a.stdout), strip(&b.stdout));
    }

    #[test]
    fn kernel_eval_modes_agree() {
        let o = run(&["kernel-eval", "--quad", "2", "--nu", "0.2", "--precision", "1e-20", "--format", "json"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert!(v["result"]["relative_difference"].as_f64().unwrap() < 1e-19);
    }
}
