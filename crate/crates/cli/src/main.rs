use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use heckelab::hecke::{HeckeAlgebra, HeckeElement};
use heckelab::params::{ParamMode, ParamSet};
use heckelab::qpoly::{gamma_decompose, QPoly};
use heckelab::reps::{MetDwOps, Rep};
use heckelab::rootsys::{
    fmt_rat_vec, metaplectic_lattice, parse_rat_vec, parse_word, CartanKind, Lattice,
    MetaplecticDatum, Rat, RootSystem, WeylElement,
};
use heckelab::special;
use heckelab::verify::{self, SuiteConfig, SUITES};
use heckelab::Error;

/// Exact computations in affine Hecke algebras and verification of
/// Whittaker-duality identities.
#[derive(Parser)]
#[command(name = "heckelab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print it.
    Compute(ComputeArgs),
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// List suites and computable objects.
    List,
}

const OBJECTS: &[&str] = &[
    "p_pm",
    "ebar",
    "pJ",
    "whittaker",
    "phi_theta",
    "gamma",
    "hecke-product",
    "duality-constants",
];

#[derive(Args)]
struct ComputeArgs {
    /// Object to compute.
    #[arg(value_parser = parse_object)]
    object: String,
    /// Cartan type: GL, A, B, C, D, G.
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: usize,
    /// Ambient lattice: Q, P or Z (default: Z for GL, P otherwise).
    #[arg(long)]
    lattice: Option<String>,
    /// Parameter mode: generic, equal or specialized.
    #[arg(long)]
    mode: Option<String>,
    /// Alcove point `c` (comma-separated rationals).
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Exponent `y` (comma-separated rationals).
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Sign `+` or `-`.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// Integral exponent `λ` (or `μ`).
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Residue class `θ` for phi_theta and duality-constants.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Metaplectic degree.
    #[arg(long)]
    n: Option<i64>,
    /// Weyl element as a 1-based generator word (`e` for the identity).
    #[arg(long)]
    w: Option<String>,
    /// Second Weyl element word (`ŵ`, `w′`, or the right factor).
    #[arg(long = "w2")]
    w2: Option<String>,
    /// Parabolic subset as 1-based generator indices.
    #[arg(long = "subset")]
    subset: Option<String>,
    /// Whittaker flavor: spherical, iwahori, parahoric.
    #[arg(long)]
    flavor: Option<String>,
    /// Quasi-polynomial input as JSON `{terms: [...]}` (for gamma).
    #[arg(long)]
    f: Option<String>,
    /// g_{n/2} = +t⁻¹ instead of −t⁻¹.
    #[arg(long)]
    flip: bool,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    /// Restrict to one Cartan type (with --rank: to one system).
    #[arg(long = "type")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Metaplectic degrees (comma-separated).
    #[arg(long)]
    n: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    radius: Option<i64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Parameter modes (comma-separated).
    #[arg(long)]
    mode: Option<String>,
    #[arg(long = "max-rank")]
    max_rank: Option<usize>,
    #[arg(long = "max-den")]
    max_den: Option<i64>,
    /// Flip the sign of g_{n/2} (sensitivity probe).
    #[arg(long)]
    flip: bool,
    #[arg(long, env = "HECKELAB_JOBS")]
    jobs: Option<usize>,
    /// Record wall time in the summary.
    #[arg(long)]
    timing: bool,
    /// Report path.
    #[arg(long)]
    out: Option<String>,
    /// Print the full report JSON on stdout.
    #[arg(long)]
    json: bool,
}

fn parse_object(s: &str) -> Result<String, String> {
    if OBJECTS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown object `{s}`; one of {}", OBJECTS.join(", ")))
    }
}

/// Failure of a command: usage errors exit with 2, violated mathematical
/// preconditions with 1.
enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) | Error::Dimension { .. } | Error::Json(_) | Error::UnknownSuite(_) => {
                Failure::Usage(e.to_string())
            }
            Error::UnsupportedLattice(_) | Error::UnsupportedRootSystem(_) => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type CmdResult<T> = Result<T, Failure>;

fn need<'a>(v: &'a Option<String>, flag: &str) -> CmdResult<&'a str> {
    v.as_deref()
        .ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn int_vec(s: &str) -> CmdResult<Vec<i64>> {
    let v = parse_rat_vec(s)?;
    v.iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Failure::Usage(format!("expected integers, got {s}")))
            }
        })
        .collect()
}

fn dim_check<T>(v: &[T], rs: &RootSystem, flag: &str) -> CmdResult<()> {
    if v.len() == rs.dim() {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "--{flag} needs {} entries, got {}",
            rs.dim(),
            v.len()
        )))
    }
}

fn sign(s: &Option<String>) -> CmdResult<i32> {
    match s.as_deref().unwrap_or("+") {
        "+" | "plus" | "1" | "+1" => Ok(1),
        "-" | "minus" | "-1" => Ok(-1),
        other => Err(Failure::Usage(format!("--sign must be + or -, got {other}"))),
    }
}

fn element(rs: &RootSystem, s: &Option<String>) -> CmdResult<WeylElement> {
    match s {
        None => Ok(rs.identity()),
        Some(t) => Ok(rs.from_word(&parse_word(t)?)?),
    }
}

fn subset(rs: &RootSystem, s: &Option<String>) -> CmdResult<Vec<usize>> {
    let j = match s {
        None => Vec::new(),
        Some(t) => parse_word(t)?,
    };
    rs.check_subset(&j)?;
    Ok(j)
}

fn qpoly_out(f: &QPoly, json: bool) -> String {
    if json {
        f.to_json().to_string()
    } else {
        f.to_string()
    }
}

fn compute(a: &ComputeArgs) -> CmdResult<String> {
    let kind = CartanKind::parse(&a.kind)?;
    let rs = Arc::new(RootSystem::new(kind, a.rank)?);
    let lattice = match &a.lattice {
        Some(l) => Lattice::parse(l)?,
        None => Lattice::default_for(&rs),
    };
    let n = a.n.unwrap_or(1);
    let default_mode = match a.object.as_str() {
        "whittaker" | "phi_theta" | "duality-constants" => ParamMode::Equal,
        _ => ParamMode::Generic,
    };
    let mode = match &a.mode {
        Some(m) => ParamMode::parse(m)?,
        None => default_mode,
    };
    let ps = Arc::new(ParamSet::new(&rs, mode, n, a.flip)?);
    let alph = ps.alphabet().clone();
    let rat = |flag: &str, v: &Option<String>| -> CmdResult<Vec<Rat>> {
        let x = parse_rat_vec(need(v, flag)?)?;
        dim_check(&x, &rs, flag)?;
        Ok(x)
    };
    let int = |flag: &str, v: &Option<String>| -> CmdResult<Vec<i64>> {
        let x = int_vec(need(v, flag)?)?;
        dim_check(&x, &rs, flag)?;
        Ok(x)
    };
    let out = match a.object.as_str() {
        "p_pm" => {
            let c = rat("c", &a.c)?;
            let y = rat("y", &a.y)?;
            let qp = Rep::qp(rs.clone(), ps.clone())?;
            qpoly_out(&special::p_pm(&qp, &y, &c, &lattice, sign(&a.sign)?)?, a.json)
        }
        "ebar" => {
            let y = rat("y", &a.y)?;
            let qp = Rep::qp(rs.clone(), ps.clone())?;
            qpoly_out(&special::ebar_limit(&qp, &y)?, a.json)
        }
        "pJ" => {
            let lam = int("lambda", &a.lambda)?;
            let j = subset(&rs, &a.subset)?;
            let qp = Rep::qp(rs.clone(), ps.clone())?;
            qpoly_out(&special::p_j(&qp, &lam, &j, sign(&a.sign)?)?, a.json)
        }
        "whittaker" => {
            let lam = int("lambda", &a.lambda)?;
            let flavor = a.flavor.as_deref().unwrap_or("spherical");
            let datum = MetaplecticDatum::standard(&rs, n);
            match flavor {
                "spherical" => {
                    let mdw = MetDwOps::new(rs.clone(), ps.clone(), datum)?;
                    qpoly_out(&special::spherical_whittaker(&mdw, &lam)?, a.json)
                }
                "iwahori" => {
                    let mdw = MetDwOps::new(rs.clone(), ps.clone(), datum)?;
                    let w = element(&rs, &a.w)?;
                    qpoly_out(&special::iwahori_whittaker(&mdw, w, &lam)?, a.json)
                }
                "parahoric" => {
                    let base = Rep::pol(rs.clone(), ps.clone())?;
                    let j = subset(&rs, &a.subset)?;
                    let w = element(&rs, &a.w)?;
                    let wp = element(&rs, &a.w2)?;
                    let vhalf = ps.q()?;
                    qpoly_out(
                        &special::parahoric_whittaker(&base, &vhalf, &j, w, &lam, wp)?,
                        a.json,
                    )
                }
                other => {
                    return Err(Failure::Usage(format!(
                        "--flavor must be spherical, iwahori or parahoric, got {other}"
                    )))
                }
            }
        }
        "phi_theta" => {
            let mu = int("lambda", &a.lambda)?;
            let theta = int("theta", &a.theta)?;
            let datum = MetaplecticDatum::standard(&rs, n);
            let latm = metaplectic_lattice(&rs, &lattice, &datum)?;
            let mdw = MetDwOps::new(rs.clone(), ps.clone(), datum)?;
            let f = special::phi_theta_direct(&mdw, &latm, &theta, &mu, &rs.rho())?;
            qpoly_out(&f, a.json)
        }
        "gamma" => {
            let c = rat("c", &a.c)?;
            let f = match &a.f {
                Some(text) => {
                    let v: Value = serde_json::from_str(text)
                        .map_err(|e| Failure::Usage(format!("--f is not JSON: {e}")))?;
                    QPoly::from_json(&alph, rs.dim(), &v)?
                }
                None => {
                    let y = rat("y", &a.y)?;
                    QPoly::monomial(&heckelab::coeffring::ParamPoly::one(&alph), &y)
                }
            };
            let parts = gamma_decompose(&f, &rs, &c, &lattice)?;
            if a.json {
                let items: Vec<Value> = parts
                    .iter()
                    .map(|(w, g)| json!({"w": word1(&rs, *w), "gamma": g.to_json()}))
                    .collect();
                json!({ "c": fmt_rat_vec(&c), "components": items }).to_string()
            } else {
                parts
                    .iter()
                    .map(|(w, g)| format!("{:?}\t{}", word1(&rs, *w), g))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        "hecke-product" => {
            let alg = HeckeAlgebra::from_params(rs.clone(), &ps)?;
            let zero = vec![0i64; rs.dim()];
            let lam = match &a.lambda {
                Some(s) => int_vec(s)?,
                None => zero.clone(),
            };
            let mu = match &a.y {
                Some(s) => int_vec(s)?,
                None => zero,
            };
            dim_check(&lam, &rs, "lambda")?;
            dim_check(&mu, &rs, "y")?;
            let left = HeckeElement::term(element(&rs, &a.w)?, QPoly::x(&alph, &lam));
            let right = HeckeElement::term(element(&rs, &a.w2)?, QPoly::x(&alph, &mu));
            let p = alg.product(&left, &right);
            if a.json {
                p.to_json(&rs).to_string()
            } else {
                p.terms()
                    .map(|(w, f)| format!("{:?}\t{}", word1(&rs, *w), f))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        "duality-constants" => {
            let mu = int("lambda", &a.lambda)?;
            let theta = int("theta", &a.theta)?;
            let datum = MetaplecticDatum::standard(&rs, n);
            let mdw = MetDwOps::new(rs.clone(), ps.clone(), datum)?;
            match special::duality_data(&rs, n, &mu, &theta)? {
                None => {
                    if a.json {
                        json!({"support": false}).to_string()
                    } else {
                        "μ mod n is not a permutation of θ: the component vanishes".to_string()
                    }
                }
                Some(d) => {
                    let k = special::duality_constants(&mdw, &d)?;
                    if a.json {
                        json!({
                            "support": true,
                            "c_bold": d.c_bold,
                            "w": word1(&rs, d.w),
                            "w_prime": word1(&rs, d.w_prime),
                            "lambda": d.lambda,
                            "C": k.c.to_json(),
                            "C_prime": k.c_prime.to_json(),
                        })
                        .to_string()
                    } else {
                        format!("C = {}\nC' = {}", k.c, k.c_prime)
                    }
                }
            }
        }
        other => return Err(Failure::Usage(format!("unknown object {other}"))),
    };
    Ok(out)
}

fn word1(rs: &RootSystem, w: WeylElement) -> Vec<usize> {
    rs.word(w).iter().map(|i| i + 1).collect()
}

fn verify_cmd(a: &VerifyArgs) -> CmdResult<(String, bool)> {
    let mut config = SuiteConfig::default_for(&a.suite)?;
    config.seed = a.seed;
    config.flip = a.flip;
    config.jobs = a.jobs;
    config.timing = a.timing;
    if let Some(kind) = &a.kind {
        config.only_kind = Some(CartanKind::parse(kind)?);
    }
    config.only_rank = a.rank;
    config.max_rank = a.max_rank;
    if let Some(ns) = &a.n {
        config.ns = int_vec(ns)?;
    }
    if let Some(r) = a.radius {
        config.radius = r;
    }
    if let Some(s) = a.samples {
        config.samples = s;
    }
    if let Some(d) = a.max_den {
        config.max_den = d;
    }
    if let Some(m) = &a.mode {
        config.modes = m
            .split(',')
            .map(ParamMode::parse)
            .collect::<Result<_, _>>()?;
    }
    let report = verify::run_suite(&config)?;
    let text = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
    if let Some(path) = &a.out {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Math(format!("cannot write {path}: {e}")))?;
    }
    let mut out = if a.json { text } else { report.summary_line() };
    if !a.json {
        for c in report.checks.iter().filter(|c| c.status == verify::Status::Fail) {
            out.push_str(&format!("\nFAIL {} {}", c.id, c.instance));
        }
    }
    Ok((out, report.passed()))
}

fn list() -> String {
    let mut out = String::from("suites:\n");
    for s in SUITES {
        out.push_str(&format!("  {s}\n"));
    }
    out.push_str("  all\nobjects:\n");
    for o in OBJECTS {
        out.push_str(&format!("  {o}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a).map(|s| (s, true)),
        Command::Verify(a) => verify_cmd(a),
        Command::List => Ok((list(), true)),
    };
    match result {
        Ok((text, ok)) => {
            // A closed pipe (e.g. `| head`) is not an error of the command.
            let _ = writeln!(std::io::stdout(), "{}", text.trim_end());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
