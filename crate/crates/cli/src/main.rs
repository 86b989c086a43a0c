use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use signpat::discriminant::{classify, sylvester_resultant};
use signpat::homotopy::{certify_refined, certify_retraction, connect_with, descend, log_grid, ConnectConfig, DEFAULT_T_MAX};
use signpat::poly::{parse_rational, to_f64};
use signpat::root_count::{compatible, hyperbolic_counts, root_profile};
use signpat::strata::{a0_fiber_with, component_fiber_with, FiberConfig};
use signpat::witness::{self, EmptyCase, Side, Target, WitnessConfig, WitnessRequest, WitnessResult};
use signpat::{rat, DensePoly, Error, Polynomial, Rational, Sign, SignPattern};

#[derive(Parser)]
#[command(name = "signpat", version, about = "Sign patterns and root counts of real monic polynomials")]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunConfig {
    /// Seed for randomized searches (0 selects the deterministic ladder search).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Grid size: retraction samples, fiber scan points or curve samples.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Bisection width for fibers, as a rational.
    #[arg(long, global = true)]
    width: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also certify on the retraction grid with midpoints inserted.
    #[arg(long, global = true)]
    refine: bool,
    /// Read sign patterns highest degree first.
    #[arg(long, global = true)]
    descending: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetArg {
    Elliptic,
    OneRoot,
    /// Two positive roots.
    TwoPos,
    /// Two negative roots.
    TwoNeg,
    /// Two roots of opposite signs.
    TwoMixed,
    Hyperbolic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum SideArg {
    K,
    L,
    M,
}

#[derive(Subcommand)]
enum Command {
    /// Descartes compatibility of a root profile with a sign pattern.
    Check {
        #[arg(allow_hyphen_values = true)]
        sigma: String,
        pos: usize,
        neg: usize,
    },
    /// Root profile of a polynomial.
    Profile {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Resultant-based membership report.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Verified witness polynomial for a class.
    Witness {
        #[arg(allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Root parameter in (0, 1) for the two-root constructions.
        #[arg(long, default_value = "1/2")]
        param: String,
        /// Side for roots of opposite signs.
        #[arg(long, value_enum, ignore_case = true)]
        side: Option<SideArg>,
    },
    /// Certificate for the retraction path of a polynomial.
    Certify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Certificates joining two polynomials with the same pattern.
    Connect {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Normalized derivative of a polynomial.
    Descend {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Constant terms completing a tail to a hyperbolic polynomial.
    Fiber {
        /// Restrict to the component of this pattern.
        #[arg(allow_hyphen_values = true)]
        sigma: Option<String>,
        /// Coefficients a_1, ..., a_{d-1}.
        #[arg(long, allow_hyphen_values = true)]
        tail: String,
    },
    /// Sylvester resultant; `deriv` as the second argument uses p'.
    Resultant {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Table over all sign patterns of degree d.
    Enumerate { d: usize },
    /// Samples of the discriminant curve of x^3 + x^2 + b x + c.
    Curve3,
}

fn parse_sigma(s: &str, run: &RunConfig) -> Result<SignPattern, Error> {
    if run.descending {
        SignPattern::parse_descending(s)
    } else {
        SignPattern::parse(s)
    }
}

fn parse_poly(s: &str) -> Result<Polynomial, Error> {
    s.parse()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn forced_empty(sigma: &SignPattern, pos: usize, neg: usize) -> Option<EmptyCase> {
    match (pos, neg) {
        (2, 0) if witness::is_case1(sigma) => Some(EmptyCase::Case1),
        (0, 2) if witness::is_case2(sigma) => Some(EmptyCase::Case2),
        _ => None,
    }
}

fn retraction_grid(run: &RunConfig) -> Vec<Rational> {
    log_grid(run.grid.unwrap_or(signpat::homotopy::DEFAULT_GRID_POINTS), DEFAULT_T_MAX)
}

fn fiber_config(run: &RunConfig) -> Result<FiberConfig, Error> {
    let mut cfg = FiberConfig::default();
    if let Some(n) = run.grid {
        cfg.grid = n;
    }
    if let Some(w) = &run.width {
        let w = parse_rational(w)?;
        if w <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidInput("width must be positive".into()));
        }
        cfg.width = w;
    }
    Ok(cfg)
}

/// Outcome of one class for `enumerate`.
fn class_cell(r: signpat::Result<WitnessResult>) -> Result<String, Error> {
    match r {
        Ok(WitnessResult::Witness(_)) => Ok("witness".into()),
        Ok(WitnessResult::Empty { case }) => Ok(format!("empty:{case:?}")),
        Err(Error::InvalidInput(_)) => Ok("incompatible".into()),
        Err(e) => Err(e),
    }
}

#[derive(Serialize)]
struct EnumerateRow {
    index: u64,
    sigma: SignPattern,
    pos: usize,
    neg: usize,
    hyperbolic: String,
    elliptic: String,
    one_root: String,
    two_pos: String,
    two_neg: String,
    two_mixed: String,
}

fn enumerate(d: usize) -> Result<Vec<EnumerateRow>, Error> {
    if d == 0 || d > 12 {
        return Err(Error::InvalidInput(format!("degree {d} out of range 1..=12")));
    }
    let na = || "n/a".to_string();
    let mut rows = Vec::new();
    for (index, sigma) in SignPattern::all(d).enumerate() {
        let (pos, neg) = hyperbolic_counts(&sigma);
        let even = d.is_multiple_of(2);
        let plus0 = sigma.get(0) == Sign::Plus;
        let half = rat(1, 2);
        rows.push(EnumerateRow {
            index: index as u64,
            pos,
            neg,
            hyperbolic: class_cell(witness::hyperbolic_witness(&sigma))?,
            elliptic: if even { class_cell(witness::elliptic_witness(&sigma))? } else { na() },
            one_root: if even { na() } else { class_cell(witness::one_root_witness(&sigma))? },
            two_pos: if even && plus0 { class_cell(witness::g20_witness(&sigma, &half))? } else { na() },
            two_neg: if even && plus0 { class_cell(witness::g02_witness(&sigma, &half))? } else { na() },
            two_mixed: if even && !plus0 { class_cell(witness::g11_witness(&sigma, &half))? } else { na() },
            sigma,
        });
    }
    Ok(rows)
}

fn enumerate_csv(rows: &[EnumerateRow]) -> String {
    let mut out = String::from("index,sigma,pos,neg,hyperbolic,elliptic,one_root,two_pos,two_neg,two_mixed\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},\"{}\",{},{},{},{},{},{},{},{}",
            r.index, r.sigma, r.pos, r.neg, r.hyperbolic, r.elliptic, r.one_root, r.two_pos, r.two_neg, r.two_mixed
        );
    }
    out.pop();
    out
}

struct CurvePoint {
    s: Rational,
    b: Rational,
    c: Rational,
}

/// The curve is traced by its double root `s`: `(x - s)^2 (x + 1 + 2s)`
/// gives `b = -3s^2 - 2s`, `c = s^2 (1 + 2s)`. The cusp `s = -1/3` is a sample
/// whenever `n - 1` is a multiple of 12.
fn curve3(n: usize) -> Vec<CurvePoint> {
    let n = n.max(2) as i64;
    let (lo, hi) = (rat(-3, 2), rat(1, 2));
    let step = (&hi - &lo) / Rational::from_integer((n - 1).into());
    (0..n)
        .map(|k| {
            let s = &lo + &step * Rational::from_integer(k.into());
            let b = -rat(3, 1) * &s * &s - rat(2, 1) * &s;
            let c = &s * &s * (rat(1, 1) + rat(2, 1) * &s);
            CurvePoint { s, b, c }
        })
        .collect()
}

fn curve3_output(points: &[CurvePoint], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<_> = points
                .iter()
                .map(|p| json!({"s": p.s.to_string(), "b": p.b.to_string(), "c": p.c.to_string()}))
                .collect();
            to_json(&v)
        }
        Format::Csv => {
            let mut out = String::from("s,b,c,b_approx,c_approx\n");
            for p in points {
                let _ = writeln!(out, "{},{},{},{:.12},{:.12}", p.s, p.b, p.c, to_f64(&p.b), to_f64(&p.c));
            }
            out.pop();
            out
        }
        Format::Svg => {
            // y axis flipped so c grows upward; viewBox in (b, -c) units
            let pts: Vec<String> =
                points.iter().map(|p| format!("{:.6},{:.6}", to_f64(&p.b), -to_f64(&p.c))).collect();
            format!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -1.5 3 3\">\n\
                 <polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.01\" points=\"{}\"/>\n</svg>",
                pts.join(" ")
            )
        }
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let cfg = &cli.run;
    match cli.command {
        Command::Check { sigma, pos, neg } => {
            let sigma = parse_sigma(&sigma, cfg)?;
            let ok = compatible(&sigma, pos, neg)?;
            let mut out = serde_json::Map::new();
            out.insert("compatible".into(), json!(ok));
            if let Some(case) = forced_empty(&sigma, pos, neg) {
                out.insert("empty_by_theorem1".into(), json!(format!("{case:?}")));
            }
            Ok(to_json(&out))
        }
        Command::Profile { poly } => Ok(to_json(&root_profile(&parse_poly(&poly)?))),
        Command::Classify { poly } => Ok(to_json(&classify(&parse_poly(&poly)?))),
        Command::Witness { sigma, target, param, side } => {
            let sigma = parse_sigma(&sigma, cfg)?;
            let param = parse_rational(&param)?;
            let wcfg = WitnessConfig { seed: cfg.seed, ..WitnessConfig::default() };
            let result = match (target, side) {
                (TargetArg::TwoMixed, Some(side)) => {
                    let side = match side {
                        SideArg::K => Side::K,
                        SideArg::L => Side::L,
                        SideArg::M => Side::M,
                    };
                    witness::g11_witness_on(&sigma, &param, side, &wcfg)?
                }
                (_, Some(_)) => return Err(Error::InvalidInput("--side applies to --target two-mixed".into())),
                (t, None) => {
                    let target = match t {
                        TargetArg::Elliptic => Target::Elliptic,
                        TargetArg::OneRoot => Target::OneRoot,
                        TargetArg::TwoPos => Target::TwoRoots { pos2: true },
                        TargetArg::TwoNeg => Target::TwoRoots { pos2: false },
                        TargetArg::TwoMixed => {
                            if sigma.get(0) == Sign::Plus {
                                return Err(Error::InvalidInput(
                                    "roots of opposite signs need a negative constant term".into(),
                                ));
                            }
                            Target::TwoRoots { pos2: false }
                        }
                        TargetArg::Hyperbolic => Target::Hyperbolic,
                    };
                    witness::witness_with(&WitnessRequest { sigma, target }, &param, &wcfg)?
                }
            };
            Ok(to_json(&result))
        }
        Command::Certify { poly } => {
            let p = parse_poly(&poly)?;
            let grid = retraction_grid(cfg);
            let cert = if cfg.refine { certify_refined(&p, &grid)? } else { certify_retraction(&p, &grid)? };
            Ok(to_json(&cert))
        }
        Command::Connect { p, q } => {
            let (p, q) = (parse_poly(&p)?, parse_poly(&q)?);
            let ccfg = ConnectConfig { grid: retraction_grid(cfg), refine: cfg.refine };
            Ok(to_json(&connect_with(&p, &q, &ccfg)?))
        }
        Command::Descend { poly } => {
            let q = descend(&parse_poly(&poly)?)?;
            Ok(to_json(&json!({"poly": q, "sigma": q.sign_pattern()?})))
        }
        Command::Fiber { sigma, tail } => {
            let tail = tail.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
            let fcfg = fiber_config(cfg)?;
            let report = match sigma {
                Some(s) => component_fiber_with(&parse_sigma(&s, cfg)?, &tail, &fcfg)?,
                None => a0_fiber_with(&tail, &fcfg),
            };
            Ok(to_json(&report))
        }
        Command::Resultant { p, q } => {
            let p = DensePoly::parse(&p)?;
            let q = if q == "deriv" { p.derivative() } else { DensePoly::parse(&q)? };
            if p.degree().unwrap_or(0) < 1 || q.degree().unwrap_or(0) < 1 {
                return Err(Error::InvalidInput("resultant needs two polynomials of degree >= 1".into()));
            }
            Ok(to_json(&json!({"resultant": sylvester_resultant(&p, &q)?.to_string()})))
        }
        Command::Enumerate { d } => {
            let rows = enumerate(d)?;
            Ok(match cfg.format {
                Format::Csv => enumerate_csv(&rows),
                _ => to_json(&rows),
            })
        }
        Command::Curve3 => Ok(curve3_output(&curve3(cfg.grid.unwrap_or(61)), cfg.format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error for a batch tool
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            ExitCode::from(if e.is_failure() { 3 } else { 2 })
        }
    }
}
