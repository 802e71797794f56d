//! Command-line front end: evaluate structure-function tables, emit generator
//! families, run the verification suite, export machine-readable results.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
//! error. Output is fully assembled before printing.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use soft7::lie::{coset_generators, g2_generators, gamma, Chirality, CosetKind, GeneratorSet, So8};
use soft7::matrix::{Mat8, Mat8C};
use soft7::octonion::Octonion;
use soft7::operators::{left_ops_at, right_ops_at};
use soft7::scalar::{Rational, Scalar};
use soft7::torsion::{ascending_triples, torsion_table, Route, Sign};
use soft7::verify::{run_suite, Report, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "soft7",
    about = "Octonion multiplication operators, point-dependent seven-sphere structure \
             functions, and the Lie-algebra families built from them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the 35-entry structure-function table at a point.
    Torsion(TorsionArgs),
    /// Run the named verification suite.
    Verify(VerifyArgs),
    /// Emit a generator family as explicit matrices.
    Generators(GeneratorsArgs),
    /// Evaluate the two-point generalized structure functions.
    Soft(SoftArgs),
}

#[derive(Args)]
struct TorsionArgs {
    /// Eight comma-separated coordinates; integers, fractions "p/q", or decimals.
    #[arg(long)]
    point: String,
    /// Family: "+" (left operators) or "-" (right operators).
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    sign: String,
    #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
    route: RouteArg,
    #[arg(long, value_enum, default_value_t = Model::Exact)]
    model: Model,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Model::Exact)]
    model: Model,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random points per point-sampled check; must be positive.
    #[arg(long, default_value_t = 50)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GeneratorsArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, value_enum, default_value_t = Model::Exact)]
    model: Model,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SoftArgs {
    /// Base point phi (the operators are taken at this point).
    #[arg(long)]
    point: String,
    /// Argument point lambda; defaults to phi when omitted.
    #[arg(long)]
    lambda: Option<String>,
    /// "++" (left family at phi) or "--" (right family at phi).
    #[arg(long, default_value = "++", allow_hyphen_values = true)]
    sign_pair: String,
    #[arg(long, value_enum, default_value_t = Model::Exact)]
    model: Model,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Closed,
    Solve,
    Appendix,
}

impl RouteArg {
    fn route(self) -> Route {
        match self {
            RouteArg::Closed => Route::Closed,
            RouteArg::Solve => Route::Solve,
            RouteArg::Appendix => Route::Appendix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    So8,
    G2,
    CosetV,
    CosetS,
    CosetSBar,
    GammaLeft,
    GammaRight,
}

/// Writes to stdout, ignoring errors so a closed pipe (e.g. `| head`) does
/// not turn into a panic.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(s.as_bytes());
}

/// Usage-level failure: message to stderr, exit 2.
struct Usage(String);

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Torsion(a) => dispatch(
            a.model,
            |_| cmd_torsion::<Rational>(&a),
            |_| cmd_torsion::<f64>(&a),
        ),
        Command::Verify(a) => dispatch(
            a.model,
            |_| cmd_verify::<Rational>(&a),
            |_| cmd_verify::<f64>(&a),
        ),
        Command::Generators(a) => dispatch(
            a.model,
            |_| cmd_generators::<Rational>(&a),
            |_| cmd_generators::<f64>(&a),
        ),
        Command::Soft(a) => dispatch(
            a.model,
            |_| cmd_soft::<Rational>(&a),
            |_| cmd_soft::<f64>(&a),
        ),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn dispatch(
    model: Model,
    exact: impl FnOnce(()) -> Result<i32, Usage>,
    float: impl FnOnce(()) -> Result<i32, Usage>,
) -> Result<i32, Usage> {
    match model {
        Model::Exact => exact(()),
        Model::Float => float(()),
    }
}

fn parse_point<S: Scalar>(spec: &str) -> Result<Octonion<S>, Usage> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 8 {
        return Err(usage(format!(
            "a point needs exactly 8 comma-separated coordinates, got {}",
            parts.len()
        )));
    }
    let mut coords = Vec::with_capacity(8);
    for p in &parts {
        coords.push(
            S::parse_literal(p).ok_or_else(|| usage(format!("cannot parse coordinate '{p}'")))?,
        );
    }
    let point = Octonion::<S>(coords.try_into().unwrap());
    if point.0.iter().all(|c| c.is_zero()) {
        return Err(usage("zero point"));
    }
    Ok(point)
}

fn parse_sign(s: &str) -> Result<Sign, Usage> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(usage(format!("sign must be '+' or '-', got '{other}'"))),
    }
}

fn point_json<S: Scalar>(p: &Octonion<S>) -> serde_json::Value {
    json!(p.0.iter().map(|c| c.repr()).collect::<Vec<_>>())
}

fn cmd_torsion<S: Scalar>(args: &TorsionArgs) -> Result<i32, Usage> {
    let point = parse_point::<S>(&args.point)?;
    let sign = parse_sign(&args.sign)?;
    let table = torsion_table(sign, &point, args.route.route()).map_err(|_| usage("zero point"))?;
    let entries = table.entries();
    match args.format {
        Format::Json => {
            let body = json!({
                "point": point_json(&table.point),
                "r2": table.r2.repr(),
                "sign": sign.label(),
                "route": args.route.route().label(),
                "entries": entries
                    .iter()
                    .map(|((i, j, k), v)| json!({"i": i, "j": j, "k": k, "value": v.repr()}))
                    .collect::<Vec<_>>(),
            });
            emit(&(serde_json::to_string_pretty(&body).unwrap() + "\n"));
        }
        Format::Csv => {
            let mut out = String::from("i,j,k,value\n");
            for ((i, j, k), v) in &entries {
                out.push_str(&format!("{i},{j},{k},{}\n", v.repr()));
            }
            emit(&out);
        }
    }
    Ok(0)
}

fn report_json(report: &Report) -> serde_json::Value {
    json!({
        "model": report.model,
        "seed": report.seed,
        "points": report.points,
        "overall": if report.passed() { "pass" } else { "fail" },
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "anchor": c.anchor,
            "status": if c.passed { "pass" } else { "fail" },
            "points_tested": c.points_tested,
            "max_deviation": c.max_deviation,
            "witness": c.witness,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_verify<S: Scalar>(args: &VerifyArgs) -> Result<i32, Usage> {
    if args.points == 0 {
        return Err(usage("--points must be positive"));
    }
    let cfg = SuiteConfig {
        seed: args.seed,
        points: args.points,
    };
    let report = run_suite::<S>(&cfg);
    match args.format {
        Format::Json => {
            emit(&(serde_json::to_string_pretty(&report_json(&report)).unwrap() + "\n"));
        }
        Format::Csv => {
            let mut out = String::from("name,status,points_tested,max_deviation,witness\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{:e},{}\n",
                    csv_quote(c.name),
                    if c.passed { "pass" } else { "fail" },
                    c.points_tested,
                    c.max_deviation,
                    csv_quote(c.witness.as_deref().unwrap_or("")),
                ));
            }
            emit(&out);
        }
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn real_matrix_rows<S: Scalar>(m: &Mat8<S>) -> Vec<Vec<serde_json::Value>> {
    m.0.iter()
        .map(|row| row.iter().map(|v| json!([v.repr(), "0"])).collect())
        .collect()
}

fn complex_matrix_rows<S: Scalar>(m: &Mat8C<S>) -> Vec<Vec<serde_json::Value>> {
    m.0.iter()
        .map(|row| {
            row.iter()
                .map(|v| json!([v.re.repr(), v.im.repr()]))
                .collect()
        })
        .collect()
}

enum FamilyData<S: Scalar> {
    Real(GeneratorSet<S>),
    ComplexMats(String, Vec<Mat8C<S>>),
}

fn cmd_generators<S: Scalar>(args: &GeneratorsArgs) -> Result<i32, Usage> {
    // recorded so(8) convention: J^i = +i * (left gamma), i.e. chirality
    // Left with sign +1
    let mut extra = serde_json::Map::new();
    let data: FamilyData<S> = match args.family {
        Family::So8 => {
            let algebra = So8::<S>::new(Chirality::Left, 1)
                .expect("the recorded convention satisfies the relations");
            let set = algebra.generator_set();
            extra.insert(
                "sign_convention".into(),
                json!("J^i = +i E_i (left family)"),
            );
            extra.insert(
                "relation_self_check_residual".into(),
                json!(algebra.relations_residual()),
            );
            extra.insert("span_dimension".into(), json!(set.complex_span_dimension()));
            FamilyData::ComplexMats(set.label, set.mats)
        }
        Family::G2 => {
            let set = g2_generators::<S>();
            extra.insert("span_dimension".into(), json!(set.span_dimension()));
            FamilyData::Real(set)
        }
        Family::CosetV => {
            extra.insert(
                "sign_convention".into(),
                json!("+1 branch of +-1/2 (E_i - 1|E_i)"),
            );
            FamilyData::Real(coset_generators::<S>(CosetKind::V, 1))
        }
        Family::CosetS => {
            extra.insert(
                "sign_convention".into(),
                json!("+1 branch of +-(1/2 E_i + 1|E_i)"),
            );
            FamilyData::Real(coset_generators::<S>(CosetKind::S, 1))
        }
        Family::CosetSBar => {
            extra.insert(
                "sign_convention".into(),
                json!("+1 branch of -+(E_i + 1/2 1|E_i)"),
            );
            FamilyData::Real(coset_generators::<S>(CosetKind::SBar, 1))
        }
        Family::GammaLeft | Family::GammaRight => {
            let chir = if matches!(args.family, Family::GammaLeft) {
                Chirality::Left
            } else {
                Chirality::Right
            };
            let mats: Vec<Mat8C<S>> = (1..8).map(|i| gamma(i, chir)).collect();
            let hermitian = mats.iter().all(|m| m.is_hermitian());
            extra.insert("hermitian".into(), json!(hermitian));
            extra.insert(
                "sign_convention".into(),
                json!(format!(
                    "gamma^i = i * {} multiplication operator",
                    chir.label()
                )),
            );
            FamilyData::ComplexMats(
                if matches!(chir, Chirality::Left) {
                    "gamma_left".to_string()
                } else {
                    "gamma_right".to_string()
                },
                mats,
            )
        }
    };
    let (label, rows): (&str, Vec<Vec<Vec<serde_json::Value>>>) = match &data {
        FamilyData::Real(set) => (
            set.label.as_str(),
            set.mats.iter().map(real_matrix_rows).collect(),
        ),
        FamilyData::ComplexMats(label, mats) => (
            label.as_str(),
            mats.iter().map(complex_matrix_rows).collect(),
        ),
    };
    match args.format {
        Format::Json => {
            let mut body = serde_json::Map::new();
            body.insert("family".into(), json!(label));
            body.insert("count".into(), json!(rows.len()));
            for (k, v) in extra {
                body.insert(k, v);
            }
            // row-major; each entry is [real_part, imaginary_part]
            body.insert("matrices".into(), json!(rows));
            emit(&(serde_json::to_string_pretty(&serde_json::Value::Object(body)).unwrap() + "\n"));
        }
        Format::Csv => {
            let mut out = String::from("matrix,row,col,re,im\n");
            for (n, m) in rows.iter().enumerate() {
                for (r, row) in m.iter().enumerate() {
                    for (c, entry) in row.iter().enumerate() {
                        let re = entry[0].as_str().unwrap();
                        let im = entry[1].as_str().unwrap();
                        out.push_str(&format!("{n},{r},{c},{re},{im}\n"));
                    }
                }
            }
            emit(&out);
        }
    }
    // spot-check the advertised properties before declaring success
    if let Family::G2 = args.family {
        if let FamilyData::Real(set) = &data {
            if S::EXACT && set.span_dimension() != 14 {
                return Err(usage("internal: g2 family has unexpected rank"));
            }
        }
    }
    Ok(0)
}

fn cmd_soft<S: Scalar>(args: &SoftArgs) -> Result<i32, Usage> {
    let phi = parse_point::<S>(&args.point)?;
    let lambda = match &args.lambda {
        Some(spec) => parse_point::<S>(spec)?,
        None => phi.clone(),
    };
    let ops: Vec<Mat8<S>> = match args.sign_pair.as_str() {
        "++" => left_ops_at(&phi).map_err(|_| usage("zero point")),
        "--" => right_ops_at(&phi).map_err(|_| usage("zero point")),
        other => Err(usage(format!(
            "sign pair must be '++' or '--', got '{other}'"
        ))),
    }?;
    let r2 = lambda.norm_sq();
    let dot = |a: &Octonion<S>, b: &Octonion<S>| {
        a.0.iter()
            .zip(b.0.iter())
            .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    };
    let value = |i: usize, j: usize, k: usize| {
        let v = ops[k - 1].apply(&ops[i - 1].apply(&ops[j - 1].apply(&lambda)));
        -dot(&lambda, &v) / r2.clone()
    };
    let entries: Vec<((usize, usize, usize), S)> = ascending_triples()
        .into_iter()
        .map(|(i, j, k)| ((i, j, k), value(i, j, k)))
        .collect();
    // defining-relation residual: [E_i(phi),E_j(phi)] lambda
    //   = 2 sum_k f_ijk(phi,lambda) E_k(phi) lambda
    let images: Vec<Octonion<S>> = ops.iter().map(|m| m.apply(&lambda)).collect();
    let mut residual: f64 = 0.0;
    for i in 1..8usize {
        for j in i + 1..8 {
            let lhs = ops[i - 1].commutator(&ops[j - 1]).apply(&lambda);
            let mut rhs = Octonion::zero();
            for k in 1..8 {
                if k == i || k == j {
                    continue;
                }
                let c = value(i, j, k) * S::from_int(2);
                rhs = rhs.add(&images[k - 1].scale(&c));
            }
            residual = residual.max(lhs.sub(&rhs).max_magnitude());
        }
    }
    match args.format {
        Format::Json => {
            let body = json!({
                "point": point_json(&phi),
                "lambda": point_json(&lambda),
                "r2": r2.repr(),
                "sign_pair": args.sign_pair,
                "relation_residual": residual,
                "entries": entries
                    .iter()
                    .map(|((i, j, k), v)| json!({"i": i, "j": j, "k": k, "value": v.repr()}))
                    .collect::<Vec<_>>(),
            });
            emit(&(serde_json::to_string_pretty(&body).unwrap() + "\n"));
        }
        Format::Csv => {
            let mut out = String::from("i,j,k,value\n");
            for ((i, j, k), v) in &entries {
                out.push_str(&format!("{i},{j},{k},{}\n", v.repr()));
            }
            emit(&out);
        }
    }
    Ok(0)
}
