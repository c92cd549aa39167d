//! `qqsh`: exact quantum quasi-shuffle computations from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use qqsh::combinat::{enumerate_marked, enumerate_mixable, enumerate_shuffles, Composition, EnumRecord};
use qqsh::dualcoalg::DualContext;
use qqsh::par::Exec;
use qqsh::rotabaxter::{RotaBaxter, Route, Zeta, ZetaIndex, ZetaKind};
use qqsh::text::{element_to_json, parse_element, render_element, render_element2, render_linear, AlgebraFile};
use qqsh::verify::Suite;
use qqsh::{BraidedAlgebra, Element, Element2, Error, Letter, LinearV, QShuffle, Report, Scalar, Status};

#[derive(Parser)]
#[command(name = "qqsh", version, about = "Exact quantum quasi-shuffle algebra computations")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    /// Also print every coefficient evaluated at this rational q, e.g. 1/2.
    #[arg(long, global = true, value_name = "Q")]
    eval_q: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two or more elements.
    Product(ProductArgs),
    /// k-th power of a letter.
    Power(PowerArgs),
    /// Enumerate shuffles, mixable shuffles or marked permutations.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// The dual braided coalgebra of a finite algebra.
    Dual {
        #[command(subcommand)]
        what: DualCommand,
    },
    /// Rota–Baxter representations.
    Rb {
        #[command(subcommand)]
        what: RbCommand,
    },
    /// Truncated multiple q-zeta values.
    Zeta(ZetaArgs),
}

#[derive(Args)]
struct AlgebraArg {
    /// Shipped fixture: A<N>, A<N>-flip, A<N>+1, A_inf, Kt, Kt-flip,
    /// hoffman:<degrees>, hoffman-zero:<degrees>.
    #[arg(long, default_value = "A4", conflicts_with = "algebra_file")]
    algebra: String,

    /// JSON algebra description (see docs/algebra.schema.json).
    #[arg(long, value_name = "PATH")]
    algebra_file: Option<PathBuf>,
}

impl AlgebraArg {
    fn load(&self) -> Result<BraidedAlgebra, Error> {
        match &self.algebra_file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
                let alg = AlgebraFile::from_json_str(&text)?.build()?;
                let letters = alg.letters().finite()?;
                for r in qqsh::verify::check_fixture_axioms(&alg, &letters) {
                    if !r.passed() {
                        return Err(Error::Invalid(format!("algebra file {}: {r}", path.display())));
                    }
                }
                Ok(alg)
            }
            None => qqsh::braided::fixtures::by_name(&self.algebra),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Left recursion, folded from the left.
    Recursive,
    /// Right recursion, folded from the left.
    Right,
    /// Sum over mixable shuffles, folded from the left.
    Explicit,
    /// Sum over marked permutations; every factor must be of degree one.
    Nfold,
    /// Graded q-product; needs a graded flip braiding.
    Hoffman,
}

#[derive(Args)]
struct ProductArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    #[arg(long, value_enum, default_value = "recursive")]
    method: Method,
    /// Print the number of terms of the result.
    #[arg(long)]
    count_terms: bool,
    /// Elements such as "e1|e2 + (1+q) e3".
    #[arg(required = true, num_args = 2..)]
    factors: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerMethod {
    Closed,
    Iterated,
}

#[derive(Args)]
struct PowerArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Letter index i of e_i.
    #[arg(long)]
    letter: u32,
    #[arg(short, long)]
    k: usize,
    #[arg(long, value_enum, default_value = "closed")]
    method: PowerMethod,
}

#[derive(Subcommand)]
enum EnumerateWhat {
    /// (i,j)-shuffles.
    Shuffles { i: usize, j: usize },
    /// Mixable (i,j)-shuffles with their compositions.
    Mixable { i: usize, j: usize },
    /// Marked permutations of [n] with their compositions.
    Marked { n: usize },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or one of: axioms, enumerate, products, nfold, power, assoc,
    /// bialgebra, primitives, factorization, specializations, matsumoto, hoffman,
    /// dual, rb, zeta.
    #[arg(default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Run without the thread pool.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand)]
enum DualCommand {
    /// Φ, Φ₁ or Φ₂ of an element of T(C), written with letters c<i>.
    Phi {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "full")]
        part: PhiPart,
        element: String,
    },
    /// Δ_σ,i of a homogeneous element of degree i.
    DeltaSigma {
        #[command(flatten)]
        algebra: AlgebraArg,
        element: String,
    },
    /// Checks <u ⋈_τ v, z> = <u ⊗ v, Φ(z)>.
    VerifyAdjoint {
        #[command(flatten)]
        algebra: AlgebraArg,
        u: String,
        v: String,
        z: String,
    },
    /// All dual sweeps on a finite algebra.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PhiPart {
    Full,
    Shuffle,
    Coproduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum RbFixture {
    Kt,
    KtCorrupted,
    KtBraided,
    Negation,
    NegationW2,
}

impl RbFixture {
    fn name(self) -> &'static str {
        match self {
            RbFixture::Kt => "kt",
            RbFixture::KtCorrupted => "kt-corrupted",
            RbFixture::KtBraided => "kt-braided",
            RbFixture::Negation => "negation",
            RbFixture::NegationW2 => "negation-w2",
        }
    }

    fn var(self) -> &'static str {
        match self {
            RbFixture::Kt | RbFixture::KtCorrupted | RbFixture::KtBraided => "t",
            _ => "e",
        }
    }
}

#[derive(Subcommand)]
enum RbCommand {
    /// f̄ of an element of the source algebra.
    Fbar {
        #[arg(long, value_enum, default_value = "kt")]
        fixture: RbFixture,
        element: String,
    },
    /// f̃ of an element of the source algebra.
    Ftilde {
        #[arg(long, value_enum, default_value = "kt")]
        fixture: RbFixture,
        element: String,
    },
    /// Rota–Baxter identity, sidedness and the homomorphism sweeps.
    Verify {
        #[arg(long, value_enum, default_value = "kt")]
        fixture: RbFixture,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Zudilin,
    Bradley,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum RouteArg {
    Direct,
    Series,
    Both,
}

#[derive(Args)]
struct ZetaArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma-separated index, e.g. 2,1.
    #[arg(long)]
    index: String,
    /// Truncation: sum over n₁ ≤ N.
    #[arg(long = "N", short = 'N', value_name = "N")]
    n: u32,
    #[arg(long, value_enum, default_value = "both")]
    route: RouteArg,
}

/// What a command produced: text lines, a JSON value, and whether any
/// verification failed.
struct Output {
    text: Vec<String>,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

struct Ctx {
    eval_q: Option<BigRational>,
}

impl Ctx {
    fn eval_scalar(&self, s: &Scalar) -> Result<Option<String>, Error> {
        match &self.eval_q {
            None => Ok(None),
            Some(q0) => Ok(Some(s.eval(q0)?.to_string())),
        }
    }

    fn eval_element(&self, x: &Element) -> Result<Option<Element>, Error> {
        let Some(q0) = &self.eval_q else { return Ok(None) };
        let mut out = Element::zero();
        for (w, c) in x {
            out.add_term(w.clone(), rational_scalar(&c.eval(q0)?));
        }
        Ok(Some(out))
    }

    /// Text and JSON for an element, with the evaluation alongside.
    fn element(&self, label: &str, x: &Element) -> Result<(Vec<String>, Value), Error> {
        let mut text = vec![render_element(x)];
        let mut j = json!({ label: element_to_json(x) });
        if let Some(ev) = self.eval_element(x)? {
            text.push(format!("at q = {}: {}", self.eval_q.as_ref().expect("set"), render_element(&ev)));
            j["eval_q"] = json!({ "q": self.eval_q.as_ref().expect("set").to_string(), label: element_to_json(&ev) });
        }
        Ok((text, j))
    }
}

fn rational_scalar(r: &BigRational) -> Scalar {
    let num = Scalar::from_int(r.numer().clone());
    let den = Scalar::from_int(r.denom().clone());
    num.checked_div(&den).expect("nonzero denominator")
}

fn element2_json(x: &Element2) -> Value {
    Value::Array(
        x.iter()
            .map(|((a, b), c)| json!({ "coeff": c.to_string(), "left": a.ids(), "right": b.ids() }))
            .collect(),
    )
}

fn reports_output(reports: Vec<Report>) -> Output {
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    let checks: usize = reports.iter().map(|r| r.checked).sum();
    let n_failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let mut text: Vec<String> = reports.iter().map(ToString::to_string).collect();
    text.push(format!(
        "summary: {} reports, {checks} checks, {n_failed} failed",
        reports.len()
    ));
    let json = json!({ "reports": reports, "checks": checks, "failed": n_failed, "passed": !failed });
    Output { text, json, failed }
}

fn product(ctx: &Ctx, args: &ProductArgs) -> Result<Output, Error> {
    let alg = args.algebra.load()?;
    let name = alg.name.clone();
    let q = QShuffle::new(alg);
    let xs = args.factors.iter().map(|f| parse_element(f)).collect::<Result<Vec<_>, _>>()?;
    let fold = |op: &dyn Fn(&Element, &Element) -> Result<Element, Error>| -> Result<Element, Error> {
        let mut acc = xs[0].clone();
        for x in &xs[1..] {
            acc = op(&acc, x)?;
        }
        Ok(acc)
    };
    let result = match args.method {
        Method::Recursive => fold(&|x, y| q.qqsh(x, y))?,
        Method::Right => fold(&|x, y| q.qqsh_right(x, y))?,
        Method::Explicit => fold(&|x, y| q.qqsh_explicit(x, y))?,
        Method::Hoffman => fold(&|x, y| q.hoffman_star(x, y))?,
        Method::Nfold => q.nfold_explicit(&xs)?,
    };
    let (mut text, mut j) = ctx.element("result", &result)?;
    j["algebra"] = json!(name);
    j["terms"] = json!(result.len());
    if args.count_terms {
        text.push(format!("terms: {}", result.len()));
    }
    Ok(Output::ok(text, j))
}

fn power(ctx: &Ctx, args: &PowerArgs) -> Result<Output, Error> {
    let q = QShuffle::new(args.algebra.load()?);
    let result = match args.method {
        PowerMethod::Closed => q.power_closed(Letter(args.letter), args.k)?,
        PowerMethod::Iterated => q.power(&Element::word(&[args.letter]), args.k)?,
    };
    let (text, j) = ctx.element("result", &result)?;
    Ok(Output::ok(text, j))
}

fn enumerate(what: &EnumerateWhat) -> Result<Output, Error> {
    let records: Vec<EnumRecord> = match *what {
        EnumerateWhat::Shuffles { i, j } => enumerate_shuffles(i, j)
            .iter()
            .map(|w| EnumRecord::new(w, &[], Composition::ones(i + j)))
            .collect(),
        EnumerateWhat::Mixable { i, j } => enumerate_mixable(i, j)
            .iter()
            .map(|m| EnumRecord::new(&m.w, &m.pairs, m.composition()))
            .collect(),
        EnumerateWhat::Marked { n } => enumerate_marked(n)
            .iter()
            .map(|m| EnumRecord::new(&m.w, &m.pairs, m.composition()))
            .collect(),
    };
    let mut text: Vec<String> = records
        .iter()
        .map(|r| format!("w={:?} S={:?} cp={:?}", r.w, r.s, r.cp.parts()))
        .collect();
    text.push(format!("count: {}", records.len()));
    let json = serde_json::to_value(&records).expect("serializable");
    Ok(Output::ok(text, json))
}

fn verify(args: &VerifyArgs) -> Result<Output, Error> {
    let exec = if args.sequential { Exec::Sequential } else { Exec::default() };
    let reports = if args.suite == "all" {
        qqsh::verify::run_all(args.max_degree, exec)
    } else {
        Suite::from_name(&args.suite)?.run(args.max_degree, exec)
    };
    Ok(reports_output(reports))
}

fn dual(ctx: &Ctx, what: &DualCommand) -> Result<Output, Error> {
    match what {
        DualCommand::Phi { algebra, part, element } => {
            let d = DualContext::from_algebra(&algebra.load()?)?;
            let x = parse_element(element)?;
            let r = match part {
                PhiPart::Full => d.phi(&x)?,
                PhiPart::Shuffle => d.phi1(&x)?,
                PhiPart::Coproduct => d.phi2(&x)?,
            };
            Ok(Output::ok(vec![render_element2(&r).replace('e', "c")], json!({ "result": element2_json(&r) })))
        }
        DualCommand::DeltaSigma { algebra, element } => {
            let d = DualContext::from_algebra(&algebra.load()?)?;
            let x = parse_element(element)?;
            let i = x.degree()?.unwrap_or(0);
            let r = d.delta_sigma(i, &x)?;
            Ok(Output::ok(vec![render_element2(&r).replace('e', "c")], json!({ "result": element2_json(&r) })))
        }
        DualCommand::VerifyAdjoint { algebra, u, v, z } => {
            let d = DualContext::from_algebra(&algebra.load()?)?;
            let (u, v, z) = (parse_element(u)?, parse_element(v)?, parse_element(z)?);
            let lhs = d.pairing(&d.paired().qqsh(&u, &v)?, &z);
            let rhs = d.pairing2(&Element2::tensor(&u, &v), &d.phi(&z)?);
            let holds = lhs == rhs;
            let mut text = vec![format!("<u ⋈ v, z> = {lhs}"), format!("<u ⊗ v, Φ(z)> = {rhs}")];
            if let (Some(a), Some(b)) = (ctx.eval_scalar(&lhs)?, ctx.eval_scalar(&rhs)?) {
                text.push(format!("at q: {a} and {b}"));
            }
            text.push(if holds { "adjoint: holds".into() } else { "adjoint: FAILS".into() });
            Ok(Output {
                text,
                json: json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string(), "holds": holds }),
                failed: !holds,
            })
        }
        DualCommand::Verify { algebra, max_degree } => {
            let alg = algebra.load()?;
            Ok(reports_output(qqsh::verify::check_dual(&alg, *max_degree, Exec::default())?))
        }
    }
}

fn rb(ctx: &Ctx, what: &RbCommand) -> Result<Output, Error> {
    let linear = |fixture: RbFixture, v: LinearV| -> Result<Output, Error> {
        let mut text = vec![render_linear(&v, fixture.var())];
        let mut j = json!({
            "result": v.iter().map(|(l, c)| json!({ "coeff": c.to_string(), "letter": l.id() })).collect::<Vec<_>>()
        });
        if let Some(q0) = &ctx.eval_q {
            let mut ev = LinearV::zero();
            for (l, c) in &v {
                ev.add_term(*l, rational_scalar(&c.eval(q0)?));
            }
            text.push(format!("at q = {q0}: {}", render_linear(&ev, fixture.var())));
            j["eval_q"] = json!(render_linear(&ev, fixture.var()));
        }
        Ok(Output::ok(text, j))
    };
    match what {
        RbCommand::Fbar { fixture, element } => {
            let r = RotaBaxter::by_name(fixture.name())?;
            linear(*fixture, r.fbar(&parse_element(element)?)?)
        }
        RbCommand::Ftilde { fixture, element } => {
            let r = RotaBaxter::by_name(fixture.name())?;
            linear(*fixture, r.ftilde(&parse_element(element)?)?)
        }
        RbCommand::Verify { fixture, max_degree } => {
            let r = RotaBaxter::by_name(fixture.name())?;
            Ok(reports_output(r.verify_all(*max_degree, Exec::default())))
        }
    }
}

fn zeta(ctx: &Ctx, args: &ZetaArgs) -> Result<Output, Error> {
    let kind = match args.kind {
        KindArg::Zudilin => ZetaKind::Zudilin,
        KindArg::Bradley => ZetaKind::Bradley,
    };
    let index: ZetaIndex = args.index.parse()?;
    let z = Zeta::new();
    let routes: &[(Route, &str)] = match args.route {
        RouteArg::Direct => &[(Route::Direct, "direct")],
        RouteArg::Series => &[(Route::Series, "series")],
        RouteArg::Both => &[(Route::Direct, "direct"), (Route::Series, "series")],
    };
    let mut text = Vec::new();
    let mut j = json!({ "kind": format!("{kind:?}").to_lowercase(), "index": index.parts(), "N": args.n });
    let mut values = Vec::new();
    for &(route, name) in routes {
        let v = z.truncated(kind, &index, args.n, route, Exec::default())?;
        text.push(format!("{name}: {v}"));
        j[name] = json!(v.to_string());
        if let Some(e) = ctx.eval_scalar(&v)? {
            text.push(format!("{name} at q = {}: {e}", ctx.eval_q.as_ref().expect("set")));
            j[format!("{name}_eval_q")] = json!(e);
        }
        values.push(v);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    if values.len() == 2 {
        text.push(format!("routes agree: {agree}"));
        j["agree"] = json!(agree);
    }
    Ok(Output { text, json: j, failed: !agree })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let eval_q = match &cli.eval_q {
        None => None,
        Some(s) => Some(
            s.trim()
                .parse::<BigRational>()
                .map_err(|_| Error::Invalid(format!("--eval-q expects a rational such as 1/2, got '{s}'")))?,
        ),
    };
    let ctx = Ctx { eval_q };
    match &cli.command {
        Command::Product(a) => product(&ctx, a),
        Command::Power(a) => power(&ctx, a),
        Command::Enumerate { what } => enumerate(what),
        Command::Verify(a) => verify(a),
        Command::Dual { what } => dual(&ctx, what),
        Command::Rb { what } => rb(&ctx, what),
        Command::Zeta(a) => zeta(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                for line in &out.text {
                    println!("{line}");
                }
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
