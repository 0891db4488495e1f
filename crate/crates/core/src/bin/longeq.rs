//! `longeq`: command-line front end.
//!
//! Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad input,
//! 70 internal inconsistency.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use nalgebra::Complex;
use serde::Serialize;

use longeq_core::error::Error;
use longeq_core::frt::{build_lr, presentation_text, PresentationDoc};
use longeq_core::group::FiniteGroup;
use longeq_core::hopf::{
    check_axioms, counit_table, group_algebra, l1_solution_space, sigma_feasibility, sweedler_h4, Axiom,
    BialgebraDoc, Feasibility, SigmaDoc, SolutionSpace,
};
use longeq_core::io::{
    complex_matrix_to_doc, operator_json, parse_naming, parse_operator, ComplexDoc, GradedDoc,
    HolonomyHeader, HomothetyDoc, LoopDoc,
};
use longeq_core::kz::{
    circle_oracle, convergence_order, flatness_residuals, integrate_holonomy, max_abs_diff, FlatnessEntry, KzSystem,
    Order,
};
use longeq_core::linalg::QMatrix;
use longeq_core::scalar::{self, Frac};
use longeq_core::tensor::{
    check_laws, long_componentwise_witness, make_conjugate, make_diag, make_graded, make_homothety, make_pair,
    make_phi, Law, TensorOp2,
};

const FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "longeq", version, about = "Exact checks for the Long equation, L(R) and KZ holonomy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check equations for an operator.
    Check {
        #[arg(long)]
        op: PathBuf,
        /// Comma-separated: long, d_equation, qybe, hopf, kz_bracket, symmetric.
        #[arg(long, default_value = "long")]
        laws: String,
    },
    /// Emit an operator from one of the solution families.
    #[command(subcommand)]
    Construct(Construct),
    /// Build the presentation of L(R).
    Frt(FrtArgs),
    /// Build L(R) and run its verifications only.
    Roundtrip(FrtArgs),
    /// Integrate KZ holonomy along a loop.
    Kz(KzArgs),
    /// Check the Long-bialgebra axioms for a bialgebra and σ table.
    BialgebraCheck(BialgebraArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// R^φ for an idempotent map φ on {1..n}.
    Phi {
        #[arg(long)]
        n: usize,
        /// φ(1),...,φ(n), 1-based.
        #[arg(long)]
        map: String,
    },
    /// R(m_i ⊗ m_j) = a_ij m_i ⊗ m_j.
    Diag {
        #[arg(long)]
        n: usize,
        /// n² entries, row-major.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// f ⊗ g for commuting f, g. Matrices as rows separated by `;`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// (u ⊗ u) R (u ⊗ u)⁻¹.
    Conjugate {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long)]
        op: PathBuf,
    },
    /// Operator of a graded module with a group action (JSON file).
    Graded {
        #[arg(long)]
        data: PathBuf,
    },
    /// Homothety of a central element (JSON file).
    Homothety {
        #[arg(long)]
        data: PathBuf,
    },
}

#[derive(Args)]
struct FrtArgs {
    #[arg(long)]
    op: PathBuf,
    /// JSON object mapping comatrix labels to generator names.
    #[arg(long)]
    naming: Option<PathBuf>,
    /// Print the text presentation instead of JSON.
    #[arg(long)]
    present: bool,
}

#[derive(Args)]
struct KzArgs {
    #[arg(long)]
    op: PathBuf,
    #[arg(long)]
    points: usize,
    /// Complex parameter as `RE,IM`.
    #[arg(long, allow_hyphen_values = true)]
    h: String,
    /// Loop JSON file.
    #[arg(long = "loop")]
    loop_file: PathBuf,
    /// Overrides the loop's step count.
    #[arg(long)]
    steps: Option<usize>,
    /// Compare against the exponential of the enclosed R^{ij} (symmetric operators only).
    #[arg(long)]
    compare: bool,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Also estimate the integrator's convergence order.
    #[arg(long)]
    order: bool,
}

#[derive(Args)]
struct BialgebraArgs {
    /// Bialgebra JSON file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    bialgebra: Option<PathBuf>,
    /// `sweedler`, or `cyclic:M` for the group algebra of Z/M.
    #[arg(long)]
    builtin: Option<String>,
    /// σ table JSON file; defaults to ε ⊗ ε.
    #[arg(long)]
    sigma: Option<PathBuf>,
    /// Comma-separated subset of L1..L5, B1, strongD; defaults to all.
    #[arg(long)]
    axioms: Option<String>,
    /// Also report the linear solution space and the feasibility test.
    #[arg(long)]
    solve: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

/// Input errors exit 2, internal ones 70, everything else 1.
fn classify(e: Error) -> Failure {
    let code = match &e {
        Error::Internal(_) => 70,
        Error::NotALongSolution { .. } | Error::NotAStrongDMap { .. } | Error::CentralityViolated { .. } => 1,
        _ => 2,
    };
    Failure { code, message: e.to_string() }
}

fn as_input(e: Error) -> Failure {
    match e {
        Error::Internal(_) => classify(e),
        other => Failure::usage(other.to_string()),
    }
}

#[derive(Serialize)]
struct CheckDoc {
    name: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CheckDoc {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        CheckDoc { name: name.into(), pass, witness: None, detail: None }
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    format_version: u32,
    command: Vec<String>,
    checks: Vec<CheckDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<T>,
    elapsed_ms: u128,
}

fn emit_report<T: Serialize>(checks: Vec<CheckDoc>, result: Option<T>, start: Instant) -> Result<u8, Failure> {
    let ok = checks.iter().all(|c| c.pass);
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!("check `{}` failed{}", c.name, c.witness.as_ref().map(|w| format!(" at {w:?}")).unwrap_or_default());
    }
    let report = Report {
        format_version: FORMAT_VERSION,
        command: std::env::args().skip(1).collect(),
        checks,
        result,
        elapsed_ms: start.elapsed().as_millis(),
    };
    print_json(&report);
    Ok(if ok { 0 } else { 1 })
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn read_operator(path: &Path) -> Result<TensorOp2, Failure> {
    parse_operator(&read(path)?).map_err(as_input)
}

fn parse_list<T>(text: &str, f: impl Fn(&str) -> Result<T, Error>) -> Result<Vec<T>, Failure> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(|s| f(s.trim()).map_err(as_input)).collect()
}

/// `"1,2;3,4"` → rows.
fn parse_matrix(text: &str) -> Result<QMatrix, Failure> {
    let rows = text
        .split(';')
        .map(|row| parse_list(row, scalar::parse))
        .collect::<Result<Vec<_>, _>>()?;
    QMatrix::from_rows(rows).map_err(as_input)
}

fn cmd_check(op: &Path, laws: &str) -> Result<u8, Failure> {
    let start = Instant::now();
    let r = read_operator(op)?;
    let laws = parse_list(laws, |s| s.parse::<Law>())?;
    if laws.is_empty() {
        return Err(Failure::usage("no laws requested"));
    }
    let report = check_laws(&r, &laws);
    let mut checks = Vec::new();
    for (law, ok) in &report.results {
        let mut c = CheckDoc::new(law.name(), *ok);
        if *law == Law::Long {
            let witness = long_componentwise_witness(&r);
            if witness.is_none() != *ok {
                return Err(Failure {
                    code: 70,
                    message: "matrix-level and componentwise Long checks disagree".into(),
                });
            }
            if let Some(w) = witness {
                c.witness = Some(w.tuple.to_vec());
                c.detail = Some(format!("componentwise identity ({}) fails", w.equation));
            }
        }
        checks.push(c);
    }
    emit_report::<()>(checks, None, start)
}

fn cmd_construct(c: &Construct) -> Result<u8, Failure> {
    let r = match c {
        Construct::Phi { n, map } => {
            let phi = parse_list(map, |s| {
                s.parse::<usize>().map_err(|_| Error::Parse(format!("`{s}` is not an index")))
            })?;
            if phi.len() != *n || phi.iter().any(|&k| k == 0 || k > *n) {
                return Err(Failure::usage(format!("--map needs {n} values in 1..={n}")));
            }
            make_phi(&phi.iter().map(|k| k - 1).collect::<Vec<_>>()).map_err(as_input)?
        }
        Construct::Diag { n, a } => {
            let values = parse_list(a, scalar::parse)?;
            if values.len() != n * n {
                return Err(Failure::usage(format!("--a needs {} values", n * n)));
            }
            make_diag(&QMatrix::from_fn(*n, *n, |i, j| values[i * n + j].clone())).map_err(as_input)?
        }
        Construct::Pair { f, g } => make_pair(&parse_matrix(f)?, &parse_matrix(g)?).map_err(as_input)?,
        Construct::Conjugate { u, op } => make_conjugate(&parse_matrix(u)?, &read_operator(op)?).map_err(as_input)?,
        Construct::Graded { data } => {
            let doc: GradedDoc = serde_json::from_str(&read(data)?).map_err(|e| as_input(e.into()))?;
            make_graded(&doc.to_data().map_err(as_input)?).map_err(as_input)?
        }
        Construct::Homothety { data } => {
            let doc: HomothetyDoc = serde_json::from_str(&read(data)?).map_err(|e| as_input(e.into()))?;
            let (rep, element) = doc.to_parts().map_err(as_input)?;
            make_homothety(&rep, &element).map_err(classify)?
        }
    };
    if check_laws(&r, &[Law::Long]).get(Law::Long) != Some(true) {
        return Err(Failure { code: 70, message: "constructed operator is not a Long solution".into() });
    }
    println!("{}", operator_json(&r));
    Ok(0)
}

fn load_lr(args: &FrtArgs) -> Result<(TensorOp2, longeq_core::frt::LongPresentation), Failure> {
    let r = read_operator(&args.op)?;
    let naming = match &args.naming {
        Some(p) => Some(parse_naming(r.dim(), &read(p)?).map_err(as_input)?),
        None => None,
    };
    let lr = build_lr(&r, naming.as_ref()).map_err(classify)?;
    if lr.round_trip() != r {
        return Err(Failure { code: 70, message: "round trip R_sigma != R".into() });
    }
    Ok((r, lr))
}

fn cmd_frt(args: &FrtArgs) -> Result<u8, Failure> {
    let (_, lr) = load_lr(args)?;
    if args.present {
        print!("{}", presentation_text(&lr));
    } else {
        print_json(&PresentationDoc::from_presentation(&lr));
    }
    Ok(0)
}

fn cmd_roundtrip(args: &FrtArgs) -> Result<u8, Failure> {
    let start = Instant::now();
    let (r, lr) = load_lr(args)?;
    let mut checks = vec![
        CheckDoc::new("long", true),
        CheckDoc::new("coideal", lr.quotient().is_coideal()),
        CheckDoc::new("round_trip", true),
    ];
    let mut l1 = CheckDoc::new("l1_generators", true);
    if let Some(w) = lr.l1_violation() {
        l1.pass = false;
        l1.witness = Some(w.to_vec());
    }
    checks.push(l1);
    let mut dimodule = CheckDoc::new("dimodule", true);
    for t in 0..lr.num_generators() {
        let h = longeq_core::free::Poly::generator(t);
        if let Some(l) = lr.dimodule_violation(&h).map_err(classify)? {
            dimodule.pass = false;
            dimodule.witness = Some(vec![t + 1, l + 1]);
            break;
        }
    }
    checks.push(dimodule);
    match lr.convolution_inverse(&r) {
        Ok(_) => checks.push(CheckDoc::new("convolution_inverse", true)),
        Err(Error::SingularOperator) => {
            let mut c = CheckDoc::new("convolution_inverse", true);
            c.detail = Some("skipped: R is not invertible".into());
            checks.push(c);
        }
        Err(e) => return Err(classify(e)),
    }
    emit_report(checks, Some(PresentationDoc::from_presentation(&lr)), start)
}

#[derive(Serialize)]
struct KzResult {
    header: HolonomyHeader,
    holonomy: Vec<Vec<ComplexDoc>>,
    symmetric: bool,
    flatness: Vec<FlatnessEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    convergence: Option<ConvergenceDoc>,
}

#[derive(Serialize)]
struct ConvergenceDoc {
    steps: [usize; 3],
    errors: [f64; 2],
    /// `null` when every run agreed exactly.
    order: Option<f64>,
}

fn parse_complex(text: &str) -> Result<Complex<f64>, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |s: &str| s.parse::<f64>().map_err(|_| Failure::usage(format!("`{s}` is not a number")));
    match parts.as_slice() {
        [re] => Ok(Complex::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex::new(num(re)?, num(im)?)),
        _ => Err(Failure::usage("--h expects RE,IM")),
    }
}

fn cmd_kz(args: &KzArgs) -> Result<u8, Failure> {
    let start = Instant::now();
    let r = read_operator(&args.op)?;
    let h = parse_complex(&args.h)?;
    let doc: LoopDoc = serde_json::from_str(&read(&args.loop_file)?).map_err(|e| as_input(e.into()))?;
    let mut lp = doc.to_loop().map_err(as_input)?;
    if let Some(s) = args.steps {
        if s == 0 {
            return Err(Failure::usage("--steps must be positive"));
        }
        lp = lp.with_steps(s);
    }
    if lp.points() != args.points {
        return Err(Failure::usage(format!("loop has {} points but --points is {}", lp.points(), args.points)));
    }
    if args.compare && !r.is_symmetric() {
        return Err(Failure::usage("--compare needs a symmetric operator (tau R tau = R)"));
    }
    let sys = KzSystem::new(&r, args.points, h).map_err(as_input)?;
    let w = integrate_holonomy(&sys, &lp).map_err(as_input)?;
    let flatness = flatness_residuals(&r, args.points);
    let mut checks = Vec::new();
    let mut oracle_distance = None;
    if args.compare {
        checks.push(CheckDoc::new("flatness", flatness.all_vanish()));
        let oracle = circle_oracle(&sys, &lp).map_err(as_input)?;
        let d = max_abs_diff(&w, &oracle);
        let mut c = CheckDoc::new("oracle_distance", d < args.tol);
        c.detail = Some(format!("{d:e} (tolerance {:e})", args.tol));
        checks.push(c);
        oracle_distance = Some(d);
    }
    let convergence = if args.order {
        let conv = convergence_order(&sys, &lp).map_err(as_input)?;
        let order = match conv.order {
            Order::Exact => None,
            Order::Estimated(p) => Some(p),
        };
        Some(ConvergenceDoc { steps: conv.steps, errors: conv.errors, order })
    } else {
        None
    };
    let result = KzResult {
        header: HolonomyHeader { h: [h.re, h.im], points: args.points, n: r.dim(), steps: lp.steps() },
        holonomy: complex_matrix_to_doc(&w),
        symmetric: sys.is_symmetric(),
        flatness: flatness.entries,
        oracle_distance,
        convergence,
    };
    emit_report(checks, Some(result), start)
}

#[derive(Serialize)]
struct SolveDoc {
    /// `null` when the linear axioms are inconsistent.
    l1_space_dim: Option<usize>,
    pinned: Vec<PinnedDoc>,
    feasibility: String,
}

#[derive(Serialize)]
struct PinnedDoc {
    left: String,
    right: String,
    value: Frac,
}

fn load_bialgebra(args: &BialgebraArgs) -> Result<longeq_core::hopf::FinDimBialgebra, Failure> {
    if let Some(path) = &args.bialgebra {
        let doc: BialgebraDoc = serde_json::from_str(&read(path)?).map_err(|e| as_input(e.into()))?;
        return doc.to_bialgebra().map_err(as_input);
    }
    let name = args.builtin.as_deref().unwrap_or_default();
    match name.split_once(':') {
        None if name == "sweedler" => Ok(sweedler_h4()),
        Some(("cyclic", m)) => {
            let m: usize = m.parse().map_err(|_| Failure::usage(format!("`{m}` is not a group order")))?;
            if m == 0 {
                return Err(Failure::usage("group order must be positive"));
            }
            Ok(group_algebra(&FiniteGroup::cyclic(m)))
        }
        _ => Err(Failure::usage(format!("unknown builtin `{name}` (sweedler, cyclic:M)"))),
    }
}

fn cmd_bialgebra(args: &BialgebraArgs) -> Result<u8, Failure> {
    let start = Instant::now();
    let b = load_bialgebra(args)?;
    let s = match &args.sigma {
        Some(p) => {
            let doc: SigmaDoc = serde_json::from_str(&read(p)?).map_err(|e| as_input(e.into()))?;
            doc.to_table().map_err(as_input)?
        }
        None => counit_table(b.coalgebra()),
    };
    if s.rows() != b.dim() || s.cols() != b.dim() {
        return Err(Failure::usage(format!("sigma table must be {0}x{0}", b.dim())));
    }
    let which = match &args.axioms {
        Some(list) => parse_list(list, |t| t.parse::<Axiom>())?,
        None => Axiom::ALL.to_vec(),
    };
    let report = check_axioms(&b, &s, &which);
    let labels = b.labels();
    let checks = report
        .results
        .iter()
        .map(|(axiom, witness)| {
            let mut c = CheckDoc::new(axiom.name(), witness.is_none());
            if let Some(w) = witness {
                c.detail = Some(w.iter().map(|&k| labels[k].clone()).collect::<Vec<_>>().join(", "));
                c.witness = Some(w.iter().map(|k| k + 1).collect());
            }
            c
        })
        .collect();
    let solve = args.solve.then(|| {
        let d = b.dim();
        let space = l1_solution_space(&b);
        let mut pinned = Vec::new();
        if let SolutionSpace::Affine(a) = &space {
            for k in 0..d * d {
                if let Some(v) = a.pinned(k) {
                    pinned.push(PinnedDoc {
                        left: labels[k / d].clone(),
                        right: labels[k % d].clone(),
                        value: Frac(v.clone()),
                    });
                }
            }
        }
        let feasibility = match sigma_feasibility(&b) {
            Feasibility::Infeasible { axiom, tuple } => format!(
                "infeasible: {axiom} contradiction at ({})",
                tuple.iter().map(|&k| labels[k].as_str()).collect::<Vec<_>>().join(", ")
            ),
            Feasibility::Unknown(a) => format!("unknown: residual space of dimension {}", a.dim()),
        };
        SolveDoc { l1_space_dim: space.affine().map(|a| a.dim()), pinned, feasibility }
    });
    emit_report(checks, solve, start)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Check { op, laws } => cmd_check(op, laws),
        Command::Construct(c) => cmd_construct(c),
        Command::Frt(a) => cmd_frt(a),
        Command::Roundtrip(a) => cmd_roundtrip(a),
        Command::Kz(a) => cmd_kz(a),
        Command::BialgebraCheck(a) => cmd_bialgebra(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
