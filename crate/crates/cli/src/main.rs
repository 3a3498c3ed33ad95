mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use hssp_lab::acceptance::{criterion_ids, galois_suite, run_criterion};
use hssp_lab::base::{
    deterministic_base_pm1, fg_point_base, random_base, random_base_size, separator_table, verify_base, BaseFamily,
    BaseSet,
};
use hssp_lab::ff::{Field, FieldElement, MultiPoly, Poly, PolyJson};
use hssp_lab::group::{Action, Group, GroupDescriptor};
use hssp_lab::oracle::{make_grover_oracle, make_hpgp_oracle, make_hpp_oracle, make_hqpp_oracle, Oracle, Scrambled};
use hssp_lab::reduce::{
    coefficient_labels, hqpp_to_hssp, lift_hssp_to_hsp, normalize, quadratic_coefficients, solve_multivariate_quadratic,
    u_from_subgroup,
};
use hssp_lab::solve::{brute_force_hsp, brute_force_hssp, grover_recover, grover_scan, univariate_hpgp_solver, HpgpPath, SubgroupFamily};
use hssp_lab::vandermonde::{build_vandermonde, exponent_set, reduce_hpgp_multivariate};
use hssp_lab::Error;

#[derive(Parser)]
#[command(name = "hssp-lab", version, about = "Experiments on hidden symmetry subgroup and hidden polynomial problems")]
struct Cli {
    /// Seed for every randomized choice.
    #[arg(long, global = true, env = "HSSP_LAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Print a table instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for independent trials.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural property suites.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Build or check strong bases.
    Base {
        mode: BaseMode,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Base points as a JSON list, for `verify`.
        #[arg(long)]
        points: Option<String>,
    },
    /// Separator counts for every pair of kernel points.
    Separators {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Recover a hidden object through the reduction chain.
    Solve(SolveArgs),
    /// Build the generalized Vandermonde system.
    Vandermonde {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Write the full system to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Query-count tables.
    Bench {
        #[command(subcommand)]
        what: BenchCmd,
    },
    /// Run the acceptance battery.
    Suite {
        #[command(subcommand)]
        what: SuiteCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Galois(GroupArgs),
}

#[derive(Subcommand)]
enum BenchCmd {
    Grover {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum SuiteCmd {
    Acceptance {
        /// Smaller trial counts.
        #[arg(long)]
        quick: bool,
        /// Restrict to these criterion ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Include wall-clock times (output is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group descriptor as JSON, or a path to a JSON file.
    #[arg(long)]
    group: String,
    /// Defaults to `shifting` for function-graph groups and `kernel` otherwise.
    #[arg(long)]
    action: Option<ActionArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    Regular,
    Kernel,
    Shifting,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseMode {
    Random,
    Deterministic,
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Hqpp,
    Hpp2,
    Hpgp,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    Both,
}

#[derive(Args)]
struct SolveArgs {
    problem: Problem,
    #[arg(long)]
    q: u64,
    /// Number of variables; 2 for hpp2 and 1 for hpgp by default.
    #[arg(long)]
    n: Option<usize>,
    /// Degree bound for hpgp.
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Hidden object as JSON; drawn from the seed when absent.
    #[arg(long)]
    hidden: Option<String>,
    #[arg(long, value_enum, default_value = "both", ignore_case = true)]
    path: PathArg,
    #[arg(long, default_value_t = 1)]
    trials: usize,
}

struct Outcome {
    records: Vec<Value>,
    code: u8,
}

impl Outcome {
    fn ok(records: Vec<Value>) -> Self {
        Outcome { records, code: 0 }
    }

    fn checked(records: Vec<Value>, passed: bool) -> Self {
        Outcome {
            records,
            code: if passed { 0 } else { 3 },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = if cli.pretty {
                output::table(&out.records)
            } else {
                output::json_lines(&out.records)
            };
            print!("{text}");
            ExitCode::from(out.code)
        }
        Err(e) => {
            let promise = e.downcast_ref::<Error>().is_some_and(Error::is_promise_violation);
            eprintln!("{}", json!({"error": format!("{e:#}"), "promise_violation": promise}));
            ExitCode::from(if promise { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build()?;
    pool.install(|| match &cli.cmd {
        Cmd::Verify {
            what: VerifyCmd::Galois(g),
        } => verify_galois(g),
        Cmd::Base {
            mode,
            group,
            epsilon,
            trials,
            points,
        } => base(cli.seed, *mode, group, *epsilon, *trials, points.as_deref()),
        Cmd::Separators { group } => separators(group),
        Cmd::Solve(args) => solve(cli.seed, args),
        Cmd::Vandermonde { q, n, d, emit } => vandermonde(*q, *n, *d, emit.as_ref()),
        Cmd::Bench {
            what: BenchCmd::Grover { q },
        } => bench_grover(*q),
        Cmd::Suite {
            what: SuiteCmd::Acceptance { quick, only, timings },
        } => acceptance(*quick, only, *timings),
    })
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Independent trials in parallel, returned in trial order.
fn trials<F>(n: usize, f: F) -> anyhow::Result<Vec<Value>>
where
    F: Fn(usize) -> anyhow::Result<Value> + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

fn load_json(arg: &str) -> anyhow::Result<Value> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()).into())
}

fn build_action(args: &GroupArgs) -> anyhow::Result<(GroupDescriptor, Action)> {
    let desc: GroupDescriptor =
        serde_json::from_value(load_json(&args.group)?).map_err(|e| Error::Parse(format!("group: {e}")))?;
    let group = Arc::new(Group::from_descriptor(&desc)?);
    let kind = args.action.unwrap_or(match desc {
        GroupDescriptor::FunctionGraph { .. } => ActionArg::Shifting,
        _ => ActionArg::Kernel,
    });
    let action = match kind {
        ActionArg::Regular => Action::regular(group),
        ActionArg::Kernel => Action::kernel(group),
        ActionArg::Shifting => Action::shifting(group)?,
    };
    Ok((desc, action))
}

fn verify_galois(args: &GroupArgs) -> anyhow::Result<Outcome> {
    let (desc, action) = build_action(args)?;
    let report = galois_suite(&action)?;
    let passed = report.failure.is_none();
    Ok(Outcome::checked(
        vec![json!({
            "group": desc,
            "subgroups": report.subgroups,
            "closed": report.closed,
            "passed": passed,
            "failure": report.failure,
        })],
        passed,
    ))
}

fn base_family(desc: &GroupDescriptor) -> BaseFamily {
    match desc {
        GroupDescriptor::Affine { .. } => BaseFamily::FrobeniusComplements,
        GroupDescriptor::FunctionGraph { .. } => BaseFamily::StandardComplements,
        _ => BaseFamily::Closed,
    }
}

fn base(seed: u64, mode: BaseMode, args: &GroupArgs, eps: f64, n: usize, points: Option<&str>) -> anyhow::Result<Outcome> {
    let (desc, action) = build_action(args)?;
    match mode {
        BaseMode::Random => {
            let size = random_base_size(action.domain_size(), eps)?;
            let mut records = trials(n, |t| {
                let b = random_base(&action, eps, &mut trial_rng(seed, t))?;
                Ok(json!({"trial": t, "epsilon": eps, "size_bound": size, "points": b.points(), "strong": verify_base(&b)?}))
            })?;
            let failures = records.iter().filter(|r| r["strong"] == false).count();
            records.push(json!({
                "trials": n,
                "failures": failures,
                "failure_rate": failures as f64 / n.max(1) as f64,
                "epsilon": eps,
            }));
            Ok(Outcome::ok(records))
        }
        BaseMode::Deterministic => {
            let b = match &desc {
                GroupDescriptor::FunctionGraph { q, d, n } => {
                    let pts = fg_point_base(&Field::with_order(*q)?, *d, *n)?;
                    BaseSet::new(action, pts, BaseFamily::StandardComplements)?
                }
                _ => deterministic_base_pm1(&action)?,
            };
            Ok(Outcome::ok(vec![json!({"points": b.points(), "strong": verify_base(&b)?})]))
        }
        BaseMode::Verify => {
            let pts: Vec<usize> = serde_json::from_value(load_json(points.ok_or_else(|| anyhow!("--points is required"))?)?)
                .map_err(|e| Error::Parse(format!("points: {e}")))?;
            let b = BaseSet::new(action, pts, base_family(&desc))?;
            let strong = verify_base(&b)?;
            Ok(Outcome::ok(vec![json!({"points": b.points(), "strong": strong})]))
        }
    }
}

fn separators(args: &GroupArgs) -> anyhow::Result<Outcome> {
    let (_, action) = build_action(args)?;
    let k = action.domain_size();
    let h = action.group().h_order();
    let bound = k - h + 1;
    let mut records = Vec::new();
    let mut all_ok = true;
    let mut min = usize::MAX;
    for (u, v, count) in separator_table(&action)? {
        let ok = count >= bound && 2 * count > k;
        all_ok &= ok;
        min = min.min(count);
        records.push(json!({"u": u, "v": v, "count": count, "ok": ok}));
    }
    records.push(json!({"pairs": records.len(), "min_count": min, "bound": bound, "half_k": k as f64 / 2.0, "all_ok": all_ok}));
    Ok(Outcome::checked(records, all_ok))
}

fn promise(msg: impl Into<String>) -> anyhow::Error {
    Error::PromiseViolation(msg.into()).into()
}

fn parse_poly(field: &Field, n: usize, hidden: &Value) -> anyhow::Result<MultiPoly> {
    if let Some(p) = hidden.get("poly") {
        let pj: PolyJson = serde_json::from_value(p.clone()).map_err(|e| Error::Parse(format!("poly: {e}")))?;
        let poly = MultiPoly::from_json(&pj, Some(n))?;
        if poly.field() != field {
            return Err(Error::FieldMismatch.into());
        }
        return Ok(poly);
    }
    Err(Error::Parse("expected \"poly\" or \"coeffs\" in the hidden object".into()).into())
}

fn coeff_list(field: &Field, hidden: &Value) -> anyhow::Result<Option<Vec<FieldElement>>> {
    let Some(c) = hidden.get("coeffs") else {
        return Ok(None);
    };
    let vals: Vec<u64> = serde_json::from_value(c.clone()).map_err(|e| Error::Parse(format!("coeffs: {e}")))?;
    Ok(Some(vals.into_iter().map(|v| field.element(v)).collect::<Result<_, _>>()?))
}

/// Quadratic with the given coefficient vector in solver order.
fn quadratic_from_coeffs(field: &Field, n: usize, c: &[FieldElement]) -> anyhow::Result<MultiPoly> {
    if c.len() != n * (n + 3) / 2 {
        bail!(Error::ArityMismatch {
            expected: n * (n + 3) / 2,
            got: c.len()
        });
    }
    let mut exps = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 2;
        exps.push(e);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = 1;
            exps.push(e);
        }
    }
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        exps.push(e);
    }
    Ok(MultiPoly::from_terms(field, n, exps.into_iter().zip(c.iter().copied()))?)
}

/// Over F_2, `x^2 = x` as functions; the solver reports the linear form.
fn fold_squares(field: &Field, n: usize, c: &mut [FieldElement]) {
    if field.q() == 2 {
        let lin = c.len() - n;
        for i in 0..n {
            c[lin + i] = field.add(c[lin + i], c[i]);
            c[i] = field.zero();
        }
    }
}

fn values(v: &[FieldElement]) -> Vec<u32> {
    v.iter().map(|c| c.value()).collect()
}

fn solve(seed: u64, args: &SolveArgs) -> anyhow::Result<Outcome> {
    let field = Field::with_order(args.q)?;
    let hidden = args.hidden.as_deref().map(load_json).transpose()?;
    let records = match args.problem {
        Problem::Hqpp => {
            if let Some(n) = args.n.filter(|&n| n != 1) {
                bail!(Error::Unsupported(format!("HQPP is univariate, got n = {n}")));
            }
            trials(args.trials, |t| solve_hqpp(&field, hidden.as_ref(), &mut trial_rng(seed, t), t))?
        }
        Problem::Hpp2 => {
            let n = args.n.unwrap_or(2);
            trials(args.trials, |t| solve_hpp2(&field, n, hidden.as_ref(), &mut trial_rng(seed, t), t))?
        }
        Problem::Hpgp => {
            let n = args.n.unwrap_or(1);
            let path = match args.path {
                PathArg::A => HpgpPath::A,
                PathArg::B => HpgpPath::B,
                PathArg::Both => HpgpPath::Both,
            };
            trials(args.trials, |t| {
                solve_hpgp(&field, n, args.d, path, hidden.as_ref(), &mut trial_rng(seed, t), t)
            })?
        }
    };
    let passed = records.iter().all(|r| r["correct"] != false);
    if !passed {
        bail!("a reduction returned a wrong answer");
    }
    Ok(Outcome::ok(records))
}

fn solve_hqpp(field: &Field, hidden: Option<&Value>, rng: &mut ChaCha8Rng, trial: usize) -> anyhow::Result<Value> {
    let u = match hidden {
        Some(h) => {
            let u = h.get("u").and_then(Value::as_u64).ok_or_else(|| Error::Parse("expected {\"u\": n}".into()))?;
            field.element(u)?
        }
        None => field.element(rng.gen_range(0..field.q() as u64))?,
    };
    let scramble = rng.gen::<u64>();
    let inst = make_hqpp_oracle(field, u)?.map_oracle(|o| Scrambled::new(o, scramble));
    let hssp = hqpp_to_hssp(inst)?;
    let action = hssp.action().expect("group setting").clone();
    let group = action.group().clone();
    let base = deterministic_base_pm1(&action)?;
    let lifted = lift_hssp_to_hsp(hssp, &base)?;
    let h = brute_force_hsp(&lifted.oracle, &group, &SubgroupFamily::Any)?;
    let found = u_from_subgroup(&group, &h)?;
    Ok(json!({
        "trial": trial,
        "q": field.q(),
        "u": found.value(),
        "correct": found == u,
        "queries": lifted.oracle.inner().query_count(),
        "trace": {
            "substitutions": ["HQPP read as HSSP on Aff_q({±1})", "HSSP lifted to HSP", "HSP by brute force", "u = b/2 from the reflection (b, -1)"],
            "base": base.points(),
            "hsp_queries": lifted.oracle.query_count(),
            "subgroup": h.elements(),
        },
    }))
}

fn solve_hpp2(field: &Field, n: usize, hidden: Option<&Value>, rng: &mut ChaCha8Rng, trial: usize) -> anyhow::Result<Value> {
    let q = field.q() as u64;
    let len = n * (n + 3) / 2;
    let poly = match hidden {
        Some(h) => match coeff_list(field, h)? {
            Some(c) => quadratic_from_coeffs(field, n, &c)?,
            None => parse_poly(field, n, h)?,
        },
        None => loop {
            let mut c: Vec<FieldElement> = (0..len).map(|_| field.element(rng.gen_range(0..q))).collect::<Result<_, _>>()?;
            fold_squares(field, n, &mut c);
            if c.iter().any(|x| !x.is_zero()) {
                break quadratic_from_coeffs(field, n, &c)?;
            }
        },
    };
    let mut truth = quadratic_coefficients(&poly).map_err(|_| promise("hidden polynomial must be a quadratic without constant term"))?;
    fold_squares(field, n, &mut truth);
    if truth.iter().all(|c| c.is_zero()) {
        return Err(promise("hidden polynomial is zero as a function"));
    }
    let expected = normalize(field, &truth);
    let inst = make_hpp_oracle(field, n, &poly)?;
    let oracle = Scrambled::new(&inst.oracle, rng.gen());
    let sol = solve_multivariate_quadratic(&oracle, field, n)?;
    let got = normalize(field, &sol.coefficients());
    Ok(json!({
        "trial": trial,
        "q": field.q(),
        "n": n,
        "labels": coefficient_labels(n),
        "coeffs": values(&got),
        "correct": got == expected,
        "queries": sol.queries,
        "r_calls": sol.r_calls,
        "r_call_bound": sol.r_call_bound,
        "trace": {
            "branches": sol.branches,
            "line_tests": sol.line_tests,
            "kernel_finder_calls": sol.kernel_finder_calls,
            "substitutions": sol.lines,
        },
    }))
}

fn without_constant(p: &MultiPoly) -> anyhow::Result<MultiPoly> {
    let terms = p.terms().iter().filter(|(e, _)| e.iter().any(|&a| a > 0)).map(|(e, &c)| (e.clone(), c));
    Ok(MultiPoly::from_terms(p.field(), p.nvars(), terms.collect::<Vec<_>>())?)
}

fn solve_hpgp(
    field: &Field,
    n: usize,
    d: usize,
    path: HpgpPath,
    hidden: Option<&Value>,
    rng: &mut ChaCha8Rng,
    trial: usize,
) -> anyhow::Result<Value> {
    let q = field.q() as u64;
    let poly = match hidden {
        Some(h) => match coeff_list(field, h)? {
            Some(c) if n == 1 => MultiPoly::from_univariate(&Poly::new(field, c)?),
            Some(_) => bail!(Error::Parse("\"coeffs\" is only accepted for n = 1; use \"poly\"".into())),
            None => parse_poly(field, n, h)?,
        },
        None => {
            let set = exponent_set(field.q() as u64, n, d)?;
            let mut terms = Vec::new();
            for e in &set.exponents {
                terms.push((e.clone(), field.element(rng.gen_range(0..q))?));
            }
            MultiPoly::from_terms(field, n, terms)?
        }
    };
    if poly.total_degree().unwrap_or(0) as usize > d {
        return Err(promise(format!("hidden polynomial has degree above d = {d}")));
    }
    let truth = without_constant(&poly)?;
    let inst = make_hpgp_oracle(field, n, &poly, d)?;
    let oracle = Scrambled::new(&inst.oracle, rng.gen());
    let path_name = match path {
        HpgpPath::A => "A",
        HpgpPath::B => "B",
        HpgpPath::Both => "both",
    };
    if n == 1 {
        let sol = univariate_hpgp_solver(&oracle, field, d, path)?;
        let got = MultiPoly::from_univariate(&sol.poly);
        return Ok(json!({
            "trial": trial,
            "q": field.q(),
            "n": n,
            "d": d,
            "path": path_name,
            "coeffs": values(&sol.coefficients(d)),
            "correct": got == truth,
            "queries": sol.queries,
            "univariate_solves": 1,
        }));
    }
    let sol = reduce_hpgp_multivariate(&oracle, field, n, d, path)?;
    Ok(json!({
        "trial": trial,
        "q": field.q(),
        "n": n,
        "d": d,
        "path": path_name,
        "poly": sol.poly.to_json(),
        "correct": sol.poly == truth,
        "queries": sol.queries,
        "univariate_solves": sol.univariate_solves,
        "information": sol.information,
    }))
}

fn vandermonde(q: u64, n: usize, d: usize, emit: Option<&PathBuf>) -> anyhow::Result<Outcome> {
    let sys = build_vandermonde(q, n, d)?;
    let js = sys.to_json();
    let full_rank = js.rank == js.size;
    let record = match emit {
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&js)? + "\n").with_context(|| format!("writing {}", path.display()))?;
            json!({"q": q, "n": n, "d": d, "size": js.size, "rank": js.rank, "emitted": path.display().to_string()})
        }
        None => serde_json::to_value(&js)?,
    };
    Ok(Outcome::checked(vec![record], full_rank))
}

fn bench_grover(q: u64) -> anyhow::Result<Outcome> {
    let field = Field::with_order(q)?;
    let qs = field.q() as usize;
    let natural: Vec<usize> = (0..qs).collect();
    let mut records = trials(qs, |c| {
        let target = field.element(c as u64)?;
        let scan = grover_scan(&make_grover_oracle(&field, target)?.oracle, &natural)?;
        // Adversary order: the target is visited last.
        let adversary: Vec<usize> = (0..qs).filter(|&x| x != c).chain([c]).collect();
        let worst = grover_scan(&make_grover_oracle(&field, target)?.oracle, &adversary)?;
        let inst = make_grover_oracle(&field, target)?;
        let action = inst.action().expect("group setting").clone();
        let h = brute_force_hssp(&inst.oracle, &action, &SubgroupFamily::Any)?;
        let g = h
            .elements()
            .iter()
            .copied()
            .find(|&g| g != action.group().identity())
            .ok_or_else(|| promise("stabilizer is trivial"))?;
        let (b, a) = action.group().affine_parts(g)?;
        let recovered = grover_recover(&field, b, a)?;
        Ok(json!({
            "c": c,
            "scan_queries": scan.queries,
            "adversary_queries": worst.queries,
            "hssp_queries": inst.oracle.query_count(),
            "recovered": recovered.value(),
        }))
    })?;
    let total: u64 = records.iter().map(|r| r["scan_queries"].as_u64().unwrap_or(0)).sum();
    let ok = records.iter().all(|r| r["recovered"] == r["c"]);
    records.push(json!({
        "q": q,
        "mean_scan_queries": total as f64 / qs as f64,
        "expected_mean": (qs as f64 + 1.0) / 2.0,
        "worst_case": qs,
        "sqrt_q": (qs as f64).sqrt(),
    }));
    Ok(Outcome::checked(records, ok))
}

fn acceptance(quick: bool, only: &[u8], timings: bool) -> anyhow::Result<Outcome> {
    let ids: Vec<u8> = criterion_ids().into_iter().filter(|id| only.is_empty() || only.contains(id)).collect();
    if ids.is_empty() {
        bail!("no criterion matches {only:?}");
    }
    let results: Vec<_> = ids.par_iter().map(|&id| run_criterion(id, quick).expect("known id")).collect();
    let passed = results.iter().all(|r| r.passed);
    let records = results
        .iter()
        .map(|r| {
            let mut v = json!({
                "id": r.id,
                "criterion": r.name,
                "status": if r.passed { "PASS" } else { "FAIL" },
                "detail": r.detail,
                "budget_s": r.budget_s,
            });
            if timings {
                v["elapsed_s"] = json!(r.elapsed_s);
            }
            v
        })
        .collect();
    Ok(Outcome::checked(records, passed))
}
