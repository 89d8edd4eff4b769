use serde::Serialize;

use fqlin::arith::lcm_all;
use fqlin::field::{make_field, FieldCtx, FieldParams};
use fqlin::linearized::find_normal;
use fqlin::oracle::{brute_sumset, brute_trace_fiber};
use fqlin::poly::{self, FqPoly};
use fqlin::solver::{
    count_solutions_at, enumerate_solutions, lambda_ie, solve_one, sumset_size, trace_consistent, trace_count,
    trace_solve, traces_match, zero_sum_count, EquationSpec, TraceTarget,
};
use fqlin::verify::{run_grid, CaseStatus, GridConfig, GridPreset, VerifySummary};
use fqlin::{BaseField, PrimePower};

use crate::args::{Caps, Command, CountCmd, FieldArgs, FieldCmd, SumsetCmd, TraceCmd, VerifyCmd};
use crate::{render, CliError, Outcome, EXIT_MISMATCH, EXIT_OK};

type CliResult<T> = Result<T, CliError>;

pub fn dispatch(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Field(c) => cmd_field(c),
        Command::Count(c) => cmd_count(c),
        Command::Sumset(c) => cmd_sumset(c),
        Command::Trace(c) => cmd_trace(c),
        Command::Verify(c) => cmd_verify(c),
    }
}

fn lib(flag: &'static str) -> impl Fn(fqlin::Error) -> CliError {
    move |e| CliError::from_lib(flag, e)
}

fn emit<T: Serialize>(report: &T, json: bool, code: i32) -> Outcome {
    let stdout = if json { render::json(report) } else { render::text(report) };
    Outcome { code, stdout, stderr: String::new() }
}

fn parse_dims(flag: &str, text: &str) -> CliResult<Vec<usize>> {
    let dims = text
        .split(',')
        .map(|d| match d.trim().parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(CliError::usage(format!("{flag}: '{}' is not a positive integer", d.trim()))),
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(dims)
}

#[derive(Debug, Serialize)]
struct FieldReport {
    p: u32,
    s: u32,
    q: u32,
    ell: usize,
    base_modulus: String,
    modulus: String,
}

impl FieldReport {
    fn of(ctx: &FieldCtx) -> Self {
        let order = ctx.order();
        Self {
            p: order.p,
            s: order.s,
            q: order.q,
            ell: ctx.ell(),
            base_modulus: poly::format(ctx.base_modulus()),
            modulus: poly::format(ctx.ext_modulus()),
        }
    }
}

/// Builds F_{q^ℓ} from the shared flags; pinned moduli take precedence over the seed.
fn build_field(args: &FieldArgs, ell: usize, caps: &Caps) -> CliResult<FieldCtx> {
    PrimePower::new(args.p, args.s).map_err(lib("--p"))?;
    let mut params = FieldParams::new(args.p, args.s, ell)
        .seed(args.seed)
        .enum_cap(caps.enum_cap)
        .max_field_bits(caps.max_field_bits);
    if let Some(text) = &args.base_modulus {
        let prime = BaseField::prime(args.p).map_err(lib("--p"))?;
        params = params.base_modulus(poly::parse(&prime, text).map_err(lib("--base-modulus"))?);
    }
    let flag = if args.base_modulus.is_some() { "--base-modulus" } else { "--s" };
    let ctx = make_field(&params).map_err(lib(flag))?;
    match &args.modulus {
        None => Ok(ctx),
        Some(text) => {
            let m = poly::parse(ctx.base(), text).map_err(lib("--modulus"))?;
            let params = params.base_modulus(ctx.base_modulus().clone()).ext_modulus(m);
            make_field(&params).map_err(lib("--modulus"))
        }
    }
}

#[derive(Debug, Serialize)]
struct FieldOutput {
    field: FieldReport,
    normal_element: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    subfield: Option<SubfieldListing>,
}

#[derive(Debug, Serialize)]
struct SubfieldListing {
    degree: usize,
    elements: Vec<String>,
}

fn cmd_field(cmd: FieldCmd) -> CliResult<Outcome> {
    let ctx = build_field(&cmd.field, cmd.ell, &cmd.caps)?;
    let normal = find_normal(&ctx, ctx.ell(), cmd.field.seed).map_err(lib("--ell"))?;
    let subfield = match cmd.subfield {
        None => None,
        Some(d) => {
            let elems = ctx.subfield_enumerate(d).map_err(lib("--subfield"))?;
            Some(SubfieldListing { degree: d, elements: elems.iter().map(|a| ctx.format_elem(a)).collect() })
        }
    };
    let out = FieldOutput { field: FieldReport::of(&ctx), normal_element: ctx.format_elem(&normal), subfield };
    Ok(emit(&out, cmd.json, EXIT_OK))
}

#[derive(Debug, Serialize)]
struct CountOutput {
    field: FieldReport,
    dims: Vec<usize>,
    f: Vec<String>,
    b: String,
    b_degree: usize,
    solvable: bool,
    base: u32,
    exponent: Option<u64>,
    count: Option<u128>,
    ell: usize,
    #[serde(rename = "H_degree")]
    h_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<Vec<String>>>,
}

fn cmd_count(cmd: CountCmd) -> CliResult<Outcome> {
    let dims = parse_dims("--dims", &cmd.dims)?;
    if cmd.b_deg == 0 {
        return Err(CliError::usage("--b-deg: must be positive"));
    }
    let min_ell = lcm_all(dims.iter().chain([&cmd.b_deg]).map(|&d| d as u64)) as usize;
    let ell = match cmd.ell {
        None => min_ell,
        Some(e) if e > 0 && e % min_ell == 0 => e,
        Some(e) => {
            return Err(CliError::usage(format!(
                "--ell: {e} is not a common multiple of the dimensions and --b-deg (lcm {min_ell})"
            )))
        }
    };
    let ctx = build_field(&cmd.field, ell, &cmd.caps)?;
    let k = ctx.base();
    let f_list = cmd
        .f
        .split(';')
        .map(|t| poly::parse(k, t).map_err(lib("--f")))
        .collect::<CliResult<Vec<FqPoly>>>()?;
    if f_list.len() != dims.len() {
        return Err(CliError::usage(format!(
            "--f: {} polynomials given for {} dimensions",
            f_list.len(),
            dims.len()
        )));
    }
    let b = ctx.parse_elem(&cmd.b).map_err(lib("--b"))?;
    let spec = EquationSpec::new(f_list, dims, b, cmd.b_deg).map_err(lib("--f"))?;
    let flag_for = |e: &fqlin::Error| match e {
        fqlin::Error::ElementOutsideSubfield(_) => "--b",
        _ => "--dims",
    };
    let res = count_solutions_at(&ctx, &spec, ell).map_err(|e| CliError::from_lib(flag_for(&e), e))?;

    let fmt_tuple = |z: &[fqlin::FieldElem]| z.iter().map(|a| ctx.format_elem(a)).collect::<Vec<_>>();
    let solution = if cmd.solve && res.solvable {
        Some(fmt_tuple(&solve_one(&ctx, &spec).map_err(lib("--solve"))?))
    } else {
        None
    };
    let solutions = if cmd.list {
        match enumerate_solutions(&ctx, &spec, cmd.caps.enum_cap) {
            Ok(all) => Some(all.iter().map(|z| fmt_tuple(z)).collect()),
            Err(fqlin::Error::NoSolution) => Some(vec![]),
            Err(e) => return Err(CliError::from_lib("--list", e)),
        }
    } else {
        None
    };
    let out = CountOutput {
        field: FieldReport::of(&ctx),
        dims: spec.d_list.clone(),
        f: spec.f_list.iter().map(poly::format).collect(),
        b: ctx.format_elem(&spec.b),
        b_degree: spec.b_degree,
        solvable: res.solvable,
        base: res.base,
        exponent: res.exponent,
        count: match res.count() {
            Some(c) => c.value(),
            None => Some(0),
        },
        ell: res.ell_used,
        h_degree: res.h_degree,
        solution,
        solutions,
    };
    Ok(emit(&out, cmd.json, EXIT_OK))
}

#[derive(Debug, Serialize)]
struct OracleCheck {
    count: u64,
    formula_count: Option<u128>,
    #[serde(rename = "match")]
    matched: bool,
}

impl OracleCheck {
    fn new(count: u64, formula_count: Option<u128>) -> Self {
        Self { count, formula_count, matched: formula_count == Some(u128::from(count)) }
    }
}

#[derive(Debug, Serialize)]
struct SumsetOutput {
    q: u32,
    dims: Vec<usize>,
    lambda: u64,
    base: u32,
    exponent: u64,
    size: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    zero_sum_exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<FieldReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<OracleCheck>,
}

fn cmd_sumset(cmd: SumsetCmd) -> CliResult<Outcome> {
    let order = PrimePower::new(cmd.field.p, cmd.field.s).map_err(lib("--p"))?;
    let dims = parse_dims("--dims", &cmd.dims)?;
    let lambda = lambda_ie(&dims);
    let size = sumset_size(order.q, &dims);
    let zero_sum_exponent = zero_sum_count(order.q, &dims).ok().map(|c| c.exponent);
    let (field, verify) = if cmd.verify {
        let ell = lcm_all(dims.iter().map(|&d| d as u64)) as usize;
        let ctx = build_field(&cmd.field, ell, &cmd.caps)?;
        let count = brute_sumset(&ctx, &dims, cmd.caps.enum_cap).map_err(lib("--verify"))?;
        (Some(FieldReport::of(&ctx)), Some(OracleCheck::new(count, size.value())))
    } else {
        (None, None)
    };
    let code = match &verify {
        Some(v) if !v.matched => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    let out = SumsetOutput {
        q: order.q,
        dims,
        lambda,
        base: size.base,
        exponent: size.exponent,
        size: size.value(),
        zero_sum_exponent,
        field,
        verify,
    };
    Ok(emit(&out, cmd.json, code))
}

#[derive(Debug, Serialize)]
struct TraceOutput {
    field: FieldReport,
    n: usize,
    targets: Vec<String>,
    consistent: bool,
    base: u32,
    exponent: Option<u64>,
    count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<OracleCheck>,
}

fn cmd_trace(cmd: TraceCmd) -> CliResult<Outcome> {
    if cmd.n == 0 {
        return Err(CliError::usage("--n: must be positive"));
    }
    let ctx = build_field(&cmd.field, cmd.n, &cmd.caps)?;
    let targets = cmd
        .targets
        .split(';')
        .map(|t| {
            let (d, beta) = t
                .split_once(':')
                .ok_or_else(|| CliError::usage(format!("--targets: '{t}' is not of the form d:element")))?;
            let d = d
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::usage(format!("--targets: bad divisor '{}'", d.trim())))?;
            Ok(TraceTarget::new(d, ctx.parse_elem(beta).map_err(lib("--targets"))?))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let n = cmd.n;
    let consistent = trace_consistent(&ctx, &targets, n).map_err(lib("--targets"))?;
    let dims: Vec<usize> = targets.iter().map(|t| t.d).collect();
    let formula = trace_count(ctx.q(), n, &dims).map_err(lib("--targets"))?;
    let (solution, solution_verified) = if consistent {
        let alpha = trace_solve(&ctx, &targets, n).map_err(lib("--targets"))?;
        let ok = traces_match(&ctx, &alpha, &targets, n).map_err(lib("--targets"))?;
        (Some(ctx.format_elem(&alpha)), Some(ok))
    } else {
        (None, None)
    };
    let expected = if consistent { formula.value() } else { Some(0) };
    let verify = if cmd.verify {
        let report = brute_trace_fiber(&ctx, &targets, n, cmd.caps.enum_cap).map_err(lib("--verify"))?;
        Some(OracleCheck::new(report.count, expected))
    } else {
        None
    };
    let failed = solution_verified == Some(false) || verify.as_ref().is_some_and(|v| !v.matched);
    let out = TraceOutput {
        field: FieldReport::of(&ctx),
        n,
        targets: targets.iter().map(|t| format!("{}:{}", t.d, ctx.format_elem(&t.beta))).collect(),
        consistent,
        base: formula.base,
        exponent: consistent.then_some(formula.exponent),
        count: expected,
        solution,
        solution_verified,
        verify,
    };
    Ok(emit(&out, cmd.json, if failed { EXIT_MISMATCH } else { EXIT_OK }))
}

fn parse_q_list(text: &str) -> CliResult<Vec<(u64, u32)>> {
    text.split(',')
        .map(|q| {
            let q: u64 = q
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("--q-list: '{}' is not an integer", q.trim())))?;
            let p = fqlin::arith::prime_factors(q)
                .into_iter()
                .next()
                .ok_or_else(|| CliError::usage("--q-list: q must be a prime power"))?;
            let mut s = 0;
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
                s += 1;
            }
            if rest != 1 {
                return Err(CliError::usage(format!("--q-list: {q} is not a prime power")));
            }
            Ok((p, s))
        })
        .collect()
}

fn verify_table(summary: &VerifySummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>5} {:>3} {:<9} {:<24} {:<14} {:>2} {:>3} {:>5} {:>8} {:>8}  {}\n",
        "case", "q", "dims", "f", "b", "m", "ell", "e", "count", "formula", "status"
    ));
    let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
    for c in &summary.cases {
        let dims = c.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        let status = match c.status {
            CaseStatus::Match => "match",
            CaseStatus::Mismatch => "MISMATCH",
            CaseStatus::Skipped => "skipped",
        };
        out.push_str(&format!(
            "{:>5} {:>3} {:<9} {:<24} {:<14} {:>2} {:>3} {:>5} {:>8} {:>8}  {}\n",
            c.index,
            c.q,
            dims,
            c.f.join(";"),
            c.b,
            c.b_degree,
            c.ell,
            show(c.exponent),
            show(c.count),
            show(c.formula_count),
            status
        ));
    }
    out.push_str(&format!(
        "matched {} mismatched {} skipped {}: {}\n",
        summary.matched,
        summary.mismatched,
        summary.skipped,
        if summary.all_match { "PASS" } else { "FAIL" }
    ));
    out
}

fn cmd_verify(cmd: VerifyCmd) -> CliResult<Outcome> {
    let preset: GridPreset = cmd.grid.parse().map_err(lib("--grid"))?;
    let mut config = GridConfig::preset(preset, cmd.seed);
    if let Some(text) = &cmd.q_list {
        config.fields = parse_q_list(text)?;
    }
    if let Some(k) = cmd.k_max {
        config.k_values = (1..=k).collect();
    }
    if let Some(d) = cmd.d_max {
        config.max_degree = d;
    }
    if let Some(r) = cmd.random_b {
        config.random_b = r;
    }
    config.enum_cap = cmd.enum_cap;
    config.corrupt = cmd.corrupt;
    let summary = run_grid(&config).map_err(lib("--grid"))?;
    let code = if summary.all_match { EXIT_OK } else { EXIT_MISMATCH };
    let stdout = if cmd.json { render::json(&summary) } else { verify_table(&summary) };
    let stderr = summary.warning.as_ref().map(|w| format!("warning: {w}\n")).unwrap_or_default();
    Ok(Outcome { code, stdout, stderr })
}
