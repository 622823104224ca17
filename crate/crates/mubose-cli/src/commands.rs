//! Subcommand implementations. Each writes deterministic text to the
//! supplied writer and maps failures onto the documented exit codes:
//! usage (2), evaluation (3), input data (4).

use std::io::Write;

use mubose::{
    energy_level, exact_asymptotes, lambda2_asymptote_truncated, lambda2_series,
    lambda3_asymptote_truncated, lambda_direct, scan_curve, structure_value, Error, EvalMethod,
    MuParameter, ThermalPoint, TriangleTable,
};

use crate::data::{self, DataPoint};
use crate::fmt::fmt9;
use crate::grid;
use crate::{AsymptoteArgs, CompareArgs, Failure, FitArgs, Method, ScanArgs, SpectrumArgs,
    TriangleArgs};

const MAX_ORDER: usize = 64;
const MAX_TRIANGLE_M: usize = 300;
const MAX_FIT_CELLS: usize = 1_000_000;
const MAX_SPECTRUM_N: u64 = 10_000_000;

fn out_err(e: std::io::Error) -> Failure {
    Failure::eval(format!("output error: {e}"))
}

fn parse_mu(sub: &'static str, value: f64) -> Result<MuParameter, Failure> {
    MuParameter::new(value).map_err(|e| Failure::usage(sub, format!("--mu: {e}")))
}

fn check_order(sub: &'static str, order: usize) -> Result<(), Failure> {
    if order > MAX_ORDER {
        return Err(Failure::usage(sub, format!("--order must be at most {MAX_ORDER}")));
    }
    Ok(())
}

fn check_mass(sub: &'static str, mass: f64) -> Result<(), Failure> {
    if !mass.is_finite() || mass < 0.0 {
        return Err(Failure::usage(sub, "--mass must be finite and non-negative"));
    }
    Ok(())
}

fn check_temperature(sub: &'static str, flag: &str, t: f64) -> Result<(), Failure> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Failure::usage(sub, format!("{flag} must be finite and positive")));
    }
    Ok(())
}

fn eval_method(sub: &'static str, method: Method, rel_tol: f64) -> Result<EvalMethod, Failure> {
    match method {
        Method::Series => Ok(EvalMethod::Series),
        Method::Direct => {
            if !rel_tol.is_finite() || rel_tol <= 0.0 || rel_tol >= 1.0 {
                return Err(Failure::usage(sub, "--rel-tol must lie in (0, 1)"));
            }
            Ok(EvalMethod::Direct { rel_tol })
        }
    }
}

fn margin_warning(mu: MuParameter, order: usize) {
    if mu.beyond_series_margin() {
        eprintln!(
            "warning: mu = {} is at or beyond the series convergence margin 1/3; \
             order-{order} truncated values are unreliable",
            mu.value()
        );
    }
}

pub fn scan(a: &ScanArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mu = parse_mu("scan", a.model.mu)?;
    check_order("scan", a.model.order)?;
    check_mass("scan", a.model.mass)?;
    check_temperature("scan", "--t", a.model.t)?;
    let method = eval_method("scan", a.model.method, a.model.rel_tol)?;
    let grid = grid::build(a.kmin, a.kmax, a.steps, a.log)
        .map_err(|m| Failure::usage("scan", m))?;
    if a.model.method == Method::Series {
        margin_warning(mu, a.model.order);
    }

    let curve = scan_curve(mu, a.model.mass, a.model.t, a.model.order, &grid, method)
        .map_err(|e| match e {
            Error::InvalidGrid(_) => Failure::usage("scan", e.to_string()),
            other => Failure::eval(other.to_string()),
        })?;

    let flag = match a.model.method {
        Method::Series => "series",
        Method::Direct => "direct",
    };
    writeln!(out, "k_mev,lambda2,lambda3,r3,method_flag").map_err(out_err)?;
    for i in 0..curve.grid.len() {
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt9(curve.grid[i]),
            fmt9(curve.lambda2[i]),
            fmt9(curve.lambda3[i]),
            fmt9(curve.r3[i]),
            flag
        )
        .map_err(out_err)?;
    }
    Ok(())
}

/// Model λ⁽²⁾ at one momentum, shared by compare and fit.
fn model_lambda2(
    mu: MuParameter,
    k_mev: f64,
    mass: f64,
    t: f64,
    order: usize,
    method: EvalMethod,
    table: &TriangleTable,
) -> mubose::Result<f64> {
    let point = ThermalPoint::new(mass, k_mev, t)?;
    match method {
        EvalMethod::Series => lambda2_series(mu, &point, order, table),
        EvalMethod::Direct { rel_tol } => lambda_direct(2, mu, &point, rel_tol),
    }
}

pub fn compare(a: &CompareArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mu = parse_mu("compare", a.model.mu)?;
    check_order("compare", a.model.order)?;
    check_mass("compare", a.model.mass)?;
    check_temperature("compare", "--t", a.model.t)?;
    let method = eval_method("compare", a.model.method, a.model.rel_tol)?;
    let points = data::read_points(&a.data).map_err(Failure::data)?;
    if a.model.method == Method::Series {
        margin_warning(mu, a.model.order);
    }

    let table = TriangleTable::build(a.model.order + 2);
    let mut sse = 0.0;
    // 16-wide columns, matching the rows below
    writeln!(out, "k_mev           measured        model           residual        pull")
        .map_err(out_err)?;
    for (i, p) in points.iter().enumerate() {
        let model = model_lambda2(mu, p.k_mev, a.model.mass, a.model.t, a.model.order, method, &table)
            .map_err(|e| {
                Failure::eval(format!("data point {} (k_mev = {}): {e}", i + 1, p.k_mev))
            })?;
        let residual = model - p.lambda2;
        let pull = residual / p.sigma;
        sse += pull * pull;
        writeln!(
            out,
            "{:<16}{:<16}{:<16}{:<16}{}",
            fmt9(p.k_mev),
            fmt9(p.lambda2),
            fmt9(model),
            fmt9(residual),
            fmt9(pull)
        )
        .map_err(out_err)?;
    }
    writeln!(out, "sse {}", fmt9(sse)).map_err(out_err)?;
    Ok(())
}

/// Number of points in the inclusive arithmetic range, with a tolerance of
/// one part in 10⁹ on the final step so that spans which are an exact
/// multiple of the step keep their upper endpoint despite rounding.
fn range_count(min: f64, max: f64, step: f64) -> usize {
    ((max - min) / step * (1.0 + 1e-12) + 1e-9).floor() as usize + 1
}

fn range_values(min: f64, max: f64, step: f64) -> Vec<f64> {
    (0..range_count(min, max, step)).map(|i| min + step * i as f64).collect()
}

fn check_range(
    sub: &'static str,
    what: &str,
    min: f64,
    max: f64,
    step: f64,
    positive_min: bool,
) -> Result<(), Failure> {
    if !min.is_finite() || !max.is_finite() || !step.is_finite() {
        return Err(Failure::usage(sub, format!("{what} range must be finite")));
    }
    if positive_min && min <= 0.0 {
        return Err(Failure::usage(sub, format!("{what} range must be positive")));
    }
    if min < 0.0 {
        return Err(Failure::usage(sub, format!("{what} range must be non-negative")));
    }
    if max < min {
        return Err(Failure::usage(sub, format!("{what} range has max below min")));
    }
    if step <= 0.0 {
        return Err(Failure::usage(sub, format!("{what} step must be positive")));
    }
    Ok(())
}

pub fn fit(a: &FitArgs, out: &mut impl Write) -> Result<(), Failure> {
    check_order("fit", a.order)?;
    check_mass("fit", a.mass)?;
    check_range("fit", "mu", a.mu_min, a.mu_max, a.mu_step, false)?;
    check_range("fit", "t", a.t_min, a.t_max, a.t_step, true)?;
    let method = eval_method("fit", a.method, a.rel_tol)?;
    // size the grid before materializing it, so a too-fine step is a usage
    // error instead of a gigantic allocation
    let mu_count = range_count(a.mu_min, a.mu_max, a.mu_step);
    let t_count = range_count(a.t_min, a.t_max, a.t_step);
    if mu_count.saturating_mul(t_count) > MAX_FIT_CELLS {
        return Err(Failure::usage(
            "fit",
            format!(
                "search grid has {mu_count} x {t_count} cells; at most {MAX_FIT_CELLS} are supported"
            ),
        ));
    }
    let mus = range_values(a.mu_min, a.mu_max, a.mu_step);
    let ts = range_values(a.t_min, a.t_max, a.t_step);
    let points = data::read_points(&a.data).map_err(Failure::data)?;

    let table = TriangleTable::build(a.order + 2);
    // ascending (mu, t) traversal + strict improvement = lexicographically
    // smallest optimum on ties
    let mut best: Option<(f64, f64, f64)> = None;
    for &m in &mus {
        let mu = parse_mu("fit", m)?;
        for &t in &ts {
            let sse = weighted_sse(mu, t, a, method, &table, &points)?;
            if best.is_none_or(|(_, _, s)| sse < s) {
                best = Some((m, t, sse));
            }
        }
    }
    let (mu_best, t_best, sse) = best.expect("ranges yield at least one cell");

    writeln!(out, "{:<9}{}", "mu_best", fmt9(mu_best)).map_err(out_err)?;
    writeln!(out, "{:<9}{}", "t_best", fmt9(t_best)).map_err(out_err)?;
    writeln!(out, "{:<9}{}", "sse", fmt9(sse)).map_err(out_err)?;
    writeln!(
        out,
        "{:<9}mu {}..{} step {} ({} values), t {}..{} step {} ({} values)",
        "grid",
        fmt9(a.mu_min),
        fmt9(a.mu_max),
        fmt9(a.mu_step),
        mus.len(),
        fmt9(a.t_min),
        fmt9(a.t_max),
        fmt9(a.t_step),
        ts.len()
    )
    .map_err(out_err)?;
    Ok(())
}

fn weighted_sse(
    mu: MuParameter,
    t: f64,
    a: &FitArgs,
    method: EvalMethod,
    table: &TriangleTable,
    points: &[DataPoint],
) -> Result<f64, Failure> {
    let mut sse = 0.0;
    for (i, p) in points.iter().enumerate() {
        let model = model_lambda2(mu, p.k_mev, a.mass, t, a.order, method, table).map_err(|e| {
            Failure::eval(format!(
                "mu = {}, t = {}, data point {} (k_mev = {}): {e}",
                mu.value(),
                t,
                i + 1,
                p.k_mev
            ))
        })?;
        let pull = (model - p.lambda2) / p.sigma;
        sse += pull * pull;
    }
    Ok(sse)
}

pub fn asymptote(a: &AsymptoteArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mu = parse_mu("asymptote", a.mu)?;
    check_order("asymptote", a.order)?;
    margin_warning(mu, a.order);
    let m = mu.value();
    let l2 = lambda2_asymptote_truncated(m, a.order).map_err(|e| Failure::eval(e.to_string()))?;
    let l3 = lambda3_asymptote_truncated(m, a.order).map_err(|e| Failure::eval(e.to_string()))?;
    // beyond the convergence margin the divergent series can push λ⁽²⁾|k
    // negative, leaving the composed r⁽³⁾|k with no real value; the report
    // says so instead of failing, since the exact row below is unconditional
    let r3_cell = match mubose::r3(l2, l3) {
        Ok(v) => fmt9(v),
        Err(_) => "undefined".to_owned(),
    };
    let exact = exact_asymptotes(mu);
    // 16-wide columns, matching the rows below
    writeln!(out, "form            lambda2         lambda3         r3").map_err(out_err)?;
    writeln!(
        out,
        "{:<16}{:<16}{:<16}{}",
        format!("truncated_k{}", a.order),
        fmt9(l2),
        fmt9(l3),
        r3_cell
    )
    .map_err(out_err)?;
    writeln!(
        out,
        "{:<16}{:<16}{:<16}{}",
        "exact",
        fmt9(exact.lambda2),
        fmt9(exact.lambda3),
        fmt9(exact.r3)
    )
    .map_err(out_err)?;
    Ok(())
}

pub fn triangle(a: &TriangleArgs, out: &mut impl Write) -> Result<(), Failure> {
    if a.max_m == 0 {
        return Err(Failure::usage("triangle", "--max-m must be at least 1"));
    }
    if a.max_m > MAX_TRIANGLE_M {
        return Err(Failure::usage(
            "triangle",
            format!("--max-m must be at most {MAX_TRIANGLE_M}"),
        ));
    }
    let table = TriangleTable::build(a.max_m);
    for m in 1..=a.max_m {
        let row: Vec<String> = table.row(m).iter().map(|b| b.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).map_err(out_err)?;
    }
    Ok(())
}

pub fn spectrum(a: &SpectrumArgs, out: &mut impl Write) -> Result<(), Failure> {
    let mu = parse_mu("spectrum", a.mu)?;
    if a.n_max > MAX_SPECTRUM_N {
        return Err(Failure::usage(
            "spectrum",
            format!("--n-max must be at most {MAX_SPECTRUM_N}"),
        ));
    }
    // 12- then 16-wide columns, matching the rows below
    writeln!(out, "n           phi             energy").map_err(out_err)?;
    for n in 0..=a.n_max {
        writeln!(
            out,
            "{:<12}{:<16}{}",
            n,
            fmt9(structure_value(n, mu)),
            fmt9(energy_level(n, mu))
        )
        .map_err(out_err)?;
    }
    Ok(())
}
