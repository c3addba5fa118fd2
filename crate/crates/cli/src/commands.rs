//! Subcommand implementations.

use std::process::ExitCode;

use logharm::bounds::{self, Quantity};
use logharm::mappings::{ExampleKind, LogharmonicMap, Params};
use logharm::radii::{self, RadiusId};
use logharm::reference;
use logharm::schwarzian as schw;
use logharm::verify::{self, Suite};
use logharm::{area as area_mod, Complex};
use serde_json::json;

use crate::output::{json_envelope, Sink};
use crate::{CliError, Format};

type CmdResult = Result<ExitCode, CliError>;

fn parse_radius_id(which: &str) -> Result<RadiusId, CliError> {
    Ok(match which {
        "r1" => RadiusId::R1,
        "r2" => RadiusId::R2,
        "r3" => RadiusId::R3,
        "r4" => RadiusId::R4,
        "r5" => RadiusId::R5,
        "r6" => RadiusId::R6,
        "starlike" => RadiusId::StarlikeClass,
        "starlike-example" => RadiusId::StarlikeExample,
        other => {
            return Err(CliError::Usage(format!(
                "unknown radius '{other}' (expected r1..r6, starlike, starlike-example)"
            )))
        }
    })
}

fn parse_quantity(q: &str) -> Result<Quantity, CliError> {
    Quantity::all()
        .into_iter()
        .find(|c| c.name() == q)
        .ok_or_else(|| {
            let names: Vec<_> = Quantity::all().iter().map(|c| c.name()).collect();
            CliError::Usage(format!("unknown quantity '{q}' (expected one of {})", names.join(", ")))
        })
}

fn parse_map(kind: &str, alpha: f64, k: u32) -> Result<LogharmonicMap, CliError> {
    let params = Params::new(alpha, k)?;
    Ok(match kind {
        "koebe" => LogharmonicMap::koebe(params),
        "f3" => LogharmonicMap::example(ExampleKind::F3, params),
        "f4" => LogharmonicMap::example(ExampleKind::F4, params),
        "f5" => LogharmonicMap::example(ExampleKind::F5, params),
        "identity" => LogharmonicMap::identity(),
        other => {
            return Err(CliError::Usage(format!(
                "unknown map '{other}' (expected koebe, f3, f4, f5, identity)"
            )))
        }
    })
}

fn parse_list(s: &str, what: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("bad {what} entry '{tok}'")))
        })
        .collect()
}

/// Half-to-even rounding at 4 decimals, matching the published tables.
fn round4(v: f64) -> f64 {
    (v * 1e4).round_ties_even() / 1e4
}

pub fn radius(sink: &mut Sink, format: Format, which: &str, alpha: f64, k: u32, tol: f64) -> CmdResult {
    let id = parse_radius_id(which)?;
    let params = Params::new(alpha, k)?;
    let root = radii::solve_radius(id, params, tol)?;
    match format {
        Format::Csv => {
            sink.line("which,alpha,k,value,residual,iterations").map_err(CliError::Run)?;
            sink.line(&format!(
                "{},{alpha},{k},{:.10},{:e},{}",
                id.name(),
                root.value,
                root.residual,
                root.iterations
            ))
            .map_err(CliError::Run)?;
        }
        Format::Json => {
            sink.line(&json_envelope(
                json!({ "which": id.name(), "alpha": alpha, "k": k, "tol": tol }),
                json!({
                    "value": root.value,
                    "residual": root.residual,
                    "iterations": root.iterations,
                    "bracket": [root.bracket_lo, root.bracket_hi],
                }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn table(
    sink: &mut Sink,
    format: Format,
    which: &str,
    alphas: Option<&str>,
    ks: Option<&str>,
    tol: f64,
) -> CmdResult {
    let id = parse_radius_id(which)?;
    let default_alphas: &[f64] = match id {
        RadiusId::R1 | RadiusId::R2 | RadiusId::R3 => &reference::ALPHAS_SHORT,
        _ => &reference::ALPHAS_LONG,
    };
    let alphas = match alphas {
        Some(s) => parse_list(s, "alpha")?,
        None => default_alphas.to_vec(),
    };
    let ks: Vec<u32> = match ks {
        Some(s) => parse_list(s, "k")?
            .into_iter()
            .map(|v| {
                if v >= 1.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
                    Ok(v as u32)
                } else {
                    Err(CliError::Usage(format!("fold count must be a positive integer, got {v}")))
                }
            })
            .collect::<Result<_, _>>()?,
        None => reference::KS.to_vec(),
    };
    if alphas.is_empty() || ks.is_empty() {
        return Err(CliError::Usage("alpha and k lists must be nonempty".into()));
    }

    for &alpha in &alphas {
        Params::new(alpha, 1)?;
    }
    let mut failed = false;
    let mut rows = Vec::new();
    for &alpha in &alphas {
        let mut cells = Vec::new();
        for &k in &ks {
            match Params::new(alpha, k).map_err(CliError::from).and_then(|p| {
                radii::solve_radius(id, p, tol).map_err(CliError::from)
            }) {
                Ok(root) => cells.push(Some(root.value)),
                Err(_) => {
                    cells.push(None);
                    failed = true;
                }
            }
        }
        rows.push((alpha, cells));
    }

    match format {
        Format::Csv => {
            let header = std::iter::once("alpha".to_string())
                .chain(ks.iter().map(|k| format!("k={k}")))
                .collect::<Vec<_>>()
                .join(",");
            sink.line(&header).map_err(CliError::Run)?;
            for (alpha, cells) in &rows {
                let mut line = format!("{alpha}");
                for cell in cells {
                    match cell {
                        Some(v) => line.push_str(&format!(",{:.4}", round4(*v))),
                        None => line.push_str(",ERR"),
                    }
                }
                sink.line(&line).map_err(CliError::Run)?;
            }
        }
        Format::Json => {
            let rows_json: Vec<_> = rows
                .iter()
                .map(|(alpha, cells)| json!({ "alpha": alpha, "radii": cells }))
                .collect();
            sink.line(&json_envelope(
                json!({ "which": id.name(), "alphas": alphas, "ks": ks, "tol": tol }),
                json!({ "rows": rows_json }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

pub fn bounds(sink: &mut Sink, format: Format, q: &str, alpha: f64, k: u32, r: Option<f64>) -> CmdResult {
    let quantity = parse_quantity(q)?;
    let params = Params::new(alpha, k)?;
    let r = if quantity.needs_radius() {
        match r {
            Some(r) if 0.0 < r && r < 1.0 => r,
            Some(r) => return Err(CliError::Usage(format!("r must lie in (0, 1), got {r}"))),
            None => return Err(CliError::Usage(format!("quantity '{q}' needs --r"))),
        }
    } else {
        r.unwrap_or(0.5)
    };
    let b = bounds::bounds_for(params, r, quantity)?;
    match format {
        Format::Csv => {
            sink.line("quantity,alpha,k,r,lower,upper").map_err(CliError::Run)?;
            let r_field = if quantity.needs_radius() { format!("{r}") } else { String::new() };
            sink.line(&format!(
                "{},{alpha},{k},{r_field},{:.10},{:.10}",
                quantity.name(),
                b.lower,
                b.upper
            ))
            .map_err(CliError::Run)?;
        }
        Format::Json => {
            sink.line(&json_envelope(
                json!({ "quantity": quantity.name(), "alpha": alpha, "k": k, "r": if quantity.needs_radius() { Some(r) } else { None } }),
                json!({ "lower": b.lower, "upper": b.upper, "lower_raw": b.lower_raw }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
pub fn area(
    sink: &mut Sink,
    format: Format,
    alpha: f64,
    k: u32,
    r: f64,
    direct: bool,
    nrho: usize,
    ntheta: usize,
    tol: f64,
) -> CmdResult {
    let params = Params::new(alpha, k)?;
    if !(0.0 < r && r < 1.0) {
        return Err(CliError::Usage(format!("r must lie in (0, 1), got {r}")));
    }
    let mut result = area_mod::area_bounds(params, r, tol)?;
    let mut direct_err = 0.0;
    if direct {
        let map = LogharmonicMap::koebe(params);
        let (value, err) = area_mod::area_direct_with_error(&map, r, nrho, ntheta)?;
        result.direct = Some(value);
        direct_err = err;
    }
    match format {
        Format::Csv => {
            sink.line("alpha,k,r,lower_raw,lower,upper,direct,quadrature_error").map_err(CliError::Run)?;
            let direct_field = result.direct.map(|v| format!("{v:.10}")).unwrap_or_default();
            sink.line(&format!(
                "{alpha},{k},{r},{:.10},{:.10},{:.10},{direct_field},{:e}",
                result.lower_raw,
                result.lower,
                result.upper,
                result.quadrature_error + direct_err
            ))
            .map_err(CliError::Run)?;
        }
        Format::Json => {
            sink.line(&json_envelope(
                json!({ "alpha": alpha, "k": k, "r": r, "tol": tol, "direct": direct }),
                json!({
                    "lower_raw": result.lower_raw,
                    "lower": result.lower,
                    "upper": result.upper,
                    "direct": result.direct,
                    "quadrature_error": result.quadrature_error + direct_err,
                }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
pub fn grid(
    sink: &mut Sink,
    format: Format,
    map_kind: &str,
    alpha: f64,
    k: u32,
    nr: usize,
    ntheta: usize,
    rmax: f64,
) -> CmdResult {
    if !(0.0 < rmax && rmax < 1.0) {
        return Err(CliError::Usage(format!("rmax must lie in (0, 1), got {rmax}")));
    }
    if nr < 1 || ntheta < 3 {
        return Err(CliError::Usage("grid needs nr >= 1 and ntheta >= 3".into()));
    }
    let map = parse_map(map_kind, alpha, k)?;
    let mut dropped = 0usize;
    let mut rows = Vec::with_capacity(nr * ntheta);
    for i in 1..=nr {
        let rho = rmax * (i as f64) / (nr as f64);
        for j in 0..ntheta {
            let theta = std::f64::consts::TAU * (j as f64) / (ntheta as f64);
            let z = Complex::from_polar(rho, theta);
            match map.eval(z) {
                Ok(w) if w.re.is_finite() && w.im.is_finite() => {
                    rows.push((rho, theta, z.re, z.im, w.re, w.im));
                }
                _ => dropped += 1,
            }
        }
    }
    match format {
        Format::Csv => {
            sink.line("rho,theta,x,y,u,v").map_err(CliError::Run)?;
            for (rho, theta, x, y, u, v) in &rows {
                sink.line(&format!("{rho},{theta},{x},{y},{u},{v}")).map_err(CliError::Run)?;
            }
            if dropped > 0 {
                sink.line(&format!("# dropped {dropped} rows")).map_err(CliError::Run)?;
            }
        }
        Format::Json => {
            let rows_json: Vec<_> = rows
                .iter()
                .map(|(rho, theta, x, y, u, v)| json!([rho, theta, x, y, u, v]))
                .collect();
            sink.line(&json_envelope(
                json!({ "map": map_kind, "alpha": alpha, "k": k, "nr": nr, "ntheta": ntheta, "rmax": rmax }),
                json!({ "columns": ["rho", "theta", "x", "y", "u", "v"], "rows": rows_json, "dropped": dropped }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn coeffs(sink: &mut Sink, format: Format, alpha: f64, k: u32, n: usize) -> CmdResult {
    let params = Params::new(alpha, k)?;
    if n < 1 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let (a, b) = logharm::mappings::koebe_log_coeffs(params, n)?;
    match format {
        Format::Csv => {
            sink.line("n,a_bound,b_bound,a_extremal,b_extremal").map_err(CliError::Run)?;
            for i in 1..=n {
                let c = bounds::coeff_bounds(params, i as u32)?;
                sink.line(&format!(
                    "{i},{:.10},{:.10},{:.10},{:.10}",
                    c.a_bound,
                    c.b_bound,
                    a[i - 1].re,
                    b[i - 1].re
                ))
                .map_err(CliError::Run)?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = (1..=n)
                .map(|i| {
                    let c = bounds::coeff_bounds(params, i as u32).expect("i >= 1");
                    json!({
                        "n": i,
                        "a_bound": c.a_bound,
                        "b_bound": c.b_bound,
                        "a_extremal": a[i - 1].re,
                        "b_extremal": b[i - 1].re,
                    })
                })
                .collect();
            sink.line(&json_envelope(
                json!({ "alpha": alpha, "k": k, "n": n }),
                json!({ "rows": rows }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn schwarzian(
    sink: &mut Sink,
    format: Format,
    map_kind: &str,
    alpha: f64,
    k: u32,
    z_re: f64,
    z_im: f64,
) -> CmdResult {
    let map = parse_map(map_kind, alpha, k)?;
    let z = Complex::new(z_re, z_im);
    let v = schw::schwarzian_value(&map, z)?;
    match format {
        Format::Csv => {
            sink.line("map,alpha,k,z_re,z_im,pre_re,pre_im,schwarzian_re,schwarzian_im").map_err(CliError::Run)?;
            sink.line(&format!(
                "{map_kind},{alpha},{k},{z_re},{z_im},{:.10},{:.10},{:.10},{:.10}",
                v.pre_schwarzian.re, v.pre_schwarzian.im, v.schwarzian.re, v.schwarzian.im
            ))
            .map_err(CliError::Run)?;
        }
        Format::Json => {
            sink.line(&json_envelope(
                json!({ "map": map_kind, "alpha": alpha, "k": k, "z": [z_re, z_im] }),
                json!({
                    "pre_schwarzian": [v.pre_schwarzian.re, v.pre_schwarzian.im],
                    "schwarzian": [v.schwarzian.re, v.schwarzian.im],
                }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(sink: &mut Sink, format: Format, suite: &str, samples: usize, seed: u64) -> CmdResult {
    let suite = Suite::parse(suite)
        .ok_or_else(|| CliError::Usage(format!("unknown suite '{suite}' (expected growth, distortion, coeffs, bohr, area, schwarzian, all)")))?;
    let outcomes = verify::run(suite, samples, seed);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    match format {
        Format::Csv => {
            for o in &outcomes {
                sink.line(&format!(
                    "{} {}/{}: {}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.suite,
                    o.name,
                    o.detail
                ))
                .map_err(CliError::Run)?;
            }
            sink.line(&format!(
                "{} of {} properties passed (suite {}, samples {samples}, seed {seed})",
                outcomes.len() - failed,
                outcomes.len(),
                suite.name()
            ))
            .map_err(CliError::Run)?;
        }
        Format::Json => {
            let rows: Vec<_> = outcomes
                .iter()
                .map(|o| json!({ "suite": o.suite, "name": o.name, "passed": o.passed, "detail": o.detail }))
                .collect();
            sink.line(&json_envelope(
                json!({ "suite": suite.name(), "samples": samples, "seed": seed }),
                json!({ "outcomes": rows, "failed": failed }),
            ))
            .map_err(CliError::Run)?;
        }
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
