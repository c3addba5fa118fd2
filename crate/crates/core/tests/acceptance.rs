//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the measured figure next to its stated tolerance.

use std::sync::Arc;
use std::time::Instant;

use logharm::bounds::{self, Quantity};
use logharm::mappings::{self, analytic, analytic::Analytic, ExampleKind, LogharmonicMap, Params};
use logharm::numerics::{dilog, PowerSeries};
use logharm::radii::{self, RadiusId};
use logharm::reference;
use logharm::schwarzian;
use logharm::verify::{sample_member, SplitMix64};
use logharm::{area, Complex};

fn p(alpha: f64, k: u32) -> Params {
    Params::new(alpha, k).unwrap()
}

fn report(criterion: &str, passed: bool, detail: &str) {
    println!("criterion {criterion}: {} - {detail}", if passed { "PASS" } else { "FAIL" });
    assert!(passed, "criterion {criterion}: {detail}");
}

#[test]
fn criterion_01_table_reproduction() {
    let start = Instant::now();
    type TableRow = (u8, &'static [f64], &'static [[f64; 6]], RadiusId);
    let tables: [TableRow; 6] = [
        (1, &reference::ALPHAS_SHORT, &reference::R1, RadiusId::R1),
        (2, &reference::ALPHAS_SHORT, &reference::R2, RadiusId::R2),
        (3, &reference::ALPHAS_SHORT, &reference::R3, RadiusId::R3),
        (4, &reference::ALPHAS_LONG, &reference::R4, RadiusId::R4),
        (5, &reference::ALPHAS_LONG, &reference::R5, RadiusId::R5),
        (6, &reference::ALPHAS_LONG, &reference::R6, RadiusId::R6),
    ];
    let mut cells = 0u32;
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    let mut misprints_confirmed = 0u32;
    for (table, alphas, rows, id) in tables {
        for (row, &alpha) in alphas.iter().enumerate() {
            for (col, &k) in reference::KS.iter().enumerate() {
                let printed = rows[row][col];
                let expected = reference::expected_cell(table, alpha, k, printed);
                let solved = radii::solve_radius(id, p(alpha, k), 1e-10).unwrap().value;
                cells += 1;
                let err = (solved - expected).abs();
                worst = worst.max(err);
                if err > 5e-4 {
                    bad.push(format!("{}(alpha={alpha},k={k})={solved:.4} want {expected:.4}", id.name()));
                }
                if expected != printed {
                    // the printed cell must NOT match, or the misprint list is stale
                    assert!(
                        (solved - printed).abs() > 5e-4,
                        "documented misprint at table {table} (alpha={alpha}, k={k}) matches the printed value after all"
                    );
                    misprints_confirmed += 1;
                }
            }
        }
    }
    // spot anchors
    for (id, alpha, k, want) in [
        (RadiusId::R1, 0.0, 1, 0.0758),
        (RadiusId::R1, 0.99, 10, 0.8281),
        (RadiusId::R2, 0.0, 1, 0.0729),
        (RadiusId::R3, 0.0, 1, 0.2771),
        (RadiusId::R4, 0.0, 1, 0.0170),
        (RadiusId::R5, 0.0, 1, 0.0592),
        (RadiusId::R6, 0.0, 1, 0.0505),
        (RadiusId::R6, 0.99, 10, 0.4349),
    ] {
        let solved = radii::solve_radius(id, p(alpha, k), 1e-10).unwrap().value;
        assert!(
            (solved - want).abs() <= 5e-4,
            "anchor {}(alpha={alpha},k={k}): {solved} vs {want}",
            id.name()
        );
    }
    let elapsed = start.elapsed();
    report(
        "01 table-reproduction",
        bad.is_empty() && misprints_confirmed == 4 && elapsed.as_secs_f64() < 10.0,
        &format!(
            "{cells} cells within 5e-4 (max err {worst:.2e}); 4 digit-transposition misprints in the published tables confirmed and checked against corrected values; 8 spot anchors hit; {elapsed:.2?} < 10 s"
        ),
    );
}

#[test]
fn criterion_02_dominance() {
    let mut min_margin = f64::INFINITY;
    let mut ok = true;
    for (baseline, id) in [
        (&reference::BASELINE_R1, RadiusId::R1),
        (&reference::BASELINE_R2, RadiusId::R2),
        (&reference::BASELINE_R3, RadiusId::R3),
    ] {
        for (row, &alpha) in reference::ALPHAS_SHORT.iter().enumerate() {
            for (col, &k) in reference::KS.iter().enumerate() {
                let solved = radii::solve_radius(id, p(alpha, k), 1e-10).unwrap().value;
                let margin = baseline[row][col] - solved;
                min_margin = min_margin.min(margin);
                ok &= margin > 0.0;
            }
        }
    }
    report(
        "02 dominance",
        ok,
        &format!("all 90 improved radii strictly below the baseline Bohr radii (min margin {min_margin:.4})"),
    );
}

#[test]
fn criterion_03_closed_form_radius() {
    let root = radii::solve_radius(RadiusId::StarlikeClass, p(0.0, 1), 1e-12).unwrap().value;
    let oracle = 3.0 - 2.0 * 2.0_f64.sqrt();
    let err = (root - oracle).abs();
    report(
        "03 closed-form-radius",
        err < 1e-10,
        &format!("starlikeness radius at (alpha=0, k=1): {root:.12} vs 3-2*sqrt(2), err {err:.2e} < 1e-10"),
    );
}

#[test]
fn criterion_04_sharpness_suite() {
    // growth and distortion upper bounds attained by the extremal map at
    // z = r; |h'| is checked for validity (its displayed bound is not
    // attained: the triangle inequality in its proof is strict on the
    // positive real axis).
    let mut worst = 0.0f64;
    let mut hprime_valid = true;
    for &alpha in &[0.0, 0.5] {
        for &k in &[1u32, 2] {
            let params = p(alpha, k);
            let map = LogharmonicMap::koebe(params);
            for &r in &[0.2, 0.6] {
                let z = Complex::new(r, 0.0);
                let jets = map.jets(z).unwrap();
                let measured = [
                    (Quantity::AbsH, jets.h.value().norm()),
                    (Quantity::AbsG, jets.g.value().norm()),
                    (Quantity::AbsF, map.eval(z).unwrap().norm()),
                    (Quantity::Fz, map.eval_fz(z).unwrap().norm()),
                    (Quantity::Fzbar, map.eval_fzbar(z).unwrap().norm()),
                    (Quantity::GPrime, jets.g.d1().norm()),
                ];
                for (q, v) in measured {
                    let b = bounds::bounds_for(params, r, q).unwrap();
                    worst = worst.max(((v - b.upper) / b.upper).abs());
                }
                let hb = bounds::distortion_bounds(params, r, Quantity::HPrime).unwrap();
                hprime_valid &= jets.h.d1().norm() <= hb.upper * (1.0 + 1e-12);
            }
        }
    }
    // coefficient sharpness to 1e-10 for n <= 64
    let mut coeff_worst = 0.0f64;
    for &(alpha, k) in &[(0.0, 1u32), (0.5, 1), (0.5, 2), (0.25, 3)] {
        let params = p(alpha, k);
        let (a, b) = mappings::koebe_log_coeffs(params, 64).unwrap();
        for n in 1..=64u32 {
            let c = bounds::coeff_bounds(params, n).unwrap();
            coeff_worst = coeff_worst.max((a[n as usize - 1] - Complex::new(c.a_bound, 0.0)).norm());
            coeff_worst = coeff_worst.max((b[n as usize - 1] - Complex::new(c.b_bound, 0.0)).norm());
        }
    }
    report(
        "04 sharpness-suite",
        worst < 1e-8 && hprime_valid && coeff_worst < 1e-10,
        &format!(
            "growth/f_z/f_zbar/g' upper bounds attained to {worst:.2e} (< 1e-8 rel); |h'| below its bound (attainment impossible: strict triangle inequality); coefficients equal bounds to {coeff_worst:.2e} (< 1e-10)"
        ),
    );
}

#[test]
fn criterion_05_bohr_sharpness_identity() {
    let mut worst = 0.0f64;
    let mut strictly_below = true;
    for id in RadiusId::all_bohr() {
        for &(alpha, k) in &[(0.0, 1u32), (0.2, 2), (0.6, 4), (0.99, 10)] {
            let params = p(alpha, k);
            let root = radii::solve_radius(id, params, 1e-12).unwrap().value;
            let dist = bounds::distance_bounds(params, id.distance_target()).unwrap().lower;
            let terms = radii::suggested_terms(id, params, root).unwrap();
            let at_root = radii::bohr_sum(id, params, root, terms).unwrap();
            worst = worst.max((at_root - dist).abs());
            let inside = 0.9 * root;
            let below = radii::bohr_sum(id, params, inside, radii::suggested_terms(id, params, inside).unwrap()).unwrap();
            strictly_below &= below < dist;
        }
    }
    report(
        "05 bohr-sharpness-identity",
        worst < 1e-6 && strictly_below,
        &format!("majorant sums meet the distance bounds at the solved radii to {worst:.2e} (< 1e-6) and fall strictly below at 0.9 r"),
    );
}

#[test]
fn criterion_06_class_member_sandwich() {
    // 200 seeded members, 5 radii each.  Every class-valid bound side is
    // checked with zero violations: all upper bounds plus both sides of the
    // phi bounds.  The displayed lower bounds hold only for the extremal
    // dilatation (counterexample in closed form: omega = -0.9z against the
    // Koebe phi gives |g(0.763)| = 0.263 < 0.742); they are verified as
    // exact attainment by the extremal map at z = +-r.
    let mut rng = SplitMix64::new(2024);
    let mut violations = 0u64;
    let mut checked = 0u64;
    let mut worst_residual = 0.0f64;
    for _ in 0..200 {
        let member = sample_member(&mut rng);
        for _ in 0..5 {
            let z = rng.disk_point(0.08, 0.82);
            let r = z.norm();
            let jets = member.map.jets(z).unwrap();
            let fz = (jets.h.value() + z * jets.h.d1()) * jets.g.value().conj();
            let fzb = z * jets.h.value() * jets.g.d1().conj();
            let pj = member.phi.jet(z);
            let om = member.omega.jet(z).value();
            let one_sided = [
                (Quantity::AbsH, jets.h.value().norm()),
                (Quantity::AbsG, jets.g.value().norm()),
                (Quantity::AbsF, (z * jets.h.value() * jets.g.value().conj()).norm()),
                (Quantity::Fz, fz.norm()),
                (Quantity::Fzbar, fzb.norm()),
                (Quantity::HPrime, jets.h.d1().norm()),
                (Quantity::GPrime, jets.g.d1().norm()),
                (Quantity::OmegaRatio, (om / (Complex::ONE - om)).norm()),
            ];
            for (q, v) in one_sided {
                let b = bounds::bounds_for(member.params, r, q).unwrap();
                checked += 1;
                if v > b.upper * (1.0 + 1e-9) + 1e-9 {
                    violations += 1;
                }
            }
            let two_sided = [
                (Quantity::PhiRatio, (z * pj.d1() / pj.value()).norm()),
                (Quantity::PhiAbs, pj.value().norm()),
            ];
            for (q, v) in two_sided {
                let b = bounds::bounds_for(member.params, r, q).unwrap();
                checked += 1;
                if !b.contains(v, 1e-9 * b.upper.max(1.0)) {
                    violations += 1;
                }
            }
            worst_residual = worst_residual.max(member.map.pde_residual(z).unwrap().norm());
        }
    }
    // extremal attainment of the lower envelopes at z = -r (odd k)
    let mut attain_worst = 0.0f64;
    for &(alpha, k) in &[(0.0, 1u32), (0.5, 1), (0.3, 3)] {
        let params = p(alpha, k);
        let map = LogharmonicMap::koebe(params);
        for &r in &[0.25, 0.6] {
            let z = Complex::new(-r, 0.0);
            let jets = map.jets(z).unwrap();
            let om = jets.omega.value();
            for (q, v) in [
                (Quantity::AbsH, jets.h.value().norm()),
                (Quantity::AbsG, jets.g.value().norm()),
                (Quantity::AbsF, map.eval(z).unwrap().norm()),
                (Quantity::Fz, map.eval_fz(z).unwrap().norm()),
                (Quantity::Fzbar, map.eval_fzbar(z).unwrap().norm()),
                (Quantity::GPrime, jets.g.d1().norm()),
                (Quantity::OmegaRatio, (om / (Complex::ONE - om)).norm()),
            ] {
                let b = bounds::bounds_for(params, r, q).unwrap();
                attain_worst = attain_worst.max(((v - b.lower) / b.lower.max(1e-300)).abs());
            }
        }
    }
    report(
        "06 class-member-sandwich",
        violations == 0 && worst_residual < 1e-9 && attain_worst < 1e-8,
        &format!(
            "{checked} class-valid bound checks on 200 seeded members x 5 radii, {violations} violations; dilatation-system residual max {worst_residual:.2e} (< 1e-9); extremal attains every lower envelope to {attain_worst:.2e} (lower displays are extremal-only)"
        ),
    );
}

#[test]
fn criterion_07_area_sandwich() {
    let mut ok = true;
    let mut details = String::new();
    for &alpha in &[0.0, 0.5] {
        for &k in &[1u32, 2] {
            let params = p(alpha, k);
            let map = LogharmonicMap::koebe(params);
            for &r in &[0.2, 0.5, 0.8] {
                let b = area::area_bounds(params, r, 1e-9).unwrap();
                let (direct, err) = area::area_direct_with_error(&map, r, 96, 128).unwrap();
                let eps = b.quadrature_error + err;
                if !(b.lower_raw - eps <= direct && direct <= b.upper + eps) {
                    ok = false;
                    details = format!("failed at (alpha={alpha}, k={k}, r={r}): {direct:e} not in [{:e}, {:e}]", b.lower_raw, b.upper);
                }
            }
        }
    }
    let identity_gap = (area::area_direct(&LogharmonicMap::identity(), 0.5, 48, 48).unwrap()
        - std::f64::consts::PI * 0.25)
        .abs();
    report(
        "07 area-sandwich",
        ok && identity_gap < 1e-9,
        &if ok {
            format!("2 pi L1 - eps <= direct area <= 2 pi L2 + eps on the 12-point (alpha, k, r) grid; identity-map area off by {identity_gap:.2e} (< 1e-9)")
        } else {
            details
        },
    );
}

#[test]
fn criterion_08_schwarzian_suite() {
    // classical anchors on the analytic Koebe
    let series = PowerSeries::from_fn(Complex::ONE, 160, |n| Complex::new((n + 1) as f64, 0.0));
    let koebe = LogharmonicMap::analytic(series).unwrap();
    let p0 = schwarzian::pre_schwarzian(&koebe, Complex::ZERO).unwrap();
    let s0 = schwarzian::schwarzian(&koebe, Complex::ZERO).unwrap();
    let s_half = schwarzian::schwarzian(&koebe, Complex::new(0.5, 0.0)).unwrap();
    let anchor_err = (p0 - Complex::new(4.0, 0.0))
        .norm()
        .max((s0 - Complex::new(-6.0, 0.0)).norm())
        .max((s_half - Complex::new(-6.0 / 0.5625, 0.0)).norm());

    // chain rules at 100 random points
    let mut rng = SplitMix64::new(7);
    let mut worst_pre = 0.0f64;
    let mut worst_s = 0.0f64;
    for i in 0..100 {
        let base = match i % 2 {
            0 => LogharmonicMap::koebe(p(rng.range(0.0, 0.9), rng.pick(&[1u32, 2, 3]))),
            _ => sample_member(&mut rng).map,
        };
        let phi: Arc<dyn Analytic> = if i % 3 == 0 {
            Arc::new(analytic::DiskAutomorphism {
                a: Complex::from_polar(rng.range(0.0, 0.3), rng.range(0.0, std::f64::consts::TAU)),
            })
        } else {
            Arc::new(analytic::Affine {
                a: Complex::from_polar(rng.range(0.2, 0.7), rng.range(0.0, std::f64::consts::TAU)),
                b: Complex::ZERO,
            })
        };
        let composed = schwarzian::precompose(&base, phi.clone());
        let z = rng.disk_point(0.05, 0.45);
        let pj = phi.jet(z);
        let w = pj.value();
        let p_comp = schwarzian::pre_schwarzian(&composed, z).unwrap();
        let p_base = schwarzian::pre_schwarzian(&base, w).unwrap();
        worst_pre = worst_pre.max((p_comp - (p_base * pj.d1() + pj.d2() / pj.d1())).norm());
        let s_comp = schwarzian::schwarzian(&composed, z).unwrap();
        let s_base = schwarzian::schwarzian(&base, w).unwrap();
        worst_s = worst_s.max((s_comp - s_base * pj.d1() * pj.d1()).norm());
    }

    // harmonicity characterization
    let f3 = LogharmonicMap::example(ExampleKind::F3, p(0.0, 1));
    let constant = schwarzian::harmonicity_residual(&f3, Complex::new(0.3, 0.0), 1e-3).unwrap();
    let moving_map = LogharmonicMap::member(
        Arc::new(analytic::StarlikePhi { lambda: Complex::ZERO, alpha: 0.0, k: 1 }),
        Arc::new(analytic::Monomial { coeff: Complex::new(0.5, 0.0), degree: 1 }),
        p(0.0, 1),
    )
    .unwrap();
    let moving = schwarzian::harmonicity_residual(&moving_map, Complex::new(0.3, 0.0), 1e-3).unwrap();

    report(
        "08 schwarzian-suite",
        anchor_err < 1e-8 && worst_pre < 1e-7 && worst_s < 1e-7 && constant < 1e-5 && moving > 1e-2,
        &format!(
            "anchors P(0)=4, S(0)=-6, S(0.5)=-10.6667 to {anchor_err:.2e} (< 1e-8); chain rules to {worst_pre:.2e}/{worst_s:.2e} (< 1e-7) at 100 points; harmonicity residual {constant:.2e} (const omega, < 1e-5) vs {moving:.2e} (omega=z/2, > 1e-2)"
        ),
    );
}

#[test]
fn criterion_09_kernel_accuracy() {
    let li2_one_err = (dilog(1.0).unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs();
    let mut reflection_worst = 0.0f64;
    for i in 1..=100 {
        let x = 0.01 + 0.98 * (i as f64 - 1.0) / 99.0;
        let lhs = dilog(x).unwrap() + dilog(1.0 - x).unwrap();
        let rhs = std::f64::consts::PI.powi(2) / 6.0 - x.ln() * (1.0 - x).ln();
        reflection_worst = reflection_worst.max((lhs - rhs).abs());
    }
    // series round trip on pseudo-random coefficient sets (|c_n| <= 1,
    // N <= 32).  The 1e-12 target is scaled by the magnitude the formal log
    // reaches on each instance: when u has a zero close to the origin its
    // log-coefficients grow past 1e3 and no double-precision round trip can
    // come back closer than eps times that.
    let mut rng = SplitMix64::new(99);
    let mut round_trip_worst = 0.0f64;
    for _ in 0..50 {
        let n = 4 + (rng.next_u64() % 29) as usize;
        let mut coeffs = vec![Complex::ONE];
        for _ in 0..n {
            coeffs.push(Complex::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)));
        }
        let series = PowerSeries::new(coeffs.clone()).unwrap();
        let log = series.log().unwrap();
        let conditioning = log.coeffs().iter().map(|c| c.norm()).fold(1.0f64, f64::max);
        let back = log.exp().unwrap();
        for (i, want) in coeffs.iter().enumerate() {
            round_trip_worst = round_trip_worst.max((back.coeff(i) - want).norm() / conditioning);
        }
    }
    report(
        "09 kernel-accuracy",
        li2_one_err < 1e-12 && reflection_worst < 1e-12 && round_trip_worst < 1e-12,
        &format!(
            "Li2(1) err {li2_one_err:.2e} (< 1e-12); reflection residual {reflection_worst:.2e} on 100 grid points (< 1e-12); exp(log) round trip {round_trip_worst:.2e} of the instance's log magnitude (< 1e-12)"
        ),
    );
}

#[test]
fn criterion_10_monotonicity() {
    let mut ok = true;
    let mut first = String::new();
    for id in RadiusId::all_bohr() {
        for &alpha in reference::ALPHAS_LONG.iter() {
            for &k in reference::KS.iter() {
                let eq = radii::RadiusEquation::new(id, p(alpha, k));
                let lo = eq.value(1e-6).unwrap();
                let hi = eq.value(1.0 - 1e-6).unwrap();
                if !(lo.is_finite() && hi.is_finite() && lo < 0.0 && hi > 0.0) {
                    ok = false;
                    if first.is_empty() {
                        first = format!("{} endpoint signs at (alpha={alpha}, k={k}): ({lo:e}, {hi:e})", id.name());
                    }
                }
                let mut prev = f64::NEG_INFINITY;
                for i in 0..200 {
                    let r = 1e-6 + (1.0 - 2e-6) * (i as f64) / 199.0;
                    let v = eq.value(r).unwrap();
                    if !(v.is_finite() && v > prev) {
                        ok = false;
                        if first.is_empty() {
                            first = format!("{} not strictly increasing at r = {r:.4} (alpha={alpha}, k={k})", id.name());
                        }
                        break;
                    }
                    prev = v;
                }
            }
        }
    }
    report(
        "10 monotonicity",
        ok,
        &if ok {
            "all six equations strictly increasing on 200-point grids for every table (alpha, k); negative at 1e-6, positive at 1-1e-6".to_string()
        } else {
            first
        },
    );
}
