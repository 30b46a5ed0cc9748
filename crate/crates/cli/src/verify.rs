//! The `verify` subcommand: numerical checks of the residue formulas.

use std::fmt::Write;

use num_complex::Complex64;
use qhsing::exactpoly::parse_polynomial;
use qhsing::numcheck::{
    circle_integral, orbit_slope, p8_fiber_integral, residue_norm_check, residue_value,
    sample_smooth_point, scaling_map_inverse, CircleForm, NumError, NumResult, NORM_TOL,
};
use qhsing::weights::find_weights;
use qhsing::Poly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub value: String,
    pub reference: String,
    pub abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<CheckLine>,
    pub all_passed: bool,
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else {
        format!("{:.12}{:+.12}i", z.re, z.im)
    }
}

fn line(name: &str, r: Result<NumResult, NumError>, tolerance: f64) -> CheckLine {
    match r {
        Ok(r) => CheckLine {
            name: name.to_string(),
            value: fmt_c(r.value),
            reference: fmt_c(r.reference),
            abs_error: r.abs_error,
            tolerance,
            pass: r.abs_error < tolerance,
        },
        Err(e) => CheckLine {
            name: name.to_string(),
            value: format!("error: {e}"),
            reference: String::new(),
            abs_error: f64::INFINITY,
            tolerance,
            pass: false,
        },
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn poly(text: &str, vars: &[&str]) -> Poly {
    parse_polynomial(text, vars).expect("built-in polynomial parses")
}

fn exact(value: Result<Complex64, NumError>, reference: Complex64) -> Result<NumResult, NumError> {
    value.map(|v| NumResult {
        value: v,
        reference,
        abs_error: (v - reference).norm(),
        nodes: None,
        richardson_delta: None,
    })
}

/// Worst norm-identity error over `count` random smooth points.
pub fn worst_norm_error(s: &Poly, g: &Poly, count: usize, rng: &mut ChaCha8Rng) -> Result<NumResult, NumError> {
    let mut worst: Option<NumResult> = None;
    for _ in 0..count {
        let z = sample_smooth_point(s, rng, 3.0, 10.0);
        let r = residue_norm_check(s, g, &z)?;
        if worst.is_none_or(|w| r.abs_error > w.abs_error) {
            worst = Some(r);
        }
    }
    Ok(worst.expect("count > 0"))
}

pub fn run_suite(seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z3 = ["z1", "z2", "z3"];
    let xy = ["x", "y"];
    let p8 = poly("z1^3+z2^3+z3^3", &z3);
    let a1 = poly("z1^2+z2^2+z3^2", &z3);
    let cross = poly("x*y", &xy);
    let one3 = poly("1", &z3);
    let one2 = poly("1", &xy);
    let mut checks = Vec::new();

    checks.push(line(
        "residue of dx dy / xy at (0, 2)",
        exact(
            residue_value(&cross, &one2, &[c(0., 0.), c(2., 0.)], &[vec![c(0., 0.), c(1., 0.)]]),
            c(0.5, 0.0),
        ),
        1e-14,
    ));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    checks.push(line(
        "P8 residue at (1, -1, 0)",
        exact(
            residue_value(
                &p8,
                &one3,
                &[c(1., 0.), c(-1., 0.), c(0., 0.)],
                &[
                    vec![c(h, 0.), c(-h, 0.), c(0., 0.)],
                    vec![c(0., 0.), c(0., 0.), c(1., 0.)],
                ],
            ),
            c(-1.0 / (3.0 * 2f64.sqrt()), 0.0),
        ),
        1e-14,
    ));
    for (name, s, g) in [("P8", &p8, &one3), ("A1", &a1, &one3), ("xy", &cross, &one2)] {
        checks.push(line(
            &format!("norm identity on {name}, 100 random points"),
            worst_norm_error(s, g, 100, &mut rng),
            NORM_TOL,
        ));
    }
    for (label, y2, y3, v) in [
        ("(-1, 0)", c(-1., 0.), c(0., 0.), [c(0., 0.), c(1., 0.)]),
        ("(0, -1)", c(0., 0.), c(-1., 0.), [c(1., 0.), c(0., 0.)]),
        ("(-1, 0), generic v", c(-1., 0.), c(0., 0.), [c(0.3, -0.2), c(1.1, 0.5)]),
    ] {
        checks.push(line(
            &format!("P8 fibre integral at {label}"),
            p8_fiber_integral(y2, y3, v),
            1e-8,
        ));
    }
    for radius in [1.0, 0.01] {
        checks.push(line(
            &format!("circle integral of dy/y, radius {radius}"),
            Ok(circle_integral(CircleForm::DyOverY, radius)),
            1e-10,
        ));
    }
    checks.push(line(
        "circle integral of dy/y^2, radius 1",
        Ok(circle_integral(CircleForm::DyOverY2, 1.0)),
        1e-10,
    ));
    let grid: Vec<f64> = (0..8).map(|j| 0.5f64.powi(j)).collect();
    let cube = -(2f64.powf(1.0 / 3.0));
    for (name, s, m, z0) in [
        ("A1", &a1, 2, [c(3., 0.), c(4., 0.), c(0., 5.)]),
        ("A1", &a1, 4, [c(3., 0.), c(4., 0.), c(0., 5.)]),
        ("P8", &p8, 3, [c(1., 0.), c(1., 0.), c(cube, 0.)]),
    ] {
        let w = find_weights(s).expect("built-in polynomial is quasihomogeneous");
        let u0 = scaling_map_inverse(&w, m, &z0);
        checks.push(line(
            &format!("orbit slope {name}, m = {m}"),
            orbit_slope(s, &w, &one3, m, &u0, &grid),
            1e-3,
        ));
    }
    let all_passed = checks.iter().all(|c| c.pass);
    VerifyReport {
        seed,
        checks,
        all_passed,
    }
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("verify report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| check | value | reference | error | result |\n|---|---|---|---|---|\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {:.2e} | {} |",
                c.name,
                c.value,
                c.reference,
                c.abs_error,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
        out
    }
}
