//! Floating-point checks of the closed-form residue computations.
//!
//! For `omega = g dz_1 ∧ ... ∧ dz_{n+1} / s` the residue form on the smooth
//! part of `K = {s = 0}` is
//!
//! ```text
//! Res omega = (-1)^{i-1} g / (∂s/∂z_i) dz_1 ∧ ... ∧ \hat{dz_i} ∧ ... ∧ dz_{n+1}
//! ```
//!
//! for any `i` with `∂s/∂z_i ≠ 0`, and its pointwise norm is `|g| / |ds|`.
//! All quadratures are composite trapezoid rules on `[0, 2π)`, summed in a
//! fixed order so results are reproducible bit for bit.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use crate::exactpoly::{rat_to_f64, Poly, PolyError};
use crate::weights::WeightSystem;

pub type C64 = Complex64;

/// Relative tolerance for `|s(z)|` against `sum |c_m z^m|`.
pub const ON_SURFACE_TOL: f64 = 1e-9;
/// Relative tolerance for `|ds(v)|` against `|ds| |v|`.
pub const TANGENT_TOL: f64 = 1e-9;
/// Absolute tolerance of the pointwise norm identity.
pub const NORM_TOL: f64 = 1e-10;
/// Default number of trapezoid nodes.
pub const QUADRATURE_NODES: usize = 2048;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("all partial derivatives vanish at the point")]
    SingularPoint,
    #[error("point is not on the hypersurface (relative residual {residual:e})")]
    NotOnHypersurface { residual: f64 },
    #[error("vector {index} is not tangent to the hypersurface (relative defect {defect:e})")]
    NotTangent { index: usize, defect: f64 },
    #[error("base point is not on the cubic 1 + y2^3 + y3^3 = 0 (residual {residual:e})")]
    BaseNotOnCurve { residual: f64 },
    #[error("tangent frame of the scaled hypersurface is degenerate")]
    FrameDegenerate,
    #[error("scaled base point is off the hypersurface (relative residual {residual:e})")]
    OffHypersurface { residual: f64 },
    #[error("base point has a zero coordinate")]
    ZeroCoordinate,
    #[error("numerator is not weighted homogeneous for the weight system")]
    NumeratorNotHomogeneous,
    #[error("t grid needs at least 6 values in (0, 1]")]
    BadGrid,
    #[error("expected {expected} tangent vectors, got {got}")]
    WrongVectorCount { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A computed quantity next to its closed-form reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumResult {
    pub value: C64,
    pub reference: C64,
    pub abs_error: f64,
    /// Quadrature node count, when a quadrature was involved.
    pub nodes: Option<usize>,
    /// `|value(nodes) - value(nodes / 2)|` for quadratures.
    pub richardson_delta: Option<f64>,
}

impl NumResult {
    fn new(value: C64, reference: C64) -> Self {
        NumResult {
            value,
            reference,
            abs_error: (value - reference).norm(),
            nodes: None,
            richardson_delta: None,
        }
    }
}

fn gradient(s: &Poly, z: &[C64]) -> Result<Vec<C64>, NumError> {
    (0..s.nvars())
        .map(|i| Ok(s.differentiate(i)?.evaluate_complex(z)?))
        .collect()
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn pivot_of(grad: &[C64]) -> usize {
    let mut best = 0;
    for (i, c) in grad.iter().enumerate() {
        if c.norm() > grad[best].norm() {
            best = i;
        }
    }
    best
}

/// Determinant by Gaussian elimination with partial pivoting.
fn det(mut m: Vec<Vec<C64>>) -> C64 {
    let n = m.len();
    let mut acc = C64::new(1.0, 0.0);
    for c in 0..n {
        let p = (c..n)
            .max_by(|&a, &b| m[a][c].norm().total_cmp(&m[b][c].norm()))
            .expect("non-empty range");
        if m[p][c].is_zero() {
            return C64::zero();
        }
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let sub = f * m[c][k];
                m[r][k] -= sub;
            }
        }
    }
    acc
}

/// `(-1)^pivot g / grad[pivot]` times the `n x n` minor of the vectors with
/// the pivot coordinate removed. No checks.
fn leray_form(grad: &[C64], g: C64, vectors: &[Vec<C64>], pivot: usize) -> C64 {
    let rows: Vec<Vec<C64>> = (0..grad.len())
        .filter(|&j| j != pivot)
        .map(|j| vectors.iter().map(|v| v[j]).collect())
        .collect();
    let sign = if pivot % 2 == 0 { 1.0 } else { -1.0 };
    g / grad[pivot] * sign * det(rows)
}

fn check_on_surface(s: &Poly, z: &[C64]) -> Result<(), NumError> {
    let value = s.evaluate_complex(z)?.norm();
    let scale = s.magnitude_scale(z)?;
    let residual = if scale > 0.0 { value / scale } else { value };
    if residual > ON_SURFACE_TOL {
        return Err(NumError::NotOnHypersurface { residual });
    }
    Ok(())
}

/// Residue form of `g dz / s` evaluated on `n` tangent vectors at `z`, using
/// the pivot with the largest partial derivative.
pub fn residue_value(s: &Poly, g: &Poly, z: &[C64], v: &[Vec<C64>]) -> Result<C64, NumError> {
    let grad = gradient(s, z)?;
    residue_value_with_pivot(s, g, z, v, pivot_of(&grad))
}

/// As [`residue_value`] with an explicit pivot coordinate.
pub fn residue_value_with_pivot(
    s: &Poly,
    g: &Poly,
    z: &[C64],
    v: &[Vec<C64>],
    pivot: usize,
) -> Result<C64, NumError> {
    let nvars = s.nvars();
    if v.len() + 1 != nvars {
        return Err(NumError::WrongVectorCount {
            expected: nvars - 1,
            got: v.len(),
        });
    }
    for vec in v {
        if vec.len() != nvars {
            return Err(PolyError::DimensionMismatch {
                expected: nvars,
                got: vec.len(),
            }
            .into());
        }
    }
    let grad = gradient(s, z)?;
    let grad_norm = norm(&grad);
    if grad_norm == 0.0 {
        return Err(NumError::SingularPoint);
    }
    if grad[pivot].is_zero() {
        return Err(NumError::SingularPoint);
    }
    check_on_surface(s, z)?;
    for (index, vec) in v.iter().enumerate() {
        let ds_v: C64 = grad.iter().zip(vec).map(|(a, b)| a * b).sum();
        let scale = grad_norm * norm(vec);
        let defect = if scale > 0.0 { ds_v.norm() / scale } else { 0.0 };
        if defect > TANGENT_TOL {
            return Err(NumError::NotTangent { index, defect });
        }
    }
    Ok(leray_form(&grad, g.evaluate_complex(z)?, v, pivot))
}

/// Unitary frame of `ker ds` (complex-linear kernel, Hermitian inner product).
pub fn tangent_frame(grad: &[C64]) -> Result<Vec<Vec<C64>>, NumError> {
    let n1 = grad.len();
    let p = pivot_of(grad);
    if grad[p].is_zero() {
        return Err(NumError::SingularPoint);
    }
    let mut frame: Vec<Vec<C64>> = Vec::with_capacity(n1 - 1);
    for j in (0..n1).filter(|&j| j != p) {
        let mut u = vec![C64::zero(); n1];
        u[j] = C64::new(1.0, 0.0);
        u[p] = -grad[j] / grad[p];
        for e in &frame {
            let proj: C64 = e.iter().zip(&u).map(|(a, b)| a.conj() * b).sum();
            for (ui, ei) in u.iter_mut().zip(e) {
                *ui -= proj * ei;
            }
        }
        let len = norm(&u);
        frame.push(u.into_iter().map(|c| c / len).collect());
    }
    Ok(frame)
}

/// Compares the norm of the residue form on a unitary tangent frame with
/// `|g| / |ds|`.
pub fn residue_norm_check(s: &Poly, g: &Poly, z: &[C64]) -> Result<NumResult, NumError> {
    let grad = gradient(s, z)?;
    let frame = tangent_frame(&grad)?;
    let value = residue_value(s, g, z, &frame)?.norm();
    let reference = g.evaluate_complex(z)?.norm() / norm(&grad);
    Ok(NumResult::new(C64::new(value, 0.0), C64::new(reference, 0.0)))
}

fn trapezoid<F: Fn(f64) -> C64>(f: F, nodes: usize) -> C64 {
    let h = 2.0 * PI / nodes as f64;
    let mut acc = C64::zero();
    for k in 0..nodes {
        acc += f(h * k as f64);
    }
    acc * h
}

/// Integral of the residue `r = dz_2 ∧ dz_3 / (3 z_1^2)` of
/// `dz / (z_1^3 + z_2^3 + z_3^3)` over the circle fibre above `(y_2, y_3)`,
/// paired with the lift of the tangent vector `v`.
pub fn p8_fiber_integral(y2: C64, y3: C64, v: [C64; 2]) -> Result<NumResult, NumError> {
    p8_fiber_integral_with_nodes(y2, y3, v, QUADRATURE_NODES)
}

pub fn p8_fiber_integral_with_nodes(
    y2: C64,
    y3: C64,
    v: [C64; 2],
    nodes: usize,
) -> Result<NumResult, NumError> {
    let residual = (C64::new(1.0, 0.0) + y2.powu(3) + y3.powu(3)).norm()
        / (1.0 + y2.norm().powi(3) + y3.norm().powi(3));
    if residual > ON_SURFACE_TOL {
        return Err(NumError::BaseNotOnCurve { residual });
    }
    let rho = (1.0 + y2.norm_sqr() + y3.norm_sqr()).powf(-0.5);
    let integrand = |theta: f64| {
        let y1 = C64::from_polar(rho, theta);
        let z = [y1, y1 * y2, y1 * y3];
        // ∂s/∂z_1 = 3 z_1^2 is the pivot of r
        let grad = [3.0 * z[0] * z[0], 3.0 * z[1] * z[1], 3.0 * z[2] * z[2]];
        let i = C64::i();
        let dz = vec![i * y1, i * y1 * y2, i * y1 * y3];
        let lift = vec![C64::zero(), y1 * v[0], y1 * v[1]];
        leray_form(&grad, C64::new(1.0, 0.0), &[dz, lift], 0)
    };
    let value = trapezoid(integrand, nodes);
    let coarse = trapezoid(integrand, nodes / 2);
    let reference = C64::new(0.0, 2.0 * PI / 3.0) * (y2 * v[1] - y3 * v[0]);
    Ok(NumResult {
        nodes: Some(nodes),
        richardson_delta: Some((value - coarse).norm()),
        ..NumResult::new(value, reference)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleForm {
    /// `dy / y`
    DyOverY,
    /// `dy / y^2`
    DyOverY2,
}

/// Integral of a meromorphic one-form over `|y| = radius`.
pub fn circle_integral(form: CircleForm, radius: f64) -> NumResult {
    let f = |theta: f64| {
        let y = C64::from_polar(radius, theta);
        let dy = C64::i() * y;
        match form {
            CircleForm::DyOverY => dy / y,
            CircleForm::DyOverY2 => dy / (y * y),
        }
    };
    let value = trapezoid(f, QUADRATURE_NODES);
    let coarse = trapezoid(f, QUADRATURE_NODES / 2);
    let reference = match form {
        CircleForm::DyOverY => C64::new(0.0, 2.0 * PI),
        CircleForm::DyOverY2 => C64::zero(),
    };
    NumResult {
        nodes: Some(QUADRATURE_NODES),
        richardson_delta: Some((value - coarse).norm()),
        ..NumResult::new(value, reference)
    }
}

/// `u -> (u_i |u_i|^{m a_i - 1})`.
pub fn scaling_map(w: &WeightSystem, m: u32, u: &[C64]) -> Vec<C64> {
    u.iter()
        .zip(w.weights())
        .map(|(ui, a)| {
            let c = f64::from(m) * rat_to_f64(a);
            if ui.is_zero() {
                *ui
            } else {
                ui * ui.norm().powf(c - 1.0)
            }
        })
        .collect()
}

/// Inverse of [`scaling_map`]: `z_i |z_i|^{1/(m a_i) - 1}`.
pub fn scaling_map_inverse(w: &WeightSystem, m: u32, z: &[C64]) -> Vec<C64> {
    z.iter()
        .zip(w.weights())
        .map(|(zi, a)| {
            let c = f64::from(m) * rat_to_f64(a);
            if zi.is_zero() {
                *zi
            } else {
                zi * zi.norm().powf(1.0 / c - 1.0)
            }
        })
        .collect()
}

/// Real orthonormal basis (as complex vectors) of the kernel of the real
/// linear map `h -> sum_i grad_i (A_i h_i + B_i conj(h_i))`.
fn real_kernel_frame(grad: &[C64], a: &[C64], b: &[C64]) -> Result<Vec<Vec<C64>>, NumError> {
    let nv = grad.len();
    let dim = 2 * nv;
    // columns of the 2 x 2N real Jacobian
    let mut jac = [vec![0.0; dim], vec![0.0; dim]];
    for i in 0..nv {
        let ga = grad[i] * a[i];
        let gb = grad[i] * b[i];
        let cx = ga + gb;
        let cy = C64::i() * (ga - gb);
        jac[0][2 * i] = cx.re;
        jac[1][2 * i] = cx.im;
        jac[0][2 * i + 1] = cy.re;
        jac[1][2 * i + 1] = cy.im;
    }
    let dot = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(p, q)| p * q).sum::<f64>();
    // orthonormal basis of the row space
    let r0n = dot(&jac[0], &jac[0]).sqrt();
    if r0n == 0.0 {
        return Err(NumError::FrameDegenerate);
    }
    let r0: Vec<f64> = jac[0].iter().map(|x| x / r0n).collect();
    let proj = dot(&jac[1], &r0);
    let mut r1: Vec<f64> = jac[1].iter().zip(&r0).map(|(x, y)| x - proj * y).collect();
    let r1n = dot(&r1, &r1).sqrt();
    if r1n <= 1e-12 * r0n {
        return Err(NumError::FrameDegenerate);
    }
    r1.iter_mut().for_each(|x| *x /= r1n);

    let mut basis: Vec<Vec<f64>> = vec![r0, r1];
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(dim - 2);
    for k in 0..dim {
        let mut e = vec![0.0; dim];
        e[k] = 1.0;
        for q in basis.iter() {
            let c = dot(&e, q);
            e.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
        }
        // second pass for stability
        for q in basis.iter() {
            let c = dot(&e, q);
            e.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
        }
        let len = dot(&e, &e).sqrt();
        if len > 1e-8 {
            e.iter_mut().for_each(|x| *x /= len);
            basis.push(e.clone());
            frame.push(e);
        }
        if frame.len() == dim - 2 {
            break;
        }
    }
    if frame.len() != dim - 2 {
        return Err(NumError::FrameDegenerate);
    }
    Ok(frame
        .into_iter()
        .map(|e| (0..nv).map(|i| C64::new(e[2 * i], e[2 * i + 1])).collect())
        .collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Root-sum-square of the pulled-back residue form over all `n`-subsets of
/// an orthonormal real frame of `T_u Φ^{-1}(K)`.
fn pulled_back_norm(
    s: &Poly,
    g: &Poly,
    w: &WeightSystem,
    m: u32,
    u: &[C64],
) -> Result<f64, NumError> {
    let z = scaling_map(w, m, u);
    let grad = gradient(s, &z)?;
    let (a, b): (Vec<C64>, Vec<C64>) = u
        .iter()
        .zip(w.weights())
        .map(|(ui, wi)| {
            let c = f64::from(m) * rat_to_f64(wi);
            let r = ui.norm();
            let a = C64::new((c + 1.0) / 2.0 * r.powf(c - 1.0), 0.0);
            let b = (c - 1.0) / 2.0 * r.powf(c - 3.0) * ui * ui;
            (a, b)
        })
        .unzip();
    let frame = real_kernel_frame(&grad, &a, &b)?;
    let pushed: Vec<Vec<C64>> = frame
        .iter()
        .map(|h| {
            h.iter()
                .enumerate()
                .map(|(i, hi)| a[i] * hi + b[i] * hi.conj())
                .collect()
        })
        .collect();
    let n = s.nvars() - 1;
    let gz = g.evaluate_complex(&z)?;
    let pivot = pivot_of(&grad);
    let mut sum = 0.0;
    for subset in subsets(pushed.len(), n) {
        let vs: Vec<Vec<C64>> = subset.iter().map(|&j| pushed[j].clone()).collect();
        sum += leray_form(&grad, gz, &vs, pivot).norm_sqr();
    }
    Ok(sum.sqrt())
}

/// Least-squares slope of `log |Φ^* r|` against `log t` along the ray
/// `t u0`, compared with `m (kappa - 1) - n + m deg_w(g)`.
pub fn orbit_slope(
    s: &Poly,
    w: &WeightSystem,
    g: &Poly,
    m: u32,
    u0: &[C64],
    t_grid: &[f64],
) -> Result<NumResult, NumError> {
    if t_grid.len() < 6 || t_grid.iter().any(|&t| !(t > 0.0 && t <= 1.0)) {
        return Err(NumError::BadGrid);
    }
    if u0.iter().any(|c| c.is_zero()) {
        return Err(NumError::ZeroCoordinate);
    }
    let z0 = scaling_map(w, m, u0);
    let value = s.evaluate_complex(&z0)?.norm();
    let scale = s.magnitude_scale(&z0)?;
    let residual = if scale > 0.0 { value / scale } else { value };
    if residual > ON_SURFACE_TOL {
        return Err(NumError::OffHypersurface { residual });
    }
    let g_degree = if g.is_zero() {
        return Err(NumError::NumeratorNotHomogeneous);
    } else {
        g.weighted_homogeneous_degree(w.weights())
            .ok_or(NumError::NumeratorNotHomogeneous)?
    };

    let mut xs = Vec::with_capacity(t_grid.len());
    let mut ys = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let u: Vec<C64> = u0.iter().map(|c| c * t).collect();
        let nrm = pulled_back_norm(s, g, w, m, &u)?;
        xs.push(t.ln());
        ys.push(nrm.ln());
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;

    let mf = f64::from(m);
    let kappa = rat_to_f64(&w.kappa());
    let n = (s.nvars() - 1) as f64;
    let reference = mf * (kappa - 1.0) - n + mf * rat_to_f64(&g_degree);
    Ok(NumResult::new(C64::new(slope, 0.0), C64::new(reference, 0.0)))
}

/// All complex roots of `sum c_k x^k` (Durand–Kerner).
fn univariate_roots(coeffs: &[C64]) -> Vec<C64> {
    let deg = match coeffs.iter().rposition(|c| !c.is_zero()) {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let lead = coeffs[deg];
    let monic: Vec<C64> = coeffs[..=deg].iter().map(|c| c / lead).collect();
    let eval = |x: C64| monic.iter().rev().fold(C64::zero(), |acc, c| acc * x + c);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..deg).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..deg {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Random smooth point of `{s = 0}`: the coordinates other than a random
/// solve variable are drawn from the disc of radius `radius`, the solve
/// variable is a root of the resulting univariate polynomial. Points where
/// the root or gradient is poorly conditioned are rejected and redrawn.
pub fn sample_smooth_point<R: Rng>(
    s: &Poly,
    rng: &mut R,
    radius: f64,
    max_modulus: f64,
) -> Vec<C64> {
    let nv = s.nvars();
    let solvable: Vec<usize> = (0..nv).filter(|&i| s.degree_in(i) > 0).collect();
    assert!(!solvable.is_empty(), "constant polynomial");
    loop {
        let j = solvable[rng.gen_range(0..solvable.len())];
        let mut z: Vec<C64> = (0..nv)
            .map(|_| {
                let r = radius * rng.gen::<f64>().sqrt();
                C64::from_polar(r, rng.gen::<f64>() * 2.0 * PI)
            })
            .collect();
        let deg = s.degree_in(j) as usize;
        let mut coeffs = vec![C64::zero(); deg + 1];
        for (mono, c) in s.terms() {
            let mut t = C64::new(rat_to_f64(c), 0.0);
            for (i, &k) in mono.exponents().iter().enumerate() {
                if i != j {
                    t *= z[i].powu(k);
                }
            }
            coeffs[mono.exponents()[j] as usize] += t;
        }
        let roots = univariate_roots(&coeffs);
        if roots.is_empty() {
            continue;
        }
        z[j] = roots[rng.gen_range(0..roots.len())];
        // Newton polish in the solve variable
        let ds_j = s.differentiate(j).expect("index in range");
        for _ in 0..3 {
            let f = s.evaluate_complex(&z).expect("dimension");
            let df = ds_j.evaluate_complex(&z).expect("dimension");
            if df.is_zero() {
                break;
            }
            z[j] -= f / df;
        }
        if z.iter().any(|c| !c.is_finite() || c.norm() > max_modulus) {
            continue;
        }
        let Ok(grad) = gradient(s, &z) else { continue };
        let scale = s.magnitude_scale(&z).expect("dimension");
        if norm(&grad) <= 1e-6 * scale.max(1e-300) {
            continue;
        }
        if check_on_surface(s, &z).is_err() {
            continue;
        }
        return z;
    }
}
