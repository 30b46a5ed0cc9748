//! Criteria for lifting the Leray residue class of `g dz / s` to
//! intersection homology or to cohomology of `K = {s = 0}`.
//!
//! Three sufficient conditions are evaluated:
//!
//! * `kappa > 1`: the residue form is `L_p`-integrable for a conelike metric
//!   obtained from the scaling `u_i |u_i|^{m a_i - 1}` (any `p`, with `m`
//!   large enough);
//! * `0` is not a spectral number;
//! * `Δ(1) ≠ 0`: the link is a rational homology sphere, so Poincaré
//!   duality is an isomorphism.
//!
//! `L_p`-cohomology in degree `n` is Borel–Moore homology for
//! `1 + 1/(2n-1) <= p < 2`, the image of Poincaré duality (intersection
//! homology) for `2 <= p < 2 + 2/(n-1)`, and cohomology beyond.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::catalog::is_known_ih_counterexample;
use crate::exactpoly::{rat_int, rat_to_short, Rat};
use crate::linktopo::{delta_at_one, recognize_type};
use crate::milnor::{CycloFactorization, Spectrum};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("kappa = {0} <= 1: the scaling argument gives no L_p bound")]
    NoLift(String),
    #[error("p = {p} with n = {n} is outside the range covered by L_p cohomology")]
    OutOfRange { p: String, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetTag {
    BorelMooreHomology,
    ImagePD,
    Cohomology,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetGroup {
    pub tag: TargetTag,
    pub p: Rat,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub p: Rat,
    pub kappa: Rat,
    pub kappa_criterion: bool,
    pub spectrum_criterion: bool,
    pub rational_sphere_criterion: bool,
    pub lifts_to_ih: Verdict,
    pub lifts_to_cohomology: Verdict,
    /// Scaling exponent `m` for the requested `p` when `kappa > 1`.
    pub chosen_m: Option<u64>,
    /// Integrability exponent at `chosen_m`.
    pub alpha: Option<Rat>,
    /// Whether `m (kappa - 1) > (p - 2) n` also holds at `chosen_m`.
    pub scaled_inequality: Option<bool>,
    pub target: Option<TargetGroup>,
    pub notes: Vec<String>,
}

/// `alpha = p m (kappa - 1) + (2 - p) n - 1`; the residue form is
/// `L_p`-integrable near the singular point iff `alpha > -1`.
pub fn lp_exponent(p: &Rat, m: u64, kappa: &Rat, n: usize) -> Rat {
    let m = Rat::from_integer(BigInt::from(m));
    let n = Rat::from_integer(BigInt::from(n));
    p * m * (kappa - Rat::one()) + (rat_int(2) - p) * n - Rat::one()
}

/// Smallest `m >= 1` with `lp_exponent(p, m, kappa, n) > -1`.
pub fn min_scaling(p: &Rat, kappa: &Rat, n: usize) -> Result<u64, ResidueError> {
    if *kappa <= Rat::one() {
        return Err(ResidueError::NoLift(rat_to_short(kappa)));
    }
    // alpha > -1  <=>  m > (p - 2) n / (p (kappa - 1))
    let bound = (p - rat_int(2)) * Rat::from_integer(BigInt::from(n))
        / (p * (kappa - Rat::one()));
    if bound < Rat::one() {
        return Ok(1);
    }
    let m = bound.floor().to_integer() + BigInt::one();
    Ok(m.to_u64().expect("scaling exponent fits in u64"))
}

/// Which group `L_p`-cohomology in degree `n` computes.
pub fn perversity_target(p: &Rat, n: usize) -> Result<TargetGroup, ResidueError> {
    let out_of_range = || ResidueError::OutOfRange {
        p: rat_to_short(p),
        n,
    };
    if n < 2 {
        return Err(out_of_range());
    }
    let n_i = n as i64;
    let lower = Rat::one() + Rat::new(BigInt::one(), BigInt::from(2 * n_i - 1));
    let upper = rat_int(2) + Rat::new(BigInt::from(2), BigInt::from(n_i - 1));
    let tag = if *p < lower {
        return Err(out_of_range());
    } else if *p < rat_int(2) {
        TargetTag::BorelMooreHomology
    } else if *p < upper {
        TargetTag::ImagePD
    } else {
        TargetTag::Cohomology
    };
    Ok(TargetGroup {
        tag,
        p: p.clone(),
        n,
    })
}

/// Smallest `p` for which `L_p`-cohomology is ordinary cohomology.
pub fn cohomology_threshold(n: usize) -> Option<Rat> {
    (n >= 2).then(|| rat_int(2) + Rat::new(BigInt::from(2), BigInt::from(n as i64 - 1)))
}

pub fn lift_verdict(
    w: &WeightSystem,
    spectrum: &Spectrum,
    delta: &CycloFactorization,
    n: usize,
    p: &Rat,
) -> Result<LiftReport, ResidueError> {
    let kappa = w.kappa();
    let kappa_criterion = kappa > Rat::one();
    let spectrum_criterion = !spectrum.contains(&Rat::zero());
    let rational_sphere_criterion = !delta_at_one(delta).is_zero();
    let mut notes = Vec::new();

    let (chosen_m, alpha, scaled_inequality) = if kappa_criterion && *p >= Rat::one() {
        let m = min_scaling(p, &kappa, n)?;
        let alpha = lp_exponent(p, m, &kappa, n);
        let lhs = Rat::from_integer(BigInt::from(m)) * (&kappa - Rat::one());
        let rhs = (p - rat_int(2)) * Rat::from_integer(BigInt::from(n));
        (Some(m), Some(alpha), Some(lhs > rhs))
    } else {
        (None, None, None)
    };

    let target = perversity_target(p, n).ok();

    let tag = recognize_type(w, delta.mu());
    let counterexample = is_known_ih_counterexample(&tag, n);

    let lifts_to_ih = if kappa_criterion {
        notes.push(format!(
            "intersection homology: kappa = {} > 1",
            rat_to_short(&kappa)
        ));
        Verdict::Yes
    } else if spectrum_criterion {
        notes.push("intersection homology: 0 is not a spectral number".into());
        Verdict::Yes
    } else if counterexample {
        notes.push(format!(
            "intersection homology: no lift, known counterexample {tag} at n = {n}"
        ));
        Verdict::No
    } else {
        notes.push("intersection homology: no criterion applies".into());
        Verdict::Unknown
    };

    let lifts_to_cohomology = if rational_sphere_criterion {
        notes.push(format!(
            "cohomology: rational homology sphere link, Δ(1) = {}",
            delta_at_one(delta)
        ));
        Verdict::Yes
    } else if kappa_criterion && n >= 2 {
        let p_coh = cohomology_threshold(n).expect("n >= 2");
        let m = min_scaling(&p_coh, &kappa, n)?;
        notes.push(format!(
            "cohomology: kappa > 1, L_p with p = {} and m = {}",
            rat_to_short(&p_coh),
            m
        ));
        Verdict::Yes
    } else if lifts_to_ih == Verdict::No {
        notes.push("cohomology: no lift, cohomology maps through intersection homology".into());
        Verdict::No
    } else {
        notes.push("cohomology: no criterion applies".into());
        Verdict::Unknown
    };

    Ok(LiftReport {
        p: p.clone(),
        kappa,
        kappa_criterion,
        spectrum_criterion,
        rational_sphere_criterion,
        lifts_to_ih,
        lifts_to_cohomology,
        chosen_m,
        alpha,
        scaled_inequality,
        target,
        notes,
    })
}
