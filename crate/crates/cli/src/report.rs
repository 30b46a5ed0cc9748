//! The full analysis pipeline and its serialized report.

use num_traits::One;
use qhsing::exactpoly::{parse_polynomial, rat_to_string, Rat};
use qhsing::linktopo::{classify_link, recognize_type, Sphere};
use qhsing::milnor::{
    characteristic_polynomial, is_isolated, milnor_number, poincare_polynomial, spectrum,
    MilnorError,
};
use qhsing::residue::{lift_verdict, TargetTag};
use qhsing::weights::{find_weights, newton_distance};
use serde::Serialize;

use crate::{CliError, TOOL_NAME, TOOL_VERSION};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub input: InputSection,
    pub weights: WeightsSection,
    pub invariants: InvariantsSection,
    pub link: LinkSection,
    pub lift: LiftSection,
    pub meta: MetaSection,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputSection {
    pub polynomial: String,
    pub normalized: String,
    pub variables: Vec<String>,
    pub n: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WeightsSection {
    pub a: Vec<String>,
    pub d: String,
    pub q: Vec<String>,
    #[serde(rename = "Q")]
    pub q_sum: String,
    pub unique: bool,
    pub kappa: String,
    pub newton_distance: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpectralNumber {
    pub value: String,
    pub multiplicity: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CyclotomicFactor {
    pub k: String,
    pub multiplicity: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CharacteristicSection {
    pub factors: Vec<CyclotomicFactor>,
    pub factored: String,
    pub expanded: String,
    pub degree: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InvariantsSection {
    pub milnor_number: String,
    pub poincare_polynomial: String,
    pub poincare_coefficients: Vec<String>,
    pub spectrum: Vec<SpectralNumber>,
    pub characteristic_polynomial: CharacteristicSection,
    pub recognized_type: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LinkSection {
    pub delta_at_one: String,
    pub rational_sphere: bool,
    pub sphere: String,
    pub sphere_reason: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TargetSection {
    pub group: String,
    pub p: String,
    pub n: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LiftSection {
    pub p: String,
    pub kappa_criterion: bool,
    pub spectrum_criterion: bool,
    pub rational_sphere_criterion: bool,
    pub lifts_to_ih: String,
    pub lifts_to_cohomology: String,
    pub m: Option<String>,
    pub alpha: Option<String>,
    pub scaled_inequality: Option<bool>,
    pub target: Option<TargetSection>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MetaSection {
    pub tool: String,
    pub version: String,
}

fn sphere_str(s: Sphere) -> &'static str {
    match s {
        Sphere::Yes => "yes",
        Sphere::No => "no",
        Sphere::NotApplicable => "not applicable",
    }
}

fn target_str(t: TargetTag) -> &'static str {
    match t {
        TargetTag::BorelMooreHomology => "Borel-Moore homology",
        TargetTag::ImagePD => "image of Poincare duality (intersection homology)",
        TargetTag::Cohomology => "cohomology",
    }
}

fn internal(e: MilnorError) -> CliError {
    CliError::Internal(e.to_string())
}

/// Runs parse, weights, isolatedness, Milnor invariants, link topology and
/// the lift criteria on `text` in the variables `vars`.
pub fn analyze(text: &str, vars: &[String], p: &Rat) -> Result<AnalysisReport, CliError> {
    if vars.is_empty() {
        return Err(CliError::Usage("at least one variable is required".into()));
    }
    if *p < Rat::one() {
        return Err(CliError::Usage(format!("p must be >= 1, got {p}")));
    }
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let poly = parse_polynomial(text, &var_refs)?;
    let w = find_weights(&poly)?;
    if !is_isolated(&poly, &w) {
        return Err(CliError::NonIsolated);
    }
    let n = w.n();
    let mu = milnor_number(&w).map_err(internal)?;
    let poincare = poincare_polynomial(&w).map_err(internal)?;
    let spec = spectrum(&w).map_err(internal)?;
    let delta = characteristic_polynomial(&w).map_err(internal)?;
    if delta.mu() != mu || spec.total_multiplicity() != mu {
        return Err(CliError::Internal(format!(
            "degree mismatch: mu = {mu}, deg Delta = {}, spectrum size = {}",
            delta.mu(),
            spec.total_multiplicity()
        )));
    }
    let link = classify_link(&delta, n);
    let tag = recognize_type(&w, mu);
    let lift = lift_verdict(&w, &spec, &delta, n, p).map_err(|e| CliError::Internal(e.to_string()))?;

    let int = |v: u64| v.to_string();
    Ok(AnalysisReport {
        input: InputSection {
            polynomial: text.to_string(),
            normalized: poly.to_text(&var_refs),
            variables: vars.to_vec(),
            n: n.to_string(),
        },
        weights: WeightsSection {
            a: w.weights().iter().map(rat_to_string).collect(),
            d: int(w.d()),
            q: w.q().iter().copied().map(int).collect(),
            q_sum: int(w.q_sum()),
            unique: w.unique(),
            kappa: rat_to_string(&w.kappa()),
            newton_distance: rat_to_string(&newton_distance(&w)),
        },
        invariants: InvariantsSection {
            milnor_number: int(mu),
            poincare_polynomial: poincare.to_string(),
            poincare_coefficients: poincare.coeffs().iter().map(|c| c.to_string()).collect(),
            spectrum: spec
                .entries()
                .iter()
                .map(|(a, m)| SpectralNumber {
                    value: rat_to_string(a),
                    multiplicity: int(*m),
                })
                .collect(),
            characteristic_polynomial: CharacteristicSection {
                factors: delta
                    .factors()
                    .iter()
                    .map(|(&k, &m)| CyclotomicFactor {
                        k: int(k),
                        multiplicity: int(m),
                    })
                    .collect(),
                factored: delta.factored_string(),
                expanded: delta.expand().to_string(),
                degree: int(delta.mu()),
            },
            recognized_type: tag.to_string(),
        },
        link: LinkSection {
            delta_at_one: link.delta_at_one.to_string(),
            rational_sphere: link.rational_sphere,
            sphere: sphere_str(link.sphere).to_string(),
            sphere_reason: link.sphere_reason,
        },
        lift: LiftSection {
            p: rat_to_string(&lift.p),
            kappa_criterion: lift.kappa_criterion,
            spectrum_criterion: lift.spectrum_criterion,
            rational_sphere_criterion: lift.rational_sphere_criterion,
            lifts_to_ih: lift.lifts_to_ih.as_str().to_string(),
            lifts_to_cohomology: lift.lifts_to_cohomology.as_str().to_string(),
            m: lift.chosen_m.map(int),
            alpha: lift.alpha.as_ref().map(rat_to_string),
            scaled_inequality: lift.scaled_inequality,
            target: lift.target.map(|t| TargetSection {
                group: target_str(t.tag).to_string(),
                p: rat_to_string(&t.p),
                n: t.n.to_string(),
            }),
            notes: lift.notes,
        },
        meta: MetaSection {
            tool: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
        },
    })
}

impl AnalysisReport {
    /// Pretty-printed JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: &str| out.push_str(&format!("| {k} | {v} |\n"));
        let i = &self.invariants;
        let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
        let spectrum = i
            .spectrum
            .iter()
            .map(|s| match s.multiplicity.as_str() {
                "1" => s.value.clone(),
                m => format!("{} (x{m})", s.value),
            })
            .collect::<Vec<_>>()
            .join(", ");
        row("polynomial", &format!("`{}`", self.input.normalized));
        row("variables", &self.input.variables.join(", "));
        row("n", &self.input.n);
        row("weights", &self.weights.a.join(", "));
        row("grading (d; q)", &format!("{}; {}", self.weights.d, self.weights.q.join(", ")));
        row("unique weights", &self.weights.unique.to_string());
        row("kappa", &self.weights.kappa);
        row("Newton distance", &self.weights.newton_distance);
        row("Milnor number", &i.milnor_number);
        row("Poincare polynomial", &i.poincare_polynomial);
        row("spectrum", &spectrum);
        row(
            "characteristic polynomial",
            &format!(
                "{} = {}",
                i.characteristic_polynomial.factored, i.characteristic_polynomial.expanded
            ),
        );
        row("type", &i.recognized_type);
        row("Delta(1)", &self.link.delta_at_one);
        row("rational homology sphere", &self.link.rational_sphere.to_string());
        row("sphere", &format!("{} ({})", self.link.sphere, self.link.sphere_reason));
        row("p", &self.lift.p);
        row("lifts to IH", &self.lift.lifts_to_ih);
        row("lifts to cohomology", &self.lift.lifts_to_cohomology);
        row("m", &opt(&self.lift.m));
        row("alpha", &opt(&self.lift.alpha));
        row(
            "L_p target",
            &self
                .lift
                .target
                .as_ref()
                .map_or("-".to_string(), |t| t.group.clone()),
        );
        let mut doc = format!(
            "# {} analysis\n\n| field | value |\n|---|---|\n",
            self.meta.tool
        );
        doc.push_str(&out);
        doc.push_str("\nNotes:\n\n");
        for note in &self.lift.notes {
            doc.push_str(&format!("- {note}\n"));
        }
        doc.push_str(&format!("\n{} {}\n", self.meta.tool, self.meta.version));
        doc
    }
}
