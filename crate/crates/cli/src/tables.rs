//! Regeneration of the characteristic-polynomial and weight tables for the
//! catalog families. Every entry is recomputed from the normal form.

use std::fmt::Write;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use qhsing::catalog::{catalog_entries, catalog_normal_form, catalog_vars, Family, TypeTag};
use qhsing::exactpoly::{rat_to_string, Rat};
use qhsing::linktopo::delta_at_one;
use qhsing::milnor::characteristic_polynomial;
use qhsing::weights::find_weights;
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Simple,
    Parabolic,
    Weights,
}

impl FromStr for TableKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "simple" => Ok(TableKind::Simple),
            "parabolic" => Ok(TableKind::Parabolic),
            "weights" => Ok(TableKind::Weights),
            _ => Err(CliError::Usage(format!(
                "unknown table `{s}` (expected simple, parabolic or weights)"
            ))),
        }
    }
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Simple => "simple",
            TableKind::Parabolic => "parabolic",
            TableKind::Weights => "weights",
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CharRow {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub k: Option<String>,
    pub modulus: Option<String>,
    pub normal_form: String,
    pub characteristic_polynomial: String,
    /// Coefficients of the monic `Delta`, constant term first.
    pub coefficients: Vec<String>,
    pub factored: String,
    pub degree: String,
    pub delta_at_one: String,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WeightRow {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub k: Option<String>,
    pub weights: Vec<String>,
    pub kappa: String,
    pub kappa_formula: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum TableRows {
    Characteristic(Vec<CharRow>),
    Weights(Vec<WeightRow>),
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TableDoc {
    pub table: String,
    pub n: String,
    pub rows: TableRows,
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn tags(kind: TableKind, n: usize, k_range: Option<(u32, u32)>) -> Result<Vec<TypeTag>, CliError> {
    if let Some((lo, _)) = k_range {
        if lo < 1 {
            return Err(CliError::Usage("k range must start at 1 or above".into()));
        }
    }
    let mut out = Vec::new();
    if kind != TableKind::Parabolic {
        let (a_lo, a_hi) = k_range.unwrap_or((1, 8));
        let (d_lo, d_hi) = k_range.map_or((4, 8), |(lo, hi)| (lo.max(4), hi));
        out.extend((a_lo..=a_hi).map(TypeTag::a));
        out.extend((d_lo..=d_hi).map(TypeTag::d));
        out.extend([Family::E6, Family::E7, Family::E8].map(TypeTag::exceptional));
    }
    if kind != TableKind::Simple {
        out.extend(
            [Family::P8, Family::X9, Family::J10]
                .into_iter()
                .filter(|f| n >= f.min_n())
                .map(TypeTag::exceptional),
        );
    }
    Ok(out)
}

fn char_row(tag: TypeTag, n: usize, modulus: Option<&Rat>) -> Result<CharRow, CliError> {
    let poly = catalog_normal_form(&tag, n, modulus)?;
    let vars = catalog_vars(n);
    let var_refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    let w = find_weights(&poly)?;
    let delta = characteristic_polynomial(&w).map_err(|e| CliError::Internal(e.to_string()))?;
    let value = delta_at_one(&delta);
    let expanded = delta.expand();
    Ok(CharRow {
        type_tag: tag.to_string(),
        k: tag.k().map(|k| k.to_string()),
        modulus: tag
            .family()
            .is_parabolic()
            .then(|| rat_to_string(modulus.unwrap_or(&Rat::zero()))),
        normal_form: poly.to_text(&var_refs),
        characteristic_polynomial: expanded.to_string(),
        coefficients: expanded.coeffs().iter().map(|c| c.to_string()).collect(),
        factored: delta.factored_string(),
        degree: delta.mu().to_string(),
        delta_at_one: value.to_string(),
        a: yes_no(value.abs().is_one()),
        b: yes_no(!value.is_zero()),
    })
}

fn weight_row(tag: TypeTag, n: usize) -> Result<WeightRow, CliError> {
    let poly = catalog_normal_form(&tag, n, None)?;
    let w = find_weights(&poly)?;
    let formula = catalog_entries()
        .into_iter()
        .find(|e| e.family == tag.family())
        .map(|e| e.kappa.to_string())
        .unwrap_or_default();
    Ok(WeightRow {
        type_tag: tag.to_string(),
        k: tag.k().map(|k| k.to_string()),
        weights: w.weights().iter().map(rat_to_string).collect(),
        kappa: rat_to_string(&w.kappa()),
        kappa_formula: formula,
    })
}

/// Builds the requested table for dimension `n`.
///
/// `k_range` restricts the `A_k` and `D_k` rows (the `D` rows start at 4);
/// `modulus` is the parameter `a` of the parabolic normal forms.
pub fn emit_tables(
    kind: TableKind,
    n: usize,
    k_range: Option<(u32, u32)>,
    modulus: Option<&Rat>,
) -> Result<TableDoc, CliError> {
    if n < 1 {
        return Err(CliError::Usage("tables need n >= 1".into()));
    }
    if modulus.is_some() && kind != TableKind::Parabolic {
        return Err(CliError::Usage(
            "--modulus only applies to the parabolic table".into(),
        ));
    }
    if k_range.is_some() && kind == TableKind::Parabolic {
        return Err(CliError::Usage(
            "--k-range does not apply to the parabolic table".into(),
        ));
    }
    let tags = tags(kind, n, k_range)?;
    let rows = match kind {
        TableKind::Weights => TableRows::Weights(
            tags.into_iter()
                .map(|t| weight_row(t, n))
                .collect::<Result<_, _>>()?,
        ),
        _ => TableRows::Characteristic(
            tags.into_iter()
                .map(|t| char_row(t, n, modulus))
                .collect::<Result<_, _>>()?,
        ),
    };
    Ok(TableDoc {
        table: kind.name().to_string(),
        n: n.to_string(),
        rows,
    })
}

impl TableDoc {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# {} table, n = {}\n\n", self.table, self.n);
        match &self.rows {
            TableRows::Characteristic(rows) => {
                out.push_str("| type | characteristic polynomial | factored | Delta(1) | a) | b) |\n");
                out.push_str("|---|---|---|---|---|---|\n");
                for r in rows {
                    let _ = writeln!(
                        out,
                        "| {} | {} | {} | {} | {} | {} |",
                        r.type_tag, r.characteristic_polynomial, r.factored, r.delta_at_one, r.a, r.b
                    );
                }
                out.push_str("\na) link homeomorphic to a sphere (homology sphere for n = 2)\n");
                out.push_str("b) link is a rational homology sphere\n");
            }
            TableRows::Weights(rows) => {
                out.push_str("| type | weights | kappa | formula |\n|---|---|---|---|\n");
                for r in rows {
                    let _ = writeln!(
                        out,
                        "| {} | {} | {} | {} |",
                        r.type_tag,
                        r.weights.join(", "),
                        r.kappa,
                        r.kappa_formula
                    );
                }
            }
        }
        out
    }
}
