//! The `catalog` subcommand: the list of normal forms, or one instantiated.

use std::fmt::Write;

use qhsing::catalog::{catalog_entries, catalog_normal_form, catalog_vars, TypeTag};
use qhsing::exactpoly::{rat_to_string, Rat};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CatalogRow {
    #[serde(rename = "type")]
    pub family: String,
    pub parameter: String,
    pub modulus_constraint: Option<String>,
    pub normal_form: String,
    pub weights: String,
    pub kappa: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Instance {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub n: String,
    pub modulus: Option<String>,
    pub variables: Vec<String>,
    pub polynomial: String,
}

pub fn catalog_rows() -> Vec<CatalogRow> {
    catalog_entries()
        .into_iter()
        .map(|e| CatalogRow {
            family: e.family.name().to_string(),
            parameter: e.parameter.to_string(),
            modulus_constraint: e.modulus_constraint.map(str::to_string),
            normal_form: e.normal_form.to_string(),
            weights: e.weights.to_string(),
            kappa: e.kappa.to_string(),
        })
        .collect()
}

pub fn instantiate(tag: &str, n: usize, modulus: Option<&Rat>) -> Result<Instance, CliError> {
    let tag: TypeTag = tag.parse()?;
    let poly = catalog_normal_form(&tag, n, modulus)?;
    let vars = catalog_vars(n);
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ok(Instance {
        type_tag: tag.to_string(),
        n: n.to_string(),
        modulus: tag
            .family()
            .is_parabolic()
            .then(|| modulus.map_or("0/1".to_string(), rat_to_string)),
        polynomial: poly.to_text(&refs),
        variables: vars,
    })
}

pub fn rows_markdown(rows: &[CatalogRow]) -> String {
    let mut out = String::from(
        "| type | parameter | modulus | normal form | weights | kappa |\n|---|---|---|---|---|---|\n",
    );
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | `{}` | {} | {} |",
            r.family,
            r.parameter,
            r.modulus_constraint.as_deref().unwrap_or("-"),
            r.normal_form,
            r.weights,
            r.kappa
        );
    }
    out
}

pub fn instance_markdown(inst: &Instance) -> String {
    let mut out = format!("{} (n = {}", inst.type_tag, inst.n);
    if let Some(a) = &inst.modulus {
        let _ = write!(out, ", a = {a}");
    }
    let _ = writeln!(out, "): `{}`", inst.polynomial);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qhsing::exactpoly::rat;

    #[test]
    fn instances() {
        assert_eq!(instantiate("A3", 2, None).unwrap().polynomial, "z1^4 + z2^2 + z3^2");
        assert_eq!(instantiate("P8", 2, None).unwrap().polynomial, "z1^3 + z2^3 + z3^3");
        let err = instantiate("X9", 1, Some(&rat(2, 1))).unwrap_err();
        assert!(err.to_string().contains("a^2 != 4"), "{err}");
        assert!(instantiate("Q12", 2, None).is_err());
    }

    #[test]
    fn listing_has_every_family() {
        let rows = catalog_rows();
        assert_eq!(rows.len(), 8);
        assert!(rows_markdown(&rows).contains("| J10 |"));
    }
}
