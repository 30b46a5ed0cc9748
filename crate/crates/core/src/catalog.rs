//! Normal forms of the simple (`A_k`, `D_k`, `E_6`, `E_7`, `E_8`) and
//! unimodal parabolic (`P_8`, `X_9`, `J_10`) singularities.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactpoly::{rat, rat_int, Poly, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
    P8,
    X9,
    J10,
    Unknown,
}

impl Family {
    pub const CATALOG: [Family; 8] = [
        Family::A,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::P8,
        Family::X9,
        Family::J10,
    ];

    pub fn has_parameter(self) -> bool {
        matches!(self, Family::A | Family::D)
    }

    pub fn is_parabolic(self) -> bool {
        matches!(self, Family::P8 | Family::X9 | Family::J10)
    }

    /// Smallest `n` for which the normal form makes sense.
    pub fn min_n(self) -> usize {
        match self {
            Family::P8 => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::P8 => "P8",
            Family::X9 => "X9",
            Family::J10 => "J10",
            Family::Unknown => "Unknown",
        }
    }
}

/// Singularity type: a family plus the index `k` for `A_k` and `D_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTag {
    family: Family,
    k: Option<u32>,
}

impl TypeTag {
    pub fn a(k: u32) -> Self {
        TypeTag {
            family: Family::A,
            k: Some(k),
        }
    }

    pub fn d(k: u32) -> Self {
        TypeTag {
            family: Family::D,
            k: Some(k),
        }
    }

    /// Tag for a family without parameter.
    pub fn exceptional(family: Family) -> Self {
        assert!(!family.has_parameter(), "{family:?} needs an index");
        TypeTag { family, k: None }
    }

    pub fn unknown() -> Self {
        TypeTag::exceptional(Family::Unknown)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    /// Milnor number of the type (independent of `n`).
    pub fn milnor_number(&self) -> Option<u64> {
        Some(match self.family {
            Family::A | Family::D => u64::from(self.k?),
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::P8 => 8,
            Family::X9 => 9,
            Family::J10 => 10,
            Family::Unknown => return None,
        })
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}{}", self.family.name(), k),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unrecognized singularity type `{0}`")]
    UnknownType(String),
    #[error("{tag} is not defined for n = {n} (needs n >= {min})")]
    DimensionTooSmall { tag: String, n: usize, min: usize },
    #[error("{tag}: index out of range (A needs k >= 1, D needs k >= 4)")]
    IndexOutOfRange { tag: String },
    #[error("modulus a = {a} violates the constraint {constraint} for {tag}")]
    ForbiddenModulus {
        tag: String,
        a: String,
        constraint: &'static str,
    },
    #[error("{tag} takes no modulus")]
    UnexpectedModulus { tag: String },
}

impl FromStr for TypeTag {
    type Err = CatalogError;

    /// Accepts `A3`, `A_3`, `D5`, `E6`, `P8`, `X9`, `J10` (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase().replace('_', "");
        let err = || CatalogError::UnknownType(s.to_string());
        let tag = match up.as_str() {
            "E6" => TypeTag::exceptional(Family::E6),
            "E7" => TypeTag::exceptional(Family::E7),
            "E8" => TypeTag::exceptional(Family::E8),
            "P8" => TypeTag::exceptional(Family::P8),
            "X9" => TypeTag::exceptional(Family::X9),
            "J10" => TypeTag::exceptional(Family::J10),
            _ => {
                let (head, tail) = up.split_at(1.min(up.len()));
                let k: u32 = tail.parse().map_err(|_| err())?;
                match head {
                    "A" => TypeTag::a(k),
                    "D" => TypeTag::d(k),
                    _ => return Err(err()),
                }
            }
        };
        Ok(tag)
    }
}

/// Descriptive catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: Family,
    pub parameter: &'static str,
    pub modulus_constraint: Option<&'static str>,
    pub normal_form: &'static str,
    pub weights: &'static str,
    pub kappa: &'static str,
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    let e = |family, parameter, modulus_constraint, normal_form, weights, kappa| CatalogEntry {
        family,
        parameter,
        modulus_constraint,
        normal_form,
        weights,
        kappa,
    };
    vec![
        e(Family::A, "k >= 1", None, "z1^(k+1) + sum_{i>=2} zi^2", "1/(k+1), 1/2, ...", "n/2 + 1/(k+1)"),
        e(Family::D, "k >= 4", None, "z1^2*z2 + z2^(k-1) + sum_{i>=3} zi^2", "(k-2)/(2k-2), 1/(k-1), 1/2, ...", "n/2 + 1/(2(k-1))"),
        e(Family::E6, "", None, "z1^3 + z2^4 + sum_{i>=3} zi^2", "1/3, 1/4, 1/2, ...", "n/2 + 1/12"),
        e(Family::E7, "", None, "z1^3 + z1*z2^3 + sum_{i>=3} zi^2", "1/3, 2/9, 1/2, ...", "n/2 + 1/18"),
        e(Family::E8, "", None, "z1^3 + z2^5 + sum_{i>=3} zi^2", "1/3, 1/5, 1/2, ...", "n/2 + 1/30"),
        e(Family::P8, "n >= 2", Some("a^3 + 27 != 0"), "z1^3 + z2^3 + z3^3 + a*z1*z2*z3 + sum_{i>=4} zi^2", "1/3, 1/3, 1/3, 1/2, ...", "n/2"),
        e(Family::X9, "", Some("a^2 != 4"), "z1^4 + z2^4 + a*z1^2*z2^2 + sum_{i>=3} zi^2", "1/4, 1/4, 1/2, ...", "n/2"),
        e(Family::J10, "", Some("4a^3 + 27 != 0"), "z1^3 + z2^6 + a*z1^2*z2^2 + sum_{i>=3} zi^2", "1/3, 1/6, 1/2, ...", "n/2"),
    ]
}

/// Variable names `z1, ..., z_{n+1}` used by the normal forms.
pub fn catalog_vars(n: usize) -> Vec<String> {
    (1..=n + 1).map(|i| format!("z{i}")).collect()
}

/// Leading weights of the normal form; the remaining variables have weight 1/2.
fn core_weights(tag: &TypeTag) -> Option<Vec<Rat>> {
    let k = tag.k.map(i64::from);
    Some(match tag.family {
        Family::A => vec![rat(1, k? + 1)],
        Family::D => vec![rat(k? - 2, 2 * k? - 2), rat(1, k? - 1)],
        Family::E6 => vec![rat(1, 3), rat(1, 4)],
        Family::E7 => vec![rat(1, 3), rat(2, 9)],
        Family::E8 => vec![rat(1, 3), rat(1, 5)],
        Family::P8 => vec![rat(1, 3); 3],
        Family::X9 => vec![rat(1, 4), rat(1, 4)],
        Family::J10 => vec![rat(1, 3), rat(1, 6)],
        Family::Unknown => return None,
    })
}

/// Weight template of the normal form in `n + 1` variables.
pub fn template_weights(tag: &TypeTag, n: usize) -> Option<Vec<Rat>> {
    let mut w = core_weights(tag)?;
    if w.len() > n + 1 {
        return None;
    }
    w.resize(n + 1, rat(1, 2));
    Some(w)
}

fn check_modulus(tag: &TypeTag, a: &Rat) -> Result<(), CatalogError> {
    let (value, constraint) = match tag.family {
        Family::P8 => (a * a * a + rat_int(27), "a^3 + 27 != 0"),
        Family::X9 => (a * a - rat_int(4), "a^2 != 4"),
        Family::J10 => (rat_int(4) * a * a * a + rat_int(27), "4a^3 + 27 != 0"),
        _ => {
            return Err(CatalogError::UnexpectedModulus {
                tag: tag.to_string(),
            })
        }
    };
    if value.is_zero() {
        return Err(CatalogError::ForbiddenModulus {
            tag: tag.to_string(),
            a: a.to_string(),
            constraint,
        });
    }
    Ok(())
}

/// Instantiates the normal form of `tag` in `n + 1` variables. Parabolic
/// types default to modulus `a = 0`.
pub fn catalog_normal_form(tag: &TypeTag, n: usize, a: Option<&Rat>) -> Result<Poly, CatalogError> {
    let name = tag.to_string();
    match (tag.family, tag.k) {
        (Family::Unknown, _) => return Err(CatalogError::UnknownType(name)),
        (Family::A, Some(k)) if k >= 1 => {}
        (Family::D, Some(k)) if k >= 4 => {}
        (Family::A | Family::D, _) => return Err(CatalogError::IndexOutOfRange { tag: name }),
        _ => {}
    }
    let min = tag.family.min_n();
    if n < min {
        return Err(CatalogError::DimensionTooSmall { tag: name, n, min });
    }
    let zero = Rat::zero();
    let a = match a {
        Some(a) => {
            check_modulus(tag, a)?;
            a
        }
        None => &zero,
    };
    let nv = n + 1;
    let mono = |pairs: &[(usize, u32)]| {
        let mut e = vec![0u32; nv];
        for &(i, k) in pairs {
            e[i] = k;
        }
        e
    };
    let one = Rat::one;
    let mut terms: Vec<(Rat, Vec<u32>)> = match (tag.family, tag.k) {
        (Family::A, Some(k)) => vec![(one(), mono(&[(0, k + 1)]))],
        (Family::D, Some(k)) => vec![
            (one(), mono(&[(0, 2), (1, 1)])),
            (one(), mono(&[(1, k - 1)])),
        ],
        (Family::E6, _) => vec![(one(), mono(&[(0, 3)])), (one(), mono(&[(1, 4)]))],
        (Family::E7, _) => vec![
            (one(), mono(&[(0, 3)])),
            (one(), mono(&[(0, 1), (1, 3)])),
        ],
        (Family::E8, _) => vec![(one(), mono(&[(0, 3)])), (one(), mono(&[(1, 5)]))],
        (Family::P8, _) => vec![
            (one(), mono(&[(0, 3)])),
            (one(), mono(&[(1, 3)])),
            (one(), mono(&[(2, 3)])),
            (a.clone(), mono(&[(0, 1), (1, 1), (2, 1)])),
        ],
        (Family::X9, _) => vec![
            (one(), mono(&[(0, 4)])),
            (one(), mono(&[(1, 4)])),
            (a.clone(), mono(&[(0, 2), (1, 2)])),
        ],
        (Family::J10, _) => vec![
            (one(), mono(&[(0, 3)])),
            (one(), mono(&[(1, 6)])),
            (a.clone(), mono(&[(0, 2), (1, 2)])),
        ],
        _ => unreachable!(),
    };
    let first_square = core_weights(tag).map_or(0, |w| w.len());
    for i in first_square..nv {
        terms.push((one(), mono(&[(i, 2)])));
    }
    Ok(Poly::from_terms(nv, terms))
}

/// Cases where the residue class is known not to lift to intersection
/// homology: the cone over a smooth plane cubic (`P_8` surface).
pub fn is_known_ih_counterexample(tag: &TypeTag, n: usize) -> bool {
    tag.family == Family::P8 && n == 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_polynomial;
    use crate::weights::find_weights;

    fn text(tag: &str, n: usize, a: Option<Rat>) -> Result<String, CatalogError> {
        let tag: TypeTag = tag.parse()?;
        let p = catalog_normal_form(&tag, n, a.as_ref())?;
        let vars = catalog_vars(n);
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        Ok(p.to_text(&refs))
    }

    #[test]
    fn normal_forms() {
        assert_eq!(text("A3", 2, None).unwrap(), "z1^4 + z2^2 + z3^2");
        assert_eq!(text("P8", 2, Some(rat_int(0))).unwrap(), "z1^3 + z2^3 + z3^3");
        assert_eq!(
            text("P8", 3, Some(rat_int(1))).unwrap(),
            "z1^3 + z1*z2*z3 + z2^3 + z3^3 + z4^2"
        );
        assert_eq!(text("D5", 1, None).unwrap(), "z2^4 + z1^2*z2");
        assert_eq!(text("E7", 2, None).unwrap(), "z1*z2^3 + z1^3 + z3^2");
    }

    #[test]
    fn forbidden_moduli() {
        assert!(matches!(
            text("X9", 1, Some(rat_int(2))),
            Err(CatalogError::ForbiddenModulus { .. })
        ));
        assert!(matches!(
            text("P8", 2, Some(rat_int(-3))),
            Err(CatalogError::ForbiddenModulus { .. })
        ));
        assert!(text("J10", 1, Some(rat_int(-3))).is_ok());
        assert!(matches!(
            text("E6", 2, Some(rat_int(1))),
            Err(CatalogError::UnexpectedModulus { .. })
        ));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(text("D3", 2, None), Err(CatalogError::IndexOutOfRange { .. })));
        assert!(matches!(text("A0", 2, None), Err(CatalogError::IndexOutOfRange { .. })));
        assert!(matches!(text("P8", 1, None), Err(CatalogError::DimensionTooSmall { .. })));
        assert!(matches!("Q9".parse::<TypeTag>(), Err(CatalogError::UnknownType(_))));
        assert_eq!("a_7".parse::<TypeTag>().unwrap(), TypeTag::a(7));
    }

    #[test]
    fn templates_reproduce_weights() {
        for family in Family::CATALOG {
            for n in family.min_n()..=4 {
                let ks: Vec<Option<u32>> = match family {
                    Family::A => (1..=8).map(Some).collect(),
                    Family::D => (4..=8).map(Some).collect(),
                    _ => vec![None],
                };
                for k in ks {
                    let tag = TypeTag { family, k };
                    let p = catalog_normal_form(&tag, n, None).unwrap();
                    let w = find_weights(&p).unwrap();
                    assert_eq!(w.weights(), &template_weights(&tag, n).unwrap()[..], "{tag} n={n}");
                }
            }
        }
    }

    #[test]
    fn printed_forms_parse_back() {
        let tag = TypeTag::exceptional(Family::J10);
        let p = catalog_normal_form(&tag, 2, Some(&rat_int(1))).unwrap();
        let vars = catalog_vars(2);
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        assert_eq!(parse_polynomial(&p.to_text(&refs), &refs).unwrap(), p);
    }
}
