//! Exact Jacobian-algebra dimensions against the Poincaré polynomial for
//! every catalog normal form with small grading.

use num_traits::ToPrimitive;
use qhsing::catalog::{catalog_normal_form, Family, TypeTag};
use qhsing::exactpoly::rat_int;
use qhsing::milnor::{is_isolated, jacobian_quotient_dims, milnor_number, poincare_polynomial};
use qhsing::weights::find_weights;

fn catalog_tags() -> Vec<TypeTag> {
    let mut tags: Vec<TypeTag> = (1..=10).map(TypeTag::a).collect();
    tags.extend((4..=10).map(TypeTag::d));
    tags.extend(
        [Family::E6, Family::E7, Family::E8, Family::P8, Family::X9, Family::J10]
            .map(TypeTag::exceptional),
    );
    tags
}

#[test]
fn oracle_matches_poincare_for_catalog_entries() {
    let mut checked = 0;
    for tag in catalog_tags() {
        for n in tag.family().min_n()..=2 {
            let moduli = if tag.family().is_parabolic() {
                vec![None, Some(rat_int(1)), Some(rat_int(-1))]
            } else {
                vec![None]
            };
            for a in moduli {
                let p = catalog_normal_form(&tag, n, a.as_ref()).unwrap();
                let w = find_weights(&p).unwrap();
                if w.d() > 20 {
                    continue;
                }
                let poincare = poincare_polynomial(&w).unwrap();
                let limit = (w.s_max() + w.max_q() as i64) as u64;
                let dims = jacobian_quotient_dims(&p, &w, limit);
                let expected: Vec<u64> = (0..=limit as usize)
                    .map(|s| poincare.coeff(s).to_u64().unwrap())
                    .collect();
                assert_eq!(dims, expected, "{tag} n={n} a={a:?}");
                assert_eq!(dims.iter().sum::<u64>(), milnor_number(&w).unwrap());
                assert!(is_isolated(&p, &w));
                checked += 1;
            }
        }
    }
    assert!(checked >= 40, "only {checked} entries checked");
}

#[test]
fn oracle_rejects_non_isolated_germs() {
    use qhsing::parse_polynomial;
    for (text, vars) in [
        ("x^2*y^2", &["x", "y"][..]),
        ("x^2*y + z^2", &["x", "y", "z"][..]),
        ("x^4 + x^2*y^2", &["x", "y"][..]),
        ("x^2*y^2 + z^2 + w^2", &["x", "y", "z", "w"][..]),
    ] {
        let p = parse_polynomial(text, vars).unwrap();
        let w = find_weights(&p).unwrap();
        assert!(!is_isolated(&p, &w), "{text}");
    }
}
