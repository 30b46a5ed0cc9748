//! Generated tables against hand-written reference tables.
//! Characteristic polynomials are compared up to overall sign.

use qhsing_cli::tables::{CharRow, TableRows};
use qhsing_cli::{emit_tables, TableKind};

/// Reference expansion, highest degree first, sign included.
fn reference(tag: &str, odd: bool) -> Option<Vec<i64>> {
    let v = match (tag, odd) {
        ("E6", true) => vec![1, -1, 0, 1, 0, -1, 1],
        ("E6", false) => vec![1, 1, 0, -1, 0, 1, 1],
        // -(t-1)(t^6+t^3+1)
        ("E7", true) => vec![-1, 1, 0, -1, 1, 0, -1, 1],
        // -(t+1)(t^6-t^3+1)
        ("E7", false) => vec![-1, -1, 0, 1, 1, 0, -1, -1],
        ("E8", true) => vec![1, -1, 0, 1, -1, 1, 0, -1, 1],
        ("E8", false) => vec![1, 1, 0, -1, -1, -1, 0, 1, 1],
        // (t^3+1)^2 (t^2-t+1)
        ("P8", true) => vec![1, -1, 1, 2, -2, 2, 1, -1, 1],
        // (t^3-1)^2 (t^2+t+1)
        ("P8", false) => vec![1, 1, 1, -2, -2, -2, 1, 1, 1],
        // -(t^4-1)^2 (t-1)
        ("X9", true) => vec![-1, 1, 0, 0, 2, -2, 0, 0, -1, 1],
        // -(t^4-1)^2 (t+1)
        ("X9", false) => vec![-1, -1, 0, 0, 2, 2, 0, 0, -1, -1],
        // (t^6-1)(t^3+1)(t-1)
        ("J10", true) => vec![1, -1, 0, 1, -1, 0, -1, 1, 0, -1, 1],
        // (t^6-1)(t^3-1)(t+1)
        ("J10", false) => vec![1, 1, 0, -1, -1, 0, -1, -1, 0, 1, 1],
        _ => return None,
    };
    Some(v)
}

/// Reference a), b) columns.
fn reference_columns(tag: &str, odd: bool) -> (&'static str, &'static str) {
    match (tag, odd) {
        ("E6", true) | ("E8", _) => ("yes", "yes"),
        ("E6", false) | ("E7", false) => ("no", "yes"),
        ("E7", true) => ("no", "no"),
        ("P8", true) => ("no", "yes"),
        _ => ("no", "no"),
    }
}

fn rows(kind: TableKind, n: usize) -> Vec<CharRow> {
    match emit_tables(kind, n, None, None).unwrap().rows {
        TableRows::Characteristic(r) => r,
        TableRows::Weights(_) => unreachable!(),
    }
}

fn descending(row: &CharRow) -> Vec<i64> {
    row.coefficients.iter().rev().map(|c| c.parse().unwrap()).collect()
}

#[test]
fn exceptional_and_parabolic_rows_match_the_reference_tables() {
    for n in 2..=5 {
        let odd = n % 2 == 1;
        let mut all = rows(TableKind::Simple, n);
        all.extend(rows(TableKind::Parabolic, n));
        let mut checked = 0;
        for row in &all {
            let Some(expected) = reference(&row.type_tag, odd) else { continue };
            let got = descending(row);
            let negated: Vec<i64> = expected.iter().map(|x| -x).collect();
            assert!(got == expected || got == negated, "{} n={n}: {got:?}", row.type_tag);
            assert_eq!(
                (row.a.as_str(), row.b.as_str()),
                reference_columns(&row.type_tag, odd),
                "{} n={n}",
                row.type_tag
            );
            checked += 1;
        }
        assert_eq!(checked, 6);
    }
}

#[test]
fn a_and_d_rows_match_the_reference_tables() {
    for n in 1..=4 {
        let odd = n % 2 == 1;
        for row in rows(TableKind::Simple, n) {
            let k: usize = match &row.k {
                Some(k) => k.parse().unwrap(),
                None => continue,
            };
            let got = descending(&row);
            if row.type_tag.starts_with('A') {
                // odd n: t^k - t^(k-1) + ... ; even n: t^k + ... + 1
                let expected: Vec<i64> = (0..=k)
                    .map(|i| if odd && i % 2 == 1 { -1 } else { 1 })
                    .collect();
                assert_eq!(got, expected, "{} n={n}", row.type_tag);
                let cols = match (odd, k % 2 == 0) {
                    (true, true) => ("yes", "yes"),
                    (true, false) => ("no", "no"),
                    (false, _) => ("no", "yes"),
                };
                assert_eq!((row.a.as_str(), row.b.as_str()), cols);
            } else if odd {
                assert_eq!(got.len() - 1, k, "{} n={n}", row.type_tag);
                assert_eq!((row.a.as_str(), row.b.as_str()), ("no", "no"));
            } else {
                // (t+1)(t^(k-1)+1)
                let mut expected = vec![0i64; k + 1];
                expected[0] += 1;
                expected[1] += 1;
                expected[k - 1] += 1;
                expected[k] += 1;
                assert_eq!(got, expected, "{} n={n}", row.type_tag);
                assert_eq!((row.a.as_str(), row.b.as_str()), ("no", "yes"));
            }
        }
    }
}

#[test]
fn weights_table_matches_the_reference_kappa_column() {
    for n in 1..=4i64 {
        let doc = emit_tables(TableKind::Weights, n as usize, Some((1, 10)), None).unwrap();
        let TableRows::Weights(rows) = doc.rows else { unreachable!() };
        for row in rows {
            let kappa: Vec<i64> = row.kappa.split('/').map(|x| x.parse().unwrap()).collect();
            // kappa - n/2 as a reduced fraction p/q
            let (p, q) = (2 * kappa[0] - n * kappa[1], 2 * kappa[1]);
            let g = gcd(p.abs(), q);
            let offset = (p / g.max(1), q / g.max(1));
            let k: i64 = row.k.as_deref().map_or(0, |k| k.parse().unwrap());
            let expected = match &row.type_tag[..1] {
                "A" => (1, k + 1),
                "D" => (1, 2 * (k - 1)),
                _ => match row.type_tag.as_str() {
                    "E6" => (1, 12),
                    "E7" => (1, 18),
                    "E8" => (1, 30),
                    _ => (0, 1),
                },
            };
            assert_eq!(offset, expected, "{} n={n}", row.type_tag);
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
