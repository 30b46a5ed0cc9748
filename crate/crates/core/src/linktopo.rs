//! Topology of the link `K ∩ S_ε` and recognition of catalog types.
//!
//! The link is a rational homology sphere iff `Δ(1) ≠ 0`, and for `n > 2`
//! it is homeomorphic to a sphere iff `Δ(1) = ±1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::catalog::{Family, TypeTag};
use crate::exactpoly::{rat, Rat};
use crate::milnor::CycloFactorization;
use crate::weights::WeightSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sphere {
    Yes,
    No,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkClass {
    pub delta_at_one: BigInt,
    pub sphere: Sphere,
    pub sphere_reason: String,
    pub rational_sphere: bool,
    pub n: usize,
}

/// `Φ_k(1)`: 0 for `k = 1`, `p` for prime powers `k = p^r`, 1 otherwise.
pub fn cyclotomic_at_one(k: u64) -> u64 {
    if k == 1 {
        return 0;
    }
    let p = (2..=k).find(|p| k % p == 0).expect("k >= 2 has a prime factor");
    let mut rest = k;
    while rest % p == 0 {
        rest /= p;
    }
    if rest == 1 {
        p
    } else {
        1
    }
}

pub fn delta_at_one(delta: &CycloFactorization) -> BigInt {
    delta
        .factors()
        .iter()
        .fold(BigInt::one(), |acc, (&k, &m)| {
            acc * BigInt::from(cyclotomic_at_one(k)).pow(m as u32)
        })
}

pub fn classify_link(delta: &CycloFactorization, n: usize) -> LinkClass {
    let value = delta_at_one(delta);
    let rational_sphere = !value.is_zero();
    let unit = value.abs().is_one();
    let (sphere, sphere_reason) = match n {
        0 | 1 => (
            Sphere::NotApplicable,
            "sphere criterion needs n > 2 (n = 2 read as homology sphere)".to_string(),
        ),
        2 if unit => (Sphere::Yes, "homology sphere (|Δ(1)| = 1)".to_string()),
        2 => (Sphere::No, format!("not a homology sphere (Δ(1) = {value})")),
        _ if unit => (Sphere::Yes, "homeomorphic to sphere (|Δ(1)| = 1)".to_string()),
        _ => (Sphere::No, format!("not homeomorphic to a sphere (Δ(1) = {value})")),
    };
    LinkClass {
        delta_at_one: value,
        sphere,
        sphere_reason,
        rational_sphere,
        n,
    }
}

/// Matches the weight multiset against the catalog and cross-checks `mu`.
///
/// Weights equal to 1/2 (the quadratic part) are stripped first; the rest
/// must match the leading weights of exactly one normal form. Any germ with
/// `mu = 1` is Morse, whatever its presentation.
pub fn recognize_type(w: &WeightSystem, mu: u64) -> TypeTag {
    if mu == 1 {
        return TypeTag::a(1);
    }
    let half = rat(1, 2);
    let mut core: Vec<Rat> = w.weights().iter().filter(|a| **a != half).cloned().collect();
    core.sort();
    let tag = match_core(&core);
    match tag.milnor_number() {
        Some(expected) if expected == mu => tag,
        _ => TypeTag::unknown(),
    }
}

/// `1/a` when it is an integer.
fn reciprocal_int(a: &Rat) -> Option<i64> {
    let r = a.recip();
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

fn match_core(core: &[Rat]) -> TypeTag {
    let exceptional = |f| TypeTag::exceptional(f);
    match core {
        [] => TypeTag::a(1),
        [a] => match reciprocal_int(a) {
            Some(m) if m >= 3 => TypeTag::a((m - 1) as u32),
            _ => TypeTag::unknown(),
        },
        [x, y] => {
            let pairs = [
                ((1, 4), (1, 3), Family::E6),
                ((2, 9), (1, 3), Family::E7),
                ((1, 5), (1, 3), Family::E8),
                ((1, 4), (1, 4), Family::X9),
                ((1, 6), (1, 3), Family::J10),
            ];
            for (p, q, family) in pairs {
                if *x == rat(p.0, p.1) && *y == rat(q.0, q.1) {
                    return exceptional(family);
                }
            }
            // D_k: {1/(k-1), (k-2)/(2k-2)}, k >= 4, in either order
            for (small, other) in [(x, y), (y, x)] {
                if let Some(m) = reciprocal_int(small) {
                    let k = m + 1;
                    if k >= 4 && *other == rat(k - 2, 2 * k - 2) {
                        return TypeTag::d(k as u32);
                    }
                }
            }
            TypeTag::unknown()
        }
        [a, b, c] if [a, b, c].iter().all(|v| **v == rat(1, 3)) => exceptional(Family::P8),
        _ => TypeTag::unknown(),
    }
}
