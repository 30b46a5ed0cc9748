//! Invariants of the graded Milnor algebra of a quasihomogeneous germ.
//!
//! With integer grading `(d; q_1, ..., q_{n+1})` the Poincaré polynomial of
//! the Milnor algebra is `prod (1 - t^{d-q_i}) / prod (1 - t^{q_i})`. A basis
//! monomial of weighted degree `s` contributes the spectral number
//! `(s + Q)/d - 1` and the monodromy eigenvalue `exp(2 pi i (s + Q)/d)`.
//!
//! [`jacobian_quotient_dims`] recomputes the graded dimensions directly from
//! the Jacobian ideal by exact linear algebra, independently of the closed
//! formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactpoly::{IntPoly, Monomial, Poly, Rat};
use crate::linalg::RatMatrix;
use crate::weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("Poincaré quotient has a nonzero remainder (degenerate weight system)")]
    InexactDivision,
    #[error("Poincaré quotient has a negative coefficient (degenerate weight system)")]
    NegativeCoefficient,
    #[error("prod(1/a_i - 1) = {0} is not an integer")]
    NonIntegerMilnorNumber(String),
    #[error("monodromy multiplicities differ on the Galois orbit of order {order}")]
    GaloisOrbitNonUniform { order: u64 },
}

/// Multiset of spectral numbers, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(Rat, u64)>,
}

impl Spectrum {
    pub fn entries(&self) -> &[(Rat, u64)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.entries.first().map(|(a, _)| a)
    }

    pub fn multiplicity(&self, alpha: &Rat) -> u64 {
        self.entries
            .iter()
            .find(|(a, _)| a == alpha)
            .map_or(0, |(_, m)| *m)
    }

    pub fn contains(&self, alpha: &Rat) -> bool {
        self.multiplicity(alpha) > 0
    }

    /// Whether `alpha -> 2 center - alpha` preserves the multiset.
    pub fn is_symmetric_about(&self, center: &Rat) -> bool {
        let two_c = center * Rat::from_integer(BigInt::from(2));
        self.entries
            .iter()
            .all(|(a, m)| self.multiplicity(&(&two_c - a)) == *m)
    }
}

/// `Delta(t) = prod_k Phi_k(t)^{m_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloFactorization {
    factors: BTreeMap<u64, u64>,
    mu: u64,
}

impl CycloFactorization {
    pub fn new(factors: BTreeMap<u64, u64>) -> Self {
        let factors: BTreeMap<u64, u64> = factors.into_iter().filter(|(_, m)| *m > 0).collect();
        let mu = factors.iter().map(|(&k, &m)| m * euler_phi(k)).sum();
        CycloFactorization { factors, mu }
    }

    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    pub fn multiplicity(&self, k: u64) -> u64 {
        self.factors.get(&k).copied().unwrap_or(0)
    }

    /// Degree of `Delta`.
    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Monic integer expansion.
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::one(), |acc, (&k, &m)| acc.mul(&cyclotomic(k).pow(m as u32)))
    }

    /// Product notation such as `Phi1^2*Phi3^3`; `1` when empty.
    pub fn factored_string(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(k, m)| match m {
                1 => format!("Phi{k}"),
                _ => format!("Phi{k}^{m}"),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn euler_phi(k: u64) -> u64 {
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `k`-th cyclotomic polynomial, by dividing `t^k - 1` by `Phi_j` for the
/// proper divisors `j` of `k`.
pub fn cyclotomic(k: u64) -> IntPoly {
    assert!(k >= 1);
    let mut p = IntPoly::t_pow_minus_one(k as usize);
    for j in 1..k {
        if k % j == 0 {
            let (q, r) = p.div_rem_unit(&cyclotomic(j));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Exact quotient `prod (1 - t^{d-q_i}) / prod (1 - t^{q_i})`.
///
/// Both products are formed in full before dividing; dividing factor by
/// factor leaves remainders for gradings such as `(18; 6, 4, 9)`.
pub fn poincare_polynomial(w: &WeightSystem) -> Result<IntPoly, MilnorError> {
    let d = w.d();
    let num = w.q().iter().fold(IntPoly::one(), |acc, &qi| {
        acc.mul(&IntPoly::one_minus_t_pow((d - qi) as usize))
    });
    let den = w
        .q()
        .iter()
        .fold(IntPoly::one(), |acc, &qi| acc.mul(&IntPoly::one_minus_t_pow(qi as usize)));
    let (quot, rem) = num.div_rem_unit(&den);
    if !rem.is_zero() {
        return Err(MilnorError::InexactDivision);
    }
    if quot.coeffs().iter().any(|c| c.sign() == num_bigint::Sign::Minus) {
        return Err(MilnorError::NegativeCoefficient);
    }
    Ok(quot)
}

/// `mu = prod (1/a_i - 1)`.
pub fn milnor_number(w: &WeightSystem) -> Result<u64, MilnorError> {
    let prod = w
        .weights()
        .iter()
        .fold(Rat::one(), |acc, a| acc * (a.recip() - Rat::one()));
    if !prod.is_integer() {
        return Err(MilnorError::NonIntegerMilnorNumber(prod.to_string()));
    }
    prod.to_integer()
        .to_u64()
        .ok_or_else(|| MilnorError::NonIntegerMilnorNumber(prod.to_string()))
}

pub fn spectrum(w: &WeightSystem) -> Result<Spectrum, MilnorError> {
    let poincare = poincare_polynomial(w)?;
    let d = Rat::from_integer(BigInt::from(w.d()));
    let q_sum = w.q_sum();
    let entries = poincare
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(s, c)| {
            let alpha = Rat::from_integer(BigInt::from(s as u64 + q_sum)) / &d - Rat::one();
            (alpha, c.to_u64().expect("Poincaré coefficients are non-negative"))
        })
        .collect();
    Ok(Spectrum { entries })
}

/// Monodromy characteristic polynomial as cyclotomic multiplicities.
pub fn characteristic_polynomial(w: &WeightSystem) -> Result<CycloFactorization, MilnorError> {
    let poincare = poincare_polynomial(w)?;
    let d = w.d();
    let q_sum = w.q_sum();
    // multiplicity of the eigenvalue exp(2 pi i e / d) for each residue e
    let mut by_residue = vec![0u64; d as usize];
    for (s, c) in poincare.coeffs().iter().enumerate() {
        let c = c.to_u64().expect("Poincaré coefficients are non-negative");
        by_residue[((s as u64 + q_sum) % d) as usize] += c;
    }
    let mut factors = BTreeMap::new();
    for k in (1..=d).filter(|k| d % k == 0) {
        // residues of exact order k: gcd(e, d) = d / k
        let mut orbit = (0..d).filter(|&e| e.gcd(&d) == d / k);
        let first = orbit.next().expect("every divisor has a primitive residue");
        let m = by_residue[first as usize];
        if orbit.any(|e| by_residue[e as usize] != m) {
            return Err(MilnorError::GaloisOrbitNonUniform { order: k });
        }
        if m > 0 {
            factors.insert(k, m);
        }
    }
    Ok(CycloFactorization::new(factors))
}

/// All exponent vectors of weighted degree exactly `s`.
pub fn monomials_of_degree(q: &[u64], s: u64) -> Vec<Monomial> {
    fn rec(q: &[u64], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == q.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let mut k = 0u32;
        loop {
            let used = u64::from(k) * q[i];
            if used > left {
                break;
            }
            cur.push(k);
            rec(q, i + 1, left - used, cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(q, 0, s, &mut Vec::with_capacity(q.len()), &mut out);
    out
}

/// Dimension of `C[z]_s / J_s` for every weighted degree `s = 0..=s_limit`,
/// where `J` is the Jacobian ideal of `p`. Each degree is an exact rank
/// computation over the rationals.
pub fn jacobian_quotient_dims(p: &Poly, w: &WeightSystem, s_limit: u64) -> Vec<u64> {
    let q = w.q();
    let d = w.d();
    let partials: Vec<Poly> = (0..p.nvars())
        .map(|i| p.differentiate(i).expect("index in range"))
        .collect();
    (0..=s_limit)
        .into_par_iter()
        .map(|s| {
            let rows = monomials_of_degree(q, s);
            if rows.is_empty() {
                return 0;
            }
            let index: BTreeMap<&Monomial, usize> =
                rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut columns: Vec<Vec<(usize, Rat)>> = Vec::new();
            for (i, dp) in partials.iter().enumerate() {
                if dp.is_zero() {
                    continue;
                }
                let deg_dp = d - q[i];
                if deg_dp > s {
                    continue;
                }
                for mult in monomials_of_degree(q, s - deg_dp) {
                    let col = dp
                        .terms()
                        .map(|(m, c)| (index[&mult.mul(m)], c.clone()))
                        .collect();
                    columns.push(col);
                }
            }
            let mut mat = RatMatrix::zeros(columns.len(), rows.len());
            for (j, col) in columns.into_iter().enumerate() {
                for (r, c) in col {
                    mat.set(j, r, c);
                }
            }
            (rows.len() - mat.rank()) as u64
        })
        .collect()
}

/// Isolatedness oracle: the quotient dimensions must vanish on the whole
/// window `(s_max, s_max + max q_i]`. Every monomial above the window is a
/// variable times a monomial inside it, so vanishing there propagates.
pub fn is_isolated(p: &Poly, w: &WeightSystem) -> bool {
    let top = w.s_max() + w.max_q() as i64;
    if top < 0 {
        return false;
    }
    let dims = jacobian_quotient_dims(p, w, top as u64);
    let start = (w.s_max() + 1).max(0) as usize;
    dims[start..].iter().all(|&x| x == 0)
}
