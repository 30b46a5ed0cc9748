//! Quasihomogeneity test and weight systems.
//!
//! A polynomial is quasihomogeneous with weights `a_i` when every monomial
//! `prod z_i^{k_i}` satisfies `sum k_i a_i = 1`. The weights are found by
//! solving that linear system exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactpoly::{lcm_of_denominators, Poly, Rat};
use crate::linalg::{min_norm_solution, solve, LinearSolution, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("the zero polynomial has no weight system")]
    ZeroPolynomial,
    #[error("polynomial is not quasihomogeneous (inconsistent weight equations)")]
    NotQuasihomogeneous,
    #[error("degenerate weights: weight {index} = {value} lies outside (0, 1)")]
    DegenerateWeights { index: usize, value: String },
    #[error("variable {index} appears in no monomial")]
    UnusedVariable { index: usize },
    #[error("weight denominators too large for the integer grading")]
    GradingOverflow,
}

/// Rational weights `a_i` together with the integer grading `q_i = d a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    a: Vec<Rat>,
    d: u64,
    q: Vec<u64>,
    unique: bool,
}

impl WeightSystem {
    /// Builds a weight system directly from weights in `(0, 1)`.
    pub fn from_weights(a: Vec<Rat>, unique: bool) -> Result<Self, WeightError> {
        for (index, ai) in a.iter().enumerate() {
            if !ai.is_positive() || *ai >= Rat::one() {
                return Err(WeightError::DegenerateWeights {
                    index,
                    value: ai.to_string(),
                });
            }
        }
        let d_big = lcm_of_denominators(&a);
        let d = d_big.to_u64().ok_or(WeightError::GradingOverflow)?;
        let q = a
            .iter()
            .map(|ai| {
                (ai * Rat::from_integer(d_big.clone()))
                    .to_integer()
                    .to_u64()
                    .ok_or(WeightError::GradingOverflow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeightSystem { a, d, q, unique })
    }

    pub fn weights(&self) -> &[Rat] {
        &self.a
    }

    /// Common denominator of the weights; the degree of the polynomial in
    /// the integer grading.
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    /// `Q = sum q_i`.
    pub fn q_sum(&self) -> u64 {
        self.q.iter().sum()
    }

    /// `kappa = sum a_i` over all variables.
    pub fn kappa(&self) -> Rat {
        self.a.iter().fold(Rat::zero(), |acc, x| acc + x)
    }

    /// `false` when the weight equations were underdetermined and the
    /// minimum-norm solution was chosen.
    pub fn unique(&self) -> bool {
        self.unique
    }

    pub fn nvars(&self) -> usize {
        self.a.len()
    }

    /// Complex dimension `n` of the hypersurface (number of variables minus one).
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    /// Top degree of the graded Milnor algebra, `sum (d - 2 q_i)`. May be
    /// negative for degenerate data.
    pub fn s_max(&self) -> i64 {
        self.q.iter().map(|&qi| self.d as i64 - 2 * qi as i64).sum()
    }

    pub fn max_q(&self) -> u64 {
        self.q.iter().copied().max().unwrap_or(0)
    }

    /// Applies a permutation: `perm[i]` is the old index of new variable `i`.
    pub fn permuted(&self, perm: &[usize]) -> WeightSystem {
        WeightSystem {
            a: perm.iter().map(|&i| self.a[i].clone()).collect(),
            d: self.d,
            q: perm.iter().map(|&i| self.q[i]).collect(),
            unique: self.unique,
        }
    }
}

/// Solves `sum_i k_i^{(j)} a_i = 1` over all monomials `j` of `p`.
pub fn find_weights(p: &Poly) -> Result<WeightSystem, WeightError> {
    if p.is_zero() {
        return Err(WeightError::ZeroPolynomial);
    }
    let rows: Vec<Vec<Rat>> = p
        .terms()
        .map(|(m, _)| {
            m.exponents()
                .iter()
                .map(|&k| Rat::from_integer(BigInt::from(k)))
                .collect()
        })
        .collect();
    let ones = vec![Rat::one(); rows.len()];
    let matrix = RatMatrix::from_rows(rows);
    let solution = solve(&matrix, &ones);
    if solution == LinearSolution::Inconsistent {
        return Err(WeightError::NotQuasihomogeneous);
    }
    if let Some(index) = (0..p.nvars()).find(|&i| p.degree_in(i) == 0) {
        return Err(WeightError::UnusedVariable { index });
    }
    let (a, unique) = match solution {
        LinearSolution::Inconsistent => unreachable!(),
        LinearSolution::Unique(a) => (a, true),
        LinearSolution::Family { rows, rhs } => (min_norm_solution(&rows, &rhs), false),
    };
    let w = WeightSystem::from_weights(a, unique)?;
    for (m, _) in p.terms() {
        let deg = m
            .exponents()
            .iter()
            .zip(w.weights())
            .fold(Rat::zero(), |acc, (&k, ai)| acc + ai * Rat::from_integer(k.into()));
        assert!(deg.is_one(), "weighted degree of {m:?} is {deg}");
    }
    debug_assert!(w
        .q
        .iter()
        .fold(w.d, |g, &qi| g.gcd(&qi))
        .is_one());
    Ok(w)
}

/// Distance of the Newton diagram for a quasihomogeneous germ: `-kappa`.
pub fn newton_distance(w: &WeightSystem) -> Rat {
    -w.kappa()
}
