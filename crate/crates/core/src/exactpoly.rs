//! Sparse multivariate polynomials with exact rational coefficients, a small
//! LL(1) parser for the polynomial text format, and dense integer
//! polynomials in one variable.
//!
//! Text grammar:
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Products need an explicit `*`; parentheses are not accepted.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical `num/den` form, used wherever rationals leave the process.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: integers print without a denominator.
pub fn rat_to_short(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        rat_to_string(r)
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("non-integer exponent at position {pos}")]
    NonIntegerExponent { pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Exponent vector `[k_1, ..., k_{n+1}]`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Weighted degree `sum k_i w_i` for integer weights.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&k, &w)| u64::from(k) * w)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in a fixed number of variables.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; like terms
    /// are combined.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rat, Vec<u32>)>,
    {
        let mut p = Poly::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn differentiate(&self, i: usize) -> Result<Poly, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * Rat::from_integer(BigInt::from(k)));
        }
        Ok(out)
    }

    /// Numerical evaluation at a complex point.
    ///
    /// Powers of each coordinate are tabulated once, then every term is a
    /// product of table entries.
    pub fn evaluate_complex(&self, z: &[Complex64]) -> Result<Complex64, PolyError> {
        if z.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                got: z.len(),
            });
        }
        let powers = self.power_table(z);
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(rat_to_f64(c), 0.0);
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    t *= powers[i][k as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// `sum |c_m z^m|`, the natural scale against which `|p(z)|` is small.
    pub fn magnitude_scale(&self, z: &[Complex64]) -> Result<f64, PolyError> {
        if z.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                got: z.len(),
            });
        }
        let powers = self.power_table(z);
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .enumerate()
                    .fold(rat_to_f64(c).abs(), |acc, (i, &k)| {
                        acc * powers[i][k as usize].norm()
                    })
            })
            .sum())
    }

    fn power_table(&self, z: &[Complex64]) -> Vec<Vec<Complex64>> {
        (0..self.nvars)
            .map(|i| {
                let top = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
                let mut row = Vec::with_capacity(top + 1);
                row.push(Complex64::new(1.0, 0.0));
                for k in 1..=top {
                    let prev = row[k - 1];
                    row.push(prev * z[i]);
                }
                row
            })
            .collect()
    }

    /// Degree of the polynomial in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Returns the weighted degree if every term has the same one.
    pub fn weighted_homogeneous_degree(&self, weights: &[Rat]) -> Option<Rat> {
        let mut deg: Option<Rat> = None;
        for m in self.terms.keys() {
            let dm = m
                .0
                .iter()
                .zip(weights)
                .fold(Rat::zero(), |acc, (&k, w)| acc + w * Rat::from_integer(k.into()));
            match &deg {
                None => deg = Some(dm),
                Some(d) if *d == dm => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Prints the polynomial in the accepted text grammar, highest
    /// graded-lexicographic term first.
    pub fn to_text(&self, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in m.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", vars[i], k)),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, rat_to_short(&abs));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Parses polynomial text over the given ordered variable list.
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<Poly, ParseError> {
    Parser::new(text, vars).parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [&'a str]) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn parse(mut self) -> Result<Poly, ParseError> {
        let nvars = self.vars.len();
        let mut poly = Poly::zero(nvars);
        let mut sign = Rat::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (c, m) = self.term()?;
            poly.add_term(m, c * &sign);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rat::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rat::one();
                }
                Some(ch) => return self.syntax(format!("unexpected `{}`", ch as char)),
            }
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Rat, Monomial), ParseError> {
        let mut exps = vec![0u32; self.vars.len()];
        let coeff = match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                let c = self.coeff()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.factor(&mut exps)?;
                }
                c
            }
            Some(ch) if is_ident_start(ch) => {
                self.factor(&mut exps)?;
                Rat::one()
            }
            Some(ch) => return self.syntax(format!("expected a term, found `{}`", ch as char)),
            None => return self.syntax("expected a term, found end of input"),
        };
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((coeff, Monomial(exps)))
    }

    fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }

    fn coeff(&mut self) -> Result<Rat, ParseError> {
        let Some(num) = self.uint() else {
            return self.syntax("expected an integer");
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let Some(den) = self.uint() else {
                return self.syntax("expected a denominator");
            };
            if den.is_zero() {
                return self.syntax("zero denominator");
            }
            return Ok(Rat::new(num, den));
        }
        Ok(Rat::from_integer(num))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(&ch) if is_ident_start(ch) => {}
            _ => return self.syntax("expected a variable"),
        }
        while self.pos < self.src.len() && is_ident_continue(self.src[self.pos]) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
        let Some(index) = self.vars.iter().position(|v| *v == name) else {
            return Err(ParseError::UnknownVariable {
                name: name.to_string(),
                pos: start,
            });
        };
        let mut k = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            k = self.exponent()?;
        }
        exps[index] += k;
        Ok(())
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let pos = self.pos;
        if self.src.get(pos) == Some(&b'-') {
            return Err(ParseError::NegativeExponent { pos });
        }
        let Some(k) = self.uint() else {
            return Err(ParseError::NonIntegerExponent { pos });
        };
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(ParseError::NonIntegerExponent { pos });
        }
        k.to_u32().ok_or(ParseError::Syntax {
            pos,
            msg: "exponent too large".into(),
        })
    }
}

fn is_ident_start(ch: u8) -> bool {
    ch.is_ascii_alphabetic() || ch == b'_'
}

fn is_ident_continue(ch: u8) -> bool {
    ch.is_ascii_alphanumeric() || ch == b'_'
}

/// Dense univariate polynomial with integer coefficients; `coeffs[i]` is the
/// coefficient of `t^i`. The leading coefficient is nonzero unless the
/// polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `t^k - 1`
    pub fn t_pow_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = BigInt::from(-1);
        c[k] += BigInt::one();
        IntPoly::new(c)
    }

    /// `1 - t^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        IntPoly::t_pow_minus_one(k).neg()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// Long division by a divisor whose leading coefficient is `±1`.
    /// Returns `(quotient, remainder)`.
    pub fn div_rem_unit(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dlead = divisor.leading().expect("division by zero polynomial");
        assert!(dlead.abs().is_one(), "divisor must have unit leading coefficient");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + ddeg] * dlead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Multiplies by `-1` if needed so the leading coefficient is positive.
    pub fn normalized_sign(&self) -> IntPoly {
        match self.leading() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, "*t")?,
                1 => write!(f, "t")?,
                _ if show_coeff => write!(f, "*t^{i}")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Least common multiple of the denominators of `values`.
pub fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rat>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, vars: &[&str]) -> Poly {
        parse_polynomial(text, vars).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_fermat_cubic() {
        let s = p("z1^3+z2^3+z3^3", &["z1", "z2", "z3"]);
        assert_eq!(s.num_terms(), 3);
        assert!(s.terms().all(|(_, c)| c.is_one()));
        assert_eq!(s.coefficient(&Monomial::new(vec![0, 3, 0])), rat_int(1));
    }

    #[test]
    fn parses_zero() {
        assert!(p("0", &["x"]).is_zero());
        assert!(p("x - x", &["x"]).is_zero());
    }

    #[test]
    fn parses_morse_presentation() {
        let s = p("x*y + y^100 + z^2 + t^2", &["x", "y", "z", "t"]);
        assert_eq!(s.num_terms(), 4);
        assert_eq!(s.coefficient(&Monomial::new(vec![0, 100, 0, 0])), rat_int(1));
    }

    #[test]
    fn parses_rational_coefficients_and_signs() {
        let s = p("-3/6*x^2*y + 2 - y*y", &["x", "y"]);
        assert_eq!(s.coefficient(&Monomial::new(vec![2, 1])), rat(-1, 2));
        assert_eq!(s.coefficient(&Monomial::new(vec![0, 2])), rat_int(-1));
        assert_eq!(s.coefficient(&Monomial::one(2)), rat_int(2));
    }

    #[test]
    fn parse_errors_are_classified() {
        assert!(matches!(
            parse_polynomial("x + w", &["x"]),
            Err(ParseError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^-2", &["x"]),
            Err(ParseError::NegativeExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("x^1.5", &["x"]),
            Err(ParseError::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("x^y", &["x", "y"]),
            Err(ParseError::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("x y", &["x", "y"]),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("(x+y)", &["x", "y"]),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_polynomial("x +", &["x"]),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0*x", &["x"]),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn prints_in_grammar() {
        let vars = ["x", "y"];
        let s = p("2 - 1/3*x*y^2 + x^3 - y", &vars);
        let text = s.to_text(&vars);
        assert_eq!(text, "x^3 - 1/3*x*y^2 - y + 2");
        assert_eq!(p(&text, &vars), s);
        assert_eq!(p("-x", &vars).to_text(&vars), "-x");
    }

    #[test]
    fn differentiates() {
        let vars = ["z1", "z2", "z3"];
        let s = p("z1^3+z2^3+z3^3", &vars);
        assert_eq!(s.differentiate(0).unwrap(), p("3*z1^2", &vars));
        let xy = p("x*y", &["x", "y"]);
        assert_eq!(xy.differentiate(0).unwrap(), p("y", &["x", "y"]));
        assert!(p("5", &["x"]).differentiate(0).unwrap().is_zero());
        assert_eq!(
            p("x", &["x"]).differentiate(1),
            Err(PolyError::IndexOutOfRange { index: 1, nvars: 1 })
        );
    }

    #[test]
    fn evaluates_on_hypersurfaces() {
        let s = p("z1^3+z2^3+z3^3", &["z1", "z2", "z3"]);
        let v = s.evaluate_complex(&[c(1., 0.), c(-1., 0.), c(0., 0.)]).unwrap();
        assert_eq!(v.norm(), 0.0);
        let xy = p("x*y", &["x", "y"]);
        assert_eq!(xy.evaluate_complex(&[c(0., 0.), c(2., 0.)]).unwrap().norm(), 0.0);
        let q = p("z1^2+z2^2+z3^2", &["z1", "z2", "z3"]);
        let v = q.evaluate_complex(&[c(3., 0.), c(4., 0.), c(0., 5.)]).unwrap();
        assert!(v.norm() < 1e-12);
        assert_eq!(
            q.evaluate_complex(&[c(1., 0.)]),
            Err(PolyError::DimensionMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn intpoly_division_and_display() {
        // ((t^2 - 1)/(t - 1))^3 = (t + 1)^3
        let num = IntPoly::t_pow_minus_one(2).pow(3);
        let den = IntPoly::t_pow_minus_one(1).pow(3);
        let (q, r) = num.div_rem_unit(&den);
        assert!(r.is_zero());
        assert_eq!(q, IntPoly::from_i64(&[1, 3, 3, 1]));
        assert_eq!(q.to_string(), "t^3 + 3*t^2 + 3*t + 1");
        assert_eq!(IntPoly::from_i64(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(IntPoly::from_i64(&[-1, 1]).to_string(), "t - 1");
        let (_, r) = IntPoly::from_i64(&[1, 0, 1]).div_rem_unit(&IntPoly::from_i64(&[1, 1]));
        assert_eq!(r, IntPoly::from_i64(&[2]));
    }

    const VARS: [&str; 3] = ["x", "y", "z"];

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            ((-20i64..=20, 1i64..=6), prop::collection::vec(0u32..4, 3)),
            0..6,
        )
        .prop_map(|terms| {
            Poly::from_terms(
                3,
                terms.into_iter().map(|((n, d), e)| (rat(n, d), e)),
            )
        })
    }

    fn arb_point() -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 3)
            .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(q in arb_poly()) {
            let text = q.to_text(&VARS);
            prop_assert_eq!(parse_polynomial(&text, &VARS).unwrap(), q);
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            for i in 0..3 {
                let da = a.differentiate(i).unwrap();
                let db = b.differentiate(i).unwrap();
                prop_assert_eq!(a.add(&b).differentiate(i).unwrap(), da.add(&db));
                prop_assert_eq!(
                    a.mul(&b).differentiate(i).unwrap(),
                    da.mul(&b).add(&a.mul(&db))
                );
            }
        }

        #[test]
        fn evaluation_is_additive(a in arb_poly(), b in arb_poly(), z in arb_point()) {
            let lhs = a.add(&b).evaluate_complex(&z).unwrap();
            let rhs = a.evaluate_complex(&z).unwrap() + b.evaluate_complex(&z).unwrap();
            let scale = a.magnitude_scale(&z).unwrap() + b.magnitude_scale(&z).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale.max(1.0));
        }
    }
}
