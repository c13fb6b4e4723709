//! Univariate polynomials with rational coefficients and rational root finding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{format_rational, primitive_integer_row, Rational};
use crate::error::{Error, Result};

/// Polynomial with coefficients in ascending degree; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·var^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Divides by `(var − r)`, returning quotient and remainder.
    pub fn div_linear(&self, r: &Rational) -> (UniPoly, Rational) {
        if self.coeffs.is_empty() {
            return (UniPoly::zero(), Rational::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (0..=d).rev() {
            carry = carry * r + &self.coeffs[i];
            if i > 0 {
                quotient[i - 1] = carry.clone();
            }
        }
        (UniPoly::new(quotient), carry)
    }

    /// Renders the polynomial in the given variable, e.g. `"3/2*t^2 - t"`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            if d == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), power));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out)
    }
}

/// Rational roots with multiplicities, plus the degree of the rootless cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Sorted ascending by root.
    pub roots: Vec<(Rational, usize)>,
    pub remainder_degree: usize,
}

impl RationalRoots {
    pub fn splits(&self) -> bool {
        self.remainder_degree == 0
    }
}

// Beyond this many candidate numerators the search gives up instead of hanging.
const MAX_CANDIDATES: u64 = 2_000_000;

/// All rational roots of `p` by the rational-root theorem applied to an integer
/// multiple of `p`.
pub fn rational_roots(p: &UniPoly) -> Result<RationalRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut rest = UniPoly::new(p.coeffs[zero_mult..].to_vec());
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if rest.degree() == Some(0) {
        return Ok(RationalRoots { roots, remainder_degree: 0 });
    }
    let ints = primitive_integer_row(&rest.coeffs);
    let constant = ints[0].abs();
    let lead = ints[ints.len() - 1].abs();
    let denominators = divisors(&lead).ok_or(Error::RootSearchInfeasible)?;
    let numerators = match divisors(&constant) {
        Some(d) => d,
        None => bounded_numerators(&ints, &lead, &constant)?,
    };
    let mut candidates: Vec<Rational> = Vec::new();
    for q in &denominators {
        for num in &numerators {
            for sign in [1, -1] {
                let c = Rational::new(num * BigInt::from(sign), q.clone());
                if !candidates.contains(&c) {
                    candidates.push(c);
                }
            }
        }
    }
    candidates.sort();
    for c in candidates {
        let mut mult = 0;
        loop {
            let (q, r) = rest.div_linear(&c);
            if !r.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RationalRoots { roots, remainder_degree: rest.degree().unwrap_or(0) })
}

/// Positive divisors of a nonzero integer, or `None` if trial division is too costly.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 {
        return None;
    }
    if (n as f64).sqrt() > MAX_CANDIDATES as f64 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Numerator candidates `|p| ≤ lead·B` dividing the constant term, where `B` is
/// the Cauchy root bound.
fn bounded_numerators(ints: &[BigInt], lead: &BigInt, constant: &BigInt) -> Result<Vec<BigInt>> {
    let max_ratio = ints[..ints.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    // |root| ≤ 1 + max|a_i|/|a_d|, so |p| ≤ |a_d| + max|a_i|
    let bound = lead + max_ratio;
    let bound = bound.to_u64().filter(|b| *b <= MAX_CANDIDATES).ok_or(Error::RootSearchInfeasible)?;
    Ok((1..=bound).map(BigInt::from).filter(|p| constant.is_multiple_of(p)).collect())
}
