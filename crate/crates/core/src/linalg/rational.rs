//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A coordinate vector over the rationals.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"p"`, with an optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = parse_int(num)?;
    let den: BigInt = parse_int(den)?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.trim_start_matches('+').parse().ok()
}

/// Canonical text form: `"p/q"` in lowest terms, `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Clears denominators and divides by the content, so the result is a primitive
/// integer vector whose first nonzero entry is positive.
pub(crate) fn primitive_integer_row(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().filter(|x| !x.is_zero()).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut row: Vec<BigInt> =
        v.iter().map(|x| if x.is_zero() { BigInt::zero() } else { x.numer() * (&lcm / x.denom()) }).collect();
    make_primitive(&mut row);
    row
}

pub(crate) fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = row.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &g;
            }
        }
    }
}
