//! Coefficient fields.
//!
//! Verification runs over exact rationals ([`Rational`]); the eigenvalue and
//! determinant numerics run over `f64`. Everything else is generic over
//! [`Scalar`].

use std::fmt;
use std::ops::Neg;

use num::{BigInt, BigRational, Num, One, ToPrimitive, Zero};

/// Exact rational coefficient with big-integer numerator and denominator.
pub type Rational = BigRational;

/// A field usable as a coefficient ring for the algebras.
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + 'static {
    fn from_i64(v: i64) -> Self;

    /// Lossy conversion used by the numeric suites.
    fn to_f64(&self) -> f64;

    /// Text form used in reports and error payloads.
    fn render(&self) -> String;

    /// Zero up to rounding, relative to `reference`. Exact fields have no
    /// rounding.
    fn is_negligible(&self, reference: &Self) -> bool;
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn render(&self) -> String {
        format_rational(self)
    }

    fn is_negligible(&self, _reference: &Self) -> bool {
        self.is_zero()
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self:?}")
    }

    fn is_negligible(&self, reference: &Self) -> bool {
        self.abs() <= 1e-9 * reference.abs().max(1.0)
    }
}

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as an exact rational.
pub fn int(v: i64) -> Rational {
    rat(v, 1)
}

/// Lift a slice of small integers into any scalar field.
pub fn lift<T: Scalar, const N: usize>(values: [i64; N]) -> [T; N] {
    values.map(T::from_i64)
}

/// Render an exact rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `-p`, `p/q` or a decimal (`-1.25`, `2.5e-3`) exactly.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((mantissa, exp)) = text.split_once(['e', 'E']) {
        let exp: i32 = exp.parse().ok()?;
        let ten = BigRational::from_integer(BigInt::from(10));
        return Some(parse_rational(mantissa)? * num::pow::Pow::pow(&ten, exp));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        let whole: BigInt = if whole.is_empty() { BigInt::zero() } else { whole.parse().ok()? };
        let scale = num::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().ok()?;
        let magnitude = BigRational::new(whole * &scale + frac, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// Relative comparison for the float suites; below magnitude 1 it degrades
/// to an absolute tolerance of `rel`.
pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    let scale = a.abs().max(b.abs()).max(1.0);
    (a - b).abs() <= rel * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_exactly() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("0.1"), Some(rat(1, 10)));
        assert_eq!(parse_rational("-1.25"), Some(rat(-5, 4)));
        assert_eq!(parse_rational("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("2.5e1"), Some(int(25)));
        assert_eq!(parse_rational("1e-2"), Some(rat(1, 100)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
    }
}
