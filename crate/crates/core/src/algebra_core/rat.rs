//! The scalar type: arbitrary-precision reduced rationals.
//!
//! Every numeric value in this crate is a [`Rat`]; there are no floating
//! point numbers anywhere. `num`'s `BigRational` already guarantees the
//! required invariants (always reduced, positive denominator).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rat = BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders a rational as `a/b`, or plain `a` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an integer (`-3`) or an integer fraction (`7/12`).
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign of a rational: -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_reduces_and_elides_unit_denominator() {
        assert_eq!(fmt_rat(&rat(6, 4)), "3/2");
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
        assert_eq!(fmt_rat(&rat(-1, 2)), "-1/2");
        assert_eq!(fmt_rat(&rat(1, -2)), "-1/2");
        assert_eq!(fmt_rat(&rat_int(0)), "0");
    }

    #[test]
    fn parsing_accepts_integers_and_fractions() {
        assert_eq!(parse_rat("1/24"), Some(rat(1, 24)));
        assert_eq!(parse_rat("-11/12"), Some(rat(-11, 12)));
        assert_eq!(parse_rat("42"), Some(rat_int(42)));
        assert_eq!(parse_rat(" 3 / 9 "), Some(rat(1, 3)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1.5"), None);
        assert_eq!(parse_rat(""), None);
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = rat(1, 1152);
        let b = rat(1, 16);
        assert_eq!(&a * rat_int(72), b);
        assert_eq!(fmt_rat(&(rat(1, 48) + rat(1, 24) - rat(1, 16))), "0");
    }
}
