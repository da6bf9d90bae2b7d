use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` with integer `p`, `q` (no decimal points).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let valid = |part: &str| {
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), Rational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-4/6").unwrap(),
            Rational::new((-2).into(), 3.into())
        );
        assert_eq!(parse_rational(" 1/ -2 ").unwrap(), Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        for s in ["1.5", "1/0", "", "a/b", "1/2/3", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn huge_values_do_not_overflow() {
        let big = parse_rational("1000000000000000000000000000000/7").unwrap();
        let sq = &big * &big;
        assert_eq!(sq.denom(), &BigInt::from(49));
    }

    proptest! {
        #[test]
        fn sums_agree_two_ways(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = Rational::new(a.into(), b.into());
            let y = Rational::new(c.into(), d.into());
            let direct = &x + &y;
            let cross = Rational::new(BigInt::from(a) * d + BigInt::from(c) * b, BigInt::from(b) * d);
            prop_assert_eq!(&direct, &cross);
            prop_assert!(direct.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(direct.numer(), direct.denom()).is_one() || direct.numer().is_zero());
        }
    }
}
