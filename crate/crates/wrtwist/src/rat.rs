//! Exact rationals and small construction helpers.
//!
//! `Rat` is `num_rational::BigRational`: always reduced, denominator
//! positive. Everything downstream leans on those invariants, so the
//! helpers here only wrap construction and the `num/den` wire format.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a big integer.
pub fn rat_big(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Wire format used in reports: reduced `num/den`, denominator always
/// printed so parsing never has to guess ("0/1", "-1881/2").
pub fn to_frac_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Inverse of [`to_frac_string`]. Accepts a bare integer as well.
pub fn from_frac_string(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Nearest f64, for numeric cross-checks and display only.
pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Out-of-range magnitudes cannot occur at the scales this crate
        // handles, but keep the conversion total.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_reduces() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn frac_string_round_trip() {
        for (n, d, s) in [(0, 1, "0/1"), (-1881, 2, "-1881/2"), (2, 205, "2/205")] {
            let x = rat(n, d);
            assert_eq!(to_frac_string(&x), s);
            assert_eq!(from_frac_string(s).unwrap(), x);
        }
        assert_eq!(from_frac_string("17").unwrap(), rat_int(17));
        assert!(from_frac_string("1/0").is_none());
        assert!(from_frac_string("x/2").is_none());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        // Field axioms on random triples: the backing type is trusted for
        // reduction, these pin down that ops stay exact end to end.
        #[test]
        fn prop_ring_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, rat_int(0));
        }

        #[test]
        fn prop_reduced_and_positive_denominator(a in arb_rat(), b in arb_rat()) {
            for x in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(x.denom() > &BigInt::from(0));
                prop_assert!(num_integer::gcd(x.numer().clone(), x.denom().clone())
                    == BigInt::from(1));
            }
        }

        #[test]
        fn prop_string_round_trip(a in arb_rat()) {
            prop_assert_eq!(from_frac_string(&to_frac_string(&a)).unwrap(), a);
        }
    }
}
