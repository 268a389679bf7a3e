//! Exact values of the form p + q*sqrt(r) with rational p, q and r >= 0.
//!
//! Interval endpoints produced by the enumeration are quadratic surds.
//! Deciding which integers lie inside an interval must be exact: a root can
//! sit within 1e-12 of an integer (double roots sit exactly on one), and a
//! float rounding the wrong way would add or drop a candidate basis. All
//! comparisons here reduce to integer sign tests; floor goes through the
//! integer square root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use crate::rat::{rat_big, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Surd {
    p: Rat,
    q: Rat,
    /// Radicand, always >= 0. Zero whenever the value is rational.
    r: Rat,
}

impl Surd {
    /// p + q*sqrt(r). Panics if r < 0; discriminants are checked for sign
    /// before any root is formed.
    pub fn new(p: Rat, q: Rat, r: Rat) -> Self {
        assert!(!r.is_negative(), "negative radicand");
        if q.is_zero() || r.is_zero() {
            Surd { p, q: Rat::zero(), r: Rat::zero() }
        } else {
            Surd { p, q, r }
        }
    }

    pub fn from_rat(p: Rat) -> Self {
        Surd { p, q: Rat::zero(), r: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Surd::from_rat(crate::rat::rat_int(n))
    }

    pub fn rational_part(&self) -> &Rat {
        &self.p
    }

    pub fn surd_coeff(&self) -> &Rat {
        &self.q
    }

    pub fn radicand(&self) -> &Rat {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn neg(&self) -> Surd {
        Surd { p: -&self.p, q: -&self.q, r: self.r.clone() }
    }

    /// Sign of p + q*sqrt(r), exactly.
    pub fn sign(&self) -> Ordering {
        sign_of(&self.p, &self.q, &self.r)
    }

    /// Exact comparison against a rational.
    pub fn cmp_rat(&self, n: &Rat) -> Ordering {
        sign_of(&(&self.p - n), &self.q, &self.r)
    }

    /// Exact comparison when both values live in the same quadratic
    /// extension (equal radicands, or either side rational). Mixed
    /// radicands never arise in the enumeration; reaching that case is an
    /// internal error, not a user-facing one.
    pub fn cmp_same_r(&self, other: &Surd) -> Result<Ordering> {
        if other.is_rational() {
            return Ok(self.cmp_rat(&other.p));
        }
        if self.is_rational() {
            return Ok(other.cmp_rat(&self.p).reverse());
        }
        if self.r != other.r {
            return Err(Error::Internal(format!(
                "comparison across radicands {} and {}",
                self.r, other.r
            )));
        }
        Ok(sign_of(&(&self.p - &other.p), &(&self.q - &other.q), &self.r))
    }

    /// Largest integer <= value, exactly.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.p.floor().to_integer();
        }
        // Normalize to (a + b*sqrt(w)) / m with integer a, b, w and m > 0:
        // sqrt(rn/rd) = sqrt(rn*rd)/rd.
        let (pn, pd) = (self.p.numer(), self.p.denom());
        let (qn, qd) = (self.q.numer(), self.q.denom());
        let (rn, rd) = (self.r.numer(), self.r.denom());
        let qden = qd * rd;
        let m = pd.lcm(&qden);
        let a = pn * (&m / pd);
        let b = qn * (&m / &qden);
        let w = rn * rd;
        // s <= |b|*sqrt(w) < s+1.
        let s = (&b * &b * w).sqrt();
        let num = if b.is_positive() { &a + &s } else { &a - &s - BigInt::one() };
        let mut n = num.div_floor(&m);
        // The estimate is within one of the truth; settle it exactly.
        let mut guard = 0;
        while self.cmp_rat(&rat_big(&(&n + 1))) != Ordering::Less {
            n += 1;
            guard += 1;
            debug_assert!(guard <= 2, "floor estimate off by more than one");
        }
        while self.cmp_rat(&rat_big(&n)) == Ordering::Less {
            n -= 1;
            guard += 1;
            debug_assert!(guard <= 2, "floor estimate off by more than one");
        }
        n
    }

    /// Smallest integer >= value, exactly.
    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Nearest float, for displays and numeric cross-checks only.
    pub fn to_f64(&self) -> f64 {
        let p = crate::rat::to_f64(&self.p);
        if self.is_rational() {
            return p;
        }
        p + crate::rat::to_f64(&self.q) * crate::rat::to_f64(&self.r).sqrt()
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}+{}*sqrt({})", self.p, self.q, self.r)
        }
    }
}

/// Exact sign of x + y*sqrt(r) for rational x, y and r >= 0.
fn sign_of(x: &Rat, y: &Rat, r: &Rat) -> Ordering {
    let zero = Rat::zero();
    if y.is_zero() || r.is_zero() {
        return x.cmp(&zero);
    }
    debug_assert!(r.is_positive());
    match (x.cmp(&zero), y.cmp(&zero)) {
        (Ordering::Greater | Ordering::Equal, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less | Ordering::Equal, Ordering::Less) => Ordering::Less,
        // x > 0 > y*sqrt(r): compare x^2 against y^2 r.
        (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(y * y * r)),
        // x < 0 < y*sqrt(r): compare y^2 r against x^2.
        (Ordering::Less, Ordering::Greater) => (y * y * r).cmp(&(x * x)),
        (_, Ordering::Equal) => unreachable!("y != 0 handled above"),
    }
}

/// All integers n with lo <= n <= hi (closed) or lo < n < hi (open).
/// Endpoints must be comparable exactly, which holds whenever they share a
/// radicand or either is rational.
pub fn integers_in(lo: &Surd, hi: &Surd, closed: bool) -> Result<Vec<BigInt>> {
    // Validate comparability up front so malformed calls fail loudly.
    let ord = lo.cmp_same_r(hi)?;
    if ord == Ordering::Greater {
        return Ok(Vec::new());
    }
    let (mut first, mut last) = (lo.ceil(), hi.floor());
    if !closed {
        // Strict bounds: shift endpoints that are themselves integers.
        if lo.cmp_rat(&rat_big(&first)) == Ordering::Equal {
            first += 1;
        }
        if hi.cmp_rat(&rat_big(&last)) == Ordering::Equal {
            last -= 1;
        }
    }
    let mut out = Vec::new();
    let mut n = first;
    while n <= last {
        out.push(n.clone());
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn surd(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> Surd {
        Surd::new(rat(p.0, p.1), rat(q.0, q.1), rat(r.0, r.1))
    }

    #[test]
    fn cmp_rat_examples() {
        // sqrt(2) < 3/2
        assert_eq!(surd((0, 1), (1, 1), (2, 1)).cmp_rat(&rat(3, 2)), Ordering::Less);
        // 1 + 0*sqrt(5) = 1
        assert_eq!(surd((1, 1), (0, 1), (5, 1)).cmp_rat(&rat_int(1)), Ordering::Equal);
        // -1/2 - sqrt(3/4) > -2
        assert_eq!(surd((-1, 2), (-1, 1), (3, 4)).cmp_rat(&rat_int(-2)), Ordering::Greater);
        // sqrt(4) = 2 despite the square radicand.
        assert_eq!(surd((0, 1), (1, 1), (4, 1)).cmp_rat(&rat_int(2)), Ordering::Equal);
    }

    #[test]
    fn floor_examples() {
        assert_eq!(surd((0, 1), (1, 1), (2, 1)).floor(), BigInt::from(1));
        assert_eq!(surd((0, 1), (-1, 1), (2, 1)).floor(), BigInt::from(-2));
        assert_eq!(surd((0, 1), (1, 1), (4, 1)).floor(), BigInt::from(2));
        assert_eq!(surd((-1, 2), (-1, 1), (3, 4)).floor(), BigInt::from(-2));
        assert_eq!(Surd::from_rat(rat(-7, 2)).floor(), BigInt::from(-4));
        assert_eq!(surd((0, 1), (1, 1), (4, 1)).ceil(), BigInt::from(2));
        assert_eq!(surd((0, 1), (1, 1), (2, 1)).ceil(), BigInt::from(2));
    }

    #[test]
    fn integers_in_examples() {
        let e = |v: Vec<i64>| v.into_iter().map(BigInt::from).collect::<Vec<_>>();
        let half = Surd::from_rat(rat(1, 2));
        assert_eq!(integers_in(&half.neg(), &half, true).unwrap(), e(vec![0]));

        // Roots of the first candidate quadratic for I = (615, 6, 3) in
        // Q(sqrt(-201)): (-B +- sqrt(disc))/(2A) with A = -18, B = -1863,
        // disc = 3403053, so the interval is about [-102.99, -0.51].
        let a2 = rat_int(-36);
        let lo = Surd::new(rat(1863, -36), &rat_int(1) / &a2, rat_int(3403053));
        let hi = Surd::new(rat(1863, -36), &rat_int(-1) / &a2, rat_int(3403053));
        assert_eq!(
            integers_in(&lo, &hi, true).unwrap(),
            e((-102..=-1).collect())
        );
        // Irrational endpoints with one integer strictly inside:
        // [-sqrt(10607), -204 + sqrt(10607)] ~ [-102.996, -101.004].
        let lo = Surd::new(rat_int(0), rat_int(-1), rat_int(10607));
        let hi = Surd::new(rat_int(-204), rat_int(1), rat_int(10607));
        assert_eq!(integers_in(&lo, &hi, true).unwrap(), e(vec![-102]));

        // Open endpoints that are integers get excluded.
        let z = Surd::from_int(0);
        let two = Surd::from_int(2);
        assert_eq!(integers_in(&z, &two, true).unwrap(), e(vec![0, 1, 2]));
        assert_eq!(integers_in(&z, &two, false).unwrap(), e(vec![1]));
        // Empty and reversed intervals.
        assert_eq!(integers_in(&two, &z, true).unwrap(), e(vec![]));
        assert_eq!(
            integers_in(&half, &Surd::from_rat(rat(3, 4)), true).unwrap(),
            e(vec![])
        );
    }

    #[test]
    fn cross_radicand_comparison_is_rejected() {
        let a = surd((0, 1), (1, 1), (2, 1));
        let b = surd((0, 1), (1, 1), (3, 1));
        assert!(a.cmp_same_r(&b).is_err());
        // Rational on either side is fine regardless of stored radicand.
        assert!(a.cmp_same_r(&Surd::from_int(5)).is_ok());
    }

    /// ~100 decimal digit evaluation used as an independent comparison
    /// oracle: sqrt(n/d) ~ isqrt(n*d*10^200)/(d*10^100).
    fn high_precision(s: &Surd) -> Rat {
        if s.is_rational() {
            return s.rational_part().clone();
        }
        let scale = BigInt::from(10).pow(100u32);
        let (rn, rd) = (s.radicand().numer(), s.radicand().denom());
        let root = (rn * rd * &scale * &scale).sqrt();
        s.rational_part() + s.surd_coeff() * Rat::new(root, rd * scale)
    }

    fn arb_surd() -> impl Strategy<Value = Surd> {
        (
            (-10_000i64..=10_000, 1i64..=100),
            (-100i64..=100, 1i64..=20),
            (0i64..=10_000, 1i64..=50),
        )
            .prop_map(|(p, q, r)| surd(p, q, r))
    }

    proptest! {
        // Exact comparison agrees with the 100-digit oracle away from ties.
        #[test]
        fn prop_cmp_rat_matches_high_precision(
            s in arb_surd(),
            n in (-20_000i64..=20_000, 1i64..=100),
        ) {
            let n = rat(n.0, n.1);
            let gap = high_precision(&s) - &n;
            prop_assume!(gap.abs() > rat(1, 1_000_000));
            let expect = if gap.is_positive() { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(s.cmp_rat(&n), expect);
        }

        // floor(x) <= x < floor(x) + 1, checked exactly.
        #[test]
        fn prop_floor_brackets_value(s in arb_surd()) {
            let f = s.floor();
            prop_assert_ne!(s.cmp_rat(&rat_big(&f)), Ordering::Less);
            prop_assert_eq!(s.cmp_rat(&rat_big(&(&f + 1))), Ordering::Less);
            let c = s.ceil();
            prop_assert_ne!(s.cmp_rat(&rat_big(&c)), Ordering::Greater);
            prop_assert_eq!(s.cmp_rat(&rat_big(&(&c - 1))), Ordering::Greater);
        }

        // Membership reported by integers_in matches the 100-digit oracle.
        #[test]
        fn prop_integers_in_matches_high_precision(
            p in -500i64..=500, qa in -50i64..=50, r in 0i64..=2_000, w in 0i64..=40,
        ) {
            let lo = surd((p, 7), (qa, 9), (r, 1));
            let hi = surd((p + w, 7), (qa, 9), (r, 1));
            let got = integers_in(&lo, &hi, true).unwrap();
            let (flo, fhi) = (high_precision(&lo), high_precision(&hi));
            let mut expect = Vec::new();
            let mut n = flo.floor().to_integer() - 1;
            let stop = fhi.ceil().to_integer() + 1;
            while n <= stop {
                let nr = rat_big(&n);
                if nr >= flo && nr <= fhi {
                    expect.push(n.clone());
                }
                n += 1;
            }
            prop_assert_eq!(got, expect);
        }
    }
}
