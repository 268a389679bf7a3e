//! Imaginary quadratic fields Q(sqrt(-d)) and exact ring arithmetic.
//!
//! The ring of integers is Z[delta] with
//!
//! * delta = sqrt(-d)         when -d is not 1 mod 4 (`NonResidue`),
//! * delta = (1+sqrt(-d))/2   when -d is 1 mod 4, i.e. d is 3 mod 4 (`Residue`).
//!
//! Elements are stored as integer pairs (p, q) meaning p + q*delta. All
//! derived quantities stay exact: the real part and the coefficient of
//! sqrt(d) in the imaginary part are rationals with denominator 1 or 2.

use num_bigint::BigInt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::rat::{rat_big, Rat};
use crate::{Error, Result};

/// Which generator Z[delta] uses, decided by -d mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCase {
    /// delta = sqrt(-d), so delta^2 = -d.
    NonResidue,
    /// delta = (1+sqrt(-d))/2, so delta^2 = delta - (1+d)/4.
    Residue,
}

/// A validated field Q(sqrt(-d)): d positive and squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: i64,
    case: FieldCase,
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::NonPositiveD(d));
        }
        let mut p = 2i64;
        while p * p <= d {
            if d % (p * p) == 0 {
                return Err(Error::NotSquarefree(d, p));
            }
            p += 1;
        }
        let case = if d % 4 == 3 { FieldCase::Residue } else { FieldCase::NonResidue };
        Ok(QuadField { d, case })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn d_big(&self) -> BigInt {
        BigInt::from(self.d)
    }

    pub fn case(&self) -> FieldCase {
        self.case
    }

    /// (1+d)/4, the integer constant term of delta^2 in the residue case.
    pub fn residue_const(&self) -> BigInt {
        debug_assert_eq!(self.case, FieldCase::Residue);
        BigInt::from((1 + self.d) / 4)
    }

    /// Product in Z[delta].
    pub fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let cross = &x.p * &y.q + &x.q * &y.p;
        match self.case {
            FieldCase::NonResidue => QuadElem {
                p: &x.p * &y.p - &x.q * &y.q * self.d_big(),
                q: cross,
            },
            FieldCase::Residue => QuadElem {
                p: &x.p * &y.p - &x.q * &y.q * self.residue_const(),
                q: cross + &x.q * &y.q,
            },
        }
    }

    /// Field norm N(p + q*delta), a nonnegative integer.
    pub fn norm(&self, x: &QuadElem) -> BigInt {
        let n = match self.case {
            FieldCase::NonResidue => &x.p * &x.p + &x.q * &x.q * self.d_big(),
            FieldCase::Residue => {
                &x.p * &x.p + &x.p * &x.q + &x.q * &x.q * self.residue_const()
            }
        };
        debug_assert!(!n.is_negative());
        n
    }

    /// Real part of the complex embedding.
    pub fn re(&self, x: &QuadElem) -> Rat {
        match self.case {
            FieldCase::NonResidue => rat_big(&x.p),
            FieldCase::Residue => Rat::new(&x.p * 2 + &x.q, BigInt::from(2)),
        }
    }

    /// Coefficient s in Im(x) = s * sqrt(d). Exact; the only irrational
    /// factor sqrt(d) is kept symbolic throughout the crate.
    pub fn im_coeff(&self, x: &QuadElem) -> Rat {
        match self.case {
            FieldCase::NonResidue => rat_big(&x.q),
            FieldCase::Residue => Rat::new(x.q.clone(), BigInt::from(2)),
        }
    }

    /// Column of the lattice basis matrix: (re(x), -im(x)) as floats.
    pub fn embed(&self, x: &QuadElem) -> [f64; 2] {
        let re = self.re(x).to_f64().expect("desk-scale re fits f64");
        let im = self.im_coeff(x).to_f64().expect("desk-scale im fits f64");
        [re, -im * (self.d as f64).sqrt()]
    }
}

/// p + q*delta with exact integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub p: BigInt,
    pub q: BigInt,
}

impl QuadElem {
    pub fn new(p: BigInt, q: BigInt) -> Self {
        QuadElem { p, q }
    }

    pub fn from_i64(p: i64, q: i64) -> Self {
        QuadElem { p: BigInt::from(p), q: BigInt::from(q) }
    }

    pub fn zero() -> Self {
        QuadElem::from_i64(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn add(&self, other: &QuadElem) -> QuadElem {
        QuadElem { p: &self.p + &other.p, q: &self.q + &other.q }
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem { p: -&self.p, q: -&self.q }
    }

    /// Integer scalar multiple.
    pub fn scale(&self, k: &BigInt) -> QuadElem {
        QuadElem { p: &self.p * k, q: &self.q * k }
    }

    /// Product by delta, staying in integer coordinates. Used by the
    /// canonical-basis reduction to close a Z-module under the ring action.
    pub fn mul_delta(&self, field: &QuadField) -> QuadElem {
        match field.case() {
            FieldCase::NonResidue => QuadElem {
                p: -&self.q * field.d_big(),
                q: self.p.clone(),
            },
            FieldCase::Residue => QuadElem {
                p: -&self.q * field.residue_const(),
                q: &self.p + &self.q,
            },
        }
    }
}

impl std::fmt::Display for QuadElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            return write!(f, "{}*delta", self.q);
        }
        if self.q.is_negative() {
            write!(f, "{}{}*delta", self.p, self.q)
        } else {
            write!(f, "{}+{}*delta", self.p, self.q)
        }
    }
}
