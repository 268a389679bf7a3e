//! Ideals of Z[delta] in canonical basis form.
//!
//! Every nonzero ideal is a rank-2 Z-module with a unique basis
//! {t, y + g*delta} satisfying t > 0, 0 <= y < t, 0 < g, g | y, g | t and
//! t*g | N(y + g*delta). The triple (t, y, g) drives the whole enumeration;
//! reducing arbitrary generators to it is a two-row Hermite normal form
//! over the generators together with their delta-multiples (adjoining the
//! delta-multiples makes the Z-span automatically an ideal, since delta^2
//! lies in Z + Z*delta).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::{QuadElem, QuadField};
use crate::rat::{rat_big, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    field: QuadField,
    t: BigInt,
    y: BigInt,
    g: BigInt,
}

impl Ideal {
    /// Validates a canonical triple. `g <= t` is implied by g | t with both
    /// positive, but divisibility itself is checked.
    pub fn new(field: QuadField, t: BigInt, y: BigInt, g: BigInt) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::InvalidTriple(format!("t must be positive, got {t}")));
        }
        if !g.is_positive() {
            return Err(Error::InvalidTriple(format!("g must be positive, got {g}")));
        }
        if y.is_negative() || y >= t {
            return Err(Error::InvalidTriple(format!("y must satisfy 0 <= y < t, got {y}")));
        }
        if !y.is_multiple_of(&g) {
            return Err(Error::InvalidTriple(format!("g = {g} must divide y = {y}")));
        }
        if !t.is_multiple_of(&g) {
            return Err(Error::InvalidTriple(format!("g = {g} must divide t = {t}")));
        }
        let w = QuadElem::new(y.clone(), g.clone());
        let n = field.norm(&w);
        if !n.is_multiple_of(&(&t * &g)) {
            return Err(Error::InvalidTriple(format!(
                "t*g = {} must divide N(y + g*delta) = {n}",
                &t * &g
            )));
        }
        Ok(Ideal { field, t, y, g })
    }

    /// Canonical triple of the ideal generated by `gens`.
    pub fn canonical_basis(field: QuadField, gens: &[QuadElem]) -> Result<Self> {
        let mut vectors: Vec<QuadElem> = Vec::with_capacity(gens.len() * 2);
        for x in gens {
            if x.is_zero() {
                continue;
            }
            vectors.push(x.clone());
            vectors.push(x.mul_delta(&field));
        }
        if vectors.is_empty() {
            return Err(Error::ZeroIdeal);
        }

        // Column reduction: fold every vector into one carrier w whose
        // delta-coordinate is the gcd of all delta-coordinates, collecting
        // the eliminated (purely real) parts into t.
        let mut t_acc = BigInt::zero();
        let mut w: Option<QuadElem> = None;
        for v in vectors {
            if v.q.is_zero() {
                t_acc = t_acc.gcd(&v.p);
                continue;
            }
            match w.take() {
                None => {
                    w = Some(if v.q.is_negative() { v.neg() } else { v });
                }
                Some(cur) => {
                    let e = cur.q.extended_gcd(&v.q);
                    let merged = QuadElem::new(&e.x * &cur.p + &e.y * &v.p, e.gcd.clone());
                    // cur*(v.q/gcd) - v*(cur.q/gcd) has zero delta-coordinate.
                    let real = &cur.p * (&v.q / &e.gcd) - &v.p * (&cur.q / &e.gcd);
                    t_acc = t_acc.gcd(&real);
                    w = Some(merged);
                }
            }
        }
        let w = w.ok_or(Error::ZeroIdeal)?;
        if t_acc.is_zero() {
            // A nonzero ideal always contains a nonzero rational integer.
            return Err(Error::Internal("rank deficient generator matrix".into()));
        }
        let t = t_acc.abs();
        let y = w.p.mod_floor(&t);
        Ideal::new(field, t, y, w.q).map_err(|e| match e {
            // Reduction output violating the canonical invariants is a bug,
            // not a property of the input.
            Error::InvalidTriple(msg) => Error::Internal(format!("HNF produced {msg}")),
            other => other,
        })
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn g(&self) -> &BigInt {
        &self.g
    }

    /// First basis element t.
    pub fn first(&self) -> QuadElem {
        QuadElem::new(self.t.clone(), BigInt::zero())
    }

    /// Second basis element y + g*delta.
    pub fn second(&self) -> QuadElem {
        QuadElem::new(self.y.clone(), self.g.clone())
    }

    /// Element with coordinates (a, c) in the canonical basis:
    /// a*t + c*(y + g*delta).
    pub fn elem_at(&self, a: &BigInt, c: &BigInt) -> QuadElem {
        QuadElem::new(a * &self.t + c * &self.y, c * &self.g)
    }

    /// Squared covolume of the embedded lattice, exact.
    pub fn vol_sq(&self) -> Rat {
        let tg = rat_big(&(&self.t * &self.g));
        let d = rat_big(&self.field.d_big());
        match self.field.case() {
            crate::field::FieldCase::NonResidue => &tg * &tg * d,
            crate::field::FieldCase::Residue => {
                &tg * &tg * d / crate::rat::rat_int(4)
            }
        }
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(t={}, y={}, g={})", self.t, self.y, self.g)
    }
}
