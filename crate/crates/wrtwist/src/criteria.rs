//! Twistability and goodness of a basis pair.
//!
//! For a basis B = {u, v} of a planar lattice from Z[delta], write
//! S = im(u^2) + im(v^2) and s = im(uv), where im(x) is the coefficient of
//! sqrt(d) in the imaginary part. The product of
//!
//!   f1 = -(S + s)/2    and    f2 = -(S - s)/2
//!
//! has the sign of the form deciding well-roundedness of the twisted
//! lattice: the twist of B by diag(alpha, 1/alpha) with alpha^4 = beta is
//! well rounded with B as a minimal basis exactly when f1*f2 <= 0 and
//! s != 0. The twisted angle satisfies cos(theta) = S/(2s), an exact
//! rational, which later drives the similarity classification.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::field::{QuadElem, QuadField};
use crate::rat::{rat_int, Rat};
use crate::{Error, NotTwistableReason, Result};

/// An R-linearly independent pair of ring elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPair {
    field: QuadField,
    u: QuadElem,
    v: QuadElem,
}

impl BasisPair {
    /// Rejects pairs that do not span the plane. Independence over R in
    /// coordinates: p_u q_v - p_v q_u != 0 (delta is not real).
    pub fn new(field: QuadField, u: QuadElem, v: QuadElem) -> Result<Self> {
        if (&u.p * &v.q - &v.p * &u.q).is_zero() {
            return Err(Error::DegenerateBasis);
        }
        Ok(BasisPair { field, u, v })
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn u(&self) -> &QuadElem {
        &self.u
    }

    pub fn v(&self) -> &QuadElem {
        &self.v
    }

    pub fn swap(&self) -> BasisPair {
        BasisPair { field: self.field, u: self.v.clone(), v: self.u.clone() }
    }

    /// im(u^2) + im(v^2), the symmetric part S.
    fn s_sum(&self) -> Rat {
        let su = self.field.im_coeff(&self.field.mul(&self.u, &self.u));
        let sv = self.field.im_coeff(&self.field.mul(&self.v, &self.v));
        su + sv
    }

    /// im(uv), the mixed part s. Nonzero exactly when the twisted angle is
    /// defined (neither vector maps onto a coordinate axis pairing).
    fn s_mixed(&self) -> Rat {
        self.field.im_coeff(&self.field.mul(&self.u, &self.v))
    }

    pub fn f1_coeff(&self) -> Rat {
        -(self.s_sum() + self.s_mixed()) / rat_int(2)
    }

    pub fn f2_coeff(&self) -> Rat {
        -(self.s_sum() - self.s_mixed()) / rat_int(2)
    }

    /// f1*f2 <= 0 together with the nondegeneracy im(uv) != 0.
    pub fn is_good(&self) -> bool {
        if self.s_mixed().is_zero() {
            return false;
        }
        !(self.f1_coeff() * self.f2_coeff()).is_positive()
    }

    /// Exact cosine of the angle between the twisted basis vectors.
    pub fn cos_theta(&self) -> Result<Rat> {
        let s = self.s_mixed();
        if s.is_zero() {
            return Err(Error::DegenerateBasis);
        }
        Ok(self.s_sum() / (rat_int(2) * s))
    }

    /// Fourth power of the unique stretch factor equalizing the two vector
    /// norms: beta = (Im(v)^2 - Im(u)^2) / (Re(u)^2 - Re(v)^2), exact.
    pub fn twist_beta(&self) -> Result<Rat> {
        let ru = self.field.re(&self.u);
        let rv = self.field.re(&self.v);
        let den = &ru * &ru - &rv * &rv;
        if den.is_zero() {
            return Err(Error::NotTwistable(NotTwistableReason::ZeroDenominator));
        }
        let iu = self.field.im_coeff(&self.u);
        let iv = self.field.im_coeff(&self.v);
        let num = (&iv * &iv - &iu * &iu) * rat_int(self.field.d());
        let beta = num / den;
        if !beta.is_positive() {
            return Err(Error::NotTwistable(NotTwistableReason::NonPositive));
        }
        Ok(beta)
    }

    /// alpha = beta^(1/4) as a float.
    pub fn twist_alpha(&self) -> Result<f64> {
        let beta = self.twist_beta()?;
        Ok(crate::rat::to_f64(&beta).powf(0.25))
    }

    /// The two twisted basis vectors diag(alpha, 1/alpha) * u and
    /// diag(alpha, 1/alpha) * v, embedded.
    pub fn twist_embed(&self) -> Result<[[f64; 2]; 2]> {
        let alpha = self.twist_alpha()?;
        let eu = self.field.embed(&self.u);
        let ev = self.field.embed(&self.v);
        Ok([
            [alpha * eu[0], eu[1] / alpha],
            [alpha * ev[0], ev[1] / alpha],
        ])
    }

    /// Float F(B) up to the positive factor d: f1*f2 as f64.
    pub fn f_product_f64(&self) -> f64 {
        (self.f1_coeff() * self.f2_coeff()).to_f64().unwrap_or(f64::NAN)
    }
}

/// Normal form of the twisted lattice shape: the second basis vector as a
/// point z = x + iy in the upper half plane (y > 0) relative to the first,
/// with roles swapped if needed so that |z| >= 1. Input is the raw embedded
/// basis (columns (a, c), (b, d)) and the stretch alpha; the twist enters
/// through the alpha^2/alpha^4 weights.
pub fn tau_normal_form(alpha: f64, basis: [[f64; 2]; 2]) -> [f64; 2] {
    let [a, c] = basis[0];
    let [b, d] = basis[1];
    let a4 = alpha.powi(4);
    let ratio = |x: f64, y: f64, p: f64, q: f64| {
        // (p + i q) / (x + i y) after scaling both by diag(alpha, 1/alpha).
        let den = a4 * x * x + y * y;
        let re = (a4 * x * p + y * q) / den;
        let im = alpha * alpha * (x * q - y * p).abs() / den;
        [re, im]
    };
    let z = ratio(a, c, b, d);
    if z[0].hypot(z[1]) >= 1.0 {
        z
    } else {
        ratio(b, d, a, c)
    }
}
