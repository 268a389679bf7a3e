//! Grouping of good tuples into similarity classes.
//!
//! Two twisted lattices are similar exactly when their bases subtend the
//! same angle, so |cos| of the realized basis is a complete invariant.
//! For a tuple (a, c, b, d) over the ideal (t, y, g) the invariant has a
//! closed rational form in which g cancels: with m = y (non-residue case)
//! resp. m = y + g/2 (residue case) and the real parts n1 = a*t + c*m,
//! n2 = b*t + d*m,
//!
//!   |cos| = |n1*c + n2*d| / |n1*d + n2*c|.
//!
//! The denominator is a nonzero multiple of the mixed imaginary part s,
//! which goodness already forces away from zero.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::enumerate::GoodTuple;
use crate::ideal::Ideal;
use crate::rat::{rat, rat_big, Rat};
use crate::{Error, Result};

/// Geometric type of a similarity class, read off the invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassLabel {
    /// |cos| = 0: rectangular twists.
    Orthogonal,
    /// |cos| = 1/2: the boundary case f1*f2 = 0.
    Hexagonal,
    /// Anything strictly between.
    Generic,
}

impl ClassLabel {
    pub fn from_key(key: &Rat) -> ClassLabel {
        if key.is_zero() {
            ClassLabel::Orthogonal
        } else if *key == rat(1, 2) {
            ClassLabel::Hexagonal
        } else {
            ClassLabel::Generic
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassLabel::Orthogonal => "orthogonal",
            ClassLabel::Hexagonal => "hexagonal",
            ClassLabel::Generic => "generic",
        };
        f.write_str(s)
    }
}

/// One similarity class: its invariant, label, and member tuples in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistClass {
    pub cos_abs: Rat,
    pub label: ClassLabel,
    pub members: Vec<GoodTuple>,
}

/// |cos| of the realized basis of `tuple`, as an exact rational.
pub fn cos_abs_key(ideal: &Ideal, tuple: &GoodTuple) -> Result<Rat> {
    let t = rat_big(ideal.t());
    let mut m = rat_big(ideal.y());
    if ideal.field().case() == crate::field::FieldCase::Residue {
        m += rat_big(ideal.g()) / rat(2, 1);
    }
    let n1 = rat_big(&tuple.a) * &t + rat_big(&tuple.c) * &m;
    let n2 = rat_big(&tuple.b) * &t + rat_big(&tuple.d) * &m;
    let num = &n1 * rat_big(&tuple.c) + &n2 * rat_big(&tuple.d);
    let den = &n1 * rat_big(&tuple.d) + &n2 * rat_big(&tuple.c);
    if den.is_zero() {
        return Err(Error::Internal(format!(
            "zero angle denominator for tuple {tuple}"
        )));
    }
    Ok((num / den).abs())
}

/// Groups tuples by their invariant, ascending. Within a class the
/// members keep their lexicographic order.
pub fn classify(ideal: &Ideal, tuples: &[GoodTuple]) -> Result<Vec<TwistClass>> {
    let mut by_key: BTreeMap<Rat, Vec<GoodTuple>> = BTreeMap::new();
    for tuple in tuples {
        let key = cos_abs_key(ideal, tuple)?;
        by_key.entry(key).or_default().push(tuple.clone());
    }
    Ok(by_key
        .into_iter()
        .map(|(cos_abs, members)| TwistClass {
            label: ClassLabel::from_key(&cos_abs),
            cos_abs,
            members,
        })
        .collect())
}
