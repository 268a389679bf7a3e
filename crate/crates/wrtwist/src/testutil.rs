//! Proptest strategies shared by the unit tests of several modules.

use num_bigint::BigInt;
use proptest::prelude::*;

use crate::field::{QuadElem, QuadField};
use crate::ideal::Ideal;
use crate::rat::Rat;
use crate::surd::Surd;

pub(crate) fn arb_field_up_to(max_d: i64) -> impl Strategy<Value = QuadField> {
    (1i64..=max_d).prop_filter_map("squarefree", |d| QuadField::new(d).ok())
}

pub(crate) fn arb_elem(range: i64) -> impl Strategy<Value = QuadElem> {
    (-range..=range, -range..=range).prop_map(|(p, q)| QuadElem::from_i64(p, q))
}

pub(crate) fn arb_nonzero_elem(range: i64) -> impl Strategy<Value = QuadElem> {
    arb_elem(range).prop_filter("nonzero", |x| !x.is_zero())
}

/// Random valid ideal, produced by reducing one or two random generators.
pub(crate) fn arb_ideal(max_d: i64, gen_range: i64) -> impl Strategy<Value = Ideal> {
    (
        arb_field_up_to(max_d),
        proptest::collection::vec(arb_elem(gen_range), 1..=2),
    )
        .prop_filter_map("nonzero ideal", |(k, gens)| {
            Ideal::canonical_basis(k, &gens).ok()
        })
}

/// Evaluates p + q*sqrt(r) as a rational with ~100 decimal digits of
/// precision, enough to separate any two distinct surds the tests produce.
pub(crate) fn high_precision(s: &Surd) -> Rat {
    let scale = BigInt::from(10u8).pow(100);
    let scaled = (s.radicand().numer() * &scale * &scale * s.radicand().denom()).sqrt();
    let root = Rat::new(scaled, s.radicand().denom() * &scale);
    s.rational_part() + s.surd_coeff() * root
}
