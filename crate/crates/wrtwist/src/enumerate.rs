//! Enumeration of all good basis tuples of an ideal.
//!
//! A basis {z, z'} of the ideal I = (t, y, g) is recorded as the integer
//! tuple (a, c, b, d) of its coordinates z = a*t + c*(y + g*delta),
//! z' = b*t + d*(y + g*delta), |ad - bc| = 1. The enumeration runs in two
//! stages, each exact:
//!
//! 1. `extendable_pairs` lists every first element (a, c), up to sign, that
//!    can occur in a good basis. The gate is the integer inequality
//!    2|c(at + cy)| <= t (non-residue case) resp. |c(2at + c(2y+g))| <= t
//!    (residue case); solving it for c gives at most two short strips per
//!    a, cut out by exact surd endpoints.
//! 2. `extend_to_good` completes a first element. Partners with
//!    determinant +1 form the line y0 + k*x; on it f1(k)*f2(k) <= 0 holds
//!    on at most two closed intervals whose endpoints share one radicand.
//!    Determinant -1 partners are sign flips of these and are folded in by
//!    the output normalization.
//!
//! Every candidate drawn from an interval is confirmed with the exact
//! goodness test before it is emitted, so interval endpoints only have to
//! be sound, never sharp.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::criteria::BasisPair;
use crate::field::{FieldCase, QuadElem};
use crate::ideal::Ideal;
use crate::rat::{rat_big, rat_int, Rat};
use crate::surd::Surd;
use crate::{Error, Result};

pub use crate::surd::integers_in;

/// How a first element qualifies as extendable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// (1, 0): the basis vector t itself, always extendable.
    First,
    /// (0, 1): the basis vector y + g*delta, extendable when its real part
    /// is at most half of t.
    Second,
    /// The shortest direction with vanishing real part; handled in the
    /// swapped frame {y + g*delta, t}.
    Kernel,
    /// Any other (a, c) passing the extendability inequality.
    General,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Branch::First => "first",
            Branch::Second => "second",
            Branch::Kernel => "kernel",
            Branch::General => "general",
        };
        f.write_str(s)
    }
}

/// A first element (a, c), normalized to a > 0 or (a, c) = (0, 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendablePair {
    pub a: BigInt,
    pub c: BigInt,
    pub branch: Branch,
}

/// Coordinates of a good basis, sign-normalized:
/// a > 0 or (a = 0, c > 0); then d > 0, ties d = 0 broken by b > 0, and
/// b > 0 when a = 0. Lexicographic order is the derived field order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodTuple {
    pub a: BigInt,
    pub c: BigInt,
    pub b: BigInt,
    pub d: BigInt,
}

impl GoodTuple {
    /// The basis pair this tuple denotes in the given ideal.
    pub fn realize(&self, ideal: &Ideal) -> Result<BasisPair> {
        BasisPair::new(
            *ideal.field(),
            ideal.elem_at(&self.a, &self.c),
            ideal.elem_at(&self.b, &self.d),
        )
    }

    /// ad - bc, always +1 or -1 for enumerated tuples.
    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }
}

impl std::fmt::Display for GoodTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.c, self.b, self.d)
    }
}

/// Exact extendability gate for a normalized first element.
fn is_extendable(ideal: &Ideal, a: &BigInt, c: &BigInt) -> bool {
    let (t, y, g) = (ideal.t(), ideal.y(), ideal.g());
    match ideal.field().case() {
        FieldCase::NonResidue => {
            let w: BigInt = c * (a * t + c * y);
            w.abs() * 2u8 <= *t
        }
        FieldCase::Residue => {
            let w: BigInt = c * (a * t * 2u8 + c * (y * 2u8 + g));
            w.abs() <= *t
        }
    }
}

/// Real part of a*t + c*(y + g*delta), doubled in the residue case so it
/// stays an integer. Zero exactly for the kernel direction.
fn doubled_re(ideal: &Ideal, a: &BigInt, c: &BigInt) -> BigInt {
    let (t, y, g) = (ideal.t(), ideal.y(), ideal.g());
    match ideal.field().case() {
        FieldCase::NonResidue => a * t + c * y,
        FieldCase::Residue => a * t * 2 + c * (y * 2 + g),
    }
}

/// Candidate c values for a fixed a >= 1: integers in the annulus
/// sqrt(a^2 al^2 - al) <= |c + a*al| <= sqrt(a^2 al^2 + al) where
/// al = t/(2y) resp. t/(2y+g). The annulus is exactly the solution set of
/// the extendability inequality, so the exact gate applied afterwards only
/// trims endpoint noise.
fn candidate_cs(a: &BigInt, alpha: &Rat) -> Vec<BigInt> {
    let a_alpha = rat_big(a) * alpha;
    let center = -&a_alpha;
    let r_out = &a_alpha * &a_alpha + alpha;
    let out_lo = Surd::new(center.clone(), rat_int(-1), r_out.clone());
    let out_hi = Surd::new(center.clone(), rat_int(1), r_out);
    let r_in = &a_alpha * &a_alpha - alpha;
    let mut ranges: Vec<(BigInt, BigInt)> = Vec::new();
    if r_in.is_negative() {
        ranges.push((out_lo.ceil(), out_hi.floor()));
    } else {
        let in_lo = Surd::new(center.clone(), rat_int(-1), r_in.clone());
        let in_hi = Surd::new(center, rat_int(1), r_in);
        ranges.push((out_lo.ceil(), in_lo.floor()));
        ranges.push((in_hi.ceil(), out_hi.floor()));
    }
    let mut out = BTreeSet::new();
    for (lo, hi) in ranges {
        let mut c = lo;
        while c <= hi {
            out.insert(c.clone());
            c += 1;
        }
    }
    out.into_iter().collect()
}

/// All first elements that extend to a good basis, normalized up to sign,
/// each tagged with the branch that found it. Order: first, second, then
/// general by (a, c), kernel last.
pub fn extendable_pairs(ideal: &Ideal) -> Vec<ExtendablePair> {
    let (t, y, g) = (ideal.t(), ideal.y(), ideal.g());
    let one = BigInt::one();
    let zero = BigInt::zero();

    let mut out = vec![ExtendablePair { a: one.clone(), c: zero.clone(), branch: Branch::First }];
    if is_extendable(ideal, &zero, &one) {
        out.push(ExtendablePair { a: zero.clone(), c: one.clone(), branch: Branch::Second });
    }

    // General strips. The a range is the finiteness bound for nonzero c.
    let (a_max, alpha_den) = match ideal.field().case() {
        FieldCase::NonResidue => ((y + 1u8).div_floor(&BigInt::from(2)), y * 2u8),
        FieldCase::Residue => {
            let m: BigInt = y * 2u8 + g;
            ((&m + 1u8).div_floor(&BigInt::from(2)), m)
        }
    };
    let mut general: Vec<ExtendablePair> = Vec::new();
    if !alpha_den.is_zero() {
        let alpha = Rat::new(t.clone(), alpha_den);
        let mut a = one.clone();
        while a <= a_max {
            for c in candidate_cs(&a, &alpha) {
                if c.is_zero()
                    || doubled_re(ideal, &a, &c).is_zero()
                    || !a.gcd(&c).is_one()
                    || !is_extendable(ideal, &a, &c)
                {
                    continue;
                }
                general.push(ExtendablePair { a: a.clone(), c, branch: Branch::General });
            }
            a += 1;
        }
    }
    general.sort_by(|p, q| (&p.a, &p.c).cmp(&(&q.a, &q.c)));
    out.extend(general);

    // Kernel direction, when a primitive one with zero real part exists.
    match ideal.field().case() {
        FieldCase::NonResidue => {
            if !y.is_zero() {
                let h = t.gcd(y);
                out.push(ExtendablePair { a: y / &h, c: -(t / &h), branch: Branch::Kernel });
            }
        }
        FieldCase::Residue => {
            let m: BigInt = y * 2u8 + g;
            let gamma = (t * 2u8).gcd(&m);
            out.push(ExtendablePair { a: &m / &gamma, c: -(t * 2u8 / &gamma), branch: Branch::Kernel });
        }
    }
    out
}

/// Closed intervals on which f1(k)*f2(k) <= 0, where both quadratics share
/// the leading coefficient A and the same discriminant. Endpoints are
/// exact surds over that discriminant.
fn sign_intervals(
    a2: &Rat,
    b1: &Rat,
    c1: &Rat,
    b2: &Rat,
    c2: &Rat,
) -> Result<Vec<(Surd, Surd)>> {
    if a2.is_zero() {
        // Linear forms with a common slope b1 = b2.
        debug_assert_eq!(b1, b2);
        if b1.is_zero() {
            // Constant forms only arise when im(x y0) = im(x^2) = 0, which
            // kills the nondegeneracy condition for every k.
            return Ok(Vec::new());
        }
        let r1 = -(c1 / b1);
        let r2 = -(c2 / b2);
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        return Ok(vec![(Surd::from_rat(lo), Surd::from_rat(hi))]);
    }
    let disc = b1 * b1 - rat_int(4) * a2 * c1;
    debug_assert_eq!(disc, b2 * b2 - rat_int(4) * a2 * c2);
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let two_a = rat_int(2) * a2;
    let root = |b: &Rat, sign: i64| {
        Surd::new(-(b / &two_a), rat_int(sign) / &two_a, disc.clone())
    };
    let mut roots = [root(b1, -1), root(b1, 1), root(b2, -1), root(b2, 1)];
    // All four share the radicand, so exact sorting is available.
    let mut err = None;
    roots.sort_by(|x, y| match x.cmp_same_r(y) {
        Ok(ord) => ord,
        Err(e) => {
            err = Some(e);
            std::cmp::Ordering::Equal
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let [r1, r2, r3, r4] = roots;
    // The product is a quartic with positive leading coefficient A^2 and
    // these four real roots; it is nonpositive exactly between the first
    // and second pair.
    Ok(vec![(r1, r2), (r3, r4)])
}

/// Canonical coordinates of an element, inverting elem_at.
fn canonical_coords(ideal: &Ideal, x: &QuadElem) -> Result<(BigInt, BigInt)> {
    let (c, rem) = x.q.div_rem(ideal.g());
    if !rem.is_zero() {
        return Err(Error::Internal(format!("{x} not in ideal: g does not divide {}", x.q)));
    }
    let (a, rem) = (&x.p - &c * ideal.y()).div_rem(ideal.t());
    if !rem.is_zero() {
        return Err(Error::Internal(format!("{x} not on the coordinate grid")));
    }
    Ok((a, c))
}

/// Sign normalization: z up to a > 0 (or a = 0, c > 0), then z' up to
/// d > 0 resp. b > 0. Goodness is invariant under either flip.
pub(crate) fn normalize(a: BigInt, c: BigInt, b: BigInt, d: BigInt) -> GoodTuple {
    let (a, c) = if a.is_negative() || (a.is_zero() && c.is_negative()) {
        (-a, -c)
    } else {
        (a, c)
    };
    let flip = if a.is_zero() {
        b.is_negative()
    } else {
        d.is_negative() || (d.is_zero() && b.is_negative())
    };
    let (b, d) = if flip { (-b, -d) } else { (b, d) };
    GoodTuple { a, c, b, d }
}

/// All good tuples whose first element is the given pair (or its kernel
/// frame image). Results are normalized, sorted, deduplicated.
pub fn extend_to_good(ideal: &Ideal, pair: &ExtendablePair) -> Result<Vec<GoodTuple>> {
    let field = *ideal.field();
    // The kernel branch works in the swapped frame {y + g*delta, t} with
    // the negated direction, which restores a positive leading coordinate.
    let (fu, fv, fa, fc) = match pair.branch {
        Branch::Kernel => (ideal.second(), ideal.first(), -&pair.c, -&pair.a),
        _ => (ideal.first(), ideal.second(), pair.a.clone(), pair.c.clone()),
    };
    let x = fu.scale(&fa).add(&fv.scale(&fc));

    // Base determinant +1 partner: fa*d0 - fc*b0 = 1.
    let e = fa.extended_gcd(&fc);
    if !e.gcd.is_one() {
        return Err(Error::Internal(format!(
            "first element ({}, {}) is not primitive",
            pair.a, pair.c
        )));
    }
    let (b0, d0) = (-e.y, e.x);
    let y0 = fu.scale(&b0).add(&fv.scale(&d0));

    let im = |z: &QuadElem, w: &QuadElem| field.im_coeff(&field.mul(z, w));
    let sx2 = im(&x, &x);
    let sxy = im(&x, &y0);
    let sy2 = im(&y0, &y0);
    let half = crate::rat::rat(-1, 2);
    // f1(k), f2(k) along y0 + k*x, coefficients exact.
    let a2 = &half * &sx2;
    let b1 = &half * (&sx2 + rat_int(2) * &sxy);
    let c1 = &half * (&sx2 + &sy2 + &sxy);
    let b2 = &half * (rat_int(2) * &sxy - &sx2);
    let c2 = &half * (&sx2 + &sy2 - &sxy);

    let mut ks: BTreeSet<BigInt> = BTreeSet::new();
    for (lo, hi) in sign_intervals(&a2, &b1, &c1, &b2, &c2)? {
        for k in integers_in(&lo, &hi, true)? {
            ks.insert(k);
        }
    }

    let mut out = Vec::new();
    for k in ks {
        let yk = y0.add(&x.scale(&k));
        let bp = BasisPair::new(field, x.clone(), yk.clone())?;
        if !bp.is_good() {
            continue;
        }
        let (za, zc) = canonical_coords(ideal, &x)?;
        let (zb, zd) = canonical_coords(ideal, &yk)?;
        let tuple = normalize(za, zc, zb, zd);
        debug_assert!(tuple.det().abs().is_one());
        out.push(tuple);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every good tuple of the ideal, lexicographically sorted. Branches run
/// in parallel when the `parallel` feature is on; the sorted merge makes
/// the result schedule-independent.
pub fn all_good_tuples(ideal: &Ideal) -> Result<Vec<GoodTuple>> {
    let pairs = extendable_pairs(ideal);
    let chunks = crate::par::map_vec(pairs, |p| extend_to_good(ideal, &p));
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
