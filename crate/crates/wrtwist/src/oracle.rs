//! Independent brute-force reference for the enumeration.
//!
//! Rediscovers every good tuple straight from the definitions: a first
//! element is admitted when it satisfies the volume inequality
//! (Im z^2)^2 <= vol^2 (the integer gate |2c(at+cy)| <= t resp.
//! |c(2at+c(2y+g))| <= t), partners are admitted by the goodness
//! inequality |Im(z^2)+Im(z'^2)| <= |Im(z z')| != 0. None of the interval
//! or branch machinery of the enumeration is used; candidate ranges come
//! from solving those two inequalities directly, so the scan is complete
//! by construction rather than by the enumeration's case analysis.
//!
//! The `bound` argument caps every tuple coordinate. Below the derived
//! safe bound (the floor of the largest-number bound of the complexity
//! analysis) the scan refuses to run, because a cap that small could cut
//! genuine tuples and silently report a wrong set.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::enumerate::{normalize, GoodTuple};
use crate::field::FieldCase;
use crate::ideal::Ideal;
use crate::{Error, Result};

/// Largest coordinate any good tuple of `ideal` can have: floor of
/// (5t(y+1)+8)/8 in the non-residue case and of (5t(2y+g+1)+4)/4 in the
/// residue case.
pub fn safe_bound(ideal: &Ideal) -> BigInt {
    let t = ideal.t();
    let y = ideal.y();
    let g = ideal.g();
    match ideal.field().case() {
        FieldCase::NonResidue => (t * 5u8 * (y + 1u8) + 8u8).div_floor(&BigInt::from(8)),
        FieldCase::Residue => {
            (t * 5u8 * (y * 2u8 + g + 1u8) + 4u8).div_floor(&BigInt::from(4))
        }
    }
}

/// Integer embedding of the element with coordinates (a, c): the pair
/// (r, i) with z = r + i*sqrt(-D) in the non-residue case and
/// z = (r + i*sqrt(-D))/2 in the residue case. The uniform factor 1/2
/// cancels from every homogeneous comparison below.
fn int_coords(ideal: &Ideal, a: &BigInt, c: &BigInt) -> (BigInt, BigInt) {
    let n = a * ideal.t() + c * ideal.y();
    let i = c * ideal.g();
    match ideal.field().case() {
        FieldCase::NonResidue => (n, i),
        FieldCase::Residue => (n * 2u8 + &i, i),
    }
}

/// Doubled mixed imaginary part: r1*i2 + r2*i1, proportional to
/// Im(z1 * z2) with one fixed positive factor per field case.
fn im2(z1: &(BigInt, BigInt), z2: &(BigInt, BigInt)) -> BigInt {
    &z1.0 * &z2.1 + &z2.0 * &z1.1
}

/// Exact goodness of the pair (z, z') given their integer embeddings:
/// |Im(z^2) + Im(z'^2)| <= |Im(z z')| and Im(z z') != 0.
fn is_good_coords(z: &(BigInt, BigInt), zp: &(BigInt, BigInt)) -> bool {
    let s = im2(z, zp);
    if s.is_zero() {
        return false;
    }
    let big = im2(z, z) + im2(zp, zp);
    big.abs() <= s.abs()
}

/// First-element volume inequality (Im z^2)^2 <= vol^2 in integer form.
fn passes_gate(ideal: &Ideal, a: &BigInt, c: &BigInt) -> bool {
    let n = a * ideal.t() + c * ideal.y();
    let lhs = match ideal.field().case() {
        FieldCase::NonResidue => c * n * 2u8,
        FieldCase::Residue => c * (n * 2u8 + c * ideal.g()),
    };
    lhs.abs() <= *ideal.t()
}

/// All normalized first elements within the gate and the coordinate cap.
/// For each c the gate is a two-sided linear inequality in a, so the
/// admissible a form one short interval computed exactly.
fn first_elements(ideal: &Ideal, bound: &BigInt) -> Vec<(BigInt, BigInt)> {
    let t = ideal.t();
    let y = ideal.y();
    let g = ideal.g();
    let mut out = vec![(BigInt::one(), BigInt::zero())];

    // Non-residue: |n| <= floor(t / (2|c|)) with n = a*t + c*y.
    // Residue: |r| <= floor(t / |c|) with r = 2a*t + c*(2y+g).
    let residue = ideal.field().case() == FieldCase::Residue;
    let (m, step, c_range) = if residue {
        (y * 2u8 + g, t * 2u8, t * 2u8)
    } else {
        (y.clone(), t.clone(), t.clone())
    };
    let c_max = c_range.min(bound.clone());
    let mut c = -&c_max;
    while c <= c_max {
        if c.is_zero() {
            c += 1u8;
            continue;
        }
        let f = if residue {
            t.div_floor(&c.abs())
        } else {
            t.div_floor(&(c.abs() * 2u8))
        };
        let off = &c * &m;
        let mut a = (-&f - &off).div_ceil(&step).max(BigInt::zero());
        let a_hi = (&f - &off).div_floor(&step).min(bound.clone());
        while a <= a_hi {
            let keep = if a.is_zero() {
                c.is_one()
            } else {
                a.gcd(&c).is_one()
            };
            if keep {
                debug_assert!(passes_gate(ideal, &a, &c));
                out.push((a.clone(), c.clone()));
            }
            a += 1u8;
        }
        c += 1u8;
    }
    out
}

/// Partners of one first element. Determinant +1 partners form the line
/// (b0 + k*a, d0 + k*c); goodness implies
/// |Im(z'^2)| <= |Im(z^2)| + |Im(z z')|, whose integer solutions in k lie
/// in a window computed from the triangle inequality. Determinant -1
/// partners are sign flips of the same pairs and are folded in by the
/// normalization.
fn partners(ideal: &Ideal, a: &BigInt, c: &BigInt, bound: &BigInt) -> Vec<GoodTuple> {
    let e = a.extended_gcd(c);
    if !e.gcd.is_one() {
        return Vec::new();
    }
    // a*d0 - c*b0 = 1.
    let (mut b0, mut d0) = (-e.y, e.x);

    let z = int_coords(ideal, a, c);
    let y0 = int_coords(ideal, &b0, &d0);
    let p = im2(&z, &z);
    let mut q = im2(&z, &y0);
    let mut r = im2(&y0, &y0);

    // Re-center the line near the vertex of the partner quadratic so the
    // window stays small; shifting by k0 maps (q, r) linearly.
    let k0 = if p.is_zero() {
        if q.is_zero() {
            // Im(z z') vanishes on the whole line: no good partner.
            return Vec::new();
        }
        (-&r).div_floor(&(&q * 2u8))
    } else {
        (-&q).div_floor(&p)
    };
    r += &k0 * (&q * 2u8 + &k0 * &p);
    q += &k0 * &p;
    b0 += &k0 * a;
    d0 += &k0 * c;

    let mut k_max = if p.is_zero() {
        // |r + 2kq| <= |q| has a width-one solution interval around 0
        // after re-centering; scan a fixed small superset.
        BigInt::from(2)
    } else {
        let lin = q.abs() * 2u8 + p.abs();
        let disc = &lin * &lin + p.abs() * 4u8 * (r.abs() + p.abs() + q.abs());
        (&lin + disc.sqrt()).div_floor(&(p.abs() * 2u8)) + 1u8
    };
    // The coordinate cap also caps k through whichever of a, c is nonzero.
    let cap = if c.is_zero() {
        bound + b0.abs() + 1u8
    } else {
        (bound + d0.abs()).div_floor(&c.abs()) + 1u8
    };
    k_max = k_max.min(cap);

    let mut out = Vec::new();
    let mut k = -&k_max;
    while k <= k_max {
        let b = &b0 + &k * a;
        let d = &d0 + &k * c;
        k += 1u8;
        if b.abs() > *bound || d.abs() > *bound {
            continue;
        }
        let zp = int_coords(ideal, &b, &d);
        if is_good_coords(&z, &zp) {
            out.push(normalize(a.clone(), c.clone(), b, d));
        }
    }
    out
}

/// Every normalized good tuple of `ideal` with all coordinates bounded by
/// `bound`, found by exhaustive scan. Refuses bounds below `safe_bound`,
/// since those could truncate the answer.
pub fn brute_force_good_tuples(ideal: &Ideal, bound: &BigInt) -> Result<Vec<GoodTuple>> {
    let required = safe_bound(ideal);
    if *bound < required {
        return Err(Error::InsufficientBound {
            given: bound.clone(),
            required,
        });
    }
    let firsts = first_elements(ideal, bound);
    let chunks = crate::par::map_vec(firsts, |(a, c)| partners(ideal, &a, &c, bound));
    let set: BTreeSet<GoodTuple> = chunks.into_iter().flatten().collect();
    Ok(set.into_iter().collect())
}

/// Numeric well-roundedness of the planar lattice spanned by b1, b2:
/// Lagrange reduction, then the two successive minima must agree within
/// `tol` (relatively) and the reduced basis cosine must stay within the
/// well-rounded range.
pub fn is_well_rounded_numeric(b1: [f64; 2], b2: [f64; 2], tol: f64) -> Result<bool> {
    let dot = |u: [f64; 2], v: [f64; 2]| u[0] * v[0] + u[1] * v[1];
    let cross = b1[0] * b2[1] - b1[1] * b2[0];
    let scale = dot(b1, b1).max(dot(b2, b2));
    if !(cross.abs() > scale * 1e-14) {
        return Err(Error::DegenerateBasis);
    }
    let (mut u, mut v) = (b1, b2);
    for _ in 0..256 {
        if dot(u, u) > dot(v, v) {
            std::mem::swap(&mut u, &mut v);
        }
        let m = (dot(u, v) / dot(u, u)).round();
        let w = [v[0] - m * u[0], v[1] - m * u[1]];
        // Stop when the step no longer shortens v; ties (|m| exactly 1/2
        // off) would otherwise oscillate forever.
        if m == 0.0 || dot(w, w) >= dot(v, v) {
            let l1 = dot(u, u).sqrt();
            let l2 = dot(v, v).sqrt();
            let cos = dot(u, v).abs() / (l1 * l2);
            return Ok((l2 - l1).abs() <= tol * l2 && cos <= 0.5 + tol);
        }
        v = w;
    }
    Err(Error::Internal(
        "planar reduction did not converge".to_string(),
    ))
}
