//! Acceptance gate: one test per shipped guarantee, each printing a
//! single PASS line with its measured runtime. Criteria 4 through 8 share
//! a seeded corpus of random principal ideals.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wrtwist::oracle::{brute_force_good_tuples, safe_bound};
use wrtwist::rat::{rat, to_f64};
use wrtwist::similarity::cos_abs_key;
use wrtwist::{
    all_good_tuples, classify, ClassLabel, FieldCase, GoodTuple, Ideal, QuadElem, QuadField,
};

fn tuple(a: i64, c: i64, b: i64, d: i64) -> GoodTuple {
    GoodTuple {
        a: BigInt::from(a),
        c: BigInt::from(c),
        b: BigInt::from(b),
        d: BigInt::from(d),
    }
}

fn ring_of_integers(d: i64) -> Ideal {
    let field = QuadField::new(d).unwrap();
    Ideal::new(field, BigInt::from(1), BigInt::from(0), BigInt::from(1)).unwrap()
}

/// At least 200 principal ideals <p + q*delta>, |p|, |q| <= 12, D <= 60,
/// both field cases, t <= 2000, from a fixed seed.
fn corpus() -> &'static Vec<Ideal> {
    static CORPUS: OnceLock<Vec<Ideal>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x77217721);
        let mut out = Vec::new();
        while out.len() < 200 {
            let d = rng.gen_range(1..=60);
            let field = match QuadField::new(d) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let (p, q) = (rng.gen_range(-12..=12), rng.gen_range(-12..=12));
            if p == 0 && q == 0 {
                continue;
            }
            let ideal =
                Ideal::canonical_basis(field, &[QuadElem::from_i64(p, q)]).unwrap();
            if ideal.t() > &BigInt::from(2000) {
                continue;
            }
            out.push(ideal);
        }
        out
    })
}

fn corpus_tuples() -> &'static Vec<(Ideal, Vec<GoodTuple>)> {
    static TUPLES: OnceLock<Vec<(Ideal, Vec<GoodTuple>)>> = OnceLock::new();
    TUPLES.get_or_init(|| {
        corpus()
            .iter()
            .map(|i| (i.clone(), all_good_tuples(i).unwrap()))
            .collect()
    })
}

#[test]
fn criterion_1_large_example_exact() {
    let start = Instant::now();
    let field = QuadField::new(201).unwrap();
    let ideal = Ideal::canonical_basis(field, &[QuadElem::from_i64(6, 3)]).unwrap();
    assert_eq!(
        (ideal.t(), ideal.y(), ideal.g()),
        (&BigInt::from(615), &BigInt::from(6), &BigInt::from(3))
    );
    let tuples = all_good_tuples(&ideal).unwrap();
    assert_eq!(
        tuples,
        vec![
            tuple(0, 1, 1, -102),
            tuple(0, 1, 1, 0),
            tuple(1, -102, -2, 205),
            tuple(1, -102, 0, 1),
            tuple(1, 0, 0, 1),
            tuple(2, -205, -1, 102),
        ]
    );
    let classes = classify(&ideal, &tuples).unwrap();
    assert_eq!(classes.len(), 3);
    assert_eq!(classes[0].cos_abs, rat(2, 205));
    assert_eq!(classes[0].members, vec![tuple(0, 1, 1, 0), tuple(1, 0, 0, 1)]);
    assert_eq!(classes[1].cos_abs, rat(100, 203));
    assert_eq!(
        classes[1].members,
        vec![tuple(0, 1, 1, -102), tuple(1, -102, 0, 1)]
    );
    assert_eq!(classes[2].cos_abs, rat(102, 205));
    assert_eq!(
        classes[2].members,
        vec![tuple(1, -102, -2, 205), tuple(2, -205, -1, 102)]
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "PASS criterion 1: D=201 canonical basis, 6 tuples, 3 classes exact ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_2_ring_of_integers_orthogonal() {
    let start = Instant::now();
    let mut checked = 0;
    for d in 1..=500 {
        if d % 4 == 3 || QuadField::new(d).is_err() {
            continue;
        }
        let ideal = ring_of_integers(d);
        let classes = classify(&ideal, &all_good_tuples(&ideal).unwrap()).unwrap();
        assert_eq!(classes.len(), 1, "D={d}");
        assert!(classes[0].cos_abs.is_zero(), "D={d}");
        assert_eq!(classes[0].label, ClassLabel::Orthogonal, "D={d}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "PASS criterion 2: {checked} non-residue rings of integers, one orthogonal class each ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_3_ring_of_integers_hexagonal() {
    let start = Instant::now();
    let mut checked = 0;
    for d in (3..=500).step_by(4) {
        if QuadField::new(d).is_err() {
            continue;
        }
        let ideal = ring_of_integers(d);
        let classes = classify(&ideal, &all_good_tuples(&ideal).unwrap()).unwrap();
        assert_eq!(classes.len(), 1, "D={d}");
        assert_eq!(classes[0].cos_abs, rat(1, 2), "D={d}");
        assert_eq!(classes[0].label, ClassLabel::Hexagonal, "D={d}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!(
        "PASS criterion 3: {checked} residue rings of integers, one hexagonal class each ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_4_oracle_equivalence() {
    let start = Instant::now();
    for (ideal, tuples) in corpus_tuples() {
        let brute = brute_force_good_tuples(ideal, &safe_bound(ideal)).unwrap();
        assert_eq!(
            tuples, &brute,
            "mismatch for D={} ({}, {}, {})",
            ideal.field().d(),
            ideal.t(),
            ideal.y(),
            ideal.g()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 4: enumeration equals brute force on {} seeded principal ideals ({} ms)",
        corpus().len(),
        elapsed.as_millis()
    );
}

#[test]
fn criterion_5_nonempty() {
    let start = Instant::now();
    for (ideal, tuples) in corpus_tuples() {
        assert!(
            !tuples.is_empty(),
            "no tuples for D={} ({}, {}, {})",
            ideal.field().d(),
            ideal.t(),
            ideal.y(),
            ideal.g()
        );
    }
    println!(
        "PASS criterion 5: every corpus ideal has a well-rounded twist ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_6_class_count_bounds() {
    let start = Instant::now();
    let two = BigInt::from(2);
    for (ideal, tuples) in corpus_tuples() {
        let classes = classify(ideal, tuples).unwrap();
        let width = match ideal.field().case() {
            FieldCase::NonResidue => (ideal.y() + 1u8) / &two,
            FieldCase::Residue => (ideal.y() * 2u8 + ideal.g() + 1u8) / &two,
        };
        let max = 6 + 2 * width.to_i64().unwrap();
        assert!(
            classes.len() as i64 <= max,
            "{} classes > {max} for D={} ({}, {}, {})",
            classes.len(),
            ideal.field().d(),
            ideal.t(),
            ideal.y(),
            ideal.g()
        );
    }
    println!(
        "PASS criterion 6: class counts within 6+2*floor bounds, zero violations ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_7_numeric_well_roundedness() {
    let start = Instant::now();
    let mut checked = 0usize;
    for (ideal, tuples) in corpus_tuples() {
        for t in tuples {
            let bp = t.realize(ideal).unwrap();
            let [u, v] = bp.twist_embed().unwrap();
            let (nu, nv) = (u[0].hypot(u[1]), v[0].hypot(v[1]));
            assert!(
                (nu - nv).abs() <= 1e-9 * nu.max(nv),
                "unequal norms {nu} vs {nv} for {t} over D={}",
                ideal.field().d()
            );
            let cos_float = (u[0] * v[0] + u[1] * v[1]) / (nu * nv);
            assert!(cos_float.abs() <= 0.5 + 1e-12, "cos {cos_float} for {t}");
            let cos_exact = to_f64(&bp.cos_theta().unwrap());
            assert!(
                (cos_float - cos_exact).abs() <= 1e-9,
                "exact {cos_exact} vs float {cos_float} for {t}"
            );
            checked += 1;
        }
    }
    println!(
        "PASS criterion 7: {checked} twisted bases with equal norms and |cos| <= 1/2 ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_8_hexagonal_iff_boundary() {
    let start = Instant::now();
    let half = rat(1, 2);
    let mut hexagonal = 0usize;
    for (ideal, tuples) in corpus_tuples() {
        for t in tuples {
            let bp = t.realize(ideal).unwrap();
            let product_zero = (bp.f1_coeff() * bp.f2_coeff()).is_zero();
            let key = cos_abs_key(ideal, t).unwrap();
            let boundary = key == half;
            let label = ClassLabel::from_key(&key);
            assert_eq!(
                product_zero,
                boundary,
                "f1*f2 = 0 vs |cos| = 1/2 disagree for {t} over D={}",
                ideal.field().d()
            );
            assert_eq!(boundary, label == ClassLabel::Hexagonal);
            if boundary {
                hexagonal += 1;
            }
        }
    }
    println!(
        "PASS criterion 8: hexagonal label iff f1*f2 = 0, {hexagonal} hexagonal tuples, zero counterexamples ({} ms)",
        start.elapsed().as_millis()
    );
}
