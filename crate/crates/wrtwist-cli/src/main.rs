//! Command line front end for the well-rounded twist enumeration.
//!
//! Exit codes: 0 success, 2 bad input (field, generators, triple, bound),
//! 3 zero ideal, 4 internal invariant failure, 5 enumeration and oracle
//! disagree.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use wrtwist::oracle::{brute_force_good_tuples, is_well_rounded_numeric, safe_bound};
use wrtwist::rat::{from_frac_string, to_f64};
use wrtwist::report::{self, IdealReport, Report};
use wrtwist::similarity::{classify, cos_abs_key, ClassLabel};
use wrtwist::{all_good_tuples, Error, GoodTuple, Ideal, QuadElem, QuadField};

#[derive(Parser)]
#[command(
    name = "wrtwist",
    version,
    about = "Well-rounded twists of ideal lattices in imaginary quadratic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Field parameter: lattices live in Q(sqrt(-d)), d positive squarefree.
    #[arg(long)]
    d: i64,

    /// Ideal generators "p,q;p,q;..." as coordinates over {1, delta}.
    #[arg(long, conflicts_with = "canonical", required_unless_present = "canonical")]
    gens: Option<String>,

    /// Canonical basis triple "t,y,g".
    #[arg(long)]
    canonical: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce the input to the canonical basis triple (t, y, g).
    Canonical {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Enumerate the coordinate tuples of all well-rounded twists.
    Twists {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Enumerate tuples and group them into similarity classes.
    Classes {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-check every invariant of the enumerated tuples and classes.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the enumeration against the brute-force oracle.
    OracleCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Oracle coordinate bound; defaults to the safe bound.
        #[arg(long)]
        oracle_bound: Option<i64>,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonPositiveD(_)
            | Error::NotSquarefree(..)
            | Error::InvalidTriple(_)
            | Error::InsufficientBound { .. } => 2,
            Error::ZeroIdeal => 3,
            Error::DegenerateBasis | Error::NotTwistable(_) | Error::Internal(_) => 4,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn bad_input(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn parse_int(s: &str, what: &str) -> Result<i64, Failure> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| bad_input(format!("{what}: expected an integer, got {s:?}")))
}

fn parse_gens(s: &str) -> Result<Vec<QuadElem>, Failure> {
    let mut gens = Vec::new();
    for part in s.split(';') {
        let (p, q) = part
            .split_once(',')
            .ok_or_else(|| bad_input(format!("generator {part:?}: expected \"p,q\"")))?;
        gens.push(QuadElem::from_i64(
            parse_int(p, "generator")?,
            parse_int(q, "generator")?,
        ));
    }
    Ok(gens)
}

fn parse_triple(s: &str) -> Result<(i64, i64, i64), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(bad_input(format!("triple {s:?}: expected \"t,y,g\"")));
    }
    Ok((
        parse_int(parts[0], "triple")?,
        parse_int(parts[1], "triple")?,
        parse_int(parts[2], "triple")?,
    ))
}

fn build_ideal(input: &InputArgs) -> Result<Ideal, Failure> {
    let field = QuadField::new(input.d)?;
    if let Some(gens) = &input.gens {
        Ok(Ideal::canonical_basis(field, &parse_gens(gens)?)?)
    } else {
        let spec = input.canonical.as_ref().expect("clap guarantees one input");
        let (t, y, g) = parse_triple(spec)?;
        Ok(Ideal::new(
            field,
            BigInt::from(t),
            BigInt::from(y),
            BigInt::from(g),
        )?)
    }
}

fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Json => report::to_json(r) + "\n",
        Format::Csv => report::to_csv(r),
        Format::Table => report::to_table(r),
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            msg: format!("verification failed: {what}"),
        })
    }
}

fn run_verify(ideal: &Ideal) -> Result<String, Failure> {
    let tuples = all_good_tuples(ideal)?;
    let classes = classify(ideal, &tuples)?;
    let r = report::build(ideal, &tuples, &classes)?;

    for w in tuples.windows(2) {
        check(w[0] < w[1], "tuples strictly sorted")?;
    }
    for (i, t) in tuples.iter().enumerate() {
        let bp = t.realize(ideal)?;
        check(t.det().abs() == BigInt::from(1), "tuple unimodular")?;
        check(bp.is_good(), "tuple good")?;
        let f1 = &bp.f1_coeff();
        let f2 = &bp.f2_coeff();
        check(
            (f1 * f2).numer().sign() != num_bigint::Sign::Plus,
            "f1 f2 <= 0",
        )?;
        let cos = bp.cos_theta()?;
        let cos_f = to_f64(&cos);
        check(cos_f.abs() <= 0.5 + 1e-12, "|cos| within 1/2")?;
        let tr = &r.tuples[i];
        check(
            from_frac_string(&tr.cos).as_ref() == Some(&cos),
            "report cos string matches",
        )?;
        let beta = to_f64(&bp.twist_beta()?);
        check(beta > 0.0, "twist parameter positive")?;
        check(
            rel_close(tr.alpha_float.powi(4), beta, 1e-9),
            "alpha^4 matches beta",
        )?;
        let [u, v] = tr.basis_float;
        let (nu, nv) = (u[0].hypot(u[1]), v[0].hypot(v[1]));
        check(rel_close(nu, nv, 1e-9), "twisted norms equal")?;
        let dot = u[0] * v[0] + u[1] * v[1];
        let cos_num = (dot / (nu * nv)).abs();
        check((cos_num - cos_f.abs()).abs() <= 1e-9, "float cos matches exact")?;
        check(
            is_well_rounded_numeric(u, v, 1e-9)?,
            "twisted basis well rounded",
        )?;
        let hex_exact = (f1 * f2).numer().sign() == num_bigint::Sign::NoSign;
        check(
            hex_exact == (cos.abs() == wrtwist::rat::rat(1, 2)),
            "boundary iff hexagonal angle",
        )?;
    }

    let mut seen = vec![false; tuples.len()];
    let mut last: Option<wrtwist::Rat> = None;
    for c in &classes {
        if let Some(prev) = &last {
            check(prev < &c.cos_abs, "class invariants ascending")?;
        }
        last = Some(c.cos_abs.clone());
        check(c.label == ClassLabel::from_key(&c.cos_abs), "class label")?;
        check(!c.members.is_empty(), "class nonempty")?;
        for m in &c.members {
            check(cos_abs_key(ideal, m)? == c.cos_abs, "member invariant")?;
            let idx = tuples
                .binary_search(m)
                .map_err(|_| Failure { code: 4, msg: "class member not a tuple".into() })?;
            check(!seen[idx], "member listed once")?;
            seen[idx] = true;
        }
    }
    check(seen.iter().all(|&s| s), "classes cover all tuples")?;

    let two = BigInt::from(2);
    let width = match ideal.field().case() {
        wrtwist::FieldCase::NonResidue => (ideal.y() + 1u8) / &two,
        wrtwist::FieldCase::Residue => (ideal.y() * 2u8 + ideal.g() + 1u8) / &two,
    };
    let max_classes = BigInt::from(6) + &two * width;
    check(
        BigInt::from(classes.len()) <= max_classes,
        "class count within bound",
    )?;

    Ok(format!(
        "ok tuples: {} strictly sorted, unimodular, good\n\
         ok exact: f1 f2 signs, |cos| <= 1/2, report strings match\n\
         ok float: alpha^4 matches beta, equal norms, well rounded\n\
         ok classes: {} ascending, labeled, partition tuples\n\
         ok bound: {} classes <= {}\n\
         verified\n",
        tuples.len(),
        classes.len(),
        classes.len(),
        max_classes
    ))
}

fn tuple_array(t: &GoodTuple) -> String {
    format!("[{},{},{},{}]", t.a, t.c, t.b, t.d)
}

fn run_oracle_check(ideal: &Ideal, bound: Option<i64>) -> Result<String, Failure> {
    let bound = match bound {
        Some(b) => BigInt::from(b),
        None => safe_bound(ideal),
    };
    let enumerated = all_good_tuples(ideal)?;
    let brute = brute_force_good_tuples(ideal, &bound)?;
    if enumerated == brute {
        return Ok(format!(
            "{{\"match\":true,\"tuples\":{},\"bound\":{}}}\n",
            enumerated.len(),
            bound
        ));
    }
    let only_enum: Vec<String> = enumerated
        .iter()
        .filter(|t| !brute.contains(*t))
        .map(tuple_array)
        .collect();
    let only_brute: Vec<String> = brute
        .iter()
        .filter(|t| !enumerated.contains(*t))
        .map(tuple_array)
        .collect();
    Err(Failure {
        code: 5,
        msg: format!(
            "enumeration and oracle disagree: only enumeration [{}], only oracle [{}]",
            only_enum.join(","),
            only_brute.join(",")
        ),
    })
}

fn ideal_report(ideal: &Ideal) -> Result<IdealReport, Failure> {
    let as_i64 = |x: &BigInt, what: &str| -> Result<i64, Failure> {
        x.to_i64().ok_or_else(|| Failure {
            code: 4,
            msg: format!("{what} {x} exceeds the report integer range"),
        })
    };
    Ok(IdealReport {
        t: as_i64(ideal.t(), "t")?,
        y: as_i64(ideal.y(), "y")?,
        g: as_i64(ideal.g(), "g")?,
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Canonical { input } => {
            let ideal = build_ideal(input)?;
            Ok(report::triple_json(&ideal_report(&ideal)?) + "\n")
        }
        Command::Twists { input, format } => {
            let ideal = build_ideal(input)?;
            let tuples = all_good_tuples(&ideal)?;
            let r = report::build(&ideal, &tuples, &[])?;
            Ok(render(&r, *format))
        }
        Command::Classes { input, format } => {
            let ideal = build_ideal(input)?;
            let tuples = all_good_tuples(&ideal)?;
            let classes = classify(&ideal, &tuples)?;
            let r = report::build(&ideal, &tuples, &classes)?;
            Ok(render(&r, *format))
        }
        Command::Verify { input } => run_verify(&build_ideal(input)?),
        Command::OracleCheck {
            input,
            oracle_bound,
        } => run_oracle_check(&build_ideal(input)?, *oracle_bound),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => print!("{out}"),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            std::process::exit(f.code);
        }
    }
}
