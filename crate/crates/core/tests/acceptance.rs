//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails. All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use catalan_hankel::hankel::hankel_sequence;
use catalan_hankel::series::{motzkin_power, motzkin_series, reciprocal_power_coeffs};
use catalan_hankel::verify::{self, reciprocal_hankel_sequence, symbolic_c, CheckReport, Status};
use catalan_hankel::{det_fraction_free, hankel_det, paths_oracle, AdmissibleTable, SquareMatrix, WeightSpec};
use common::{cofactor_det_matrix, XorShift};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type SeqCheck = (&'static str, Box<dyn Fn() -> Vec<BigInt>>, Vec<i64>);
type Criterion = (&'static str, fn() -> Outcome);

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ints(vs: &[i64]) -> Vec<BigInt> {
    vs.iter().map(|&v| int(v)).collect()
}

fn expect_seq(label: &str, got: Vec<BigInt>, want: &[i64]) -> Result<(), String> {
    if got == ints(want) {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn expect_verified(r: &CheckReport) -> Result<(), String> {
    if r.is_verified() {
        Ok(())
    } else {
        Err(format!(
            "{} {:?}: {} failures, first {:?}",
            r.claim_id,
            r.params,
            r.failures.len(),
            r.failures.first()
        ))
    }
}

fn within(label: &str, t: Instant, limit: Duration) -> Result<(), String> {
    let el = t.elapsed();
    if el <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {el:?}, limit {limit:?}"))
    }
}

fn printed_sequences() -> Outcome {
    let one = WeightSpec::constant(int(1));
    let s = WeightSpec::explicit(vec![int(1)], int(0));
    let limit = Duration::from_secs(1);
    let checks: Vec<SeqCheck> = vec![
        (
            "Motzkin a(n,0)(1)",
            Box::new(|| motzkin_series(&int(1), 9).into_coeffs()),
            vec![1, 1, 2, 4, 9, 21, 51, 127, 323],
        ),
        (
            "Motzkin column from triangle",
            Box::new(move || {
                let t = AdmissibleTable::build(&WeightSpec::constant(int(1)), 8);
                (0..=8).map(|n| t.column(0, n).unwrap()).collect()
            }),
            vec![1, 1, 2, 4, 9, 21, 51, 127, 323],
        ),
        (
            "a(n,2)(1)",
            Box::new(|| {
                let t = AdmissibleTable::build(&WeightSpec::constant(int(1)), 8);
                (0..=8).map(|n| t.column(2, n).unwrap()).collect()
            }),
            vec![0, 0, 1, 3, 9, 25, 69, 189, 518],
        ),
        (
            "x^2 A^3 coefficients",
            Box::new(|| motzkin_power(&int(1), 2, 9).shift_up(2).into_coeffs()),
            vec![0, 0, 1, 3, 9, 25, 69, 189, 518],
        ),
        (
            "b(n,2)(1)",
            Box::new(|| reciprocal_power_coeffs(&int(1), 2, 13)),
            vec![1, -3, 0, 2, 0, 0, -1, -3, -9, -25, -69, -189, -518],
        ),
        {
            let w = one.clone();
            (
                "D(1,1,n)(1)",
                Box::new(move || hankel_sequence(&w, 1, 1, 11).unwrap()),
                vec![1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0],
            )
        },
        {
            let w = one.clone();
            (
                "D(-1,1,n)(1)",
                Box::new(move || hankel_sequence(&w, -1, 1, 11).unwrap()),
                vec![1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1],
            )
        },
        {
            let w = one.clone();
            (
                "D(2,2,n)(1)",
                Box::new(move || hankel_sequence(&w, 2, 2, 13).unwrap()),
                vec![1, 1, 0, -4, -4, 0, 9, 9, 0, -16, -16, 0, 25, 25],
            )
        },
        {
            let w = one.clone();
            (
                "D(-2,2,n)(1)",
                Box::new(move || hankel_sequence(&w, -2, 2, 12).unwrap()),
                vec![1, 0, 0, 0, 0, 1, 1, 0, -4, -4, 0, 9, 9],
            )
        },
        {
            let w = s.clone();
            (
                "D(2,0,n)(s)",
                Box::new(move || hankel_sequence(&w, 2, 0, 11).unwrap()),
                (1..=12).collect(),
            )
        },
        {
            let w = s.shift();
            (
                "D(2,0,n)(Es)",
                Box::new(move || hankel_sequence(&w, 2, 0, 11).unwrap()),
                vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6],
            )
        },
        {
            let w = s.clone();
            (
                "D(-2,0,n)(s)",
                Box::new(move || hankel_sequence(&w, -2, 0, 18).unwrap()),
                vec![1, 0, 0, -1, -1, -2, -2, -3, -3, -4, -4, -5, -5, -6, -6, -7, -7, -8, -8],
            )
        },
        (
            "d(0,2,n)(1)",
            Box::new(|| reciprocal_hankel_sequence(&int(1), 2, 7).unwrap()),
            vec![1, 1, -9, -4, 20, -225, -45, 126],
        ),
        {
            let w = one.clone();
            (
                "D(4,2,n)(1)",
                Box::new(move || hankel_sequence(&w, 4, 2, 6).unwrap()),
                vec![1, 9, -4, -20, -225, 45, 126],
            )
        },
        (
            "worked 3x3 determinant",
            Box::new(|| {
                let m = SquareMatrix::from_rows(vec![ints(&[1, -3, 0]), ints(&[-3, 0, 2]), ints(&[0, 2, 0])]);
                vec![det_fraction_free(&m).unwrap()]
            }),
            vec![-4],
        ),
        (
            "worked 2x2 determinant D(4,2,2)(1)",
            Box::new(|| vec![hankel_det(&WeightSpec::constant(int(1)), 4, 2, 2).unwrap()]),
            vec![-4],
        ),
    ];
    let count = checks.len();
    for (label, compute, want) in checks {
        let t = Instant::now();
        expect_seq(label, compute(), &want)?;
        within(label, t, limit)?;
    }
    Ok(format!("{count} listed sequences exact"))
}

fn theorem1() -> Outcome {
    let t = Instant::now();
    let r = verify::check_theorem1_random(20240101, 40, 4, 6).map_err(|e| e.to_string())?;
    expect_verified(&r)?;
    let zero = r.clause("4.zero").ok_or("zero block not evaluated")?;
    if zero.instances_tested == 0 || zero.status != Status::Verified {
        return Err(format!(
            "zero block: {:?} on {} instances",
            zero.status, zero.instances_tested
        ));
    }
    within("theorem1", t, Duration::from_secs(30))?;
    Ok(format!(
        "{} instances over 40 random specs in {:?}",
        r.instances_tested,
        t.elapsed()
    ))
}

fn theorem2() -> Outcome {
    let t = Instant::now();
    let mut total = 0;
    for c in -2..=3 {
        let r = verify::check_theorem2(&int(c), 3, 3, 5).map_err(|e| e.to_string())?;
        expect_verified(&r)?;
        total += r.instances_tested;
    }
    let r = verify::check_theorem2(&symbolic_c(), 2, 2, 4).map_err(|e| e.to_string())?;
    expect_verified(&r)?;
    total += r.instances_tested;
    within("theorem2", t, Duration::from_secs(60))?;
    Ok(format!(
        "{total} instances (6 integer c + symbolic) in {:?}",
        t.elapsed()
    ))
}

fn corollary() -> Outcome {
    let mut total = 0;
    let mut run = |r: CheckReport| -> Result<(), String> {
        expect_verified(&r)?;
        for clause in ["6.sign", "6.zero"] {
            let c = r.clause(clause).ok_or(format!("clause {clause} missing"))?;
            if c.status != Status::Verified {
                return Err(format!("clause {clause}: {:?}", c.status));
            }
        }
        total += r.instances_tested;
        Ok(())
    };
    for c in 0..=2 {
        run(verify::check_corollary6(&int(c), 4, 15).map_err(|e| e.to_string())?)?;
    }
    run(verify::check_corollary6(&symbolic_c(), 4, 15).map_err(|e| e.to_string())?)?;
    Ok(format!("{total} instances, sign and zero patterns exact"))
}

fn lemma() -> Outcome {
    let r = verify::check_lemma13_random(13, 100, 20, 4, 3).map_err(|e| e.to_string())?;
    expect_verified(&r)?;
    Ok(format!("{} instances over 100 random series", r.instances_tested))
}

fn identity7() -> Outcome {
    let r = verify::check_identities7_8(&symbolic_c(), 0, 8).map_err(|e| e.to_string())?;
    for clause in ["7.0", "7.1", "7.2"] {
        let c = r.clause(clause).ok_or(format!("clause {clause} missing"))?;
        if c.status != Status::Verified || c.instances_tested != 9 {
            return Err(format!(
                "clause {clause}: {:?} on {} instances",
                c.status, c.instances_tested
            ));
        }
    }
    Ok("D(1,0,n) = F_{n+1}(c), D(2,0,n) = sum F^2 as polynomials, n <= 8".into())
}

fn series_identities() -> Outcome {
    let mut total = 0;
    for c in 0..=2 {
        let r = verify::check_series_identities(&int(c), 4, 16).map_err(|e| e.to_string())?;
        expect_verified(&r)?;
        total += r.instances_tested;
    }
    let r = verify::check_series_identities(&symbolic_c(), 4, 16).map_err(|e| e.to_string())?;
    expect_verified(&r)?;
    total += r.instances_tested;
    expect_seq(
        "A(x,0)",
        motzkin_series(&int(0), 9).into_coeffs(),
        &[1, 0, 1, 0, 2, 0, 5, 0, 14],
    )?;
    Ok(format!("{total} coefficient identities, Catalan aeration exact"))
}

fn theorem3() -> Outcome {
    let mut total = 0;
    for c in 0..=2 {
        let r = verify::check_theorem3(&int(c), 3, 5).map_err(|e| e.to_string())?;
        expect_verified(&r)?;
        total += r.instances_tested;
    }
    let r = verify::check_theorem3(&symbolic_c(), 2, 4).map_err(|e| e.to_string())?;
    expect_verified(&r)?;
    total += r.instances_tested;
    Ok(format!("{total} instances"))
}

fn conjectures() -> Outcome {
    let mut lines = Vec::new();
    for (label, r) in [
        ("c=1", verify::check_conjectures9_10(&int(1), 3, 3, 4)),
        ("c=sym", verify::check_conjectures9_10(&symbolic_c(), 3, 3, 4)),
    ] {
        let r = r.map_err(|e| e.to_string())?;
        for clause in [
            "9.1",
            "9.2",
            "9.3",
            "9.zero",
            "10",
            "10.m0",
            "9.3/unsigned",
            "9.1/printed",
        ] {
            let c = r.clause(clause).ok_or(format!("{label}: clause {clause} missing"))?;
            if c.instances_tested == 0 {
                return Err(format!("{label}: clause {clause} tested nothing"));
            }
            if c.status != Status::Verified && c.failures.is_empty() {
                return Err(format!("{label}: clause {clause} failed without witnesses"));
            }
        }
        let json = serde_json::to_string(&r).map_err(|e| e.to_string())?;
        let back: CheckReport = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        if back != r {
            return Err("report does not round-trip".into());
        }
        let summary: Vec<String> = r
            .clauses
            .iter()
            .map(|c| {
                format!(
                    "{}={}/{}",
                    c.clause,
                    c.instances_tested - c.failures.len(),
                    c.instances_tested
                )
            })
            .collect();
        lines.push(format!("{label} [{}]", summary.join(" ")));
    }
    Ok(format!("clause-by-clause reports generated: {}", lines.join("; ")))
}

fn oracles() -> Outcome {
    let mut rng = XorShift(0x5eed);
    for trial in 0..200 {
        let n = 1 + trial % 5;
        let m = SquareMatrix::from_fn(n, |_, _| int(rng.range(-5, 5)));
        let (a, b) = (
            det_fraction_free(&m).map_err(|e| e.to_string())?,
            cofactor_det_matrix(&m),
        );
        if a != b {
            return Err(format!("trial {trial}: Bareiss {a} vs cofactor {b} on {m:?}"));
        }
    }
    let specs = [
        WeightSpec::constant(int(0)),
        WeightSpec::constant(int(1)),
        WeightSpec::constant(int(2)),
        WeightSpec::explicit(vec![int(1)], int(0)),
        WeightSpec::explicit(vec![int(2), int(1)], int(0)),
    ];
    let mut compared = 0;
    for w in &specs {
        let t = AdmissibleTable::build(w, 9);
        for n in 0..=9usize {
            for k in 0..=n {
                let oracle = paths_oracle(w, n, k).map_err(|e| e.to_string())?;
                let table = t.column(k, n as i64).map_err(|e| e.to_string())?;
                if oracle != table {
                    return Err(format!("{w} n={n} k={k}: paths {oracle} vs recurrence {table}"));
                }
                compared += 1;
            }
        }
    }
    Ok(format!(
        "200 Bareiss/cofactor trials, {compared} path/recurrence entries, zero discrepancies"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 printed sequences and worked determinant", printed_sequences),
        ("2 backward shift, arbitrary weights (+ zero block)", theorem1),
        ("3 backward shift, constant weights", theorem2),
        ("4 sign and zero pattern of D(0,k,n)", corollary),
        ("5 Hankel determinants of reciprocal series", lemma),
        ("6 Fibonacci-polynomial determinants", identity7),
        ("7 generating-function identities", series_identities),
        ("8 reciprocal-power Hankel determinants", theorem3),
        ("9 open-pattern clause report", conjectures),
        ("10 oracle suites", oracles),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  [{name}] {detail} ({:?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{name}] {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
