//! Acceptance run: every criterion over the full parameter range, one
//! PASS/FAIL line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use dik_census::arith::prime_powers_in;
use dik_census::census::{self, Selection, VerificationRecord, EXHAUSTIVE_BOUND};
use dik_census::doubling;
use dik_census::family::Family;
use dik_census::field::FiniteField;
use dik_census::tripling;

const Q_MAX: u64 = 1000;
const HISTOGRAM_MAX: u64 = 500;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail,
        }
    } else {
        let shown: Vec<_> = failures.iter().take(8).cloned().collect();
        Outcome {
            pass: false,
            detail: format!("{} failures: {}", failures.len(), shown.join("; ")),
        }
    }
}

/// Failing `(q, check)` pairs among `names` for records of `family` passing `filter`.
fn failing(
    records: &[VerificationRecord],
    family: Family,
    filter: impl Fn(&VerificationRecord) -> bool,
    names: &[&str],
) -> (Vec<String>, usize) {
    let mut failures = Vec::new();
    let mut seen = 0;
    for r in records.iter().filter(|r| r.family == family && filter(r)) {
        for &name in names {
            let matching: Vec<_> = r
                .checks
                .iter()
                .filter(|c| c.name == name || c.name.starts_with(&format!("{name}.")))
                .collect();
            if matching.is_empty() {
                failures.push(format!("q={} {name} missing", r.q));
            }
            for c in matching {
                seen += 1;
                if !c.pass {
                    failures.push(format!(
                        "q={} {} formula {:?} oracle {}",
                        r.q, c.name, c.formula, c.oracle
                    ));
                }
            }
        }
    }
    (failures, seen)
}

fn record(records: &[VerificationRecord], family: Family, q: u64) -> &VerificationRecord {
    records
        .iter()
        .find(|r| r.family == family && r.q == q)
        .unwrap_or_else(|| panic!("no {family} record for q = {q}"))
}

fn criterion_1(records: &[VerificationRecord], secs: f64) -> Outcome {
    let (f, seen) = failing(records, Family::Tripling, |_| true, &["jbar_count"]);
    outcome(f, format!("{seen} fields, sweep took {secs:.1}s"))
}

fn criterion_2(records: &[VerificationRecord]) -> Outcome {
    let (mut f, seen) = failing(records, Family::Tripling, |_| true, &["fq_count"]);
    let r7 = record(records, Family::Tripling, 7);
    if r7.quantities.n1 != Some(25) || r7.quantities.fq_oracle != 5 {
        f.push(format!(
            "q=7 spot: N1 {:?} I {}",
            r7.quantities.n1, r7.quantities.fq_oracle
        ));
    }
    let r5 = record(records, Family::Tripling, 5);
    if r5.quantities.n2 != Some(8) || r5.quantities.fq_oracle != 2 {
        f.push(format!(
            "q=5 spot: N2 {:?} I {}",
            r5.quantities.n2, r5.quantities.fq_oracle
        ));
    }
    outcome(f, format!("{seen} fields"))
}

fn criterion_3(records: &[VerificationRecord]) -> Outcome {
    let (f, seen) = failing(records, Family::Tripling, |_| true, &["table1", "table2"]);
    outcome(f, format!("{seen} table entries"))
}

fn criterion_4(records: &[VerificationRecord]) -> Outcome {
    let (f, seen) = failing(
        records,
        Family::Tripling,
        |r| r.q <= HISTOGRAM_MAX,
        &["class_size_by_label", "jbar_class_vs_census"],
    );
    outcome(f, format!("{seen} checks, q <= {HISTOGRAM_MAX}"))
}

fn criterion_5(records: &[VerificationRecord]) -> Outcome {
    let (f, seen) = failing(
        records,
        Family::Tripling,
        |r| r.q <= EXHAUSTIVE_BOUND,
        &["iso_pair_from_w_vs_exhaustive", "iso_criterion_vs_direct"],
    );
    outcome(f, format!("{seen} checks, q <= {EXHAUSTIVE_BOUND}"))
}

fn criterion_6(records: &[VerificationRecord]) -> Outcome {
    let (mut f, seen) = failing(
        records,
        Family::Doubling,
        |_| true,
        &["jbar_count", "fq_count", "c3", "c1", "class_size_other"],
    );
    for q in [3, 9, 27, 81, 243, 729] {
        let r = record(records, Family::Doubling, q);
        if !r.pass {
            f.push(format!("q={q} record fails"));
        }
    }
    for (q, j, i) in [(9, 5, 6), (27, 17, 20)] {
        let r = record(records, Family::Doubling, q);
        if (r.quantities.jbar_oracle, r.quantities.fq_oracle) != (j, i) {
            f.push(format!(
                "q={q} spot: J {} I {}",
                r.quantities.jbar_oracle, r.quantities.fq_oracle
            ));
        }
    }
    outcome(f, format!("{seen} checks"))
}

fn criterion_7(records: &[VerificationRecord]) -> Outcome {
    let (mut f, seen) = failing(
        records,
        Family::Doubling,
        |_| true,
        &["nbar_census", "n_q_closed", "fq_chain"],
    );
    let (g, seen_small) = failing(
        records,
        Family::Doubling,
        |r| r.q <= EXHAUSTIVE_BOUND,
        &["n_q_census", "n_q_exhaustive", "n_q_pairs_exhaustive"],
    );
    f.extend(g);
    outcome(
        f,
        format!("{seen} chain checks, {seen_small} exhaustive n_q checks"),
    )
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut counted = 0;
    let mut worst = 0.0f64;
    for (q, p, k) in prime_powers_in(5, Q_MAX) {
        if p < 5 {
            continue;
        }
        let field = FiniteField::new(p, k).unwrap();
        let counts = [
            ("legendre13", tripling::n2(&field).unwrap()),
            ("legendre34", doubling::n_legendre(&field).unwrap()),
            // gamma's smooth model is the same cubic plus its point at infinity
            ("gamma", doubling::gamma_affine_count(&field).unwrap() + 1),
        ];
        for (name, n) in counts {
            counted += 1;
            let dev = (n as i64 - q as i64 - 1).pow(2) as u64;
            worst = worst.max((dev as f64).sqrt() / (q as f64).sqrt());
            if dev > 4 * q {
                failures.push(format!("q={q} {name} N={n}"));
            }
        }
    }
    outcome(
        failures,
        format!("{counted} counts, max |N-(q+1)|/sqrt(q) = {worst:.3}"),
    )
}

fn criterion_9(records: &[VerificationRecord]) -> Outcome {
    let mut failures = Vec::new();
    let mut worst = [0.0f64; 3];
    let mut n1_worst = 0.0f64;
    for r in records {
        let q = r.q as f64;
        let i = r.quantities.fq_oracle as f64;
        let (slot, centre) = match (r.family, r.q % 3) {
            (Family::Tripling, 1) => (0, 79.0 / 96.0 * q),
            (Family::Tripling, _) => (1, 0.75 * q),
            (Family::Doubling, _) => (2, 19.0 / 24.0 * q),
        };
        let dev = (i - centre).abs();
        worst[slot] = worst[slot].max(dev / q.sqrt());
        if dev > 25.0 * q.sqrt() + 30.0 {
            failures.push(format!("{} q={} I={i}", r.family, r.q));
        }
        if let Some(n1) = r.quantities.n1 {
            n1_worst = n1_worst.max((n1 as f64 - q).abs() / q.sqrt());
        }
    }
    outcome(
        failures,
        format!(
            "max |I - centre|/sqrt(q): T1 {:.2}, T2 {:.2}, D {:.2}; max |N1-q|/sqrt(q) = {n1_worst:.2}",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn criterion_10(records: &[VerificationRecord]) -> Outcome {
    let small = |r: &VerificationRecord| r.q <= EXHAUSTIVE_BOUND;
    let (mut f, a) = failing(
        records,
        Family::Tripling,
        small,
        &["isomorphic_fq_vs_exhaustive"],
    );
    let (g, b) = failing(
        records,
        Family::Doubling,
        small,
        &["isomorphic_fq_vs_exhaustive"],
    );
    f.extend(g);
    for q in [3, 9, 27, 81] {
        let r = record(records, Family::Doubling, q);
        if r.check("isomorphic_fq_vs_exhaustive").is_none() {
            f.push(format!("q={q} char-3 check missing"));
        }
    }
    outcome(f, format!("{} fields, q <= {EXHAUSTIVE_BOUND}", a + b))
}

fn main() -> ExitCode {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let start = Instant::now();
    let records = census::sweep(Selection::Both, 3, Q_MAX, jobs).expect("sweep runs");
    let secs = start.elapsed().as_secs_f64();

    let results = [
        ("1 tripling j-count", criterion_1(&records, secs)),
        ("2 tripling F_q-count", criterion_2(&records)),
        ("3 partition tables", criterion_3(&records)),
        ("4 class-size histogram", criterion_4(&records)),
        ("5 w-parametrised pairs", criterion_5(&records)),
        ("6 doubling counts", criterion_6(&records)),
        ("7 isomorphism-count chain", criterion_7(&records)),
        ("8 Hasse bound", criterion_8()),
        ("9 asymptotic bands", criterion_9(&records)),
        ("10 isomorphism oracle", criterion_10(&records)),
    ];
    let mut all = true;
    for (name, o) in &results {
        println!(
            "criterion {name}: {} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        all &= o.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
