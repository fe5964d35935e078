//! Exhaustive census of one family over one field, then every closed-form
//! check against it.
//!
//!     cargo run --example census_report -- doubling 9

use dik_census::census;
use dik_census::family::Family;
use dik_census::field::FiniteField;

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args
        .next()
        .as_deref()
        .unwrap_or("doubling")
        .parse()
        .unwrap();
    let q: u64 = args.next().map_or(9, |a| a.parse().unwrap());
    let f = FiniteField::of_order(q).unwrap();

    let report = census::brute_census(family, &f).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    let record = census::verify(family, &f).unwrap();
    for c in &record.checks {
        println!(
            "{:<32} formula {:>6} oracle {:>6} {}",
            c.name,
            c.formula.map_or("-".into(), |v| v.to_string()),
            c.oracle,
            if c.pass { "ok" } else { "MISMATCH" }
        );
    }
    println!("overall: {}", if record.pass { "pass" } else { "fail" });
}
