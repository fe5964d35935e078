//! Verify both families over every prime power in a range and print the
//! sweep table as CSV.
//!
//!     cargo run --release --example sweep -- 3 1000 4

use dik_census::census::{self, Selection};
use dik_census::cli::write_sweep_csv;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer"));
    let q_min = args.next().unwrap_or(3);
    let q_max = args.next().unwrap_or(200);
    let jobs = args.next().unwrap_or(1) as usize;
    let records = census::sweep(Selection::Both, q_min, q_max, jobs).unwrap();
    write_sweep_csv(&mut std::io::stdout(), &records).unwrap();
    let failed: Vec<_> = records
        .iter()
        .filter(|r| !r.pass)
        .map(|r| (r.family, r.q))
        .collect();
    eprintln!("{} records, failing: {:?}", records.len(), failed);
}
