//! Point counts of the auxiliary curves and their distance from q + 1.
//!
//!     cargo run --example point_counts -- 200

use dik_census::arith::prime_powers_in;
use dik_census::doubling;
use dik_census::field::FiniteField;
use dik_census::tripling;

fn main() {
    let q_max: u64 = std::env::args().nth(1).map_or(100, |a| a.parse().unwrap());
    println!(
        "{:>5} {:>6} {:>6} {:>6} {:>6}",
        "q", "N1", "N2", "N", "gamma"
    );
    for (q, p, k) in prime_powers_in(3, q_max) {
        if p == 2 {
            continue;
        }
        let f = FiniteField::new(p, k).unwrap();
        let cell = |v: Option<u64>| v.map_or("-".to_string(), |n| n.to_string());
        let n1 = if p >= 5 && q % 3 == 1 {
            tripling::n1(&f).ok()
        } else {
            None
        };
        let n2 = if p >= 5 { tripling::n2(&f).ok() } else { None };
        let n = doubling::n_legendre(&f).ok();
        let gamma = doubling::gamma_affine_count(&f).ok();
        println!(
            "{q:>5} {:>6} {:>6} {:>6} {:>6}",
            cell(n1),
            cell(n2),
            cell(n),
            cell(gamma)
        );
    }
}
