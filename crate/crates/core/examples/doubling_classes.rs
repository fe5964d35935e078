//! j-classes of the doubling family from the roots of g_u, the pairs coming
//! from the b-parametrisation, and the isomorphism counts behind the
//! F_q-class formula.
//!
//!     cargo run --example doubling_classes -- 27

use dik_census::doubling;
use dik_census::field::FiniteField;

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .map_or(27, |a| a.parse().expect("integer"));
    let f = FiniteField::of_order(q).expect("odd prime power");
    for d in doubling::params(&f).unwrap() {
        let class = d.jbar_class();
        if class.len() > 1 && class[0] == d.u() {
            let blocks = d.fq_blocks().unwrap();
            println!(
                "j = {:>6}: {:?} in {} F_q-classes",
                d.j().to_string(),
                class.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                blocks.len()
            );
        }
    }
    for b in f.elements() {
        if let Ok(Some(s)) = doubling::pair_from_b(b) {
            println!(
                "b = {}: a^2 = {}, u = {}, v = {}, over F_q {}",
                s.b,
                s.a_squared,
                s.u,
                s.v,
                s.fq_isomorphic()
            );
        }
    }
    let sizes = doubling::class_sizes(&f).unwrap();
    println!(
        "classes of size 1: {} (formula {}), size 3: {} (formula {})",
        sizes.c1,
        doubling::c1_formula(q),
        sizes.c3,
        doubling::c3_formula(q)
    );
    println!(
        "gamma {} affine, exceptional {}, n_q {} (closed form {}), nbar {}",
        doubling::gamma_affine_count(&f).unwrap(),
        doubling::exceptional_count(&f).unwrap(),
        doubling::n_q_direct(&f).unwrap(),
        doubling::n_q_closed(&f).unwrap(),
        doubling::nbar(q)
    );
    println!(
        "j-invariants {}, F_q-classes {:?}",
        doubling::count_jbar_formula(q),
        doubling::count_fq_formula(&f).unwrap()
    );
}
