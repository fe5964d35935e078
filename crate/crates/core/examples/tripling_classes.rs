//! Labels, j-classes and F_q-blocks of every parameter of the tripling family.
//!
//!     cargo run --example tripling_classes -- 13

use dik_census::field::FiniteField;
use dik_census::tripling::{self, TriplingParam};

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .map_or(13, |a| a.parse().expect("integer"));
    let f = FiniteField::of_order(q).expect("odd prime power");
    let show = |xs: &[dik_census::field::Elem<'_>]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for t in tripling::params(&f).expect("p >= 5") {
        let class = t.fq_class().unwrap();
        let blocks: Vec<String> = class
            .fq_blocks
            .iter()
            .map(|b| format!("[{}]", show(b)))
            .collect();
        println!(
            "u = {:>6}  {}  j = {:>6}  class {{{}}}  blocks {}",
            t.u().to_string(),
            t.label(),
            t.j().to_string(),
            show(&class.jbar_members),
            blocks.join(" ")
        );
    }
    println!("labels      {:?}", tripling::partition_counts(&f).unwrap());
    if let Some(t1) = tripling::table1(q) {
        println!("tabulated   {t1:?}");
    }
    let (n1, n2) = tripling::auxiliary_counts(&f).unwrap();
    println!("N1 = {n1:?}, N2 = {n2:?}");
    println!(
        "j-invariants {}, F_q-classes {:?}",
        tripling::count_jbar_formula(q),
        tripling::count_fq_from(q, n1, n2)
    );

    // the w-parametrisation of isomorphic pairs
    for w in f.elements() {
        if let Ok(Some(pair)) = tripling::iso_pair_from_w(w) {
            let same = TriplingParam::new(pair.u)
                .unwrap()
                .curve()
                .isomorphic_fq(&TriplingParam::new(pair.v).unwrap().curve())
                .unwrap()
                .is_some();
            println!(
                "w = {w}: u = {}, v = {}{}, isomorphic {same}",
                pair.u,
                pair.v,
                if pair.degenerate { " (u = v)" } else { "" }
            );
        }
    }
}
