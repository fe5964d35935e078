//! Arithmetic in F_q: the modulus picked for an extension, characters, roots.
//!
//!     cargo run --example field_arithmetic -- 3 2

use dik_census::field::FiniteField;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer"));
    let p = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(2) as u32;
    let f = FiniteField::new(p, k).expect("odd prime power within bounds");

    println!(
        "F_{} = F_{}[X]/({:?}), constant term first",
        f.order(),
        p,
        f.modulus()
    );
    for x in f.elements() {
        let roots: Vec<String> = x.sqrt_all().iter().map(|r| r.to_string()).collect();
        let cube = if x.is_zero() {
            "-".into()
        } else {
            x.is_cube().unwrap().to_string()
        };
        println!(
            "{:>10}  chi2 {:>2}  cube {:>5}  sqrt {{{}}}",
            x.to_string(),
            x.chi2().value(),
            cube,
            roots.join(", ")
        );
    }
    match f.primitive_cube_root() {
        Ok(z) => println!("primitive cube root of unity: {z}"),
        Err(e) => println!("no primitive cube root: {e}"),
    }
}
