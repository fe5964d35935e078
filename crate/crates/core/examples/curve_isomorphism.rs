//! Decide isomorphism of two curves over F_q and cross-check with the
//! exhaustive search over all changes of variables.

use dik_census::curve::CubicCurve;
use dik_census::field::FiniteField;

fn main() {
    let f = FiniteField::new(13, 1).unwrap();
    let c = CubicCurve::new(f.int(1), f.int(2), f.int(5)).unwrap();
    println!(
        "E: y^2 = x^3 + {}x^2 + {}x + {}, j = {}",
        c.a2(),
        c.a4(),
        c.a6(),
        c.j_invariant().unwrap()
    );

    let d = f.int(2); // a non-square mod 13
    let twist = c.quadratic_twist(d).unwrap();
    let moved = c.apply(&dik_census::curve::IsoWitness {
        alpha: f.int(3),
        r: f.int(7),
    });

    for (name, other) in [("twist by 2", twist), ("image under (3, 7)", moved)] {
        let fast = c.isomorphic_fq(&other).unwrap();
        let slow = c.brute_force_iso(&other).unwrap();
        println!(
            "{name}: j equal {}, over F_13 {}, exhaustive search {}",
            c.isomorphic_fqbar(&other).unwrap(),
            fast.map_or("no".into(), |w| format!(
                "yes via alpha = {}, r = {}",
                w.alpha, w.r
            )),
            if slow.is_some() {
                "agrees"
            } else {
                "finds none"
            },
        );
    }

    // characteristic 3 goes through its own test
    let f9 = FiniteField::new(3, 2).unwrap();
    let x = f9.from_coeffs(&[0, 1]).unwrap();
    let e = CubicCurve::new(x, f9.one(), f9.zero()).unwrap();
    let image = e.apply(&dik_census::curve::IsoWitness { alpha: x + 1, r: x });
    println!(
        "F_9: witness {:?}",
        e.isomorphic_fq(&image)
            .unwrap()
            .map(|w| (w.alpha.to_string(), w.r.to_string()))
    );
}
