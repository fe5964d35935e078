//! Library results against naive reimplementations that share no code with
//! the crate: schoolbook polynomial arithmetic, square tables, direct point
//! enumeration.

use std::collections::HashSet;

use dik_census::arith::prime_powers_in;
use dik_census::curve::CubicCurve;
use dik_census::doubling::{self, DoublingParam};
use dik_census::field::{CharValue, Elem, FiniteField};
use dik_census::tripling::{self, TriplingParam};
use proptest::prelude::*;

/// Naive F_{p^k}: coefficient vectors, constant term first, reduced by a
/// monic modulus.
struct Naive {
    p: i64,
    modulus: Vec<i64>,
}

impl Naive {
    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        (0..self.k())
            .map(|i| (a[i] + b[i]).rem_euclid(self.p))
            .collect()
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let k = self.k();
        let mut prod = vec![0i64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a[i] * b[j]).rem_euclid(self.p);
            }
        }
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] - c * m).rem_euclid(self.p);
            }
        }
        prod.truncate(k);
        prod
    }
}

fn coeffs(e: Elem<'_>) -> Vec<i64> {
    let k = e.field().degree() as usize;
    let mut c: Vec<i64> = e.coeffs().iter().map(|&x| x as i64).collect();
    c.resize(k, 0);
    c
}

fn naive_of(f: &FiniteField) -> Naive {
    Naive {
        p: f.characteristic() as i64,
        modulus: f.modulus().iter().map(|&c| c as i64).collect(),
    }
}

const SMALL_FIELDS: [(u64, u32); 9] = [
    (3, 1),
    (5, 1),
    (7, 1),
    (3, 2),
    (5, 2),
    (3, 3),
    (7, 2),
    (3, 4),
    (11, 1),
];

#[test]
fn arithmetic_matches_schoolbook_polynomials() {
    for (p, k) in SMALL_FIELDS {
        let f = FiniteField::new(p, k).unwrap();
        let n = naive_of(&f);
        let elems: Vec<_> = f.elements().collect();
        for &a in &elems {
            for &b in &elems {
                assert_eq!(coeffs(a + b), n.add(&coeffs(a), &coeffs(b)));
                assert_eq!(coeffs(a * b), n.mul(&coeffs(a), &coeffs(b)));
            }
        }
    }
}

#[test]
fn modulus_is_the_first_irreducible_in_tuple_order() {
    // for k <= 3 irreducible means no root; tuples (c0, .., c_{k-1}) run with c0 most significant
    for (p, k) in [(3u64, 2u32), (5, 2), (7, 2), (3, 3), (5, 3), (11, 2)] {
        let f = FiniteField::new(p, k).unwrap();
        let total = p.pow(k);
        let first = (0..total)
            .map(|n| {
                let mut c: Vec<u64> = (0..k).map(|i| n / p.pow(k - 1 - i) % p).collect();
                c.push(1);
                c
            })
            .find(|c| {
                (0..p).all(|x| {
                    let v = c.iter().rev().fold(0, |acc, &ci| (acc * x + ci) % p);
                    v != 0
                })
            })
            .unwrap();
        let got: Vec<u64> = f.modulus().iter().map(|&c| c as u64).collect();
        assert_eq!(got, first, "p={p} k={k}");
    }
}

#[test]
fn characters_and_roots_match_tables() {
    for (p, k) in SMALL_FIELDS {
        let f = FiniteField::new(p, k).unwrap();
        let elems: Vec<_> = f.elements().collect();
        for n in [2u64, 3, 4, 6] {
            let powers: HashSet<_> = elems.iter().map(|&x| x.pow(n)).collect();
            for &a in &elems {
                let mut roots: Vec<_> = elems.iter().copied().filter(|&x| x.pow(n) == a).collect();
                roots.sort();
                assert_eq!(a.nth_roots(n), roots);
                assert_eq!(a.is_nth_power(n), powers.contains(&a));
            }
        }
        for &a in &elems {
            let expected = if a.is_zero() {
                CharValue::Zero
            } else if elems.iter().any(|&x| x * x == a) {
                CharValue::Residue
            } else {
                CharValue::NonResidue
            };
            assert_eq!(a.chi2(), expected);
        }
    }
}

/// `c4^3 / Delta` from the b-invariants of `y^2 = x^3 + a2 x^2 + a4 x + a6`.
fn naive_j<'f>(a2: Elem<'f>, a4: Elem<'f>, a6: Elem<'f>) -> Elem<'f> {
    let b2 = a2 * 4;
    let b4 = a4 * 2;
    let b6 = a6 * 4;
    let b8 = a2 * a6 * 4 - a4 * a4;
    let c4 = b2 * b2 - b4 * 24;
    let disc = -(b2 * b2 * b8) - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9;
    c4.pow(3) / disc
}

#[test]
fn family_j_invariants_match_b_invariants() {
    for (p, k) in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2), (7, 2)] {
        let f = FiniteField::new(p, k).unwrap();
        for t in tripling::params(&f).unwrap() {
            let c = t.curve();
            assert_eq!(t.j(), naive_j(c.a2(), c.a4(), c.a6()));
        }
    }
    for (p, k) in [(3, 1), (3, 2), (3, 3), (5, 1), (7, 1), (5, 2)] {
        let f = FiniteField::new(p, k).unwrap();
        for d in doubling::params(&f).unwrap() {
            let c = d.curve();
            assert_eq!(d.j(), naive_j(c.a2(), c.a4(), c.a6()));
            if p == 3 {
                let u = d.u();
                assert_eq!(d.j(), u.pow(3) / (u - 1));
            }
        }
    }
}

fn square_counts(f: &FiniteField) -> Vec<u64> {
    // number of y with y^2 = v, indexed by v
    let mut counts = vec![0u64; f.order() as usize];
    for y in f.elements() {
        counts[(y * y).index() as usize] += 1;
    }
    counts
}

fn affine<'f>(f: &'f FiniteField, sq: &[u64], g: impl Fn(Elem<'f>) -> Elem<'f>) -> u64 {
    f.elements().map(|x| sq[g(x).index() as usize]).sum()
}

#[test]
fn point_counts_match_direct_enumeration() {
    for (p, k) in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2), (7, 2), (31, 1)] {
        let f = FiniteField::new(p, k).unwrap();
        let sq = square_counts(&f);
        let third = f.ratio(1, 3).unwrap();
        let quarter3 = f.ratio(3, 4).unwrap();
        assert_eq!(
            tripling::n2(&f).unwrap(),
            1 + affine(&f, &sq, |x| x * (x - 1) * (x - third))
        );
        assert_eq!(
            doubling::n_legendre(&f).unwrap(),
            1 + affine(&f, &sq, |x| x * (x + 1) * (x + quarter3))
        );
        assert_eq!(
            doubling::gamma_affine_count(&f).unwrap(),
            affine(&f, &sq, |x| x * (x + 1) * (x + quarter3))
        );
    }
    for k in 1..=4 {
        let f = FiniteField::new(3, k).unwrap();
        let sq = square_counts(&f);
        let gamma: u64 = f
            .elements()
            .map(|b| sq[(f.one() - b).index() as usize])
            .sum();
        assert_eq!(doubling::gamma_affine_count(&f).unwrap(), gamma);
        assert_eq!(gamma, f.order());
    }
}

#[test]
fn n1_counts_points_of_the_intersection() {
    // affine (x, y, z, w) with y^2 = 3x(x+1)(x-2), z^2 = g(zeta x), w^2 = g(zeta^2 x)
    for (p, k) in [
        (7u64, 1u32),
        (13, 1),
        (19, 1),
        (31, 1),
        (37, 1),
        (5, 2),
        (43, 1),
    ] {
        let f = FiniteField::new(p, k).unwrap();
        let sq = square_counts(&f);
        let zeta = f
            .elements()
            .find(|&z| !z.is_one() && z.pow(3).is_one())
            .unwrap();
        fn g(t: Elem<'_>) -> Elem<'_> {
            t * 3 * (t + 1) * (t - 2)
        }
        let direct: u64 = f
            .elements()
            .map(|x| {
                sq[g(x).index() as usize]
                    * sq[g(zeta * x).index() as usize]
                    * sq[g(zeta * zeta * x).index() as usize]
            })
            .sum();
        assert_eq!(tripling::n1(&f).unwrap(), direct, "q={}", f.order());
    }
}

#[test]
fn b2_pairs_are_isomorphic_exactly_when_q_is_1_mod_8() {
    let mut seen = 0;
    for (q, p, k) in prime_powers_in(5, 1000) {
        if p < 5 {
            continue;
        }
        let f = FiniteField::new(p, k).unwrap();
        for u in f.elements() {
            if !(u * u * 2 - u * 6 + 3).is_zero() {
                continue;
            }
            let (a, b) = (
                TriplingParam::new(u).unwrap(),
                TriplingParam::new(-u + 3).unwrap(),
            );
            let iso = a.curve().isomorphic_fq(&b.curve()).unwrap().is_some();
            assert_eq!(iso, q % 8 == 1, "q={q} u={u}");
            seen += 1;
        }
    }
    assert!(seen > 100);
}

#[test]
fn isomorphism_search_agrees_with_enumeration_on_random_curves() {
    // every nonsingular curve over a few small fields against a fixed partner set
    for (p, k) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let f = FiniteField::new(p, k).unwrap();
        let mut curves = Vec::new();
        for a2 in f.elements() {
            for a4 in f.elements() {
                for a6 in f.elements() {
                    let c = CubicCurve::new(a2, a4, a6).unwrap();
                    if c.is_singular() || (p == 3 && a2.is_zero()) {
                        continue;
                    }
                    curves.push(c);
                }
            }
        }
        for (i, c) in curves.iter().enumerate() {
            for d in curves.iter().skip(i % 7).step_by(7) {
                let fast = c.isomorphic_fq(d).unwrap();
                let slow = c.brute_force_iso(d).unwrap();
                assert_eq!(fast.is_some(), slow.is_some());
                if let Some(w) = fast {
                    assert_eq!(c.apply(&w), *d);
                }
            }
        }
    }
}

#[test]
fn doubling_pairs_from_b_cover_every_isomorphic_pair() {
    for q in [11u64, 13, 17, 25, 27, 29] {
        let f = FiniteField::of_order(q).unwrap();
        let params = doubling::params(&f).unwrap();
        let mut brute = HashSet::new();
        for a in &params {
            for b in &params {
                if a.u() != b.u() && a.curve().brute_force_iso(&b.curve()).unwrap().is_some() {
                    brute.insert((a.u(), b.u()));
                }
            }
        }
        let mut predicted = HashSet::new();
        for b in f.elements() {
            if let Ok(Some(s)) = doubling::pair_from_b(b) {
                assert_eq!(s.a_squared * s.v, s.u + s.b * 3);
                assert_eq!(s.u * (s.b + 16), -(s.b * s.b));
                if s.fq_isomorphic() && s.u != s.v {
                    predicted.insert((s.u, s.v));
                }
            }
        }
        assert_eq!(predicted, brute, "q={q}");
    }
}

#[test]
fn tripling_pairs_from_w_cover_every_isomorphic_pair() {
    for q in [7u64, 11, 13, 19, 25, 31] {
        let f = FiniteField::of_order(q).unwrap();
        let params = tripling::params(&f).unwrap();
        let mut brute = HashSet::new();
        for a in &params {
            for b in &params {
                if a.u() != b.u() && a.curve().brute_force_iso(&b.curve()).unwrap().is_some() {
                    brute.insert((a.u(), b.u()));
                }
            }
        }
        let predicted: HashSet<_> = f
            .elements()
            .filter_map(|w| tripling::iso_pair_from_w(w).ok().flatten())
            .filter(|pair| !pair.degenerate)
            .map(|pair| (pair.u, pair.v))
            .collect();
        assert_eq!(predicted, brute, "q={q}");
    }
}

#[test]
fn doubling_isomorphism_constants() {
    let f = |q| FiniteField::of_order(q).unwrap();
    assert_eq!(doubling::exceptional_count(&f(5)).unwrap(), 7);
    assert_eq!(doubling::exceptional_count(&f(9)).unwrap(), 5);
    assert_eq!(doubling::exceptional_count(&f(11)).unwrap(), 3);
    assert_eq!(doubling::n_q_direct(&f(5)).unwrap(), 0);
    assert_eq!(doubling::n_q_direct(&f(9)).unwrap(), 4);
    assert_eq!(doubling::n_q_direct(&f(27)).unwrap(), 24);
    assert_eq!(DoublingParam::new(f(7).int(2)).unwrap().j(), f(7).int(6));
}

fn small_field() -> impl Strategy<Value = FiniteField> {
    prop::sample::select(vec![
        (3u64, 1u32),
        (5, 1),
        (7, 1),
        (3, 2),
        (5, 2),
        (3, 3),
        (13, 1),
        (7, 2),
    ])
    .prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(f in small_field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let q = f.order() as u32;
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a - a, f.zero());
        prop_assert_eq!(a.pow(f.order()), a);
        if !b.is_zero() {
            prop_assert_eq!(a / b * b, a);
        }
    }

    #[test]
    fn twists_are_fqbar_but_not_fq_isomorphic(f in small_field(), a in any::<u32>(), b in any::<u32>(), d in any::<u32>()) {
        prop_assume!(f.characteristic() > 3);
        let q = f.order() as u32;
        let c = CubicCurve::new(f.zero(), f.element(a % q).unwrap(), f.element(b % q).unwrap()).unwrap();
        let d = f.element(d % q).unwrap();
        prop_assume!(!c.is_singular() && d.chi2() == CharValue::NonResidue);
        let j = c.j_invariant().unwrap();
        prop_assume!(!j.is_zero() && j != f.int(1728));
        let t = c.quadratic_twist(d).unwrap();
        prop_assert!(c.isomorphic_fqbar(&t).unwrap());
        prop_assert!(c.isomorphic_fq(&t).unwrap().is_none());
    }

    #[test]
    fn witnesses_map_onto_the_target(f in small_field(), u in any::<u32>(), alpha in any::<u32>(), r in any::<u32>()) {
        let q = f.order() as u32;
        let u = f.element(u % q).unwrap();
        let alpha = f.element(alpha % q).unwrap();
        prop_assume!(!alpha.is_zero());
        let Ok(d) = DoublingParam::new(u) else { return Ok(()) };
        let c = d.curve();
        let image = c.apply(&dik_census::curve::IsoWitness { alpha, r: f.element(r % q).unwrap() });
        let w = c.isomorphic_fq(&image).unwrap();
        prop_assert!(w.is_some());
        prop_assert_eq!(c.apply(&w.unwrap()), image);
    }
}
