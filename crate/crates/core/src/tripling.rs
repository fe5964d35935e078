//! The tripling family `E_u: y^2 = x^3 + 3u(x + 1)^2`, `u != 0, 9/4`, over
//! fields of characteristic at least 5.
//!
//! Besides the curves themselves this module carries the classification of
//! parameters into the sets A1, A2, A3, B1, B2, the parameter sets of
//! j-invariant classes, the rational parametrisation of isomorphic pairs by
//! `w`, the auxiliary point counts N1 and N2, and the closed-form counts of
//! j-invariants and F_q-isomorphism classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{CubicCurve, ShortW};
use crate::family::{
    exact_div, fq_blocks, require_characteristic, Family, FamilyError, Inexact, LabelCounts,
};
use crate::field::{CharValue, Elem, FiniteField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartitionLabel {
    A1,
    A2,
    A3,
    B1,
    B2,
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An admissible parameter `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriplingParam<'f> {
    u: Elem<'f>,
}

/// The j-invariant class of a parameter split into F_q-isomorphism blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriplingClassSet<'f> {
    pub jbar_members: Vec<Elem<'f>>,
    pub fq_blocks: Vec<Vec<Elem<'f>>>,
}

fn nine_quarters(f: &FiniteField) -> Elem<'_> {
    f.ratio(9, 4).expect("p >= 5")
}

fn is_admissible(u: Elem<'_>) -> bool {
    !u.is_zero() && u != nine_quarters(u.field())
}

/// `2u^2 - 6u + 3`, the factor whose roots give j = 1728.
fn b2_factor(u: Elem<'_>) -> Elem<'_> {
    u * u * 2 - u * 6 + 3
}

/// `2(4U - 9)/U`.
pub fn psi(u: Elem<'_>) -> Result<Elem<'_>, FamilyError> {
    if u.is_zero() {
        return Err(FamilyError::Domain("u = 0".into()));
    }
    Ok((u * 4 - 9) * 2 / u)
}

impl<'f> TriplingParam<'f> {
    pub fn new(u: Elem<'f>) -> Result<Self, FamilyError> {
        require_characteristic(Family::Tripling, u.field().characteristic())?;
        if !is_admissible(u) {
            return Err(FamilyError::Excluded(u.to_string()));
        }
        Ok(TriplingParam { u })
    }

    pub fn u(&self) -> Elem<'f> {
        self.u
    }

    /// `(a2, a4, a6) = (3u, 6u, 3u)`.
    pub fn curve(&self) -> CubicCurve<'f> {
        let u = self.u;
        CubicCurve::new(u * 3, u * 6, u * 3).expect("single field")
    }

    /// `a_u = -2^4 3^5 u(u - 2)`, `b_u = 2^6 3^6 u(2u^2 - 6u + 3)`.
    pub fn short(&self) -> ShortW<'f> {
        let u = self.u;
        ShortW {
            a: u * (u - 2) * -(16 * 243),
            b: u * b2_factor(u) * (64 * 729),
        }
    }

    /// `6912 u (u - 2)^3 / (4u - 9)`.
    pub fn j(&self) -> Elem<'f> {
        let u = self.u;
        u * (u - 2).pow(3) * 6912 / (u * 4 - 9)
    }

    pub fn psi(&self) -> Elem<'f> {
        psi(self.u).expect("admissible u is nonzero")
    }

    /// Discriminant of `g_u`: `-12 (u (u-2)(4u-9)(2u^2-6u+3))^2`.
    pub fn delta(&self) -> Elem<'f> {
        let u = self.u;
        let inner = u * (u - 2) * (u * 4 - 9) * b2_factor(u);
        inner * inner * -12
    }

    /// Pairs `(v, w)` with `w^3 = psi(u)` and `v` the corresponding other
    /// parameter of the j-class, admissible and distinct from `u`.
    pub fn z_set_with_roots(&self) -> Result<Vec<(Elem<'f>, Elem<'f>)>, FamilyError> {
        let u = self.u;
        if self.delta().is_zero() {
            return Err(FamilyError::DegenerateDiscriminant(u.to_string()));
        }
        let f = u.field();
        let third = f.ratio(1, 3)?;
        let mut out = Vec::new();
        for w in self.psi().cbrt_all() {
            assert!(!w.is_zero(), "psi(u) = 0 forces u = 9/4");
            let v = -(u - 6 - w * u + (u - 3) * 2 / w) * third;
            if is_admissible(v) && v != u {
                out.push((v, w));
            }
        }
        out.sort_unstable_by_key(|(v, _)| *v);
        out.dedup_by_key(|(v, _)| *v);
        Ok(out)
    }

    pub fn z_set(&self) -> Result<Vec<Elem<'f>>, FamilyError> {
        Ok(self
            .z_set_with_roots()?
            .into_iter()
            .map(|(v, _)| v)
            .collect())
    }

    /// Parameters `v` with `j(E_v) = j(E_u)`, ascending.
    pub fn jbar_class(&self) -> Vec<Elem<'f>> {
        let u = self.u;
        let mut members = match self.label() {
            PartitionLabel::B1 => vec![u],
            PartitionLabel::B2 => vec![u, -u + 3],
            _ => {
                let mut m = self.z_set().expect("delta is nonzero off B1 and B2");
                m.push(u);
                m
            }
        };
        members.sort_unstable();
        members
    }

    pub fn label(&self) -> PartitionLabel {
        let u = self.u;
        if u == u.field().int(2) {
            return PartitionLabel::B1;
        }
        if b2_factor(u).is_zero() {
            return PartitionLabel::B2;
        }
        match u.field().order() % 3 {
            2 => PartitionLabel::A2,
            _ if self.psi().is_cube().expect("psi(u) != 0") => PartitionLabel::A3,
            _ => PartitionLabel::A1,
        }
    }

    pub fn fq_class(&self) -> Result<TriplingClassSet<'f>, FamilyError> {
        let jbar_members = self.jbar_class();
        let blocks = fq_blocks(&jbar_members, |v| curve_of(v))?;
        Ok(TriplingClassSet {
            jbar_members,
            fq_blocks: blocks,
        })
    }

    /// Number of `v` in `Z_u` for which the character criterion
    /// `chi2(3w(w+1)(w-2)) = 1` disagrees with the direct isomorphism test.
    /// Zero for parameters with vanishing discriminant.
    pub fn isomorphism_criterion_disagreements(&self) -> Result<usize, FamilyError> {
        if self.delta().is_zero() {
            return Ok(0);
        }
        let mut bad = 0;
        let cu = self.curve();
        for (v, w) in self.z_set_with_roots()? {
            let predicted = (w * 3 * (w + 1) * (w - 2)).chi2() == CharValue::Residue;
            let actual = cu.isomorphic_fq(&curve_of(v))?.is_some();
            if predicted != actual {
                bad += 1;
            }
        }
        Ok(bad)
    }
}

fn curve_of(v: Elem<'_>) -> CubicCurve<'_> {
    TriplingParam { u: v }.curve()
}

/// All admissible parameters in canonical order.
pub fn params(field: &FiniteField) -> Result<Vec<TriplingParam<'_>>, FamilyError> {
    require_characteristic(Family::Tripling, field.characteristic())?;
    Ok(field
        .elements()
        .filter(|&u| is_admissible(u))
        .map(|u| TriplingParam { u })
        .collect())
}

/// Sizes of A1, A2, A3, B1, B2 obtained by labelling every parameter.
pub fn partition_counts(field: &FiniteField) -> Result<LabelCounts, FamilyError> {
    let mut counts = LabelCounts::default();
    for t in params(field)? {
        *slot(&mut counts, t.label()) += 1;
    }
    Ok(counts)
}

fn slot(counts: &mut LabelCounts, label: PartitionLabel) -> &mut i64 {
    match label {
        PartitionLabel::A1 => &mut counts.a1,
        PartitionLabel::A2 => &mut counts.a2,
        PartitionLabel::A3 => &mut counts.a3,
        PartitionLabel::B1 => &mut counts.b1,
        PartitionLabel::B2 => &mut counts.b2,
    }
}

/// Tabulated sizes of A1..B2 by `q mod 12`; `None` unless `q = 1, 5, 7, 11 mod 12`.
pub fn table1(q: u64) -> Option<LabelCounts> {
    let q = q as i64;
    let (a1, a2, a3, b1, b2) = match q % 12 {
        1 => (2 * (q - 1) / 3, 0, (q - 1) / 3 - 4, 1, 2),
        5 => (0, q - 3, 0, 1, 0),
        7 => (2 * (q - 1) / 3, 0, (q - 1) / 3 - 2, 1, 0),
        11 => (0, q - 5, 0, 1, 2),
        _ => return None,
    };
    Some(LabelCounts { a1, a2, a3, b1, b2 })
}

/// Per label, the number of parameters whose j-class stays a single
/// F_q-isomorphism class.
pub fn tilde_counts(field: &FiniteField) -> Result<LabelCounts, FamilyError> {
    let mut counts = LabelCounts::default();
    for t in params(field)? {
        if t.fq_class()?.fq_blocks.len() == 1 {
            *slot(&mut counts, t.label()) += 1;
        }
    }
    Ok(counts)
}

/// Closed forms for the non-splitting counts in terms of `N1 = #C(F_q)`
/// (affine) and `N2 = #L(F_q)` (projective).
pub fn table2(q: u64, n1: Option<u64>, n2: Option<u64>) -> Result<LabelCounts, Inexact> {
    let qi = q as i64;
    if q % 3 == 2 {
        let n2 = n2.expect("q = 2 mod 3 needs N2") as i64;
        return Ok(LabelCounts {
            a1: 0,
            a2: exact_div(n2 - 4, 2)?,
            a3: 0,
            b1: 1,
            b2: 0,
        });
    }
    let n1 = n1.expect("q = 1 mod 3 needs N1") as i64;
    let a1 = exact_div(2 * (qi - 1), 3)?;
    let hat_a3 = exact_div(n1 - 25, 24)?;
    let (a3, b2) = if q % 24 == 1 {
        (hat_a3 - 2, 2)
    } else {
        (hat_a3, 0)
    };
    Ok(LabelCounts {
        a1,
        a2: 0,
        a3,
        b1: 1,
        b2,
    })
}

/// Output of the `w`-parametrisation of isomorphic pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoPair<'f> {
    pub u: Elem<'f>,
    pub v: Elem<'f>,
    pub w: Elem<'f>,
    /// `u == v`; such pairs satisfy the equations but carry no information.
    pub degenerate: bool,
}

/// `u = -18/(w^3 - 8)`, `v = 2(w+1)^3 / (w(w^2 + 2w + 4))`, returned when
/// `chi2(3w(w+1)(w-2)) = 1` and both parameters are admissible.
pub fn iso_pair_from_w(w: Elem<'_>) -> Result<Option<IsoPair<'_>>, FamilyError> {
    require_characteristic(Family::Tripling, w.field().characteristic())?;
    if w.is_zero() || (w + 1).is_zero() || (w.pow(3) - 8).is_zero() {
        return Err(FamilyError::Domain(format!("w = {w}")));
    }
    if (w * 3 * (w + 1) * (w - 2)).chi2() != CharValue::Residue {
        return Ok(None);
    }
    let u = w.field().int(-18) / (w.pow(3) - 8);
    let v = (w + 1).pow(3) * 2 / (w * (w * w + w * 2 + 4));
    if !is_admissible(u) || !is_admissible(v) {
        return Ok(None);
    }
    Ok(Some(IsoPair {
        u,
        v,
        w,
        degenerate: u == v,
    }))
}

/// `Y^2 = 3X(X + 1)(X - 2)`.
pub fn w_curve(field: &FiniteField) -> CubicCurve<'_> {
    // x = 3X, y = 3Y gives y^2 = x^3 - 3x^2 - 18x
    CubicCurve::new(field.int(-3), field.int(-18), field.zero()).expect("single field")
}

/// Legendre curve `Y^2 = X(X - 1)(X - 1/3)`.
pub fn legendre_third(field: &FiniteField) -> Result<CubicCurve<'_>, FamilyError> {
    require_characteristic(Family::Tripling, field.characteristic())?;
    let t = field.ratio(1, 3)?;
    Ok(CubicCurve::new(-(t + 1), t, field.zero())?)
}

/// Affine points of the curve `C` cut out by
/// `Y^2 = 3X(X+1)(X-2)`, `Z^2 = 3zX(zX+1)(zX-2)`, `W^2 = 3z^2X(z^2X+1)(z^2X-2)`
/// with `z` a primitive cube root of unity.
pub fn n1(field: &FiniteField) -> Result<u64, FamilyError> {
    require_characteristic(Family::Tripling, field.characteristic())?;
    let zeta = field.primitive_cube_root()?;
    Ok(n1_with_root(field, zeta))
}

pub(crate) fn n1_with_root<'f>(field: &'f FiniteField, zeta: Elem<'f>) -> u64 {
    let roots = [field.one(), zeta, zeta * zeta];
    let lift = |v: Elem<'f>| (1 + v.chi2().value()) as u64;
    field
        .elements()
        .map(|x| {
            roots
                .iter()
                .map(|&z| {
                    let t = z * x;
                    lift(t * 3 * (t + 1) * (t - 2))
                })
                .product::<u64>()
        })
        .sum()
}

/// Projective point count of the Legendre curve `Y^2 = X(X - 1)(X - 1/3)`.
pub fn n2(field: &FiniteField) -> Result<u64, FamilyError> {
    Ok(legendre_third(field)?.point_count())
}

/// Number of distinct j-invariants in the family.
pub fn count_jbar_formula(q: u64) -> u64 {
    if q % 3 == 1 {
        (3 * q + 1) / 4
    } else {
        (q - 1) / 2
    }
}

/// Number of F_q-isomorphism classes given the relevant auxiliary count.
pub fn count_fq_from(q: u64, n1: Option<u64>, n2: Option<u64>) -> Result<i64, Inexact> {
    let qi = q as i64;
    if q % 3 == 2 {
        let n2 = n2.expect("q = 2 mod 3 needs N2") as i64;
        return exact_div(4 * (qi - 1) - n2, 4);
    }
    let n1 = n1.expect("q = 1 mod 3 needs N1") as i64;
    let lead = if q % 24 == 1 {
        16 * (5 * qi - 2)
    } else if q % 24 == 13 {
        16 * (5 * qi + 1)
    } else {
        80 * (qi - 1)
    };
    exact_div(lead - (n1 - 25), 96)
}

/// Auxiliary counts `(N1, N2)` for `q`; exactly one of them is present.
pub fn auxiliary_counts(field: &FiniteField) -> Result<(Option<u64>, Option<u64>), FamilyError> {
    require_characteristic(Family::Tripling, field.characteristic())?;
    if field.order() % 3 == 1 {
        Ok((Some(n1(field)?), None))
    } else {
        Ok((None, Some(n2(field)?)))
    }
}

/// Closed-form number of F_q-isomorphism classes.
pub fn count_fq_formula(field: &FiniteField) -> Result<Result<i64, Inexact>, FamilyError> {
    let (n1, n2) = auxiliary_counts(field)?;
    Ok(count_fq_from(field.order(), n1, n2))
}
