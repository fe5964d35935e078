//! The doubling family `E_u: y^2 = x^3 + u x^2 + 16 u x`, `u != 0, 64`, over
//! fields of odd characteristic (characteristic 3 included).
//!
//! j-classes come from the roots of the quadratic `g_u`; counting F_q-classes
//! goes through the number `n_q` of isomorphisms between distinct family
//! members, which is read off the curve `gamma`.

use crate::curve::CubicCurve;
use crate::family::{exact_div, fq_blocks, require_characteristic, Family, FamilyError, Inexact};
use crate::field::{CharValue, Elem, FiniteField};

/// An admissible parameter `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoublingParam<'f> {
    u: Elem<'f>,
}

/// `c2 V^2 + c1 V + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadratic<'f> {
    pub c2: Elem<'f>,
    pub c1: Elem<'f>,
    pub c0: Elem<'f>,
}

impl<'f> Quadratic<'f> {
    pub fn eval(&self, v: Elem<'f>) -> Elem<'f> {
        (self.c2 * v + self.c1) * v + self.c0
    }

    pub fn discriminant(&self) -> Elem<'f> {
        self.c1 * self.c1 - self.c2 * self.c0 * 4
    }

    /// Distinct roots in F_q, ascending. Requires `c2 != 0`.
    pub fn roots(&self) -> Vec<Elem<'f>> {
        let two_a = self.c2 * 2;
        let mut out: Vec<_> = self
            .discriminant()
            .sqrt_all()
            .into_iter()
            .map(|s| (-self.c1 + s) / two_a)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A solution of the parametrisation of isomorphic pairs by `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaSolution<'f> {
    pub a_squared: Elem<'f>,
    pub b: Elem<'f>,
    pub u: Elem<'f>,
    pub v: Elem<'f>,
}

impl AlphaSolution<'_> {
    /// The pair is isomorphic over F_q exactly when `a^2` is a square.
    pub fn fq_isomorphic(&self) -> bool {
        self.a_squared.chi2() == CharValue::Residue
    }
}

fn is_admissible(u: Elem<'_>) -> bool {
    !u.is_zero() && u != u.field().int(64)
}

impl<'f> DoublingParam<'f> {
    pub fn new(u: Elem<'f>) -> Result<Self, FamilyError> {
        require_characteristic(Family::Doubling, u.field().characteristic())?;
        if !is_admissible(u) {
            return Err(FamilyError::Excluded(u.to_string()));
        }
        Ok(DoublingParam { u })
    }

    pub fn u(&self) -> Elem<'f> {
        self.u
    }

    /// `(a2, a4, a6) = (u, 16u, 0)`.
    pub fn curve(&self) -> CubicCurve<'f> {
        let u = self.u;
        CubicCurve::new(u, u * 16, u.field().zero()).expect("single field")
    }

    /// `(u - 48)^3 / (u - 64)`.
    pub fn j(&self) -> Elem<'f> {
        let u = self.u;
        (u - 48).pow(3) / (u - 64)
    }

    /// `g_u(V)`, whose roots are the other parameters sharing `j(E_u)`.
    pub fn g_poly(&self) -> Quadratic<'f> {
        let u = self.u;
        Quadratic {
            c2: u - 64,
            c1: u * u - u * 208 + 9216,
            c0: u * u * -64 + u * 9216 - 331776,
        }
    }

    /// `u (u - 64) (u - 48)^2`.
    pub fn delta(&self) -> Elem<'f> {
        let u = self.u;
        u * (u - 64) * (u - 48) * (u - 48)
    }

    /// Parameters `v` with `j(E_v) = j(E_u)`, ascending.
    pub fn jbar_class(&self) -> Vec<Elem<'f>> {
        let mut members: Vec<_> = self
            .g_poly()
            .roots()
            .into_iter()
            .filter(|&v| is_admissible(v))
            .collect();
        members.push(self.u);
        members.sort_unstable();
        members.dedup();
        members
    }

    /// The j-class split into F_q-isomorphism blocks.
    pub fn fq_blocks(&self) -> Result<Vec<Vec<Elem<'f>>>, FamilyError> {
        Ok(fq_blocks(&self.jbar_class(), curve_of)?)
    }
}

fn curve_of(v: Elem<'_>) -> CubicCurve<'_> {
    DoublingParam { u: v }.curve()
}

/// All admissible parameters in canonical order.
pub fn params(field: &FiniteField) -> Result<Vec<DoublingParam<'_>>, FamilyError> {
    require_characteristic(Family::Doubling, field.characteristic())?;
    Ok(field
        .elements()
        .filter(|&u| is_admissible(u))
        .map(|u| DoublingParam { u })
        .collect())
}

/// Number of j-classes of size three.
pub fn c3_formula(q: u64) -> u64 {
    match q % 3 {
        0 => (q - 3) / 6,
        1 => (q - 7) / 6,
        _ => (q - 5) / 6,
    }
}

/// Number of j-classes of size one.
pub fn c1_formula(q: u64) -> u64 {
    q - 2 - 3 * c3_formula(q)
}

/// Number of distinct j-invariants in the family.
pub fn count_jbar_formula(q: u64) -> u64 {
    match q % 3 {
        0 => (2 * q - 3) / 3,
        1 => (2 * q + 1) / 3,
        _ => (2 * q - 1) / 3,
    }
}

/// `(c1, c3)` and any other size observed, from the j-classes of every parameter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassSizes {
    pub c1: u64,
    pub c3: u64,
    pub other: u64,
}

pub fn class_sizes(field: &FiniteField) -> Result<ClassSizes, FamilyError> {
    let mut sizes = ClassSizes::default();
    for d in params(field)? {
        let class = d.jbar_class();
        // count each class once, at its smallest member
        if class[0] != d.u {
            continue;
        }
        match class.len() {
            1 => sizes.c1 += 1,
            3 => sizes.c3 += 1,
            _ => sizes.other += 1,
        }
    }
    Ok(sizes)
}

/// `u = -b^2/(b + 16)`, `a^2 = b(b + 32) / (32(b + 24))`, `v = (u + 3b)/a^2`.
/// `None` when `a^2 = 0` or `u`, `v` are not admissible parameters.
pub fn pair_from_b(b: Elem<'_>) -> Result<Option<AlphaSolution<'_>>, FamilyError> {
    require_characteristic(Family::Doubling, b.field().characteristic())?;
    if [0, -16, -24, -32].iter().any(|&c| (b - c).is_zero()) {
        return Err(FamilyError::Domain(format!("b = {b}")));
    }
    let u = -(b * b) / (b + 16);
    let a_squared = b * (b + 32) / ((b + 24) * 32);
    if a_squared.is_zero() || !is_admissible(u) {
        return Ok(None);
    }
    let v = (u + b * 3) / a_squared;
    if !is_admissible(v) {
        return Ok(None);
    }
    Ok(Some(AlphaSolution { a_squared, b, u, v }))
}

/// `Y^2 = X(X + 1)(X + 3/4)`; also the smooth model of `gamma` for `p > 3`.
pub fn legendre_three_quarters(field: &FiniteField) -> Result<CubicCurve<'_>, FamilyError> {
    if field.characteristic() <= 3 {
        return Err(FamilyError::Characteristic {
            family: Family::Doubling,
            min: 5,
            p: field.characteristic(),
        });
    }
    let t = field.ratio(3, 4)?;
    Ok(CubicCurve::new(t + 1, t, field.zero())?)
}

/// `N = #L(F_q)`, projective.
pub fn n_legendre(field: &FiniteField) -> Result<u64, FamilyError> {
    Ok(legendre_three_quarters(field)?.point_count())
}

/// Affine points of `gamma`: `a^2 = b(b + 1)(b + 3/4)` for `p > 3`,
/// `a^2 = 1 - b` for `p = 3`.
pub fn gamma_affine_count(field: &FiniteField) -> Result<u64, FamilyError> {
    require_characteristic(Family::Doubling, field.characteristic())?;
    if field.characteristic() == 3 {
        let count = field
            .elements()
            .map(|b| (1 + (field.one() - b).chi2().value()) as u64)
            .sum();
        return Ok(count);
    }
    Ok(legendre_three_quarters(field)?.affine_point_count())
}

/// Number of rational points among the excluded points of `gamma`.
pub fn exceptional_count(field: &FiniteField) -> Result<u64, FamilyError> {
    require_characteristic(Family::Doubling, field.characteristic())?;
    let is_sq = |n: i64| u64::from(field.int(n).chi2() == CharValue::Residue);
    if field.characteristic() == 3 {
        Ok(3 + 2 * is_sq(-1))
    } else {
        Ok(3 + 4 * is_sq(-1) + 4 * is_sq(-3))
    }
}

/// `n_q` as `#gamma(F_q)` minus the exceptional points.
pub fn n_q_direct(field: &FiniteField) -> Result<u64, FamilyError> {
    Ok(gamma_affine_count(field)? - exceptional_count(field)?)
}

/// `n_q` from the residue-class case list.
pub fn n_q_closed(field: &FiniteField) -> Result<u64, FamilyError> {
    let q = field.order();
    if field.characteristic() == 3 {
        return Ok(if field.degree() % 2 == 0 {
            q - 5
        } else {
            q - 3
        });
    }
    let gamma = gamma_affine_count(field)?;
    Ok(match q % 12 {
        1 => gamma - 11,
        5 | 7 => gamma - 7,
        _ => gamma - 3,
    })
}

/// Isomorphisms between distinct members of a common j-class, `12 c3`.
pub fn nbar(q: u64) -> u64 {
    12 * c3_formula(q)
}

/// Number of F_q-isomorphism classes given `N` (ignored in characteristic 3).
pub fn count_fq_from(q: u64, p: u64, k: u32, n: Option<u64>) -> Result<i64, Inexact> {
    let qi = q as i64;
    if p == 3 {
        let c = if k % 2 == 0 { 27 } else { 33 };
        return exact_div(19 * qi - c, 24);
    }
    let n = n.expect("p > 3 needs N") as i64;
    let c = match q % 12 {
        1 => 1,
        5 => -7,
        7 => -5,
        _ => -13,
    };
    exact_div(2 * (11 * qi + c) - 3 * n, 24)
}

/// `N` for `p > 3`, `None` in characteristic 3.
pub fn auxiliary_count(field: &FiniteField) -> Result<Option<u64>, FamilyError> {
    require_characteristic(Family::Doubling, field.characteristic())?;
    if field.characteristic() == 3 {
        Ok(None)
    } else {
        Ok(Some(n_legendre(field)?))
    }
}

/// Closed-form number of F_q-isomorphism classes.
pub fn count_fq_formula(field: &FiniteField) -> Result<Result<i64, Inexact>, FamilyError> {
    let n = auxiliary_count(field)?;
    Ok(count_fq_from(
        field.order(),
        field.characteristic(),
        field.degree(),
        n,
    ))
}

/// `jbar + (nbar - n_q)/8`, the route from the j-count to the F_q-count.
pub fn count_fq_from_chain(q: u64, n_q: u64) -> Result<i64, Inexact> {
    let diff = exact_div(nbar(q) as i64 - n_q as i64, 8)?;
    Ok(count_jbar_formula(q) as i64 + diff)
}
