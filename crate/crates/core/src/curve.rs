//! Weierstrass curves `y^2 = x^3 + a2 x^2 + a4 x + a6` over F_q, char >= 3.
//!
//! Both curve families and every auxiliary curve used for point counts fit
//! this shape (a1 = a3 = 0), so isomorphisms reduce to substitutions
//! `(x, y) -> (alpha^2 x + r, alpha^3 y)`.

use thiserror::Error;

use crate::field::{CharValue, Elem, FieldError, FiniteField};

/// Largest field order accepted by the exhaustive isomorphism search.
pub const BRUTE_FORCE_BOUND: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("the curve is singular")]
    Singular,
    #[error("short Weierstrass form requires characteristic at least 5")]
    CharacteristicThree,
    #[error("characteristic-3 isomorphism test requires a2 != 0 on both curves")]
    UnsupportedShape,
    #[error("exhaustive isomorphism search is limited to q <= {bound}, got q = {q}")]
    OracleBound { q: u64, bound: u64 },
    #[error("twist parameter must be a non-square")]
    SquareTwist,
}

/// The change of variables `(x, y) -> (alpha^2 x + r, alpha^3 y)`.
///
/// Applied to a source curve it produces the target coefficients
/// `a2' = (a2 + 3r)/alpha^2`, `a4' = (3r^2 + 2 a2 r + a4)/alpha^4`,
/// `a6' = (r^3 + a2 r^2 + a4 r + a6)/alpha^6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoWitness<'f> {
    pub alpha: Elem<'f>,
    pub r: Elem<'f>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubicCurve<'f> {
    a2: Elem<'f>,
    a4: Elem<'f>,
    a6: Elem<'f>,
}

/// `y^2 = x^3 + a x + b`, characteristic at least 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShortW<'f> {
    pub a: Elem<'f>,
    pub b: Elem<'f>,
}

impl<'f> ShortW<'f> {
    pub fn new(a: Elem<'f>, b: Elem<'f>) -> Result<Self, CurveError> {
        if !a.same_field(&b) {
            return Err(FieldError::MixedFields.into());
        }
        if a.field().characteristic() < 5 {
            return Err(CurveError::CharacteristicThree);
        }
        Ok(ShortW { a, b })
    }

    pub fn discriminant(&self) -> Elem<'f> {
        (self.a.pow(3) * 4 + self.b * self.b * 27) * -16
    }

    pub fn j_invariant(&self) -> Result<Elem<'f>, CurveError> {
        let d = self.a.pow(3) * 4 + self.b * self.b * 27;
        if d.is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(self.a.pow(3) * 4 * 1728 / d)
    }

    pub fn to_cubic(&self) -> CubicCurve<'f> {
        CubicCurve {
            a2: self.a.field().zero(),
            a4: self.a,
            a6: self.b,
        }
    }
}

impl<'f> CubicCurve<'f> {
    /// Any coefficients over a common field; singular curves are allowed here
    /// and reported by [`CubicCurve::is_singular`].
    pub fn new(a2: Elem<'f>, a4: Elem<'f>, a6: Elem<'f>) -> Result<Self, CurveError> {
        if !a2.same_field(&a4) || !a2.same_field(&a6) {
            return Err(FieldError::MixedFields.into());
        }
        if a2.field().characteristic() < 3 {
            return Err(CurveError::Field(FieldError::NotOddPrime(2)));
        }
        Ok(CubicCurve { a2, a4, a6 })
    }

    pub fn field(&self) -> &'f FiniteField {
        self.a2.field()
    }

    pub fn a2(&self) -> Elem<'f> {
        self.a2
    }

    pub fn a4(&self) -> Elem<'f> {
        self.a4
    }

    pub fn a6(&self) -> Elem<'f> {
        self.a6
    }

    /// `x^3 + a2 x^2 + a4 x + a6`.
    pub fn rhs(&self, x: Elem<'f>) -> Elem<'f> {
        ((x + self.a2) * x + self.a4) * x + self.a6
    }

    /// `(b2, b4, b6, b8)` with `a1 = a3 = 0`.
    pub fn b_invariants(&self) -> (Elem<'f>, Elem<'f>, Elem<'f>, Elem<'f>) {
        let (a2, a4, a6) = (self.a2, self.a4, self.a6);
        (a2 * 4, a4 * 2, a6 * 4, a2 * a6 * 4 - a4 * a4)
    }

    pub fn discriminant(&self) -> Elem<'f> {
        let (b2, b4, b6, b8) = self.b_invariants();
        -(b2 * b2 * b8) - b4.pow(3) * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    pub fn j_invariant(&self) -> Result<Elem<'f>, CurveError> {
        let delta = self.discriminant();
        if delta.is_zero() {
            return Err(CurveError::Singular);
        }
        let (b2, b4, _, _) = self.b_invariants();
        Ok((b2 * b2 - b4 * 24).pow(3) / delta)
    }

    /// Completes the cube: `x -> x - a2/3`.
    pub fn to_short(&self) -> Result<ShortW<'f>, CurveError> {
        if self.field().characteristic() < 5 {
            return Err(CurveError::CharacteristicThree);
        }
        let f = self.field();
        let third = f.ratio(1, 3)?;
        let a2 = self.a2;
        let a = self.a4 - a2 * a2 * third;
        let b = self.a6 - a2 * self.a4 * third + a2.pow(3) * f.ratio(2, 27)?;
        Ok(ShortW { a, b })
    }

    /// Image of this curve under the substitution.
    pub fn apply(&self, w: &IsoWitness<'f>) -> CubicCurve<'f> {
        let (alpha, r) = (w.alpha, w.r);
        let a2_inv = (alpha * alpha).inv().expect("witness alpha is nonzero");
        let a4_inv = a2_inv * a2_inv;
        CubicCurve {
            a2: (self.a2 + r * 3) * a2_inv,
            a4: (r * r * 3 + self.a2 * r * 2 + self.a4) * a4_inv,
            a6: self.rhs(r) * a4_inv * a2_inv,
        }
    }

    fn check_pair(&self, other: &CubicCurve<'_>) -> Result<(), CurveError> {
        if !self.a2.same_field(&other.a2) {
            return Err(FieldError::MixedFields.into());
        }
        if self.is_singular() || other.is_singular() {
            return Err(CurveError::Singular);
        }
        Ok(())
    }

    /// Decides F_q-isomorphism and returns a witness mapping `self` onto `other`.
    pub fn isomorphic_fq(
        &self,
        other: &CubicCurve<'f>,
    ) -> Result<Option<IsoWitness<'f>>, CurveError> {
        self.check_pair(other)?;
        let witness = if self.field().characteristic() == 3 {
            self.iso_char3(other)?
        } else {
            self.iso_short(other)?
        };
        debug_assert!(witness.is_none_or(|w| self.apply(&w) == *other));
        Ok(witness)
    }

    fn iso_short(&self, other: &CubicCurve<'f>) -> Result<Option<IsoWitness<'f>>, CurveError> {
        let (s, t) = (self.to_short()?, other.to_short()?);
        if s.j_invariant()? != t.j_invariant()? {
            return Ok(None);
        }
        // need alpha with t.a = s.a / alpha^4 and t.b = s.b / alpha^6
        let alpha = if s.a.is_zero() {
            let ratio = s.b / t.b;
            if !ratio.is_nth_power(6) {
                return Ok(None);
            }
            ratio.nth_roots(6)[0]
        } else if s.b.is_zero() {
            let ratio = s.a / t.a;
            if !ratio.is_nth_power(4) {
                return Ok(None);
            }
            ratio.nth_roots(4)[0]
        } else {
            // lambda = alpha^-2
            let lambda = (t.b / s.b) * (s.a / t.a);
            if lambda * lambda != t.a / s.a || lambda.chi2() != CharValue::Residue {
                return Ok(None);
            }
            lambda.inv()?.sqrt_all()[0]
        };
        let third = self.field().ratio(1, 3)?;
        let r = (alpha * alpha * other.a2 - self.a2) * third;
        Ok(Some(IsoWitness { alpha, r }))
    }

    fn iso_char3(&self, other: &CubicCurve<'f>) -> Result<Option<IsoWitness<'f>>, CurveError> {
        if self.a2.is_zero() || other.a2.is_zero() {
            return Err(CurveError::UnsupportedShape);
        }
        // 3r = 0, so a2' = a2 / alpha^2 pins alpha^2 and then a4' pins r
        let lambda = self.a2 / other.a2;
        if lambda.chi2() != CharValue::Residue {
            return Ok(None);
        }
        let r = -(other.a4 * lambda * lambda - self.a4) / self.a2;
        if other.a6 * lambda.pow(3) != self.rhs(r) {
            return Ok(None);
        }
        Ok(Some(IsoWitness {
            alpha: lambda.sqrt_all()[0],
            r,
        }))
    }

    /// Isomorphism over the algebraic closure: equal j-invariants.
    pub fn isomorphic_fqbar(&self, other: &CubicCurve<'f>) -> Result<bool, CurveError> {
        self.check_pair(other)?;
        Ok(self.j_invariant()? == other.j_invariant()?)
    }

    /// Tries every `(alpha, r)` in canonical order; reference oracle.
    pub fn brute_force_iso(
        &self,
        other: &CubicCurve<'f>,
    ) -> Result<Option<IsoWitness<'f>>, CurveError> {
        if !self.a2.same_field(&other.a2) {
            return Err(FieldError::MixedFields.into());
        }
        let f = self.field();
        if f.order() > BRUTE_FORCE_BOUND {
            return Err(CurveError::OracleBound {
                q: f.order(),
                bound: BRUTE_FORCE_BOUND,
            });
        }
        for alpha in f.units() {
            for r in f.elements() {
                let w = IsoWitness { alpha, r };
                if self.apply(&w) == *other {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    /// Projective point count `1 + sum_x (1 + chi2(f(x)))`.
    pub fn point_count(&self) -> u64 {
        1 + self.affine_point_count()
    }

    pub fn affine_point_count(&self) -> u64 {
        self.field()
            .elements()
            .map(|x| (1 + self.rhs(x).chi2().value()) as u64)
            .sum()
    }

    /// Twist by a non-square `d`: `(a2, a4, a6) -> (d a2, d^2 a4, d^3 a6)`.
    pub fn quadratic_twist(&self, d: Elem<'f>) -> Result<CubicCurve<'f>, CurveError> {
        if !d.same_field(&self.a2) {
            return Err(FieldError::MixedFields.into());
        }
        if d.chi2() != CharValue::NonResidue {
            return Err(CurveError::SquareTwist);
        }
        Ok(CubicCurve {
            a2: self.a2 * d,
            a4: self.a4 * d * d,
            a6: self.a6 * d.pow(3),
        })
    }
}
