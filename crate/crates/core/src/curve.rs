//! The coordinate ring `R = F_q[x, y]/(F)` and its ideals.
//!
//! An ideal `a` of `R` is stored as its contraction `a^c`, the full
//! preimage in `F_q[x, y]`, which always contains `F` and determines `a`.
//! All ring-level operations are the matching polynomial-level operations
//! on contractions: `(a + b)^c = a^c + b^c`, `(a : b)^c = (a^c : b^c)`,
//! `rad(a)^c = rad(a^c)`, `(a ∩ b)^c = a^c ∩ b^c`, and
//! `(ab)^c = a^c b^c + (F)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};
use crate::groebner::{PolyIdeal, StandardMonomialBasis};
use crate::poly::{MonomialOrder, MultiPoly, PolyRing, X, Y};

/// Outcome of the affine smoothness check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Unchecked,
    Smooth,
}

struct CurveData {
    poly_ring: PolyRing,
    defining: MultiPoly,
    smoothness: Smoothness,
}

/// Handle to `F_q[x, y]/(F)`. Cloning is cheap.
#[derive(Clone)]
pub struct CurveRing(Arc<CurveData>);

impl PartialEq for CurveRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.defining == other.0.defining
    }
}

impl Eq for CurveRing {}

impl fmt::Debug for CurveRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[x,y]/({})", self.field(), self.0.defining)
    }
}

impl CurveRing {
    /// Builds the ring for a nonconstant `F`. With `check_smooth`, rejects
    /// curves whose Jacobian ideal `(F, F_x, F_y)` is proper.
    pub fn new(defining: &MultiPoly, check_smooth: bool) -> Result<Self> {
        if defining.is_constant() {
            return Err(Error::ConstantCurve);
        }
        let poly_ring = PolyRing::bivariate(defining.field().clone(), MonomialOrder::LEX_YX);
        let defining = defining.into_ring(&poly_ring)?;
        let mut smoothness = Smoothness::Unchecked;
        if check_smooth {
            let jac = PolyIdeal::new(&poly_ring, &[defining.clone(), defining.derivative(X), defining.derivative(Y)])?;
            if !jac.is_unit() {
                return Err(Error::SingularCurve);
            }
            smoothness = Smoothness::Smooth;
        }
        Ok(CurveRing(Arc::new(CurveData { poly_ring, defining, smoothness })))
    }

    pub fn field(&self) -> &FiniteField {
        &self.0.poly_ring.field
    }

    /// `q`, the order of the constant field.
    pub fn q(&self) -> u32 {
        self.field().order()
    }

    /// The ambient `F_q[x, y]`, ordered lex with `y > x`.
    pub fn poly_ring(&self) -> &PolyRing {
        &self.0.poly_ring
    }

    pub fn defining_polynomial(&self) -> &MultiPoly {
        &self.0.defining
    }

    pub fn smoothness(&self) -> Smoothness {
        self.0.smoothness
    }

    /// The ideal of `R` generated by the images of `gens`.
    pub fn ideal(&self, gens: &[MultiPoly]) -> Result<RingIdeal> {
        let mut all = Vec::with_capacity(gens.len() + 1);
        for g in gens {
            if g.field() != self.field() {
                return Err(Error::FieldMismatch);
            }
            all.push(g.into_ring(self.poly_ring())?);
        }
        all.push(self.0.defining.clone());
        Ok(self.wrap(PolyIdeal::new(self.poly_ring(), &all)?))
    }

    pub fn unit_ideal(&self) -> RingIdeal {
        self.wrap(PolyIdeal::unit(self.poly_ring()))
    }

    /// Wraps a contraction; the caller guarantees it contains `F`.
    fn wrap(&self, contraction: PolyIdeal) -> RingIdeal {
        debug_assert!(contraction.contains(&self.0.defining).unwrap_or(false));
        RingIdeal { ring: self.clone(), contraction }
    }

    /// `u_k = (x^{q^k} - x, y^{q^k} - y)` built directly. The degree is
    /// `q^k`, so this is only usable for very small fields.
    pub fn frobenius_ideal_materialized(&self, k: u32) -> Result<RingIdeal> {
        if k == 0 {
            return Err(Error::NonPositiveExponent);
        }
        let qk = (self.q() as u64)
            .checked_pow(k)
            .filter(|&e| e <= 1 << 12)
            .ok_or_else(|| Error::ScaleExceeded(format!("q^k = {}^{} too large to materialize", self.q(), k)))?;
        let r = self.poly_ring();
        let (x, y) = (r.var(X), r.var(Y));
        // Reduce y^{q^k} by F before the Gröbner computation.
        let f_ideal = PolyIdeal::new(r, std::slice::from_ref(&self.0.defining))?;
        let yk = pow_reduced(&f_ideal, &y, &BigUint::from(qk));
        self.ideal(&[&x.pow(qk) - &x, &yk - &y])
    }

    /// `u_k + relative_to`, computed as `relative_to + (x̄^{q^k} - x̄, ȳ^{q^k} - ȳ)`
    /// with both powers taken in `R/relative_to`.
    pub fn frobenius_ideal(&self, k: u32, relative_to: &RingIdeal) -> Result<RingIdeal> {
        if k == 0 {
            return Err(Error::NonPositiveExponent);
        }
        relative_to.require_nonzero()?;
        if relative_to.is_unit() {
            return Ok(relative_to.clone());
        }
        let e = BigUint::from(self.q()).pow(k);
        let r = self.poly_ring();
        let (x, y) = (r.var(X), r.var(Y));
        let nx = &relative_to.residue_pow(&x, &e)? - &x;
        let ny = &relative_to.residue_pow(&y, &e)? - &y;
        let extra = PolyIdeal::new(r, &[nx, ny])?;
        Ok(self.wrap(relative_to.contraction.sum(&extra)?))
    }
}

/// A nonzero-or-zero ideal of `R`, represented by its contraction.
#[derive(Clone, PartialEq, Eq)]
pub struct RingIdeal {
    ring: CurveRing,
    contraction: PolyIdeal,
}

impl fmt::Debug for RingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.contraction)
    }
}

impl fmt::Display for RingIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generator_strings().join(", "))
    }
}

/// The finite ring `R/a ≅ F_q[x, y]/a^c`.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    ideal: RingIdeal,
    basis: StandardMonomialBasis,
}

impl ResidueRing {
    pub fn ideal(&self) -> &RingIdeal {
        &self.ideal
    }

    pub fn standard_monomials(&self) -> &StandardMonomialBasis {
        &self.basis
    }

    /// `D` with `|R/a| = q^D`.
    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.ideal.ring.q()).pow(self.dimension() as u32)
    }
}

fn pow_reduced(ideal: &PolyIdeal, b: &MultiPoly, e: &BigUint) -> MultiPoly {
    let base = ideal.reduce_unchecked(b);
    let mut acc = ideal.reduce_unchecked(&base.ring().one());
    for i in (0..e.bits()).rev() {
        acc = ideal.reduce_unchecked(&(&acc * &acc));
        if e.bit(i) {
            acc = ideal.reduce_unchecked(&(&acc * &base));
        }
    }
    acc
}

impl RingIdeal {
    pub fn ring(&self) -> &CurveRing {
        &self.ring
    }

    /// The contraction `a^c ⊂ F_q[x, y]`.
    pub fn contraction(&self) -> &PolyIdeal {
        &self.contraction
    }

    /// Canonical generators: the reduced lex (`y > x`) basis of `a^c`, in
    /// increasing monomial order.
    pub fn generators(&self) -> &[MultiPoly] {
        self.contraction.basis()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(|g| g.to_string()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.contraction.is_unit()
    }

    /// True when `a^c = (F)`.
    pub fn is_zero(&self) -> bool {
        self.contraction.basis().len() == 1 && self.contraction.basis()[0] == self.ring.0.defining.monic()
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        self.require_nonzero()?;
        if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_ring(&self, other: &RingIdeal) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    fn rewrap(&self, contraction: PolyIdeal) -> RingIdeal {
        self.ring.wrap(contraction)
    }

    pub fn sum(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.check_ring(other)?;
        Ok(self.rewrap(self.contraction.sum(&other.contraction)?))
    }

    pub fn product(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.check_ring(other)?;
        let prod = self.contraction.product(&other.contraction)?;
        let f = PolyIdeal::new(self.ring.poly_ring(), std::slice::from_ref(&self.ring.0.defining))?;
        Ok(self.rewrap(prod.sum(&f)?))
    }

    pub fn pow(&self, e: u32) -> Result<RingIdeal> {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.check_ring(other)?;
        Ok(self.rewrap(self.contraction.intersect(&other.contraction)?))
    }

    /// `(self : other)`; `other` must be nonzero.
    pub fn colon(&self, other: &RingIdeal) -> Result<RingIdeal> {
        self.check_ring(other)?;
        other.require_nonzero()?;
        Ok(self.rewrap(self.contraction.colon(&other.contraction)?))
    }

    pub fn radical(&self) -> Result<RingIdeal> {
        self.require_nonzero()?;
        Ok(self.rewrap(self.contraction.radical()?))
    }

    pub fn is_radical(&self) -> Result<bool> {
        Ok(&self.radical()? == self)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &RingIdeal) -> Result<bool> {
        self.check_ring(other)?;
        self.contraction.contains_ideal(&other.contraction)
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        self.contraction.contains(&f.into_ring(self.ring.poly_ring())?)
    }

    /// Normal form of `f` modulo `a^c`.
    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.contraction.reduce(&f.into_ring(self.ring.poly_ring())?)
    }

    pub fn residue_ring(&self) -> Result<ResidueRing> {
        self.require_nonzero()?;
        Ok(ResidueRing { ideal: self.clone(), basis: self.contraction.standard_monomials()? })
    }

    /// `D` with `|R/a| = q^D`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.residue_ring()?.dimension())
    }

    /// Normal form of `b^e` modulo `a^c`, by square-and-multiply with a
    /// reduction after every product.
    pub fn residue_pow(&self, b: &MultiPoly, e: &BigUint) -> Result<MultiPoly> {
        self.require_nonzero()?;
        let b = b.into_ring(self.ring.poly_ring())?;
        Ok(pow_reduced(&self.contraction, &b, e))
    }

    /// A uniformly random nonzero class of `R/a`, returned as a normal form.
    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Result<MultiPoly> {
        self.require_proper()?;
        let basis = self.contraction.standard_monomials()?;
        let field = self.ring.field();
        let q = field.order();
        let r = self.ring.poly_ring();
        loop {
            let coeffs: Vec<Elem> =
                basis.monomials().iter().map(|_| field.from_code(rng.gen_range(0..q)).unwrap()).collect();
            if coeffs.iter().all(|c| c.is_zero()) {
                continue;
            }
            return Ok(r.from_terms(basis.monomials().iter().copied().zip(coeffs)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve(p: u32, build: impl Fn(&PolyRing, &MultiPoly, &MultiPoly) -> MultiPoly) -> CurveRing {
        let r = PolyRing::bivariate(FiniteField::prime(p).unwrap(), MonomialOrder::LEX_YX);
        let f = build(&r, &r.var(X), &r.var(Y));
        CurveRing::new(&f, true).unwrap()
    }

    fn elliptic19() -> CurveRing {
        curve(19, |r, x, y| &(&(&y.pow(2) + y) - &x.pow(3)) + &(&(&r.int(2) * &x.pow(2)) - &r.int(1)))
    }

    #[test]
    fn constructs_sample_rings_and_rejects_cusp() {
        let hyper = curve(13, |r, x, y| &y.pow(2) - &(&(&x.pow(5) - x) * &(&x.pow(4) + &r.int(2))));
        assert_eq!(hyper.smoothness(), Smoothness::Smooth);
        elliptic19();
        let r = PolyRing::bivariate(FiniteField::prime(5).unwrap(), MonomialOrder::LEX_YX);
        let cusp = &r.var(Y).pow(2) - &r.var(X).pow(3);
        assert!(matches!(CurveRing::new(&cusp, true), Err(Error::SingularCurve)));
        assert!(CurveRing::new(&cusp, false).is_ok());
        assert!(matches!(CurveRing::new(&r.int(3), false), Err(Error::ConstantCurve)));
    }

    #[test]
    fn ideal_construction() {
        let ring = elliptic19();
        let r = ring.poly_ring().clone();
        assert!(ring.ideal(&[r.one()]).unwrap().is_unit());
        let z = ring.ideal(&[ring.defining_polynomial().clone()]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.radical().unwrap_err(), Error::ZeroIdeal);
        assert_eq!(z.residue_ring().unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn ring_operations_basic_identities() {
        let ring = elliptic19();
        let r = ring.poly_ring().clone();
        let a = ring.ideal(&[&r.var(X) + &r.int(1)]).unwrap();
        let unit = ring.unit_ideal();
        assert_eq!(a.sum(&unit).unwrap(), unit);
        assert_eq!(a.colon(&a).unwrap(), unit);
        assert_eq!(a.product(&unit).unwrap(), a);
        assert_eq!(a.residue_ring().unwrap().dimension(), 2);
        assert_eq!(a.residue_ring().unwrap().cardinality(), BigUint::from(361u32));
        assert_eq!(unit.residue_ring().unwrap().cardinality(), BigUint::from(1u32));
    }

    #[test]
    fn residue_pow_edge_cases() {
        let ring = elliptic19();
        let r = ring.poly_ring().clone();
        let a = ring.ideal(&[&r.var(X) + &r.int(1)]).unwrap();
        let b = &r.var(Y) + &r.int(3);
        assert!(a.residue_pow(&b, &BigUint::from(0u32)).unwrap().is_one());
        let inside = &r.var(X) + &r.int(1);
        assert!(a.residue_pow(&inside, &BigUint::from(5u32)).unwrap().is_zero());
        // a is prime of degree 2, so R/a is F_{19^2}.
        let e = BigUint::from(19u32 * 19 - 1);
        assert!(a.residue_pow(&b, &e).unwrap().is_one());
        let e1 = BigUint::from(37u32);
        let e2 = BigUint::from(1000u32);
        let lhs = a.residue_pow(&b, &(&e1 + &e2)).unwrap();
        let rhs = a.reduce(&(&a.residue_pow(&b, &e1).unwrap() * &a.residue_pow(&b, &e2).unwrap())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_ideal_on_second_example_g1() {
        let ring = elliptic19();
        let r = ring.poly_ring().clone();
        let x = r.var(X);
        let g1 = ring.ideal(&[&(&(&x.pow(3) + &(&r.int(6) * &x.pow(2))) + &(&r.int(3) * &x)) + &r.int(17)]).unwrap();
        let h2 = ring.frobenius_ideal(2, &g1).unwrap();
        assert_eq!(h2, ring.ideal(&[&x + &r.int(1)]).unwrap());
        // No prime of degree 1 or 3 divides g1.
        assert!(ring.frobenius_ideal(1, &g1).unwrap().is_unit());
        assert!(ring.frobenius_ideal(3, &g1).unwrap().is_unit());
        // u_4 covers degrees 1, 2 and 4, hence every prime of g1.
        assert_eq!(ring.frobenius_ideal(4, &g1).unwrap(), g1);
        let h4 = ring.ideal(&[&(&x.pow(2) + &(&r.int(5) * &x)) + &r.int(17)]).unwrap();
        assert_eq!(ring.frobenius_ideal(4, &g1.colon(&h2).unwrap()).unwrap(), h4);
        assert_eq!(ring.frobenius_ideal(0, &g1).unwrap_err(), Error::NonPositiveExponent);
    }

    #[test]
    fn random_element_is_reproducible_and_outside() {
        let ring = elliptic19();
        let r = ring.poly_ring().clone();
        let a = ring.ideal(&[&r.var(X).pow(2) + &r.int(1)]).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..5).map(|_| a.random_element(&mut rng).unwrap()).collect::<Vec<_>>()
        };
        let s = draw(7);
        assert_eq!(s, draw(7));
        for b in &s {
            assert!(!a.contains(b).unwrap());
            assert_eq!(&a.reduce(b).unwrap(), b);
        }
        assert_eq!(ring.unit_ideal().random_element(&mut ChaCha8Rng::seed_from_u64(0)).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn random_element_covers_every_class() {
        // y^2 = x^3 - x + 1 over F_3; (x) has D = 2 and (x)(x - 1, y - 1) has D = 3.
        let ring = curve(3, |r, x, y| &(&y.pow(2) - &x.pow(3)) + &(x - &r.int(1)));
        let r = ring.poly_ring().clone();
        let (x, y) = (r.var(X), r.var(Y));
        let a2 = ring.ideal(std::slice::from_ref(&x)).unwrap();
        let pt = ring.ideal(&[&x - &r.int(1), &y - &r.int(1)]).unwrap();
        let a3 = a2.product(&pt).unwrap();
        // 0.999 quantiles of chi-square with 7 and 25 degrees of freedom.
        for (a, dim, bound) in [(a2, 2, 24.32), (a3, 3, 52.62)] {
            let res = a.residue_ring().unwrap();
            assert_eq!(res.dimension(), dim);
            let classes = 3usize.pow(dim as u32) - 1;
            let n = 300 * classes;
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let mut counts = std::collections::HashMap::new();
            for _ in 0..n {
                let b = a.random_element(&mut rng).unwrap();
                let key: Vec<u32> = res.standard_monomials().monomials().iter().map(|m| b.coeff(m).code()).collect();
                *counts.entry(key).or_insert(0usize) += 1;
            }
            assert_eq!(counts.len(), classes);
            let expected = n as f64 / classes as f64;
            let chi2: f64 = counts.values().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
            assert!(chi2 < bound, "chi-square {chi2} for D = {dim}");
        }
    }
}
