//! Prime factorization of ideals of `R = F_q[x, y]/(F)`.
//!
//! [`factorize`] runs three stages:
//!
//! 1. [`radical_decomposition`] writes `a = g_1 g_2^2 ⋯ g_m^m` with the
//!    `g_j` radical and pairwise coprime, using only radicals, sums and
//!    colon ideals.
//! 2. [`distinct_degree`] splits a radical `g` as `h_1 h_2 ⋯ h_n`, where
//!    every prime dividing `h_k` has residual degree `k`. The `k`-th step
//!    takes `h_k = u_k + a_k` with `u_k = (x^{q^k} - x, y^{q^k} - y)`, the
//!    product of all primes of degree dividing `k`.
//! 3. [`equal_degree`] splits a radical `h` whose primes all have degree
//!    `d`: for `b ∉ h`, `b^{q^d - 1} ≠ 1` in `R/h` exactly when `b` is a
//!    zero divisor, and then `(b) + h` is a proper divisor of `h`. The
//!    random `b` is drawn as in Cantor-Zassenhaus so that it is a zero
//!    divisor about half the time.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::curve::RingIdeal;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Draw budget per splitting attempt, per expected prime factor.
pub const DRAWS_PER_FACTOR: usize = 64;

/// `a = g_1 g_2^2 ⋯ g_m^m`; `factors()[j - 1]` is `g_j` and may be the unit
/// ideal. The last entry is never the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalDecomposition {
    factors: Vec<RingIdeal>,
}

impl RadicalDecomposition {
    pub fn factors(&self) -> &[RingIdeal] {
        &self.factors
    }

    /// `g_j` for multiplicity `j ≥ 1`.
    pub fn get(&self, multiplicity: usize) -> Option<&RingIdeal> {
        self.factors.get(multiplicity.checked_sub(1)?)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.factors.len()
    }

    /// `∏ g_j^j`.
    pub fn product(&self) -> Result<RingIdeal> {
        let mut acc = self.factors[0].ring().unit_ideal();
        for (j, g) in self.factors.iter().enumerate() {
            acc = acc.product(&g.pow(j as u32 + 1)?)?;
        }
        Ok(acc)
    }
}

/// `g = h_1 h_2 ⋯ h_n`; `factors()[k - 1]` is `h_k`, the product of the
/// primes of residual degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctDegreeFactorization {
    input: RingIdeal,
    factors: Vec<RingIdeal>,
}

impl DistinctDegreeFactorization {
    pub fn input(&self) -> &RingIdeal {
        &self.input
    }

    pub fn factors(&self) -> &[RingIdeal] {
        &self.factors
    }

    /// `h_k` for degree `k ≥ 1`.
    pub fn get(&self, degree: usize) -> Option<&RingIdeal> {
        self.factors.get(degree.checked_sub(1)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactor {
    pub prime: RingIdeal,
    pub multiplicity: u32,
    /// Residual degree `d`, with `R/p ≅ F_{q^d}`.
    pub degree: u32,
}

/// `a = ∏ p_i^{k_i}`, sorted by degree, then multiplicity, then the text of
/// the canonical generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    input: RingIdeal,
    factors: Vec<PrimeFactor>,
}

impl Factorization {
    pub fn new(input: RingIdeal, mut factors: Vec<PrimeFactor>) -> Self {
        sort_factors(&mut factors);
        Factorization { input, factors }
    }

    pub fn input(&self) -> &RingIdeal {
        &self.input
    }

    pub fn factors(&self) -> &[PrimeFactor] {
        &self.factors
    }

    /// `∏ p_i^{k_i}`, recomputed with ideal products.
    pub fn product(&self) -> Result<RingIdeal> {
        let mut acc = self.input.ring().unit_ideal();
        for f in &self.factors {
            acc = acc.product(&f.prime.pow(f.multiplicity)?)?;
        }
        Ok(acc)
    }

    /// Whether the product of the factors reproduces the input exactly.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.product()? == self.input)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pf) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{}", pf.prime)?;
            if pf.multiplicity > 1 {
                write!(f, "^{}", pf.multiplicity)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn sort_factors(factors: &mut [PrimeFactor]) {
    factors.sort_by_cached_key(|f| (f.degree, f.multiplicity, f.prime.generator_strings()));
}

/// One event of an equal-degree run, in execution order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdfEvent {
    /// A random element was drawn and tested; `split` records whether it
    /// was a zero divisor.
    Draw { element: String, split: bool },
    /// An ideal of the expected size was returned as prime.
    Prime { dimension: usize },
}

pub fn radical_decomposition(a: &RingIdeal) -> Result<RadicalDecomposition> {
    a.require_proper()?;
    let mut b = a.radical()?;
    let mut rest = a.colon(&b)?;
    let mut factors = Vec::new();
    while !b.is_unit() {
        let b_next = rest.sum(&b)?;
        let rest_next = rest.colon(&b_next)?;
        factors.push(b.colon(&b_next)?);
        b = b_next;
        rest = rest_next;
    }
    Ok(RadicalDecomposition { factors })
}

/// Splits a radical ideal by residual degree. The unit ideal gives an empty
/// list; a non-radical input is rejected.
pub fn distinct_degree(g: &RingIdeal) -> Result<DistinctDegreeFactorization> {
    g.require_nonzero()?;
    let ring = g.ring();
    let mut factors = Vec::new();
    if !g.is_unit() {
        if !g.is_radical()? {
            return Err(Error::NotRadical);
        }
        let mut rest = g.clone();
        let mut k = 1;
        while !rest.is_unit() {
            let h = ring.frobenius_ideal(k, &rest)?;
            rest = rest.colon(&h)?;
            factors.push(h);
            k += 1;
        }
    }
    Ok(DistinctDegreeFactorization { input: g.clone(), factors })
}

/// Prime factors of a radical ideal all of whose primes have degree `d`.
pub fn equal_degree<G: Rng + ?Sized>(h: &RingIdeal, d: u32, rng: &mut G) -> Result<Vec<RingIdeal>> {
    equal_degree_traced(h, d, rng, &mut Vec::new())
}

/// [`equal_degree`], also recording every draw and leaf in `trace`.
pub fn equal_degree_traced<G: Rng + ?Sized>(
    h: &RingIdeal,
    d: u32,
    rng: &mut G,
    trace: &mut Vec<EdfEvent>,
) -> Result<Vec<RingIdeal>> {
    if d == 0 {
        return Err(Error::NonPositiveExponent);
    }
    h.require_nonzero()?;
    let mut out = Vec::new();
    split(h, d as usize, rng, trace, &mut out)?;
    Ok(out)
}

/// Like [`equal_degree`] but first checks that `|R/h|` is a power of `q^d`
/// and that `h` is radical; for callers that did not obtain `h` from
/// [`distinct_degree`].
pub fn equal_degree_checked<G: Rng + ?Sized>(h: &RingIdeal, d: u32, rng: &mut G) -> Result<Vec<RingIdeal>> {
    h.require_proper()?;
    if d == 0 {
        return Err(Error::NonPositiveExponent);
    }
    let dim = h.dimension()?;
    if dim % d as usize != 0 {
        return Err(Error::InconsistentDegree { dim, degree: d as usize });
    }
    if !h.is_radical()? {
        return Err(Error::NotRadical);
    }
    equal_degree(h, d, rng)
}

fn split<G: Rng + ?Sized>(
    h: &RingIdeal,
    d: usize,
    rng: &mut G,
    trace: &mut Vec<EdfEvent>,
    out: &mut Vec<RingIdeal>,
) -> Result<()> {
    let dim = h.dimension()?;
    if dim == d {
        trace.push(EdfEvent::Prime { dimension: dim });
        out.push(h.clone());
        return Ok(());
    }
    if dim == 0 || dim % d != 0 {
        return Err(Error::InconsistentDegree { dim, degree: d });
    }
    let ring = h.ring();
    let exponent = BigUint::from(ring.q()).pow(d as u32) - 1u32;
    let cap = DRAWS_PER_FACTOR * (dim / d);
    for _ in 0..cap {
        let b = candidate(h, d, rng)?;
        let zero_divisor = !b.is_zero() && !h.residue_pow(&b, &exponent)?.is_one();
        trace.push(EdfEvent::Draw { element: b.to_string(), split: zero_divisor });
        if !zero_divisor {
            continue;
        }
        let part = h.sum(&ring.ideal(&[b])?)?;
        if part.is_unit() {
            // Only possible when some prime of h has degree not dividing d.
            return Err(Error::InconsistentDegree { dim, degree: d });
        }
        let cofactor = h.colon(&part)?;
        split(&part, d, rng, trace, out)?;
        split(&cofactor, d, rng, trace, out)?;
        return Ok(());
    }
    Err(Error::ProbabilisticFailure { draws: cap })
}

/// A random element of `R/h` that is a zero divisor with probability about
/// `1 - 2^{1-m}` when `h` has `m` prime factors of degree `d`.
///
/// For uniform `r`, odd `q` gives `r^{(q^d-1)/2} - 1`, whose component at
/// each prime is `-1`, `0` or `-2` depending on whether `r` is zero, a
/// square or a nonsquare there. Even `q` gives the absolute trace
/// `r + r^2 + r^4 + ⋯` down to `F_2`, which is `0` or `1` at each prime.
fn candidate<G: Rng + ?Sized>(h: &RingIdeal, d: usize, rng: &mut G) -> Result<MultiPoly> {
    let r = h.random_element(rng)?;
    let field = h.ring().field();
    if field.characteristic() == 2 {
        let two = BigUint::from(2u32);
        let mut acc = r.clone();
        let mut t = r;
        for _ in 1..field.degree() as usize * d {
            t = h.residue_pow(&t, &two)?;
            acc = &acc + &t;
        }
        h.reduce(&acc)
    } else {
        let half = (BigUint::from(h.ring().q()).pow(d as u32) - 1u32) / 2u32;
        let s = h.residue_pow(&r, &half)?;
        h.reduce(&(&s - &s.ring().one()))
    }
}

/// Complete factorization `a = ∏ p_i^{k_i}` of a proper nonzero ideal.
pub fn factorize<G: Rng + ?Sized>(a: &RingIdeal, rng: &mut G) -> Result<Factorization> {
    let radical = radical_decomposition(a)?;
    let mut factors = Vec::new();
    for (j, g) in radical.factors().iter().enumerate() {
        if g.is_unit() {
            continue;
        }
        let ddf = distinct_degree(g)?;
        for (k, h) in ddf.factors().iter().enumerate() {
            if h.is_unit() {
                continue;
            }
            let degree = k as u32 + 1;
            for prime in equal_degree(h, degree, rng)? {
                factors.push(PrimeFactor { prime, multiplicity: j as u32 + 1, degree });
            }
        }
    }
    Ok(Factorization::new(a.clone(), factors))
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Residual degree of `a` if `a` is prime, `None` otherwise.
///
/// `a` is prime of degree `d` iff it is radical, `|R/a| = q^d`,
/// `u_d + a = a` (all primes have degree dividing `d`) and
/// `u_{d/r} + a = R` for every prime `r | d` (none has a smaller degree).
pub fn is_prime(a: &RingIdeal) -> Result<Option<u32>> {
    a.require_proper()?;
    if !a.is_radical()? {
        return Ok(None);
    }
    let d = a.dimension()? as u32;
    let ring = a.ring();
    if &ring.frobenius_ideal(d, a)? != a {
        return Ok(None);
    }
    for r in prime_divisors(d) {
        if !ring.frobenius_ideal(d / r, a)?.is_unit() {
            return Ok(None);
        }
    }
    Ok(Some(d))
}
