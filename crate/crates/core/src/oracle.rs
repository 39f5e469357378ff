//! Brute-force ground truth for small curves.
//!
//! A prime of `R` with residual degree `d` corresponds to a Frobenius orbit
//! of size `d` of points of `C` over `F_{q^d}`. [`enumerate_primes`] lists
//! those orbits by exhaustive search and recovers each prime as the ideal
//! of polynomials vanishing on the orbit. [`oracle_factor`] then computes
//! multiplicities by testing `a ⊆ p^e`.

use crate::curve::{CurveRing, RingIdeal};
use crate::error::{Error, Result};
use crate::factor::{Factorization, PrimeFactor};
use crate::field::{Elem, FiniteField};
use crate::poly::{Monomial, MultiPoly, X, Y};
use rand::Rng;

/// Largest `q^d` accepted by point enumeration.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 14;

/// Largest residual degree accepted by [`enumerate_primes`].
pub const MAX_DEGREE: u32 = 4;

/// A point of `C` with coordinates in `field`, an extension of `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub x: Elem,
    pub y: Elem,
}

/// The Frobenius orbit `{(x^{q^i}, y^{q^i})}` of a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusOrbit {
    pub field: FiniteField,
    pub points: Vec<CurvePoint>,
}

impl FrobeniusOrbit {
    /// The residual degree of the associated prime.
    pub fn degree(&self) -> u32 {
        self.points.len() as u32
    }
}

/// `F_{q^k}` together with the embedding of `F_q` into it.
fn extension(ring: &CurveRing, k: u32) -> Result<(FiniteField, Vec<Elem>)> {
    let base = ring.field();
    let order = (ring.q() as u64).checked_pow(k).unwrap_or(u64::MAX);
    if k == 0 || order > MAX_EXTENSION_ORDER {
        return Err(Error::ScaleExceeded(format!("q^k = {}^{} exceeds {}", ring.q(), k, MAX_EXTENSION_ORDER)));
    }
    let big = FiniteField::new(base.characteristic(), base.degree() * k)?;
    let embed = big.embedding_from(base)?;
    Ok((big, embed))
}

fn points_in(ring: &CurveRing, big: &FiniteField, embed: &[Elem]) -> Vec<CurvePoint> {
    let f = ring.defining_polynomial();
    let ny = f.degree_in(Y).unwrap_or(0) as usize;
    // F = Σ c_j(x) y^j with each c_j over F_{q^k}
    let mut by_y: Vec<Vec<(u32, Elem)>> = vec![Vec::new(); ny + 1];
    for &(m, c) in f.terms() {
        by_y[m.exp(Y) as usize].push((m.exp(X), embed[c.code() as usize]));
    }
    let mut out = Vec::new();
    let mut cs = vec![Elem::ZERO; ny + 1];
    for x in big.elements() {
        for (j, terms) in by_y.iter().enumerate() {
            cs[j] = terms.iter().fold(Elem::ZERO, |acc, &(e, c)| big.add(acc, big.mul(c, big.pow(x, e as u64))));
        }
        for y in big.elements() {
            let v = cs.iter().rev().fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, y), c));
            if v.is_zero() {
                out.push(CurvePoint { x, y });
            }
        }
    }
    out
}

/// All points of `C` over `F_{q^k}`, returned with that field.
pub fn curve_points(ring: &CurveRing, k: u32) -> Result<(FiniteField, Vec<CurvePoint>)> {
    let (big, embed) = extension(ring, k)?;
    let pts = points_in(ring, &big, &embed);
    Ok((big, pts))
}

/// Orbits of size exactly `d` under `(x, y) ↦ (x^q, y^q)`, each listed from
/// its smallest point.
pub fn frobenius_orbits(ring: &CurveRing, d: u32) -> Result<Vec<FrobeniusOrbit>> {
    let (big, pts) = curve_points(ring, d)?;
    let q = ring.q() as u64;
    let mut out = Vec::new();
    for &p in &pts {
        let mut orbit = vec![p];
        loop {
            let last = orbit[orbit.len() - 1];
            let next = CurvePoint { x: big.pow(last.x, q), y: big.pow(last.y, q) };
            if next == p {
                break;
            }
            orbit.push(next);
        }
        if orbit.len() as u32 == d && orbit.iter().all(|o| p <= *o) {
            out.push(FrobeniusOrbit { field: big.clone(), points: orbit });
        }
    }
    Ok(out)
}

/// The prime of `R` vanishing on `orbit`.
///
/// Solves for the polynomials over `F_q` of total degree at most
/// `d + deg F` that vanish at one point of the orbit, working over `F_p`
/// on the coordinates of the coefficients. If the resulting ideal does not
/// have `|R/p| = q^d` the degree bound is doubled once.
pub fn orbit_prime(ring: &CurveRing, orbit: &FrobeniusOrbit) -> Result<RingIdeal> {
    let d = orbit.degree();
    let first = ring.defining_polynomial().total_degree().unwrap_or(0) + d;
    for bound in [first, 2 * first] {
        let p = vanishing_ideal(ring, orbit, bound)?;
        if !p.is_unit() && p.dimension()? == d as usize {
            return Ok(p);
        }
    }
    Err(Error::Internal(format!("vanishing ideal of a degree-{d} orbit has the wrong size")))
}

fn vanishing_ideal(ring: &CurveRing, orbit: &FrobeniusOrbit, bound: u32) -> Result<RingIdeal> {
    let base = ring.field();
    let big = &orbit.field;
    let embed = big.embedding_from(base)?;
    let p = base.characteristic();
    let l = base.degree() as usize;
    let pt = orbit.points[0];
    let monomials: Vec<Monomial> = (0..=bound).flat_map(|t| (0..=t).map(move |j| Monomial::xy(t - j, j))).collect();
    // column (m, i) holds the F_p-coordinates of α^i · m(pt)
    let alpha_pows: Vec<Elem> = (0..l).map(|i| base.pow(base.generator(), i as u64)).collect();
    let rows = big.degree() as usize;
    let mut cols = Vec::with_capacity(monomials.len() * l);
    for m in &monomials {
        let mv = big.mul(big.pow(pt.x, m.exp(X) as u64), big.pow(pt.y, m.exp(Y) as u64));
        for &a in &alpha_pows {
            let mut c = big.coeffs(big.mul(embed[a.code() as usize], mv));
            c.resize(rows, 0);
            cols.push(c);
        }
    }
    let matrix: Vec<Vec<u32>> = (0..rows).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    let r = ring.poly_ring();
    let gens: Vec<MultiPoly> = nullspace(&matrix, cols.len(), p)
        .into_iter()
        .map(|v| {
            r.from_terms(monomials.iter().enumerate().map(|(k, &m)| {
                let coeff = (0..l).fold(base.zero(), |acc, i| {
                    base.add(acc, base.mul(base.scalar(v[k * l + i] as u64), alpha_pows[i]))
                });
                (m, coeff)
            }))
        })
        .collect();
    ring.ideal(&gens)
}

/// Basis of `{v : M v = 0}` over `F_p`.
fn nullspace(matrix: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let p64 = p as u64;
    let inv = |a: u32| -> u32 {
        let mut r = 1u64;
        let (mut b, mut e) = (a as u64, p64 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p64;
            }
            b = b * b % p64;
            e >>= 1;
        }
        r as u32
    };
    let mut m: Vec<Vec<u32>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, pr);
        let s = inv(m[row][col]) as u64;
        for v in m[row].iter_mut() {
            *v = (*v as u64 * s % p64) as u32;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && other[col] != 0 {
                let f = other[col] as u64;
                for (v, &pv) in other.iter_mut().zip(&pivot_row) {
                    *v = ((*v as u64 + p64 - f * pv as u64 % p64) % p64) as u32;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Every prime of residual degree at most `max_degree`, with its degree,
/// ordered by degree and then by orbit.
pub fn enumerate_primes(ring: &CurveRing, max_degree: u32) -> Result<Vec<(RingIdeal, u32)>> {
    if max_degree > MAX_DEGREE {
        return Err(Error::ScaleExceeded(format!("degree bound {max_degree} exceeds {MAX_DEGREE}")));
    }
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for orbit in frobenius_orbits(ring, d)? {
            out.push((orbit_prime(ring, &orbit)?, d));
        }
    }
    Ok(out)
}

/// Factors `a` against the primes of degree at most `max_degree`.
pub fn oracle_factor(a: &RingIdeal, max_degree: u32) -> Result<Factorization> {
    let primes = enumerate_primes(a.ring(), max_degree)?;
    oracle_factor_with(a, &primes)
}

/// Factors `a` against a precomputed prime list; `k_p = max{e : a ⊆ p^e}`.
pub fn oracle_factor_with(a: &RingIdeal, primes: &[(RingIdeal, u32)]) -> Result<Factorization> {
    a.require_proper()?;
    let dim = a.dimension()?;
    let mut factors = Vec::new();
    let mut product = a.ring().unit_ideal();
    for (p, d) in primes {
        let mut power = p.clone();
        let mut k = 0;
        while (k + 1) * (*d as usize) <= dim && power.contains_ideal(a)? {
            k += 1;
            power = power.product(p)?;
        }
        if k > 0 {
            product = product.product(&p.pow(k as u32)?)?;
            factors.push(PrimeFactor { prime: p.clone(), multiplicity: k as u32, degree: *d });
        }
    }
    if &product != a {
        let found = if product.is_unit() { 0 } else { product.dimension()? };
        return Err(Error::OracleResidual(dim - found));
    }
    Ok(Factorization::new(a.clone(), factors))
}

/// A random product `∏ p_i^{k_i}` of between 1 and `max_factors` distinct
/// primes drawn from `primes`, with multiplicities in `1..=max_multiplicity`.
/// Returns the product and its factorization.
pub fn random_product<G: Rng + ?Sized>(
    primes: &[(RingIdeal, u32)],
    max_factors: usize,
    max_multiplicity: u32,
    rng: &mut G,
) -> Result<Factorization> {
    let first = primes.first().ok_or(Error::UnitIdeal)?;
    let count = rng.gen_range(1..=max_factors.min(primes.len()));
    let mut factors = Vec::with_capacity(count);
    let mut product = first.0.ring().unit_ideal();
    for i in rand::seq::index::sample(rng, primes.len(), count) {
        let (p, d) = &primes[i];
        let k = rng.gen_range(1..=max_multiplicity);
        product = product.product(&p.pow(k)?)?;
        factors.push(PrimeFactor { prime: p.clone(), multiplicity: k, degree: *d });
    }
    Ok(Factorization::new(product, factors))
}
