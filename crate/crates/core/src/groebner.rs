//! Reduced Gröbner bases over `F_q` and the ideal operations built on them.
//!
//! A [`PolyIdeal`] always carries its reduced basis, computed at
//! construction: monic, inter-reduced, sorted by increasing leading
//! monomial. Two ideals in the same ring are equal iff their bases are.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::{squarefree_part, Monomial, MultiPoly, PolyRing, T};

/// Ideal of `F_q[x, y]` (or `F_q[x, y, t]`) given by its reduced Gröbner
/// basis. The zero ideal has an empty basis; the unit ideal has basis `{1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyIdeal {
    ring: PolyRing,
    basis: Vec<MultiPoly>,
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// Computes the reduced Gröbner basis of `gens` in `ring`.
pub fn buchberger(ring: &PolyRing, gens: &[MultiPoly]) -> Result<PolyIdeal> {
    let gens = gens
        .iter()
        .map(|g| {
            if g.field() != &ring.field || g.ring().nvars > ring.nvars {
                Err(Error::RingMismatch)
            } else {
                g.into_ring(ring)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyIdeal { ring: ring.clone(), basis: reduced_basis(ring, gens) })
}

/// Normal form of `f` with respect to `basis`, whose elements must be monic.
fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        match lms.iter().position(|lm| lm.divides(&m)) {
            Some(i) => p = p.sub_term_mul(c, lms[i].quotient(&m), &basis[i]),
            None => {
                p.pop_leading();
                rem.push((m, c));
            }
        }
    }
    MultiPoly::from_sorted(f.ring(), rem)
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(&mg);
    let a = f.mul_term(Elem::ONE, mf.quotient(&l));
    a.sub_term_mul(Elem::ONE, mg.quotient(&l), g)
}

fn reduced_basis(ring: &PolyRing, gens: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let order = ring.order;
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: MultiPoly, basis: &mut Vec<MultiPoly>, pending: &mut HashSet<(usize, usize)>| {
        let i = basis.len();
        basis.push(h.monic());
        pending.extend((0..i).map(|j| (j, i)));
    };

    for g in gens {
        let h = normal_form(&g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.one()];
        }
        add(h, &mut basis, &mut pending);
    }

    while !pending.is_empty() {
        // Normal selection: smallest lcm first.
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
                let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.one()];
        }
        add(h, &mut basis, &mut pending);
    }

    // Minimalize: drop elements whose leading monomial is a multiple of
    // another's (the earliest wins on ties).
    let lms: Vec<Monomial> = basis.iter().map(lm).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| !(0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
        .collect();
    let minimal: Vec<MultiPoly> = keep.into_iter().map(|i| basis[i].clone()).collect();

    let mut reduced: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MultiPoly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
            normal_form(&minimal[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(&lm(a), &lm(b)));
    reduced
}

fn lm(f: &MultiPoly) -> Monomial {
    f.leading_monomial().expect("nonzero basis element")
}

/// Monomials outside the leading-term ideal of a zero-dimensional ideal;
/// they form an `F_q`-basis of the quotient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    monomials: Vec<Monomial>,
}

impl StandardMonomialBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// `D`, the `F_q`-dimension of the quotient.
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    fn index(&self) -> HashMap<Monomial, usize> {
        self.monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect()
    }
}

impl PolyIdeal {
    /// The ideal generated by `gens` in `ring`.
    pub fn new(ring: &PolyRing, gens: &[MultiPoly]) -> Result<Self> {
        buchberger(ring, gens)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        PolyIdeal { ring: ring.clone(), basis: Vec::new() }
    }

    pub fn unit(ring: &PolyRing) -> Self {
        PolyIdeal { ring: ring.clone(), basis: vec![ring.one()] }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    fn check_ring(&self, other: &PolyIdeal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Unique normal form of `f` modulo the ideal.
    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, &self.basis))
    }

    pub(crate) fn reduce_unchecked(&self, f: &MultiPoly) -> MultiPoly {
        normal_form(f, &self.basis)
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &PolyIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(other.basis.iter().all(|g| normal_form(g, &self.basis).is_zero()))
    }

    pub fn sum(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        let gens: Vec<MultiPoly> = self.basis.iter().chain(other.basis.iter()).cloned().collect();
        Ok(PolyIdeal { ring: self.ring.clone(), basis: reduced_basis(&self.ring, gens) })
    }

    pub fn product(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        let gens: Vec<MultiPoly> = self.basis.iter().flat_map(|f| other.basis.iter().map(move |g| f * g)).collect();
        Ok(PolyIdeal { ring: self.ring.clone(), basis: reduced_basis(&self.ring, gens) })
    }

    /// `self ∩ other`, eliminating `t` from `t·self + (1 - t)·other` under
    /// the block order `t ≫ (x, y)`.
    pub fn intersect(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        if self.ring.nvars != 2 {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(PolyIdeal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let big = PolyRing::new(self.ring.field.clone(), 3, self.ring.order.eliminating_t());
        let t = big.var(T);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::with_capacity(self.basis.len() + other.basis.len());
        for f in &self.basis {
            gens.push(&t * &f.into_ring(&big)?);
        }
        for g in &other.basis {
            gens.push(&one_minus_t * &g.into_ring(&big)?);
        }
        let elim = reduced_basis(&big, gens);
        // Elements free of t form the reduced basis of the elimination
        // ideal under the restricted order.
        let basis = elim
            .into_iter()
            .filter(|g| g.degree_in(T) == Some(0))
            .map(|g| g.into_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyIdeal { ring: self.ring.clone(), basis })
    }

    /// `(self : ⟨f⟩)`.
    pub fn colon_poly(&self, f: &MultiPoly) -> Result<PolyIdeal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.reduce_unchecked(f).is_zero() {
            return Ok(PolyIdeal::unit(&self.ring));
        }
        let principal = PolyIdeal { ring: self.ring.clone(), basis: vec![f.monic()] };
        let inter = self.intersect(&principal)?;
        let gens = inter
            .basis
            .iter()
            .map(|g| {
                g.exact_div(f).ok_or_else(|| Error::Internal(format!("{g} not divisible by {f} in colon computation")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyIdeal { ring: self.ring.clone(), basis: reduced_basis(&self.ring, gens) })
    }

    /// `(self : other) = ⋂_{g ∈ other} (self : g)`.
    pub fn colon(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc = PolyIdeal::unit(&self.ring);
        for g in &other.basis {
            acc = acc.intersect(&self.colon_poly(g)?)?;
        }
        Ok(acc)
    }

    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        (0..self.ring.nvars).all(|v| {
            self.basis.iter().any(|g| {
                let m = lm(g);
                (0..self.ring.nvars).all(|w| w == v || m.exp(w) == 0)
            })
        })
    }

    pub fn standard_monomials(&self) -> Result<StandardMonomialBasis> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars;
        let lms: Vec<Monomial> = self.basis.iter().map(lm).collect();
        let bound: Vec<u32> = (0..n)
            .map(|v| lms.iter().filter(|m| (0..n).all(|w| w == v || m.exp(w) == 0)).map(|m| m.exp(v)).min().unwrap())
            .collect();
        let mut monomials = Vec::new();
        let mut cur = [0u32; 3];
        'outer: loop {
            let m = Monomial(cur);
            if !lms.iter().any(|l| l.divides(&m)) {
                monomials.push(m);
            }
            for v in 0..n {
                cur[v] += 1;
                if cur[v] < bound[v] {
                    continue 'outer;
                }
                cur[v] = 0;
            }
            break;
        }
        let order = self.ring.order;
        monomials.sort_by(|a, b| order.cmp(a, b));
        Ok(StandardMonomialBasis { monomials })
    }

    /// Monic generator of `self ∩ F_q[v]`, found as the first linear
    /// dependency among the normal forms of `1, v, v^2, ...`. The unit
    /// ideal yields the constant 1.
    pub fn minimal_polynomial(&self, v: usize) -> Result<MultiPoly> {
        if v >= self.ring.nvars {
            return Err(Error::RingMismatch);
        }
        if self.is_unit() {
            return Ok(self.ring.one());
        }
        let std = self.standard_monomials()?;
        let index = std.index();
        let field = &self.ring.field;
        let dim = std.dimension();
        let to_vec = |p: &MultiPoly| -> Vec<Elem> {
            let mut out = vec![Elem::ZERO; dim];
            for &(m, c) in p.terms() {
                out[index[&m]] = c;
            }
            out
        };

        // Echelon rows: (pivot, row, combination of powers of v).
        let mut rows: Vec<(usize, Vec<Elem>, Vec<Elem>)> = Vec::new();
        let var = self.ring.var(v);
        let mut power = self.ring.one();
        for k in 0..=dim {
            let mut w = to_vec(&power);
            let mut comb = vec![Elem::ZERO; k + 1];
            comb[k] = Elem::ONE;
            for (piv, row, rc) in &rows {
                let c = w[*piv];
                if c.is_zero() {
                    continue;
                }
                for (a, &b) in w.iter_mut().zip(row.iter()) {
                    *a = field.sub(*a, field.mul(c, b));
                }
                for (a, &b) in comb.iter_mut().zip(rc.iter()) {
                    *a = field.sub(*a, field.mul(c, b));
                }
            }
            match w.iter().position(|c| !c.is_zero()) {
                None => return Ok(self.ring.univariate(v, &comb)),
                Some(piv) => {
                    let inv = field.inv(w[piv])?;
                    let row: Vec<Elem> = w.iter().map(|&c| field.mul(c, inv)).collect();
                    let rc: Vec<Elem> = comb.iter().map(|&c| field.mul(c, inv)).collect();
                    rows.push((piv, row, rc));
                }
            }
            power = normal_form(&(&power * &var), &self.basis);
        }
        Err(Error::Internal("no linear dependency among dim + 1 vectors".into()))
    }

    /// Radical of a zero-dimensional ideal: adjoin the squarefree part of
    /// the minimal polynomial of every variable.
    pub fn radical(&self) -> Result<PolyIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Ok(self.clone());
        }
        let mut gens = self.basis.clone();
        for v in 0..self.ring.nvars {
            gens.push(squarefree_part(&self.minimal_polynomial(v)?)?);
        }
        Ok(PolyIdeal { ring: self.ring.clone(), basis: reduced_basis(&self.ring, gens) })
    }
}
