//! Sparse polynomials over `F_q` in up to three variables `x`, `y`, `t`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, FiniteField};

pub const X: usize = 0;
pub const Y: usize = 1;
/// Auxiliary elimination variable.
pub const T: usize = 2;

const VAR_NAMES: [&str; 3] = ["x", "y", "t"];

/// Exponent vector over `(x, y, t)`. Unused variables have exponent 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: usize, e: u32) -> Self {
        let mut m = [0; 3];
        m[v] = e;
        Monomial(m)
    }

    pub fn xy(a: u32, b: u32) -> Self {
        Monomial([a, b, 0])
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial([other.0[0] - self.0[0], other.0[1] - self.0[1], other.0[2] - self.0[2]])
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0].max(other.0[0]), self.0[1].max(other.0[1]), self.0[2].max(other.0[2])])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, o: Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&monomial_text(self))
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(VAR_NAMES[v].to_string()),
            _ => parts.push(format!("{}^{}", VAR_NAMES[v], e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order on `(x, y)`, optionally extended by `t`.
///
/// `major` names the more significant of `x` and `y`. With `eliminate_t`
/// set, any monomial containing `t` is larger than every monomial free of
/// it (block order `t ≫ {x, y}`); otherwise `t` is the least significant
/// variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub major: usize,
    pub eliminate_t: bool,
}

impl MonomialOrder {
    /// Lex with `y > x`.
    pub const LEX_YX: MonomialOrder = MonomialOrder { kind: OrderKind::Lex, major: Y, eliminate_t: false };
    /// Lex with `x > y`.
    pub const LEX_XY: MonomialOrder = MonomialOrder { kind: OrderKind::Lex, major: X, eliminate_t: false };
    /// Graded reverse lex with `x > y`.
    pub const GREVLEX: MonomialOrder = MonomialOrder { kind: OrderKind::Grevlex, major: X, eliminate_t: false };

    /// Block order eliminating `t`, refining by `self` on `(x, y)`.
    pub fn eliminating_t(self) -> Self {
        MonomialOrder { eliminate_t: true, ..self }
    }

    pub fn restricted(self) -> Self {
        MonomialOrder { eliminate_t: false, ..self }
    }

    fn minor(&self) -> usize {
        1 - self.major
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.eliminate_t {
            let c = a.0[T].cmp(&b.0[T]);
            if c != Ordering::Equal {
                return c;
            }
        }
        let (ma, mi) = (self.major, self.minor());
        match self.kind {
            OrderKind::Lex => a.0[ma].cmp(&b.0[ma]).then(a.0[mi].cmp(&b.0[mi])).then(a.0[T].cmp(&b.0[T])),
            OrderKind::Grevlex => {
                let (da, db) = if self.eliminate_t {
                    (a.0[X] + a.0[Y], b.0[X] + b.0[Y])
                } else {
                    (a.total_degree(), b.total_degree())
                };
                da.cmp(&db).then(b.0[T].cmp(&a.0[T])).then(b.0[mi].cmp(&a.0[mi])).then(b.0[ma].cmp(&a.0[ma]))
            }
        }
    }
}

/// The ambient ring of a polynomial: field, number of variables (2 or 3)
/// and the order its terms are sorted by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub field: FiniteField,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: FiniteField, nvars: usize, order: MonomialOrder) -> Self {
        assert!((1..=3).contains(&nvars), "between one and three variables");
        PolyRing { field, nvars, order }
    }

    pub fn bivariate(field: FiniteField, order: MonomialOrder) -> Self {
        Self::new(field, 2, order)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { order, ..self.clone() }
    }

    pub fn with_nvars(&self, nvars: usize) -> Self {
        PolyRing { nvars, ..self.clone() }
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Elem::ONE)
    }

    pub fn constant(&self, c: Elem) -> MultiPoly {
        self.term(c, Monomial::ONE)
    }

    pub fn int(&self, n: i64) -> MultiPoly {
        self.constant(self.field.from_int(n))
    }

    pub fn var(&self, v: usize) -> MultiPoly {
        assert!(v < self.nvars, "variable out of range");
        self.term(Elem::ONE, Monomial::var(v, 1))
    }

    pub fn term(&self, c: Elem, m: Monomial) -> MultiPoly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MultiPoly { ring: self.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> MultiPoly {
        let mut acc: HashMap<Monomial, Elem> = HashMap::new();
        for (m, c) in terms {
            debug_assert!(m.0[self.nvars..].iter().all(|&e| e == 0));
            let e = acc.entry(m).or_insert(Elem::ZERO);
            *e = self.field.add(*e, c);
        }
        self.collect_map(acc)
    }

    fn collect_map(&self, acc: HashMap<Monomial, Elem>) -> MultiPoly {
        let mut terms: Vec<(Monomial, Elem)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        MultiPoly { ring: self.clone(), terms }
    }

    /// Univariate polynomial in `v` from dense coefficients, low-to-high.
    pub fn univariate(&self, v: usize, coeffs: &[Elem]) -> MultiPoly {
        self.from_terms(coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(v, i as u32), c)))
    }
}

/// A polynomial with its terms sorted in decreasing monomial order.
#[derive(Clone)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: Vec<(Monomial, Elem)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.field != other.ring.field || self.ring.nvars != other.ring.nvars {
            return false;
        }
        if self.ring.order == other.ring.order {
            self.terms == other.terms
        } else {
            self.terms == other.to_order(self.ring.order).terms
        }
    }
}

impl Eq for MultiPoly {}

/// Binary polynomial operation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &FiniteField {
        &self.ring.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn terms(&self) -> &[(Monomial, Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == Elem::ONE
    }

    pub fn leading_term(&self) -> Option<(Monomial, Elem)> {
        self.terms.first().copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Elem {
        self.terms.first().map_or(Elem::ZERO, |t| t.1)
    }

    pub fn coeff(&self, m: &Monomial) -> Elem {
        self.terms.iter().find(|t| &t.0 == m).map_or(Elem::ZERO, |t| t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.total_degree()).max()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.0.exp(v)).max()
    }

    /// Checked ring operation.
    pub fn apply(&self, op: PolyOp, other: &MultiPoly) -> Result<MultiPoly> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            PolyOp::Add => self.add_scaled(other, Elem::ONE),
            PolyOp::Sub => self.add_scaled(other, self.ring.field.neg(Elem::ONE)),
            PolyOp::Mul => self.mul_poly(other),
        })
    }

    /// `self + c * other`, same ring assumed.
    fn add_scaled(&self, other: &MultiPoly, c: Elem) -> MultiPoly {
        let f = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = other.terms[j];
            match order.cmp(&ma, &mb) {
                Ordering::Greater => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, f.mul(c, cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(ca, f.mul(c, cb));
                    if !s.is_zero() {
                        out.push((ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|&(m, cb)| (m, f.mul(c, cb))));
        out.retain(|t| !t.1.is_zero());
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Assembles a polynomial from terms already sorted for `ring.order`,
    /// distinct, and nonzero.
    pub(crate) fn from_sorted(ring: &PolyRing, terms: Vec<(Monomial, Elem)>) -> MultiPoly {
        MultiPoly { ring: ring.clone(), terms }
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub(crate) fn sub_term_mul(&self, c: Elem, m: Monomial, other: &MultiPoly) -> MultiPoly {
        let f = &self.ring.field;
        let neg_c = f.neg(c);
        let shifted = MultiPoly {
            ring: self.ring.clone(),
            terms: other.terms.iter().map(|&(mo, co)| (mo * m, f.mul(neg_c, co))).collect(),
        };
        self.add_scaled(&shifted, Elem::ONE)
    }

    fn mul_poly(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let f = &self.ring.field;
        let mut acc: HashMap<Monomial, Elem> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let e = acc.entry(ma * mb).or_insert(Elem::ZERO);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        self.ring.collect_map(acc)
    }

    pub fn scale(&self, c: Elem) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = &self.ring.field;
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect() }
    }

    pub fn mul_term(&self, c: Elem, m: Monomial) -> MultiPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = &self.ring.field;
        MultiPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(mo, a)| (mo * m, f.mul(a, c))).collect() }
    }

    /// Scales so the leading coefficient is 1; the zero polynomial is kept.
    pub fn monic(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) if c == Elem::ONE => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u64) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: usize) -> MultiPoly {
        let f = &self.ring.field;
        let terms = self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|&(m, c)| {
            let mut d = m;
            d.0[v] -= 1;
            (d, f.mul(c, f.scalar(m.exp(v) as u64)))
        });
        self.ring.from_terms(terms)
    }

    /// The same polynomial sorted for another order.
    pub fn to_order(&self, order: MonomialOrder) -> MultiPoly {
        if order == self.ring.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        MultiPoly { ring: self.ring.with_order(order), terms }
    }

    /// Moves the polynomial into `ring`, which must share the field and have
    /// enough variables.
    pub fn into_ring(&self, ring: &PolyRing) -> Result<MultiPoly> {
        if ring.field != self.ring.field {
            return Err(Error::FieldMismatch);
        }
        if self.terms.iter().any(|(m, _)| m.0[ring.nvars..].iter().any(|&e| e > 0)) {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        let order = ring.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(MultiPoly { ring: ring.clone(), terms })
    }

    /// Substitutes field values for every variable, after mapping
    /// coefficients through `embed` into a larger field.
    pub fn evaluate_in(&self, target: &FiniteField, embed: &[Elem], point: &[Elem]) -> Elem {
        let mut acc = Elem::ZERO;
        for &(m, c) in &self.terms {
            let mut v = embed[c.code() as usize];
            for (var, &val) in point.iter().enumerate() {
                v = target.mul(v, target.pow(val, m.exp(var) as u64));
            }
            acc = target.add(acc, v);
        }
        acc
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading_term()?;
        let f = &self.ring.field;
        let lc_inv = f.inv(lc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient(&m);
            let qc = f.mul(c, lc_inv);
            quot.push((qm, qc));
            rem = rem.sub_term_mul(qc, qm, divisor);
        }
        Some(self.ring.from_terms(quot))
    }

    /// The single variable this polynomial involves: `Ok(None)` for a
    /// constant, `Err` when more than one variable occurs.
    pub fn univariate_var(&self) -> Result<Option<usize>> {
        let mut var = None;
        for (m, _) in &self.terms {
            for v in 0..3 {
                if m.exp(v) > 0 {
                    match var {
                        None => var = Some(v),
                        Some(w) if w == v => {}
                        Some(_) => return Err(Error::NotUnivariate),
                    }
                }
            }
        }
        Ok(var)
    }

    /// Dense coefficients in variable `v`, low-to-high.
    pub(crate) fn dense(&self, v: usize) -> Vec<Elem> {
        let n = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![Elem::ZERO; n];
        for &(m, c) in &self.terms {
            out[m.exp(v) as usize] = c;
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = &self.ring.field;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let cs = field.format(*c);
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            if m.is_one() {
                f.write_str(&cs)?;
            } else if *c == Elem::ONE {
                f.write_str(&monomial_text(m))?;
            } else {
                write!(f, "{}*{}", cs, monomial_text(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// Operator sugar for same-ring operands. Panics on ring mismatch; use
// `MultiPoly::apply` for a checked variant.
impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.apply(PolyOp::Add, o).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.apply(PolyOp::Sub, o).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.apply(PolyOp::Mul, o).expect("ring mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.ring.field.neg(Elem::ONE))
    }
}

fn common_var(f: &MultiPoly, g: &MultiPoly) -> Result<usize> {
    if f.ring.field != g.ring.field || f.ring.nvars != g.ring.nvars {
        return Err(Error::RingMismatch);
    }
    match (f.univariate_var()?, g.univariate_var()?) {
        (Some(a), Some(b)) if a != b => Err(Error::NotUnivariate),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Ok(X),
    }
}

/// Monic gcd of two univariate polynomials in the same variable.
/// `gcd(0, 0) = 0`.
pub fn univar_gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    let v = common_var(f, g)?;
    let field = f.field();
    let d = dense::gcd(field, &f.dense(v), &g.dense(v));
    Ok(f.ring.univariate(v, &d))
}

/// Monic product of the distinct irreducible factors of a nonzero
/// univariate polynomial.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let v = f.univariate_var()?.unwrap_or(X);
    let s = dense::squarefree_part(f.field(), &f.dense(v));
    Ok(f.ring.univariate(v, &s))
}

/// Dense univariate arithmetic (coefficients low-to-high, no trailing zeros).
pub(crate) mod dense {
    use crate::field::{Elem, FiniteField};

    pub fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn monic(f: &FiniteField, v: Vec<Elem>) -> Vec<Elem> {
        let v = trim(v);
        match v.last() {
            None => v,
            Some(&lc) => {
                let inv = f.inv(lc).expect("nonzero");
                v.into_iter().map(|c| f.mul(c, inv)).collect()
            }
        }
    }

    pub fn mul(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn div_rem(f: &FiniteField, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let inv = f.inv(b[db]).expect("nonzero divisor");
        let mut r = trim(a.to_vec());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![Elem::ZERO; r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = f.mul(*r.last().unwrap(), inv);
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, bc));
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn gcd(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let (_, r) = div_rem(f, &a, &b);
            a = b;
            b = r;
        }
        monic(f, a)
    }

    pub fn derivative(f: &FiniteField, a: &[Elem]) -> Vec<Elem> {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.scalar(i as u64))).collect())
    }

    fn pth_root(f: &FiniteField, a: &[Elem]) -> Vec<Elem> {
        let p = f.characteristic() as usize;
        a.iter().step_by(p).map(|&c| f.frobenius_inverse(c)).collect()
    }

    pub fn squarefree_part(f: &FiniteField, a: &[Elem]) -> Vec<Elem> {
        let a = monic(f, a.to_vec());
        if a.len() <= 1 {
            return vec![Elem::ONE];
        }
        let da = derivative(f, &a);
        if da.is_empty() {
            return squarefree_part(f, &pth_root(f, &a));
        }
        let c = gcd(f, &a, &da);
        // w collects the irreducible factors whose multiplicity is prime to p.
        let w = div_rem(f, &a, &c).0;
        let mut rest = c;
        loop {
            let y = gcd(f, &rest, &w);
            if y.len() <= 1 {
                break;
            }
            rest = div_rem(f, &rest, &y).0;
        }
        // What remains has every multiplicity divisible by p.
        monic(f, mul(f, &w, &squarefree_part(f, &rest)))
    }
}
