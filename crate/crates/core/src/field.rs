//! Finite fields `F_q`, `q = p^l ≤ 2^16`.
//!
//! Elements are stored as a single integer code: for a prime field the
//! residue itself, for an extension the coefficient vector `c_0 + c_1 t + ...`
//! packed as `c_0 + c_1 p + c_2 p^2 + ...`. Every code in `[0, q)` is a valid,
//! fully reduced element. Extension-field multiplication goes through
//! discrete log tables built once per field.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 16;

/// A field element in packed form. Only meaningful together with the
/// [`FiniteField`] that produced it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed integer code of this element.
    pub fn code(self) -> u32 {
        self.0
    }
}

struct LogTables {
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldData {
    p: u32,
    degree: u32,
    q: u32,
    // Monic modulus, low-to-high, length degree + 1. Empty for prime fields.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

/// Handle to a finite field. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldData>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.degree == other.0.degree && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{} = F_{}[a]/({})", self.0.q, self.0.p, fp_poly::to_string(&self.0.modulus, "a"))
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    /// `F_{p^l}` with the canonical modulus: the smallest monic irreducible
    /// polynomial of degree `l`, comparing coefficient vectors from the
    /// highest degree down.
    pub fn new(p: u32, l: u32) -> Result<Self> {
        check_order(p, l)?;
        if l == 1 {
            return Self::build(p, 1, Vec::new());
        }
        let count = (p as u64).pow(l);
        for code in 0..count {
            let mut m = fp_poly::from_code(code, p, l as usize);
            m.push(1);
            if fp_poly::is_irreducible(&m, p) {
                return Self::build(p, l, m);
            }
        }
        Err(Error::Internal(format!("no irreducible polynomial of degree {l} over F_{p}")))
    }

    /// `F_p[t]/(modulus)`; `modulus` is given low-to-high and must be monic
    /// and irreducible.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let m: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
        let m = fp_poly::trimmed(m);
        if m.len() < 2 {
            return Err(Error::ReducibleModulus(0));
        }
        let l = (m.len() - 1) as u32;
        check_order(p, l)?;
        if *m.last().unwrap() != 1 || !fp_poly::is_irreducible(&m, p) {
            return Err(Error::ReducibleModulus(l));
        }
        if l == 1 {
            return Self::build(p, 1, Vec::new());
        }
        Self::build(p, l, m)
    }

    /// Builds `F_q` from a prime power.
    pub fn of_order(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrime(q as u64));
        }
        let mut p = 2;
        while !q.is_multiple_of(p) {
            p += 1;
        }
        let mut l = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            l += 1;
        }
        if r != 1 {
            return Err(Error::NotPrime(q as u64));
        }
        Self::new(p, l)
    }

    fn build(p: u32, degree: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = p.pow(degree);
        let tables = if degree > 1 { Some(build_tables(p, q, &modulus)) } else { None };
        Ok(FiniteField(Arc::new(FieldData { p, degree, q, modulus, tables })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients low-to-high (empty for a prime field).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of an integer.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element from its packed code; `None` when out of range.
    pub fn from_code(&self, code: u32) -> Option<Elem> {
        (code < self.0.q).then_some(Elem(code))
    }

    /// Element `c_0 + c_1 t + ...`, reducing coefficients mod p and the
    /// vector modulo the field modulus.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Elem {
        let p = self.0.p;
        let mut v: Vec<u32> = coeffs.iter().map(|c| c % p).collect();
        if self.0.degree > 1 {
            v = fp_poly::rem(&v, &self.0.modulus, p);
        } else {
            v.truncate(1);
        }
        Elem(fp_poly::to_code(&v, p))
    }

    /// Coefficient vector of length `degree`.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        fp_poly::from_code(a.0 as u64, self.0.p, self.0.degree as usize)
    }

    /// The class of `t` in an extension field; 1 in a prime field.
    pub fn generator(&self) -> Elem {
        if self.0.degree > 1 {
            Elem(self.0.p)
        } else {
            Elem::ONE
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if self.0.degree == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if self.0.degree == 1 {
            return Elem(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.0.tables {
            None => Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32),
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            None => self.pow(a, (self.0.p - 2) as u64),
            Some(t) => {
                let n = self.0.q - 1;
                let l = t.log[a.0 as usize];
                Elem(t.exp[((n - l) % n) as usize])
            }
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: Elem, e: &BigUint) -> Elem {
        if a.0 == 0 {
            return if e.bits() == 0 { Elem::ONE } else { Elem::ZERO };
        }
        // The multiplicative group has order q - 1.
        let r = e % BigUint::from(self.0.q - 1);
        let r = r.iter_u64_digits().next().unwrap_or(0);
        self.pow(a, r)
    }

    /// Inverse of the Frobenius `a ↦ a^p`, namely `a ↦ a^{p^{l-1}}`.
    pub fn frobenius_inverse(&self, a: Elem) -> Elem {
        self.pow(a, (self.0.p as u64).pow(self.0.degree - 1))
    }

    /// Maps `n · 1` for `n ∈ Z`.
    pub fn scalar(&self, n: u64) -> Elem {
        Elem((n % self.0.p as u64) as u32)
    }

    pub fn format(&self, a: Elem) -> String {
        if self.0.degree == 1 {
            a.0.to_string()
        } else {
            fp_poly::to_string(&self.coeffs(a), "a")
        }
    }

    /// Returns the image of every element of `small` under a field
    /// embedding `small → self`, indexed by code. Requires both fields to
    /// share the characteristic and `deg(small) | deg(self)`.
    pub fn embedding_from(&self, small: &FiniteField) -> Result<Vec<Elem>> {
        if small.0.p != self.0.p || !self.0.degree.is_multiple_of(small.0.degree) {
            return Err(Error::FieldMismatch);
        }
        let image_of_gen = if small.0.degree == 1 {
            Elem::ONE
        } else {
            let m = &small.0.modulus;
            self.elements()
                .find(|&b| {
                    let mut acc = Elem::ZERO;
                    for &c in m.iter().rev() {
                        acc = self.add(self.mul(acc, b), self.scalar(c as u64));
                    }
                    acc.is_zero()
                })
                .ok_or_else(|| Error::Internal("no root of the subfield modulus".into()))?
        };
        Ok(small
            .elements()
            .map(|a| {
                if small.0.degree == 1 {
                    return self.scalar(a.0 as u64);
                }
                let mut acc = Elem::ZERO;
                for c in small.coeffs(a).into_iter().rev() {
                    acc = self.add(self.mul(acc, image_of_gen), self.scalar(c as u64));
                }
                acc
            })
            .collect())
    }

    /// Binds an element to this field for checked arithmetic.
    pub fn element(&self, a: Elem) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }
}

fn check_order(p: u32, l: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if l == 0 {
        return Err(Error::ReducibleModulus(0));
    }
    let q = (p as u64).checked_pow(l).unwrap_or(u64::MAX);
    if q > MAX_ORDER {
        return Err(Error::FieldTooLarge(q));
    }
    Ok(())
}

fn build_tables(p: u32, q: u32, modulus: &[u32]) -> LogTables {
    let n = (q - 1) as usize;
    let l = modulus.len() - 1;
    for g in 2..q {
        let gv = fp_poly::from_code(g as u64, p, l);
        let mut exp = Vec::with_capacity(2 * n);
        let mut cur = vec![1u32];
        let mut cur_code = 1u32;
        let mut ok = true;
        for i in 0..n {
            if i > 0 && cur_code == 1 {
                ok = false;
                break;
            }
            exp.push(cur_code);
            cur = fp_poly::rem(&fp_poly::mul(&cur, &gv, p), modulus, p);
            cur_code = fp_poly::to_code(&cur, p);
        }
        if !ok || cur_code != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &c) in exp.iter().enumerate() {
            log[c as usize] = i as u32;
        }
        let head: Vec<u32> = exp.clone();
        exp.extend(head);
        return LogTables { exp, log };
    }
    unreachable!("multiplicative group of a finite field is cyclic")
}

/// A field element bound to its field, for checked mixed-field arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

/// Binary field operation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn apply(&self, op: FieldOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (a, b, f) = (self.value, other.value, &self.field);
        let value = match op {
            FieldOp::Add => f.add(a, b),
            FieldOp::Sub => f.sub(a, b),
            FieldOp::Mul => f.mul(a, b),
            FieldOp::Div => f.div(a, b)?,
        };
        Ok(f.element(value))
    }
}

/// Dense polynomials over `F_p` with `u32` coefficients, low-to-high.
/// Only used to set up extension fields.
pub(crate) mod fp_poly {
    pub fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn from_code(mut code: u64, p: u32, len: usize) -> Vec<u32> {
        let mut v = Vec::with_capacity(len);
        for _ in 0..len {
            v.push((code % p as u64) as u32);
            code /= p as u64;
        }
        v
    }

    pub fn to_code(v: &[u32], p: u32) -> u32 {
        v.iter().rev().fold(0u32, |acc, &c| acc * p + c)
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trimmed(out.into_iter().map(|c| c as u32).collect())
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trimmed(a.to_vec());
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap() as u64;
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead * c as u64) % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trimmed(r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let deg = m.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut div = from_code(code, p, d);
                div.push(1);
                if rem(m, &div, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_string(v: &[u32], var: &str) -> String {
        let mut parts = Vec::new();
        for (i, &c) in v.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_examples() {
        let f13 = FiniteField::prime(13).unwrap();
        assert_eq!(f13.add(f13.from_int(11), f13.from_int(8)), f13.from_int(6));
        let f19 = FiniteField::prime(19).unwrap();
        assert_eq!(f19.mul(f19.from_int(7), f19.zero()), f19.zero());
    }

    #[test]
    fn f4_generator_squared() {
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let t = f4.generator();
        assert_eq!(f4.mul(t, t), f4.from_coeffs(&[1, 1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FiniteField::prime(12).unwrap_err(), Error::NotPrime(12));
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldTooLarge(_))));
        // t^2 + 1 = (t + 1)^2 over F_2
        assert_eq!(FiniteField::with_modulus(2, &[1, 0, 1]).unwrap_err(), Error::ReducibleModulus(2));
        let f = FiniteField::prime(5).unwrap();
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn checked_ops_detect_field_mismatch() {
        let a = FiniteField::prime(5).unwrap();
        let b = FiniteField::prime(7).unwrap();
        let x = a.element(a.from_int(2));
        let y = b.element(b.from_int(2));
        assert_eq!(x.apply(FieldOp::Add, &y).unwrap_err(), Error::FieldMismatch);
        let z = a.element(a.from_int(3));
        assert_eq!(x.apply(FieldOp::Div, &z).unwrap().value(), a.from_int(4));
        assert_eq!(x.apply(FieldOp::Div, &a.element(a.zero())).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn axioms_exhaustive_small_fields() {
        for (p, l) in [(2, 1), (3, 1), (13, 1), (2, 2), (2, 3), (3, 2), (2, 6), (5, 2), (7, 2), (3, 3)] {
            let f = FiniteField::new(p, l).unwrap();
            let q = f.order() as u64;
            assert!(q <= 64);
            for a in f.elements() {
                assert_eq!(f.pow(a, q), a, "Frobenius law in {f}");
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                assert_eq!(f.pow(f.frobenius_inverse(a), p as u64), a);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)), "distributivity in {f}");
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let small = FiniteField::new(2, 2).unwrap();
        let big = FiniteField::new(2, 4).unwrap();
        let emb = big.embedding_from(&small).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(emb[small.mul(a, b).0 as usize], big.mul(emb[a.0 as usize], emb[b.0 as usize]));
                assert_eq!(emb[small.add(a, b).0 as usize], big.add(emb[a.0 as usize], emb[b.0 as usize]));
            }
        }
    }
}
