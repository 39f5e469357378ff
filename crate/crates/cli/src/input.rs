//! The line-oriented problem file.
//!
//! ```text
//! # comments start with '#'
//! field: 13
//! curve: y^2 - (x^5 - x)*(x^4 + 2)
//! ideal:
//!   x^3 + 4*x^2 + 4*x + 9
//!   y + 7*x^2 + 9*x + 12
//! ```
//!
//! `field:` takes a prime `p`, a prime power `q` or `p^l`. An optional
//! `modulus:` line gives the defining polynomial of `F_{p^l}` in `x`; the
//! default is the smallest monic irreducible one. Key lines start in the
//! first column. Indented lines continue the previous key: for `curve:`
//! they are joined into one polynomial, for `ideal:` each is a generator.
//! Generators may also follow `ideal:` on the same line, separated by
//! commas. Several `ideal:` blocks may be given.

use std::fmt;

use curve_ideals::poly::{X, Y};
use curve_ideals::{parse_poly, CurveRing, FiniteField, Monomial, MonomialOrder, MultiPoly, PolyRing, RingIdeal};

/// A malformed problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.msg)
        } else {
            write!(f, "line {}: {}", self.line, self.msg)
        }
    }
}

/// Source text of one polynomial with the line it starts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Source {
    pub line: usize,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInput {
    pub field: Source,
    pub modulus: Option<Source>,
    pub curve: Source,
    pub ideals: Vec<Vec<Source>>,
}

enum Key {
    Curve,
    Ideal,
    Other,
}

impl ProblemInput {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut field = None;
        let mut modulus = None;
        let mut curve: Option<Source> = None;
        let mut ideals: Vec<Vec<Source>> = Vec::new();
        let mut current = Key::Other;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            if content.starts_with(char::is_whitespace) {
                let value = content.trim().to_string();
                match current {
                    Key::Curve => {
                        let c = curve.as_mut().unwrap();
                        c.text.push(' ');
                        c.text.push_str(&value);
                    }
                    Key::Ideal => ideals.last_mut().unwrap().push(Source { line, text: value }),
                    Key::Other => return Err(err(line, "indented line outside a curve or ideal block")),
                }
                continue;
            }
            let (key, value) = content.split_once(':').ok_or_else(|| err(line, "expected 'key: value'"))?;
            let value = value.trim();
            let src = Source { line, text: value.to_string() };
            current = Key::Other;
            match key.trim() {
                "field" => set_once(&mut field, src, "field")?,
                "modulus" => set_once(&mut modulus, src, "modulus")?,
                "curve" => {
                    set_once(&mut curve, src, "curve")?;
                    current = Key::Curve;
                }
                "ideal" => {
                    let gens = value
                        .split(',')
                        .map(str::trim)
                        .filter(|g| !g.is_empty())
                        .map(|g| Source { line, text: g.to_string() })
                        .collect();
                    ideals.push(gens);
                    current = Key::Ideal;
                }
                other => return Err(err(line, format!("unknown key '{other}'"))),
            }
        }
        let field = field.ok_or_else(|| err(0, "missing 'field:'"))?;
        let curve = curve.ok_or_else(|| err(0, "missing 'curve:'"))?;
        if curve.text.is_empty() {
            return Err(err(curve.line, "empty curve"));
        }
        for block in &ideals {
            if block.is_empty() {
                return Err(err(0, "ideal block without generators"));
            }
        }
        Ok(ProblemInput { field, modulus, curve, ideals })
    }

    /// Builds `F_q` from the `field:` and `modulus:` lines.
    pub fn build_field(&self) -> Result<FiniteField, InputError> {
        let line = self.field.line;
        let (p, l) = parse_order(&self.field.text).ok_or_else(|| err(line, "expected p, q or p^l"))?;
        let field = match &self.modulus {
            None => FiniteField::new(p, l),
            Some(m) => {
                let fp = FiniteField::prime(p).map_err(|e| err(line, e))?;
                let ring = PolyRing::bivariate(fp, MonomialOrder::LEX_YX);
                let poly = parse_poly(&m.text, &ring).map_err(|e| err(m.line, e))?;
                if poly.degree_in(Y).unwrap_or(0) > 0 {
                    return Err(err(m.line, "modulus must be a polynomial in x"));
                }
                if poly.degree_in(X) != Some(l) {
                    return Err(err(m.line, format!("modulus degree does not match q = {p}^{l}")));
                }
                let dense: Vec<u32> = (0..=l).map(|i| poly.coeff(&Monomial::xy(i, 0)).code()).collect();
                FiniteField::with_modulus(p, &dense)
            }
        };
        field.map_err(|e| err(line, e))
    }

    /// Builds the curve ring, optionally checking smoothness.
    pub fn build_ring(&self, field: FiniteField, check_smooth: bool) -> Result<CurveRing, curve_ideals::Error> {
        let ring = PolyRing::bivariate(field, MonomialOrder::LEX_YX);
        let f = parse_poly(&self.curve.text, &ring)?;
        CurveRing::new(&f, check_smooth)
    }

    /// The `index`-th ideal block as an ideal of `ring`.
    pub fn ideal(&self, ring: &CurveRing, index: usize) -> Result<RingIdeal, curve_ideals::Error> {
        let gens = self.ideals[index]
            .iter()
            .map(|g| parse_poly(&g.text, ring.poly_ring()))
            .collect::<Result<Vec<MultiPoly>, _>>()?;
        ring.ideal(&gens)
    }
}

fn err(line: usize, msg: impl ToString) -> InputError {
    InputError { line, msg: msg.to_string() }
}

fn set_once(slot: &mut Option<Source>, src: Source, key: &str) -> Result<(), InputError> {
    if slot.is_some() {
        return Err(err(src.line, format!("duplicate '{key}:'")));
    }
    *slot = Some(src);
    Ok(())
}

/// `p`, `q` or `p^l` as `(p, l)`.
fn parse_order(text: &str) -> Option<(u32, u32)> {
    if let Some((p, l)) = text.split_once('^') {
        return Some((p.trim().parse().ok()?, l.trim().parse().ok()?));
    }
    let q: u32 = text.trim().parse().ok()?;
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut l) = (q, 0);
    while r % p == 0 {
        r /= p;
        l += 1;
    }
    (r == 1).then_some((p, l))
}
