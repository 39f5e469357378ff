#![allow(dead_code)]

use curve_ideals::{parse_poly, CurveRing, FiniteField, MonomialOrder, PolyRing, RingIdeal};

pub fn ring(q: u32, curve: &str) -> CurveRing {
    let r = PolyRing::bivariate(FiniteField::of_order(q).unwrap(), MonomialOrder::LEX_YX);
    CurveRing::new(&parse_poly(curve, &r).unwrap(), true).unwrap()
}

pub fn ideal(ring: &CurveRing, gens: &[&str]) -> RingIdeal {
    let gens: Vec<_> = gens.iter().map(|g| parse_poly(g, ring.poly_ring()).unwrap()).collect();
    ring.ideal(&gens).unwrap()
}

pub mod hyperelliptic13 {
    use super::*;

    pub const CURVE: &str = "y^2 - (x^5 - x)*(x^4 + 2)";
    pub const A: [&str; 2] = [
        "x^9 + 8*x^7 + 5*x^6 + 10*x^5 + 6*x^4 + 4*x^3 + 9*x^2 + 6*x + 4",
        "11*x^8 + 8*x^7 + 2*x^6 + 10*x^5 + 6*x^4 + x^3*y + x^3 + 4*x^2*y + 7*x^2 + 4*x*y + 9*y + 7",
    ];
    pub const G1: [&str; 2] =
        ["x^6 + 9*x^5 + 7*x^4 + 10*x^3 + 4*x^2 + 4*x + 12", "y + 12*x^5 + x^4 + 11*x^3 + 10*x^2 + 3*x + 8"];
    pub const G2: [&str; 2] = ["x^3 + 4*x^2 + 4*x + 9", "y + 7*x^2 + 9*x + 12"];
    pub const H13: [&str; 2] = [
        "8*x^5*y + 5*x^4*y + 9*x^3*y + x*y + 5*y + 1",
        "x^6*y + 9*x^5*y + 7*x^4*y + 10*x^3*y + 4*x^2*y + 4*x*y + 12*y",
    ];
    pub const H23: [&str; 2] = ["5*x^2*y + 5*x*y + 6*y + 1", "x^3*y + 4*x^2*y + 4*x*y + 9*y"];
    pub const P1: [&str; 2] = ["x^3 + 4*x^2 + 4*x + 9", "y + 6*x^2 + 4*x + 1"];
    pub const P2: [&str; 2] = ["x^3 + 5*x^2 + 9*x + 10", "y + 3*x^2 + 7*x + 4"];
    pub const P3: [&str; 2] = ["x^3 + 4*x^2 + 4*x + 9", "y + 7*x^2 + 9*x + 12"];

    pub fn ring() -> CurveRing {
        super::ring(13, CURVE)
    }
}

pub mod elliptic19 {
    use super::*;

    pub const CURVE: &str = "y^2 + y - (x^3 - 2*x^2 + 1)";
    pub const A: [&str; 2] = [
        "x^21 + 14*x^20 + 9*x^19 + 4*x^18 + 5*x^17 + 12*x^16 + 9*x^15 + 7*x^14 + 12*x^13 + 8*x^12 \
         + 3*x^11 + 8*x^10 + 14*x^9 + 7*x^8 + 12*x^7 + x^6 + 9*x^5 + 13*x^4 + 9*x^3 + 4*x^2 + 18*x + 4",
        "x^3*y + 6*x^2*y + 3*x*y + 17*y + 7*x^18 + 7*x^17 + 11*x^16 + x^15 + 18*x^13 + 8*x^12 + 9*x^11 \
         + 15*x^10 + 13*x^9 + 18*x^8 + 12*x^7 + x^6 + 14*x^5 + 10*x^4 + 7*x^3 + 15*x^2 + 9*x + 5",
    ];
    pub const G1: [&str; 2] = ["x^3 + 6*x^2 + 3*x + 17", "x^3*y + 6*x^2*y + 3*x*y + 17*y"];
    pub const G2: [&str; 2] = ["x^3 + 4*x + 17", "y + 8*x^2 + 2*x + 9"];
    pub const G4: [&str; 2] = ["x^3 + 2*x^2 + 10*x + 4", "y + 8*x^2 + 3*x"];
    pub const H12: [&str; 1] = ["x + 1"];
    pub const H14: [&str; 1] = ["x^2 + 5*x + 17"];

    pub fn ring() -> CurveRing {
        super::ring(19, CURVE)
    }
}

/// One smooth curve over each of F_2, F_3 and F_5.
pub const SMALL_CURVES: [(u32, &str); 3] =
    [(2, "y^2 + y + x^3 + x + 1"), (3, "y^2 - x^3 + x - 1"), (5, "y^2 - x^3 - x - 1")];
