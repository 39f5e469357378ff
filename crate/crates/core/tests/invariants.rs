mod common;

use common::{elliptic19 as e2, hyperelliptic13 as e1, ideal, SMALL_CURVES};
use curve_ideals::factor::{equal_degree_traced, EdfEvent};
use curve_ideals::{
    distinct_degree, enumerate_primes, equal_degree, factorize, is_prime, oracle_factor_with, radical_decomposition,
    random_product, CurveRing, Factorization, RingIdeal,
};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn triples(f: &Factorization) -> Vec<(RingIdeal, u32, u32)> {
    f.factors().iter().map(|p| (p.prime.clone(), p.multiplicity, p.degree)).collect()
}

fn small_ring(i: usize) -> CurveRing {
    common::ring(SMALL_CURVES[i].0, SMALL_CURVES[i].1)
}

fn coprime(a: &RingIdeal, b: &RingIdeal) -> bool {
    a.sum(b).unwrap().is_unit()
}

fn check_stages(a: &RingIdeal, expected: &Factorization, rng: &mut ChaCha8Rng) {
    let ring = a.ring();
    let rd = radical_decomposition(a).unwrap();
    let gs = rd.factors();
    assert!(!gs.last().unwrap().is_unit());
    assert_eq!(&rd.product().unwrap(), a);
    for (i, g) in gs.iter().enumerate() {
        assert!(g.is_unit() || g.is_radical().unwrap());
        for h in &gs[i + 1..] {
            assert!(coprime(g, h));
        }
    }
    for (j, g) in gs.iter().enumerate() {
        let mult = j as u32 + 1;
        if g.is_unit() {
            assert!(expected.factors().iter().all(|f| f.multiplicity != mult));
            continue;
        }
        let ddf = distinct_degree(g).unwrap();
        for (k, h) in ddf.factors().iter().enumerate() {
            let deg = k as u32 + 1;
            let count = expected.factors().iter().filter(|f| f.multiplicity == mult && f.degree == deg).count();
            if h.is_unit() {
                assert_eq!(count, 0);
                continue;
            }
            assert_eq!(h.dimension().unwrap(), deg as usize * count);
            assert_eq!(&ring.frobenius_ideal(deg, h).unwrap(), h);
            for d in (1..deg).filter(|d| deg.is_multiple_of(*d)) {
                assert!(ring.frobenius_ideal(d, h).unwrap().is_unit());
            }
            let primes = equal_degree(h, deg, rng).unwrap();
            assert_eq!(primes.len(), count);
            let mut product = ring.unit_ideal();
            for (i, p) in primes.iter().enumerate() {
                assert_eq!(is_prime(p).unwrap(), Some(deg));
                for other in &primes[i + 1..] {
                    assert!(coprime(p, other));
                }
                product = product.product(p).unwrap();
            }
            assert_eq!(&product, h);
        }
    }
}

#[test]
fn stage_invariants_on_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..SMALL_CURVES.len() {
        let ring = small_ring(i);
        let primes = enumerate_primes(&ring, 3).unwrap();
        for _ in 0..12 {
            let built = random_product(&primes, 4, 3, &mut rng).unwrap();
            check_stages(built.input(), &built, &mut rng);
        }
    }
}

#[test]
fn stage_invariants_on_golden_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (ring, gens) in [(e1::ring(), &e1::A), (e2::ring(), &e2::A)] {
        let a = ideal(&ring, gens);
        let expected = factorize(&a, &mut rng).unwrap();
        assert!(expected.verify().unwrap());
        check_stages(&a, &expected, &mut rng);
    }
}

#[test]
fn pipeline_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..SMALL_CURVES.len() {
        let ring = small_ring(i);
        let primes = enumerate_primes(&ring, 3).unwrap();
        for _ in 0..10 {
            let built = random_product(&primes, 4, 3, &mut rng).unwrap();
            let a = built.input();
            let pipeline = factorize(a, &mut rng).unwrap();
            let oracle = oracle_factor_with(a, &primes).unwrap();
            assert_eq!(triples(&pipeline), triples(&built));
            assert_eq!(triples(&oracle), triples(&built));
        }
    }
}

#[test]
fn golden_input_agrees_with_oracle() {
    let ring = e1::ring();
    let a = ideal(&ring, &e1::A);
    let primes = enumerate_primes(&ring, 3).unwrap();
    let oracle = oracle_factor_with(&a, &primes).unwrap();
    let pipeline = factorize(&a, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
    assert_eq!(triples(&oracle), triples(&pipeline));
}

#[test]
fn square_of_prime() {
    let ring = small_ring(2);
    let primes = enumerate_primes(&ring, 2).unwrap();
    let (p, d) = primes.iter().find(|(_, d)| *d == 2).unwrap();
    let a = p.pow(2).unwrap();
    let fac = factorize(&a, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
    assert_eq!(triples(&fac), vec![(p.clone(), 2, *d)]);
}

#[test]
fn primality_test_matches_enumeration() {
    for i in 0..SMALL_CURVES.len() {
        let ring = small_ring(i);
        for (p, d) in enumerate_primes(&ring, 3).unwrap() {
            assert_eq!(is_prime(&p).unwrap(), Some(d));
        }
    }
    let ring = e1::ring();
    assert_eq!(is_prime(&ideal(&ring, &e1::P1)).unwrap(), Some(3));
    assert_eq!(is_prime(&ideal(&ring, &e1::G1)).unwrap(), None);
    let ring = e2::ring();
    assert_eq!(is_prime(&ideal(&ring, &e2::G1)).unwrap(), None);
    assert_eq!(is_prime(&ring.unit_ideal()).unwrap_err(), curve_ideals::Error::UnitIdeal);
}

#[test]
fn residue_fields_have_unit_group_of_order_q_d_minus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..SMALL_CURVES.len() {
        let ring = small_ring(i);
        for (p, d) in enumerate_primes(&ring, 3).unwrap() {
            let e = BigUint::from(ring.q()).pow(d) - 1u32;
            for _ in 0..3 {
                let b = p.random_element(&mut rng).unwrap();
                assert!(p.residue_pow(&b, &e).unwrap().is_one());
            }
        }
    }
}

#[test]
fn radical_and_colon_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..SMALL_CURVES.len() {
        let ring = small_ring(i);
        let primes = enumerate_primes(&ring, 2).unwrap();
        for _ in 0..8 {
            let a = random_product(&primes, 3, 3, &mut rng).unwrap();
            let b = random_product(&primes, 3, 3, &mut rng).unwrap();
            let mut support = ring.unit_ideal();
            for f in a.factors() {
                support = support.intersect(&f.prime).unwrap();
            }
            assert_eq!(a.input().radical().unwrap(), support);

            // (a : b) = ∏ p^{max(k_a - k_b, 0)}
            let mut want = ring.unit_ideal();
            for f in a.factors() {
                let kb = b.factors().iter().find(|g| g.prime == f.prime).map_or(0, |g| g.multiplicity);
                if f.multiplicity > kb {
                    want = want.product(&f.prime.pow(f.multiplicity - kb).unwrap()).unwrap();
                }
            }
            let colon = a.input().colon(b.input()).unwrap();
            assert_eq!(colon, want);
            assert!(a.input().contains_ideal(&colon.product(b.input()).unwrap()).unwrap());
        }
    }
}

#[test]
fn equal_degree_transcript_depends_only_on_seed() {
    let ring = e1::ring();
    let h13 = ideal(&ring, &e1::H13);
    let run = |seed| {
        let mut trace = Vec::new();
        let out = equal_degree_traced(&h13, 3, &mut ChaCha8Rng::seed_from_u64(seed), &mut trace).unwrap();
        (out, trace)
    };
    let (out, trace) = run(42);
    assert_eq!((out.clone(), trace.clone()), run(42));
    assert_eq!(trace.iter().filter(|e| matches!(e, EdfEvent::Prime { .. })).count(), 2);
    assert!(matches!(trace.last(), Some(EdfEvent::Prime { dimension: 3 })));

    let ring = small_ring(1);
    let primes = enumerate_primes(&ring, 2).unwrap();
    let build = |seed| random_product(&primes, 4, 3, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
    let a = build(9);
    assert_eq!(a, build(9));
    let f1 = factorize(a.input(), &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
    let f2 = factorize(a.input(), &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
    assert_eq!(f1.to_string(), f2.to_string());
}
