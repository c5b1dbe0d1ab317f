//! Seeded property suites: pfaffians against determinants, Gröbner basis
//! invariance, parser round trips, ring axioms and monomial counts.

use gradedcone_core::formats::{pfaffian4, SkewMatrix};
use gradedcone_core::groebner::{buchberger, GroebnerOptions};
use gradedcone_core::poly::{monomials_of_degree, ratio, Monomial, WeightedRing};
use gradedcone_core::{hilbert_series_ci, parse_polynomial, Polynomial, RingRef};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_ring() -> RingRef {
    WeightedRing::new([("x", 1), ("y", 1), ("z", 2), ("w", 3)]).unwrap()
}

/// Sparse polynomial with up to `max_terms` terms of total degree at most 4
/// and rational coefficients.
fn random_poly(ring: &RingRef, rng: &mut ChaCha8Rng, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    let terms: Vec<(Monomial, _)> = (0..rng.gen_range(0..=max_terms))
        .map(|_| {
            let exps: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let m = Monomial::from_exponents(ring.weights(), &exps);
            let c = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=4));
            (m, c)
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Leibniz expansion over all permutations of four elements.
fn det4(m: &[[Polynomial; 4]; 4]) -> Polynomial {
    let ring = m[0][0].ring().clone();
    let mut total = Polynomial::zero(&ring);
    let mut perm = [0usize, 1, 2, 3];
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = Polynomial::one(&ring);
        for (row, &col) in p.iter().enumerate() {
            term = &term * &m[row][col];
        }
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
    });
    total
}

fn permute(p: &mut [usize; 4], k: usize, visit: &mut impl FnMut(&[usize; 4])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

#[test]
fn pfaffian_squared_is_determinant() {
    let r = small_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    for case in 0..100 {
        let upper: Vec<Polynomial> = (0..6).map(|_| random_poly(&r, &mut rng, 3)).collect();
        let m = SkewMatrix::from_upper(&r, 4, upper).unwrap();
        let dense: [[Polynomial; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| m.get(i, j)));
        let pf = pfaffian4(&m).unwrap();
        assert_eq!(&pf * &pf, det4(&dense), "case {case}");
    }
}

#[test]
fn groebner_basis_ignores_order_and_scaling() {
    let r = small_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for case in 0..20 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(2..=4))
            .map(|_| {
                let d = rng.gen_range(2..=4);
                Polynomial::random_homogeneous(&r, d, 3, &mut rng)
            })
            .filter(|g| !g.is_zero())
            .collect();
        let reference = buchberger(&r, &gens, &GroebnerOptions::default());
        let mut shuffled: Vec<Polynomial> = gens
            .iter()
            .map(|g| {
                let mut c = ratio(rng.gen_range(1..=7), rng.gen_range(1..=5));
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                g.scale(&c)
            })
            .collect();
        shuffled.shuffle(&mut rng);
        let other = buchberger(&r, &shuffled, &GroebnerOptions::default());
        assert_eq!(reference.elements(), other.elements(), "case {case}");
    }
}

#[test]
fn print_parse_round_trip() {
    let r = WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for case in 0..200 {
        let p = random_poly(&r, &mut rng, 6);
        let text = p.to_string();
        assert_eq!(parse_polynomial(&r, &text).unwrap(), p, "case {case}: {text}");
    }
}

#[test]
fn monomial_counts_match_the_free_series() {
    for weights in [vec![1, 2, 3, 3, 4, 5], vec![1, 1, 2, 3, 3, 4, 5], vec![1, 3, 5]] {
        let vars: Vec<(String, u32)> = weights.iter().enumerate().map(|(i, &w)| (format!("t{i}"), w)).collect();
        let r = WeightedRing::new(vars).unwrap();
        let series = hilbert_series_ci(&weights, &[], 20);
        for d in 0..=20 {
            assert_eq!(monomials_of_degree(&r, d).len() as i64, series.coeffs()[d as usize], "{weights:?} d={d}");
        }
    }
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_poly(&small_ring(), &mut rng, 5)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        // Each strategy builds its own ring, so move everything into one.
        let r = small_ring();
        let (a, b, c) = (a.embed(&r).unwrap(), b.embed(&r).unwrap(), c.embed(&r).unwrap());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
    }
}
