//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;

use gradedcone_cli::{run_scenario, Options};
use gradedcone_core::formats::{pfaffian4, SkewMatrix};
use gradedcone_core::groebner::{buchberger, GroebnerOptions};
use gradedcone_core::poly::{ratio, Monomial, WeightedRing};
use gradedcone_core::{parse_polynomial, Polynomial, RingRef};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CRITERIA: [(u32, &str); 9] = [
    (1, "t1-dimensions"),
    (2, "ci66-hilbert"),
    (3, "hilbert-rc2q"),
    (4, "pfaffian-format"),
    (5, "mv-format"),
    (6, "syzygies-16"),
    (7, "five-syzygy-equivalence"),
    (8, "obstruction-quadrics"),
    (9, "moduli-parameter-counts"),
];

fn small_ring() -> RingRef {
    WeightedRing::new([("x", 1), ("y", 1), ("z", 2), ("w", 3)]).unwrap()
}

fn random_poly(ring: &RingRef, rng: &mut ChaCha8Rng, max_terms: usize) -> Polynomial {
    let terms: Vec<(Monomial, _)> = (0..rng.gen_range(0..=max_terms))
        .map(|_| {
            let exps: Vec<u16> = (0..ring.nvars()).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial::from_exponents(ring.weights(), &exps), ratio(rng.gen_range(-20..=20), rng.gen_range(1..=4)))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn det4(m: &[[Polynomial; 4]; 4]) -> Polynomial {
    let ring = m[0][0].ring().clone();
    let mut total = Polynomial::zero(&ring);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| p[i] == p[j])) {
                        continue;
                    }
                    let inv = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                    let term = p.iter().enumerate().fold(Polynomial::one(&ring), |t, (r, &col)| &t * &m[r][col]);
                    total = if inv % 2 == 0 { &total + &term } else { &total - &term };
                }
            }
        }
    }
    total
}

fn pfaffian_squares(rng: &mut ChaCha8Rng) -> usize {
    let r = small_ring();
    (0..100)
        .filter(|_| {
            let upper: Vec<Polynomial> = (0..6).map(|_| random_poly(&r, rng, 3)).collect();
            let m = SkewMatrix::from_upper(&r, 4, upper).unwrap();
            let dense: [[Polynomial; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| m.get(i, j)));
            let pf = pfaffian4(&m).unwrap();
            &pf * &pf == det4(&dense)
        })
        .count()
}

fn groebner_invariance(rng: &mut ChaCha8Rng) -> usize {
    let r = small_ring();
    (0..20)
        .filter(|_| {
            let gens: Vec<Polynomial> = (0..rng.gen_range(2..=4))
                .map(|_| {
                    let d = rng.gen_range(2..=4);
                    Polynomial::random_homogeneous(&r, d, 3, rng)
                })
                .filter(|g| !g.is_zero())
                .collect();
            let reference = buchberger(&r, &gens, &GroebnerOptions::default());
            let mut other: Vec<Polynomial> =
                gens.iter().map(|g| g.scale(&ratio(rng.gen_range(-7..=7i64).max(1), rng.gen_range(1..=5)))).collect();
            other.shuffle(rng);
            reference.elements() == buchberger(&r, &other, &GroebnerOptions::default()).elements()
        })
        .count()
}

fn round_trips(rng: &mut ChaCha8Rng) -> usize {
    let r = WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap();
    (0..200)
        .filter(|_| {
            let p = random_poly(&r, rng, 6);
            parse_polynomial(&r, &p.to_string()).ok() == Some(p)
        })
        .count()
}

fn main() -> ExitCode {
    let opts = Options::default();
    let mut failed = 0;
    for (n, scenario) in CRITERIA {
        let (pass, detail) = match run_scenario(scenario, &opts) {
            Ok(report) => {
                let bad: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
                (report.pass, if bad.is_empty() { format!("{} checks", report.checks.len()) } else { bad.join("; ") })
            }
            Err(e) => (false, e.to_string()),
        };
        failed += usize::from(!pass);
        println!("criterion {n}: {} ({scenario}: {detail})", if pass { "PASS" } else { "FAIL" });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let counts = [pfaffian_squares(&mut rng), groebner_invariance(&mut rng), round_trips(&mut rng)];
    let pass = counts == [100, 20, 200];
    failed += usize::from(!pass);
    println!(
        "criterion 10: {} (properties: pf^2 = det {}/100, GB invariance {}/20, round trip {}/200)",
        if pass { "PASS" } else { "FAIL" },
        counts[0],
        counts[1],
        counts[2]
    );

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
