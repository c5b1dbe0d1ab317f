use gradedcone_core::formats::{
    build_rc2q, cone_generators, cone_relations, extrasymmetric_generators, generic_extrasymmetric_ring,
    mv_generators, mv_relations, pfaffians4_of, veronese_ambient, ExtrasymmetricData, MVData,
    EXTRASYMMETRIC_REPEATS,
};
use gradedcone_core::ideal::GradedIdeal;
use gradedcone_core::syzygy::{degree_multiset, submodule_dim, syzygy_module, syzygy_space_dim};
use gradedcone_core::{parse_polynomial, verify_syzygy, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample_d(seed: u64) -> Polynomial {
    let a = veronese_ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Polynomial::random_homogeneous(&a, 7, 9, &mut rng)
}

#[test]
fn relations_annihilate_for_sampled_entries() {
    let a = veronese_ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let aa = Polynomial::random_homogeneous(&a, 5, 9, &mut rng);
    let bb = Polynomial::random_homogeneous(&a, 6, 9, &mut rng);
    let dd = Polynomial::random_homogeneous(&a, 7, 9, &mut rng);
    let f = cone_generators(&a, &aa, &bb, &dd).unwrap();
    for (j, s) in cone_relations(&a, &aa, &bb, &dd).iter().enumerate() {
        assert!(verify_syzygy(&f, s), "relation {}", j + 1);
        let deg = s.coeffs().iter().zip(&f).find(|(l, _)| !l.is_zero()).map(|(l, g)| {
            l.homogeneous_degree().unwrap() + g.homogeneous_degree().unwrap()
        });
        assert_eq!(deg, Some(s.degree()));
    }
}

#[test]
fn hilbert_function_of_the_curve_ring() {
    let a = veronese_ambient();
    let i = build_rc2q(&Polynomial::zero(&a)).unwrap();
    let expected: Vec<i64> = (0..=10).map(|d| if d < 4 { [1, 1, 2, 4][d as usize] } else { 2 * d - 3 }).collect();
    assert_eq!(i.hilbert_function(10).coeffs(), &expected[..]);
    let j = build_rc2q(&sample_d(3)).unwrap();
    assert_eq!(j.hilbert_function(10).coeffs(), &expected[..]);
}

#[test]
fn normal_form_examples() {
    let a = veronese_ambient();
    let i = build_rc2q(&Polynomial::zero(&a)).unwrap();
    let y2 = parse_polynomial(&a, "y^2").unwrap();
    let nf = i.normal_form(&y2).unwrap();
    assert!(i.contains(&(&y2 - &nf)).unwrap());
    assert_eq!(nf, parse_polynomial(&a, "x2*z2").unwrap());
    let x2 = a.var("x2").unwrap();
    assert_eq!(i.normal_form(&x2).unwrap(), x2);
    assert!(i.normal_form(&i.generators()[4]).unwrap().is_zero());
}

#[test]
fn sixteen_minimal_relations() {
    let a = veronese_ambient();
    let d = sample_d(11);
    let i = build_rc2q(&d).unwrap();
    let f = i.generators().to_vec();
    let syz = syzygy_module(&f, 16);
    for s in &syz {
        assert!(verify_syzygy(&f, s));
    }
    assert_eq!(degree_multiset(&syz), vec![7, 8, 8, 9, 9, 10, 10, 10, 11, 11, 11, 12, 12, 13, 13, 14]);
    let sigma = cone_relations(&a, &a.var("v").unwrap(), &a.var("z2").unwrap().pow(2), &d);
    for deg in 0..=16 {
        let brute = syzygy_space_dim(&f, deg);
        assert_eq!(submodule_dim(&f, &syz, deg), brute, "computed, degree {deg}");
        assert_eq!(submodule_dim(&f, &sigma, deg), brute, "tabulated, degree {deg}");
    }
}

#[test]
fn extrasymmetric_cone_ideal_and_repeats() {
    let a = veronese_ambient();
    let v = a.var("v").unwrap();
    let b = a.var("z2").unwrap().pow(2);
    let d = sample_d(5);
    let data = ExtrasymmetricData::cone(&a, v.clone(), b.clone(), d.clone());
    let nine = extrasymmetric_generators(&data).unwrap();
    let ours = GradedIdeal::new(&a, nine).unwrap();
    assert!(ours.equals(&build_rc2q(&d).unwrap()).unwrap());

    let generic = ExtrasymmetricData::generic();
    let r = generic_extrasymmetric_ring();
    let canon = GradedIdeal::new(&r, extrasymmetric_generators(&generic).unwrap()).unwrap();
    let all = pfaffians4_of(&generic.matrix()).unwrap();
    assert_eq!(all.len(), 15);
    for p in &all {
        assert!(canon.contains(&p.value).unwrap(), "{:?}", p.deleted);
    }
    assert_eq!(EXTRASYMMETRIC_REPEATS.len() + 9, all.len());
}

#[test]
fn generic_mv_relations_vanish() {
    let data = MVData::generic();
    let g = mv_generators(&data);
    for (k, rel) in mv_relations(&data).iter().enumerate() {
        let mut acc = Polynomial::zero(data.m.ring());
        for (c, gi) in rel.iter().zip(&g) {
            acc = &acc + &(c * gi);
        }
        assert!(acc.is_zero(), "relation {}", k + 1);
    }
}

#[test]
fn generic_mv_has_sixteen_relations() {
    let data = MVData::generic();
    let g = mv_generators(&data);
    let syz = syzygy_module(&g, 4);
    assert_eq!(syz.len(), 16);
}
