use gradedcone_core::deformation::{
    default_obstruction_grid, five_syzygy_check, hom_graded_basis, hom_graded_dim, lift_order2, normalize_d,
    ClassSource, ConeDeformations, DeformationProblem, FirstOrderDirection, ParameterPoint,
};
use gradedcone_core::formats::{cone_ambient, veronese_ambient};
use gradedcone_core::poly::ratio;
use gradedcone_core::syzygy::syzygy_module;
use gradedcone_core::{parse_polynomial, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

const DIMENSIONS: [usize; 10] = [30, 23, 16, 11, 6, 4, 2, 1, 0, 0];

fn family() -> &'static ConeDeformations {
    static FAMILY: OnceLock<ConeDeformations> = OnceLock::new();
    FAMILY.get_or_init(|| ConeDeformations::new(&Polynomial::zero(&veronese_ambient())).unwrap())
}

/// A seeded degree-7 `D` without `x2^7`, rewritten into normalized form.
fn general_d() -> Polynomial {
    let a = veronese_ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let d = Polynomial::random_homogeneous(&a, 7, 5, &mut rng);
    let x2_7 = parse_polynomial(&a, "x2^7").unwrap();
    let c = d.coefficient(x2_7.leading_monomial().unwrap());
    normalize_d(&(&d - &x2_7.scale(&c)))
}

fn tuple(ring: &gradedcone_core::RingRef, parts: [&str; 9]) -> FirstOrderDirection {
    FirstOrderDirection::new(parts.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect())
}

#[test]
fn dimension_table() {
    let p = family().base();
    let dims: Vec<usize> = (0..10).map(|k| hom_graded_dim(p, k)).collect();
    assert_eq!(dims, DIMENSIONS);
}

#[test]
fn dimension_table_for_general_d() {
    let p = DeformationProblem::rc2q(&veronese_ambient(), &general_d()).unwrap();
    let dims: Vec<usize> = (0..10).map(|k| hom_graded_dim(&p, k)).collect();
    assert_eq!(dims, DIMENSIONS);
}

#[test]
fn five_relations_suffice() {
    let p = family().base();
    for k in 0..10 {
        assert_eq!(five_syzygy_check(p, k).unwrap(), DIMENSIONS[k as usize], "k = {k}");
    }
}

#[test]
fn computed_relations_give_the_same_dimensions() {
    let p = family().base();
    let computed = p.with_syzygies(syzygy_module(p.generators(), 16)).unwrap();
    for k in 0..10 {
        assert_eq!(hom_graded_dim(&computed, k), DIMENSIONS[k as usize], "k = {k}");
    }
}

#[test]
fn top_degree_class() {
    let p = family().base();
    let basis = hom_graded_basis(p, 7);
    assert_eq!(basis.len(), 1);
    let c = basis[0].components();
    assert!(c[..6].iter().all(Polynomial::is_zero));
    let r = p.ring();
    let expected = ["x2", "y", "z1"].map(|s| parse_polynomial(r, s).unwrap());
    let lc = c[6].leading_coeff().unwrap().clone();
    for (got, want) in c[6..].iter().zip(&expected) {
        assert_eq!(*got, want.scale(&lc));
    }
    assert!(hom_graded_basis(p, 8).is_empty());
}

#[test]
fn degree_one_class_is_a_cocycle_and_not_induced() {
    let fam = family();
    let r = fam.base().ring();
    let class = tuple(r, ["z1", "0", "-v", "-y*z2", "-z2^2", "0", "z2*u", "0", "0"]);
    fam.base().check_direction(&class, 1).unwrap();
    assert!(!fam.is_induced(1, &class));
    assert_eq!(fam.class(1).1, ClassSource::Formula);
    assert_eq!(fam.class(0).1, ClassSource::Formula);
}

#[test]
fn induced_subspaces_have_the_expected_codimension() {
    let fam = family();
    for k in 0..10 {
        let codim = DIMENSIONS[k as usize] - fam.induced_dim(k);
        assert_eq!(codim, usize::from(k < 2), "k = {k}");
    }
}

#[test]
fn reduced_direction_examples() {
    let fam = family();
    let b = cone_ambient();
    assert!(fam.reduced_direction(&ParameterPoint::zero()).unwrap().is_zero());

    let c0 = fam.reduced_direction(&ParameterPoint::zero().with("c0", 1)).unwrap();
    assert_eq!(c0, tuple(&b, ["-u", "-v", "0", "-z2^2", "0", "0", "0", "0", "0"]));

    let a5 = fam.reduced_direction(&ParameterPoint::zero().with("a5", 1)).unwrap();
    let expected = tuple(&b, ["0", "0", "0", "0", "0", "0", "x1^5*z1", "x1^5*u", "x1^5*v"]);
    assert_eq!(a5, expected);
}

#[test]
fn general_d_classes_come_from_the_formulas() {
    let fam = ConeDeformations::new(&general_d()).unwrap();
    assert_eq!(fam.class(0).1, ClassSource::Formula);
    assert_eq!(fam.class(1).1, ClassSource::Formula);
    let pt = ParameterPoint::zero().with("c0", 1).with("c1", 2).with("d11", 1).with("b3", -1);
    fam.reduced_direction(&pt).unwrap();
}

#[test]
fn designated_lifting_points() {
    let fam = family();
    let cases = [
        (ParameterPoint::zero(), true),
        (ParameterPoint::zero().with("c0", 1).with("a5", 1), false),
        (ParameterPoint::zero().with("a5", 1), true),
        (ParameterPoint::zero().with("c0", 1).with("c1", 1).with("d7", 1).with("b6", 1), true),
        (ParameterPoint::zero().with("c0", 1).with("d7", 1), false),
        (ParameterPoint::zero().with("c0", 1), true),
    ];
    for (pt, feasible) in cases {
        assert_eq!(fam.lift_order2(&pt).unwrap().feasible, feasible, "{pt}");
    }
}

#[test]
fn lifting_is_invariant_under_rescaling() {
    let fam = family();
    for pt in [ParameterPoint::zero().with("c0", 1).with("a5", 1), ParameterPoint::zero().with("c1", 1).with("d5", 1)] {
        let dir = fam.reduced_direction(&pt).unwrap();
        let base = lift_order2(fam.cone(), &dir).unwrap().feasible;
        for s in [ratio(3, 2), ratio(-2, 1)] {
            assert_eq!(lift_order2(fam.cone(), &dir.scale(&s)).unwrap().feasible, base);
        }
    }
}

#[test]
fn entry_variations_always_lift() {
    let fam = family();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    use rand::Rng;
    for _ in 0..20 {
        let mut pt = ParameterPoint::zero();
        for name in &ParameterPoint::NAMES[2..] {
            pt.set(name, gradedcone_core::poly::rat(rng.gen_range(-3..=3))).unwrap();
        }
        assert!(fam.lift_order2(&pt).unwrap().feasible, "{pt}");
    }
}

#[test]
fn non_cocycle_is_rejected() {
    let fam = family();
    let b = cone_ambient();
    let bad = tuple(&b, ["x1*z1", "0", "0", "0", "0", "0", "0", "0", "0"]);
    assert!(lift_order2(fam.cone(), &bad).is_err());
}

#[test]
fn obstruction_grid_matches_quadrics() {
    let scan = family().obstruction_scan(&default_obstruction_grid()).unwrap();
    for row in &scan.rows {
        assert_eq!(row.feasible, row.quadrics_vanish, "{}", row.point);
    }
    assert!(scan.agrees);
}
