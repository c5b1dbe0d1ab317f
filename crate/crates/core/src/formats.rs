//! Pfaffian formats: skew-symmetric matrices, the extrasymmetric 6x6
//! format, the MV format (5x5 skew matrix plus a vector), and the graded
//! rings they are used on.
//!
//! Indices in tables and labels are 1-based, matching the usual matrix
//! notation; method arguments are 0-based.

use num_traits::{One, Zero};

use crate::error::{FormatError, IdealError, PolyError};
use crate::ideal::GradedIdeal;
use crate::parse::parse_polynomial;
use crate::poly::{Coeff, Monomial, Polynomial, RingRef, WeightedRing};
use crate::syzygy::SyzygyVector;

/// `Q[x2, y, z1, z2, u, v]` with weights `(1, 2, 3, 3, 4, 5)`.
pub fn veronese_ambient() -> RingRef {
    WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap()
}

/// `Q[x1, x2, y, z1, z2, u, v]` with weights `(1, 1, 2, 3, 3, 4, 5)`.
pub fn cone_ambient() -> RingRef {
    WeightedRing::new([("x1", 1), ("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap()
}

/// `Q[xi, eta, zeta]` with weights `(1, 3, 5)`.
pub fn plane_ring() -> RingRef {
    WeightedRing::new([("xi", 1), ("eta", 3), ("zeta", 5)]).unwrap()
}

/// Entries of the generic extrasymmetric matrix, graded so that every 4x4
/// pfaffian is homogeneous (rows carry weights `1, 1, 1, 1, 3, 3`).
pub fn generic_extrasymmetric_ring() -> RingRef {
    WeightedRing::new([
        ("n1", 2),
        ("n2", 2),
        ("n3", 2),
        ("n4", 4),
        ("n5", 4),
        ("n6", 2),
        ("n7", 2),
        ("n8", 4),
        ("n9", 2),
        ("a", 2),
        ("b", 2),
    ])
    .unwrap()
}

/// Entries of a generic 5x5 skew matrix and a generic 5-vector, all of
/// weight one.
pub fn generic_mv_ring() -> RingRef {
    let mut vars: Vec<(String, u32)> = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            vars.push((format!("m{i}{j}"), 1));
        }
    }
    for i in 1..=5 {
        vars.push((format!("v{i}"), 1));
    }
    WeightedRing::new(vars).unwrap()
}

/// Skew-symmetric matrix stored by its strict upper triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    ring: RingRef,
    n: usize,
    upper: Vec<Polynomial>,
}

impl SkewMatrix {
    pub fn zero(ring: &RingRef, n: usize) -> Self {
        SkewMatrix { ring: ring.clone(), n, upper: vec![Polynomial::zero(ring); n * n.saturating_sub(1) / 2] }
    }

    /// Builds from the upper triangle listed row by row: `m12, m13, .., m1n,
    /// m23, ..`.
    pub fn from_upper(ring: &RingRef, n: usize, entries: Vec<Polynomial>) -> Result<Self, FormatError> {
        let expected = n * n.saturating_sub(1) / 2;
        if entries.len() != expected {
            return Err(FormatError::WrongSize {
                expected: format!("{expected} upper-triangle entries for {n}"),
                got: entries.len(),
            });
        }
        Ok(SkewMatrix { ring: ring.clone(), n, upper: entries })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry `(i, j)`, 0-based, with the diagonal and lower triangle implied.
    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Polynomial::zero(&self.ring),
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => -&self.upper[self.slot(j, i)],
        }
    }

    /// Sets entry `(i, j)` and, implicitly, `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_ne!(i, j, "diagonal entries of a skew matrix are zero");
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = p;
        } else {
            let s = self.slot(j, i);
            self.upper[s] = -p;
        }
    }

    /// Pfaffian of the principal submatrix on `rows` (0-based, taken in the
    /// given order), by expansion along the first row.
    pub fn pfaffian_of(&self, rows: &[usize]) -> Polynomial {
        assert!(rows.len().is_multiple_of(2), "pfaffians need an even number of rows");
        if rows.is_empty() {
            return Polynomial::one(&self.ring);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for k in 1..rows.len() {
            let entry = self.get(rows[0], rows[k]);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = rows[1..].iter().enumerate().filter(|(t, _)| t + 1 != k).map(|(_, &r)| r).collect();
            let minor = self.pfaffian_of(&rest);
            let term = &entry * &minor;
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// `M * w` for a column vector `w`.
    pub fn mul_vector(&self, w: &[Polynomial]) -> Vec<Polynomial> {
        (0..self.n)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.ring);
                for (j, wj) in w.iter().enumerate() {
                    if i != j {
                        acc = &acc + &(&self.get(i, j) * wj);
                    }
                }
                acc
            })
            .collect()
    }
}

/// `m12 m34 - m13 m24 + m14 m23` for a 4x4 skew matrix.
pub fn pfaffian4(m: &SkewMatrix) -> Result<Polynomial, FormatError> {
    if m.size() != 4 {
        return Err(FormatError::WrongSize { expected: "4".into(), got: m.size() });
    }
    Ok(m.pfaffian_of(&[0, 1, 2, 3]))
}

/// A 4x4 pfaffian labelled by the rows (1-based) deleted to obtain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPfaffian {
    pub deleted: Vec<usize>,
    pub value: Polynomial,
}

/// All 4x4 principal pfaffians of a 5x5 or 6x6 skew matrix, with rows kept
/// in increasing order. For n = 5 they are indexed by the deleted row, for
/// n = 6 by the deleted pair in lexicographic order.
pub fn pfaffians4_of(m: &SkewMatrix) -> Result<Vec<LabeledPfaffian>, FormatError> {
    let n = m.size();
    let mut out = Vec::new();
    match n {
        5 => {
            for d in 0..5 {
                let rows: Vec<usize> = (0..5).filter(|&r| r != d).collect();
                out.push(LabeledPfaffian { deleted: vec![d + 1], value: m.pfaffian_of(&rows) });
            }
        }
        6 => {
            for d1 in 0..6 {
                for d2 in d1 + 1..6 {
                    let rows: Vec<usize> = (0..6).filter(|&r| r != d1 && r != d2).collect();
                    out.push(LabeledPfaffian { deleted: vec![d1 + 1, d2 + 1], value: m.pfaffian_of(&rows) });
                }
            }
        }
        _ => return Err(FormatError::WrongSize { expected: "5 or 6".into(), got: n }),
    }
    Ok(out)
}

/// Pfaffian of the 6x6 extrasymmetric matrix with rows `deleted` removed.
fn pfaffian_deleting(m: &SkewMatrix, deleted: [usize; 2]) -> Polynomial {
    let rows: Vec<usize> = (1..=6).filter(|r| !deleted.contains(r)).map(|r| r - 1).collect();
    m.pfaffian_of(&rows)
}

/// The nine canonical extrasymmetric generators: generator `k` is `sign`
/// times the pfaffian obtained by deleting the listed pair of rows. The
/// order and signs make the cone matrix
///
/// ```text
///   .  A  B  z1 y  x2
///      .  D  u  z2 y
///         .  v  u  z1
///            .  0  0
///               .  0
/// ```
///
/// produce `f1, .., f9` literally.
pub const EXTRASYMMETRIC_SIGN_TABLE: [([usize; 2], i8); 9] = [
    ([3, 4], 1),
    ([3, 5], 1),
    ([3, 6], 1),
    ([2, 5], 1),
    ([1, 5], 1),
    ([1, 6], 1),
    ([4, 5], 1),
    ([4, 6], 1),
    ([5, 6], 1),
];

/// The six remaining pfaffians as multiples of canonical generators:
/// `(deleted pair, power of a, power of b, canonical index 0-based)`.
pub const EXTRASYMMETRIC_REPEATS: [([usize; 2], u32, u32, usize); 6] = [
    ([1, 2], 1, 1, 8),
    ([1, 3], 0, 1, 7),
    ([2, 3], 0, 1, 6),
    ([1, 4], 1, 0, 2),
    ([2, 4], 1, 0, 1),
    ([2, 6], 0, 0, 4),
];

/// Entries `n1..n9, a, b` of an extrasymmetric matrix
///
/// ```text
///   .  n1 n2  n3   n4   n5
///      .  n6  n7   n8   n4
///         .   n9   a*n7 a*n3
///             .    b*n6 b*n2
///                  .    a*b*n1
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtrasymmetricData {
    pub n: [Polynomial; 9],
    pub a: Polynomial,
    pub b: Polynomial,
}

impl ExtrasymmetricData {
    /// The generic matrix over [`generic_extrasymmetric_ring`].
    pub fn generic() -> Self {
        let r = generic_extrasymmetric_ring();
        let n = std::array::from_fn(|i| Polynomial::var(&r, i));
        ExtrasymmetricData { n, a: Polynomial::var(&r, 9), b: Polynomial::var(&r, 10) }
    }

    /// The cone format with entries `A, B, D` and `a = 1, b = 0`.
    pub fn cone(ring: &RingRef, a_entry: Polynomial, b_entry: Polynomial, d_entry: Polynomial) -> Self {
        let v = |name: &str| ring.var(name).expect("ring has the Veronese variables");
        ExtrasymmetricData {
            n: [a_entry, b_entry, v("z1"), v("y"), v("x2"), d_entry, v("u"), v("z2"), v("v")],
            a: Polynomial::one(ring),
            b: Polynomial::zero(ring),
        }
    }

    pub fn ring(&self) -> &RingRef {
        self.a.ring()
    }

    pub fn matrix(&self) -> SkewMatrix {
        let [n1, n2, n3, n4, n5, n6, n7, n8, n9] = &self.n;
        let (a, b) = (&self.a, &self.b);
        let entries = vec![
            n1.clone(),
            n2.clone(),
            n3.clone(),
            n4.clone(),
            n5.clone(),
            n6.clone(),
            n7.clone(),
            n8.clone(),
            n4.clone(),
            n9.clone(),
            a * n7,
            a * n3,
            b * n6,
            b * n2,
            &(a * b) * n1,
        ];
        SkewMatrix::from_upper(self.ring(), 6, entries).unwrap()
    }
}

/// The nine canonical pfaffians, ordered and signed by
/// [`EXTRASYMMETRIC_SIGN_TABLE`].
pub fn extrasymmetric_generators(e: &ExtrasymmetricData) -> Result<Vec<Polynomial>, FormatError> {
    let m = e.matrix();
    let mut out = Vec::with_capacity(9);
    for (index, (deleted, sign)) in EXTRASYMMETRIC_SIGN_TABLE.iter().enumerate() {
        let p = pfaffian_deleting(&m, *deleted);
        if !p.is_zero() && !p.is_homogeneous() {
            return Err(FormatError::Inhomogeneous { index: index + 1 });
        }
        out.push(if *sign < 0 { -p } else { p });
    }
    Ok(out)
}

/// A 5x5 skew matrix `M` and a vector `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MVData {
    pub m: SkewMatrix,
    pub v: Vec<Polynomial>,
}

impl MVData {
    pub fn new(m: SkewMatrix, v: Vec<Polynomial>) -> Result<Self, FormatError> {
        if m.size() != 5 {
            return Err(FormatError::WrongSize { expected: "5".into(), got: m.size() });
        }
        if v.len() != 5 {
            return Err(FormatError::WrongSize { expected: "5-vector, i.e. 5".into(), got: v.len() });
        }
        Ok(MVData { m, v })
    }

    /// Generic `(M, V)` over [`generic_mv_ring`].
    pub fn generic() -> Self {
        let r = generic_mv_ring();
        let m = SkewMatrix::from_upper(&r, 5, (0..10).map(|i| Polynomial::var(&r, i)).collect()).unwrap();
        let v = (10..15).map(|i| Polynomial::var(&r, i)).collect();
        MVData { m, v }
    }

    /// The MV format of the cone ring with entries `D, B` (and `A = v`).
    pub fn cone(ring: &RingRef, b_entry: Polynomial, d_entry: Polynomial) -> Self {
        let v = |name: &str| ring.var(name).expect("ring has the Veronese variables");
        let zero = Polynomial::zero(ring);
        let m = SkewMatrix::from_upper(
            ring,
            5,
            vec![v("v"), v("u"), v("z2"), d_entry, v("z1"), v("y"), b_entry, zero.clone(), v("v"), v("u")],
        )
        .unwrap();
        let vec = vec![v("x2"), -v("y"), v("z1"), zero.clone(), zero];
        MVData { m, v: vec }
    }
}

/// `g1..g5` are `(-1)^i` times the pfaffian deleting row `i`;
/// `g_{5+i} = (M V)_i`.
pub fn mv_generators(d: &MVData) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        let rows: Vec<usize> = (0..5).filter(|&r| r != i).collect();
        let p = d.m.pfaffian_of(&rows);
        out.push(if i % 2 == 0 { -p } else { p });
    }
    out.extend(d.m.mul_vector(&d.v));
    out
}

/// Coefficient symbol in a tabulated relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvEntry {
    /// `m_ij`, 1-based, `i < j`.
    M(usize, usize),
    /// `v_i`, 1-based.
    V(usize),
}

use MvEntry::{M, V};

/// The sixteen relations among `g1..g10`: each term is
/// `(sign, coefficient, generator index 1-based)`.
pub const MV_RELATIONS: [&[(i8, MvEntry, usize)]; 16] = [
    &[(1, M(1, 2), 2), (1, M(1, 3), 3), (1, M(1, 4), 4), (1, M(1, 5), 5)],
    &[(-1, M(1, 2), 1), (1, M(2, 3), 3), (1, M(2, 4), 4), (1, M(2, 5), 5)],
    &[(-1, M(1, 3), 1), (-1, M(2, 3), 2), (1, M(3, 4), 4), (1, M(3, 5), 5)],
    &[(-1, M(1, 4), 1), (-1, M(2, 4), 2), (-1, M(3, 4), 3), (1, M(4, 5), 5)],
    &[(-1, M(1, 5), 1), (-1, M(2, 5), 2), (-1, M(3, 5), 3), (-1, M(4, 5), 4)],
    &[(1, V(5), 4), (-1, V(4), 5), (-1, M(2, 3), 6), (1, M(1, 3), 7), (-1, M(1, 2), 8)],
    &[(-1, V(5), 3), (1, V(3), 5), (-1, M(2, 4), 6), (1, M(1, 4), 7), (-1, M(1, 2), 9)],
    &[(-1, V(5), 2), (1, V(2), 5), (1, M(3, 4), 6), (-1, M(1, 4), 8), (1, M(1, 3), 9)],
    &[(-1, V(5), 1), (1, V(1), 5), (-1, M(3, 4), 7), (1, M(2, 4), 8), (-1, M(2, 3), 9)],
    &[(1, V(4), 3), (-1, V(3), 4), (-1, M(2, 5), 6), (1, M(1, 5), 7), (-1, M(1, 2), 10)],
    &[(-1, V(3), 2), (1, V(2), 3), (1, M(4, 5), 6), (-1, M(1, 5), 9), (1, M(1, 4), 10)],
    &[(1, V(4), 1), (-1, V(1), 4), (-1, M(3, 5), 7), (1, M(2, 5), 8), (-1, M(2, 3), 10)],
    &[(-1, V(3), 1), (1, V(1), 3), (-1, M(4, 5), 7), (1, M(2, 5), 9), (-1, M(2, 4), 10)],
    &[(1, V(2), 1), (-1, V(1), 2), (-1, M(4, 5), 8), (1, M(3, 5), 9), (-1, M(3, 4), 10)],
    &[(1, V(4), 2), (-1, V(2), 4), (1, M(3, 5), 6), (-1, M(1, 5), 8), (1, M(1, 3), 10)],
    &[(1, V(1), 6), (1, V(2), 7), (1, V(3), 8), (1, V(4), 9), (1, V(5), 10)],
];

/// The tabulated relations evaluated on `(M, V)`, as coefficient vectors
/// over `g1..g10`. Degrees are not recorded (they depend on the grading).
pub fn mv_relations(d: &MVData) -> Vec<Vec<Polynomial>> {
    let ring = d.m.ring();
    MV_RELATIONS
        .iter()
        .map(|rel| {
            let mut coeffs = vec![Polynomial::zero(ring); 10];
            for &(sign, entry, g) in rel.iter() {
                let c = match entry {
                    M(i, j) => d.m.get(i - 1, j - 1),
                    V(i) => d.v[i - 1].clone(),
                };
                coeffs[g - 1] = if sign < 0 { &coeffs[g - 1] - &c } else { &coeffs[g - 1] + &c };
            }
            coeffs
        })
        .collect()
}

/// Coefficient symbol in a tabulated relation among `f1..f9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelCoeff {
    Var(&'static str),
    A,
    B,
    D,
}

/// One term of a tabulated relation: sign, coefficient, 1-based generator index.
pub type RelTerm = (i8, RelCoeff, usize);

/// The sixteen generating relations among `f1..f9`, as `(degree, terms)`.
pub const CONE_RELATIONS: [(u32, &[RelTerm]); 16] = {
    use RelCoeff::*;
    [
        (7, &[(-1, Var("z1"), 1), (1, Var("y"), 2), (-1, Var("x2"), 3)]),
        (8, &[(-1, Var("u"), 1), (1, Var("z2"), 2), (-1, Var("y"), 3)]),
        (8, &[(1, Var("z1"), 2), (-1, Var("y"), 4), (1, Var("x2"), 5)]),
        (9, &[(1, Var("v"), 1), (1, Var("z1"), 3), (-1, Var("z2"), 4), (1, Var("y"), 5)]),
        (9, &[(1, Var("v"), 1), (-1, Var("u"), 2), (1, Var("y"), 5), (-1, Var("x2"), 6)]),
        (10, &[(1, Var("v"), 2), (-1, Var("u"), 4), (1, Var("z1"), 5)]),
        (10, &[(-1, Var("u"), 3), (1, Var("z2"), 5), (-1, Var("y"), 6)]),
        (11, &[(-1, Var("v"), 3), (1, Var("u"), 5), (-1, Var("z1"), 6)]),
        (10, &[(1, B, 1), (-1, A, 2), (-1, Var("y"), 7), (1, Var("x2"), 8)]),
        (11, &[(-1, B, 2), (1, A, 4), (1, Var("z1"), 7), (-1, Var("x2"), 9)]),
        (11, &[(1, D, 1), (-1, A, 3), (-1, Var("z2"), 7), (1, Var("y"), 8)]),
        (12, &[(1, B, 3), (-1, A, 5), (-1, Var("z1"), 8), (1, Var("y"), 9)]),
        (12, &[(-1, D, 2), (1, A, 5), (1, Var("u"), 7), (-1, Var("y"), 9)]),
        (13, &[(1, D, 3), (-1, A, 6), (-1, Var("u"), 8), (1, Var("z2"), 9)]),
        (13, &[(-1, D, 4), (1, B, 5), (1, Var("v"), 7), (-1, Var("z1"), 9)]),
        (14, &[(1, D, 5), (-1, B, 6), (-1, Var("v"), 8), (1, Var("u"), 9)]),
    ]
};

/// Indices (1-based) of the relations that suffice for first-order lifting.
pub const FIVE_RELATIONS: [usize; 5] = [1, 3, 5, 9, 10];

/// `f1..f9` for entries `A, B, D` of degrees 5, 6, 7 in a ring containing
/// the Veronese variables.
pub fn cone_generators(
    ring: &RingRef,
    a_entry: &Polynomial,
    b_entry: &Polynomial,
    d_entry: &Polynomial,
) -> Result<Vec<Polynomial>, FormatError> {
    for (what, p, expected) in [("A", a_entry, 5), ("B", b_entry, 6), ("D", d_entry, 7)] {
        check_degree(what, p, expected)?;
    }
    let v = |name: &str| ring.var(name).expect("ring has the Veronese variables");
    let (x2, y, z1, z2, u, vv) = (v("x2"), v("y"), v("z1"), v("z2"), v("u"), v("v"));
    Ok(vec![
        &(&x2 * &z2) - &(&y * &y),
        &(&x2 * &u) - &(&y * &z1),
        &(&y * &u) - &(&z1 * &z2),
        &(&x2 * &vv) - &(&z1 * &z1),
        &(&y * &vv) - &(&z1 * &u),
        &(&z2 * &vv) - &(&u * &u),
        &(&(&z1 * a_entry) - &(&y * b_entry)) + &(&x2 * d_entry),
        &(&(&u * a_entry) - &(&z2 * b_entry)) + &(&y * d_entry),
        &(&(&vv * a_entry) - &(&u * b_entry)) + &(&z1 * d_entry),
    ])
}

/// The tabulated relations with coefficients evaluated at `A, B, D`.
pub fn cone_relations(
    ring: &RingRef,
    a_entry: &Polynomial,
    b_entry: &Polynomial,
    d_entry: &Polynomial,
) -> Vec<SyzygyVector> {
    CONE_RELATIONS
        .iter()
        .map(|(deg, terms)| {
            let mut coeffs = vec![Polynomial::zero(ring); 9];
            for &(sign, c, i) in terms.iter() {
                let c = match c {
                    RelCoeff::Var(name) => ring.var(name).expect("ring has the Veronese variables"),
                    RelCoeff::A => a_entry.clone(),
                    RelCoeff::B => b_entry.clone(),
                    RelCoeff::D => d_entry.clone(),
                };
                coeffs[i - 1] = if sign < 0 { -c } else { c };
            }
            SyzygyVector::with_degree(coeffs, *deg)
        })
        .collect()
}

fn ideal_of(ring: &RingRef, gens: Vec<Polynomial>) -> Result<GradedIdeal, FormatError> {
    GradedIdeal::new(ring, gens).map_err(|e| match e {
        IdealError::Poly(p) => FormatError::Poly(p),
        IdealError::Inhomogeneous { index, .. } => FormatError::Inhomogeneous { index: index + 1 },
    })
}

fn check_degree(what: &str, p: &Polynomial, expected: u32) -> Result<(), FormatError> {
    if p.is_zero() {
        return Ok(());
    }
    match p.homogeneous_degree() {
        Some(d) if d == expected => Ok(()),
        Some(d) => Err(FormatError::DegreeMismatch { what: what.into(), expected, got: d.to_string() }),
        None => Err(FormatError::DegreeMismatch { what: what.into(), expected, got: "inhomogeneous".into() }),
    }
}

/// The ideal `(f1, .., f9)` in the Veronese ambient ring with `A = v`,
/// `B = z2^2` and the given `D` of degree 7.
pub fn build_rc2q(d_entry: &Polynomial) -> Result<GradedIdeal, FormatError> {
    let ring = d_entry.ring().clone();
    check_degree("D", d_entry, 7)?;
    let a = ring.var("v")?;
    let b = ring.var("z2")?.pow(2);
    let gens = cone_generators(&ring, &a, &b, d_entry)?;
    ideal_of(&ring, gens)
}

/// The six 2x2 minors `f1..f6` of the symmetric matrix
/// `[[x2, y, z1], [y, z2, u], [z1, u, v]]`.
pub fn veronese_minors(ring: &RingRef) -> Vec<Polynomial> {
    let zero = Polynomial::zero(ring);
    let mut gens = cone_generators(ring, &zero, &zero, &zero).expect("zero entries have no degree constraint");
    gens.truncate(6);
    gens
}

/// Rewrites a polynomial in `xi, eta, zeta` whose monomials all have even
/// total exponent as a polynomial in the products
/// `x2 = xi^2, y = xi*eta, z1 = xi*zeta, z2 = eta^2, u = eta*zeta, v = zeta^2`,
/// in normal form modulo the relations among those products.
pub fn veronese_rewrite(p: &Polynomial, target: &RingRef) -> Result<Polynomial, FormatError> {
    let src = p.ring();
    let (xi, eta, zeta) = (
        src.index_of("xi").ok_or(PolyError::UnknownVariable { name: "xi".into(), position: 0 })?,
        src.index_of("eta").ok_or(PolyError::UnknownVariable { name: "eta".into(), position: 0 })?,
        src.index_of("zeta").ok_or(PolyError::UnknownVariable { name: "zeta".into(), position: 0 })?,
    );
    let pair_name = |a: usize, b: usize| -> &'static str {
        match (a.min(b), a.max(b)) {
            (0, 0) => "x2",
            (0, 1) => "y",
            (0, 2) => "z1",
            (1, 1) => "z2",
            (1, 2) => "u",
            _ => "v",
        }
    };
    let mut out = Polynomial::zero(target);
    for (mono, c) in p.terms() {
        let letters: Vec<usize> = [(xi, 0usize), (eta, 1), (zeta, 2)]
            .iter()
            .flat_map(|&(var, letter)| std::iter::repeat_n(letter, mono.exponent(var) as usize))
            .collect();
        if !letters.len().is_multiple_of(2) || mono.exponents().iter().enumerate().any(|(i, &e)| e > 0 && i != xi && i != eta && i != zeta) {
            return Err(FormatError::NotEven { monomial: mono.fmt_in(src) });
        }
        let mut term = Polynomial::constant(target, c.clone());
        for pair in letters.chunks(2) {
            term = &term * &target.var(pair_name(pair[0], pair[1]))?;
        }
        out.add_scaled_shifted(&Coeff::one(), None, &term);
    }
    let minors = GradedIdeal::new(target, veronese_minors(target)).expect("minors are homogeneous");
    Ok(minors.normal_form(&out)?)
}

/// Substitutes the Veronese products back into `xi, eta, zeta`.
pub fn veronese_substitute(p: &Polynomial, plane: &RingRef) -> Polynomial {
    let v = |n: &str| plane.var(n).unwrap();
    let (xi, eta, zeta) = (v("xi"), v("eta"), v("zeta"));
    let images: Vec<Polynomial> = p
        .ring()
        .names()
        .iter()
        .map(|name| match name.as_str() {
            "x2" => &xi * &xi,
            "y" => &xi * &eta,
            "z1" => &xi * &zeta,
            "z2" => &eta * &eta,
            "u" => &eta * &zeta,
            "v" => &zeta * &zeta,
            other => panic!("unexpected variable {other}"),
        })
        .collect();
    p.substitute(plane, &images)
}

/// Family over the cone ring from the extrasymmetric matrix with entries
/// `A, B, D` of degrees 5, 6, 7.
pub fn family_e(a_entry: &Polynomial, b_entry: &Polynomial, d_entry: &Polynomial) -> Result<GradedIdeal, FormatError> {
    for (what, p, expected) in [("A", a_entry, 5), ("B", b_entry, 6), ("D", d_entry, 7)] {
        check_degree(what, p, expected)?;
    }
    let ring = a_entry.ring().clone();
    let data = ExtrasymmetricData::cone(&ring, a_entry.clone(), b_entry.clone(), d_entry.clone());
    let gens = extrasymmetric_generators(&data)?;
    ideal_of(&ring, gens)
}

/// Sets `x1 = 0` and moves the result to the Veronese ambient ring.
pub fn restrict_to_hyperplane(p: &Polynomial, target: &RingRef) -> Result<Polynomial, FormatError> {
    let x1 = p.ring().index_of("x1").ok_or(PolyError::UnknownVariable { name: "x1".into(), position: 0 })?;
    Ok(p.set_var_zero(x1).embed(target)?)
}

/// `Q[x1, x2, y, z1]` with weights `(1, 1, 2, 3)`, the target of the
/// projection forgetting `z2, u, v`.
pub fn projection_ring() -> RingRef {
    WeightedRing::new([("x1", 1), ("x2", 1), ("y", 2), ("z1", 3)]).unwrap()
}

/// Monomial ideal whose degree-10 piece carries the projected surfaces of
/// the extrasymmetric family.
pub const I10_GENERATORS: [&str; 8] =
    ["y^5", "x2*y^3", "x2*y^2*z1", "x2*y*z1^2", "x2*z1^3", "x2^2*y", "x2^2*z1", "x2^3"];

/// The smaller ideal for the MV family, with `x2^2*y*z1` and `x2^2*z1^2`
/// where the printed list drops the square on `x2`.
pub const I10_PRIME_GENERATORS: [&str; 10] = [
    "y^5",
    "x2*y^3",
    "x2*y^2*z1",
    "x2*y*z1^2",
    "x2*z1^3",
    "x2^2*y^2",
    "x2^2*y*z1",
    "x2^2*z1^2",
    "x2^2*x1^6*y",
    "x2^3",
];

/// The printed list, kept for the comparison that motivated the correction.
pub const I10_PRIME_AS_PRINTED: [&str; 10] = [
    "y^5",
    "x2*y^3",
    "x2*y^2*z1",
    "x2*y*z1^2",
    "x2*z1^3",
    "x2^2*y^2",
    "x2*y*z1",
    "x2*z1^2",
    "x2^2*x1^6*y",
    "x2^3",
];

/// The ideal generated by the given monomials in [`projection_ring`].
pub fn monomial_ideal(generators: &[&str]) -> Result<GradedIdeal, FormatError> {
    let ring = projection_ring();
    let gens = generators.iter().map(|g| parse_polynomial(&ring, g)).collect::<Result<Vec<_>, _>>()?;
    ideal_of(&ring, gens)
}

/// Labels of the parts of `P = v P_v + u P_u + z2 P_z2 + z1 P_z1 + y P_y + P_x`.
pub const DECOMPOSITION_LABELS: [&str; 6] = ["x", "y", "z1", "z2", "u", "v"];

/// Decomposition of a polynomial in the cone ring by the highest variable
/// occurring in each monomial: the part labelled by a variable only involves
/// that variable and those before it in `x1, x2, y, z1, z2, u, v`, and
/// `P_x` only involves `x1, x2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Parts in the order of [`DECOMPOSITION_LABELS`].
    pub parts: [Polynomial; 6],
}

impl Decomposition {
    pub fn of(p: &Polynomial) -> Self {
        let ring = p.ring().clone();
        let mut parts: [Vec<_>; 6] = Default::default();
        let nvars = ring.nvars();
        for (mono, c) in p.terms() {
            // variables 0, 1 are x1, x2; label k >= 1 is variable k + 1
            let top = (0..nvars).rev().find(|&i| mono.exponent(i) > 0);
            match top {
                Some(i) if i >= 2 => {
                    let var = Monomial::var(ring.weights(), i, 1);
                    parts[i - 1].push((mono.div(&var).unwrap(), c.clone()));
                }
                _ => parts[0].push((mono.clone(), c.clone())),
            }
        }
        Decomposition { parts: parts.map(|t| Polynomial::from_terms(&ring, t)) }
    }

    /// Validates user-supplied parts against `p` and the uniqueness rule.
    pub fn from_parts(p: &Polynomial, parts: [Polynomial; 6], what: &str) -> Result<Self, FormatError> {
        let d = Decomposition { parts };
        if d.reassemble() != *p || d != Decomposition::of(p) {
            return Err(FormatError::BadDecomposition { what: what.into() });
        }
        Ok(d)
    }

    pub fn part(&self, label: &str) -> &Polynomial {
        let k = DECOMPOSITION_LABELS.iter().position(|l| *l == label).expect("known label");
        &self.parts[k]
    }

    pub fn reassemble(&self) -> Polynomial {
        let ring = self.parts[0].ring().clone();
        let mut acc = self.parts[0].clone();
        for (k, label) in DECOMPOSITION_LABELS.iter().enumerate().skip(1) {
            acc = &acc + &(&ring.var(label).unwrap() * &self.parts[k]);
        }
        acc
    }
}

/// Components of the parameter space for the MV family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyComponent {
    /// `c0 != 0`, closure included.
    T1,
    /// `c0 = c1 = c2 = 0`.
    T2,
    /// `c0 = 0` and `B_x = 0`.
    T3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFReport {
    /// Whether `c0 D_x = l B_x`.
    pub constraint_holds: bool,
    /// Components containing the parameters; empty when outside.
    pub components: Vec<FamilyComponent>,
}

#[derive(Debug, Clone)]
pub struct FamilyF {
    pub report: FamilyFReport,
    /// `(M, V)` and the ideal, when the constraint holds.
    pub format: Option<(MVData, GradedIdeal)>,
}

/// The MV family with `l = c1 x1 + c2 x2`, entries `B` (degree 6) and `D`
/// (degree 7) in the cone ring.
pub fn family_f(
    c0: &Coeff,
    c1: &Coeff,
    c2: &Coeff,
    b_entry: &Polynomial,
    d_entry: &Polynomial,
) -> Result<FamilyF, FormatError> {
    check_degree("B", b_entry, 6)?;
    check_degree("D", d_entry, 7)?;
    let ring = b_entry.ring().clone();
    let bd = Decomposition::of(b_entry);
    let dd = Decomposition::of(d_entry);
    if bd.reassemble() != *b_entry {
        return Err(FormatError::BadDecomposition { what: "B".into() });
    }
    if dd.reassemble() != *d_entry {
        return Err(FormatError::BadDecomposition { what: "D".into() });
    }
    let var = |n: &str| ring.var(n).unwrap();
    let l = &var("x1").scale(c1) + &var("x2").scale(c2);
    let holds = dd.part("x").scale(c0) == &l * bd.part("x");

    let mut components = Vec::new();
    if holds {
        if !c0.is_zero() {
            components.push(FamilyComponent::T1);
        }
        if c0.is_zero() && c1.is_zero() && c2.is_zero() {
            components.push(FamilyComponent::T2);
        }
        if c0.is_zero() && bd.part("x").is_zero() {
            components.push(FamilyComponent::T3);
        }
    }
    let report = FamilyFReport { constraint_holds: holds, components };
    if !holds {
        return Ok(FamilyF { report, format: None });
    }

    // correction `l * B_w - c0 * D_w`
    let corr = |w: &str| &(&l * bd.part(w)) - &dd.part(w).scale(c0);
    let m = SkewMatrix::from_upper(
        &ring,
        5,
        vec![
            var("v"),
            var("u"),
            var("z2"),
            d_entry.clone(),
            var("z1"),
            var("y"),
            b_entry.clone(),
            l.clone(),
            &var("v") + &corr("y"),
            &var("u") - &corr("z1"),
        ],
    )?;
    let v = vec![
        var("x2"),
        &corr("v") - &var("y"),
        &var("z1") + &corr("u"),
        corr("z2"),
        Polynomial::constant(&ring, c0.clone()),
    ];
    let data = MVData::new(m, v)?;
    let gens = mv_generators(&data);
    let ideal = ideal_of(&ring, gens)?;
    Ok(FamilyF { report, format: Some((data, ideal)) })
}

/// Eliminates `var` using a generator of the form `c * var + r` with `c` a
/// nonzero constant and `r` free of `var`; returns the remaining generators
/// with `var` replaced by `-r / c`, or `None` if no such generator exists.
pub fn eliminate_linear(gens: &[Polynomial], var: usize) -> Option<Vec<Polynomial>> {
    let ring = gens.first()?.ring().clone();
    let x = Monomial::var(ring.weights(), var, 1);
    let pos = gens.iter().position(|g| {
        let c = g.coefficient(&x);
        !c.is_zero() && g.terms().iter().all(|(m, _)| *m == x || m.exponent(var) == 0)
    })?;
    let g = &gens[pos];
    let c = g.coefficient(&x);
    let rest = g - &Polynomial::term(&ring, x.clone(), c.clone());
    let image = rest.scale(&-c.recip());
    let images: Vec<Polynomial> =
        (0..ring.nvars()).map(|i| if i == var { image.clone() } else { Polynomial::var(&ring, i) }).collect();
    Some(
        gens.iter()
            .enumerate()
            .filter(|(k, _)| *k != pos)
            .map(|(_, p)| p.substitute(&ring, &images))
            .filter(|p| !p.is_zero())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn pfaffian4_basic() {
        let r = veronese_ambient();
        let mut m = SkewMatrix::zero(&r, 4);
        m.set(0, 1, Polynomial::one(&r));
        m.set(2, 3, Polynomial::one(&r));
        assert_eq!(pfaffian4(&m).unwrap(), Polynomial::one(&r));
        assert!(pfaffian4(&SkewMatrix::zero(&r, 5)).is_err());
    }

    #[test]
    fn skew_access() {
        let r = veronese_ambient();
        let mut m = SkewMatrix::zero(&r, 3);
        let y = r.var("y").unwrap();
        m.set(2, 0, y.clone());
        assert_eq!(m.get(0, 2), -y.clone());
        assert_eq!(m.get(2, 0), y);
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn cone_matrix_gives_the_nine_generators() {
        let r = veronese_ambient();
        let d = parse_polynomial(&r, "x2^7 + y*u*x2 + z2*u").unwrap();
        let a = r.var("v").unwrap();
        let b = r.var("z2").unwrap().pow(2);
        let data = ExtrasymmetricData::cone(&r, a.clone(), b.clone(), d.clone());
        let got = extrasymmetric_generators(&data).unwrap();
        assert_eq!(got, cone_generators(&r, &a, &b, &d).unwrap());
    }

    #[test]
    fn repeats_are_multiples() {
        let e = ExtrasymmetricData::generic();
        let m = e.matrix();
        let canon = extrasymmetric_generators(&e).unwrap();
        for (del, pa, pb, k) in EXTRASYMMETRIC_REPEATS {
            let factor = &e.a.pow(pa) * &e.b.pow(pb);
            assert_eq!(pfaffian_deleting(&m, del), &factor * &canon[k], "pair {del:?}");
        }
    }

    #[test]
    fn mv_cone_signs() {
        let r = veronese_ambient();
        let b = r.var("z2").unwrap().pow(2);
        let d = parse_polynomial(&r, "x2^7 + z2*u").unwrap();
        let f = cone_generators(&r, &r.var("v").unwrap(), &b, &d).unwrap();
        let g = mv_generators(&MVData::cone(&r, b, d));
        let expect = [(5, 1), (6, -1), (8, -1), (9, 1), (3, 1), (5, -1), (4, -1), (2, -1), (1, -1), (7, -1)];
        for (k, (fi, s)) in expect.iter().enumerate() {
            let target = if *s < 0 { -&f[fi - 1] } else { f[fi - 1].clone() };
            assert_eq!(g[k], target, "g{}", k + 1);
        }
    }

    #[test]
    fn veronese_examples() {
        let plane = plane_ring();
        let a = veronese_ambient();
        let p = parse_polynomial(&plane, "xi*(zeta^3 - eta^5)").unwrap();
        assert_eq!(veronese_rewrite(&p, &a).unwrap(), parse_polynomial(&a, "z1*v - y*z2^2").unwrap());
        let q = parse_polynomial(&plane, "zeta*(zeta^3 - eta^5)").unwrap();
        assert_eq!(veronese_rewrite(&q, &a).unwrap(), parse_polynomial(&a, "v^2 - z2^2*u").unwrap());
        let xi2 = parse_polynomial(&plane, "xi^2").unwrap();
        assert_eq!(veronese_rewrite(&xi2, &a).unwrap(), a.var("x2").unwrap());
        assert!(matches!(
            veronese_rewrite(&parse_polynomial(&plane, "xi*eta^2").unwrap(), &a),
            Err(FormatError::NotEven { .. })
        ));
        assert_eq!(veronese_substitute(&veronese_rewrite(&p, &a).unwrap(), &plane), p);
    }

    #[test]
    fn rc2q_gate_and_script_generators() {
        let a = veronese_ambient();
        let i = build_rc2q(&Polynomial::zero(&a)).unwrap();
        assert_eq!(i.generators()[6], parse_polynomial(&a, "z1*v - y*z2^2").unwrap());
        assert_eq!(i.generators()[7], parse_polynomial(&a, "u*v - z2^3").unwrap());
        assert_eq!(i.generators()[8], parse_polynomial(&a, "v^2 - z2^2*u").unwrap());
        assert!(matches!(
            build_rc2q(&parse_polynomial(&a, "z2*v").unwrap()),
            Err(FormatError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn decomposition_rule() {
        let b = cone_ambient();
        let p = parse_polynomial(&b, "x1^6 + x1*v + y*z2*x2 + z1^2").unwrap();
        let d = Decomposition::of(&p);
        assert_eq!(d.part("x"), &parse_polynomial(&b, "x1^6").unwrap());
        assert_eq!(d.part("v"), &parse_polynomial(&b, "x1").unwrap());
        assert_eq!(d.part("z2"), &parse_polynomial(&b, "y*x2").unwrap());
        assert_eq!(d.part("z1"), &parse_polynomial(&b, "z1").unwrap());
        assert_eq!(d.reassemble(), p);
        let mut parts = d.parts.clone();
        parts.swap(0, 1);
        assert!(Decomposition::from_parts(&p, parts, "B").is_err());
    }

    #[test]
    fn linear_elimination() {
        let r = veronese_ambient();
        let gens = vec![
            parse_polynomial(&r, "u - y^2").unwrap(),
            parse_polynomial(&r, "u*x2 - y^2*x2").unwrap(),
            parse_polynomial(&r, "u*v").unwrap(),
        ];
        let out = eliminate_linear(&gens, r.index_of("u").unwrap()).unwrap();
        assert_eq!(out, vec![parse_polynomial(&r, "y^2*v").unwrap()]);
    }
}
