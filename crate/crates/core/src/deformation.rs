//! Graded first-order deformations of a homogeneous ideal and their
//! lifting to second order.
//!
//! A first-order deformation of `I = (f_1, .., f_m)` is a tuple `(g_i)` with
//! `sum_i l_i g_i` in `I` for every relation `(l_i)` among the generators.
//! Only classes in the quotient ring matter, so all linear systems are
//! assembled in quotient coordinates: the standard monomials of the ideal's
//! Gröbner basis, degree by degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::DeformationError;
use crate::formats::{
    cone_ambient, cone_generators, cone_relations, extrasymmetric_generators, veronese_ambient,
    ExtrasymmetricData, FIVE_RELATIONS,
};
use crate::ideal::GradedIdeal;
use crate::linalg::{integer_row, kernel, solve, Echelon, SparseRow};
use crate::parse::parse_polynomial;
use crate::poly::{monomials_of_degree, rat, Coeff, Monomial, Polynomial, RingRef};
use crate::syzygy::{verify_syzygy, SyzygyVector};

/// Generators, a generating set of their relations, and cached quotient
/// bases.
#[derive(Debug)]
pub struct DeformationProblem {
    ideal: GradedIdeal,
    degrees: Vec<u32>,
    syzygies: Vec<SyzygyVector>,
    bases: Mutex<HashMap<u32, Arc<Vec<Monomial>>>>,
    lift_system: OnceLock<LiftSystem>,
}

/// A tuple `(g_1, .., g_m)` with `g_i` homogeneous of degree `deg f_i - k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOrderDirection {
    components: Vec<Polynomial>,
}

impl FirstOrderDirection {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FirstOrderDirection { components }
    }

    pub fn zero(ring: &RingRef, len: usize) -> Self {
        FirstOrderDirection { components: vec![Polynomial::zero(ring); len] }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        FirstOrderDirection { components: self.components.iter().map(|p| p.scale(c)).collect() }
    }
}

/// Column layout of a tuple space: generator `i` contributes the quotient
/// basis in degree `deg f_i - shift`.
#[derive(Debug, Clone)]
struct Columns {
    bases: Vec<Arc<Vec<Monomial>>>,
    index: Vec<HashMap<Monomial, usize>>,
    total: usize,
}

impl Columns {
    fn row_of(&self, tuple: &[Polynomial], nf: impl Fn(&Polynomial) -> Polynomial) -> Option<SparseRow> {
        let mut entries = Vec::new();
        for (i, p) in tuple.iter().enumerate() {
            for (m, c) in nf(p).terms() {
                entries.push((*self.index[i].get(m)?, c.clone()));
            }
        }
        Some(integer_row(entries))
    }

    fn tuple_of(&self, ring: &RingRef, x: &[Coeff]) -> Vec<Polynomial> {
        let mut col = 0;
        self.bases
            .iter()
            .map(|basis| {
                let terms = basis.iter().map(|m| {
                    let t = (m.clone(), x[col].clone());
                    col += 1;
                    t
                });
                Polynomial::from_terms(ring, terms.collect::<Vec<_>>())
            })
            .collect()
    }
}

/// Precomputed matrix of `(f2_i) -> (sum_i l_ij f2_i)` in quotient
/// coordinates, reused across directions.
#[derive(Debug)]
struct LiftSystem {
    columns: Columns,
    rows: BTreeMap<(usize, Monomial), Vec<(usize, Coeff)>>,
}

/// Outcome of [`lift_order2`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondOrderLift {
    pub feasible: bool,
    /// Second-order terms `f_i^(2)`, present when feasible.
    pub witness: Option<Vec<Polynomial>>,
}

impl DeformationProblem {
    /// Verifies every syzygy against the generators. Generators must be
    /// nonzero and homogeneous.
    pub fn new(
        ring: &RingRef,
        generators: Vec<Polynomial>,
        syzygies: Vec<SyzygyVector>,
    ) -> Result<Self, DeformationError> {
        let ideal = GradedIdeal::new(ring, generators)?;
        let mut degrees = Vec::with_capacity(ideal.generators().len());
        for (index, d) in ideal.degrees().iter().enumerate() {
            match d {
                Some(d) => degrees.push(*d),
                None => return Err(DeformationError::Precondition(format!("generator {} is zero", index + 1))),
            }
        }
        for (index, s) in syzygies.iter().enumerate() {
            if s.len() != degrees.len() || !verify_syzygy(ideal.generators(), s) {
                return Err(DeformationError::BadSyzygy { index: index + 1 });
            }
        }
        Ok(DeformationProblem {
            ideal,
            degrees,
            syzygies,
            bases: Mutex::new(HashMap::new()),
            lift_system: OnceLock::new(),
        })
    }

    /// `f1..f9` with `A = v`, `B = z2^2` and the given `D`, built in `ring`
    /// (which must contain the Veronese variables), with the sixteen
    /// tabulated relations.
    pub fn rc2q(ring: &RingRef, d_entry: &Polynomial) -> Result<Self, DeformationError> {
        let d = d_entry.embed(ring)?;
        let a = ring.var("v")?;
        let b = ring.var("z2")?.pow(2);
        let gens = cone_generators(ring, &a, &b, &d)?;
        let syz = cone_relations(ring, &a, &b, &d);
        DeformationProblem::new(ring, gens, syz)
    }

    /// The same problem constrained only by the listed relations (1-based).
    pub fn with_syzygy_subset(&self, indices: &[usize]) -> Result<Self, DeformationError> {
        let mut syz = Vec::with_capacity(indices.len());
        for &j in indices {
            let s = self
                .syzygies
                .get(j.wrapping_sub(1))
                .ok_or_else(|| DeformationError::Precondition(format!("no relation number {j}")))?;
            syz.push(s.clone());
        }
        self.with_syzygies(syz)
    }

    /// The same generators with a different relation set.
    pub fn with_syzygies(&self, syzygies: Vec<SyzygyVector>) -> Result<Self, DeformationError> {
        DeformationProblem::new(self.ring(), self.generators().to_vec(), syzygies)
    }

    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn syzygies(&self) -> &[SyzygyVector] {
        &self.syzygies
    }

    /// Standard monomials of degree `d` (empty for negative `d`).
    pub fn quotient_basis(&self, d: i64) -> Arc<Vec<Monomial>> {
        if d < 0 {
            return Arc::new(Vec::new());
        }
        let d = d as u32;
        if let Some(b) = self.bases.lock().unwrap().get(&d) {
            return b.clone();
        }
        let basis = Arc::new(self.ideal.standard_monomials(d));
        self.bases.lock().unwrap().entry(d).or_insert(basis).clone()
    }

    fn nf(&self, p: &Polynomial) -> Polynomial {
        self.ideal.groebner_basis().normal_form(p)
    }

    fn columns(&self, shift: i64) -> Columns {
        let mut bases = Vec::with_capacity(self.degrees.len());
        let mut index = Vec::with_capacity(self.degrees.len());
        let mut total = 0;
        for &d in &self.degrees {
            let basis = self.quotient_basis(d as i64 - shift);
            let mut map = HashMap::with_capacity(basis.len());
            for m in basis.iter() {
                map.insert(m.clone(), total);
                total += 1;
            }
            bases.push(basis);
            index.push(map);
        }
        Columns { bases, index, total }
    }

    /// Rows of `(g_i) -> (sum_i l_ij g_i)_j` in quotient coordinates, keyed by
    /// relation and output monomial.
    fn pairing_rows(&self, columns: &Columns) -> BTreeMap<(usize, Monomial), Vec<(usize, Coeff)>> {
        let mut rows: BTreeMap<(usize, Monomial), Vec<(usize, Coeff)>> = BTreeMap::new();
        let one = Coeff::one();
        for (i, basis) in columns.bases.iter().enumerate() {
            for m in basis.iter() {
                let col = columns.index[i][m];
                for (j, s) in self.syzygies.iter().enumerate() {
                    let l = &s.coeffs()[i];
                    if l.is_zero() {
                        continue;
                    }
                    for (out, c) in self.nf(&l.mul_term(m, &one)).terms() {
                        rows.entry((j, out.clone())).or_default().push((col, c.clone()));
                    }
                }
            }
        }
        rows
    }

    fn cocycle_system(&self, k: u32) -> (Columns, Vec<SparseRow>) {
        let columns = self.columns(k as i64);
        let rows = self.pairing_rows(&columns).into_values().map(integer_row).collect();
        (columns, rows)
    }

    /// First relation (0-based) on which the tuple fails the cocycle
    /// condition.
    pub fn cocycle_failure(&self, dir: &FirstOrderDirection) -> Option<usize> {
        let ring = self.ring();
        self.syzygies.iter().position(|s| {
            let mut acc = Polynomial::zero(ring);
            for (l, g) in s.coeffs().iter().zip(dir.components()) {
                if !l.is_zero() && !g.is_zero() {
                    acc = &acc + &(l * g);
                }
            }
            !self.nf(&acc).is_zero()
        })
    }

    /// Validates length, ring, component degrees (`deg f_i - shift`) and the
    /// cocycle condition.
    pub fn check_direction(&self, dir: &FirstOrderDirection, shift: u32) -> Result<(), DeformationError> {
        if dir.components().len() != self.degrees.len() {
            return Err(DeformationError::WrongLength { expected: self.degrees.len(), got: dir.components().len() });
        }
        for (index, (g, &d)) in dir.components().iter().zip(&self.degrees).enumerate() {
            if g.is_zero() {
                continue;
            }
            let expected = d.saturating_sub(shift);
            if !crate::poly::same_ring(g.ring(), self.ring()) || g.homogeneous_degree() != Some(expected) || d < shift {
                return Err(DeformationError::ComponentDegree { index: index + 1, expected });
            }
        }
        match self.cocycle_failure(dir) {
            Some(j) => Err(DeformationError::NotCocycle { syzygy: j + 1 }),
            None => Ok(()),
        }
    }

    /// Quotient coordinates of a degree-`k` tuple in the layout used by
    /// [`hom_graded_dim`].
    fn coordinates(&self, columns: &Columns, tuple: &[Polynomial]) -> Option<SparseRow> {
        columns.row_of(tuple, |p| self.nf(p))
    }

    fn lift_system(&self) -> &LiftSystem {
        self.lift_system.get_or_init(|| {
            let columns = self.columns(0);
            let rows = self.pairing_rows(&columns);
            LiftSystem { columns, rows }
        })
    }
}

/// `dim V_k`: tuples `g_i` in the quotient ring of degree `deg f_i - k` with
/// `sum_i l_i g_i = 0` in the quotient for every relation.
pub fn hom_graded_dim(p: &DeformationProblem, k: u32) -> usize {
    let (columns, rows) = p.cocycle_system(k);
    columns.total - crate::linalg::rank(rows)
}

/// A basis of `V_k`, each vector checked against the cocycle condition.
pub fn hom_graded_basis(p: &DeformationProblem, k: u32) -> Vec<FirstOrderDirection> {
    let (columns, rows) = p.cocycle_system(k);
    kernel(rows, columns.total)
        .into_iter()
        .map(|x| {
            let dir = FirstOrderDirection::new(columns.tuple_of(p.ring(), &x));
            assert!(p.cocycle_failure(&dir).is_none(), "kernel vector fails the cocycle condition");
            dir
        })
        .collect()
}

/// `dim V_k` recomputed with only the five relations that suffice for
/// first-order lifting. `p` must carry the sixteen tabulated relations.
pub fn five_syzygy_check(p: &DeformationProblem, k: u32) -> Result<usize, DeformationError> {
    if p.syzygies().len() != 16 {
        return Err(DeformationError::Precondition("expected the sixteen tabulated relations".into()));
    }
    Ok(hom_graded_dim(&p.with_syzygy_subset(&FIVE_RELATIONS)?, k))
}

/// Decides whether a first-order direction (shift 0, components of degree
/// `deg f_i`) extends to second order.
///
/// The order-one relation lifts are `m_j = -lift(sum_i l_ij f1_i)`; any other
/// choice differs by relations, which pair with `f1` into the ideal. So the
/// order-two condition reduces, modulo the ideal, to the linear system
/// `sum_i l_ij f2_i = sum_i lift_i(sum_k l_kj f1_k) f1_i` in the unknown
/// classes `f2_i`.
pub fn lift_order2(p: &DeformationProblem, dir: &FirstOrderDirection) -> Result<SecondOrderLift, DeformationError> {
    p.check_direction(dir, 0).map_err(|e| match e {
        DeformationError::NotCocycle { syzygy } => {
            DeformationError::Precondition(format!("direction is not a first-order deformation (relation {syzygy})"))
        }
        other => other,
    })?;
    let ring = p.ring();
    let system = p.lift_system();
    let mut rhs: BTreeMap<(usize, Monomial), Coeff> = BTreeMap::new();
    let mut order_one = Vec::with_capacity(p.syzygies().len());
    for (j, s) in p.syzygies().iter().enumerate() {
        let mut pairing = Polynomial::zero(ring);
        for (l, g) in s.coeffs().iter().zip(dir.components()) {
            if !l.is_zero() && !g.is_zero() {
                pairing = &pairing + &(l * g);
            }
        }
        let q = p.ideal().lift(&pairing)?.expect("cocycle pairing lies in the ideal");
        let mut target = Polynomial::zero(ring);
        for (qi, g) in q.iter().zip(dir.components()) {
            if !qi.is_zero() && !g.is_zero() {
                target = &target + &(qi * g);
            }
        }
        for (m, c) in p.nf(&target).terms() {
            rhs.insert((j, m.clone()), c.clone());
        }
        order_one.push(q);
    }
    let mut keys: Vec<&(usize, Monomial)> = system.rows.keys().collect();
    keys.extend(rhs.keys().filter(|k| !system.rows.contains_key(k)));
    let zero = Coeff::zero();
    let rows = keys.into_iter().map(|key| {
        let a = system.rows.get(key).cloned().unwrap_or_default();
        (a, rhs.get(key).unwrap_or(&zero).clone())
    });
    let Some(x) = solve(rows, system.columns.total) else {
        return Ok(SecondOrderLift { feasible: false, witness: None });
    };
    let witness = system.columns.tuple_of(ring, &x);
    // Sanity check of the assembled system on the witness itself.
    for ((s, q), j) in p.syzygies().iter().zip(&order_one).zip(1..) {
        let mut acc = Polynomial::zero(ring);
        for ((l, f2), (qi, f1)) in s.coeffs().iter().zip(&witness).zip(q.iter().zip(dir.components())) {
            acc = &acc + &(l * f2);
            acc = &acc - &(qi * f1);
        }
        if !p.nf(&acc).is_zero() {
            return Err(DeformationError::Precondition(format!("second-order witness fails relation {j}")));
        }
    }
    Ok(SecondOrderLift { feasible: true, witness: Some(witness) })
}

/// Coordinates on the reduced first-order space of the cone: the two
/// exceptional classes and the entry changes of `A`, `B`, `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterPoint {
    values: [Coeff; 20],
}

/// Variation of `D` carried by each `D`-parameter, in order after `b6`.
const D_PARAMETER_MONOMIALS: [(&str, &str); 13] = [
    ("delta", "x2^7"),
    ("dy", "x2^5*y"),
    ("dz1", "x2^4*z1"),
    ("d02", "z2*u"),
    ("d11", "x1*y*u"),
    ("d12", "x1*z2^2"),
    ("d21", "x1^2*y*z2"),
    ("d22", "x1^2*v"),
    ("d3", "x1^3*u"),
    ("d41", "x1^4*z1"),
    ("d42", "x1^4*z2"),
    ("d5", "x1^5*y"),
    ("d7", "x1^7"),
];

const B_PARAMETER_MONOMIALS: [(&str, &str); 4] = [("b1", "x1*v"), ("b2", "x1^2*u"), ("b3", "x1^3*z2"), ("b6", "x1^6")];

impl ParameterPoint {
    pub const NAMES: [&'static str; 20] = [
        "c0", "c1", "a5", "b1", "b2", "b3", "b6", "delta", "dy", "dz1", "d02", "d11", "d12", "d21", "d22", "d3",
        "d41", "d42", "d5", "d7",
    ];

    pub fn zero() -> Self {
        ParameterPoint { values: std::array::from_fn(|_| Coeff::zero()) }
    }

    fn position(name: &str) -> Result<usize, DeformationError> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| DeformationError::Precondition(format!("unknown parameter `{name}`")))
    }

    pub fn get(&self, name: &str) -> Result<&Coeff, DeformationError> {
        Ok(&self.values[Self::position(name)?])
    }

    pub fn set(&mut self, name: &str, value: Coeff) -> Result<(), DeformationError> {
        self.values[Self::position(name)?] = value;
        Ok(())
    }

    /// Builder form of [`ParameterPoint::set`] for integer values.
    ///
    /// # Panics
    /// On an unknown parameter name.
    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.set(name, rat(value)).expect("known parameter name");
        self
    }

    pub fn values(&self) -> impl Iterator<Item = (&'static str, &Coeff)> {
        Self::NAMES.iter().copied().zip(self.values.iter())
    }

    fn value(&self, name: &str) -> &Coeff {
        &self.values[Self::position(name).expect("known parameter name")]
    }

    /// `(c0 a5, c1 a5, c0 d7 - c1 b6)`.
    pub fn quadrics(&self) -> [Coeff; 3] {
        let v = |n| self.value(n);
        [v("c0") * v("a5"), v("c1") * v("a5"), v("c0") * v("d7") - v("c1") * v("b6")]
    }

    pub fn quadrics_vanish(&self) -> bool {
        self.quadrics().iter().all(Zero::is_zero)
    }
}

impl std::fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nonzero: Vec<String> =
            self.values().filter(|(_, v)| !v.is_zero()).map(|(n, v)| format!("{n}={v}")).collect();
        if nonzero.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", nonzero.join(","))
        }
    }
}

/// `D = delta x2^7 + D_y y + D_z1 z1 + d02 z2 u`, each monomial assigned to
/// the first of `y`, `z1` dividing it. Requires `D` in normalized form, see
/// [`normalize_d`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DPartition {
    pub delta: Coeff,
    pub d_y: Polynomial,
    pub d_z1: Polynomial,
    pub d02: Coeff,
}

impl DPartition {
    pub fn of(d_entry: &Polynomial) -> Result<Self, DeformationError> {
        let ring = d_entry.ring();
        let idx = |n: &str| ring.index_of(n).expect("ring has the Veronese variables");
        let (x2, y, z1, z2, u) = (idx("x2"), idx("y"), idx("z1"), idx("z2"), idx("u"));
        let w = ring.weights();
        let x2_7 = Monomial::var(w, x2, 7);
        let z2u = Monomial::var(w, z2, 1).mul(&Monomial::var(w, u, 1));
        let (mut delta, mut d02) = (Coeff::zero(), Coeff::zero());
        let (mut ty, mut tz) = (Vec::new(), Vec::new());
        for (m, c) in d_entry.terms() {
            if m.exponent(y) > 0 {
                ty.push((m.div(&Monomial::var(w, y, 1)).unwrap(), c.clone()));
            } else if m.exponent(z1) > 0 {
                tz.push((m.div(&Monomial::var(w, z1, 1)).unwrap(), c.clone()));
            } else if *m == x2_7 {
                delta = c.clone();
            } else if *m == z2u {
                d02 = c.clone();
            } else {
                return Err(DeformationError::Precondition(format!(
                    "D has the monomial {} outside x2^7, z2*u and multiples of y, z1",
                    m.fmt_in(ring)
                )));
            }
        }
        Ok(DPartition {
            delta,
            d_y: Polynomial::from_terms(ring, ty),
            d_z1: Polynomial::from_terms(ring, tz),
            d02,
        })
    }
}

/// Rewrites `x2 z2 -> y^2`, `x2 u -> y z1`, `x2 v -> z1^2` until no monomial
/// contains those products. The result differs from `D` by an element of
/// `(f1, f2, f4)`, so the ideal `(f1, .., f9)` is unchanged.
pub fn normalize_d(d_entry: &Polynomial) -> Polynomial {
    let ring = d_entry.ring().clone();
    let idx = |n: &str| ring.index_of(n).expect("ring has the Veronese variables");
    let (x2, y, z1) = (idx("x2"), idx("y"), idx("z1"));
    let rules = [(idx("z2"), [y, y]), (idx("u"), [y, z1]), (idx("v"), [z1, z1])];
    let w = ring.weights().to_vec();
    let mut work = d_entry.clone();
    loop {
        let mut changed = false;
        let mut out = Vec::with_capacity(work.len());
        for (m, c) in work.terms() {
            let hit = rules.iter().find(|(var, _)| m.exponent(x2) > 0 && m.exponent(*var) > 0);
            match hit {
                Some((var, [p, q])) => {
                    let lhs = Monomial::var(&w, x2, 1).mul(&Monomial::var(&w, *var, 1));
                    let rhs = Monomial::var(&w, *p, 1).mul(&Monomial::var(&w, *q, 1));
                    out.push((m.div(&lhs).unwrap().mul(&rhs), c.clone()));
                    changed = true;
                }
                None => out.push((m.clone(), c.clone())),
            }
        }
        work = Polynomial::from_terms(&ring, out);
        if !changed {
            return work;
        }
    }
}

/// How an exceptional class was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSource {
    /// The closed formula passed the cocycle and non-induced checks.
    Formula,
    /// The formula failed; a computed basis vector outside the induced
    /// subspace is used instead. The string says why.
    Computed(String),
}

/// The cone problem for a fixed `D`, over both the Veronese ambient ring
/// (degree pieces `V_k`) and the cone ring with `x1` (full directions).
#[derive(Debug)]
pub struct ConeDeformations {
    d_entry: Polynomial,
    base: DeformationProblem,
    cone: DeformationProblem,
    entry_derivatives: Vec<Vec<Polynomial>>,
    classes: [(FirstOrderDirection, ClassSource); 2],
}

impl ConeDeformations {
    /// `d_entry` is a degree-7 polynomial in [`veronese_ambient`] variables.
    pub fn new(d_entry: &Polynomial) -> Result<Self, DeformationError> {
        let veronese = veronese_ambient();
        let d_entry = d_entry.embed(&veronese)?;
        let base = DeformationProblem::rc2q(&veronese, &d_entry)?;
        let cone = DeformationProblem::rc2q(&cone_ambient(), &d_entry)?;
        let entry_derivatives = entry_derivatives(&veronese, &d_entry)?;
        let mut this = ConeDeformations {
            d_entry,
            base,
            cone,
            entry_derivatives,
            classes: [
                (FirstOrderDirection::zero(&veronese, 9), ClassSource::Formula),
                (FirstOrderDirection::zero(&veronese, 9), ClassSource::Formula),
            ],
        };
        for k in 0..2 {
            this.classes[k] = this.exceptional_class(k as u32);
        }
        Ok(this)
    }

    pub fn d_entry(&self) -> &Polynomial {
        &self.d_entry
    }

    /// Problem over the Veronese ambient ring.
    pub fn base(&self) -> &DeformationProblem {
        &self.base
    }

    /// Problem over the cone ring including `x1`.
    pub fn cone(&self) -> &DeformationProblem {
        &self.cone
    }

    /// Exceptional class in `x1`-degree `k` (0 or 1) and how it was found.
    pub fn class(&self, k: usize) -> &(FirstOrderDirection, ClassSource) {
        &self.classes[k]
    }

    /// Tuples induced by varying one matrix entry (or `a`, `b`) by `h` of
    /// `x1`-degree `k`, as quotient-coordinate rows of `V_k`.
    fn induced_rows(&self, k: u32, columns: &Columns) -> Vec<SparseRow> {
        let ring = self.base.ring();
        let one = Coeff::one();
        let mut rows = Vec::new();
        for d in &self.entry_derivatives {
            let Some((i, g)) = d.iter().enumerate().find(|(_, g)| !g.is_zero()) else {
                continue;
            };
            // `b` has negative degree in the cone grading and never varies
            let entry_degree =
                self.base.degrees()[i] as i64 - g.homogeneous_degree().expect("homogeneous derivative") as i64;
            let Ok(h_degree) = u32::try_from(entry_degree - k as i64) else {
                continue;
            };
            for h in monomials_of_degree(ring, h_degree) {
                let tuple: Vec<Polynomial> = d.iter().map(|g| g.mul_term(&h, &one)).collect();
                rows.push(self.base.coordinates(columns, &tuple).expect("induced tuple has the right degrees"));
            }
        }
        rows
    }

    /// `dim V_k'`: the span of the entry-induced tuples.
    pub fn induced_dim(&self, k: u32) -> usize {
        let columns = self.base.columns(k as i64);
        crate::linalg::rank(self.induced_rows(k, &columns))
    }

    /// Whether a degree-`k` tuple over the Veronese ring lies in `V_k'`.
    pub fn is_induced(&self, k: u32, dir: &FirstOrderDirection) -> bool {
        let columns = self.base.columns(k as i64);
        let mut e = Echelon::new();
        for r in self.induced_rows(k, &columns) {
            e.insert(r);
        }
        match self.base.coordinates(&columns, dir.components()) {
            Some(row) => e.reduce(row).is_empty(),
            None => false,
        }
    }

    fn exceptional_class(&self, k: u32) -> (FirstOrderDirection, ClassSource) {
        let reason = match self.class_formula(k) {
            Ok(dir) => match self.base.check_direction(&dir, k) {
                Ok(()) if !self.is_induced(k, &dir) => return (dir, ClassSource::Formula),
                Ok(()) => "formula is induced by entry changes".to_string(),
                Err(e) => e.to_string(),
            },
            Err(e) => e.to_string(),
        };
        let columns = self.base.columns(k as i64);
        let mut e = Echelon::new();
        for r in self.induced_rows(k, &columns) {
            e.insert(r);
        }
        for dir in hom_graded_basis(&self.base, k) {
            let row = self.base.coordinates(&columns, dir.components()).expect("basis vector coordinates");
            if e.insert(row) {
                return (dir, ClassSource::Computed(reason));
            }
        }
        (FirstOrderDirection::zero(self.base.ring(), 9), ClassSource::Computed(format!("{reason}; V_{k} = V_{k}'")))
    }

    fn class_formula(&self, k: u32) -> Result<FirstOrderDirection, DeformationError> {
        let ring = self.base.ring();
        let p = |s: &str| parse_polynomial(ring, s).expect("valid literal");
        let d = &self.d_entry;
        let comps = match k {
            1 => vec![p("z1"), p("0"), p("-v"), p("-y*z2"), p("-z2^2"), -d, p("z2*u"), p("0"), p("0")],
            0 => {
                let DPartition { delta, d_y, d_z1, d02 } = DPartition::of(d)?;
                let (x2, y, z1, z2, u, v) = (p("x2"), p("y"), p("z1"), p("z2"), p("u"), p("v"));
                let x2_6 = x2.pow(6);
                vec![
                    -&u,
                    -&v,
                    p("0"),
                    &z2 * &(&z1.scale(&d02) - &z2),
                    -(&(&x2.pow(7).scale(&delta) + &(&d_y * &y)) + &(&d_z1 * &z1)),
                    -(&(&(&x2_6 * &y).scale(&delta) + &(&d_y * &z2)) + &(&d_z1 * &u)),
                    -(&(&d_y * &z1) + &(&z2 * &v).scale(&d02)),
                    &(&x2_6 * &z1).scale(&delta) + &(&d_z1 * &v),
                    -(&d_y * &v),
                ]
            }
            _ => return Err(DeformationError::Precondition("exceptional classes live in degrees 0, 1".into())),
        };
        Ok(FirstOrderDirection::new(comps))
    }

    /// The first-order direction over the cone ring at a parameter point:
    /// `c0` times the degree-0 class, `c1 x1` times the degree-1 class, plus
    /// the pfaffian derivative along the entry changes `A'`, `B'`, `D'`.
    pub fn reduced_direction(&self, pt: &ParameterPoint) -> Result<FirstOrderDirection, DeformationError> {
        let ring = self.cone.ring().clone();
        let p = |s: &str| parse_polynomial(&ring, s).expect("valid literal");
        let linear = |table: &[(&str, &str)]| {
            let mut acc = Polynomial::zero(&ring);
            for (name, mono) in table {
                let c = pt.value(name);
                if !c.is_zero() {
                    acc = &acc + &p(mono).scale(c);
                }
            }
            acc
        };
        let a_var = p("x1^5").scale(pt.value("a5"));
        let b_var = linear(&B_PARAMETER_MONOMIALS);
        let d_var = linear(&D_PARAMETER_MONOMIALS);
        let (c0, c1) = (pt.value("c0"), pt.value("c1"));
        let x1 = p("x1");
        let mut comps = Vec::with_capacity(9);
        for i in 0..9 {
            let mut g = self.classes[0].0.components()[i].embed(&ring)?.scale(c0);
            let h = self.classes[1].0.components()[i].embed(&ring)?.scale(c1);
            g = &g + &(&x1 * &h);
            comps.push(g);
        }
        let (x2, y, z1, z2, u, v) = (p("x2"), p("y"), p("z1"), p("z2"), p("u"), p("v"));
        for (i, [ca, cb, cd]) in [(6, [&z1, &y, &x2]), (7, [&u, &z2, &y]), (8, [&v, &u, &z1])] {
            let delta = &(&(ca * &a_var) - &(cb * &b_var)) + &(cd * &d_var);
            comps[i] = &comps[i] + &delta;
        }
        let dir = FirstOrderDirection::new(comps);
        self.cone.check_direction(&dir, 0)?;
        Ok(dir)
    }

    pub fn lift_order2(&self, pt: &ParameterPoint) -> Result<SecondOrderLift, DeformationError> {
        lift_order2(&self.cone, &self.reduced_direction(pt)?)
    }

    /// Feasibility of order-two lifting at every grid point, compared with
    /// the vanishing of the three quadrics.
    pub fn obstruction_scan(&self, grid: &[ParameterPoint]) -> Result<ObstructionScan, DeformationError> {
        // Build the shared system once before fanning out.
        self.cone.lift_system();
        let rows = grid
            .par_iter()
            .map(|pt| {
                let lift = self.lift_order2(pt)?;
                Ok(ScanRow { point: pt.clone(), feasible: lift.feasible, quadrics_vanish: pt.quadrics_vanish() })
            })
            .collect::<Result<Vec<_>, DeformationError>>()?;
        let agrees = rows.iter().all(|r| r.feasible == r.quadrics_vanish);
        Ok(ObstructionScan { rows, agrees })
    }
}

/// Derivatives of the nine extrasymmetric pfaffians with respect to
/// `n1..n9, a, b`, evaluated at the cone matrix with `A = v`, `B = z2^2`.
fn entry_derivatives(ring: &RingRef, d_entry: &Polynomial) -> Result<Vec<Vec<Polynomial>>, DeformationError> {
    let generic = ExtrasymmetricData::generic();
    let gens = extrasymmetric_generators(&generic)?;
    let cone = ExtrasymmetricData::cone(ring, ring.var("v")?, ring.var("z2")?.pow(2), d_entry.clone());
    let mut images: Vec<Polynomial> = cone.n.to_vec();
    images.push(cone.a.clone());
    images.push(cone.b.clone());
    Ok((0..images.len())
        .map(|var| gens.iter().map(|g| g.derivative(var).substitute(ring, &images)).collect())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub point: ParameterPoint,
    pub feasible: bool,
    pub quadrics_vanish: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionScan {
    pub rows: Vec<ScanRow>,
    /// Feasibility equals vanishing of the quadrics at every point.
    pub agrees: bool,
}

/// The 27 points with `c0, c1, a5` in `{-1, 0, 1}`, followed by the points
/// `(c0, c1, d7, b6) = (1, 1, 1, 1)` and `c0 = 1, d7 in {1, -1, 2}`.
pub fn default_obstruction_grid() -> Vec<ParameterPoint> {
    let mut grid = Vec::new();
    for c0 in -1..=1 {
        for c1 in -1..=1 {
            for a5 in -1..=1 {
                grid.push(ParameterPoint::zero().with("c0", c0).with("c1", c1).with("a5", a5));
            }
        }
    }
    grid.push(ParameterPoint::zero().with("c0", 1).with("c1", 1).with("d7", 1).with("b6", 1));
    for d7 in [1, -1, 2] {
        grid.push(ParameterPoint::zero().with("c0", 1).with("d7", d7));
    }
    grid
}

/// Free-function form of [`ConeDeformations::reduced_direction`].
pub fn reduced_direction(family: &ConeDeformations, pt: &ParameterPoint) -> Result<FirstOrderDirection, DeformationError> {
    family.reduced_direction(pt)
}

/// Free-function form of [`ConeDeformations::obstruction_scan`].
pub fn obstruction_scan(family: &ConeDeformations, grid: &[ParameterPoint]) -> Result<ObstructionScan, DeformationError> {
    family.obstruction_scan(grid)
}
