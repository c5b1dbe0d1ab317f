//! First syzygies of a list of homogeneous polynomials.
//!
//! Candidates come from Schreyer's construction over a cofactor-tracking
//! Gröbner basis. They are minimalized degree by degree: a vector
//! `(l_1, .., l_m)` is encoded as `sum l_i e_i` in the ring extended by
//! position variables `e_i` of weight `deg f_i`, reduced modulo a Gröbner
//! basis of the syzygies already kept, and kept only if its remainder is
//! independent of the other remainders of the same degree.

use std::collections::HashMap;

use num_traits::One;

use crate::groebner::{buchberger, GroebnerBasis, GroebnerOptions};
use crate::linalg::{integer_row, kernel, rank, Echelon};
use crate::poly::{monomials_of_degree, Coeff, Monomial, Polynomial, RingRef};

/// Default degree bound for module computations.
pub const DEFAULT_MAX_DEGREE: u32 = 16;

/// Coefficients `(l_1, .., l_m)` with `sum l_i f_i = 0` for a fixed list
/// of generators, homogeneous of `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyVector {
    coeffs: Vec<Polynomial>,
    degree: u32,
}

impl SyzygyVector {
    /// Infers the degree from the first nonzero entry. Returns `None` for the
    /// zero vector or when the entries are not consistently homogeneous.
    pub fn new(coeffs: Vec<Polynomial>, generators: &[Polynomial]) -> Option<Self> {
        let mut degree = None;
        for (l, f) in coeffs.iter().zip(generators) {
            if l.is_zero() || f.is_zero() {
                continue;
            }
            let d = l.homogeneous_degree()? + f.homogeneous_degree()?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(SyzygyVector { coeffs, degree: degree? })
    }

    pub fn with_degree(coeffs: Vec<Polynomial>, degree: u32) -> Self {
        SyzygyVector { coeffs, degree }
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Whether `sum l_i f_i` vanishes identically.
pub fn verify_syzygy(generators: &[Polynomial], s: &SyzygyVector) -> bool {
    if generators.len() != s.len() || generators.is_empty() {
        return false;
    }
    let mut acc = Polynomial::zero(generators[0].ring());
    for (l, f) in s.coeffs().iter().zip(generators) {
        acc = &acc + &(l * f);
    }
    acc.is_zero()
}

fn unit_vector(ring: &RingRef, m: usize, i: usize) -> Vec<Polynomial> {
    (0..m).map(|k| if k == i { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect()
}

/// Converts a relation among Gröbner basis elements into one among the
/// original generators.
fn to_generators(coeffs: &[Polynomial], cofactors: &[Vec<Polynomial>], m: usize, ring: &RingRef) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(ring); m];
    for (c, cof) in coeffs.iter().zip(cofactors) {
        if c.is_zero() {
            continue;
        }
        for (o, t) in out.iter_mut().zip(cof) {
            if !t.is_zero() {
                *o = &*o + &(c * t);
            }
        }
    }
    out
}

/// Generators of the syzygy module of nonzero homogeneous `gens`, complete
/// in degrees up to `d_max`.
fn schreyer_candidates(ring: &RingRef, gens: &[Polynomial], d_max: u32) -> Vec<SyzygyVector> {
    let m = gens.len();
    let opts = GroebnerOptions { max_degree: Some(d_max), track_cofactors: true, ..Default::default() };
    let gb = buchberger(ring, gens, &opts);
    let cofs = gb.cofactors().unwrap();
    let elems = gb.elements();
    let weights = ring.weights();
    let mut out = Vec::new();

    for k in 0..elems.len() {
        for l in k + 1..elems.len() {
            let (lk, ll) = (elems[k].leading_monomial().unwrap(), elems[l].leading_monomial().unwrap());
            let lcm = lk.lcm(ll, weights);
            if lcm.degree() > d_max {
                continue;
            }
            let qk = lcm.div(lk).unwrap();
            let ql = lcm.div(ll).unwrap();
            let mut s = elems[k].mul_term(&qk, &Coeff::one());
            s.add_scaled_shifted(&-Coeff::one(), Some(&ql), &elems[l]);
            let (nf, quot) = gb.reduce_tracking(&s);
            debug_assert!(nf.is_zero(), "S-polynomial within the degree bound must reduce to zero");
            let mut coeffs: Vec<Polynomial> = quot.into_iter().map(|q| -q).collect();
            coeffs[k].add_scaled_shifted(&Coeff::one(), Some(&qk), &Polynomial::one(ring));
            coeffs[l].add_scaled_shifted(&-Coeff::one(), Some(&ql), &Polynomial::one(ring));
            let v = to_generators(&coeffs, cofs, m, ring);
            if v.iter().any(|p| !p.is_zero()) {
                out.push(SyzygyVector::with_degree(v, lcm.degree()));
            }
        }
    }
    // each generator rewritten through the basis
    for (i, f) in gens.iter().enumerate() {
        let (nf, quot) = gb.reduce_tracking(f);
        debug_assert!(nf.is_zero());
        let through = to_generators(&quot, cofs, m, ring);
        let mut v = unit_vector(ring, m, i);
        for (a, b) in v.iter_mut().zip(&through) {
            *a = &*a - b;
        }
        if v.iter().any(|p| !p.is_zero()) {
            out.push(SyzygyVector::with_degree(v, f.homogeneous_degree().unwrap()));
        }
    }
    out
}

/// Free-module encoding: the ring extended by one position variable per
/// generator.
struct ModuleRing {
    ring: RingRef,
    base_vars: usize,
    m: usize,
}

impl ModuleRing {
    fn new(base: &RingRef, degrees: &[u32]) -> Self {
        let mut prefix = String::from("e");
        while base.names().iter().any(|n| n.starts_with(&prefix)) {
            prefix.push('_');
        }
        let names: Vec<String> = (0..degrees.len()).map(|i| format!("{prefix}{i}")).collect();
        let extra: Vec<(&str, u32)> = names.iter().map(|s| s.as_str()).zip(degrees.iter().copied()).collect();
        let ring = base.extended(&extra).expect("position variables have fresh names");
        ModuleRing { ring, base_vars: base.nvars(), m: degrees.len() }
    }

    fn encode(&self, v: &SyzygyVector) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        let weights = self.ring.weights();
        for (i, l) in v.coeffs().iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let lifted = l.embed(&self.ring).expect("base ring embeds");
            let e = Monomial::var(weights, self.base_vars + i, 1);
            out.add_scaled_shifted(&Coeff::one(), Some(&e), &lifted);
        }
        out
    }

    fn groebner(&self, kept: &[Polynomial], d: u32) -> GroebnerBasis {
        let opts = GroebnerOptions {
            max_degree: Some(d),
            position_vars: Some(self.base_vars..self.base_vars + self.m),
            ..Default::default()
        };
        buchberger(&self.ring, kept, &opts)
    }
}

/// Minimal generators of the first syzygy module of `generators`, complete
/// in degrees up to `d_max`.
///
/// Zero generators contribute the unit vector at their position (degree 0).
/// Output is sorted by degree.
pub fn syzygy_module(generators: &[Polynomial], d_max: u32) -> Vec<SyzygyVector> {
    assert!(!generators.is_empty(), "need at least one generator");
    let ring = generators[0].ring().clone();
    let m = generators.len();
    let mut result = Vec::new();
    let nonzero: Vec<usize> = (0..m).filter(|&i| !generators[i].is_zero()).collect();
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            result.push(SyzygyVector::with_degree(unit_vector(&ring, m, i), 0));
        }
    }
    if nonzero.is_empty() {
        return result;
    }
    let gens: Vec<Polynomial> = nonzero.iter().map(|&i| generators[i].clone()).collect();
    let degrees: Vec<u32> =
        gens.iter().map(|g| g.homogeneous_degree().expect("generators must be homogeneous")).collect();

    let mut cands = schreyer_candidates(&ring, &gens, d_max);
    cands.sort_by_key(|s| s.degree());
    let module = ModuleRing::new(&ring, &degrees);
    let mut kept: Vec<SyzygyVector> = Vec::new();
    let mut kept_encoded: Vec<Polynomial> = Vec::new();

    let mut start = 0;
    while start < cands.len() {
        let d = cands[start].degree();
        let end = start + cands[start..].iter().take_while(|s| s.degree() == d).count();
        let gb = (!kept_encoded.is_empty()).then(|| module.groebner(&kept_encoded, d));
        let mut columns: HashMap<Monomial, usize> = HashMap::new();
        let mut echelon = Echelon::new();
        for cand in &cands[start..end] {
            let enc = module.encode(cand);
            let rem = match &gb {
                Some(gb) => gb.normal_form(&enc),
                None => enc.clone(),
            };
            let row = integer_row(rem.terms().iter().map(|(mono, c)| {
                let n = columns.len();
                (*columns.entry(mono.clone()).or_insert(n), c.clone())
            }));
            if echelon.insert(row) {
                kept.push(cand.clone());
                kept_encoded.push(enc);
            }
        }
        start = end;
    }

    for s in kept {
        let mut full = vec![Polynomial::zero(&ring); m];
        for (k, &i) in nonzero.iter().enumerate() {
            full[i] = s.coeffs()[k].clone();
        }
        result.push(SyzygyVector::with_degree(full, s.degree()));
    }
    result.sort_by_key(|s| s.degree());
    result
}

/// Index of pairs (generator position, monomial) of total degree `d`.
fn vector_coordinates(ring: &RingRef, gen_degrees: &[u32], d: u32) -> HashMap<(usize, Monomial), usize> {
    let mut idx = HashMap::new();
    for (i, &e) in gen_degrees.iter().enumerate() {
        if e > d {
            continue;
        }
        for mono in monomials_of_degree(ring, d - e) {
            let n = idx.len();
            idx.insert((i, mono), n);
        }
    }
    idx
}

/// Dimension of the space of all syzygies of degree `d`, by direct linear
/// algebra on `⊕ A_{d - deg f_i} -> A_d`.
pub fn syzygy_space_dim(generators: &[Polynomial], d: u32) -> usize {
    let ring = generators[0].ring().clone();
    let degrees: Vec<u32> = generators.iter().map(|g| g.homogeneous_degree().unwrap()).collect();
    let coords = vector_coordinates(&ring, &degrees, d);
    let targets: HashMap<Monomial, usize> =
        monomials_of_degree(&ring, d).into_iter().enumerate().map(|(k, mono)| (mono, k)).collect();
    // one row per target monomial: transpose of the multiplication map
    let mut rows: Vec<Vec<(usize, Coeff)>> = vec![Vec::new(); targets.len()];
    for ((i, mono), &col) in &coords {
        for (t, c) in generators[*i].terms() {
            rows[targets[&t.mul(mono)]].push((col, c.clone()));
        }
    }
    kernel(rows.into_iter().map(integer_row), coords.len()).len()
}

/// Dimension of the degree-`d` part of the submodule spanned by `syzygies`.
pub fn submodule_dim(generators: &[Polynomial], syzygies: &[SyzygyVector], d: u32) -> usize {
    let ring = generators[0].ring().clone();
    let degrees: Vec<u32> = generators.iter().map(|g| g.homogeneous_degree().unwrap_or(0)).collect();
    let coords = vector_coordinates(&ring, &degrees, d);
    let mut rows = Vec::new();
    for s in syzygies {
        if s.degree() > d {
            continue;
        }
        for shift in monomials_of_degree(&ring, d - s.degree()) {
            let mut entries = Vec::new();
            for (i, l) in s.coeffs().iter().enumerate() {
                for (mono, c) in l.terms() {
                    entries.push((coords[&(i, mono.mul(&shift))], c.clone()));
                }
            }
            rows.push(integer_row(entries));
        }
    }
    rank(rows)
}

/// Degree multiset of a syzygy list.
pub fn degree_multiset(syzygies: &[SyzygyVector]) -> Vec<u32> {
    let mut ds: Vec<u32> = syzygies.iter().map(|s| s.degree()).collect();
    ds.sort_unstable();
    ds
}
