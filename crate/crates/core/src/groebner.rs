//! Buchberger's algorithm for weighted-homogeneous ideals.
//!
//! Pairs are processed degree by degree (normal selection strategy; ties by
//! pair creation order) and pruned with the Gebauer–Möller criteria. The
//! engine can optionally track how every basis element is written in terms of
//! the input generators, stop at a degree bound, and restrict S-pairs to
//! leading monomials sharing a "position" variable, which turns it into a
//! Gröbner basis routine for graded submodules of a free module.

use std::ops::Range;

use num_traits::One;

use crate::poly::{Coeff, Monomial, Polynomial, RingRef};

#[derive(Debug, Clone, Default)]
pub struct GroebnerOptions {
    /// Ignore S-pairs above this degree. Normal forms of elements of degree
    /// at most the bound are still exact.
    pub max_degree: Option<u32>,
    pub track_cofactors: bool,
    /// Variables encoding free-module positions; only pairs whose leading
    /// monomials share the same position variable are formed.
    pub position_vars: Option<Range<usize>>,
}

/// Reduced Gröbner basis in the canonical monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    ngens: usize,
    max_degree: Option<u32>,
}

type Cofactor = Vec<Polynomial>;

fn cof_axpy(dst: &mut Cofactor, c: &Coeff, m: Option<&Monomial>, src: &Cofactor) {
    for (d, s) in dst.iter_mut().zip(src) {
        d.add_scaled_shifted(c, m, s);
    }
}

fn cof_scale(v: &Cofactor, c: &Coeff) -> Cofactor {
    v.iter().map(|p| p.scale(c)).collect()
}

struct Elem {
    poly: Polynomial,
    cof: Option<Cofactor>,
    active: bool,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn position_of(m: &Monomial, range: &Range<usize>) -> Option<usize> {
    range.clone().find(|&i| m.exponent(i) > 0)
}

/// Reduces `p` (and its cofactor) fully against the active elements.
fn reduce_with(
    p: Polynomial,
    mut cof: Option<Cofactor>,
    basis: &[Elem],
) -> (Polynomial, Option<Cofactor>) {
    let ring = p.ring().clone();
    let mut work = p;
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    while let Some((m, c)) = work.leading_term().cloned() {
        let divisor = basis.iter().find(|e| {
            e.active && e.poly.leading_monomial().map(|lm| lm.divides(&m)).unwrap_or(false)
        });
        match divisor {
            Some(e) => {
                let (lm, lc) = e.poly.leading_term().unwrap();
                let q = m.div(lm).unwrap();
                let coef = -(&c / lc);
                work.add_scaled_shifted(&coef, Some(&q), &e.poly);
                if let (Some(cv), Some(ev)) = (cof.as_mut(), e.cof.as_ref()) {
                    cof_axpy(cv, &coef, Some(&q), ev);
                }
            }
            None => {
                let mut terms = work.into_terms();
                rem.push(terms.remove(0));
                work = Polynomial::from_sorted_terms(&ring, terms);
            }
        }
    }
    (Polynomial::from_sorted_terms(&ring, rem), cof)
}

/// Computes a reduced Gröbner basis of the ideal generated by `gens`.
/// Every nonzero generator must be homogeneous.
pub fn buchberger(ring: &RingRef, gens: &[Polynomial], opts: &GroebnerOptions) -> GroebnerBasis {
    let weights = ring.weights().to_vec();
    let ngens = gens.len();
    let unit_cof = |k: usize| -> Cofactor {
        (0..ngens)
            .map(|i| if i == k { Polynomial::one(ring) } else { Polynomial::zero(ring) })
            .collect()
    };

    let mut inputs: Vec<(u32, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| {
            let d = g.homogeneous_degree().expect("Gröbner input must be homogeneous");
            (d, k)
        })
        .collect();
    inputs.sort();
    let mut next_input = 0;

    let mut basis: Vec<Elem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let pair_deg = pairs.iter().map(|p| p.lcm.degree()).min();
        let input_deg = inputs.get(next_input).map(|x| x.0);
        let d = match (pair_deg, input_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.max_degree.map(|m| d > m).unwrap_or(false) {
            break;
        }

        let mut todo: Vec<(Polynomial, Option<Cofactor>)> = Vec::new();
        while next_input < inputs.len() && inputs[next_input].0 == d {
            let k = inputs[next_input].1;
            todo.push((gens[k].clone(), opts.track_cofactors.then(|| unit_cof(k))));
            next_input += 1;
        }
        let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.lcm.degree() == d);
        pairs = later;
        for p in now {
            let (ei, ej) = (&basis[p.i], &basis[p.j]);
            let (lmi, lci) = ei.poly.leading_term().unwrap();
            let (lmj, lcj) = ej.poly.leading_term().unwrap();
            let qi = p.lcm.div(lmi).unwrap();
            let qj = p.lcm.div(lmj).unwrap();
            let ci = lci.recip();
            let cj = -lcj.recip();
            let mut s = ei.poly.mul_term(&qi, &ci);
            s.add_scaled_shifted(&cj, Some(&qj), &ej.poly);
            let cof = match (&ei.cof, &ej.cof) {
                (Some(a), Some(b)) => {
                    let mut c: Cofactor = a.iter().map(|x| x.mul_term(&qi, &ci)).collect();
                    cof_axpy(&mut c, &cj, Some(&qj), b);
                    Some(c)
                }
                _ => None,
            };
            todo.push((s, cof));
        }

        for (p, cof) in todo {
            let (h, hcof) = reduce_with(p, cof, &basis);
            if h.is_zero() {
                continue;
            }
            let inv = h.leading_coeff().unwrap().recip();
            let h = h.scale(&inv);
            let hcof = hcof.map(|c| cof_scale(&c, &inv));
            let h_lm = h.leading_monomial().unwrap().clone();
            let h_idx = basis.len();
            basis.push(Elem { poly: h, cof: hcof, active: true });
            update(&mut basis, &mut pairs, h_idx, &h_lm, &weights, opts.position_vars.as_ref());
        }
    }

    interreduce(ring, basis, ngens, opts.max_degree, opts.track_cofactors)
}

fn update(
    basis: &mut [Elem],
    pairs: &mut Vec<Pair>,
    h_idx: usize,
    h_lm: &Monomial,
    weights: &[u32],
    positions: Option<&Range<usize>>,
) {
    let allowed = |m: &Monomial| match positions {
        None => true,
        Some(r) => position_of(m, r) == position_of(h_lm, r),
    };
    // candidate pairs (g, h)
    let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
    for (g, e) in basis.iter().enumerate() {
        if g == h_idx || !e.active {
            continue;
        }
        let lm = e.poly.leading_monomial().unwrap();
        if !allowed(lm) {
            continue;
        }
        cands.push((g, lm.lcm(h_lm, weights), lm.is_coprime(h_lm)));
    }
    // chain criterion among the new pairs
    let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
    for k in 0..cands.len() {
        let (g, ref lcm, coprime) = cands[k];
        let dominated = !coprime
            && (cands[k + 1..].iter().any(|c| c.1.divides(lcm))
                || keep.iter().any(|c| c.1.divides(lcm)));
        if !dominated {
            keep.push((g, lcm.clone(), coprime));
        }
    }
    // drop old pairs made redundant by h
    pairs.retain(|p| {
        if !h_lm.divides(&p.lcm) {
            return true;
        }
        let lmi = basis[p.i].poly.leading_monomial().unwrap();
        let lmj = basis[p.j].poly.leading_monomial().unwrap();
        lmi.lcm(h_lm, weights) == p.lcm || lmj.lcm(h_lm, weights) == p.lcm
    });
    for (g, lcm, coprime) in keep {
        if !coprime {
            pairs.push(Pair { i: g, j: h_idx, lcm });
        }
    }
    for (g, e) in basis.iter_mut().enumerate() {
        if g != h_idx && e.active && h_lm.divides(e.poly.leading_monomial().unwrap()) {
            e.active = false;
        }
    }
}

fn interreduce(
    ring: &RingRef,
    basis: Vec<Elem>,
    ngens: usize,
    max_degree: Option<u32>,
    track: bool,
) -> GroebnerBasis {
    let mut minimal: Vec<Elem> = Vec::new();
    let lms: Vec<Option<Monomial>> =
        basis.iter().map(|e| e.active.then(|| e.poly.leading_monomial().unwrap().clone())).collect();
    for (k, e) in basis.into_iter().enumerate() {
        let Some(lm) = &lms[k] else { continue };
        let redundant = lms.iter().enumerate().any(|(j, other)| {
            j != k && other.as_ref().map(|o| o.divides(lm) && (o != lm || j < k)).unwrap_or(false)
        });
        if !redundant {
            minimal.push(e);
        }
    }
    minimal.sort_by(|a, b| a.poly.leading_monomial().cmp(&b.poly.leading_monomial()));

    let mut reduced: Vec<(Polynomial, Option<Cofactor>)> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let e = &minimal[k];
        let mut terms = e.poly.terms().to_vec();
        let head = terms.remove(0);
        let tail = Polynomial::from_sorted_terms(ring, terms);
        let cof = e.cof.clone();
        // reduce the tail against the other minimal elements
        let others: Vec<Elem> = minimal
            .iter()
            .enumerate()
            .map(|(j, o)| Elem {
                poly: o.poly.clone(),
                cof: o.cof.clone(),
                active: j != k,
            })
            .collect();
        let (tail_nf, cof) = reduce_with(tail, cof, &others);
        let mut poly = Polynomial::from_sorted_terms(ring, vec![head]);
        poly.add_scaled_shifted(&Coeff::one(), None, &tail_nf);
        reduced.push((poly, cof));
    }
    let (elements, cofs): (Vec<Polynomial>, Vec<Option<Cofactor>>) = reduced.into_iter().unzip();
    GroebnerBasis {
        ring: ring.clone(),
        elements,
        cofactors: if track { Some(cofs.into_iter().map(|c| c.unwrap()).collect()) } else { None },
        ngens,
        max_degree,
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Degree bound the basis is complete up to, `None` if complete.
    pub fn max_degree(&self) -> Option<u32> {
        self.max_degree
    }

    /// `cofactors()[k][i]` is the coefficient of input generator `i` in
    /// element `k`, when tracking was requested.
    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.reduce_tracking(p).0
    }

    /// Normal form together with quotients `q` such that
    /// `p = sum_k q[k] * elements[k] + nf`.
    pub fn reduce_tracking(&self, p: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
        let ring = p.ring().clone();
        let mut work = p.clone();
        let mut quot: Vec<Polynomial> = vec![Polynomial::zero(&ring); self.elements.len()];
        let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = work.leading_term().cloned() {
            match self
                .elements
                .iter()
                .position(|g| g.leading_monomial().unwrap().divides(&m))
            {
                Some(k) => {
                    let g = &self.elements[k];
                    let q = m.div(g.leading_monomial().unwrap()).unwrap();
                    // elements are monic
                    work.add_scaled_shifted(&-c.clone(), Some(&q), g);
                    quot[k].add_scaled_shifted(&c, Some(&q), &Polynomial::one(&ring));
                }
                None => {
                    let mut terms = work.into_terms();
                    rem.push(terms.remove(0));
                    work = Polynomial::from_sorted_terms(&ring, terms);
                }
            }
        }
        (Polynomial::from_sorted_terms(&ring, rem), quot)
    }

    /// Expresses an ideal member in terms of the input generators. Requires
    /// cofactor tracking; returns `None` if `p` is not in the ideal.
    pub fn lift(&self, p: &Polynomial) -> Option<Vec<Polynomial>> {
        let cofs = self.cofactors.as_ref().expect("lift needs a basis with cofactors");
        let (nf, quot) = self.reduce_tracking(p);
        if !nf.is_zero() {
            return None;
        }
        let mut out = vec![Polynomial::zero(&self.ring); self.ngens];
        for (q, cof) in quot.iter().zip(cofs) {
            if q.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(cof) {
                *o = &*o + &(q * c);
            }
        }
        Some(out)
    }

    /// Whether `m` lies in the leading-term ideal.
    pub fn is_leading_reducible(&self, m: &Monomial) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }
}
