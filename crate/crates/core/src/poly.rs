//! Weighted polynomial rings and sparse polynomials with exact rational
//! coefficients.
//!
//! Every polynomial keeps a shared handle to its [`WeightedRing`]. Terms are
//! stored in strictly decreasing canonical order: weighted degree first, ties
//! broken reverse-lexicographically on the ring's variable order (a monomial
//! with a smaller exponent in the last differing variable is larger).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use smallvec::SmallVec;

use crate::error::PolyError;

/// Coefficient field of every polynomial in the crate.
pub type Coeff = BigRational;

pub type Exponents = SmallVec<[u16; 8]>;

pub type RingRef = Arc<WeightedRing>;

/// Polynomial ring over the rationals whose variables carry positive integer
/// weights. The order of the variables is part of the ring's identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedRing {
    names: Vec<String>,
    weights: Vec<u32>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl WeightedRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<RingRef, PolyError> {
        let (names, weights): (Vec<String>, Vec<u32>) =
            vars.into_iter().map(|(n, w)| (n.into(), w)).unzip();
        Self::from_parts(names, weights)
    }

    pub fn from_parts(names: Vec<String>, weights: Vec<u32>) -> Result<RingRef, PolyError> {
        if names.len() != weights.len() {
            return Err(PolyError::BadRing(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::BadRing(format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(PolyError::BadRing(format!("duplicate variable name {name:?}")));
            }
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(PolyError::BadRing(format!(
                "weight of {} must be positive",
                names[pos]
            )));
        }
        Ok(Arc::new(WeightedRing { names, weights }))
    }

    /// The same ring with extra variables appended after the existing ones.
    pub fn extended(&self, extra: &[(&str, u32)]) -> Result<RingRef, PolyError> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for &(n, w) in extra {
            names.push(n.to_string());
            weights.push(w);
        }
        Self::from_parts(names, weights)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable { name: name.to_string(), position: 0 })?;
        Ok(Polynomial::var(self, i))
    }
}

impl fmt::Display for WeightedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[")?;
        for (i, (n, w)) in self.names.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{w}")?;
        }
        write!(f, "]")
    }
}

/// A monomial with its weighted degree cached. Ordering is the canonical
/// degree-compatible reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(weights: &[u32], exps: &[u16]) -> Self {
        assert_eq!(weights.len(), exps.len(), "exponent vector length mismatch");
        let degree = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { degree, exps: SmallVec::from_slice(exps) }
    }

    pub fn var(weights: &[u32], i: usize, e: u16) -> Self {
        let mut exps: Exponents = SmallVec::from_elem(0, weights.len());
        exps[i] = e;
        Monomial { degree: weights[i] * e as u32, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { degree: self.degree - other.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { degree, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn fmt_in(&self, ring: &WeightedRing) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.name(i).to_string()),
                _ => parts.push(format!("{}^{}", ring.name(i), e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of weighted degree `d`, largest first.
pub fn monomials_of_degree(ring: &WeightedRing, d: u32) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(weights, cur));
            }
            return;
        }
        let w = weights[i];
        let mut e = 0u32;
        while e * w <= left {
            cur[i] = e as u16;
            rec(weights, i + 1, left - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; ring.nvars()];
    rec(ring.weights(), 0, d, &mut cur, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Result of asking a nonzero polynomial for its weighted degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    Homogeneous(u32),
    Inhomogeneous,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.weights(), i, 1), Coeff::one())
    }

    pub fn term(ring: &RingRef, m: Monomial, c: Coeff) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exps.len(), ring.nvars());
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    pub fn weighted_degree(&self) -> Result<WeightedDegree, PolyError> {
        let first = self.terms.first().ok_or(PolyError::ZeroPolynomial)?;
        let d = first.0.degree;
        if self.terms.iter().all(|(m, _)| m.degree == d) {
            Ok(WeightedDegree::Homogeneous(d))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    /// Degree of a nonzero homogeneous polynomial, `None` otherwise.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.weighted_degree() {
            Ok(WeightedDegree::Homogeneous(d)) => Some(d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Distinct weighted degrees of the monomials, decreasing.
    pub fn monomial_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.iter().map(|(m, _)| m.degree).collect();
        ds.dedup();
        ds
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(&Coeff::one(), None, other);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        out.add_scaled_shifted(&-Coeff::one(), None, other);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(big.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(mm, a)| (mm.mul(m), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self += c * m * other`, with `m = None` meaning the unit monomial.
    pub fn add_scaled_shifted(&mut self, c: &Coeff, m: Option<&Monomial>, other: &Polynomial) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut right = other.terms.iter().map(|(mm, a)| {
            let mono = match m {
                Some(m) => mm.mul(m),
                None => mm.clone(),
            };
            (mono, a * c)
        });
        let mut r = right.next();
        loop {
            match (left.peek(), &r) {
                (None, None) => break,
                (Some(_), None) => out.push(left.next().unwrap()),
                (None, Some(_)) => {
                    out.push(r.take().unwrap());
                    r = right.next();
                }
                (Some(l), Some(rr)) => match l.0.cmp(&rr.0) {
                    Ordering::Greater => out.push(left.next().unwrap()),
                    Ordering::Less => {
                        out.push(r.take().unwrap());
                        r = right.next();
                    }
                    Ordering::Equal => {
                        let (lm, lc) = left.next().unwrap();
                        let (_, rc) = r.take().unwrap();
                        let s = lc + rc;
                        if !s.is_zero() {
                            out.push((lm, s));
                        }
                        r = right.next();
                    }
                },
            }
        }
        self.terms = out;
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Drops every term whose monomial is divisible by variable `i`,
    /// i.e. substitutes zero for it.
    pub fn set_var_zero(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exps[i] == 0).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let w = self.ring.weights()[i];
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[i] > 0)
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                let e = exps[i];
                exps[i] -= 1;
                (Monomial { degree: m.degree - w, exps }, c * rat(e as i64))
            });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (mm, c) in &self.terms {
            terms.push((mm.div(m)?, c.clone()));
        }
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Ring homomorphism sending variable `i` of `self`'s ring to `images[i]`.
    pub fn substitute(&self, target: &RingRef, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable required");
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out.add_scaled_shifted(&Coeff::one(), None, &t);
        }
        out
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    /// Variables missing from `target` are an error unless they do not occur.
    pub fn embed(&self, target: &RingRef) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.names() {
            map.push(target.index_of(name));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps: Exponents = SmallVec::from_elem(0, target.nvars());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(PolyError::UnknownVariable {
                            name: self.ring.name(i).to_string(),
                            position: 0,
                        })
                    }
                }
            }
            terms.push((Monomial::from_exponents(target.weights(), &exps), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// A homogeneous polynomial of degree `d` with independent uniform
    /// integer coefficients in `[-bound, bound]` on every monomial.
    pub fn random_homogeneous<R: Rng>(ring: &RingRef, d: u32, bound: i64, rng: &mut R) -> Polynomial {
        let terms = monomials_of_degree(ring, d)
            .into_iter()
            .map(|m| (m, rat(rng.gen_range(-bound..=bound))));
        Polynomial::from_terms(ring, terms)
    }

    /// Random homogeneous polynomial using only the listed variables.
    pub fn random_homogeneous_in<R: Rng>(
        ring: &RingRef,
        d: u32,
        vars: &[usize],
        bound: i64,
        rng: &mut R,
    ) -> Polynomial {
        let terms = monomials_of_degree(ring, d)
            .into_iter()
            .filter(|m| m.exps.iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i)))
            .map(|m| (m, rat(rng.gen_range(-bound..=bound))));
        Polynomial::from_terms(ring, terms)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.fmt_in(&self.ring))?;
            } else {
                write!(f, "{coeff}*{}", m.fmt_in(&self.ring))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial operands from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_a() -> RingRef {
        WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(WeightedRing::new([("x", 0)]).is_err());
        assert!(WeightedRing::new([("x", 1), ("x", 2)]).is_err());
        assert!(WeightedRing::new([("1x", 1)]).is_err());
        assert!(WeightedRing::new([("x_1", 1)]).is_ok());
    }

    #[test]
    fn order_is_degree_then_revlex() {
        let r = ring_a();
        let y2 = Monomial::from_exponents(r.weights(), &[0, 2, 0, 0, 0, 0]);
        let x2z2 = Monomial::from_exponents(r.weights(), &[1, 0, 0, 1, 0, 0]);
        assert!(y2 > x2z2);
        let v = Monomial::var(r.weights(), 5, 1);
        let x2u = Monomial::from_exponents(r.weights(), &[1, 0, 0, 0, 1, 0]);
        assert!(v != x2u);
        assert!(Monomial::var(r.weights(), 0, 6) > v);
    }

    #[test]
    fn degree_queries() {
        let r = ring_a();
        let c = Polynomial::constant(&r, rat(5));
        assert_eq!(c.weighted_degree().unwrap(), WeightedDegree::Homogeneous(0));
        let p = Polynomial::var(&r, 0) + Polynomial::var(&r, 1);
        assert_eq!(p.weighted_degree().unwrap(), WeightedDegree::Inhomogeneous);
        assert!(matches!(Polynomial::zero(&r).weighted_degree(), Err(PolyError::ZeroPolynomial)));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring_a();
        let b = WeightedRing::new([("x", 1)]).unwrap();
        let p = Polynomial::var(&a, 0);
        let q = Polynomial::var(&b, 0);
        assert!(matches!(p.checked_add(&q), Err(PolyError::RingMismatch { .. })));
    }

    #[test]
    fn monomials_of_degree_small_cases() {
        let r = WeightedRing::new([("x1", 1), ("x2", 1), ("y", 2), ("z1", 3)]).unwrap();
        assert_eq!(monomials_of_degree(&r, 3).len(), 7);
        assert_eq!(monomials_of_degree(&r, 0).len(), 1);
        let c = WeightedRing::new([("xi", 1), ("eta", 3), ("zeta", 5)]).unwrap();
        let ms = monomials_of_degree(&c, 7);
        let printed: Vec<String> = ms.iter().map(|m| m.fmt_in(&c)).collect();
        assert_eq!(printed.len(), 4);
        for want in ["xi^7", "xi^4*eta", "xi*eta^2", "xi^2*zeta"] {
            assert!(printed.contains(&want.to_string()), "{want} missing from {printed:?}");
        }
    }

    #[test]
    fn substitution_and_derivative() {
        let r = ring_a();
        let x2 = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x2 * &x2) * &y;
        assert_eq!(p.derivative(0), &(&x2 * &y).scale(&rat(2)) + &Polynomial::zero(&r));
        let mut images: Vec<Polynomial> = (0..6).map(|i| Polynomial::var(&r, i)).collect();
        images[1] = Polynomial::one(&r);
        assert_eq!(p.substitute(&r, &images), &x2 * &x2);
    }
}
