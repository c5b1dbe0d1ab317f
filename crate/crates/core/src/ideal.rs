//! Homogeneous ideals with a lazily computed Gröbner basis.

use std::sync::OnceLock;

use crate::error::{IdealError, PolyError};
use crate::groebner::{buchberger, GroebnerBasis, GroebnerOptions};
use crate::poly::{monomials_of_degree, same_ring, Monomial, Polynomial, RingRef};
use crate::series::RationalSeries;

/// An ideal generated by homogeneous polynomials.
///
/// The Gröbner basis is computed on first use and then shared; concurrent
/// readers either wait for it or see the finished value.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    degrees: Vec<Option<u32>>,
    gb: OnceLock<GroebnerBasis>,
    gb_cofactors: OnceLock<GroebnerBasis>,
}

fn mismatch(a: &RingRef, b: &RingRef) -> PolyError {
    PolyError::RingMismatch { left: a.to_string(), right: b.to_string() }
}

impl GradedIdeal {
    /// Validates that every generator lives in `ring` and is homogeneous.
    /// Zero generators are allowed and have no degree.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        let mut degrees = Vec::with_capacity(generators.len());
        for (index, g) in generators.iter().enumerate() {
            if !same_ring(ring, g.ring()) {
                return Err(mismatch(ring, g.ring()).into());
            }
            if g.is_zero() {
                degrees.push(None);
                continue;
            }
            match g.homogeneous_degree() {
                Some(d) => degrees.push(Some(d)),
                None => {
                    let mut ds = g.monomial_degrees();
                    ds.sort_unstable();
                    ds.dedup();
                    return Err(IdealError::Inhomogeneous { index, text: g.to_string(), degrees: ds });
                }
            }
        }
        Ok(GradedIdeal {
            ring: ring.clone(),
            generators,
            degrees,
            gb: OnceLock::new(),
            gb_cofactors: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> &[Option<u32>] {
        &self.degrees
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        if let Some(gb) = self.gb_cofactors.get() {
            return gb;
        }
        self.gb
            .get_or_init(|| buchberger(&self.ring, &self.generators, &GroebnerOptions::default()))
    }

    /// Basis whose elements carry their expression in the generators.
    pub fn groebner_basis_with_cofactors(&self) -> &GroebnerBasis {
        self.gb_cofactors.get_or_init(|| {
            let opts = GroebnerOptions { track_cofactors: true, ..Default::default() };
            buchberger(&self.ring, &self.generators, &opts)
        })
    }

    fn check_ring(&self, p: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, p.ring()) {
            Ok(())
        } else {
            Err(mismatch(&self.ring, p.ring()))
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(p)?;
        Ok(self.groebner_basis().normal_form(p))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Mutual containment of generators.
    pub fn equals(&self, other: &GradedIdeal) -> Result<bool, PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(mismatch(&self.ring, &other.ring));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Writes `p` as a combination of the generators, or `None` if `p` is
    /// not in the ideal.
    pub fn lift(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>, PolyError> {
        self.check_ring(p)?;
        Ok(self.groebner_basis_with_cofactors().lift(p))
    }

    /// Monomials of degree `d` outside the leading-term ideal, largest first.
    /// They form a basis of the degree-`d` piece of the quotient ring.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let gb = self.groebner_basis();
        monomials_of_degree(&self.ring, d).into_iter().filter(|m| !gb.is_leading_reducible(m)).collect()
    }

    /// Hilbert function of the quotient ring in degrees `0..=d_max`.
    pub fn hilbert_function(&self, d_max: u32) -> RationalSeries {
        RationalSeries::new((0..=d_max).map(|d| self.standard_monomials(d).len() as i64).collect())
    }

    /// Dimension of the degree-`d` piece of the ideal itself.
    pub fn graded_piece_dim(&self, d: u32) -> usize {
        monomials_of_degree(&self.ring, d).len() - self.standard_monomials(d).len()
    }
}

/// The reduced Gröbner basis of `ideal` as a list.
pub fn groebner_basis(ideal: &GradedIdeal) -> Vec<Polynomial> {
    ideal.groebner_basis().elements().to_vec()
}

pub fn normal_form(p: &Polynomial, ideal: &GradedIdeal) -> Result<Polynomial, PolyError> {
    ideal.normal_form(p)
}

pub fn ideal_contains(ideal: &GradedIdeal, p: &Polynomial) -> Result<bool, PolyError> {
    ideal.contains(p)
}

pub fn ideals_equal(a: &GradedIdeal, b: &GradedIdeal) -> Result<bool, PolyError> {
    a.equals(b)
}

pub fn hilbert_function(ideal: &GradedIdeal, d_max: u32) -> RationalSeries {
    ideal.hilbert_function(d_max)
}

pub fn graded_piece_dim_of_ideal(ideal: &GradedIdeal, d: u32) -> usize {
    ideal.graded_piece_dim(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::WeightedRing;

    fn ring() -> RingRef {
        WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> GradedIdeal {
        GradedIdeal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous_generator() {
        let r = ring();
        let err = GradedIdeal::new(&r, vec![parse_polynomial(&r, "x2 + y").unwrap()]).unwrap_err();
        match err {
            IdealError::Inhomogeneous { index, degrees, .. } => {
                assert_eq!(index, 0);
                assert_eq!(degrees, vec![1, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = ring();
        let zero = GradedIdeal::new(&r, vec![]).unwrap();
        assert_eq!(zero.hilbert_function(3).coeffs(), &[1, 1, 2, 4]);
        assert_eq!(zero.graded_piece_dim(5), 0);
        let unit = ideal(&r, &["1"]);
        assert_eq!(unit.hilbert_function(4).coeffs(), &[0, 0, 0, 0, 0]);
    }

    #[test]
    fn two_minors_do_not_contain_the_sixth() {
        let r = ring();
        let i = ideal(&r, &["x2*z2 - y^2", "x2*u - y*z1"]);
        assert!(!i.contains(&parse_polynomial(&r, "z2*v - u^2").unwrap()).unwrap());
        let s1 = parse_polynomial(&r, "x2*(y*u - z1*z2)").unwrap();
        assert!(i.contains(&s1).unwrap());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring();
        let other = WeightedRing::new([("x2", 1)]).unwrap();
        let i = ideal(&r, &["x2"]);
        assert!(i.contains(&parse_polynomial(&other, "x2").unwrap()).is_err());
    }
}
