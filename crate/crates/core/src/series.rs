//! Truncated power series with integer coefficients, used for Hilbert
//! functions.

use std::fmt;

/// Coefficients of `t^0 .. t^max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    coeffs: Vec<i64>,
}

impl RationalSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the constant coefficient");
        RationalSeries { coeffs }
    }

    pub fn max_degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn get(&self, d: u32) -> Option<i64> {
        self.coeffs.get(d as usize).copied()
    }

    /// Partial sums, i.e. the series multiplied by `1/(1-t)`.
    pub fn cumulative(&self) -> RationalSeries {
        let mut acc = 0;
        RationalSeries::new(
            self.coeffs
                .iter()
                .map(|c| {
                    acc += c;
                    acc
                })
                .collect(),
        )
    }

    /// The series `sum_k a_{step*k} t^k`.
    pub fn every_nth(&self, step: usize) -> RationalSeries {
        RationalSeries::new(self.coeffs.iter().step_by(step).copied().collect())
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Expansion of `prod_j (1 - t^{e_j}) / prod_i (1 - t^{w_i})` up to `d_max`:
/// the Hilbert series of a weighted complete intersection.
pub fn hilbert_series_ci(weights: &[u32], relation_degrees: &[u32], d_max: u32) -> RationalSeries {
    let n = d_max as usize + 1;
    let mut coeffs = vec![0i64; n];
    coeffs[0] = 1;
    for &e in relation_degrees {
        let e = e as usize;
        for d in (e..n).rev() {
            coeffs[d] -= coeffs[d - e];
        }
    }
    for &w in weights {
        let w = w as usize;
        for d in w..n {
            coeffs[d] += coeffs[d - w];
        }
    }
    RationalSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_intersection_of_two_sextics() {
        let s = hilbert_series_ci(&[1, 1, 2, 3, 3], &[6, 6], 5);
        assert_eq!(s.coeffs(), &[1, 2, 4, 8, 13, 20]);
    }

    #[test]
    fn weighted_plane_curve_of_degree_fifteen() {
        let s = hilbert_series_ci(&[1, 3, 5], &[15], 7);
        assert_eq!(s.coeffs(), &[1, 1, 1, 2, 2, 3, 4, 4]);
    }

    #[test]
    fn no_relations_single_variable() {
        assert_eq!(hilbert_series_ci(&[1], &[], 3).coeffs(), &[1, 1, 1, 1]);
    }

    #[test]
    fn helpers() {
        let s = RationalSeries::new(vec![1, 1, 2, 4]);
        assert_eq!(s.cumulative().coeffs(), &[1, 2, 4, 8]);
        assert_eq!(s.every_nth(2).coeffs(), &[1, 2]);
        assert_eq!(s.to_string(), "[1, 1, 2, 4]");
    }
}
