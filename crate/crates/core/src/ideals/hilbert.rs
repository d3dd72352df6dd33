use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polycore::binomial;

/// Univariate polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Sum of `c t^e` over the given terms; repeated exponents accumulate.
    pub fn from_terms(terms: &[(u32, i64)]) -> Self {
        let top = terms
            .iter()
            .map(|&(e, _)| e as usize)
            .max()
            .map_or(0, |e| e + 1);
        let mut coeffs = vec![0; top];
        for &(e, c) in terms {
            coeffs[e as usize] += c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, e: u32) -> i64 {
        self.coeffs.get(e as usize).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(u32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e as u32, c))
            .collect()
    }

    /// Coefficients of `self / (1 - t)^n` through degree `dmax`.
    pub fn expand_over(&self, n: usize, dmax: u32) -> Vec<i64> {
        (0..=dmax)
            .map(|d| {
                self.terms()
                    .into_iter()
                    .filter(|&(e, _)| e <= d)
                    .map(|(e, c)| {
                        let m = u64::from(d - e);
                        c * if n == 0 {
                            i64::from(m == 0)
                        } else {
                            binomial(m + n as u64 - 1, n as u64 - 1) as i64
                        }
                    })
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ if mag != 1 => write!(f, "{mag}")?,
                _ => {}
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Hilbert function of an Artinian quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `values[d] = dim (R/I)_d` through the socle degree.
    pub values: Vec<u64>,
    /// Largest degree with a nonzero value (`None` for the zero ring).
    pub socle_degree: Option<u32>,
}

impl HilbertData {
    pub fn new(values: Vec<u64>) -> Self {
        let socle_degree = values.iter().rposition(|&v| v != 0).map(|d| d as u32);
        Self {
            values,
            socle_degree,
        }
    }

    pub fn value(&self, d: u32) -> u64 {
        self.values.get(d as usize).copied().unwrap_or(0)
    }

    /// `N(t)` with `sum_d HF(d) t^d = N(t) / (1 - t)^n`.
    pub fn numerator(&self, n: usize) -> IntPolynomial {
        let mut acc: Vec<i64> = self.values.iter().map(|&v| v as i64).collect();
        acc.resize(acc.len() + n, 0);
        for _ in 0..n {
            for i in (1..acc.len()).rev() {
                acc[i] -= acc[i - 1];
            }
        }
        IntPolynomial::new(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerator_round_trip() {
        let h = HilbertData::new(vec![1, 3, 6, 6]);
        let n = h.numerator(3);
        assert_eq!(
            n,
            IntPolynomial::from_terms(&[(0, 1), (3, -4), (4, -3), (5, 12), (6, -6)])
        );
        assert_eq!(n.expand_over(3, 8), [1, 3, 6, 6, 0, 0, 0, 0, 0]);
        assert_eq!(h.socle_degree, Some(3));
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_terms(&[(0, 1), (1, -3), (2, 3), (3, -1)]);
        assert_eq!(p.to_string(), "1 - 3t + 3t^2 - t^3");
        assert_eq!(IntPolynomial::default().to_string(), "0");
    }

    #[test]
    fn coincident_exponents_merge() {
        let p = IntPolynomial::from_terms(&[(3, -3), (3, -1), (0, 1)]);
        assert_eq!(p.terms(), [(0, 1), (3, -4)]);
    }
}
