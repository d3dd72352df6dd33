use serde::{Deserialize, Serialize};

use super::GradedIdeal;
use crate::error::{Error, Result};
use crate::polycore::{linear_form_power_int, Monomial, Polynomial, Rational};
use num_traits::One;

/// A linear degree function `phi(r) = l + k (n - r)` on subset sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiParams {
    pub n: usize,
    pub l: u32,
    pub k: u32,
}

impl PhiParams {
    pub fn new(n: usize, l: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!(
                "n = {n}, need at least 2 variables"
            )));
        }
        if l == 0 {
            return Err(Error::InvalidParams(
                "l = 0 makes phi(n) vanish; l must be positive".into(),
            ));
        }
        Ok(Self { n, l, k })
    }

    /// Shorthand for the three-variable case.
    pub fn n3(l: u32, k: u32) -> Result<Self> {
        Self::new(3, l, k)
    }

    pub fn phi(&self, r: usize) -> u32 {
        assert!((1..=self.n).contains(&r));
        self.l + self.k * (self.n - r) as u32
    }

    /// Nonempty subsets of `{0..n}` by size, then lexicographically.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for r in 1..=self.n {
            combinations(self.n, r, 0, &mut Vec::new(), &mut out);
        }
        out
    }
}

fn combinations(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, r, i + 1, cur, out);
        cur.pop();
    }
}

/// Monomial ideal generated by `(prod_{i in S} x_i)^{phi(|S|)}`.
pub fn build_i_phi(p: &PhiParams) -> GradedIdeal {
    let gens = p
        .subsets()
        .into_iter()
        .map(|s| {
            let mut exps = vec![0; p.n];
            for &i in &s {
                exps[i] = p.phi(s.len());
            }
            Polynomial::monomial(Monomial::new(exps), Rational::one())
        })
        .collect();
    GradedIdeal::new(p.n, gens).expect("monomials are homogeneous")
}

/// Ideal generated by `(sum_{i in S} x_i)^{|S| phi(|S|)}`.
///
/// For three variables the generator order is `x, y, z, x+y, x+z, y+z, x+y+z`.
pub fn build_j_phi(p: &PhiParams) -> GradedIdeal {
    let gens = p
        .subsets()
        .into_iter()
        .map(|s| {
            let mut coeffs = vec![0i64; p.n];
            for &i in &s {
                coeffs[i] = 1;
            }
            linear_form_power_int(&coeffs, s.len() as u32 * p.phi(s.len()))
        })
        .collect();
    GradedIdeal::new(p.n, gens).expect("powers of linear forms are homogeneous")
}
