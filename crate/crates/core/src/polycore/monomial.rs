use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Binomial coefficient for the small arguments that appear in graded dimensions.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binomial(u64::from(d) + nvars as u64 - 1, nvars as u64 - 1) as usize
}

/// A monomial `x_1^{e_1} ... x_n^{e_n}`.
///
/// Ordered graded-lexicographically with `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
        }
    }

    /// The variable `x_i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Position of this monomial in [`monomial_basis`] of its degree.
    pub fn index(&self) -> usize {
        let n = self.exps.len();
        let mut remaining = self.degree();
        let mut idx = 0usize;
        for (i, &e) in self.exps.iter().enumerate() {
            if i + 1 == n {
                break;
            }
            // monomials sharing the prefix but with a larger exponent here
            if remaining > e {
                idx += count_monomials(n - i, remaining - e - 1);
            }
            remaining -= e;
        }
        idx
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn variable_name(nvars: usize, i: usize) -> String {
    match nvars {
        1..=3 => ["x", "y", "z"][i].to_string(),
        4 => ["x", "y", "z", "w"][i].to_string(),
        _ => format!("x{}", i + 1),
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exps.len();
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", variable_name(n, i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, largest first in
/// graded-lex order (`x^d, x^{d-1}y, ..., z^d` for three variables).
pub fn monomial_basis(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "monomial_basis needs at least one variable");
    let mut out = Vec::with_capacity(count_monomials(nvars, d));
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut [u32], pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial::new(current.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(3, 0), vec![Monomial::one(3)]);
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(3, 5).len(), 21);
        for n in 1..=5 {
            for d in 0..=12 {
                assert_eq!(monomial_basis(n, d).len(), count_monomials(n, d));
            }
        }
    }

    #[test]
    fn basis_is_descending_and_indexed() {
        for n in 1..=4 {
            for d in 0..=7 {
                let basis = monomial_basis(n, d);
                for w in basis.windows(2) {
                    assert!(w[0] > w[1]);
                }
                for (i, m) in basis.iter().enumerate() {
                    assert_eq!(m.index(), i, "{m} in degree {d}");
                }
            }
        }
    }

    #[test]
    fn degree_two_order() {
        let names: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
    }

    #[test]
    fn division() {
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(vec![1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
    }
}
