//! Deliberately naive oracles shared by the integration tests.

#![allow(dead_code)]

use num_traits::Zero;
use psbetti::ideals::GradedIdeal;
use psbetti::polycore::{count_monomials, monomial_basis, Monomial, Rational};

/// Rank by textbook Gaussian elimination on dense rational rows.
pub fn naive_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `HF(R/I, d)` from the span of all monomial multiples of the generators.
pub fn naive_hf(ideal: &GradedIdeal, d: u32) -> usize {
    let n = ideal.nvars();
    let mut rows = Vec::new();
    for (g, &e) in ideal.generators().iter().zip(ideal.degrees()) {
        if e > d {
            continue;
        }
        for mu in monomial_basis(n, d - e) {
            rows.push(g.mul_monomial(&mu).to_coeff_vector(d).unwrap());
        }
    }
    count_monomials(n, d) - naive_rank(rows)
}

/// Number of degree `d` monomials divisible by none of `gens`.
pub fn standard_monomials(n: usize, gens: &[Monomial], d: u32) -> usize {
    monomial_basis(n, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count()
}

/// `(l, k)` grid plus the branch-boundary points with `l, k <= 5`.
pub fn acceptance_points() -> Vec<(u32, u32)> {
    let mut pts: Vec<(u32, u32)> = (1..=3).flat_map(|l| (1..=3).map(move |k| (l, k))).collect();
    for p in psbetti::harness::boundary_points(5) {
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.sort();
    pts
}
