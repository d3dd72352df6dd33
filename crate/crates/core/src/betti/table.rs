use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ideals::IntPolynomial;

/// Graded Betti numbers `b_{i,j}` of a quotient `R/I`; zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Repr", from = "Repr")]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize, Deserialize)]
struct Repr {
    n: usize,
    /// `[i, j, b_ij]` triples.
    entries: Vec<(usize, u32, u64)>,
}

impl From<BettiTable> for Repr {
    fn from(t: BettiTable) -> Self {
        Repr {
            n: t.n,
            entries: t.entries.into_iter().map(|((i, j), b)| (i, j, b)).collect(),
        }
    }
}

impl From<Repr> for BettiTable {
    fn from(r: Repr) -> Self {
        let mut t = BettiTable::new(r.n);
        for (i, j, b) in r.entries {
            t.add(i, j, b);
        }
        t
    }
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, i: usize, j: u32, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Nonzero `(j, b_ij)` in homological degree `i`.
    pub fn row(&self, i: usize) -> Vec<(u32, u64)> {
        self.entries()
            .filter(|&(h, _, _)| h == i)
            .map(|(_, j, b)| (j, b))
            .collect()
    }

    /// `b_i = sum_j b_ij` for `i = 0..=n`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.n + 1];
        for (i, _, b) in self.entries() {
            t[i] += b;
        }
        t
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `sum (-1)^i b_ij t^j`, which equals the Hilbert series numerator.
    pub fn alternating_sum(&self) -> IntPolynomial {
        let terms: Vec<(u32, i64)> = self
            .entries()
            .map(|(i, j, b)| (j, if i % 2 == 0 { b as i64 } else { -(b as i64) }))
            .collect();
        IntPolynomial::from_terms(&terms)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.n {
            let row = self.row(i);
            if row.is_empty() {
                continue;
            }
            let cells: Vec<String> = row.iter().map(|(j, b)| format!("{b}@{j}")).collect();
            writeln!(f, "b{i}: {}", cells.join(" + "))?;
        }
        Ok(())
    }
}
