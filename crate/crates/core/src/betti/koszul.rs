use rayon::prelude::*;

use super::BettiTable;
use crate::error::{Error, Result};
use crate::ideals::{GradedIdeal, Quotient};
use crate::polycore::{rank, Monomial, Rational, SparseMatrix};

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Rank of the Koszul differential `Λ^i ⊗ (R/I)_{j-i} -> Λ^{i-1} ⊗ (R/I)_{j-i+1}`.
fn differential_rank(q: &Quotient, i: usize, j: u32) -> usize {
    let n = q.nvars();
    if i == 0 || i > n || (j as usize) < i {
        return 0;
    }
    let d = j - i as u32;
    let (Some(src), Some(dst)) = (q.piece(d), q.piece(d + 1)) else {
        return 0;
    };
    let targets = subsets(n, i - 1);
    let width = dst.dim();
    let slot = |t: &[usize]| {
        targets
            .iter()
            .position(|s| s == t)
            .expect("face of a subset")
            * width
    };
    let basis = src.basis_monomials();
    // one row per source basis element: the image of e_S ⊗ mu
    let mut m = SparseMatrix::new(targets.len() * width);
    for s in subsets(n, i) {
        for mu in &basis {
            let mut row: Vec<(usize, Rational)> = Vec::new();
            for (pos, &var) in s.iter().enumerate() {
                let face: Vec<usize> = s.iter().copied().filter(|&v| v != var).collect();
                let base = slot(&face);
                let image = mu.mul(&Monomial::var(n, var)).index();
                for (c, x) in dst.coordinates_of_index(image).into_iter().enumerate() {
                    row.push((base + c, if pos % 2 == 0 { x } else { -x }));
                }
            }
            m.push(row);
        }
    }
    rank(&m)
}

fn binomial(n: usize, r: usize) -> usize {
    crate::polycore::binomial(n as u64, r as u64) as usize
}

/// Graded Betti numbers of `R/I` as Koszul homology dimensions.
///
/// `dmax` must reach `socle + n`, the last internal degree where homology can
/// live.
pub fn betti_linear_algebra(ideal: &GradedIdeal, dmax: u32) -> Result<BettiTable> {
    let q = ideal.quotient()?;
    betti_of_quotient(&q, Some(dmax))
}

/// As [`betti_linear_algebra`] with `dmax = socle + n`.
pub fn betti_koszul(ideal: &GradedIdeal) -> Result<BettiTable> {
    betti_of_quotient(&ideal.quotient()?, None)
}

pub fn betti_of_quotient(q: &Quotient, dmax: Option<u32>) -> Result<BettiTable> {
    let n = q.nvars();
    let mut table = BettiTable::new(n);
    let Some(socle) = q.socle_degree() else {
        return Ok(table);
    };
    let needed = socle + n as u32;
    let dmax = dmax.unwrap_or(needed);
    if dmax < needed {
        return Err(Error::DmaxTooSmall { dmax, needed });
    }
    let strands: Vec<(usize, u32)> = (1..=n)
        .flat_map(|i| (i as u32..=socle + i as u32).map(move |j| (i, j)))
        .collect();
    let ranks: Vec<((usize, u32), usize)> = strands
        .par_iter()
        .map(|&(i, j)| ((i, j), differential_rank(q, i, j)))
        .collect();
    let rank_of = |i: usize, j: u32| {
        ranks
            .iter()
            .find(|(key, _)| *key == (i, j))
            .map_or(0, |(_, r)| *r)
    };
    for i in 0..=n {
        for j in i as u32..=socle + i as u32 {
            let chains = binomial(n, i) * q.dim(j - i as u32);
            let b = chains - rank_of(i, j) - rank_of(i + 1, j);
            table.add(i, j, b as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Polynomial;

    #[test]
    fn koszul_complex_of_the_maximal_ideal() {
        let t = betti_koszul(&GradedIdeal::maximal(3)).unwrap();
        for i in 0..=3 {
            assert_eq!(t.row(i), [(i as u32, binomial(3, i) as u64)]);
        }
    }

    #[test]
    fn dmax_guard() {
        let i = GradedIdeal::maximal(3);
        assert!(matches!(
            betti_linear_algebra(&i, 2),
            Err(Error::DmaxTooSmall { needed: 3, .. })
        ));
        assert!(betti_linear_algebra(&i, 3).is_ok());
    }

    #[test]
    fn principal_power_in_one_variable() {
        let i = GradedIdeal::new(1, vec![Polynomial::var(1, 0).pow(4)]).unwrap();
        let t = betti_koszul(&i).unwrap();
        assert_eq!(t.to_string(), "b0: 1@0\nb1: 1@4\n");
    }
}
