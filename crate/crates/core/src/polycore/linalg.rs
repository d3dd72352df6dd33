//! Exact linear algebra over the rationals.
//!
//! The workhorse is [`echelon`], which returns the reduced row echelon form of
//! a rational matrix. It runs elimination modulo a stream of word-size primes,
//! lifts the echelon entries with Chinese remaindering and rational
//! reconstruction, and then checks the candidate exactly: the kernel vectors
//! it implies must annihilate every row of the input over the integers. Since
//! a rank mod p never exceeds the rank over Q, a passing check pins the rank
//! and the echelon form over Q. If reconstruction does not settle within
//! [`MAX_PRIMES`] primes the fraction-free route ([`echelon_fraction_free`])
//! takes over.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modular::{self, echelon_mod, rational_reconstruction, CrtAccumulator};
use super::Rational;
use crate::error::{Error, Result};

/// Upper bound on primes tried before falling back to fraction-free elimination.
pub const MAX_PRIMES: usize = 160;

fn prime(i: usize) -> u64 {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| modular::primes().take(MAX_PRIMES).collect())[i]
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols);
                r.iter().map(|&x| Rational::from_integer(x.into()))
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let mut s = SparseMatrix::new(self.cols);
        for i in 0..self.rows {
            s.push_dense(self.row(i));
        }
        s
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_sparse())
    }

    /// Right null space basis in reduced echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        kernel(&self.to_sparse())
    }
}

pub type SparseRow = Vec<(usize, Rational)>;

/// Row-sparse rational matrix: the input format of every elimination here.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Appends a row given as `(column, value)` pairs; zero values are dropped
    /// and repeated columns are summed.
    pub fn push(&mut self, mut row: SparseRow) {
        row.sort_by_key(|(c, _)| *c);
        let mut merged: SparseRow = Vec::with_capacity(row.len());
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range {}", self.cols);
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        self.rows.push(merged);
    }

    pub fn push_dense(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        );
    }

    pub fn from_dense_rows(cols: usize, rows: &[Vec<Rational>]) -> Self {
        let mut m = Self::new(cols);
        for r in rows {
            m.push_dense(r);
        }
        m
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                m.set(i, *c, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (c, v) in r {
                cols[*c].push((i, v.clone()));
            }
        }
        SparseMatrix {
            cols: self.rows.len(),
            rows: cols,
        }
    }

    fn reversed_columns(&self) -> SparseMatrix {
        let n = self.cols;
        SparseMatrix {
            cols: n,
            rows: self
                .rows
                .iter()
                .map(|r| {
                    let mut out: SparseRow =
                        r.iter().map(|(c, v)| (n - 1 - c, v.clone())).collect();
                    out.reverse();
                    out
                })
                .collect(),
        }
    }

    /// Exact product with a dense vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|(c, a)| a * &v[*c]).sum())
            .collect()
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row with the same span.
fn primitive_row(row: &SparseRow) -> IntRow {
    if row.is_empty() {
        return Vec::new();
    }
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut ints: IntRow = row
        .iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_one() {
        for (_, v) in ints.iter_mut() {
            *v /= &g;
        }
    }
    ints
}

/// Certified reduced row echelon form over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<Rational>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows
    }

    fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// One null vector per free column: 1 there, minus the echelon entries at
    /// the pivots.
    fn null_vectors(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}

/// Checks `M v = 0` over the integers for every candidate null vector.
fn annihilates(int_rows: &[IntRow], cols: usize, vectors: &[Vec<Rational>]) -> bool {
    let mut scaled = vec![BigInt::zero(); cols];
    for v in vectors {
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for (s, x) in scaled.iter_mut().zip(v) {
            *s = x.numer() * (&lcm / x.denom());
        }
        for row in int_rows {
            let mut acc = BigInt::zero();
            for (c, a) in row {
                if !scaled[*c].is_zero() {
                    acc += a * &scaled[*c];
                }
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

fn pivots_better(candidate: &[usize], current: &[usize]) -> bool {
    candidate.len() > current.len() || (candidate.len() == current.len() && candidate < current)
}

/// Reduced row echelon form of `m` over Q (multi-modular, verified).
pub fn echelon(m: &SparseMatrix) -> Echelon {
    let cols = m.ncols();
    let int_rows: Vec<IntRow> = m
        .rows()
        .iter()
        .map(primitive_row)
        .filter(|r| !r.is_empty())
        .collect();
    if int_rows.is_empty() || cols == 0 {
        return Echelon {
            cols,
            pivots: Vec::new(),
            rows: Vec::new(),
        };
    }

    struct Lift {
        pivots: Vec<usize>,
        free: Vec<usize>,
        crt: CrtAccumulator,
        probe_from: usize,
    }
    let mut lift: Option<Lift> = None;

    for i in 0..MAX_PRIMES {
        let p = prime(i);
        let image = echelon_mod(
            int_rows.iter().map(|r| {
                r.iter()
                    .map(|(c, v)| (*c, modular::reduce_int(v, p)))
                    .collect()
            }),
            cols,
            p,
        );
        if image.rank() == cols {
            // rank over Q is at least the rank mod p, so this is exact
            return Echelon {
                cols,
                pivots: (0..cols).collect(),
                rows: (0..cols)
                    .map(|r| {
                        (0..cols)
                            .map(|c| {
                                if r == c {
                                    Rational::one()
                                } else {
                                    Rational::zero()
                                }
                            })
                            .collect()
                    })
                    .collect(),
            };
        }
        let mut is_pivot = vec![false; cols];
        for &c in &image.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
        let residues: Vec<u64> = image
            .rows
            .iter()
            .flat_map(|row| free.iter().map(move |&f| row[f]))
            .collect();
        match &mut lift {
            Some(l) if l.pivots == image.pivots => l.crt.absorb(&residues, p),
            Some(l) if !pivots_better(&image.pivots, &l.pivots) => continue,
            _ => {
                lift = Some(Lift {
                    pivots: image.pivots.clone(),
                    free,
                    crt: CrtAccumulator::new(&residues, p),
                    probe_from: 0,
                })
            }
        }
        let l = lift.as_mut().expect("lift initialised above");
        let values = l.crt.values();
        let n = values.len();
        let mut recon: Vec<Option<Rational>> = vec![None; n];
        let mut ok = true;
        // probe the entry that failed last time first
        for k in (l.probe_from..n).chain(0..l.probe_from) {
            match rational_reconstruction(&values[k], l.crt.modulus()) {
                Some(r) => recon[k] = Some(r),
                None => {
                    l.probe_from = k;
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let nfree = l.free.len();
        let mut rows = Vec::with_capacity(l.pivots.len());
        for (r, &pc) in l.pivots.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols];
            row[pc] = Rational::one();
            for (j, &f) in l.free.iter().enumerate() {
                row[f] = recon[r * nfree + j].take().expect("reconstructed");
            }
            rows.push(row);
        }
        let candidate = Echelon {
            cols,
            pivots: l.pivots.clone(),
            rows,
        };
        if annihilates(&int_rows, cols, &candidate.null_vectors()) {
            return candidate;
        }
    }
    echelon_fraction_free(m)
}

/// Reduced row echelon form by fraction-free integer elimination.
///
/// Rows are kept primitive (content divided out after every update) and fully
/// reduced against each other. Independent of the modular route; used as the
/// fallback and as a test oracle.
pub fn echelon_fraction_free(m: &SparseMatrix) -> Echelon {
    let cols = m.ncols();
    let mut pivots: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for row in m.rows() {
        let mut v = vec![BigInt::zero(); cols];
        for (c, x) in primitive_row(row) {
            v[c] = x;
        }
        for (b, &pc) in basis.iter().zip(&pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let (pv, f) = (b[pc].clone(), v[pc].clone());
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x * &pv - &f * y;
            }
            make_primitive(&mut v);
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if v[lead].is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        for b in basis.iter_mut() {
            if b[lead].is_zero() {
                continue;
            }
            let (pv, f) = (v[lead].clone(), b[lead].clone());
            for (x, y) in b.iter_mut().zip(&v) {
                *x = &*x * &pv - &f * y;
            }
            make_primitive(b);
        }
        let at = pivots.partition_point(|&c| c < lead);
        pivots.insert(at, lead);
        basis.insert(at, v);
        if pivots.len() == cols {
            break;
        }
    }
    let rows = basis
        .into_iter()
        .zip(&pivots)
        .map(|(b, &pc)| {
            let d = b[pc].clone();
            b.into_iter().map(|x| Rational::new(x, d.clone())).collect()
        })
        .collect();
    Echelon { cols, pivots, rows }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x /= &g);
    }
}

/// Rank mod a single large prime: a lower bound for the rank over Q, and
/// equal to it for all but finitely many primes.
pub fn rank_lower_bound(m: &SparseMatrix) -> usize {
    let p = prime(0);
    let rows = m.rows().iter().map(|r| {
        primitive_row(r)
            .into_iter()
            .map(|(c, v)| (c, modular::reduce_int(&v, p)))
            .collect::<Vec<_>>()
    });
    echelon_mod(rows, m.ncols(), p).rank()
}

/// Exact rank over Q.
pub fn rank(m: &SparseMatrix) -> usize {
    let lower = rank_lower_bound(m);
    if lower == m.nrows().min(m.ncols()) {
        return lower;
    }
    // certify through whichever side has the smaller null space
    if m.ncols() <= m.nrows() {
        echelon(m).rank()
    } else {
        echelon(&m.transpose()).rank()
    }
}

/// Right null space of `m`, as a basis in reduced echelon form (each vector
/// starts with a 1 in a column where all the others vanish).
pub fn kernel(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let n = m.ncols();
    let rev = echelon(&m.reversed_columns());
    let mut is_pivot = vec![false; n];
    for &p in rev.pivots() {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in 0..n {
        let fr = n - 1 - f;
        if is_pivot[fr] {
            continue;
        }
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (row, &q) in rev.rows().iter().zip(rev.pivots()) {
            v[n - 1 - q] = -row[fr].clone();
        }
        out.push(v);
    }
    out
}

/// Column index where a vector in reduced echelon form has its leading 1.
pub fn leading_index(v: &[Rational]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// A linear subspace of `Q^ambient`, stored as its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { ambient, basis }
    }

    pub fn from_echelon(e: Echelon) -> Self {
        Self {
            ambient: e.ncols(),
            basis: e.into_rows(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Self::from_echelon(echelon(&SparseMatrix::from_dense_rows(
            ambient, vectors,
        ))))
    }

    pub fn span_sparse(m: &SparseMatrix) -> Self {
        Self::from_echelon(echelon(m))
    }

    /// Null space of the rows of `m`.
    pub fn kernel_of(m: &SparseMatrix) -> Self {
        Self {
            ambient: m.ncols(),
            basis: kernel(m),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    fn as_rows(&self) -> SparseMatrix {
        SparseMatrix::from_dense_rows(self.ambient, &self.basis)
    }

    /// Orthogonal complement for the standard bilinear form.
    pub fn complement(&self) -> Subspace {
        Self::kernel_of(&self.as_rows())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.complement().basis.iter().all(|w| {
            w.iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .sum::<Rational>()
                .is_zero()
        })
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        let perp = other.complement();
        self.basis.iter().all(|v| {
            perp.basis.iter().all(|w| {
                w.iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<Rational>()
                    .is_zero()
            })
        })
    }
}

fn check_ambient(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch {
            expected: a.ambient,
            found: b.ambient,
        });
    }
    Ok(())
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let mut rows = a.as_rows();
    for v in &b.basis {
        rows.push_dense(v);
    }
    Ok(Subspace::span_sparse(&rows))
}

/// `A ∩ B = (A^⊥ + B^⊥)^⊥`.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_ambient(a, b)?;
    let mut rows = a.complement().as_rows();
    for v in b.complement().basis {
        rows.push_dense(&v);
    }
    Ok(Subspace::kernel_of(&rows))
}
