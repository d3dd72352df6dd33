//! Word-size prime field arithmetic used as the fast path of exact elimination.
//!
//! Nothing computed here is trusted on its own: ranks mod p are lower bounds
//! for ranks over the rationals, and every echelon form reconstructed from
//! modular images is verified exactly before it is returned.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; bases 2, 7, 61 suffice below 2^32.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^31 in decreasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31)
        .rev()
        .filter(|&n| n % 2 == 1 && is_prime(n))
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn reduce_int(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Image of a rational mod p, or `None` if p divides the denominator.
pub fn reduce_rational(a: &Rational, p: u64) -> Option<u64> {
    let den = reduce_int(a.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mul_mod(reduce_int(a.numer(), p), inv_mod(den, p), p))
}

/// Reduced row echelon form over Z/p.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    pub prime: u64,
    pub cols: usize,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    /// Dense rows; row `i` has a 1 at `pivots[i]` and 0 at every other pivot.
    pub rows: Vec<Vec<u64>>,
}

impl ModEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Incremental RREF of a row stream mod `p`.
///
/// Rows arrive as sparse `(column, residue)` lists. Elimination stops early
/// once the rank reaches the number of columns.
pub fn echelon_mod<I>(rows: I, cols: usize, p: u64) -> ModEchelon
where
    I: IntoIterator<Item = Vec<(usize, u64)>>,
{
    let mut pivots: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut dense = vec![0u64; cols];
    for row in rows {
        if pivots.len() == cols {
            break;
        }
        dense.iter_mut().for_each(|x| *x = 0);
        let mut any = false;
        for (c, v) in row {
            if v != 0 {
                dense[c] = (dense[c] + v) % p;
                any = true;
            }
        }
        if !any {
            continue;
        }
        // pivot rows are zero on the other pivot columns, so the multipliers
        // are just the row's own entries at the pivots
        for (slot, &pc) in pivots.iter().enumerate() {
            let f = dense[pc];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            let prow = &basis[slot];
            for (d, &b) in dense.iter_mut().zip(prow) {
                if b != 0 {
                    *d = (*d + neg * b) % p;
                }
            }
        }
        let Some(lead) = dense.iter().position(|&x| x != 0) else {
            continue;
        };
        let inv = inv_mod(dense[lead], p);
        let new_row: Vec<u64> = dense
            .iter()
            .map(|&x| if x == 0 { 0 } else { mul_mod(x, inv, p) })
            .collect();
        for prow in basis.iter_mut() {
            let f = prow[lead];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for (d, &b) in prow.iter_mut().zip(&new_row) {
                if b != 0 {
                    *d = (*d + neg * b) % p;
                }
            }
        }
        let at = pivots.partition_point(|&c| c < lead);
        pivots.insert(at, lead);
        basis.insert(at, new_row);
    }
    ModEchelon {
        prime: p,
        cols,
        pivots,
        rows: basis,
    }
}

/// Chinese remaindering of a vector of residues, one modulus at a time.
#[derive(Clone, Debug)]
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(residues: &[u64], p: u64) -> Self {
        Self {
            modulus: BigInt::from(p),
            values: residues.iter().map(|&r| BigInt::from(r)).collect(),
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn absorb(&mut self, residues: &[u64], p: u64) {
        assert_eq!(residues.len(), self.values.len());
        let m_mod_p = reduce_int(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = reduce_int(v, p);
            let delta = (r + p - cur) % p;
            if delta != 0 {
                let t = mul_mod(delta, m_inv, p);
                *v += &self.modulus * BigInt::from(t);
            }
        }
        self.modulus *= BigInt::from(p);
    }
}

/// Wang's rational reconstruction: the unique `a/b` with `|a|, b <= sqrt(m/2)`
/// congruent to `u` mod `m`, if one exists.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let u = u.mod_floor(m);
    if u.is_zero() {
        return Some(Rational::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        r1 = -r1;
        t1 = -t1;
    }
    Some(Rational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_stream() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps, [2147483647, 2147483629, 2147483587]);
    }

    #[test]
    fn reconstruct_small_fractions() {
        let ps: Vec<u64> = primes().take(3).collect();
        let target = Rational::new(BigInt::from(-123456789), BigInt::from(987654321));
        let res: Vec<u64> = ps
            .iter()
            .map(|&p| reduce_rational(&target, p).unwrap())
            .collect();
        let mut acc = CrtAccumulator::new(&res[..1], ps[0]);
        assert_ne!(
            rational_reconstruction(&acc.values()[0], acc.modulus()),
            Some(target.clone())
        );
        acc.absorb(&res[1..2], ps[1]);
        acc.absorb(&res[2..3], ps[2]);
        assert_eq!(
            rational_reconstruction(&acc.values()[0], acc.modulus()),
            Some(target)
        );
    }

    #[test]
    fn echelon_of_small_matrix() {
        let p = 101;
        // [1 1 0; 2 2 0; 0 1 1]
        let rows = vec![
            vec![(0, 1), (1, 1)],
            vec![(0, 2), (1, 2)],
            vec![(1, 1), (2, 1)],
        ];
        let e = echelon_mod(rows, 3, p);
        assert_eq!(e.pivots, [0, 1]);
        assert_eq!(e.rows, vec![vec![1, 0, 100], vec![0, 1, 1]]);
    }
}
