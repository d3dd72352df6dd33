use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{count_monomials, monomial_basis, variable_name, Monomial};
use super::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `Some(d)` if every term has degree `d`, `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let d = first.degree();
        if it.all(|m| m.degree() == d) {
            Ok(Some(d))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coordinates in [`monomial_basis`]`(nvars, d)`.
    pub fn to_coeff_vector(&self, d: u32) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); count_monomials(self.nvars, d)];
        for (m, c) in &self.terms {
            if m.degree() != d {
                return Err(Error::NotHomogeneous { expected: d });
            }
            v[m.index()] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coeff_vector(nvars: usize, d: u32, coeffs: &[Rational]) -> Result<Polynomial> {
        let basis = monomial_basis(nvars, d);
        if basis.len() != coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: coeffs.len(),
            });
        }
        let mut p = Polynomial::zero(nvars);
        for (m, c) in basis.into_iter().zip(coeffs) {
            p.add_term(m, c.clone());
        }
        Ok(p)
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(
                Monomial::new(exps),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// If `self = c * other` for a rational constant `c`, return `c`.
    pub fn constant_ratio(&self, other: &Polynomial) -> Option<Rational> {
        let (m, b) = other.leading_term()?;
        let c = self.coefficient(m) / b;
        if &other.scale(&c) == self {
            Some(c)
        } else {
            None
        }
    }

    /// Substitutes rational values for every variable.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        acc
    }
}

/// `(c_1 x_1 + ... + c_n x_n)^e`, expanded with the multinomial theorem.
pub fn linear_form_power(coeffs: &[Rational], e: u32) -> Polynomial {
    let n = coeffs.len();
    let mut factorial = vec![BigInt::one()];
    for i in 1..=e {
        let next = &factorial[i as usize - 1] * BigInt::from(i);
        factorial.push(next);
    }
    let mut p = Polynomial::zero(n);
    for m in monomial_basis(n, e) {
        let mut c = Rational::from_integer(factorial[e as usize].clone());
        for (a, &k) in coeffs.iter().zip(m.exponents()) {
            if k == 0 {
                continue;
            }
            if a.is_zero() {
                c = Rational::zero();
                break;
            }
            c /= Rational::from_integer(factorial[k as usize].clone());
            c *= num_traits::pow(a.clone(), k as usize);
        }
        p.add_term(m, c);
    }
    p
}

/// Integer-coefficient convenience wrapper around [`linear_form_power`].
pub fn linear_form_power_int(coeffs: &[i64], e: u32) -> Polynomial {
    let c: Vec<Rational> = coeffs
        .iter()
        .map(|&a| Rational::from_integer(a.into()))
        .collect();
    linear_form_power(&c, e)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_const = m.degree() == 0;
            if abs.is_one() && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses expressions like `x^2 + 2*x*y - 1/3*z^2`, for tests and the CLI.
pub fn parse_polynomial(nvars: usize, s: &str) -> Result<Polynomial> {
    let mut p = Polynomial::zero(nvars);
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() || cleaned == "0" {
        return Ok(p);
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in cleaned.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (-Rational::one(), rest.to_string()),
            None => (Rational::one(), t.trim_start_matches('+').to_string()),
        };
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(Error::Malformed(format!("empty factor in {s:?}")));
            }
            if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let r: Rational = factor
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad coefficient {factor:?}")))?;
                coeff *= r;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| Error::Malformed(format!("bad exponent {e:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx = (0..nvars)
                .find(|&i| variable_name(nvars, i) == name)
                .ok_or_else(|| Error::Malformed(format!("unknown variable {name:?}")))?;
            exps[idx] += e;
        }
        p.add_term(Monomial::new(exps), coeff);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(3, s).unwrap()
    }

    #[test]
    fn binomial_expansion() {
        assert_eq!(linear_form_power_int(&[1, 1, 0], 2), q("x^2 + 2*x*y + y^2"));
        assert_eq!(linear_form_power_int(&[1, 0, 0], 5), q("x^5"));
        let cube = linear_form_power_int(&[1, 1, 1], 3);
        assert_eq!(
            cube.coefficient(&Monomial::new(vec![1, 1, 1])),
            Rational::from_integer(6.into())
        );
        assert_eq!(cube.num_terms(), 10);
    }

    #[test]
    fn products() {
        assert_eq!(&q("x + y") * &q("x - y"), q("x^2 - y^2"));
        let p = q("3*x*z - 1/2*y^2");
        assert_eq!(&p * &Polynomial::one(3), p);
        let sq = linear_form_power_int(&[1, 1, 0], 2);
        assert_eq!(&sq * &q("x + y"), linear_form_power_int(&[1, 1, 0], 3));
    }

    #[test]
    fn coefficient_vectors() {
        let p = q("x^2 + 2*x*y + y^2");
        let v = p.to_coeff_vector(2).unwrap();
        let ints: Vec<i64> = v
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(ints, [1, 2, 0, 1, 0, 0]);
        assert!(Polynomial::zero(3)
            .to_coeff_vector(4)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        assert_eq!(Polynomial::from_coeff_vector(3, 2, &v).unwrap(), p);
        assert!(matches!(
            p.to_coeff_vector(3),
            Err(Error::NotHomogeneous { expected: 3 })
        ));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(q("x*y - z^2").homogeneous_degree().unwrap(), Some(2));
        assert_eq!(Polynomial::zero(3).homogeneous_degree().unwrap(), None);
        assert!(q("x + y^2").homogeneous_degree().is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = q("-1/2*x^3 + 4*x*y*z - z^3 + 7");
        assert_eq!(parse_polynomial(3, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn ratio() {
        let p = q("x^2 - y^2");
        assert_eq!(
            p.scale(&Rational::new(3.into(), 2.into()))
                .constant_ratio(&p),
            Some(Rational::new(3.into(), 2.into()))
        );
        assert_eq!(q("x^2 + y^2").constant_ratio(&p), None);
    }
}
