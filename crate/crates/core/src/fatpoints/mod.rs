//! Fat points in the plane and the inverse-system translation from ideals
//! generated by powers of linear forms.
//!
//! `HF(R/<L_1^{t_1}, ..., L_s^{t_s}>, j)` equals the dimension of the degree
//! `j` forms vanishing to order `j - t_i + 1` at the points `p_i` whose
//! coordinates are the coefficients of `L_i`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{GradedIdeal, PhiParams};
use crate::polycore::{
    count_monomials, linear_form_power, monomial_basis, rank, rat, Rational, SparseMatrix,
};

/// A point of `P^2` with its first nonzero coordinate scaled to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointP2 {
    coords: [Rational; 3],
}

impl PointP2 {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Malformed("the zero vector is not a point".into()))?;
        Ok(PointP2 {
            coords: coords.map(|c| c / &lead),
        })
    }

    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(rat))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.coords
    }

    /// The linear form `p_1 x + p_2 y + p_3 z`.
    pub fn linear_form_power(&self, e: u32) -> crate::polycore::Polynomial {
        linear_form_power(&self.coords, e)
    }
}

impl fmt::Display for PointP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}:{}:{}]",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// `[1:0:0], [0:1:0], [0:0:1], [1:1:0], [1:0:1], [0:1:1], [1:1:1]`.
pub fn standard_points() -> [PointP2; 7] {
    [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
    ]
    .map(|c| PointP2::from_ints(c).expect("nonzero"))
}

/// Distinct points with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatpointScheme {
    points: Vec<(PointP2, u32)>,
}

impl FatpointScheme {
    pub fn new(points: Vec<(PointP2, u32)>) -> Result<Self> {
        for (i, (p, m)) in points.iter().enumerate() {
            if *m == 0 {
                return Err(Error::Malformed(format!("point {p} has multiplicity 0")));
            }
            if points[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::Malformed(format!("point {p} repeated")));
            }
        }
        Ok(FatpointScheme { points })
    }

    pub fn empty() -> Self {
        FatpointScheme { points: Vec::new() }
    }

    pub fn points(&self) -> &[(PointP2, u32)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.points.iter().map(|(_, m)| *m).collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: SchemeJson = serde_json::from_str(s)?;
        raw.try_into()
    }

    pub fn to_json(&self) -> Result<String> {
        let raw = SchemeJson {
            points: self
                .points
                .iter()
                .map(|(p, m)| {
                    let coords = integer_coords(p).ok_or_else(|| {
                        Error::Malformed(format!("{p} has no small integer coordinates"))
                    })?;
                    Ok(PointJson {
                        point: coords,
                        multiplicity: *m,
                    })
                })
                .collect::<Result<_>>()?,
        };
        Ok(serde_json::to_string(&raw)?)
    }
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    point: [i64; 3],
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
struct SchemeJson {
    points: Vec<PointJson>,
}

impl TryFrom<SchemeJson> for FatpointScheme {
    type Error = Error;

    fn try_from(raw: SchemeJson) -> Result<Self> {
        let points = raw
            .points
            .into_iter()
            .map(|p| Ok((PointP2::from_ints(p.point)?, p.multiplicity)))
            .collect::<Result<_>>()?;
        FatpointScheme::new(points)
    }
}

fn integer_coords(p: &PointP2) -> Option<[i64; 3]> {
    let lcm = p.coords.iter().fold(num_bigint::BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let mut out = [0i64; 3];
    for (o, c) in out.iter_mut().zip(&p.coords) {
        let v = (c * Rational::from_integer(lcm.clone())).to_integer();
        *o = i64::try_from(v).ok()?;
    }
    Some(out)
}

/// Rows expressing that every order-`e` partial derivative of a degree `j`
/// form vanishes at `p`, in the coordinates of `monomial_basis(3, j)`.
fn derivative_conditions(p: &PointP2, e: u32, j: u32, out: &mut SparseMatrix) {
    let basis = monomial_basis(3, j);
    let powers: Vec<Vec<Rational>> = p
        .coords
        .iter()
        .map(|c| {
            let mut v = vec![Rational::one()];
            for i in 0..j as usize {
                v.push(&v[i] * c);
            }
            v
        })
        .collect();
    for beta in monomial_basis(3, e) {
        let mut row = Vec::new();
        for (col, alpha) in basis.iter().enumerate() {
            let Some(rest) = beta.quotient_of(alpha) else {
                continue;
            };
            let mut value = Rational::one();
            for ((&a, &r), pw) in alpha.exponents().iter().zip(rest.exponents()).zip(&powers) {
                value *= falling_factorial(a, a - r) * &pw[r as usize];
            }
            if !value.is_zero() {
                row.push((col, value));
            }
        }
        out.push(row);
    }
}

fn falling_factorial(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * rat(i64::from(n - i)))
}

/// Dimension of the degree `j` forms vanishing to order `m_i` at each point.
///
/// For a form of degree `j`, the order `e` partials vanishing at a point
/// forces every lower order partial to vanish there as well (Euler), so only
/// the derivatives of order exactly `min(m_i - 1, j)` are imposed.
pub fn fatpoint_dimension(s: &FatpointScheme, j: u32) -> usize {
    let width = count_monomials(3, j);
    let mut conditions = SparseMatrix::new(width);
    for (p, m) in &s.points {
        derivative_conditions(p, (m - 1).min(j), j, &mut conditions);
    }
    width - rank(&conditions)
}

/// `max(0, dim R_j - sum C(m_i + 1, 2))`, a lower bound for
/// [`fatpoint_dimension`].
pub fn expected_dimension(s: &FatpointScheme, j: u32) -> usize {
    let imposed: usize = s
        .points
        .iter()
        .map(|(_, m)| count_monomials(3, m - 1))
        .sum();
    count_monomials(3, j).saturating_sub(imposed)
}

/// Powers `L_i^{t_i}` of pairwise non-proportional linear forms, each form
/// recorded as the point of its coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersConfig {
    forms: Vec<(PointP2, u32)>,
}

impl PowersConfig {
    pub fn new(forms: Vec<(PointP2, u32)>) -> Result<Self> {
        for (i, (p, t)) in forms.iter().enumerate() {
            if *t == 0 {
                return Err(Error::Malformed(format!("form {p} has exponent 0")));
            }
            if forms[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::Malformed(format!("form {p} repeated")));
            }
        }
        Ok(PowersConfig { forms })
    }

    /// Generators `gens` of `J_phi`, in the order
    /// `x, y, z, x+y, x+z, y+z, x+y+z`.
    pub fn from_j_phi(p: &PhiParams, gens: &[usize]) -> Result<Self> {
        if p.n != 3 {
            return Err(Error::InvalidParams(format!(
                "powers configurations need n = 3, got {}",
                p.n
            )));
        }
        let (a, b, c) = (p.l + 2 * p.k, 2 * p.l + 2 * p.k, 3 * p.l);
        let exps = [a, a, a, b, b, b, c];
        let pts = standard_points();
        let forms = gens
            .iter()
            .map(|&g| {
                pts.get(g)
                    .map(|pt| (pt.clone(), exps[g]))
                    .ok_or_else(|| Error::Malformed(format!("generator index {g} out of range")))
            })
            .collect::<Result<_>>()?;
        Self::new(forms)
    }

    pub fn forms(&self) -> &[(PointP2, u32)] {
        &self.forms
    }

    pub fn ideal(&self) -> GradedIdeal {
        let gens = self
            .forms
            .iter()
            .map(|(p, t)| p.linear_form_power(*t))
            .collect();
        GradedIdeal::new(3, gens).expect("powers of nonzero forms are homogeneous")
    }
}

/// Point `p_i` with multiplicity `j - t_i + 1`; forms with `t_i > j` impose
/// nothing in degree `j` and are dropped.
pub fn powers_to_fatpoints(c: &PowersConfig, j: u32) -> FatpointScheme {
    let points = c
        .forms
        .iter()
        .filter(|(_, t)| *t <= j)
        .map(|(p, t)| (p.clone(), j - t + 1))
        .collect();
    FatpointScheme { points }
}

/// `HF(R/<L_i^{t_i}>, j)` through the fat point dual.
pub fn hf_via_inverse_system(c: &PowersConfig, j: u32) -> usize {
    fatpoint_dimension(&powers_to_fatpoints(c, j), j)
}
