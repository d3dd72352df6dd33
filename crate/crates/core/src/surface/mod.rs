//! Divisor classes on the blowup `X` of `P^2` at `m` points and `h^0` through
//! repeated subtraction of negative curves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fatpoints::{powers_to_fatpoints, FatpointScheme, PowersConfig};
use crate::ideals::PhiParams;

/// Coordinates `(d_0; d_1, ..., d_m)` on the basis `E_0, E_1, ..., E_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass {
    coeffs: Vec<i64>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Malformed(
                "a divisor class needs the E_0 coordinate".into(),
            ));
        }
        Ok(DivisorClass { coeffs })
    }

    pub fn zero(m: usize) -> Self {
        DivisorClass {
            coeffs: vec![0; m + 1],
        }
    }

    /// `E_0` (`i = 0`) or the exceptional class `E_i`.
    pub fn basis(m: usize, i: usize) -> Self {
        let mut d = Self::zero(m);
        d.coeffs[i] = 1;
        d
    }

    /// `E_0 - sum_{i in points} E_i`, with 1-based point positions.
    pub fn line_through(m: usize, points: &[usize]) -> Self {
        Self::curve(m, 1, points)
    }

    /// `d E_0 - sum_{i in points} E_i`.
    pub fn curve(m: usize, d: i64, points: &[usize]) -> Self {
        let mut c = Self::zero(m);
        c.coeffs[0] = d;
        for &p in points {
            c.coeffs[p] -= 1;
        }
        c
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::new(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.coeffs).expect("integer vectors serialize")
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of blown-up points.
    pub fn num_points(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn self_intersection(&self) -> i64 {
        intersect(self, self).expect("same length")
    }

    fn add_scaled(&self, other: &DivisorClass, t: i64) -> DivisorClass {
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + t * b)
                .collect(),
        }
    }

    /// Sum of the absolute values of the coordinates.
    pub fn l1_norm(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rest: Vec<String> = self.coeffs[1..].iter().map(|c| c.to_string()).collect();
        write!(f, "({}; {})", self.coeffs[0], rest.join(", "))
    }
}

/// `d_0 c_0 - sum_{i >= 1} d_i c_i`.
pub fn intersect(d: &DivisorClass, c: &DivisorClass) -> Result<i64> {
    if d.coeffs.len() != c.coeffs.len() {
        return Err(Error::DimensionMismatch {
            expected: d.coeffs.len(),
            found: c.coeffs.len(),
        });
    }
    let tail: i64 = d.coeffs[1..]
        .iter()
        .zip(&c.coeffs[1..])
        .map(|(a, b)| a * b)
        .sum();
    Ok(d.coeffs[0] * c.coeffs[0] - tail)
}

fn check_points(m: usize) -> Result<()> {
    if (1..=8).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "surfaces are blown up at 1..=8 points, got {m}"
        )))
    }
}

/// `K_X = -3 E_0 + sum E_i`.
pub fn canonical(m: usize) -> Result<DivisorClass> {
    check_points(m)?;
    let mut coeffs = vec![1; m + 1];
    coeffs[0] = -3;
    Ok(DivisorClass { coeffs })
}

/// `A_m = (m - 2) E_0 - K_X = (m + 1) E_0 - sum E_i`.
pub fn a_class(m: usize) -> Result<DivisorClass> {
    check_points(m)?;
    let mut coeffs = vec![-1; m + 1];
    coeffs[0] = m as i64 + 1;
    Ok(DivisorClass { coeffs })
}

/// `j E_0 - sum a_i E_i`.
pub fn divisor_for_fatpoints(j: u32, multiplicities: &[u32]) -> DivisorClass {
    let mut coeffs = Vec::with_capacity(multiplicities.len() + 1);
    coeffs.push(i64::from(j));
    coeffs.extend(multiplicities.iter().map(|&a| -i64::from(a)));
    DivisorClass { coeffs }
}

/// Classes of negative self-intersection, tried in list order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegCurveSet {
    classes: Vec<DivisorClass>,
}

impl NegCurveSet {
    pub fn new(classes: Vec<DivisorClass>) -> Result<Self> {
        let Some(first) = classes.first() else {
            return Err(Error::Malformed("empty negative curve set".into()));
        };
        let m = first.num_points();
        for c in &classes {
            if c.num_points() != m {
                return Err(Error::DimensionMismatch {
                    expected: m + 1,
                    found: c.coeffs.len(),
                });
            }
            if c.self_intersection() >= 0 {
                return Err(Error::Malformed(format!(
                    "{c} has nonnegative self-intersection"
                )));
            }
        }
        Ok(NegCurveSet { classes })
    }

    /// `curves` followed by the exceptional classes not already listed.
    pub fn with_exceptionals(m: usize, curves: Vec<DivisorClass>) -> Result<Self> {
        let mut classes = curves;
        for i in 1..=m {
            let e = DivisorClass::basis(m, i);
            if !classes.contains(&e) {
                classes.push(e);
            }
        }
        Self::new(classes)
    }

    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn num_points(&self) -> usize {
        self.classes[0].num_points()
    }
}

/// The three point configurations used for the linkage ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkedConfiguration {
    /// `P_2, P_3, P_4, P_5`.
    L1,
    /// `P_1, ..., P_5`.
    L2,
    /// `P_2, ..., P_7`.
    L3,
}

impl FromStr for LinkedConfiguration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "L1" => Ok(Self::L1),
            "L2" => Ok(Self::L2),
            "L3" => Ok(Self::L3),
            _ => Err(Error::UnknownConfig(s.to_string())),
        }
    }
}

impl fmt::Display for LinkedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::L1 => "L1",
            Self::L2 => "L2",
            Self::L3 => "L3",
        };
        f.write_str(name)
    }
}

impl LinkedConfiguration {
    pub const ALL: [LinkedConfiguration; 3] = [Self::L1, Self::L2, Self::L3];

    /// Labels `i` of the standard points `P_i` that get blown up, in order.
    pub fn point_labels(self) -> &'static [usize] {
        match self {
            Self::L1 => &[2, 3, 4, 5],
            Self::L2 => &[1, 2, 3, 4, 5],
            Self::L3 => &[2, 3, 4, 5, 6, 7],
        }
    }

    /// Positions among the `J_phi` generators (`x, y, z, x+y, x+z, y+z,
    /// x+y+z`) of the forms whose powers generate the ideal.
    pub fn generators(self) -> Vec<usize> {
        self.point_labels().iter().map(|i| i - 1).collect()
    }

    pub fn num_points(self) -> usize {
        self.point_labels().len()
    }

    /// Point labels of each listed line.
    fn curves(self) -> &'static [&'static [usize]] {
        match self {
            Self::L1 => &[&[2, 3], &[2, 4], &[2, 5], &[3, 4], &[3, 5], &[4, 5]],
            Self::L2 => &[&[1, 3, 5], &[1, 2, 4], &[2, 3], &[2, 5], &[3, 4], &[4, 5]],
            Self::L3 => &[
                &[2, 5, 7],
                &[3, 4, 7],
                &[2, 3, 6],
                &[4, 5],
                &[4, 6],
                &[5, 6],
                &[2, 4],
                &[3, 5],
                &[6, 7],
            ],
        }
    }

    /// Blown-up position (1-based) of the standard point `P_label`.
    fn position(self, label: usize) -> usize {
        1 + self
            .point_labels()
            .iter()
            .position(|&p| p == label)
            .expect("label belongs to the configuration")
    }

    /// The lines listed for this configuration, without the exceptional classes.
    pub fn lines(self) -> Vec<DivisorClass> {
        let m = self.num_points();
        self.curves()
            .iter()
            .map(|labels| {
                let pos: Vec<usize> = labels.iter().map(|&l| self.position(l)).collect();
                DivisorClass::line_through(m, &pos)
            })
            .collect()
    }

    pub fn powers_config(self, p: &PhiParams) -> Result<PowersConfig> {
        PowersConfig::from_j_phi(p, &self.generators())
    }

    /// The fat point scheme dual to the powers ideal in degree `3l + 3k - 1`.
    pub fn scheme(self, p: &PhiParams) -> Result<FatpointScheme> {
        Ok(powers_to_fatpoints(
            &self.powers_config(p)?,
            linkage_degree(p),
        ))
    }

    /// `D_1`, `D_2` or `D_3`: `(3l+3k-1) E_0 - sum a_i E_i` with one
    /// coordinate per blown-up point, zeros included.
    pub fn divisor(self, p: &PhiParams) -> Result<DivisorClass> {
        let j = linkage_degree(p);
        let config = self.powers_config(p)?;
        let mults: Vec<u32> = config
            .forms()
            .iter()
            .map(|(_, t)| (j + 1).saturating_sub(*t))
            .collect();
        Ok(divisor_for_fatpoints(j, &mults))
    }

    pub fn proposition_h0(self, l: u32, k: u32) -> i64 {
        match self {
            Self::L1 => proposition_d1(l, k),
            Self::L2 => proposition_d2(l, k),
            Self::L3 => proposition_d3(l, k),
        }
    }
}

/// `3l + 3k - 1`.
pub fn linkage_degree(p: &PhiParams) -> u32 {
    3 * p.l + 3 * p.k - 1
}

/// The listed lines for `config` followed by `E_1, ..., E_m`.
pub fn listed_neg_curves(config: LinkedConfiguration) -> NegCurveSet {
    NegCurveSet::with_exceptionals(config.num_points(), config.lines())
        .expect("listed classes are negative")
}

/// Outcome of the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZariskiResult {
    pub effective: bool,
    /// Nef part when effective; the class reached when `H . A_m < 0` otherwise.
    pub h: DivisorClass,
    pub n: DivisorClass,
    pub h0: u64,
    /// Number of subtraction steps taken.
    pub steps: u64,
}

/// How many copies of a violating curve to subtract per step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubtractionMode {
    /// One copy.
    #[default]
    Single,
    /// `ceil(q / -C^2)` copies when `H . C = -q`.
    Batched,
}

/// `10 (|d_0| + sum |d_i|) + 100`.
pub fn iteration_cap(d: &DivisorClass) -> u64 {
    10 * d.l1_norm().unsigned_abs() + 100
}

pub fn ghm_h0(d: &DivisorClass, neg: &NegCurveSet) -> Result<ZariskiResult> {
    ghm_h0_with(d, neg, SubtractionMode::Single)
}

/// Subtracts the first listed curve meeting `H` negatively until either
/// `H . A_m < 0` (not effective) or `H` meets every listed curve
/// nonnegatively, in which case `h^0 = (H^2 - H . K) / 2 + 1`.
pub fn ghm_h0_with(
    d: &DivisorClass,
    neg: &NegCurveSet,
    mode: SubtractionMode,
) -> Result<ZariskiResult> {
    let m = d.num_points();
    if neg.num_points() != m {
        return Err(Error::DimensionMismatch {
            expected: m + 1,
            found: neg.num_points() + 1,
        });
    }
    let a = a_class(m)?;
    let k = canonical(m)?;
    let cap = iteration_cap(d);
    let mut h = d.clone();
    let mut n = DivisorClass::zero(m);
    let mut steps = 0u64;
    loop {
        if intersect(&h, &a)? < 0 {
            return Ok(ZariskiResult {
                effective: false,
                h,
                n,
                h0: 0,
                steps,
            });
        }
        let violator = neg.classes.iter().find_map(|c| {
            let q = intersect(&h, c).expect("same length");
            (q < 0).then_some((c, -q))
        });
        let Some((c, q)) = violator else {
            let twice = h.self_intersection() - intersect(&h, &k)?;
            let h0 = u64::try_from(twice / 2 + 1)
                .map_err(|_| Error::Malformed(format!("negative h0 for nef {h}")))?;
            return Ok(ZariskiResult {
                effective: true,
                h,
                n,
                h0,
                steps,
            });
        };
        let times = match mode {
            SubtractionMode::Single => 1,
            SubtractionMode::Batched => {
                let s = -c.self_intersection();
                (q + s - 1) / s
            }
        };
        h = h.add_scaled(c, -times);
        n = n.add_scaled(c, times);
        steps += 1;
        if steps > cap {
            return Err(Error::IterationCap { cap });
        }
    }
}

/// `3k^2 + 2lk - l - k` for `l >= k - 1`, else `(-l^2 + 6lk + 5k^2 - 3l - k) / 2`.
pub fn proposition_d1(l: u32, k: u32) -> i64 {
    let (l, k) = (i64::from(l), i64::from(k));
    if l >= k - 1 {
        3 * k * k + 2 * l * k - l - k
    } else {
        (-l * l + 6 * l * k + 5 * k * k - 3 * l - k) / 2
    }
}

/// `(5k^2 - 3k) / 2` for `l >= k - 1`, else `(-l^2 + 2lk + 4k^2 - l - 2k) / 2`.
pub fn proposition_d2(l: u32, k: u32) -> i64 {
    let (l, k) = (i64::from(l), i64::from(k));
    if l >= k - 1 {
        (5 * k * k - 3 * k) / 2
    } else {
        (-l * l + 2 * l * k + 4 * k * k - l - 2 * k) / 2
    }
}

/// `(-k^2 - k) / 2 + l (2k - 1)` for `2l >= k + 1`, else `2l^2 - 2l`; with the
/// special values `0` at `l = 1` and `l - 1` at `k = 1, l >= 2`.
pub fn proposition_d3(l: u32, k: u32) -> i64 {
    if l == 1 {
        return 0;
    }
    if k == 1 {
        return i64::from(l) - 1;
    }
    let (l, k) = (i64::from(l), i64::from(k));
    if 2 * l > k {
        (-k * k - k) / 2 + l * (2 * k - 1)
    } else {
        2 * l * l - 2 * l
    }
}
