//! Sweep orchestration and the commands behind the `psbetti` binary.

mod checks;
mod config;
mod input;
mod report;

pub use checks::{expected_numerator, inverse_system_configs, run_point, sum_formula_record};
pub use config::{boundary_points, parse_checks, parse_range, Check, Format, SweepConfig};
pub use input::parse_ideal_spec;
pub use report::{
    CheckRecord, InverseSystemRow, MonomialBetti, PointDetails, PointReport, Status, SurfaceRow,
    SyzygyDetails, VerificationReport, SCHEMA_VERSION,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{betti_koszul, betti_linear_algebra, BettiTable};
use crate::error::{Error, Result};
use crate::fatpoints::{fatpoint_dimension, FatpointScheme};
use crate::ideals::{GradedIdeal, PhiParams};
use crate::surface::{
    ghm_h0_with, listed_neg_curves, DivisorClass, LinkedConfiguration, SubtractionMode,
    ZariskiResult,
};
use crate::syzygy::{build_syzygies, SyzygyExport};

/// Runs every selected check at every point. Points are processed in
/// parallel and reported in sorted `(l, k)` order.
pub fn cmd_verify(cfg: &SweepConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let points = cfg.points();
    let run = || {
        points
            .par_iter()
            .map(|&(l, k)| run_point(cfg, l, k))
            .collect::<Result<Vec<_>>>()
    };
    let reports = match cfg.parallelism {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParams(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(VerificationReport::new(cfg.clone(), reports))
}

/// Serializes the report in the configured format.
pub fn render_report(report: &VerificationReport) -> Result<String> {
    match report.config.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    /// `(d, HF(R/I, d))`.
    pub values: Vec<(u32, u64)>,
}

impl std::fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (d, v) in &self.values {
            writeln!(f, "{d}\t{v}")?;
        }
        Ok(())
    }
}

/// `HF(R/I, d)` for `d <= dmax`; without `dmax`, up to one past the socle
/// degree of an Artinian quotient.
pub fn cmd_hilbert(ideal: &GradedIdeal, dmax: Option<u32>) -> Result<HilbertTable> {
    let values = match dmax {
        Some(d) => (0..=d)
            .map(|t| (t, ideal.hilbert_function(t) as u64))
            .collect(),
        None => {
            let data = ideal.hilbert_data()?;
            let top = data.socle_degree.map_or(0, |s| s + 1);
            (0..=top).map(|t| (t, data.value(t))).collect()
        }
    };
    Ok(HilbertTable { values })
}

/// Betti table of `R/I` by Koszul homology; `dmax` bounds the internal
/// degrees and is required for non-Artinian quotients.
pub fn cmd_betti(ideal: &GradedIdeal, dmax: Option<u32>) -> Result<BettiTable> {
    match dmax {
        Some(d) => betti_linear_algebra(ideal, d),
        None => betti_koszul(ideal),
    }
}

/// `h^0` of `divisor` (or of the configuration's own divisor at `(l, k)`)
/// against the configuration's negative curves.
pub fn cmd_h0(
    config: LinkedConfiguration,
    divisor: Option<DivisorClass>,
    lk: Option<(u32, u32)>,
    mode: SubtractionMode,
) -> Result<ZariskiResult> {
    let d = match (divisor, lk) {
        (Some(d), _) => d,
        (None, Some((l, k))) => config.divisor(&PhiParams::n3(l, k)?)?,
        (None, None) => return Err(Error::InvalidParams("need a divisor or l and k".into())),
    };
    ghm_h0_with(&d, &listed_neg_curves(config), mode)
}

pub fn cmd_syzygies(l: u32, k: u32) -> Result<SyzygyExport> {
    Ok(build_syzygies(&PhiParams::n3(l, k)?)?.export())
}

pub fn cmd_fatpoint_dim(scheme: &FatpointScheme, j: u32) -> usize {
    fatpoint_dimension(scheme, j)
}
