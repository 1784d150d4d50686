//! Frequency sweeps, local refinement around shell resonances and spectral
//! feature extraction.

use std::f64::consts::PI;

use bitflags::bitflags;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::Point2;
use crate::mst::{solve_frequency, FrequencyResult, Problem, SolverError, TruncationOrder};
use crate::scatterer::ScattererModel;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("invalid frequency grid: {0}")]
    Grid(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("solve failed at {frequency_hz} Hz: {source}")]
    Solve {
        frequency_hz: f64,
        source: SolverError,
    },
    #[error("window [{min}, {max}] Hz contains no spectrum points")]
    EmptyWindow { min: f64, max: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrequencyGrid {
    pub min: f64,
    pub max: f64,
    #[serde(default = "default_count")]
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

fn default_count() -> usize {
    512
}

impl FrequencyGrid {
    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        Self {
            min,
            max,
            count,
            spacing: Spacing::Linear,
        }
    }

    pub fn violations(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !(self.min.is_finite() && self.min > 0.0) {
            issues.push(format!("min must be positive (got {})", self.min));
        }
        if !(self.max.is_finite() && self.max > self.min) {
            issues.push(format!("max must exceed min (got {} <= {})", self.max, self.min));
        }
        if self.count < 2 {
            issues.push(format!("count must be at least 2 (got {})", self.count));
        }
        issues
    }

    pub fn frequencies(&self) -> Result<Vec<f64>, SweepError> {
        let issues = self.violations();
        if !issues.is_empty() {
            return Err(SweepError::Grid(issues.join("; ")));
        }
        let last = (self.count - 1) as f64;
        Ok((0..self.count)
            .map(|i| {
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.min + t * (self.max - self.min),
                    Spacing::Log => self.min * (self.max / self.min).powf(t),
                }
            })
            .map(|f| f.clamp(self.min, self.max))
            .collect())
    }
}

bitflags! {
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct EntryFlags: u8 {
        /// A shell factor was evaluated next to a resonance of its formula.
        const NEAR_SINGULAR = 1;
        /// Inserted by resonance refinement, not part of the base grid.
        const REFINED = 1 << 1;
        /// Total field underflowed; the IL value is a ceiling.
        const DEEP_NULL = 1 << 2;
        /// A reflection coefficient has modulus above one.
        const Q_ANOMALY = 1 << 3;
        /// The solve failed; see `error`.
        const SOLVER_ERROR = 1 << 4;
    }
}

impl EntryFlags {
    /// `|`-joined flag names, `-` when empty.
    pub fn label(self) -> String {
        if self.is_empty() {
            return "-".into();
        }
        self.iter_names()
            .map(|(name, _)| name.to_ascii_lowercase())
            .collect::<Vec<_>>()
            .join("|")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub frequency_hz: f64,
    /// NaN when the solve failed.
    pub il_db: f64,
    pub p_total: Complex64,
    pub p_reference: Complex64,
    pub flags: EntryFlags,
    pub error: Option<String>,
}

impl SpectrumEntry {
    fn from_result(result: Result<FrequencyResult, SolverError>, frequency_hz: f64) -> Self {
        match result {
            Ok(r) => {
                let mut flags = EntryFlags::empty();
                flags.set(EntryFlags::NEAR_SINGULAR, r.near_singular);
                flags.set(EntryFlags::DEEP_NULL, r.insertion_loss.deep_null);
                flags.set(EntryFlags::Q_ANOMALY, r.q_anomaly);
                Self {
                    frequency_hz,
                    il_db: r.insertion_loss.db,
                    p_total: r.field.p_total,
                    p_reference: r.field.p_reference,
                    flags,
                    error: None,
                }
            }
            Err(e) => Self {
                frequency_hz,
                il_db: f64::NAN,
                p_total: Complex64::new(f64::NAN, f64::NAN),
                p_reference: Complex64::new(f64::NAN, f64::NAN),
                flags: EntryFlags::SOLVER_ERROR,
                error: Some(e.to_string()),
            },
        }
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }
}

/// Insertion-loss spectrum ordered by strictly increasing frequency.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ILSpectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl ILSpectrum {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.frequency_hz).collect()
    }

    pub fn il(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.il_db).collect()
    }

    pub fn refined_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.flags.contains(EntryFlags::REFINED))
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(|e| !e.is_ok())
    }

    /// Entry of largest IL among successful solves (lowest frequency on ties).
    pub fn max_il(&self) -> Option<&SpectrumEntry> {
        self.entries
            .iter()
            .filter(|e| e.is_ok())
            .fold(None, |best: Option<&SpectrumEntry>, e| match best {
                Some(b) if b.il_db >= e.il_db => Some(b),
                _ => Some(e),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepOptions {
    #[serde(default)]
    pub truncation: TruncationOrder,
    /// Bisection depth for resonance refinement; 0 disables it.
    #[serde(default = "default_refine_depth")]
    pub refine_depth: u32,
    /// Worker threads; `None` uses the global rayon pool.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// Stop at the first failed frequency.
    #[serde(default)]
    pub fail_fast: bool,
}

fn default_refine_depth() -> u32 {
    3
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            truncation: TruncationOrder::default(),
            refine_depth: default_refine_depth(),
            threads: None,
            fail_fast: false,
        }
    }
}

fn solve_all(
    problem: &Problem,
    frequencies: &[f64],
    options: &SweepOptions,
) -> Result<Vec<SpectrumEntry>, SweepError> {
    let work = || -> Result<Vec<SpectrumEntry>, SweepError> {
        frequencies
            .par_iter()
            .map(|&f| {
                let result = solve_frequency(problem, f, options.truncation);
                match result {
                    Err(source) if options.fail_fast => Err(SweepError::Solve {
                        frequency_hz: f,
                        source,
                    }),
                    other => Ok(SpectrumEntry::from_result(other, f)),
                }
            })
            .collect()
    };
    match options.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| SweepError::ThreadPool(e.to_string()))?
            .install(work),
        None => work(),
    }
}

/// Frequencies strictly between consecutive grid points at which a shell
/// ring resonance `1 + n^2 - k3^2 S^2 = 0` lies, located by `depth` rounds of
/// bisection. Each bracket contributes its final bisection midpoints.
pub fn resonance_refinements(problem: &Problem, grid: &[f64], options: &SweepOptions) -> Vec<f64> {
    let ScattererModel::Shell(material) = problem.scatterer else {
        return Vec::new();
    };
    if options.refine_depth == 0 {
        return Vec::new();
    }
    let medium = problem.medium;
    let mut radii: Vec<f64> = problem.scene.scatterers.iter().map(|s| s.radius).collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    let n_max = options.truncation.0 as i32;
    let mut extra = Vec::new();
    for radius in radii {
        let shell = material.with_radius(radius);
        for n in 0..=n_max {
            let d = |f: f64| shell.resonance_denominator(n, 2.0 * PI * f, &medium);
            for pair in grid.windows(2) {
                let (mut lo, mut hi) = (pair[0], pair[1]);
                if d(lo).signum() == d(hi).signum() {
                    continue;
                }
                let mut points = Vec::new();
                for _ in 0..options.refine_depth {
                    let mid = 0.5 * (lo + hi);
                    points.push(mid);
                    if d(lo).signum() == d(mid).signum() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                extra.extend(points);
            }
        }
    }
    extra.sort_by(f64::total_cmp);
    extra.dedup();
    extra.retain(|f| !grid.contains(f));
    extra
}

/// Solves every grid frequency (in parallel) plus resonance refinements.
/// Output order is by frequency regardless of scheduling.
pub fn run_sweep(
    problem: &Problem,
    grid: &FrequencyGrid,
    options: &SweepOptions,
) -> Result<ILSpectrum, SweepError> {
    let base = grid.frequencies()?;
    let refined = resonance_refinements(problem, &base, options);
    let mut all: Vec<(f64, bool)> = base
        .iter()
        .map(|&f| (f, false))
        .chain(refined.iter().map(|&f| (f, true)))
        .collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    let frequencies: Vec<f64> = all.iter().map(|p| p.0).collect();
    let mut entries = solve_all(problem, &frequencies, options)?;
    for (entry, &(_, is_refined)) in entries.iter_mut().zip(&all) {
        entry.flags.set(EntryFlags::REFINED, is_refined);
    }
    Ok(ILSpectrum { entries })
}

/// Largest `|IL_N - IL_{N+2}|` over `probes` frequencies spread across the grid.
pub fn convergence_check(
    problem: &Problem,
    grid: &FrequencyGrid,
    order: TruncationOrder,
    probes: usize,
) -> Result<f64, SweepError> {
    let probe_grid = FrequencyGrid {
        count: probes.max(2),
        ..*grid
    };
    let mut worst: f64 = 0.0;
    for f in probe_grid.frequencies()? {
        let solve_at = |o: TruncationOrder| {
            solve_frequency(problem, f, o).map_err(|source| SweepError::Solve {
                frequency_hz: f,
                source,
            })
        };
        let a = solve_at(order)?.insertion_loss.db;
        let b = solve_at(TruncationOrder(order.0 + 2))?.insertion_loss.db;
        worst = worst.max((a - b).abs());
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumKind {
    Peak,
    Dip,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub frequency_hz: f64,
    pub il_db: f64,
    pub kind: ExtremumKind,
}

/// Vertex of the parabola through three points with non-uniform spacing.
fn parabola_vertex(p0: (f64, f64), p1: (f64, f64), p2: (f64, f64)) -> (f64, f64) {
    let (x0, y0) = p0;
    let (x1, y1) = p1;
    let (x2, y2) = p2;
    let d01 = (y1 - y0) / (x1 - x0);
    let d12 = (y2 - y1) / (x2 - x1);
    let a = (d12 - d01) / (x2 - x0);
    if a == 0.0 || !a.is_finite() {
        return p1;
    }
    let b = d01 - a * (x0 + x1);
    let x = (-b / (2.0 * a)).clamp(x0, x2);
    let y = y1 + (x - x1) * (d01 + a * (x - x0));
    (x, y)
}

/// Local maxima and minima of IL inside `[min, max]` Hz.
///
/// A point is a peak when it is strictly above its left neighbour and not
/// below its right one (so a flat top reports its lowest frequency); dips
/// mirror this. Each extremum is refined by a three-point parabola.
/// Failed entries are skipped.
pub fn find_extrema(spectrum: &ILSpectrum, min: f64, max: f64) -> Result<Vec<Extremum>, SweepError> {
    let points: Vec<(f64, f64)> = spectrum
        .entries
        .iter()
        .filter(|e| e.is_ok() && e.frequency_hz >= min && e.frequency_hz <= max)
        .map(|e| (e.frequency_hz, e.il_db))
        .collect();
    if points.is_empty() {
        return Err(SweepError::EmptyWindow { min, max });
    }
    let mut out = Vec::new();
    for w in points.windows(3) {
        let (prev, cur, next) = (w[0].1, w[1].1, w[2].1);
        let kind = if cur > prev && cur >= next {
            ExtremumKind::Peak
        } else if cur < prev && cur <= next {
            ExtremumKind::Dip
        } else {
            continue;
        };
        let (frequency_hz, il_db) = parabola_vertex(w[0], w[1], w[2]);
        out.push(Extremum {
            frequency_hz,
            il_db,
            kind,
        });
    }
    Ok(out)
}

/// Frequencies `(2j + 1) c / (2 Delta)`, `j = 0..count`, of destructive
/// interference between the direct and ground-reflected paths over a rigid
/// plane, `Delta` being the path-length difference.
pub fn two_ray_dip_frequencies(source: Point2, receiver: Point2, sound_speed: f64, count: usize) -> Vec<f64> {
    let direct = source.distance_to(receiver);
    let reflected = source.reflect().distance_to(receiver);
    let delta = reflected - direct;
    if !(delta > 0.0) {
        return Vec::new();
    }
    (0..count)
        .map(|j| (2 * j + 1) as f64 * sound_speed / (2.0 * delta))
        .collect()
}
