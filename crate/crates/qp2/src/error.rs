//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Which denominator factor of the recurrence vanished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleFactor {
    /// `f_prev` below the magnitude floor.
    PrevIterate,
    /// `f_n` below the magnitude floor.
    CurrentIterate,
    /// `f_n + t_n` below the magnitude floor.
    ShiftedIterate,
    /// A product `f_n f_{n+1}` below the floor (invariant evaluation).
    IterateProduct,
}

impl std::fmt::Display for PoleFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PoleFactor::PrevIterate => "f_prev",
            PoleFactor::CurrentIterate => "f_n",
            PoleFactor::ShiftedIterate => "f_n + t_n",
            PoleFactor::IterateProduct => "f_n * f_next",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error)]
pub enum QpError {
    #[error("pole at step {index}: {factor} has magnitude {magnitude:e} below floor")]
    Pole {
        index: usize,
        factor: PoleFactor,
        magnitude: f64,
    },

    #[error("quadratic for f1 degenerates: leading coefficient magnitude {0:e} below floor")]
    Degenerate(f64),

    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("integration path passes within {dist:e} of branch point ({}, {})", .point.re, .point.im)]
    Branch { point: Complex64, dist: f64 },

    #[error("pole of the third-kind integrand on the contour: {0}")]
    Contour(String),

    #[error("critical initial data: {0}")]
    CriticalPoint(String),

    #[error("elliptic modulus on the unit circle: |k| = {0}")]
    DegenerateModulus(f64),

    #[error("phase fit failed: {0}")]
    Fit(String),

    #[error("no near-period found: best mismatch {best:.6} exceeds threshold {threshold}")]
    NoNearPeriod { best: f64, threshold: f64 },

    #[error("evaluation near a pole: |value| = {magnitude:e}")]
    PoleProximity { value: Complex64, magnitude: f64 },
}

pub type Result<T> = std::result::Result<T, QpError>;
