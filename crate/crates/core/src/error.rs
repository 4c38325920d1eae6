use thiserror::Error;

/// Everything that can go wrong below the CLI layer.
///
/// Variants carry the offending values so callers can report them without
/// re-deriving context.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("potential slope b must be positive and finite, got {b}")]
    NonPositiveSlope { b: f64 },

    #[error("mass must be finite, got {m}")]
    NonFiniteMass { m: f64 },

    #[error("tolerance must be positive and finite, got {tol}")]
    NonPositiveTolerance { tol: f64 },

    #[error("grid needs finite x_min < x_max and at least 3 points, got [{x_min}, {x_max}] with {n_points}")]
    InvalidGrid {
        x_min: f64,
        x_max: f64,
        n_points: usize,
    },

    #[error(
        "grid [{x_min}, {x_max}] does not cover the mode support [{need_lo}, {need_hi}]; \
         eigenvalues would be contaminated by boundary truncation"
    )]
    GridTooNarrow {
        x_min: f64,
        x_max: f64,
        need_lo: f64,
        need_hi: f64,
    },

    #[error("tridiagonal matrix needs diag.len() >= 1 and offdiag.len() == diag.len() - 1, got {diag_len} and {offdiag_len}")]
    BadTridiagonalShape { diag_len: usize, offdiag_len: usize },

    #[error("requested {k} eigenvalues from a dimension-{dim} matrix")]
    EigenCountOutOfRange { k: usize, dim: usize },

    #[error("quadrature needs at least 3 samples, got {n_points}")]
    TooFewSamples { n_points: usize },

    #[error("field samples ({actual}) do not match the grid ({expected} points)")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("cannot normalize: squared norm {norm_sq} is not a positive finite number")]
    DegenerateNorm { norm_sq: f64 },

    #[error("normalization quadrature must extend to at least |r| = 10, got half-width {r_half}")]
    QuadratureTooNarrow { r_half: f64 },

    #[error("trial beta/b must be positive and finite, got {trial}")]
    NonPositiveTrial { trial: f64 },

    #[error("shooting grid must span at least r in [-8, 8], got [{r_min}, {r_max}]")]
    ShootingDomainTooNarrow { r_min: f64, r_max: f64 },

    #[error("shooting integration left the representable range at trial beta/b = {trial}")]
    ShootingOverflow { trial: f64 },

    #[error("no sign change bracketing level {n} for beta/b in [0, {hi}]")]
    ShootingBracket { n: usize, hi: f64 },

    #[error(
        "level {n}: discrete eigenvalue {lambda} fell below the zero-point offset {floor}; \
         the grid is too coarse to resolve this level"
    )]
    ResolutionFailure { n: usize, lambda: f64, floor: f64 },

    #[error("the n = 0 mode has an identically vanishing lower component; partner checks need n >= 1")]
    ZeroModePartner,

    #[error("time-domain residual needs at least 3 time steps, got {steps}")]
    TooFewTimeSteps { steps: usize },

    #[error("time step must be positive and finite, got {dt}")]
    NonPositiveTimeStep { dt: f64 },

    #[error("residual stencil needs at least 5 grid points, got {n_points}")]
    StencilTooWide { n_points: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
