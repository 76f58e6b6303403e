use thiserror::Error;

/// Errors produced by lattice construction, potential analysis, soliton
/// building, wave-functional assembly, and matrix-element evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("field sample is not finite at x = {x}")]
    NonFiniteField { x: f64 },

    #[error("grid mismatch between operands")]
    GridMismatch,

    #[error("site index {index} out of range for {n_points} lattice points")]
    SiteOutOfRange { index: usize, n_points: usize },

    #[error(
        "grid too narrow for the soliton to saturate: need at least {required} \
         between center and each boundary, got {available}"
    )]
    BoundarySaturation { required: f64, available: f64 },

    #[error("pair ansatz invalid: separation {separation} must exceed {minimum} (4 kink widths)")]
    AnsatzValidity { separation: f64, minimum: f64 },

    #[error("fewer than two minima in the scan interval; no vacuum gap is defined")]
    NoGap,

    #[error("tilt {tilt} >= amplitude {amplitude}: the washboard has no local minima")]
    NoLocalMinima { tilt: f64, amplitude: f64 },

    #[error("degenerate vacua (zero energy gap): pair separation is unbounded")]
    DegenerateVacuum,

    #[error("width collapse: |delta V| = {delta_v_abs} >= alpha = {alpha}")]
    CollapsedWidth { alpha: f64, delta_v_abs: f64 },

    #[error("unsupported potential family for {op}")]
    UnsupportedFamily { op: &'static str },

    #[error("unstable expansion: V'' < 0 at x = {x} (site {site})")]
    UnstableExpansion { x: f64, site: usize },

    #[error("surface point {x0} lies outside the barrier ({x_a}, {x_b})")]
    SurfacePlacement { x0: f64, x_a: f64, x_b: f64 },

    #[error("no barrier: particle energy {energy} >= barrier height {height}")]
    NoBarrier { energy: f64, height: f64 },

    #[error("trajectory leaves the inter-center band at site {site}")]
    TrajectoryPlacement { site: usize },

    #[error("wave functional is not normalized (call normalize first)")]
    Unnormalized,
}

pub type Result<T> = std::result::Result<T, Error>;
