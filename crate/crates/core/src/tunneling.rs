//! Tunneling matrix elements: the quantum-mechanical surface form for a
//! rectangular barrier, the golden-rule rate, the functional matrix
//! element between Gaussian wave functionals, and the coherent/incoherent
//! current-density rules.

use crate::error::{Error, Result};
use crate::lattice::FieldConfig;
use crate::quadrature::{adaptive_simpson, gauss_legendre};
use crate::wavefunctionals::GaussianFunctional;

/// Rectangular barrier on `[x_a, x_b]` of height `height`, probed at
/// particle energy `energy` with mass `mass`. The interior is classically
/// forbidden: `kappa = sqrt(2 m (V0 - E)) > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierSpec {
    pub x_a: f64,
    pub x_b: f64,
    pub height: f64,
    pub energy: f64,
    pub mass: f64,
}

impl BarrierSpec {
    pub fn new(x_a: f64, x_b: f64, height: f64, energy: f64, mass: f64) -> Result<Self> {
        if !(x_a < x_b) {
            return Err(Error::InvalidArgument(format!(
                "barrier bounds reversed or degenerate: [{x_a}, {x_b}]"
            )));
        }
        if !(height > 0.0) || !(mass > 0.0) || !(energy > 0.0) {
            return Err(Error::InvalidArgument(
                "barrier height, particle energy, and mass must be positive".into(),
            ));
        }
        if energy >= height {
            return Err(Error::NoBarrier { energy, height });
        }
        Ok(Self { x_a, x_b, height, energy, mass })
    }

    pub fn width(&self) -> f64 {
        self.x_b - self.x_a
    }

    /// Decay constant inside the barrier, `sqrt(2 m (V0 - E))`.
    pub fn kappa(&self) -> f64 {
        (2.0 * self.mass * (self.height - self.energy)).sqrt()
    }

    /// Propagating wavenumber outside the barrier, `sqrt(2 m E)`.
    pub fn wavenumber(&self) -> f64 {
        (2.0 * self.mass * self.energy).sqrt()
    }
}

/// Surface-form matrix element
/// `T = -(1/2m) [psi_k psi_q' - psi_q psi_k'](x0)` evaluated at an
/// arbitrary point `x0` inside the barrier. `psi_k` is the left-electrode
/// state decaying rightward from `x_a`, `psi_q` the right-electrode state
/// decaying leftward from `x_b`, both with unit-flux plane-wave
/// normalization outside. hbar = 1.
///
/// For these exact exponential solutions the result is independent of
/// where the surface is placed, which is the defining property here.
pub fn bardeen_matrix_element(barrier: &BarrierSpec, x0: f64) -> Result<f64> {
    if !(barrier.x_a < x0 && x0 < barrier.x_b) {
        return Err(Error::SurfacePlacement { x0, x_a: barrier.x_a, x_b: barrier.x_b });
    }
    let kappa = barrier.kappa();
    let k = barrier.wavenumber();
    let m = barrier.mass;
    // Matching a unit-flux incident wave onto the half-infinite barrier
    // gives interior amplitude 2 sqrt(m k) / sqrt(k^2 + kappa^2).
    let amp = 2.0 * (m * k).sqrt() / (k * k + kappa * kappa).sqrt();

    let psi_k = amp * (-kappa * (x0 - barrier.x_a)).exp();
    let dpsi_k = -kappa * psi_k;
    let psi_q = amp * (kappa * (x0 - barrier.x_b)).exp();
    let dpsi_q = kappa * psi_q;

    Ok(-(0.5 / m) * (psi_k * dpsi_q - psi_q * dpsi_k))
}

/// Exact transmission probability `|t|^2` through the rectangular barrier,
/// from the closed-form transfer-matrix solution. Used as an independent
/// cross-check of the surface-form matrix element.
pub fn rectangular_transmission(barrier: &BarrierSpec) -> f64 {
    let kappa = barrier.kappa();
    let k = barrier.wavenumber();
    let s = (kappa * barrier.width()).sinh();
    let num = 4.0 * k * k * kappa * kappa;
    num / (num + (k * k + kappa * kappa).powi(2) * s * s)
}

/// First-order transition rate `P = 2 pi sum |T|^2 delta_eta(E_k - E_q)`
/// with the energy delta regularized as a normalized Lorentzian of width
/// `eta`. hbar = 1.
pub fn golden_rule_rate(elements: &[(f64, f64, f64)], eta: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "delta broadening must be positive, got {eta}"
        )));
    }
    let mut rate = 0.0;
    for &(t, e_k, e_q) in elements {
        let de = e_k - e_q;
        let lorentzian = eta / (std::f64::consts::PI * (de * de + eta * eta));
        rate += t * t * lorentzian;
    }
    Ok(2.0 * std::f64::consts::PI * rate)
}

/// Transport regime for converting a matrix element into a current.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// First-order single-boson transfer: current goes as `|T|`.
    CoherentBoson,
    /// Second-order quasiparticle transfer: current goes as `|T|^2`.
    IncoherentQuasiparticle,
}

/// `J = kappa_j |T|` (coherent) or `kappa_j |T|^2` (incoherent).
pub fn current_density_scaled(t: f64, regime: Regime, kappa_j: f64) -> f64 {
    match regime {
        Regime::CoherentBoson => kappa_j * t.abs(),
        Regime::IncoherentQuasiparticle => kappa_j * t * t,
    }
}

/// Current density with unit proportionality constant.
pub fn current_density(t: f64, regime: Regime) -> f64 {
    current_density_scaled(t, regime, 1.0)
}

/// Where a matrix element was evaluated: a surface point inside a 1D
/// barrier, or a trajectory configuration inside the functional barrier.
#[derive(Debug, Clone)]
pub enum TunnelingLocation {
    SurfacePoint(f64),
    Trajectory(FieldConfig),
}

/// A matrix element together with the current it drives.
#[derive(Debug, Clone)]
pub struct TunnelingResult {
    pub matrix_element: f64,
    pub current: f64,
    pub regime: Regime,
    pub location: TunnelingLocation,
}

impl TunnelingResult {
    pub fn new(
        matrix_element: f64,
        regime: Regime,
        location: TunnelingLocation,
        kappa_j: f64,
    ) -> Self {
        Self {
            matrix_element,
            current: current_density_scaled(matrix_element, regime, kappa_j),
            regime,
            location,
        }
    }
}

/// One lattice site of a paired-functional integrand: the two Gaussian
/// factors `n exp(-weight (phi - center)^2)` and the half-line threshold
/// from the barrier trajectory. Weights are the full lattice exponents
/// `alpha * dx`.
#[derive(Debug, Clone, Copy)]
pub struct PairedSite {
    pub center_initial: f64,
    pub center_final: f64,
    pub weight_initial: f64,
    pub weight_final: f64,
    pub threshold: f64,
}

impl PairedSite {
    fn norm_initial(&self) -> f64 {
        (2.0 * self.weight_initial / std::f64::consts::PI).powf(0.25)
    }

    fn norm_final(&self) -> f64 {
        (2.0 * self.weight_final / std::f64::consts::PI).powf(0.25)
    }

    fn psi_initial(&self, phi: f64) -> f64 {
        let d = phi - self.center_initial;
        self.norm_initial() * (-self.weight_initial * d * d).exp()
    }

    fn psi_final(&self, phi: f64) -> f64 {
        let d = phi - self.center_final;
        self.norm_final() * (-self.weight_final * d * d).exp()
    }

    fn d2_psi_initial(&self, phi: f64) -> f64 {
        let w = self.weight_initial;
        let d = phi - self.center_initial;
        (4.0 * w * w * d * d - 2.0 * w) * self.psi_initial(phi)
    }

    fn d2_psi_final(&self, phi: f64) -> f64 {
        let w = self.weight_final;
        let d = phi - self.center_final;
        (4.0 * w * w * d * d - 2.0 * w) * self.psi_final(phi)
    }

    // Integration window: widest single-Gaussian sigma on each side of the
    // center hull, clipped from below by the threshold.
    fn window(&self) -> (f64, f64) {
        let sigma = 1.0 / (2.0 * self.weight_initial.min(self.weight_final)).sqrt();
        let lo = self.center_initial.min(self.center_final) - 12.0 * sigma;
        let hi = self.center_initial.max(self.center_final) + 12.0 * sigma;
        (self.threshold.max(lo), hi.max(self.threshold))
    }

    /// Overlap integral of the two site factors above the threshold.
    fn overlap(&self) -> f64 {
        let (lo, hi) = self.window();
        if lo >= hi {
            return 0.0;
        }
        let tol = 1e-13 * self.norm_initial() * self.norm_final();
        adaptive_simpson(&|phi| self.psi_initial(phi) * self.psi_final(phi), lo, hi, tol)
    }

    /// Antisymmetric curvature integral
    /// `int (psi_i psi_f'' - psi_f psi_i'') dphi` above the threshold.
    fn exchange(&self) -> f64 {
        let (lo, hi) = self.window();
        if lo >= hi {
            return 0.0;
        }
        let scale = self.norm_initial()
            * self.norm_final()
            * (self.weight_initial + self.weight_final);
        let tol = 1e-13 * scale;
        adaptive_simpson(
            &|phi| {
                self.psi_initial(phi) * self.d2_psi_final(phi)
                    - self.psi_final(phi) * self.d2_psi_initial(phi)
            },
            lo,
            hi,
            tol,
        )
    }
}

/// Factorized matrix element over explicit site data:
///
/// `T = (1 / (2 mu dx^2)) sum_j B_j prod_{i != j} O_i`
///
/// where `B_j` is the per-site antisymmetric curvature integral and `O_i`
/// the per-site overlap, each restricted to the half-line above the
/// site's threshold. The `1/dx^2` carries the lattice normalization of
/// the second functional derivative.
pub fn paired_site_matrix_element(sites: &[PairedSite], dx: f64, inertia: f64) -> Result<f64> {
    if sites.is_empty() {
        return Err(Error::InvalidArgument("no lattice sites given".into()));
    }
    if !(inertia > 0.0) || !(dx > 0.0) {
        return Err(Error::InvalidArgument(
            "inertia and lattice spacing must be positive".into(),
        ));
    }
    let n = sites.len();
    let overlaps: Vec<f64> = sites.iter().map(PairedSite::overlap).collect();
    let exchanges: Vec<f64> = sites.iter().map(PairedSite::exchange).collect();

    // Stable leave-one-out products via prefix/suffix accumulation.
    let mut prefix = vec![1.0; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] * overlaps[i];
    }
    let mut suffix = vec![1.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] * overlaps[i];
    }

    let mut sum = 0.0;
    for j in 0..n {
        sum += exchanges[j] * prefix[j] * suffix[j + 1];
    }
    Ok(sum / (2.0 * inertia * dx * dx))
}

/// Dense tensor-quadrature reference for the same integral, for small
/// site counts. The full multi-dimensional integrand is assembled without
/// factorization and integrated with a Gauss-Legendre grid per dimension.
pub fn paired_site_matrix_element_dense(
    sites: &[PairedSite],
    dx: f64,
    inertia: f64,
    nodes_per_dim: usize,
) -> Result<f64> {
    let n = sites.len();
    if n == 0 || n > 3 {
        return Err(Error::InvalidArgument(format!(
            "dense reference evaluation supports 1 to 3 sites, got {n}"
        )));
    }
    if !(inertia > 0.0) || !(dx > 0.0) {
        return Err(Error::InvalidArgument(
            "inertia and lattice spacing must be positive".into(),
        ));
    }
    let (ref_nodes, ref_weights) = gauss_legendre(nodes_per_dim);
    let mut axes: Vec<(Vec<f64>, Vec<f64>)> = Vec::with_capacity(n);
    for site in sites {
        let (lo, hi) = site.window();
        if lo >= hi {
            axes.push((vec![], vec![]));
            continue;
        }
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let xs: Vec<f64> = ref_nodes.iter().map(|t| mid + half * t).collect();
        let ws: Vec<f64> = ref_weights.iter().map(|w| w * half).collect();
        axes.push((xs, ws));
    }
    if axes.iter().any(|(xs, _)| xs.is_empty()) {
        return Ok(0.0);
    }

    let mut sum = 0.0;
    let mut index = vec![0usize; n];
    'outer: loop {
        let mut weight = 1.0;
        let mut phi = [0.0f64; 3];
        for d in 0..n {
            phi[d] = axes[d].0[index[d]];
            weight *= axes[d].1[index[d]];
        }
        let mut psi_i = 1.0;
        let mut psi_f = 1.0;
        for d in 0..n {
            psi_i *= sites[d].psi_initial(phi[d]);
            psi_f *= sites[d].psi_final(phi[d]);
        }
        let mut bracket = 0.0;
        for j in 0..n {
            // d^2/dphi_j^2 of a product touches only the j-th factor.
            let ratio_f = sites[j].d2_psi_final(phi[j]);
            let base_f = sites[j].psi_final(phi[j]);
            let ratio_i = sites[j].d2_psi_initial(phi[j]);
            let base_i = sites[j].psi_initial(phi[j]);
            bracket += psi_i * (psi_f / base_f) * ratio_f - psi_f * (psi_i / base_i) * ratio_i;
        }
        sum += weight * bracket;

        let mut d = 0;
        loop {
            index[d] += 1;
            if index[d] < axes[d].0.len() {
                break;
            }
            index[d] = 0;
            d += 1;
            if d == n {
                break 'outer;
            }
        }
    }
    Ok(sum / (2.0 * inertia * dx * dx))
}

fn paired_sites_from_functionals(
    psi_initial: &GaussianFunctional,
    psi_final: &GaussianFunctional,
    trajectory: &FieldConfig,
) -> Result<Vec<PairedSite>> {
    if psi_initial.grid() != psi_final.grid() || psi_initial.grid() != trajectory.grid() {
        return Err(Error::GridMismatch);
    }
    if !psi_initial.is_normalized() || !psi_final.is_normalized() {
        return Err(Error::Unnormalized);
    }
    let dx = psi_initial.grid().spacing();
    let n = trajectory.len();
    let mut sites = Vec::with_capacity(n);
    for s in 0..n {
        let a = psi_initial.center().values()[s];
        let b = psi_final.center().values()[s];
        let t = trajectory.values()[s];
        let slack = 1e-12 * (1.0 + a.abs() + b.abs());
        if t < a.min(b) - slack || t > a.max(b) + slack {
            return Err(Error::TrajectoryPlacement { site: s });
        }
        sites.push(PairedSite {
            center_initial: a,
            center_final: b,
            weight_initial: psi_initial.width()[s] * dx,
            weight_final: psi_final.width()[s] * dx,
            threshold: t,
        });
    }
    Ok(sites)
}

/// Functional tunneling matrix element between two normalized diagonal
/// Gaussian functionals,
///
/// `T_if = (1/2 mu) int prod_i dphi_i [Psi_i sum_j d2 Psi_f / dphi_j^2
///         - Psi_f sum_j d2 Psi_i / dphi_j^2] prod_i theta(phi_i - phi0_i)`,
///
/// with the trajectory `phi0` restricting each site integral to the
/// half-line above it. The trajectory must lie componentwise between the
/// two centers. The diagonal structure factorizes the N-dimensional
/// integral into per-site 1D integrals evaluated by adaptive quadrature.
/// hbar = 1.
pub fn functional_matrix_element(
    psi_initial: &GaussianFunctional,
    psi_final: &GaussianFunctional,
    trajectory: &FieldConfig,
    inertia: f64,
) -> Result<f64> {
    let sites = paired_sites_from_functionals(psi_initial, psi_final, trajectory)?;
    paired_site_matrix_element(&sites, psi_initial.grid().spacing(), inertia)
}

/// Dense tensor-quadrature evaluation of [`functional_matrix_element`]
/// for grids of at most three points. Exists as the slow reference the
/// factorized route is checked against.
pub fn functional_matrix_element_dense(
    psi_initial: &GaussianFunctional,
    psi_final: &GaussianFunctional,
    trajectory: &FieldConfig,
    inertia: f64,
    nodes_per_dim: usize,
) -> Result<f64> {
    let sites = paired_sites_from_functionals(psi_initial, psi_final, trajectory)?;
    paired_site_matrix_element_dense(
        &sites,
        psi_initial.grid().spacing(),
        inertia,
        nodes_per_dim,
    )
}
