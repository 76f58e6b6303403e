//! Kink and antikink profiles, soliton-antisoliton pairs, energy and mass
//! integrals, topological charge, and the topological lower bound on the
//! kink mass.

use crate::error::{Error, Result};
use crate::lattice::{FieldConfig, Grid};
use crate::potentials::Potential;

use std::f64::consts::PI;

/// Orientation of a single kink: `Plus` interpolates upward between the
/// adjacent vacua, `Minus` downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Which analytic family a profile belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinkFamily {
    Phi4Kink,
    Phi4Antikink,
    SineGordonKink,
    SineGordonAntikink,
    Pair,
}

/// A soliton configuration together with its integrated observables.
#[derive(Debug, Clone)]
pub struct KinkSolution {
    pub profile: FieldConfig,
    pub family: KinkFamily,
    /// Kink center, or both centers for a pair.
    pub centers: Vec<f64>,
    pub mass: f64,
    pub charge: f64,
}

/// Outcome of checking the topological mass bound for a configuration.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub mass: f64,
    pub charge: f64,
    /// `(4 / (3 sqrt 2)) * mu^3 / lambda * |Q|` with `mu = sqrt(lambda) * phi0`.
    pub bound: f64,
    /// The middle member of the inequality chain:
    /// `integral sqrt(lambda/2) |phi' (phi^2 - phi0^2)| dx`.
    pub intermediate: f64,
    pub slack: f64,
    pub saturated: bool,
}

/// Mass of a unit-charge quartic double-well kink: `(4/(3 sqrt 2)) sqrt(lambda) phi0^3`.
pub fn phi4_kink_mass(lambda: f64, phi0: f64) -> f64 {
    4.0 / (3.0 * 2.0_f64.sqrt()) * lambda.sqrt() * phi0.powi(3)
}

/// Characteristic width of a quartic double-well kink.
pub fn phi4_kink_width(lambda: f64, phi0: f64) -> f64 {
    1.0 / ((lambda / 2.0).sqrt() * phi0)
}

/// Mass of a unit-charge sine-Gordon kink: `8 sqrt(amplitude)`.
pub fn sg_kink_mass(amplitude: f64) -> f64 {
    8.0 * amplitude.sqrt()
}

/// Characteristic width of a sine-Gordon kink.
pub fn sg_kink_width(amplitude: f64) -> f64 {
    1.0 / amplitude.sqrt()
}

fn check_saturation(grid: &Grid, center: f64, width: f64) -> Result<()> {
    let required = 10.0 * width;
    let available = (center - grid.x_min()).min(grid.x_max() - center);
    if available < required {
        return Err(Error::BoundarySaturation { required, available });
    }
    Ok(())
}

/// Analytic quartic double-well kink
/// `phi(x) = sign * phi0 * tanh(sqrt(lambda/2) * phi0 * (x - center))`,
/// sampled on `grid`, with mass and charge evaluated on the lattice.
///
/// The grid must leave at least ten kink widths between the center and
/// each boundary so the profile saturates at the vacua.
pub fn phi4_kink(
    lambda: f64,
    phi0: f64,
    grid: &Grid,
    center: f64,
    sign: Sign,
) -> Result<KinkSolution> {
    let spec = Potential::phi4(lambda, phi0)?;
    check_saturation(grid, center, phi4_kink_width(lambda, phi0))?;
    let k = (lambda / 2.0).sqrt() * phi0;
    let s = sign.factor();
    let profile = FieldConfig::sample(grid, |x| s * phi0 * (k * (x - center)).tanh())?;
    let mass = mass(&profile, &spec);
    let charge = topological_charge(&profile, phi0)?;
    let family = match sign {
        Sign::Plus => KinkFamily::Phi4Kink,
        Sign::Minus => KinkFamily::Phi4Antikink,
    };
    Ok(KinkSolution { profile, family, centers: vec![center], mass, charge })
}

/// Analytic sine-Gordon kink
/// `phi(x) = 4 atan(exp(sign * sqrt(A) * (x - center)))`, interpolating
/// between the 0 and 2 pi wells. Charge is normalized with
/// `phi_bar = pi` (half the well spacing) so a single kink carries
/// `|Q| = 1`.
pub fn sg_kink(amplitude: f64, grid: &Grid, center: f64, sign: Sign) -> Result<KinkSolution> {
    let spec = Potential::driven_sine_gordon(amplitude, 0.0)?;
    check_saturation(grid, center, sg_kink_width(amplitude))?;
    let k = amplitude.sqrt();
    let s = sign.factor();
    let profile = FieldConfig::sample(grid, |x| 4.0 * (s * k * (x - center)).exp().atan())?;
    let mass = mass(&profile, &spec);
    let charge = topological_charge(&profile, PI)?;
    let family = match sign {
        Sign::Plus => KinkFamily::SineGordonKink,
        Sign::Minus => KinkFamily::SineGordonAntikink,
    };
    Ok(KinkSolution { profile, family, centers: vec![center], mass, charge })
}

/// Raw additive kink-antikink profile at separation `separation`, with the
/// shared inner vacuum subtracted: kink at `-separation/2`, antikink at
/// `+separation/2`. No separation validity gate; used for variational
/// centers where overlapping constituents are acceptable.
pub fn additive_pair_profile(
    spec: &Potential,
    separation: f64,
    grid: &Grid,
) -> Result<FieldConfig> {
    if !(separation > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "pair separation must be positive, got {separation}"
        )));
    }
    let half = 0.5 * separation;
    match *spec {
        Potential::Phi4 { lambda, phi0 } => {
            let k = (lambda / 2.0).sqrt() * phi0;
            FieldConfig::sample(grid, |x| {
                let kink = phi0 * (k * (x + half)).tanh();
                let antikink = -phi0 * (k * (x - half)).tanh();
                kink + antikink - phi0
            })
        }
        Potential::DrivenSineGordon { amplitude, .. } => {
            let k = amplitude.sqrt();
            FieldConfig::sample(grid, |x| {
                let kink = 4.0 * (k * (x + half)).exp().atan();
                let antikink = 4.0 * (-k * (x - half)).exp().atan();
                kink + antikink - 2.0 * PI
            })
        }
        _ => Err(Error::UnsupportedFamily { op: "additive_pair_profile" }),
    }
}

/// Well-separated soliton-antisoliton pair built from the additive ansatz.
///
/// Requires `separation > 4 * kink width` so the constituents do not
/// overlap appreciably, and a grid that saturates both tails. The net
/// topological charge of the result vanishes.
pub fn pair_profile(spec: &Potential, separation: f64, grid: &Grid) -> Result<KinkSolution> {
    let (width, normalizer, sector) = match *spec {
        Potential::Phi4 { lambda, phi0 } => {
            (phi4_kink_width(lambda, phi0), phi0, spec.clone())
        }
        Potential::DrivenSineGordon { amplitude, .. } => (
            sg_kink_width(amplitude),
            PI,
            Potential::driven_sine_gordon(amplitude, 0.0)?,
        ),
        _ => return Err(Error::UnsupportedFamily { op: "pair_profile" }),
    };
    let minimum = 4.0 * width;
    if separation <= minimum {
        return Err(Error::AnsatzValidity { separation, minimum });
    }
    let half = 0.5 * separation;
    check_saturation(grid, -half, width)?;
    check_saturation(grid, half, width)?;
    let profile = additive_pair_profile(&sector, separation, grid)?;
    let mass = mass(&profile, &sector);
    let charge = topological_charge(&profile, normalizer)?;
    Ok(KinkSolution {
        profile,
        family: KinkFamily::Pair,
        centers: vec![-half, half],
        mass,
        charge,
    })
}

/// Pointwise energy density `1/2 (dphi/dx)^2 + V(phi)`.
pub fn energy_density(f: &FieldConfig, spec: &Potential) -> FieldConfig {
    let d = f.derivative();
    let values = f
        .values()
        .iter()
        .zip(d.values())
        .map(|(&phi, &dphi)| 0.5 * dphi * dphi + spec.value(phi))
        .collect();
    FieldConfig::from_values(f.grid(), values).expect("energy density of a finite field is finite")
}

/// Integrated energy (the configuration's mass).
pub fn mass(f: &FieldConfig, spec: &Potential) -> f64 {
    energy_density(f, spec).integrate()
}

/// Topological current density `(1 / (2 phi_bar)) dphi/dx`.
pub fn topological_charge_density(f: &FieldConfig, normalizer: f64) -> Result<FieldConfig> {
    if !(normalizer > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "charge normalizer must be positive, got {normalizer}"
        )));
    }
    let d = f.derivative();
    d.map(|_, v| v / (2.0 * normalizer))
}

/// Topological charge from the endpoint field values:
/// `(phi(x_max) - phi(x_min)) / (2 phi_bar)`. Endpoint evaluation avoids
/// derivative noise; the density form exists separately.
pub fn topological_charge(f: &FieldConfig, normalizer: f64) -> Result<f64> {
    if !(normalizer > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "charge normalizer must be positive, got {normalizer}"
        )));
    }
    let v = f.values();
    Ok((v[v.len() - 1] - v[0]) / (2.0 * normalizer))
}

/// Verify the inequality chain bounding the mass of a quartic double-well
/// configuration from below by its topological charge:
/// mass >= integral sqrt(lambda/2) |phi' (phi^2 - phi0^2)| dx >= bound.
///
/// Saturation holds when the slack is below 1e-4 of the bound, which is
/// the hallmark of a first-order (BPS) profile.
pub fn bogomolnyi_bound(f: &FieldConfig, spec: &Potential) -> Result<BoundReport> {
    let (lambda, phi0) = match *spec {
        Potential::Phi4 { lambda, phi0 } => (lambda, phi0),
        _ => return Err(Error::UnsupportedFamily { op: "bogomolnyi_bound" }),
    };
    let m = mass(f, spec);
    let charge = topological_charge(f, phi0)?;
    let mu = lambda.sqrt() * phi0;
    let bound = 4.0 / (3.0 * 2.0_f64.sqrt()) * mu * (mu * mu / lambda) * charge.abs();

    let d = f.derivative();
    let root = (lambda / 2.0).sqrt();
    let values: Vec<f64> = f
        .values()
        .iter()
        .zip(d.values())
        .map(|(&phi, &dphi)| root * (dphi * (phi * phi - phi0 * phi0)).abs())
        .collect();
    let intermediate = FieldConfig::from_values(f.grid(), values)?.integrate();

    let slack = m - bound;
    let saturated = slack / bound.max(1e-30) < 1e-4;
    Ok(BoundReport { mass: m, charge, bound, intermediate, slack, saturated })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wide_grid() -> Grid {
        Grid::new(-20.0, 20.0, 4001).unwrap()
    }

    #[test]
    fn phi4_kink_mass_and_charge() {
        let g = wide_grid();
        let kink = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap();
        let closed = 4.0 / (3.0 * 2.0_f64.sqrt());
        assert!((kink.mass - closed).abs() / closed < 1e-6);
        assert!((kink.charge - 1.0).abs() < 1e-6);

        let anti = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Minus).unwrap();
        assert!((anti.charge + 1.0).abs() < 1e-6);
        assert!((anti.mass - kink.mass).abs() < 1e-12);
    }

    #[test]
    fn phi4_kink_mass_scales_with_coupling() {
        let g = wide_grid();
        let kink = phi4_kink(4.0, 1.0, &g, 0.0, Sign::Plus).unwrap();
        let closed = phi4_kink_mass(4.0, 1.0);
        assert!((closed - 1.885618).abs() < 1e-6);
        assert!((kink.mass - closed).abs() / closed < 1e-6);
    }

    #[test]
    fn phi4_kink_mass_cubed_in_vacuum_value() {
        let g = Grid::new(-40.0, 40.0, 8001).unwrap();
        let m1 = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap().mass;
        let m2 = phi4_kink(1.0, 2.0, &g, 0.0, Sign::Plus).unwrap().mass;
        assert!((m2 - 8.0 * m1).abs() / (8.0 * m1) < 1e-6);
    }

    #[test]
    fn narrow_grid_rejected() {
        let g = Grid::new(-3.0, 3.0, 301).unwrap();
        assert!(matches!(
            phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus),
            Err(Error::BoundarySaturation { .. })
        ));
    }

    #[test]
    fn sine_gordon_kink() {
        let g = wide_grid();
        let kink = sg_kink(1.0, &g, 0.0, Sign::Plus).unwrap();
        assert!((kink.mass - 8.0).abs() / 8.0 < 1e-6);
        assert!((kink.charge - 1.0).abs() < 1e-6);
        // Field passes through pi at the center.
        let mid = kink.profile.values()[2000];
        assert!((mid - PI).abs() < 1e-12);

        let anti = sg_kink(1.0, &g, 0.0, Sign::Minus).unwrap();
        assert!((anti.charge + 1.0).abs() < 1e-6);
        assert!((anti.profile.values()[0] - 2.0 * PI).abs() < 1e-6);
    }

    #[test]
    fn sine_gordon_mass_scales_with_amplitude() {
        let g = wide_grid();
        let kink = sg_kink(4.0, &g, 0.0, Sign::Plus).unwrap();
        assert!((kink.mass - 16.0).abs() / 16.0 < 1e-6);
    }

    #[test]
    fn pair_charge_vanishes() {
        let g = Grid::new(-40.0, 40.0, 8001).unwrap();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let pair = pair_profile(&spec, 10.0, &g).unwrap();
        assert!(pair.charge.abs() < 1e-6);
        let single = phi4_kink_mass(1.0, 1.0);
        assert!((pair.mass - 2.0 * single).abs() / (2.0 * single) < 0.01);
    }

    #[test]
    fn pair_rejects_overlapping_kinks() {
        let g = Grid::new(-40.0, 40.0, 8001).unwrap();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        assert!(matches!(
            pair_profile(&spec, 0.1, &g),
            Err(Error::AnsatzValidity { .. })
        ));
    }

    #[test]
    fn pair_mass_approaches_twice_single() {
        let g = Grid::new(-60.0, 60.0, 12001).unwrap();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let single = phi4_kink_mass(1.0, 1.0);
        let mut prev_dev = f64::INFINITY;
        for &l in &[6.0, 8.0, 10.0, 12.0] {
            let pair = pair_profile(&spec, l, &g).unwrap();
            let dev = (pair.mass - 2.0 * single).abs();
            assert!(dev < prev_dev, "deviation should shrink with separation");
            prev_dev = dev;
        }
    }

    #[test]
    fn energy_density_of_vacuum_vanishes() {
        let g = wide_grid();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let vac = FieldConfig::constant(&g, 1.0).unwrap();
        let density = energy_density(&vac, &spec);
        assert!(density.values().iter().all(|&v| v.abs() < 1e-14));
        assert_eq!(mass(&vac, &spec), 0.0);
    }

    #[test]
    fn energy_density_peaks_at_kink_center() {
        let g = wide_grid();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let kink = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap();
        let density = energy_density(&kink.profile, &spec);
        let center_idx = 2000;
        let peak_idx = density
            .values()
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        assert_eq!(peak_idx, center_idx);
        // At the center both terms equal lambda phi0^4 / 4.
        let expected = 0.5;
        assert!((density.values()[center_idx] - expected).abs() < 1e-4);
    }

    #[test]
    fn charge_density_integrates_to_charge() {
        let g = wide_grid();
        let kink = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap();
        let density = topological_charge_density(&kink.profile, 1.0).unwrap();
        assert!((density.integrate() - 1.0).abs() < 1e-6);

        let anti = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Minus).unwrap();
        let density_a = topological_charge_density(&anti.profile, 1.0).unwrap();
        for (u, v) in density.values().iter().zip(density_a.values()) {
            assert!((u + v).abs() < 1e-12);
        }

        let constant = FieldConfig::constant(&g, 0.3).unwrap();
        let flat = topological_charge_density(&constant, 1.0).unwrap();
        assert!(flat.values().iter().all(|&v| v.abs() < 1e-13));
    }

    #[test]
    fn charge_rejects_bad_normalizer() {
        let g = wide_grid();
        let f = FieldConfig::constant(&g, 0.0).unwrap();
        assert!(topological_charge(&f, 0.0).is_err());
        assert!(topological_charge_density(&f, -1.0).is_err());
    }

    #[test]
    fn bound_saturated_for_exact_kink() {
        let g = wide_grid();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let kink = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap();
        let report = bogomolnyi_bound(&kink.profile, &spec).unwrap();
        assert!(report.saturated);
        assert!(report.slack.abs() < 1e-6);
        assert!(report.mass >= report.intermediate - 1e-9);
        assert!(report.intermediate >= report.bound - 1e-9);
    }

    #[test]
    fn bound_trivially_holds_for_vacuum() {
        let g = wide_grid();
        let spec = Potential::phi4(1.0, 1.0).unwrap();
        let vac = FieldConfig::constant(&g, 1.0).unwrap();
        let report = bogomolnyi_bound(&vac, &spec).unwrap();
        assert_eq!(report.mass, 0.0);
        assert_eq!(report.charge, 0.0);
        assert_eq!(report.bound, 0.0);
        assert_eq!(report.slack, 0.0);
    }

    #[test]
    fn bound_requires_quartic_family() {
        let g = wide_grid();
        let spec = Potential::driven_sine_gordon(1.0, 0.0).unwrap();
        let f = FieldConfig::constant(&g, 0.0).unwrap();
        assert!(matches!(
            bogomolnyi_bound(&f, &spec),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn mass_translation_invariant() {
        let g = wide_grid();
        let m0 = phi4_kink(1.0, 1.0, &g, 0.0, Sign::Plus).unwrap().mass;
        let m1 = phi4_kink(1.0, 1.0, &g, 0.37, Sign::Plus).unwrap().mass;
        assert!((m0 - m1).abs() < 1e-8);
    }
}
