//! Potential families V(phi), their closed-form derivatives, vacuum
//! structure (false/true minima and the energy gap between them), and
//! Taylor expansion machinery.

use crate::error::{Error, Result};

/// A parameterized scalar potential.
///
/// `TaylorQuartic` is the degree-4 truncation produced by
/// [`Potential::quartic_truncation`]; it shares the full evaluation
/// interface so truncated potentials compose with everything downstream.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    /// Double well `V = (lambda/4) (phi^2 - phi0^2)^2`.
    Phi4 { lambda: f64, phi0: f64 },
    /// Washboard `V = amplitude (1 - cos phi) + tilt * phi + offset`.
    ///
    /// The constant `offset` shifts the whole curve and cancels in every
    /// gap computation; it exists so gap invariance is testable.
    DrivenSineGordon { amplitude: f64, tilt: f64, offset: f64 },
    /// Single well `V = curvature (phi - center)^2`.
    Quadratic { curvature: f64, center: f64 },
    /// `V = sum_k coeffs[k] (phi - center)^k`, k = 0..=4.
    TaylorQuartic { center: f64, coeffs: [f64; 5] },
}

/// Vacuum structure of a double-well-like potential: the false (higher)
/// and true (lower) minima and the energy gap between them.
#[derive(Debug, Clone, PartialEq)]
pub struct VacuumReport {
    pub phi_false: f64,
    pub phi_true: f64,
    pub v_false: f64,
    pub v_true: f64,
    /// `v_false - v_true`, nonnegative by the labeling convention.
    pub gap: f64,
}

/// Taylor data of the potential about an expansion point: the base value
/// and the quadratic/cubic/quartic coefficients `V''/2!`, `V'''/3!`,
/// `V''''/4!`. The gradient contribution to the base term is supplied by
/// the caller where needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionCoeffs {
    pub base: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

impl Potential {
    pub fn phi4(lambda: f64, phi0: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "quartic coupling must be positive, got {lambda}"
            )));
        }
        if !(phi0 > 0.0) || !phi0.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "vacuum value must be positive, got {phi0}"
            )));
        }
        Ok(Potential::Phi4 { lambda, phi0 })
    }

    pub fn driven_sine_gordon(amplitude: f64, tilt: f64) -> Result<Self> {
        if !(amplitude > 0.0) || !amplitude.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "washboard amplitude must be positive, got {amplitude}"
            )));
        }
        if !(tilt >= 0.0) || !tilt.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "tilt must be nonnegative, got {tilt}"
            )));
        }
        Ok(Potential::DrivenSineGordon { amplitude, tilt, offset: 0.0 })
    }

    pub fn quadratic(curvature: f64, center: f64) -> Result<Self> {
        if !curvature.is_finite() || !center.is_finite() {
            return Err(Error::InvalidArgument("quadratic parameters must be finite".into()));
        }
        Ok(Potential::Quadratic { curvature, center })
    }

    /// Add a constant to a washboard potential (no-op spelling for other
    /// families is deliberately not provided).
    pub fn with_offset(self, extra: f64) -> Result<Self> {
        match self {
            Potential::DrivenSineGordon { amplitude, tilt, offset } => {
                Ok(Potential::DrivenSineGordon { amplitude, tilt, offset: offset + extra })
            }
            _ => Err(Error::UnsupportedFamily { op: "with_offset" }),
        }
    }

    /// V(phi).
    pub fn value(&self, phi: f64) -> f64 {
        match *self {
            Potential::Phi4 { lambda, phi0 } => {
                let d = phi * phi - phi0 * phi0;
                0.25 * lambda * d * d
            }
            Potential::DrivenSineGordon { amplitude, tilt, offset } => {
                amplitude * (1.0 - phi.cos()) + tilt * phi + offset
            }
            Potential::Quadratic { curvature, center } => {
                let d = phi - center;
                curvature * d * d
            }
            Potential::TaylorQuartic { center, coeffs } => {
                let u = phi - center;
                coeffs[0] + u * (coeffs[1] + u * (coeffs[2] + u * (coeffs[3] + u * coeffs[4])))
            }
        }
    }

    /// dV/dphi.
    pub fn d1(&self, phi: f64) -> f64 {
        match *self {
            Potential::Phi4 { lambda, phi0 } => lambda * phi * (phi * phi - phi0 * phi0),
            Potential::DrivenSineGordon { amplitude, tilt, .. } => amplitude * phi.sin() + tilt,
            Potential::Quadratic { curvature, center } => 2.0 * curvature * (phi - center),
            Potential::TaylorQuartic { center, coeffs } => {
                let u = phi - center;
                coeffs[1] + u * (2.0 * coeffs[2] + u * (3.0 * coeffs[3] + u * 4.0 * coeffs[4]))
            }
        }
    }

    /// d2V/dphi2.
    pub fn d2(&self, phi: f64) -> f64 {
        match *self {
            Potential::Phi4 { lambda, phi0 } => lambda * (3.0 * phi * phi - phi0 * phi0),
            Potential::DrivenSineGordon { amplitude, .. } => amplitude * phi.cos(),
            Potential::Quadratic { curvature, .. } => 2.0 * curvature,
            Potential::TaylorQuartic { center, coeffs } => {
                let u = phi - center;
                2.0 * coeffs[2] + u * (6.0 * coeffs[3] + u * 12.0 * coeffs[4])
            }
        }
    }

    /// d3V/dphi3.
    pub fn d3(&self, phi: f64) -> f64 {
        match *self {
            Potential::Phi4 { lambda, .. } => 6.0 * lambda * phi,
            Potential::DrivenSineGordon { amplitude, .. } => -amplitude * phi.sin(),
            Potential::Quadratic { .. } => 0.0,
            Potential::TaylorQuartic { center, coeffs } => {
                6.0 * coeffs[3] + (phi - center) * 24.0 * coeffs[4]
            }
        }
    }

    /// d4V/dphi4.
    pub fn d4(&self, phi: f64) -> f64 {
        match *self {
            Potential::Phi4 { lambda, .. } => 6.0 * lambda,
            Potential::DrivenSineGordon { amplitude, .. } => -amplitude * phi.cos(),
            Potential::Quadratic { .. } => 0.0,
            Potential::TaylorQuartic { coeffs, .. } => 24.0 * coeffs[4],
        }
    }

    /// Locate local minima of V on `[phi_lo, phi_hi]`: a uniform scan for
    /// sign changes of V' followed by bisection and Newton polish of
    /// V' = 0 to |V'| < 1e-12. Only roots with V'' > 0 are kept, sorted
    /// by phi. An empty interval is not an error.
    pub fn find_minima(
        &self,
        phi_lo: f64,
        phi_hi: f64,
        scan_points: usize,
    ) -> Result<Vec<(f64, f64)>> {
        if !(phi_lo < phi_hi) {
            return Err(Error::InvalidArgument(format!(
                "scan interval reversed or degenerate: [{phi_lo}, {phi_hi}]"
            )));
        }
        if scan_points < 16 {
            return Err(Error::InvalidArgument(format!(
                "minima scan needs at least 16 points, got {scan_points}"
            )));
        }

        let span = phi_hi - phi_lo;
        let step = span / scan_points as f64;
        let mut roots: Vec<f64> = Vec::new();
        let mut prev_x = phi_lo;
        let mut prev_d = self.d1(prev_x);
        for i in 1..=scan_points {
            let x = if i == scan_points { phi_hi } else { phi_lo + i as f64 * step };
            let d = self.d1(x);
            if prev_d == 0.0 {
                roots.push(prev_x);
            } else if prev_d * d < 0.0 {
                roots.push(self.polish_root(prev_x, x));
            }
            prev_x = x;
            prev_d = d;
        }
        if prev_d == 0.0 {
            roots.push(prev_x);
        }

        let mut minima: Vec<(f64, f64)> = Vec::new();
        for r in roots {
            if self.d1(r).abs() < 1e-12 && self.d2(r) > 0.0 {
                let duplicate = minima
                    .iter()
                    .any(|&(m, _)| (m - r).abs() < 1e-8 * span.max(1.0));
                if !duplicate {
                    minima.push((r, self.value(r)));
                }
            }
        }
        minima.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(minima)
    }

    // Bisection on V' down to machine width, then a couple of Newton steps.
    fn polish_root(&self, mut lo: f64, mut hi: f64) -> f64 {
        let mut d_lo = self.d1(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let d_mid = self.d1(mid);
            if d_mid == 0.0 {
                return mid;
            }
            if d_lo * d_mid < 0.0 {
                hi = mid;
            } else {
                lo = mid;
                d_lo = d_mid;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..4 {
            let d1 = self.d1(x);
            let d2 = self.d2(x);
            if d1 == 0.0 || d2 == 0.0 {
                break;
            }
            let next = x - d1 / d2;
            if !next.is_finite() || (next - x).abs() > hi - lo {
                break;
            }
            x = next;
        }
        x
    }

    /// Classify the vacuum structure on `[phi_lo, phi_hi]`. The higher
    /// minimum is labeled false, the lower true. Degenerate wells return
    /// a zero gap with the lower-phi minimum labeled true.
    pub fn classify_vacua(&self, phi_lo: f64, phi_hi: f64) -> Result<VacuumReport> {
        if let Potential::DrivenSineGordon { amplitude, tilt, .. } = *self {
            if tilt >= amplitude {
                return Err(Error::NoLocalMinima { tilt, amplitude });
            }
        }
        let minima = self.find_minima(phi_lo, phi_hi, 4096)?;
        if minima.len() < 2 {
            return Err(Error::NoGap);
        }
        // Lexicographic (V, phi): ties in V resolve to lower phi for the
        // true vacuum and higher phi for the false one.
        let (phi_true, v_true) = minima
            .iter()
            .copied()
            .min_by(|a, b| (a.1, a.0).partial_cmp(&(b.1, b.0)).unwrap())
            .unwrap();
        let (phi_false, v_false) = minima
            .iter()
            .copied()
            .max_by(|a, b| (a.1, a.0).partial_cmp(&(b.1, b.0)).unwrap())
            .unwrap();
        Ok(VacuumReport { phi_false, phi_true, v_false, v_true, gap: v_false - v_true })
    }

    /// Taylor coefficients of V about `phi_c`.
    pub fn quadratic_expansion(&self, phi_c: f64) -> ExpansionCoeffs {
        ExpansionCoeffs {
            base: self.value(phi_c),
            c2: self.d2(phi_c) / 2.0,
            c3: self.d3(phi_c) / 6.0,
            c4: self.d4(phi_c) / 24.0,
        }
    }

    /// Degree-4 Taylor truncation of a washboard potential about `phi_c`,
    /// returned as an explicit polynomial potential. This is the round-off
    /// that connects washboard physics to the quartic double-well
    /// machinery.
    pub fn quartic_truncation(&self, phi_c: f64) -> Result<Potential> {
        match self {
            Potential::DrivenSineGordon { .. } => Ok(Potential::TaylorQuartic {
                center: phi_c,
                coeffs: [
                    self.value(phi_c),
                    self.d1(phi_c),
                    self.d2(phi_c) / 2.0,
                    self.d3(phi_c) / 6.0,
                    self.d4(phi_c) / 24.0,
                ],
            }),
            _ => Err(Error::UnsupportedFamily { op: "quartic_truncation" }),
        }
    }
}
