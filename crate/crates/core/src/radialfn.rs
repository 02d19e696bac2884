//! Closed-form radial functions, loadable from a JSON description.
//!
//! Potentials and weights share this format:
//! `{"kind": "constant", "value": 1.0}`,
//! `{"kind": "power", "exponent": 2.0}`,
//! `{"kind": "shifted-power", "exponent": 0.8}`,
//! `{"kind": "gaussian-spike", "amplitude": 5.0, "center": 1.0, "width": 0.1}`,
//! `{"kind": "cutoff-power", "exponent": -0.5, "cutoff": 1.0}`,
//! `{"kind": "table", "r": [...], "values": [...]}`.
//!
//! Power-type kinds carry exact moment integrals ∫ f^pow s^k ds, which keeps
//! weight-constant searches accurate arbitrarily close to the integrability
//! endpoints.

use crate::error::{Error, Result};
use crate::geometry::BallSpec;
use crate::grid::RadialGrid;
use crate::profile::{
    ball_integral, power_integral, Extension, MomentSource, PrefixMoments, RadialProfile,
};
use crate::quad::gl8_panels;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RadialFn {
    /// f ≡ value
    Constant { value: f64 },
    /// f(r) = r^exponent
    Power { exponent: f64 },
    /// f(r) = (1 + r)^exponent
    ShiftedPower { exponent: f64 },
    /// f(r) = amplitude · exp(−(r − center)² / (2 width²))
    GaussianSpike {
        amplitude: f64,
        center: f64,
        width: f64,
    },
    /// f(r) = r^exponent · 1_{r < cutoff}
    CutoffPower { exponent: f64, cutoff: f64 },
    /// Piecewise-linear table; zero beyond the last node.
    Table { r: Vec<f64>, values: Vec<f64> },
}

impl RadialFn {
    pub fn from_json(text: &str) -> Result<Self> {
        let f: RadialFn = serde_json::from_str(text)?;
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RadialFn::Constant { value } => {
                if !value.is_finite() {
                    return Err(Error::Domain("constant value must be finite".into()));
                }
            }
            RadialFn::GaussianSpike {
                amplitude, width, center,
            } => {
                if !(*width > 0.0) || !amplitude.is_finite() || *center < 0.0 {
                    return Err(Error::Domain(
                        "gaussian-spike needs width > 0, finite amplitude, center >= 0".into(),
                    ));
                }
            }
            RadialFn::CutoffPower { cutoff, .. } => {
                if !(*cutoff > 0.0) {
                    return Err(Error::Domain("cutoff-power needs cutoff > 0".into()));
                }
            }
            RadialFn::Table { r, values } => {
                if r.len() != values.len() || r.len() < 2 {
                    return Err(Error::Domain(
                        "table needs matching r/values arrays of length >= 2".into(),
                    ));
                }
                if r[0] != 0.0 || r.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::Domain(
                        "table radii must start at 0 and increase strictly".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn eval(&self, r: f64) -> f64 {
        match self {
            RadialFn::Constant { value } => *value,
            RadialFn::Power { exponent } => r.powf(*exponent),
            RadialFn::ShiftedPower { exponent } => (1.0 + r).powf(*exponent),
            RadialFn::GaussianSpike {
                amplitude,
                center,
                width,
            } => {
                let z = (r - center) / width;
                amplitude * (-0.5 * z * z).exp()
            }
            RadialFn::CutoffPower { exponent, cutoff } => {
                if r < *cutoff {
                    r.powf(*exponent)
                } else {
                    0.0
                }
            }
            RadialFn::Table { r: rs, values } => {
                if r >= *rs.last().unwrap() {
                    return 0.0;
                }
                let i = rs.partition_point(|&x| x <= r).saturating_sub(1).min(rs.len() - 2);
                let t = (r - rs[i]) / (rs[i + 1] - rs[i]);
                values[i] * (1.0 - t) + values[i + 1] * t
            }
        }
    }

    /// Sample onto a grid.
    pub fn sample(&self, grid: Arc<RadialGrid>, extension: Extension) -> RadialProfile {
        RadialProfile::from_fn(grid, |r| self.eval(r), extension)
    }

    /// Moment provider for f^pow; exact for the power-type kinds.
    pub fn power_source(&self, pow: f64) -> Box<dyn MomentSource> {
        match self {
            RadialFn::Constant { value } => Box::new(AnalyticPower {
                coef: value.powf(pow),
                exponent: 0.0,
                cutoff: f64::INFINITY,
            }),
            RadialFn::Power { exponent } => Box::new(AnalyticPower {
                coef: 1.0,
                exponent: exponent * pow,
                cutoff: f64::INFINITY,
            }),
            RadialFn::CutoffPower { exponent, cutoff } => Box::new(AnalyticPower {
                coef: 1.0,
                exponent: exponent * pow,
                cutoff: *cutoff,
            }),
            RadialFn::ShiftedPower { exponent } => Box::new(AnalyticShiftedPower {
                exponent: exponent * pow,
            }),
            RadialFn::GaussianSpike { width, .. } => {
                let f = self.clone();
                Box::new(NumericMoments {
                    f: Box::new(move |r| f.eval(r).powf(pow)),
                    scale: width / 2.0,
                })
            }
            RadialFn::Table { r, values } => {
                let powered: Vec<f64> = values.iter().map(|v| v.powf(pow)).collect();
                Box::new(PrefixMoments::from_parts(r.clone(), powered, Extension::Zero))
            }
        }
    }

    /// ∫_B f(|y|)^pow dy.
    pub fn ball_integral_pow(&self, ball: &BallSpec, n: usize, pow: f64) -> f64 {
        ball_integral(self.power_source(pow).as_ref(), ball, n)
    }

    /// ∫_a^b f(s)^pow s^m ds for m ≤ 6 (norm quadratures).
    pub fn power_moment(&self, a: f64, b: f64, pow: f64, m: u32) -> f64 {
        assert!(m <= 6);
        match self {
            RadialFn::Constant { value } => value.powf(pow) * power_integral(a, b, m as f64),
            RadialFn::Power { exponent } => power_integral(a, b, exponent * pow + m as f64),
            RadialFn::CutoffPower { exponent, cutoff } => {
                power_integral(a, b.min(*cutoff), exponent * pow + m as f64)
            }
            RadialFn::ShiftedPower { exponent } => {
                shifted_power_moment(a, b, exponent * pow, m)
            }
            RadialFn::GaussianSpike { width, .. } => {
                let scale = width / 2.0;
                gl8_panels(|s| self.eval(s).powf(pow) * s.powi(m as i32), a, b, scale.min((b - a).max(1e-12)))
            }
            RadialFn::Table { .. } => {
                // Tables only appear with m ≤ 3 in ball integrals; fall back
                // to panel quadrature for the rare norm path.
                gl8_panels(|s| self.eval(s).powf(pow) * s.powi(m as i32), a, b, (b - a) / 256.0)
            }
        }
    }

    /// Strictly positive everywhere it will be averaged (weight loading gate).
    pub fn is_positive_weight(&self) -> bool {
        match self {
            RadialFn::Constant { value } => *value > 0.0,
            RadialFn::Power { .. } => true, // positive a.e.
            RadialFn::ShiftedPower { .. } => true,
            RadialFn::GaussianSpike { amplitude, .. } => *amplitude > 0.0,
            RadialFn::CutoffPower { .. } => false, // vanishes beyond the cutoff
            RadialFn::Table { values, .. } => values.iter().all(|&v| v > 0.0),
        }
    }
}

/// coef · s^exponent, zero beyond `cutoff`.
struct AnalyticPower {
    coef: f64,
    exponent: f64,
    cutoff: f64,
}

impl MomentSource for AnalyticPower {
    fn moment(&self, a: f64, b: f64, k: u32) -> f64 {
        self.coef * power_integral(a, b.min(self.cutoff), self.exponent + k as f64)
    }
}

/// (1 + s)^exponent via the binomial expansion of s^k = ((1+s) − 1)^k.
struct AnalyticShiftedPower {
    exponent: f64,
}

impl MomentSource for AnalyticShiftedPower {
    fn moment(&self, a: f64, b: f64, k: u32) -> f64 {
        shifted_power_moment(a, b, self.exponent, k)
    }
}

/// ∫_a^b (1+s)^e s^k ds, exact for integer k ≤ 6.
fn shifted_power_moment(a: f64, b: f64, e: f64, k: u32) -> f64 {
    if b <= a {
        return 0.0;
    }
    const BINOM: [[f64; 7]; 7] = [
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 2.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 3.0, 3.0, 1.0, 0.0, 0.0, 0.0],
        [1.0, 4.0, 6.0, 4.0, 1.0, 0.0, 0.0],
        [1.0, 5.0, 10.0, 10.0, 5.0, 1.0, 0.0],
        [1.0, 6.0, 15.0, 20.0, 15.0, 6.0, 1.0],
    ];
    let mut acc = 0.0;
    for j in 0..=k {
        let sign = if (k - j) % 2 == 0 { 1.0 } else { -1.0 };
        let c = BINOM[k as usize][j as usize] * sign;
        let p = e + j as f64;
        let term = if (p + 1.0).abs() < 1e-12 {
            ((1.0 + b) / (1.0 + a)).ln()
        } else {
            ((1.0 + b).powf(p + 1.0) - (1.0 + a).powf(p + 1.0)) / (p + 1.0)
        };
        acc += c * term;
    }
    acc
}

/// Panel-quadrature moments for smooth kinds without closed forms.
struct NumericMoments {
    f: Box<dyn Fn(f64) -> f64 + Sync + Send>,
    scale: f64,
}

impl MomentSource for NumericMoments {
    fn moment(&self, a: f64, b: f64, k: u32) -> f64 {
        if b <= a {
            return 0.0;
        }
        gl8_panels(|s| (self.f)(s) * s.powi(k as i32), a, b, self.scale)
    }
}
