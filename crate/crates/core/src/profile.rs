//! Radial profiles: sampled radial functions with tail extensions, exact
//! piecewise-linear moment integrals, and ball integrals via slice
//! geometry.
//!
//! Every ball integral in the laboratory reduces to weighted moments
//! ∫ h(s) s^k ds (k ≤ 3): for n = 3 the slice area of a ball B(x, R) with
//! d = |x| is 4πs² where the sphere is swallowed whole and the cubic
//! 2πs² − (π/d)(s³ + (d² − R²)s) on the partial-overlap range, so the
//! integral of h over the ball is an exact combination of moments.

use crate::error::{Error, Result};
use crate::geometry::BallSpec;
use crate::grid::RadialGrid;
use std::sync::Arc;

/// Behaviour of a profile beyond `r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extension {
    /// Identically zero beyond the grid.
    Zero,
    /// Frozen at the last sample value.
    ConstantTail,
    /// Last value times (r/r_max)^exponent.
    PowerTail { exponent: f64 },
}

/// Samples of a radial function on a shared radial grid.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    grid: Arc<RadialGrid>,
    values: Vec<f64>,
    extension: Extension,
}

impl RadialProfile {
    pub fn new(grid: Arc<RadialGrid>, values: Vec<f64>, extension: Extension) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Domain(format!(
                "profile has {} samples for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self {
            grid,
            values,
            extension,
        })
    }

    pub fn from_fn<F: Fn(f64) -> f64>(grid: Arc<RadialGrid>, f: F, extension: Extension) -> Self {
        let values = grid.nodes().iter().map(|&r| f(r)).collect();
        Self {
            grid,
            values,
            extension,
        }
    }

    pub fn zeros(grid: Arc<RadialGrid>) -> Self {
        let values = vec![0.0; grid.len()];
        Self {
            grid,
            values,
            extension: Extension::Zero,
        }
    }

    pub fn grid(&self) -> &Arc<RadialGrid> {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    /// Linear interpolation on the grid, extension policy beyond r_max.
    pub fn eval(&self, r: f64) -> f64 {
        let nodes = self.grid.nodes();
        let r_max = self.grid.r_max();
        if r >= r_max {
            let last = *self.values.last().unwrap();
            return match self.extension {
                Extension::Zero => {
                    if r == r_max {
                        last
                    } else {
                        0.0
                    }
                }
                Extension::ConstantTail => last,
                Extension::PowerTail { exponent } => last * (r / r_max).powf(exponent),
            };
        }
        if r <= 0.0 {
            return self.values[0];
        }
        let i = self.grid.interval_of(r);
        let (a, b) = (nodes[i], nodes[i + 1]);
        let t = (r - a) / (b - a);
        self.values[i] * (1.0 - t) + self.values[i + 1] * t
    }

    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> Self {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
            extension: self.extension,
        }
    }

    pub fn zip_with<F: Fn(f64, f64) -> f64>(&self, other: &Self, f: F) -> Self {
        assert!(Arc::ptr_eq(&self.grid, &other.grid), "grid mismatch");
        Self {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            extension: self.extension,
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|v| c * v)
    }

    /// Exact prefix moments of the PL interpolant (k = 0..=3).
    pub fn moments(&self) -> PrefixMoments {
        PrefixMoments::new(self)
    }

    /// ∫_B h(|y|) dy over a ball, exact for the PL interpolant.
    pub fn integrate_ball(&self, ball: &BallSpec) -> f64 {
        ball_integral(&self.moments(), ball, self.grid.dim())
    }

    /// Discrete L² norm against the radial measure ω r^{n−1} dr.
    pub fn l2_norm(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|v| v * v).collect();
        (self.grid.surface_constant() * self.grid.integrate(&sq)).sqrt()
    }
}

/// Exact moments ∫ h(s) s^k ds of radial data, k = 0..=3.
pub trait MomentSource: Sync + Send {
    fn moment(&self, a: f64, b: f64, k: u32) -> f64;
}

/// Prefix sums of PL moments of a profile, O(log K) range queries.
pub struct PrefixMoments {
    nodes: Vec<f64>,
    values: Vec<f64>,
    /// prefix[k][i] = ∫_0^{r_i} h s^k ds
    prefix: [Vec<f64>; 4],
    extension: Extension,
    r_max: f64,
}

impl PrefixMoments {
    pub fn new(profile: &RadialProfile) -> Self {
        Self::from_parts(
            profile.grid.nodes().to_vec(),
            profile.values.clone(),
            profile.extension,
        )
    }

    pub fn from_parts(nodes: Vec<f64>, values: Vec<f64>, extension: Extension) -> Self {
        let len = nodes.len();
        let mut prefix: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; len]);
        for i in 0..len - 1 {
            let seg: [f64; 4] =
                std::array::from_fn(|k| {
                    pl_segment_moment(
                        nodes[i],
                        nodes[i + 1],
                        values[i],
                        values[i + 1],
                        nodes[i],
                        nodes[i + 1],
                        k as u32,
                    )
                });
            for k in 0..4 {
                prefix[k][i + 1] = prefix[k][i] + seg[k];
            }
        }
        let r_max = *nodes.last().unwrap();
        Self {
            nodes,
            values,
            prefix,
            extension,
            r_max,
        }
    }

    fn interval_of(&self, r: f64) -> usize {
        let k = self.nodes.partition_point(|&x| x <= r);
        k.saturating_sub(1).min(self.nodes.len() - 2)
    }

    /// ∫_0^{x} h s^k ds for x within the grid.
    fn prefix_at(&self, x: f64, k: u32) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let x = x.min(self.r_max);
        let i = self.interval_of(x);
        self.prefix[k as usize][i]
            + pl_segment_moment(
                self.nodes[i],
                self.nodes[i + 1],
                self.values[i],
                self.values[i + 1],
                self.nodes[i],
                x,
                k,
            )
    }

    fn tail_moment(&self, a: f64, b: f64, k: u32) -> f64 {
        if b <= a {
            return 0.0;
        }
        let last = *self.values.last().unwrap();
        match self.extension {
            Extension::Zero => 0.0,
            Extension::ConstantTail => last * power_integral(a, b, k as f64),
            Extension::PowerTail { exponent } => {
                last * self.r_max.powf(-exponent) * power_integral(a, b, k as f64 + exponent)
            }
        }
    }
}

impl MomentSource for PrefixMoments {
    fn moment(&self, a: f64, b: f64, k: u32) -> f64 {
        if b <= a {
            return 0.0;
        }
        let a = a.max(0.0);
        let inner = self.prefix_at(b, k) - self.prefix_at(a, k);
        inner + self.tail_moment(a.max(self.r_max), b, k)
    }
}

/// ∫_a^b s^e ds with the log case at e = −1; divergent when the range
/// touches 0 and e ≤ −1.
pub fn power_integral(a: f64, b: f64, e: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    if (e + 1.0).abs() < 1e-12 {
        if a <= 0.0 {
            return f64::INFINITY;
        }
        return (b / a).ln();
    }
    let p = e + 1.0;
    if a <= 0.0 {
        if p <= 0.0 {
            return f64::INFINITY;
        }
        return b.powf(p) / p;
    }
    (b.powf(p) - a.powf(p)) / p
}

/// ∫_x0^x1 of the linear chord through (a, va)–(b, vb), times s^k.
fn pl_segment_moment(a: f64, b: f64, va: f64, vb: f64, x0: f64, x1: f64, k: u32) -> f64 {
    if x1 <= x0 {
        return 0.0;
    }
    let slope = (vb - va) / (b - a);
    let c0 = va - slope * a; // h(s) = c0 + slope·s
    let k1 = k as i32 + 1;
    let k2 = k as i32 + 2;
    let int1 = (x1.powi(k1) - x0.powi(k1)) / k1 as f64;
    let int2 = (x1.powi(k2) - x0.powi(k2)) / k2 as f64;
    c0 * int1 + slope * int2
}

/// ∫_B h(|y|) dy for a moment source in dimension n.
pub fn ball_integral(src: &dyn MomentSource, ball: &BallSpec, n: usize) -> f64 {
    let d = ball.center_distance;
    let radius = ball.radius;
    match n {
        1 => {
            // points ±s inside (d−R, d+R)
            src.moment((d - radius).max(0.0), d + radius, 0)
                + src.moment(0.0, (radius - d).max(0.0), 0)
        }
        3 => {
            let pi = std::f64::consts::PI;
            // Near-concentric balls: the cap formula divides by d.
            if d <= 1e-12 * radius {
                return 4.0 * pi * src.moment(0.0, radius, 2);
            }
            let lo = (d - radius).abs();
            let hi = d + radius;
            let mut acc = 0.0;
            if radius > d {
                acc += 4.0 * pi * src.moment(0.0, radius - d, 2);
            }
            let m1 = src.moment(lo, hi, 1);
            let m2 = src.moment(lo, hi, 2);
            let m3 = src.moment(lo, hi, 3);
            acc += 2.0 * pi * m2 - (pi / d) * (m3 + (d * d - radius * radius) * m1);
            acc
        }
        _ => panic!("unsupported dimension {n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ball_volume, slice_area};
    use crate::quad::gl8_panels;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn grid3() -> Arc<RadialGrid> {
        RadialGrid::stretched(3, 10.0, 800, 8.0).unwrap()
    }

    #[test]
    fn constant_over_unit_ball() {
        let one = RadialProfile::from_fn(grid3(), |_| 1.0, Extension::ConstantTail);
        let ball = BallSpec::new(0.0, 1.0).unwrap();
        assert_relative_eq!(
            one.integrate_ball(&ball),
            ball_volume(3, 1.0),
            max_relative = 1e-8
        );
    }

    #[test]
    fn indicator_misses_far_ball() {
        let grid = grid3();
        let ind = RadialProfile::from_fn(
            grid,
            |r| if r <= 1.0 { 1.0 } else { 0.0 },
            Extension::Zero,
        );
        let ball = BallSpec::new(3.0, 1.0).unwrap();
        // PL smears the jump across one interval; the far ball sees none of it.
        assert_relative_eq!(ind.integrate_ball(&ball), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn r_squared_off_center_ball() {
        // ∫_{B(x,R)} |y|² dy = |B|(d² + 3R²/5), here d=2, R=0.7.
        let sq = RadialProfile::from_fn(grid3(), |r| r * r, Extension::PowerTail { exponent: 2.0 });
        let ball = BallSpec::new(2.0, 0.7).unwrap();
        let exact = ball_volume(3, 0.7) * (4.0 + 3.0 * 0.49 / 5.0);
        assert_relative_eq!(sq.integrate_ball(&ball), exact, max_relative = 1e-6);
    }

    #[test]
    fn r_squared_off_center_matches_monte_carlo() {
        let sq = RadialProfile::from_fn(grid3(), |r| r * r, Extension::PowerTail { exponent: 2.0 });
        let ball = BallSpec::new(2.0, 0.7).unwrap();
        // Monte Carlo over the ball, ≥ 1e7 samples.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let samples = 10_000_000usize;
        let mut acc = 0.0;
        let mut taken = 0usize;
        while taken < samples {
            let v = [
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
                rng.gen_range(-1.0..1.0f64),
            ];
            let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            if n2 > 1.0 {
                continue;
            }
            taken += 1;
            let y = [2.0 + 0.7 * v[0], 0.7 * v[1], 0.7 * v[2]];
            acc += y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
        }
        let mc = acc / samples as f64 * ball_volume(3, 0.7);
        assert_relative_eq!(sq.integrate_ball(&ball), mc, max_relative = 1e-3);
    }

    #[test]
    fn matches_slice_area_quadrature() {
        // Independent route: ∫ h(s)·A(s) ds by adaptive panels.
        let grid = grid3();
        let h = RadialProfile::from_fn(grid, |r| (1.0 + r).recip(), Extension::Zero);
        for &(d, radius) in &[(0.0, 1.5), (1.0, 1.0), (2.5, 0.8), (0.3, 4.0)] {
            let ball = BallSpec::new(d, radius).unwrap();
            let (lo, hi) = ball.slice_support();
            let hi = hi.min(h.grid().r_max());
            let by_slices = gl8_panels(
                |s| h.eval(s) * slice_area(d, radius, s, 3).unwrap(),
                lo.max(0.0),
                hi,
                1e-3,
            ) + if d < radius {
                gl8_panels(
                    |s| {
                        h.eval(s) * slice_area(d, radius, s, 3).unwrap()
                    },
                    0.0,
                    lo.max(0.0),
                    1e-3,
                )
            } else {
                0.0
            };
            assert_relative_eq!(h.integrate_ball(&ball), by_slices, max_relative = 1e-5);
        }
    }

    #[test]
    fn concentric_matches_radial_quadrature() {
        let grid = grid3();
        let h = RadialProfile::from_fn(grid.clone(), |r| (-r).exp(), Extension::Zero);
        let radius = 4.0;
        let ball = BallSpec::new(0.0, radius).unwrap();
        // ω ∫_0^R h s² ds on the same PL data
        let direct = 4.0 * std::f64::consts::PI * h.moments().moment(0.0, radius, 2);
        assert_relative_eq!(h.integrate_ball(&ball), direct, max_relative = 1e-10);
    }

    #[test]
    fn monotone_in_integrand() {
        let grid = grid3();
        let h1 = RadialProfile::from_fn(grid.clone(), |r| (1.0 + r).recip(), Extension::Zero);
        let h2 = RadialProfile::from_fn(grid, |r| (1.0 + r).recip() + 0.1, Extension::Zero);
        for &(d, radius) in &[(0.0, 2.0), (1.5, 0.5), (4.0, 3.0)] {
            let ball = BallSpec::new(d, radius).unwrap();
            assert!(h1.integrate_ball(&ball) <= h2.integrate_ball(&ball) + 1e-12);
        }
    }

    #[test]
    fn extension_tails() {
        let grid = RadialGrid::stretched(3, 2.0, 128, 4.0).unwrap();
        let c = RadialProfile::from_fn(grid.clone(), |_| 3.0, Extension::ConstantTail);
        // Ball of radius 4 at the origin sees the constant tail exactly.
        let ball = BallSpec::new(0.0, 4.0).unwrap();
        assert_relative_eq!(
            c.integrate_ball(&ball),
            3.0 * ball_volume(3, 4.0),
            max_relative = 1e-10
        );
        let z = RadialProfile::from_fn(grid, |_| 3.0, Extension::Zero);
        assert_relative_eq!(
            z.integrate_ball(&ball),
            3.0 * ball_volume(3, 2.0),
            max_relative = 1e-10
        );
    }

    #[test]
    fn slice_area_total_mass() {
        // ∫ A(s) ds = |B| for assorted (d, R) in both dimensions.
        for n in [1usize, 3] {
            for &(d, radius) in &[(0.0, 1.0), (0.5, 2.0), (3.0, 0.4), (1.0, 1.0)] {
                let total = gl8_panels(
                    |s| slice_area(d, radius, s, n).unwrap(),
                    0.0,
                    d + radius,
                    (radius / 64.0).min(0.05),
                );
                assert_relative_eq!(total, ball_volume(n, radius), max_relative = 1e-8);
            }
        }
    }
}
