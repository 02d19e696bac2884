//! Ball geometry under radial symmetry in dimension n ∈ {1, 3}.
//!
//! Everything radial reduces to 1-D integrals against the slice area
//! A(s) = |{|y| = s} ∩ B(x, R)|, which for n = 3 is a spherical-cap area
//! (a cubic polynomial in s on the partial-overlap range) and for n = 1
//! counts the points {-s, s} inside an interval.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Surface measure of the unit sphere: 2 for n = 1, 4π for n = 3.
pub fn omega(n: usize) -> f64 {
    match n {
        1 => 2.0,
        3 => 4.0 * std::f64::consts::PI,
        _ => panic!("unsupported dimension {n}"),
    }
}

/// Volume of a ball of radius `r` in dimension `n`.
pub fn ball_volume(n: usize, r: f64) -> f64 {
    omega(n) * r.powi(n as i32) / n as f64
}

/// A ball `B(x, R)` identified by the distance of its center from the
/// origin; by radial symmetry only `|x|` matters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    /// Distance of the ball center from the origin (d ≥ 0).
    pub center_distance: f64,
    /// Ball radius (R > 0).
    pub radius: f64,
}

impl BallSpec {
    pub fn new(center_distance: f64, radius: f64) -> Result<Self> {
        if !(center_distance >= 0.0) {
            return Err(Error::Domain(format!(
                "ball center distance must be >= 0, got {center_distance}"
            )));
        }
        if !(radius > 0.0) {
            return Err(Error::Domain(format!(
                "ball radius must be > 0, got {radius}"
            )));
        }
        Ok(Self {
            center_distance,
            radius,
        })
    }

    pub fn volume(&self, n: usize) -> f64 {
        ball_volume(n, self.radius)
    }

    /// The dilate λB = B(x, λR).
    pub fn dilate(&self, lambda: f64) -> Self {
        Self {
            center_distance: self.center_distance,
            radius: self.radius * lambda,
        }
    }

    /// Radial support of the slice area: s outside [lo, hi] contributes 0.
    pub fn slice_support(&self) -> (f64, f64) {
        let lo = (self.center_distance - self.radius).max(0.0);
        let hi = self.center_distance + self.radius;
        (lo, hi)
    }

    /// Whether the whole sphere {|y| = s} lies inside the ball.
    pub fn contains_sphere(&self, s: f64) -> bool {
        s + self.center_distance < self.radius
    }
}

/// (n−1)-measure of the sphere {|y| = s} inside the ball {|y − x| < R}
/// with |x| = d.
///
/// For n = 3 this is the spherical-cap area 2πs²(1 − cosθ*) with
/// cosθ* = clamp((s² + d² − R²)/(2sd), −1, 1); the clamp absorbs the
/// full-sphere and disjoint cases. For n = 1 it counts how many of the
/// two points {−s, s} fall inside the interval (d − R, d + R).
pub fn slice_area(d: f64, radius: f64, s: f64, n: usize) -> Result<f64> {
    if d < 0.0 || s < 0.0 {
        return Err(Error::Domain(format!(
            "slice_area: d and s must be >= 0, got d={d}, s={s}"
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::Domain(format!(
            "slice_area: R must be > 0, got {radius}"
        )));
    }
    Ok(match n {
        1 => {
            let mut count = 0.0;
            if (s - d).abs() < radius {
                count += 1.0;
            }
            if s + d < radius {
                count += 1.0;
            }
            count
        }
        3 => {
            if s == 0.0 {
                return Ok(0.0);
            }
            if d == 0.0 {
                return Ok(if s < radius {
                    4.0 * std::f64::consts::PI * s * s
                } else {
                    0.0
                });
            }
            let cos_star =
                ((s * s + d * d - radius * radius) / (2.0 * s * d)).clamp(-1.0, 1.0);
            2.0 * std::f64::consts::PI * s * s * (1.0 - cos_star)
        }
        _ => {
            return Err(Error::Domain(format!(
                "slice_area: only n in {{1, 3}} supported, got {n}"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn full_sphere_case() {
        // d=0, R=2, s=1 in n=3: the sphere is contained, area 4π.
        assert_relative_eq!(slice_area(0.0, 2.0, 1.0, 3).unwrap(), 4.0 * PI);
        assert_relative_eq!(
            slice_area(0.5, 2.0, 1.0, 3).unwrap(),
            4.0 * PI,
            max_relative = 1e-12
        );
    }

    #[test]
    fn disjoint_case() {
        assert_eq!(slice_area(5.0, 1.0, 1.0, 3).unwrap(), 0.0);
        assert_eq!(slice_area(5.0, 1.0, 1.0, 1).unwrap(), 0.0);
    }

    #[test]
    fn negative_inputs_rejected() {
        assert!(slice_area(-1.0, 1.0, 1.0, 3).is_err());
        assert!(slice_area(1.0, 1.0, -1.0, 3).is_err());
        assert!(slice_area(1.0, 0.0, 1.0, 3).is_err());
    }

    /// Monte Carlo oracle: uniform points on the sphere of radius s, the
    /// fraction inside the ball times 4πs² must match the cap formula.
    fn mc_slice_area(d: f64, radius: f64, s: f64, samples: usize, seed: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut inside = 0usize;
        for _ in 0..samples {
            // Uniform direction: rejection sample the unit ball, normalize.
            let g = loop {
                let v = [
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ];
                let norm2: f64 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
                if norm2 > 1e-12 && norm2 <= 1.0 {
                    let norm = norm2.sqrt();
                    break [v[0] / norm, v[1] / norm, v[2] / norm];
                }
            };
            let y = [g[0] * s, g[1] * s, g[2] * s];
            let dist2 = (y[0] - d) * (y[0] - d) + y[1] * y[1] + y[2] * y[2];
            if dist2 < radius * radius {
                inside += 1;
            }
        }
        4.0 * PI * s * s * inside as f64 / samples as f64
    }

    #[test]
    fn half_open_cap_matches_monte_carlo() {
        // d=1, R=1, s=1: cosθ* = 1/2, area = 2π(1 − 1/2) = π.
        let exact = slice_area(1.0, 1.0, 1.0, 3).unwrap();
        assert_relative_eq!(exact, PI, max_relative = 1e-12);
        let mc = mc_slice_area(1.0, 1.0, 1.0, 2_000_000, 7);
        assert_relative_eq!(exact, mc, max_relative = 5e-3);
    }

    #[test]
    fn generic_cap_matches_monte_carlo() {
        for (i, &(d, radius, s)) in [(0.7, 1.3, 1.2), (2.0, 0.9, 2.5), (1.5, 2.0, 0.8)]
            .iter()
            .enumerate()
        {
            let exact = slice_area(d, radius, s, 3).unwrap();
            let mc = mc_slice_area(d, radius, s, 2_000_000, 100 + i as u64);
            if exact == 0.0 {
                assert_eq!(mc, 0.0);
            } else {
                assert_relative_eq!(exact, mc, max_relative = 1e-2);
            }
        }
    }

    #[test]
    fn n1_point_count() {
        // Interval (d-R, d+R) = (0,2) around d=1: point +1 inside, -1 not.
        assert_eq!(slice_area(1.0, 1.0, 1.0, 1).unwrap(), 1.0);
        // Interval (-1, 3) is open: -1 sits on the boundary, still 1 point.
        assert_eq!(slice_area(1.0, 2.0, 1.0, 1).unwrap(), 1.0);
        // Interval (-1.5, 3.5): both points ±1 inside.
        assert_eq!(slice_area(1.0, 2.5, 1.0, 1).unwrap(), 2.0);
    }
}
