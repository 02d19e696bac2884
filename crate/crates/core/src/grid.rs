//! Radial and time grids.
//!
//! The radial grid carries the ambient dimension n ∈ {1, 3} and quadrature
//! weights that integrate piecewise-linear node data exactly against the
//! radial measure r^{n−1} dr. Nodes are stretched geometrically: fine near
//! the origin, coarse towards `r_max`, because heat-semigroup and
//! square-function integrands concentrate at small scales.

use crate::error::{Error, Result};
use crate::geometry::omega;
use std::sync::Arc;

/// Radial quadrature grid with r_0 = 0 < r_1 < … < r_{K−1} = r_max.
#[derive(Debug, Clone)]
pub struct RadialGrid {
    n: usize,
    nodes: Vec<f64>,
    /// Weights w_i with Σ w_i h(r_i) = ∫_0^{r_max} h(r) r^{n−1} dr for
    /// piecewise-linear h.
    weights: Vec<f64>,
}

impl RadialGrid {
    /// Geometrically stretched grid. `stretch` controls clustering near 0:
    /// nodes are r_max·sinh(a·i/(K−1))/sinh(a). `stretch = 0` degenerates
    /// to uniform spacing.
    pub fn stretched(n: usize, r_max: f64, len: usize, stretch: f64) -> Result<Arc<Self>> {
        if n != 1 && n != 3 {
            return Err(Error::Domain(format!("dimension must be 1 or 3, got {n}")));
        }
        if !(r_max > 0.0) || len < 8 {
            return Err(Error::Domain(
                "grid needs r_max > 0 and at least 8 nodes".into(),
            ));
        }
        let m = (len - 1) as f64;
        let nodes: Vec<f64> = (0..len)
            .map(|i| {
                let s = i as f64 / m;
                if stretch.abs() < 1e-12 {
                    r_max * s
                } else {
                    r_max * (stretch * s).sinh() / stretch.sinh()
                }
            })
            .collect();
        Ok(Arc::new(Self::from_nodes(n, nodes)?))
    }

    /// Default laboratory grid: r_max = 20, K = 2048, stretch 10.
    pub fn default_lab(n: usize) -> Arc<Self> {
        Self::stretched(n, 20.0, 2048, 10.0).expect("default grid parameters are valid")
    }

    /// Build from explicit nodes (must start at 0 and increase strictly).
    pub fn from_nodes(n: usize, nodes: Vec<f64>) -> Result<Self> {
        if nodes.first() != Some(&0.0) {
            return Err(Error::Domain("radial grid must start at r = 0".into()));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain(
                "radial grid nodes must be strictly increasing".into(),
            ));
        }
        let weights = pl_weights(n, &nodes);
        Ok(Self { n, nodes, weights })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn r_max(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn surface_constant(&self) -> f64 {
        omega(self.n)
    }

    /// Index i with r ∈ [r_i, r_{i+1}); clamps to the last interval.
    pub fn interval_of(&self, r: f64) -> usize {
        let k = self.nodes.partition_point(|&x| x <= r);
        k.saturating_sub(1).min(self.nodes.len() - 2)
    }

    /// ∫_0^{r_max} h(r) r^{n−1} dr for node data h (piecewise linear).
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.nodes.len());
        values
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| v * w)
            .sum()
    }
}

/// Per-node weights for exact PL integration against r^{n−1} dr.
fn pl_weights(n: usize, nodes: &[f64]) -> Vec<f64> {
    let mut w = vec![0.0; nodes.len()];
    for i in 0..nodes.len() - 1 {
        let (a, b) = (nodes[i], nodes[i + 1]);
        let dl = b - a;
        match n {
            1 => {
                w[i] += dl / 2.0;
                w[i + 1] += dl / 2.0;
            }
            3 => {
                // ∫_a^b (b−r)/Δ · r² dr and ∫_a^b (r−a)/Δ · r² dr
                let i3 = (b * b * b - a * a * a) / 3.0;
                let i4 = (b * b * b * b - a * a * a * a) / 4.0;
                w[i] += (b * i3 - i4) / dl;
                w[i + 1] += (i4 - a * i3) / dl;
            }
            _ => unreachable!(),
        }
    }
    w
}

/// Logarithmically spaced time grid with weights for ∫ (·) dt/t.
#[derive(Debug, Clone)]
pub struct TimeGrid {
    nodes: Vec<f64>,
    /// Trapezoid weights in log t: Σ w_j f(t_j) ≈ ∫ f dt/t.
    weights: Vec<f64>,
}

impl TimeGrid {
    pub fn logarithmic(t_min: f64, t_max: f64, len: usize) -> Result<Arc<Self>> {
        if !(t_min > 0.0) || !(t_max > t_min) || len < 4 {
            return Err(Error::Domain(
                "time grid needs 0 < t_min < t_max and at least 4 nodes".into(),
            ));
        }
        let log_ratio = (t_max / t_min).ln();
        let m = (len - 1) as f64;
        let nodes: Vec<f64> = (0..len)
            .map(|j| t_min * (log_ratio * j as f64 / m).exp())
            .collect();
        let dl = log_ratio / m;
        let mut weights = vec![dl; len];
        weights[0] = dl / 2.0;
        weights[len - 1] = dl / 2.0;
        Ok(Arc::new(Self { nodes, weights }))
    }

    /// Default laboratory time grid: 256 nodes over [1e−3, 1e3].
    pub fn default_lab() -> Arc<Self> {
        Self::logarithmic(1e-3, 1e3, 256).expect("default time grid parameters are valid")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn t_min(&self) -> f64 {
        self.nodes[0]
    }

    pub fn t_max(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫ f dt/t over the whole grid for node data f.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.nodes.len());
        values
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| v * w)
            .sum()
    }

    /// ∫_{t_lo}^{t_hi} f dt/t, with f piecewise linear in log t and the
    /// range clipped to the grid.
    pub fn integrate_range(&self, values: &[f64], t_lo: f64, t_hi: f64) -> f64 {
        assert_eq!(values.len(), self.nodes.len());
        let lo = t_lo.max(self.t_min());
        let hi = t_hi.min(self.t_max());
        if hi <= lo {
            return 0.0;
        }
        let mut acc = 0.0;
        for j in 0..self.nodes.len() - 1 {
            let (ta, tb) = (self.nodes[j], self.nodes[j + 1]);
            if tb <= lo || ta >= hi {
                continue;
            }
            let (la, lb) = (ta.ln(), tb.ln());
            let ca = lo.max(ta).ln();
            let cb = hi.min(tb).ln();
            // Linear in log t between the nodes.
            let va = values[j] + (values[j + 1] - values[j]) * (ca - la) / (lb - la);
            let vb = values[j] + (values[j + 1] - values[j]) * (cb - la) / (lb - la);
            acc += 0.5 * (va + vb) * (cb - ca);
        }
        acc
    }
}
