//! Numerical laboratory for weighted Littlewood–Paley theory in the
//! Schrödinger setting.
//!
//! The crate implements, for radial data in dimension n ∈ {1, 3}:
//!
//! - the critical-radius function ρ of a nonnegative potential, its
//!   comparability constants, and greedy critical-ball covers;
//! - classical, adapted (A_p^{ρ,θ}) and local (A_p^{ρ,loc}) Muckenhoupt
//!   weight constants with reproducible ball-family searches;
//! - Hardy–Littlewood and adapted maximal operators, heat radial and
//!   non-tangential maximal functions, and their ρ-localized variants;
//! - the heat semigroup e^{−tL} of L = −Δ + V by radial eigendecomposition,
//!   with empirical Gaussian kernel-bound fits;
//! - Littlewood–Paley square functions g_L, S_{L,α}, g*_{L,λ}, the
//!   classical ψ-kernel counterparts, intrinsic square functions with an
//!   LP-certified kernel supremum, and localized variants;
//! - the Rubio de Francia iteration and extrapolation exponent probes;
//! - a scenario runner that scans weight families, measures operator-norm
//!   growth against weight constants, and fits log–log slopes.
//!
//! See the `examples/` directory for one runnable tour per capability and
//! the `lab` binary for the scenario CLI.

pub mod cone;
pub mod error;
pub mod extrapolate;
pub mod fit;
pub mod geometry;
pub mod grid;
pub mod intrinsic;
pub mod lab;
pub mod maximal;
pub mod norms;
pub mod panel;
pub mod potential;
pub mod profile;
pub mod quad;
pub mod radialfn;
pub mod search;
pub mod semigroup;
pub mod squarefn;
pub mod weights;

pub use error::{Error, Result};
