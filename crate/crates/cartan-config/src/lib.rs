//! Cartan data, scalar parameters, and weight arithmetic.
//!
//! Everything in the engine is parameterized by a symmetrizable generalized
//! Cartan matrix together with a set of scalar parameters: units `t_ij` and
//! correction scalars `s_ij^{pq}`. This crate parses, validates, and serves
//! that data, plus the weight-lattice bookkeeping (a weight enters the
//! calculus only through its pairings `⟨h_i, λ⟩`, so weights are represented
//! by their pairing vector with an optional opaque tag).
//!
//! The ground ring is fixed to the exact rationals; no floating point is used
//! anywhere in the workspace.

mod config;
mod datum;
mod params;
mod presets;
mod rat;
mod weight;

pub use config::{load_config, render_config, ConfigError};
pub use datum::CartanDatum;
pub use params::{primed_params, ParamSet};
pub use presets::{a1, a1xa1, a2, b2, random_homogeneous_params, standard_params, test_data};
pub use rat::{rat, rat_from_str, rat_int, rat_is_negative, rat_to_string, Rat};
pub use weight::{shift, Weight};

/// Index into a `CartanDatum`'s ordered index set.
pub type Idx = usize;
