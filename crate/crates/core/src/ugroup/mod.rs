//! Universal groups of `S_{G,E}`: presentations, concrete targets (free
//! groups and `BS(1, n)`), and the maps `σ` into them.

pub mod bs;
pub mod claim;
pub mod free;
pub mod presentation;
pub mod sigma;

pub use bs::{BaumslagSolitar, BsElement};
pub use free::{alpha_beta_shape, FreeGroup};
pub use presentation::{emit_presentation, Presentation};
pub use sigma::{check_idempotent_pure, check_prehomomorphism, free_sigma, odometer_sigma, Sigma};
