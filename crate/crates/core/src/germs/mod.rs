//! Transformation groupoids and groupoids of germs, with sampled checks of
//! the maps between them.

pub mod dynamics;
pub mod iso;
pub mod sgerm;

pub use dynamics::{
    germ_compose, germ_inverse, groupoid_axioms, Germ, OdometerDynamics, PartialDynamics,
    PrefixDynamics,
};
pub use iso::{germ_iso_check, phi_iso_check, IsoReport, SampleConfig};
pub use sgerm::{sgerm_compose, sgerm_equal, GermEquality, SGerm};
