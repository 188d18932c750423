//! Partial dynamics on the infinite-path space: clopen sets, prefix-rewrite
//! maps, partial actions, and the actions attached to `S_{G,E}`.

pub mod clopen;
pub mod odometer;
pub mod pmap;
pub mod quigg;
pub mod table;
pub mod universal;

pub use clopen::ClopenSet;
pub use odometer::{lambda_power, odometer_action, NotInImage, OdometerMap};
pub use pmap::{PartialMap, Piece};
pub use quigg::{
    exhausting_surjectivity_witness, induced_action, induced_table, quigg_raeburn, InducedMap,
};
pub use table::{axioms_partial_action, PartialActionTable, PartialActionVerdict};
pub use universal::{universal_action, universal_action_with, Conflict, GluedMap};
