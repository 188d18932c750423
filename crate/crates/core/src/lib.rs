//! Self-similar graph actions and the combinatorics around them: the
//! inverse semigroup `S_{G,E}`, its universal group, and the partial
//! dynamics on the infinite-path space.

pub mod action;
pub mod exec;
pub mod fixtures;
pub mod germs;
pub mod graph;
pub mod isg;
pub mod paction;
pub mod point;
pub mod ugroup;

pub use action::{Group, SelfSimilarAction};
pub use exec::Exec;
pub use graph::{Edge, Graph, Path, Vertex};
pub use point::BoundaryPoint;
