//! Exact 1-planarity at desk scale, k-immersion certificates, the graph
//! families built around minimal non-1-planar and planar-non-properly-1-planar
//! graphs, their structural condition checkers, and the 3-coloring reduction
//! together with witness immersions.

pub mod canon;
pub mod embedding;
pub mod error;
pub mod families;
pub mod flow;
pub mod graph;
pub mod immersion;
pub mod io;
pub mod planarity;
pub mod pn;
pub mod reduction;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
