//! Generators for the graph families built around minimal non-1-planar and
//! planar non-properly-1-planar graphs, with role metadata and companion
//! certificates.

pub mod chain_graph;
pub mod chains;
pub mod links;
pub mod medial;
pub mod s_m;
pub mod u_graph;

pub use chain_graph::{gen_chain_graph, immersions_of_deleted_edge, ChainGraph, ChainSpec};
pub use chains::{gen_chain, Chain, ChainInfo, ChainKind};
pub use links::{gen_link, Link, LinkKind};
pub use medial::{gen_g_n, gen_h_n, gen_medial_extension, DiagonalChoice, MedialExtension};
pub use s_m::{count_phi, enumerate_nonisomorphic_s, gen_s_m, gen_s_m_lambda, SmGraph, SmLambda};
pub use u_graph::{gen_grid_join, gen_grid_joins, gen_u_graph, GridJoin, GridSpec, GridType, PlacedU, UGraph};
