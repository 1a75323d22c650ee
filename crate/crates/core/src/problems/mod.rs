//! Applied-problem adapters: each problem exposes an instance type, a
//! box-bounded search space, a decode step, and a pure objective, plus
//! independent oracles for validation.

pub mod cluster;
pub mod ed;
pub mod hla;
pub mod mst;
pub mod oracles;
pub mod pms;

pub use cluster::ClusterInstance;
pub use ed::EdInstance;
pub use hla::HlaInstance;
pub use mst::MstInstance;
pub use pms::{PmsInstance, Schedule};
