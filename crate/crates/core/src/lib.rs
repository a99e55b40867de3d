//! Constant-round dominating-set approximation on outerplanar graphs.
//!
//! The crate bundles four things that are usually scattered across scripts:
//!
//! * a synchronous, anonymous, port-numbered LOCAL simulator together with
//!   the one-round degree-threshold rule (take every vertex of degree at
//!   least four, plus every vertex none of whose neighbours has degree at
//!   least four);
//! * two independent exact minimum dominating set oracles (subset sweep and
//!   a width-two tree-decomposition dynamic program);
//! * outerplanarity recognition with witnesses, plus the generators and the
//!   exhaustive enumerator the experiments run on;
//! * an audit layer that recomputes the partition and contraction
//!   quantities behind the factor-five guarantee on concrete instances.
//!
//! Everything is a pure function of its inputs. Randomised generators are
//! driven by `ChaCha8Rng` seeded from a single `u64`.

pub mod analysis;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod local;
pub mod mds;
pub mod outerplanar;

pub use error::{Error, Result};
pub use graph::{Graph, Multigraph, VertexSet};
