//! Distance-k domination in generalized de Bruijn digraphs `G_B(n, d)` and
//! generalized Kautz digraphs `G_K(n, d)`.
//!
//! Both families live on the residues `{0, …, n−1}`; every out-neighborhood is
//! a run of consecutive residues, which is what makes the closed-form
//! constructions in [`construct`] possible. [`oracle`] is an independent
//! exhaustive solver used to check them.

pub mod cli;
pub mod construct;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod modular;
pub mod oracle;
pub mod vertex_set;

pub use construct::{classify, GammaResult, Method};
pub use digraph::{Family, GeneralizedDigraph};
pub use domination::{bounds, verify, Bounds, DominationCertificate};
pub use error::{Error, Result};
pub use modular::{ModInterval, WideInt};
pub use oracle::OracleLimits;
pub use vertex_set::VertexSet;
