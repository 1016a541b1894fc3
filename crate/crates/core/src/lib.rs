//! Exact decomposition engine for the representation theory behind
//! holomorphic isometric embeddings of the Grassmannian `Gr_m(C^{m+2})`
//! into real quadrics.
//!
//! For a pair `(m, k)` the engine decomposes the tensor square of the
//! section space `F(k pi_2) = H^0(Gr_m(C^{m+2}), O(k))` into U(m+2)
//! irreducibles, splits it into symmetric and exterior parts, filters the
//! summands by the weight of the isotropy-centre circle action, determines
//! the invariantly generated module of symmetric endomorphisms, and reports
//! the dimension of its complement: the ambient space of the embedding
//! moduli. Everything is integer or rational arithmetic; nothing is
//! floating point.
//!
//! Layers, bottom up:
//!
//! * [`partition`]: partitions, diagram cells, the canonical ordering.
//! * [`symfunc`]: sparse big-integer polynomials, Schur polynomials by
//!   tableau enumeration, Schur-basis decomposition. The brute-force
//!   oracle layer.
//! * [`rep`]: Littlewood-Richardson enumeration, tensor squares, the
//!   symmetric/exterior split, SU labels. The production engine, pinned
//!   against `symfunc` by the verification suite.
//! * [`dim`]: hook-content dimensions and published closed forms kept
//!   verbatim for cross-checking.
//! * [`moduli`]: the pipeline for a pair `(m, k)` and its report.
//! * [`verify`]: the self-verification suite behind `verify` and the
//!   acceptance tests.

pub mod dim;
pub mod error;
pub mod moduli;
pub mod partition;
pub mod rep;
pub mod report;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};

/// Engine version stamped into reports and cache entries.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Version of the JSON report/cache schema.
pub const SCHEMA_VERSION: u32 = 1;
