//! Exact-arithmetic bridge between framed type-A quiver representations,
//! complete flags in Slodowy slices, and two-row Springer-fiber components.
//!
//! The crate implements, over ℚ with arbitrary-precision rationals:
//!
//! * exact linear algebra with canonical (RREF) subspace representatives
//!   ([`matrix`], [`subspace`]);
//! * framed chain-quiver representations attached to a partition λ of n,
//!   with the admissibility/stability point conditions and base-change
//!   action ([`quiver`]);
//! * the explicit lift of such a representation to the modified
//!   representation spaces with dimension vector (n−1, …, 1), together with
//!   the transversality and modified admissibility/stability checkers
//!   ([`lift`]);
//! * the complete flag attached to a representation, by two independent
//!   routes, plus the fixed nilpotent x of Jordan type λ and the
//!   Springer/Slodowy membership predicates ([`flag`]);
//! * cup diagrams on n vertices, their flag-side and quiver-side
//!   cup/ray relations, and classification of two-row Springer-fiber points
//!   into irreducible components ([`cup`]);
//! * a deterministic rejection sampler for admissible stable
//!   representations ([`sample`]) and JSON wire formats ([`io`]).
//!
//! Batch helpers in [`par`] run these pipelines over many representations,
//! in parallel when the default `parallel` feature is enabled.

pub mod cup;
pub mod error;
pub mod flag;
pub mod io;
pub mod lift;
pub mod matrix;
pub mod par;
pub mod partition;
pub mod quiver;
pub mod rational;
pub mod reference;
pub mod sample;
pub mod subspace;

pub use error::{Error, Result};
