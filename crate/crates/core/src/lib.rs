//! Exact combinatorics of the Szczarba map `Sz: 𝔠(Δ^n) -> G(Δ^n)`.
//!
//! The rigidification `𝔠(Δ^n)` and the Kan loop-group category `G(Δ^n)` are
//! nerves of two poset-enriched categories ([`hom`]). The Hinich functor between
//! them induces `Sz`, which this crate computes in two independent ways:
//!
//! * element-wise, by applying [`sz::hin_vertex`] to every entry of a chain;
//! * through simplicial operators `E_{i,k}` built from the `α_k` recursion,
//!   reduced with the normal-form algebra of [`ops`].
//!
//! ```
//! use szczarba::hom::SequenceIndex;
//! use szczarba::sz::{sz_operator_route, verify_instance};
//!
//! let i = SequenceIndex::new(0, 3, vec![2, 1]).unwrap();
//! let sz = sz_operator_route(&i, 3).unwrap();
//! assert_eq!(sz.to_string(), "(s_0^2 g_3, s_0 g_2, g_1)");
//! assert!(verify_instance(3, &i).unwrap().matches);
//! ```

pub mod cli;
pub mod diagram;
pub mod error;
pub mod hom;
pub mod ops;
pub mod sz;

pub use error::{Error, Result};
pub use hom::{Chain, GHomElement, SequenceIndex, SubsetMorphism};
pub use ops::{Generator, NormalOperator, VertexList, Word};
pub use sz::{SzResult, VerifyReport};
