//! Exact combinatorics of Weyl groups attached to acyclic quivers.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`], [`root`], [`group`]: Cartan data, roots and group elements as
//!   integer matrices, with reflection arithmetic on [`CartanData`].
//! * [`braid`]: the braid-group action on sequences of reflections and
//!   Hurwitz orbits of factorizations of the Coxeter element.
//! * [`frame`]: the adapted word for `w₁ = C w₀`, deletions of `n` letters and
//!   the conditions on them.
//! * [`rep`]: modules of Dynkin quivers by knitting, Hom/Ext tables, exceptional
//!   sequences and cluster-tilting sets.
//! * [`mutation`]: mutation of clusters and the exchange graph.
//! * [`schur`]: prefixes of the Coxeter element and real Schur roots.
//! * [`render`] and [`cli`]: wiring diagrams, DOT output and the command line.
//!
//! ```
//! use coxeter_clusters::{AdaptedFrame, CartanData};
//!
//! let cd = CartanData::from_label("A4")?;
//! let frame = AdaptedFrame::build(&cd)?;
//! assert_eq!(frame.w0_word().to_string(), "s1s2s1s3s2s1s4s3s2s1");
//! let sel = frame.selection(&[1, 4, 7, 9])?;
//! assert!(frame.is_reduced_w0(&sel));
//! # Ok::<(), coxeter_clusters::Error>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod braid;
pub mod cartan;
pub mod cli;
pub mod error;
pub mod frame;
pub mod group;
pub mod mutation;
pub mod render;
pub mod rep;
pub mod root;
pub mod schur;
mod weyl;

pub use braid::{BraidMove, BraidWord, Factorization, OrbitOptions, OrbitReport};
pub use cartan::{Arrow, CartanData, CartanSpec, DynkinType};
pub use error::{Error, Result};
pub use frame::{AdaptedFrame, BarredWord, LeveledQuiver, Selection};
pub use group::{GroupElement, Word};
pub use mutation::{
    algebraic_mutate, exchange_graph, verify_unique_complement, ExchangeGraph, MutationStep,
    ScanSide,
};
pub use rep::{ARQuiver, ClusterObject, HomTable, Indec, RepData};
pub use root::Root;
pub use schur::{prefix_set, prefix_test, prefix_to_generators, PrefixStatus, PrefixVerdict};
