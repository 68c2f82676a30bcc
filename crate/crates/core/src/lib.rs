//! Finite skew bracoids and skew braces, their substructures and morphisms,
//! and the Hopf-Galois structures they describe on separable extensions.
//!
//! Groups are small and stored as Cayley tables (see [`FiniteGroup`]); every
//! search is exhaustive and bounded by [`Limits`].

pub mod brace;
pub mod bracoid;
pub mod classify;
pub mod error;
pub mod families;
pub mod group;
pub mod homsearch;
pub mod hopf_galois;
pub mod limits;
pub mod morphism;
pub mod notation;
pub mod perm;
pub mod permgroup;
pub mod small_groups;
mod subgroups;
pub mod substructure;

pub use brace::SkewBrace;
pub use bracoid::{GammaCocyclePair, SkewBracoid};
pub use hopf_galois::{CosetSpace, HgsStructure};
pub use morphism::BracoidHom;
pub use error::{Error, Result};
pub use group::{ElementSet, FiniteGroup, GroupHom};
pub use limits::Limits;
pub use perm::Permutation;
pub use permgroup::PermGroup;
