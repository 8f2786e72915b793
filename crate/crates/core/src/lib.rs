//! Angulations of a convex polygon with forbidden chords.
//!
//! Fix a convex polygon on `n` vertices and a face size `g >= 3`. A
//! *g-angulation* cuts the polygon into `g`-gon faces using pairwise
//! non-crossing chords; it exists for the unrestricted polygon exactly when
//! `n = g + t (g - 2)` for some `t >= 0`. This crate answers, exactly and
//! deterministically, what happens when a set `F` of edges is *forbidden*:
//!
//! - [`angulation_oracle`] decides, counts, and exhibits angulations that
//!   avoid `F`, by interval dynamic programming. It is the ground truth the
//!   rest of the crate is tested against.
//! - [`forbidden_configs`] recognizes the *blocking* forbidden sets: with at
//!   most `n - g + 1` chords, exactly one canonical family blocks every
//!   angulation, and with up to `n - 1` chords a short hierarchy of
//!   reducible families takes over. [`forbidden_configs::classify_forbidding`]
//!   names the family, and generators enumerate the minimum ones.
//! - [`decide_construct`] turns the classification into an overall decision
//!   procedure, and constructs witnesses directly (without the oracle) when
//!   `F` has at most `n - g` chords.
//! - [`placement`] goes the other way: given an abstract graph, place its
//!   vertices on the polygon so that the complement of the placed edges still
//!   admits an angulation. Cycles, unions of cycles, generalized Petersen
//!   graphs, and cubic graphs are covered.
//!
//! The CLI crate `gangulate-cli` wraps all of this behind a command-line
//! interface; the book under `book/` walks through the concepts with runnable
//! examples, which are compiled as doc-tests of this crate.

pub mod angulation_oracle;
pub mod convex_core;
pub mod decide_construct;
mod error;
pub mod forbidden_configs;
pub mod placement;

pub use convex_core::{
    admissible_params, chords_required, cyclic_gap, edges_cross, faces_required,
    is_boundary_edge, Edge, GAngulation, Instance,
};
pub use error::Error;

/// Compiles every code block of the book as a doc-test, so the guide can
/// never drift from the library.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/instances.md")]
    pub struct Instances;
    #[doc = include_str!("../../../book/src/counting.md")]
    pub struct Counting;
    #[doc = include_str!("../../../book/src/blocking.md")]
    pub struct Blocking;
    #[doc = include_str!("../../../book/src/deciding.md")]
    pub struct Deciding;
    #[doc = include_str!("../../../book/src/placements.md")]
    pub struct Placements;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
