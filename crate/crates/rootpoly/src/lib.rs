//! Exact-arithmetic toolkit for root polytopes of regular oriented matroids
//! and greedoid polynomials of Eulerian branching greedoids.
//!
//! Everything here is computed over arbitrary-precision integers and reduced
//! rationals; no floating point and no tolerances appear anywhere. The crate
//! is `no_std` (with `alloc`): all IO, file formats and the CLI live in the
//! companion `rootpoly-cli` crate.
//!
//! The pipeline, bottom to top:
//!
//! * [`arith`] — integer matrices, fraction-free determinants, rational
//!   solving, pivoting to standard form, total-unimodularity checks.
//! * [`digraph`] — directed multigraphs with a fixed edge order: Eulerian
//!   tests, spanning trees and arborescences, fundamental cuts/cycles, the
//!   burning edge list and the tree order it induces.
//! * [`matroid`] — regular oriented matroids from totally unimodular
//!   matrices: signed circuits and cocircuits, duality, semi-activities.
//! * [`polytope`] — the root polytope of a representation: unimodular basis
//!   simplices, the common-face criterion, the arborescence triangulation,
//!   point location and visibility counts.
//! * [`ehrhart`] — exact lattice-point counting and the h*-polynomial by
//!   several independent routes.
//! * [`greedoid`] — the branching greedoid of a rooted digraph and its
//!   greedoid polynomial by all routes at once.

#![cfg_attr(not(test), no_std)]
// elimination loops read one row while rewriting another
#![allow(clippy::needless_range_loop)]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod arith;
pub mod digraph;
pub mod ehrhart;
pub mod greedoid;
pub mod matroid;
pub mod poly;
pub mod polytope;
pub mod signed;

pub(crate) mod util;

pub use arith::{Int, IntMatrix, Rat};
pub use poly::Polynomial;
pub use signed::SignedSet;

/// Errors shared by the whole pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Shape mismatch: non-square matrix, wrong vector length, bad index.
    Dimension(String),
    /// A caller violated an operation's stated precondition.
    Precondition(String),
    /// An exhaustive check or scan was refused because it exceeds its cap.
    SizeCap(String),
    /// Internal consistency violated; indicates a bug or non-TU input.
    Integrity(String),
    /// Graph construction rejected the input (self-loop, vertex range).
    Graph(String),
    /// The queried point lies outside the polytope.
    NotContained,
    /// The reference point lies on a facet hyperplane.
    DegeneratePosition,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(msg) => write!(f, "dimension error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::SizeCap(msg) => write!(f, "size cap exceeded: {msg}"),
            Error::Integrity(msg) => write!(f, "integrity error: {msg}"),
            Error::Graph(msg) => write!(f, "graph error: {msg}"),
            Error::NotContained => write!(f, "point is not contained in the polytope"),
            Error::DegeneratePosition => write!(f, "reference point lies on a facet hyperplane"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
