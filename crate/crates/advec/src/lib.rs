//! A 1-D semi-Lagrangian advection laboratory.
//!
//! The crate implements a family of profile-constrained semi-Lagrangian
//! schemes on uniform grids: the Hermite-cubic update, a rational
//! variant, a switched combination of the two, and the hybrid
//! cubic-rational interpolant whose mixing weight is chosen per cell so
//! that convex or concave endpoint data keeps a one-signed second
//! derivative. Each scheme runs non-conservatively on (value,
//! derivative) pairs or conservatively on (cell average, value) pairs,
//! where the same kernels are applied one integral level up and the
//! averages move in flux form, conserving total mass to roundoff. The
//! cell-integrated quadratic route is included as an independent path
//! that is algebraically identical to the conservative cubic.
//!
//! A problem suite (square waves, a composite wave, inviscid Burgers'
//! flow, and a double-integral experiment), a diagnostics layer, and a
//! CLI front end (`advec`) round out the laboratory. See the guide under
//! `book/` for a narrative walkthrough; its code snippets are compiled
//! and run as doctests.

pub mod diagnostics;
pub mod error;
pub mod grid;
pub mod interpolant;
pub mod problems;
pub mod runner;
pub mod scheme;
pub mod state;
pub mod verify;

pub use error::{AdvecError, Result};
pub use grid::{Boundary, Grid1D};
pub use scheme::{SchemeKind, SchemeSpec, VelocityField};
pub use state::{ConservedState, DerivativeInit, NodalState};

// The guide's chapters double as doctests so every snippet in the book
// keeps compiling and passing against the current API.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(
        grids_and_departure,
        "../../../book/src/grids-and-departure.md"
    );
    chapter!(interpolants, "../../../book/src/interpolants.md");
    chapter!(
        conservative_transport,
        "../../../book/src/conservative-transport.md"
    );
    chapter!(benchmarks, "../../../book/src/benchmarks.md");
    chapter!(diagnostics, "../../../book/src/diagnostics.md");
    chapter!(cli, "../../../book/src/cli.md");
}
