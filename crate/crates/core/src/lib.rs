//! Exact harmonic forms and cohomologies on invariant forms of almost-complex nilmanifolds.

pub mod cochain;
pub mod delta;
pub mod hodge;
pub mod io;
pub mod linalg;
pub mod parametric;
