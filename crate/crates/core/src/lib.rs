//! Curves in Minkowski 3-space: Frenet frames, Bertrand mates, and
//! indicatrices on the pseudospheres.

pub mod bertrand;
pub mod curve;
pub mod diff;
pub mod emit;
pub mod frenet;
pub mod indicatrix;
pub mod input;
pub mod lift;
pub mod lorentz;
pub mod pipeline;
pub mod report;
