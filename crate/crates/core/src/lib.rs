//! Exact lattice computations and decision procedures for vector bundles on
//! bielliptic surfaces.
//!
//! * [`surface`]: the seven families, their invariants and etale covers.
//! * [`lattice`]: `Num(S)`, Mukai vectors, pairing, twists, pullbacks, `l(v)`.
//! * [`wbn`]: generic cohomology of line bundles per Picard component and the
//!   weak Brill-Noether property.
//! * [`walls`]: Bogomolov, walls in the ample cone, component counts and the
//!   isotropic weak Brill-Noether criterion.
//! * [`ulrich`]: Ulrich Mukai vector candidates and the certificate-producing
//!   existence engine.
//! * [`irrationality`]: degree of irrationality and its numeric certificate.
//! * [`cli`]: the `bielliptic` command line front end.

pub mod cite;
pub mod cli;
pub mod error;
pub mod irrationality;
pub mod lattice;
pub mod surface;
pub mod ulrich;
pub mod walls;
pub mod wbn;

pub use error::{Error, Result};
pub use lattice::{MukaiVector, NumClass, Polarization};
pub use surface::{SurfaceInvariants, SurfaceType};
