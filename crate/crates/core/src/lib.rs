//! Hyperbolic flows, classical and quantum.
//!
//! The crate covers four layers that share one set of conventions:
//!
//! * [`cat`]: the Arnold cat automorphism of the 2-torus, its horocycle
//!   shifts along the expanding/contracting eigendirections, and both forms
//!   of the hyperbolicity condition (differential and conjugation).
//! * [`hyperbolic`]: geodesic and horocycle flows on the Poincaré
//!   half-plane realised as right multiplication in `SL(2,R)`.
//! * [`weyl`]: the noncommutative-torus Weyl algebra that quantises the cat
//!   map, with its tracial state, dynamical/horocyclic automorphisms and the
//!   dual action on states.
//! * [`nogo`]: finite-spectrum quantum systems, for which the hyperbolicity
//!   relation has no solution, plus a continuous-spectrum control where it
//!   does.
//!
//! [`experiment`] drives named verification suites over all of the above and
//! writes CSV/JSON defect tables.

pub mod cat;
pub mod error;
pub mod experiment;
pub mod hyperbolic;
pub mod nogo;
pub mod weyl;

mod direction;

pub use direction::Direction;
pub use error::{Error, Result};
