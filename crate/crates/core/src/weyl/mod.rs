//! The Weyl algebra of the quantum cat map.
//!
//! Elements are finite linear combinations of unitaries `W(nu)`, `nu` in
//! `Z^2`, multiplied by the twisted rule
//!
//! ```text
//! W(nu) W(nu') = exp(i gamma kappa(nu, nu')) W(nu + nu')
//! ```
//!
//! with involution `W(nu)* = W(-nu)`. The tracial state picks out the
//! coefficient of `W(0)`, which makes the generators orthonormal in the GNS
//! inner product.

mod clock_shift;
mod dynamics;
mod polynomial;
mod state;

pub use clock_shift::{finite_dim_rep, normalized_trace};
pub use dynamics::QuantumCat;
pub use polynomial::{adjoint, gns_norm, trace_state, weyl_mul, TermRecord, WeylIndex, WeylPolynomial, PRUNE_THRESHOLD};
pub use state::{state_from_element, Functional, StateFunctional, STATE_TOLERANCE};
