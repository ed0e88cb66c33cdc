//! Finite-spectrum quantum systems cannot carry hyperbolic flows.
//!
//! The GNS Hamiltonian of a stationary state has the discrete spectrum of
//! Bohr frequencies `e_l - e_k`, while the relation
//! `U(t) V(s) U(-t) = V(s e^{lambda t})` forces the spectrum to be the whole
//! real line. This module makes both sides computable:
//!
//! * [`gns_build`] enumerates the Bohr spectrum of a finite system.
//! * [`sylvester_obstruction`] shows that the generator equation
//!   `[H, G] = i lambda G` only has the trivial solution.
//! * [`conjugation_defect_search`] looks for a group-level counterexample and
//!   reports how far the best candidate is from one.
//! * [`affine_control`] realises the relation on a discretised line, where
//!   the generator has continuous spectrum and the defect goes to zero.

mod affine;
mod search;
mod sylvester;
mod system;

pub use affine::{affine_control, affine_control_defect, AffineLine, AFFINE_HALF_WIDTH, AFFINE_S, AFFINE_T, TEST_WIDTH};
pub use search::{conjugation_defect, conjugation_defect_search, SearchGrid, SearchOutcome};
pub use sylvester::{
    commutant_dimension, random_hermitian, sylvester_obstruction, sylvester_sweep, write_sylvester_records,
    Obstruction, SylvesterRecord,
};
pub use system::{gns_build, heisenberg_phase, FiniteQuantumSystem, GnsData};
