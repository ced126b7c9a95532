#![no_std]

extern crate alloc;

pub mod bitset;
pub mod complexes;
pub mod error;
pub mod filtration;
pub mod hilbert;
pub mod homology;
pub mod hypergraph;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod polarization;
pub mod ring;
pub mod stanley;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use ideal::{IrreducibleComponent, MonomialIdeal, PrimeSupport};
pub use monomial::Monomial;
pub use ring::{Ring, VariableSet};
