//! Generalized Reed-Muller codes and the nonbinary quantum stabilizer codes
//! built from them.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf`]: arithmetic in GF(p^e) for the small fields in the built-in table,
//!   plus subfield embeddings, traces and norms.
//! - [`lincode`]: linear codes in canonical RREF form, duals, products,
//!   trace codes, subfield subcodes and exhaustive weight computations.
//! - [`grm`]: the codes `R_q(ν, m)` and their closed-form parameters.
//! - [`qcode`]: CSS and Hermitian quantum codes with exact parameters.
//! - [`puncture`]: puncture codes, witnesses and punctured quantum codes,
//!   including the quantum MDS family of length `(ν+1)q`.
//! - [`report`]: serializable run reports used by the CLI.

pub mod error;
pub mod gf;
pub mod grm;
pub mod lincode;
pub mod puncture;
pub mod qcode;
pub mod report;

pub use error::{Error, Result};
pub use gf::{Extension, FieldElement, FieldSpec};
pub use grm::{build_grm, GrmCode};
pub use lincode::{Limits, LinearCode, MinWeight, WeightDistribution};
pub use puncture::{mds_chain, PunctureCodeRecord, PunctureWitness};
pub use qcode::{QuantumCode, QuantumCodeRecord};
pub use report::{Outcome, RunReport};
