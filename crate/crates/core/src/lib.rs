//! A kernel for finite bicategories.
//!
//! Everything is table-driven: a bicategory is a bundle of explicit finite
//! composition tables, so all coherence laws are decided by enumeration. On
//! top of the validated core sit a 2-cell pasting calculus, lax functors and
//! transformations, mate calculus for internal adjunctions, lax slice
//! bicategories, inc-lax terminal object detection, the construction of a
//! reverse lax functor from terminal data, and a certifier that builds and
//! independently re-checks inverse-biequivalence certificates.
//!
//! All operations are pure functions over immutable data; every search and
//! tie-break picks the lexicographically least candidate, so repeated runs
//! produce identical results.

pub mod adjunctions;
pub mod bicategory;
pub mod calculus;
pub mod cell;
pub mod fixtures;
pub mod functors;
pub mod quillen;
pub mod report;
pub mod slice;
pub mod validate;

pub use bicategory::{FiniteBicategory, HomCategory};
pub use cell::CellId;
pub use report::{AxiomTag, MalformedInput, Status, ValidationReport, Violation};
