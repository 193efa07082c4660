//! Exact trace semantics and trace equivalence for finite generative
//! probabilistic transition systems (PTS).
//!
//! A PTS gives each state a distribution over stopping and over
//! letter-labelled moves. Running it from a state induces a probability
//! measure on finite and infinite words. This crate
//!
//! * parses and validates systems ([`format`], [`pts`]),
//! * builds the determinized linear representation ([`linear_rep`]),
//! * evaluates that measure exactly on words, cones, `A^*` and `A^ω`
//!   ([`measure`]),
//! * decides whether two states induce the same measure, with a witness
//!   word when they do not ([`equivalence`]).
//!
//! All arithmetic is exact over arbitrary-precision rationals.

pub mod equivalence;
pub mod error;
pub mod format;
pub mod linalg;
pub mod linear_rep;
pub mod measure;
pub mod oracle;
pub mod pts;
pub mod rational;
mod symbols;
pub mod word;

pub use equivalence::{
    hk, hkc_finite, hkc_inf, naive, Algorithm, Checker, CongruenceBasis, EquivResult, OutputKind,
    Report, StepAction, TraceStep,
};
pub use error::{Error, IdentKind, Result};
pub use format::{parse_pts, parse_pts_unchecked, to_json};
pub use linear_rep::{build_rep, Config, LinearRep};
pub use measure::{finite_mass_vector, measure, FiniteMassVector, GenSet, TraceMeasure};
pub use pts::{Pts, PtsBuilder, Violation, ViolationKind};
pub use rational::{format_rational, parse_rational, Rational};
pub use word::{Alphabet, LetterId, StateId, Word};
