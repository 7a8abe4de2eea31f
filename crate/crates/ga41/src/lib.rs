//! A computational engine for the geometric algebra of 4+1 spacetime,
//! signature (-,+,+,+,+).
//!
//! The crate provides:
//!
//! - exact blade-level products and full multivector arithmetic, with the
//!   scalar-square exponential, rotors, and reciprocal frames ([`blade`],
//!   [`multivector`], [`frame`]);
//! - the faithful representation on 4x4 complex matrices and its inverse,
//!   used as an independent oracle for the algebraic claims ([`rep`]);
//! - idempotent quartets and three generator sets whose matrix images are
//!   the Gell-Mann matrices and their su(4) extension ([`generators`]);
//! - the sixteen unitary elements over a commuting triad together with
//!   their charge/isospin quantum numbers ([`spectrum`]);
//! - monogenic plane waves, the Dirac form of the first-order condition,
//!   and constant-potential gauge coupling ([`wave`]);
//! - a small expression language with parser, evaluator, and canonical
//!   text rendering ([`expr`]);
//! - the verification suites behind `ga41 verify` ([`verify`]).
//!
//! Everything is pure and immutable: no operation mutates shared state, so
//! all types can be used freely across threads.

pub mod blade;
pub mod error;
pub mod expr;
pub mod frame;
pub mod generators;
pub mod matrix;
pub mod multivector;
pub mod rep;
pub mod spectrum;
pub mod verify;
pub mod wave;

pub use blade::{Blade, Signature};
pub use error::Error;
pub use frame::FrameSet;
pub use matrix::{Complex, ComplexMatrix4};
pub use multivector::{rotor_apply, Multivector};
pub use rep::{rep, unrep};
