//! Exact closed-form L²-torsion polynomials for compact locally symmetric
//! spaces of `SO⁰(p,q)` (`p`, `q` odd) and `SL(3,ℝ)`.
//!
//! All arithmetic is over `ℚ`. Volumes stay symbolic.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactalg;
pub mod kostant;
pub mod plancherel;
pub mod rootsys;
pub mod spectrum;
pub mod torsion;
