//! Exact moment/free-cumulant calculus on Schröder trees.
//!
//! The crate is organised bottom-up:
//!
//! * [`trees`] – reduced plane (Schröder) trees, their Polish words, enumeration and grafting.
//! * [`ncpart`] – the noncrossing partition lattice, Kreweras complement, Möbius function and
//!   the tree / binary-arrangement / partition correspondences.
//! * [`nsym`] – noncommutative symmetric functions in the `S`, `Λ` and ribbon bases, the
//!   noncommutative Faà di Bruno coproduct, the Lagrange series `g` and the cumulant series `K`.
//! * [`operad`] – truncated tree series forming the group of the Schröder operad, with the
//!   half-compositions `⊣`/`⊢`, inverses, the corolla series and the operadic R-transform.
//! * [`hopf`] – the admissible-cut Hopf algebra of (decorated) trees, its codendriform
//!   splitting, character calculus and the word Hopf algebra with the morphism `ι`.
//! * [`cumulants`] – evaluation of trees as nested moment expressions, free cumulants by the
//!   prime-tree formula and by Möbius inversion, and the cluster involution.
//! * [`symfun`] – the commutative univariate layer: power-series reversion and `h*`/`e*`.
//!
//! All arithmetic is exact (`num` big rationals).

pub mod cumulants;
pub mod error;
pub mod format;
pub mod hopf;
pub mod ncpart;
pub mod nsym;
pub mod operad;
pub mod poly;
pub mod ring;
pub mod symfun;
pub mod trees;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use ring::{Rational, Ring};
