//! Massey spectral sequence of a finite simplicial complex twisted by an
//! integral degree-1 cohomology class, with the resulting lower bounds on
//! critical points of closed 1-forms in that class.
//!
//! The pipeline: a complex and an integer edge cocycle zeta determine a
//! deformation complex over the local ring k[s] localized at s = 0, with
//! the coboundary twisted edgewise by (1+s)^zeta. Its s-adic filtration
//! yields a spectral sequence starting at ordinary cohomology whose first
//! differential is cup product with the class of zeta; elementary divisor
//! exponents over the valuation ring determine every page, the ranks over
//! k(s) are the Novikov–Betti numbers, and exact kernel elements evaluated
//! at s = 0 detect the classes surviving to the last page. Products of two
//! survivors with positive-degree twisted classes bound the number of
//! critical points from below.
//!
//! All arithmetic is exact: prime fields or arbitrary-precision rationals,
//! polynomials in the deformation parameter, no truncation orders and no
//! floating point.

pub mod bound;
pub mod cohomology;
pub mod complex;
pub mod deformation;
pub mod error;
pub mod field;
pub mod library;
pub mod local;
pub mod matrix;
pub mod poly;
pub mod polymat;
pub mod ratfunc;
pub mod report;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
