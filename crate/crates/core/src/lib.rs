//! Ideals generated by powers of linear forms dual to grid points on a
//! smooth quadric in P^3, and exact rank computations deciding the weak
//! Lefschetz property of the quotients.
//!
//! The modules build on each other: [`field`] provides prime-field and
//! rational arithmetic, [`poly`] polynomials over monomial bases,
//! [`linalg`] row reduction and subspaces, [`geometry`] grids and
//! projections, [`ideals`] graded pieces and quotients, [`inverse`] inverse
//! systems under contraction, [`predict`] closed formulas and [`lefschetz`]
//! multiplication maps. [`verify`] runs the reproduction suite and
//! [`commands`] renders reports for the `gridlef` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod field;
pub mod geometry;
pub mod ideals;
pub mod inverse;
pub mod lefschetz;
pub mod linalg;
pub mod poly;
pub mod predict;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, PrimeModulus, RandomSeed, RationalField, DEFAULT_SEED};
pub use geometry::{GridConfig, GridParams, Locus};
