//! Genus 2 curves whose Jacobians split over degree 3 covers of elliptic curves.

pub mod algebra;
pub mod aut;
pub mod error;

pub use error::{Error, Result};
pub mod igusa;
pub mod ratpoints;
pub mod split3;
