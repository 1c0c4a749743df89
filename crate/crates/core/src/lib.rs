//! Exact Euler characteristics, rational Betti numbers and fundamental-group
//! descriptors of permutation products `X^n / G` and of the fat diagonals
//! `B_d(X,n)`, `F_d(X,n)`, `B^d(X,n)`.
//!
//! The space `X` enters only through a [`spaces::SpaceModel`]: its rational
//! Betti numbers, `H_1`, the kind of `pi_1` and its manifold parity. Every
//! closed formula in [`eulerchar`] and [`invariants`] has an independent
//! brute-force counterpart, and [`verify`] runs the cross-checks.
//!
//! ```
//! use fatdiag::{eulerchar, spaces};
//!
//! let s2 = spaces::preset("sphere:2").unwrap();
//! let chi = s2.euler();
//! assert_eq!(eulerchar::chi_bd(&chi, 4, 2).unwrap(), 5.into());
//! assert_eq!(eulerchar::oracle_bd_burnside(&chi, 4, 2).unwrap(), 5.into());
//! ```

pub mod algebra;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod eulerchar;
pub mod fundgroup;
pub mod graphconf;
pub mod guard;
pub mod invariants;
pub mod permgroup;
pub mod spaces;
pub mod strata;
pub mod verify;

pub use algebra::{ExactInt, GradedPolynomial};
pub use error::{Error, Result};
