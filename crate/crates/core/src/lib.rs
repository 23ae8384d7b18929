//! Exact symmetric-function arithmetic organised around its Hopf-algebra
//! structure.
//!
//! Partitions index five classical bases ([`symfunc::Basis`]); products,
//! coproducts, the antipode and the Schur scalar product are exact over
//! the rationals. On top of the outer Hopf algebra sit Sweedler cochains
//! and their coboundaries ([`cohomology`]), the classical S-function
//! series ([`series`]), branching operators ([`branching`]) and twisted
//! (cliffordized) products including the Newell-Littlewood product
//! ([`clifford`]).
//!
//! ```
//! use schurkit::outer_hopf::outer_product;
//! use schurkit::symfunc::SymFunc;
//!
//! let f = outer_product(&SymFunc::s(&[1]), &SymFunc::s(&[1]));
//! assert_eq!(f.to_string(), "s[2] + s[1,1]");
//! ```

pub mod branching;
pub mod clifford;
pub mod cohomology;
pub mod error;
pub mod expr;
pub mod inner_alg;
pub mod memo;
pub mod oracle;
pub mod outer_hopf;
pub mod partition;
pub mod series;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::{Basis, Rational, SymFunc, TensorExp};
