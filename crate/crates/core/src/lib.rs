//! Exact-arithmetic computer algebra for the immaculate basis of the
//! noncommutative symmetric functions.
//!
//! The crate implements, over arbitrary-precision integers:
//!
//! - [`composition`]: compositions, the descent-set bijection, refinement and
//!   lexicographic orders, and the Pieri growth relation;
//! - [`tableau`]: immaculate tableaux (straight, standard, and skew), descent
//!   compositions, reading words, and the counts `K`, `L`, and the
//!   Littlewood-Richardson numbers;
//! - [`nsym`]: the noncommutative symmetric functions in the complete
//!   homogeneous, ribbon, power-sum, and immaculate bases, with creation
//!   operators and the Pieri, Jacobi-Trudi, Littlewood-Richardson, and
//!   Murnaghan-Nakayama rules;
//! - [`qsym`]: quasi-symmetric functions in the monomial, fundamental, and
//!   dual immaculate bases, the quasi-shuffle product, the duality pairing,
//!   and the signed decomposition of Schur functions;
//! - [`sym`]: the slice of the commutative symmetric functions needed here —
//!   Schur functions via Jacobi-Trudi with straightening, the forgetful map,
//!   and Newton-identity conversion to power sums;
//! - [`verify`]: exhaustive desk-scale verification suites for every rule.
//!
//! The sparse linear-combination machinery in [`lincomb`] is generic over the
//! scalar; the aliases below fix the arbitrary-precision scalars used by the
//! public element types.
//!
//! ```
//! use immaculata::nsym::{self, NSymBasis};
//! use immaculata::{Composition, Int};
//!
//! // S_{23} * H_3 by the right-Pieri rule, then back to the H basis.
//! let alpha = Composition::new([2, 3])?;
//! let product = nsym::pieri_multiply::<Int>(&alpha, 3);
//! assert_eq!(product.num_terms(), 10);
//!
//! let in_h = nsym::change_basis(&product, NSymBasis::H)?;
//! assert_eq!(
//!     nsym::change_basis(&in_h, NSymBasis::S)?,
//!     product,
//! );
//! # Ok::<(), immaculata::Error>(())
//! ```

pub mod composition;
pub mod error;
pub mod json;
pub mod lincomb;
pub mod nsym;
pub mod qsym;
pub mod sym;
pub mod tableau;
pub mod verify;

pub use composition::{Composition, IntTuple, Partition};
pub use error::{Error, Result};

/// Exact integer scalar backing the public element aliases.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar, used only where a division is unavoidable.
pub type Rat = num_rational::BigRational;

/// Noncommutative symmetric function with [`Int`] coefficients.
pub type NSymElement = nsym::NSymElt<Int>;

/// Quasi-symmetric function with [`Int`] coefficients.
pub type QSymElement = qsym::QSymElt<Int>;

/// Symmetric function with [`Int`] coefficients.
pub type SymElement = sym::SymElt<Int>;

/// Symmetric function with [`Rat`] coefficients (power-sum expansions).
pub type RationalSymElement = sym::SymElt<Rat>;
