//! Exact computations with the quadratic algebras `Q_n` attached to
//! pseudo-roots of noncommutative polynomials, and with their quadratic duals.
//!
//! Graded dimensions come from three independent sources: linear algebra in
//! the quotient of the tensor algebra ([`engine`]), counting of the string
//! families that index monomial bases ([`combinatorics`]), and closed-form
//! Hilbert series ([`series`]).
//!
//! The linear algebra is generic over a [`Field`]; [`Rational`] gives exact
//! ranks and the `Fp` prime fields are a faster approximation.

pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod freealgebra;
pub mod linalg;
pub mod presentations;
pub mod scalar;
pub mod series;

pub use combinatorics::{
    chain_expand, count_family, enumerate_family, in_family, skeleton, vee, BlockString, Caps,
    Family, Skeleton, SubsetMask,
};
pub use engine::{in_span, QuadraticPresentation, QuotientBasis, QuotientTower, Span};
pub use error::{Error, Result};
pub use freealgebra::{pairing, FreeElement, Side, Word};
pub use scalar::{Field, Fp};
pub use series::TruncatedSeries;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub type Element = FreeElement<Rational>;
pub type Presentation = QuadraticPresentation<Rational>;
pub type Series = TruncatedSeries<Rational>;

/// Default prime for the modular mode.
pub const DEFAULT_PRIME: u64 = 32003;
pub type ModularElement = FreeElement<Fp<DEFAULT_PRIME>>;
pub type ModularPresentation = QuadraticPresentation<Fp<DEFAULT_PRIME>>;
