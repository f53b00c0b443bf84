//! Exact computations in the K-theory and cohomology of flag varieties `G/B`.
//!
//! The crate models the representation ring of the maximal torus as a Laurent
//! polynomial ring over the weight lattice, implements Demazure push-pull
//! operators, Littelmann's path model, Bruhat-order lifts of path directions,
//! and the resulting Pieri-Chevalley expansion of `e^λ·[O_{X_w}]` in Schubert
//! structure-sheaf classes. A polynomial model of `H*(G/B)` with BGG
//! divided differences is provided as an independent cross-check.
//!
//! All arithmetic is exact (`i64` lattice coordinates and `Rational64`
//! coefficients).

pub mod cohomology;
pub mod error;
pub mod laurent;
pub mod lspath;
pub mod pieri;
pub mod rootdata;
pub mod suites;
pub mod weyl;

pub use cohomology::PolyClass;
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use lspath::{LSPath, PathModel};
pub use pieri::Expansion;
pub use rootdata::{CartanType, RootSystem, Weight};
pub use weyl::{ParabolicQuotient, WeylElt, WeylGroup};

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::Rational64;
