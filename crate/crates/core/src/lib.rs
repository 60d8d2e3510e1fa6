//! Exact power structures over polynomial rings, and generating series of
//! Hilbert schemes of points built from them.
//!
//! Classes of varieties are modeled as Laurent polynomials in `L` (the class
//! of the affine line), Hodge-Deligne polynomials as elements of `Z[u, v]`,
//! and Euler characteristics as integers. All three share one polynomial type
//! ([`Polynomial`]) and one truncated series type ([`Series`]).

pub mod axioms;
pub mod cli;
pub mod error;
pub mod hilbert;
pub mod int;
pub mod json;
pub mod oracles;
pub mod parse;
pub mod poly;
pub mod power;
pub mod ring;
pub mod sampling;
pub mod series;
pub mod subst;

pub use error::{Error, Result};
pub use int::Integer;
pub use poly::Polynomial;
pub use power::{EulerProduct, Kernel, MonomialKernel, PowerStructure};
pub use ring::{Ring, RingDescriptor};
pub use series::Series;
pub use subst::MonomialMap;
