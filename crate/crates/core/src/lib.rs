//! Exact bivariate matching polynomials of small multigraphs, their
//! vertex-deleted polynomial decks, and reconstruction from those decks.
//!
//! ```
//! use matchdeck::{graph::Graph, matching::matching_polynomial};
//!
//! let c6 = Graph::cycle(6).unwrap();
//! assert_eq!(
//!     matching_polynomial(&c6).to_string(),
//!     "x^6 + 6*x^4*y + 9*x^2*y^2 + 2*y^3"
//! );
//! ```

pub mod canon;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod matching;
pub mod poly;
pub mod reconstruct;

pub use num_bigint::{self, BigInt};

pub use canon::{are_isomorphic, canonicalize, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use matching::{matching_polynomial, MatchingEngine, MatchingStats};
pub use poly::Poly;
pub use reconstruct::{build_deck, reconstruct, Hint, PolynomialDeck, ReconstructionResult};
