//! Finite parity complexes and the ω-category of their cells.
//!
//! A complex is a graded set whose elements carry a negative and a positive
//! face-set one dimension down. This crate checks the parity axioms on such
//! data, builds and composes cells `(M, P)`, and factors every cell into a
//! composition tree of atoms by repeatedly excising extremal elements.
//!
//! ```
//! use parity_complex::{cells::Cell, excision, generators::simplex};
//!
//! let c = simplex(2).unwrap();
//! let path = Cell::new(
//!     &c,
//!     c.subset(&["0", "01", "12"]).unwrap(),
//!     c.subset(&["2", "01", "12"]).unwrap(),
//! )
//! .unwrap();
//! let tree = excision::decompose(&c, &path, &Default::default()).unwrap();
//! assert_eq!(tree.display(&c).to_string(), "(0 (leaf 01) (leaf 12))");
//! ```

pub mod axioms;
pub mod cells;
pub mod complex;
pub mod excision;
pub mod generators;
pub mod io;
pub mod movement;
pub mod order;
pub mod subset;

pub use complex::{Complex, ComplexBuilder, ComplexError, ElementRecord, Sign};
pub use subset::{ElementId, Subset};
