//! Enumerative encoding of the Grassmannian G_q(n, k): every k-dimensional
//! subspace of F_q^n gets a unique index in `0..[n k]_q`, under one of three
//! orders, and the index can be turned back into the subspace.
//!
//! ```
//! use grasscode::{Grassmannian, Scheme};
//!
//! let g = Grassmannian::new(6, 3, 2).unwrap();
//! let x = g.decode(&928u32.into(), Scheme::Extended).unwrap();
//! assert_eq!(g.encode(&x, Scheme::Extended).unwrap(), 928u32.into());
//! ```

pub mod encoders;
pub mod enumcode;
pub mod error;
pub mod field;
pub mod lexicode;
pub mod linalg;
pub mod scaling;
pub mod shapes;
pub mod text;

pub use num_bigint::BigUint;

pub use encoders::{Grassmannian, HybridConfig, Scheme};
pub use error::{Error, Result};
pub use field::{ArithOp, Element, FieldTable};
pub use lexicode::{build_lexicode, verify_min_distance, CodeBuild, LexicodeBuilder};
pub use linalg::{
    diagram_to_vector, rref, subspace_distance, vector_to_diagram, FerrersDiagram, FerrersTableaux,
    Matrix, Subspace,
};
pub use shapes::{gaussian, gaussian_product, PartitionCache};
