//! Exact generation, verification and inversion of the forest of primitive
//! Eisenstein triples: integer triangles with a 60° angle.
//!
//! Every primitive triple other than `(1,1,1)` is reached exactly once, either
//! as a node `M·(7,8,5)` or `M·(13,15,7)` (with `M` a product of the five
//! matrices in [`forest::M`]) or as the twin `(a, b, b − c)` of such a node.
//!
//! ```
//! use eisenstein_forest::{forest, Triple};
//!
//! let path = forest::path_of_triple(&Triple::new(49, 55, 39)).unwrap();
//! assert_eq!(path.to_string(), "B:5");
//! ```

pub mod eisenstein;
pub mod error;
pub mod forest;
pub mod matrix;
pub mod oracle;
pub mod stern_brocot;

pub use eisenstein::{Pair, Triple, TwinForm, TwinTriples};
pub use error::{Error, Result};
pub use forest::ForestNode;
pub use matrix::{Mat2, Mat3, Vec2, Vec3};
pub use stern_brocot::{ParentResult, PathCode, Root, Step};
