//! Toolkit for error-correcting codes with function-level data protection:
//! finite fields up to order 256, block codes and classic families,
//! distance-threshold graphs, covering radii, function-correcting
//! encodings with feasibility analysis, and decoding paths through
//! maximum-distance-separable codes.

pub mod cli;
pub mod code;
pub mod covering;
pub mod error;
pub mod families;
pub mod fcc;
pub mod field;
pub mod graph;
pub mod matrix;
pub mod mdspath;
pub mod word;

pub use code::{Code, FamilyTag, RsInfo};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use word::{hamming_distance, hamming_weight, set_distance, Word};
