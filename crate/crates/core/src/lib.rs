pub mod bounds;
pub mod canon;
pub mod classify;
pub mod code;
pub mod error;
pub mod families;
pub mod gf2;
pub mod manifest;
pub mod paperio;
pub mod poly;
pub mod reproduce;
pub mod search;
pub mod tables;

pub use canon::{canonical_form, column_types, equivalent, CanonicalKey, TypeMultiplicity};
pub use classify::{lcd_census, Census, Classifier, ClassifyOptions, CodeDB};
pub use code::{LcdStatus, LinearCode, WeightEnumerator};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, IntMatrix, Ring};
pub use poly::{AffineForm, IntPoly};
