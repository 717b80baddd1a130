//! Exact computation of the graded center of a spherical G-fusion category.

pub mod category;
pub mod braiding;
pub mod center;
pub mod cli;
pub mod coend;
pub mod crossing;
pub mod error;
pub mod examples;
pub mod linalg;
pub mod monad;
pub mod scalars;
pub mod suite;

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod guide_introduction {}
#[doc = include_str!("../../../book/src/category-files.md")]
pub mod guide_category_files {}
#[doc = include_str!("../../../book/src/scalars.md")]
pub mod guide_scalars {}
#[doc = include_str!("../../../book/src/center.md")]
pub mod guide_center {}
#[doc = include_str!("../../../book/src/braiding.md")]
pub mod guide_braiding {}
#[doc = include_str!("../../../book/src/coend.md")]
pub mod guide_coend {}
#[doc = include_str!("../../../book/src/reference-model.md")]
pub mod guide_reference_model {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod guide_cli {}
