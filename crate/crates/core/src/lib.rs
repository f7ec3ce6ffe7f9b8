//! Exact symbolic workbench for special 2-flags.
//!
//! Builds Extended Kumpera–Ruiz (EKR) pseudo-normal forms from words over
//! `{1, 2, 3}`, computes their big and small flags with exact rational
//! arithmetic, and decides sandwich and singularity classes at a point.
//!
//! ```
//! use spflag::classify::{singularity_class_at, ClassifyOptions, Target};
//! use spflag::ekr::{build_ekr, EkrSpec};
//!
//! let build = build_ekr(&EkrSpec::new("1.2.1.3".parse().unwrap()));
//! let origin = build.chart().origin();
//! let report = singularity_class_at(Target::Ekr(&build), &origin, ClassifyOptions::default()).unwrap();
//! assert_eq!(report.word.to_string(), "1.2.1.3");
//! ```

pub mod atlas;
pub mod classify;
pub mod cli;
pub mod ekr;
pub mod error;
pub mod exactalg;
pub mod geometry;

pub use error::{Error, Result};
