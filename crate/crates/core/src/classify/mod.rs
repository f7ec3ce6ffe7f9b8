//! Sandwich and singularity classes of special 2-flags at a point.
//!
//! The sandwich letter at position `j ≥ 2` is `2̲` when `D^j(p)` lies in
//! `F(p)` (for `j = 2`) or in `L(D^{j-2})(p)`. Each `2̲` after the first is
//! then refined to 3 or 2 by testing whether `V_{2l+3}(p)`, a member of the
//! small flag of `D^s`, lies in the subspace that decided the previous `2̲`.

mod engine;
mod locus;
mod sandwich;

pub use engine::{
    sandwich_class_at, singularity_class_at, ClassificationReport, ClassifyOptions, Evidence,
    GeometrySource, Target,
};
pub use locus::{singularity_locus_equations, LocusEquation};
pub use sandwich::SandwichWord;
