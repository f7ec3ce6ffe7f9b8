//! Polynomial vector fields and 1-forms over a coordinate chart, together
//! with the flag constructions built from Lie brackets.

mod chart;
mod distribution;
mod field;
mod forms;
mod subspace;

pub use chart::Chart;
pub use distribution::{BigFlag, Distribution, SmallFlag, DEFAULT_GENERATOR_CAP};
pub use field::{lie_bracket, OneForm, VectorField};
pub use forms::{
    annihilator, cauchy_char_at, covariant_at, covariant_forms_at, exterior_derivative_at,
};
pub use subspace::Subspace;
