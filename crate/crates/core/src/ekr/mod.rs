//! Words over `{1, 2, 3}`, EKR pseudo-normal forms built from them, the
//! closed forms of their covariant and Cauchy-characteristic objects, and a
//! handful of concrete models.

mod build;
mod closed;
mod models;
mod spec;
mod word;

pub use build::{build_ekr, EkrBuild};
pub use closed::{closed_form_f, closed_form_l};
pub use models::{model, Model};
pub use spec::{EkrSpec, Shift};
pub use word::{validate_word, Word};
