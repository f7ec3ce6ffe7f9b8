use std::fmt;

use serde::Serialize;

use crate::ekr::Word;
use crate::geometry::Chart;

/// Equation `variable = 0` in the EKR chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocusEquation {
    pub variable: String,
    /// Index of the variable in chart order.
    pub index: usize,
}

impl fmt::Display for LocusEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}=0", self.variable)
    }
}

/// Local equations of the class `w` in the coordinates of an EKR of the same
/// label: `x_k = 0` for each letter 2 and `x_s = y_s = 0` for each letter 3.
pub fn singularity_locus_equations(w: &Word) -> Vec<LocusEquation> {
    let mut out = Vec::new();
    for (i, &l) in w.letters().iter().enumerate() {
        let k = i + 1;
        if l >= 2 {
            out.push(LocusEquation {
                variable: format!("x{k}"),
                index: Chart::x(k),
            });
        }
        if l == 3 {
            out.push(LocusEquation {
                variable: format!("y{k}"),
                index: Chart::y(k),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eqs(w: &str) -> Vec<String> {
        singularity_locus_equations(&w.parse().unwrap())
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn equations() {
        assert_eq!(eqs("1.2.1.3"), ["x2=0", "x4=0", "y4=0"]);
        assert!(eqs("1.1.1.1").is_empty());
        assert_eq!(eqs("1.2.2.1"), ["x2=0", "x3=0"]);
    }
}
