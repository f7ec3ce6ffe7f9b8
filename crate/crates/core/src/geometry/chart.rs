use crate::exactalg::Rational;

/// Coordinate chart: an ordered list of variable names.
///
/// EKR charts of length `r` use the order `t, x0, y0, x1, y1, ..., xr, yr`,
/// so `t ↦ 0`, `x_k ↦ 2k+1`, `y_k ↦ 2k+2` and the dimension is `2r + 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
    length: Option<usize>,
}

impl Chart {
    pub fn ekr(length: usize) -> Self {
        let mut names = vec!["t".to_string()];
        for k in 0..=length {
            names.push(format!("x{k}"));
            names.push(format!("y{k}"));
        }
        Chart {
            names,
            length: Some(length),
        }
    }

    /// Chart `(x0, x1..xm, y1..yn)` of the corank-`m` normal form with
    /// `n + 1` generators.
    pub fn bcd(m: usize, n: usize) -> Self {
        let mut names: Vec<String> = (0..=m).map(|i| format!("x{i}")).collect();
        names.extend((1..=n).map(|j| format!("y{j}")));
        Chart {
            names,
            length: None,
        }
    }

    pub fn custom(names: Vec<String>) -> Self {
        Chart {
            names,
            length: None,
        }
    }

    pub fn dimension(&self) -> usize {
        self.names.len()
    }

    /// Flag length `r` for EKR-shaped charts.
    pub fn length(&self) -> Option<usize> {
        self.length
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub const T: usize = 0;

    pub const fn x(k: usize) -> usize {
        2 * k + 1
    }

    pub const fn y(k: usize) -> usize {
        2 * k + 2
    }

    pub fn origin(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.dimension()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ekr_layout() {
        let c = Chart::ekr(2);
        assert_eq!(c.dimension(), 7);
        assert_eq!(c.index_of("t"), Some(Chart::T));
        for k in 0..=2 {
            assert_eq!(c.index_of(&format!("x{k}")), Some(Chart::x(k)));
            assert_eq!(c.index_of(&format!("y{k}")), Some(Chart::y(k)));
        }
    }

    #[test]
    fn bcd_layout() {
        let c = Chart::bcd(2, 3);
        assert_eq!(c.names(), ["x0", "x1", "x2", "y1", "y2", "y3"]);
        assert_eq!(c.length(), None);
    }
}
