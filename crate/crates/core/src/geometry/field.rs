use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{make_primitive, Polynomial, Rational};

/// Polynomial vector field `Σ comps[i] ∂/∂u_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    comps: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(comps: Vec<Polynomial>) -> Result<Self> {
        let n = comps.len();
        if let Some(p) = comps.iter().find(|p| p.arity() != n) {
            return Err(Error::ChartMismatch(format!(
                "component arity {} in a {n}-dimensional field",
                p.arity()
            )));
        }
        Ok(VectorField { comps })
    }

    pub fn zero(dim: usize) -> Self {
        VectorField {
            comps: vec![Polynomial::zero(dim); dim],
        }
    }

    /// Coordinate versor `∂/∂u_index`.
    pub fn versor(dim: usize, index: usize) -> Self {
        let mut f = VectorField::zero(dim);
        f.comps[index] = Polynomial::one(dim);
        f
    }

    /// Builds from `(index, coefficient)` pairs; repeated indices add up.
    pub fn from_parts<I: IntoIterator<Item = (usize, Polynomial)>>(dim: usize, parts: I) -> Self {
        let mut f = VectorField::zero(dim);
        for (i, p) in parts {
            f.comps[i] += &p;
        }
        f
    }

    pub fn dimension(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        if point.len() != self.dimension() {
            return Err(Error::ChartMismatch(format!(
                "point of length {} in dimension {}",
                point.len(),
                self.dimension()
            )));
        }
        Ok(self.comps.iter().map(|c| c.eval_unchecked(point)).collect())
    }

    /// `f · self`.
    pub fn mul_fn(&self, f: &Polynomial) -> VectorField {
        VectorField {
            comps: self
                .comps
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { c * f })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        self.check_dim(other)?;
        Ok(VectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &VectorField) -> Result<VectorField> {
        self.check_dim(other)?;
        Ok(VectorField {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Directional derivative `X(f) = Σ X_i ∂f/∂u_i`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.arity() != self.dimension() {
            return Err(Error::ChartMismatch(format!(
                "function arity {} vs field dimension {}",
                f.arity(),
                self.dimension()
            )));
        }
        let mut out = Polynomial::zero(f.arity());
        for (i, xi) in self.comps.iter().enumerate() {
            if xi.is_zero() || !f.involves(i) {
                continue;
            }
            out += &(xi * &f.partial(i)?);
        }
        Ok(out)
    }

    /// Rational multiple with coprime integer coefficients and positive
    /// leading sign; `None` for the zero field.
    pub fn primitive(&self) -> Option<VectorField> {
        let mut comps = self.comps.clone();
        make_primitive(&mut comps).then_some(VectorField { comps })
    }

    /// Same field over a chart of different dimension sharing the leading
    /// coordinates. Fails if a dropped coordinate is in use.
    pub fn with_dimension(&self, dim: usize) -> Result<VectorField> {
        let mut comps = Vec::with_capacity(dim);
        for i in 0..dim {
            comps.push(match self.comps.get(i) {
                Some(c) => c.with_arity(dim)?,
                None => Polynomial::zero(dim),
            });
        }
        if self.comps[dim.min(self.comps.len())..]
            .iter()
            .any(|c| !c.is_zero())
        {
            return Err(Error::ChartMismatch(format!(
                "field has components beyond dimension {dim}"
            )));
        }
        Ok(VectorField { comps })
    }

    fn check_dim(&self, other: &VectorField) -> Result<()> {
        if self.dimension() != other.dimension() {
            return Err(Error::ChartMismatch(format!(
                "field dimensions {} vs {}",
                self.dimension(),
                other.dimension()
            )));
        }
        Ok(())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("u{i}"));
                let coef = c.display_with(names);
                if c.len() == 1 && c.constant_term().is_one() {
                    format!("d/d{name}")
                } else if c.len() == 1 {
                    format!("{coef}*d/d{name}")
                } else {
                    format!("({coef})*d/d{name}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// Coordinate Lie bracket `[X, Y]_j = Σ_i (X_i ∂Y_j/∂u_i − Y_i ∂X_j/∂u_i)`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    x.check_dim(y)?;
    let n = x.dimension();
    let mut out = vec![Polynomial::zero(n); n];
    accumulate_derivative(&mut out, x, y, false);
    accumulate_derivative(&mut out, y, x, true);
    Ok(VectorField { comps: out })
}

/// Adds (or subtracts) `Σ_i a_i ∂b/∂u_i` into `out`.
fn accumulate_derivative(out: &mut [Polynomial], a: &VectorField, b: &VectorField, negate: bool) {
    for (i, ai) in a.comps.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.comps.iter().enumerate() {
            if bj.is_zero() || !bj.involves(i) {
                continue;
            }
            let term = ai * &bj.partial(i).expect("index within arity");
            if negate {
                out[j] -= &term;
            } else {
                out[j] += &term;
            }
        }
    }
}

/// Polynomial 1-form `Σ coeffs[i] du_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OneForm {
    coeffs: Vec<Polynomial>,
}

impl OneForm {
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self> {
        let n = coeffs.len();
        if coeffs.iter().any(|p| p.arity() != n) {
            return Err(Error::ChartMismatch("coefficient arity".into()));
        }
        Ok(OneForm { coeffs })
    }

    /// Coordinate differential `du_index`.
    pub fn differential(dim: usize, index: usize) -> Self {
        let mut coeffs = vec![Polynomial::zero(dim); dim];
        coeffs[index] = Polynomial::one(dim);
        OneForm { coeffs }
    }

    pub fn from_parts<I: IntoIterator<Item = (usize, Polynomial)>>(dim: usize, parts: I) -> Self {
        let mut coeffs = vec![Polynomial::zero(dim); dim];
        for (i, p) in parts {
            coeffs[i] += &p;
        }
        OneForm { coeffs }
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// `ω(X)` as a polynomial.
    pub fn apply(&self, x: &VectorField) -> Result<Polynomial> {
        if x.dimension() != self.dimension() {
            return Err(Error::ChartMismatch("form/field dimension".into()));
        }
        let mut out = Polynomial::zero(self.dimension());
        for (a, v) in self.coeffs.iter().zip(x.components()) {
            if !a.is_zero() && !v.is_zero() {
                out += &(a * v);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        if point.len() != self.dimension() {
            return Err(Error::ChartMismatch("point length".into()));
        }
        Ok(self
            .coeffs
            .iter()
            .map(|c| c.eval_unchecked(point))
            .collect())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("u{i}"));
                format!("({})d{name}", c.display_with(names))
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
