use crate::ekr::{EkrSpec, Word};
use crate::error::{Error, Result};
use crate::exactalg::Polynomial;
use crate::geometry::{Chart, Distribution, VectorField};

/// An EKR distribution with the leading fields of every construction step.
#[derive(Clone, Debug)]
pub struct EkrBuild {
    spec: EkrSpec,
    chart: Chart,
    /// `leading[l]` is the first generator after step `l`; `leading[0] = ∂t`.
    leading: Vec<VectorField>,
}

/// Applies operations `j_1, …, j_r` to `(∂t, ∂x0, ∂y0)`.
pub fn build_ekr(spec: &EkrSpec) -> EkrBuild {
    let r = spec.length();
    let chart = Chart::ekr(r);
    let n = chart.dimension();
    let mut leading = vec![VectorField::versor(n, Chart::T)];
    for l in 1..=r {
        let z1 = &leading[l - 1];
        let x = Polynomial::var(n, Chart::x(l));
        let y = Polynomial::var(n, Chart::y(l));
        let (px, py) = (Chart::x(l - 1), Chart::y(l - 1));
        let next = match spec.word().letter(l) {
            1 => {
                let big_x = Polynomial::shifted_var(n, Chart::x(l), &spec.b(l));
                let big_y = Polynomial::shifted_var(n, Chart::y(l), &spec.c(l));
                let shift = VectorField::from_parts(n, [(px, big_x), (py, big_y)]);
                z1.checked_add(&shift).expect("same chart")
            }
            2 => {
                let big_y = Polynomial::shifted_var(n, Chart::y(l), &spec.c(l));
                let shift = VectorField::from_parts(n, [(px, Polynomial::one(n)), (py, big_y)]);
                z1.mul_fn(&x).checked_add(&shift).expect("same chart")
            }
            _ => {
                let shift = VectorField::from_parts(n, [(px, y), (py, Polynomial::one(n))]);
                z1.mul_fn(&x).checked_add(&shift).expect("same chart")
            }
        };
        leading.push(next);
    }
    EkrBuild {
        spec: spec.clone(),
        chart,
        leading,
    }
}

impl EkrBuild {
    pub fn spec(&self) -> &EkrSpec {
        &self.spec
    }

    pub fn word(&self) -> &Word {
        self.spec.word()
    }

    pub fn length(&self) -> usize {
        self.spec.length()
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    /// Leading field after step `l` on the full chart.
    pub fn leading_field(&self, l: usize) -> &VectorField {
        &self.leading[l]
    }

    /// The distribution `D = (Z1, ∂x_r, ∂y_r)`.
    pub fn distribution(&self) -> Distribution {
        self.flag_member(self.length())
            .expect("top index in range")
            .with_declared_rank(3)
    }

    /// Big-flag member `D^j = (Z1^(j), ∂x_j, ∂y_j, …, ∂x_r, ∂y_r)`; `D^0` is
    /// the whole tangent bundle.
    pub fn flag_member(&self, j: usize) -> Result<Distribution> {
        let r = self.length();
        if j > r {
            return Err(Error::IndexOutOfRange(format!(
                "flag member {j} of a length-{r} flag"
            )));
        }
        let n = self.chart.dimension();
        let mut gens = vec![self.leading[j].clone()];
        for k in j..=r {
            gens.push(VectorField::versor(n, Chart::x(k)));
            gens.push(VectorField::versor(n, Chart::y(k)));
        }
        Ok(Distribution::new(self.chart.clone(), gens)?.with_declared_rank(2 * (r - j) + 3))
    }

    /// `(Z1^(s), ∂x_s, ∂y_s)` on the length-`s` chart: `D^s` with the
    /// versors it shares with every coarser member factored out.
    pub fn truncated_member(&self, s: usize) -> Result<Distribution> {
        let r = self.length();
        if s > r {
            return Err(Error::IndexOutOfRange(format!(
                "flag member {s} of a length-{r} flag"
            )));
        }
        let chart = Chart::ekr(s);
        let n = chart.dimension();
        let gens = vec![
            self.leading[s].with_dimension(n)?,
            VectorField::versor(n, Chart::x(s)),
            VectorField::versor(n, Chart::y(s)),
        ];
        Ok(Distribution::new(chart, gens)?.with_declared_rank(3))
    }
}
