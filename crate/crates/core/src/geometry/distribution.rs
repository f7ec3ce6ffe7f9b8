use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactalg::{PolyMatrix, Rational, RationalMatrix};
use crate::geometry::{lie_bracket, Chart, Subspace, VectorField};

/// Default cap on the number of deduplicated small-flag generators.
pub const DEFAULT_GENERATOR_CAP: usize = 50_000;

/// Finitely generated module of polynomial vector fields on a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    chart: Chart,
    generators: Vec<VectorField>,
    declared_rank: Option<usize>,
}

impl Distribution {
    pub fn new(chart: Chart, generators: Vec<VectorField>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ChartMismatch(
                "a distribution needs at least one generator".into(),
            ));
        }
        let n = chart.dimension();
        if let Some(g) = generators.iter().find(|g| g.dimension() != n) {
            return Err(Error::ChartMismatch(format!(
                "generator of dimension {} on a {n}-dimensional chart",
                g.dimension()
            )));
        }
        Ok(Distribution {
            chart,
            generators,
            declared_rank: None,
        })
    }

    /// Distribution spanned by coordinate versors.
    pub fn coordinate(chart: Chart, indices: &[usize]) -> Result<Self> {
        let n = chart.dimension();
        let gens = indices.iter().map(|&i| VectorField::versor(n, i)).collect();
        Distribution::new(chart, gens)
    }

    pub fn tangent_bundle(chart: Chart) -> Self {
        let idx: Vec<usize> = (0..chart.dimension()).collect();
        Distribution::coordinate(chart, &idx).expect("nonempty chart")
    }

    pub fn with_declared_rank(mut self, rank: usize) -> Self {
        self.declared_rank = Some(rank);
        self
    }

    pub fn declared_rank(&self) -> Option<usize> {
        self.declared_rank
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn dimension(&self) -> usize {
        self.chart.dimension()
    }

    pub fn generators(&self) -> &[VectorField] {
        &self.generators
    }

    /// `N × k` matrix whose columns are the generators.
    pub fn generator_matrix(&self) -> PolyMatrix {
        let cols: Vec<Vec<_>> = self
            .generators
            .iter()
            .map(|g| g.components().to_vec())
            .collect();
        PolyMatrix::from_columns(self.dimension(), &cols).expect("generators share the chart")
    }

    fn check_point(&self, p: &[Rational]) -> Result<()> {
        if p.len() != self.dimension() {
            return Err(Error::ChartMismatch(format!(
                "point of length {} on a {}-dimensional chart",
                p.len(),
                self.dimension()
            )));
        }
        Ok(())
    }

    fn evaluated(&self, p: &[Rational]) -> Result<RationalMatrix> {
        self.check_point(p)?;
        let cols: Vec<Vec<Rational>> = self
            .generators
            .iter()
            .map(|g| g.eval(p))
            .collect::<Result<_>>()?;
        RationalMatrix::from_columns(self.dimension(), &cols)
    }

    /// Pointwise value `D(p)`.
    pub fn value_at(&self, p: &[Rational]) -> Result<Subspace> {
        Ok(Subspace::from_column_span(&self.evaluated(p)?))
    }

    pub fn rank_at(&self, p: &[Rational]) -> Result<usize> {
        Ok(self.evaluated(p)?.rank())
    }

    pub fn check_declared_rank(&self, p: &[Rational]) -> Result<()> {
        if let Some(r) = self.declared_rank {
            let got = self.rank_at(p)?;
            if got != r {
                return Err(Error::NotSpecialFlag(format!(
                    "declared rank {r}, pointwise rank {got}"
                )));
            }
        }
        Ok(())
    }

    /// `[D, D]`: the generators together with all pairwise brackets, with zero
    /// fields and rational multiples of earlier generators removed.
    pub fn lie_square(&self) -> Distribution {
        let mut set = GeneratorSet::default();
        for g in &self.generators {
            set.insert(g.clone());
        }
        let base = set.fields.clone();
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                set.insert(lie_bracket(&base[i], &base[j]).expect("same chart"));
            }
        }
        self.derived(set.fields)
    }

    /// Subset of the generators forming a basis of `D(p)`, chosen greedily in
    /// order. For a distribution of constant rank near `p` this is a local
    /// frame and generates the same module germ at `p`.
    pub fn frame_at(&self, p: &[Rational]) -> Result<Distribution> {
        let picked = self.evaluated(p)?.independent_columns();
        if picked.is_empty() {
            return Err(Error::NotSpecialFlag(
                "distribution vanishes at the point".into(),
            ));
        }
        let gens = picked.iter().map(|&i| self.generators[i].clone()).collect();
        Ok(self.derived(gens))
    }

    /// Tower of consecutive Lie squares `D = D^r ⊂ … ⊂ D^0 = TM` checked to
    /// have ranks `3, 5, …, 2r+3` at `p`. Members are kept as frames at `p`,
    /// which relies on the regularity that a special 2-flag guarantees.
    pub fn big_flag(&self, p: &[Rational]) -> Result<BigFlag> {
        self.check_point(p)?;
        let n = self.dimension();
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::NotSpecialFlag(format!(
                "ambient dimension {n} is not of the form 2r+3"
            )));
        }
        let r = (n - 3) / 2;
        let mut current = self.frame_at(p)?;
        let mut top_down = Vec::with_capacity(r + 1);
        for step in 0..=r {
            let expected = 3 + 2 * step;
            let got = current.generators.len();
            if got != expected {
                return Err(Error::NotSpecialFlag(format!(
                    "member D^{} has rank {got} at the point, expected {expected}",
                    r - step
                )));
            }
            top_down.push(current.clone());
            if step < r {
                current = current.lie_square().frame_at(p)?;
            }
        }
        top_down.reverse();
        Ok(BigFlag {
            reference: p.to_vec(),
            members: top_down,
        })
    }

    /// Small flag `V_1 = D`, `V_{i+1} = V_i + [D, V_i]` up to `V_steps`.
    /// Only brackets with generators new at the previous step are formed;
    /// older ones are already in `V_i`.
    pub fn small_flag(&self, steps: usize, cap: usize) -> Result<SmallFlag> {
        if steps == 0 {
            return Err(Error::IndexOutOfRange(
                "small flag needs at least one step".into(),
            ));
        }
        let mut set = GeneratorSet::default();
        for g in &self.generators {
            set.insert(g.clone());
        }
        let base: Vec<VectorField> = set.fields.clone();
        let mut ends = vec![set.fields.len()];
        let mut fresh_start = 0;
        for _ in 1..steps {
            let fresh_end = set.fields.len();
            for h in fresh_start..fresh_end {
                for g in &base {
                    let b = lie_bracket(g, &set.fields[h])?;
                    set.insert(b);
                    if set.fields.len() > cap {
                        return Err(Error::GeneratorBlowup {
                            count: set.fields.len(),
                            cap,
                        });
                    }
                }
            }
            fresh_start = fresh_end;
            ends.push(set.fields.len());
        }
        Ok(SmallFlag {
            base: self.derived(base),
            generators: set.fields,
            ends,
        })
    }

    fn derived(&self, generators: Vec<VectorField>) -> Distribution {
        Distribution {
            chart: self.chart.clone(),
            generators,
            declared_rank: None,
        }
    }
}

#[derive(Default)]
struct GeneratorSet {
    fields: Vec<VectorField>,
    seen: HashSet<VectorField>,
}

impl GeneratorSet {
    fn insert(&mut self, f: VectorField) -> bool {
        let Some(p) = f.primitive() else {
            return false;
        };
        if self.seen.contains(&p) {
            return false;
        }
        self.seen.insert(p.clone());
        self.fields.push(p);
        true
    }
}

/// Big flag at a reference point; `member(j)` is `D^j`.
#[derive(Clone, Debug)]
pub struct BigFlag {
    reference: Vec<Rational>,
    members: Vec<Distribution>,
}

impl BigFlag {
    pub fn length(&self) -> usize {
        self.members.len() - 1
    }

    pub fn reference(&self) -> &[Rational] {
        &self.reference
    }

    pub fn member(&self, j: usize) -> &Distribution {
        &self.members[j]
    }

    /// `(D^r, D^{r-1}, …, D^0)`.
    pub fn top_down(&self) -> impl Iterator<Item = &Distribution> {
        self.members.iter().rev()
    }

    /// Ranks at the reference point from the smallest member up.
    pub fn ranks(&self) -> Vec<usize> {
        self.top_down().map(|d| d.generators().len()).collect()
    }
}

/// Members `V_1 ⊂ V_2 ⊂ …` of a small flag sharing one generator list.
#[derive(Clone, Debug)]
pub struct SmallFlag {
    base: Distribution,
    generators: Vec<VectorField>,
    ends: Vec<usize>,
}

impl SmallFlag {
    pub fn steps(&self) -> usize {
        self.ends.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn gens(&self, i: usize) -> &[VectorField] {
        assert!(
            (1..=self.steps()).contains(&i),
            "small flag member {i} not computed"
        );
        &self.generators[..self.ends[i - 1]]
    }

    /// `V_i`, 1-based.
    pub fn member(&self, i: usize) -> Distribution {
        self.base.derived(self.gens(i).to_vec())
    }

    pub fn members(&self) -> Vec<Distribution> {
        (1..=self.steps()).map(|i| self.member(i)).collect()
    }

    pub fn value_at(&self, i: usize, p: &[Rational]) -> Result<Subspace> {
        self.base.check_point(p)?;
        let cols: Vec<Vec<Rational>> = self
            .gens(i)
            .iter()
            .map(|g| g.eval(p))
            .collect::<Result<_>>()?;
        Ok(Subspace::from_column_span(&RationalMatrix::from_columns(
            self.base.dimension(),
            &cols,
        )?))
    }

    /// Value at `p` of the member one past the last computed one, forming the
    /// final round of brackets pointwise instead of as polynomials.
    pub fn next_value_at(&self, p: &[Rational]) -> Result<Subspace> {
        let last = self.steps();
        let fresh_start = if last == 1 { 0 } else { self.ends[last - 2] };
        let mut cols: Vec<Vec<Rational>> = self
            .gens(last)
            .iter()
            .map(|g| g.eval(p))
            .collect::<Result<_>>()?;
        let base_vals: Vec<Vec<Rational>> = self
            .base
            .generators
            .iter()
            .map(|g| g.eval(p))
            .collect::<Result<_>>()?;
        for h in &self.generators[fresh_start..self.ends[last - 1]] {
            let h_val = h.eval(p)?;
            for (g, g_val) in self.base.generators.iter().zip(&base_vals) {
                cols.push(bracket_at(g, g_val, h, &h_val, p));
            }
        }
        Ok(Subspace::from_column_span(&RationalMatrix::from_columns(
            self.base.dimension(),
            &cols,
        )?))
    }

    /// Whether a rational multiple of `field` is among the generators of `V_i`.
    pub fn has_generator(&self, i: usize, field: &VectorField) -> bool {
        match field.primitive() {
            Some(p) => self.gens(i).contains(&p),
            None => false,
        }
    }
}

/// `[x, y](p)` from the values and first derivatives at `p`.
fn bracket_at(
    x: &VectorField,
    x_val: &[Rational],
    y: &VectorField,
    y_val: &[Rational],
    p: &[Rational],
) -> Vec<Rational> {
    let n = x.dimension();
    let mut out = vec![Rational::zero(); n];
    for (j, slot) in out.iter_mut().enumerate() {
        for i in 0..n {
            if !x_val[i].is_zero() && y.component(j).involves(i) {
                let d = y
                    .component(j)
                    .partial(i)
                    .expect("in range")
                    .eval_unchecked(p);
                *slot += &(&x_val[i] * &d);
            }
            if !y_val[i].is_zero() && x.component(j).involves(i) {
                let d = x
                    .component(j)
                    .partial(i)
                    .expect("in range")
                    .eval_unchecked(p);
                *slot -= &(&y_val[i] * &d);
            }
        }
    }
    out
}
