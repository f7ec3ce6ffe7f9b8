use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, Rational, RationalMatrix};

/// Matrix of polynomials over a common arity, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    arity: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, arity: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            arity,
            entries: vec![Polynomial::zero(arity); rows * cols],
        }
    }

    /// Matrix whose columns are the given polynomial tuples.
    pub fn from_columns(arity: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = PolyMatrix::zeros(rows, columns.len(), arity);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ChartMismatch("ragged columns".into()));
            }
            for (i, p) in col.iter().enumerate() {
                if p.arity() != arity {
                    return Err(Error::ChartMismatch(format!(
                        "entry arity {} vs {arity}",
                        p.arity()
                    )));
                }
                m.set(i, j, p.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn eval(&self, point: &[Rational]) -> Result<RationalMatrix> {
        if point.len() != self.arity {
            return Err(Error::ChartMismatch(format!(
                "point of length {} for arity {}",
                point.len(),
                self.arity
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).eval_unchecked(point));
            }
        }
        Ok(out)
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Polynomial>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect()
    }
}

/// Determinant by Bareiss fraction-free elimination; every intermediate
/// division is exact.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>, arity: usize) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(arity);
    }
    let mut negate = false;
    let mut prev = Polynomial::one(arity);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero(arity);
            };
            m.swap(k, p);
            negate = !negate;
        }
        let prev_const = prev.is_constant().then(|| prev.constant_term().recip());
        for i in k + 1..n {
            for j in k + 1..n {
                let mut num = &m[k][k] * &m[i][j];
                if !m[i][k].is_zero() && !m[k][j].is_zero() {
                    num = &num - &(&m[i][k] * &m[k][j]);
                }
                m[i][j] = match &prev_const {
                    Some(inv) => num.scale(inv),
                    None => num
                        .exact_div(&prev)
                        .expect("Bareiss step must divide exactly"),
                };
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Divides a tuple of polynomials by its rational content and fixes the sign
/// so that the highest term of the last nonzero entry is positive. Returns
/// false for the zero tuple, which is left untouched.
pub fn make_primitive(tuple: &mut [Polynomial]) -> bool {
    let content = Rational::content(tuple.iter().flat_map(|p| p.terms().map(|(_, c)| c)));
    if content.is_zero() {
        return false;
    }
    let lead_negative = tuple
        .iter()
        .rev()
        .find(|p| !p.is_zero())
        .and_then(Polynomial::leading_term)
        .is_some_and(|(_, c)| c.is_negative());
    let mut factor = content.recip();
    if lead_negative {
        factor = -factor;
    }
    if !factor.is_one() {
        for p in tuple.iter_mut() {
            *p = p.scale(&factor);
        }
    }
    true
}

/// Polynomial covectors `v` with `vᵀ M = 0` identically, valid as a basis of
/// the left kernel near `reference`.
///
/// A nonvanishing minor at the reference point is chosen from the evaluated
/// matrix; each covector is then the cofactor solution for one non-pivot row,
/// with determinants computed fraction-free. Column orders are retried if a
/// candidate fails to annihilate every column identically; when none
/// succeeds the matrix does not have constant rank at the reference point.
pub fn polynomial_nullspace(
    m: &PolyMatrix,
    reference: &[Rational],
) -> Result<Vec<Vec<Polynomial>>> {
    let at_ref = m.eval(reference)?;
    let rank = at_ref.rank();
    if rank == m.rows() {
        return Ok(Vec::new());
    }
    let arity = m.arity();
    for order in column_orders(m.cols()) {
        let permuted = permute_columns(&at_ref, &order);
        let pivot_cols: Vec<usize> = permuted
            .independent_columns()
            .into_iter()
            .map(|c| order[c])
            .collect();
        let restricted = RationalMatrix::from_columns(
            m.rows(),
            &pivot_cols
                .iter()
                .map(|&c| at_ref.column(c))
                .collect::<Vec<_>>(),
        )?;
        let pivot_rows = restricted.transpose().independent_columns();
        debug_assert_eq!(pivot_rows.len(), rank);

        let base = m.submatrix(&pivot_rows, &pivot_cols);
        let det = bareiss_det(base.clone(), arity);
        let mut covectors = Vec::new();
        for i in (0..m.rows()).filter(|i| !pivot_rows.contains(i)) {
            let free_row: Vec<Polynomial> =
                pivot_cols.iter().map(|&c| m.get(i, c).clone()).collect();
            let mut v = vec![Polynomial::zero(arity); m.rows()];
            v[i] = det.clone();
            for (slot, &r) in pivot_rows.iter().enumerate() {
                let mut replaced = base.clone();
                replaced[slot] = free_row.clone();
                v[r] = -bareiss_det(replaced, arity);
            }
            covectors.push(v);
        }
        if covectors.iter().all(|v| annihilates(v, m)) {
            for v in covectors.iter_mut() {
                make_primitive(v);
            }
            return Ok(covectors);
        }
    }
    Err(Error::DegeneratePivot(format!(
        "no pivot choice yields a {}-dimensional annihilator valid at the reference point",
        m.rows() - rank
    )))
}

fn annihilates(v: &[Polynomial], m: &PolyMatrix) -> bool {
    (0..m.cols()).all(|j| {
        let mut acc = Polynomial::zero(m.arity());
        for (i, vi) in v.iter().enumerate() {
            let e = m.get(i, j);
            if !vi.is_zero() && !e.is_zero() {
                acc = &acc + &(vi * e);
            }
        }
        acc.is_zero()
    })
}

fn column_orders(n: usize) -> Vec<Vec<usize>> {
    let mut orders = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().collect()];
    for shift in 1..n {
        orders.push((0..n).map(|i| (i + shift) % n).collect());
    }
    orders.dedup();
    orders
}

fn permute_columns(m: &RationalMatrix, order: &[usize]) -> RationalMatrix {
    let cols: Vec<Vec<Rational>> = order.iter().map(|&c| m.column(c)).collect();
    RationalMatrix::from_columns(m.rows(), &cols).expect("same row count")
}
