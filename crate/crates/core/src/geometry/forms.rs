use crate::error::{Error, Result};
use crate::exactalg::{polynomial_nullspace, rank_and_nullspace, Rational, RationalMatrix};
use crate::geometry::{Distribution, OneForm, Subspace};

/// `(dω)_{ij} = (∂a_j/∂u_i − ∂a_i/∂u_j)(p)`, so that `dω(v, w) = vᵀ·dω·w`.
pub fn exterior_derivative_at(omega: &OneForm, p: &[Rational]) -> Result<RationalMatrix> {
    let n = omega.dimension();
    if p.len() != n {
        return Err(Error::ChartMismatch(format!(
            "point of length {} in dimension {n}",
            p.len()
        )));
    }
    let a = omega.coefficients();
    // jac[i][j] = ∂a_j/∂u_i at p
    let mut jac = vec![vec![Rational::zero(); n]; n];
    for (j, aj) in a.iter().enumerate() {
        for (i, slot) in jac.iter_mut().enumerate() {
            if aj.involves(i) {
                slot[j] = aj.partial(i)?.eval_unchecked(p);
            }
        }
    }
    let rows = jac
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| v - &jac[j][i])
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows)
}

/// Primitive polynomial 1-forms annihilating `D` near `p`.
pub fn annihilator(d: &Distribution, p: &[Rational]) -> Result<Vec<OneForm>> {
    polynomial_nullspace(&d.generator_matrix(), p)?
        .into_iter()
        .map(OneForm::new)
        .collect()
}

fn bilinear(omega: &RationalMatrix, v: &[Rational], w: &[Rational]) -> Rational {
    let ow = omega.mul_vec(w);
    v.iter()
        .zip(&ow)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

fn kernel_of_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return (0..cols)
            .map(|i| {
                let mut e = vec![Rational::zero(); cols];
                e[i] = Rational::one();
                e
            })
            .collect();
    }
    let m = RationalMatrix::from_rows(rows).expect("rows share a length");
    rank_and_nullspace(&m).1
}

fn differentials_at(d: &Distribution, p: &[Rational]) -> Result<Vec<RationalMatrix>> {
    annihilator(d, p)?
        .iter()
        .map(|w| exterior_derivative_at(w, p))
        .collect()
}

/// `{v ∈ D(p) : dω(v, w) = 0 for all w ∈ D(p) and all ω annihilating D}`.
///
/// For `ω ∈ D⊥` and sections `v, X` of `D`, `dω(v, X) = −ω([v, X])`, so this
/// is the value of the Cauchy-characteristic module when that module is
/// regular at `p`.
pub fn cauchy_char_at(d: &Distribution, p: &[Rational]) -> Result<Subspace> {
    let value = d.value_at(p)?;
    let basis = value.basis_vectors();
    let n = d.dimension();
    let mut rows = Vec::new();
    for omega in differentials_at(d, p)? {
        for w in &basis {
            rows.push(basis.iter().map(|v| bilinear(&omega, v, w)).collect());
        }
    }
    let coeffs = kernel_of_rows(rows, basis.len());
    let vectors: Vec<Vec<Rational>> = coeffs
        .iter()
        .map(|c| {
            let mut v = vec![Rational::zero(); n];
            for (ci, bi) in c.iter().zip(&basis) {
                if ci.is_zero() {
                    continue;
                }
                for (slot, x) in v.iter_mut().zip(bi) {
                    *slot += &(ci * x);
                }
            }
            v
        })
        .collect();
    Subspace::spanned_by(n, &vectors)
}

/// Covectors `α` at `p` for which `α ∧ dω` vanishes on `D(p)` for every
/// annihilating `ω`. The space is required to be 3-dimensional.
pub fn covariant_forms_at(d: &Distribution, p: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let basis = d.value_at(p)?.basis_vectors();
    let n = d.dimension();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for omega in differentials_at(d, p)? {
        let k = basis.len();
        let w: Vec<Vec<Rational>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| bilinear(&omega, &basis[a], &basis[b]))
                    .collect()
            })
            .collect();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    let row: Vec<Rational> = (0..n)
                        .map(|i| {
                            &(&(&w[b][c] * &basis[a][i]) - &(&w[a][c] * &basis[b][i]))
                                + &(&w[a][b] * &basis[c][i])
                        })
                        .collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let alphas = kernel_of_rows(rows, n);
    if alphas.len() != 3 {
        return Err(Error::UnexpectedCovariantDimension(format!(
            "space of covariant-defining covectors has dimension {}, expected 3",
            alphas.len()
        )));
    }
    Ok(alphas)
}

/// Joint kernel of the covariant-defining covectors: the value at `p` of the
/// corank-1 involutive subdistribution of a corank-2 distribution.
pub fn covariant_at(d: &Distribution, p: &[Rational]) -> Result<Subspace> {
    let n = d.dimension();
    let alphas = covariant_forms_at(d, p)?;
    let kernel = kernel_of_rows(alphas, n);
    if kernel.len() + 3 != n {
        return Err(Error::UnexpectedCovariantDimension(format!(
            "covariant subspace has dimension {}, expected {}",
            kernel.len(),
            n - 3
        )));
    }
    Subspace::spanned_by(n, &kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Polynomial;
    use crate::geometry::{Chart, VectorField};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn closed_forms_have_zero_derivative() {
        let n = 4;
        let p: Vec<Rational> = (1..=4).map(q).collect();
        let dx0 = OneForm::differential(n, 0);
        assert_eq!(
            exterior_derivative_at(&dx0, &p).unwrap(),
            RationalMatrix::zeros(n, n)
        );
        let x0dx0 = OneForm::from_parts(n, [(0, Polynomial::var(n, 0))]);
        assert_eq!(
            exterior_derivative_at(&x0dx0, &p).unwrap(),
            RationalMatrix::zeros(n, n)
        );
    }

    #[test]
    fn derivative_of_contact_form() {
        // chart (x0, x1, y1): ω = dx1 − y1 dx0, dω = dx0 ∧ dy1
        let chart = Chart::bcd(1, 1);
        let n = chart.dimension();
        let omega = OneForm::from_parts(n, [(1, Polynomial::one(n)), (0, -Polynomial::var(n, 2))]);
        let m = exterior_derivative_at(&omega, &chart.origin()).unwrap();
        for i in 0..n {
            for j in 0..n {
                let expect = match (i, j) {
                    (0, 2) => q(1),
                    (2, 0) => q(-1),
                    _ => q(0),
                };
                assert_eq!(m.get(i, j), &expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn tangent_bundle_is_all_characteristic() {
        let chart = Chart::ekr(0);
        let d = Distribution::tangent_bundle(chart.clone());
        assert_eq!(
            cauchy_char_at(&d, &chart.origin()).unwrap(),
            Subspace::full(3)
        );
    }

    #[test]
    fn contact_distribution_has_no_characteristics() {
        // (∂y1, ∂x0 + y1 ∂x1) is the contact plane on R³
        let chart = Chart::bcd(1, 1);
        let n = chart.dimension();
        let a = VectorField::from_parts(n, [(0, Polynomial::one(n)), (1, Polynomial::var(n, 2))]);
        let d = Distribution::new(chart.clone(), vec![a, VectorField::versor(n, 2)]).unwrap();
        assert_eq!(cauchy_char_at(&d, &chart.origin()).unwrap().dim(), 0);
    }

    #[test]
    fn covariant_rejects_wrong_corank() {
        let chart = Chart::bcd(1, 2);
        let d = Distribution::tangent_bundle(chart.clone());
        assert!(matches!(
            covariant_at(&d, &chart.origin()),
            Err(Error::UnexpectedCovariantDimension(_))
        ));
    }
}
