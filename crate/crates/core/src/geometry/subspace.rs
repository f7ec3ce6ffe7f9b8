use crate::error::{Error, Result};
use crate::exactalg::{span_includes, Rational, RationalMatrix};

/// Linear subspace of a tangent space, kept as a canonical basis: the nonzero
/// rows of the reduced row echelon form of its spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::identity(ambient),
        }
    }

    pub fn spanned_by(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let spanning = RationalMatrix::from_columns(ambient, vectors)?;
        Ok(Subspace::from_column_span(&spanning))
    }

    /// Column span of a matrix.
    pub fn from_column_span(m: &RationalMatrix) -> Self {
        let (rref, pivots) = m.transpose().rref();
        let rows: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
        let basis = RationalMatrix::from_columns(m.rows(), &rows).expect("row length = ambient");
        Subspace {
            ambient: m.rows(),
            basis,
        }
    }

    /// Span of coordinate versors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<Rational>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace::spanned_by(ambient, &vecs).expect("versor length = ambient")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        let col = RationalMatrix::from_columns(self.ambient, &[v.to_vec()])?;
        span_includes(&col, &self.basis)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::ChartMismatch(format!(
                "ambient dimensions {} vs {}",
                self.ambient, other.ambient
            )));
        }
        span_includes(&self.basis, &other.basis)
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::from_column_span(
            &self.basis.hstack(&other.basis)?,
        ))
    }

    /// Embeds into a larger ambient space by zero-padding trailing coordinates.
    pub fn padded(&self, ambient: usize) -> Subspace {
        assert!(ambient >= self.ambient);
        let vecs: Vec<Vec<Rational>> = self
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                v.resize(ambient, Rational::zero());
                v
            })
            .collect();
        Subspace::spanned_by(ambient, &vecs).expect("padded length")
    }
}
