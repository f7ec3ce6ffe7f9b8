use crate::error::{Error, Result};
use crate::geometry::{Chart, Distribution};

fn versors_from(k: usize, r: usize) -> Vec<usize> {
    (k..=r).flat_map(|i| [Chart::x(i), Chart::y(i)]).collect()
}

/// Covariant subdistribution of `D^1` for an EKR of length `r`:
/// `(∂x1, ∂y1, …, ∂xr, ∂yr)`.
pub fn closed_form_f(r: usize) -> Result<Distribution> {
    if r == 0 {
        return Err(Error::IndexOutOfRange("F needs length at least 1".into()));
    }
    Distribution::coordinate(Chart::ekr(r), &versors_from(1, r))
}

/// Cauchy-characteristic module of `D^j` for an EKR of length `r`:
/// `(∂x_{j+1}, ∂y_{j+1}, …, ∂xr, ∂yr)` for `1 ≤ j ≤ r − 1`. The module of
/// `D^r` itself is zero.
pub fn closed_form_l(j: usize, r: usize) -> Result<Distribution> {
    if j == 0 || j >= r {
        return Err(Error::IndexOutOfRange(format!(
            "L(D^{j}) in length {r} needs 1 <= j <= {}",
            r.saturating_sub(1)
        )));
    }
    Distribution::coordinate(Chart::ekr(r), &versors_from(j + 1, r))
}
