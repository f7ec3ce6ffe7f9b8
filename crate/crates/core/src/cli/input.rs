use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Comma-separated rationals, e.g. `0,1/2,-3`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::BadSyntax("empty point".into()));
    }
    text.split(',').map(|s| s.trim().parse()).collect()
}

/// `step=value`, e.g. `3=-1/2`.
pub fn parse_assignment(text: &str) -> Result<(usize, Rational)> {
    let (step, value) = text
        .split_once('=')
        .ok_or_else(|| Error::BadSyntax(format!("expected step=value, got {text:?}")))?;
    let step = step
        .trim()
        .parse()
        .map_err(|_| Error::BadSyntax(format!("step {step:?} is not a positive integer")))?;
    Ok((step, value.trim().parse()?))
}
