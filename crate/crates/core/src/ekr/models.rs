use std::fmt;

use crate::ekr::{EkrSpec, Shift};
use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, Rational};
use crate::geometry::{Chart, Distribution, VectorField};

/// Concrete distributions written out verbatim, independently of the EKR
/// builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    /// Jet bundle `J^2(1,2)` on the length-2 chart.
    Ca2,
    /// Length-2 distribution singular on `{x2 = 0}`.
    Ex2,
    /// `(∂x0 + y1∂x1 + … + ym∂xm, ∂y1, …, ∂yn)` on `(x0, x1..xm, y1..yn)`.
    Bcd { m: usize, n: usize },
    /// Length-4 family of class 1.2.1.2.
    AppxBD {
        b3: Rational,
        c3: Rational,
        c4: Rational,
    },
    /// Length-4 family of class 1.2.1.3.
    AppxBE { b3: Rational, c3: Rational },
}

impl Model {
    /// Parses `ca_2`, `ex_2`, `bcd(m,n)`, `appxB_D(b3,c3,c4)` or
    /// `appxB_E(b3,c3)`. Omitted arguments default to `bcd(2,3)` and to
    /// constants equal to 1.
    pub fn parse(name: &str) -> Result<Model> {
        let name = name.trim();
        let (head, args) = match name.find('(') {
            Some(i) if name.ends_with(')') => {
                let inner = &name[i + 1..name.len() - 1];
                let args: Vec<&str> = inner.split(',').map(str::trim).collect();
                (&name[..i], Some(args))
            }
            Some(_) => return Err(Error::BadModelName(name.to_string())),
            None => (name, None),
        };
        let bad = || Error::BadModelName(name.to_string());
        let rationals = |args: &[&str], count: usize| -> Result<Vec<Rational>> {
            if args.len() != count {
                return Err(bad());
            }
            args.iter().map(|a| a.parse()).collect()
        };
        let ones = |count: usize| vec![Rational::one(); count];
        match (head, args) {
            ("ca_2", None) => Ok(Model::Ca2),
            ("ex_2", None) => Ok(Model::Ex2),
            ("bcd", None) => Ok(Model::Bcd { m: 2, n: 3 }),
            ("bcd", Some(a)) => {
                let [m, n] = a[..] else { return Err(bad()) };
                let m: usize = m.parse().map_err(|_| bad())?;
                let n: usize = n.parse().map_err(|_| bad())?;
                if m == 0 || n < m {
                    return Err(bad());
                }
                Ok(Model::Bcd { m, n })
            }
            ("appxB_D", a) => {
                let v = match a {
                    Some(a) => rationals(&a, 3)?,
                    None => ones(3),
                };
                let [b3, c3, c4] = <[Rational; 3]>::try_from(v).expect("three values");
                Ok(Model::AppxBD { b3, c3, c4 })
            }
            ("appxB_E", a) => {
                let v = match a {
                    Some(a) => rationals(&a, 2)?,
                    None => ones(2),
                };
                let [b3, c3] = <[Rational; 2]>::try_from(v).expect("two values");
                Ok(Model::AppxBE { b3, c3 })
            }
            _ => Err(bad()),
        }
    }

    pub fn distribution(&self) -> Distribution {
        match self {
            Model::Ca2 => ca_2(),
            Model::Ex2 => ex_2(),
            Model::Bcd { m, n } => bcd(*m, *n),
            Model::AppxBD { b3, c3, c4 } => appx_b(b3, c3, Some(c4)),
            Model::AppxBE { b3, c3 } => appx_b(b3, c3, None),
        }
    }

    /// The EKR label and constants the model is written in, if it is one.
    pub fn ekr_spec(&self) -> Option<EkrSpec> {
        let word = |w: &str| w.parse().expect("valid literal");
        match self {
            Model::Ca2 => Some(EkrSpec::new(word("1.1"))),
            Model::Ex2 => Some(EkrSpec::new(word("1.2"))),
            Model::Bcd { .. } => None,
            Model::AppxBD { b3, c3, c4 } => Some(
                EkrSpec::new(word("1.2.1.2"))
                    .with(Shift::B, 3, b3.clone())
                    .and_then(|s| s.with(Shift::C, 3, c3.clone()))
                    .and_then(|s| s.with(Shift::C, 4, c4.clone()))
                    .expect("admitted"),
            ),
            Model::AppxBE { b3, c3 } => Some(
                EkrSpec::new(word("1.2.1.3"))
                    .with(Shift::B, 3, b3.clone())
                    .and_then(|s| s.with(Shift::C, 3, c3.clone()))
                    .expect("admitted"),
            ),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Ca2 => f.write_str("ca_2"),
            Model::Ex2 => f.write_str("ex_2"),
            Model::Bcd { m, n } => write!(f, "bcd({m},{n})"),
            Model::AppxBD { b3, c3, c4 } => write!(f, "appxB_D({b3},{c3},{c4})"),
            Model::AppxBE { b3, c3 } => write!(f, "appxB_E({b3},{c3})"),
        }
    }
}

/// Looks up a model by name; see [`Model::parse`].
pub fn model(name: &str) -> Result<Distribution> {
    Ok(Model::parse(name)?.distribution())
}

fn var(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i)
}

/// `∂t + x1∂x0 + y1∂y0`
fn contact_base(n: usize) -> VectorField {
    VectorField::from_parts(
        n,
        [
            (Chart::T, Polynomial::one(n)),
            (Chart::x(0), var(n, Chart::x(1))),
            (Chart::y(0), var(n, Chart::y(1))),
        ],
    )
}

fn with_versors(chart: Chart, first: VectorField, k: usize) -> Distribution {
    let n = chart.dimension();
    let gens = vec![
        first,
        VectorField::versor(n, Chart::x(k)),
        VectorField::versor(n, Chart::y(k)),
    ];
    Distribution::new(chart, gens)
        .expect("three fields")
        .with_declared_rank(3)
}

fn ca_2() -> Distribution {
    let chart = Chart::ekr(2);
    let n = chart.dimension();
    let z = contact_base(n)
        .checked_add(&VectorField::from_parts(
            n,
            [
                (Chart::x(1), var(n, Chart::x(2))),
                (Chart::y(1), var(n, Chart::y(2))),
            ],
        ))
        .expect("same chart");
    with_versors(chart, z, 2)
}

fn ex_2() -> Distribution {
    let chart = Chart::ekr(2);
    let n = chart.dimension();
    let z = contact_base(n)
        .mul_fn(&var(n, Chart::x(2)))
        .checked_add(&VectorField::from_parts(
            n,
            [
                (Chart::x(1), Polynomial::one(n)),
                (Chart::y(1), var(n, Chart::y(2))),
            ],
        ))
        .expect("same chart");
    with_versors(chart, z, 2)
}

fn bcd(m: usize, n_gen: usize) -> Distribution {
    let chart = Chart::bcd(m, n_gen);
    let dim = chart.dimension();
    let y = |j: usize| m + j;
    let mut parts = vec![(0, Polynomial::one(dim))];
    parts.extend((1..=m).map(|i| (i, var(dim, y(i)))));
    let mut gens = vec![VectorField::from_parts(dim, parts)];
    gens.extend((1..=n_gen).map(|j| VectorField::versor(dim, y(j))));
    Distribution::new(chart, gens)
        .expect("nonempty")
        .with_declared_rank(n_gen + 1)
}

/// `x4(x2(∂t + x1∂x0 + y1∂y0) + ∂x1 + y2∂y1 + X3∂x2 + Y3∂y2) + tail`, where
/// the tail is `∂x3 + Y4∂y3` with `c4` given and `y4∂x3 + ∂y3` without.
fn appx_b(b3: &Rational, c3: &Rational, c4: Option<&Rational>) -> Distribution {
    let chart = Chart::ekr(4);
    let n = chart.dimension();
    let inner = contact_base(n)
        .mul_fn(&var(n, Chart::x(2)))
        .checked_add(&VectorField::from_parts(
            n,
            [
                (Chart::x(1), Polynomial::one(n)),
                (Chart::y(1), var(n, Chart::y(2))),
                (Chart::x(2), Polynomial::shifted_var(n, Chart::x(3), b3)),
                (Chart::y(2), Polynomial::shifted_var(n, Chart::y(3), c3)),
            ],
        ))
        .expect("same chart");
    let tail = match c4 {
        Some(c4) => VectorField::from_parts(
            n,
            [
                (Chart::x(3), Polynomial::one(n)),
                (Chart::y(3), Polynomial::shifted_var(n, Chart::y(4), c4)),
            ],
        ),
        None => VectorField::from_parts(
            n,
            [
                (Chart::x(3), var(n, Chart::y(4))),
                (Chart::y(3), Polynomial::one(n)),
            ],
        ),
    };
    let z = inner
        .mul_fn(&var(n, Chart::x(4)))
        .checked_add(&tail)
        .expect("same chart");
    with_versors(chart, z, 4)
}
