use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Monomial as a sorted list of `(variable index, positive exponent)`.
/// The empty list is the constant monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        Monomial(vec![(index as u32, 1)])
    }

    /// Builds from `(var, exp)` pairs in any order; zero exponents are dropped
    /// and repeated variables are merged.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v as u32).or_insert(0u32) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v as usize == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Formal derivative: `(exponent, monomial with that exponent lowered)`.
    pub fn derivative(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|&(v, _)| v as usize == var)?;
        let e = self.0[pos].1;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 = e - 1;
        }
        Some((e, Monomial(rest)))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for &(v, e) in &self.0 {
            acc *= &point[v as usize].pow(e);
        }
        acc
    }

    /// Like `eval`, but short-circuits when a factor vanishes.
    fn eval_fast(&self, point: &[Rational]) -> Rational {
        for &(v, _) in &self.0 {
            if point[v as usize].is_zero() {
                return Rational::zero();
            }
        }
        self.eval(point)
    }
}

/// Graded lexicographic order: total degree first, then the exponent of
/// variable 0, then variable 1, and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        while i < a.len() && i < b.len() {
            let (va, ea) = a[i];
            let (vb, eb) = b[i];
            if va != vb {
                // Whoever carries the smaller variable index is lex-larger.
                return if va < vb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
            i += 1;
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("u{v}")
                } else {
                    format!("u{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables (the chart arity).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Polynomial::constant(arity, Rational::one())
    }

    /// The coordinate function `u_index`. Panics if `index >= arity`.
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable {index} outside arity {arity}");
        let mut p = Polynomial::zero(arity);
        p.terms.insert(Monomial::var(index), Rational::one());
        p
    }

    /// `c + u_index`, the shifted coordinate used by the EKR operations.
    pub fn shifted_var(arity: usize, index: usize, c: &Rational) -> Self {
        let mut p = Polynomial::var(arity, index);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c.clone());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        arity: usize,
        terms: I,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(arity);
        for (m, c) in terms {
            if let Some(v) = m.max_var() {
                if v >= arity {
                    return Err(Error::ChartMismatch(format!(
                        "variable {v} outside arity {arity}"
                    )));
                }
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Highest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest variable index with a nonzero exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ChartMismatch(format!(
                "arity {} vs {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Exact formal partial derivative with respect to `u_var`.
    pub fn partial(&self, var: usize) -> Result<Polynomial> {
        if var >= self.arity {
            return Err(Error::ChartMismatch(format!(
                "variable {var} outside arity {}",
                self.arity
            )));
        }
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.derivative(var) {
                out.add_term(rest, &(c * Rational::from_integer(e as i64)));
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ChartMismatch(format!(
                "point of length {} for arity {}",
                point.len(),
                self.arity
            )));
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let v = m.eval_fast(point);
            if !v.is_zero() {
                acc += &(c * v);
            }
        }
        acc
    }

    /// Same polynomial viewed over a different number of variables. Fails if a
    /// variable in use would fall outside the new arity.
    pub fn with_arity(&self, arity: usize) -> Result<Polynomial> {
        if let Some(v) = self.max_var() {
            if v >= arity {
                return Err(Error::ChartMismatch(format!(
                    "variable {v} in use, cannot restrict to arity {arity}"
                )));
            }
        }
        Ok(Polynomial {
            arity,
            terms: self.terms.clone(),
        })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. Panics on a zero divisor.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.arity);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), &-(dc * &qc));
            }
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    /// Rational content: all coefficients divided by it become coprime integers.
    pub fn content(&self) -> Rational {
        Rational::content(self.terms.values())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .vars()
                .map(|(v, e)| {
                    let name = names.get(v).cloned().unwrap_or_else(|| format!("u{v}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.arity, rhs.arity, "polynomial arity mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

// Operator forms panic on arity mismatch; use the `checked_*` methods when the
// operands come from different sources.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn x(arity: usize, i: usize) -> Polynomial {
        Polynomial::var(arity, i)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let a = x(3, 1);
        assert!((&a + &-&a).is_zero());
    }

    #[test]
    fn distributes_over_sum() {
        let n = 3;
        let lhs = &x(n, 2) * &(&Polynomial::one(n) + &x(n, 1));
        let rhs = &x(n, 2) + &(&x(n, 1) * &x(n, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shifted_product_expands() {
        // (1/2 + x)(2 + y) over (x, y)
        let n = 2;
        let a = Polynomial::shifted_var(n, 0, &q(1, 2));
        let b = Polynomial::shifted_var(n, 1, &q(2, 1));
        let got = &a * &b;
        // Term-by-term oracle: sum over the 2x2 products.
        let pieces = [
            (Monomial::one(), q(1, 2) * q(2, 1)),
            (Monomial::var(1), q(1, 2)),
            (Monomial::var(0), q(2, 1)),
            (Monomial::from_pairs([(0, 1), (1, 1)]), q(1, 1)),
        ];
        let expected = Polynomial::from_terms(n, pieces).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.constant_term(), q(1, 1));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let a = x(3, 0);
        let b = x(4, 0);
        assert!(matches!(a.checked_add(&b), Err(Error::ChartMismatch(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::ChartMismatch(_))));
        assert!(matches!(a.partial(3), Err(Error::ChartMismatch(_))));
        assert!(matches!(a.eval(&[q(0, 1)]), Err(Error::ChartMismatch(_))));
    }

    #[test]
    fn partials() {
        let n = 5;
        let cube = &(&x(n, 3) * &x(n, 3)) * &x(n, 3);
        assert_eq!(
            cube.partial(3).unwrap(),
            (&x(n, 3) * &x(n, 3)).scale(&q(3, 1))
        );
        assert!((&x(n, 1) + &x(n, 2)).partial(0).unwrap().is_zero());
        // d/dy (x * (c + y)) = x
        let f = &x(n, 1) * &Polynomial::shifted_var(n, 2, &q(3, 7));
        assert_eq!(f.partial(2).unwrap(), x(n, 1));
    }

    #[test]
    fn evaluation() {
        let n = 3;
        let f = &x(n, 2) * &(&Polynomial::one(n) + &x(n, 1));
        let p = [q(0, 1), q(1, 1), q(2, 1)];
        assert_eq!(f.eval(&p).unwrap(), q(4, 1));
        let g = Polynomial::shifted_var(n, 2, &q(3, 7));
        assert_eq!(g.eval(&[q(0, 1), q(0, 1), q(0, 1)]).unwrap(), q(3, 7));
    }

    #[test]
    fn graded_lex_order() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        let x1sq = Monomial::from_pairs([(1, 2)]);
        let x0x1 = Monomial::from_pairs([(0, 1), (1, 1)]);
        assert!(Monomial::one() < x1);
        assert!(x1 < x0);
        assert!(x0 < x1sq);
        assert!(x1sq < x0x1);
    }

    #[test]
    fn exact_division() {
        let n = 3;
        let a = &Polynomial::shifted_var(n, 0, &q(1, 2)) + &x(n, 1);
        let b = &x(n, 2) - &Polynomial::one(n);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(a.exact_div(&x(n, 2)).is_none());
    }
}
