use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::SandwichWord;
use crate::ekr::{EkrBuild, Word};
use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::geometry::{
    cauchy_char_at, covariant_at, BigFlag, Chart, Distribution, Subspace, DEFAULT_GENERATOR_CAP,
};

/// Where `F` and the Cauchy-characteristic values `L(D^j)(p)` come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeometrySource {
    /// Coordinate versors, valid for distributions written in an EKR chart.
    #[default]
    ClosedForm,
    /// Pointwise linear algebra on annihilators and their differentials.
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub geometry: GeometrySource,
    /// Cap on deduplicated small-flag generators.
    pub cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            geometry: GeometrySource::ClosedForm,
            cap: DEFAULT_GENERATOR_CAP,
        }
    }
}

/// What to classify.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    /// An EKR; flag members come from its construction steps.
    Ekr(&'a EkrBuild),
    /// Any rank-3 distribution; its big flag is computed by brute force.
    /// Closed-form geometry is used only on EKR-shaped charts of the right
    /// length, generic geometry otherwise.
    Distribution(&'a Distribution),
}

/// One refined position of the sandwich word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    /// Position `s` of the `2̲` being refined.
    pub position: usize,
    /// Position of the previous `2̲`.
    pub nu: usize,
    /// Number of 1's strictly between `nu` and `position`.
    pub l: usize,
    /// Small-flag member tested, `V_{2l+3}`.
    pub member: String,
    /// Whether its value lies in `F(p)` (for `nu = 2`) or `L(D^{nu-2})(p)`.
    pub included: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub point: Vec<Rational>,
    pub sandwich: SandwichWord,
    pub word: Word,
    pub geometry: GeometrySource,
    pub evidence: Vec<Evidence>,
}

/// Sandwich class of the flag at `p`.
pub fn sandwich_class_at(
    target: Target<'_>,
    p: &[Rational],
    options: ClassifyOptions,
) -> Result<SandwichWord> {
    Classifier::new(target, p, options)?.sandwich()
}

/// Singularity class of the flag at `p`, with the small-flag evidence for
/// every `2̲` after the first.
pub fn singularity_class_at(
    target: Target<'_>,
    p: &[Rational],
    options: ClassifyOptions,
) -> Result<ClassificationReport> {
    let mut c = Classifier::new(target, p, options)?;
    let sandwich = c.sandwich()?;
    let (word, evidence) = c.refine(&sandwich)?;
    Ok(ClassificationReport {
        point: p.to_vec(),
        sandwich,
        word,
        geometry: c.geometry,
        evidence,
    })
}

enum Flag<'a> {
    Ekr(&'a EkrBuild),
    Brute(BigFlag),
}

struct Classifier<'a> {
    flag: Flag<'a>,
    r: usize,
    n: usize,
    p: Vec<Rational>,
    geometry: GeometrySource,
    cap: usize,
    f: Option<Subspace>,
    l: BTreeMap<usize, Subspace>,
}

impl<'a> Classifier<'a> {
    fn new(target: Target<'a>, p: &[Rational], options: ClassifyOptions) -> Result<Self> {
        let (flag, chart, geometry) = match target {
            Target::Ekr(b) => (Flag::Ekr(b), b.chart(), options.geometry),
            Target::Distribution(d) => {
                if p.len() != d.dimension() {
                    return Err(point_mismatch(p.len(), d.dimension()));
                }
                d.check_declared_rank(p)?;
                let big = d.big_flag(p)?;
                let geometry = if d.chart().length() == Some(big.length()) {
                    options.geometry
                } else {
                    GeometrySource::Generic
                };
                (Flag::Brute(big), d.chart(), geometry)
            }
        };
        let n = chart.dimension();
        if p.len() != n {
            return Err(point_mismatch(p.len(), n));
        }
        let r = (n - 3) / 2;
        if r == 0 {
            return Err(Error::NotSpecialFlag(
                "a flag of length 0 has no class".into(),
            ));
        }
        Ok(Classifier {
            flag,
            r,
            n,
            p: p.to_vec(),
            geometry,
            cap: options.cap,
            f: None,
            l: BTreeMap::new(),
        })
    }

    fn member(&self, j: usize) -> Result<Distribution> {
        match &self.flag {
            Flag::Ekr(b) => b.flag_member(j),
            Flag::Brute(big) => Ok(big.member(j).clone()),
        }
    }

    /// Distribution whose small flag decides position `s`. For EKRs this is
    /// `D^s` on the length-`s` chart: the dropped versors commute with it
    /// and lie in every target subspace, so inclusions are unaffected.
    fn small_flag_base(&self, s: usize) -> Result<Distribution> {
        match &self.flag {
            Flag::Ekr(b) => b.truncated_member(s),
            Flag::Brute(big) => Ok(big.member(s).clone()),
        }
    }

    fn versors_from(&self, k: usize) -> Subspace {
        let idx: Vec<usize> = (k..=self.r)
            .flat_map(|i| [Chart::x(i), Chart::y(i)])
            .collect();
        Subspace::coordinate(self.n, &idx)
    }

    fn f(&mut self) -> Result<Subspace> {
        if self.f.is_none() {
            let value = match self.geometry {
                GeometrySource::ClosedForm => self.versors_from(1),
                GeometrySource::Generic => covariant_at(&self.member(1)?, &self.p)?,
            };
            self.f = Some(value);
        }
        Ok(self.f.clone().expect("just set"))
    }

    fn l(&mut self, j: usize) -> Result<Subspace> {
        if !self.l.contains_key(&j) {
            let value = match self.geometry {
                GeometrySource::ClosedForm => self.versors_from(j + 1),
                GeometrySource::Generic => cauchy_char_at(&self.member(j)?, &self.p)?,
            };
            self.l.insert(j, value);
        }
        Ok(self.l[&j].clone())
    }

    /// `F(p)` for position 2, `L(D^{j-2})(p)` beyond.
    fn sandwich_target(&mut self, j: usize) -> Result<Subspace> {
        if j == 2 {
            self.f()
        } else {
            self.l(j - 2)
        }
    }

    fn sandwich(&mut self) -> Result<SandwichWord> {
        let mut letters = vec![false];
        for j in 2..=self.r {
            let value = self.member(j)?.value_at(&self.p)?;
            let target = self.sandwich_target(j)?;
            letters.push(value.is_subspace_of(&target)?);
        }
        SandwichWord::new(letters)
    }

    fn refine(&mut self, sandwich: &SandwichWord) -> Result<(Word, Vec<Evidence>)> {
        let mut letters = vec![1u8; self.r];
        let mut evidence = Vec::new();
        let mut previous: Option<usize> = None;
        for s in sandwich.underlined_positions() {
            let Some(nu) = previous else {
                letters[s - 1] = 2;
                previous = Some(s);
                continue;
            };
            let l = s - nu - 1;
            let steps = 2 * l + 3;
            let base = self.small_flag_base(s)?;
            let local = &self.p[..base.dimension()];
            let flag = base.small_flag(steps - 1, self.cap)?;
            let value = flag.next_value_at(local)?.padded(self.n);
            let target = self.sandwich_target(nu)?;
            let included = value.is_subspace_of(&target)?;
            letters[s - 1] = if included { 3 } else { 2 };
            evidence.push(Evidence {
                position: s,
                nu,
                l,
                member: format!("V_{steps}"),
                included,
            });
            previous = Some(s);
        }
        Ok((Word::new(letters)?, evidence))
    }
}

fn point_mismatch(got: usize, n: usize) -> Error {
    Error::ChartMismatch(format!("point of length {got} on a {n}-dimensional chart"))
}
