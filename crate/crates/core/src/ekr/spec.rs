use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ekr::Word;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// EKR label together with its shift constants.
///
/// Step `l` (1-based) with operation 1 admits `b_l` and `c_l`, operation 2
/// admits only `c_l`, operation 3 admits none. Missing constants are 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EkrSpec {
    word: Word,
    b: BTreeMap<usize, Rational>,
    c: BTreeMap<usize, Rational>,
}

/// Which of the two shift constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    B,
    C,
}

impl Shift {
    fn name(self) -> char {
        match self {
            Shift::B => 'b',
            Shift::C => 'c',
        }
    }
}

impl EkrSpec {
    /// All constants zero.
    pub fn new(word: Word) -> Self {
        EkrSpec {
            word,
            b: BTreeMap::new(),
            c: BTreeMap::new(),
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn admits(&self, shift: Shift, step: usize) -> bool {
        if step == 0 || step > self.length() {
            return false;
        }
        matches!(
            (shift, self.word.letter(step)),
            (Shift::B, 1) | (Shift::C, 1 | 2)
        )
    }

    pub fn set(&mut self, shift: Shift, step: usize, value: Rational) -> Result<()> {
        if step == 0 || step > self.length() {
            return Err(Error::ConstantNotAdmitted(format!(
                "{}{step}: step outside 1..={}",
                shift.name(),
                self.length()
            )));
        }
        if !self.admits(shift, step) {
            return Err(Error::ConstantNotAdmitted(format!(
                "{}{step}: operation {} at step {step} does not take it",
                shift.name(),
                self.word.letter(step)
            )));
        }
        let map = match shift {
            Shift::B => &mut self.b,
            Shift::C => &mut self.c,
        };
        if value.is_zero() {
            map.remove(&step);
        } else {
            map.insert(step, value);
        }
        Ok(())
    }

    pub fn with(mut self, shift: Shift, step: usize, value: Rational) -> Result<Self> {
        self.set(shift, step, value)?;
        Ok(self)
    }

    pub fn b(&self, step: usize) -> Rational {
        self.b.get(&step).cloned().unwrap_or_default()
    }

    pub fn c(&self, step: usize) -> Rational {
        self.c.get(&step).cloned().unwrap_or_default()
    }

    /// Nonzero `b` constants by step.
    pub fn b_constants(&self) -> &BTreeMap<usize, Rational> {
        &self.b
    }

    pub fn c_constants(&self) -> &BTreeMap<usize, Rational> {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_empty() && self.c.is_empty()
    }

    /// Parses `{"word": "1.2.1.3", "b": {"3": "1/2"}, "c": {"3": "-2"}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text)
            .map_err(|e| Error::BadSyntax(format!("constants file: {e}")))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawSpec::from(self)).expect("plain strings serialize")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    word: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    b: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    c: BTreeMap<String, String>,
}

impl TryFrom<RawSpec> for EkrSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let mut spec = EkrSpec::new(raw.word.parse()?);
        for (shift, map) in [(Shift::B, raw.b), (Shift::C, raw.c)] {
            for (key, value) in map {
                let step: usize = key.trim().parse().map_err(|_| {
                    Error::BadSyntax(format!(
                        "{}: step {key:?} is not a positive integer",
                        shift.name()
                    ))
                })?;
                spec.set(shift, step, value.parse()?)?;
            }
        }
        Ok(spec)
    }
}

impl From<&EkrSpec> for RawSpec {
    fn from(spec: &EkrSpec) -> Self {
        let conv = |m: &BTreeMap<usize, Rational>| {
            m.iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect()
        };
        RawSpec {
            word: spec.word.to_string(),
            b: conv(&spec.b),
            c: conv(&spec.c),
        }
    }
}

impl Serialize for EkrSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawSpec::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for EkrSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawSpec::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}
