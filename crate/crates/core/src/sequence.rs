//! Named integer sequences selectable at runtime.
//!
//! Each closed-form count is registered under its class name, and the
//! number of tilings up to symmetry under `distinct`.

use num_bigint::BigUint;
use thiserror::Error;

use crate::aggregate;
use crate::counting::{FormulaRegistry, SymmetryClass};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown sequence {name:?}; available: {available}")]
pub struct UnknownSequence {
    pub name: String,
    pub available: String,
}

/// A sequence indexed by hexagon side.
pub trait Sequence: Send + Sync {
    fn name(&self) -> &str;

    fn description(&self) -> String;

    fn term(&self, n: u32) -> BigUint;
}

/// Tilings fixed by a subgroup of the given class.
pub struct ClassCount(pub SymmetryClass);

impl Sequence for ClassCount {
    fn name(&self) -> &str {
        self.0.name()
    }

    fn description(&self) -> String {
        format!(
            "{} (Stanley case {}, {})",
            self.0.summary(),
            self.0.stanley_case(),
            self.0.oeis_id()
        )
    }

    fn term(&self, n: u32) -> BigUint {
        FormulaRegistry::global()
            .get(self.0)
            .expect("standard formula")
            .count(n)
    }
}

/// Tilings up to rotation and reflection (A066931).
pub struct Distinct;

impl Sequence for Distinct {
    fn name(&self) -> &str {
        "distinct"
    }

    fn description(&self) -> String {
        "tilings up to rotation and reflection (A066931)".to_string()
    }

    fn term(&self, n: u32) -> BigUint {
        aggregate::distinct_count(n)
    }
}

#[derive(Default)]
pub struct SequenceRegistry {
    entries: Vec<Box<dyn Sequence>>,
}

impl SequenceRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `distinct` plus one entry per symmetry class.
    pub fn standard() -> Self {
        let mut reg = Self::new();
        for class in SymmetryClass::ALL {
            reg.register(Box::new(ClassCount(class)));
        }
        reg.register(Box::new(Distinct));
        reg
    }

    pub fn register(&mut self, seq: Box<dyn Sequence>) {
        self.entries.retain(|s| s.name() != seq.name());
        self.entries.push(seq);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Sequence, UnknownSequence> {
        self.entries
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| UnknownSequence {
                name: name.to_string(),
                available: self.names().collect::<Vec<_>>().join(", "),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|s| s.name())
    }
}
