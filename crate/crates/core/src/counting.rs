//! Closed-form counts of tilings fixed by each nontrivially weighted
//! symmetry class.
//!
//! Each formula is a ratio of factorial products. The numerator and
//! denominator are accumulated separately and divided once; a nonzero
//! remainder means the formula was mistyped and is treated as a bug.
//!
//! All counts are indexed by the hexagon side `n`. Classes whose tilings only
//! exist for even sides return 0 at odd `n` and are evaluated at `m = n / 2`
//! otherwise.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::dihedral::SubgroupKind;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("no closed-form count is available for {0:?} (Stanley case {1})")]
    FormulaUnavailable(SubgroupKind, u8),
    #[error("unknown symmetry class {0:?}; expected one of: {1}")]
    UnknownClass(String, String),
}

/// The six symmetry classes whose subgroups carry nonzero weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryClass {
    Any,
    VertexReflection,
    EdgeReflection,
    HalfTurn,
    Rot120,
    Rot60,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 6] = [
        SymmetryClass::Any,
        SymmetryClass::VertexReflection,
        SymmetryClass::EdgeReflection,
        SymmetryClass::HalfTurn,
        SymmetryClass::Rot120,
        SymmetryClass::Rot60,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Any => "any",
            SymmetryClass::VertexReflection => "vertex-reflection",
            SymmetryClass::EdgeReflection => "edge-reflection",
            SymmetryClass::HalfTurn => "half-turn",
            SymmetryClass::Rot120 => "rot120",
            SymmetryClass::Rot60 => "rot60",
        }
    }

    pub fn stanley_case(self) -> u8 {
        self.kind().stanley_case()
    }

    /// What the class counts.
    pub fn summary(self) -> &'static str {
        match self {
            SymmetryClass::Any => "all tilings",
            SymmetryClass::VertexReflection => "tilings symmetric about a corner-to-corner axis",
            SymmetryClass::EdgeReflection => "tilings symmetric about an edge-to-edge axis",
            SymmetryClass::HalfTurn => "tilings invariant under a half turn",
            SymmetryClass::Rot120 => "tilings invariant under a third of a turn",
            SymmetryClass::Rot60 => "tilings invariant under a sixth of a turn",
        }
    }

    pub fn oeis_id(self) -> &'static str {
        match self {
            SymmetryClass::Any => "A008793",
            SymmetryClass::VertexReflection => "A049505",
            SymmetryClass::EdgeReflection => "A181119-inflated",
            SymmetryClass::HalfTurn => "A259049",
            SymmetryClass::Rot120 => "A006366",
            SymmetryClass::Rot60 => "A049503",
        }
    }

    pub fn kind(self) -> SubgroupKind {
        match self {
            SymmetryClass::Any => SubgroupKind::Trivial,
            SymmetryClass::VertexReflection => SubgroupKind::VertexReflection,
            SymmetryClass::EdgeReflection => SubgroupKind::EdgeReflection,
            SymmetryClass::HalfTurn => SubgroupKind::HalfTurn,
            SymmetryClass::Rot120 => SubgroupKind::Rotation120,
            SymmetryClass::Rot60 => SubgroupKind::Rotation60,
        }
    }
}

impl TryFrom<SubgroupKind> for SymmetryClass {
    type Error = CountError;

    fn try_from(kind: SubgroupKind) -> Result<Self, CountError> {
        SymmetryClass::ALL
            .into_iter()
            .find(|c| c.kind() == kind)
            .ok_or(CountError::FormulaUnavailable(kind, kind.stanley_case()))
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = CountError;

    fn from_str(s: &str) -> Result<Self, CountError> {
        SymmetryClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SymmetryClass::ALL.iter().map(|c| c.name()).collect();
                CountError::UnknownClass(s.to_string(), names.join(", "))
            })
    }
}

/// Table of `0!, 1!, …, max!`.
#[derive(Debug)]
pub struct Factorials {
    table: Vec<BigUint>,
}

impl Factorials {
    pub fn up_to(max: usize) -> Self {
        let mut table = Vec::with_capacity(max + 1);
        table.push(BigUint::one());
        Self::extend(&mut table, max);
        Factorials { table }
    }

    fn extend(table: &mut Vec<BigUint>, max: usize) {
        while table.len() <= max {
            let k = table.len();
            let next = &table[k - 1] * BigUint::from(k);
            table.push(next);
        }
    }

    pub fn max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.table[k]
    }

    /// Process-wide table covering at least `max`. Growth replaces the shared
    /// table under a write lock, so readers always see a complete table.
    pub fn shared(max: usize) -> Arc<Factorials> {
        static SHARED: OnceLock<RwLock<Arc<Factorials>>> = OnceLock::new();
        let lock = SHARED.get_or_init(|| RwLock::new(Arc::new(Factorials::up_to(64))));
        {
            let current = lock.read().expect("factorial table lock");
            if current.max() >= max {
                return Arc::clone(&current);
            }
        }
        let mut current = lock.write().expect("factorial table lock");
        if current.max() < max {
            let mut table = current.table.clone();
            Self::extend(&mut table, max.max(2 * current.max()));
            *current = Arc::new(Factorials { table });
        }
        Arc::clone(&current)
    }
}

/// `∏ num! · ∏ extra / ∏ den!`, evaluated with a single exact division.
#[derive(Debug, Default, Clone)]
pub struct FactorialRatio {
    num: Vec<usize>,
    den: Vec<usize>,
    extra: Vec<u64>,
}

impl FactorialRatio {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num(&mut self, k: usize) -> &mut Self {
        self.num.push(k);
        self
    }

    pub fn den(&mut self, k: usize) -> &mut Self {
        self.den.push(k);
        self
    }

    /// Multiplies the numerator by a plain integer factor.
    pub fn times(&mut self, k: u64) -> &mut Self {
        self.extra.push(k);
        self
    }

    /// Largest factorial argument referenced.
    pub fn max_arg(&self) -> usize {
        self.num.iter().chain(&self.den).copied().max().unwrap_or(0)
    }

    pub fn evaluate(&self, facts: &Factorials) -> BigUint {
        let mut numer: Vec<BigUint> = self.num.iter().map(|&k| facts.get(k).clone()).collect();
        numer.extend(self.extra.iter().map(|&k| BigUint::from(k)));
        let denom: Vec<BigUint> = self.den.iter().map(|&k| facts.get(k).clone()).collect();
        exact_div(product_tree(numer), &product_tree(denom))
    }
}

/// Product of `values` by balanced pairwise multiplication.
pub fn product_tree(mut values: Vec<BigUint>) -> BigUint {
    if values.is_empty() {
        return BigUint::one();
    }
    while values.len() > 1 {
        let mut next = Vec::with_capacity(values.len().div_ceil(2));
        let mut it = values.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        values = next;
    }
    values.pop().expect("one value left")
}

/// Divides and asserts a zero remainder.
pub fn exact_div(numer: BigUint, denom: &BigUint) -> BigUint {
    let (q, r) = numer.div_rem(denom);
    assert!(r.is_zero(), "inexact division in a product formula");
    q
}

/// A closed-form count of tilings fixed by one symmetry class.
pub trait CountFormula: Send + Sync {
    fn class(&self) -> SymmetryClass;

    /// The factorial ratio for side `n`, or `None` when the parity rule
    /// forbids tilings.
    fn ratio(&self, n: u32) -> Option<FactorialRatio>;

    fn count_with(&self, n: u32, facts: &Factorials) -> BigUint {
        match self.ratio(n) {
            Some(ratio) => ratio.evaluate(facts),
            None => BigUint::zero(),
        }
    }

    fn count(&self, n: u32) -> BigUint {
        match self.ratio(n) {
            Some(ratio) => ratio.evaluate(&Factorials::shared(ratio.max_arg())),
            None => BigUint::zero(),
        }
    }
}

/// All tilings: `∏_{i<n} i!(i+2n)! / (i+n)!²`.
pub struct AnyTiling;

impl CountFormula for AnyTiling {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::Any
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let n = n as usize;
        let mut r = FactorialRatio::new();
        for i in 0..n {
            r.num(i).num(i + 2 * n).den(i + n).den(i + n);
        }
        Some(r)
    }
}

/// Vertex-axis reflection: `∏_{i<n} (2i)!(i+2n)! / ((2i+n)!(i+n)!)`.
pub struct VertexReflection;

impl CountFormula for VertexReflection {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::VertexReflection
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let n = n as usize;
        let mut r = FactorialRatio::new();
        for i in 0..n {
            r.num(2 * i).num(i + 2 * n).den(2 * i + n).den(i + n);
        }
        Some(r)
    }
}

/// Edge-axis reflection, zero for odd sides. For `n = 2m`:
/// `C(3m−1, m) ∏_{i=0}^{2m−3} (i+4m)!(2i+2)! / ((2i+2m+2)!(i+2m)!)`,
/// where the product is empty for `m = 1`.
pub struct EdgeReflection;

impl CountFormula for EdgeReflection {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::EdgeReflection
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let m = even_half(n)?;
        let mut r = FactorialRatio::new();
        if m == 0 {
            return Some(r);
        }
        // binomial(3m-1, m)
        r.num(3 * m - 1).den(m).den(2 * m - 1);
        for i in 0..(2 * m).saturating_sub(2) {
            r.num(i + 4 * m)
                .num(2 * i + 2)
                .den(2 * i + 2 * m + 2)
                .den(i + 2 * m);
        }
        Some(r)
    }
}

/// Half turn, zero for odd sides; for `n = 2m` the square of the
/// all-tilings count at side `m`.
pub struct HalfTurn;

impl CountFormula for HalfTurn {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::HalfTurn
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let m = even_half(n)?;
        let mut r = FactorialRatio::new();
        for i in 0..m {
            r.num(i).num(i).num(i + 2 * m).num(i + 2 * m);
            r.den(i + m).den(i + m).den(i + m).den(i + m);
        }
        Some(r)
    }
}

/// 120° rotation: `∏_{i<n} (3i+2)(3i)!(i+2n)! / ((2i+n)!(2i+n+1)!)`.
pub struct Rot120;

impl CountFormula for Rot120 {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::Rot120
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let n = n as usize;
        let mut r = FactorialRatio::new();
        for i in 0..n {
            r.times(3 * i as u64 + 2)
                .num(3 * i)
                .num(i + 2 * n)
                .den(2 * i + n)
                .den(2 * i + n + 1);
        }
        Some(r)
    }
}

/// 60° rotation, zero for odd sides (it contains the half turn). For
/// `n = 2m`: `∏_{i<m} (3i+1)!² / (i+m)!²`.
pub struct Rot60;

impl CountFormula for Rot60 {
    fn class(&self) -> SymmetryClass {
        SymmetryClass::Rot60
    }

    fn ratio(&self, n: u32) -> Option<FactorialRatio> {
        let m = even_half(n)?;
        let mut r = FactorialRatio::new();
        for i in 0..m {
            r.num(3 * i + 1).num(3 * i + 1).den(i + m).den(i + m);
        }
        Some(r)
    }
}

fn even_half(n: u32) -> Option<usize> {
    n.is_multiple_of(2).then_some((n / 2) as usize)
}

/// Formulas registered by class.
pub struct FormulaRegistry {
    formulas: Vec<Box<dyn CountFormula>>,
}

impl FormulaRegistry {
    pub fn empty() -> Self {
        FormulaRegistry { formulas: Vec::new() }
    }

    /// Registry holding the six built-in formulas.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(AnyTiling));
        reg.register(Box::new(VertexReflection));
        reg.register(Box::new(EdgeReflection));
        reg.register(Box::new(HalfTurn));
        reg.register(Box::new(Rot120));
        reg.register(Box::new(Rot60));
        reg
    }

    /// Shared standard registry.
    pub fn global() -> &'static FormulaRegistry {
        static REG: OnceLock<FormulaRegistry> = OnceLock::new();
        REG.get_or_init(FormulaRegistry::standard)
    }

    /// Adds a formula, replacing any earlier one for the same class.
    pub fn register(&mut self, formula: Box<dyn CountFormula>) {
        let class = formula.class();
        self.formulas.retain(|f| f.class() != class);
        self.formulas.push(formula);
    }

    pub fn get(&self, class: SymmetryClass) -> Option<&dyn CountFormula> {
        self.formulas
            .iter()
            .find(|f| f.class() == class)
            .map(|f| f.as_ref())
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn CountFormula, CountError> {
        let class: SymmetryClass = name.parse()?;
        self.get(class)
            .ok_or(CountError::FormulaUnavailable(class.kind(), class.stanley_case()))
    }

    pub fn for_kind(&self, kind: SubgroupKind) -> Result<&dyn CountFormula, CountError> {
        let class = SymmetryClass::try_from(kind)?;
        self.get(class)
            .ok_or(CountError::FormulaUnavailable(kind, kind.stanley_case()))
    }

    pub fn classes(&self) -> impl Iterator<Item = SymmetryClass> + '_ {
        self.formulas.iter().map(|f| f.class())
    }
}

pub fn count_any(n: u32) -> BigUint {
    count_for_class(SymmetryClass::Any, n)
}

pub fn count_symmetric(n: u32) -> BigUint {
    count_for_class(SymmetryClass::VertexReflection, n)
}

pub fn count_transpose_complementary(n: u32) -> BigUint {
    count_for_class(SymmetryClass::EdgeReflection, n)
}

pub fn count_self_complementary(n: u32) -> BigUint {
    count_for_class(SymmetryClass::HalfTurn, n)
}

pub fn count_cyclically_symmetric(n: u32) -> BigUint {
    count_for_class(SymmetryClass::Rot120, n)
}

pub fn count_cyclic_self_complementary(n: u32) -> BigUint {
    count_for_class(SymmetryClass::Rot60, n)
}

type CountMemo = RwLock<HashMap<(SymmetryClass, u32), Arc<BigUint>>>;

/// Number of tilings fixed by every element of a subgroup of class `class`.
/// Values are memoized per `(class, n)`.
pub fn count_for_class(class: SymmetryClass, n: u32) -> BigUint {
    static MEMO: OnceLock<CountMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().expect("count memo lock").get(&(class, n)) {
        return BigUint::clone(v);
    }
    let value = FormulaRegistry::global()
        .get(class)
        .expect("standard registry covers all six classes")
        .count(n);
    memo.write()
        .expect("count memo lock")
        .insert((class, n), Arc::new(value.clone()));
    value
}

/// As [`count_for_class`], keyed by subgroup kind. The four kinds with no
/// closed form are reported as errors rather than zero.
pub fn count_for_kind(kind: SubgroupKind, n: u32) -> Result<BigUint, CountError> {
    Ok(count_for_class(SymmetryClass::try_from(kind)?, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn empty_hexagon_counts_one_everywhere() {
        for class in SymmetryClass::ALL {
            assert_eq!(count_for_class(class, 0), big(1), "{class}");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(count_any(2), big(20));
        assert_eq!(count_any(3), big(980));
        assert_eq!(count_any(4), big(232_848));
        assert_eq!(count_symmetric(1), big(2));
        assert_eq!(count_symmetric(2), big(10));
        assert_eq!(count_symmetric(3), big(112));
        assert_eq!(count_transpose_complementary(1), big(0));
        assert_eq!(count_transpose_complementary(2), big(2));
        assert_eq!(count_transpose_complementary(4), big(84));
        assert_eq!(count_self_complementary(3), big(0));
        assert_eq!(count_self_complementary(2), big(4));
        assert_eq!(count_self_complementary(4), big(400));
        assert_eq!(count_cyclically_symmetric(1), big(2));
        assert_eq!(count_cyclically_symmetric(2), big(5));
        assert_eq!(count_cyclically_symmetric(3), big(20));
        assert_eq!(count_cyclic_self_complementary(1), big(0));
        assert_eq!(count_cyclic_self_complementary(2), big(1));
        assert_eq!(count_cyclic_self_complementary(4), big(4));
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(count_for_class(SymmetryClass::Any, 2), big(20));
        assert_eq!(count_for_class(SymmetryClass::Rot60, 2), big(1));
        assert_eq!(count_for_class(SymmetryClass::HalfTurn, 3), big(0));
    }

    #[test]
    fn formula_less_kinds_are_errors() {
        for kind in [
            SubgroupKind::VertexDihedral,
            SubgroupKind::EdgeDihedral,
            SubgroupKind::ReflectionsWithHalfTurn,
            SubgroupKind::Full,
        ] {
            assert!(matches!(
                count_for_kind(kind, 2),
                Err(CountError::FormulaUnavailable(k, _)) if k == kind
            ));
        }
        assert_eq!(count_for_kind(SubgroupKind::Trivial, 3), Ok(big(980)));
    }

    #[test]
    fn class_names_parse() {
        for class in SymmetryClass::ALL {
            assert_eq!(class.name().parse::<SymmetryClass>(), Ok(class));
        }
        assert!(matches!(
            "totally-symmetric".parse::<SymmetryClass>(),
            Err(CountError::UnknownClass(..))
        ));
        assert!(FormulaRegistry::global().by_name("distinct").is_err());
    }

    #[test]
    fn registry_replaces_by_class() {
        let mut reg = FormulaRegistry::empty();
        assert!(reg.get(SymmetryClass::Any).is_none());
        reg.register(Box::new(AnyTiling));
        reg.register(Box::new(AnyTiling));
        assert_eq!(reg.classes().count(), 1);
        assert!(matches!(
            reg.by_name("rot60"),
            Err(CountError::FormulaUnavailable(SubgroupKind::Rotation60, 9))
        ));
    }

    #[test]
    fn parity_vanishing() {
        for n in (1..60).step_by(2) {
            assert!(count_transpose_complementary(n).is_zero());
            assert!(count_self_complementary(n).is_zero());
            assert!(count_cyclic_self_complementary(n).is_zero());
        }
    }

    #[test]
    fn half_turn_is_square_of_half_side() {
        for m in 0..=50u32 {
            let a = count_any(m);
            assert_eq!(count_self_complementary(2 * m), &a * &a);
        }
    }

    #[test]
    fn nondecreasing_on_even_sides() {
        for class in SymmetryClass::ALL {
            for n in (2..60u32).step_by(2) {
                assert!(count_for_class(class, n) >= count_for_class(class, n - 2), "{class} at {n}");
            }
        }
    }

    #[test]
    fn factorial_table() {
        let f = Factorials::up_to(10);
        assert_eq!(f.get(0), &big(1));
        assert_eq!(f.get(10), &big(3_628_800));
        let shared = Factorials::shared(300);
        assert!(shared.max() >= 300);
        assert_eq!(shared.get(10), &big(3_628_800));
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn inexact_division_panics() {
        let mut r = FactorialRatio::new();
        r.num(2).den(3);
        r.evaluate(&Factorials::up_to(3));
    }

    proptest! {
        #[test]
        fn product_tree_matches_fold(values in proptest::collection::vec(1u64..1_000_000, 0..40)) {
            let expected = values.iter().fold(BigUint::one(), |acc, &v| acc * v);
            let got = product_tree(values.into_iter().map(BigUint::from).collect());
            prop_assert_eq!(got, expected);
        }

        #[test]
        fn shared_and_local_tables_agree(n in 0u32..40) {
            for class in SymmetryClass::ALL {
                let f = FormulaRegistry::global().get(class).unwrap();
                prop_assert_eq!(f.count(n), f.count_with(n, &Factorials::up_to(3 * n as usize + 3)));
            }
        }
    }
}
