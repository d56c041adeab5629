//! Number of tilings up to rotation and reflection, by two routes.
//!
//! The Möbius route sums `weight(h) · #c(h)` over all sixteen subgroups;
//! subgroups of weight zero are skipped only after checking the weight is
//! exactly zero. The simplified route uses the six surviving classes with
//! coefficients `(1, 3, 3, 1, 2, 2) / 12`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::counting::{self, count_for_class, count_for_kind, CountError, SymmetryClass};
use crate::dihedral::{GroupElement, Rational, SubgroupId, SubgroupLattice};
use crate::oracle::Census;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AggregateError {
    #[error("subgroup {0} has nonzero weight but no count is available: {1}")]
    NonzeroWeightWithoutFormula(String, CountError),
    #[error("weighted sum {0} is not an integer")]
    NotIntegral(Rational),
    #[error("insufficient data: no count for subgroup {0} at n = {1}")]
    InsufficientData(String, u32),
    #[error("census is for n = {census} but n = {n} was requested")]
    CensusMismatch { census: u32, n: u32 },
    #[error("exact-symmetry count for {0} came out negative ({1})")]
    Negative(String, BigInt),
}

/// `(#c⟨e⟩ + 3#c⟨f⟩ + 3#c⟨fr⟩ + #c⟨r³⟩ + 2#c⟨r²⟩ + 2#c⟨r⟩) / 12`.
pub fn distinct_count_simplified(n: u32) -> BigUint {
    let coeff = |c: SymmetryClass| -> u32 {
        match c {
            SymmetryClass::Any | SymmetryClass::HalfTurn => 1,
            SymmetryClass::VertexReflection | SymmetryClass::EdgeReflection => 3,
            SymmetryClass::Rot120 | SymmetryClass::Rot60 => 2,
        }
    };
    let numer: BigUint = SymmetryClass::ALL
        .into_iter()
        .map(|c| count_for_class(c, n) * coeff(c))
        .sum();
    counting::exact_div(numer, &BigUint::from(12u32))
}

/// `Σ_h weight(h) · #c(h)` over every subgroup of the lattice. The sum is
/// taken over the common denominator of the weights, then divided once.
pub fn distinct_count_mobius(lattice: &SubgroupLattice, n: u32) -> Result<BigUint, AggregateError> {
    let denom = lattice
        .ids()
        .fold(BigInt::one(), |acc, h| acc.lcm(lattice.weight(h).denom()));
    let mut numer = BigInt::zero();
    for h in lattice.ids() {
        let w = lattice.weight(h);
        if w.is_zero() {
            continue;
        }
        let sub = lattice.get(h);
        let count = count_for_kind(sub.kind(), n)
            .map_err(|e| AggregateError::NonzeroWeightWithoutFormula(sub.label().to_string(), e))?;
        let scaled = w * Rational::from_integer(denom.clone());
        numer += scaled.to_integer() * BigInt::from(count);
    }
    let (q, r) = numer.div_rem(&denom);
    if !r.is_zero() {
        return Err(AggregateError::NotIntegral(Rational::new(numer, denom)));
    }
    Ok(q.to_biguint().expect("sum of nonnegative terms"))
}

/// Möbius route, checked against the simplified route.
pub fn distinct_count(n: u32) -> BigUint {
    let mobius = distinct_count_mobius(SubgroupLattice::d12(), n)
        .expect("every nonzero-weight subgroup has a formula");
    let simplified = distinct_count_simplified(n);
    assert_eq!(mobius, simplified, "distinct-count routes disagree at n = {n}");
    mobius
}

/// `Σ_x #fix(x)` over the twelve group elements, each fixed count taken
/// from the formula for the class of `⟨x⟩`.
pub fn burnside_numerator(lattice: &SubgroupLattice, n: u32) -> Result<BigUint, CountError> {
    GroupElement::all()
        .map(|x| count_for_kind(lattice.get(lattice.cyclic(x)).kind(), n))
        .sum()
}

/// Burnside's lemma applied element by element.
pub fn distinct_count_burnside(lattice: &SubgroupLattice, n: u32) -> Result<BigUint, CountError> {
    let numer = burnside_numerator(lattice, n)?;
    let (q, r) = numer.div_rem(&BigUint::from(12u32));
    assert!(r.is_zero(), "Burnside numerator not divisible by 12 at n = {n}");
    Ok(q)
}

/// Supplies `#c(h)`, the number of tilings fixed by all of `h`.
pub trait AtLeastCounts {
    fn at_least(&self, lattice: &SubgroupLattice, h: SubgroupId) -> Option<BigUint>;
}

/// Closed-form counts only.
pub struct FormulaCounts {
    pub n: u32,
}

impl AtLeastCounts for FormulaCounts {
    fn at_least(&self, lattice: &SubgroupLattice, h: SubgroupId) -> Option<BigUint> {
        count_for_kind(lattice.get(h).kind(), self.n).ok()
    }
}

impl AtLeastCounts for Census {
    fn at_least(&self, lattice: &SubgroupLattice, h: SubgroupId) -> Option<BigUint> {
        Some(BigUint::from(Census::at_least(self, lattice, h)))
    }
}

/// Formula where one exists, otherwise the census.
struct WithFallback<'a> {
    formulas: FormulaCounts,
    census: Option<&'a Census>,
}

impl AtLeastCounts for WithFallback<'_> {
    fn at_least(&self, lattice: &SubgroupLattice, h: SubgroupId) -> Option<BigUint> {
        self.formulas
            .at_least(lattice, h)
            .or_else(|| self.census.and_then(|c| AtLeastCounts::at_least(c, lattice, h)))
    }
}

/// Number of tilings whose stabilizer is exactly `g`:
/// `Σ_{h ≥ g} μ(g,h) · #c(h)`. Classes with no closed form need a census
/// for the same `n`.
pub fn exact_symmetry_count(
    lattice: &SubgroupLattice,
    g: SubgroupId,
    n: u32,
    census: Option<&Census>,
) -> Result<BigUint, AggregateError> {
    if let Some(c) = census {
        if c.n != n {
            return Err(AggregateError::CensusMismatch { census: c.n, n });
        }
    }
    let provider = WithFallback {
        formulas: FormulaCounts { n },
        census,
    };
    exact_symmetry_count_with(lattice, g, n, &provider)
}

pub fn exact_symmetry_count_with(
    lattice: &SubgroupLattice,
    g: SubgroupId,
    n: u32,
    counts: &dyn AtLeastCounts,
) -> Result<BigUint, AggregateError> {
    let mut total = BigInt::zero();
    for h in lattice.above(g) {
        let c = counts
            .at_least(lattice, h)
            .ok_or_else(|| AggregateError::InsufficientData(lattice.get(h).label().to_string(), n))?;
        let mu = lattice.mobius(g, h).expect("h lies above g");
        total += BigInt::from(mu) * BigInt::from_biguint(Sign::Plus, c);
    }
    if total.is_negative() {
        return Err(AggregateError::Negative(lattice.get(g).label().to_string(), total));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}
