//! Cross-checks of the closed forms against brute-force enumeration.

use std::fmt;

use num_bigint::BigUint;

use crate::aggregate::{distinct_count_mobius, distinct_count_simplified, exact_symmetry_count};
use crate::counting::{count_for_kind, SymmetryClass};
use crate::dihedral::{GroupElement, SubgroupLattice};
use crate::oracle::{census_with, CensusOptions, OracleError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub n: u32,
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(n: u32, name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            n,
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "n={} {} {} == {} ok", self.n, self.name, self.expected, self.actual)
        } else {
            write!(f, "n={} {} {} != {} FAIL", self.n, self.name, self.expected, self.actual)
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }
}

/// For each side `0..=max_n`: formula against oracle fixed counts for all
/// twelve elements, Burnside's identity, orbit–stabilizer, Möbius inversion
/// of the census, and the distinct count by both routes against the number
/// of orbits. Expected values come from formulas, actual ones from the oracle.
pub fn verify(max_n: u32, opts: CensusOptions) -> Result<Report, OracleError> {
    opts.limits.check(max_n)?;
    let lattice = SubgroupLattice::d12();
    let mut report = Report::default();
    for n in 0..=max_n {
        let census = census_with(n, opts)?;
        let checks = &mut report.checks;

        let mut formula_sum = BigUint::from(0u32);
        for x in GroupElement::all() {
            let kind = lattice.get(lattice.cyclic(x)).kind();
            let class = SymmetryClass::try_from(kind).expect("cyclic subgroups have formulas");
            let formula = count_for_kind(kind, n).expect("cyclic subgroups have formulas");
            formula_sum += &formula;
            checks.push(Check::new(
                n,
                format!("fixed {} [{}]", x.label(), class.name()),
                formula,
                census.fixed_by(x),
            ));
        }

        checks.push(Check::new(
            n,
            "burnside",
            formula_sum,
            12 * census.orbit_count,
        ));
        checks.push(Check::new(
            n,
            "orbit-stabilizer violations",
            0,
            census.orbit_stabilizer_violations,
        ));
        checks.push(Check::new(n, "orbit sizes", census.total, census.orbit_size_sum));

        for g in lattice.ids() {
            let inverted = match exact_symmetry_count(lattice, g, n, Some(&census)) {
                Ok(v) => v.to_string(),
                Err(e) => e.to_string(),
            };
            checks.push(Check::new(
                n,
                format!("inversion {}", lattice.get(g).label()),
                inverted,
                census.exact(g),
            ));
        }

        let mobius = distinct_count_mobius(lattice, n)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| e.to_string());
        checks.push(Check::new(n, "distinct-routes", &mobius, distinct_count_simplified(n)));
        checks.push(Check::new(n, "distinct", mobius, census.orbit_count));
    }
    Ok(report)
}
