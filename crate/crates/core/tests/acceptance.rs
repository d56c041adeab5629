//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hextile::aggregate::{burnside_numerator, distinct_count_mobius, distinct_count_simplified};
use hextile::counting::{count_any, count_for_class, count_self_complementary, SymmetryClass};
use hextile::dihedral::{GroupElement, Rational, SubgroupKind, SubgroupLattice};
use hextile::oracle::{census, census_with, fixed_count, fixed_count_subgroup, CensusOptions, OracleLimits};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

/// 1. distinct_count(n) for n = 0..4 equals the oracle orbit count.
fn distinct_values() -> Outcome {
    let lattice = SubgroupLattice::d12();
    let expected = [1u64, 1, 6, 113, 20174];
    let mut small = Duration::ZERO;
    let mut large = Duration::ZERO;
    for (n, &want) in expected.iter().enumerate() {
        let n = n as u32;
        let start = Instant::now();
        let c = census(n, limits()).map_err(|e| e.to_string())?;
        if n <= 3 {
            small += start.elapsed();
        } else {
            large += start.elapsed();
        }
        let formula = distinct_count_mobius(lattice, n).map_err(|e| e.to_string())?;
        ensure(c.orbit_count == want, || format!("n={n}: oracle orbits {} != {want}", c.orbit_count))?;
        ensure(formula == BigUint::from(c.orbit_count), || {
            format!("n={n}: formula {formula} != oracle {}", c.orbit_count)
        })?;
    }
    ensure(small < Duration::from_secs(1), || format!("n<=3 took {small:?}"))?;
    ensure(large < Duration::from_secs(120), || format!("n=4 took {large:?}"))?;
    Ok(format!("(1, 1, 6, 113, 20174); n<=3 in {small:.2?}, n=4 in {large:.2?}"))
}

/// 2. Formula and oracle fixed counts agree for every element at n <= 4.
fn formula_oracle_equivalence() -> Outcome {
    let lattice = SubgroupLattice::d12();
    let mut checked = 0;
    for n in 0..=4 {
        for x in GroupElement::all() {
            let class = SymmetryClass::try_from(lattice.get(lattice.cyclic(x)).kind())
                .map_err(|e| e.to_string())?;
            let formula = count_for_class(class, n);
            let oracle = fixed_count(n, x, limits()).map_err(|e| e.to_string())?;
            ensure(formula == oracle, || {
                format!("n={n} x={x} ({class}): formula {formula} != oracle {oracle}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, element) pairs"))
}

/// 3. Weights vanish on the four cancelled classes and total (1,3,3,1,2,2)/12.
fn weight_cancellation() -> Outcome {
    let lattice = SubgroupLattice::d12();
    let twelfths = |k: i64| Rational::new(BigInt::from(k), BigInt::from(12));
    let cancelled = [
        SubgroupKind::ReflectionsWithHalfTurn,
        SubgroupKind::VertexDihedral,
        SubgroupKind::EdgeDihedral,
        SubgroupKind::Full,
    ];
    let mut zero_count = 0;
    for id in lattice.ids() {
        let s = lattice.get(id);
        if cancelled.contains(&s.kind()) {
            ensure(lattice.weight(id).is_zero(), || format!("weight({s}) = {}", lattice.weight(id)))?;
            zero_count += 1;
        }
    }
    ensure(zero_count == 6, || format!("{zero_count} cancelled subgroups, expected 6"))?;
    let expected = [
        (SubgroupKind::Trivial, 1),
        (SubgroupKind::VertexReflection, 3),
        (SubgroupKind::EdgeReflection, 3),
        (SubgroupKind::HalfTurn, 1),
        (SubgroupKind::Rotation120, 2),
        (SubgroupKind::Rotation60, 2),
    ];
    for (kind, k) in expected {
        let total = lattice
            .ids()
            .filter(|&id| lattice.get(id).kind() == kind)
            .fold(Rational::zero(), |acc, id| acc + lattice.weight(id));
        ensure(total == twelfths(k), || format!("{kind:?} totals {total}, expected {k}/12"))?;
    }
    let sum = lattice.ids().fold(Rational::zero(), |acc, id| acc + lattice.weight(id));
    ensure(sum == twelfths(12), || format!("weights sum to {sum}"))?;
    Ok("6 zero weights, totals (1,3,3,1,2,2)/12, sum 1".into())
}

/// 4. Both routes agree for 0 <= n <= 200 and 12 divides the numerator.
fn route_equivalence() -> Outcome {
    let lattice = SubgroupLattice::d12();
    let start = Instant::now();
    for n in 0..=200 {
        let mobius = distinct_count_mobius(lattice, n).map_err(|e| format!("n={n}: {e}"))?;
        let simplified = distinct_count_simplified(n);
        ensure(mobius == simplified, || format!("n={n}: {mobius} != {simplified}"))?;
        let numer = burnside_numerator(lattice, n).map_err(|e| e.to_string())?;
        ensure(numer.is_multiple_of(&BigUint::from(12u32)), || format!("n={n}: 12 does not divide {numer}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("n = 0..=200 in {took:.2?}"))
}

/// 5. 16 subgroups, 10 classes, order multiset, chain families.
fn lattice_structure() -> Outcome {
    let lattice = SubgroupLattice::build().map_err(|e| e.to_string())?;
    ensure(lattice.len() == 16, || format!("{} subgroups", lattice.len()))?;
    ensure(lattice.conjugacy_classes().len() == 10, || {
        format!("{} classes", lattice.conjugacy_classes().len())
    })?;
    let mut orders: Vec<usize> = lattice.subgroups().iter().map(|s| s.order()).collect();
    orders.sort();
    ensure(orders == [1, 2, 2, 2, 2, 2, 2, 2, 3, 4, 4, 4, 6, 6, 6, 12], || format!("orders {orders:?}"))?;

    let chains = lattice.maximal_chains();
    let families = lattice.chain_family_instances();
    let classes = |c: &Vec<_>| -> Vec<usize> { c.iter().map(|&s| lattice.class_of(s)).collect() };
    let family_classes: BTreeSet<Vec<usize>> = families.iter().map(classes).collect();
    for f in &families {
        ensure(chains.contains(f), || format!("family {} is not a maximal chain", lattice.chain_label(f)))?;
    }
    for c in &chains {
        ensure(family_classes.contains(&classes(c)), || {
            format!("chain {} matches no family", lattice.chain_label(c))
        })?;
    }
    Ok(format!("{} maximal chains, all in the 3 families", chains.len()))
}

/// 6. Memoized Möbius agrees with zeta-matrix inversion; defining identity.
fn mobius_correctness() -> Outcome {
    let lattice = SubgroupLattice::d12();
    let inverse = common::mobius_by_zeta_inversion(lattice);
    let mut pairs = 0;
    for g in lattice.ids() {
        for h in lattice.ids() {
            let z = &inverse[g.0][h.0];
            if lattice.leq(g, h) {
                let mu = lattice.mobius(g, h).map_err(|e| e.to_string())?;
                ensure(Rational::from_integer(BigInt::from(mu)) == *z, || {
                    format!("mu({}, {}) = {mu}, zeta inverse {z}", lattice.get(g), lattice.get(h))
                })?;
                pairs += 1;
                if g != h {
                    let s: i64 = lattice
                        .ids()
                        .filter(|&k| lattice.leq(g, k) && lattice.leq(k, h))
                        .map(|k| lattice.mobius(g, k).unwrap())
                        .sum();
                    ensure(s == 0, || format!("sum over [{}, {}] is {s}", lattice.get(g), lattice.get(h)))?;
                }
            } else {
                ensure(z.is_zero(), || format!("zeta inverse nonzero off the order at ({}, {})", g.0, h.0))?;
            }
        }
    }
    Ok(format!("{pairs} comparable pairs"))
}

/// 7. Census consistency at n <= 3.
fn census_consistency() -> Outcome {
    let lattice = SubgroupLattice::d12();
    for n in 0..=3 {
        let c = census(n, limits()).map_err(|e| e.to_string())?;
        for g in lattice.ids() {
            let summed = c.at_least(lattice, g);
            let direct = fixed_count_subgroup(n, lattice.get(g), limits()).map_err(|e| e.to_string())?;
            ensure(BigUint::from(summed) == direct, || {
                format!("n={n} {}: sum of exact {summed} != fixed {direct}", lattice.get(g))
            })?;
        }
        ensure(c.orbit_stabilizer_violations == 0, || {
            format!("n={n}: {} orbit-stabilizer violations", c.orbit_stabilizer_violations)
        })?;
        ensure(c.orbit_size_sum == c.total, || format!("n={n}: orbit sizes {} != {}", c.orbit_size_sum, c.total))?;
        let fix_sum: u64 = c.fixed_by_element.iter().sum();
        ensure(12 * c.orbit_count == fix_sum, || format!("n={n}: 12*{} != {fix_sum}", c.orbit_count))?;
    }
    Ok("n = 0..=3".into())
}

/// 8. count_self_complementary(2m) = count_any(m)^2 for m <= 50.
fn structural_identity() -> Outcome {
    for m in 0..=50u32 {
        let a = count_any(m);
        let sc = count_self_complementary(2 * m);
        ensure(sc == &a * &a, || format!("m={m}"))?;
    }
    Ok("m = 0..=50".into())
}

/// 9. Partitioned parallel census matches the serial one at n = 3.
fn determinism() -> Outcome {
    let serial_opts = CensusOptions {
        keep_canonical_forms: true,
        ..CensusOptions::default()
    };
    let serial = census_with(3, serial_opts).map_err(|e| e.to_string())?;
    for (jobs, depth) in [(4, 3), (3, 8), (8, 12)] {
        let parallel = census_with(
            3,
            CensusOptions {
                jobs,
                split_depth: depth,
                ..serial_opts
            },
        )
        .map_err(|e| e.to_string())?;
        ensure(parallel.total == serial.total, || format!("jobs={jobs}: totals differ"))?;
        let a: BTreeSet<_> = serial.canonical_forms.iter().flatten().collect();
        let b: BTreeSet<_> = parallel.canonical_forms.iter().flatten().collect();
        ensure(a == b, || format!("jobs={jobs}: canonical-form sets differ"))?;
        ensure(parallel == serial, || format!("jobs={jobs} depth={depth}: census differs"))?;
    }
    Ok(format!("{} canonical forms, 3 partitionings", serial.orbit_count))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("distinct-count values n=0..4", distinct_values),
        ("formula-oracle equivalence n<=4", formula_oracle_equivalence),
        ("weight cancellation", weight_cancellation),
        ("route equivalence n<=200", route_equivalence),
        ("lattice structure", lattice_structure),
        ("mobius correctness", mobius_correctness),
        ("census consistency n<=3", census_consistency),
        ("structural identity m<=50", structural_identity),
        ("parallel determinism n=3", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
