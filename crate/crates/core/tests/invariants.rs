mod common;

use hextile::aggregate::{distinct_count, exact_symmetry_count};
use hextile::counting::count_for_kind;
use hextile::dihedral::{GroupElement, Rational, SubgroupLattice};
use hextile::oracle::{apply_element, census, enumerate_tilings, Hexagon, OracleLimits};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn exact_counts_sum_back_to_at_least_counts() {
    let lattice = SubgroupLattice::d12();
    for n in 0..=3 {
        let c = census(n, OracleLimits::default()).unwrap();
        for g in lattice.ids() {
            let summed: BigUint = lattice
                .above(g)
                .map(|h| exact_symmetry_count(lattice, h, n, Some(&c)).unwrap())
                .sum();
            assert_eq!(summed, BigUint::from(c.at_least(lattice, g)), "n={n} {}", lattice.get(g));
            if let Ok(formula) = count_for_kind(lattice.get(g).kind(), n) {
                assert_eq!(summed, formula, "n={n} {}", lattice.get(g));
            }
        }
    }
}

#[test]
fn exact_counts_match_census_stabilizers() {
    let lattice = SubgroupLattice::d12();
    for n in 0..=3 {
        let c = census(n, OracleLimits::default()).unwrap();
        for g in lattice.ids() {
            let exact = exact_symmetry_count(lattice, g, n, Some(&c)).unwrap();
            assert_eq!(exact, BigUint::from(c.exact(g)), "n={n} {}", lattice.get(g));
        }
    }
}

#[test]
fn coset_normalization_gives_orbit_count() {
    let lattice = SubgroupLattice::d12();
    for n in 0..=4 {
        let c = census(n, OracleLimits::default()).unwrap();
        let total = lattice.ids().fold(Rational::zero(), |acc, g| {
            let exact = exact_symmetry_count(lattice, g, n, Some(&c)).unwrap();
            acc + Rational::new(BigInt::from(exact), BigInt::from(lattice.get(g).index()))
        });
        assert_eq!(total, Rational::from_integer(BigInt::from(distinct_count(n))), "n={n}");
        assert_eq!(total, Rational::from_integer(BigInt::from(c.orbit_count)), "n={n}");
    }
}

#[test]
fn weights_agree_with_elementwise_burnside() {
    // Each element contributes 1/12 to the cyclic subgroup it generates.
    let lattice = SubgroupLattice::d12();
    let mut by_cyclic = vec![Rational::zero(); lattice.len()];
    for x in GroupElement::all() {
        by_cyclic[lattice.cyclic(x).0] += Rational::new(1.into(), 12.into());
    }
    for class in lattice.conjugacy_classes() {
        let from_weights = class.iter().fold(Rational::zero(), |a, &h| a + lattice.weight(h));
        let from_elements = class.iter().fold(Rational::zero(), |a, &h| a + &by_cyclic[h.0]);
        assert_eq!(from_weights, from_elements, "{}", lattice.get(class[0]));
    }
}

#[test]
fn zeta_inversion_oracle_recovers_weights() {
    let lattice = SubgroupLattice::d12();
    let mu = common::mobius_by_zeta_inversion(lattice);
    for h in lattice.ids() {
        let w = lattice
            .below(h)
            .fold(Rational::zero(), |acc, g| acc + &mu[g.0][h.0] / Rational::from_integer(lattice.get(g).index().into()));
        assert_eq!(&w, lattice.weight(h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_a_left_action(index in 0usize..980, x in 0usize..12, y in 0usize..12) {
        let hex = Hexagon::new(3);
        let t = enumerate_tilings(&hex, OracleLimits::default()).unwrap().nth(index).unwrap();
        let (x, y) = (GroupElement::from_index(x), GroupElement::from_index(y));
        let lhs = apply_element(&hex, x, &apply_element(&hex, y, &t));
        prop_assert!(lhs.is_valid(&hex));
        prop_assert_eq!(lhs, apply_element(&hex, x.multiply(y), &t));
    }

    #[test]
    fn multiply_is_associative(a in 0usize..12, b in 0usize..12, c in 0usize..12) {
        let (a, b, c) = (GroupElement::from_index(a), GroupElement::from_index(b), GroupElement::from_index(c));
        prop_assert_eq!(a.multiply(b).multiply(c), a.multiply(b.multiply(c)));
    }
}
