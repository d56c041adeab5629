#![allow(dead_code)]

use hextile::dihedral::SubgroupLattice;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Inverse of the lattice's zeta matrix by Gauss–Jordan elimination over the
/// rationals. Makes no use of the triangular shape or of any recursion.
pub fn mobius_by_zeta_inversion(lattice: &SubgroupLattice) -> Vec<Vec<BigRational>> {
    let n = lattice.len();
    let ids: Vec<_> = lattice.ids().collect();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    let v = if j < n {
                        lattice.leq(ids[i], ids[j])
                    } else {
                        j - n == i
                    };
                    if v { BigRational::one() } else { BigRational::zero() }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("zeta matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &factor * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}
