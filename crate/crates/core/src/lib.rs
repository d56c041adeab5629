//! Exact counts of lozenge tilings of a regular hexagon up to its twelve
//! symmetries.
//!
//! - [`dihedral`]: the symmetry group, its subgroup lattice, Möbius function
//!   and orbit-count weights.
//! - [`counting`]: closed-form counts of tilings fixed by each weighted class.
//! - [`aggregate`]: the orbit count by Möbius inversion and by the reduced
//!   six-term sum, and exact-stabilizer counts.
//! - [`oracle`]: brute-force enumeration of tilings used as ground truth.
//! - [`sequence`]: named sequences for runtime selection.
//! - [`verify`]: formula-against-oracle checks.
//! - [`bfile`], [`svg`]: interchange and debug output.

pub mod aggregate;
pub mod bfile;
pub mod counting;
pub mod dihedral;
pub mod oracle;
pub mod sequence;
pub mod svg;
pub mod verify;

pub use aggregate::{distinct_count, distinct_count_mobius, distinct_count_simplified, exact_symmetry_count};
pub use counting::{count_for_class, CountFormula, FormulaRegistry, SymmetryClass};
pub use dihedral::{GroupElement, Subgroup, SubgroupId, SubgroupKind, SubgroupLattice};
pub use oracle::{census, Census, Hexagon, OracleLimits, Tiling};
pub use sequence::{Sequence, SequenceRegistry};
