//! Brute-force ground truth: every lozenge tiling of the side-`n` hexagon,
//! the action of D12 on tilings, and fixed-point/stabilizer/orbit counts.
//!
//! Unit triangles are addressed by cube coordinates. A point of the plane is
//! `(X, Y, Z)` with `X + Y + Z = 0`; the hexagon is `|X|, |Y|, |Z| ≤ n`. A
//! unit triangle is identified by the floors `(u, v, w)` of its interior
//! points, with `u + v + w = -1` for up triangles and `-2` for down ones.
//! Only `(u, v)` and the orientation are stored.
//!
//! The rotation `r` maps `(X, Y, Z) ↦ (−Z, −X, −Y)` and the vertex-axis
//! reflection `f` maps `(X, Y, Z) ↦ (−Y, −X, −Z)`, whose fixed line `Z = 0`
//! runs through two opposite corners of the hexagon.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};
use thiserror::Error;

use crate::dihedral::{GroupElement, Subgroup, SubgroupId, SubgroupLattice, GROUP_ORDER};

/// Largest side enumerated without an explicit override.
pub const DEFAULT_MAX_N: u32 = 4;

/// Environment variable that raises the enumeration bound.
pub const MAX_N_ENV: &str = "HEXTILE_ORACLE_MAX_N";

const FREE: u16 = u16::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("refusing to enumerate tilings of side {n}: the limit is {max} (raise it with --max-oracle-n or {MAX_N_ENV})")]
    TooLarge { n: u32, max: u32 },
}

/// Safety bound on brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: DEFAULT_MAX_N }
    }
}

impl OracleLimits {
    pub fn new(max_n: u32) -> Self {
        OracleLimits { max_n }
    }

    /// Default bound, raised by [`MAX_N_ENV`] when it holds a number.
    pub fn from_env() -> Self {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(OracleLimits::new)
            .unwrap_or_default()
    }

    pub fn check(&self, n: u32) -> Result<(), OracleError> {
        if n > self.max_n {
            Err(OracleError::TooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

/// A unit triangle of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriCell {
    pub u: i32,
    pub v: i32,
    pub orient: Orientation,
}

impl TriCell {
    pub fn new(u: i32, v: i32, orient: Orientation) -> Self {
        TriCell { u, v, orient }
    }

    fn from_cube(u: i32, v: i32, w: i32) -> Self {
        let orient = match u + v + w {
            -1 => Orientation::Up,
            -2 => Orientation::Down,
            s => panic!("({u}, {v}, {w}) has coordinate sum {s}, not a unit triangle"),
        };
        TriCell { u, v, orient }
    }

    /// Third cube coordinate.
    pub fn w(&self) -> i32 {
        match self.orient {
            Orientation::Up => -1 - self.u - self.v,
            Orientation::Down => -2 - self.u - self.v,
        }
    }

    pub fn cube(&self) -> [i32; 3] {
        [self.u, self.v, self.w()]
    }

    pub fn in_hexagon(&self, n: u32) -> bool {
        let n = n as i32;
        self.cube().iter().all(|&c| -n <= c && c < n)
    }

    /// Which of the six large triangles cut out by the three long diagonals
    /// contains this cell.
    pub fn sector(&self) -> u8 {
        let off = match self.orient {
            Orientation::Up => 1,
            Orientation::Down => 2,
        };
        let signs = self.cube().map(|c| 3 * c + off > 0);
        signs
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &pos)| acc | ((pos as u8) << i))
    }

    /// Lattice corners, `(a, b, c)` with `a + b + c = 0`.
    pub fn corners(&self) -> [[i32; 3]; 3] {
        let [u, v, w] = self.cube();
        match self.orient {
            Orientation::Up => [[u + 1, v, w], [u, v + 1, w], [u, v, w + 1]],
            Orientation::Down => [[u + 1, v + 1, w], [u + 1, v, w + 1], [u, v + 1, w + 1]],
        }
    }

    fn neighbors(&self) -> [TriCell; 3] {
        let [u, v, w] = self.cube();
        let d = match self.orient {
            Orientation::Up => -1,
            Orientation::Down => 1,
        };
        [
            TriCell::from_cube(u + d, v, w),
            TriCell::from_cube(u, v + d, w),
            TriCell::from_cube(u, v, w + d),
        ]
    }

    fn rotate(&self) -> TriCell {
        let [u, v, w] = self.cube();
        TriCell::from_cube(-w - 1, -u - 1, -v - 1)
    }

    fn reflect(&self) -> TriCell {
        let [u, v, w] = self.cube();
        TriCell::from_cube(-v - 1, -u - 1, -w - 1)
    }

    /// Image under `f^a r^b`: rotate `b` times, then reflect if `a = 1`.
    pub fn act(&self, x: GroupElement) -> TriCell {
        let mut c = *self;
        for _ in 0..x.rot() {
            c = c.rotate();
        }
        if x.is_reflection() {
            c = c.reflect();
        }
        c
    }
}

/// Index of a cell within [`Hexagon::cells`].
pub type CellId = u16;

/// Two edge-adjacent cells of opposite orientation, `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lozenge {
    pub a: CellId,
    pub b: CellId,
}

impl Lozenge {
    pub fn new(x: CellId, y: CellId) -> Self {
        Lozenge {
            a: x.min(y),
            b: x.max(y),
        }
    }
}

/// The cells of the side-`n` hexagon in sorted order, their adjacency, and
/// the permutation each group element induces on them.
#[derive(Debug, Clone)]
pub struct Hexagon {
    n: u32,
    cells: Vec<TriCell>,
    index: HashMap<TriCell, CellId>,
    neighbors: Vec<Vec<CellId>>,
    actions: Vec<Vec<CellId>>,
}

impl Hexagon {
    pub fn new(n: u32) -> Self {
        let r = n as i32;
        let mut cells = Vec::new();
        for u in -r..r {
            for v in -r..r {
                for orient in [Orientation::Up, Orientation::Down] {
                    let c = TriCell::new(u, v, orient);
                    if c.in_hexagon(n) {
                        cells.push(c);
                    }
                }
            }
        }
        cells.sort();
        assert!(cells.len() < FREE as usize, "hexagon too large for 16-bit cell ids");
        let index: HashMap<TriCell, CellId> = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as CellId))
            .collect();
        let neighbors = cells
            .iter()
            .map(|c| {
                let mut ns: Vec<CellId> = c
                    .neighbors()
                    .iter()
                    .filter_map(|nb| index.get(nb).copied())
                    .collect();
                ns.sort();
                ns
            })
            .collect();
        let actions = GroupElement::all()
            .map(|x| cells.iter().map(|c| index[&c.act(x)]).collect())
            .collect();
        Hexagon {
            n,
            cells,
            index,
            neighbors,
            actions,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cells(&self) -> &[TriCell] {
        &self.cells
    }

    pub fn cell(&self, id: CellId) -> TriCell {
        self.cells[id as usize]
    }

    pub fn id(&self, cell: &TriCell) -> Option<CellId> {
        self.index.get(cell).copied()
    }

    /// Adjacent cells, ascending.
    pub fn neighbors(&self, id: CellId) -> &[CellId] {
        &self.neighbors[id as usize]
    }

    /// Permutation of cell ids induced by `x`.
    pub fn permutation(&self, x: GroupElement) -> &[CellId] {
        &self.actions[x.index()]
    }

    /// Writes the partner array of `x · t` into `out`.
    fn image_into(&self, x: GroupElement, mate: &[CellId], out: &mut [CellId]) {
        let sigma = self.permutation(x);
        for (c, &m) in mate.iter().enumerate() {
            out[sigma[c] as usize] = sigma[m as usize];
        }
    }

    fn is_fixed(&self, x: GroupElement, mate: &[CellId]) -> bool {
        let sigma = self.permutation(x);
        mate.iter()
            .enumerate()
            .all(|(c, &m)| mate[sigma[c] as usize] == sigma[m as usize])
    }
}

/// Set of all cells of the side-`n` hexagon.
pub fn hexagon_cells(n: u32) -> Vec<TriCell> {
    Hexagon::new(n).cells
}

/// A perfect cover of the hexagon by lozenges.
///
/// Stored as the partner of every cell. Comparing partner arrays
/// lexicographically orders tilings exactly as comparing their sorted
/// lozenge lists does: the first lozenge on which two sorted lists differ
/// starts at the smallest cell whose partners differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    mate: Vec<CellId>,
}

impl Tiling {
    pub fn from_mates(mate: Vec<CellId>) -> Self {
        Tiling { mate }
    }

    pub fn from_lozenges(cells: usize, lozenges: &[Lozenge]) -> Self {
        let mut mate = vec![FREE; cells];
        for l in lozenges {
            mate[l.a as usize] = l.b;
            mate[l.b as usize] = l.a;
        }
        Tiling { mate }
    }

    pub fn mates(&self) -> &[CellId] {
        &self.mate
    }

    /// Lozenges in canonical sorted order.
    pub fn lozenges(&self) -> Vec<Lozenge> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(c, &m)| (c as CellId) < m)
            .map(|(c, &m)| Lozenge::new(c as CellId, m))
            .collect()
    }

    /// Checks that every cell is covered by exactly one lozenge of two
    /// adjacent cells.
    pub fn is_valid(&self, hex: &Hexagon) -> bool {
        self.mate.len() == hex.cells.len()
            && self.mate.iter().enumerate().all(|(c, &m)| {
                m != FREE
                    && (m as usize) < self.mate.len()
                    && self.mate[m as usize] as usize == c
                    && hex.neighbors(c as CellId).contains(&m)
            })
    }
}

/// `x · t`. The map is a left action: `apply(x, apply(y, t)) = apply(xy, t)`.
pub fn apply_element(hex: &Hexagon, x: GroupElement, t: &Tiling) -> Tiling {
    let mut out = vec![FREE; t.mate.len()];
    hex.image_into(x, &t.mate, &mut out);
    let image = Tiling { mate: out };
    debug_assert!(image.is_valid(hex));
    image
}

/// Lexicographically least of the twelve images.
pub fn canonical_form(hex: &Hexagon, t: &Tiling) -> Tiling {
    GroupElement::all()
        .map(|x| apply_element(hex, x, t))
        .min()
        .expect("group is nonempty")
}

struct Frame {
    cell: CellId,
    next: usize,
    placed: Option<CellId>,
}

/// Depth-first search that always covers the smallest uncovered cell,
/// trying its uncovered neighbours in ascending order.
pub struct TilingSearch<'h> {
    hex: &'h Hexagon,
    mate: Vec<CellId>,
    stack: Vec<Frame>,
    started: bool,
}

impl<'h> TilingSearch<'h> {
    pub fn new(hex: &'h Hexagon) -> Self {
        Self::from_partial(hex, vec![FREE; hex.cells.len()])
    }

    /// Search that keeps the lozenges already placed in `mate` fixed and
    /// enumerates completions in the same order the full search would.
    fn from_partial(hex: &'h Hexagon, mate: Vec<CellId>) -> Self {
        TilingSearch {
            hex,
            mate,
            stack: Vec::new(),
            started: false,
        }
    }

    /// Partner array of the current tiling.
    pub fn mates(&self) -> &[CellId] {
        &self.mate
    }

    /// Moves to the next complete tiling; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            if self.descend() {
                return true;
            }
        }
        loop {
            loop {
                if self.stack.is_empty() {
                    return false;
                }
                if self.try_next() {
                    break;
                }
                self.stack.pop();
            }
            if self.descend() {
                return true;
            }
        }
    }

    fn first_free(&self) -> Option<CellId> {
        let from = self.stack.last().map_or(0, |f| f.cell as usize + 1);
        (from..self.mate.len())
            .find(|&c| self.mate[c] == FREE)
            .map(|c| c as CellId)
    }

    fn descend(&mut self) -> bool {
        loop {
            let Some(cell) = self.first_free() else {
                return true;
            };
            self.stack.push(Frame {
                cell,
                next: 0,
                placed: None,
            });
            if !self.try_next() {
                self.stack.pop();
                return false;
            }
        }
    }

    // Undo the top frame's placement and place its next feasible lozenge.
    fn try_next(&mut self) -> bool {
        let hex = self.hex;
        let frame = self.stack.last_mut().expect("non-empty stack");
        let cell = frame.cell as usize;
        if let Some(p) = frame.placed.take() {
            self.mate[cell] = FREE;
            self.mate[p as usize] = FREE;
        }
        let ns = hex.neighbors(frame.cell);
        while frame.next < ns.len() {
            let p = ns[frame.next];
            frame.next += 1;
            if self.mate[p as usize] == FREE {
                self.mate[cell] = p;
                self.mate[p as usize] = frame.cell;
                frame.placed = Some(p);
                return true;
            }
        }
        false
    }
}

impl Iterator for TilingSearch<'_> {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        self.advance().then(|| Tiling::from_mates(self.mate.clone()))
    }
}

/// Deterministic stream of every tiling of `hex`.
pub fn enumerate_tilings(hex: &Hexagon, limits: OracleLimits) -> Result<TilingSearch<'_>, OracleError> {
    limits.check(hex.n())?;
    Ok(TilingSearch::new(hex))
}

/// Calls `visit` with the partner array of each tiling, in enumeration order.
pub fn for_each_tiling<F>(hex: &Hexagon, limits: OracleLimits, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[CellId]) -> ControlFlow<()>,
{
    let mut search = enumerate_tilings(hex, limits)?;
    while search.advance() {
        if visit(search.mates()).is_break() {
            break;
        }
    }
    Ok(())
}

/// The `index`-th tiling in enumeration order.
pub fn nth_tiling(hex: &Hexagon, limits: OracleLimits, index: u64) -> Result<Option<Tiling>, OracleError> {
    let mut seen = 0u64;
    let mut found = None;
    for_each_tiling(hex, limits, |mate| {
        if seen == index {
            found = Some(Tiling::from_mates(mate.to_vec()));
            return ControlFlow::Break(());
        }
        seen += 1;
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// Partial covers after `depth` placement decisions, in search order.
/// Branches that complete or dead-end earlier appear as they are.
fn split_points(hex: &Hexagon, depth: usize) -> Vec<Vec<CellId>> {
    fn rec(hex: &Hexagon, mate: &mut Vec<CellId>, from: usize, depth: usize, out: &mut Vec<Vec<CellId>>) {
        let Some(cell) = (from..mate.len()).find(|&c| mate[c] == FREE) else {
            out.push(mate.clone());
            return;
        };
        if depth == 0 {
            out.push(mate.clone());
            return;
        }
        for &p in hex.neighbors(cell as CellId) {
            if mate[p as usize] == FREE {
                mate[cell] = p;
                mate[p as usize] = cell as CellId;
                rec(hex, mate, cell + 1, depth - 1, out);
                mate[cell] = FREE;
                mate[p as usize] = FREE;
            }
        }
    }
    let mut out = Vec::new();
    rec(hex, &mut vec![FREE; hex.cells.len()], 0, depth, &mut out);
    out
}

/// Number of tilings `t` with `x · t = t`.
pub fn fixed_count(n: u32, x: GroupElement, limits: OracleLimits) -> Result<BigUint, OracleError> {
    let hex = Hexagon::new(n);
    let mut count = 0u64;
    for_each_tiling(&hex, limits, |mate| {
        count += hex.is_fixed(x, mate) as u64;
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}

/// Number of tilings fixed by every generator of `g` (hence by all of `g`).
pub fn fixed_count_subgroup(n: u32, g: &Subgroup, limits: OracleLimits) -> Result<BigUint, OracleError> {
    let hex = Hexagon::new(n);
    let gens: Vec<GroupElement> = g.elements().collect();
    let mut count = 0u64;
    for_each_tiling(&hex, limits, |mate| {
        count += gens.iter().all(|&x| hex.is_fixed(x, mate)) as u64;
        ControlFlow::Continue(())
    })?;
    Ok(BigUint::from(count))
}

/// Fixed-point, stabilizer and orbit statistics over all tilings of one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: u32,
    pub total: u64,
    /// Indexed by [`GroupElement::index`].
    pub fixed_by_element: [u64; GROUP_ORDER],
    /// Indexed by [`SubgroupId`].
    pub exact_stabilizer: Vec<u64>,
    /// Number of distinct canonical forms.
    pub orbit_count: u64,
    /// Sum of orbit sizes over distinct orbits; equals `total`.
    pub orbit_size_sum: u64,
    /// Tilings whose orbit size times stabilizer order is not 12.
    pub orbit_stabilizer_violations: u64,
    /// Canonical representatives in enumeration order, when requested.
    pub canonical_forms: Option<Vec<Tiling>>,
}

impl Census {
    fn empty(n: u32, lattice: &SubgroupLattice, keep_forms: bool) -> Self {
        Census {
            n,
            total: 0,
            fixed_by_element: [0; GROUP_ORDER],
            exact_stabilizer: vec![0; lattice.len()],
            orbit_count: 0,
            orbit_size_sum: 0,
            orbit_stabilizer_violations: 0,
            canonical_forms: keep_forms.then(Vec::new),
        }
    }

    fn record(&mut self, hex: &Hexagon, lattice: &SubgroupLattice, mate: &[CellId], images: &mut [Vec<CellId>]) {
        self.total += 1;
        let mut stab = 0u16;
        for x in GroupElement::all() {
            let img = &mut images[x.index()];
            hex.image_into(x, mate, img);
            if img.as_slice() == mate {
                stab |= 1 << x.index();
                self.fixed_by_element[x.index()] += 1;
            }
        }
        let sid = lattice
            .by_mask(stab)
            .expect("stabilizer of a tiling is a subgroup");
        self.exact_stabilizer[sid.0] += 1;

        let mut distinct: Vec<&Vec<CellId>> = images.iter().collect();
        distinct.sort();
        distinct.dedup();
        let orbit = distinct.len() as u64;
        if orbit * stab.count_ones() as u64 != GROUP_ORDER as u64 {
            self.orbit_stabilizer_violations += 1;
        }
        if distinct[0].as_slice() == mate {
            self.orbit_count += 1;
            self.orbit_size_sum += orbit;
            if let Some(forms) = &mut self.canonical_forms {
                forms.push(Tiling::from_mates(mate.to_vec()));
            }
        }
    }

    fn merge(&mut self, other: Census) {
        self.total += other.total;
        for (a, b) in self.fixed_by_element.iter_mut().zip(other.fixed_by_element) {
            *a += b;
        }
        for (a, b) in self.exact_stabilizer.iter_mut().zip(other.exact_stabilizer) {
            *a += b;
        }
        self.orbit_count += other.orbit_count;
        self.orbit_size_sum += other.orbit_size_sum;
        self.orbit_stabilizer_violations += other.orbit_stabilizer_violations;
        if let (Some(mine), Some(theirs)) = (&mut self.canonical_forms, other.canonical_forms) {
            mine.extend(theirs);
        }
    }

    pub fn fixed_by(&self, x: GroupElement) -> u64 {
        self.fixed_by_element[x.index()]
    }

    pub fn exact(&self, g: SubgroupId) -> u64 {
        self.exact_stabilizer[g.0]
    }

    /// Tilings whose stabilizer contains `g`.
    pub fn at_least(&self, lattice: &SubgroupLattice, g: SubgroupId) -> u64 {
        lattice.above(g).map(|h| self.exact(h)).sum()
    }

    /// JSON export with elements and subgroups keyed by label.
    pub fn to_json<'a>(&'a self, lattice: &'a SubgroupLattice) -> CensusJson<'a> {
        CensusJson {
            census: self,
            lattice,
        }
    }
}

/// Options for [`census_with`].
#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub limits: OracleLimits,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Placement decisions fixed before subtrees are distributed.
    pub split_depth: usize,
    pub keep_canonical_forms: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            limits: OracleLimits::default(),
            jobs: 1,
            split_depth: 6,
            keep_canonical_forms: false,
        }
    }
}

pub fn census(n: u32, limits: OracleLimits) -> Result<Census, OracleError> {
    census_with(
        n,
        CensusOptions {
            limits,
            ..CensusOptions::default()
        },
    )
}

/// One pass over all tilings. With `jobs > 1` the search tree is cut at
/// `split_depth` and subtrees run on a thread pool; partial results are
/// merged in search order, so the outcome is identical to a serial run.
pub fn census_with(n: u32, opts: CensusOptions) -> Result<Census, OracleError> {
    opts.limits.check(n)?;
    let hex = Hexagon::new(n);
    let lattice = SubgroupLattice::d12();
    let run = |start: Vec<CellId>| {
        let mut acc = Census::empty(n, lattice, opts.keep_canonical_forms);
        let mut images = vec![vec![FREE; hex.cells.len()]; GROUP_ORDER];
        let mut search = TilingSearch::from_partial(&hex, start);
        while search.advance() {
            acc.record(&hex, lattice, search.mates(), &mut images);
        }
        acc
    };

    if opts.jobs <= 1 {
        return Ok(run(vec![FREE; hex.cells.len()]));
    }
    let starts = split_points(&hex, opts.split_depth);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<Census> = pool.install(|| starts.into_par_iter().map(run).collect());
    let mut total = Census::empty(n, lattice, opts.keep_canonical_forms);
    for part in parts {
        total.merge(part);
    }
    Ok(total)
}

/// Serializes as
/// `{"n", "total", "fixed_by_element", "exact_stabilizer", "orbit_count"}`
/// with maps in group and lattice order.
pub struct CensusJson<'a> {
    census: &'a Census,
    lattice: &'a SubgroupLattice,
}

struct ByElement<'a>(&'a [u64; GROUP_ORDER]);

impl Serialize for ByElement<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(GROUP_ORDER))?;
        for x in GroupElement::all() {
            map.serialize_entry(&x.label(), &self.0[x.index()])?;
        }
        map.end()
    }
}

struct BySubgroup<'a>(&'a SubgroupLattice, &'a [u64]);

impl Serialize for BySubgroup<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for id in self.0.ids() {
            map.serialize_entry(self.0.get(id).label(), &self.1[id.0])?;
        }
        map.end()
    }
}

impl Serialize for CensusJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let c = self.census;
        let mut st = s.serialize_struct("Census", 5)?;
        st.serialize_field("n", &c.n)?;
        st.serialize_field("total", &c.total)?;
        st.serialize_field("fixed_by_element", &ByElement(&c.fixed_by_element))?;
        st.serialize_field("exact_stabilizer", &BySubgroup(self.lattice, &c.exact_stabilizer))?;
        st.serialize_field("orbit_count", &c.orbit_count)?;
        st.end()
    }
}
