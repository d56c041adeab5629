//! The symmetry group of the regular hexagon and its subgroup lattice.
//!
//! Elements are kept in the normal form `f^flip · r^rot`, where `r` is the
//! rotation by 60° and `f` is the reflection whose axis passes through two
//! opposite vertices. Reflections `f·r^b` with even `b` are vertex-axis
//! reflections, those with odd `b` are edge-axis reflections.
//!
//! The lattice is built by closing every generating set of at most two
//! elements, so nothing about its shape is transcribed by hand. The chain
//! families it must match are checked at construction.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Order of the hexagon's symmetry group.
pub const GROUP_ORDER: usize = 12;

/// Exact rational used for orbit-count weights.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("expected 16 subgroups, found {0}")]
    SubgroupCount(usize),
    #[error("expected 10 conjugacy classes, found {0}")]
    ClassCount(usize),
    #[error("subgroup {lower} is not contained in {upper}")]
    Incomparable { lower: String, upper: String },
    #[error("maximal chains disagree with the parameterised chain families: {0}")]
    ChainFamilies(String),
    #[error("no subgroup labelled {0:?}")]
    UnknownLabel(String),
}

/// A symmetry `f^flip · r^rot` of the hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    flip: u8,
    rot: u8,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { flip: 0, rot: 0 };
    /// Rotation by 60°.
    pub const R: GroupElement = GroupElement { flip: 0, rot: 1 };
    /// Reflection across the axis through two opposite vertices.
    pub const F: GroupElement = GroupElement { flip: 1, rot: 0 };

    /// Builds `f^flip · r^rot`, reducing exponents into range.
    pub fn new(flip: u8, rot: u8) -> Self {
        GroupElement {
            flip: flip % 2,
            rot: rot % 6,
        }
    }

    pub fn rotation(rot: u8) -> Self {
        Self::new(0, rot)
    }

    pub fn reflection(rot: u8) -> Self {
        Self::new(1, rot)
    }

    pub fn flip(self) -> u8 {
        self.flip
    }

    pub fn rot(self) -> u8 {
        self.rot
    }

    pub fn is_reflection(self) -> bool {
        self.flip == 1
    }

    /// Position in the fixed listing `e, r, …, r5, f, fr, …, fr5`.
    pub fn index(self) -> usize {
        (self.flip as usize) * 6 + self.rot as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < GROUP_ORDER, "group element index {index} out of range");
        Self::new((index / 6) as u8, (index % 6) as u8)
    }

    /// All twelve elements in index order.
    pub fn all() -> impl Iterator<Item = GroupElement> + Clone {
        (0..GROUP_ORDER).map(Self::from_index)
    }

    /// Normal form of `self · other`, using `r·f = f·r⁻¹`.
    pub fn multiply(self, other: GroupElement) -> GroupElement {
        let rot = if other.flip == 0 {
            self.rot + other.rot
        } else {
            // r^b f = f r^-b
            (6 - self.rot) % 6 + other.rot
        };
        GroupElement::new(self.flip + other.flip, rot)
    }

    pub fn inverse(self) -> GroupElement {
        if self.flip == 1 {
            self
        } else {
            GroupElement::new(0, (6 - self.rot) % 6)
        }
    }

    pub fn pow(self, exp: u32) -> GroupElement {
        (0..exp).fold(GroupElement::IDENTITY, |acc, _| acc.multiply(self))
    }

    pub(crate) fn bit(self) -> u16 {
        1 << self.index()
    }

    /// Textual label: `e`, `r`, `r2`, …, `f`, `fr`, …, `fr5`.
    pub fn label(self) -> String {
        let rot = match self.rot {
            0 => String::new(),
            1 => "r".to_string(),
            k => format!("r{k}"),
        };
        match (self.flip, rot.is_empty()) {
            (0, true) => "e".to_string(),
            (0, false) => rot,
            _ => format!("f{rot}"),
        }
    }

    pub fn parse(label: &str) -> Option<GroupElement> {
        GroupElement::all().find(|x| x.label() == label)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Smallest set of elements containing `generators` and closed under product.
pub fn closure(generators: &[GroupElement]) -> u16 {
    let mut mask = GroupElement::IDENTITY.bit();
    for g in generators {
        mask |= g.bit();
    }
    loop {
        let mut next = mask;
        for a in elements_of(mask) {
            for b in elements_of(mask) {
                next |= a.multiply(b).bit();
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

fn elements_of(mask: u16) -> impl Iterator<Item = GroupElement> + Clone {
    GroupElement::all().filter(move |x| mask & x.bit() != 0)
}

/// Conjugacy type of a subgroup. The ten variants are the ten conjugacy
/// classes of subgroups; each corresponds to one plane-partition symmetry class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubgroupKind {
    Trivial,
    HalfTurn,
    VertexReflection,
    EdgeReflection,
    Rotation120,
    /// `⟨f r^b, r³⟩`: two perpendicular reflection axes and the half turn.
    ReflectionsWithHalfTurn,
    Rotation60,
    /// `⟨f, r²⟩`: the three vertex reflections with the 120° rotations.
    VertexDihedral,
    /// `⟨fr, r²⟩`: the three edge reflections with the 120° rotations.
    EdgeDihedral,
    Full,
}

impl SubgroupKind {
    /// Number of the matching symmetry class in Stanley's list of ten.
    pub fn stanley_case(self) -> u8 {
        match self {
            SubgroupKind::Trivial => 1,
            SubgroupKind::VertexReflection => 2,
            SubgroupKind::Rotation120 => 3,
            SubgroupKind::VertexDihedral => 4,
            SubgroupKind::HalfTurn => 5,
            SubgroupKind::EdgeReflection => 6,
            SubgroupKind::ReflectionsWithHalfTurn => 7,
            SubgroupKind::EdgeDihedral => 8,
            SubgroupKind::Rotation60 => 9,
            SubgroupKind::Full => 10,
        }
    }

    fn classify(mask: u16) -> SubgroupKind {
        let order = mask.count_ones();
        let has = |x: GroupElement| mask & x.bit() != 0;
        let vertex = (0..6)
            .step_by(2)
            .any(|b| has(GroupElement::reflection(b)));
        let edge = (1..6).step_by(2).any(|b| has(GroupElement::reflection(b)));
        match (order, vertex, edge) {
            (1, _, _) => SubgroupKind::Trivial,
            (2, false, false) => SubgroupKind::HalfTurn,
            (2, true, _) => SubgroupKind::VertexReflection,
            (2, _, true) => SubgroupKind::EdgeReflection,
            (3, _, _) => SubgroupKind::Rotation120,
            (4, _, _) => SubgroupKind::ReflectionsWithHalfTurn,
            (6, false, false) => SubgroupKind::Rotation60,
            (6, true, false) => SubgroupKind::VertexDihedral,
            (6, false, true) => SubgroupKind::EdgeDihedral,
            (12, _, _) => SubgroupKind::Full,
            _ => unreachable!("mask {mask:#b} is not a subgroup of D12"),
        }
    }
}

/// Index of a subgroup within [`SubgroupLattice::subgroups`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    mask: u16,
    label: String,
    kind: SubgroupKind,
}

impl Subgroup {
    fn from_mask(mask: u16) -> Self {
        Subgroup {
            mask,
            label: canonical_label(mask),
            kind: SubgroupKind::classify(mask),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + Clone {
        elements_of(self.mask)
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.mask & x.bit() != 0
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn order(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `[D12 : self]`.
    pub fn index(&self) -> usize {
        GROUP_ORDER / self.order()
    }

    /// Bitset of member elements, bit `i` for `GroupElement::from_index(i)`.
    pub fn mask(&self) -> u16 {
        self.mask
    }

    /// Canonical generator label such as `<e>`, `<r2>`, `<fr,r3>` or `<f,r>`.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> SubgroupKind {
        self.kind
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

// Every subgroup is a rotation subgroup <r^k>, optionally extended by one
// reflection coset. The label names the reflection with the smallest
// exponent followed by the rotation generator.
fn canonical_label(mask: u16) -> String {
    let members: Vec<GroupElement> = elements_of(mask).collect();
    let rotation_order = members.iter().filter(|x| !x.is_reflection()).count();
    let mut gens = Vec::new();
    if let Some(refl) = members.iter().find(|x| x.is_reflection()) {
        gens.push(refl.label());
    }
    if rotation_order > 1 {
        gens.push(GroupElement::rotation((6 / rotation_order) as u8).label());
    }
    if gens.is_empty() {
        gens.push("e".to_string());
    }
    format!("<{}>", gens.join(","))
}

/// The sixteen subgroups of D12 ordered by (order, element bitset), with
/// containment, Möbius function, conjugacy classes and orbit-count weights.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    by_mask: HashMap<u16, SubgroupId>,
    leq: Vec<Vec<bool>>,
    mobius: Vec<Vec<Option<i64>>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
    weights: Vec<Rational>,
}

impl SubgroupLattice {
    /// Shared instance, built once.
    pub fn d12() -> &'static SubgroupLattice {
        static LATTICE: OnceLock<SubgroupLattice> = OnceLock::new();
        LATTICE.get_or_init(|| SubgroupLattice::build().expect("D12 subgroup lattice"))
    }

    /// Enumerates subgroups as closures of all generating sets of size ≤ 2
    /// and derives every table from them.
    pub fn build() -> Result<SubgroupLattice, LatticeError> {
        let elements: Vec<GroupElement> = GroupElement::all().collect();
        let mut masks = vec![closure(&[])];
        for (i, &a) in elements.iter().enumerate() {
            masks.push(closure(&[a]));
            for &b in &elements[i + 1..] {
                masks.push(closure(&[a, b]));
            }
        }
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        if masks.len() != 16 {
            return Err(LatticeError::SubgroupCount(masks.len()));
        }

        let subgroups: Vec<Subgroup> = masks.iter().map(|&m| Subgroup::from_mask(m)).collect();
        let by_mask = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.mask, SubgroupId(i)))
            .collect();
        let leq = subgroups
            .iter()
            .map(|g| subgroups.iter().map(|h| g.is_subgroup_of(h)).collect())
            .collect();

        let mut lattice = SubgroupLattice {
            subgroups,
            by_mask,
            leq,
            mobius: Vec::new(),
            class_of: Vec::new(),
            classes: Vec::new(),
            weights: Vec::new(),
        };
        lattice.mobius = lattice.mobius_table();
        lattice.compute_classes()?;
        lattice.weights = lattice
            .ids()
            .map(|h| lattice.weight_sum(h))
            .collect();
        lattice.check_chain_families()?;
        Ok(lattice)
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> + Clone {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn bottom(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn top(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    pub fn by_mask(&self, mask: u16) -> Option<SubgroupId> {
        self.by_mask.get(&mask).copied()
    }

    pub fn by_label(&self, label: &str) -> Result<SubgroupId, LatticeError> {
        self.ids()
            .find(|&id| self.get(id).label() == label)
            .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))
    }

    /// Subgroup generated by `generators`.
    pub fn generated_by(&self, generators: &[GroupElement]) -> SubgroupId {
        self.by_mask(closure(generators))
            .expect("closure of group elements is always a subgroup")
    }

    /// Cyclic subgroup `⟨x⟩`.
    pub fn cyclic(&self, x: GroupElement) -> SubgroupId {
        self.generated_by(&[x])
    }

    pub fn leq(&self, g: SubgroupId, h: SubgroupId) -> bool {
        self.leq[g.0][h.0]
    }

    /// Subgroups containing `g`, including `g` itself.
    pub fn above(&self, g: SubgroupId) -> impl Iterator<Item = SubgroupId> + '_ {
        self.ids().filter(move |&h| self.leq(g, h))
    }

    /// Subgroups contained in `h`, including `h` itself.
    pub fn below(&self, h: SubgroupId) -> impl Iterator<Item = SubgroupId> + '_ {
        self.ids().filter(move |&g| self.leq(g, h))
    }

    /// `h` covers `g`: `g < h` with nothing strictly between.
    pub fn covers(&self, g: SubgroupId, h: SubgroupId) -> bool {
        g != h
            && self.leq(g, h)
            && !self
                .ids()
                .any(|k| k != g && k != h && self.leq(g, k) && self.leq(k, h))
    }

    /// Möbius function of the incidence algebra, `μ(g, h)` for `g ≤ h`.
    pub fn mobius(&self, g: SubgroupId, h: SubgroupId) -> Result<i64, LatticeError> {
        self.mobius[g.0][h.0].ok_or_else(|| LatticeError::Incomparable {
            lower: self.get(g).label().to_string(),
            upper: self.get(h).label().to_string(),
        })
    }

    fn mobius_table(&self) -> Vec<Vec<Option<i64>>> {
        let n = self.len();
        let mut memo: Vec<Vec<Option<i64>>> = vec![vec![None; n]; n];
        for g in self.ids() {
            for h in self.ids() {
                if self.leq(g, h) {
                    self.mobius_rec(g, h, &mut memo);
                }
            }
        }
        memo
    }

    fn mobius_rec(&self, g: SubgroupId, h: SubgroupId, memo: &mut Vec<Vec<Option<i64>>>) -> i64 {
        if let Some(v) = memo[g.0][h.0] {
            return v;
        }
        let v = if g == h {
            1
        } else {
            let interior: Vec<SubgroupId> = self
                .ids()
                .filter(|&k| k != h && self.leq(g, k) && self.leq(k, h))
                .collect();
            -interior
                .into_iter()
                .map(|k| self.mobius_rec(g, k, memo))
                .sum::<i64>()
        };
        memo[g.0][h.0] = Some(v);
        v
    }

    fn compute_classes(&mut self) -> Result<(), LatticeError> {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<SubgroupId>> = Vec::new();
        for id in self.ids() {
            if class_of[id.0] != usize::MAX {
                continue;
            }
            let class = classes.len();
            let mut members: Vec<SubgroupId> = GroupElement::all()
                .map(|x| self.conjugate(id, x))
                .collect();
            members.sort();
            members.dedup();
            for &m in &members {
                class_of[m.0] = class;
            }
            classes.push(members);
        }
        if classes.len() != 10 {
            return Err(LatticeError::ClassCount(classes.len()));
        }
        self.class_of = class_of;
        self.classes = classes;
        Ok(())
    }

    /// `x · H · x⁻¹`.
    pub fn conjugate(&self, h: SubgroupId, x: GroupElement) -> SubgroupId {
        let inv = x.inverse();
        let mask = self
            .get(h)
            .elements()
            .fold(0u16, |acc, y| acc | x.multiply(y).multiply(inv).bit());
        self.by_mask(mask).expect("conjugate of a subgroup is a subgroup")
    }

    /// Conjugacy classes, in order of their first member.
    pub fn conjugacy_classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    pub fn class_of(&self, h: SubgroupId) -> usize {
        self.class_of[h.0]
    }

    /// `w(h) = Σ_{g ≤ h} μ(g,h) / [D12 : g]`; `Σ_h w(h)·#c(h)` is the number
    /// of tilings up to symmetry.
    pub fn weight(&self, h: SubgroupId) -> &Rational {
        &self.weights[h.0]
    }

    fn weight_sum(&self, h: SubgroupId) -> Rational {
        self.below(h).fold(Rational::zero(), |acc, g| {
            let mu = self.mobius[g.0][h.0].expect("g ≤ h");
            acc + Rational::new(BigInt::from(mu), BigInt::from(self.get(g).index()))
        })
    }

    /// All maximal chains `⟨e⟩ = c0 ⋖ c1 ⋖ … ⋖ ⟨f,r⟩`.
    pub fn maximal_chains(&self) -> Vec<Vec<SubgroupId>> {
        let mut out = Vec::new();
        let mut path = vec![self.bottom()];
        self.extend_chains(&mut path, &mut out);
        out
    }

    fn extend_chains(&self, path: &mut Vec<SubgroupId>, out: &mut Vec<Vec<SubgroupId>>) {
        let last = *path.last().expect("non-empty chain");
        if last == self.top() {
            out.push(path.clone());
            return;
        }
        for next in self.ids() {
            if self.covers(last, next) {
                path.push(next);
                self.extend_chains(path, out);
                path.pop();
            }
        }
    }

    /// The parameterised maximal chain families:
    ///
    /// ```text
    /// ⟨e⟩ < ⟨r^a⟩  < ⟨r⟩                  < ⟨f,r⟩   a ∈ {2,3}
    /// ⟨e⟩ < ⟨r^a⟩  < ⟨f r^b, r^a⟩         < ⟨f,r⟩   a ∈ {2,3}, b ∈ {0,1}
    /// ⟨e⟩ < ⟨f r^a⟩ < ⟨f r^(a mod b), r^b⟩ < ⟨f,r⟩   a ∈ {0,1}, b ∈ {2,3}
    /// ```
    pub fn chain_family_instances(&self) -> Vec<Vec<SubgroupId>> {
        let e = GroupElement::IDENTITY;
        let r = GroupElement::rotation;
        let fr = GroupElement::reflection;
        let top = self.top();
        let bottom = self.cyclic(e);
        let mut chains = Vec::new();
        for a in [2u8, 3] {
            chains.push(vec![bottom, self.cyclic(r(a)), self.cyclic(r(1)), top]);
        }
        for a in [2u8, 3] {
            for b in [0u8, 1] {
                chains.push(vec![
                    bottom,
                    self.cyclic(r(a)),
                    self.generated_by(&[fr(b), r(a)]),
                    top,
                ]);
            }
        }
        for a in [0u8, 1] {
            for b in [2u8, 3] {
                chains.push(vec![
                    bottom,
                    self.cyclic(fr(a)),
                    self.generated_by(&[fr(a % b), r(b)]),
                    top,
                ]);
            }
        }
        chains
    }

    /// Every family instance must be a maximal chain, and every maximal chain
    /// must be conjugate to a family instance.
    fn check_chain_families(&self) -> Result<(), LatticeError> {
        let chains = self.maximal_chains();
        let families = self.chain_family_instances();
        for inst in &families {
            if !chains.contains(inst) {
                return Err(LatticeError::ChainFamilies(format!(
                    "family instance {} is not a maximal chain",
                    self.chain_label(inst)
                )));
            }
        }
        let class_seq = |c: &[SubgroupId]| -> Vec<usize> { c.iter().map(|&s| self.class_of(s)).collect() };
        let family_classes: Vec<Vec<usize>> = families.iter().map(|c| class_seq(c)).collect();
        for chain in &chains {
            if !family_classes.contains(&class_seq(chain)) {
                return Err(LatticeError::ChainFamilies(format!(
                    "maximal chain {} matches no family",
                    self.chain_label(chain)
                )));
            }
        }
        Ok(())
    }

    pub fn chain_label(&self, chain: &[SubgroupId]) -> String {
        chain
            .iter()
            .map(|&s| self.get(s).label())
            .collect::<Vec<_>>()
            .join(" < ")
    }
}
