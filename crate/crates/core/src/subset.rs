//! Finite sets of elements drawn from one complex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use fixedbitset::FixedBitSet;

/// Index of an element inside its complex.
///
/// Ids are assigned in the canonical `(dim, name)` order when the complex is
/// built, so comparing ids gives the deterministic tie-break order used by
/// every choice the library makes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u32);

impl ElementId {
    pub(crate) fn new(index: usize) -> Self {
        ElementId(u32::try_from(index).expect("element index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A set of element ids over a fixed universe `0..universe`.
///
/// Equality is extensional: two subsets are equal iff they have the same
/// members (and were built for the same universe size).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn singleton(universe: usize, id: ElementId) -> Self {
        let mut s = Subset::empty(universe);
        s.insert(id);
        s
    }

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(universe: usize, ids: I) -> Self {
        let mut s = Subset::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Builds the subset whose members are the set bits of `mask`.
    /// Only the low `universe` bits are read.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        let mut s = Subset::empty(universe);
        for i in 0..universe {
            if mask >> i & 1 == 1 {
                s.bits.insert(i);
            }
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.bits.contains(id.index())
    }

    pub fn insert(&mut self, id: ElementId) {
        self.bits.insert(id.index());
    }

    pub fn remove(&mut self, id: ElementId) {
        self.bits.set(id.index(), false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in increasing id order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.bits.ones().map(ElementId::new)
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<ElementId> {
        self.bits.minimum().map(ElementId::new)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn meets(&self, other: &Subset) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Subset) {
        self.bits.difference_with(&other.bits);
    }

    pub fn without(&self, id: ElementId) -> Subset {
        let mut s = self.clone();
        s.remove(id);
        s
    }

    pub fn with(&self, id: ElementId) -> Subset {
        let mut s = self.clone();
        s.insert(id);
        s
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl BitOr for &Subset {
    type Output = Subset;

    fn bitor(self, rhs: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(rhs);
        s
    }
}

impl BitAnd for &Subset {
    type Output = Subset;

    fn bitand(self, rhs: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(rhs);
        s
    }
}

impl Sub for &Subset {
    type Output = Subset;

    fn sub(self, rhs: &Subset) -> Subset {
        let mut s = self.clone();
        s.difference_with(rhs);
        s
    }
}
