//! Path orderings on a complex and the predicates built from them.
//!
//! `x < y` holds when `x⁺ ∩ y⁻` is non-empty; `◁` is its reflexive transitive
//! closure and `◁_S` the closure computed through members of `S` only.
//! `x ≺ y` holds when `y ∈ x⁺` or `x ∈ y⁻`; `◀` is its reflexive transitive
//! closure and crosses dimensions.
//!
//! Closures are computed by plain reachability, so nothing here assumes the
//! orderings are acyclic.

use crate::complex::{Complex, Sign};
use crate::subset::{ElementId, Subset};

/// Outcome of a segment test. `contained` is false when `R ⊄ T`; members of
/// `R` outside `T` are ignored by the test itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentVerdict {
    pub is_segment: bool,
    pub contained: bool,
}

fn reach(start: ElementId, universe: usize, step: impl Fn(ElementId) -> Subset) -> Subset {
    let mut seen = Subset::singleton(universe, start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in step(x).iter() {
            if !seen.contains(y) {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    seen
}

impl Complex {
    /// `{y ∈ S : x ◁_S y}`; empty when `x ∉ S`.
    pub fn reachable_within(&self, s: &Subset, x: ElementId) -> Subset {
        if !s.contains(x) {
            return self.empty_subset();
        }
        reach(x, self.len(), |v| &self.successors(v) & s)
    }

    /// `x ◁_S y`: a `<`-path from `x` to `y` through members of `S`
    /// (length zero allowed, so `x ◁_S x` for every `x ∈ S`).
    pub fn triangle(&self, s: &Subset, x: ElementId, y: ElementId) -> bool {
        self.reachable_within(s, x).contains(y)
    }

    /// `{y : x ◁ y}` over the whole complex. Cached per orientation.
    pub fn descendants(&self, x: ElementId) -> &Subset {
        let rows = self.triangle_cache().get_or_init(|| {
            self.ids()
                .map(|v| reach(v, self.len(), |w| self.successors(w)))
                .collect()
        });
        &rows[x.index()]
    }

    /// Unrestricted `x ◁ y`.
    pub fn triangle_full(&self, x: ElementId, y: ElementId) -> bool {
        self.descendants(x).contains(y)
    }

    /// All `y` with `x ≺ y`: the positive faces of `x` and the elements
    /// having `x` as a negative face.
    pub fn prec_successors(&self, x: ElementId) -> Subset {
        self.plus(x) | self.cofaces(x, Sign::Minus)
    }

    /// `{y : x ◀ y}`. Cached per orientation.
    pub fn prec_descendants(&self, x: ElementId) -> &Subset {
        let rows = self.prec_cache().get_or_init(|| {
            self.ids()
                .map(|v| reach(v, self.len(), |w| self.prec_successors(w)))
                .collect()
        });
        &rows[x.index()]
    }

    /// `x ◀ y`.
    pub fn prec_closure(&self, x: ElementId, y: ElementId) -> bool {
        self.prec_descendants(x).contains(y)
    }

    /// Is `R` a segment of `T`: for `x, z ∈ R` and `y ∈ T` with
    /// `x ◁_T y ◁_T z`, is `y ∈ R`?
    pub fn is_segment(&self, r: &Subset, t: &Subset) -> SegmentVerdict {
        self.segment_with(r, t, |x| self.reachable_within(t, x))
    }

    /// Segment test using the unrestricted `◁` between members of `T`.
    pub fn is_segment_ambient(&self, r: &Subset, t: &Subset) -> SegmentVerdict {
        self.segment_with(r, t, |x| self.descendants(x) & t)
    }

    fn segment_with(
        &self,
        r: &Subset,
        t: &Subset,
        forward: impl Fn(ElementId) -> Subset,
    ) -> SegmentVerdict {
        let contained = r.is_subset(t);
        let ends = r & t;
        let outside = t - r;
        // y strictly between two members of R: reachable from some x ∈ R and reaching some z ∈ R.
        let mut after = self.empty_subset();
        for x in ends.iter() {
            after.union_with(&forward(x));
        }
        let is_segment = (&after & &outside)
            .iter()
            .all(|y| forward(y).is_disjoint(&ends));
        SegmentVerdict {
            is_segment,
            contained,
        }
    }

    /// `R` is tight when `u ◁ v` and `v ∈ R` imply `u⁻ ∩ R^± = ∅`.
    pub fn is_tight(&self, r: &Subset) -> bool {
        self.tightness_witness(r).is_none()
    }

    /// A pair `(u, v)` with `u ◁ v`, `v ∈ R` and `u⁻` meeting `R^±`.
    pub fn tightness_witness(&self, r: &Subset) -> Option<(ElementId, ElementId)> {
        let pure_plus = self.pure_faces(r, Sign::Plus);
        let mut starts = self.empty_subset();
        for f in pure_plus.iter() {
            starts.union_with(self.cofaces(f, Sign::Minus));
        }
        let witness = starts
            .iter()
            .find_map(|u| (self.descendants(u) & r).first().map(|v| (u, v)));
        witness
    }

    /// Members of `S` with no other member of `S` before them under `◁_S`.
    pub fn minimal_elements(&self, s: &Subset) -> Subset {
        let mut out = s.clone();
        for y in s.iter() {
            out.difference_with(&self.reachable_within(s, y).without(y));
        }
        out
    }

    /// Members of `S` with no other member of `S` after them under `◁_S`.
    pub fn maximal_elements(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s.iter() {
            if self.reachable_within(s, x).without(x).is_empty() {
                out.insert(x);
            }
        }
        out
    }
}
