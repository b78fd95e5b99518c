//! Graded sets with negative and positive face maps.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{ElementId, Subset};

/// Which face-set of an element: negative (source) or positive (target).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    fn slot(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        })
    }
}

/// Raw description of one element, by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementRecord {
    pub id: String,
    pub dim: usize,
    pub minus: Vec<String>,
    pub plus: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("element `{element}` lists unknown face `{face}`")]
    UnknownFace { element: String, face: String },
    #[error("unknown element id `{0}`")]
    UnknownId(String),
}

struct Element {
    name: String,
    dim: usize,
    faces: [Subset; 2],
    /// Elements having this one as a face, per sign.
    cofaces: [Subset; 2],
}

struct Inner {
    elements: Vec<Element>,
    by_name: HashMap<String, ElementId>,
    grades: Vec<Subset>,
    // Lazily computed closures, indexed by orientation (0 = as built, 1 = reversed).
    pub(crate) triangle_closure: [OnceLock<Vec<Subset>>; 2],
    pub(crate) prec_closure: [OnceLock<Vec<Subset>>; 2],
}

/// A finite graded set with face maps.
///
/// Construction only checks that every referenced face exists; the
/// remaining pre-parity conditions (dimensions, non-emptiness, disjointness)
/// are left to [`crate::axioms::check_pre_parity`] so that broken data can
/// still be inspected.
///
/// Cloning is cheap, and so is [`Complex::reverse`], which flips a flag
/// instead of copying the face maps.
#[derive(Clone)]
pub struct Complex {
    inner: Arc<Inner>,
    reversed: bool,
}

impl Complex {
    /// Builds a complex from element records. Elements are assigned ids in
    /// `(dim, name)` order.
    pub fn new(mut records: Vec<ElementRecord>) -> Result<Complex, ComplexError> {
        records.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let universe = records.len();
        let mut by_name = HashMap::with_capacity(universe);
        for (i, r) in records.iter().enumerate() {
            if by_name.insert(r.id.clone(), ElementId::new(i)).is_some() {
                return Err(ComplexError::DuplicateId(r.id.clone()));
            }
        }
        let resolve = |owner: &str, names: &[String]| -> Result<Subset, ComplexError> {
            let mut s = Subset::empty(universe);
            for n in names {
                let id = by_name.get(n).ok_or_else(|| ComplexError::UnknownFace {
                    element: owner.to_string(),
                    face: n.clone(),
                })?;
                s.insert(*id);
            }
            Ok(s)
        };
        let mut elements = Vec::with_capacity(universe);
        for r in &records {
            elements.push(Element {
                name: r.id.clone(),
                dim: r.dim,
                faces: [resolve(&r.id, &r.minus)?, resolve(&r.id, &r.plus)?],
                cofaces: [Subset::empty(universe), Subset::empty(universe)],
            });
        }
        for i in 0..universe {
            for slot in 0..2 {
                let faces: Vec<ElementId> = elements[i].faces[slot].iter().collect();
                for f in faces {
                    elements[f.index()].cofaces[slot].insert(ElementId::new(i));
                }
            }
        }
        let top = elements.iter().map(|e| e.dim).max().map_or(0, |d| d + 1);
        let mut grades = vec![Subset::empty(universe); top];
        for (i, e) in elements.iter().enumerate() {
            grades[e.dim].insert(ElementId::new(i));
        }
        Ok(Complex {
            inner: Arc::new(Inner {
                elements,
                by_name,
                grades,
                triangle_closure: Default::default(),
                prec_closure: Default::default(),
            }),
            reversed: false,
        })
    }

    pub fn builder() -> ComplexBuilder {
        ComplexBuilder::default()
    }

    /// The same elements with every negative face-set exchanged for the
    /// positive one. `c.reverse().reverse() == c`.
    pub fn reverse(&self) -> Complex {
        Complex {
            inner: Arc::clone(&self.inner),
            reversed: !self.reversed,
        }
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub(crate) fn orientation(&self) -> usize {
        usize::from(self.reversed)
    }

    pub(crate) fn triangle_cache(&self) -> &OnceLock<Vec<Subset>> {
        &self.inner.triangle_closure[self.orientation()]
    }

    pub(crate) fn prec_cache(&self) -> &OnceLock<Vec<Subset>> {
        &self.inner.prec_closure[self.orientation()]
    }

    fn slot(&self, sign: Sign) -> usize {
        if self.reversed {
            sign.flip().slot()
        } else {
            sign.slot()
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.elements.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.len()).map(ElementId::new)
    }

    pub fn name(&self, id: ElementId) -> &str {
        &self.inner.elements[id.index()].name
    }

    pub fn dim(&self, id: ElementId) -> usize {
        self.inner.elements[id.index()].dim
    }

    pub fn id(&self, name: &str) -> Option<ElementId> {
        self.inner.by_name.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<ElementId, ComplexError> {
        self.id(name)
            .ok_or_else(|| ComplexError::UnknownId(name.to_string()))
    }

    /// The face-set `x⁻` or `x⁺`.
    pub fn face_set(&self, x: ElementId, sign: Sign) -> &Subset {
        &self.inner.elements[x.index()].faces[self.slot(sign)]
    }

    pub fn minus(&self, x: ElementId) -> &Subset {
        self.face_set(x, Sign::Minus)
    }

    pub fn plus(&self, x: ElementId) -> &Subset {
        self.face_set(x, Sign::Plus)
    }

    /// Elements `y` with `x ∈ y^sign`.
    pub fn cofaces(&self, x: ElementId, sign: Sign) -> &Subset {
        &self.inner.elements[x.index()].cofaces[self.slot(sign)]
    }

    /// Highest dimension present, or `None` for the empty complex.
    pub fn max_dim(&self) -> Option<usize> {
        self.inner.grades.len().checked_sub(1)
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn singleton(&self, x: ElementId) -> Subset {
        Subset::singleton(self.len(), x)
    }

    /// Elements of dimension exactly `n`.
    pub fn grade(&self, n: usize) -> Subset {
        self.inner
            .grades
            .get(n)
            .cloned()
            .unwrap_or_else(|| self.empty_subset())
    }

    /// Resolves a list of names into a subset.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, ComplexError> {
        let mut s = self.empty_subset();
        for n in names {
            s.insert(self.lookup(n.as_ref())?);
        }
        Ok(s)
    }

    /// Element records with faces as seen through the current orientation.
    pub fn records(&self) -> Vec<ElementRecord> {
        self.ids()
            .map(|x| ElementRecord {
                id: self.name(x).to_string(),
                dim: self.dim(x),
                minus: self.names(self.minus(x)),
                plus: self.names(self.plus(x)),
            })
            .collect()
    }

    /// Member names in id order.
    pub fn names(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|x| self.name(x).to_string()).collect()
    }

    /// Renders a subset as `{a, b, c}`.
    pub fn show(&self, s: &Subset) -> String {
        format!("{{{}}}", self.names(s).join(", "))
    }

    // Set-level operators.

    /// `S⁻` or `S⁺`: the union of the chosen face-sets over all members.
    pub fn faces(&self, s: &Subset, sign: Sign) -> Subset {
        let mut out = self.empty_subset();
        for x in s.iter() {
            out.union_with(self.face_set(x, sign));
        }
        out
    }

    /// `S^∓ = S⁻ \ S⁺` for `Minus`, `S^± = S⁺ \ S⁻` for `Plus`.
    pub fn pure_faces(&self, s: &Subset, sign: Sign) -> Subset {
        &self.faces(s, sign) - &self.faces(s, sign.flip())
    }

    /// `Sₙ`: members of dimension exactly `n`.
    pub fn sub(&self, s: &Subset, n: usize) -> Subset {
        s & &self.grade(n)
    }

    /// `Sⁿ`: members of dimension at most `n`.
    pub fn skeleton(&self, s: &Subset, n: usize) -> Subset {
        let mut out = s.clone();
        for (d, g) in self.inner.grades.iter().enumerate() {
            if d > n {
                out.difference_with(g);
            }
        }
        out
    }

    /// Members of dimension strictly below `n`, i.e. `Sⁿ⁻¹` with `S⁻¹ = ∅`.
    pub fn below(&self, s: &Subset, n: usize) -> Subset {
        match n.checked_sub(1) {
            Some(k) => self.skeleton(s, k),
            None => self.empty_subset(),
        }
    }

    /// Highest dimension among the members, `None` when empty.
    pub fn dim_of(&self, s: &Subset) -> Option<usize> {
        s.iter().map(|x| self.dim(x)).max()
    }

    /// `S ⊥ T`: `S⁻ ∩ T⁻ = S⁺ ∩ T⁺ = ∅`.
    pub fn perp(&self, s: &Subset, t: &Subset) -> bool {
        self.faces(s, Sign::Minus)
            .is_disjoint(&self.faces(t, Sign::Minus))
            && self
                .faces(s, Sign::Plus)
                .is_disjoint(&self.faces(t, Sign::Plus))
    }

    fn elements_perp(&self, x: ElementId, y: ElementId) -> bool {
        self.minus(x).is_disjoint(self.minus(y)) && self.plus(x).is_disjoint(self.plus(y))
    }

    /// First pair of members violating well-formedness, if any.
    ///
    /// A set is well-formed when it has at most one vertex and distinct
    /// members of the same positive dimension have disjoint negative faces
    /// and disjoint positive faces.
    pub fn branching_pair(&self, s: &Subset) -> Option<(ElementId, ElementId)> {
        let members: Vec<ElementId> = s.iter().collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if self.dim(x) != self.dim(y) {
                    continue;
                }
                if self.dim(x) == 0 || !self.elements_perp(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_well_formed(&self, s: &Subset) -> bool {
        self.branching_pair(s).is_none()
    }

    /// `x < y`: `x⁺ ∩ y⁻ ≠ ∅`.
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        self.plus(x).meets(self.minus(y))
    }

    /// All `y` with `x < y`.
    pub fn successors(&self, x: ElementId) -> Subset {
        let mut out = self.empty_subset();
        for f in self.plus(x).iter() {
            out.union_with(self.cofaces(f, Sign::Minus));
        }
        out
    }
}

impl PartialEq for Complex {
    /// Structural equality of the elements as seen through each orientation.
    fn eq(&self, other: &Complex) -> bool {
        self.records() == other.records()
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for x in self.ids() {
            m.entry(
                &self.name(x),
                &format_args!(
                    "dim {} {} -> {}",
                    self.dim(x),
                    self.show(self.minus(x)),
                    self.show(self.plus(x))
                ),
            );
        }
        m.finish()
    }
}

/// Incremental construction of a complex by element name.
#[derive(Default, Debug, Clone)]
pub struct ComplexBuilder {
    records: Vec<ElementRecord>,
}

impl ComplexBuilder {
    pub fn element(mut self, id: &str, dim: usize, minus: &[&str], plus: &[&str]) -> Self {
        self.records.push(ElementRecord {
            id: id.to_string(),
            dim,
            minus: minus.iter().map(|s| s.to_string()).collect(),
            plus: plus.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn vertex(self, id: &str) -> Self {
        self.element(id, 0, &[], &[])
    }

    /// A 1-dimensional element `from → to`.
    pub fn edge(self, id: &str, from: &str, to: &str) -> Self {
        self.element(id, 1, &[from], &[to])
    }

    pub fn build(self) -> Result<Complex, ComplexError> {
        Complex::new(self.records)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::simplex;

    fn delta2() -> Complex {
        simplex(2).unwrap()
    }

    fn set(c: &Complex, names: &[&str]) -> Subset {
        c.subset(names).unwrap()
    }

    #[test]
    fn faces_in_the_triangle() {
        let c = delta2();
        assert_eq!(c.faces(&set(&c, &["012"]), Sign::Minus), set(&c, &["02"]));
        assert_eq!(
            c.faces(&set(&c, &["012"]), Sign::Plus),
            set(&c, &["01", "12"])
        );
        assert_eq!(
            c.faces(&set(&c, &["01", "12"]), Sign::Plus),
            set(&c, &["1", "2"])
        );
        assert!(c.faces(&c.empty_subset(), Sign::Plus).is_empty());
    }

    #[test]
    fn pure_faces_in_the_triangle() {
        let c = delta2();
        let path = set(&c, &["01", "12"]);
        assert_eq!(c.pure_faces(&path, Sign::Minus), set(&c, &["0"]));
        assert_eq!(c.pure_faces(&path, Sign::Plus), set(&c, &["2"]));
        assert_eq!(
            c.pure_faces(&set(&c, &["012"]), Sign::Plus),
            set(&c, &["01", "12"])
        );
        for x in c.ids() {
            assert_eq!(&c.pure_faces(&c.singleton(x), Sign::Minus), c.minus(x));
        }
    }

    #[test]
    fn grading() {
        let c = delta2();
        assert_eq!(c.sub(&c.all(), 1), set(&c, &["01", "02", "12"]));
        assert!(c.sub(&c.empty_subset(), 1).is_empty());
        let one = set(&c, &["0", "01", "1"]);
        assert_eq!(c.skeleton(&one, 1), one);
        assert_eq!(c.skeleton(&c.all(), 0), set(&c, &["0", "1", "2"]));
        assert!(c.below(&c.all(), 0).is_empty());
    }

    #[test]
    fn well_formedness() {
        let c = delta2();
        assert!(c.is_well_formed(&set(&c, &["01", "12"])));
        assert!(!c.is_well_formed(&set(&c, &["01", "02"])));
        assert!(!c.is_well_formed(&set(&c, &["0", "1"])));
        for x in c.ids() {
            assert!(c.is_well_formed(&c.singleton(x)));
        }
    }

    #[test]
    fn perp_and_lt() {
        let c = delta2();
        let id = |n| c.id(n).unwrap();
        assert!(c.perp(&set(&c, &["01"]), &set(&c, &["12"])));
        assert!(!c.perp(&set(&c, &["01"]), &set(&c, &["02"])));
        assert!(c.perp(&set(&c, &["012"]), &c.empty_subset()));
        assert!(c.lt(id("01"), id("12")));
        assert!(!c.lt(id("12"), id("01")));
        for x in c.ids() {
            assert!(!c.lt(x, x));
        }
    }

    #[test]
    fn reversal() {
        let c = delta2();
        let r = c.reverse();
        assert_eq!(r.reverse(), c);
        assert_ne!(r, c);
        assert_eq!(
            r.faces(&set(&r, &["012"]), Sign::Minus),
            set(&r, &["01", "12"])
        );
        let x = c.id("012").unwrap();
        assert_eq!(r.minus(x), c.plus(x));
        assert_eq!(
            r.cofaces(c.id("02").unwrap(), Sign::Plus),
            &set(&c, &["012"])
        );
    }

    #[test]
    fn builder_rejects_bad_references() {
        let err = Complex::builder().vertex("a").edge("e", "a", "b").build();
        assert_eq!(
            err.unwrap_err(),
            ComplexError::UnknownFace {
                element: "e".into(),
                face: "b".into()
            }
        );
        let err = Complex::builder().vertex("a").vertex("a").build();
        assert_eq!(err.unwrap_err(), ComplexError::DuplicateId("a".into()));
    }

    #[test]
    fn ids_follow_dimension_then_name() {
        let c = Complex::builder()
            .edge("e", "b", "a")
            .vertex("b")
            .vertex("a")
            .build()
            .unwrap();
        let names: Vec<&str> = c.ids().map(|x| c.name(x)).collect();
        assert_eq!(names, ["a", "b", "e"]);
    }
}
