//! A deliberately naive model of a complex over `BTreeSet<String>`, built
//! only from element records. Used to cross-check the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use parity_complex::{Complex, Subset};

pub type Set = BTreeSet<String>;

pub struct Naive {
    pub dims: BTreeMap<String, usize>,
    pub minus: BTreeMap<String, Set>,
    pub plus: BTreeMap<String, Set>,
}

fn union<'a>(sets: impl IntoIterator<Item = &'a Set>) -> Set {
    sets.into_iter().flatten().cloned().collect()
}

fn diff(a: &Set, b: &Set) -> Set {
    a.difference(b).cloned().collect()
}

fn cup(a: &Set, b: &Set) -> Set {
    a.union(b).cloned().collect()
}

impl Naive {
    pub fn new(c: &Complex) -> Naive {
        let mut n = Naive {
            dims: BTreeMap::new(),
            minus: BTreeMap::new(),
            plus: BTreeMap::new(),
        };
        for r in c.records() {
            n.dims.insert(r.id.clone(), r.dim);
            n.minus.insert(r.id.clone(), r.minus.into_iter().collect());
            n.plus.insert(r.id.clone(), r.plus.into_iter().collect());
        }
        n
    }

    pub fn names(&self) -> Vec<String> {
        self.dims.keys().cloned().collect()
    }

    pub fn faces(&self, s: &Set, plus: bool) -> Set {
        let map = if plus { &self.plus } else { &self.minus };
        union(s.iter().map(|x| &map[x]))
    }

    pub fn sub(&self, s: &Set, n: usize) -> Set {
        s.iter().filter(|x| self.dims[*x] == n).cloned().collect()
    }

    pub fn below(&self, s: &Set, n: usize) -> Set {
        s.iter().filter(|x| self.dims[*x] < n).cloned().collect()
    }

    pub fn is_well_formed(&self, s: &Set) -> bool {
        if s.iter().filter(|x| self.dims[*x] == 0).count() > 1 {
            return false;
        }
        s.iter().all(|x| {
            s.iter().all(|y| {
                x == y
                    || self.dims[x] != self.dims[y]
                    || (self.minus[x].is_disjoint(&self.minus[y])
                        && self.plus[x].is_disjoint(&self.plus[y]))
            })
        })
    }

    pub fn moves(&self, s: &Set, m: &Set, p: &Set) -> bool {
        let (sm, sp) = (self.faces(s, false), self.faces(s, true));
        *m == diff(&cup(p, &sm), &sp) && *p == diff(&cup(m, &sp), &sm)
    }

    pub fn is_cell(&self, m: &Set, p: &Set) -> bool {
        !m.is_empty()
            && !p.is_empty()
            && self.is_well_formed(m)
            && self.is_well_formed(p)
            && self.moves(m, m, p)
            && self.moves(p, m, p)
    }

    pub fn all_subsets(&self) -> Vec<Set> {
        let names = self.names();
        (0u64..(1 << names.len()))
            .map(|mask| {
                names
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, n)| n.clone())
                    .collect()
            })
            .collect()
    }

    /// Every cell, by testing every pair of subsets.
    pub fn cells(&self) -> BTreeSet<(Set, Set)> {
        let subsets = self.all_subsets();
        let mut out = BTreeSet::new();
        for m in &subsets {
            for p in &subsets {
                if self.is_cell(m, p) {
                    out.insert((m.clone(), p.clone()));
                }
            }
        }
        out
    }

    pub fn dim_of(&self, s: &Set) -> usize {
        s.iter().map(|x| self.dims[x]).max().unwrap_or(0)
    }

    pub fn source(&self, (m, p): &(Set, Set), n: usize) -> (Set, Set) {
        let top = self.sub(m, n);
        (cup(&self.below(m, n), &top), cup(&self.below(p, n), &top))
    }

    pub fn target(&self, (m, p): &(Set, Set), n: usize) -> (Set, Set) {
        let top = self.sub(p, n);
        (cup(&self.below(m, n), &top), cup(&self.below(p, n), &top))
    }

    /// The `n`-composite with `a` first, when `tₙ(a) = sₙ(b)`.
    pub fn compose(&self, n: usize, a: &(Set, Set), b: &(Set, Set)) -> Option<(Set, Set)> {
        if self.target(a, n) != self.source(b, n) {
            return None;
        }
        let m = cup(&a.0, &diff(&b.0, &self.sub(&b.0, n)));
        let p = cup(&diff(&a.1, &self.sub(&a.1, n)), &b.1);
        Some((m, p))
    }

    /// `x ◁ y` for all pairs, by Floyd–Warshall over `<`.
    pub fn triangle(&self) -> BTreeSet<(String, String)> {
        let names = self.names();
        let mut rel: BTreeSet<(String, String)> =
            names.iter().map(|x| (x.clone(), x.clone())).collect();
        for x in &names {
            for y in &names {
                if !self.plus[x].is_disjoint(&self.minus[y]) {
                    rel.insert((x.clone(), y.clone()));
                }
            }
        }
        for k in &names {
            for i in &names {
                for j in &names {
                    if rel.contains(&(i.clone(), k.clone()))
                        && rel.contains(&(k.clone(), j.clone()))
                    {
                        rel.insert((i.clone(), j.clone()));
                    }
                }
            }
        }
        rel
    }
}

pub fn to_set(c: &Complex, s: &Subset) -> Set {
    c.names(s).into_iter().collect()
}

pub fn to_subset(c: &Complex, s: &Set) -> Subset {
    let names: Vec<&str> = s.iter().map(String::as_str).collect();
    c.subset(&names).unwrap()
}

/// All subsets of a small complex, as bitsets.
pub fn all_subsets(c: &Complex) -> Vec<Subset> {
    assert!(c.len() < 24);
    (0u64..(1 << c.len()))
        .map(|mask| Subset::from_mask(c.len(), mask))
        .collect()
}

/// All subsets of `s`.
pub fn subsets_of(c: &Complex, s: &Subset) -> Vec<Subset> {
    let members: Vec<_> = s.iter().collect();
    (0u64..(1 << members.len()))
        .map(|mask| {
            Subset::from_ids(
                c.len(),
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x),
            )
        })
        .collect()
}

/// A single-face edit of a document, described for reporting.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub description: String,
    pub records: Vec<parity_complex::ElementRecord>,
}

/// Every single-face mutation of `c`: removing a face, moving a face to the
/// other side, and adding a foreign face (of the right or the wrong
/// dimension) to either side.
pub fn single_face_mutations(c: &Complex) -> Vec<Mutation> {
    let records = c.records();
    let mut out = Vec::new();
    for (i, r) in records.iter().enumerate() {
        for plus in [false, true] {
            let side = |r: &parity_complex::ElementRecord| {
                if plus {
                    r.plus.clone()
                } else {
                    r.minus.clone()
                }
            };
            let label = if plus { "plus" } else { "minus" };
            let set = |rs: &mut Vec<parity_complex::ElementRecord>, v: Vec<String>| {
                if plus {
                    rs[i].plus = v;
                } else {
                    rs[i].minus = v;
                }
            };
            for f in side(r) {
                let mut rs = records.clone();
                set(&mut rs, side(r).into_iter().filter(|g| *g != f).collect());
                out.push(Mutation {
                    description: format!("drop {f} from {}.{label}", r.id),
                    records: rs.clone(),
                });
                if plus {
                    rs[i].minus.push(f.clone());
                } else {
                    rs[i].plus.push(f.clone());
                }
                out.push(Mutation {
                    description: format!("move {f} out of {}.{label}", r.id),
                    records: rs,
                });
            }
            for other in &records {
                if other.id == r.id || side(r).contains(&other.id) {
                    continue;
                }
                if other.dim + 1 == r.dim || other.dim + 2 == r.dim {
                    let mut rs = records.clone();
                    let mut v = side(r);
                    v.push(other.id.clone());
                    set(&mut rs, v);
                    out.push(Mutation {
                        description: format!("add {} to {}.{label}", other.id, r.id),
                        records: rs,
                    });
                }
            }
        }
    }
    out
}
