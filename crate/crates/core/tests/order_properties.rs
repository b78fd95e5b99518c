mod common;

use common::{all_subsets, subsets_of, Naive};
use parity_complex::generators::{cube, glob, simplex};
use parity_complex::{Complex, Sign, Subset};
use proptest::prelude::*;

fn corpus() -> Vec<Complex> {
    vec![
        simplex(3).unwrap(),
        cube(2).unwrap(),
        cube(3).unwrap(),
        glob(3).unwrap(),
    ]
}

fn arb_subset(size: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), size)
}

fn subset_from(size: usize, bits: &[bool]) -> Subset {
    let mask = bits
        .iter()
        .enumerate()
        .fold(0u64, |m, (i, &b)| m | (u64::from(b) << i));
    Subset::from_mask(size, mask)
}

/// Keeps each member of `s`, in id order, unless it would break well-formedness.
fn greedy_well_formed(c: &Complex, s: &Subset) -> Subset {
    let mut out = c.empty_subset();
    for x in s.iter() {
        let grown = out.with(x);
        if c.is_well_formed(&grown) {
            out = grown;
        }
    }
    out
}

proptest! {
    #[test]
    fn faces_and_grades_distribute_over_union(
        which in 0usize..4,
        a in arb_subset(27),
        b in arb_subset(27),
    ) {
        let c = &corpus()[which];
        let s = subset_from(c.len(), &a[..c.len()]);
        let t = subset_from(c.len(), &b[..c.len()]);
        let st = &s | &t;
        for sign in [Sign::Minus, Sign::Plus] {
            prop_assert_eq!(c.faces(&st, sign), &c.faces(&s, sign) | &c.faces(&t, sign));
        }
        for n in 0..4 {
            prop_assert_eq!(c.sub(&st, n), &c.sub(&s, n) | &c.sub(&t, n));
        }
    }

    #[test]
    fn well_formed_by_dimension(which in 0usize..4, a in arb_subset(27)) {
        let c = &corpus()[which];
        let s = subset_from(c.len(), &a[..c.len()]);
        let by_dim = (0..4).all(|n| c.is_well_formed(&c.sub(&s, n)));
        prop_assert_eq!(c.is_well_formed(&s), by_dim);
    }

    /// A well-formed set split into disjoint halves gives perpendicular halves.
    #[test]
    fn disjoint_parts_of_well_formed_sets_are_perpendicular(
        which in 0usize..4,
        a in arb_subset(27),
        split in arb_subset(27),
    ) {
        let c = &corpus()[which];
        let s = greedy_well_formed(c, &subset_from(c.len(), &a[..c.len()]));
        prop_assert!(c.is_well_formed(&s));
        let mask = subset_from(c.len(), &split[..c.len()]);
        let t = &s & &mask;
        let z = &s - &mask;
        prop_assert!(c.perp(&t, &z));
    }
}

#[test]
fn triangle_matches_naive_closure() {
    for c in [simplex(3).unwrap(), cube(2).unwrap(), glob(3).unwrap()] {
        let naive = Naive::new(&c).triangle();
        for x in c.ids() {
            for y in c.ids() {
                let pair = (c.name(x).to_string(), c.name(y).to_string());
                assert_eq!(c.triangle_full(x, y), naive.contains(&pair));
            }
        }
    }
}

#[test]
fn triangle_implies_prec() {
    for c in [simplex(3).unwrap(), cube(2).unwrap(), glob(3).unwrap()] {
        for x in c.ids() {
            for y in c.descendants(x).iter() {
                assert!(c.prec_closure(x, y), "{} {}", c.name(x), c.name(y));
            }
        }
    }
}

#[test]
fn triangle_is_antisymmetric_on_generators() {
    for c in corpus() {
        for x in c.ids() {
            for y in c.descendants(x).iter() {
                assert!(x == y || !c.triangle_full(y, x));
            }
        }
    }
}

/// Tight subsets of well-formed sets are segments of them, under either
/// reading of the ordering used between members.
#[test]
fn tight_subsets_of_well_formed_sets_are_segments() {
    for c in [
        simplex(2).unwrap(),
        glob(2).unwrap(),
        cube(2).unwrap(),
        glob(3).unwrap(),
        simplex(3).unwrap(),
    ] {
        let mut checked = 0;
        for s in all_subsets(&c).into_iter().filter(|s| c.is_well_formed(s)) {
            for r in subsets_of(&c, &s) {
                if !c.is_tight(&r) {
                    continue;
                }
                checked += 1;
                assert!(
                    c.is_segment(&r, &s).is_segment,
                    "{} in {}",
                    c.show(&r),
                    c.show(&s)
                );
                assert!(c.is_segment_ambient(&r, &s).is_segment);
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn segment_readings_differ_off_the_generators() {
    // Five edges in a row; T skips b and d.
    let c = Complex::builder()
        .vertex("0")
        .vertex("1")
        .vertex("2")
        .vertex("3")
        .vertex("4")
        .vertex("5")
        .edge("a", "0", "1")
        .edge("b", "1", "2")
        .edge("y", "2", "3")
        .edge("d", "3", "4")
        .edge("c", "4", "5")
        .build()
        .unwrap();
    let t = c.subset(&["a", "y", "c"]).unwrap();
    let r = c.subset(&["a", "c"]).unwrap();
    assert!(c.is_well_formed(&t));
    assert!(c.is_segment(&r, &t).is_segment);
    assert!(!c.is_segment_ambient(&r, &t).is_segment);
    assert!(!c.is_tight(&r));
}

#[test]
fn faces_of_faces_are_tight() {
    for c in [simplex(2).unwrap(), cube(2).unwrap(), glob(2).unwrap()] {
        for x in c.ids() {
            assert!(c.is_tight(c.minus(x)) && c.is_tight(c.plus(x)));
        }
    }
}

#[test]
fn reversed_glob_is_glob_with_signs_swapped() {
    for n in 0..6 {
        let g = glob(n).unwrap();
        let swap = |s: &str| -> String {
            match s.as_bytes()[0] {
                b'-' => format!("+{}", &s[1..]),
                _ => format!("-{}", &s[1..]),
            }
        };
        let mut renamed: Vec<_> = g
            .reverse()
            .records()
            .into_iter()
            .map(|mut r| {
                r.id = swap(&r.id);
                r.minus = r.minus.iter().map(|f| swap(f)).collect();
                r.plus = r.plus.iter().map(|f| swap(f)).collect();
                r
            })
            .collect();
        renamed.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        assert_eq!(Complex::new(renamed).unwrap(), g);
    }
}
