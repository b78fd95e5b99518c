mod common;

use std::collections::BTreeSet;

use common::{all_subsets, to_set, Naive};
use parity_complex::cells::{
    atom, attach, co_attach, composable, compose, enumerate_cells, is_atomic, is_receptive, mu, pi,
    Cell, RankMode, DEFAULT_ENUMERATION_LIMIT,
};
use parity_complex::generators::{cube, glob, simplex};
use parity_complex::movement::{advance, moves};
use parity_complex::{Complex, Sign};

fn small() -> Vec<Complex> {
    vec![simplex(2).unwrap(), glob(2).unwrap(), cube(2).unwrap()]
}

fn cells(c: &Complex) -> Vec<Cell> {
    enumerate_cells(c, DEFAULT_ENUMERATION_LIMIT).unwrap()
}

#[test]
fn enumeration_matches_naive_pair_search() {
    for c in small() {
        let naive: BTreeSet<_> = Naive::new(&c).cells();
        let ours: BTreeSet<_> = cells(&c)
            .iter()
            .map(|x| (to_set(&c, x.m()), to_set(&c, x.p())))
            .collect();
        assert_eq!(ours, naive);
    }
}

#[test]
fn enumerated_counts() {
    let counts: Vec<usize> = [simplex(2), glob(2), cube(2), simplex(3), glob(3)]
        .into_iter()
        .map(|c| cells(&c.unwrap()).len())
        .collect();
    assert_eq!(counts, [8, 6, 11, 24, 8]);
}

#[test]
fn sources_and_targets_are_cells_and_agree_below() {
    for c in small() {
        let naive = Naive::new(&c);
        for cell in cells(&c) {
            let pair = (to_set(&c, cell.m()), to_set(&c, cell.p()));
            for n in 0..=cell.dim(&c) {
                let s = cell.source(&c, n).unwrap();
                let t = cell.target(&c, n).unwrap();
                assert_eq!(
                    (to_set(&c, s.m()), to_set(&c, s.p())),
                    naive.source(&pair, n)
                );
                assert_eq!(
                    (to_set(&c, t.m()), to_set(&c, t.p())),
                    naive.target(&pair, n)
                );
                assert_eq!(c.below(s.m(), n), c.below(t.m(), n));
                assert_eq!(c.below(s.p(), n), c.below(t.p(), n));
                if n > 0 {
                    assert_eq!(s.source(&c, n - 1), t.source(&c, n - 1));
                    assert_eq!(s.target(&c, n - 1), t.target(&c, n - 1));
                }
            }
            assert_eq!(cell.source(&c, cell.dim(&c)).as_ref(), Ok(&cell));
        }
    }
}

#[test]
fn enumerated_halves_are_receptive() {
    for c in small()
        .into_iter()
        .chain([simplex(3).unwrap(), glob(3).unwrap()])
    {
        for cell in cells(&c) {
            for half in [cell.m(), cell.p()] {
                assert!(is_receptive(&c, half));
                for k in 0..=cell.dim(&c) {
                    assert!(is_receptive(&c, &c.sub(half, k)));
                }
            }
        }
    }
}

/// `M` receptive and `M —x⁺→ P` give `M —x⁻→ P`; run on the reversed
/// complex for the dual.
fn receptive_moves(c: &Complex) -> usize {
    let mut hits = 0;
    for m in all_subsets(c) {
        if !is_receptive(c, &m) {
            continue;
        }
        for x in c.ids() {
            if let Ok(p) = advance(c, c.plus(x), &m) {
                assert!(moves(c, c.minus(x), &m, &p), "{} {}", c.name(x), c.show(&m));
                hits += 1;
            }
        }
    }
    hits
}

#[test]
fn receptive_sets_move_along_either_face() {
    for c in small().into_iter().chain([glob(3).unwrap()]) {
        assert!(receptive_moves(&c) > 0);
        assert!(receptive_moves(&c.reverse()) > 0);
    }
}

#[test]
fn composites_compose_like_the_naive_model() {
    for c in small() {
        let naive = Naive::new(&c);
        let all = cells(&c);
        let mut composed = 0;
        for a in &all {
            for b in &all {
                let pa = (to_set(&c, a.m()), to_set(&c, a.p()));
                let pb = (to_set(&c, b.m()), to_set(&c, b.p()));
                for n in 0..3 {
                    let expected = naive.compose(n, &pa, &pb);
                    assert_eq!(composable(&c, n, a, b), expected.is_some());
                    let Some(expected) = expected else { continue };
                    let ab = compose(&c, n, a, b).unwrap();
                    assert_eq!((to_set(&c, ab.m()), to_set(&c, ab.p())), expected);
                    assert!(naive.is_cell(&expected.0, &expected.1));
                    composed += 1;
                }
            }
        }
        assert!(composed > all.len());
    }
}

#[test]
fn omega_category_laws() {
    for c in small() {
        let all = cells(&c);
        let comp = |n: usize, a: &Cell, b: &Cell| compose(&c, n, a, b).ok();
        let mut interchanges = 0;
        for a in &all {
            for n in 0..3 {
                let s = a.source(&c, n).unwrap();
                let t = a.target(&c, n).unwrap();
                assert_eq!(comp(n, &s, a).as_ref(), Some(a));
                assert_eq!(comp(n, a, &t).as_ref(), Some(a));
            }
            for b in &all {
                for n in 0..3 {
                    let Some(ab) = comp(n, a, b) else { continue };
                    assert_eq!(ab.source(&c, n), a.source(&c, n));
                    assert_eq!(ab.target(&c, n), b.target(&c, n));
                    for d in &all {
                        if let Some(bd) = comp(n, b, d) {
                            assert_eq!(comp(n, &ab, d), comp(n, a, &bd));
                        }
                    }
                }
            }
        }
        for a in &all {
            for b in &all {
                for n in 0..2 {
                    for m in n + 1..3 {
                        let Some(ab) = comp(m, a, b) else { continue };
                        for x in &all {
                            for y in &all {
                                let Some(xy) = comp(m, x, y) else { continue };
                                let (Some(ax), Some(by)) = (comp(n, a, x), comp(n, b, y)) else {
                                    continue;
                                };
                                let Some(left) = comp(n, &ab, &xy) else {
                                    continue;
                                };
                                assert_eq!(Some(left), comp(m, &ax, &by));
                                interchanges += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(interchanges > 0);
    }
}

#[test]
fn atomic_iff_rank_one() {
    for c in small().into_iter().chain([simplex(3).unwrap()]) {
        for cell in cells(&c) {
            let rank = cell.rank(RankMode::Intersection);
            assert!(rank >= 1);
            assert_eq!(is_atomic(&c, &cell), rank == 1, "{}", cell.display(&c));
            assert!(cell.rank(RankMode::Union) >= cell.union().len());
        }
    }
}

#[test]
fn atoms_satisfy_the_relevance_equations() {
    for c in [simplex(3).unwrap(), cube(3).unwrap(), glob(4).unwrap()] {
        for x in c.ids() {
            let a = atom(&c, x).unwrap();
            let (m, p) = (mu(&c, x), pi(&c, x));
            assert_eq!((a.m(), a.p()), (&m, &p));
            let top = c.dim(x);
            assert_eq!(c.sub(&m, top), c.singleton(x));
            assert_eq!(c.sub(&p, top), c.singleton(x));
            for n in 1..=top {
                let (mn, pn) = (c.sub(&m, n), c.sub(&p, n));
                assert_eq!(c.sub(&m, n - 1), c.pure_faces(&pn, Sign::Minus));
                assert_eq!(c.sub(&p, n - 1), c.pure_faces(&mn, Sign::Plus));
            }
        }
    }
}

#[test]
fn attachments_extend_cells() {
    for c in small() {
        let subsets = all_subsets(&c);
        let mut attached = 0;
        for cell in cells(&c) {
            let n = cell.dim(&c);
            for x in subsets.iter().filter(|x| !x.is_empty()) {
                if let Ok(a) = attach(&c, x, &cell) {
                    assert_eq!(a.extended.target(&c, n).as_ref(), Ok(&cell));
                    assert_eq!(a.extended.source(&c, n).as_ref(), Ok(&a.base));
                    assert_eq!(a.extended.dim(&c), n + 1);
                    attached += 1;
                }
                if let Ok(a) = co_attach(&c, x, &cell) {
                    assert_eq!(a.extended.source(&c, n).as_ref(), Ok(&cell));
                    assert_eq!(a.extended.target(&c, n).as_ref(), Ok(&a.base));
                    attached += 1;
                }
            }
        }
        assert!(attached > 0);
    }
}

#[test]
fn enumerated_cells_have_no_empty_levels() {
    for c in small()
        .into_iter()
        .chain([simplex(3).unwrap(), glob(3).unwrap()])
    {
        for cell in cells(&c) {
            assert!(cell.empty_levels(&c).is_empty(), "{}", cell.display(&c));
        }
    }
}
