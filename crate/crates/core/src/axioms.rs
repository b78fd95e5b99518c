//! Axiom checkers returning replayable violation reports.
//!
//! Checkers are total: they run on any structurally valid complex, including
//! ones that fail the pre-parity conditions, so broken data can be diagnosed
//! rather than rejected.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{mu, pi};
use crate::complex::{Complex, Sign};
use crate::subset::{ElementId, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "PRE")]
    Pre,
    #[serde(rename = "AX1")]
    Ax1,
    #[serde(rename = "AX2")]
    Ax2,
    #[serde(rename = "AX3A")]
    Ax3a,
    #[serde(rename = "AX3B")]
    Ax3b,
    R1,
    R2,
    #[serde(rename = "AS")]
    As,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Pre,
        Axiom::Ax1,
        Axiom::Ax2,
        Axiom::Ax3a,
        Axiom::Ax3b,
        Axiom::R1,
        Axiom::R2,
        Axiom::As,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Pre => "PRE",
            Axiom::Ax1 => "AX1",
            Axiom::Ax2 => "AX2",
            Axiom::Ax3a => "AX3A",
            Axiom::Ax3b => "AX3B",
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::As => "AS",
        }
    }

    pub fn check(self, c: &Complex) -> AxiomReport {
        match self {
            Axiom::Pre => check_pre_parity(c),
            Axiom::Ax1 => check_axiom1(c),
            Axiom::Ax2 => check_axiom2(c),
            Axiom::Ax3a => check_axiom3a(c),
            Axiom::Ax3b => check_axiom3b(c),
            Axiom::R1 => check_r1(c),
            Axiom::R2 => check_r2(c),
            Axiom::As => check_as(c),
        }
    }

    /// Parses a comma-separated list such as `pre,1,2,3a,3b,r1,r2,as`.
    pub fn parse_list(s: &str) -> Result<Vec<Axiom>, UnknownAxiom> {
        let mut out: Vec<Axiom> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown axiom `{0}` (expected pre, 1, 2, 3a, 3b, r1, r2 or as)")]
pub struct UnknownAxiom(pub String);

impl FromStr for Axiom {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let key = lower.strip_prefix("ax").unwrap_or(&lower);
        Ok(match key {
            "pre" => Axiom::Pre,
            "1" => Axiom::Ax1,
            "2" => Axiom::Ax2,
            "3a" => Axiom::Ax3a,
            "3b" => Axiom::Ax3b,
            "r1" => Axiom::R1,
            "r2" => Axiom::R2,
            "as" => Axiom::As,
            _ => return Err(UnknownAxiom(s.to_string())),
        })
    }
}

/// Which of `μ(x)`, `π(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    Mu,
    Pi,
}

/// One offending configuration. Elements are named so a report can be
/// replayed against a re-parsed document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `face ∈ x^sign` but `dim x ≠ dim face + 1`.
    FaceDimension {
        element: String,
        sign: Sign,
        face: String,
        element_dim: usize,
        face_dim: usize,
    },
    /// `dim x > 0` and `x^sign = ∅`.
    MissingFaces { element: String, sign: Sign },
    /// `dim x = 0` and `x^sign ≠ ∅`.
    VertexWithFaces {
        element: String,
        sign: Sign,
        faces: Vec<String>,
    },
    /// `x⁻ ∩ x⁺ ≠ ∅`.
    OverlappingFaces {
        element: String,
        common: Vec<String>,
    },
    /// `x⁺⁺ ∪ x⁻⁻ ≠ x⁻⁺ ∪ x⁺⁻`, with both sides evaluated.
    Globularity {
        element: String,
        lhs: Vec<String>,
        rhs: Vec<String>,
    },
    /// Two distinct members of `x^sign` of equal dimension that branch.
    FaceSetBranching {
        element: String,
        sign: Sign,
        first: String,
        second: String,
    },
    /// `x ◁ y ◁ x` with `x ≠ y`.
    Cycle { first: String, second: String },
    /// `earlier ◁ later` with `earlier ∈ z^earlier_in` and `later` on the
    /// opposite side of `z`.
    Crossing {
        earlier: String,
        later: String,
        element: String,
        earlier_in: Sign,
    },
    /// `μ(x)⁻ ∪ π(x)⁺ ≠ μ(x)⁺ ∪ π(x)⁻`, with both sides evaluated.
    R1Mismatch {
        element: String,
        lhs: Vec<String>,
        rhs: Vec<String>,
    },
    /// `μ(x)^mu_sign ∩ π(x)^(opposite) ≠ ∅`.
    R1Overlap {
        element: String,
        mu_sign: Sign,
        common: Vec<String>,
    },
    /// `μ(x)` or `π(x)` contains a branching pair.
    R2NotWellFormed {
        element: String,
        half: Half,
        first: String,
        second: String,
    },
    /// `x ◀ y ◀ x` with `x ≠ y`.
    PrecCycle { first: String, second: String },
}

fn named(c: &Complex, s: &Subset) -> Vec<String> {
    c.names(s)
}

fn branches(c: &Complex, x: ElementId, y: ElementId) -> bool {
    x != y && c.dim(x) == c.dim(y) && (c.dim(x) == 0 || !c.perp(&c.singleton(x), &c.singleton(y)))
}

fn globularity_sides(c: &Complex, x: ElementId) -> (Subset, Subset) {
    let minus = c.minus(x);
    let plus = c.plus(x);
    let lhs = &c.faces(plus, Sign::Plus) | &c.faces(minus, Sign::Minus);
    let rhs = &c.faces(minus, Sign::Plus) | &c.faces(plus, Sign::Minus);
    (lhs, rhs)
}

fn r1_sides(c: &Complex, x: ElementId) -> (Subset, Subset, Subset, Subset) {
    let m = mu(c, x);
    let p = pi(c, x);
    (
        c.faces(&m, Sign::Minus),
        c.faces(&m, Sign::Plus),
        c.faces(&p, Sign::Minus),
        c.faces(&p, Sign::Plus),
    )
}

impl Violation {
    /// Re-evaluates the violated condition against `c`. True when the
    /// witness still describes a genuine violation there.
    pub fn replay(&self, c: &Complex) -> bool {
        self.try_replay(c).unwrap_or(false)
    }

    fn try_replay(&self, c: &Complex) -> Option<bool> {
        let id = |n: &str| c.id(n);
        Some(match self {
            Violation::FaceDimension {
                element,
                sign,
                face,
                ..
            } => {
                let (x, f) = (id(element)?, id(face)?);
                c.face_set(x, *sign).contains(f) && c.dim(x) != c.dim(f) + 1
            }
            Violation::MissingFaces { element, sign } => {
                let x = id(element)?;
                c.dim(x) > 0 && c.face_set(x, *sign).is_empty()
            }
            Violation::VertexWithFaces {
                element,
                sign,
                faces,
            } => {
                let x = id(element)?;
                c.dim(x) == 0 && !faces.is_empty() && named(c, c.face_set(x, *sign)) == *faces
            }
            Violation::OverlappingFaces { element, common } => {
                let x = id(element)?;
                let both = c.minus(x) & c.plus(x);
                !both.is_empty() && named(c, &both) == *common
            }
            Violation::Globularity { element, lhs, rhs } => {
                let (l, r) = globularity_sides(c, id(element)?);
                l != r && named(c, &l) == *lhs && named(c, &r) == *rhs
            }
            Violation::FaceSetBranching {
                element,
                sign,
                first,
                second,
            } => {
                let (x, a, b) = (id(element)?, id(first)?, id(second)?);
                let faces = c.face_set(x, *sign);
                faces.contains(a) && faces.contains(b) && branches(c, a, b)
            }
            Violation::Cycle { first, second } => {
                let (x, y) = (id(first)?, id(second)?);
                x != y && c.triangle_full(x, y) && c.triangle_full(y, x)
            }
            Violation::Crossing {
                earlier,
                later,
                element,
                earlier_in,
            } => {
                let (x, y, z) = (id(earlier)?, id(later)?, id(element)?);
                c.triangle_full(x, y)
                    && c.face_set(z, *earlier_in).contains(x)
                    && c.face_set(z, earlier_in.flip()).contains(y)
            }
            Violation::R1Mismatch { element, lhs, rhs } => {
                let (mm, mp, pm, pp) = r1_sides(c, id(element)?);
                let (l, r) = (&mm | &pp, &mp | &pm);
                l != r && named(c, &l) == *lhs && named(c, &r) == *rhs
            }
            Violation::R1Overlap {
                element,
                mu_sign,
                common,
            } => {
                let (mm, mp, pm, pp) = r1_sides(c, id(element)?);
                let both = match mu_sign {
                    Sign::Minus => &mm & &pp,
                    Sign::Plus => &mp & &pm,
                };
                !both.is_empty() && named(c, &both) == *common
            }
            Violation::R2NotWellFormed {
                element,
                half,
                first,
                second,
            } => {
                let x = id(element)?;
                let s = match half {
                    Half::Mu => mu(c, x),
                    Half::Pi => pi(c, x),
                };
                let (a, b) = (id(first)?, id(second)?);
                s.contains(a) && s.contains(b) && branches(c, a, b)
            }
            Violation::PrecCycle { first, second } => {
                let (x, y) = (id(first)?, id(second)?);
                x != y && c.prec_closure(x, y) && c.prec_closure(y, x)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one checker. Fails exactly when `witnesses` is non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    axiom: Axiom,
    verdict: Verdict,
    witnesses: Vec<Violation>,
}

impl AxiomReport {
    pub fn new(axiom: Axiom, witnesses: Vec<Violation>) -> AxiomReport {
        let verdict = if witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        AxiomReport {
            axiom,
            verdict,
            witnesses,
        }
    }

    pub fn axiom(&self) -> Axiom {
        self.axiom
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn witnesses(&self) -> &[Violation] {
        &self.witnesses
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Pass => write!(f, "{}: pass", self.axiom),
            Verdict::Fail => write!(
                f,
                "{}: fail ({} witness{})",
                self.axiom,
                self.witnesses.len(),
                if self.witnesses.len() == 1 { "" } else { "es" }
            ),
        }
    }
}

const SIGNS: [Sign; 2] = [Sign::Minus, Sign::Plus];

/// The nine pre-parity conditions, reporting the first failure per element.
pub fn check_pre_parity(c: &Complex) -> AxiomReport {
    let mut witnesses = Vec::new();
    for x in c.ids() {
        if let Some(v) = first_pre_violation(c, x) {
            witnesses.push(v);
        }
    }
    AxiomReport::new(Axiom::Pre, witnesses)
}

fn first_pre_violation(c: &Complex, x: ElementId) -> Option<Violation> {
    let element = c.name(x).to_string();
    let d = c.dim(x);
    for sign in SIGNS {
        if let Some(f) = c.face_set(x, sign).iter().find(|&f| d != c.dim(f) + 1) {
            return Some(Violation::FaceDimension {
                element,
                sign,
                face: c.name(f).to_string(),
                element_dim: d,
                face_dim: c.dim(f),
            });
        }
    }
    for sign in SIGNS {
        let faces = c.face_set(x, sign);
        if d > 0 && faces.is_empty() {
            return Some(Violation::MissingFaces { element, sign });
        }
        if d == 0 && !faces.is_empty() {
            return Some(Violation::VertexWithFaces {
                element,
                sign,
                faces: named(c, faces),
            });
        }
    }
    let common = c.minus(x) & c.plus(x);
    if !common.is_empty() {
        return Some(Violation::OverlappingFaces {
            element,
            common: named(c, &common),
        });
    }
    None
}

/// `x⁺⁺ ∪ x⁻⁻ = x⁻⁺ ∪ x⁺⁻` for every `x` of dimension at least 2.
pub fn check_axiom1(c: &Complex) -> AxiomReport {
    let witnesses = c
        .ids()
        .filter(|&x| c.dim(x) >= 2)
        .filter_map(|x| {
            let (lhs, rhs) = globularity_sides(c, x);
            (lhs != rhs).then(|| Violation::Globularity {
                element: c.name(x).to_string(),
                lhs: named(c, &lhs),
                rhs: named(c, &rhs),
            })
        })
        .collect();
    AxiomReport::new(Axiom::Ax1, witnesses)
}

/// `x⁻` and `x⁺` are well-formed.
pub fn check_axiom2(c: &Complex) -> AxiomReport {
    let mut witnesses = Vec::new();
    for x in c.ids() {
        for sign in SIGNS {
            if let Some((a, b)) = c.branching_pair(c.face_set(x, sign)) {
                witnesses.push(Violation::FaceSetBranching {
                    element: c.name(x).to_string(),
                    sign,
                    first: c.name(a).to_string(),
                    second: c.name(b).to_string(),
                });
            }
        }
    }
    AxiomReport::new(Axiom::Ax2, witnesses)
}

/// `◁` is antisymmetric. One witness per unordered pair.
pub fn check_axiom3a(c: &Complex) -> AxiomReport {
    let witnesses = mutual_pairs(c, |x| c.descendants(x))
        .map(|(x, y)| Violation::Cycle {
            first: c.name(x).to_string(),
            second: c.name(y).to_string(),
        })
        .collect();
    AxiomReport::new(Axiom::Ax3a, witnesses)
}

fn mutual_pairs<'a>(
    c: &'a Complex,
    reach: impl Fn(ElementId) -> &'a Subset + Copy + 'a,
) -> impl Iterator<Item = (ElementId, ElementId)> + 'a {
    c.ids().flat_map(move |x| {
        reach(x)
            .iter()
            .filter(move |&y| x < y && reach(y).contains(x))
            .map(move |y| (x, y))
            .collect::<Vec<_>>()
    })
}

/// For `x ◁ y` and any `z`: not `x ∈ z⁺ ∧ y ∈ z⁻`, and not `y ∈ z⁺ ∧ x ∈ z⁻`.
pub fn check_axiom3b(c: &Complex) -> AxiomReport {
    let mut witnesses = Vec::new();
    for z in c.ids() {
        for earlier_in in SIGNS {
            for a in c.face_set(z, earlier_in).iter() {
                for b in c.face_set(z, earlier_in.flip()).iter() {
                    if c.triangle_full(a, b) {
                        witnesses.push(Violation::Crossing {
                            earlier: c.name(a).to_string(),
                            later: c.name(b).to_string(),
                            element: c.name(z).to_string(),
                            earlier_in,
                        });
                    }
                }
            }
        }
    }
    AxiomReport::new(Axiom::Ax3b, witnesses)
}

/// `μ(x)⁻ ∪ π(x)⁺ = μ(x)⁺ ∪ π(x)⁻` with `μ(x)⁻ ∩ π(x)⁺ = μ(x)⁺ ∩ π(x)⁻ = ∅`.
pub fn check_r1(c: &Complex) -> AxiomReport {
    let mut witnesses = Vec::new();
    for x in c.ids() {
        let element = c.name(x).to_string();
        let (mm, mp, pm, pp) = r1_sides(c, x);
        let (lhs, rhs) = (&mm | &pp, &mp | &pm);
        if lhs != rhs {
            witnesses.push(Violation::R1Mismatch {
                element: element.clone(),
                lhs: named(c, &lhs),
                rhs: named(c, &rhs),
            });
        }
        for (mu_sign, common) in [(Sign::Minus, &mm & &pp), (Sign::Plus, &mp & &pm)] {
            if !common.is_empty() {
                witnesses.push(Violation::R1Overlap {
                    element: element.clone(),
                    mu_sign,
                    common: named(c, &common),
                });
            }
        }
    }
    AxiomReport::new(Axiom::R1, witnesses)
}

/// `μ(x)` and `π(x)` are well-formed.
pub fn check_r2(c: &Complex) -> AxiomReport {
    let mut witnesses = Vec::new();
    for x in c.ids() {
        for (half, s) in [(Half::Mu, mu(c, x)), (Half::Pi, pi(c, x))] {
            if let Some((a, b)) = c.branching_pair(&s) {
                witnesses.push(Violation::R2NotWellFormed {
                    element: c.name(x).to_string(),
                    half,
                    first: c.name(a).to_string(),
                    second: c.name(b).to_string(),
                });
            }
        }
    }
    AxiomReport::new(Axiom::R2, witnesses)
}

/// `◀` is antisymmetric. One witness per unordered pair.
pub fn check_as(c: &Complex) -> AxiomReport {
    let witnesses = mutual_pairs(c, |x| c.prec_descendants(x))
        .map(|(x, y)| Violation::PrecCycle {
            first: c.name(x).to_string(),
            second: c.name(y).to_string(),
        })
        .collect();
    AxiomReport::new(Axiom::As, witnesses)
}

/// Runs the selected checkers in the order given.
pub fn check(c: &Complex, axioms: &[Axiom]) -> Vec<AxiomReport> {
    axioms.iter().map(|a| a.check(c)).collect()
}

pub fn check_all(c: &Complex) -> Vec<AxiomReport> {
    check(c, &Axiom::ALL)
}

/// Is `◀` total: every pair comparable one way or the other?
pub fn prec_is_total(c: &Complex) -> bool {
    c.ids().all(|x| {
        c.ids()
            .all(|y| c.prec_closure(x, y) || c.prec_closure(y, x))
    })
}
