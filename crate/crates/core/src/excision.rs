//! Excision of extremals: factoring a non-atomic cell as a composite of two
//! smaller cells, and iterating that to a composition tree of atoms.
//!
//! All choices are made by least id, so the tree produced for a given cell
//! is deterministic. Every step is validated: factors must be cells, exactly
//! one composition order must reproduce the input, and the rank chosen in
//! [`ExcisionOptions::measure`] must strictly drop. Any breach is reported as a [`SoundnessAlarm`] rather
//! than returned as a result.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::cells::{atomic_element, compose, mu, pi, Cell, CellError, ComposeError, RankMode};
use crate::complex::Complex;
use crate::subset::{ElementId, Subset};

/// How the standing hypothesis "every `μ(z)` is tight" is discharged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum TightnessMode {
    /// Verify `μ(z)` is tight for every `z` a step touches, and verify the
    /// segment property the step relies on.
    #[default]
    Check,
    /// Skip both checks.
    Assume,
    /// Rely on a certificate computed for this exact complex.
    Certified(TightnessCertificate),
}

/// Evidence that `μ(z)` is tight for every `z` of a particular complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessCertificate {
    fingerprint: u64,
}

fn fingerprint(c: &Complex) -> u64 {
    let mut h = DefaultHasher::new();
    for r in c.records() {
        (r.id, r.dim, r.minus, r.plus).hash(&mut h);
    }
    h.finish()
}

impl TightnessCertificate {
    pub fn compute(c: &Complex) -> Result<TightnessCertificate, ExcisionError> {
        for z in c.ids() {
            ensure_tight(c, z)?;
        }
        Ok(TightnessCertificate {
            fingerprint: fingerprint(c),
        })
    }

    /// Was this certificate computed for `c` (in this orientation)?
    pub fn covers(&self, c: &Complex) -> bool {
        self.fingerprint == fingerprint(c)
    }
}

fn ensure_tight(c: &Complex, z: ElementId) -> Result<(), ExcisionError> {
    match c.tightness_witness(&mu(c, z)) {
        None => Ok(()),
        Some((u, v)) => Err(ExcisionError::NotTight {
            element: c.name(z).to_string(),
            u: c.name(u).to_string(),
            v: c.name(v).to_string(),
        }),
    }
}

/// How the split dimension `m` is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Step1Rule {
    /// Largest `m < n` with `(M_{m+1}, P_{m+1}) ≠ (μ(u)_{m+1}, π(u)_{m+1})`.
    #[default]
    Atomicity,
    /// Largest `m < n` with `M_{m+1} ∩ P_{m+1} ≠ ∅`.
    NonEmptyIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcisionOptions {
    pub tightness: TightnessMode,
    pub step1: Step1Rule,
    /// Rank that must strictly drop at every step. Defaults to
    /// [`RankMode::Union`]: the intersection rank can stay level, e.g. on a
    /// whiskered pair of triangles in the 3-simplex.
    pub measure: RankMode,
}

impl Default for ExcisionOptions {
    fn default() -> Self {
        ExcisionOptions {
            tightness: TightnessMode::default(),
            step1: Step1Rule::default(),
            measure: RankMode::Union,
        }
    }
}

/// Which extremal element was excised.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// A minimal element below the pivot search start; `(N, Q)` is its cell.
    X,
    /// A maximal element above it; `(L, R)` is its cell.
    Y,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::X => "x",
            Case::Y => "y",
        })
    }
}

/// Which of the two constructed pairs turned out to be the earlier factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// `(N, Q)` first, then `(L, R)`.
    NqFirst,
    /// `(L, R)` first, then `(N, Q)`.
    LrFirst,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::NqFirst => "(N,Q) then (L,R)",
            Order::LrFirst => "(L,R) then (N,Q)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Nq,
    Lr,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Factor::Nq => "(N, Q)",
            Factor::Lr => "(L, R)",
        })
    }
}

/// One successful excision: `input = compose(level, early, late)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcisionStep {
    pub level: usize,
    pub case: Case,
    pub pivot: ElementId,
    pub early: Cell,
    pub late: Cell,
    pub order: Order,
}

/// A step produced something inconsistent. Never expected on complexes
/// satisfying the axioms with all `μ(z)` tight.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SoundnessAlarm {
    #[error("no dimension differs from the atom at the top element")]
    NoDefectiveLevel,
    #[error("M and P share no element at dimension {level}")]
    NoCommonElement { level: usize },
    #[error("the top part of the atom is not a segment at dimension {level}")]
    SegmentFailure { level: usize },
    #[error("neither extremal element around `{start}` at dimension {level} is shared by M and P")]
    NoExtremalPivot { level: usize, start: String },
    #[error("{factor} in the {case}-case at dimension {level} is not a cell: {error}")]
    InvalidFactor {
        level: usize,
        case: Case,
        factor: Factor,
        error: CellError,
    },
    #[error("{factor} has dimension {dim}, not above the split level {level}")]
    LowFactor {
        level: usize,
        factor: Factor,
        dim: usize,
    },
    #[error("neither composition order at dimension {level} reproduces the cell")]
    NoOrientation { level: usize },
    #[error("both composition orders at dimension {level} reproduce the cell")]
    AmbiguousOrientation { level: usize },
    #[error("rank does not drop: {input} splits into {early} and {late}")]
    RankNotDecreasing {
        input: usize,
        early: usize,
        late: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExcisionError {
    #[error("μ({element}) is not tight: {u} ◁ {v} with {u}⁻ meeting the pure positive faces")]
    NotTight {
        element: String,
        u: String,
        v: String,
    },
    #[error("tightness certificate was issued for a different complex")]
    CertificateMismatch,
    #[error("soundness alarm: {0}")]
    Alarm(#[from] SoundnessAlarm),
}

/// Tracks which `μ(z)` have been verified within one decomposition.
struct Tightness<'a> {
    mode: &'a TightnessMode,
    verified: Subset,
}

impl<'a> Tightness<'a> {
    fn new(c: &Complex, mode: &'a TightnessMode) -> Result<Self, ExcisionError> {
        if let TightnessMode::Certified(cert) = mode {
            if !cert.covers(c) {
                return Err(ExcisionError::CertificateMismatch);
            }
        }
        Ok(Tightness {
            mode,
            verified: c.empty_subset(),
        })
    }

    fn checking(&self) -> bool {
        matches!(self.mode, TightnessMode::Check)
    }

    fn require(&mut self, c: &Complex, s: &Subset) -> Result<(), ExcisionError> {
        if !self.checking() {
            return Ok(());
        }
        for z in (s - &self.verified).iter() {
            ensure_tight(c, z)?;
            self.verified.insert(z);
        }
        Ok(())
    }
}

/// One excision step, or `None` when `cell` is already an atom.
pub fn excise(
    c: &Complex,
    cell: &Cell,
    opts: &ExcisionOptions,
) -> Result<Option<ExcisionStep>, ExcisionError> {
    let mut tight = Tightness::new(c, &opts.tightness)?;
    excise_with(c, cell, opts, &mut tight)
}

fn excise_with(
    c: &Complex,
    cell: &Cell,
    opts: &ExcisionOptions,
    tight: &mut Tightness<'_>,
) -> Result<Option<ExcisionStep>, ExcisionError> {
    if atomic_element(c, cell).is_some() {
        return Ok(None);
    }
    tight.require(c, &cell.union())?;
    let (m_all, p_all) = (cell.m(), cell.p());
    let n = cell.dim(c);
    let u = c
        .sub(m_all, n)
        .first()
        .expect("a cell has members at its top dimension");
    let (mu_u, pi_u) = (mu(c, u), pi(c, u));
    let level = (0..n)
        .rev()
        .find(|&m| match opts.step1 {
            Step1Rule::Atomicity => {
                c.sub(m_all, m + 1) != c.sub(&mu_u, m + 1)
                    || c.sub(p_all, m + 1) != c.sub(&pi_u, m + 1)
            }
            Step1Rule::NonEmptyIntersection => c.sub(m_all, m + 1).meets(&c.sub(p_all, m + 1)),
        })
        .ok_or(SoundnessAlarm::NoDefectiveLevel)?;
    let m = level;
    let mk = c.sub(m_all, m + 1);
    let shared = &mk & &c.sub(p_all, m + 1);
    let w = shared
        .first()
        .ok_or(SoundnessAlarm::NoCommonElement { level: m + 1 })?;

    if tight.checking() && !c.is_segment(&c.sub(&mu_u, m + 1), &mk).is_segment {
        return Err(SoundnessAlarm::SegmentFailure { level: m + 1 }.into());
    }

    let before_w = {
        let mut s = c.empty_subset();
        for z in mk.iter() {
            if c.triangle(&mk, z, w) {
                s.insert(z);
            }
        }
        s
    };
    let x = (&c.minimal_elements(&mk) & &before_w).first();
    let y = (&c.maximal_elements(&mk) & &c.reachable_within(&mk, w)).first();
    let (case, pivot) = match (x, y) {
        (Some(x), _) if shared.contains(x) => (Case::X, x),
        (_, Some(y)) if shared.contains(y) => (Case::Y, y),
        _ => {
            return Err(SoundnessAlarm::NoExtremalPivot {
                level: m + 1,
                start: c.name(w).to_string(),
            }
            .into())
        }
    };

    let single = c.singleton(pivot);
    let (minus, plus) = (c.minus(pivot), c.plus(pivot));
    let ((n_set, q_set), (l_set, r_set)) = match case {
        Case::X => {
            let n_set = &c.skeleton(m_all, m) | &single;
            let q_set = &(&c.below(p_all, m) | &(&(&c.sub(m_all, m) | plus) - minus)) | &single;
            let l_set = &(&(m_all - &single) | plus) - minus;
            let r_set = p_all - &single;
            ((n_set, q_set), (l_set, r_set))
        }
        Case::Y => {
            let n_set = m_all - &single;
            let q_set = &(&(p_all - &single) | minus) - plus;
            let l_set = &(&c.below(m_all, m) | &(&(&c.sub(p_all, m) | minus) - plus)) | &single;
            let r_set = &c.skeleton(p_all, m) | &single;
            ((n_set, q_set), (l_set, r_set))
        }
    };
    let factor = |factor: Factor, a: Subset, b: Subset| {
        Cell::new(c, a, b).map_err(|error| SoundnessAlarm::InvalidFactor {
            level: m,
            case,
            factor,
            error,
        })
    };
    let nq = factor(Factor::Nq, n_set, q_set)?;
    let lr = factor(Factor::Lr, l_set, r_set)?;
    for (f, cell) in [(Factor::Nq, &nq), (Factor::Lr, &lr)] {
        let dim = cell.dim(c);
        if dim <= m {
            return Err(SoundnessAlarm::LowFactor {
                level: m,
                factor: f,
                dim,
            }
            .into());
        }
    }

    let reproduces = |a: &Cell, b: &Cell| compose(c, m, a, b).is_ok_and(|r| r == *cell);
    let (order, early, late) = match (reproduces(&nq, &lr), reproduces(&lr, &nq)) {
        (true, false) => (Order::NqFirst, nq, lr),
        (false, true) => (Order::LrFirst, lr, nq),
        (false, false) => return Err(SoundnessAlarm::NoOrientation { level: m }.into()),
        (true, true) => return Err(SoundnessAlarm::AmbiguousOrientation { level: m }.into()),
    };

    let rank = cell.rank(opts.measure);
    let (re, rl) = (early.rank(opts.measure), late.rank(opts.measure));
    if re >= rank || rl >= rank {
        return Err(SoundnessAlarm::RankNotDecreasing {
            input: rank,
            early: re,
            late: rl,
        }
        .into());
    }

    Ok(Some(ExcisionStep {
        level: m,
        case,
        pivot,
        early,
        late,
        order,
    }))
}

/// A bracketed expression of a cell as iterated composites of atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CompositionTree {
    /// The atom `⟨x⟩`.
    Leaf(ElementId),
    /// `compose(level, early, late)`.
    Node {
        level: usize,
        early: Box<CompositionTree>,
        late: Box<CompositionTree>,
    },
}

impl CompositionTree {
    pub fn leaves(&self) -> Vec<ElementId> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<ElementId>) {
        match self {
            CompositionTree::Leaf(x) => out.push(*x),
            CompositionTree::Node { early, late, .. } => {
                early.collect_leaves(out);
                late.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            CompositionTree::Leaf(_) => 1,
            CompositionTree::Node { early, late, .. } => early.leaf_count() + late.leaf_count(),
        }
    }

    /// Number of nodes on the longest root-to-leaf path, not counting the leaf.
    pub fn depth(&self) -> usize {
        match self {
            CompositionTree::Leaf(_) => 0,
            CompositionTree::Node { early, late, .. } => 1 + early.depth().max(late.depth()),
        }
    }

    /// Renders as `(leaf x)` or `(m early late)`.
    pub fn display<'a>(&'a self, c: &'a Complex) -> impl fmt::Display + 'a {
        DisplayTree { tree: self, c }
    }

    /// Parses the form produced by [`CompositionTree::display`].
    pub fn parse(c: &Complex, text: &str) -> Result<CompositionTree, TreeParseError> {
        let mut p = TreeParser { text, pos: 0, c };
        let tree = p.tree()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(tree)
    }
}

fn needs_quotes(name: &str) -> bool {
    name.is_empty()
        || name
            .chars()
            .any(|ch| ch.is_whitespace() || matches!(ch, '(' | ')' | '"'))
}

struct DisplayTree<'a> {
    tree: &'a CompositionTree,
    c: &'a Complex,
}

impl fmt::Display for DisplayTree<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            CompositionTree::Leaf(x) => {
                let name = self.c.name(*x);
                if needs_quotes(name) {
                    let quoted = serde_json::to_string(name).map_err(|_| fmt::Error)?;
                    write!(f, "(leaf {quoted})")
                } else {
                    write!(f, "(leaf {name})")
                }
            }
            CompositionTree::Node { level, early, late } => write!(
                f,
                "({level} {} {})",
                early.display(self.c),
                late.display(self.c)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("tree syntax error at byte {offset}: {message}")]
pub struct TreeParseError {
    pub offset: usize,
    pub message: String,
}

struct TreeParser<'a> {
    text: &'a str,
    pos: usize,
    c: &'a Complex,
}

impl TreeParser<'_> {
    fn error(&self, message: impl Into<String>) -> TreeParseError {
        TreeParseError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn expect(&mut self, ch: char) -> Result<(), TreeParseError> {
        self.skip_ws();
        if self.rest().starts_with(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{ch}`")))
        }
    }

    fn atom(&mut self) -> Result<String, TreeParseError> {
        self.skip_ws();
        let text = self.text;
        let rest = &text[self.pos..];
        if rest.starts_with('"') {
            let mut escaped = false;
            for (i, ch) in rest.char_indices().skip(1) {
                match (escaped, ch) {
                    (false, '\\') => escaped = true,
                    (false, '"') => {
                        let s = serde_json::from_str(&rest[..=i])
                            .map_err(|e| self.error(format!("bad quoted name: {e}")))?;
                        self.pos += i + 1;
                        return Ok(s);
                    }
                    _ => escaped = false,
                }
            }
            return Err(self.error("unterminated quoted name"));
        }
        let len = rest
            .find(|ch: char| ch.is_whitespace() || matches!(ch, '(' | ')' | '"'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a name or level"));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn tree(&mut self) -> Result<CompositionTree, TreeParseError> {
        self.expect('(')?;
        let start = self.pos;
        let head = self.atom()?;
        let tree = if head == "leaf" {
            let at = self.pos;
            let name = self.atom()?;
            let x = self.c.id(&name).ok_or_else(|| TreeParseError {
                offset: at,
                message: format!("unknown element `{name}`"),
            })?;
            CompositionTree::Leaf(x)
        } else {
            let level = head.parse().map_err(|_| TreeParseError {
                offset: start,
                message: format!("expected `leaf` or a level, found `{head}`"),
            })?;
            let early = Box::new(self.tree()?);
            let late = Box::new(self.tree()?);
            CompositionTree::Node { level, early, late }
        };
        self.expect(')')?;
        Ok(tree)
    }
}

/// Factors `cell` into atoms by repeated excision.
pub fn decompose(
    c: &Complex,
    cell: &Cell,
    opts: &ExcisionOptions,
) -> Result<CompositionTree, ExcisionError> {
    let mut tight = Tightness::new(c, &opts.tightness)?;
    decompose_with(c, cell, opts, &mut tight)
}

fn decompose_with(
    c: &Complex,
    cell: &Cell,
    opts: &ExcisionOptions,
    tight: &mut Tightness<'_>,
) -> Result<CompositionTree, ExcisionError> {
    match excise_with(c, cell, opts, tight)? {
        None => Ok(CompositionTree::Leaf(
            atomic_element(c, cell).expect("excise returns None only on atoms"),
        )),
        Some(step) => Ok(CompositionTree::Node {
            level: step.level,
            early: Box::new(decompose_with(c, &step.early, opts, tight)?),
            late: Box::new(decompose_with(c, &step.late, opts, tight)?),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvaluateErrorKind {
    #[error("`{0}` is not relevant")]
    Irrelevant(String),
    #[error(transparent)]
    Compose(#[from] ComposeError),
}

/// Evaluation failed at the node reached by `path` from the root
/// (e.g. `root.early.late`).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at {path}: {kind}")]
pub struct EvaluateError {
    pub path: String,
    pub kind: EvaluateErrorKind,
}

/// Recomposes a tree into the cell it denotes.
pub fn evaluate(c: &Complex, tree: &CompositionTree) -> Result<Cell, EvaluateError> {
    evaluate_at(c, tree, "root".to_string())
}

fn evaluate_at(c: &Complex, tree: &CompositionTree, path: String) -> Result<Cell, EvaluateError> {
    match tree {
        CompositionTree::Leaf(x) => crate::cells::atom(c, *x).map_err(|_| EvaluateError {
            path,
            kind: EvaluateErrorKind::Irrelevant(c.name(*x).to_string()),
        }),
        CompositionTree::Node { level, early, late } => {
            let a = evaluate_at(c, early, format!("{path}.early"))?;
            let b = evaluate_at(c, late, format!("{path}.late"))?;
            compose(c, *level, &a, &b).map_err(|e| EvaluateError {
                path,
                kind: e.into(),
            })
        }
    }
}
