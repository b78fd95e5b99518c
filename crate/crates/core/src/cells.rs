//! Cells `(M, P)` of the ω-category generated by a complex.
//!
//! Every constructor validates its result, so a [`Cell`] value always
//! satisfies the cell conditions in the complex it was built against.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::complex::{Complex, Sign};
use crate::movement::moves;
use crate::subset::{ElementId, Subset};

/// Which half of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    M,
    P,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::M => "M",
            Side::P => "P",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("{0} is empty")]
    Empty(Side),
    #[error("{0} is not well-formed")]
    NotWellFormed(Side),
    #[error("{0} does not move M to P")]
    NotMoving(Side),
    #[error("M and P are drawn from universes of different sizes")]
    UniverseMismatch,
}

/// A pair of non-empty, well-formed subsets `(M, P)` such that both `M` and
/// `P` move `M` to `P`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    m: Subset,
    p: Subset,
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Cell").field(&self.m).field(&self.p).finish()
    }
}

pub fn validate(c: &Complex, m: &Subset, p: &Subset) -> Result<(), CellError> {
    if m.universe() != c.len() || p.universe() != c.len() {
        return Err(CellError::UniverseMismatch);
    }
    for (side, s) in [(Side::M, m), (Side::P, p)] {
        if s.is_empty() {
            return Err(CellError::Empty(side));
        }
    }
    for (side, s) in [(Side::M, m), (Side::P, p)] {
        if !c.is_well_formed(s) {
            return Err(CellError::NotWellFormed(side));
        }
    }
    for (side, s) in [(Side::M, m), (Side::P, p)] {
        if !moves(c, s, m, p) {
            return Err(CellError::NotMoving(side));
        }
    }
    Ok(())
}

impl Cell {
    pub fn new(c: &Complex, m: Subset, p: Subset) -> Result<Cell, CellError> {
        validate(c, &m, &p)?;
        Ok(Cell { m, p })
    }

    /// Builds a cell from element names.
    pub fn from_names<S: AsRef<str>>(
        c: &Complex,
        m: &[S],
        p: &[S],
    ) -> Result<Cell, CellFromNamesError> {
        let m = c.subset(m)?;
        let p = c.subset(p)?;
        Ok(Cell::new(c, m, p)?)
    }

    pub fn m(&self) -> &Subset {
        &self.m
    }

    pub fn p(&self) -> &Subset {
        &self.p
    }

    pub fn into_parts(self) -> (Subset, Subset) {
        (self.m, self.p)
    }

    /// `(P, M)`: the same cell read in the reversed complex.
    pub fn swapped(&self) -> Cell {
        Cell {
            m: self.p.clone(),
            p: self.m.clone(),
        }
    }

    pub fn union(&self) -> Subset {
        &self.m | &self.p
    }

    /// The dimension `n` of `M ∪ P`; at that dimension `Mₙ = Pₙ`.
    pub fn dim(&self, c: &Complex) -> usize {
        let n = c.dim_of(&self.union()).expect("cells are non-empty");
        debug_assert_eq!(c.sub(&self.m, n), c.sub(&self.p, n));
        n
    }

    /// Dimensions below the top at which `M` or `P` has no members.
    pub fn empty_levels(&self, c: &Complex) -> Vec<(usize, Side)> {
        let n = self.dim(c);
        let mut out = Vec::new();
        for k in 0..n {
            if c.sub(&self.m, k).is_empty() {
                out.push((k, Side::M));
            }
            if c.sub(&self.p, k).is_empty() {
                out.push((k, Side::P));
            }
        }
        out
    }

    /// `sₙ(M, P) = (Mⁿ⁻¹ ∪ Mₙ, Pⁿ⁻¹ ∪ Mₙ)`.
    pub fn source(&self, c: &Complex, n: usize) -> Result<Cell, CellError> {
        let top = c.sub(&self.m, n);
        Cell::new(c, &c.below(&self.m, n) | &top, &c.below(&self.p, n) | &top)
    }

    /// `tₙ(M, P) = (Mⁿ⁻¹ ∪ Pₙ, Pⁿ⁻¹ ∪ Pₙ)`.
    pub fn target(&self, c: &Complex, n: usize) -> Result<Cell, CellError> {
        let top = c.sub(&self.p, n);
        Cell::new(c, &c.below(&self.m, n) | &top, &c.below(&self.p, n) | &top)
    }

    /// `Σₖ |Mₖ ∩ Pₖ|` or `|M ∪ P|`.
    pub fn rank(&self, mode: RankMode) -> usize {
        match mode {
            // Σₖ |Mₖ ∩ Pₖ| = |M ∩ P| since the grades partition the universe.
            RankMode::Intersection => (&self.m & &self.p).len(),
            RankMode::Union => self.union().len(),
        }
    }

    /// Renders as `({m…}, {p…})`.
    pub fn display<'a>(&'a self, c: &'a Complex) -> impl fmt::Display + 'a {
        DisplayCell { cell: self, c }
    }
}

struct DisplayCell<'a> {
    cell: &'a Cell,
    c: &'a Complex,
}

impl fmt::Display for DisplayCell<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.c.show(&self.cell.m),
            self.c.show(&self.cell.p)
        )
    }
}

#[derive(Debug, Error)]
pub enum CellFromNamesError {
    #[error(transparent)]
    Names(#[from] crate::complex::ComplexError),
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RankMode {
    /// `Σₖ |Mₖ ∩ Pₖ|`; equals 1 exactly on atoms.
    #[default]
    Intersection,
    /// `|M ∪ P|`.
    Union,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("cells are not {0}-composable")]
    NotComposable(usize),
    #[error("composite is not a cell: {0}")]
    InvalidComposite(CellError),
    #[error("faces interfere at dimension {level}: {common:?}")]
    Interference { level: usize, common: Subset },
}

/// `tₙ(a) = sₙ(b)`.
pub fn composable(c: &Complex, n: usize, a: &Cell, b: &Cell) -> bool {
    match (a.target(c, n), b.source(c, n)) {
        (Ok(t), Ok(s)) => t == s,
        _ => false,
    }
}

/// The `n`-composite of `a` followed by `b`:
/// `(M ∪ (N \ Nₙ), (P \ Pₙ) ∪ Q)` for `a = (M, P)`, `b = (N, Q)`.
///
/// Also checks that `(Mₖ ∪ Pₖ)⁻ ∩ (Nₖ ∪ Qₖ)⁺ = ∅` for every `k > n`.
pub fn compose(c: &Complex, n: usize, a: &Cell, b: &Cell) -> Result<Cell, ComposeError> {
    if !composable(c, n, a, b) {
        return Err(ComposeError::NotComposable(n));
    }
    let top = a.dim(c).max(b.dim(c));
    for k in n + 1..=top {
        let first = c.sub(&a.union(), k);
        let second = c.sub(&b.union(), k);
        let common = &c.faces(&first, Sign::Minus) & &c.faces(&second, Sign::Plus);
        if !common.is_empty() {
            return Err(ComposeError::Interference { level: k, common });
        }
    }
    let m = &a.m | &(&b.m - &c.sub(&b.m, n));
    let p = &(&a.p - &c.sub(&a.p, n)) | &b.p;
    Cell::new(c, m, p).map_err(ComposeError::InvalidComposite)
}

/// Receptivity: for every `x`,
/// - if `x⁻⁺ ∩ x⁺⁺ ⊆ S` and `S ∩ x⁻⁻ = ∅` then `S ∩ x⁺⁻ = ∅`, and
/// - if `x⁺⁻ ∩ x⁻⁻ ⊆ S` and `S ∩ x⁺⁺ = ∅` then `S ∩ x⁻⁺ = ∅`.
pub fn is_receptive(c: &Complex, s: &Subset) -> bool {
    receptivity_failure(c, s).is_none()
}

/// An element at which one of the receptivity clauses fails.
pub fn receptivity_failure(c: &Complex, s: &Subset) -> Option<ElementId> {
    c.ids().find(|&x| {
        let minus = c.minus(x);
        let plus = c.plus(x);
        let mm = c.faces(minus, Sign::Minus);
        let mp = c.faces(minus, Sign::Plus);
        let pm = c.faces(plus, Sign::Minus);
        let pp = c.faces(plus, Sign::Plus);
        let first = (&mp & &pp).is_subset(s) && s.is_disjoint(&mm) && s.meets(&pm);
        let second = (&pm & &mm).is_subset(s) && s.is_disjoint(&pp) && s.meets(&mp);
        first || second
    })
}

/// `μ(x)` for `Sign::Minus`, `π(x)` for `Sign::Plus`: start from `{x}` and
/// repeatedly take purely negative (resp. positive) faces down to dimension 0.
fn pure_descent(c: &Complex, x: ElementId, sign: Sign) -> Subset {
    let mut level = c.singleton(x);
    let mut out = level.clone();
    for _ in 0..c.dim(x) {
        level = c.pure_faces(&level, sign);
        out.union_with(&level);
    }
    out
}

pub fn mu(c: &Complex, x: ElementId) -> Subset {
    pure_descent(c, x, Sign::Minus)
}

pub fn pi(c: &Complex, x: ElementId) -> Subset {
    pure_descent(c, x, Sign::Plus)
}

/// `⟨x⟩ = (μ(x), π(x))`, when that pair is a cell.
pub fn atom(c: &Complex, x: ElementId) -> Result<Cell, CellError> {
    Cell::new(c, mu(c, x), pi(c, x))
}

pub fn is_relevant(c: &Complex, x: ElementId) -> bool {
    atom(c, x).is_ok()
}

/// The element `x` with `cell = ⟨x⟩`, if the cell is atomic.
pub fn atomic_element(c: &Complex, cell: &Cell) -> Option<ElementId> {
    let n = cell.dim(c);
    let top = c.sub(cell.m(), n);
    if top.len() != 1 {
        return None;
    }
    let x = top.first()?;
    (mu(c, x) == cell.m && pi(c, x) == cell.p).then_some(x)
}

pub fn is_atomic(c: &Complex, cell: &Cell) -> bool {
    atomic_element(c, cell).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AttachError {
    #[error("X is empty")]
    EmptyAttachment,
    #[error("X contains an element outside dimension {0}")]
    WrongDimension(usize),
    #[error("X is not well-formed")]
    NotWellFormed,
    #[error("purely positive faces of X are not in the top of M: {missing:?}")]
    NotAbutting { missing: Subset },
    #[error("negative faces of X meet the top of M: {common:?}")]
    SourceOverlap { common: Subset },
    #[error("constructed pair is not a cell: {0}")]
    Invalid(CellError),
}

/// The two cells produced by gluing `X` onto the top of an `n`-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    /// `(Mⁿ⁻¹ ∪ Y, Pⁿ⁻¹ ∪ Y)` with `Y = (Mₙ ∪ X⁻) \ X⁺`.
    pub base: Cell,
    /// `(Mⁿ⁻¹ ∪ Y ∪ X, P ∪ X)`, an `(n+1)`-cell with target `(M, P)`.
    pub extended: Cell,
}

/// Attaches a well-formed `X ⊆ C_{n+1}` with `X^± ⊆ Mₙ` to the `n`-cell
/// `cell`, so that `cell` becomes the `n`-target of the extended cell.
pub fn attach(c: &Complex, x: &Subset, cell: &Cell) -> Result<Attachment, AttachError> {
    if x.is_empty() {
        return Err(AttachError::EmptyAttachment);
    }
    let n = cell.dim(c);
    if x.iter().any(|e| c.dim(e) != n + 1) {
        return Err(AttachError::WrongDimension(n + 1));
    }
    if !c.is_well_formed(x) {
        return Err(AttachError::NotWellFormed);
    }
    let m_top = c.sub(&cell.m, n);
    let pure_plus = c.pure_faces(x, Sign::Plus);
    if !pure_plus.is_subset(&m_top) {
        return Err(AttachError::NotAbutting {
            missing: &pure_plus - &m_top,
        });
    }
    let x_minus = c.faces(x, Sign::Minus);
    let x_plus = c.faces(x, Sign::Plus);
    let common = &x_minus & &m_top;
    if !common.is_empty() {
        return Err(AttachError::SourceOverlap { common });
    }
    let y = &(&m_top | &x_minus) - &x_plus;
    let m_low = c.below(&cell.m, n);
    let p_low = c.below(&cell.p, n);
    let base = Cell::new(c, &m_low | &y, &p_low | &y).map_err(AttachError::Invalid)?;
    let extended = Cell::new(c, &(&m_low | &y) | x, &cell.p | x).map_err(AttachError::Invalid)?;
    Ok(Attachment { base, extended })
}

/// The mirror image of [`attach`]: `X` is glued so that `cell` becomes the
/// `n`-source of the extended cell. Requires `X^∓ ⊆ Pₙ`.
pub fn co_attach(c: &Complex, x: &Subset, cell: &Cell) -> Result<Attachment, AttachError> {
    let a = attach(&c.reverse(), x, &cell.swapped())?;
    Ok(Attachment {
        base: a.base.swapped(),
        extended: a.extended.swapped(),
    })
}

pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("complex has {size} elements; enumeration is limited to {limit}")]
    UniverseTooLarge { size: usize, limit: usize },
}

/// Every cell of the complex, by exhaustive search over subsets.
///
/// Candidate halves are the non-empty well-formed subsets. For a given `M`,
/// the condition `M —M→ P` forces `P = (M ∪ M⁺) \ M⁻`, so each `M` is paired
/// with that single candidate and the pair is then validated in full.
/// Results are sorted.
pub fn enumerate_cells(c: &Complex, limit: usize) -> Result<Vec<Cell>, EnumerationError> {
    let size = c.len();
    if size > limit || size >= 64 {
        return Err(EnumerationError::UniverseTooLarge { size, limit });
    }
    let well_formed: Vec<Subset> = (1u64..(1u64 << size))
        .map(|mask| Subset::from_mask(size, mask))
        .filter(|s| c.is_well_formed(s))
        .collect();
    let index: HashMap<&Subset, usize> = well_formed
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut cells = Vec::new();
    for m in &well_formed {
        let forced = &(m | &c.faces(m, Sign::Plus)) - &c.faces(m, Sign::Minus);
        if let Some(&j) = index.get(&forced) {
            if let Ok(cell) = Cell::new(c, m.clone(), well_formed[j].clone()) {
                cells.push(cell);
            }
        }
    }
    cells.sort();
    Ok(cells)
}
