//! Movement: `S` moves `M` to `P` when `M = (P ∪ S⁻) \ S⁺` and
//! `P = (M ∪ S⁺) \ S⁻`.
//!
//! Nothing here relies on the parity axioms. Backward constructions are the
//! forward ones run on [`Complex::reverse`].

use thiserror::Error;

use crate::complex::{Complex, Sign};
use crate::subset::Subset;

/// A verified movement `from —mover→ to`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Movement {
    mover: Subset,
    from: Subset,
    to: Subset,
}

impl Movement {
    pub fn new(c: &Complex, mover: Subset, from: Subset, to: Subset) -> Option<Movement> {
        moves(c, &mover, &from, &to).then_some(Movement { mover, from, to })
    }

    pub fn mover(&self) -> &Subset {
        &self.mover
    }

    pub fn from(&self) -> &Subset {
        &self.from
    }

    pub fn to(&self) -> &Subset {
        &self.to
    }

    pub fn into_parts(self) -> (Subset, Subset, Subset) {
        (self.mover, self.from, self.to)
    }
}

/// Why `advance` found no target.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdvanceError {
    #[error("purely negative faces of the mover are missing from the start: {missing:?}")]
    PureNegativeMissing { missing: Subset },
    #[error("the start meets positive faces of the mover: {common:?}")]
    MeetsPositiveFaces { common: Subset },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UnionError {
    #[error("the first movement does not end where the second starts")]
    MiddleMismatch,
    #[error("negative faces of the first mover meet positive faces of the second: {common:?}")]
    FacesOverlap { common: Subset },
    #[error("the pasted movement failed verification")]
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("T ∪ Z does not move M to P")]
    NotAMovement,
    #[error("purely positive faces of Z are not contained in P: {missing:?}")]
    PurePositiveMissing { missing: Subset },
    #[error("T and Z are not perpendicular")]
    NotPerpendicular,
    #[error("T cannot be advanced from M: {0}")]
    FirstStep(AdvanceError),
    #[error("Z does not move the intermediate state to P")]
    SecondStepUnverified,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdjustError {
    #[error("X is not contained in M")]
    RemovedNotInStart,
    #[error("X meets the purely negative faces of the mover")]
    RemovedMeetsPureNegative,
    #[error("Y meets the positive faces of the mover")]
    AddedMeetsPositive,
    #[error("Y meets the negative faces of the mover")]
    AddedMeetsNegative,
    #[error("the adjusted movement failed verification")]
    Unverified,
}

/// Does `S` move `M` to `P`?
pub fn moves(c: &Complex, s: &Subset, m: &Subset, p: &Subset) -> bool {
    let minus = c.faces(s, Sign::Minus);
    let plus = c.faces(s, Sign::Plus);
    *m == &(p | &minus) - &plus && *p == &(m | &plus) - &minus
}

/// The unique `P` with `M —S→ P`, when one exists: it does exactly when
/// `S^∓ ⊆ M` and `M ∩ S⁺ = ∅`, and then `P = (M ∪ S⁺) \ S⁻`.
pub fn advance(c: &Complex, s: &Subset, m: &Subset) -> Result<Subset, AdvanceError> {
    let minus = c.faces(s, Sign::Minus);
    let plus = c.faces(s, Sign::Plus);
    let pure_minus = &minus - &plus;
    if !pure_minus.is_subset(m) {
        return Err(AdvanceError::PureNegativeMissing {
            missing: &pure_minus - m,
        });
    }
    if m.meets(&plus) {
        return Err(AdvanceError::MeetsPositiveFaces { common: m & &plus });
    }
    Ok(&(m | &plus) - &minus)
}

/// The unique `M` with `M —S→ P`, when one exists (`S^± ⊆ P`, `P ∩ S⁻ = ∅`).
pub fn retreat(c: &Complex, s: &Subset, p: &Subset) -> Result<Subset, AdvanceError> {
    advance(&c.reverse(), s, p)
}

/// Pastes `M —S→ P` and `P —T→ Q` into `M —S∪T→ Q`, provided
/// `S⁻ ∩ T⁺ = ∅`.
pub fn union_movement(
    c: &Complex,
    first: &Movement,
    second: &Movement,
) -> Result<Movement, UnionError> {
    if first.to != second.from {
        return Err(UnionError::MiddleMismatch);
    }
    let common = &c.faces(&first.mover, Sign::Minus) & &c.faces(&second.mover, Sign::Plus);
    if !common.is_empty() {
        return Err(UnionError::FacesOverlap { common });
    }
    Movement::new(
        c,
        &first.mover | &second.mover,
        first.from.clone(),
        second.to.clone(),
    )
    .ok_or(UnionError::Unverified)
}

/// Given `M —T∪Z→ P` with `Z^± ⊆ P` and `T ⊥ Z`, finds `N` with
/// `M —T→ N —Z→ P`. Both halves are verified before returning.
pub fn split_movement(
    c: &Complex,
    t: &Subset,
    z: &Subset,
    m: &Subset,
    p: &Subset,
) -> Result<Subset, SplitError> {
    if !moves(c, &(t | z), m, p) {
        return Err(SplitError::NotAMovement);
    }
    let pure_plus = c.pure_faces(z, Sign::Plus);
    if !pure_plus.is_subset(p) {
        return Err(SplitError::PurePositiveMissing {
            missing: &pure_plus - p,
        });
    }
    if !c.perp(t, z) {
        return Err(SplitError::NotPerpendicular);
    }
    let n = advance(c, t, m).map_err(SplitError::FirstStep)?;
    if !moves(c, z, &n, p) {
        return Err(SplitError::SecondStepUnverified);
    }
    Ok(n)
}

/// Splits `M —T∪Z→ P` with the roles of the two ends exchanged: requires
/// `T^∓ ⊆ M` and finds `N` with `M —T→ N —Z→ P`.
pub fn split_movement_backward(
    c: &Complex,
    t: &Subset,
    z: &Subset,
    m: &Subset,
    p: &Subset,
) -> Result<Subset, SplitError> {
    split_movement(&c.reverse(), z, t, p, m)
}

/// Adds `Y` to and removes `X` from both ends of a movement:
/// `(M ∪ Y) \ X —S→ (P ∪ Y) \ X`.
pub fn adjust_movement(
    c: &Complex,
    movement: &Movement,
    remove: &Subset,
    add: &Subset,
) -> Result<Movement, AdjustError> {
    let s = &movement.mover;
    if !remove.is_subset(&movement.from) {
        return Err(AdjustError::RemovedNotInStart);
    }
    if remove.meets(&c.pure_faces(s, Sign::Minus)) {
        return Err(AdjustError::RemovedMeetsPureNegative);
    }
    if add.meets(&c.faces(s, Sign::Plus)) {
        return Err(AdjustError::AddedMeetsPositive);
    }
    if add.meets(&c.faces(s, Sign::Minus)) {
        return Err(AdjustError::AddedMeetsNegative);
    }
    Movement::new(
        c,
        s.clone(),
        &(&movement.from | add) - remove,
        &(&movement.to | add) - remove,
    )
    .ok_or(AdjustError::Unverified)
}
