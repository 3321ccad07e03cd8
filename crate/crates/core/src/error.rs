use crate::tree::Label;

/// Everything that can go wrong when building trees, composing them or
/// manipulating series.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    Empty,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
    #[error("label 0 is not allowed, labels start at 1")]
    ZeroLabel,
    #[error("duplicate label {0}")]
    DuplicateLabel(Label),
    #[error("labels must be exactly 1..={n}, but {missing} is missing")]
    LabelGap { n: usize, missing: Label },
    #[error("parent map has {0} roots, expected exactly one")]
    RootCount(usize),
    #[error("parent map contains a cycle through {0}")]
    Cycle(Label),
    #[error("unknown label {0}")]
    UnknownLabel(Label),
    #[error("label subset is empty")]
    EmptySubset,
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("tree is not labelled by 1..n")]
    NotStandard,
    #[error("position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("arity must be at least {min}, got {arity}")]
    ArityTooSmall { arity: usize, min: usize },
    #[error("graft map is not total: incoming vertex {0} has no image")]
    GraftMapNotTotal(Label),
    #[error("graft map is defined on {0}, which is not an incoming vertex")]
    GraftMapForeign(Label),
    #[error("graft map sends {child} to {value}, outside 1..={m}")]
    GraftValueOutOfRange { child: Label, value: Label, m: usize },
    #[error("root label {s} outside 1..={m}")]
    InvalidRootLabel { s: Label, m: usize },
    #[error("({a}, {b}, {c}) is not a decomposition witness of this tree")]
    InvalidWitness { a: Label, b: Label, c: Label },
    #[error("series composition needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("compositional inverse needs linear coefficient 1")]
    NonUnitLinearTerm,
}

pub type Result<T> = core::result::Result<T, Error>;
