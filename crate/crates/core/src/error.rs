use thiserror::Error;

/// Errors raised by lattice construction and the analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cover relation contains a cycle")]
    CycleInCovers,
    #[error("elements {0} and {1} lack a unique join or meet")]
    NotALattice(usize, usize),
    #[error("poset has no unique bottom or top element")]
    NotBounded,
    #[error("pair ({0}, {1}) is not a cover (implied by other pairs)")]
    RedundantCover(usize, usize),
    #[error("element {0} out of range for size {1}")]
    ElementOutOfRange(usize, usize),
    #[error("element {0} is not irreducible on the required side")]
    NotIrreducible(usize),
    #[error("element {0} has no canonical join representation")]
    NoCanonicalRep(usize),
    #[error("enumeration size {0} exceeds the supported bound {1}")]
    SizeTooLarge(usize, usize),
    #[error("lattice is not semidistributive")]
    NotSemidistributive,
    #[error("operation undefined on the one-element lattice")]
    TrivialLattice,
    #[error("join cover must be nonempty")]
    EmptyCover,
    #[error("cycle has {0} pairs but at least {1} are required")]
    CycleTooShort(usize, usize),
    #[error("[{0}, {1}] is not an interval")]
    NotAnInterval(usize, usize),
    #[error("the relation {0} does not hold for ({1}, {2})")]
    RelationDoesNotHold(&'static str, usize, usize),
    #[error("crown order parameter {0} is below the minimum 3")]
    OrderTooSmall(usize),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
}
