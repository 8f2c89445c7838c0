use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("pullback undefined: chart lies in pole locus")]
    PoleLocus,
    #[error("variable {0} is not assigned")]
    UnassignedVariable(String),
    #[error("variable {var} is outside the universe {universe}")]
    UniverseMismatch { var: String, universe: String },

    #[error("invalid Cartan type {0}")]
    InvalidCartanType(String),
    #[error("weight {0} is not in the W-orbit of a fundamental weight")]
    NotInFundamentalOrbit(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("zero torus coordinate")]
    ZeroCoordinate,
    #[error("matrix does not have determinant 1 (det = {0})")]
    DeterminantNotOne(String),
    #[error("not Gauss-decomposable: leading principal minor {0} vanishes")]
    NotGaussDecomposable(usize),
    #[error("twist undefined: matrix is outside the big cell")]
    TwistUndefined,
    #[error("matrix is not upper unitriangular")]
    NotUnipotent,

    #[error("move {kind} is not applicable at position {position}")]
    InapplicableMove { position: usize, kind: String },
    #[error("words have different Weyl group products")]
    DifferentProducts,
    #[error("reduced-word search exceeded the budget of {0} words")]
    SearchBudgetExceeded(usize),
    #[error("connecting the words needs an unsupported braid move of order {0}")]
    UnsupportedMove(u32),
    #[error("transition undefined on this locus")]
    DegenerateTransition,

    #[error("not a function on G/U-: not invariant under right multiplication by y_{0}(s)")]
    NotInvariant(usize),
    #[error("general inversion not implemented for n = {0}")]
    InversionNotImplemented(usize),
    #[error("inverse undefined at this point")]
    InverseUndefined,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
