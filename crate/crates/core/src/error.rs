use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Position of a parse error, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Position {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },

    #[error("form degree {degree} exceeds the limit {limit}")]
    DegreeOverflow { degree: usize, limit: usize },

    #[error("syntax error at {position}: {message}")]
    Syntax { position: Position, message: String },

    #[error("conjugate variable at {position} in a holomorphic expression")]
    ConjugateInHolomorphic { position: Position },

    #[error("expression is not real-valued: coefficient of {term} violates F̄_μν = F_νμ")]
    NotRealValued { term: String },

    #[error("defining function has a nonzero constant term")]
    ConstantTerm,

    #[error("function does not vanish at the origin")]
    NotInMaximalIdeal,

    #[error("all generators are zero")]
    ZeroIdeal,

    #[error("input is the zero function")]
    ZeroInput,

    #[error("singularity at the origin is not isolated")]
    NonIsolated,

    #[error("support admits no positive weight system")]
    NotQuasihomogeneous,

    #[error("not semiquasihomogeneous: {0}")]
    NotSemiquasihomogeneous(String),

    #[error("hypersurface is not Levi-flat")]
    NotLeviFlat,

    #[error("invalid principal part: {0}")]
    InvalidPrincipalPart(String),

    #[error("total degree {degree} exceeds the cap {cap}")]
    ResourceLimit { degree: u32, cap: u32 },

    #[error("invalid serialized value: {0}")]
    Decode(String),
}

impl Error {
    /// Stable machine-readable category, used by the command-line front end.
    pub fn category(&self) -> &'static str {
        match self {
            Error::VariableMismatch { .. } => "VARIABLE_MISMATCH",
            Error::SingularMatrix => "SINGULAR_MATRIX",
            Error::MatrixShape { .. } => "MATRIX_SHAPE",
            Error::DegreeOverflow { .. } => "DEGREE_OVERFLOW",
            Error::Syntax { .. } => "SYNTAX",
            Error::ConjugateInHolomorphic { .. } => "CONJUGATE_IN_HOLOMORPHIC",
            Error::NotRealValued { .. } => "NOT_REAL_VALUED",
            Error::ConstantTerm => "CONSTANT_TERM",
            Error::NotInMaximalIdeal => "NOT_IN_MAXIMAL_IDEAL",
            Error::ZeroIdeal => "ZERO_IDEAL",
            Error::ZeroInput => "ZERO_INPUT",
            Error::NonIsolated => "NON_ISOLATED",
            Error::NotQuasihomogeneous => "NOT_QUASIHOMOGENEOUS",
            Error::NotSemiquasihomogeneous(_) => "NOT_SEMIQUASIHOMOGENEOUS",
            Error::NotLeviFlat => "NOT_LEVI_FLAT",
            Error::InvalidPrincipalPart(_) => "INVALID_PRINCIPAL_PART",
            Error::ResourceLimit { .. } => "RESOURCE_LIMIT",
            Error::Decode(_) => "DECODE",
        }
    }
}
