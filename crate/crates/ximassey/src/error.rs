use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field value `{0}`")]
    BadFieldValue(String),
    #[error("cannot parse field spec `{0}` (expected Q or F<p>)")]
    BadFieldSpec(String),
    #[error("malformed line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("repeated vertex `{vertex}` inside one simplex (line {line})")]
    RepeatedVertex { line: usize, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown simplex {0:?}")]
    UnknownSimplex(Vec<String>),
    #[error("degree {got} out of range (complex has dimension {dim})")]
    DegreeOutOfRange { got: usize, dim: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("integer cocycle fails the cocycle condition on 2-simplex {simplex:?}")]
    NotACocycle { simplex: Vec<String> },
    #[error("line bundle fails the cocycle condition on 2-simplex {simplex:?}")]
    BadBundle { simplex: Vec<String> },
    #[error("line bundle value on edge {edge:?} is zero")]
    BundleValueZero { edge: Vec<String> },
    #[error("input cochain is not a cocycle (nonzero coboundary on {simplex:?})")]
    InputNotCocycle { simplex: Vec<String> },
    #[error("connected sum: {0}")]
    ConnectedSum(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("{0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
