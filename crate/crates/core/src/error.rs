use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("inadmissible rank in `{0}`: {1}")]
    InadmissibleRank(String, &'static str),

    #[error("malformed weight `{0}`")]
    MalformedWeight(String),

    #[error("weight `{token}` has {got} entries, expected {expected}")]
    WrongLength {
        token: String,
        expected: usize,
        got: usize,
    },

    #[error("weight `{0}` is not dominant")]
    NotDominant(String),

    #[error("weight `{0}` is not in the root lattice")]
    NotInRootLattice(String),

    #[error("malformed coloring `{0}`")]
    MalformedColoring(String),

    #[error("coloring is empty")]
    EmptyColoring,

    #[error("vertex `{vertex}` out of range for {stype}")]
    VertexOutOfRange { vertex: usize, stype: String },

    #[error("coloring defines an automorphism of order {0}; order must be at least 2")]
    TrivialOrder(usize),

    #[error("malformed sequence `{0}`")]
    MalformedSequence(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("dimension of `{0}` does not fit in 128 bits")]
    DimensionOverflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
