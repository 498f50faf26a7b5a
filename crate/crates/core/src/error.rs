use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("unsupported header byte {byte:#04x} at offset {offset} (only the short form n <= 62 is accepted)")]
    Header { offset: usize, byte: u8 },
    #[error("truncated bit field: expected {expected} bytes after the header, found {found} (offset {offset})")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    Padding { offset: usize },
    #[error("graph has {0} vertices; graph6 short form supports at most 62")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph on {0} vertices exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("enumeration on {n} vertices exceeds the guard of {guard}; pass an explicit override")]
    EnumerationGuard { n: usize, guard: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letters must be distinct, got {0} twice")]
    SameLetter(usize),
    #[error("letter {0} does not occur in the word")]
    MissingLetter(usize),
    #[error("alphabet of the word is not {{0..{n}}}: {detail}")]
    AlphabetMismatch { n: usize, detail: String },
    #[error("cannot parse word: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("({0}, {1}) is not an edge of the base graph")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is oriented twice")]
    Duplicate(usize, usize),
    #[error("edge {{{0}, {1}}} has no direction")]
    Unoriented(usize, usize),
    #[error("orientation bitstring has {found} bits, graph has {expected} edges")]
    BitLength { expected: usize, found: usize },
    #[error("invalid character {0:?} in orientation bitstring")]
    BitChar(char),
    #[error("orientation contains a directed cycle")]
    Cyclic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("graph is not split")]
    NotSplit,
    #[error("vertex {0} is not in the independent set")]
    NotIndependent(usize),
    #[error("the clique is not transitively oriented")]
    CliqueNotTransitive,
    #[error("vertex {0} has an INVALID type")]
    InvalidType(usize),
    #[error("vertex {0} is of type C; only type A or B vertices can be toggled")]
    NotAOrB(usize),
    #[error("orientation is not semi-transitive")]
    NotSemiTransitive,
    #[error("orientation does not belong to the partition's host graph")]
    HostMismatch,
    #[error("independent vertex {vertex} has degree {degree}, above the allowed {max}")]
    DegreeTooHigh { vertex: usize, degree: usize, max: usize },
    #[error("clique has size {0}, expected 4")]
    CliqueSize(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("unknown family tag {0:?}")]
    UnknownTag(String),
}
