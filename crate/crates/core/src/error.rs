use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; the dense engine supports at most 64")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: malformed header: {0}")]
    Graph6Header(String),
    #[error("graph6: truncated payload, expected {expected} bytes but found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6: {0} vertices exceeds the 64-vertex limit")]
    Graph6TooLarge(usize),
    #[error("graph6: byte {0:#04x} is outside the printable range 63..=126")]
    Graph6InvalidByte(u8),
    #[error("graph6: {0} bytes of trailing data")]
    Graph6Trailing(usize),
    #[error("graph6: non-zero padding bits")]
    Graph6Padding,
    #[error("enumeration supports 1 <= n <= 8, got {0}")]
    EnumerationRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colour index {colour} out of range for {r} colours")]
    ColourOutOfRange { colour: usize, r: u8 },
    #[error("unsupported number of colours {0}")]
    UnsupportedColours(usize),
    #[error("colouring has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("malformed header: {0}")]
    Header(String),
    #[error("invalid entry {0:?}")]
    BadToken(String),
    #[error("expected {expected} pair colours but found {found}")]
    MissingEntries { expected: usize, found: usize },
    #[error("dimension mismatch: {extra} entries beyond the {expected} pairs of K_N")]
    DimensionMismatch { expected: usize, extra: usize },
    #[error("vertex {vertex} out of range for K_{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the engine supports 2 or 3 colours, got {0}")]
    UnsupportedColours(u8),
    #[error("host order must be at least 1")]
    EmptyHost,
}

/// Interval bounds attached to an oracle failure; `None` means unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straddle {
    pub key: String,
    pub lo: usize,
    pub hi: Option<usize>,
    pub threshold: u64,
}

impl std::fmt::Display for Straddle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "{} in [{}, {}] straddles {}", self.key, self.lo, hi, self.threshold),
            None => write!(f, "{} in [{}, inf) straddles {}", self.key, self.lo, self.threshold),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle insufficient: {0}")]
    Insufficient(Straddle),
    #[error("oracle ledger line {line}: {reason}")]
    Ledger { line: usize, reason: String },
    #[error("oracle ledger i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("f is not non-decreasing: f({n_prev}) = {f_prev} > f({n}) = {f}")]
    NonMonotone { n_prev: usize, f_prev: u64, n: usize, f: u64 },
    #[error("f({n}) is undefined")]
    MissingValue { n: usize },
    #[error("f({n}) = {f} lies outside [n, R(K_n)]")]
    OutOfRange { n: usize, f: u64 },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LowerBoundError {
    #[error("chi(H) must be at least 2, got {0}")]
    ChromaticTooSmall(usize),
    #[error("the H-witness must be a 2-colouring, got {0} colours")]
    WitnessColours(u8),
    #[error("H is not connected")]
    Disconnected,
    #[error("H is not a subgraph of G")]
    NotSubgraph,
    #[error("the witness for H contains a monochromatic copy of H")]
    BadWitness,
    #[error("blocked colouring would need {0} vertices")]
    TooLarge(usize),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
