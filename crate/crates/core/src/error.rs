use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a subgroup: subgroup generator {0} is not a member of the group")]
    NotSubgroup(usize),
    #[error("index {index} exceeds the cap of {cap}")]
    IndexTooLarge { index: u128, cap: u128 },
    #[error("action is intransitive")]
    Intransitive,
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("distance {i} exceeds the diameter {diameter}")]
    ExceedsDiameter { i: usize, diameter: usize },
    #[error("not distance-regular: graph is not regular (deg({u}) = {du}, deg({v}) = {dv})")]
    NotRegular { u: usize, v: usize, du: usize, dv: usize },
    #[error("not distance-regular: at u = {u}, v = {v}, i = {i}: {detail}")]
    NotDistanceRegular { u: usize, v: usize, i: usize, detail: String },
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("inconsistent intersection array: {0}")]
    InconsistentArray(String),
    #[error("suborbit is not self-paired")]
    NotSelfPaired,
    #[error("trivial suborbit")]
    TrivialSuborbit,
    #[error("generator {0} is not an automorphism of the graph")]
    NotAutomorphism(usize),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("tuple memory cap of {0} exceeded")]
    TupleCap(usize),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("connection set is not inverse-closed")]
    NotInverseClosed,
    #[error("connection set contains the identity")]
    IdentityInConnectionSet,
    #[error("connection set does not generate the group")]
    DoesNotGenerate,
    #[error("data pack missing: {0}")]
    DataPackMissing(String),
    #[error("checksum mismatch for {file}: manifest {expected}, file {actual}")]
    Checksum { file: String, expected: String, actual: String },
    #[error("invariant mismatch: {0}")]
    InvariantMismatch(String),
    #[error("space too large: {0}")]
    SpaceTooLarge(String),
    #[error("unclassified case: {0}")]
    Unclassified(String),
    #[error("non-integer result: {0}")]
    NonInteger(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("subgroup search failed after {0} attempts")]
    SearchFailed(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
