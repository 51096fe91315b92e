use crate::monomial::Monomial;

/// Errors shared across the crate.
///
/// Input validation failures are deliberately fine-grained so that callers
/// (the CLI in particular) can distinguish "bad input" from "search gave up".
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable counts differ: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("variable index {index} out of range 1..={num_vars}")]
    VarIndexOutOfRange { index: usize, num_vars: usize },
    #[error("monomial degree exceeds the supported maximum of {max}", max = Monomial::MAX_DEGREE)]
    DegreeOverflow,
    #[error("at most 64 vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("vertex label {label} out of range 1..={max}")]
    VertexOutOfRange { label: usize, max: usize },
    #[error("vertex {0} is not in the complex's vertex set")]
    VertexNotPresent(usize),
    #[error("facet set violates the basis exchange axiom")]
    NotAMatroid,
    #[error("complex is not pure")]
    NotPure,
    #[error("operation requires a loopless complex; loops: {0:?}")]
    LoopsPresent(Vec<usize>),
    #[error("link at loop vertex {0} is the void complex")]
    LinkAtLoop(usize),
    #[error("parallelism is not transitive here; the complex is not a matroid")]
    ParallelNotTransitive,
    #[error("skeleton dimension {k} out of range 0..={max}")]
    SkeletonOutOfRange { k: usize, max: usize },
    #[error("expected {expected} parallel classes, found {found}")]
    ClassCountMismatch { expected: usize, found: usize },
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("partition blocks must be non-empty, disjoint subsets of the ground set")]
    MalformedPartition,
    #[error("block counts incompatible: {0} vs {1}")]
    BlockCountMismatch(usize, usize),
    #[error("glue: second ideal uses the glue variable y_{0}")]
    GlueVariableUsed(usize),
    #[error("glue: compatibility fails at generator {witness}")]
    Incompatible { witness: Monomial },
    #[error("glue: result is not pure")]
    GlueResultNotPure,
    #[error("class ordering infeasible: classes {0:?} support no facet")]
    OrderingInfeasible(Vec<usize>),
    #[error("class ordering infeasible at step {step}: needs {needed} generators, only {available} available")]
    ChoiceInfeasible { step: usize, needed: usize, available: usize },
    #[error("{0} is not a permutation of the class indices")]
    NotAPermutation(String),
    #[error("combination rank {rank} out of range for C({n},{t})")]
    RankOutOfRange { rank: u128, n: usize, t: usize },
    #[error("search space too large to index: C({n},{t}) overflows")]
    SpaceTooLarge { n: usize, t: usize },
    #[error("candidate limit exhausted after {0} candidates")]
    CandidateLimit(u64),
    #[error("target is not a plausible f-vector: {0}")]
    BadTarget(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
