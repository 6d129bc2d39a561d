use crate::thin::ConstraintPool;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex index {0} out of range (n = {1})")]
    IndexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not acyclic")]
    NotADag,
    #[error("k = {k} outside [1, {n}]")]
    BadK { k: usize, n: usize },
    #[error("vertex sequence is not a chain of the transitive closure")]
    NotAChain,
    #[error("{1} is not reachable from {0}")]
    NotReachable(usize, usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// The pooled covering constraints admit no point within the budget.
    /// Since every pooled constraint is valid for every feasible solution,
    /// the pool certifies that the promised solution does not exist.
    #[error("no fractional point within budget {budget}: pooled constraints need mass {min_mass}")]
    Infeasible {
        budget: f64,
        min_mass: f64,
        pool: ConstraintPool,
    },
    #[error("constraint pool grew past the iteration cap of {0}")]
    IterationCapExceeded(usize),
    #[error("randomized rounding failed {0} consecutive times")]
    RetryExhausted(u32),
    #[error("instance exceeds oracle budget: {0}")]
    BudgetExceeded(String),
    #[error("rho must be at least 2, got {0}")]
    BadRho(usize),
    #[error("budget s = {s} is below m = {m}")]
    BadBudget { s: usize, m: usize },
    #[error("input promise violated: {0}")]
    PromiseViolated(String),
    #[error("solver output failed verification: {0}")]
    VerificationFailed(String),
    #[error("parameter error: {0}")]
    BadParams(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
