use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is empty after cleaning")]
    EmptyGraph,

    #[error("node set is empty")]
    EmptySet,

    #[error("node {node} out of range for graph with {n} nodes")]
    InvalidNode { node: usize, n: usize },

    #[error("size {t} outside [1, {n}]")]
    SizeOutOfRange { t: usize, n: usize },

    #[error("graph is not connected; restrict it to its largest component first")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("enumeration needs {subsets} subsets, budget is {budget}")]
    BudgetExceeded { subsets: u128, budget: u128 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
