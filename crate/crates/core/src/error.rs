use thiserror::Error;

/// Errors raised by table construction, the algebraic constructions and the
/// cost-guarded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a table must have at least one element")]
    EmptyTable,
    #[error("order {order} needs {expected} entries, found {found}")]
    Shape {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("operands have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("{operation} is limited to order {limit}, got order {order}")]
    CostGuard {
        operation: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("{construction}: input fails {property}{}", fmt_witness(.witness))]
    Precondition {
        construction: &'static str,
        property: &'static str,
        witness: Option<Vec<usize>>,
    },
    #[error("unknown identity name {0:?}")]
    UnknownIdentity(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("invalid group spec {0:?}")]
    InvalidGroupSpec(String),
    #[error("parastrophe index must be in 1..=5, got {0}")]
    ParastropheIndex(usize),
    #[error("translatable sequence must be a permutation of 0..{order} with 1 <= k < {order}")]
    InvalidTranslatable { order: usize },
}

fn fmt_witness(witness: &Option<Vec<usize>>) -> String {
    match witness {
        Some(w) => {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!(" at witness ({})", parts.join(", "))
        }
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn precondition(
        construction: &'static str,
        property: &'static str,
        witness: Option<Vec<usize>>,
    ) -> Self {
        Error::Precondition {
            construction,
            property,
            witness,
        }
    }

    pub(crate) fn guard(operation: &'static str, order: usize, limit: usize) -> Result<(), Self> {
        if order > limit {
            Err(Error::CostGuard {
                operation,
                order,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
