use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point not in carrier: `{0}`")]
    PointNotInCarrier(String),

    #[error("carrier mismatch: {left} points vs {right} points")]
    CarrierMismatch { left: usize, right: usize },

    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),

    #[error("carrier too large: {0} points (limit {limit})", limit = crate::pointset::MAX_POINTS)]
    CarrierTooLarge(usize),

    #[error("set {0} contains points outside the carrier")]
    StrayPoints(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("map is not total: {0}")]
    NonTotalMap(String),

    #[error("invalid B-order: {0}")]
    InvalidOrder(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("invalid d-frame: {0}")]
    InvalidDFrame(String),

    #[error("B-set is not inhabited (join of its values is {0})")]
    NotInhabited(crate::bval::BVal),

    #[error("invalid B-filter: {0}")]
    InvalidFilter(String),

    #[error("bound exceeded: {what} is {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
}

pub type Result<T> = std::result::Result<T, Error>;
