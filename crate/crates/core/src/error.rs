use thiserror::Error;

/// Errors produced while building or manipulating finite locales.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a frame needs at least one element")]
    Empty,

    #[error("order table has {rows} rows but {names} element names")]
    DimensionMismatch { rows: usize, names: usize },

    #[error("{what} has {size} elements, above the supported maximum of {max}")]
    TooLarge {
        what: &'static str,
        size: usize,
        max: usize,
    },

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("elements {a} and {b} have no {missing}")]
    NotALattice {
        a: usize,
        b: usize,
        missing: &'static str,
    },

    #[error("distributivity fails for ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },

    #[error("covering pairs contain a cycle through element {0}")]
    CycleInCovers(usize),

    #[error("covering pair ({0}, {1}) refers to a missing element")]
    CoverOutOfRange(usize, usize),

    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("sublocales live over different frames")]
    MixedFrames,

    #[error("the first sublocale is not contained in the second")]
    NotASublocaleOf,

    #[error("sublocale is not closed")]
    NotClosed,

    #[error("sublocale is not contained in its reference sublocale")]
    NotContained,

    #[error("sublocale is not dense")]
    NotDense,

    #[error("element set is not a sublocale: {0}")]
    NotASublocale(String),

    #[error("map is not a frame homomorphism: {0}")]
    NotAFrameHom(String),

    #[error("open-set family is not a topology: {0}")]
    NotATopology(String),

    #[error("space is not T0: points {0} and {1} have the same neighbourhoods")]
    NotT0(usize, usize),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
