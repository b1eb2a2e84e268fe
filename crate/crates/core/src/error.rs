use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("q-binomial [{top} choose {bottom}] is undefined: bottom exceeds top")]
    BinomialDomain { top: usize, bottom: usize },

    #[error("invalid q parameter: {0}")]
    InvalidQ(String),

    #[error("invalid quiver context: {0}")]
    InvalidContext(String),

    #[error("scalars from different fields: Q(zeta_{left}) and Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("basis index {index} out of range for V({vertex},{length})")]
    BasisIndex {
        vertex: i64,
        length: usize,
        index: usize,
    },

    #[error("negative multiplicity {multiplicity} computed for V({vertex},{length})")]
    NegativeMultiplicity {
        vertex: i64,
        length: usize,
        multiplicity: i64,
    },

    #[error("decomposition accounts for dimension {found}, representation has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("representation is not locally nilpotent: a path of length {length} from vertex {vertex} acts nontrivially")]
    NotLocallyNilpotent { vertex: i64, length: usize },

    #[error("closed form produced an invalid summand: {0}")]
    InternalFormula(String),

    #[error("polynomial belongs to {found}, context expects {expected}")]
    RingTagMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial reduction exceeded its step bound of {0}")]
    ReductionDiverged(usize),
}
