use crate::Q;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("generator `{name}` has odd or zero degree {degree}")]
    BadGeneratorDegree { name: String, degree: u32 },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("truncation degree {0} is odd")]
    OddTruncation(u32),
    #[error("relation #{index} is not homogeneous (degrees {first} and {second})")]
    NonHomogeneousRelation { index: usize, first: u32, second: u32 },
    #[error("relation #{index} has degree {degree}, above the admissible bound {bound}")]
    RelationDegreeTooHigh { index: usize, degree: u32, bound: u32 },
    #[error("relation #{0} is a nonzero constant")]
    ConstantRelation(usize),
    #[error("polynomial has {found} variables, ring has {expected}")]
    VariableCount { expected: usize, found: usize },
    #[error("classes belong to different rings")]
    MixedRings,
    #[error("class is not invertible: degree-0 component is zero")]
    NotInvertible,
    #[error("class has nonzero degree-0 component {0}; exponential needs a nilpotent argument")]
    NotNilpotent(Q),
    #[error("top-degree quotient has dimension {0}, expected 1")]
    TopDegreeNotOneDimensional(usize),
    #[error("invalid point class: {0}")]
    BadPointClass(String),
    #[error("total Chern class must have degree-0 component 1, found {0}")]
    NotNormalized(Q),
    #[error("expected a class of degree {expected}: {what}")]
    DegreeMismatch { what: String, expected: u32 },
    #[error("ring map: {0}")]
    BadRingMap(String),
    #[error("overlapping divisor labels: {0:?}")]
    OverlappingLabels(Vec<String>),
    #[error("power sums requested up to {requested}, ring only reaches {max}")]
    PowerSumRange { requested: u32, max: u32 },
    #[error("invalid center `{name}`: {reason}")]
    InvalidCenter { name: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} {value} out of range {range}")]
    OutOfRange { what: &'static str, value: i64, range: &'static str },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}
