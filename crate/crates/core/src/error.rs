use thiserror::Error;

/// Errors raised by the engine. Findings from validation are data, not errors;
/// only contract violations end up here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("cyclic identification chain through `{0}`")]
    CyclicIdentification(String),
    #[error("identification {gen} = {word} is not a relator of the presentation")]
    NotARelator { gen: String, word: String },
    #[error("inconsistent manifold: {0}")]
    InconsistentManifold(String),
    #[error("unknown surface label `{0}`")]
    UnknownLabel(String),
    #[error("unknown lattice class `{0}`")]
    UnknownClass(String),
    #[error("disconnected resolution: {components} components but only {double_points} double points")]
    DisconnectedPlan { components: usize, double_points: u32 },
    #[error("resolution mismatch: {0}")]
    ResolutionMismatch(String),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u32, u32),
    #[error("surface `{0}` has nonzero square {1}")]
    NonzeroSquare(String, i64),
    #[error("bad gluing map: {0}")]
    BadGluing(String),
    #[error("fiber sum needs the meridian killed on one side or explicit complements on both")]
    MeridianUnresolved,
    #[error("generator names shared between summands: {0}")]
    NameClash(String),
    #[error("declared lattice fails validation: {0}")]
    DeclaredLatticeInvalid(String),
    #[error("surgery coefficients p and q are both zero")]
    DegenerateSurgery,
    #[error("invalid surgery: {0}")]
    InvalidSurgery(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal sum: {0}")]
    InternalSum(String),
    #[error("coefficient {0} admits no bound from the constraint surfaces")]
    UnboundedDirection(String),
    #[error("e + sigma = {0} is not divisible by 4")]
    ConjugationModulus(i64),
    #[error("class is not an orthogonal square -1 class: {0}")]
    NotExceptional(String),
    #[error("fundamental group not certified trivial: {0}")]
    NotSimplyConnected(String),
    #[error("intersection form is {0}; only odd indefinite forms are typed")]
    UnsupportedForm(String),
    #[error("contradictory hypotheses: {0}")]
    ContradictoryHypotheses(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, used to match expected failures in scripts.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "Parse",
            Error::UndeclaredGenerator(_) => "UndeclaredGenerator",
            Error::DuplicateGenerator(_) => "DuplicateGenerator",
            Error::CyclicIdentification(_) => "CyclicIdentification",
            Error::NotARelator { .. } => "NotARelator",
            Error::InconsistentManifold(_) => "InconsistentManifold",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::UnknownClass(_) => "UnknownClass",
            Error::DisconnectedPlan { .. } => "DisconnectedPlan",
            Error::ResolutionMismatch(_) => "ResolutionMismatch",
            Error::GenusMismatch(..) => "GenusMismatch",
            Error::NonzeroSquare(..) => "NonzeroSquare",
            Error::BadGluing(_) => "BadGluing",
            Error::MeridianUnresolved => "MeridianUnresolved",
            Error::NameClash(_) => "NameClash",
            Error::DeclaredLatticeInvalid(_) => "DeclaredLatticeInvalid",
            Error::DegenerateSurgery => "DegenerateSurgery",
            Error::InvalidSurgery(_) => "InvalidSurgery",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::InternalSum(_) => "InternalSum",
            Error::UnboundedDirection(_) => "UnboundedDirection",
            Error::ConjugationModulus(_) => "ConjugationModulus",
            Error::NotExceptional(_) => "NotExceptional",
            Error::NotSimplyConnected(_) => "NotSimplyConnected",
            Error::UnsupportedForm(_) => "UnsupportedForm",
            Error::ContradictoryHypotheses(_) => "ContradictoryHypotheses",
        }
    }
}
