use alloc::string::String;
use alloc::vec::Vec;

/// Every failure the toolkit can report. Cap and budget failures are kept
/// distinct so front ends can map them to their own exit status.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    DivisionInexact,
    #[error("resultant of two zero polynomials is undefined")]
    UndefinedResultant,
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("degenerate pencil: P and Q are proportional")]
    DegeneratePencil,
    #[error("(0:0) is not a point of the projective line")]
    InvalidProjectivePoint,
    #[error("input is reducible over the complex numbers")]
    NotIrreducible,
    #[error("algebraic degree cap {cap} exceeded by minimal polynomial(s): {}", min_polys.join("; "))]
    DegreeCapExceeded { cap: usize, min_polys: Vec<String> },
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("center is not an indeterminacy point")]
    NotIndeterminate,
    #[error("P and Q share a common factor: the base locus is a curve")]
    InfiniteBaseLocus,
    #[error("blow-up budget of {budget} exceeded")]
    BlowupBudgetExceeded { budget: usize },
    #[error("geometric degree samples disagree: {0}")]
    InstabilityDetected(String),
    #[error("local multiplicity disagrees between shears")]
    ShearDisagreement,
    #[error("escape witness construction failed")]
    WitnessConstructionFailed,
    #[error("hypothesis not certified: {0}")]
    HypothesisNotCertified(String),
    #[error("no applicable maps in the suite")]
    NoApplicableMaps,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("incompatible variables: {0}")]
    IncompatibleVariables(String),
    #[error("map does not have finite fibres")]
    NotFiniteFibres,
    #[error("component has no dicritical source: {0}")]
    UnmatchedComponent(String),
    #[error("{0}")]
    Internal(String),
}

impl Error {
    /// True for failures caused by configured caps or budgets rather than
    /// bad input or a broken invariant.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::DegreeCapExceeded { .. } | Error::BlowupBudgetExceeded { .. }
        )
    }

    /// Short machine-readable tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionInexact => "division_inexact",
            Error::UndefinedResultant => "undefined_resultant",
            Error::ZeroInput => "zero_input",
            Error::ConstantPolynomial => "constant_polynomial",
            Error::DegeneratePencil => "degenerate_pencil",
            Error::InvalidProjectivePoint => "invalid_projective_point",
            Error::NotIrreducible => "not_irreducible",
            Error::DegreeCapExceeded { .. } => "degree_cap_exceeded",
            Error::InversionOfZero => "inversion_of_zero",
            Error::NotIndeterminate => "not_indeterminate",
            Error::InfiniteBaseLocus => "infinite_base_locus",
            Error::BlowupBudgetExceeded { .. } => "blowup_budget_exceeded",
            Error::InstabilityDetected(_) => "instability_detected",
            Error::ShearDisagreement => "shear_disagreement",
            Error::WitnessConstructionFailed => "witness_construction_failed",
            Error::HypothesisNotCertified(_) => "hypothesis_not_certified",
            Error::NoApplicableMaps => "no_applicable_maps",
            Error::Parse { .. } => "parse",
            Error::IncompatibleVariables(_) => "incompatible_variables",
            Error::NotFiniteFibres => "not_finite_fibres",
            Error::UnmatchedComponent(_) => "unmatched_component",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
