use thiserror::Error;

/// Which of two polynomial inputs an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Input {
    F,
    G,
}

impl std::fmt::Display for Input {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Input::F => f.write_str("f"),
            Input::G => f.write_str("g"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("degree {found} not allowed: {reason}")]
    Degree { found: usize, reason: &'static str },
    #[error("polynomial is not squarefree (discriminant 0)")]
    NotSquarefree,
    #[error("constant coefficient is zero")]
    ZeroConstantTerm,
    #[error("ramified or non-squarefree reduction mod {0}")]
    BadReduction(u64),
    #[error("no primitive cube root in characteristic 3")]
    NoCubeRoot,
    #[error("irreducibility evidence for {input} does not validate: {reason}")]
    Evidence { input: Input, reason: String },
    #[error("inconsistent filtration data: {0}")]
    InconsistentFiltration(String),
    #[error("inconsistent ramification data: {0}")]
    InconsistentRamification(String),
    #[error("duplicate prime {0} in level data")]
    DuplicatePrime(u64),
    #[error("level datum at q = {0} equals the residue characteristic")]
    LevelAtP(u64),
    #[error("decomposition impossible: {0}")]
    DecompositionImpossible(String),
    #[error("invalid inertia profile: {0}")]
    InvalidProfile(String),
    #[error("character of conductor {conductor} is not defined at {ell}")]
    CharacterUndefined { conductor: u64, ell: u64 },
    #[error("nebentype conductor {conductor} does not divide the level {level}")]
    ConductorMismatch { conductor: u64, level: String },
    #[error("not in A6: cycle type {0:?} is an odd permutation")]
    NotInA6(Vec<u32>),
    #[error("invalid cycle type {0:?}")]
    InvalidCycleType(Vec<u32>),
    #[error("use order-3 rule: class {0} has order divisible by 3")]
    UseOrder3Rule(String),
    #[error("residue degree {residue_degree} inconsistent with element order {order}")]
    ResidueDegree { residue_degree: u32, order: u32 },
    #[error("determinant is not 1")]
    DeterminantNotOne,
    #[error("inconsistent case data: {0}")]
    InconsistentCase(String),
    #[error("no Frobenius polynomial supplied for ell = {0}")]
    MissingEll(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for parse/schema problems, 3 for
    /// mathematically inconsistent input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Schema(_) => 2,
            _ => 3,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
