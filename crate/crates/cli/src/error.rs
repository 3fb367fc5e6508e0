//! User-facing failures and their machine-readable codes.

use std::fmt;

use torsionlab_core::kostant::KostantError;
use torsionlab_core::plancherel::PlancherelError;
use torsionlab_core::rootsys::RootSysError;
use torsionlab_core::spectrum::SpectrumError;
use torsionlab_core::torsion::TorsionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ErrorCode {
    Usage,
    BadGroup,
    UnsupportedGroup,
    BadWeight,
    WrongLength,
    NotDominant,
    ThetaInvariantWeight,
    BadSigma,
    DegenerateDensity,
    BadParameter,
    Io,
    Internal,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Usage => "USAGE",
            ErrorCode::BadGroup => "BAD_GROUP",
            ErrorCode::UnsupportedGroup => "UNSUPPORTED_GROUP",
            ErrorCode::BadWeight => "BAD_WEIGHT",
            ErrorCode::WrongLength => "WRONG_LENGTH",
            ErrorCode::NotDominant => "NOT_DOMINANT",
            ErrorCode::ThetaInvariantWeight => "THETA_INVARIANT_WEIGHT",
            ErrorCode::BadSigma => "BAD_SIGMA",
            ErrorCode::DegenerateDensity => "DEGENERATE_DENSITY",
            ErrorCode::BadParameter => "BAD_PARAMETER",
            ErrorCode::Io => "IO",
            ErrorCode::Internal => "INTERNAL",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("{code}: {message}")]
pub struct CliError {
    pub code: ErrorCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<RootSysError> for CliError {
    fn from(e: RootSysError) -> Self {
        let code = match e {
            RootSysError::BadGroup(_) => ErrorCode::UnsupportedGroup,
            RootSysError::NotDominant(_) => ErrorCode::NotDominant,
            RootSysError::WrongLength { .. } => ErrorCode::WrongLength,
            RootSysError::BasisMismatch => ErrorCode::Internal,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<KostantError> for CliError {
    fn from(e: KostantError) -> Self {
        match e {
            KostantError::RootSys(inner) => inner.into(),
            KostantError::ThetaInvariantWeight => CliError::new(ErrorCode::ThetaInvariantWeight, e.to_string()),
            KostantError::NotThetaNormalized => CliError::new(ErrorCode::Internal, e.to_string()),
        }
    }
}

impl From<PlancherelError> for CliError {
    fn from(e: PlancherelError) -> Self {
        match e {
            PlancherelError::RootSys(inner) => inner.into(),
            PlancherelError::Kostant(inner) => inner.into(),
            PlancherelError::DegenerateFactor => CliError::new(ErrorCode::DegenerateDensity, e.to_string()),
            other => CliError::new(ErrorCode::Internal, other.to_string()),
        }
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        match e {
            TorsionError::RootSys(inner) => inner.into(),
            TorsionError::Kostant(inner) => inner.into(),
            TorsionError::Plancherel(inner) => inner.into(),
            other => CliError::new(ErrorCode::Internal, other.to_string()),
        }
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::RootSys(inner) => inner.into(),
            SpectrumError::BadDegree(_) => CliError::new(ErrorCode::BadParameter, e.to_string()),
            SpectrumError::NotThetaNormalized => CliError::new(ErrorCode::ThetaInvariantWeight, e.to_string()),
            other => CliError::new(ErrorCode::Internal, other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(ErrorCode::Io, e.to_string())
    }
}
