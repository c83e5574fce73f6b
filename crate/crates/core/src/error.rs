use thiserror::Error;

use crate::number::GrossPower;

/// Errors raised by grossnumber arithmetic and by the numeric carriers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrossError {
    #[error("invalid grossdigit {0}: digits must be finite")]
    InvalidDigit(f64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation needs a truncation floor but none is set")]
    MissingTruncationFloor,
    #[error("argument has an infinite part (leading grosspower {0})")]
    InfinitePart(GrossPower),
    #[error("argument has a non-integer infinitesimal grosspower {0}")]
    NonIntegerInfinitesimal(GrossPower),
    #[error("{function} is undefined at finite part {finite_part}")]
    DomainError {
        function: &'static str,
        finite_part: f64,
    },
    #[error("malformed grosspower {0:?}")]
    InvalidPower(String),
    #[error("malformed grossnumber text {0:?}")]
    InvalidText(String),
    #[error("result of {0} is not finite")]
    NonFinite(&'static str),
}
