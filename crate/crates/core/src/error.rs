use alloc::string::String;

use thiserror::Error;

/// Failures of the field operations themselves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero raised to negative power {exponent}")]
    ZeroToNegativePower { exponent: i64 },
    #[error("binary operation is missing its second operand")]
    MissingOperand,
}

/// A malformed Gaussian-rational string. `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("Pfaffian needs even dimension, got {dim}")]
    OddPfaffian { dim: usize },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("index {index} outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("shape mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    ShapeMismatch { left_rows: usize, left_cols: usize, right_rows: usize, right_cols: usize },
    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
}

/// Errors raised while evaluating series, polynomials and check sides.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// A structural denominator vanished; the parameter point is degenerate.
    #[error("pole: {0}")]
    Pole(String),
    #[error("series does not terminate")]
    NonTerminating,
    #[error("q-number is undefined at q = 1")]
    QIsOne,
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

impl EvalError {
    /// True when the error means "bad parameter point" rather than a bug, so
    /// the sampler should draw again.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            EvalError::Pole(_)
                | EvalError::Arith(ArithError::DivisionByZero)
                | EvalError::Arith(ArithError::ZeroToNegativePower { .. })
        )
    }
}

pub(crate) fn pole(what: impl Into<String>) -> EvalError {
    EvalError::Pole(what.into())
}
