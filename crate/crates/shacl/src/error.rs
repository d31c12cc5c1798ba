use thiserror::Error;

/// A problem with a shape definition. Validation skips the offending shape.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape {shape}: unsupported feature {feature}")]
    Unsupported { shape: String, feature: String },
    #[error("shape {shape}: {message}")]
    Malformed { shape: String, message: String },
    #[error("shape {shape}: recursive shape reference")]
    Recursive { shape: String },
}

impl ShapeError {
    pub fn malformed(shape: impl ToString, message: impl Into<String>) -> Self {
        ShapeError::Malformed {
            shape: shape.to_string(),
            message: message.into(),
        }
    }

    pub fn shape(&self) -> &str {
        match self {
            ShapeError::Unsupported { shape, .. }
            | ShapeError::Malformed { shape, .. }
            | ShapeError::Recursive { shape } => shape,
        }
    }
}
