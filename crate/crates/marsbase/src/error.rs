use thiserror::Error;

/// Domain errors raised by the model itself (invariant violations,
/// out-of-range parameters). Configuration and I/O errors live in the
/// CLI layer.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid dimension for `{name}`: {reason}")]
    InvalidDimension { name: String, reason: String },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("unknown structure `{0}` in catalog override")]
    UnknownStructure(String),

    #[error("unknown field `{field}` for structure `{structure}`")]
    UnknownStructureField { structure: String, field: String },

    #[error("duplicate structure name `{0}` in inventory")]
    DuplicateStructure(String),
}

pub type Result<T> = std::result::Result<T, ModelError>;
