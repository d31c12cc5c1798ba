use thiserror::Error;

/// A rejected configuration document.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Malformed(String),
    #[error("unknown config key \"{0}\"")]
    UnknownKey(String),
    #[error("config key {key}: {message}")]
    Invalid { key: String, message: String },
}

/// A failure binding a template.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantiateError {
    #[error("template {template}: missing binding for placeholder {placeholder}")]
    Missing { template: String, placeholder: String },
    #[error("template {template}: placeholder {placeholder} expects a {expected} value, got {got}")]
    WrongKind {
        template: String,
        placeholder: String,
        expected: &'static str,
        got: String,
    },
    #[error("template {template}: unknown placeholder {placeholder}")]
    Unknown { template: String, placeholder: String },
    #[error("template {template}: no variant named {variant}")]
    NoVariant { template: String, variant: String },
    #[error("unknown template {0}")]
    UnknownTemplate(String),
}
