use thiserror::Error;

/// Errors raised by the groupoid, group, complex and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("word is not composable at letter {index}: {detail}")]
    Composition { index: usize, detail: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate identifier `{0}`")]
    Duplicate(String),

    #[error("object `{object}` is outside the component of `{basepoint}`")]
    Component { object: String, basepoint: String },

    #[error("relation {index} is not a loop: {detail}")]
    RelationShape { index: usize, detail: String },

    #[error("C is not totally disconnected: arrow `{arrow}` goes {src} -> {tgt}")]
    TotalDisconnection { arrow: String, src: String, tgt: String },

    #[error("connectivity violation: {0}")]
    Connectivity(String),

    #[error("basepoint `{0}` is not in J")]
    Basepoint(String),

    #[error("morphism `{name}` is malformed: {detail}")]
    Morphism { name: String, detail: String },

    #[error("subcomplex is not closed: cell `{0}` is missing part of its boundary")]
    Closure(String),

    #[error("subcomplexes are not disjoint: both contain `{0}`")]
    Disjointness(String),

    #[error("point `{0}` lies in the removed set")]
    Membership(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("generation failed after {attempts} attempts: {detail}")]
    GenerationFailure { attempts: usize, detail: String },

    #[error("pipeline stage `{stage}` failed: {detail}")]
    PipelineStage { stage: &'static str, detail: String },

    #[error("schema error at {path}: {detail}")]
    Schema { path: String, detail: String },

    #[error("parse error at line {line}, column {column}: {detail}")]
    Parse { line: usize, column: usize, detail: String },

    #[error("io error on {path}: {detail}")]
    Io { path: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
