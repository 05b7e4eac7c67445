//! JSON documents read and written by the command line. Every top-level
//! document carries `"schema_version": 1`.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::{build_space, CellComplex, ModelSpec, SubcomplexSpec};
use crate::error::{Error, Result};
use crate::groupoid::{GroupPresentation, GroupoidPresentation};
use crate::pushout::PushoutInput;

pub const SCHEMA_VERSION: u32 = 1;

/// A versioned top-level document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Document<T> {
    pub fn new(body: T) -> Self {
        Document {
            schema_version: SCHEMA_VERSION,
            body,
        }
    }
}

/// Either an explicit complex or a named model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceSource {
    Complex(Box<CellComplex>),
    Model(ModelSpec),
}

impl SpaceSource {
    pub fn build(&self) -> Result<CellComplex> {
        match self {
            SpaceSource::Complex(complex) => Ok((**complex).clone()),
            SpaceSource::Model(model) => build_space(model),
        }
    }

    pub fn model(&self) -> Option<ModelSpec> {
        match self {
            SpaceSource::Model(model) => Some(*model),
            SpaceSource::Complex(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub presentation: GroupPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidFile {
    pub groupoid: GroupoidPresentation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub space: SpaceSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbpFile {
    pub space: SpaceSource,
    #[serde(rename = "D")]
    pub d: SubcomplexSpec,
    #[serde(rename = "E")]
    pub e: SubcomplexSpec,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcFile {
    pub space: SpaceSource,
    pub arc: SubcomplexSpec,
    /// Points to separate, for the bisection search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

pub type PushoutFile = PushoutInput;

fn classify(e: serde_json::Error, path: &str) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Io => Error::Io {
            path: path.to_string(),
            detail: e.to_string(),
        },
        Category::Syntax | Category::Eof => Error::Parse {
            line: e.line(),
            column: e.column(),
            detail: e.to_string(),
        },
        Category::Data => Error::Schema {
            path: path.to_string(),
            detail: e.to_string(),
        },
    }
}

/// Parses a versioned document, reporting syntax errors by line and column
/// and schema errors by field path.
pub fn parse_document<T: DeserializeOwned>(text: &str) -> Result<T> {
    let mut value: serde_json::Value = serde_json::from_str(text).map_err(|e| classify(e, "$"))?;
    let Some(object) = value.as_object_mut() else {
        return Err(Error::Schema {
            path: "$".into(),
            detail: "expected a JSON object".into(),
        });
    };
    match object.remove("schema_version") {
        Some(v) if v.as_u64() == Some(u64::from(SCHEMA_VERSION)) => {}
        Some(v) => {
            return Err(Error::Schema {
                path: "schema_version".into(),
                detail: format!("unsupported version {v}"),
            })
        }
        None => {
            return Err(Error::Schema {
                path: "schema_version".into(),
                detail: "missing field".into(),
            })
        }
    }
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        classify(e.into_inner(), &path)
    })
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_document(&text)
}

pub fn to_document_string<T: Serialize>(body: &T) -> Result<String> {
    serde_json::to_string_pretty(&Document::new(body)).map_err(|e| Error::Schema {
        path: "$".into(),
        detail: e.to_string(),
    })
}

pub fn store<T: Serialize>(path: &Path, body: &T) -> Result<()> {
    let text = to_document_string(body)?;
    fs::write(path, text + "\n").map_err(|e| Error::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ModelName;
    use crate::groupoid::{Arrow, Letter, ObjectId, Word};

    #[test]
    fn groupoid_round_trip() {
        let g = GroupoidPresentation::new(
            vec![ObjectId::new("p"), ObjectId::new("q")],
            vec![Arrow::new("a", "p", "q"), Arrow::new("b", "q", "q")],
            vec![Word::new(ObjectId::new("q"), vec![Letter::pos("b"), Letter::pos("b")])],
        )
        .unwrap();
        let file = GroupoidFile { groupoid: g };
        let text = to_document_string(&file).unwrap();
        assert_eq!(parse_document::<GroupoidFile>(&text).unwrap(), file);
    }

    #[test]
    fn non_loop_relation_names_its_index() {
        let text = r#"{"schema_version": 1, "groupoid": {
            "objects": ["p", "q"],
            "arrows": [{"id": "a", "src": "p", "tgt": "q"}],
            "relations": [{"start": "p", "letters": []}, {"start": "p", "letters": [["a", 1]]}]}}"#;
        match parse_document::<GroupoidFile>(text) {
            Err(Error::Schema { path, detail }) => {
                assert_eq!(path, "groupoid");
                assert!(detail.contains("relation 1"), "{detail}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_document::<GroupFile>("{\n  \"schema_version\": 1,\n  oops\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn version_is_required() {
        let err = parse_document::<GroupFile>(r#"{"presentation": {"generators": [], "relators": []}}"#).unwrap_err();
        assert!(matches!(err, Error::Schema { ref path, .. } if path == "schema_version"));
    }

    #[test]
    fn space_sources() {
        let text = r#"{"schema_version": 1, "space": {"model": {"name": "cycle", "n": 5}}}"#;
        let f: SpaceFile = parse_document(text).unwrap();
        assert_eq!(f.space.model(), Some(ModelSpec::new(ModelName::Cycle, 5)));
        assert_eq!(f.space.build().unwrap().edges().len(), 5);
        let x = f.space.build().unwrap();
        let back = SpaceFile {
            space: SpaceSource::Complex(Box::new(x)),
        };
        let again: SpaceFile = parse_document(&to_document_string(&back).unwrap()).unwrap();
        assert_eq!(again, back);
    }
}
