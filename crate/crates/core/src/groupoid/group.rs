use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::word::{GroupWord, Ident, Sign};
use crate::error::{Error, Result};

/// A finite group presentation `<generators | relators>`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupPresentation", into = "RawGroupPresentation")]
pub struct GroupPresentation {
    generators: Vec<Ident>,
    relators: Vec<GroupWord>,
}

#[derive(Serialize, Deserialize)]
struct RawGroupPresentation {
    generators: Vec<String>,
    relators: Vec<GroupWord>,
}

impl TryFrom<RawGroupPresentation> for GroupPresentation {
    type Error = Error;

    fn try_from(raw: RawGroupPresentation) -> Result<Self> {
        GroupPresentation::new(raw.generators, raw.relators)
    }
}

impl From<GroupPresentation> for RawGroupPresentation {
    fn from(p: GroupPresentation) -> Self {
        RawGroupPresentation {
            generators: p.generators.iter().map(|g| g.to_string()).collect(),
            relators: p.relators,
        }
    }
}

impl GroupPresentation {
    pub fn new<S: AsRef<str>>(generators: Vec<S>, relators: Vec<GroupWord>) -> Result<Self> {
        let generators: Vec<Ident> = generators.iter().map(|g| Arc::from(g.as_ref())).collect();
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(Error::Duplicate(g.to_string()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| !seen.contains(&l.id)) {
                return Err(Error::Schema {
                    path: format!("relators[{i}]"),
                    detail: format!("unknown generator `{}`", l.id),
                });
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// The free group on the given generators.
    pub fn free<S: AsRef<str>>(generators: Vec<S>) -> Result<Self> {
        GroupPresentation::new(generators, Vec::new())
    }

    pub(crate) fn from_parts_unchecked(generators: Vec<Ident>, relators: Vec<GroupWord>) -> Self {
        GroupPresentation { generators, relators }
    }

    pub fn generators(&self) -> &[Ident] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| &**g == name)
    }

    pub fn is_free(&self) -> bool {
        self.relators.iter().all(|r| r.reduced().is_empty())
    }
}

/// Renders a word with exponent collapsing, e.g. `a^3 b^-1 a`.
pub fn render_word(w: &GroupWord) -> String {
    let letters = w.letters();
    if letters.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        let mut exp: i64 = 0;
        while j < letters.len() && letters[j].id == letters[i].id && letters[j].sign == letters[i].sign {
            exp += letters[j].sign.as_i64();
            j += 1;
        }
        let id = &letters[i].id;
        parts.push(if exp == 1 {
            id.to_string()
        } else {
            format!("{id}^{exp}")
        });
        i = j;
    }
    parts.join(" ")
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators.iter().map(|g| &**g).collect();
        let rels: Vec<String> = self.relators.iter().map(render_word).collect();
        write!(f, "⟨{} | {}⟩", gens.join(", "), rels.join(", "))
    }
}

impl fmt::Debug for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a relator in the compact text form used by fixtures and examples:
/// whitespace-separated tokens `a`, `a^-1`, `a^3`.
pub fn parse_group_word(text: &str) -> Result<GroupWord> {
    let mut out = Vec::new();
    for (column, tok) in text.split_whitespace().enumerate() {
        let (id, exp) = match tok.split_once('^') {
            Some((id, e)) => {
                let exp: i64 = e.parse().map_err(|_| Error::Parse {
                    line: 1,
                    column: column + 1,
                    detail: format!("bad exponent in `{tok}`"),
                })?;
                (id, exp)
            }
            None => (tok, 1),
        };
        let sign = if exp < 0 { Sign::Neg } else { Sign::Pos };
        for _ in 0..exp.unsigned_abs() {
            out.push(super::word::Letter::new(id, sign));
        }
    }
    Ok(GroupWord(out))
}
