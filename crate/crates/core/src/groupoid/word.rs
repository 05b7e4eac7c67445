use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Name of an object (a base point) of a groupoid.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectId(Arc<str>);

impl ObjectId {
    pub fn new(name: impl AsRef<str>) -> Self {
        ObjectId(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ObjectId {
    fn from(s: &str) -> Self {
        ObjectId::new(s)
    }
}

/// Arrow and generator identifiers share one cheap-to-clone string type.
pub type Ident = Arc<str>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn inverse(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// One signed occurrence of an arrow or generator. Serialized as `[id, ±1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(String, i64)", into = "(String, i64)")]
pub struct Letter {
    pub id: Ident,
    pub sign: Sign,
}

impl Letter {
    pub fn new(id: impl AsRef<str>, sign: Sign) -> Self {
        Letter {
            id: Arc::from(id.as_ref()),
            sign,
        }
    }

    pub fn pos(id: impl AsRef<str>) -> Self {
        Letter::new(id, Sign::Pos)
    }

    pub fn neg(id: impl AsRef<str>) -> Self {
        Letter::new(id, Sign::Neg)
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            id: self.id.clone(),
            sign: self.sign.inverse(),
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.id == other.id && self.sign != other.sign
    }
}

impl TryFrom<(String, i64)> for Letter {
    type Error = String;

    fn try_from((id, sign): (String, i64)) -> Result<Self, Self::Error> {
        let sign = Sign::from_i64(sign).ok_or_else(|| format!("sign must be 1 or -1, got {sign}"))?;
        Ok(Letter::new(id, sign))
    }
}

impl From<Letter> for (String, i64) {
    fn from(l: Letter) -> Self {
        (l.id.to_string(), l.sign.as_i64())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.id),
            Sign::Neg => write!(f, "{}^-1", self.id),
        }
    }
}

/// Free reduction of a letter sequence. A single stack pass reaches the
/// unique reduced form.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        if out.last().is_some_and(|top| top.cancels(l)) {
            out.pop();
        } else {
            out.push(l.clone());
        }
    }
    out
}

pub fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(Letter::inverse).collect()
}

/// A word in a groupoid: a start object followed by signed arrows, composed
/// left to right. The empty word is the identity at `start`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub start: ObjectId,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn identity(start: ObjectId) -> Self {
        Word {
            start,
            letters: Vec::new(),
        }
    }

    pub fn new(start: ObjectId, letters: Vec<Letter>) -> Self {
        Word { start, letters }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Free cancellation without any endpoint check. Endpoints of a composable
    /// word are preserved.
    pub fn reduced(&self) -> Word {
        Word {
            start: self.start.clone(),
            letters: free_reduce(&self.letters),
        }
    }

    /// The inverse word. `end` must be this word's end object.
    pub fn inverse(&self, end: ObjectId) -> Word {
        Word {
            start: end,
            letters: invert_letters(&self.letters),
        }
    }

    /// Concatenation; the caller guarantees `self` ends where `other` starts.
    pub fn then(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word {
            start: self.start.clone(),
            letters,
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.start, self.letters)
    }
}

/// A word in a group: signed generator letters, no base point.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn reduced(&self) -> GroupWord {
        GroupWord(free_reduce(&self.0))
    }

    /// Cyclic reduction of a freely reduced word: strip matching inverse
    /// letters from the two ends. Yields a conjugate of the input.
    pub fn cyclically_reduced(&self) -> GroupWord {
        let w = free_reduce(&self.0);
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo].cancels(&w[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        GroupWord(w[lo..hi].to_vec())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(invert_letters(&self.0))
    }

    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        GroupWord(v)
    }

    /// Commutator `a b a^-1 b^-1`, unreduced.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> GroupWord {
        a.then(b).then(&a.inverse()).then(&b.inverse())
    }
}

impl From<Vec<Letter>> for GroupWord {
    fn from(v: Vec<Letter>) -> Self {
        GroupWord(v)
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(spec: &[(&str, i64)]) -> Vec<Letter> {
        spec.iter()
            .map(|&(id, s)| Letter::new(id, Sign::from_i64(s).unwrap()))
            .collect()
    }

    #[test]
    fn stack_reduction_cascades() {
        let word = w(&[("a", 1), ("b", 1), ("c", 1), ("c", -1), ("b", -1), ("d", 1)]);
        assert_eq!(free_reduce(&word), w(&[("a", 1), ("d", 1)]));
    }

    #[test]
    fn cyclic_reduction_strips_conjugation() {
        let word = GroupWord(w(&[("x", 1), ("a", 1), ("b", 1), ("x", -1)]));
        assert_eq!(word.cyclically_reduced(), GroupWord(w(&[("a", 1), ("b", 1)])));
        let single = GroupWord(w(&[("a", 1)]));
        assert_eq!(single.cyclically_reduced(), single);
    }

    #[test]
    fn letter_json_shape() {
        let l = Letter::neg("a");
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"["a",-1]"#);
        assert!(serde_json::from_str::<Letter>(r#"["a",2]"#).is_err());
    }
}
