//! Letters, words and segmented words over the decoration alphabet.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter `a_i` of the ordered decoration alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let digits = s.strip_prefix('a').ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("letter `{s}` must look like a1, a2, ..."),
        })?;
        digits.parse::<u16>().map(Letter).map_err(|_| Error::Parse {
            position: 1,
            message: format!("bad letter index in `{s}`"),
        })
    }
}

/// A nonempty word is the usual case but the type allows the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// The word `a_1 a_2 ... a_n`.
    pub fn standard(n: usize) -> Self {
        Word((1..=n).map(|i| Letter(i as u16)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `a1.a2.a3` (dots separate letters) or the juxtaposed form `a1a2a3`.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        if s.contains('.') {
            return s.split('.').map(Letter::from_str).collect::<Result<Vec<_>>>().map(Word);
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('a').ok_or_else(|| Error::Parse {
                position: s.len() - rest.len(),
                message: "expected letter `a<index>`".into(),
            })?;
            let end = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            out.push(format!("a{}", &body[..end]).parse()?);
            rest = &body[end..];
        }
        Ok(Word(out))
    }
}

/// A segmented word `w_1 | ... | w_s`, the monomial basis of `T(T_{≥1}(A))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegmentedWord(pub Vec<Word>);

impl SegmentedWord {
    pub fn unit() -> Self {
        SegmentedWord(Vec::new())
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        SegmentedWord(v)
    }
}

impl fmt::Display for SegmentedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let parts: Vec<String> = w.0.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join("."))?;
        }
        Ok(())
    }
}

impl FromStr for SegmentedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(SegmentedWord::unit());
        }
        let words = s.split('|').map(Word::from_str).collect::<Result<Vec<_>>>()?;
        if words.iter().any(Word::is_empty) {
            return Err(Error::Parse { position: 0, message: "empty segment".into() });
        }
        Ok(SegmentedWord(words))
    }
}
