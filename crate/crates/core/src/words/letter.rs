use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strand / point index, 1-based.
pub type Index = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Common behaviour of word letters.
pub trait Letter: Clone + Eq + Ord + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync {
    /// Name of the word kind this letter builds, used in error messages.
    const KIND: &'static str;

    fn inverse(&self) -> Self;

    /// Largest index the letter mentions.
    fn max_index(&self) -> Index;
}

/// Pure braid generator `b_ij^±1`, always with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    i: Index,
    j: Index,
    sign: Sign,
}

impl BraidLetter {
    pub fn new(i: Index, j: Index, sign: Sign) -> Result<Self> {
        if i == 0 {
            return Err(Error::IndexOutOfRange { pos: 0, index: 0, bound: j });
        }
        if i >= j {
            return Err(Error::Unordered { pos: 0 });
        }
        Ok(BraidLetter { i, j, sign })
    }

    pub fn positive(i: Index, j: Index) -> Result<Self> {
        Self::new(i, j, Sign::Plus)
    }

    pub fn i(&self) -> Index {
        self.i
    }

    pub fn j(&self) -> Index {
        self.j
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn pair(&self) -> (Index, Index) {
        (self.i, self.j)
    }

    /// Number of strands of `{i, j}` lying in `set`.
    pub fn overlap(&self, set: &Triple) -> usize {
        set.contains(self.i) as usize + set.contains(self.j) as usize
    }
}

impl Letter for BraidLetter {
    const KIND: &'static str = "braid";

    fn inverse(&self) -> Self {
        BraidLetter { sign: self.sign.flip(), ..*self }
    }

    fn max_index(&self) -> Index {
        self.j
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b[{},{}]", self.i, self.j)?;
        if self.sign == Sign::Minus {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// The involution `a_{ijk}`, identified by its unordered triple.
///
/// Stored sorted, so equality is set equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([Index; 3]);

impl Triple {
    pub fn new(a: Index, b: Index, c: Index) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidTriple(vec![a as usize, b as usize, c as usize]));
        }
        if a == b || b == c || a == c {
            return Err(Error::RepeatedIndex { pos: 0 });
        }
        let mut t = [a, b, c];
        t.sort_unstable();
        Ok(Triple(t))
    }

    /// Panics on repeated or zero indices; for internal use on indices known to be distinct.
    pub(crate) fn of(a: Index, b: Index, c: Index) -> Self {
        Self::new(a, b, c).expect("distinct nonzero indices")
    }

    pub fn indices(&self) -> [Index; 3] {
        self.0
    }

    pub fn contains(&self, x: Index) -> bool {
        self.0.contains(&x)
    }

    pub fn intersection_len(&self, other: &Triple) -> usize {
        self.0.iter().filter(|x| other.contains(**x)).count()
    }
}

impl Letter for Triple {
    const KIND: &'static str = "gn3";

    fn inverse(&self) -> Self {
        *self
    }

    fn max_index(&self) -> Index {
        self.0[2]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// `σ_ij^±1`. The pair is ordered: `σ_ij ≠ σ_ji`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaLetter {
    i: Index,
    j: Index,
    sign: Sign,
}

impl SigmaLetter {
    pub fn new(i: Index, j: Index, sign: Sign) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::IndexOutOfRange { pos: 0, index: 0, bound: i.max(j) });
        }
        if i == j {
            return Err(Error::RepeatedIndex { pos: 0 });
        }
        Ok(SigmaLetter { i, j, sign })
    }

    pub(crate) fn of(i: Index, j: Index, sign: Sign) -> Self {
        Self::new(i, j, sign).expect("distinct nonzero indices")
    }

    pub fn i(&self) -> Index {
        self.i
    }

    pub fn j(&self) -> Index {
        self.j
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn pair(&self) -> (Index, Index) {
        (self.i, self.j)
    }

    pub fn overlap(&self, set: &Triple) -> usize {
        set.contains(self.i) as usize + set.contains(self.j) as usize
    }
}

impl Letter for SigmaLetter {
    const KIND: &'static str = "sigma";

    fn inverse(&self) -> Self {
        SigmaLetter { sign: self.sign.flip(), ..*self }
    }

    fn max_index(&self) -> Index {
        self.i.max(self.j)
    }
}

impl fmt::Display for SigmaLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.i, self.j)?;
        if self.sign == Sign::Minus {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// Letter of a word in the extended group: an involution or a signed `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TildeLetter {
    A(Triple),
    Sigma(SigmaLetter),
}

impl TildeLetter {
    pub fn as_triple(&self) -> Option<Triple> {
        match self {
            TildeLetter::A(t) => Some(*t),
            TildeLetter::Sigma(_) => None,
        }
    }

    pub fn as_sigma(&self) -> Option<SigmaLetter> {
        match self {
            TildeLetter::A(_) => None,
            TildeLetter::Sigma(s) => Some(*s),
        }
    }
}

impl From<Triple> for TildeLetter {
    fn from(t: Triple) -> Self {
        TildeLetter::A(t)
    }
}

impl From<SigmaLetter> for TildeLetter {
    fn from(s: SigmaLetter) -> Self {
        TildeLetter::Sigma(s)
    }
}

impl Letter for TildeLetter {
    const KIND: &'static str = "tilde";

    fn inverse(&self) -> Self {
        match self {
            TildeLetter::A(t) => TildeLetter::A(*t),
            TildeLetter::Sigma(s) => TildeLetter::Sigma(s.inverse()),
        }
    }

    fn max_index(&self) -> Index {
        match self {
            TildeLetter::A(t) => t.max_index(),
            TildeLetter::Sigma(s) => s.max_index(),
        }
    }
}

impl fmt::Display for TildeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TildeLetter::A(t) => t.fmt(f),
            TildeLetter::Sigma(s) => s.fmt(f),
        }
    }
}
