use std::fmt;

use serde::{Serialize, Serializer};

use super::letter::{Index, Triple};

/// Element of `Z2 x Z2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z2Pair(pub bool, pub bool);

impl Z2Pair {
    pub const ZERO: Z2Pair = Z2Pair(false, false);

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }
}

impl fmt::Display for Z2Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 as u8, self.1 as u8)
    }
}

/// One generator of the free product of copies of `Z2`: a total map from
/// `{1..bound} \ triple` to `Z2 x Z2`, stored in ascending domain order.
///
/// The all-zero map is an ordinary generator. Only the empty
/// [`FreeProductWord`] is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexLetter {
    triple: Triple,
    bound: Index,
    values: Vec<Z2Pair>,
}

impl IndexLetter {
    /// `values` must list one pair per element of the complement, ascending.
    pub fn new(triple: Triple, bound: Index, values: Vec<Z2Pair>) -> Self {
        assert_eq!(values.len(), complement(triple, bound).count(), "index map must be total");
        IndexLetter { triple, bound, values }
    }

    pub fn triple(&self) -> Triple {
        self.triple
    }

    pub fn bound(&self) -> Index {
        self.bound
    }

    pub fn values(&self) -> &[Z2Pair] {
        &self.values
    }

    pub fn domain(&self) -> impl Iterator<Item = Index> {
        complement(self.triple, self.bound)
    }

    pub fn get(&self, l: Index) -> Option<Z2Pair> {
        self.domain().position(|x| x == l).map(|p| self.values[p])
    }
}

impl fmt::Display for IndexLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() == 1 {
            return self.values[0].fmt(f);
        }
        f.write_str("(")?;
        for (n, v) in self.values.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            v.fmt(f)?;
        }
        f.write_str(")")
    }
}

impl Serialize for IndexLetter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Indices of `1..=bound` outside `triple`, ascending.
pub fn complement(triple: Triple, bound: Index) -> impl Iterator<Item = Index> {
    (1..=bound).filter(move |l| !triple.contains(*l))
}

/// Word in the free product of `Z2`'s. Not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct FreeProductWord {
    letters: Vec<IndexLetter>,
}

impl FreeProductWord {
    pub fn new(letters: Vec<IndexLetter>) -> Self {
        FreeProductWord { letters }
    }

    pub fn letters(&self) -> &[IndexLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<IndexLetter> {
        self.letters
    }
}

impl FromIterator<IndexLetter> for FreeProductWord {
    fn from_iter<I: IntoIterator<Item = IndexLetter>>(iter: I) -> Self {
        FreeProductWord { letters: iter.into_iter().collect() }
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            l.fmt(f)?;
        }
        Ok(())
    }
}
