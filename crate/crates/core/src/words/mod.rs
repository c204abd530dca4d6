//! Letters and words for pure braids, `G_n^3`, the extended group with
//! `σ` letters, and the free products the invariants live in.

mod free_product;
mod letter;
mod parse;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use free_product::{complement, FreeProductWord, IndexLetter, Z2Pair};
pub use letter::{BraidLetter, Index, Letter, SigmaLetter, Sign, TildeLetter, Triple};
pub use parse::{tokenize, ParseLetter, RawLetter};

/// A finite word over letters of type `L`, with indices in `1..=bound`.
///
/// The empty word is the identity. No reduction is ever applied implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<L> {
    bound: Index,
    letters: Vec<L>,
}

pub type BraidWord = Word<BraidLetter>;
pub type Gn3Word = Word<Triple>;
pub type TildeWord = Word<TildeLetter>;

impl<L: Letter> Word<L> {
    pub fn new(bound: Index, letters: Vec<L>) -> Result<Self> {
        if let Some((pos, l)) = letters.iter().enumerate().find(|(_, l)| l.max_index() > bound) {
            return Err(Error::IndexOutOfRange { pos, index: l.max_index() as usize, bound });
        }
        Ok(Word { bound, letters })
    }

    pub fn empty(bound: Index) -> Self {
        Word { bound, letters: Vec::new() }
    }

    /// Caller guarantees every letter fits in `bound`.
    pub(crate) fn from_parts(bound: Index, letters: Vec<L>) -> Self {
        debug_assert!(letters.iter().all(|l| l.max_index() <= bound));
        Word { bound, letters }
    }

    pub fn bound(&self) -> Index {
        self.bound
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<L> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word { bound: self.bound, letters: self.letters.iter().rev().map(L::inverse).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch { left: self.bound, right: other.bound });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { bound: self.bound, letters })
    }

    /// Same letters over a larger (or equal) index bound.
    pub fn widen(&self, bound: Index) -> Result<Self> {
        Word::new(bound, self.letters.clone())
    }
}

impl<L: ParseLetter> Word<L> {
    pub fn parse(text: &str, bound: Index) -> Result<Self> {
        let letters = tokenize(text)?
            .iter()
            .map(|raw| L::from_raw(raw, bound))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { bound, letters })
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            l.fmt(f)?;
        }
        Ok(())
    }
}

impl<L: fmt::Display> Serialize for Word<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl BraidWord {
    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
        x.inverse().concat(&y.inverse())?.concat(x)?.concat(y)
    }

    pub fn generator(n: Index, i: Index, j: Index) -> Result<BraidWord> {
        Word::new(n, vec![BraidLetter::positive(i, j)?])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordKind {
    Braid,
    Gn3,
    Tilde,
}

impl WordKind {
    pub fn name(self) -> &'static str {
        match self {
            WordKind::Braid => "braid",
            WordKind::Gn3 => "gn3",
            WordKind::Tilde => "tilde",
        }
    }
}

/// A word of runtime-selected kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AnyWord {
    Braid(BraidWord),
    Gn3(Gn3Word),
    Tilde(TildeWord),
}

impl AnyWord {
    pub fn kind(&self) -> WordKind {
        match self {
            AnyWord::Braid(_) => WordKind::Braid,
            AnyWord::Gn3(_) => WordKind::Gn3,
            AnyWord::Tilde(_) => WordKind::Tilde,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyWord::Braid(w) => w.len(),
            AnyWord::Gn3(w) => w.len(),
            AnyWord::Tilde(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn inverse(&self) -> AnyWord {
        match self {
            AnyWord::Braid(w) => AnyWord::Braid(w.inverse()),
            AnyWord::Gn3(w) => AnyWord::Gn3(w.inverse()),
            AnyWord::Tilde(w) => AnyWord::Tilde(w.inverse()),
        }
    }

    pub fn concat(&self, other: &AnyWord) -> Result<AnyWord> {
        match (self, other) {
            (AnyWord::Braid(a), AnyWord::Braid(b)) => a.concat(b).map(AnyWord::Braid),
            (AnyWord::Gn3(a), AnyWord::Gn3(b)) => a.concat(b).map(AnyWord::Gn3),
            (AnyWord::Tilde(a), AnyWord::Tilde(b)) => a.concat(b).map(AnyWord::Tilde),
            (a, b) => Err(Error::KindMismatch { left: a.kind().name(), right: b.kind().name() }),
        }
    }
}

impl fmt::Display for AnyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyWord::Braid(w) => w.fmt(f),
            AnyWord::Gn3(w) => w.fmt(f),
            AnyWord::Tilde(w) => w.fmt(f),
        }
    }
}

pub fn parse(text: &str, kind: WordKind, n: Index) -> Result<AnyWord> {
    Ok(match kind {
        WordKind::Braid => AnyWord::Braid(Word::parse(text, n)?),
        WordKind::Gn3 => AnyWord::Gn3(Word::parse(text, n)?),
        WordKind::Tilde => AnyWord::Tilde(Word::parse(text, n)?),
    })
}
