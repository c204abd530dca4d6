//! Per-occurrence indices and the free-product invariants built from them.
//!
//! For a selector `(i, j, k)` and an occurrence of `a_{ijk}` in a `G_m^3`
//! word, let `N_T` be the parity of the number of `a_T` letters strictly
//! before it. The index of the occurrence maps each `l` outside the triple to
//!
//! ```text
//! (N_{jkl} + N_{ijl}, N_{ikl} + N_{jkl})     IndexConvention::SharedJkl (default)
//! (N_{jkl} + N_{ijl}, N_{ikl} + N_{ijl})     IndexConvention::SharedIjl
//! ```
//!
//! The invariant `w_(i,j,k)` is the sequence of these indices, read as a word
//! in the free product of `Z2`'s generated by all such maps.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homomorphisms::{pi, pi_letter, tilde_phi};
use crate::words::{
    complement, BraidWord, FreeProductWord, Gn3Word, Index, IndexLetter, Letter, TildeLetter,
    TildeWord, Triple, Word, Z2Pair,
};

/// Ordered triple `(i, j, k)` over the index bound `bound`.
///
/// The order matters: it decides which prefix counts feed which component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleSelector {
    pub i: Index,
    pub j: Index,
    pub k: Index,
    pub bound: Index,
}

impl TripleSelector {
    pub fn new(i: Index, j: Index, k: Index, bound: Index) -> Result<Self> {
        let t = Triple::new(i, j, k)?;
        if t.max_index() > bound {
            return Err(Error::IndexOutOfRange { pos: 0, index: t.max_index() as usize, bound });
        }
        Ok(TripleSelector { i, j, k, bound })
    }

    pub fn triple(&self) -> Triple {
        Triple::of(self.i, self.j, self.k)
    }

    /// Every selector with `i < j < k <= bound`.
    pub fn all_ascending(bound: Index) -> Vec<TripleSelector> {
        let mut out = Vec::new();
        for i in 1..=bound {
            for j in i + 1..=bound {
                for k in j + 1..=bound {
                    out.push(TripleSelector { i, j, k, bound });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for TripleSelector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexConvention {
    /// Both components add `N_{jkl}`.
    #[default]
    SharedJkl,
    /// Both components add `N_{ijl}`.
    SharedIjl,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OccurrenceIndex {
    pub position: usize,
    pub index: IndexLetter,
}

/// Parities of letter counts seen so far.
#[derive(Default)]
struct Parities(HashSet<Triple>);

impl Parities {
    fn toggle(&mut self, t: Triple) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    fn get(&self, a: Index, b: Index, c: Index) -> bool {
        self.0.contains(&Triple::of(a, b, c))
    }
}

fn index_at(parities: &Parities, sel: &TripleSelector, conv: IndexConvention) -> IndexLetter {
    let (i, j, k) = (sel.i, sel.j, sel.k);
    let values = complement(sel.triple(), sel.bound)
        .map(|l| {
            let ijl = parities.get(i, j, l);
            let ikl = parities.get(i, k, l);
            let jkl = parities.get(j, k, l);
            match conv {
                IndexConvention::SharedJkl => Z2Pair(jkl ^ ijl, ikl ^ jkl),
                IndexConvention::SharedIjl => Z2Pair(jkl ^ ijl, ikl ^ ijl),
            }
        })
        .collect();
    IndexLetter::new(sel.triple(), sel.bound, values)
}

fn check_bound(w: &Gn3Word, sel: &TripleSelector) -> Result<()> {
    if w.bound() != sel.bound {
        return Err(Error::BoundMismatch { left: w.bound(), right: sel.bound });
    }
    Ok(())
}

/// Index of the selected letter at `pos`.
pub fn occurrence_index(
    w: &Gn3Word,
    pos: usize,
    sel: &TripleSelector,
    conv: IndexConvention,
) -> Result<IndexLetter> {
    check_bound(w, sel)?;
    if w.letters().get(pos) != Some(&sel.triple()) {
        return Err(Error::NotSelectedLetter { pos, expected: sel.triple().to_string() });
    }
    let mut parities = Parities::default();
    for t in &w.letters()[..pos] {
        parities.toggle(*t);
    }
    Ok(index_at(&parities, sel, conv))
}

/// Indices of every occurrence of the selected letter, in one left-to-right scan.
pub fn occurrence_indices(
    w: &Gn3Word,
    sel: &TripleSelector,
    conv: IndexConvention,
) -> Result<Vec<OccurrenceIndex>> {
    check_bound(w, sel)?;
    let target = sel.triple();
    let mut parities = Parities::default();
    let mut out = Vec::new();
    for (position, t) in w.letters().iter().enumerate() {
        if *t == target {
            out.push(OccurrenceIndex { position, index: index_at(&parities, sel, conv) });
        }
        parities.toggle(*t);
    }
    Ok(out)
}

/// `w_(i,j,k)`, unreduced.
pub fn w_invariant(w: &Gn3Word, sel: &TripleSelector, conv: IndexConvention) -> Result<FreeProductWord> {
    Ok(occurrence_indices(w, sel, conv)?.into_iter().map(|o| o.index).collect())
}

/// `w_(i,j,k) ∘ pi`; the selector must be over `n + 1`.
pub fn tilde_w_invariant(
    w: &TildeWord,
    sel: &TripleSelector,
    conv: IndexConvention,
) -> Result<FreeProductWord> {
    w_invariant(&pi(w), sel, conv)
}

/// Free reduction in a free product of involutions: cancel adjacent equal letters.
pub fn reduce(w: &FreeProductWord) -> FreeProductWord {
    let mut stack: Vec<IndexLetter> = Vec::with_capacity(w.len());
    for l in w.letters() {
        if stack.last() == Some(l) {
            stack.pop();
        } else {
            stack.push(l.clone());
        }
    }
    FreeProductWord::new(stack)
}

/// Index of one occurrence in the `pi ∘ tilde_phi` image of a braid,
/// attributed to the braid letter (crossing) that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingIndex {
    pub crossing: usize,
    pub position: usize,
    pub index: IndexLetter,
}

/// All occurrence indices of the selected letter in `pi(tilde_phi(w))`.
pub fn crossing_indices(
    w: &BraidWord,
    sel: &TripleSelector,
    conv: IndexConvention,
) -> Result<Vec<CrossingIndex>> {
    let image = tilde_phi(w);
    let mut owner = Vec::with_capacity(image.len());
    for (c, b) in w.letters().iter().enumerate() {
        let len = tilde_phi(&Word::new(w.bound(), vec![*b])?).len();
        owner.extend(std::iter::repeat_n(c, len));
    }
    let occ = occurrence_indices(&pi(&image), sel, conv)?;
    Ok(occ
        .into_iter()
        .map(|o| CrossingIndex { crossing: owner[o.position], position: o.position, index: o.index })
        .collect())
}

/// Abelian shadow of a word: parity of each involution, integer exponent sum of each `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianProfile {
    pub parities: BTreeMap<Triple, bool>,
    pub sigma_sums: BTreeMap<(Index, Index), i64>,
}

impl AbelianProfile {
    pub fn is_trivial(&self) -> bool {
        self.parities.values().all(|odd| !odd) && self.sigma_sums.values().all(|s| *s == 0)
    }
}

pub trait AbelianLetter {
    fn tally(&self, profile: &mut AbelianProfile);
}

impl AbelianLetter for Triple {
    fn tally(&self, profile: &mut AbelianProfile) {
        *profile.parities.entry(*self).or_default() ^= true;
    }
}

impl AbelianLetter for TildeLetter {
    fn tally(&self, profile: &mut AbelianProfile) {
        match self {
            TildeLetter::A(t) => t.tally(profile),
            TildeLetter::Sigma(s) => {
                *profile.sigma_sums.entry(s.pair()).or_default() += s.sign().exponent();
            }
        }
    }
}

pub fn abelian_profile<L: AbelianLetter + Letter>(w: &Word<L>) -> AbelianProfile {
    let mut p = AbelianProfile::default();
    for l in w.letters() {
        l.tally(&mut p);
    }
    p
}

/// Index that the letter at `pos` of a tilde word inherits from its `pi` image.
pub fn inherited_index(
    w: &TildeWord,
    pos: usize,
    sel: &TripleSelector,
    conv: IndexConvention,
) -> Result<IndexLetter> {
    let letter = w
        .letters()
        .get(pos)
        .ok_or_else(|| Error::NotSelectedLetter { pos, expected: sel.triple().to_string() })?;
    if pi_letter(letter, w.bound()) != sel.triple() {
        return Err(Error::NotSelectedLetter { pos, expected: sel.triple().to_string() });
    }
    occurrence_index(&pi(w), pos, sel, conv)
}
