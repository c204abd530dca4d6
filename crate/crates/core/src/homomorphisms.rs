//! Maps between the groups:
//!
//! * `phi`: pure braids to `G_n^3`,
//! * `tilde_phi`: pure braids to the extended group with `σ` letters,
//! * `pr`: forget the `σ` letters,
//! * `embed_i`: inclusion of `G_n^3` words,
//! * `pi`: send `σ_ij^±1` to `a_{i,j,n+1}`, landing in `G_{n+1}^3`,
//! * `f_ijk`: keep only the generators meeting a triple in two strands.
//!
//! All products over an index run in ascending order and skip any index
//! that would repeat one already in the triple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{
    BraidLetter, BraidWord, Gn3Word, Index, Letter, SigmaLetter, Sign, TildeLetter, TildeWord,
    Triple, Word,
};

fn check_pair(i: Index, j: Index, n: Index) -> Result<()> {
    if i == 0 || j > n {
        let index = if i == 0 { 0 } else { j as usize };
        return Err(Error::IndexOutOfRange { pos: 0, index, bound: n });
    }
    if i >= j {
        return Err(Error::Unordered { pos: 0 });
    }
    Ok(())
}

/// `a_{ik,l}` for `l = k+1..n`, then `l = 1..k-1` with `l != i`.
fn c_letters(i: Index, k: Index, n: Index) -> impl Iterator<Item = Triple> {
    (k + 1..=n).chain((1..k).filter(move |&l| l != i)).map(move |l| Triple::of(i, k, l))
}

/// The `G_n^3` word `c_{i,k}`.
pub fn c_gn3(i: Index, k: Index, n: Index) -> Result<Gn3Word> {
    check_pair(i, k, n)?;
    Ok(Word::from_parts(n, c_letters(i, k, n).collect()))
}

fn phi_generator(i: Index, j: Index, n: Index) -> Vec<Triple> {
    let c = |k| c_letters(i, k, n).collect::<Vec<_>>();
    let mut out = Vec::new();
    for k in i + 1..j {
        out.extend(c(k).into_iter().rev());
    }
    let cij = c(j);
    out.extend_from_slice(&cij);
    out.extend_from_slice(&cij);
    for k in (i + 1..j).rev() {
        out.extend(c(k));
    }
    out
}

fn image<L: Letter>(w: &BraidWord, bound: Index, gen: impl Fn(Index, Index) -> Vec<L>) -> Word<L> {
    let mut out = Vec::new();
    for b in w.letters() {
        let img = gen(b.i(), b.j());
        match b.sign() {
            Sign::Plus => out.extend(img),
            Sign::Minus => out.extend(img.iter().rev().map(L::inverse)),
        }
    }
    Word::from_parts(bound, out)
}

/// `phi(b_ij) = c_{i,i+1}⁻¹ … c_{i,j-1}⁻¹ c_{i,j}² c_{i,j-1} … c_{i,i+1}`.
pub fn phi(w: &BraidWord) -> Gn3Word {
    let n = w.bound();
    image(w, n, |i, j| phi_generator(i, j, n))
}

/// Which of the four `c` words to build; they differ only in the middle `σ` letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CVariant {
    /// `c_{i,j}`: middle letter `σ_ij⁻¹`.
    Plain,
    /// `c̄_{i,j}`: middle letter `σ_ij`.
    Bar,
    /// `c_{j,i}`: middle letter `σ_ji⁻¹`.
    Swapped,
    /// `c̄_{j,i}`: middle letter `σ_ji`.
    BarSwapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CWordSpec {
    pub i: Index,
    pub j: Index,
    pub variant: CVariant,
    pub n: Index,
}

impl CWordSpec {
    pub fn new(i: Index, j: Index, variant: CVariant, n: Index) -> Result<Self> {
        check_pair(i, j, n)?;
        Ok(CWordSpec { i, j, variant, n })
    }

    fn middle(&self) -> SigmaLetter {
        let (i, j) = (self.i, self.j);
        match self.variant {
            CVariant::Plain => SigmaLetter::of(i, j, Sign::Minus),
            CVariant::Bar => SigmaLetter::of(i, j, Sign::Plus),
            CVariant::Swapped => SigmaLetter::of(j, i, Sign::Minus),
            CVariant::BarSwapped => SigmaLetter::of(j, i, Sign::Plus),
        }
    }

    fn letters(&self) -> Vec<TildeLetter> {
        let (i, j, n) = (self.i, self.j, self.n);
        let mut out: Vec<TildeLetter> =
            (j + 1..=n).map(|k| TildeLetter::A(Triple::of(i, j, k))).collect();
        out.push(TildeLetter::Sigma(self.middle()));
        out.extend((1..j).filter(|&k| k != i).map(|k| TildeLetter::A(Triple::of(i, j, k))));
        out
    }

    /// Length of the expansion: `n - 2` involutions and one `σ`.
    pub fn expanded_len(&self) -> usize {
        self.n as usize - 1
    }
}

/// Expansion of one of `c_{i,j}`, `c̄_{i,j}`, `c_{j,i}`, `c̄_{j,i}`.
pub fn tilde_c(spec: CWordSpec) -> Result<TildeWord> {
    check_pair(spec.i, spec.j, spec.n)?;
    Ok(Word::from_parts(spec.n, spec.letters()))
}

fn tilde_phi_generator(i: Index, j: Index, n: Index) -> Vec<TildeLetter> {
    let c = |k, variant| CWordSpec { i, j: k, variant, n }.letters();
    let mut out = Vec::new();
    for k in i + 1..j {
        out.extend(c(k, CVariant::Plain).iter().rev().map(TildeLetter::inverse));
    }
    out.extend(c(j, CVariant::Bar));
    out.extend(c(j, CVariant::BarSwapped));
    for k in (i + 1..j).rev() {
        out.extend(c(k, CVariant::Plain));
    }
    out
}

/// `tilde_phi(b_ij) = c_{i,i+1}⁻¹ … c_{i,j-1}⁻¹ c̄_{i,j} c̄_{j,i} c_{i,j-1} … c_{i,i+1}`.
pub fn tilde_phi(w: &BraidWord) -> TildeWord {
    let n = w.bound();
    image(w, n, |i, j| tilde_phi_generator(i, j, n))
}

/// Deletes every `σ` letter.
pub fn pr(w: &TildeWord) -> Gn3Word {
    Word::from_parts(w.bound(), w.letters().iter().filter_map(TildeLetter::as_triple).collect())
}

pub fn embed_i(w: &Gn3Word) -> TildeWord {
    Word::from_parts(w.bound(), w.letters().iter().copied().map(TildeLetter::A).collect())
}

/// Image of a single letter under `pi`, with `n` the bound of the source word.
pub fn pi_letter(l: &TildeLetter, n: Index) -> Triple {
    match l {
        TildeLetter::A(t) => *t,
        TildeLetter::Sigma(s) => Triple::of(s.i(), s.j(), n + 1),
    }
}

/// Sends `σ_ij^±1` and `σ_ji^±1` to `a_{i,j,n+1}`; the result has bound `n + 1`.
///
/// Panics if `n` is already the largest representable index.
pub fn pi(w: &TildeWord) -> Gn3Word {
    let n = w.bound();
    let m = n.checked_add(1).expect("index bound overflow in pi");
    Word::from_parts(m, w.letters().iter().map(|l| pi_letter(l, n)).collect())
}

/// Keeps `b_st^±1` iff `|{s,t} ∩ triple| = 2`.
pub fn f_ijk(w: &BraidWord, triple: Triple) -> BraidWord {
    Word::from_parts(
        w.bound(),
        w.letters().iter().filter(|b| b.overlap(&triple) == 2).copied().collect::<Vec<BraidLetter>>(),
    )
}
