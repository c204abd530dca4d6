//! Relators of the pure braid group and single-step rewriting in `G_n^3`
//! and in the extended group with `σ` letters.
//!
//! Rewriting uses each defining relation `L = R` as a window replacement in
//! either direction. Relations whose two sides coincide after relabelling
//! (the commutations and the tetrahedron relation, which reverses a window
//! holding the four triples of a 4-set in any order) are reported once, as
//! [`Direction::Forward`]. For the square relation `Forward` deletes a pair
//! `a a` and `Backward` inserts one; insertions are only generated on
//! request, over every letter of the ambient alphabet.

use std::fmt;
use std::hash::Hash;

use serde::{Serialize, Serializer};

use crate::words::{
    BraidLetter, BraidWord, Gn3Word, Index, Letter, SigmaLetter, Sign, TildeLetter, TildeWord,
    Triple, Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelatorFamily {
    /// `s < i` or `j < r`: `b_rs b_ij b_rs⁻¹ = b_ij`.
    Commuting,
    /// `i < j = r < s`: `b_rs b_ij b_rs⁻¹ = b_is⁻¹ b_ij b_is`.
    ConjugateS,
    /// `i < r < j = s`: `b_rs b_ij b_rs⁻¹ = b_ij⁻¹ b_ir⁻¹ b_ij b_ir b_ij`.
    ConjugateRsEqual,
    /// `i < r < j < s`: the nine-letter conjugate.
    ConjugateGeneral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relator {
    /// `b_rs b_ij b_rs⁻¹ · (right-hand side)⁻¹`.
    pub word: BraidWord,
    pub family: RelatorFamily,
    /// `(i, j, r, s)`.
    pub parameters: (Index, Index, Index, Index),
}

/// One relator per instantiation of each conjugation relation of `PB_n`.
pub fn pb_relators(n: Index) -> Vec<Relator> {
    let b = |i, j, sign| BraidLetter::new(i, j, sign).expect("i < j");
    let p = |i, j| b(i, j, Sign::Plus);
    let m = |i, j| b(i, j, Sign::Minus);

    let pairs: Vec<(Index, Index)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for &(i, j) in &pairs {
        for &(r, s) in &pairs {
            let (family, rhs) = if s < i || j < r {
                (RelatorFamily::Commuting, vec![p(i, j)])
            } else if j == r {
                (RelatorFamily::ConjugateS, vec![m(i, s), p(i, j), p(i, s)])
            } else if i < r && j == s {
                (RelatorFamily::ConjugateRsEqual, vec![m(i, j), m(i, r), p(i, j), p(i, r), p(i, j)])
            } else if i < r && r < j && j < s {
                (
                    RelatorFamily::ConjugateGeneral,
                    vec![
                        m(i, s), m(i, r), p(i, s), p(i, r), p(i, j),
                        m(i, r), m(i, s), p(i, r), p(i, s),
                    ],
                )
            } else {
                continue;
            };
            let lhs = Word::from_parts(n, vec![p(r, s), p(i, j), m(r, s)]);
            let rhs = Word::from_parts(n, rhs);
            let word = lhs.concat(&rhs.inverse()).expect("same bound");
            out.push(Relator { word, family, parameters: (i, j, r, s) });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Left side replaced by right side.
    Forward,
    /// Right side replaced by left side.
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// Relations of `G_n^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gn3Rule {
    /// `a² = 1`
    Square,
    /// `a_T a_U = a_U a_T` for `|T ∩ U| < 2`
    FarCommute,
    /// `a_ijk a_ijl a_ikl a_jkl = a_jkl a_ikl a_ijl a_ijk`
    Tetrahedron,
}

/// Relations of the extended group, plus free cancellation of `σ σ⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TildeRule {
    Square,
    FarCommute,
    Tetrahedron,
    /// `σ_ij σ_kl = σ_kl σ_ij`, all four indices distinct.
    SigmaCommute,
    /// `σ_ij a_T = a_T σ_ij` for `|{i,j} ∩ T| < 2`.
    MixedCommute,
    /// `a σ_ij σ_ik σ_jk = σ_jk σ_ik σ_ij a`
    TriangleLead,
    /// `σ_ij a σ_ik σ_jk = σ_jk σ_ik a σ_ij`
    TriangleSecond,
    /// `σ_ij σ_ik a σ_jk = σ_jk a σ_ik σ_ij`
    TriangleThird,
    /// `σ_ij σ_ik σ_jk a = a σ_jk σ_ik σ_ij`
    TriangleTrail,
    /// `σ σ⁻¹ = 1`
    FreeCancel,
}

impl fmt::Display for Gn3Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gn3Rule::Square => "1",
            Gn3Rule::FarCommute => "2",
            Gn3Rule::Tetrahedron => "3",
        })
    }
}

impl fmt::Display for TildeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TildeRule::Square => "a",
            TildeRule::FarCommute => "b",
            TildeRule::Tetrahedron => "c",
            TildeRule::SigmaCommute => "d",
            TildeRule::MixedCommute => "e",
            TildeRule::TriangleLead => "f",
            TildeRule::TriangleSecond => "g",
            TildeRule::TriangleThird => "h",
            TildeRule::TriangleTrail => "i",
            TildeRule::FreeCancel => "free",
        })
    }
}

macro_rules! serialize_display {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    };
}
serialize_display!(Gn3Rule);
serialize_display!(TildeRule);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "W: Serialize, W::Rule: Serialize"))]
pub struct RewriteStep<W: Rewritable> {
    pub position: usize,
    pub rule: W::Rule,
    pub direction: Direction,
    pub result: W,
}

impl<W: Rewritable> RewriteStep<W> {
    /// Direction that undoes this step; symmetric rules undo themselves.
    pub fn undo_direction(&self) -> Direction {
        if W::is_symmetric(self.rule) {
            self.direction
        } else {
            self.direction.reversed()
        }
    }
}

/// Words that admit single-step rewriting by the defining relations.
pub trait Rewritable: Clone + Eq + Hash + Send + Sync + fmt::Display + fmt::Debug {
    type Rule: Copy + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    /// Every applicable step, ordered by position, then rule, then direction.
    fn rewrite_steps(&self, allow_insertions: bool) -> Vec<RewriteStep<Self>>;

    /// Whether the rule's two sides are relabellings of each other.
    fn is_symmetric(rule: Self::Rule) -> bool;

    /// Whether the rule changes the length (by exactly two).
    fn changes_length(rule: Self::Rule) -> bool;

    fn word_len(&self) -> usize;

    fn word_bound(&self) -> Index;
}

fn splice<L: Clone>(letters: &[L], at: usize, remove: usize, insert: &[L]) -> Vec<L> {
    let mut v = Vec::with_capacity(letters.len() + insert.len());
    v.extend_from_slice(&letters[..at]);
    v.extend_from_slice(insert);
    v.extend_from_slice(&letters[at + remove..]);
    v
}

fn all_triples(m: Index) -> Vec<Triple> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                out.push(Triple::of(i, j, k));
            }
        }
    }
    out
}

/// Four distinct triples covering exactly four indices.
fn is_tetrahedron(window: &[Triple]) -> bool {
    let mut seen: Vec<Index> = window.iter().flat_map(|t| t.indices()).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == 4
        && (0..4).all(|a| (a + 1..4).all(|b| window[a] != window[b]))
}

fn sort_steps<W: Rewritable>(steps: &mut [RewriteStep<W>]) {
    steps.sort_by_key(|s| (s.position, s.rule, s.direction));
}

impl Rewritable for Gn3Word {
    type Rule = Gn3Rule;

    fn rewrite_steps(&self, allow_insertions: bool) -> Vec<RewriteStep<Self>> {
        let w = self.letters();
        let m = self.bound();
        let step = |position, rule, direction, letters: Vec<Triple>| RewriteStep {
            position,
            rule,
            direction,
            result: Word::from_parts(m, letters),
        };
        let mut out = Vec::new();
        for p in 0..w.len() {
            if p + 1 < w.len() {
                let (x, y) = (w[p], w[p + 1]);
                if x == y {
                    out.push(step(p, Gn3Rule::Square, Direction::Forward, splice(w, p, 2, &[])));
                } else if x.intersection_len(&y) < 2 {
                    out.push(step(p, Gn3Rule::FarCommute, Direction::Forward, splice(w, p, 2, &[y, x])));
                }
            }
            if p + 3 < w.len() && is_tetrahedron(&w[p..p + 4]) {
                let rev: Vec<Triple> = w[p..p + 4].iter().rev().copied().collect();
                out.push(step(p, Gn3Rule::Tetrahedron, Direction::Forward, splice(w, p, 4, &rev)));
            }
        }
        if allow_insertions {
            let alphabet = all_triples(m);
            for p in 0..=w.len() {
                for t in &alphabet {
                    out.push(step(p, Gn3Rule::Square, Direction::Backward, splice(w, p, 0, &[*t, *t])));
                }
            }
        }
        sort_steps(&mut out);
        out
    }

    fn is_symmetric(rule: Gn3Rule) -> bool {
        rule != Gn3Rule::Square
    }

    fn changes_length(rule: Gn3Rule) -> bool {
        rule == Gn3Rule::Square
    }

    fn word_len(&self) -> usize {
        self.len()
    }

    fn word_bound(&self) -> Index {
        self.bound()
    }
}

/// Variable of a triangle-relation pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    I,
    J,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    A,
    S(Var, Var, Sign),
}

type Pattern = [Sym; 4];

const fn s(x: Var, y: Var) -> Sym {
    Sym::S(x, y, Sign::Plus)
}

use Var::{I, J, K};

/// Printed (left, right) sides of the four triangle relations.
const TRIANGLES: [(TildeRule, Pattern, Pattern); 4] = [
    (
        TildeRule::TriangleLead,
        [Sym::A, s(I, J), s(I, K), s(J, K)],
        [s(J, K), s(I, K), s(I, J), Sym::A],
    ),
    (
        TildeRule::TriangleSecond,
        [s(I, J), Sym::A, s(I, K), s(J, K)],
        [s(J, K), s(I, K), Sym::A, s(I, J)],
    ),
    (
        TildeRule::TriangleThird,
        [s(I, J), s(I, K), Sym::A, s(J, K)],
        [s(J, K), Sym::A, s(I, K), s(I, J)],
    ),
    (
        TildeRule::TriangleTrail,
        [s(I, J), s(I, K), s(J, K), Sym::A],
        [Sym::A, s(J, K), s(I, K), s(I, J)],
    ),
];

/// The pattern of the inverse word.
fn invert_pattern(p: &Pattern) -> Pattern {
    let mut out = *p;
    out.reverse();
    for sym in out.iter_mut() {
        if let Sym::S(x, y, sign) = *sym {
            *sym = Sym::S(x, y, sign.flip());
        }
    }
    out
}

fn var_slot(v: Var) -> usize {
    match v {
        Var::I => 0,
        Var::J => 1,
        Var::K => 2,
    }
}

/// Binds `(i, j, k)` so that `pattern` spells `window`.
fn unify(pattern: &Pattern, window: &[TildeLetter]) -> Option<[Index; 3]> {
    let mut bind: [Option<Index>; 3] = [None; 3];
    let mut set = |v: Var, x: Index| -> bool {
        let slot = &mut bind[var_slot(v)];
        match slot {
            Some(y) => *y == x,
            None => {
                *slot = Some(x);
                true
            }
        }
    };
    let mut triple = None;
    for (sym, letter) in pattern.iter().zip(window) {
        match (sym, letter) {
            (Sym::A, TildeLetter::A(t)) => triple = Some(*t),
            (Sym::S(x, y, sign), TildeLetter::Sigma(sg)) if sg.sign() == *sign => {
                if !set(*x, sg.i()) || !set(*y, sg.j()) {
                    return None;
                }
            }
            _ => return None,
        }
    }
    let [i, j, k] = [bind[0]?, bind[1]?, bind[2]?];
    let t = Triple::new(i, j, k).ok()?;
    (triple? == t).then_some([i, j, k])
}

fn instantiate(pattern: &Pattern, ijk: [Index; 3]) -> Vec<TildeLetter> {
    let t = Triple::of(ijk[0], ijk[1], ijk[2]);
    pattern
        .iter()
        .map(|sym| match *sym {
            Sym::A => TildeLetter::A(t),
            Sym::S(x, y, sign) => {
                TildeLetter::Sigma(SigmaLetter::of(ijk[var_slot(x)], ijk[var_slot(y)], sign))
            }
        })
        .collect()
}

/// Every instance of the triangle relations (printed and inverted form) as
/// `(rule, left, right)` word pairs over indices `1..=n`.
pub fn triangle_instances(n: Index) -> Vec<(TildeRule, Vec<TildeLetter>, Vec<TildeLetter>)> {
    let mut out = Vec::new();
    for (rule, lhs, rhs) in TRIANGLES {
        for pats in [(lhs, rhs), (invert_pattern(&lhs), invert_pattern(&rhs))] {
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        if i != j && j != k && i != k {
                            out.push((rule, instantiate(&pats.0, [i, j, k]), instantiate(&pats.1, [i, j, k])));
                        }
                    }
                }
            }
        }
    }
    out
}

fn distinct4(a: &SigmaLetter, b: &SigmaLetter) -> bool {
    let (i, j) = a.pair();
    let (k, l) = b.pair();
    i != k && i != l && j != k && j != l
}

impl Rewritable for TildeWord {
    type Rule = TildeRule;

    fn rewrite_steps(&self, allow_insertions: bool) -> Vec<RewriteStep<Self>> {
        use TildeLetter::{Sigma, A};

        let w = self.letters();
        let n = self.bound();
        let step = |position, rule, direction, letters: Vec<TildeLetter>| RewriteStep {
            position,
            rule,
            direction,
            result: Word::from_parts(n, letters),
        };
        let mut out = Vec::new();
        for p in 0..w.len() {
            if p + 1 < w.len() {
                let (x, y) = (w[p], w[p + 1]);
                let swapped = || splice(w, p, 2, &[y, x]);
                match (x, y) {
                    (A(t), A(u)) if t == u => {
                        out.push(step(p, TildeRule::Square, Direction::Forward, splice(w, p, 2, &[])));
                    }
                    (A(t), A(u)) if t.intersection_len(&u) < 2 => {
                        out.push(step(p, TildeRule::FarCommute, Direction::Forward, swapped()));
                    }
                    (Sigma(a), Sigma(b)) if b == a.inverse() => {
                        out.push(step(p, TildeRule::FreeCancel, Direction::Forward, splice(w, p, 2, &[])));
                    }
                    (Sigma(a), Sigma(b)) if distinct4(&a, &b) => {
                        out.push(step(p, TildeRule::SigmaCommute, Direction::Forward, swapped()));
                    }
                    (Sigma(a), A(t)) | (A(t), Sigma(a)) if a.overlap(&t) < 2 => {
                        out.push(step(p, TildeRule::MixedCommute, Direction::Forward, swapped()));
                    }
                    _ => {}
                }
            }
            if p + 3 < w.len() {
                let window = &w[p..p + 4];
                let triples: Option<Vec<Triple>> = window.iter().map(TildeLetter::as_triple).collect();
                match triples {
                    Some(ts) => {
                        if is_tetrahedron(&ts) {
                            let rev: Vec<TildeLetter> = window.iter().rev().copied().collect();
                            out.push(step(p, TildeRule::Tetrahedron, Direction::Forward, splice(w, p, 4, &rev)));
                        }
                    }
                    None => {
                        for (rule, lhs, rhs) in TRIANGLES {
                            for (l, r) in [(lhs, rhs), (invert_pattern(&lhs), invert_pattern(&rhs))] {
                                if let Some(ijk) = unify(&l, window) {
                                    let repl = instantiate(&r, ijk);
                                    out.push(step(p, rule, Direction::Forward, splice(w, p, 4, &repl)));
                                }
                                if let Some(ijk) = unify(&r, window) {
                                    let repl = instantiate(&l, ijk);
                                    out.push(step(p, rule, Direction::Backward, splice(w, p, 4, &repl)));
                                }
                            }
                        }
                    }
                }
            }
        }
        if allow_insertions {
            let triples = all_triples(n);
            let mut sigmas = Vec::new();
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        sigmas.push(SigmaLetter::of(i, j, Sign::Plus));
                        sigmas.push(SigmaLetter::of(i, j, Sign::Minus));
                    }
                }
            }
            for p in 0..=w.len() {
                for t in &triples {
                    out.push(step(p, TildeRule::Square, Direction::Backward, splice(w, p, 0, &[A(*t), A(*t)])));
                }
                for sg in &sigmas {
                    let pair = [Sigma(*sg), Sigma(sg.inverse())];
                    out.push(step(p, TildeRule::FreeCancel, Direction::Backward, splice(w, p, 0, &pair)));
                }
            }
        }
        sort_steps(&mut out);
        out
    }

    fn is_symmetric(rule: TildeRule) -> bool {
        matches!(
            rule,
            TildeRule::FarCommute | TildeRule::Tetrahedron | TildeRule::SigmaCommute | TildeRule::MixedCommute
        )
    }

    fn changes_length(rule: TildeRule) -> bool {
        matches!(rule, TildeRule::Square | TildeRule::FreeCancel)
    }

    fn word_len(&self) -> usize {
        self.len()
    }

    fn word_bound(&self) -> Index {
        self.bound()
    }
}

/// Convenience wrapper over [`Rewritable::rewrite_steps`].
pub fn rewrite_steps<W: Rewritable>(w: &W, allow_insertions: bool) -> Vec<RewriteStep<W>> {
    w.rewrite_steps(allow_insertions)
}
