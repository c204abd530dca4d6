//! Sufficient conditions for a pair `b_ij … b_ij⁻¹` in a pure braid word to
//! be non-cancellable, each backed by a certificate that can be re-checked.

use rayon::prelude::*;
use serde::Serialize;

use crate::homomorphisms::{f_ijk, tilde_phi};
use crate::invariants::{reduce, tilde_w_invariant, IndexConvention, TripleSelector};
use crate::words::{BraidWord, FreeProductWord, Index, Sign, Triple, Word};

/// Two letters on the same strand pair with opposite signs, and the factor
/// strictly between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidatePair {
    pub left: usize,
    pub right: usize,
    pub i: Index,
    pub j: Index,
    #[serde(skip)]
    pub between: BraidWord,
}

/// Every `b_ij … b_ij⁻¹` pair (positive letter first), ordered by `left` then `right`.
pub fn find_pairs(w: &BraidWord) -> Vec<CandidatePair> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (left, x) in letters.iter().enumerate() {
        for (right, y) in letters.iter().enumerate().skip(left + 1) {
            if x.sign() == Sign::Plus && y.sign() == Sign::Minus && x.pair() == y.pair() {
                out.push(CandidatePair {
                    left,
                    right,
                    i: x.i(),
                    j: x.j(),
                    between: Word::from_parts(w.bound(), letters[left + 1..right].to_vec()),
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `B` has no `b_ij` and an odd number of `b_ik^±1, b_jk^±1`.
    Parity { k: Index },
    /// The reduced invariant of `tilde_phi(f_ijk(B))` is nonempty.
    InvariantObstruction { selector: TripleSelector, reduced: FreeProductWord },
    Inconclusive,
}

impl Certificate {
    pub fn is_conclusive(&self) -> bool {
        !matches!(self, Certificate::Inconclusive)
    }

    /// Recomputes the witness from scratch.
    pub fn validate(&self, pair: &CandidatePair, n: Index, conv: IndexConvention) -> bool {
        match self {
            Certificate::Inconclusive => true,
            Certificate::Parity { k } => {
                *k != pair.i && *k != pair.j && !contains_pair(pair) && parity_count(pair, *k) % 2 == 1
            }
            Certificate::InvariantObstruction { selector, reduced } => {
                selector.i == pair.i
                    && selector.j == pair.j
                    && !reduced.is_empty()
                    && obstruction_word(pair, selector.k, n, conv).as_ref() == Some(reduced)
            }
        }
    }
}

fn contains_pair(pair: &CandidatePair) -> bool {
    pair.between.letters().iter().any(|b| b.pair() == (pair.i, pair.j))
}

fn parity_count(pair: &CandidatePair, k: Index) -> usize {
    let hits = |a: Index, b: Index| (a.min(b), a.max(b));
    let (ik, jk) = (hits(pair.i, k), hits(pair.j, k));
    pair.between.letters().iter().filter(|b| b.pair() == ik || b.pair() == jk).count()
}

fn candidate_ks(pair: &CandidatePair, n: Index) -> impl Iterator<Item = Index> + '_ {
    (1..=n).filter(move |k| *k != pair.i && *k != pair.j)
}

/// Parity criterion, smallest witnessing `k`.
pub fn parity_check(pair: &CandidatePair, n: Index) -> Certificate {
    if contains_pair(pair) {
        return Certificate::Inconclusive;
    }
    candidate_ks(pair, n)
        .find(|k| parity_count(pair, *k) % 2 == 1)
        .map_or(Certificate::Inconclusive, |k| Certificate::Parity { k })
}

fn obstruction_word(pair: &CandidatePair, k: Index, n: Index, conv: IndexConvention) -> Option<FreeProductWord> {
    let triple = Triple::new(pair.i, pair.j, k).ok()?;
    let selector = TripleSelector::new(pair.i, pair.j, k, n + 1).ok()?;
    let between = pair.between.widen(n).ok()?;
    let image = tilde_phi(&f_ijk(&between, triple));
    Some(reduce(&tilde_w_invariant(&image, &selector, conv).ok()?))
}

/// Invariant criterion; scans `k` in parallel and keeps the smallest witness.
pub fn invariant_obstruction(pair: &CandidatePair, n: Index, conv: IndexConvention) -> Certificate {
    let ks: Vec<Index> = candidate_ks(pair, n).collect();
    ks.par_iter()
        .find_map_first(|&k| {
            let reduced = obstruction_word(pair, k, n, conv)?;
            (!reduced.is_empty()).then(|| Certificate::InvariantObstruction {
                selector: TripleSelector::new(pair.i, pair.j, k, n + 1).expect("valid selector"),
                reduced,
            })
        })
        .unwrap_or(Certificate::Inconclusive)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NonCancellable,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub pair: CandidatePair,
    pub certificates: Vec<Certificate>,
    pub verdict: Verdict,
}

/// Both criteria for every pair of `w`.
pub fn analyze(w: &BraidWord, conv: IndexConvention) -> Vec<PairReport> {
    let n = w.bound();
    find_pairs(w)
        .into_iter()
        .map(|pair| {
            let certificates = vec![parity_check(&pair, n), invariant_obstruction(&pair, n, conv)];
            let verdict = if certificates.iter().any(Certificate::is_conclusive) {
                Verdict::NonCancellable
            } else {
                Verdict::Inconclusive
            };
            PairReport { pair, certificates, verdict }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::words::strategies::braid_word;
    use crate::words::BraidLetter;

    const CONV: IndexConvention = IndexConvention::SharedJkl;

    fn braid(s: &str, n: Index) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn pairs_single() {
        let p = find_pairs(&braid("b[1,2] b[1,3] b[1,2]^-1", 3));
        assert_eq!(p.len(), 1);
        assert_eq!((p[0].left, p[0].right, p[0].i, p[0].j), (0, 2, 1, 2));
        assert_eq!(p[0].between.to_string(), "b[1,3]");
    }

    #[test]
    fn pairs_need_opposite_signs() {
        assert!(find_pairs(&braid("b[1,2] b[1,2]", 3)).is_empty());
    }

    #[test]
    fn pairs_enumerate_all_nestings() {
        let p = find_pairs(&braid("b[1,2] b[1,2]^-1 b[1,2] b[1,2]^-1", 3));
        let spans: Vec<_> = p.iter().map(|c| (c.left, c.right)).collect();
        assert_eq!(spans, vec![(0, 1), (0, 3), (2, 3)]);
        assert_eq!(p[1].between.to_string(), "b[1,2]^-1 b[1,2]");
    }

    #[test]
    fn inverse_first_is_not_a_pair() {
        assert!(find_pairs(&braid("b[2,3]^-1 b[1,2] b[2,3]", 3)).is_empty());
    }

    #[test]
    fn parity_certificate() {
        let p = &find_pairs(&braid("b[1,2] b[1,3] b[1,2]^-1", 3))[0];
        assert_eq!(parity_check(p, 3), Certificate::Parity { k: 3 });
        let c = invariant_obstruction(p, 3, CONV);
        assert!(matches!(c, Certificate::InvariantObstruction { ref selector, .. } if selector.k == 3));
        assert!(c.validate(p, 3, CONV));
        assert!(parity_check(p, 3).validate(p, 3, CONV));
    }

    #[test]
    fn even_count_inconclusive() {
        let p = &find_pairs(&braid("b[1,2] b[1,3] b[1,3] b[1,2]^-1", 3))[0];
        assert_eq!(parity_check(p, 3), Certificate::Inconclusive);
        // the two copies repeat their indices, but not adjacently
        let Certificate::InvariantObstruction { reduced, .. } = invariant_obstruction(p, 3, CONV) else {
            panic!("expected obstruction");
        };
        assert_eq!(reduced.to_string(), "(1,0)(1,1)(1,0)(1,1)");
    }

    #[test]
    fn free_cancellation_in_between_is_inconclusive() {
        let p = &find_pairs(&braid("b[1,2] b[1,3] b[1,3]^-1 b[1,2]^-1", 3))[0];
        assert_eq!(parity_check(p, 3), Certificate::Inconclusive);
        assert_eq!(invariant_obstruction(p, 3, CONV), Certificate::Inconclusive);
    }

    #[test]
    fn inner_pair_excluded() {
        let w = braid("b[1,2] b[1,2] b[1,3] b[1,2]^-1", 3);
        let outer = find_pairs(&w).into_iter().find(|p| p.left == 0).unwrap();
        assert_eq!(parity_check(&outer, 3), Certificate::Inconclusive);
    }

    #[test]
    fn empty_between_inconclusive() {
        let p = &find_pairs(&braid("b[1,2] b[1,2]^-1", 3))[0];
        assert_eq!(parity_check(p, 3), Certificate::Inconclusive);
        assert_eq!(invariant_obstruction(p, 3, CONV), Certificate::Inconclusive);
    }

    #[test]
    fn forged_certificates_rejected() {
        let p = &find_pairs(&braid("b[1,2] b[1,3] b[1,3] b[1,2]^-1", 3))[0];
        assert!(!Certificate::Parity { k: 3 }.validate(p, 3, CONV));
        let q = &find_pairs(&braid("b[1,2] b[1,3] b[1,2]^-1", 3))[0];
        let Certificate::InvariantObstruction { selector, reduced } = invariant_obstruction(q, 3, CONV) else {
            panic!("expected obstruction");
        };
        let forged = Certificate::InvariantObstruction { selector, reduced: FreeProductWord::new(vec![]) };
        assert!(!forged.validate(q, 3, CONV));
        let moved = Certificate::InvariantObstruction { selector, reduced };
        assert!(!moved.validate(p, 3, CONV));
    }

    #[test]
    fn analyze_reports_verdicts() {
        let r = analyze(&braid("b[1,2] b[1,3] b[1,2]^-1", 3), CONV);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].verdict, Verdict::NonCancellable);
        let r = analyze(&braid("b[1,2] b[1,2]^-1", 3), CONV);
        assert_eq!(r[0].verdict, Verdict::Inconclusive);
    }

    fn pair_with(i: Index, j: Index, between: BraidWord) -> CandidatePair {
        CandidatePair { left: 0, right: between.len() + 1, i, j, between }
    }

    fn pair_strategy() -> impl Strategy<Value = (Index, CandidatePair)> {
        (3u8..=5).prop_flat_map(|n| {
            let ij = (1..n).prop_flat_map(move |i| (Just(i), i + 1..=n));
            (Just(n), ij, braid_word(n, 6)).prop_map(|(n, (i, j), b)| (n, pair_with(i, j, b)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn parity_implies_obstruction((n, pair) in pair_strategy()) {
            if let Certificate::Parity { .. } = parity_check(&pair, n) {
                prop_assert!(invariant_obstruction(&pair, n, CONV).is_conclusive());
            }
        }

        #[test]
        fn certificates_validate((n, pair) in pair_strategy()) {
            prop_assert!(parity_check(&pair, n).validate(&pair, n, CONV));
            prop_assert!(invariant_obstruction(&pair, n, CONV).validate(&pair, n, CONV));
        }

        #[test]
        fn stable_under_far_letters(
            (n, pair) in pair_strategy(),
            pick_k in any::<prop::sample::Index>(),
            pick_letter in any::<prop::sample::Index>(),
            pos in any::<prop::sample::Index>(),
        ) {
            let ks: Vec<Index> = candidate_ks(&pair, n).collect();
            let k = *pick_k.get(&ks);
            let triple = Triple::new(pair.i, pair.j, k).unwrap();
            let far: Vec<BraidLetter> = (1..=n)
                .flat_map(|s| (s + 1..=n).map(move |t| BraidLetter::new(s, t, Sign::Plus).unwrap()))
                .filter(|b| b.overlap(&triple) <= 1)
                .collect();
            prop_assume!(!far.is_empty());
            let extra = *pick_letter.get(&far);
            let mut letters = pair.between.letters().to_vec();
            letters.insert(pos.index(letters.len() + 1), extra);
            let grown = pair_with(pair.i, pair.j, Word::new(n, letters).unwrap());
            let parity_k = |p: &CandidatePair| !contains_pair(p) && parity_count(p, k) % 2 == 1;
            prop_assert_eq!(parity_k(&pair), parity_k(&grown));
            prop_assert_eq!(obstruction_word(&pair, k, n, CONV), obstruction_word(&grown, k, n, CONV));
        }
    }
}
