//! Bounded breadth-first search over the rewrite graph.
//!
//! States are exact letter sequences. A frontier is expanded in parallel, but
//! successors are merged into the visited set sequentially in frontier
//! order, so the result does not depend on the thread count.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentations::{Direction, Rewritable, RewriteStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub max_length: usize,
    pub max_states: usize,
    pub max_depth: usize,
    pub allow_insertions: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_length: 8, max_states: 1_000_000, max_depth: 64, allow_insertions: false }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_length == 0 || self.max_states == 0 || self.max_depth == 0 {
            return Err(Error::Config("search bounds must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "W: Serialize, W::Rule: Serialize"))]
pub struct RewritePath<W: Rewritable> {
    pub start: W,
    pub steps: Vec<RewriteStep<W>>,
    pub end: W,
}

impl<W: Rewritable> RewritePath<W> {
    /// Re-derives every step from its source; `true` iff the path is sound.
    pub fn replays(&self) -> bool {
        let mut current = self.start.clone();
        for s in &self.steps {
            let ok = current.rewrite_steps(true).into_iter().any(|c| {
                c.position == s.position && c.rule == s.rule && c.direction == s.direction && c.result == s.result
            });
            if !ok {
                return false;
            }
            current = s.result.clone();
        }
        current == self.end
    }

    pub fn words(&self) -> Vec<W> {
        std::iter::once(self.start.clone()).chain(self.steps.iter().map(|s| s.result.clone())).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub explored_states: usize,
    pub depth_reached: usize,
    /// No state within the length bound was left unexpanded.
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
#[serde(bound(serialize = "W: Serialize, W::Rule: Serialize"))]
pub enum SearchOutcome<W: Rewritable> {
    Found { path: RewritePath<W>, stats: SearchStats },
    NotFoundWithinBounds { stats: SearchStats },
}

impl<W: Rewritable> SearchOutcome<W> {
    pub fn path(&self) -> Option<&RewritePath<W>> {
        match self {
            SearchOutcome::Found { path, .. } => Some(path),
            SearchOutcome::NotFoundWithinBounds { .. } => None,
        }
    }
}

struct Node<W: Rewritable> {
    parent: usize,
    step: Option<RewriteStep<W>>,
}

fn build_path<W: Rewritable>(nodes: &[Node<W>], start: &W, mut at: usize) -> RewritePath<W> {
    let mut steps = Vec::new();
    while let Some(s) = &nodes[at].step {
        steps.push(s.clone());
        at = nodes[at].parent;
    }
    steps.reverse();
    let end = steps.last().map_or_else(|| start.clone(), |s| s.result.clone());
    RewritePath { start: start.clone(), steps, end }
}

/// Shortest rewrite path from `from` to `to` within the bounds of `cfg`.
pub fn bfs_connect<W: Rewritable>(from: &W, to: &W, cfg: &SearchConfig) -> Result<SearchOutcome<W>> {
    cfg.validate()?;
    if from.word_bound() != to.word_bound() {
        return Err(Error::BoundMismatch { left: from.word_bound(), right: to.word_bound() });
    }
    let mut nodes: Vec<Node<W>> = vec![Node { parent: 0, step: None }];
    let mut index: HashMap<W, usize> = HashMap::from([(from.clone(), 0)]);
    let mut stats = SearchStats { explored_states: 1, depth_reached: 0, exhausted: false };
    if from == to {
        return Ok(SearchOutcome::Found { path: build_path(&nodes, from, 0), stats });
    }
    let mut frontier: Vec<(usize, W)> = vec![(0, from.clone())];
    while !frontier.is_empty() {
        if stats.depth_reached == cfg.max_depth {
            return Ok(SearchOutcome::NotFoundWithinBounds { stats });
        }
        stats.depth_reached += 1;
        let expanded: Vec<Vec<RewriteStep<W>>> = frontier
            .par_iter()
            .map(|(_, w)| {
                let mut steps = w.rewrite_steps(cfg.allow_insertions);
                steps.retain(|s| s.result.word_len() <= cfg.max_length);
                steps
            })
            .collect();
        let mut next = Vec::new();
        for ((parent, _), steps) in frontier.iter().zip(expanded) {
            for s in steps {
                if index.contains_key(&s.result) {
                    continue;
                }
                if stats.explored_states == cfg.max_states {
                    return Ok(SearchOutcome::NotFoundWithinBounds { stats });
                }
                let id = nodes.len();
                let word = s.result.clone();
                nodes.push(Node { parent: *parent, step: Some(s) });
                index.insert(word.clone(), id);
                stats.explored_states += 1;
                if &word == to {
                    return Ok(SearchOutcome::Found { path: build_path(&nodes, from, id), stats });
                }
                next.push((id, word));
            }
        }
        frontier = next;
    }
    stats.exhausted = true;
    Ok(SearchOutcome::NotFoundWithinBounds { stats })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppliedRule<R> {
    pub position: usize,
    pub rule: R,
    pub direction: Direction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityReport<R> {
    pub rigid: bool,
    /// Steps that break rigidity, insertions excluded.
    pub applicable: Vec<AppliedRule<R>>,
}

/// Rigid iff no relation applies without inserting letters.
pub fn is_locally_rigid<W: Rewritable>(w: &W) -> RigidityReport<W::Rule> {
    let applicable: Vec<_> = w
        .rewrite_steps(false)
        .into_iter()
        .map(|s| AppliedRule { position: s.position, rule: s.rule, direction: s.direction })
        .collect();
    RigidityReport { rigid: applicable.is_empty(), applicable }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink<R> {
    /// 1-based index of the adjacent pair.
    pub pair: usize,
    /// `None` when the two words coincide.
    pub step: Option<AppliedRule<R>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport<R> {
    pub verified: bool,
    pub links: Vec<ChainLink<R>>,
    /// 1-based index of the first pair with no single-step connection.
    pub broken_at: Option<usize>,
}

/// Checks that each word follows from the previous one by one relation application.
pub fn verify_chain<W: Rewritable>(words: &[W]) -> Result<ChainReport<W::Rule>> {
    if words.len() < 2 {
        return Err(Error::Config("a chain needs at least two words".into()));
    }
    let mut links = Vec::new();
    for (k, pair) in words.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        if a.word_bound() != b.word_bound() {
            return Err(Error::BoundMismatch { left: a.word_bound(), right: b.word_bound() });
        }
        let step = if a == b {
            None
        } else {
            let insertions = b.word_len() > a.word_len();
            match a.rewrite_steps(insertions).into_iter().find(|s| &s.result == b) {
                Some(s) => Some(AppliedRule { position: s.position, rule: s.rule, direction: s.direction }),
                None => return Ok(ChainReport { verified: false, links, broken_at: Some(k + 1) }),
            }
        };
        links.push(ChainLink { pair: k + 1, step });
    }
    Ok(ChainReport { verified: true, links, broken_at: None })
}
