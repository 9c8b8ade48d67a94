//! Bounded exhaustive search for maximal green sequences on small diagrams.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::matrix::ExchangeMatrix;
use crate::seed::FramedSeed;

/// Largest rank for which listing every sequence is allowed.
pub const MAX_ENUMERATION_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Depth-first; any sequence within the depth bound.
    First,
    /// Breadth-first; a shortest sequence.
    Shortest,
    /// Every sequence within the depth bound (rank ≤ 4).
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_depth: usize,
    pub max_states: usize,
    pub mode: SearchMode,
    /// Visit each exact (B,C) state once.
    pub dedup: bool,
}

impl SearchConfig {
    pub fn first(max_depth: usize, max_states: usize) -> Self {
        SearchConfig { max_depth, max_states, mode: SearchMode::First, dedup: true }
    }

    pub fn shortest(max_depth: usize, max_states: usize) -> Self {
        SearchConfig { max_depth, max_states, mode: SearchMode::Shortest, dedup: true }
    }

    pub fn all(max_depth: usize, max_states: usize) -> Self {
        SearchConfig { max_depth, max_states, mode: SearchMode::All, dedup: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// One sequence in first mode; every sequence (sorted) in all mode.
    Found(Vec<Vec<VertexLabel>>),
    /// No maximal green sequence of length ≤ max_depth exists.
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    /// Number of states expanded.
    pub states: usize,
}

struct Budget;

type Suffixes = Rc<Vec<Vec<usize>>>;

struct Searcher {
    cfg: SearchConfig,
    expanded: usize,
    // exact (B,C) key -> largest depth budget it was explored with
    seen: HashMap<Vec<i64>, usize>,
    memo: HashMap<Vec<i64>, (usize, Suffixes)>,
}

impl Searcher {
    fn tick(&mut self) -> std::result::Result<(), Budget> {
        self.expanded += 1;
        if self.expanded > self.cfg.max_states {
            Err(Budget)
        } else {
            Ok(())
        }
    }

    fn first(
        &mut self,
        s: &FramedSeed,
        left: usize,
        path: &mut Vec<usize>,
    ) -> Result<std::result::Result<bool, Budget>> {
        if s.is_final()? {
            return Ok(Ok(true));
        }
        if left == 0 {
            return Ok(Ok(false));
        }
        if self.cfg.dedup {
            let key = s.state_key();
            if self.seen.get(&key).is_some_and(|&l| l >= left) {
                return Ok(Ok(false));
            }
            self.seen.insert(key, left);
        }
        if let Err(b) = self.tick() {
            return Ok(Err(b));
        }
        for k in s.green_vertices()? {
            let mut next = s.clone();
            next.mutate_index(k)?;
            path.push(k);
            match self.first(&next, left - 1, path)? {
                Ok(true) => return Ok(Ok(true)),
                Ok(false) => {}
                Err(b) => return Ok(Err(b)),
            }
            path.pop();
        }
        Ok(Ok(false))
    }

    /// Breadth-first over green mutations; the first all-red state reached
    /// gives a shortest sequence.
    fn shortest(&mut self, root: FramedSeed) -> Result<std::result::Result<Option<Vec<usize>>, Budget>> {
        // (state, parent node, vertex mutated to get here)
        let mut nodes: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
        let mut frontier = vec![(0usize, root)];
        let mut seen = HashSet::new();
        let path_to = |nodes: &[(usize, usize)], mut at: usize| {
            let mut path = Vec::new();
            while nodes[at].0 != usize::MAX {
                path.push(nodes[at].1);
                at = nodes[at].0;
            }
            path.reverse();
            path
        };
        for depth in 0..=self.cfg.max_depth {
            let mut next = Vec::new();
            for (id, s) in &frontier {
                if s.is_final()? {
                    return Ok(Ok(Some(path_to(&nodes, *id))));
                }
            }
            if depth == self.cfg.max_depth {
                break;
            }
            for (id, s) in frontier {
                if let Err(b) = self.tick() {
                    return Ok(Err(b));
                }
                for k in s.green_vertices()? {
                    let mut child = s.clone();
                    child.mutate_index(k)?;
                    if self.cfg.dedup && !seen.insert(child.state_key()) {
                        continue;
                    }
                    nodes.push((id, k));
                    next.push((nodes.len() - 1, child));
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(Ok(None))
    }

    /// All green suffixes of length ≤ left that end in an all-red state.
    fn all(&mut self, s: &FramedSeed, left: usize) -> Result<std::result::Result<Suffixes, Budget>> {
        if s.is_final()? {
            return Ok(Ok(Rc::new(vec![Vec::new()])));
        }
        if left == 0 {
            return Ok(Ok(Rc::new(Vec::new())));
        }
        let key = self.cfg.dedup.then(|| s.state_key());
        if let Some((l, got)) = key.as_ref().and_then(|k| self.memo.get(k)) {
            if *l == left {
                return Ok(Ok(got.clone()));
            }
        }
        if let Err(b) = self.tick() {
            return Ok(Err(b));
        }
        let mut out = Vec::new();
        for k in s.green_vertices()? {
            let mut next = s.clone();
            next.mutate_index(k)?;
            let tails = match self.all(&next, left - 1)? {
                Ok(t) => t,
                Err(b) => return Ok(Err(b)),
            };
            for t in tails.iter() {
                let mut seq = Vec::with_capacity(t.len() + 1);
                seq.push(k);
                seq.extend_from_slice(t);
                out.push(seq);
            }
        }
        let out = Rc::new(out);
        if let Some(k) = key {
            self.memo.insert(k, (left, out.clone()));
        }
        Ok(Ok(out))
    }
}

/// Search over framed seeds of `m`, branching only on green
/// vertices, deduplicating on the exact (B,C) block. All mode is limited to
/// rank ≤ 4.
pub fn search_mgs(m: &ExchangeMatrix, cfg: SearchConfig) -> Result<SearchResult> {
    if cfg.mode == SearchMode::All && m.rank() > MAX_ENUMERATION_RANK {
        return Err(Error::RankTooLarge(m.rank()));
    }
    let root = FramedSeed::frame(m.clone());
    let mut sr = Searcher { cfg, expanded: 0, seen: HashMap::new(), memo: HashMap::new() };
    let to_labels = |seq: &[usize]| seq.iter().map(|&i| m.label(i).clone()).collect::<Vec<_>>();
    let outcome = match cfg.mode {
        SearchMode::First => {
            let mut path = Vec::new();
            match sr.first(&root, cfg.max_depth, &mut path)? {
                Ok(true) => SearchOutcome::Found(vec![to_labels(&path)]),
                Ok(false) => SearchOutcome::Exhausted,
                Err(Budget) => SearchOutcome::BudgetExceeded,
            }
        }
        SearchMode::Shortest => match sr.shortest(root)? {
            Ok(Some(path)) => SearchOutcome::Found(vec![to_labels(&path)]),
            Ok(None) => SearchOutcome::Exhausted,
            Err(Budget) => SearchOutcome::BudgetExceeded,
        },
        SearchMode::All => match sr.all(&root, cfg.max_depth)? {
            Ok(all) if all.is_empty() => SearchOutcome::Exhausted,
            Ok(all) => {
                let mut seqs: Vec<_> = all.iter().map(|s| to_labels(s)).collect();
                seqs.sort();
                seqs.dedup();
                SearchOutcome::Found(seqs)
            }
            Err(Budget) => SearchOutcome::BudgetExceeded,
        },
    };
    Ok(SearchResult { outcome, states: sr.expanded })
}

/// Every maximal green sequence of length ≤ max_len, sorted by labels.
pub fn enumerate_all(m: &ExchangeMatrix, max_len: usize) -> Result<Vec<Vec<VertexLabel>>> {
    let res = search_mgs(m, SearchConfig::all(max_len, usize::MAX))?;
    Ok(match res.outcome {
        SearchOutcome::Found(v) => v,
        _ => Vec::new(),
    })
}
