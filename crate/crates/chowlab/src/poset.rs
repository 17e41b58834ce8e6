//! Finite bounded weakly ranked posets.
//!
//! A poset is stored as its Hasse diagram (the transitive reduction of the
//! cover relation supplied at build time) together with the full
//! reachability closure. Element identifiers are opaque strings; everything
//! internal works with dense indices assigned in input order. A weak rank is
//! a single map `element -> u64` with rank 0 at the bottom; the pairwise
//! rank function is recovered as a difference of ranks, which makes the
//! additivity axiom hold by construction.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("poset has no elements")]
    Empty,
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("unknown element id `{0}` in a cover pair")]
    UnknownId(String),
    #[error("cover relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("not bounded below, minimal elements: {0:?}")]
    MultipleMinimal(Vec<String>),
    #[error("not bounded above, maximal elements: {0:?}")]
    MultipleMaximal(Vec<String>),
    #[error("rank missing for element `{0}`")]
    MissingRank(String),
    #[error("rank given for unknown element `{0}`")]
    RankForUnknown(String),
}

/// Fixed-width bitset row used for the reachability closure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub(crate) fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn or_assign(&mut self, other: &BitRow) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Indices of set bits, ascending.
    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, w)| {
            let mut w = *w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Finite bounded poset with a unique least and largest element.
#[derive(Clone, Debug)]
pub struct Poset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<BitRow>,
    bottom: usize,
    top: usize,
}

impl Poset {
    /// Builds a poset from element ids and cover pairs given by id.
    ///
    /// The supplied pairs may contain transitively implied covers; they are
    /// reduced to the Hasse diagram. Fails on cycles, dangling ids, or when
    /// the result is not bounded.
    pub fn build(ids: Vec<String>, cover_pairs: &[(String, String)]) -> Result<Poset, PosetError> {
        let index = Self::index_ids(&ids)?;
        let mut pairs = Vec::with_capacity(cover_pairs.len());
        for (lo, hi) in cover_pairs {
            let l = *index
                .get(lo)
                .ok_or_else(|| PosetError::UnknownId(lo.clone()))?;
            let h = *index
                .get(hi)
                .ok_or_else(|| PosetError::UnknownId(hi.clone()))?;
            pairs.push((l, h));
        }
        Self::build_indexed_with(ids, index, pairs)
    }

    /// Builds a poset from pre-resolved cover index pairs.
    pub fn from_indexed(ids: Vec<String>, cover_pairs: Vec<(usize, usize)>) -> Result<Poset, PosetError> {
        let index = Self::index_ids(&ids)?;
        Self::build_indexed_with(ids, index, cover_pairs)
    }

    fn index_ids(ids: &[String]) -> Result<HashMap<String, usize>, PosetError> {
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(PosetError::DuplicateId(id.clone()));
            }
        }
        Ok(index)
    }

    fn build_indexed_with(
        ids: Vec<String>,
        index: HashMap<String, usize>,
        cover_pairs: Vec<(usize, usize)>,
    ) -> Result<Poset, PosetError> {
        let n = ids.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        let pairs: BTreeSet<(usize, usize)> = cover_pairs.into_iter().collect();
        let mut out = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(l, h) in &pairs {
            assert!(l < n && h < n, "cover index out of range");
            out[l].push(h);
            indeg[h] += 1;
        }

        // Kahn topological order; leftover in-degree means a cycle.
        let mut topo = Vec::with_capacity(n);
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            topo.push(x);
            for &y in &out[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
        if topo.len() < n {
            let culprit = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(PosetError::Cycle(ids[culprit].clone()));
        }

        // Strict up-closure, accumulated against topological order.
        let mut up = vec![BitRow::new(n); n];
        for &x in topo.iter().rev() {
            let mut row = BitRow::new(n);
            for &y in &out[x] {
                row.set(y);
                row.or_assign(&up[y]);
            }
            up[x] = row;
        }

        // A supplied pair is a genuine cover iff it is not reachable through
        // two or more steps.
        let mut covers = Vec::new();
        for (x, succ) in out.iter().enumerate() {
            if succ.is_empty() {
                continue;
            }
            let mut two_step = BitRow::new(n);
            for &y in succ {
                two_step.or_assign(&up[y]);
            }
            for &y in succ {
                if !two_step.get(y) {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        let mut has_below = vec![false; n];
        for row in &up {
            for y in row.ones() {
                has_below[y] = true;
            }
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| !has_below[i]).collect();
        if minimal.len() != 1 {
            return Err(PosetError::MultipleMinimal(
                minimal.iter().map(|&i| ids[i].clone()).collect(),
            ));
        }
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].is_empty()).collect();
        if maximal.len() != 1 {
            return Err(PosetError::MultipleMaximal(
                maximal.iter().map(|&i| ids[i].clone()).collect(),
            ));
        }

        Ok(Poset {
            ids,
            index,
            covers,
            up,
            bottom: minimal[0],
            top: maximal[0],
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, x: usize) -> &str {
        &self.ids[x]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Hasse diagram edges `(lower, upper)`, sorted by index pair.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.up[x].get(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }

    /// Elements strictly above `x`, ascending by index.
    pub fn strictly_above(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[x].ones()
    }
}

/// Weak rank function, stored as rank-from-bottom per element.
///
/// On a bounded poset any weak rank function is determined by the ranks of
/// elements (`rho(x, y) = rank(y) - rank(x)`), so the map form is lossless
/// and additive along chains by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakRank {
    ranks: Vec<u64>,
}

/// Outcome of validating a weak rank against a poset.
#[derive(Clone, Debug)]
pub struct WeakRankReport {
    pub bottom_rank: u64,
    /// Cover pairs whose rank does not strictly increase.
    pub violations: Vec<(usize, usize)>,
}

impl WeakRankReport {
    pub fn is_valid(&self) -> bool {
        self.bottom_rank == 0 && self.violations.is_empty()
    }
}

impl WeakRank {
    /// Ranks indexed like the poset elements.
    pub fn new(ranks: Vec<u64>) -> Self {
        WeakRank { ranks }
    }

    /// Resolves a rank map keyed by element id. Every element must be
    /// covered and every key must name an element.
    pub fn from_id_map(poset: &Poset, map: &HashMap<String, u64>) -> Result<Self, PosetError> {
        for key in map.keys() {
            if poset.index_of(key).is_none() {
                return Err(PosetError::RankForUnknown(key.clone()));
            }
        }
        let mut ranks = Vec::with_capacity(poset.len());
        for id in poset.ids() {
            match map.get(id) {
                Some(&r) => ranks.push(r),
                None => return Err(PosetError::MissingRank(id.clone())),
            }
        }
        Ok(WeakRank { ranks })
    }

    pub fn of(&self, x: usize) -> u64 {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// Rank difference `rho(x, y)` for comparable `x <= y`.
    pub fn gap(&self, x: usize, y: usize) -> u64 {
        self.ranks[y] - self.ranks[x]
    }

    /// Weak rank of the poset, `rank(top)`.
    pub fn poset_rank(&self, poset: &Poset) -> u64 {
        self.ranks[poset.top()]
    }

    /// Accepts iff the bottom has rank 0 and every cover strictly increases
    /// the rank. Violating cover pairs are listed.
    pub fn validate(&self, poset: &Poset) -> WeakRankReport {
        assert_eq!(self.ranks.len(), poset.len(), "rank vector length mismatch");
        let violations = poset
            .covers()
            .iter()
            .copied()
            .filter(|&(l, h)| self.ranks[l] >= self.ranks[h])
            .collect();
        WeakRankReport {
            bottom_rank: self.ranks[poset.bottom()],
            violations,
        }
    }

    /// True iff every cover has rank gap exactly 1.
    pub fn is_ranked(&self, poset: &Poset) -> bool {
        poset
            .covers()
            .iter()
            .all(|&(l, h)| self.ranks[h] == self.ranks[l] + 1)
    }
}

/// Rank-level element counts `W_0..W_n` (Whitney numbers of the first kind).
pub fn whitney_numbers(poset: &Poset, rank: &WeakRank) -> Vec<usize> {
    let n = rank.poset_rank(poset) as usize;
    let mut counts = vec![0usize; n + 1];
    for x in 0..poset.len() {
        counts[rank.of(x) as usize] += 1;
    }
    counts
}

/// Depth-first stream of chains `bottom = p_0 < p_1 < ... < p_s` (the bottom
/// itself is implicit, so the empty chain is yielded first) whose
/// consecutive rank gaps are all at least `min_gap`. Deterministic in the
/// element input order; each chain appears exactly once.
pub fn chains_from_bottom<'a>(
    poset: &'a Poset,
    rank: &'a WeakRank,
    min_gap: u64,
) -> ChainsFromBottom<'a> {
    assert!(min_gap >= 1, "min_gap must be at least 1");
    ChainsFromBottom {
        poset,
        rank,
        min_gap,
        stack: vec![Vec::new()],
    }
}

pub struct ChainsFromBottom<'a> {
    poset: &'a Poset,
    rank: &'a WeakRank,
    min_gap: u64,
    stack: Vec<Vec<usize>>,
}

impl Iterator for ChainsFromBottom<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let chain = self.stack.pop()?;
        let last = chain.last().copied().unwrap_or(self.poset.bottom());
        let base = self.rank.of(last);
        let extensions: Vec<usize> = self
            .poset
            .strictly_above(last)
            .filter(|&y| self.rank.of(y) - base >= self.min_gap)
            .collect();
        // Reverse push so the smallest index is explored first.
        for &y in extensions.iter().rev() {
            let mut longer = chain.clone();
            longer.push(y);
            self.stack.push(longer);
        }
        Some(chain)
    }
}
