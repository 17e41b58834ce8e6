//! Deterministic generators for named poset families, the two
//! counterexample families, and a seeded random graded-poset generator.

use std::str::FromStr;

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poset::{Poset, WeakRank};
use crate::size_cap;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("family would exceed the element cap of {cap} ({requested} elements); raise CHOWLAB_SIZE_CAP to override")]
    Capacity { requested: usize, cap: usize },
    #[error("cannot parse family spec `{0}`: {1}")]
    Parse(String, String),
}

/// A parsed `name(params)` family description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Chain { n: u64 },
    Boolean { n: u32 },
    ProductOfChains { bounds: Vec<u32> },
    NonPure { m: u64 },
    NonLogConcave { n: u64, m: u64 },
    Random { seed: u64, max_rank: u64, max_width: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<(Poset, WeakRank), FamilyError> {
        match self {
            FamilySpec::Chain { n } => gen_chain(*n),
            FamilySpec::Boolean { n } => gen_boolean(*n),
            FamilySpec::ProductOfChains { bounds } => gen_product_of_chains(bounds),
            FamilySpec::NonPure { m } => gen_nonpure_counterexample(*m),
            FamilySpec::NonLogConcave { n, m } => gen_nonlogconcave_counterexample(*n, *m),
            FamilySpec::Random { seed, max_rank, max_width } => {
                gen_random_graded(*seed, *max_rank, *max_width)
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts `name(p1,p2,...)` with positional or `key=value` integer
    /// parameters; an optional `family:` prefix is tolerated.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let trimmed = s.trim().strip_prefix("family:").unwrap_or(s.trim());
        let err = |msg: &str| FamilyError::Parse(s.to_string(), msg.to_string());
        let open = trimmed.find('(').ok_or_else(|| err("expected `name(params)`"))?;
        if !trimmed.ends_with(')') {
            return Err(err("missing closing parenthesis"));
        }
        let name = &trimmed[..open];
        let body = &trimmed[open + 1..trimmed.len() - 1];
        let mut positional = Vec::new();
        let mut named: Vec<(String, u64)> = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            match part.split_once('=') {
                Some((key, value)) => {
                    let v = value
                        .trim()
                        .parse::<u64>()
                        .map_err(|_| err(&format!("bad integer `{value}`")))?;
                    named.push((key.trim().to_string(), v));
                }
                None => positional.push(
                    part.parse::<u64>()
                        .map_err(|_| err(&format!("bad integer `{part}`")))?,
                ),
            }
        }
        let lookup = |key: &str, pos: usize| -> Option<u64> {
            named
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .or_else(|| positional.get(pos).copied())
        };
        match name {
            "chain" => Ok(FamilySpec::Chain {
                n: lookup("n", 0).ok_or_else(|| err("chain needs n"))?,
            }),
            "boolean" => {
                let n = lookup("n", 0).ok_or_else(|| err("boolean needs n"))?;
                Ok(FamilySpec::Boolean { n: n as u32 })
            }
            "product" => {
                if !named.is_empty() || positional.is_empty() {
                    return Err(err("product takes positional bounds r1,r2,..."));
                }
                Ok(FamilySpec::ProductOfChains {
                    bounds: positional.iter().map(|&r| r as u32).collect(),
                })
            }
            "nonpure" => Ok(FamilySpec::NonPure {
                m: lookup("m", 0).ok_or_else(|| err("nonpure needs m"))?,
            }),
            "nonlogconcave" => Ok(FamilySpec::NonLogConcave {
                n: lookup("n", 0).ok_or_else(|| err("nonlogconcave needs n"))?,
                m: lookup("m", 1).ok_or_else(|| err("nonlogconcave needs m"))?,
            }),
            "random" => Ok(FamilySpec::Random {
                seed: lookup("seed", 0).ok_or_else(|| err("random needs seed"))?,
                max_rank: lookup("max_rank", 1).ok_or_else(|| err("random needs max_rank"))?,
                max_width: lookup("max_width", 2).ok_or_else(|| err("random needs max_width"))?,
            }),
            other => Err(err(&format!("unknown family `{other}`"))),
        }
    }
}

fn check_cap(requested: usize) -> Result<(), FamilyError> {
    let cap = size_cap();
    if requested > cap {
        return Err(FamilyError::Capacity { requested, cap });
    }
    Ok(())
}

/// The chain poset of rank `n`, ranks `0..=n`.
pub fn gen_chain(n: u64) -> Result<(Poset, WeakRank), FamilyError> {
    if n < 1 {
        return Err(FamilyError::Parameter("chain needs n >= 1".into()));
    }
    check_cap(n as usize + 1)?;
    let ids: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let covers: Vec<(usize, usize)> = (0..n as usize).map(|i| (i, i + 1)).collect();
    let poset = Poset::from_indexed(ids, covers).expect("chain is a valid poset");
    Ok((poset, WeakRank::new((0..=n).collect())))
}

/// Subsets of `{1..n}` ordered by inclusion, rank = cardinality.
pub fn gen_boolean(n: u32) -> Result<(Poset, WeakRank), FamilyError> {
    if !(1..=6).contains(&n) {
        return Err(FamilyError::Parameter("boolean needs 1 <= n <= 6".into()));
    }
    let masks: Vec<u32> = (0..1u32 << n).collect();
    let ids: Vec<String> = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "e".to_string()
            } else {
                (1..=n).filter(|b| m >> (b - 1) & 1 == 1).map(|b| b.to_string()).collect()
            }
        })
        .collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for b in 0..n {
            if m >> b & 1 == 0 {
                covers.push((m as usize, (m | 1 << b) as usize));
            }
        }
    }
    let poset = Poset::from_indexed(ids, covers).expect("boolean lattice is a valid poset");
    let rank = WeakRank::new(masks.iter().map(|m| m.count_ones() as u64).collect());
    Ok((poset, rank))
}

/// Product of chains `C_{r_1} x ... x C_{r_k}` under the componentwise
/// order, rank = coordinate sum.
pub fn gen_product_of_chains(bounds: &[u32]) -> Result<(Poset, WeakRank), FamilyError> {
    if bounds.is_empty() || bounds.iter().any(|&r| r < 1) {
        return Err(FamilyError::Parameter("product needs bounds r_i >= 1".into()));
    }
    let mut size = 1usize;
    for &r in bounds {
        size = size
            .checked_mul(r as usize + 1)
            .ok_or_else(|| FamilyError::Parameter("product size overflows".into()))?;
    }
    check_cap(size)?;
    let points = crate::scd::grid_points(bounds);
    let ids: Vec<String> = points
        .iter()
        .map(|p| p.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("."))
        .collect();
    // index by mixed radix to find cover targets cheaply
    let mut radix = vec![1usize; bounds.len()];
    for i in (0..bounds.len().saturating_sub(1)).rev() {
        radix[i] = radix[i + 1] * (bounds[i + 1] as usize + 1);
    }
    let mut covers = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        for (c, &r) in bounds.iter().enumerate() {
            if p[c] < r {
                covers.push((idx, idx + radix[c]));
            }
        }
    }
    let rank = WeakRank::new(points.iter().map(crate::scd::grid_rank).collect());
    let poset = Poset::from_indexed(ids, covers).expect("chain product is a valid poset");
    Ok((poset, rank))
}

/// The weakly ranked (not ranked) poset whose SFY ideal has h-vector
/// `(1, m+3, 2)` and is not pure: `m` incomparable elements of weak rank 4
/// beside a four-step chain, joined below the top at weak rank 5.
pub fn gen_nonpure_counterexample(m: u64) -> Result<(Poset, WeakRank), FamilyError> {
    if m < 1 {
        return Err(FamilyError::Parameter("nonpure needs m >= 1".into()));
    }
    check_cap(m as usize + 6)?;
    let mut ids = vec!["bot".to_string()];
    let mut ranks = vec![0u64];
    for i in 1..=m {
        ids.push(format!("a{i}"));
        ranks.push(4);
    }
    for i in 1..=4u64 {
        ids.push(format!("b{i}"));
        ranks.push(i);
    }
    ids.push("top".to_string());
    ranks.push(5);

    let a = |i: u64| i as usize; // a_i at index i
    let b = |i: u64| (m + i) as usize; // b_i after the a block
    let top = (m + 5) as usize;
    let mut covers = Vec::new();
    for i in 1..=m {
        covers.push((0, a(i)));
        covers.push((a(i), top));
    }
    covers.push((0, b(1)));
    for i in 1..4 {
        covers.push((b(i), b(i + 1)));
    }
    covers.push((b(4), top));
    let poset = Poset::from_indexed(ids, covers).expect("valid counterexample poset");
    Ok((poset, WeakRank::new(ranks)))
}

/// The ranked family violating log-concavity for ranks above six: two
/// branches joined at bottom and top, the left one widened to `m^2` elements
/// at ranks 2, 4 and 6, the right one widened to `m^3` elements at rank 2.
pub fn gen_nonlogconcave_counterexample(n: u64, m: u64) -> Result<(Poset, WeakRank), FamilyError> {
    if n < 7 {
        return Err(FamilyError::Parameter("nonlogconcave needs n >= 7".into()));
    }
    if m < 1 {
        return Err(FamilyError::Parameter("nonlogconcave needs m >= 1".into()));
    }
    let m2 = (m * m) as usize;
    let m3 = (m * m * m) as usize;
    let requested = 2 + (n as usize - 1) + 3 * (m2 - 1) + (m3 - 1);
    check_cap(requested)?;

    let mut ids = vec!["bot".to_string()];
    let mut ranks = vec![0u64];
    let mut covers = Vec::new();
    let mut build_branch = |prefix: &str, wide: &dyn Fn(u64) -> usize| {
        let mut prev: Vec<usize> = vec![0];
        for r in 1..n {
            let width = wide(r);
            let mut level = Vec::with_capacity(width);
            for j in 1..=width {
                let id = if width == 1 {
                    format!("{prefix}{r}")
                } else {
                    format!("{prefix}{r}_{j}")
                };
                ids.push(id);
                ranks.push(r);
                level.push(ids.len() - 1);
            }
            for &u in &prev {
                for &v in &level {
                    covers.push((u, v));
                }
            }
            prev = level;
        }
        prev
    };
    let left_top = build_branch("a", &|r| if r == 2 || r == 4 || r == 6 { m2 } else { 1 });
    let right_top = build_branch("b", &|r| if r == 2 { m3 } else { 1 });
    ids.push("top".to_string());
    ranks.push(n);
    let top = ids.len() - 1;
    for u in left_top.into_iter().chain(right_top) {
        covers.push((u, top));
    }
    let poset = Poset::from_indexed(ids, covers).expect("valid counterexample poset");
    Ok((poset, WeakRank::new(ranks)))
}

/// Seeded random graded poset: a level per rank with random widths and
/// random bipartite covers between consecutive levels, repaired so that
/// every element lies on a bottom-top path. Level ranks are then mapped
/// through a random strictly increasing inflation bounded by `max_rank`,
/// which keeps the output weakly ranked and sometimes genuinely non-ranked.
pub fn gen_random_graded(
    seed: u64,
    max_rank: u64,
    max_width: u64,
) -> Result<(Poset, WeakRank), FamilyError> {
    if max_rank < 1 || max_width < 1 {
        return Err(FamilyError::Parameter(
            "random needs max_rank >= 1 and max_width >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levels = rng.gen_range(1..=max_rank);

    let mut widths = vec![1usize];
    for _ in 1..levels {
        widths.push(rng.gen_range(1..=max_width) as usize);
    }
    widths.push(1);
    let total: usize = widths.iter().sum();
    check_cap(total)?;

    // rank inflation: strictly increasing level ranks with top <= max_rank
    let top_rank = rng.gen_range(levels..=max_rank);
    let mut level_rank = vec![0u64];
    if levels > 1 {
        let mut interior = (1..top_rank).choose_multiple(&mut rng, levels as usize - 1);
        interior.sort_unstable();
        level_rank.extend(interior);
    }
    level_rank.push(top_rank);

    let mut ids = Vec::with_capacity(total);
    let mut ranks = Vec::with_capacity(total);
    let mut level_members: Vec<Vec<usize>> = Vec::with_capacity(widths.len());
    for (lvl, &w) in widths.iter().enumerate() {
        let mut members = Vec::with_capacity(w);
        for j in 0..w {
            let id = match (lvl, lvl == widths.len() - 1) {
                (0, _) => "bot".to_string(),
                (_, true) => "top".to_string(),
                _ => format!("n{lvl}_{j}"),
            };
            ids.push(id);
            ranks.push(level_rank[lvl]);
            members.push(ids.len() - 1);
        }
        level_members.push(members);
    }

    let mut edges = std::collections::BTreeSet::new();
    for w in level_members.windows(2) {
        for &u in &w[0] {
            for &v in &w[1] {
                if rng.gen_bool(0.5) {
                    edges.insert((u, v));
                }
            }
        }
    }
    // repair: everything needs a way down ...
    for w in level_members.windows(2) {
        for &v in &w[1] {
            if !w[0].iter().any(|&u| edges.contains(&(u, v))) {
                let u = w[0][rng.gen_range(0..w[0].len())];
                edges.insert((u, v));
            }
        }
    }
    // ... and a way up
    for w in level_members.windows(2) {
        for &u in &w[0] {
            if !w[1].iter().any(|&v| edges.contains(&(u, v))) {
                let v = w[1][rng.gen_range(0..w[1].len())];
                edges.insert((u, v));
            }
        }
    }

    let poset = Poset::from_indexed(ids, edges.into_iter().collect())
        .expect("repaired level graph is a valid poset");
    Ok((poset, WeakRank::new(ranks)))
}
