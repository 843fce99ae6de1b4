//! Isomorph-free enumeration of small graded lattices.
//!
//! Lattices are grown level by level. A new level is a multiset of nonempty
//! lower-cover sets over the previous level, generated in ascending bitmask
//! order. After each completed level the partial structure is reduced to its
//! canonical form and duplicates are dropped, so every isomorphism class of
//! prefix is extended once. In lattice mode a prefix is abandoned as soon as
//! two of its elements lack a meet, since adding higher levels cannot repair
//! that.

use std::collections::HashSet;

use crate::canon::Leveled;
use crate::complex::CoefficientSpec;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::ElementSubset;
use crate::topology::{has_top_homology, is_cohen_macaulay};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// What to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub rank: usize,
    /// Upper bounds on the number of elements of rank `1..rank`.
    pub level_bounds: Vec<usize>,
    pub lattices_only: bool,
    pub top_homology_only: bool,
    pub cm_only: bool,
    pub coefficients: CoefficientSpec,
    /// Ceiling on candidate levels examined.
    pub budget: u64,
}

impl CorpusSpec {
    pub fn new(rank: usize, level_bounds: Vec<usize>) -> Result<CorpusSpec> {
        let spec = CorpusSpec {
            rank,
            level_bounds,
            lattices_only: true,
            top_homology_only: false,
            cm_only: false,
            coefficients: CoefficientSpec::Rationals,
            budget: DEFAULT_BUDGET,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Same bound on every intermediate level.
    pub fn uniform(rank: usize, max_level: usize) -> Result<CorpusSpec> {
        CorpusSpec::new(rank, vec![max_level; rank.saturating_sub(1)])
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::InvalidArgument(
                "corpus rank must be at least 1".into(),
            ));
        }
        if self.level_bounds.len() != self.rank - 1 {
            return Err(Error::InvalidArgument(format!(
                "rank {} needs {} level bounds, got {}",
                self.rank,
                self.rank - 1,
                self.level_bounds.len()
            )));
        }
        if let Some(&b) = self.level_bounds.iter().find(|&&b| b == 0 || b > 16) {
            return Err(Error::InvalidArgument(format!(
                "level bound {b} must lie in 1..=16"
            )));
        }
        Ok(())
    }

    /// Parses `rank=3,max-level=4`, optionally with `levels=3:4`,
    /// `filter=top-homology+cm`, `lattices-only=false`, `budget=N`,
    /// `coeff=fp:2`.
    pub fn parse(s: &str) -> Result<CorpusSpec> {
        let mut rank = None;
        let mut max_level = None;
        let mut levels: Option<Vec<usize>> = None;
        let mut filters: Vec<String> = Vec::new();
        let mut lattices_only = true;
        let mut budget = DEFAULT_BUDGET;
        let mut coefficients = CoefficientSpec::Rationals;
        let bad = |what: &str| Error::InvalidArgument(format!("bad corpus spec field `{what}`"));
        for field in s.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field.split_once('=').ok_or_else(|| bad(field))?;
            match key {
                "rank" => rank = Some(value.parse::<usize>().map_err(|_| bad(field))?),
                "max-level" => max_level = Some(value.parse::<usize>().map_err(|_| bad(field))?),
                "levels" => {
                    levels = Some(
                        value
                            .split(':')
                            .map(|v| v.parse::<usize>().map_err(|_| bad(field)))
                            .collect::<Result<_>>()?,
                    )
                }
                "filter" => filters.extend(value.split('+').map(str::to_string)),
                "lattices-only" => lattices_only = value.parse::<bool>().map_err(|_| bad(field))?,
                "budget" => budget = value.parse::<u64>().map_err(|_| bad(field))?,
                "coeff" => coefficients = value.parse()?,
                _ => return Err(bad(field)),
            }
        }
        let rank =
            rank.ok_or_else(|| Error::InvalidArgument("corpus spec needs rank=<n>".into()))?;
        let bounds = match (levels, max_level) {
            (Some(l), _) => l,
            (None, Some(m)) => vec![m; rank.saturating_sub(1)],
            (None, None) => {
                return Err(Error::InvalidArgument(
                    "corpus spec needs max-level or levels".into(),
                ))
            }
        };
        let mut spec = CorpusSpec::new(rank, bounds)?;
        spec.lattices_only = lattices_only;
        spec.budget = budget;
        spec.coefficients = coefficients;
        for f in filters {
            match f.as_str() {
                "top-homology" => spec.top_homology_only = true,
                "cm" => spec.cm_only = true,
                _ => return Err(Error::InvalidArgument(format!("unknown filter `{f}`"))),
            }
        }
        Ok(spec)
    }
}

/// Result of an enumeration run.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub posets: Vec<Poset>,
    /// Candidate levels examined.
    pub nodes: u64,
    /// `false` when the budget ran out; `posets` then holds what was found.
    pub complete: bool,
}

impl Enumeration {
    pub fn into_result(self) -> Result<Vec<Poset>> {
        if self.complete {
            Ok(self.posets)
        } else {
            Err(Error::BudgetExceeded {
                budget: self.nodes,
                found: self.posets.len(),
            })
        }
    }
}

struct OutOfBudget;

/// One representative per isomorphism class of graded posets (lattices
/// unless disabled) of the given rank and level bounds that pass the
/// filters. Output order is deterministic; posets are named
/// `<rank>-<index>` with 1-based indices.
pub fn enumerate_graded_lattices(spec: &CorpusSpec) -> Result<Enumeration> {
    spec.validate()?;
    let mut nodes = 0u64;
    let mut posets = Vec::new();
    let mut complete = true;
    'sizes: for sizes in level_size_vectors(&spec.level_bounds) {
        let mut partials = vec![Leveled {
            levels: vec![vec![Vec::new()]],
        }];
        for &size in &sizes {
            match extend_level(&partials, size, spec.lattices_only, spec.budget, &mut nodes) {
                Ok(next) => partials = next,
                Err(OutOfBudget) => {
                    complete = false;
                    break 'sizes;
                }
            }
        }
        for partial in partials {
            let poset = close_with_top(&partial, format!("{}-{}", spec.rank, posets.len() + 1));
            if spec.top_homology_only && !has_top_homology(&poset, spec.coefficients) {
                continue;
            }
            if spec.cm_only && !is_cohen_macaulay(&poset, spec.coefficients) {
                continue;
            }
            posets.push(poset);
        }
    }
    Ok(Enumeration {
        posets,
        nodes,
        complete,
    })
}

fn level_size_vectors(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (1..=b).map(move |s| {
                    let mut v = prefix.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

fn extend_level(
    partials: &[Leveled],
    size: usize,
    lattices_only: bool,
    budget: u64,
    nodes: &mut u64,
) -> std::result::Result<Vec<Leveled>, OutOfBudget> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut next = Vec::new();
    for partial in partials {
        let prev = partial.levels.last().unwrap().len();
        let full: u64 = (1 << prev) - 1;
        let mut failed = false;
        for_each_multiset(full, size, &mut |masks| {
            if failed {
                return;
            }
            *nodes += 1;
            if *nodes > budget {
                failed = true;
                return;
            }
            if masks.iter().fold(0, |a, m| a | m) != full {
                return;
            }
            let mut cand = partial.clone();
            cand.levels.push(
                masks
                    .iter()
                    .map(|&m| (0..prev).filter(|&i| m >> i & 1 == 1).collect())
                    .collect(),
            );
            if lattices_only && !top_level_meets_exist(&cand) {
                return;
            }
            let form = cand.canonical_form();
            if seen.insert(form.code.clone()) {
                next.push(relabel(&cand, &form.order));
            }
        });
        if failed {
            return Err(OutOfBudget);
        }
    }
    Ok(next)
}

/// Calls `f` on every nondecreasing sequence of `len` nonempty submasks of
/// `full`.
fn for_each_multiset(full: u64, len: usize, f: &mut dyn FnMut(&[u64])) {
    fn rec(full: u64, len: usize, start: u64, acc: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        if acc.len() == len {
            f(acc);
            return;
        }
        for m in start..=full {
            acc.push(m);
            rec(full, len, m, acc, f);
            acc.pop();
        }
    }
    rec(full, len, 1, &mut Vec::with_capacity(len), f);
}

fn relabel(l: &Leveled, order: &[Vec<usize>]) -> Leveled {
    let mut levels = Vec::with_capacity(l.levels.len());
    let mut prev_pos: Vec<usize> = Vec::new();
    for (k, level) in l.levels.iter().enumerate() {
        let mut pos = vec![0; level.len()];
        for (new, &old) in order[k].iter().enumerate() {
            pos[old] = new;
        }
        levels.push(
            order[k]
                .iter()
                .map(|&old| {
                    let mut lows: Vec<usize> = level[old].iter().map(|&i| prev_pos[i]).collect();
                    lows.sort_unstable();
                    lows
                })
                .collect(),
        );
        prev_pos = pos;
    }
    Leveled { levels }
}

/// Down-sets of every element of a leveled structure, with elements
/// numbered level by level.
fn down_sets(l: &Leveled) -> (Vec<usize>, Vec<ElementSubset>) {
    let mut offsets = Vec::with_capacity(l.levels.len());
    let mut total = 0;
    for level in &l.levels {
        offsets.push(total);
        total += level.len();
    }
    let mut down: Vec<ElementSubset> = Vec::with_capacity(total);
    for (k, level) in l.levels.iter().enumerate() {
        for (j, lows) in level.iter().enumerate() {
            let mut s = ElementSubset::from_ids(total, [offsets[k] + j]);
            for &i in lows {
                let d = down[offsets[k - 1] + i].clone();
                s.union_with(&d);
            }
            down.push(s);
        }
    }
    (offsets, down)
}

/// Meets exist for every pair involving the newest level.
fn top_level_meets_exist(l: &Leveled) -> bool {
    let (offsets, down) = down_sets(l);
    let k = l.levels.len() - 1;
    let total = down.len();
    for x in offsets[k]..total {
        for y in 0..x {
            let common = down[x].intersection(&down[y]);
            let maximal = common
                .iter()
                .filter(|&z| !common.iter().any(|w| w != z && down[w].contains(z)))
                .count();
            if maximal != 1 {
                return false;
            }
        }
    }
    true
}

fn close_with_top(l: &Leveled, name: String) -> Poset {
    let mut ranks = Vec::new();
    let mut covers = Vec::new();
    let mut offsets = Vec::new();
    for (k, level) in l.levels.iter().enumerate() {
        offsets.push(ranks.len());
        for lows in level {
            let id = ranks.len();
            ranks.push(k);
            covers.extend(lows.iter().map(|&i| (offsets[k - 1] + i, id)));
        }
    }
    let top = ranks.len();
    let last = l.levels.len() - 1;
    ranks.push(l.levels.len());
    covers.extend((0..l.levels[last].len()).map(|j| (offsets[last] + j, top)));
    Poset::new(name, ranks, &covers).expect("enumerated structures are graded")
}
