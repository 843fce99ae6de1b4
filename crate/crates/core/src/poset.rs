//! Finite graded posets with a minimum and a maximum element.

use crate::error::{Error, Result};
use crate::subset::ElementSubset;

/// A finite graded poset with `0̂` and `1̂`, stored as a cover relation.
///
/// Element ids are dense integers `0..element_count()`. Every cover `a ⋖ b`
/// raises the rank by exactly one, which makes all maximal chains the same
/// length. Values are immutable once constructed; the full order relation is
/// precomputed as bitmask rows.
#[derive(Clone, Debug)]
pub struct Poset {
    name: String,
    ranks: Vec<usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    rank: usize,
    up: Vec<ElementSubset>,
    down: Vec<ElementSubset>,
}

impl PartialEq for Poset {
    /// Structural equality; the display name is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks && self.upper == other.upper
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from per-element ranks and cover pairs `(a, b)` meaning
    /// `a ⋖ b`, validating every structural invariant.
    pub fn new(
        name: impl Into<String>,
        ranks: Vec<usize>,
        covers: &[(usize, usize)],
    ) -> Result<Poset> {
        let m = ranks.len();
        if m == 0 {
            return Err(Error::InvalidPoset(
                "a poset needs at least one element".into(),
            ));
        }
        let mut upper = vec![Vec::new(); m];
        let mut lower = vec![Vec::new(); m];
        for &(a, b) in covers {
            if a >= m || b >= m {
                return Err(Error::InvalidPoset(format!(
                    "cover {a} {b} names an unknown element"
                )));
            }
            if ranks[b] != ranks[a] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover {a} {b} joins ranks {} and {}; covers must raise rank by one",
                    ranks[a], ranks[b]
                )));
            }
            if upper[a].contains(&b) {
                return Err(Error::InvalidPoset(format!("duplicate cover {a} {b}")));
            }
            upper[a].push(b);
            lower[b].push(a);
        }
        for v in upper.iter_mut().chain(lower.iter_mut()) {
            v.sort_unstable();
        }

        let rank = *ranks.iter().max().unwrap();
        let bottoms: Vec<usize> = (0..m).filter(|&x| ranks[x] == 0).collect();
        let tops: Vec<usize> = (0..m).filter(|&x| ranks[x] == rank).collect();
        if bottoms.len() != 1 {
            return Err(Error::InvalidPoset(format!(
                "expected one rank-0 element, found {}",
                bottoms.len()
            )));
        }
        if tops.len() != 1 {
            return Err(Error::InvalidPoset(format!(
                "expected one rank-{rank} element, found {}",
                tops.len()
            )));
        }
        let (bottom, top) = (bottoms[0], tops[0]);
        for x in 0..m {
            if x != top && upper[x].is_empty() {
                return Err(Error::InvalidPoset(format!(
                    "element {x} has no upper cover"
                )));
            }
            if x != bottom && lower[x].is_empty() {
                return Err(Error::InvalidPoset(format!(
                    "element {x} has no lower cover"
                )));
            }
        }

        // Order relation by rank sweeps.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&x| ranks[x]);
        let mut down: Vec<ElementSubset> =
            (0..m).map(|x| ElementSubset::from_ids(m, [x])).collect();
        for &x in &order {
            for &l in &lower[x] {
                let d = down[l].clone();
                down[x].union_with(&d);
            }
        }
        let mut up: Vec<ElementSubset> = (0..m).map(|x| ElementSubset::from_ids(m, [x])).collect();
        for &x in order.iter().rev() {
            for &u in &upper[x] {
                let s = up[u].clone();
                up[x].union_with(&s);
            }
        }

        Ok(Poset {
            name: name.into(),
            ranks,
            upper,
            lower,
            bottom,
            top,
            rank,
            up,
            down,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Poset {
        self.name = name.into();
        self
    }

    pub fn element_count(&self) -> usize {
        self.ranks.len()
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// All cover pairs `(a, b)` in ascending order.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(a, us)| us.iter().map(move |&b| (a, b)))
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    pub(crate) fn check_id(&self, x: usize) -> Result<()> {
        if x < self.element_count() {
            Ok(())
        } else {
            Err(Error::UnknownElement(x))
        }
    }

    /// `x ≤ y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// The principal dual order ideal `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> &ElementSubset {
        &self.up[x]
    }

    /// The principal order ideal `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &ElementSubset {
        &self.down[x]
    }

    /// Elements of rank `k` in ascending id order.
    pub fn level(&self, k: usize) -> Vec<usize> {
        (0..self.element_count())
            .filter(|&x| self.ranks[x] == k)
            .collect()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.rank + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn atoms(&self) -> Vec<usize> {
        if self.rank == 0 {
            return Vec::new();
        }
        self.upper[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        if self.rank == 0 {
            return Vec::new();
        }
        self.lower[self.top].clone()
    }

    /// Greatest lower bound of `x` and `y`, or `None` when the maximal common
    /// lower bounds are not unique.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let common = self.down[x].intersection(&self.down[y]);
        unique_extremal(&common, |a, b| self.lt(a, b))
    }

    /// Least upper bound of `x` and `y`, or `None` when not unique.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let common = self.up[x].intersection(&self.up[y]);
        unique_extremal(&common, |a, b| self.lt(b, a))
    }

    /// First pair (in id order) without a meet, if any.
    pub fn lattice_witness(&self) -> Option<(usize, usize)> {
        let m = self.element_count();
        (0..m)
            .flat_map(|x| (x + 1..m).map(move |y| (x, y)))
            .find(|&(x, y)| self.meet(x, y).is_none())
    }

    /// A finite poset with a top in which all pairwise meets exist is a lattice.
    pub fn is_lattice(&self) -> bool {
        self.lattice_witness().is_none()
    }

    /// Subposet induced on `keep`, relabelled densely in ascending id order.
    ///
    /// Covers of the result are computed from the restricted order, so the
    /// result is validated like any other poset.
    pub fn induced(&self, keep: &ElementSubset, name: impl Into<String>) -> Result<Poset> {
        let ids: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.element_count()];
        for (i, &x) in ids.iter().enumerate() {
            index[x] = i;
        }
        let mut covers = Vec::new();
        for &x in &ids {
            for &y in &ids {
                if !self.lt(x, y) {
                    continue;
                }
                let between = ids
                    .iter()
                    .any(|&z| z != x && z != y && self.lt(x, z) && self.lt(z, y));
                if !between {
                    covers.push((index[x], index[y]));
                }
            }
        }
        // Ranks are re-derived from the minimum so intervals start at zero.
        let base = ids.iter().map(|&x| self.ranks[x]).min().unwrap_or(0);
        let ranks = ids.iter().map(|&x| self.ranks[x] - base).collect();
        Poset::new(name, ranks, &covers)
    }

    /// The closed interval `[a, b]`, re-ranked so that `a` has rank 0.
    pub fn interval(&self, a: usize, b: usize) -> Result<Poset> {
        self.check_id(a)?;
        self.check_id(b)?;
        if !self.leq(a, b) {
            return Err(Error::NotComparable { a, b });
        }
        let keep = self.up[a].intersection(&self.down[b]);
        self.induced(&keep, format!("{}[{a},{b}]", self.name))
    }

    /// The order dual: covers reversed, ranks mirrored, ids preserved.
    pub fn dual(&self) -> Poset {
        let ranks = self.ranks.iter().map(|&r| self.rank - r).collect();
        let covers: Vec<(usize, usize)> = self.covers().map(|(a, b)| (b, a)).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Poset::new(name, ranks, &covers).expect("dual of a valid poset is valid")
    }

    /// Whether a set is closed downward.
    pub fn is_order_ideal(&self, s: &ElementSubset) -> bool {
        s.iter().all(|x| self.down[x].is_subset_of(s))
    }

    /// Whether a set is closed upward.
    pub fn is_dual_order_ideal(&self, s: &ElementSubset) -> bool {
        s.iter().all(|x| self.up[x].is_subset_of(s))
    }

    /// Order ideal generated by `gens`.
    pub fn ideal_generated_by(&self, gens: impl IntoIterator<Item = usize>) -> ElementSubset {
        let mut s = ElementSubset::empty(self.element_count());
        for g in gens {
            s.union_with(&self.down[g]);
        }
        s
    }

    /// Dual order ideal generated by `gens`.
    pub fn dual_ideal_generated_by(&self, gens: impl IntoIterator<Item = usize>) -> ElementSubset {
        let mut s = ElementSubset::empty(self.element_count());
        for g in gens {
            s.union_with(&self.up[g]);
        }
        s
    }

    /// Maximal elements of a subset.
    pub fn maximal_elements(&self, s: &ElementSubset) -> Vec<usize> {
        s.iter()
            .filter(|&x| !s.iter().any(|y| self.lt(x, y)))
            .collect()
    }
}

fn unique_extremal(set: &ElementSubset, below: impl Fn(usize, usize) -> bool) -> Option<usize> {
    let mut found = None;
    for z in set.iter() {
        if set.iter().any(|w| below(z, w)) {
            continue;
        }
        if found.is_some() {
            return None;
        }
        found = Some(z);
    }
    found
}
