//! Canonical forms of graded posets and isomorphism testing.
//!
//! A poset is viewed level by level: each element of rank `k` records its
//! lower covers as positions in level `k - 1`. The canonical code is the
//! lexicographically least concatenation of these per-level blocks over all
//! within-level relabellings. Elements are first colored by iterated
//! (in-degree, out-degree) refinement, which is label-independent, so only
//! elements with equal color and equal lower-cover positions are ever
//! permuted against each other.

use std::cmp::Ordering;

use crate::poset::Poset;

/// A cover structure organised by levels; `levels[k][j]` lists the lower
/// covers of element `j` of level `k` as indices into level `k - 1`.
///
/// Partial structures (no top yet) are allowed, which lets the lattice
/// enumerator reject isomorphic prefixes before completing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leveled {
    pub levels: Vec<Vec<Vec<usize>>>,
}

/// Canonical code plus the relabelling that realises it:
/// `order[k][new_position] = old_index`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: Vec<u32>,
    pub order: Vec<Vec<usize>>,
}

impl Leveled {
    pub fn from_poset(p: &Poset) -> (Leveled, Vec<Vec<usize>>) {
        let ids: Vec<Vec<usize>> = (0..=p.rank()).map(|k| p.level(k)).collect();
        let mut pos = vec![0; p.element_count()];
        for level in &ids {
            for (j, &x) in level.iter().enumerate() {
                pos[x] = j;
            }
        }
        let levels = ids
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|&x| {
                        let mut l: Vec<usize> = p.lower_covers(x).iter().map(|&y| pos[y]).collect();
                        l.sort_unstable();
                        l
                    })
                    .collect()
            })
            .collect();
        (Leveled { levels }, ids)
    }

    fn upper(&self) -> Vec<Vec<Vec<usize>>> {
        let mut up: Vec<Vec<Vec<usize>>> = self
            .levels
            .iter()
            .map(|l| vec![Vec::new(); l.len()])
            .collect();
        for k in 1..self.levels.len() {
            for (j, lows) in self.levels[k].iter().enumerate() {
                for &i in lows {
                    up[k - 1][i].push(j);
                }
            }
        }
        up
    }

    /// Stable coloring by iterated neighbourhood refinement, starting from
    /// (level, in-degree, out-degree).
    fn colors(&self) -> Vec<Vec<u32>> {
        let up = self.upper();
        let mut sigs: Vec<Vec<Vec<u32>>> = self
            .levels
            .iter()
            .enumerate()
            .map(|(k, l)| {
                l.iter()
                    .enumerate()
                    .map(|(j, lows)| vec![k as u32, lows.len() as u32, up[k][j].len() as u32])
                    .collect()
            })
            .collect();
        let mut colors = relabel(&sigs);
        let mut classes = count_classes(&colors);
        loop {
            for k in 0..self.levels.len() {
                for j in 0..self.levels[k].len() {
                    let mut lower: Vec<u32> = self.levels[k][j]
                        .iter()
                        .map(|&i| colors[k - 1][i])
                        .collect();
                    let mut upper: Vec<u32> = up[k][j].iter().map(|&i| colors[k + 1][i]).collect();
                    lower.sort_unstable();
                    upper.sort_unstable();
                    let mut s = vec![colors[k][j], lower.len() as u32];
                    s.extend(lower);
                    s.extend(upper);
                    sigs[k][j] = s;
                }
            }
            let next = relabel(&sigs);
            let next_classes = count_classes(&next);
            colors = next;
            if next_classes == classes {
                break;
            }
            classes = next_classes;
        }
        colors
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let colors = self.colors();
        let mut header = vec![self.levels.len() as u32];
        header.extend(self.levels.iter().map(|l| l.len() as u32));
        let mut search = Search {
            leveled: self,
            colors: &colors,
            best: None,
        };
        let mut orders = Vec::new();
        search.descend(0, &[], header, &mut orders);
        search.best.expect("search visits at least one leaf")
    }
}

fn relabel(sigs: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let mut all: Vec<&Vec<u32>> = sigs.iter().flatten().collect();
    all.sort();
    all.dedup();
    sigs.iter()
        .map(|l| {
            l.iter()
                .map(|s| all.binary_search(&s).unwrap() as u32)
                .collect()
        })
        .collect()
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct Search<'a> {
    leveled: &'a Leveled,
    colors: &'a [Vec<u32>],
    best: Option<CanonicalForm>,
}

impl Search<'_> {
    fn descend(
        &mut self,
        k: usize,
        prev_pos: &[usize],
        prefix: Vec<u32>,
        orders: &mut Vec<Vec<usize>>,
    ) {
        let levels = &self.leveled.levels;
        if k == levels.len() {
            let better = match &self.best {
                None => true,
                Some(b) => prefix < b.code,
            };
            if better {
                self.best = Some(CanonicalForm {
                    code: prefix,
                    order: orders.clone(),
                });
            }
            return;
        }
        let mut keyed: Vec<(Vec<u32>, usize)> = levels[k]
            .iter()
            .enumerate()
            .map(|(j, lows)| {
                let mut key = vec![self.colors[k][j], lows.len() as u32];
                let mut p: Vec<u32> = lows.iter().map(|&i| prev_pos[i] as u32).collect();
                p.sort_unstable();
                key.extend(p);
                (key, j)
            })
            .collect();
        keyed.sort();
        let mut code = prefix;
        for (key, _) in &keyed {
            code.extend_from_slice(key);
        }
        if let Some(b) = &self.best {
            if code.as_slice().cmp(&b.code[..code.len()]) == Ordering::Greater {
                return;
            }
        }
        let groups: Vec<Vec<usize>> = keyed
            .chunk_by(|a, b| a.0 == b.0)
            .map(|g| g.iter().map(|(_, j)| *j).collect())
            .collect();
        let mut arrangement = Vec::with_capacity(keyed.len());
        self.arrange(k, &groups, 0, &mut arrangement, &code, orders);
    }

    fn arrange(
        &mut self,
        k: usize,
        groups: &[Vec<usize>],
        g: usize,
        arrangement: &mut Vec<usize>,
        code: &[u32],
        orders: &mut Vec<Vec<usize>>,
    ) {
        if g == groups.len() {
            let mut pos = vec![0; arrangement.len()];
            for (new, &old) in arrangement.iter().enumerate() {
                pos[old] = new;
            }
            orders.push(arrangement.clone());
            self.descend(k + 1, &pos, code.to_vec(), orders);
            orders.pop();
            return;
        }
        let mut group = groups[g].clone();
        for_each_permutation(&mut group, 0, &mut |perm| {
            let base = arrangement.len();
            arrangement.extend_from_slice(perm);
            self.arrange(k, groups, g + 1, arrangement, code, orders);
            arrangement.truncate(base);
        });
    }
}

fn for_each_permutation(items: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start + 1 >= items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        for_each_permutation(items, start + 1, f);
        items.swap(start, i);
    }
}

/// Canonical code of a poset.
pub fn canonical_code(p: &Poset) -> Vec<u32> {
    Leveled::from_poset(p).0.canonical_form().code
}

/// Relabels `p` into canonical element order: by rank, then by canonical
/// position within the rank.
pub fn canonical_poset(p: &Poset) -> Poset {
    let (leveled, ids) = Leveled::from_poset(p);
    let form = leveled.canonical_form();
    let mut new_id = vec![0; p.element_count()];
    let mut next = 0;
    for (k, order) in form.order.iter().enumerate() {
        for &old in order {
            new_id[ids[k][old]] = next;
            next += 1;
        }
    }
    let mut ranks = vec![0; p.element_count()];
    for x in 0..p.element_count() {
        ranks[new_id[x]] = p.rank_of(x);
    }
    let covers: Vec<(usize, usize)> = p.covers().map(|(a, b)| (new_id[a], new_id[b])).collect();
    Poset::new(p.name(), ranks, &covers).expect("relabelling preserves validity")
}

/// Whether a rank-preserving order isomorphism `p → q` exists.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.element_count() != q.element_count()
        || p.level_sizes() != q.level_sizes()
        || p.cover_count() != q.cover_count()
    {
        return false;
    }
    canonical_code(p) == canonical_code(q)
}
