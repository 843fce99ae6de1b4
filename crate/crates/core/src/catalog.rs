//! Named reference posets: Boolean algebras, partition lattices, chains.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// The lattice of subsets of `{1..n}`. Element ids are the subset bitmasks,
/// with element `i` stored at bit `i - 1`.
pub fn boolean_algebra(n: usize) -> Poset {
    assert!(n < 20, "boolean_algebra({n}) is beyond desk scale");
    let m = 1usize << n;
    let ranks = (0..m).map(|s| s.count_ones() as usize).collect();
    let mut covers = Vec::new();
    for s in 0..m {
        for i in 0..n {
            if s & (1 << i) == 0 {
                covers.push((s, s | (1 << i)));
            }
        }
    }
    Poset::new(format!("B{n}"), ranks, &covers).expect("Boolean algebra is graded")
}

/// Id of the subset `{elems}` of `[n]` inside [`boolean_algebra`].
pub fn subset_id(elems: &[usize]) -> usize {
    elems
        .iter()
        .map(|&e| 1usize << (e - 1))
        .fold(0, |a, b| a | b)
}

/// The chain `0 < 1 < ... < n`.
pub fn chain_lattice(n: usize) -> Poset {
    let covers: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
    Poset::new(format!("chain{n}"), (0..=n).collect(), &covers).expect("chain is graded")
}

/// `0̂ < a, b < c, d < 1̂` with both `a, b` below both `c, d`: graded but not a
/// lattice, since `c` and `d` have two maximal common lower bounds.
pub fn butterfly() -> Poset {
    let covers = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 5),
        (4, 5),
    ];
    Poset::new("butterfly", vec![0, 1, 1, 2, 2, 3], &covers).expect("butterfly is graded")
}

/// Set partitions of `[n]` ordered by refinement.
pub fn partition_lattice(n: usize) -> Result<Poset> {
    partition_lattice_labelled(n).map(|(p, _)| p)
}

/// [`partition_lattice`] together with a block label per element, e.g.
/// `12|3|4`.
pub fn partition_lattice_labelled(n: usize) -> Result<(Poset, Vec<String>)> {
    if !(2..=6).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "partition lattice needs 2 <= n <= 6, got {n}"
        )));
    }
    // Restricted growth strings enumerate set partitions.
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        parts.push(rgs.clone());
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                break;
            }
            let max_prev = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= max_prev {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
        if i == 0 {
            break;
        }
    }
    let blocks = |p: &Vec<usize>| p.iter().max().unwrap() + 1;
    parts.sort_by(|a, b| blocks(b).cmp(&blocks(a)).then_with(|| a.cmp(b)));

    let ranks: Vec<usize> = parts.iter().map(|p| n - blocks(p)).collect();
    let refines = |fine: &Vec<usize>, coarse: &Vec<usize>| {
        (0..n).all(|i| (0..n).all(|j| fine[i] != fine[j] || coarse[i] == coarse[j]))
    };
    let mut covers = Vec::new();
    for (a, pa) in parts.iter().enumerate() {
        for (b, pb) in parts.iter().enumerate() {
            if ranks[b] == ranks[a] + 1 && refines(pa, pb) {
                covers.push((a, b));
            }
        }
    }
    let labels = parts
        .iter()
        .map(|p| {
            (0..blocks(p))
                .map(|blk| {
                    (0..n)
                        .filter(|&i| p[i] == blk)
                        .map(|i| (i + 1).to_string())
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    let poset = Poset::new(format!("Pi{n}"), ranks, &covers)?;
    Ok((poset, labels))
}

/// Resolves catalog names such as `B4`, `Pi4`, `chain3` or `butterfly`
/// (a leading `@` is accepted).
pub fn by_name(name: &str) -> Result<Poset> {
    let key = name.strip_prefix('@').unwrap_or(name);
    let num = |prefix: &str| {
        key.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
    };
    if key == "butterfly" {
        return Ok(butterfly());
    }
    if let Some(n) = num("chain") {
        return Ok(chain_lattice(n));
    }
    if let Some(n) = num("Pi") {
        return partition_lattice(n);
    }
    if let Some(n) = num("B") {
        if n <= 12 {
            return Ok(boolean_algebra(n));
        }
    }
    Err(Error::InvalidArgument(format!(
        "unknown catalog poset `{name}`"
    )))
}
