//! Line-oriented text format for posets.
//!
//! ```text
//! poset B1
//! rank 1
//! elements 2
//! elem 0 0
//! elem 1 1
//! cover 0 1
//! ```
//!
//! `#` starts a comment. Element lines may come in any order, as may cover
//! lines, but all element lines precede the first cover line.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::poset::Poset;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Serializes a poset. Element lines are in id order and covers ascending,
/// so serialization of a parsed file is canonical.
pub fn to_text(p: &Poset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "poset {}", p.name());
    let _ = writeln!(out, "rank {}", p.rank());
    let _ = writeln!(out, "elements {}", p.element_count());
    for x in 0..p.element_count() {
        let _ = writeln!(out, "elem {x} {}", p.rank_of(x));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "cover {a} {b}");
    }
    out
}

/// Parses the text format, reporting errors with 1-based line numbers.
pub fn parse(text: &str) -> Result<Poset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut header = |key: &str| -> Result<(usize, String)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("missing `{key}` line")))?;
        let rest = line
            .strip_prefix(key)
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_err(no, format!("expected `{key} ...`, found `{line}`")))?;
        Ok((no, rest.trim().to_string()))
    };
    let (_, name) = header("poset")?;
    let (rank_line, rank_s) = header("rank")?;
    let rank: usize = rank_s
        .parse()
        .map_err(|_| parse_err(rank_line, format!("bad rank `{rank_s}`")))?;
    let (count_line, count_s) = header("elements")?;
    let m: usize = count_s
        .parse()
        .map_err(|_| parse_err(count_line, format!("bad element count `{count_s}`")))?;
    if m == 0 {
        return Err(parse_err(count_line, "element count must be positive"));
    }

    let mut ranks: Vec<Option<usize>> = vec![None; m];
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut seen_cover = std::collections::HashSet::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let ints = |n: usize| -> Result<Vec<usize>> {
            if fields.len() != n + 1 {
                return Err(parse_err(no, format!("`{}` takes {n} integers", fields[0])));
            }
            fields[1..]
                .iter()
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| parse_err(no, format!("bad integer `{f}`")))
                })
                .collect()
        };
        match fields[0] {
            "elem" => {
                if !covers.is_empty() {
                    return Err(parse_err(no, "elem lines must precede cover lines"));
                }
                let v = ints(2)?;
                let (id, r) = (v[0], v[1]);
                if id >= m {
                    return Err(parse_err(
                        no,
                        format!("element id {id} out of range 0..{m}"),
                    ));
                }
                if r > rank {
                    return Err(parse_err(
                        no,
                        format!("element {id} has rank {r} above poset rank {rank}"),
                    ));
                }
                if ranks[id].replace(r).is_some() {
                    return Err(parse_err(no, format!("element {id} declared twice")));
                }
            }
            "cover" => {
                let v = ints(2)?;
                let (a, b) = (v[0], v[1]);
                let ra = ranks.get(a).copied().flatten();
                let rb = ranks.get(b).copied().flatten();
                let (ra, rb) = match (ra, rb) {
                    (Some(ra), Some(rb)) => (ra, rb),
                    _ => {
                        return Err(parse_err(
                            no,
                            format!("cover {a} {b} names an undeclared element"),
                        ))
                    }
                };
                if rb != ra + 1 {
                    return Err(parse_err(
                        no,
                        format!("cover {a} {b} joins ranks {ra} and {rb}; covers must raise rank by one"),
                    ));
                }
                if !seen_cover.insert((a, b)) {
                    return Err(parse_err(no, format!("duplicate cover {a} {b}")));
                }
                covers.push((a, b));
            }
            other => return Err(parse_err(no, format!("unknown directive `{other}`"))),
        }
    }
    let ranks: Vec<usize> = ranks
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| parse_err(count_line, format!("element {i} never declared"))))
        .collect::<Result<_>>()?;
    let p = Poset::new(name, ranks, &covers)?;
    if p.rank() != rank {
        return Err(Error::InvalidPoset(format!(
            "declared rank {rank} but top element has rank {}",
            p.rank()
        )));
    }
    Ok(p)
}

pub fn read_file(path: &Path) -> Result<Poset> {
    let text = std::fs::read_to_string(path)?;
    parse(&text)
}

pub fn write_file(path: &Path, p: &Poset) -> Result<()> {
    std::fs::write(path, to_text(p))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn roundtrip_catalog() {
        for p in [
            catalog::boolean_algebra(3),
            catalog::partition_lattice(4).unwrap(),
            catalog::butterfly(),
        ] {
            let text = to_text(&p);
            let q = parse(&text).unwrap();
            assert_eq!(q, p);
            assert_eq!(to_text(&q), text);
        }
    }

    #[test]
    fn comments_and_shuffled_lines() {
        let text = "# a diamond\nposet d\nrank 2\nelements 4\nelem 3 2\nelem 0 0 # bottom\nelem 2 1\nelem 1 1\n\
                    cover 2 3\ncover 0 1\ncover 1 3\ncover 0 2\n";
        let p = parse(text).unwrap();
        assert_eq!(p.atoms(), vec![1, 2]);
        assert_eq!(to_text(&p), to_text(&parse(&to_text(&p)).unwrap()));
    }

    #[test]
    fn rank_gap_names_cover_line() {
        let text =
            "poset bad\nrank 2\nelements 3\nelem 0 0\nelem 1 1\nelem 2 2\ncover 0 1\ncover 0 2\n";
        match parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 8);
                assert!(message.contains("cover 0 2"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_graded_and_missing_elements() {
        let missing = "poset x\nrank 1\nelements 3\nelem 0 0\nelem 1 1\ncover 0 1\n";
        assert!(matches!(parse(missing), Err(Error::Parse { .. })));
        let two_tops =
            "poset x\nrank 1\nelements 3\nelem 0 0\nelem 1 1\nelem 2 1\ncover 0 1\ncover 0 2\n";
        assert!(matches!(parse(two_tops), Err(Error::InvalidPoset(_))));
        assert!(parse("rank 1\n").is_err());
    }
}
