//! Order complexes, Möbius function, Cohen-Macaulay testing and the
//! good/bad classification of lattice elements.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::complex::{CoefficientSpec, HomologyProfile, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::ElementSubset;

/// Which part of a poset an order complex is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexRange {
    /// Everything except `0̂` and `1̂`.
    Proper,
    /// The open interval `(a, b)`.
    Open(usize, usize),
    /// The half-open interval `(a, b]`.
    HalfOpen(usize, usize),
}

/// Elements of `p` covered by `range`.
pub fn range_elements(p: &Poset, range: ComplexRange) -> Result<ElementSubset> {
    let interval = |a: usize, b: usize| -> Result<ElementSubset> {
        p.check_id(a)?;
        p.check_id(b)?;
        if !p.leq(a, b) {
            return Err(Error::NotComparable { a, b });
        }
        Ok(p.up_set(a).intersection(p.down_set(b)))
    };
    Ok(match range {
        ComplexRange::Proper => {
            let mut s = ElementSubset::full(p.element_count());
            s.remove(p.bottom());
            s.remove(p.top());
            s
        }
        ComplexRange::Open(a, b) => {
            let mut s = interval(a, b)?;
            s.remove(a);
            s.remove(b);
            s
        }
        ComplexRange::HalfOpen(a, b) => {
            let mut s = interval(a, b)?;
            s.remove(a);
            s
        }
    })
}

/// The order complex of `range`. Vertex `i` is the `i`-th element of
/// [`range_elements`] in ascending id order.
pub fn order_complex(p: &Poset, range: ComplexRange) -> Result<SimplicialComplex> {
    Ok(order_complex_of_subset(p, &range_elements(p, range)?))
}

/// The order complex of the subposet induced on `elements`: every chain is a
/// face.
pub fn order_complex_of_subset(p: &Poset, elements: &ElementSubset) -> SimplicialComplex {
    let ids: Vec<usize> = elements.iter().collect();
    let v = ids.len();
    let above: Vec<Vec<usize>> = (0..v)
        .map(|i| (0..v).filter(|&j| p.lt(ids[i], ids[j])).collect())
        .collect();
    let mut faces = Vec::new();
    let mut chain = Vec::new();
    for start in 0..v {
        extend_chains(start, &above, &mut chain, &mut faces);
    }
    SimplicialComplex::from_closed_faces(v, faces)
}

fn extend_chains(
    i: usize,
    above: &[Vec<usize>],
    chain: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    chain.push(i);
    let mut face = chain.clone();
    face.sort_unstable();
    out.push(face);
    for &j in &above[i] {
        extend_chains(j, above, chain, out);
    }
    chain.pop();
}

/// `μ(a, z)` for every `z ≥ a`; `None` elsewhere.
pub fn mobius_row(p: &Poset, a: usize) -> Vec<Option<BigInt>> {
    let mut row: Vec<Option<BigInt>> = vec![None; p.element_count()];
    let mut above: Vec<usize> = p.up_set(a).iter().collect();
    above.sort_by_key(|&z| p.rank_of(z));
    for &z in &above {
        let value = if z == a {
            BigInt::one()
        } else {
            let below: BigInt = p
                .down_set(z)
                .iter()
                .filter(|&w| w != z)
                .filter_map(|w| row[w].as_ref())
                .sum();
            -below
        };
        row[z] = Some(value);
    }
    row
}

/// `μ(a, b)` by the defining recursion.
pub fn mobius(p: &Poset, a: usize, b: usize) -> Result<BigInt> {
    p.check_id(a)?;
    p.check_id(b)?;
    if !p.leq(a, b) {
        return Err(Error::NotComparable { a, b });
    }
    Ok(mobius_row(p, a)[b].clone().expect("b lies above a"))
}

/// Whether `μ(x, y) ≠ 0` for every `x ≤ y`.
pub fn mobius_nonzero_everywhere(p: &Poset) -> bool {
    (0..p.element_count()).all(|a| mobius_row(p, a).iter().flatten().all(|m| !m.is_zero()))
}

/// Reduced homology of the proper part.
pub fn proper_part_homology(p: &Poset, k: CoefficientSpec) -> HomologyProfile {
    order_complex(p, ComplexRange::Proper)
        .expect("proper part always exists")
        .reduced_homology(k)
}

/// Hall's identity: `μ(0̂, 1̂)` equals the reduced Euler characteristic of the
/// proper part, computed from rational Betti numbers.
pub fn euler_crosscheck(p: &Poset) -> bool {
    let mu = mobius(p, p.bottom(), p.top()).expect("bottom is below top");
    let chi = proper_part_homology(p, CoefficientSpec::Rationals).reduced_euler_characteristic();
    mu == BigInt::from(chi)
}

/// `β_{n-2}` of the proper part; for rank 1 the proper part is empty and
/// this is `β_{-1} = 1`.
pub fn top_betti(p: &Poset, k: CoefficientSpec) -> usize {
    if p.rank() == 0 {
        return 0;
    }
    let c = order_complex(p, ComplexRange::Proper).expect("proper part always exists");
    c.betti(p.rank() as isize - 2, k)
}

pub fn has_top_homology(p: &Poset, k: CoefficientSpec) -> bool {
    top_betti(p, k) > 0
}

/// An open interval whose homology fails to vanish below its top dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmWitness {
    pub lower: usize,
    pub upper: usize,
    pub dimension: isize,
    pub betti: usize,
}

/// First interval `(a, b)` (in id order) with nonzero reduced homology in a
/// dimension below `rank(b) - rank(a) - 2`, if any.
pub fn cohen_macaulay_witness(p: &Poset, k: CoefficientSpec) -> Option<CmWitness> {
    let m = p.element_count();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| p.lt(a, b) && p.rank_of(b) - p.rank_of(a) >= 2)
        .collect();
    pairs.par_iter().find_map_first(|&(a, b)| {
        let top = (p.rank_of(b) - p.rank_of(a)) as isize - 2;
        let h = order_complex(p, ComplexRange::Open(a, b))
            .ok()?
            .reduced_homology(k);
        (-1..top).find(|&d| h.betti(d) != 0).map(|d| CmWitness {
            lower: a,
            upper: b,
            dimension: d,
            betti: h.betti(d),
        })
    })
}

pub fn is_cohen_macaulay(p: &Poset, k: CoefficientSpec) -> bool {
    cohen_macaulay_witness(p, k).is_none()
}

/// Good/bad label per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessTable {
    pub coefficients: CoefficientSpec,
    good: Vec<bool>,
}

impl GoodnessTable {
    pub fn is_good(&self, x: usize) -> bool {
        self.good[x]
    }

    pub fn labels(&self) -> &[bool] {
        &self.good
    }

    /// Number of good elements of each rank `0..=n`.
    pub fn good_by_rank(&self, p: &Poset) -> Vec<usize> {
        let mut counts = vec![0; p.rank() + 1];
        for x in 0..p.element_count() {
            if self.good[x] {
                counts[p.rank_of(x)] += 1;
            }
        }
        counts
    }
}

/// `x` is good if it is `0̂` or `H̃_{k-2}(Δ(0̂, x)) ≠ 0` with `k = rank(x)`.
pub fn classify_good(l: &Poset, k: CoefficientSpec) -> GoodnessTable {
    let good = (0..l.element_count())
        .into_par_iter()
        .map(|x| {
            if x == l.bottom() {
                return true;
            }
            let c = order_complex(l, ComplexRange::Open(l.bottom(), x)).expect("bottom is below x");
            c.betti(l.rank_of(x) as isize - 2, k) != 0
        })
        .collect();
    GoodnessTable {
        coefficients: k,
        good,
    }
}

/// Good labels of the dual: `x` is co-good if it is `1̂` or the open upper
/// interval `(x, 1̂)` has nonzero top reduced homology.
pub fn classify_cogood(l: &Poset, k: CoefficientSpec) -> GoodnessTable {
    classify_good(&l.dual(), k)
}

/// Convenience for reporting small Möbius values.
pub fn mobius_i64(p: &Poset) -> Option<i64> {
    mobius(p, p.bottom(), p.top()).ok()?.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        boolean_algebra, butterfly, chain_lattice, partition_lattice, partition_lattice_labelled,
    };

    const Q: CoefficientSpec = CoefficientSpec::Rationals;

    #[test]
    fn proper_part_of_b3_is_hexagon() {
        let c = order_complex(&boolean_algebra(3), ComplexRange::Proper).unwrap();
        assert_eq!(c.face_counts(), vec![1, 6, 6]);
        assert_eq!(c.reduced_homology(Q).values(), &[0, 0, 1]);
    }

    #[test]
    fn empty_open_interval() {
        let b3 = boolean_algebra(3);
        let c = order_complex(&b3, ComplexRange::Open(0, 1)).unwrap();
        assert_eq!(c.face_counts(), vec![1]);
        assert_eq!(c.reduced_homology(Q).betti(-1), 1);
        assert!(order_complex(&b3, ComplexRange::Open(1, 2)).is_err());
    }

    #[test]
    fn half_open_interval_is_a_cone() {
        let p = partition_lattice(4).unwrap();
        for c in p.coatoms() {
            let range = ComplexRange::HalfOpen(p.bottom(), c);
            let members: Vec<usize> = range_elements(&p, range).unwrap().iter().collect();
            let apex = members.iter().position(|&x| x == c).unwrap();
            let cx = order_complex(&p, range).unwrap();
            assert!(cx.facets().iter().all(|f| f.contains(&apex)));
            assert!(cx.reduced_homology(Q).is_acyclic());
        }
    }

    #[test]
    fn mobius_values() {
        let c2 = chain_lattice(2);
        assert_eq!(mobius(&c2, 0, 2).unwrap(), BigInt::zero());
        for n in 1..=6 {
            let b = boolean_algebra(n);
            let expected = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                mobius(&b, b.bottom(), b.top()).unwrap(),
                BigInt::from(expected)
            );
        }
        let p4 = partition_lattice(4).unwrap();
        assert_eq!(
            mobius(&p4, p4.bottom(), p4.top()).unwrap(),
            BigInt::from(-6)
        );
        assert!(mobius(&p4, p4.top(), p4.bottom()).is_err());
    }

    #[test]
    fn hall_identity_holds() {
        for p in [
            boolean_algebra(4),
            chain_lattice(2),
            partition_lattice(4).unwrap(),
            butterfly(),
            chain_lattice(1),
        ] {
            assert!(euler_crosscheck(&p), "{}", p.name());
        }
    }

    #[test]
    fn cohen_macaulay_examples() {
        for n in 1..=4 {
            assert!(is_cohen_macaulay(&boolean_algebra(n), Q));
        }
        assert!(is_cohen_macaulay(&chain_lattice(4), Q));
        assert!(is_cohen_macaulay(&partition_lattice(4).unwrap(), Q));
        // two disjoint chains of length 2 glued at 0̂ and 1̂: proper part is two
        // edges, disconnected in dimension 0 below top dimension 1
        let p = Poset::new(
            "x",
            vec![0, 1, 1, 2, 2, 3],
            &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        let w = cohen_macaulay_witness(&p, Q).unwrap();
        assert_eq!((w.lower, w.upper, w.dimension, w.betti), (0, 5, 0, 1));
    }

    #[test]
    fn goodness() {
        let b4 = boolean_algebra(4);
        assert!(classify_good(&b4, Q).labels().iter().all(|&g| g));
        let c3 = chain_lattice(3);
        let g = classify_good(&c3, Q);
        assert!(g.is_good(1));
        assert!(!g.is_good(2));
        let (p4, labels) = partition_lattice_labelled(4).unwrap();
        let g = classify_good(&p4, Q);
        assert_eq!(g.good_by_rank(&p4), vec![1, 6, 7, 1]);
        assert!(labels.len() == 15);
    }

    #[test]
    fn top_homology() {
        for n in 1..=5 {
            assert_eq!(top_betti(&boolean_algebra(n), Q), 1);
        }
        assert!(!has_top_homology(&chain_lattice(3), Q));
        assert_eq!(top_betti(&partition_lattice(4).unwrap(), Q), 6);
    }

    #[test]
    fn stronger_mobius_condition() {
        assert!(mobius_nonzero_everywhere(&boolean_algebra(3)));
        assert!(!mobius_nonzero_everywhere(&chain_lattice(2)));
    }
}
