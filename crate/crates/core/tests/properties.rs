use num_bigint::BigInt;
use proptest::prelude::*;

use latflag::canon::{canonical_code, is_isomorphic};
use latflag::complex::CoefficientSpec;
use latflag::flag::{flag_f, flag_f_from_h, flag_h, order_complex_f_vector, RankSubset};
use latflag::format::{parse, to_text};
use latflag::topology::{
    euler_crosscheck, mobius, order_complex, proper_part_homology, ComplexRange,
};
use latflag::Poset;

/// Random graded poset with a bottom and a top: `levels[i]` elements at rank
/// `i + 1`, each choosing a nonempty set of lower covers from `masks`.
/// Elements left without an upper cover get one to the first element above.
fn build(levels: &[usize], masks: &[u8]) -> Poset {
    let mut ranks = vec![0];
    let mut prev = vec![0usize];
    let mut covers = Vec::new();
    let mut pick = masks.iter().cycle();
    for (i, &size) in levels.iter().enumerate() {
        let level: Vec<usize> = (0..size).map(|j| ranks.len() + j).collect();
        ranks.extend(std::iter::repeat_n(i + 1, size));
        for &x in &level {
            let m = *pick.next().unwrap() as usize % ((1 << prev.len()) - 1) + 1;
            for (k, &y) in prev.iter().enumerate() {
                if m >> k & 1 == 1 {
                    covers.push((y, x));
                }
            }
        }
        for &y in &prev {
            if !covers.iter().any(|&(a, _)| a == y) {
                covers.push((y, level[0]));
            }
        }
        prev = level;
    }
    let top = ranks.len();
    ranks.push(levels.len() + 1);
    for y in prev {
        covers.push((y, top));
    }
    Poset::new("random", ranks, &covers).unwrap()
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let mut ranks = vec![0; p.element_count()];
    for x in 0..p.element_count() {
        ranks[perm[x]] = p.rank_of(x);
    }
    let covers: Vec<(usize, usize)> = p.covers().map(|(a, b)| (perm[a], perm[b])).collect();
    Poset::new("relabelled", ranks, &covers).unwrap()
}

fn chain_count(p: &Poset, ranks: &[usize], below: usize) -> u64 {
    match ranks.split_first() {
        None => 1,
        Some((&r, rest)) => p
            .level(r)
            .into_iter()
            .filter(|&x| p.lt(below, x))
            .map(|x| chain_count(p, rest, x))
            .sum(),
    }
}

fn mobius_oracle(p: &Poset, a: usize, b: usize) -> i64 {
    if a == b {
        return 1;
    }
    -(0..p.element_count())
        .filter(|&z| p.leq(a, z) && p.lt(z, b))
        .map(|z| mobius_oracle(p, a, z))
        .sum::<i64>()
}

fn poset_strategy() -> impl Strategy<Value = Poset> {
    (
        prop::collection::vec(1usize..=3, 0..=3),
        prop::collection::vec(any::<u8>(), 1..24),
    )
        .prop_map(|(levels, masks)| build(&levels, &masks))
}

fn relabelled_strategy() -> impl Strategy<Value = (Poset, Vec<usize>)> {
    poset_strategy().prop_flat_map(|p| {
        let ids: Vec<usize> = (0..p.element_count()).collect();
        (Just(p), Just(ids).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flag_f_matches_chain_enumeration(p in poset_strategy()) {
        let f = flag_f(&p);
        for s in RankSubset::all(p.rank()) {
            prop_assert_eq!(f.get(s), &BigInt::from(chain_count(&p, &s.ranks(), p.bottom())));
        }
    }

    #[test]
    fn mobius_matches_recursion_and_hall(p in poset_strategy()) {
        prop_assert_eq!(mobius(&p, p.bottom(), p.top()).unwrap(), BigInt::from(mobius_oracle(&p, p.bottom(), p.top())));
        prop_assert!(euler_crosscheck(&p));
    }

    #[test]
    fn flag_transforms_invert(p in poset_strategy()) {
        let f = flag_f(&p);
        prop_assert_eq!(flag_f_from_h(&flag_h(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn order_complex_counts_agree(p in poset_strategy()) {
        let complex = order_complex(&p, ComplexRange::Proper).unwrap();
        let from_flags = order_complex_f_vector(&flag_f(&p));
        // face_counts starts with the empty face
        let counts: Vec<BigInt> = complex.face_counts().into_iter().skip(1).map(BigInt::from).collect();
        prop_assert_eq!(counts, from_flags);
    }

    #[test]
    fn homology_euler_matches_mobius(p in poset_strategy()) {
        let q = proper_part_homology(&p, CoefficientSpec::Rationals);
        let f2 = proper_part_homology(&p, CoefficientSpec::prime_field(2).unwrap());
        prop_assert_eq!(BigInt::from(q.reduced_euler_characteristic()), mobius(&p, p.bottom(), p.top()).unwrap());
        prop_assert_eq!(q.reduced_euler_characteristic(), f2.reduced_euler_characteristic());
        for d in -1..=q.max_dimension() {
            prop_assert!(f2.betti(d) >= q.betti(d));
        }
    }

    #[test]
    fn canonical_code_ignores_labels((p, perm) in relabelled_strategy()) {
        let q = relabel(&p, &perm);
        prop_assert_eq!(canonical_code(&p), canonical_code(&q));
        prop_assert!(is_isomorphic(&p, &q));
    }

    #[test]
    fn text_format_roundtrips(p in poset_strategy()) {
        let text = to_text(&p);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(to_text(&back), text);
    }

    #[test]
    fn dual_reverses_flags(p in poset_strategy()) {
        let f = flag_f(&p);
        let g = flag_f(&p.dual());
        for s in RankSubset::all(p.rank()) {
            prop_assert_eq!(f.get(s), g.get(s.reflect()));
        }
    }
}
