//! Flag f-vectors, flag h-vectors and the Boolean reference values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A subset `S ⊆ [n-1]` stored as a bitmask; rank `s` lives at bit `s - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankSubset {
    n: usize,
    mask: u64,
}

/// Number of subsets of `[n-1]`.
pub fn subset_count(n: usize) -> usize {
    1usize << n.saturating_sub(1)
}

impl RankSubset {
    pub fn new(n: usize, ranks: &[usize]) -> Result<RankSubset> {
        let mut mask = 0u64;
        for &s in ranks {
            if s == 0 || s >= n {
                return Err(Error::InvalidArgument(format!(
                    "rank {s} outside [1, {}]",
                    n.saturating_sub(1)
                )));
            }
            mask |= 1 << (s - 1);
        }
        Ok(RankSubset { n, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> RankSubset {
        assert!(
            (mask as u128) < subset_count(n) as u128,
            "mask {mask:#b} outside [{}]",
            n.saturating_sub(1)
        );
        RankSubset { n, mask }
    }

    pub fn empty(n: usize) -> RankSubset {
        RankSubset { n, mask: 0 }
    }

    pub fn full(n: usize) -> RankSubset {
        RankSubset {
            n,
            mask: subset_count(n) as u64 - 1,
        }
    }

    /// All subsets of `[n-1]` in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = RankSubset> {
        (0..subset_count(n) as u64).map(move |mask| RankSubset { n, mask })
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, s: usize) -> bool {
        s >= 1 && s < self.n && self.mask >> (s - 1) & 1 == 1
    }

    /// Ranks in ascending order.
    pub fn ranks(&self) -> Vec<usize> {
        (1..self.n).filter(|&s| self.contains(s)).collect()
    }

    pub fn max_rank(&self) -> Option<usize> {
        (self.mask != 0).then(|| 64 - self.mask.leading_zeros() as usize)
    }

    /// `{n - s : s ∈ S}`.
    pub fn reflect(&self) -> RankSubset {
        let ranks: Vec<usize> = self.ranks().into_iter().map(|s| self.n - s).collect();
        RankSubset::new(self.n, &ranks).unwrap()
    }

    /// Parses the CSV rendering: `-` or `|`-joined ranks.
    pub fn parse(n: usize, s: &str) -> Result<RankSubset> {
        if s == "-" {
            return Ok(RankSubset::empty(n));
        }
        let ranks = s
            .split('|')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad rank `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        RankSubset::new(n, &ranks)
    }
}

impl fmt::Display for RankSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.ranks().iter().map(usize::to_string).collect();
        f.write_str(&parts.join("|"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagKind {
    F,
    H,
}

/// A function `S ↦ value` over all subsets of `[n-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    kind: FlagKind,
    values: Vec<BigInt>,
}

impl FlagVector {
    /// Checked constructor; f-kind vectors must be nonnegative with `f(∅) = 1`.
    pub fn new(n: usize, kind: FlagKind, values: Vec<BigInt>) -> Result<FlagVector> {
        let fv = FlagVector::raw(n, kind, values)?;
        if kind == FlagKind::F {
            if !fv.values[0].is_one() {
                return Err(Error::InvalidArgument("f-vector must have f(∅) = 1".into()));
            }
            if fv.values.iter().any(Signed::is_negative) {
                return Err(Error::InvalidArgument(
                    "f-vector entries must be nonnegative".into(),
                ));
            }
        }
        Ok(fv)
    }

    /// Constructor that checks only the length; any integers are allowed.
    pub fn raw(n: usize, kind: FlagKind, values: Vec<BigInt>) -> Result<FlagVector> {
        if values.len() != subset_count(n) {
            return Err(Error::InvalidArgument(format!(
                "rank {n} flag vector needs {} entries, got {}",
                subset_count(n),
                values.len()
            )));
        }
        Ok(FlagVector { n, kind, values })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> FlagKind {
        self.kind
    }

    pub fn get(&self, s: RankSubset) -> &BigInt {
        assert_eq!(s.n, self.n, "subset of wrong ambient rank");
        &self.values[s.mask as usize]
    }

    /// Values indexed by subset mask.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (RankSubset, &BigInt)> {
        RankSubset::all(self.n).zip(&self.values)
    }

    /// CSV with header `subset,f,h`, rows in ascending mask order.
    pub fn to_csv(f: &FlagVector, h: &FlagVector) -> String {
        let mut out = String::from("subset,f,h\n");
        for ((s, fv), hv) in f.iter().zip(h.values()) {
            out.push_str(&format!("{s},{fv},{hv}\n"));
        }
        out
    }
}

/// Chain counts by rank set, by dynamic programming over ranks.
///
/// `ends[S][y]` counts chains with rank set `S` whose top element is `y`
/// (at rank `max S`); each `S` extends `S ∖ {max S}`.
pub fn flag_f(p: &Poset) -> FlagVector {
    let n = p.rank();
    let count = subset_count(n);
    let levels: Vec<Vec<usize>> = (0..=n).map(|k| p.level(k)).collect();
    let mut ends: Vec<Vec<BigInt>> = vec![Vec::new(); count];
    let mut values = vec![BigInt::zero(); count];
    values[0] = BigInt::one();
    for mask in 1..count as u64 {
        let s = RankSubset { n, mask };
        let k = s.max_rank().unwrap();
        let rest = mask & !(1 << (k - 1));
        let row: Vec<BigInt> = if rest == 0 {
            vec![BigInt::one(); levels[k].len()]
        } else {
            let j = RankSubset { n, mask: rest }.max_rank().unwrap();
            let prev = &ends[rest as usize];
            levels[k]
                .iter()
                .map(|&y| {
                    levels[j]
                        .iter()
                        .zip(prev)
                        .filter(|(&x, _)| p.leq(x, y))
                        .map(|(_, c)| c)
                        .sum()
                })
                .collect()
        };
        values[mask as usize] = row.iter().sum();
        ends[mask as usize] = row;
    }
    FlagVector {
        n,
        kind: FlagKind::F,
        values,
    }
}

/// `h(S) = Σ_{T ⊆ S} (-1)^{|S∖T|} f(T)`.
pub fn flag_h(f: &FlagVector) -> Result<FlagVector> {
    if f.kind != FlagKind::F {
        return Err(Error::InvalidArgument(
            "flag_h expects an f-kind vector".into(),
        ));
    }
    let mut values = f.values.clone();
    subset_mobius(&mut values);
    Ok(FlagVector {
        n: f.n,
        kind: FlagKind::H,
        values,
    })
}

/// `f(S) = Σ_{T ⊆ S} h(T)`.
pub fn flag_f_from_h(h: &FlagVector) -> Result<FlagVector> {
    if h.kind != FlagKind::H {
        return Err(Error::InvalidArgument(
            "flag_f_from_h expects an h-kind vector".into(),
        ));
    }
    let mut values = h.values.clone();
    subset_zeta(&mut values);
    Ok(FlagVector {
        n: h.n,
        kind: FlagKind::F,
        values,
    })
}

/// In-place subset-sum transform over bitmask-indexed values.
fn subset_zeta(v: &mut [BigInt]) {
    let bits = v.len().trailing_zeros();
    for b in 0..bits {
        for mask in 0..v.len() {
            if mask >> b & 1 == 1 {
                let lower = v[mask ^ (1 << b)].clone();
                v[mask] += lower;
            }
        }
    }
}

/// Inverse of [`subset_zeta`].
fn subset_mobius(v: &mut [BigInt]) {
    let bits = v.len().trailing_zeros();
    for b in 0..bits {
        for mask in 0..v.len() {
            if mask >> b & 1 == 1 {
                let lower = v[mask ^ (1 << b)].clone();
                v[mask] -= lower;
            }
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Multinomial `n! / (s_1! (s_2 - s_1)! ⋯ (n - s_l)!)`, the flag f-vector
/// of the Boolean algebra of rank `n`.
pub fn alpha(n: usize, s: RankSubset) -> BigInt {
    assert_eq!(s.n, n, "subset of wrong ambient rank");
    let mut prev = 0;
    let mut denom = BigInt::one();
    for r in s.ranks().into_iter().chain(std::iter::once(n)) {
        denom *= factorial(r - prev);
        prev = r;
    }
    factorial(n) / denom
}

pub fn alpha_vector(n: usize) -> FlagVector {
    let values = RankSubset::all(n).map(|s| alpha(n, s)).collect();
    FlagVector {
        n,
        kind: FlagKind::F,
        values,
    }
}

/// Flag h-vector of the Boolean algebra: the count of permutations of `[n]`
/// with descent set `S`.
pub fn beta_vector(n: usize) -> FlagVector {
    flag_h(&alpha_vector(n)).expect("alpha is f-kind")
}

pub fn beta(n: usize, s: RankSubset) -> BigInt {
    beta_vector(n).get(s).clone()
}

/// `(f_0, …, f_{n-2})` of the order complex of the proper part, where
/// `f_i` sums the flag f-vector over subsets of size `i + 1`.
pub fn order_complex_f_vector(f: &FlagVector) -> Vec<BigInt> {
    let n = f.n;
    let mut out = vec![BigInt::zero(); n.saturating_sub(1)];
    for (s, v) in f.iter() {
        if !s.is_empty() {
            out[s.len() - 1] += v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rs(n: usize, r: &[usize]) -> RankSubset {
        RankSubset::new(n, r).unwrap()
    }

    #[test]
    fn rank_subset_basics() {
        let s = rs(5, &[1, 3]);
        assert_eq!(s.to_string(), "1|3");
        assert_eq!(RankSubset::empty(5).to_string(), "-");
        assert_eq!(RankSubset::parse(5, "1|3").unwrap(), s);
        assert_eq!(s.max_rank(), Some(3));
        assert_eq!(s.reflect(), rs(5, &[2, 4]));
        assert!(RankSubset::new(3, &[3]).is_err());
        assert_eq!(RankSubset::all(1).count(), 1);
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(5, RankSubset::empty(5)), BigInt::one());
        assert_eq!(alpha(3, rs(3, &[1, 2])), BigInt::from(6));
        assert_eq!(alpha(4, rs(4, &[2])), BigInt::from(6));
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(4, RankSubset::empty(4)), BigInt::one());
        assert_eq!(beta(3, rs(3, &[1])), BigInt::from(2));
        assert_eq!(beta(4, rs(4, &[1, 3])), BigInt::from(5));
    }

    #[test]
    fn flag_f_b3_and_pi4() {
        let f = flag_f(&catalog::boolean_algebra(3));
        assert_eq!(f.values(), big(&[1, 3, 3, 6]).as_slice());
        let f = flag_f(&catalog::partition_lattice(4).unwrap());
        assert_eq!(f.values(), big(&[1, 6, 7, 18]).as_slice());
        let h = flag_h(&f).unwrap();
        assert_eq!(h.values(), big(&[1, 5, 6, 6]).as_slice());
        assert_eq!(h.get(rs(3, &[1, 2])), &BigInt::from(6));
    }

    #[test]
    fn h_of_b3() {
        let h = flag_h(&flag_f(&catalog::boolean_algebra(3))).unwrap();
        assert_eq!(h.get(rs(3, &[1])), &BigInt::from(2));
        assert_eq!(h.get(RankSubset::empty(3)), &BigInt::one());
    }

    #[test]
    fn order_complex_counts() {
        let v = order_complex_f_vector(&flag_f(&catalog::boolean_algebra(3)));
        assert_eq!(v, big(&[6, 6]));
        assert!(order_complex_f_vector(&flag_f(&catalog::boolean_algebra(1))).is_empty());
        let v = order_complex_f_vector(&flag_f(&catalog::partition_lattice(4).unwrap()));
        assert_eq!(v, big(&[13, 18]));
    }

    #[test]
    fn csv_rendering() {
        let f = flag_f(&catalog::partition_lattice(4).unwrap());
        let h = flag_h(&f).unwrap();
        assert_eq!(
            FlagVector::to_csv(&f, &h),
            "subset,f,h\n-,1,1\n1,6,5\n2,7,6\n1|2,18,6\n"
        );
    }

    #[test]
    fn kind_checks() {
        let f = alpha_vector(3);
        let h = flag_h(&f).unwrap();
        assert!(flag_h(&h).is_err());
        assert!(flag_f_from_h(&f).is_err());
        assert!(FlagVector::new(3, FlagKind::F, big(&[2, 0, 0, 0])).is_err());
        assert!(FlagVector::new(3, FlagKind::F, big(&[1, 0])).is_err());
    }

    #[test]
    fn dual_reflects_flag_vector() {
        let p = catalog::partition_lattice(5).unwrap();
        let f = flag_f(&p);
        let fd = flag_f(&p.dual());
        for s in RankSubset::all(4) {
            assert_eq!(fd.get(s), f.get(s.reflect()));
        }
    }
}
