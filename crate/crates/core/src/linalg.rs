//! Exact matrix rank over the rationals and over prime fields.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense integer matrix as rows.
pub type IntMatrix = Vec<Vec<i64>>;

trait Entry: Clone {
    fn is_zero(&self) -> bool;
    /// `(pivot * x - below * right) / prev`, exact; `None` on overflow.
    fn step(pivot: &Self, x: &Self, below: &Self, right: &Self, prev: &Self) -> Option<Self>;
}

impl Entry for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn step(pivot: &i128, x: &i128, below: &i128, right: &i128, prev: &i128) -> Option<i128> {
        let num = pivot
            .checked_mul(*x)?
            .checked_sub(below.checked_mul(*right)?)?;
        debug_assert_eq!(num % prev, 0);
        Some(num / prev)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn step(
        pivot: &BigInt,
        x: &BigInt,
        below: &BigInt,
        right: &BigInt,
        prev: &BigInt,
    ) -> Option<BigInt> {
        Some((pivot * x - below * right) / prev)
    }
}

/// Fraction-free (Bareiss) row echelon reduction; returns the rank, or
/// `None` if an intermediate value overflowed the entry type.
fn bareiss_rank<T: Entry>(a: &mut [Vec<T>], one: T) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = one;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let below = row[c].clone();
            for j in c + 1..cols {
                row[j] = T::step(&pivot, &row[j], &below, &pivot_row[j], &prev)?;
            }
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Rank over ℚ by fraction-free elimination. Runs in `i128` and retries
/// with arbitrary precision if any intermediate minor overflows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut small: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(r) = bareiss_rank(&mut small, 1i128) {
        return r;
    }
    let mut big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(&mut big, BigInt::from(1)).expect("big integers do not overflow")
}

/// Rank over 𝔽_p for a prime `p < 2^32`.
pub fn rank_mod_prime(m: &IntMatrix, p: u64) -> usize {
    assert!(
        (2..1 << 32).contains(&p),
        "prime {p} out of supported range"
    );
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for x in &mut a[r][c..] {
            *x = *x * inv % p;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}
