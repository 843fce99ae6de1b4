//! Named checks of the flag-vector lower bounds and the structural claims
//! behind them, each producing a pass / fail / not-applicable report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::is_isomorphic;
use crate::catalog::boolean_algebra;
use crate::complex::CoefficientSpec;
use crate::error::{Error, Result};
use crate::flag::{alpha, alpha_vector, beta_vector, flag_f, flag_h, FlagVector, RankSubset};
use crate::format::to_text;
use crate::poset::Poset;
use crate::subset::ElementSubset;
use crate::surgery::{delete_atom, delete_coatom};
use crate::topology::{
    classify_cogood, classify_good, euler_crosscheck, is_cohen_macaulay, mobius,
    mobius_nonzero_everywhere, top_betti,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// Outcome of one check on one poset.
///
/// A failing report always carries a witness; a not-applicable report always
/// carries the violated hypothesis as its reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub subject: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub reason: Option<String>,
    pub detail: String,
    /// Full serialization of the subject when it refutes a conjectured bound.
    pub counterexample: Option<String>,
    pub millis: u128,
}

impl VerificationReport {
    fn pass(check: &str, subject: &Poset, detail: impl Into<String>) -> Self {
        Self::build(check, subject, Verdict::Pass, None, None, detail.into())
    }

    fn fail(check: &str, subject: &Poset, witness: impl Into<String>) -> Self {
        Self::build(
            check,
            subject,
            Verdict::Fail,
            Some(witness.into()),
            None,
            String::new(),
        )
    }

    fn not_applicable(check: &str, subject: &Poset, reason: impl Into<String>) -> Self {
        Self::build(
            check,
            subject,
            Verdict::NotApplicable,
            None,
            Some(reason.into()),
            String::new(),
        )
    }

    fn build(
        check: &str,
        subject: &Poset,
        verdict: Verdict,
        witness: Option<String>,
        reason: Option<String>,
        detail: String,
    ) -> Self {
        VerificationReport {
            check: check.to_string(),
            subject: subject.name().to_string(),
            verdict,
            witness,
            reason,
            detail,
            counterexample: None,
            millis: 0,
        }
    }

    /// The TSV witness column: the witness on failure, the reason when not
    /// applicable, otherwise the detail.
    pub fn witness_column(&self) -> &str {
        match self.verdict {
            Verdict::Fail => self.witness.as_deref().unwrap_or(""),
            Verdict::NotApplicable => self.reason.as_deref().unwrap_or(""),
            Verdict::Pass => &self.detail,
        }
    }
}

/// Shared hypothesis gate: a graded lattice whose proper part has nonzero
/// top-dimensional reduced homology.
fn top_homology_gate(check: &str, l: &Poset, k: CoefficientSpec) -> Option<VerificationReport> {
    let reason = if let Some((x, y)) = l.lattice_witness() {
        format!("not a lattice: {x} and {y} have no meet")
    } else if l.rank() == 0 {
        "rank 0".to_string()
    } else if top_betti(l, k) == 0 {
        "trivial top homology".to_string()
    } else {
        return None;
    };
    Some(VerificationReport::not_applicable(check, l, reason))
}

fn tightness(lhs: &FlagVector, rhs: &FlagVector) -> String {
    let nonempty: Vec<RankSubset> = RankSubset::all(lhs.rank())
        .filter(|s| !s.is_empty())
        .collect();
    let tight = nonempty
        .iter()
        .filter(|&&s| lhs.get(s) == rhs.get(s))
        .count();
    if tight == nonempty.len() {
        "equality for all S".to_string()
    } else if tight == 0 {
        "strict for all nonempty S".to_string()
    } else {
        format!("equality for {tight} of {} nonempty S", nonempty.len())
    }
}

/// `f_L(S) ≥ α_n(S)` for every `S` when the top homology is nonzero.
pub fn check_flag_f_bound(l: &Poset, k: CoefficientSpec) -> VerificationReport {
    const NAME: &str = "theorem";
    if let Some(r) = top_homology_gate(NAME, l, k) {
        return r;
    }
    let f = flag_f(l);
    let a = alpha_vector(l.rank());
    match first_violation(&f, &a) {
        Some(s) => {
            VerificationReport::fail(NAME, l, format!("S={s} f={} alpha={}", f.get(s), a.get(s)))
        }
        None => VerificationReport::pass(NAME, l, tightness(&f, &a)),
    }
}

/// First `S` in mask order with `lhs(S) < rhs(S)`.
fn first_violation(lhs: &FlagVector, rhs: &FlagVector) -> Option<RankSubset> {
    RankSubset::all(lhs.rank()).find(|&s| lhs.get(s) < rhs.get(s))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn fmt_counts<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// At least `C(n, k)` good elements of each rank `k`, together with the two
/// intermediate claims: every coatom `b` has an incomparable atom `a` whose
/// upper interval `(a, 1̂)` has nonzero top homology, and there are at least
/// `n` good coatoms.
pub fn check_good_counts(l: &Poset, k: CoefficientSpec) -> VerificationReport {
    const NAME: &str = "proposition";
    if let Some(r) = top_homology_gate(NAME, l, k) {
        return r;
    }
    let n = l.rank();
    let good = classify_good(l, k);
    let counts = good.good_by_rank(l);
    let needed: Vec<u128> = (0..=n).map(|r| binomial(n, r)).collect();
    for r in 0..=n {
        if (counts[r] as u128) < needed[r] {
            return VerificationReport::fail(
                NAME,
                l,
                format!("rank {r}: {} good, need {}", counts[r], needed[r]),
            );
        }
    }
    if n >= 2 {
        let cogood = classify_cogood(l, k);
        for b in l.coatoms() {
            let found = l
                .atoms()
                .into_iter()
                .any(|a| !l.leq(a, b) && cogood.is_good(a));
            if !found {
                return VerificationReport::fail(
                    NAME,
                    l,
                    format!("coatom {b} has no incomparable atom with (a,1) homology"),
                );
            }
        }
        let good_coatoms = l.coatoms().into_iter().filter(|&c| good.is_good(c)).count();
        if good_coatoms < n {
            return VerificationReport::fail(
                NAME,
                l,
                format!("{good_coatoms} good coatoms, need {n}"),
            );
        }
    }
    VerificationReport::pass(
        NAME,
        l,
        format!(
            "good by rank {} >= {}",
            fmt_counts(&counts),
            fmt_counts(&needed)
        ),
    )
}

/// For an order ideal `I` of `L ∖ {1̂}` generated by at most `r` elements,
/// at least `C(n-r, k-r)` good elements of rank `k` lie outside `I`, for all
/// `r ≤ k ≤ n`.
pub fn check_ideal_bound(
    l: &Poset,
    k: CoefficientSpec,
    ideal: &ElementSubset,
    r: usize,
) -> Result<VerificationReport> {
    const NAME: &str = "ideal-bound";
    let n = l.rank();
    if ideal.universe() != l.element_count() {
        return Err(Error::InvalidArgument(
            "ideal has the wrong universe".into(),
        ));
    }
    if ideal.contains(l.top()) {
        return Err(Error::Precondition("ideal must not contain the top".into()));
    }
    if !l.is_order_ideal(ideal) {
        return Err(Error::Precondition("subset is not an order ideal".into()));
    }
    let gens = l.maximal_elements(ideal).len();
    if gens > r || r > n {
        return Err(Error::Precondition(format!(
            "ideal has {gens} generators; need at most r = {r} <= n = {n}"
        )));
    }
    if let Some(rep) = top_homology_gate(NAME, l, k) {
        return Ok(rep);
    }
    let good = classify_good(l, k);
    for rank in r..=n {
        let outside = l
            .level(rank)
            .into_iter()
            .filter(|&x| good.is_good(x) && !ideal.contains(x))
            .count();
        let need = binomial(n - r, rank - r);
        if (outside as u128) < need {
            return Ok(VerificationReport::fail(
                NAME,
                l,
                format!("r={r} ideal={ideal:?} rank {rank}: {outside} good outside, need {need}"),
            ));
        }
    }
    Ok(VerificationReport::pass(
        NAME,
        l,
        format!("r={r}, {} generators", gens),
    ))
}

/// Deleting a bad coatom leaves the top Betti number unchanged.
pub fn check_coatom_deletion_invariance(
    l: &Poset,
    c: usize,
    k: CoefficientSpec,
) -> Result<VerificationReport> {
    const NAME: &str = "coatom-deletion";
    l.check_id(c)?;
    if !l.coatoms().contains(&c) {
        return Err(Error::Precondition(format!("element {c} is not a coatom")));
    }
    if l.coatoms().len() < 2 {
        return Ok(VerificationReport::not_applicable(
            NAME,
            l,
            "fewer than two coatoms",
        ));
    }
    if classify_good(l, k).is_good(c) {
        return Ok(VerificationReport::not_applicable(
            NAME,
            l,
            format!("coatom {c} is good"),
        ));
    }
    let before = top_betti(l, k);
    let after = top_betti(&delete_coatom(l, c)?, k);
    Ok(if before == after {
        VerificationReport::pass(NAME, l, format!("c={c}: top betti {before}"))
    } else {
        VerificationReport::fail(NAME, l, format!("c={c}: top betti {before} -> {after}"))
    })
}

/// Dual form: deleting an atom `a` whose upper interval `(a, 1̂)` has zero
/// top homology leaves the top Betti number unchanged.
pub fn check_atom_deletion_invariance(
    l: &Poset,
    a: usize,
    k: CoefficientSpec,
) -> Result<VerificationReport> {
    const NAME: &str = "atom-deletion";
    l.check_id(a)?;
    if !l.atoms().contains(&a) {
        return Err(Error::Precondition(format!("element {a} is not an atom")));
    }
    if l.atoms().len() < 2 {
        return Ok(VerificationReport::not_applicable(
            NAME,
            l,
            "fewer than two atoms",
        ));
    }
    if classify_cogood(l, k).is_good(a) {
        return Ok(VerificationReport::not_applicable(
            NAME,
            l,
            format!("atom {a} is co-good"),
        ));
    }
    let before = top_betti(l, k);
    let after = top_betti(&delete_atom(l, a)?, k);
    Ok(if before == after {
        VerificationReport::pass(NAME, l, format!("a={a}: top betti {before}"))
    } else {
        VerificationReport::fail(NAME, l, format!("a={a}: top betti {before} -> {after}"))
    })
}

/// `h_L(S) ≥ β_n(S)` for Cohen-Macaulay lattices with `μ(0̂, 1̂) ≠ 0`. A
/// failure carries the serialized lattice as a counterexample.
pub fn check_flag_h_bound(l: &Poset, k: CoefficientSpec) -> VerificationReport {
    const NAME: &str = "conjecture";
    if let Some((x, y)) = l.lattice_witness() {
        return VerificationReport::not_applicable(
            NAME,
            l,
            format!("not a lattice: {x} and {y} have no meet"),
        );
    }
    let mu = mobius(l, l.bottom(), l.top()).expect("bottom below top");
    if mu == BigInt::from(0) {
        return VerificationReport::not_applicable(NAME, l, "mobius(0,1) = 0");
    }
    if !is_cohen_macaulay(l, k) {
        return VerificationReport::not_applicable(NAME, l, "not Cohen-Macaulay");
    }
    let n = l.rank();
    let h = flag_h(&flag_f(l)).expect("flag_f is f-kind");
    let b = beta_vector(n);
    let everywhere = mobius_nonzero_everywhere(l);
    if let Some(s) = first_violation(&h, &b) {
        let mut rep =
            VerificationReport::fail(NAME, l, format!("S={s} h={} beta={}", h.get(s), b.get(s)));
        rep.counterexample = Some(to_text(l));
        rep.detail = format!("mobius-nonzero-everywhere={everywhere}");
        return rep;
    }
    VerificationReport::pass(
        NAME,
        l,
        format!(
            "{}; mobius-nonzero-everywhere={everywhere}",
            tightness(&h, &b)
        ),
    )
}

/// Equality cases: `|L| = 2^n` forces `L ≅ B_n`, and so does equality
/// `f_L(S) = α_n(S)` across all `S` of one fixed size.
pub fn check_equality_cases(l: &Poset, k: CoefficientSpec) -> VerificationReport {
    const NAME: &str = "equality";
    if let Some(r) = top_homology_gate(NAME, l, k) {
        return r;
    }
    let n = l.rank();
    let boolean = boolean_algebra(n);
    let mut is_boolean: Option<bool> = None;
    let mut iso = || *is_boolean.get_or_insert_with(|| is_isomorphic(l, &boolean));
    let mut notes = Vec::new();
    if l.element_count() == 1 << n {
        if !iso() {
            return VerificationReport::fail(
                NAME,
                l,
                format!("{} elements but not Boolean", l.element_count()),
            );
        }
        notes.push("size".to_string());
    }
    let f = flag_f(l);
    for size in 1..n {
        let slice_tight = RankSubset::all(n)
            .filter(|s| s.len() == size)
            .all(|s| *f.get(s) == alpha(n, s));
        if slice_tight {
            if !iso() {
                return VerificationReport::fail(
                    NAME,
                    l,
                    format!("equality for all |S|={size} but not Boolean"),
                );
            }
            notes.push(format!("|S|={size}"));
        }
    }
    let detail = if notes.is_empty() {
        "no equality antecedent".to_string()
    } else {
        format!("Boolean; tight: {}", notes.join(" "))
    };
    VerificationReport::pass(NAME, l, detail)
}

/// `f_L(S) = Σ_{rank(x) = k} f_{[0̂,x]}(S ∖ {k})` with `k = max S`.
pub fn check_pair_counting(l: &Poset) -> VerificationReport {
    const NAME: &str = "pair-counting";
    let n = l.rank();
    let f = flag_f(l);
    let lower: Vec<Option<FlagVector>> = (0..l.element_count())
        .map(|x| {
            (x != l.bottom()).then(|| flag_f(&l.interval(l.bottom(), x).expect("bottom below x")))
        })
        .collect();
    for s in RankSubset::all(n).filter(|s| !s.is_empty()) {
        let top = s.max_rank().unwrap();
        let rest: Vec<usize> = s.ranks().into_iter().filter(|&r| r != top).collect();
        let sub = RankSubset::new(top, &rest).expect("ranks below top");
        let total: BigInt = l
            .level(top)
            .iter()
            .map(|&x| lower[x].as_ref().unwrap().get(sub).clone())
            .sum();
        if &total != f.get(s) {
            return VerificationReport::fail(
                NAME,
                l,
                format!("S={s}: f={} but pair count {total}", f.get(s)),
            );
        }
    }
    VerificationReport::pass(
        NAME,
        l,
        format!("{} nonempty S", (1usize << n.saturating_sub(1)) - 1),
    )
}

/// `μ(0̂, 1̂)` equals the reduced Euler characteristic of the proper part.
pub fn check_hall_identity(l: &Poset) -> VerificationReport {
    const NAME: &str = "hall-identity";
    if l.rank() == 0 {
        return VerificationReport::not_applicable(NAME, l, "rank 0");
    }
    if euler_crosscheck(l) {
        VerificationReport::pass(NAME, l, "mobius = reduced euler characteristic")
    } else {
        VerificationReport::fail(NAME, l, "mobius differs from reduced euler characteristic")
    }
}

/// Checks runnable by [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Theorem,
    Proposition,
    IdealBound,
    CoatomDeletion,
    AtomDeletion,
    Conjecture,
    Equality,
    PairCounting,
    HallIdentity,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Theorem,
        Check::Proposition,
        Check::IdealBound,
        Check::CoatomDeletion,
        Check::AtomDeletion,
        Check::Conjecture,
        Check::Equality,
        Check::PairCounting,
        Check::HallIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Proposition => "proposition",
            Check::IdealBound => "ideal-bound",
            Check::CoatomDeletion => "coatom-deletion",
            Check::AtomDeletion => "atom-deletion",
            Check::Conjecture => "conjecture",
            Check::Equality => "equality",
            Check::PairCounting => "pair-counting",
            Check::HallIdentity => "hall-identity",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

/// Random ideals sampled per lattice by [`sweep_ideal_bound`].
pub const IDEAL_BOUND_SAMPLES: usize = 50;

/// The ideal bound over all principal ideals of `L ∖ {1̂}` (with `r = 1`) and
/// [`IDEAL_BOUND_SAMPLES`] random ideals, folded into one report.
pub fn sweep_ideal_bound(l: &Poset, k: CoefficientSpec, seed: u64) -> VerificationReport {
    const NAME: &str = "ideal-bound";
    if let Some(r) = top_homology_gate(NAME, l, k) {
        return r;
    }
    let n = l.rank();
    let m = l.element_count();
    let mut cases: Vec<(ElementSubset, usize)> = (0..m)
        .filter(|&x| x != l.top())
        .map(|x| (l.ideal_generated_by([x]), 1.min(n)))
        .collect();
    cases.push((ElementSubset::empty(m), 0));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<usize> = (0..m).filter(|&x| x != l.top()).collect();
    for _ in 0..IDEAL_BOUND_SAMPLES {
        let r = rng.gen_range(0..=n);
        let gens: Vec<usize> = (0..r)
            .map(|_| candidates[rng.gen_range(0..candidates.len())])
            .collect();
        cases.push((l.ideal_generated_by(gens), r));
    }
    let total = cases.len();
    for (ideal, r) in cases {
        match check_ideal_bound(l, k, &ideal, r) {
            Ok(rep) if rep.verdict == Verdict::Pass => {}
            Ok(rep) => return rep,
            Err(e) => {
                return VerificationReport::fail(NAME, l, format!("invalid sampled ideal: {e}"))
            }
        }
    }
    VerificationReport::pass(NAME, l, format!("{total} ideals"))
}

fn sweep_deletions(
    name: &str,
    l: &Poset,
    targets: Vec<usize>,
    run: impl Fn(usize) -> Result<VerificationReport>,
) -> VerificationReport {
    let mut checked = Vec::new();
    for t in targets {
        match run(t) {
            Ok(rep) => match rep.verdict {
                Verdict::Pass => checked.push(t),
                Verdict::Fail => return rep,
                Verdict::NotApplicable => {}
            },
            Err(e) => return VerificationReport::fail(name, l, e.to_string()),
        }
    }
    if checked.is_empty() {
        VerificationReport::not_applicable(name, l, "no eligible element to delete")
    } else {
        VerificationReport::pass(name, l, format!("deleted {checked:?}"))
    }
}

/// Runs one check on one poset; `seed` drives ideal sampling.
pub fn run_check(check: Check, l: &Poset, k: CoefficientSpec, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut rep = match check {
        Check::Theorem => check_flag_f_bound(l, k),
        Check::Proposition => check_good_counts(l, k),
        Check::IdealBound => sweep_ideal_bound(l, k, seed),
        Check::CoatomDeletion => sweep_deletions(check.name(), l, l.coatoms(), |c| {
            check_coatom_deletion_invariance(l, c, k)
        }),
        Check::AtomDeletion => sweep_deletions(check.name(), l, l.atoms(), |a| {
            check_atom_deletion_invariance(l, a, k)
        }),
        Check::Conjecture => check_flag_h_bound(l, k),
        Check::Equality => check_equality_cases(l, k),
        Check::PairCounting => check_pair_counting(l),
        Check::HallIdentity => check_hall_identity(l),
    };
    rep.millis = start.elapsed().as_millis();
    rep
}

/// Reports of a suite run in (subject, check) order.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.reports.iter().filter(|r| r.verdict == v).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// 0 without failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.count(Verdict::Fail) == 0 {
            0
        } else {
            1
        }
    }

    /// TSV with columns `check, subject, verdict, witness, millis`. With
    /// `timing` off the millis column is `-`, making output reproducible.
    pub fn to_tsv(&self, timing: bool) -> String {
        let mut out = String::from("check\tsubject\tverdict\twitness\tmillis\n");
        for r in &self.reports {
            let millis = if timing {
                r.millis.to_string()
            } else {
                "-".to_string()
            };
            let witness = r.witness_column().replace(['\t', '\n'], " ");
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.check, r.subject, r.verdict, witness, millis
            ));
        }
        out
    }

    pub fn summary(&self) -> String {
        let subjects: std::collections::BTreeSet<&str> =
            self.reports.iter().map(|r| r.subject.as_str()).collect();
        format!(
            "{} reports over {} subjects: {} pass, {} fail, {} not-applicable",
            self.reports.len(),
            subjects.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::NotApplicable)
        )
    }
}

/// Runs every check on every poset in parallel; the result is ordered by
/// subject, then by the order of `checks`. Each subject gets its own seed
/// derived from `seed` and its position, so results do not depend on
/// scheduling.
pub fn run_suite(corpus: &[Poset], checks: &[Check], k: CoefficientSpec, seed: u64) -> SuiteReport {
    let reports = corpus
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let subject_seed = seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            checks
                .iter()
                .map(|&c| run_check(c, p, k, subject_seed))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    SuiteReport { reports }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_algebra, butterfly, chain_lattice, partition_lattice, subset_id};

    const Q: CoefficientSpec = CoefficientSpec::Rationals;

    #[test]
    fn theorem_examples() {
        let r = check_flag_f_bound(&boolean_algebra(4), Q);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.detail, "equality for all S");
        let r = check_flag_f_bound(&chain_lattice(3), Q);
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(r.reason.is_some());
        let r = check_flag_f_bound(&partition_lattice(4).unwrap(), Q);
        assert_eq!(
            (r.verdict, r.detail.as_str()),
            (Verdict::Pass, "strict for all nonempty S")
        );
        assert_eq!(
            check_flag_f_bound(&butterfly(), Q).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn injected_flag_fault_is_caught() {
        let b3 = boolean_algebra(3);
        let mut values = flag_f(&b3).values().to_vec();
        values[2] -= 1;
        let faulty = FlagVector::raw(3, crate::flag::FlagKind::F, values).unwrap();
        let s = first_violation(&faulty, &alpha_vector(3)).unwrap();
        assert_eq!(s.to_string(), "2");
        assert_eq!(first_violation(&flag_f(&b3), &alpha_vector(3)), None);
    }

    #[test]
    fn proposition_examples() {
        let r = check_good_counts(&boolean_algebra(3), Q);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.detail, "good by rank (1,3,3,1) >= (1,3,3,1)");
        let r = check_good_counts(&partition_lattice(4).unwrap(), Q);
        assert_eq!(r.detail, "good by rank (1,6,7,1) >= (1,3,3,1)");
        assert_eq!(
            check_good_counts(&chain_lattice(3), Q).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn ideal_bound_examples() {
        let b3 = boolean_algebra(3);
        let empty = ElementSubset::empty(8);
        let r = check_ideal_bound(&b3, Q, &empty, 0).unwrap();
        assert_eq!(r.verdict, check_good_counts(&b3, Q).verdict);
        let ideal = b3.ideal_generated_by([subset_id(&[1, 2])]);
        assert_eq!(
            check_ideal_bound(&b3, Q, &ideal, 1).unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            check_ideal_bound(&b3, Q, &empty, 3).unwrap().verdict,
            Verdict::Pass
        );
        // too many generators for r
        assert!(check_ideal_bound(&b3, Q, &ideal, 0).is_err());
        let not_ideal = ElementSubset::from_ids(8, [subset_id(&[1])]);
        assert!(check_ideal_bound(&b3, Q, &not_ideal, 1).is_err());
        assert_eq!(sweep_ideal_bound(&b3, Q, 7).verdict, Verdict::Pass);
    }

    #[test]
    fn deletion_examples() {
        let b3 = boolean_algebra(3);
        let r = check_coatom_deletion_invariance(&b3, subset_id(&[1, 2]), Q).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert!(check_coatom_deletion_invariance(&b3, subset_id(&[1]), Q).is_err());
        // B3 with an extra coatom above only {1}: that coatom is bad
        let mut covers: Vec<(usize, usize)> = b3.covers().collect();
        covers.push((subset_id(&[1]), 8));
        covers.push((8, 7));
        let mut ranks = b3.ranks().to_vec();
        ranks.push(2);
        let l = Poset::new("b3+", ranks, &covers).unwrap();
        assert!(l.is_lattice());
        let r = check_coatom_deletion_invariance(&l, 8, Q).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        let rep = run_check(Check::AtomDeletion, &l.dual(), Q, 0);
        assert_eq!(rep.verdict, Verdict::Pass, "{rep:?}");
    }

    #[test]
    fn conjecture_examples() {
        let r = check_flag_h_bound(&boolean_algebra(4), Q);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.detail.starts_with("equality for all S"));
        let r = check_flag_h_bound(&partition_lattice(4).unwrap(), Q);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.detail.starts_with("strict for all nonempty S"));
        assert_eq!(
            check_flag_h_bound(&chain_lattice(3), Q).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn equality_examples() {
        assert_eq!(
            check_equality_cases(&boolean_algebra(3), Q).verdict,
            Verdict::Pass
        );
        let r = check_equality_cases(&partition_lattice(4).unwrap(), Q);
        assert_eq!(
            (r.verdict, r.detail.as_str()),
            (Verdict::Pass, "no equality antecedent")
        );
    }

    #[test]
    fn pair_counting_and_hall() {
        for p in [
            boolean_algebra(4),
            partition_lattice(4).unwrap(),
            chain_lattice(3),
            butterfly(),
        ] {
            assert_eq!(check_pair_counting(&p).verdict, Verdict::Pass);
            assert_eq!(check_hall_identity(&p).verdict, Verdict::Pass);
        }
    }

    #[test]
    fn suite_ordering_and_exit_code() {
        let empty = run_suite(&[], &Check::ALL, Q, 1);
        assert_eq!(empty.reports.len(), 0);
        assert_eq!(empty.exit_code(), 0);
        let corpus = vec![
            boolean_algebra(3),
            partition_lattice(4).unwrap(),
            chain_lattice(3),
        ];
        let s = run_suite(&corpus, &Check::ALL, Q, 1);
        assert_eq!(s.reports.len(), 27);
        assert_eq!(s.count(Verdict::Fail), 0);
        assert_eq!(s.reports[0].subject, "B3");
        assert_eq!(s.reports[9].check, "theorem");
        assert_eq!(
            s.to_tsv(false),
            run_suite(&corpus, &Check::ALL, Q, 1).to_tsv(false)
        );
    }

    #[test]
    fn check_names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }
}
