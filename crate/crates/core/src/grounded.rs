//! Groundedness via a Kripke-style jump operator.
//!
//! A partial set `(plus, minus)` records sentences known true and known
//! false. [`phi`] keeps the sinks already placed and re-derives every
//! non-sink: it is true when everything it denies is known false, and false
//! when something it denies is known true. Starting from a ground base (a
//! true/false split of the sinks) and iterating reaches the least fixed
//! point above that base.

use std::collections::BTreeSet;
use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::set::SentenceSet;
use crate::system::FSystem;

/// A pair of sentence sets; the two sides may overlap.
///
/// `≤` is componentwise inclusion, exposed as [`PartialSet::le`]. The `Ord`
/// impl is only the canonical listing order: the per-sentence membership
/// vector compared lexicographically with
/// true-only < false-only < neither < both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialSet {
    pub plus: SentenceSet,
    pub minus: SentenceSet,
}

impl PartialSet {
    pub fn new(plus: SentenceSet, minus: SentenceSet) -> Self {
        assert_eq!(plus.universe(), minus.universe(), "components from different systems");
        PartialSet { plus, minus }
    }

    pub fn empty(sys: &FSystem) -> Self {
        PartialSet::new(sys.empty_set(), sys.empty_set())
    }

    /// Componentwise inclusion.
    pub fn le(&self, other: &PartialSet) -> bool {
        self.plus.is_subset(&other.plus) && self.minus.is_subset(&other.minus)
    }

    pub fn is_consistent(&self) -> bool {
        self.plus.is_disjoint(&self.minus)
    }

    /// Every sentence lands on some side.
    pub fn is_complete(&self) -> bool {
        self.plus.union(&self.minus).len() == self.plus.universe()
    }

    fn rank(&self, x: usize) -> u8 {
        match (self.plus.contains(x), self.minus.contains(x)) {
            (true, false) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, true) => 3,
        }
    }

    /// Names on each side, canonically ordered.
    pub fn to_named(&self, sys: &FSystem) -> NamedPair {
        NamedPair {
            plus: sys.names_of(&self.plus),
            minus: sys.names_of(&self.minus),
        }
    }
}

impl Ord for PartialSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.plus.universe();
        (0..n)
            .map(|x| self.rank(x))
            .cmp((0..other.plus.universe()).map(|x| other.rank(x)))
    }
}

impl PartialOrd for PartialSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedPair {
    pub plus: Vec<String>,
    pub minus: Vec<String>,
}

impl fmt::Display for NamedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}}, {{{}}})", self.plus.join(", "), self.minus.join(", "))
    }
}

/// A true/false split of exactly the sinks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundBase(PartialSet);

impl GroundBase {
    pub fn new(sys: &FSystem, pair: PartialSet) -> Result<Self> {
        if pair.plus.universe() != sys.len() {
            return Err(Error::Precondition("ground base drawn from another system".into()));
        }
        if !pair.is_consistent() || pair.plus.union(&pair.minus) != *sys.sinks() {
            return Err(Error::Precondition(format!(
                "{} does not split the sinks {:?}",
                pair.to_named(sys),
                sys.names_of(sys.sinks())
            )));
        }
        Ok(GroundBase(pair))
    }

    pub fn pair(&self) -> &PartialSet {
        &self.0
    }
}

/// Every ground base, ordered like labellings of the sinks (true before false,
/// first sink most significant).
pub fn ground_bases(sys: &FSystem, limits: &Limits) -> Result<Vec<GroundBase>> {
    let sinks: Vec<usize> = sys.sinks().iter().collect();
    let k = sinks.len();
    if k > limits.max_sinks {
        return Err(Error::CeilingExceeded {
            what: "sinks for ground-base enumeration",
            limit: limits.max_sinks,
            actual: k,
        });
    }
    let bases = (0u64..1 << k)
        .map(|code| {
            let mut pair = PartialSet::empty(sys);
            for (i, &s) in sinks.iter().enumerate() {
                if code >> (k - 1 - i) & 1 == 0 {
                    pair.plus.insert(s);
                } else {
                    pair.minus.insert(s);
                }
            }
            GroundBase(pair)
        })
        .collect();
    Ok(bases)
}

/// One application of the jump operator.
pub fn phi(sys: &FSystem, pair: &PartialSet) -> PartialSet {
    let mut plus = sys.sinks_of(&pair.plus);
    let mut minus = sys.sinks_of(&pair.minus);
    for x in 0..sys.len() {
        if sys.is_sink(x) {
            continue;
        }
        if sys.successors(x).is_subset(&pair.minus) {
            plus.insert(x);
        }
        if sys.successors(x).intersects(&pair.plus) {
            minus.insert(x);
        }
    }
    PartialSet { plus, minus }
}

pub fn is_fixed_point(sys: &FSystem, pair: &PartialSet) -> bool {
    phi(sys, pair) == *pair
}

/// The iteration from one ground base to its least fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfpTrace {
    /// `phi^1(base), phi^2(base), ...`, ending at the first repeat.
    pub trace: Vec<PartialSet>,
}

impl LfpTrace {
    pub fn fixed_point(&self) -> &PartialSet {
        self.trace.last().expect("at least one application")
    }

    /// Number of `phi` applications, the confirming one included.
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Iterates [`phi`] from `base` until it stabilises.
pub fn lfp(sys: &FSystem, base: &GroundBase) -> LfpTrace {
    let mut trace = Vec::new();
    let mut current = base.pair().clone();
    loop {
        let next = phi(sys, &current);
        let stable = next == current;
        trace.push(next.clone());
        if stable {
            return LfpTrace { trace };
        }
        current = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Groundedness {
    /// Every ground base leads to a complete fixed point.
    Grounded,
    /// Some but not all do.
    RelativelyGrounded,
    Ungrounded,
}

impl fmt::Display for Groundedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Groundedness::Grounded => "grounded",
            Groundedness::RelativelyGrounded => "relatively-grounded",
            Groundedness::Ungrounded => "ungrounded",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseOutcome {
    pub base: GroundBase,
    pub lfp: LfpTrace,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundednessReport {
    pub verdict: Groundedness,
    pub bases: Vec<BaseOutcome>,
}

pub fn classify_groundedness(sys: &FSystem, limits: &Limits) -> Result<GroundednessReport> {
    let bases: Vec<BaseOutcome> = ground_bases(sys, limits)?
        .into_par_iter()
        .map(|base| {
            let lfp = lfp(sys, &base);
            let complete = lfp.fixed_point().is_complete();
            BaseOutcome { base, lfp, complete }
        })
        .collect();
    let complete = bases.iter().filter(|b| b.complete).count();
    let verdict = if complete == bases.len() {
        Groundedness::Grounded
    } else if complete > 0 {
        Groundedness::RelativelyGrounded
    } else {
        Groundedness::Ungrounded
    };
    Ok(GroundednessReport { verdict, bases })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FixedPointQuery {
    /// Also scan pairs whose sides overlap (smaller ceiling).
    pub include_inconsistent: bool,
    pub complete_only: bool,
    /// Keep only the `≤`-maximal consistent fixed points.
    pub maximal_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointEntry {
    pub point: PartialSet,
    pub complete: bool,
    pub consistent: bool,
    /// `≤`-maximal among the consistent fixed points.
    pub maximal: bool,
    /// The least fixed point of some ground base.
    pub least_for_base: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport {
    /// Canonically ordered, after the query's filters.
    pub points: Vec<FixedPointEntry>,
    pub groundedness: Groundedness,
}

/// Scans candidate pairs for fixed points of [`phi`].
///
/// Candidates are built one sentence at a time in canonical order; once a
/// sentence and all of its successors are placed, its placement must agree
/// with what `phi` derives for it, otherwise the branch is cut.
pub fn enumerate_fixed_points(sys: &FSystem, query: FixedPointQuery, limits: &Limits) -> Result<FixedPointReport> {
    let ceiling = if query.include_inconsistent {
        limits.max_inconsistent_fixed_point_sentences
    } else {
        limits.max_fixed_point_sentences
    };
    if sys.len() > ceiling {
        return Err(Error::CeilingExceeded {
            what: "sentences for fixed-point enumeration",
            limit: ceiling,
            actual: sys.len(),
        });
    }
    let groundedness = classify_groundedness(sys, limits)?;
    let least: BTreeSet<&PartialSet> = groundedness.bases.iter().map(|b| b.lfp.fixed_point()).collect();

    let mut found = Vec::new();
    let mut scan = FixedPointScan::new(sys, query.include_inconsistent);
    scan.run(0, &mut found);
    found.sort();

    // Largest first: anything strictly above a point is bigger, and if such
    // a point exists then so does a maximal one, which is already listed.
    let mut by_size: Vec<&PartialSet> = found.iter().filter(|p| p.is_consistent()).collect();
    by_size.sort_by_key(|p| std::cmp::Reverse(p.plus.len() + p.minus.len()));
    let mut maximal: Vec<&PartialSet> = Vec::new();
    for p in by_size {
        if !maximal.iter().any(|q| p.le(q)) {
            maximal.push(p);
        }
    }
    let maximal: BTreeSet<&PartialSet> = maximal.into_iter().collect();
    let mut points: Vec<FixedPointEntry> = found
        .iter()
        .map(|p| FixedPointEntry {
            point: p.clone(),
            complete: p.is_complete(),
            consistent: p.is_consistent(),
            maximal: maximal.contains(p),
            least_for_base: least.contains(p),
        })
        .collect();
    points.retain(|e| (!query.complete_only || e.complete) && (!query.maximal_only || e.maximal));
    Ok(FixedPointReport { points, groundedness: groundedness.verdict })
}

struct FixedPointScan<'a> {
    sys: &'a FSystem,
    options: &'static [(bool, bool)],
    /// `checks[i]`: sentences whose placement is decidable once sentence `i`
    /// is placed.
    checks: Vec<Vec<usize>>,
    current: PartialSet,
}

impl<'a> FixedPointScan<'a> {
    fn new(sys: &'a FSystem, include_inconsistent: bool) -> Self {
        const CONSISTENT: &[(bool, bool)] = &[(true, false), (false, true), (false, false)];
        const ALL: &[(bool, bool)] = &[(true, false), (false, true), (false, false), (true, true)];
        let mut checks = vec![Vec::new(); sys.len()];
        for y in 0..sys.len() {
            let last = sys.successor_list(y).iter().copied().fold(y, usize::max);
            checks[last].push(y);
        }
        FixedPointScan {
            sys,
            options: if include_inconsistent { ALL } else { CONSISTENT },
            checks,
            current: PartialSet::empty(sys),
        }
    }

    fn run(&mut self, x: usize, found: &mut Vec<PartialSet>) {
        if x == self.sys.len() {
            debug_assert!(is_fixed_point(self.sys, &self.current));
            found.push(self.current.clone());
            return;
        }
        for &(in_plus, in_minus) in self.options {
            if in_plus {
                self.current.plus.insert(x);
            }
            if in_minus {
                self.current.minus.insert(x);
            }
            if self.checks[x].iter().all(|&y| self.agrees(y)) {
                self.run(x + 1, found);
            }
            self.current.plus.remove(x);
            self.current.minus.remove(x);
        }
    }

    fn agrees(&self, y: usize) -> bool {
        let sys = self.sys;
        let pair = &self.current;
        let (derived_plus, derived_minus) = if sys.is_sink(y) {
            (pair.plus.contains(y), pair.minus.contains(y))
        } else {
            (
                sys.successors(y).is_subset(&pair.minus),
                sys.successors(y).intersects(&pair.plus),
            )
        };
        derived_plus == pair.plus.contains(y) && derived_minus == pair.minus.contains(y)
    }
}
