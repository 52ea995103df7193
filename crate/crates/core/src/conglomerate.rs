//! Kernels, conglomerates and local conglomerates.
//!
//! All three are independent sets (no edge between two members, no member
//! with a self-loop). They differ in which outside sentences they must
//! absorb, i.e. which sentences must have a successor inside the set:
//!
//! * a kernel absorbs every outside sentence;
//! * a conglomerate absorbs every outside non-sink;
//! * a local conglomerate absorbs every non-sink it points at.
//!
//! Every kernel is a conglomerate and every conglomerate is a local
//! conglomerate. The conglomerates are exactly the true-sets of classical
//! labellings.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grounded::{phi, PartialSet};
use crate::labelling::Labelling;
use crate::limits::Limits;
use crate::set::SentenceSet;
use crate::system::FSystem;

/// Systems at least this large split the top of the subset search across
/// the rayon pool.
const PARALLEL_MIN_SENTENCES: usize = 14;
const PARALLEL_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetKind {
    Kernel,
    Conglomerate,
    LocalConglomerate,
    MaximalLocalConglomerate,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SetKind::Kernel => "kernel",
            SetKind::Conglomerate => "conglomerate",
            SetKind::LocalConglomerate => "local-conglomerate",
            SetKind::MaximalLocalConglomerate => "maximal-local-conglomerate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub kind: SetKind,
    /// Pairwise distinct, canonically ordered.
    pub sets: Vec<SentenceSet>,
    /// Every qualifying set is listed.
    pub exhaustive: bool,
}

/// No member says another member (or itself) is false.
pub fn is_independent(sys: &FSystem, set: &SentenceSet) -> bool {
    sys.predecessors_of_set(set).is_disjoint(set)
}

pub fn is_conglomerate(sys: &FSystem, set: &SentenceSet) -> bool {
    is_independent(sys, set)
        && set
            .complement()
            .difference(sys.sinks())
            .is_subset(&sys.predecessors_of_set(set))
}

pub fn is_kernel(sys: &FSystem, set: &SentenceSet) -> bool {
    is_independent(sys, set) && set.complement().is_subset(&sys.predecessors_of_set(set))
}

pub fn is_local_conglomerate(sys: &FSystem, set: &SentenceSet) -> bool {
    is_independent(sys, set)
        && sys
            .successors_of_set(set)
            .difference(sys.sinks())
            .is_subset(&sys.predecessors_of_set(set))
}

/// Whether `set` satisfies the predicate for `kind`.
///
/// Maximality is checked against the whole local-conglomerate family, so
/// that case is exponential.
pub fn is_kind(sys: &FSystem, kind: SetKind, set: &SentenceSet) -> bool {
    match kind {
        SetKind::Kernel => is_kernel(sys, set),
        SetKind::Conglomerate => is_conglomerate(sys, set),
        SetKind::LocalConglomerate => is_local_conglomerate(sys, set),
        SetKind::MaximalLocalConglomerate => {
            is_local_conglomerate(sys, set)
                && local_conglomerates(sys)
                    .iter()
                    .all(|other| other == set || !set.is_subset(other))
        }
    }
}

/// Lists every set of the given kind.
///
/// Backtracks over sentences in canonical order, trying "exclude" before
/// "include". A branch dies as soon as independence breaks or some
/// sentence that must be absorbed has no remaining way to be.
pub fn enumerate(sys: &FSystem, kind: SetKind, limits: &Limits) -> Result<SolverResult> {
    if sys.len() > limits.max_sentences {
        return Err(Error::CeilingExceeded {
            what: "sentences for exhaustive set enumeration",
            limit: limits.max_sentences,
            actual: sys.len(),
        });
    }
    let sets = match kind {
        SetKind::MaximalLocalConglomerate => maximal_only(local_conglomerates(sys)),
        _ => {
            let mut sets = subsets(sys, kind);
            sets.sort();
            sets
        }
    };
    Ok(SolverResult { kind, sets, exhaustive: true })
}

fn local_conglomerates(sys: &FSystem) -> Vec<SentenceSet> {
    subsets(sys, SetKind::LocalConglomerate)
}

/// Keeps the inclusion-maximal members of `family`, canonically ordered.
pub fn maximal_only(mut family: Vec<SentenceSet>) -> Vec<SentenceSet> {
    family.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<SentenceSet> = Vec::new();
    for set in family {
        // Any strict superset is larger, hence already considered.
        if !maximal.iter().any(|m| set.is_subset(m)) {
            maximal.push(set);
        }
    }
    maximal.sort();
    maximal
}

/// The classical labelling that is T exactly on the conglomerate `set`.
pub fn labelling_of(sys: &FSystem, set: &SentenceSet) -> Result<Labelling> {
    sys.check_set(set)?;
    if !is_conglomerate(sys, set) {
        return Err(Error::Precondition(format!(
            "{:?} is not a conglomerate",
            sys.names_of(set)
        )));
    }
    Ok(Labelling::classical_from_set(set))
}

/// The pair a local conglomerate induces: its members as true, everything
/// it points at or is pointed at by as false.
pub fn induced_pair(sys: &FSystem, set: &SentenceSet) -> PartialSet {
    PartialSet::new(
        set.clone(),
        sys.successors_of_set(set).union(&sys.predecessors_of_set(set)),
    )
}

/// Adds `x` to the local conglomerate `set`.
///
/// `x` must be in the true component of `phi` applied to the pair `set`
/// induces; the result is then again a local conglomerate.
pub fn extend_local_conglomerate(sys: &FSystem, set: &SentenceSet, x: usize) -> Result<SentenceSet> {
    sys.check_set(set)?;
    if !is_local_conglomerate(sys, set) {
        return Err(Error::Precondition(format!(
            "{:?} is not a local conglomerate",
            sys.names_of(set)
        )));
    }
    if x >= sys.len() {
        return Err(Error::Precondition(format!("sentence index {x} out of range")));
    }
    let derived = phi(sys, &induced_pair(sys, set));
    if !derived.plus.contains(x) {
        return Err(Error::Precondition(format!(
            "{} is not derivable as true from {:?}",
            sys.name(x),
            sys.names_of(set)
        )));
    }
    let mut extended = set.clone();
    extended.insert(x);
    Ok(extended)
}

struct SubsetSearch<'a> {
    sys: &'a FSystem,
    kind: SetKind,
}

#[derive(Clone)]
struct State {
    /// Next sentence to decide.
    next: usize,
    chosen: SentenceSet,
    /// Sentences that can no longer join: neighbours of `chosen` and
    /// self-looping sentences.
    blocked: SentenceSet,
}

fn subsets(sys: &FSystem, kind: SetKind) -> Vec<SentenceSet> {
    let search = SubsetSearch { sys, kind };
    let blocked = SentenceSet::from_indices(sys.len(), (0..sys.len()).filter(|&x| sys.has_edge(x, x)));
    let root = State {
        next: 0,
        chosen: sys.empty_set(),
        blocked,
    };
    if !search.feasible(&root) {
        return Vec::new();
    }
    let mut out = Vec::new();
    search.run(root, &mut out);
    out
}

impl SubsetSearch<'_> {
    fn run(&self, state: State, out: &mut Vec<SentenceSet>) {
        let n = self.sys.len();
        if state.next == n {
            if self.accepts(&state.chosen) {
                out.push(state.chosen);
            }
            return;
        }
        let children = self.children(state);
        if n >= PARALLEL_MIN_SENTENCES && children.first().is_some_and(|c| c.next <= PARALLEL_DEPTH) {
            let parts: Vec<Vec<SentenceSet>> = children
                .into_par_iter()
                .map(|child| {
                    let mut part = Vec::new();
                    self.run(child, &mut part);
                    part
                })
                .collect();
            out.extend(parts.into_iter().flatten());
        } else {
            for child in children {
                self.run(child, out);
            }
        }
    }

    /// Feasible successor states: exclude first, then include.
    fn children(&self, state: State) -> Vec<State> {
        let x = state.next;
        let mut children = Vec::with_capacity(2);
        let excluded = State {
            next: x + 1,
            chosen: state.chosen.clone(),
            blocked: state.blocked.clone(),
        };
        if self.feasible(&excluded) {
            children.push(excluded);
        }
        if !state.blocked.contains(x) {
            let mut chosen = state.chosen;
            chosen.insert(x);
            let mut blocked = state.blocked;
            blocked.union_with(self.sys.successors(x));
            blocked.union_with(self.sys.predecessors(x));
            let included = State { next: x + 1, chosen, blocked };
            if self.feasible(&included) {
                children.push(included);
            }
        }
        children
    }

    /// Every sentence already known to stay outside and needing absorption
    /// still has a successor that is chosen or could be.
    fn feasible(&self, state: &State) -> bool {
        let sys = self.sys;
        let out_for_sure = |y: usize| !state.chosen.contains(y) && (y < state.next || state.blocked.contains(y));
        let absorbable = |y: usize| {
            sys.successor_list(y)
                .iter()
                .any(|&z| state.chosen.contains(z) || (z >= state.next && !state.blocked.contains(z)))
        };
        match self.kind {
            SetKind::Kernel => (0..sys.len()).filter(|&y| out_for_sure(y)).all(absorbable),
            SetKind::Conglomerate => (0..sys.len())
                .filter(|&y| !sys.is_sink(y) && out_for_sure(y))
                .all(absorbable),
            SetKind::LocalConglomerate | SetKind::MaximalLocalConglomerate => sys
                .successors_of_set(&state.chosen)
                .difference(sys.sinks())
                .iter()
                .all(absorbable),
        }
    }

    fn accepts(&self, set: &SentenceSet) -> bool {
        match self.kind {
            SetKind::Kernel => is_kernel(self.sys, set),
            SetKind::Conglomerate => is_conglomerate(self.sys, set),
            SetKind::LocalConglomerate | SetKind::MaximalLocalConglomerate => {
                is_local_conglomerate(self.sys, set)
            }
        }
    }
}
