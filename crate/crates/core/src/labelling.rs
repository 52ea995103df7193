//! Three-valued labellings, paradoxicality and referential classification.
//!
//! A labelling assigns T, F or U to every sentence such that at every
//! non-sink `x`: `x` is F iff some successor is T, and `x` is T iff every
//! successor is F. Sinks are unconstrained.
//!
//! Enumeration is a small constraint search: each sentence carries a domain
//! of still-possible labels, the two biconditionals are propagated to a
//! fixpoint after every choice, and branching happens on sinks first (the
//! only genuinely free choices) and then on non-sinks left open by cycles.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::SentenceSet;
use crate::system::FSystem;

/// Default cap on the number of labellings collected by
/// [`enumerate_labellings`].
pub const DEFAULT_LABELLING_LIMIT: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    T,
    F,
    U,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::T, Label::F, Label::U];

    fn bit(self) -> u8 {
        match self {
            Label::T => BIT_T,
            Label::F => BIT_F,
            Label::U => BIT_U,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::T => "T",
            Label::F => "F",
            Label::U => "U",
        };
        f.write_str(s)
    }
}

/// A total assignment of labels, indexed by sentence.
///
/// Labellings order lexicographically by their label vectors with
/// `T < F < U`, which is the canonical order of every emitted list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labelling {
    labels: Vec<Label>,
}

impl Labelling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labelling { labels }
    }

    /// Builds a labelling from `(name, label)` pairs, which must cover every
    /// sentence of `sys`.
    pub fn from_names<I, S>(sys: &FSystem, pairs: I) -> Result<Labelling>
    where
        I: IntoIterator<Item = (S, Label)>,
        S: AsRef<str>,
    {
        let mut labels = vec![None; sys.len()];
        for (name, label) in pairs {
            labels[sys.index_of(name.as_ref())?] = Some(label);
        }
        let missing: Vec<String> = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_none())
            .map(|(x, _)| sys.name(x).to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::NotTotal(missing));
        }
        Ok(Labelling {
            labels: labels.into_iter().flatten().collect(),
        })
    }

    /// T on `set`, F everywhere else.
    pub fn classical_from_set(set: &SentenceSet) -> Labelling {
        let labels = (0..set.universe())
            .map(|x| if set.contains(x) { Label::T } else { Label::F })
            .collect();
        Labelling { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, x: usize) -> Label {
        self.labels[x]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.labels.iter().all(|&l| l != Label::U)
    }

    /// The sentences carrying `label`.
    pub fn with_label(&self, label: Label) -> SentenceSet {
        SentenceSet::from_indices(
            self.labels.len(),
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == label)
                .map(|(x, _)| x),
        )
    }

    pub fn truths(&self) -> SentenceSet {
        self.with_label(Label::T)
    }

    /// Name-keyed view, canonically ordered.
    pub fn to_named(&self, sys: &FSystem) -> BTreeMap<String, Label> {
        self.labels
            .iter()
            .enumerate()
            .map(|(x, &l)| (sys.name(x).to_string(), l))
            .collect()
    }
}

/// Which half of the labelling biconditionals a sentence breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Clause {
    /// `x` is F iff some successor is T.
    Falsity,
    /// `x` is T iff every successor is F.
    Truth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sentence: usize,
    pub clause: Clause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both biconditionals at every non-sink.
pub fn check_labelling(sys: &FSystem, cand: &Labelling) -> Result<Verdict> {
    if cand.len() != sys.len() {
        return Err(Error::Precondition(format!(
            "labelling over {} sentences checked against a system of {}",
            cand.len(),
            sys.len()
        )));
    }
    let mut violations = Vec::new();
    for x in 0..sys.len() {
        if sys.is_sink(x) {
            continue;
        }
        let succ = sys.successor_list(x);
        let some_true = succ.iter().any(|&z| cand.get(z) == Label::T);
        let all_false = succ.iter().all(|&z| cand.get(z) == Label::F);
        if (cand.get(x) == Label::F) != some_true {
            violations.push(Violation { sentence: x, clause: Clause::Falsity });
        }
        if (cand.get(x) == Label::T) != all_false {
            violations.push(Violation { sentence: x, clause: Clause::Truth });
        }
    }
    Ok(Verdict { violations })
}

/// Whether enumeration may use U.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    All,
    Classical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabellingEnumeration {
    /// Canonically ordered.
    pub labellings: Vec<Labelling>,
    /// More labellings exist than the limit allowed.
    pub truncated: bool,
}

/// Collects valid labellings (or only classical ones) in canonical order,
/// stopping once more than `limit` have been found.
pub fn enumerate_labellings(sys: &FSystem, mode: Mode, limit: usize) -> LabellingEnumeration {
    let mut labellings = Vec::new();
    let mut truncated = false;
    search(sys, initial_domains(sys, mode), &mut |l| {
        if labellings.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        labellings.push(l.clone());
        ControlFlow::Continue(())
    });
    labellings.sort();
    LabellingEnumeration { labellings, truncated }
}

/// Calls `visit` on every valid labelling, in search order, until it breaks.
pub fn for_each_labelling(
    sys: &FSystem,
    mode: Mode,
    mut visit: impl FnMut(&Labelling) -> ControlFlow<()>,
) {
    search(sys, initial_domains(sys, mode), &mut visit);
}

/// Labellings whose T-set is exactly `truths`, canonically ordered.
pub fn labellings_with_truths(sys: &FSystem, truths: &SentenceSet, limit: usize) -> Result<LabellingEnumeration> {
    sys.check_set(truths)?;
    let dom = (0..sys.len())
        .map(|x| if truths.contains(x) { BIT_T } else { BIT_F | BIT_U })
        .collect();
    let mut labellings = Vec::new();
    let mut truncated = false;
    search(sys, dom, &mut |l| {
        if labellings.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        labellings.push(l.clone());
        ControlFlow::Continue(())
    });
    labellings.sort();
    Ok(LabellingEnumeration { labellings, truncated })
}

/// A system is paradoxical iff it has no classical labelling.
pub fn is_paradoxical(sys: &FSystem) -> bool {
    !satisfiable(sys, initial_domains(sys, Mode::Classical))
}

/// Whether some labelling (restricted by `mode`) gives `x` the label `label`.
pub fn can_label(sys: &FSystem, mode: Mode, x: usize, label: Label) -> bool {
    let mut dom = initial_domains(sys, mode);
    dom[x] &= label.bit();
    dom[x] != 0 && satisfiable(sys, dom)
}

/// Sentences that every labelling labels U.
pub fn paradoxical_sentences(sys: &FSystem) -> SentenceSet {
    let flags: Vec<bool> = (0..sys.len())
        .into_par_iter()
        .map(|x| {
            let mut dom = initial_domains(sys, Mode::All);
            dom[x] = BIT_T | BIT_F;
            !satisfiable(sys, dom)
        })
        .collect();
    SentenceSet::from_indices(sys.len(), flags.iter().enumerate().filter(|(_, &p)| p).map(|(x, _)| x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SentenceStatus {
    /// F under every classical labelling.
    ReferentialContradiction,
    /// T under every classical labelling.
    ReferentialTautology,
    /// Both values occur among classical labellings.
    Contingent,
    /// U under every labelling (only in paradoxical systems).
    Paradoxical,
    /// The system has no classical labelling, so the referential statuses
    /// would hold vacuously; they are reported as undefined instead.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceClassification {
    pub paradoxical_system: bool,
    /// Indexed by sentence.
    pub statuses: Vec<SentenceStatus>,
}

impl SentenceClassification {
    pub fn status(&self, x: usize) -> SentenceStatus {
        self.statuses[x]
    }

    pub fn to_named(&self, sys: &FSystem) -> BTreeMap<String, SentenceStatus> {
        self.statuses
            .iter()
            .enumerate()
            .map(|(x, &s)| (sys.name(x).to_string(), s))
            .collect()
    }
}

pub fn classify_sentences(sys: &FSystem) -> SentenceClassification {
    if is_paradoxical(sys) {
        let paradoxical = paradoxical_sentences(sys);
        let statuses = (0..sys.len())
            .map(|x| {
                if paradoxical.contains(x) {
                    SentenceStatus::Paradoxical
                } else {
                    SentenceStatus::Undefined
                }
            })
            .collect();
        return SentenceClassification { paradoxical_system: true, statuses };
    }
    let statuses = (0..sys.len())
        .into_par_iter()
        .map(|x| {
            let can_t = can_label(sys, Mode::Classical, x, Label::T);
            let can_f = can_label(sys, Mode::Classical, x, Label::F);
            match (can_t, can_f) {
                (true, true) => SentenceStatus::Contingent,
                (true, false) => SentenceStatus::ReferentialTautology,
                (false, true) => SentenceStatus::ReferentialContradiction,
                (false, false) => unreachable!("non-paradoxical system labels every sentence classically"),
            }
        })
        .collect();
    SentenceClassification { paradoxical_system: false, statuses }
}

const BIT_T: u8 = 1;
const BIT_F: u8 = 2;
const BIT_U: u8 = 4;

fn initial_domains(sys: &FSystem, mode: Mode) -> Vec<u8> {
    let d = match mode {
        Mode::All => BIT_T | BIT_F | BIT_U,
        Mode::Classical => BIT_T | BIT_F,
    };
    vec![d; sys.len()]
}

fn satisfiable(sys: &FSystem, dom: Vec<u8>) -> bool {
    let mut found = false;
    search(sys, dom, &mut |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

fn search(sys: &FSystem, mut dom: Vec<u8>, visit: &mut dyn FnMut(&Labelling) -> ControlFlow<()>) {
    // Sinks first, then the rest; both in canonical order.
    let order: Vec<usize> = sys
        .sinks()
        .iter()
        .chain((0..sys.len()).filter(|&x| !sys.is_sink(x)))
        .collect();
    if propagate(sys, &mut dom) {
        let _ = branch(sys, &order, dom, visit);
    }
}

fn branch(
    sys: &FSystem,
    order: &[usize],
    dom: Vec<u8>,
    visit: &mut dyn FnMut(&Labelling) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let Some(&x) = order.iter().find(|&&x| dom[x].count_ones() > 1) else {
        let labelling = Labelling::new(dom.iter().map(|&d| from_bit(d)).collect());
        // Propagation handles self-loops only approximately; a leaf is
        // reported only if it really satisfies the constraints.
        if check_labelling(sys, &labelling).is_ok_and(|v| v.is_valid()) {
            return visit(&labelling);
        }
        return ControlFlow::Continue(());
    };
    for label in Label::ALL {
        if dom[x] & label.bit() == 0 {
            continue;
        }
        let mut next = dom.clone();
        next[x] = label.bit();
        if propagate(sys, &mut next) {
            branch(sys, order, next, visit)?;
        }
    }
    ControlFlow::Continue(())
}

fn counts(succ: &[usize], dom: &[u8]) -> (usize, usize, usize, usize) {
    let (mut n_f, mut n_t, mut n_non_t, mut n_u) = (0, 0, 0, 0);
    for &z in succ {
        let d = dom[z];
        n_f += usize::from(d & BIT_F != 0);
        n_t += usize::from(d & BIT_T != 0);
        n_non_t += usize::from(d & (BIT_F | BIT_U) != 0);
        n_u += usize::from(d & BIT_U != 0);
    }
    (n_f, n_t, n_non_t, n_u)
}

fn from_bit(d: u8) -> Label {
    match d {
        BIT_T => Label::T,
        BIT_F => Label::F,
        BIT_U => Label::U,
        _ => unreachable!("domain {d:#b} is not a singleton"),
    }
}

/// Narrows domains until nothing changes; false if some domain empties.
fn propagate(sys: &FSystem, dom: &mut [u8]) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..sys.len() {
            if sys.is_sink(x) {
                continue;
            }
            let succ = sys.successor_list(x);
            let deg = succ.len();
            let (n_f, n_t, n_non_t, n_u) = counts(succ, dom);

            let mut support = 0;
            if n_f == deg {
                support |= BIT_T;
            }
            if n_t > 0 {
                support |= BIT_F;
            }
            if n_non_t == deg && n_u > 0 {
                support |= BIT_U;
            }
            let narrowed = dom[x] & support;
            if narrowed == 0 {
                return false;
            }
            let (mut n_f, mut n_t, mut n_non_t, mut n_u) = (n_f, n_t, n_non_t, n_u);
            if narrowed != dom[x] {
                dom[x] = narrowed;
                changed = true;
                if sys.has_edge(x, x) {
                    (n_f, n_t, n_non_t, n_u) = counts(succ, dom);
                }
            }

            let dx = dom[x];
            for &z in succ {
                let d = dom[z];
                let others_f = n_f - usize::from(d & BIT_F != 0) == deg - 1;
                let others_t = n_t - usize::from(d & BIT_T != 0) > 0;
                let others_non_t = n_non_t - usize::from(d & (BIT_F | BIT_U) != 0) == deg - 1;
                let others_u = n_u - usize::from(d & BIT_U != 0) > 0;
                let mut keep = 0;
                for v in [BIT_T, BIT_F, BIT_U] {
                    if d & v == 0 {
                        continue;
                    }
                    let by_t = dx & BIT_T != 0 && v == BIT_F && others_f;
                    let by_f = dx & BIT_F != 0 && (v == BIT_T || others_t);
                    let by_u = dx & BIT_U != 0 && v != BIT_T && others_non_t && (v == BIT_U || others_u);
                    if by_t || by_f || by_u {
                        keep |= v;
                    }
                }
                if keep == 0 {
                    return false;
                }
                if keep != d {
                    dom[z] = keep;
                    changed = true;
                }
            }
        }
    }
    true
}
