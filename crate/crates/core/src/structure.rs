//! Structural tests that guarantee paradox or its absence without searching
//! for labellings.
//!
//! All detectors here are sufficient conditions only. A `false` from
//! [`paradox_sufficient`] means "no structural guarantee", not "consistent".
//!
//! # Reading of the chord conditions
//!
//! [`dyrkolbotn_guarantee`] checks every odd simple cycle `c0 -> c1 -> ... ->
//! c(k-1) -> c0` for one of three escape conditions. The source states them
//! informally; this module uses the following reading.
//!
//! * A *symmetric pair* is two cycle nodes that deny each other.
//! * A *chord* is an arc between two cycle nodes that are not consecutive on
//!   the cycle.
//! * Two chords *cross* when their endpoints interleave along the cycle, and
//!   are *consecutive* when the source of one immediately follows the source
//!   of the other.
//!
//! A cycle escapes when it has at least two symmetric pairs, or two crossing
//! consecutive chords, or two chords whose targets are consecutive.
//! [`ChordReading::Short`] is a narrower reading (symmetric arcs along the
//! cycle, chords skipping exactly one node) kept for comparison.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::labelling::is_paradoxical;
use crate::limits::Limits;
use crate::system::FSystem;

/// Every two-step path is matched by a direct arc.
pub fn is_transitive(sys: &FSystem) -> bool {
    (0..sys.len()).all(|x| closed_at(sys, x))
}

/// Nonempty and free of sinks.
pub fn is_serial(sys: &FSystem) -> bool {
    !sys.is_empty() && sys.sinks().is_empty()
}

pub fn is_unlimited_transitive(sys: &FSystem) -> bool {
    is_transitive(sys) && is_serial(sys)
}

/// Odd cycles on which every node denies exactly one sentence.
///
/// Each cycle starts at its smallest sentence; the list is sorted.
pub fn find_odd_cores(sys: &FSystem) -> Vec<Vec<usize>> {
    let n = sys.len();
    let next = |x: usize| -> Option<usize> {
        match sys.successor_list(x) {
            [y] => Some(*y),
            _ => None,
        }
    };
    // 0 = unvisited, 1 = on the current walk, 2 = finished.
    let mut state = vec![0u8; n];
    let mut cores = Vec::new();
    for start in 0..n {
        let mut walk = Vec::new();
        let mut x = start;
        loop {
            if state[x] == 2 {
                break;
            }
            if state[x] == 1 {
                let from = walk.iter().position(|&w| w == x).expect("node on walk");
                let cycle = &walk[from..];
                if cycle.len() % 2 == 1 {
                    let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
                    let mut rotated = cycle[min_at..].to_vec();
                    rotated.extend_from_slice(&cycle[..min_at]);
                    cores.push(rotated);
                }
                break;
            }
            state[x] = 1;
            walk.push(x);
            match next(x) {
                Some(y) => x = y,
                None => break,
            }
        }
        for w in walk {
            state[w] = 2;
        }
    }
    cores.sort();
    cores
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParadoxReason {
    UnlimitedTransitive,
    OddCore,
}

impl fmt::Display for ParadoxReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParadoxReason::UnlimitedTransitive => "unlimited-transitive",
            ParadoxReason::OddCore => "odd-core",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParadoxGuarantee {
    pub guaranteed: bool,
    pub reasons: Vec<ParadoxReason>,
}

pub fn paradox_sufficient(sys: &FSystem) -> ParadoxGuarantee {
    let mut reasons = Vec::new();
    if is_unlimited_transitive(sys) {
        reasons.push(ParadoxReason::UnlimitedTransitive);
    }
    if !find_odd_cores(sys).is_empty() {
        reasons.push(ParadoxReason::OddCore);
    }
    ParadoxGuarantee { guaranteed: !reasons.is_empty(), reasons }
}

/// Simple directed cycles, each starting at its smallest sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEnumeration {
    /// Canonically sorted.
    pub cycles: Vec<Vec<usize>>,
    /// False when a length, count or step budget cut the search short.
    pub exhaustive: bool,
}

/// Enumerates simple cycles of length at most `max_len`.
///
/// Each start vertex is searched independently (in parallel) over the
/// vertices above it, so budgets apply per start and the outcome does not
/// depend on scheduling.
pub fn simple_cycles(sys: &FSystem, max_len: usize, limits: &Limits) -> CycleEnumeration {
    let per_start: Vec<(Vec<Vec<usize>>, bool)> = (0..sys.len())
        .into_par_iter()
        .map(|s| cycles_from(sys, s, max_len, limits))
        .collect();
    let mut exhaustive = true;
    let mut cycles = Vec::new();
    for (found, complete) in per_start {
        exhaustive &= complete;
        cycles.extend(found);
    }
    if cycles.len() > limits.max_cycles {
        cycles.truncate(limits.max_cycles);
        exhaustive = false;
    }
    cycles.sort();
    CycleEnumeration { cycles, exhaustive }
}

fn cycles_from(sys: &FSystem, s: usize, max_len: usize, limits: &Limits) -> (Vec<Vec<usize>>, bool) {
    let n = sys.len();
    // Vertices >= s that can get back to s without dipping below it.
    let mut reaches = vec![false; n];
    reaches[s] = true;
    let mut stack = vec![s];
    while let Some(y) = stack.pop() {
        for &x in sys.predecessor_list(y) {
            if x > s && !reaches[x] {
                reaches[x] = true;
                stack.push(x);
            }
        }
    }

    struct Walk<'a> {
        sys: &'a FSystem,
        s: usize,
        max_len: usize,
        reaches: Vec<bool>,
        on_path: Vec<bool>,
        path: Vec<usize>,
        found: Vec<Vec<usize>>,
        steps: usize,
        max_steps: usize,
        max_cycles: usize,
        complete: bool,
        length_cut: bool,
    }

    impl Walk<'_> {
        fn extend(&mut self, x: usize) {
            for &y in self.sys.successor_list(x) {
                if !self.complete {
                    return;
                }
                self.steps += 1;
                if self.steps > self.max_steps || self.found.len() > self.max_cycles {
                    self.complete = false;
                    return;
                }
                if y == self.s {
                    self.found.push(self.path.clone());
                } else if y > self.s && self.reaches[y] && !self.on_path[y] {
                    if self.path.len() == self.max_len {
                        // A longer cycle may continue through y.
                        self.length_cut = true;
                        continue;
                    }
                    self.on_path[y] = true;
                    self.path.push(y);
                    self.extend(y);
                    self.path.pop();
                    self.on_path[y] = false;
                }
            }
        }
    }

    if max_len == 0 {
        return (Vec::new(), sys.edge_count() == 0);
    }
    let mut walk = Walk {
        sys,
        s,
        max_len,
        reaches,
        on_path: vec![false; n],
        path: vec![s],
        found: Vec::new(),
        steps: 0,
        max_steps: limits.max_search_steps,
        max_cycles: limits.max_cycles,
        complete: true,
        length_cut: false,
    };
    walk.on_path[s] = true;
    walk.extend(s);
    (walk.found, walk.complete && !walk.length_cut)
}

/// How the chord conditions are read; see the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChordReading {
    /// Any mutually pointing cycle nodes and arbitrary chords.
    #[default]
    Any,
    /// Symmetric arcs along the cycle and chords skipping one node.
    Short,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GuaranteeVerdict {
    /// Every odd cycle escapes, so a conglomerate exists.
    Holds,
    /// Some odd cycle meets none of the conditions; nothing follows.
    Fails,
    /// The cycle search was cut short before any failing cycle was seen.
    Unknown,
}

/// Two chords, each as `(source, target)`.
pub type ChordPair = ((usize, usize), (usize, usize));

/// What one odd cycle offers towards the escape conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEvidence {
    pub cycle: Vec<usize>,
    pub symmetric_pairs: Vec<(usize, usize)>,
    /// Chord pairs that cross and have consecutive sources.
    pub crossing_consecutive_chords: Vec<ChordPair>,
    /// Chord pairs whose targets are consecutive.
    pub consecutive_target_chords: Vec<ChordPair>,
}

impl CycleEvidence {
    pub fn escapes(&self) -> bool {
        self.symmetric_pairs.len() >= 2
            || !self.crossing_consecutive_chords.is_empty()
            || !self.consecutive_target_chords.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyrkolbotnReport {
    pub verdict: GuaranteeVerdict,
    /// One entry per odd cycle found, in canonical cycle order.
    pub cycles: Vec<CycleEvidence>,
}

pub fn dyrkolbotn_guarantee(sys: &FSystem, limits: &Limits) -> DyrkolbotnReport {
    dyrkolbotn_guarantee_with(sys, limits, ChordReading::Any)
}

pub fn dyrkolbotn_guarantee_with(sys: &FSystem, limits: &Limits, reading: ChordReading) -> DyrkolbotnReport {
    let found = simple_cycles(sys, limits.max_cycle_len, limits);
    let cycles: Vec<CycleEvidence> = found
        .cycles
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .map(|c| cycle_evidence(sys, c, reading))
        .collect();
    let verdict = if cycles.iter().any(|e| !e.escapes()) {
        GuaranteeVerdict::Fails
    } else if found.exhaustive {
        GuaranteeVerdict::Holds
    } else {
        GuaranteeVerdict::Unknown
    };
    DyrkolbotnReport { verdict, cycles }
}

fn cycle_evidence(sys: &FSystem, cycle: &[usize], reading: ChordReading) -> CycleEvidence {
    let k = cycle.len();
    let mut pos = vec![usize::MAX; sys.len()];
    for (i, &x) in cycle.iter().enumerate() {
        pos[x] = i;
    }
    let consecutive = |i: usize, j: usize| (i + 1) % k == j || (j + 1) % k == i;

    let mut symmetric_pairs = Vec::new();
    let mut chords = Vec::new();
    for (i, &u) in cycle.iter().enumerate() {
        for &v in sys.successor_list(u) {
            let j = pos[v];
            if j == usize::MAX || j == i {
                continue;
            }
            if consecutive(i, j) {
                // Count each mutual pair once, from the cycle arc.
                if (i + 1) % k == j && sys.has_edge(v, u) {
                    symmetric_pairs.push((u, v));
                }
                continue;
            }
            match reading {
                ChordReading::Short if (i + 2) % k != j => {}
                _ => chords.push((i, j)),
            }
        }
    }
    if reading == ChordReading::Any {
        symmetric_pairs.clear();
        for (i, &u) in cycle.iter().enumerate() {
            for &v in &cycle[i + 1..] {
                if sys.has_edge(u, v) && sys.has_edge(v, u) {
                    symmetric_pairs.push((u, v));
                }
            }
        }
    }

    // Whether position `p` lies strictly inside the forward arc from `a` to `b`.
    let inside = |a: usize, b: usize, p: usize| {
        let span = (b + k - a) % k;
        let off = (p + k - a) % k;
        off > 0 && off < span
    };
    let named = |(i, j): (usize, usize)| (cycle[i], cycle[j]);
    let mut crossing_consecutive_chords = Vec::new();
    let mut consecutive_target_chords = Vec::new();
    for (a, &c1) in chords.iter().enumerate() {
        for &c2 in &chords[a + 1..] {
            let (first, second) = if (c1.0 + 1) % k == c2.0 || (c1.1 + 1) % k == c2.1 {
                (c1, c2)
            } else {
                (c2, c1)
            };
            let distinct = [first.0, first.1, second.0, second.1];
            let all_distinct = (0..4).all(|p| (p + 1..4).all(|q| distinct[p] != distinct[q]));
            let crosses =
                all_distinct && inside(first.0, first.1, second.0) != inside(first.0, first.1, second.1);
            if crosses && (first.0 + 1) % k == second.0 {
                crossing_consecutive_chords.push((named(first), named(second)));
            }
            if (first.1 + 1) % k == second.1 {
                consecutive_target_chords.push((named(first), named(second)));
            }
        }
    }
    CycleEvidence {
        cycle: cycle.to_vec(),
        symmetric_pairs,
        crossing_consecutive_chords,
        consecutive_target_chords,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContradictionWitnesses {
    /// The system has a classical labelling.
    pub applicable: bool,
    /// Every `(x, y, z)` with `x -> y -> z` where everything denied by a
    /// sentence `x` denies is also denied by `x` directly. Each such `x` is a
    /// referential contradiction. On a transitive system this is every
    /// two-step path.
    pub triples: Vec<(usize, usize, usize)>,
    pub note: Option<String>,
}

/// Whether `x` denies everything its successors deny.
fn closed_at(sys: &FSystem, x: usize) -> bool {
    let succ = sys.successors(x);
    sys.successor_list(x).iter().all(|&y| sys.successors(y).is_subset(succ))
}

pub fn transitive_contradiction_witnesses(sys: &FSystem) -> ContradictionWitnesses {
    if is_paradoxical(sys) {
        return ContradictionWitnesses {
            applicable: false,
            triples: Vec::new(),
            note: Some("system is paradoxical".to_string()),
        };
    }
    let mut triples = Vec::new();
    for x in (0..sys.len()).filter(|&x| closed_at(sys, x)) {
        for &y in sys.successor_list(x) {
            for &z in sys.successor_list(y) {
                triples.push((x, y, z));
            }
        }
    }
    let note = (!is_transitive(sys)).then(|| "system is not transitive; only sentences closed under two steps are used".to_string());
    ContradictionWitnesses { applicable: true, triples, note }
}

/// Ordered pairs `(u, v)`, `u != v`, joined by at least two distinct simple
/// paths. `None` when the step budget runs out.
pub fn double_path_pairs(sys: &FSystem, limits: &Limits) -> Option<usize> {
    let n = sys.len();
    let per_origin: Vec<Option<usize>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut hits = vec![0u8; n];
            let mut on_path = vec![false; n];
            let mut steps = 0usize;
            fn walk(
                sys: &FSystem,
                x: usize,
                hits: &mut [u8],
                on_path: &mut [bool],
                steps: &mut usize,
                max: usize,
            ) -> bool {
                for &y in sys.successor_list(x) {
                    *steps += 1;
                    if *steps > max {
                        return false;
                    }
                    if on_path[y] {
                        continue;
                    }
                    hits[y] = hits[y].saturating_add(1);
                    on_path[y] = true;
                    let ok = walk(sys, y, hits, on_path, steps, max);
                    on_path[y] = false;
                    if !ok {
                        return false;
                    }
                }
                true
            }
            on_path[u] = true;
            walk(sys, u, &mut hits, &mut on_path, &mut steps, limits.max_search_steps)
                .then(|| (0..n).filter(|&v| v != u && hits[v] >= 2).count())
        })
        .collect();
    per_origin.into_iter().sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub transitive: bool,
    pub serial: bool,
    pub unlimited_transitive: bool,
    pub odd_cores: Vec<Vec<usize>>,
    pub paradox: ParadoxGuarantee,
    pub conglomerate: DyrkolbotnReport,
    pub contradiction_witnesses: ContradictionWitnesses,
    pub double_path_pairs: Option<usize>,
}

pub fn analyze_structure(sys: &FSystem, limits: &Limits) -> StructureReport {
    StructureReport {
        transitive: is_transitive(sys),
        serial: is_serial(sys),
        unlimited_transitive: is_unlimited_transitive(sys),
        odd_cores: find_odd_cores(sys),
        paradox: paradox_sufficient(sys),
        conglomerate: dyrkolbotn_guarantee(sys, limits),
        contradiction_witnesses: transitive_contradiction_witnesses(sys),
        double_path_pairs: double_path_pairs(sys, limits),
    }
}
