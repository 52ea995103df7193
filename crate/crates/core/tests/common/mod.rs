//! Brute-force reference implementations for small systems.
//!
//! Everything here works on successor bitmasks and plain enumeration of all
//! labellings, subsets and pairs, without touching the library's search code.
//! It is only practical up to about eight sentences.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use fsystems::argumentation::{compare_semantics, Check};
use fsystems::conglomerate::{self, SetKind};
use fsystems::grounded::{self, FixedPointQuery, Groundedness, PartialSet};
use fsystems::labelling::{self, Label, Mode, SentenceStatus};
use fsystems::structure::{self, GuaranteeVerdict};
use fsystems::{FSystem, Limits, SentenceSet};

pub const T: u8 = 0;
pub const F: u8 = 1;
pub const U: u8 = 2;

#[derive(Debug, Clone)]
pub struct Brute {
    pub n: usize,
    /// `succ[x]` has bit `y` set iff `x -> y`.
    pub succ: Vec<u32>,
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(set: &SentenceSet) -> u32 {
    set.iter().fold(0, |m, x| m | 1 << x)
}

/// Canonical listing order for set families.
pub fn family(masks: impl IntoIterator<Item = u32>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = masks.into_iter().map(members).collect();
    v.sort();
    v
}

pub fn lib_family(sets: &[SentenceSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().collect()).collect()
}

impl Brute {
    pub fn from_system(sys: &FSystem) -> Brute {
        let n = sys.len();
        assert!(n <= 16, "oracle only handles small systems");
        let succ = (0..n)
            .map(|x| (0..n).filter(|&y| sys.has_edge(x, y)).fold(0u32, |m, y| m | 1 << y))
            .collect();
        Brute { n, succ }
    }

    /// The system with edge `pairs[i]` present iff bit `i` of `code` is set.
    pub fn from_code(n: usize, code: u64) -> Brute {
        let mut succ = vec![0u32; n];
        for x in 0..n {
            for y in 0..n {
                if code >> (x * n + y) & 1 == 1 {
                    succ[x] |= 1 << y;
                }
            }
        }
        Brute { n, succ }
    }

    pub fn to_system(&self) -> FSystem {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|x| members(self.succ[x]).into_iter().map(move |y| (x, y)))
            .collect();
        FSystem::from_index_edges(self.n, |i| format!("s{i}"), edges).unwrap()
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn pred(&self, y: usize) -> u32 {
        (0..self.n).filter(|&x| self.succ[x] >> y & 1 == 1).fold(0, |m, x| m | 1 << x)
    }

    pub fn succ_of(&self, a: u32) -> u32 {
        members(a).iter().fold(0, |m, &x| m | self.succ[x])
    }

    pub fn pred_of(&self, a: u32) -> u32 {
        (0..self.n).filter(|&x| self.succ[x] & a != 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn sinks(&self) -> u32 {
        (0..self.n).filter(|&x| self.succ[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn is_valid(&self, l: &[u8]) -> bool {
        (0..self.n).all(|x| {
            if self.succ[x] == 0 {
                return true;
            }
            let succ = members(self.succ[x]);
            let some_t = succ.iter().any(|&z| l[z] == T);
            let all_f = succ.iter().all(|&z| l[z] == F);
            (l[x] == F) == some_t && (l[x] == T) == all_f
        })
    }

    /// All labellings in canonical order (first sentence most significant,
    /// T < F < U).
    pub fn labellings(&self) -> Vec<Vec<u8>> {
        let total = 3usize.pow(self.n as u32);
        (0..total)
            .map(|mut code| {
                let mut l = vec![0u8; self.n];
                for x in (0..self.n).rev() {
                    l[x] = (code % 3) as u8;
                    code /= 3;
                }
                l
            })
            .filter(|l| self.is_valid(l))
            .collect()
    }

    pub fn classical(&self) -> Vec<Vec<u8>> {
        self.labellings().into_iter().filter(|l| !l.contains(&U)).collect()
    }

    pub fn truths(l: &[u8]) -> u32 {
        l.iter().enumerate().filter(|(_, &v)| v == T).fold(0, |m, (x, _)| m | 1 << x)
    }

    pub fn is_independent(&self, a: u32) -> bool {
        members(a).iter().all(|&x| self.succ[x] & a == 0)
    }

    pub fn is_conglomerate(&self, a: u32) -> bool {
        self.is_independent(a)
            && members(self.full() & !a & !self.sinks())
                .iter()
                .all(|&x| self.succ[x] & a != 0)
    }

    pub fn is_kernel(&self, a: u32) -> bool {
        self.is_independent(a) && members(self.full() & !a).iter().all(|&x| self.succ[x] & a != 0)
    }

    pub fn is_local(&self, a: u32) -> bool {
        self.is_independent(a)
            && members(self.succ_of(a) & !self.sinks())
                .iter()
                .all(|&x| self.succ[x] & a != 0)
    }

    pub fn is_admissible(&self, a: u32) -> bool {
        self.succ_of(a) & a == 0 && self.pred_of(a) & !self.succ_of(a) == 0
    }

    pub fn subsets(&self, keep: impl Fn(u32) -> bool) -> Vec<u32> {
        (0..=self.full()).filter(|&a| keep(a)).collect()
    }

    pub fn maximal(sets: &[u32]) -> Vec<u32> {
        sets.iter()
            .copied()
            .filter(|&a| !sets.iter().any(|&b| b != a && a & b == a))
            .collect()
    }

    pub fn phi(&self, (plus, minus): (u32, u32)) -> (u32, u32) {
        let sinks = self.sinks();
        let mut p = plus & sinks;
        let mut m = minus & sinks;
        for x in 0..self.n {
            let s = self.succ[x];
            if s == 0 {
                continue;
            }
            if s & !minus == 0 {
                p |= 1 << x;
            }
            if s & plus != 0 {
                m |= 1 << x;
            }
        }
        (p, m)
    }

    /// Every fixed point, consistent ones only unless asked otherwise.
    pub fn fixed_points(&self, include_inconsistent: bool) -> Vec<(u32, u32)> {
        let full = self.full();
        let mut out = Vec::new();
        for plus in 0..=full {
            for minus in 0..=full {
                if !include_inconsistent && plus & minus != 0 {
                    continue;
                }
                if self.phi((plus, minus)) == (plus, minus) {
                    out.push((plus, minus));
                }
            }
        }
        out.sort_by_key(|&pair| pair_ranks(self.n, pair));
        out
    }

    pub fn ground_bases(&self) -> Vec<(u32, u32)> {
        let sinks = self.sinks();
        let mut bases: Vec<(u32, u32)> = (0..=sinks)
            .filter(|&plus| plus & !sinks == 0)
            .map(|plus| (plus, sinks & !plus))
            .collect();
        bases.sort_by_key(|&pair| pair_ranks(self.n, pair));
        bases
    }

    pub fn lfp(&self, base: (u32, u32)) -> (u32, u32) {
        let mut cur = base;
        loop {
            let next = self.phi(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn groundedness(&self) -> Groundedness {
        let complete = |(p, m): (u32, u32)| p | m == self.full();
        let bases = self.ground_bases();
        let hits = bases.iter().filter(|&&b| complete(self.lfp(b))).count();
        if hits == bases.len() {
            Groundedness::Grounded
        } else if hits > 0 {
            Groundedness::RelativelyGrounded
        } else {
            Groundedness::Ungrounded
        }
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|x| {
            members(self.succ[x])
                .iter()
                .all(|&y| members(self.succ[y]).iter().all(|&z| self.succ[x] >> z & 1 == 1))
        })
    }

    pub fn is_serial(&self) -> bool {
        self.n > 0 && self.sinks() == 0
    }

    /// Odd cycles through out-degree-one sentences, rotated to start at the
    /// smallest member.
    pub fn odd_cores(&self) -> Vec<Vec<usize>> {
        let mut cores = BTreeSet::new();
        for start in 0..self.n {
            let mut walk = vec![start];
            let mut x = start;
            for _ in 0..self.n {
                if self.succ[x].count_ones() != 1 {
                    break;
                }
                x = self.succ[x].trailing_zeros() as usize;
                if x == start {
                    if walk.len() % 2 == 1 {
                        let min_at = (0..walk.len()).min_by_key(|&i| walk[i]).unwrap();
                        let mut c = walk[min_at..].to_vec();
                        c.extend_from_slice(&walk[..min_at]);
                        cores.insert(c);
                    }
                    break;
                }
                if walk.contains(&x) {
                    break;
                }
                walk.push(x);
            }
        }
        cores.into_iter().collect()
    }

    pub fn statuses(&self) -> Vec<SentenceStatus> {
        let classical = self.classical();
        if classical.is_empty() {
            let all = self.labellings();
            return (0..self.n)
                .map(|x| {
                    if all.iter().all(|l| l[x] == U) {
                        SentenceStatus::Paradoxical
                    } else {
                        SentenceStatus::Undefined
                    }
                })
                .collect();
        }
        (0..self.n)
            .map(|x| {
                if classical.iter().all(|l| l[x] == F) {
                    SentenceStatus::ReferentialContradiction
                } else if classical.iter().all(|l| l[x] == T) {
                    SentenceStatus::ReferentialTautology
                } else {
                    SentenceStatus::Contingent
                }
            })
            .collect()
    }
}

pub fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

/// Per-sentence rank vector: true-only, false-only, neither, both.
pub fn pair_ranks(n: usize, (plus, minus): (u32, u32)) -> Vec<u8> {
    (0..n)
        .map(|x| match (plus >> x & 1, minus >> x & 1) {
            (1, 0) => 0,
            (0, 1) => 1,
            (0, 0) => 2,
            _ => 3,
        })
        .collect()
}

pub fn le((p, m): (u32, u32), (q, k): (u32, u32)) -> bool {
    p & !q == 0 && m & !k == 0
}

fn label_code(l: Label) -> u8 {
    match l {
        Label::T => T,
        Label::F => F,
        Label::U => U,
    }
}

fn pair_masks(p: &PartialSet) -> (u32, u32) {
    (mask_of(&p.plus), mask_of(&p.minus))
}

/// What a sweep observed on one system.
#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub failures: Vec<String>,
    /// The largest-T reading of T-maximality disagreed with the maximal
    /// local conglomerates.
    pub cardinality_divergence: bool,
    /// Consistent maximal fixed points leaving some sentence that is not
    /// paradoxical undecided.
    pub maximal_gaps: usize,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Compares the library with the oracle on `sys` and checks the known
/// structural results on it.
pub fn sweep(sys: &FSystem) -> Outcome {
    let lim = Limits::default();
    let b = Brute::from_system(sys);
    let n = b.n;
    let mut out = Outcome::default();
    let tag = || format!("{:?}", sys.edges().collect::<Vec<_>>());

    // Labellings.
    let all = b.labellings();
    let classical: Vec<Vec<u8>> = all.iter().filter(|l| !l.contains(&U)).cloned().collect();
    let lib_all: Vec<Vec<u8>> = labelling::enumerate_labellings(sys, Mode::All, usize::MAX)
        .labellings
        .iter()
        .map(|l| l.labels().iter().map(|&x| label_code(x)).collect())
        .collect();
    out.check(lib_all == all, || format!("labellings differ on {}", tag()));
    let lib_classical: Vec<Vec<u8>> = labelling::enumerate_labellings(sys, Mode::Classical, usize::MAX)
        .labellings
        .iter()
        .map(|l| l.labels().iter().map(|&x| label_code(x)).collect())
        .collect();
    out.check(lib_classical == classical, || format!("classical labellings differ on {}", tag()));
    let paradoxical = classical.is_empty();
    out.check(labelling::is_paradoxical(sys) == paradoxical, || format!("is_paradoxical on {}", tag()));
    let par_sentences = (0..n).filter(|&x| all.iter().all(|l| l[x] == U)).fold(0u32, |m, x| m | 1 << x);
    out.check(mask_of(&labelling::paradoxical_sentences(sys)) == par_sentences, || {
        format!("paradoxical sentences on {}", tag())
    });
    let statuses = b.statuses();
    out.check(labelling::classify_sentences(sys).statuses == statuses, || format!("statuses on {}", tag()));

    // Set families.
    let conglomerates = b.subsets(|a| b.is_conglomerate(a));
    let kernels = b.subsets(|a| b.is_kernel(a));
    let local = b.subsets(|a| b.is_local(a));
    let max_local = Brute::maximal(&local);
    for (kind, expected) in [
        (SetKind::Conglomerate, &conglomerates),
        (SetKind::Kernel, &kernels),
        (SetKind::LocalConglomerate, &local),
        (SetKind::MaximalLocalConglomerate, &max_local),
    ] {
        let got = lib_family(&conglomerate::enumerate(sys, kind, &lim).unwrap().sets);
        out.check(got == family(expected.iter().copied()), || format!("{kind} family on {}", tag()));
    }
    let admissible = b.subsets(|a| b.is_admissible(a));
    let preferred = Brute::maximal(&admissible);
    out.check(
        lib_family(&fsystems::argumentation::admissible_sets(sys, &lim).unwrap()) == family(admissible.iter().copied()),
        || format!("admissible sets on {}", tag()),
    );
    out.check(
        lib_family(&fsystems::argumentation::preferred_extensions(sys, &lim).unwrap())
            == family(preferred.iter().copied()),
        || format!("preferred extensions on {}", tag()),
    );

    // Fixed points and groundedness.
    let consistent_fps = b.fixed_points(false);
    let lib_fps = grounded::enumerate_fixed_points(sys, FixedPointQuery::default(), &lim).unwrap();
    out.check(
        lib_fps.points.iter().map(|e| pair_masks(&e.point)).collect::<Vec<_>>() == consistent_fps,
        || format!("consistent fixed points on {}", tag()),
    );
    let maximal_fps: Vec<(u32, u32)> = consistent_fps
        .iter()
        .copied()
        .filter(|&p| !consistent_fps.iter().any(|&q| q != p && le(p, q)))
        .collect();
    for &(p, m) in &maximal_fps {
        if (p | m | par_sentences) != full_mask(n) {
            out.maximal_gaps += 1;
        }
    }
    for e in &lib_fps.points {
        let p = pair_masks(&e.point);
        out.check(e.maximal == maximal_fps.contains(&p), || format!("maximal flag on {}", tag()));
        out.check(e.complete == (p.0 | p.1 == b.full()), || format!("complete flag on {}", tag()));
    }
    if n <= 5 {
        let all_fps = b.fixed_points(true);
        let q = FixedPointQuery { include_inconsistent: true, ..Default::default() };
        let lib_all_fps = grounded::enumerate_fixed_points(sys, q, &lim).unwrap();
        out.check(
            lib_all_fps.points.iter().map(|e| pair_masks(&e.point)).collect::<Vec<_>>() == all_fps,
            || format!("all fixed points on {}", tag()),
        );
    }
    let bases = b.ground_bases();
    let lib_bases: Vec<(u32, u32)> = grounded::ground_bases(sys, &lim)
        .unwrap()
        .iter()
        .map(|g| pair_masks(g.pair()))
        .collect();
    out.check(lib_bases == bases, || format!("ground bases on {}", tag()));
    for g in grounded::ground_bases(sys, &lim).unwrap() {
        let base = pair_masks(g.pair());
        let least = b.lfp(base);
        out.check(pair_masks(grounded::lfp(sys, &g).fixed_point()) == least, || format!("lfp on {}", tag()));
        // Least among every fixed point above the base.
        for fp in b.fixed_points(n <= 5) {
            if le(base, fp) {
                out.check(le(least, fp), || format!("lfp not least on {}", tag()));
            }
        }
    }
    out.check(
        grounded::classify_groundedness(sys, &lim).unwrap().verdict == b.groundedness(),
        || format!("groundedness on {}", tag()),
    );

    // Monotony of phi, on a deterministic sample of comparable pairs.
    let full = b.full();
    let mut state = 0x9e37_79b9_u64 ^ (n as u64) ^ b.succ.iter().fold(0u64, |h, &s| h.wrapping_mul(31) ^ s as u64);
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state as u32 & full
    };
    for _ in 0..32 {
        let small = (next(), next());
        let big = (small.0 | next(), small.1 | next());
        let (ps, pb) = (b.phi(small), b.phi(big));
        out.check(le(ps, pb), || format!("phi not monotone on {}", tag()));
        let lib = grounded::phi(
            sys,
            &PartialSet::new(
                SentenceSet::from_mask(n, small.0 as u64),
                SentenceSet::from_mask(n, small.1 as u64),
            ),
        );
        out.check(pair_masks(&lib) == ps, || format!("phi differs on {}", tag()));
    }

    // Conglomerates are exactly the T-sets of classical labellings.
    out.check(
        family(classical.iter().map(|l| Brute::truths(l))) == family(conglomerates.iter().copied()),
        || format!("classical labellings vs conglomerates on {}", tag()),
    );
    for &a in &conglomerates {
        let l: Vec<u8> = (0..n).map(|x| if a >> x & 1 == 1 { T } else { F }).collect();
        out.check(b.is_valid(&l), || format!("conglomerate labelling invalid on {}", tag()));
    }
    // Paradoxical exactly when there is no conglomerate.
    out.check(paradoxical == conglomerates.is_empty(), || format!("paradox vs conglomerates on {}", tag()));

    // Conglomerates are the true sides of complete consistent
    // fixed points, whose false side is the complement.
    let complete_consistent: Vec<(u32, u32)> =
        consistent_fps.iter().copied().filter(|&(p, m)| p | m == full).collect();
    out.check(
        family(complete_consistent.iter().map(|&(p, _)| p)) == family(conglomerates.iter().copied()),
        || format!("complete consistent fixed points vs conglomerates on {}", tag()),
    );
    for &a in &conglomerates {
        out.check(b.phi((a, full & !a)) == (a, full & !a), || format!("(A, S-A) not fixed on {}", tag()));
    }

    if !paradoxical {
        // Contradictions lie in no conglomerate, tautologies in all of them.
        for x in 0..n {
            let in_none = conglomerates.iter().all(|&a| a >> x & 1 == 0);
            let in_all = conglomerates.iter().all(|&a| a >> x & 1 == 1);
            out.check(
                (statuses[x] == SentenceStatus::ReferentialContradiction) == in_none,
                || format!("contradiction vs conglomerates on {}", tag()),
            );
            out.check(
                (statuses[x] == SentenceStatus::ReferentialTautology) == in_all,
                || format!("tautology vs conglomerates on {}", tag()),
            );
        }
        // A tautology comes with a contradiction, which it denies.
        for x in 0..n {
            if statuses[x] == SentenceStatus::ReferentialTautology {
                out.check(statuses.contains(&SentenceStatus::ReferentialContradiction), || {
                    format!("tautology in a system without contradictions on {}", tag())
                });
                let kind = if b.succ[x] == 0 { "forced sink" } else { "non-sink" };
                out.check(
                    members(b.succ[x])
                        .iter()
                        .any(|&z| statuses[z] == SentenceStatus::ReferentialContradiction),
                    || format!("tautology ({kind}) without a contradicting successor on {}", tag()),
                );
            }
        }
        // In a transitive system the start of any two-step path is false.
        if b.is_transitive() {
            for x in 0..n {
                if members(b.succ[x]).iter().any(|&y| b.succ[y] != 0) {
                    out.check(statuses[x] == SentenceStatus::ReferentialContradiction, || {
                        format!("transitive two-step source not a contradiction on {}", tag())
                    });
                }
            }
        }
    }
    let witnesses = structure::transitive_contradiction_witnesses(sys);
    for &(x, _, _) in &witnesses.triples {
        out.check(statuses[x] == SentenceStatus::ReferentialContradiction, || {
            format!("witness {x} not a contradiction on {}", tag())
        });
    }

    // Structure detectors; both paradox guarantees are sufficient conditions.
    let transitive = b.is_transitive();
    let serial = b.is_serial();
    out.check(structure::is_transitive(sys) == transitive, || format!("transitivity on {}", tag()));
    out.check(structure::is_serial(sys) == serial, || format!("seriality on {}", tag()));
    let cores = b.odd_cores();
    out.check(structure::find_odd_cores(sys) == cores, || format!("odd cores on {}", tag()));
    if transitive && serial {
        out.check(paradoxical, || format!("unlimited transitive but consistent on {}", tag()));
    }
    if !cores.is_empty() {
        out.check(paradoxical, || format!("odd core but consistent on {}", tag()));
    }
    out.check(!structure::paradox_sufficient(sys).guaranteed || paradoxical, || {
        format!("paradox guarantee unsound on {}", tag())
    });
    if structure::dyrkolbotn_guarantee(sys, &lim).verdict == GuaranteeVerdict::Holds {
        out.check(!conglomerates.is_empty(), || format!("conglomerate guarantee unsound on {}", tag()));
    }

    // Maximal local conglomerates are the sets whose induced
    // pair is a consistent maximal fixed point.
    let induced = |a: u32| (a, b.succ_of(a) | b.pred_of(a));
    let from_fixed_points: Vec<u32> = (0..=full).filter(|&a| maximal_fps.contains(&induced(a))).collect();
    out.check(family(from_fixed_points.iter().copied()) == family(max_local.iter().copied()), || {
        format!("maximal local conglomerates vs maximal fixed points on {}", tag())
    });

    // A derivable sentence extends a local conglomerate without losing any
    // other derivable sentence.
    for &a in &local {
        let (plus, _) = b.phi(induced(a));
        for x in members(plus) {
            let bigger = a | 1 << x;
            out.check(b.is_local(bigger), || format!("extension leaves the family on {}", tag()));
            let (plus2, _) = b.phi(induced(bigger));
            out.check(plus & !plus2 == 0, || format!("extension loses derivable sentences on {}", tag()));
            let lib = conglomerate::extend_local_conglomerate(sys, &SentenceSet::from_mask(n, a as u64), x);
            out.check(lib.map(|s| mask_of(&s)).ok() == Some(bigger), || {
                format!("extend_local_conglomerate on {}", tag())
            });
        }
    }

    // T-maximal labellings, read by inclusion, against maximal local
    // conglomerates and maximal fixed points.
    let t_sets: BTreeSet<u32> = all.iter().map(|l| Brute::truths(l)).collect();
    let t_sets: Vec<u32> = t_sets.into_iter().collect();
    let t_max_inclusion = Brute::maximal(&t_sets);
    for l in &all {
        let t = Brute::truths(l);
        out.check(t_max_inclusion.contains(&t) == max_local.contains(&t), || {
            format!("labelling-level T-maximality on {}", tag())
        });
    }
    out.check(family(t_max_inclusion.iter().copied()) == family(max_local.iter().copied()), || {
        format!("T-maximal labellings vs maximal local conglomerates on {}", tag())
    });
    for a in 0..=full {
        let one = max_local.contains(&a);
        let two = t_max_inclusion.contains(&a);
        let three = maximal_fps.contains(&induced(a));
        out.check(one == two && two == three, || format!("three-way agreement at {a:#b} on {}", tag()));
    }
    let top = t_sets.iter().map(|t| t.count_ones()).max().unwrap_or(0);
    let t_max_cardinality: Vec<u32> = t_sets.iter().copied().filter(|t| t.count_ones() == top).collect();
    out.cardinality_divergence = family(t_max_cardinality.iter().copied()) != family(max_local.iter().copied());

    let report = compare_semantics(sys, &lim).unwrap();
    out.check(report.agreement.t_maximal_by_inclusion == Check::Holds, || format!("report T-max on {}", tag()));
    out.check(report.agreement.three_way == Check::Holds, || format!("report three-way on {}", tag()));
    out.check(
        report.agreement.admissible_local_in_inverse == Check::Holds
            && report.agreement.inverse_admissible_local == Check::Holds,
        || format!("admissible vs local of inverse on {}", tag()),
    );
    out.check(
        (report.agreement.t_maximal_by_cardinality == Check::Fails) == out.cardinality_divergence,
        || format!("report cardinality reading on {}", tag()),
    );
    // Every argument attacked: local conglomerates of the inverse are
    // exactly the admissible sets.
    if (0..n).all(|x| b.pred(x) != 0) {
        out.check(report.agreement.preferred_match_inverse, || format!("preferred vs inverse on {}", tag()));
    }
    out
}

/// Every digraph on `n` sentences, self-loops included, in code order.
pub fn all_systems(n: usize) -> impl Iterator<Item = Brute> {
    (0u64..1 << (n * n)).map(move |code| Brute::from_code(n, code))
}
