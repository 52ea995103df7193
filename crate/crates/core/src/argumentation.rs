//! Reading a system as an argumentation framework.
//!
//! Sentences are arguments and an edge `(a, b)` means `a` attacks `b`. A set
//! is admissible when no member attacks another and every attacker of a
//! member is attacked back. Local conglomerates generalise admissible sets
//! of the inverted system; this module computes both families and checks
//! how they line up with T-maximal labellings and maximal fixed points.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::conglomerate::{enumerate, is_local_conglomerate, maximal_only, SetKind};
use crate::error::Result;
use crate::grounded::{enumerate_fixed_points, FixedPointQuery};
use crate::labelling::{labellings_with_truths, Labelling};
use crate::limits::Limits;
use crate::set::SentenceSet;
use crate::system::FSystem;

pub fn is_admissible(sys: &FSystem, set: &SentenceSet) -> bool {
    let attacked = sys.successors_of_set(set);
    attacked.is_disjoint(set) && sys.predecessors_of_set(set).is_subset(&attacked)
}

/// Every admissible set, canonically ordered.
///
/// Admissible sets are local conglomerates of the inverted system, so that
/// search does the pruning and the result is filtered.
pub fn admissible_sets(sys: &FSystem, limits: &Limits) -> Result<Vec<SentenceSet>> {
    let inverse = sys.invert();
    let candidates = enumerate(&inverse, SetKind::LocalConglomerate, limits)?.sets;
    Ok(candidates.into_iter().filter(|a| is_admissible(sys, a)).collect())
}

/// Inclusion-maximal admissible sets, canonically ordered.
pub fn preferred_extensions(sys: &FSystem, limits: &Limits) -> Result<Vec<SentenceSet>> {
    Ok(maximal_only(admissible_sets(sys, limits)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Holds,
    Fails,
    /// Not evaluated because an input family was over its ceiling.
    Skipped,
}

impl Check {
    fn from(ok: bool) -> Check {
        if ok {
            Check::Holds
        } else {
            Check::Fails
        }
    }
}

/// Labellings whose true sentences are as many as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMaximal {
    /// T-sets not strictly contained in another achievable T-set.
    pub by_inclusion: Vec<SentenceSet>,
    /// Achievable T-sets of the largest size.
    pub by_cardinality: Vec<SentenceSet>,
    /// All labellings realising an inclusion-maximal T-set.
    pub labellings: Vec<Labelling>,
    /// The labelling limit cut the list short.
    pub truncated: bool,
}

/// How the families relate on this system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    /// Maximal local conglomerates are exactly the inclusion-maximal T-sets.
    pub t_maximal_by_inclusion: Check,
    /// Maximal local conglomerates are exactly the largest T-sets.
    pub t_maximal_by_cardinality: Check,
    /// Maximal local conglomerates that are not among the largest T-sets.
    pub cardinality_divergence: Vec<SentenceSet>,
    /// Maximal local conglomerates, inclusion-maximal T-sets, and true sides
    /// of consistent maximal fixed points of the form
    /// `(A, successors(A) ∪ predecessors(A))` all coincide.
    pub three_way: Check,
    /// Every admissible set is a local conglomerate of the inverted system.
    pub admissible_local_in_inverse: Check,
    /// Every admissible set of the inverted system is a local conglomerate.
    pub inverse_admissible_local: Check,
    /// Preferred extensions equal the maximal local conglomerates of the
    /// inverted system. Expected whenever every argument is attacked.
    pub preferred_match_inverse: bool,
}

/// Maximal local conglomerates compared with preferred extensions, edges
/// read in the same direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictExtension {
    pub shared: Vec<SentenceSet>,
    /// Maximal local conglomerates that are not preferred extensions.
    pub only_local: Vec<SentenceSet>,
    /// Preferred extensions that are not maximal local conglomerates.
    pub only_preferred: Vec<SentenceSet>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionReport {
    pub admissible: Vec<SentenceSet>,
    pub preferred: Vec<SentenceSet>,
    pub maximal_local_conglomerates: Vec<SentenceSet>,
    pub t_maximal: TMaximal,
    pub agreement: Agreement,
    pub extension: StrictExtension,
    /// Reserved for per-argument value annotations; never filled in.
    pub values: Option<BTreeMap<String, String>>,
}

/// Achievable T-sets that are inclusion-maximal, largest first.
fn maximal_truth_sets(sys: &FSystem, local: &[SentenceSet]) -> Result<Vec<SentenceSet>> {
    let mut by_size: Vec<&SentenceSet> = local.iter().collect();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut found: Vec<SentenceSet> = Vec::new();
    for set in by_size {
        if found.iter().any(|f| set.is_subset(f)) {
            continue;
        }
        if !labellings_with_truths(sys, set, 1)?.labellings.is_empty() {
            found.push(set.clone());
        }
    }
    Ok(found)
}

pub fn compare_semantics(sys: &FSystem, limits: &Limits) -> Result<ExtensionReport> {
    let admissible = admissible_sets(sys, limits)?;
    let preferred = maximal_only(admissible.clone());
    let local = enumerate(sys, SetKind::LocalConglomerate, limits)?.sets;
    let maximal_local = maximal_only(local.clone());

    // Every T-set of a labelling is a local conglomerate.
    let mut by_inclusion = maximal_truth_sets(sys, &local)?;
    let top = by_inclusion.first().map_or(0, |s| s.len());
    let mut by_cardinality: Vec<SentenceSet> = by_inclusion.iter().filter(|s| s.len() == top).cloned().collect();
    by_inclusion.sort();
    by_cardinality.sort();
    let mut labellings = Vec::new();
    let mut truncated = false;
    for set in &by_inclusion {
        let found = labellings_with_truths(sys, set, limits.labelling_limit)?;
        truncated |= found.truncated;
        labellings.extend(found.labellings);
    }
    labellings.sort();

    let three_way = if sys.len() <= limits.max_fixed_point_sentences {
        let query = FixedPointQuery { maximal_only: true, ..Default::default() };
        let mut induced: Vec<SentenceSet> = enumerate_fixed_points(sys, query, limits)?
            .points
            .into_iter()
            .filter(|e| {
                let plus = &e.point.plus;
                e.point.minus == sys.successors_of_set(plus).union(&sys.predecessors_of_set(plus))
            })
            .map(|e| e.point.plus)
            .collect();
        induced.sort();
        Check::from(induced == maximal_local && by_inclusion == maximal_local)
    } else {
        Check::Skipped
    };

    let inverse = sys.invert();
    let inverse_local = enumerate(&inverse, SetKind::LocalConglomerate, limits)?.sets;
    let admissible_local_in_inverse = Check::from(admissible.iter().all(|a| inverse_local.binary_search(a).is_ok()));
    let inverse_admissible_local = Check::from(
        admissible_sets(&inverse, limits)?
            .iter()
            .all(|a| is_local_conglomerate(sys, a)),
    );
    let preferred_match_inverse = maximal_only(inverse_local) == preferred;

    let agreement = Agreement {
        t_maximal_by_inclusion: Check::from(by_inclusion == maximal_local),
        t_maximal_by_cardinality: Check::from(by_cardinality == maximal_local),
        cardinality_divergence: maximal_local
            .iter()
            .filter(|m| by_cardinality.binary_search(m).is_err())
            .cloned()
            .collect(),
        three_way,
        admissible_local_in_inverse,
        inverse_admissible_local,
        preferred_match_inverse,
    };
    let extension = StrictExtension {
        shared: maximal_local.iter().filter(|m| preferred.contains(m)).cloned().collect(),
        only_local: maximal_local.iter().filter(|m| !preferred.contains(m)).cloned().collect(),
        only_preferred: preferred.iter().filter(|p| !maximal_local.contains(p)).cloned().collect(),
    };
    Ok(ExtensionReport {
        admissible,
        preferred,
        maximal_local_conglomerates: maximal_local,
        t_maximal: TMaximal { by_inclusion, by_cardinality, labellings, truncated },
        agreement,
        extension,
        values: None,
    })
}
