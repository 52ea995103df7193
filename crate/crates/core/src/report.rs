//! The full analysis of one system as a JSON document.
//!
//! Keys always appear in the same order. A section that could not be
//! computed is replaced by `{"skipped": true, "reason": ...}` rather than
//! left out, so consumers can tell "empty" from "not computed".

use std::collections::BTreeMap;

use serde::Serialize;

use crate::argumentation::{compare_semantics, Check, ExtensionReport};
use crate::conglomerate::{enumerate, SetKind};
use crate::error::{Error, Result};
use crate::grounded::{classify_groundedness, enumerate_fixed_points, FixedPointQuery, NamedPair};
use crate::labelling::{classify_sentences, paradoxical_sentences, Label, SentenceStatus};
use crate::limits::Limits;
use crate::set::SentenceSet;
use crate::structure::{analyze_structure, DyrkolbotnReport, GuaranteeVerdict, ParadoxReason};
use crate::system::FSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Computed(T),
    Skipped { skipped: bool, reason: String },
}

impl<T> Section<T> {
    fn skipped(reason: impl Into<String>) -> Self {
        Section::Skipped { skipped: true, reason: reason.into() }
    }

    /// Ceiling errors become skipped markers; anything else propagates.
    fn from_result(result: Result<T>) -> Result<Self> {
        match result {
            Ok(v) => Ok(Section::Computed(v)),
            Err(e @ Error::CeilingExceeded { .. }) => Ok(Section::skipped(e.to_string())),
            Err(e) => Err(e),
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Section::Skipped { .. })
    }
}

type Names = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SystemSection {
    pub sentences: Names,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseSection {
    pub base: NamedPair,
    /// `phi` applied repeatedly, ending at the first repeat.
    pub trace: Vec<NamedPair>,
    pub iterations: usize,
    pub fixed_point: NamedPair,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroundednessSection {
    pub verdict: crate::grounded::Groundedness,
    pub bases: Vec<BaseSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointSection {
    pub plus: Names,
    pub minus: Names,
    pub complete: bool,
    pub consistent: bool,
    pub maximal: bool,
    pub least_for_base: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParadoxSection {
    pub guaranteed: bool,
    pub reasons: Vec<ParadoxReason>,
}

/// Summary of the odd-cycle check; the per-cycle chord evidence is only
/// available through the library, since dense systems have thousands of
/// cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConglomerateGuaranteeSection {
    pub verdict: GuaranteeVerdict,
    pub reason: String,
    pub odd_cycles: usize,
    pub escaping: usize,
    /// First odd cycle with no escape, when the verdict fails.
    pub blocking_cycle: Option<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSection {
    pub applicable: bool,
    pub triples: Vec<(String, String, String)>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureSection {
    pub transitive: bool,
    pub serial: bool,
    pub unlimited_transitive: bool,
    pub odd_cores: Vec<Names>,
    pub paradox_guaranteed: ParadoxSection,
    pub conglomerate_guaranteed: ConglomerateGuaranteeSection,
    pub refcon_witnesses: WitnessSection,
    /// Pairs joined by two distinct paths; null if the search budget ran out.
    pub double_path_pairs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementSection {
    pub t_maximal_by_inclusion: Check,
    pub t_maximal_by_cardinality: Check,
    pub cardinality_divergence: Vec<Names>,
    pub three_way: Check,
    pub admissible_local_in_inverse: Check,
    pub inverse_admissible_local: Check,
    pub preferred_match_inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSection {
    pub shared: Vec<Names>,
    pub only_local: Vec<Names>,
    pub only_preferred: Vec<Names>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArgumentationSection {
    pub admissible: Vec<Names>,
    pub preferred: Vec<Names>,
    pub t_maximal_by_inclusion: Vec<Names>,
    pub t_maximal_by_cardinality: Vec<Names>,
    pub t_maximal_labellings: Vec<BTreeMap<String, Label>>,
    pub t_maximal_truncated: bool,
    pub agreement: AgreementSection,
    pub extension: ExtensionSection,
    pub values: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub system: SystemSection,
    pub paradoxical: bool,
    pub paradoxical_sentences: Names,
    pub classification: BTreeMap<String, SentenceStatus>,
    pub conglomerates: Section<Vec<Names>>,
    pub kernels: Section<Vec<Names>>,
    pub maximal_local_conglomerates: Section<Vec<Names>>,
    pub groundedness: Section<GroundednessSection>,
    pub fixed_points: Section<Vec<FixedPointSection>>,
    pub structure: StructureSection,
    pub argumentation: Section<ArgumentationSection>,
}

impl AnalysisReport {
    /// Some section was replaced by a skipped marker because of a ceiling.
    pub fn hit_ceiling(&self) -> bool {
        self.conglomerates.is_skipped()
            || self.kernels.is_skipped()
            || self.maximal_local_conglomerates.is_skipped()
            || self.groundedness.is_skipped()
            || matches!(&self.fixed_points, Section::Skipped { reason, .. } if reason != NOT_REQUESTED)
            || self.argumentation.is_skipped()
    }
}

const NOT_REQUESTED: &str = "not requested";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub limits: Limits,
    pub fixed_points: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { limits: Limits::default(), fixed_points: true, jobs: None }
    }
}

fn names(sys: &FSystem, set: &SentenceSet) -> Names {
    sys.names_of(set)
}

fn families(sys: &FSystem, sets: &[SentenceSet]) -> Vec<Names> {
    sets.iter().map(|s| names(sys, s)).collect()
}

fn named_pair(sys: &FSystem, (x, y): (usize, usize)) -> (String, String) {
    (sys.name(x).to_string(), sys.name(y).to_string())
}

pub fn analyze(sys: &FSystem, options: &AnalysisOptions) -> Result<AnalysisReport> {
    match options.jobs {
        None => build(sys, options),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
            pool.install(|| build(sys, options))
        }
    }
}

fn build(sys: &FSystem, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let limits = &options.limits;
    let family = |kind| -> Result<Section<Vec<Names>>> {
        Section::from_result(enumerate(sys, kind, limits).map(|r| families(sys, &r.sets)))
    };

    let classification = classify_sentences(sys);
    let groundedness = Section::from_result(classify_groundedness(sys, limits).map(|g| GroundednessSection {
        verdict: g.verdict,
        bases: g
            .bases
            .iter()
            .map(|b| BaseSection {
                base: b.base.pair().to_named(sys),
                trace: b.lfp.trace.iter().map(|p| p.to_named(sys)).collect(),
                iterations: b.lfp.iterations(),
                fixed_point: b.lfp.fixed_point().to_named(sys),
                complete: b.complete,
            })
            .collect(),
    }))?;
    let fixed_points = if options.fixed_points {
        Section::from_result(enumerate_fixed_points(sys, FixedPointQuery::default(), limits).map(|r| {
            r.points
                .iter()
                .map(|e| FixedPointSection {
                    plus: names(sys, &e.point.plus),
                    minus: names(sys, &e.point.minus),
                    complete: e.complete,
                    consistent: e.consistent,
                    maximal: e.maximal,
                    least_for_base: e.least_for_base,
                })
                .collect()
        }))?
    } else {
        Section::skipped(NOT_REQUESTED)
    };

    Ok(AnalysisReport {
        system: SystemSection {
            sentences: sys.names().iter().map(|n| n.to_string()).collect(),
            edges: sys.edges().map(|e| named_pair(sys, e)).collect(),
        },
        paradoxical: classification.paradoxical_system,
        paradoxical_sentences: names(sys, &paradoxical_sentences(sys)),
        classification: classification
            .statuses
            .iter()
            .enumerate()
            .map(|(x, &s)| (sys.name(x).to_string(), s))
            .collect(),
        conglomerates: family(SetKind::Conglomerate)?,
        kernels: family(SetKind::Kernel)?,
        maximal_local_conglomerates: family(SetKind::MaximalLocalConglomerate)?,
        groundedness,
        fixed_points,
        structure: structure_section(sys, limits),
        argumentation: Section::from_result(compare_semantics(sys, limits).map(|r| argumentation_section(sys, &r)))?,
    })
}

fn structure_section(sys: &FSystem, limits: &Limits) -> StructureSection {
    let s = analyze_structure(sys, limits);
    StructureSection {
        transitive: s.transitive,
        serial: s.serial,
        unlimited_transitive: s.unlimited_transitive,
        odd_cores: s
            .odd_cores
            .iter()
            .map(|c| c.iter().map(|&x| sys.name(x).to_string()).collect())
            .collect(),
        paradox_guaranteed: ParadoxSection { guaranteed: s.paradox.guaranteed, reasons: s.paradox.reasons },
        conglomerate_guaranteed: guarantee_section(sys, &s.conglomerate),
        refcon_witnesses: WitnessSection {
            applicable: s.contradiction_witnesses.applicable,
            triples: s
                .contradiction_witnesses
                .triples
                .iter()
                .map(|&(x, y, z)| (sys.name(x).to_string(), sys.name(y).to_string(), sys.name(z).to_string()))
                .collect(),
            note: s.contradiction_witnesses.note,
        },
        double_path_pairs: s.double_path_pairs,
    }
}

fn guarantee_section(sys: &FSystem, report: &DyrkolbotnReport) -> ConglomerateGuaranteeSection {
    let cycle_names = |c: &[usize]| -> Names { c.iter().map(|&x| sys.name(x).to_string()).collect() };
    let escaping = report.cycles.iter().filter(|e| e.escapes()).count();
    let blocking = report.cycles.iter().find(|e| !e.escapes()).map(|e| cycle_names(&e.cycle));
    let reason = match (report.verdict, &blocking) {
        (_, Some(c)) => format!("odd cycle {} has no escape", c.join(" -> ")),
        (GuaranteeVerdict::Holds, None) if report.cycles.is_empty() => "no odd cycles".to_string(),
        (GuaranteeVerdict::Holds, None) => "every odd cycle escapes".to_string(),
        _ => "cycle search stopped at its budget before finding a blocking cycle".to_string(),
    };
    ConglomerateGuaranteeSection {
        verdict: report.verdict,
        reason,
        odd_cycles: report.cycles.len(),
        escaping,
        blocking_cycle: blocking,
    }
}

fn argumentation_section(sys: &FSystem, r: &ExtensionReport) -> ArgumentationSection {
    ArgumentationSection {
        admissible: families(sys, &r.admissible),
        preferred: families(sys, &r.preferred),
        t_maximal_by_inclusion: families(sys, &r.t_maximal.by_inclusion),
        t_maximal_by_cardinality: families(sys, &r.t_maximal.by_cardinality),
        t_maximal_labellings: r.t_maximal.labellings.iter().map(|l| l.to_named(sys)).collect(),
        t_maximal_truncated: r.t_maximal.truncated,
        agreement: AgreementSection {
            t_maximal_by_inclusion: r.agreement.t_maximal_by_inclusion,
            t_maximal_by_cardinality: r.agreement.t_maximal_by_cardinality,
            cardinality_divergence: families(sys, &r.agreement.cardinality_divergence),
            three_way: r.agreement.three_way,
            admissible_local_in_inverse: r.agreement.admissible_local_in_inverse,
            inverse_admissible_local: r.agreement.inverse_admissible_local,
            preferred_match_inverse: r.agreement.preferred_match_inverse,
        },
        extension: ExtensionSection {
            shared: families(sys, &r.extension.shared),
            only_local: families(sys, &r.extension.only_local),
            only_preferred: families(sys, &r.extension.only_preferred),
        },
        values: r.values.clone(),
    }
}

/// Pretty JSON, two-space indented, newline-terminated.
pub fn emit_report(report: &AnalysisReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report is plain data");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use serde_json::{json, Value};

    fn report(sys: &FSystem) -> Value {
        let text = emit_report(&analyze(sys, &AnalysisOptions::default()).unwrap());
        serde_json::from_str(&text).unwrap()
    }

    #[test]
    fn liar_report() {
        let v = report(&examples::liar());
        assert_eq!(v["paradoxical"], json!(true));
        assert_eq!(v["conglomerates"], json!([]));
        assert_eq!(v["structure"]["odd_cores"], json!([["a"]]));
        assert_eq!(v["groundedness"]["verdict"], json!("ungrounded"));
        assert_eq!(v["paradoxical_sentences"], json!(["a"]));
    }

    #[test]
    fn example4_report() {
        let v = report(&examples::example4());
        assert_eq!(v["conglomerates"], json!([["a", "c"], ["b"], ["c"]]));
        assert_eq!(v["groundedness"]["bases"][0]["iterations"], json!(3));
        assert_eq!(
            v["groundedness"]["bases"][0]["trace"][1],
            json!({"plus": ["a", "c"], "minus": ["b"]})
        );
    }

    #[test]
    fn empty_report() {
        let v = report(&FSystem::empty());
        assert_eq!(v["paradoxical"], json!(false));
        assert_eq!(v["conglomerates"], json!([[]]));
        assert_eq!(v["kernels"], json!([[]]));
        assert_eq!(v["argumentation"]["values"], Value::Null);
    }

    #[test]
    fn key_order_is_fixed() {
        let text = emit_report(&analyze(&examples::liar(), &AnalysisOptions::default()).unwrap());
        let keys = [
            "\"system\"",
            "\"paradoxical\"",
            "\"paradoxical_sentences\"",
            "\"classification\"",
            "\"conglomerates\"",
            "\"kernels\"",
            "\"maximal_local_conglomerates\"",
            "\"groundedness\"",
            "\"fixed_points\"",
            "\"structure\"",
            "\"argumentation\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| text.find(&format!("\n  {k}")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(text.starts_with("{\n  \"system\""));
    }

    #[test]
    fn ceilings_become_markers() {
        let options = AnalysisOptions {
            limits: Limits { max_sentences: 2, ..Limits::default() },
            ..AnalysisOptions::default()
        };
        let r = analyze(&examples::example4(), &options).unwrap();
        assert!(r.conglomerates.is_skipped() && r.hit_ceiling());
        let v: Value = serde_json::from_str(&emit_report(&r)).unwrap();
        assert_eq!(v["conglomerates"]["skipped"], json!(true));

        let unrequested = AnalysisOptions { fixed_points: false, ..AnalysisOptions::default() };
        let r = analyze(&examples::example4(), &unrequested).unwrap();
        assert!(r.fixed_points.is_skipped() && !r.hit_ceiling());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let sys = crate::generate::random(9, 0.3, 7).unwrap();
        let one = AnalysisOptions { jobs: Some(1), ..AnalysisOptions::default() };
        let four = AnalysisOptions { jobs: Some(4), ..AnalysisOptions::default() };
        assert_eq!(
            emit_report(&analyze(&sys, &one).unwrap()),
            emit_report(&analyze(&sys, &four).unwrap())
        );
    }
}
