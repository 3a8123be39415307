//! JSON shapes for reports. Field order is declaration order, so output is
//! byte-stable for identical inputs.

use arglab_core::encodings::SizeRow;
use arglab_core::realisable::{ConditionTally, SurveyReport};
use arglab_core::reduction::ReductionReport;
use arglab_core::system::default_names;
use arglab_core::{ArgSet, ArgumentSystem, ExtensionFamily};
use serde::Serialize;

/// Member names of `s`, over `x1..xn`.
pub fn set_names(n: usize, s: ArgSet) -> Vec<String> {
    let names = default_names(n);
    s.iter().map(|i| names[i].clone()).collect()
}

pub fn family_names(f: &ExtensionFamily) -> Vec<Vec<String>> {
    f.iter().map(|s| set_names(f.n(), s)).collect()
}

pub fn system_family(sys: &ArgumentSystem, f: &ExtensionFamily) -> Vec<Vec<String>> {
    f.iter()
        .map(|s| sys.set_names(s).into_iter().map(str::to_owned).collect())
        .collect()
}

pub fn attack_names(sys: &ArgumentSystem) -> Vec<[String; 2]> {
    sys.attack_pairs()
        .map(|(a, b)| [sys.name(a).to_owned(), sys.name(b).to_owned()])
        .collect()
}

#[derive(Debug, Serialize)]
pub struct TallyJson {
    pub necessary: bool,
    pub sufficient_with_prefilter: bool,
    pub realized_true: usize,
    pub realized_false: usize,
    pub unrealized_true: usize,
    pub unrealized_false: usize,
    pub necessity_counterexamples: Vec<Vec<Vec<String>>>,
    pub sufficiency_counterexamples: Vec<Vec<Vec<String>>>,
}

impl From<&ConditionTally> for TallyJson {
    fn from(t: &ConditionTally) -> Self {
        TallyJson {
            necessary: t.necessary(),
            sufficient_with_prefilter: t.sufficient_with_prefilter(),
            realized_true: t.realized_true,
            realized_false: t.realized_false,
            unrealized_true: t.unrealized_true,
            unrealized_false: t.unrealized_false,
            necessity_counterexamples: t
                .necessity_counterexamples
                .iter()
                .map(family_names)
                .collect(),
            sufficiency_counterexamples: t
                .sufficiency_counterexamples
                .iter()
                .map(family_names)
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SurveyJson {
    pub n: usize,
    pub systems: u64,
    pub candidates: usize,
    pub prefilter_pass: usize,
    pub realized_count: usize,
    pub realized: Vec<Vec<Vec<String>>>,
    pub prefilter_violations: Vec<Vec<Vec<String>>>,
    pub literal: TallyJson,
    pub existential: TallyJson,
}

impl From<&SurveyReport> for SurveyJson {
    fn from(r: &SurveyReport) -> Self {
        SurveyJson {
            n: r.n,
            systems: r.systems,
            candidates: r.candidates,
            prefilter_pass: r.prefilter_pass,
            realized_count: r.realized.len(),
            realized: r.realized.iter().map(family_names).collect(),
            prefilter_violations: r.prefilter_violations.iter().map(family_names).collect(),
            literal: (&r.literal).into(),
            existential: (&r.existential).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReductionRecord {
    pub index: usize,
    pub vars: usize,
    pub clauses: usize,
    pub arguments: usize,
    pub attacks: usize,
    pub sat: bool,
    pub pref: bool,
    pub stab: bool,
    pub alpha_ok: bool,
    pub induced_preferred: Option<bool>,
    pub pass: bool,
    pub failures: Vec<&'static str>,
}

impl ReductionRecord {
    pub fn new(index: usize, r: &ReductionReport) -> Self {
        ReductionRecord {
            index,
            vars: r.var_count,
            clauses: r.clause_count,
            arguments: r.arguments,
            attacks: r.attacks,
            sat: r.sat,
            pref: r.pref,
            stab: r.stab,
            alpha_ok: r.alpha_ok,
            induced_preferred: r.induced_preferred,
            pass: r.pass,
            failures: r.failures(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CorpusJson {
    pub pass: usize,
    pub fail: usize,
    pub variant: &'static str,
    pub records: Vec<ReductionRecord>,
}

impl CorpusJson {
    pub fn new(variant: &'static str, reports: &[ReductionReport]) -> Self {
        let pass = reports.iter().filter(|r| r.pass).count();
        CorpusJson {
            pass,
            fail: reports.len() - pass,
            variant,
            records: reports
                .iter()
                .enumerate()
                .map(|(i, r)| ReductionRecord::new(i, r))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SizeRowJson {
    pub label: String,
    pub n: usize,
    pub scheme: &'static str,
    pub semantics: &'static str,
    pub rows: usize,
    pub bits: usize,
    pub queries: usize,
    pub steps: u64,
}

impl From<&SizeRow> for SizeRowJson {
    fn from(r: &SizeRow) -> Self {
        SizeRowJson {
            label: r.label.clone(),
            n: r.n,
            scheme: r.scheme.name(),
            semantics: r.semantics.name(),
            rows: r.rows,
            bits: r.bits,
            queries: r.queries,
            steps: r.steps,
        }
    }
}
