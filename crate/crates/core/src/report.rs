//! Analysis reports, their JSON form, and verification sweeps over spec
//! families.
//!
//! `AnalysisReport` is the serializable report: flat keys, stable order,
//! suitable for golden files. Witness labels for the sdim methods and
//! applicability notes ride along in `AnalysisDetail` for human-readable
//! output.

use crate::formulas::{predicted_sdim, PredictionStatus};
use crate::graph::{
    all_pairs_distances, diameter_of, max_clique, reduce_by_closed_neighborhoods, Diameter,
};
use crate::pis::{build_pis, is_disconnected_case, BuildError, PisGraph};
use crate::ring::{ParseError, RingClass, RingSpec};
use crate::sdim::{
    is_strong_resolving_set, sdim_bruteforce, sdim_via_reduction, sdim_via_vertex_cover,
    SdimMethod, SdimOutcome, SdimResult, DEFAULT_BRUTEFORCE_CAP,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    /// Also run the brute-force method when the graph fits under the cap.
    pub oracle: bool,
    pub oracle_cap: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            oracle: false,
            oracle_cap: DEFAULT_BRUTEFORCE_CAP,
        }
    }
}

#[derive(Debug, Error)]
pub enum AnalyzeError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("disconnected: product of two fields")]
    DisconnectedTwoFields,
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// The JSON-facing report. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: String,
    pub class: String,
    pub vertices: u64,
    pub edges: u64,
    pub diameter: u32,
    pub clique: CliqueSection,
    pub reduced_classes: u64,
    pub sdim: SdimSection,
    pub predictions: Vec<PredictionRow>,
    pub timings_ms: Timings,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliqueSection {
    pub size: u64,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdimSection {
    pub reduction: Option<u64>,
    pub vertex_cover: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionRow {
    pub formula_id: String,
    pub value: u64,
    pub status: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub build: u64,
    pub distances: u64,
    pub reduction: u64,
    pub clique: u64,
    pub sdim_methods: u64,
    pub total: u64,
}

/// Per-method witness labels and notes that accompany a report.
#[derive(Debug, Clone)]
pub struct AnalysisDetail {
    pub clique_witness_indices: Vec<usize>,
    pub methods: Vec<MethodDetail>,
    pub scope_note: Option<String>,
    /// Set when two applicable methods disagree; the CLI exits 2 on it.
    pub method_disagreement: bool,
}

#[derive(Debug, Clone)]
pub struct MethodDetail {
    pub method: SdimMethod,
    pub value: Option<u64>,
    pub witness_labels: Option<Vec<String>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: AnalysisReport,
    pub detail: AnalysisDetail,
    pub pis: PisGraph,
}

pub fn analyze_text(text: &str, opts: AnalyzeOptions) -> Result<Analysis, AnalyzeError> {
    let spec = RingSpec::parse(text)?;
    analyze_spec(&spec, opts)
}

pub fn analyze_spec(spec: &RingSpec, opts: AnalyzeOptions) -> Result<Analysis, AnalyzeError> {
    if is_disconnected_case(spec) {
        return Err(AnalyzeError::DisconnectedTwoFields);
    }
    let mut watch = Stopwatch::start();
    let pis = build_pis(spec)?;
    let mut timings = Timings {
        build: watch.lap_ms(),
        ..Timings::default()
    };

    let distances = all_pairs_distances(&pis.graph);
    let diameter = match diameter_of(&distances) {
        Diameter::Finite(d) => d,
        // only the refused two-field case is disconnected
        Diameter::Disconnected => unreachable!("non-local specs other than two fields connect"),
    };
    timings.distances = watch.lap_ms();

    let reduced = reduce_by_closed_neighborhoods(&pis.graph);
    timings.reduction = watch.lap_ms();

    let (clique_size, clique_witness) = max_clique(&pis.graph);
    validate_clique(&pis, &clique_witness);
    timings.clique = watch.lap_ms();

    let class = spec.classify();
    let local = matches!(class, RingClass::LocalRing { .. });
    let mut methods = Vec::new();

    let reduction_result = if local {
        SdimResult {
            method: SdimMethod::ReductionTheorem,
            outcome: SdimOutcome::NotApplicable {
                reason: "single local factor: outside the covered ring classes".into(),
            },
        }
    } else {
        sdim_via_reduction(&pis.graph).expect("connected by construction")
    };
    let cover_result = sdim_via_vertex_cover(&pis.graph).expect("connected by construction");
    let brute_result = if opts.oracle && pis.vertex_count() <= opts.oracle_cap {
        Some(sdim_bruteforce(&pis.graph, opts.oracle_cap).expect("within cap and connected"))
    } else {
        None
    };

    for result in [Some(&reduction_result), Some(&cover_result), brute_result.as_ref()]
        .into_iter()
        .flatten()
    {
        methods.push(method_detail(&pis, result));
    }
    timings.sdim_methods = watch.lap_ms();
    timings.total =
        timings.build + timings.distances + timings.reduction + timings.clique + timings.sdim_methods;

    let values: Vec<u64> = methods.iter().filter_map(|m| m.value).collect();
    let method_disagreement = values.windows(2).any(|w| w[0] != w[1]);

    let computed_sdim = cover_result.value().expect("vertex cover always applies") as u64;
    let predictions = predicted_sdim(spec)
        .iter()
        .map(|p| PredictionRow {
            formula_id: p.formula_id.to_string(),
            value: p.predicted,
            status: p.compare(computed_sdim).to_string(),
        })
        .collect();

    let report = AnalysisReport {
        spec: spec.display_text(),
        class: class.to_string(),
        vertices: pis.vertex_count() as u64,
        edges: pis.edge_count() as u64,
        diameter,
        clique: CliqueSection {
            size: clique_size as u64,
            witness: clique_witness.iter().map(|&i| pis.labels[i].clone()).collect(),
        },
        reduced_classes: reduced.class_count() as u64,
        sdim: SdimSection {
            reduction: reduction_result.value().map(|v| v as u64),
            vertex_cover: computed_sdim,
            bruteforce: brute_result.as_ref().and_then(|r| r.value()).map(|v| v as u64),
        },
        predictions,
        timings_ms: timings,
    };
    let detail = AnalysisDetail {
        clique_witness_indices: clique_witness,
        methods,
        scope_note: local.then(|| {
            "single local factor: outside the covered ring classes, general engine only".into()
        }),
        method_disagreement,
    };
    Ok(Analysis {
        report,
        detail,
        pis,
    })
}

fn method_detail(pis: &PisGraph, result: &SdimResult) -> MethodDetail {
    match &result.outcome {
        SdimOutcome::Value { value, witness } => {
            // strong-resolving witnesses must re-validate before emission
            if matches!(result.method, SdimMethod::VertexCover | SdimMethod::BruteForce) {
                assert_eq!(
                    is_strong_resolving_set(&pis.graph, witness),
                    Ok(true),
                    "{} witness failed validation",
                    result.method.name()
                );
            }
            MethodDetail {
                method: result.method,
                value: Some(*value as u64),
                witness_labels: Some(witness.iter().map(|&i| pis.labels[i].clone()).collect()),
                note: None,
            }
        }
        SdimOutcome::NotApplicable { reason } => MethodDetail {
            method: result.method,
            value: None,
            witness_labels: None,
            note: Some(reason.clone()),
        },
    }
}

fn validate_clique(pis: &PisGraph, witness: &[usize]) {
    for (a, &i) in witness.iter().enumerate() {
        for &j in &witness[a + 1..] {
            let sum = pis.spec.ideal_sum(&pis.vertex_ideals[i], &pis.vertex_ideals[j]);
            assert!(
                pis.spec.is_prime_ideal(&sum),
                "clique witness contains a non-adjacent pair"
            );
        }
    }
}

pub fn report_to_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// verification sweeps

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Fields,
    Unique,
    ChainPir,
    Mixed,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fields => "fields",
            Family::Unique => "unique",
            Family::ChainPir => "chainpir",
            Family::Mixed => "mixed",
        }
    }
}

/// Inclusive bounds per range key, parsed from e.g. `n=2..4,t=3..4`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepRange {
    pub n: Option<(u32, u32)>,
    pub m: Option<(u32, u32)>,
    pub t: Option<(u32, u32)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RangeError {
    #[error("malformed range `{0}`, expected e.g. `n=3..6` or `n=1,m=1..3`")]
    Malformed(String),
    #[error("range key `{0}` is not one of n, m, t")]
    UnknownKey(String),
    #[error("family {family} needs range key `{key}`")]
    MissingKey { family: &'static str, key: &'static str },
    #[error("empty range for key `{0}`")]
    EmptyRange(char),
}

pub fn parse_range(text: &str) -> Result<SweepRange, RangeError> {
    let mut range = SweepRange::default();
    for part in text.split(',') {
        let (key, bounds) = part
            .split_once('=')
            .ok_or_else(|| RangeError::Malformed(part.to_string()))?;
        let parse_u32 =
            |s: &str| s.trim().parse::<u32>().map_err(|_| RangeError::Malformed(part.to_string()));
        let (lo, hi) = match bounds.split_once("..") {
            Some((lo, hi)) => (parse_u32(lo)?, parse_u32(hi)?),
            None => {
                let v = parse_u32(bounds)?;
                (v, v)
            }
        };
        let slot = match key.trim() {
            "n" => &mut range.n,
            "m" => &mut range.m,
            "t" => &mut range.t,
            other => return Err(RangeError::UnknownKey(other.to_string())),
        };
        if lo > hi {
            return Err(RangeError::EmptyRange(key.trim().chars().next().unwrap_or('?')));
        }
        *slot = Some((lo, hi));
    }
    Ok(range)
}

/// The specs a family sweep visits, in deterministic order.
pub fn family_specs(family: Family, range: &SweepRange) -> Result<Vec<RingSpec>, RangeError> {
    let need = |slot: Option<(u32, u32)>, key: &'static str| {
        slot.ok_or(RangeError::MissingKey {
            family: family.name(),
            key,
        })
    };
    let mut specs = Vec::new();
    match family {
        Family::Fields => {
            let (lo, hi) = need(range.n, "n")?;
            for n in lo..=hi {
                specs.push(RingSpec::from_nilpotencies(&vec![1; n.max(1) as usize]));
            }
        }
        Family::Unique => {
            let (lo, hi) = need(range.n, "n")?;
            for n in lo..=hi {
                specs.push(RingSpec::from_nilpotencies(&vec![2; n.max(1) as usize]));
            }
        }
        Family::ChainPir => {
            let (nlo, nhi) = need(range.n, "n")?;
            let (tlo, thi) = range.t.unwrap_or((3, 3));
            for n in nlo..=nhi {
                for combo in nondecreasing_tuples(tlo.max(3), thi.max(3), n.max(1) as usize) {
                    let mut factors = combo;
                    factors.reverse(); // display larger chains first, e.g. [4, 3]
                    specs.push(RingSpec::from_nilpotencies(&factors));
                }
            }
        }
        Family::Mixed => {
            let (nlo, nhi) = need(range.n, "n")?;
            let (mlo, mhi) = need(range.m, "m")?;
            for n in nlo..=nhi {
                for m in mlo..=mhi {
                    let mut factors = vec![2; n.max(1) as usize];
                    factors.extend(std::iter::repeat_n(1, m.max(1) as usize));
                    specs.push(RingSpec::from_nilpotencies(&factors));
                }
            }
        }
    }
    Ok(specs)
}

fn nondecreasing_tuples(lo: u32, hi: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(lo: u32, hi: u32, len: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let start = current.last().copied().unwrap_or(lo);
        for v in start..=hi {
            current.push(v);
            rec(lo, hi, len, current, out);
            current.pop();
        }
    }
    rec(lo, hi, len, &mut current, &mut out);
    out
}

/// Guard for sweep items; larger graphs are skipped with a notice.
pub const SWEEP_VERTEX_GUARD: u64 = 1000;

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub spec: String,
    pub class: String,
    pub vertices: u64,
    /// Notice when the row was skipped instead of computed.
    pub skipped: Option<String>,
    pub sdim: Option<u64>,
    pub predictions: Vec<(String, u64, PredictionStatus)>,
    /// Whether this row counts as verified for the exit code: every
    /// prediction confirmed, except that mixed-class rows need exactly one
    /// of the two corollary readings to hold.
    pub ok: bool,
}

pub fn run_sweep(family: Family, range: &SweepRange) -> Result<Vec<SweepRow>, RangeError> {
    let specs = family_specs(family, range)?;
    Ok(specs.iter().map(sweep_spec).collect())
}

pub fn sweep_spec(spec: &RingSpec) -> SweepRow {
    let class = spec.classify();
    let vertices = crate::formulas::predicted_vertex_count(spec);
    let base = SweepRow {
        spec: spec.display_text(),
        class: class.to_string(),
        vertices,
        skipped: None,
        sdim: None,
        predictions: Vec::new(),
        ok: true,
    };
    if vertices > SWEEP_VERTEX_GUARD {
        return SweepRow {
            skipped: Some(format!("{vertices} vertices exceed the sweep guard of {SWEEP_VERTEX_GUARD}")),
            ..base
        };
    }
    if is_disconnected_case(spec) {
        return SweepRow {
            skipped: Some("disconnected: product of two fields".into()),
            ..base
        };
    }
    let pis = match build_pis(spec) {
        Ok(p) => p,
        Err(e) => {
            return SweepRow {
                skipped: Some(e.to_string()),
                ..base
            }
        }
    };
    let computed = sdim_via_vertex_cover(&pis.graph)
        .expect("sweep specs are connected")
        .value()
        .expect("vertex cover always applies") as u64;
    let predictions: Vec<(String, u64, PredictionStatus)> = predicted_sdim(spec)
        .iter()
        .map(|p| (p.formula_id.to_string(), p.predicted, p.compare(computed)))
        .collect();
    let confirmed = predictions
        .iter()
        .filter(|(_, _, s)| *s == PredictionStatus::Confirmed)
        .count();
    let ok = if matches!(class, RingClass::MixedUniqueAndFields { .. }) {
        confirmed == 1
    } else {
        confirmed == predictions.len()
    };
    SweepRow {
        sdim: Some(computed),
        predictions,
        ok,
        ..base
    }
}

// ---------------------------------------------------------------------------

struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    last: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            last: std::time::Instant::now(),
        }
    }

    #[cfg(not(target_arch = "wasm32"))]
    fn lap_ms(&mut self) -> u64 {
        let now = std::time::Instant::now();
        let ms = now.duration_since(self.last).as_millis() as u64;
        self.last = now;
        ms
    }

    // no monotonic clock on bare wasm; timings read as zero there
    #[cfg(target_arch = "wasm32")]
    fn lap_ms(&mut self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_z4_z9() {
        let analysis = analyze_text(
            "Z(4) x Z(9)",
            AnalyzeOptions {
                oracle: true,
                ..Default::default()
            },
        )
        .unwrap();
        let r = &analysis.report;
        assert_eq!(r.vertices, 7);
        assert_eq!(r.edges, 12);
        assert_eq!(r.diameter, 2);
        assert_eq!(r.clique.size, 3);
        assert_eq!(r.reduced_classes, 7);
        assert_eq!(r.sdim.reduction, Some(4));
        assert_eq!(r.sdim.vertex_cover, 4);
        assert_eq!(r.sdim.bruteforce, Some(4));
        assert!(!analysis.detail.method_disagreement);
        assert_eq!(r.predictions.len(), 1);
        assert_eq!(r.predictions[0].formula_id, "Thm-unique");
        assert_eq!(r.predictions[0].status, "Confirmed");
    }

    #[test]
    fn analyze_refuses_two_fields() {
        let err = analyze_text("F x F", AnalyzeOptions::default()).unwrap_err();
        assert_eq!(err.to_string(), "disconnected: product of two fields");
    }

    #[test]
    fn analyze_single_field_reports_empty_graph() {
        let err = analyze_text("F", AnalyzeOptions::default()).unwrap_err();
        assert!(matches!(err, AnalyzeError::Build(_)));
    }

    #[test]
    fn analyze_local_spec_routes_to_general_engine() {
        let analysis = analyze_text("Z(16)", AnalyzeOptions::default()).unwrap();
        assert_eq!(analysis.report.sdim.reduction, None);
        assert_eq!(analysis.report.sdim.vertex_cover, 1); // star on 3 vertices
        assert!(analysis.detail.scope_note.is_some());
    }

    #[test]
    fn json_round_trip_and_schema_keys() {
        let analysis = analyze_text(
            "Z(4) x Z(9)",
            AnalyzeOptions {
                oracle: true,
                ..Default::default()
            },
        )
        .unwrap();
        let json = report_to_json(&analysis.report);
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, analysis.report);
        // stable top-level key order
        let positions: Vec<usize> = [
            "\"spec\"",
            "\"class\"",
            "\"vertices\"",
            "\"edges\"",
            "\"diameter\"",
            "\"clique\"",
            "\"reduced_classes\"",
            "\"sdim\"",
            "\"predictions\"",
            "\"timings_ms\"",
        ]
        .iter()
        .map(|k| json.find(k).unwrap())
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        // identical inputs serialize identically
        assert_eq!(json, report_to_json(&analysis.report));
    }

    #[test]
    fn bruteforce_key_absent_without_oracle() {
        let analysis = analyze_text("Z(4) x Z(9)", AnalyzeOptions::default()).unwrap();
        let json = report_to_json(&analysis.report);
        assert!(!json.contains("bruteforce"));
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.sdim.bruteforce, None);
    }

    #[test]
    fn range_parsing() {
        assert_eq!(
            parse_range("n=3..6").unwrap(),
            SweepRange {
                n: Some((3, 6)),
                ..Default::default()
            }
        );
        assert_eq!(
            parse_range("n=1,m=1..3").unwrap(),
            SweepRange {
                n: Some((1, 1)),
                m: Some((1, 3)),
                ..Default::default()
            }
        );
        assert_eq!(
            parse_range("n=2..3,t=3..4").unwrap(),
            SweepRange {
                n: Some((2, 3)),
                t: Some((3, 4)),
                ..Default::default()
            }
        );
        assert!(matches!(parse_range("k=2"), Err(RangeError::UnknownKey(_))));
        assert!(matches!(parse_range("n=x"), Err(RangeError::Malformed(_))));
        assert!(matches!(parse_range("n=5..2"), Err(RangeError::EmptyRange('n'))));
        assert!(matches!(
            family_specs(Family::Mixed, &parse_range("n=1..2").unwrap()),
            Err(RangeError::MissingKey { key: "m", .. })
        ));
    }

    #[test]
    fn family_enumeration() {
        let fields = family_specs(Family::Fields, &parse_range("n=3..5").unwrap()).unwrap();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0].nilpotencies(), &[1, 1, 1]);

        let chain = family_specs(Family::ChainPir, &parse_range("n=2,t=3..4").unwrap()).unwrap();
        let factor_sets: Vec<&[u32]> = chain.iter().map(|s| s.nilpotencies()).collect();
        assert_eq!(factor_sets, vec![&[3u32, 3][..], &[4, 3][..], &[4, 4][..]]);

        let mixed = family_specs(Family::Mixed, &parse_range("n=1..2,m=1").unwrap()).unwrap();
        assert_eq!(mixed.len(), 2);
        assert_eq!(mixed[1].nilpotencies(), &[2, 2, 1]);
    }

    #[test]
    fn sweep_rows_confirm_field_theorem() {
        let rows = run_sweep(Family::Fields, &parse_range("n=3..5").unwrap()).unwrap();
        let sdims: Vec<u64> = rows.iter().map(|r| r.sdim.unwrap()).collect();
        assert_eq!(sdims, vec![3, 10, 25]);
        assert!(rows.iter().all(|r| r.ok));
    }

    #[test]
    fn sweep_guard_skips_huge_specs() {
        let rows = run_sweep(Family::Fields, &parse_range("n=10").unwrap()).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].skipped.is_some());
        assert!(rows[0].ok);
    }

    #[test]
    fn mixed_sweep_adjudicates_exactly_one_reading() {
        let rows = run_sweep(Family::Mixed, &parse_range("n=1..2,m=1..2").unwrap()).unwrap();
        for row in &rows {
            let confirmed = row
                .predictions
                .iter()
                .filter(|(_, _, s)| *s == PredictionStatus::Confirmed)
                .count();
            assert_eq!(confirmed, 1, "spec {}", row.spec);
            assert!(row.ok);
        }
    }
}
