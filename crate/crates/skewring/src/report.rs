//! Analysis reports: one record per instance with a verdict for every
//! check and witnesses that make failures reproducible from the report
//! alone. Timing is measured per check but kept out of the serialized
//! form, so identical inputs produce identical output.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::corpus::{random_restriction, Rng};
use crate::dynamics::DiscreteSystem;
use crate::format::InstanceFile;
use crate::group::elem_label;
use crate::leavitt::{
    build_leavitt_ring, find_exitless_cycle, leavitt_is_simple, only_trivial_hereditary_saturated,
    proper_hereditary_saturated_witness, Graph, LeavittError,
};
use crate::linalg::PrimeField;
use crate::paction::{AlgebraPartialAction, SetPartialAction};
use crate::ring::{OracleOutcome, SkewRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Skipped,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b { Verdict::True } else { Verdict::False }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Skipped => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True => write!(f, "true"),
            Verdict::False => write!(f, "false"),
            Verdict::Skipped => write!(f, "skipped"),
        }
    }
}

/// One named check with its verdict and, when it failed or was skipped,
/// the evidence.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Wall time of the check. Excluded from serialization so reports are
    /// byte-identical across runs.
    #[serde(skip)]
    pub millis: f64,
    /// Whether a false verdict here means a falsified cross-check rather
    /// than a plain property being false.
    #[serde(skip)]
    pub is_agreement: bool,
}

/// The analysis record for one instance.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub instance: String,
    pub kind: String,
    /// The instance in its interchange form, so a failure is reproducible
    /// from the report alone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_data: Option<serde_json::Value>,
    pub info: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(instance: impl Into<String>, kind: &str) -> Self {
        Report {
            instance: instance.into(),
            kind: kind.to_string(),
            instance_data: None,
            info: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, verdict: Verdict, witness: Option<String>, started: Instant) {
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
            witness,
            reason: None,
            millis: started.elapsed().as_secs_f64() * 1e3,
            is_agreement: false,
        });
    }

    fn push_oracle(&mut self, name: &str, outcome: &OracleOutcome, ring: &SkewRing, started: Instant) {
        let (verdict, witness, reason) = match outcome {
            OracleOutcome::Holds => (Verdict::True, None, None),
            OracleOutcome::Fails { witness } => {
                (Verdict::False, Some(ring.format_element(witness)), None)
            }
            OracleOutcome::Infeasible { log2_required, log2_budget } => (
                Verdict::Skipped,
                None,
                Some(format!("needs ~2^{log2_required} ideal closures, budget 2^{log2_budget}")),
            ),
        };
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
            witness,
            reason,
            millis: started.elapsed().as_secs_f64() * 1e3,
            is_agreement: false,
        });
    }

    fn push_agreement(&mut self, name: &str, left: bool, right: Option<bool>, detail: &str, started: Instant) {
        let (verdict, witness, reason) = match right {
            None => (Verdict::Skipped, None, Some("oracle side skipped".to_string())),
            Some(r) if r == left => (Verdict::True, None, None),
            Some(r) => (Verdict::False, Some(format!("{detail}: expected {left}, oracle says {r}")), None),
        };
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
            witness,
            reason,
            millis: started.elapsed().as_secs_f64() * 1e3,
            is_agreement: true,
        });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the instance itself was rejected (axiom validation failed).
    pub fn invalid_input(&self) -> bool {
        self.check("axioms_valid").is_some_and(|c| c.verdict == Verdict::False)
    }

    /// Names of falsified cross-checks. Nonempty means an implementation
    /// bug has been exposed, which is the exit-1 condition.
    pub fn disagreements(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.is_agreement && c.verdict == Verdict::False)
            .map(|c| c.name.clone())
            .collect()
    }

    /// Process exit code: 2 for invalid input, 1 for any falsified
    /// cross-check, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.invalid_input() {
            2
        } else if !self.disagreements().is_empty() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Per-check wall times, for diagnostics on stderr.
    pub fn timings(&self) -> Vec<(String, f64)> {
        self.checks.iter().map(|c| (c.name.clone(), c.millis)).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.kind, self.instance)?;
        for (key, value) in &self.info {
            writeln!(f, "  {key}: {value}")?;
        }
        for c in &self.checks {
            write!(f, "  {:<34} {}", c.name, c.verdict)?;
            if let Some(w) = &c.witness {
                write!(f, "  [{w}]")?;
            }
            if let Some(r) = &c.reason {
                write!(f, "  ({r})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn label_subset(action: &SetPartialAction, subset: &BTreeSet<usize>) -> String {
    let labels: Vec<&str> = subset.iter().map(|&x| action.point_label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

/// Runs the full analysis pipeline on a partial-action instance: axiom
/// validation, associativity, G-simplicity, maximal commutativity, both
/// exhaustive oracles, and the two cross-checks.
pub fn analyze_action(
    name: &str,
    field: PrimeField,
    action: &SetPartialAction,
    budget_log2: u32,
) -> Report {
    let mut report = Report::new(name, "action");
    if let Ok(file) = InstanceFile::from_action(action, field) {
        report.instance_data = serde_json::to_value(&file).ok();
    }

    let t0 = Instant::now();
    let validation = action.validate();
    if !validation.is_valid() {
        report.push("axioms_valid", Verdict::False, Some(validation.to_string()), t0);
        return report;
    }
    report.push("axioms_valid", Verdict::True, None, t0);

    let algebra = AlgebraPartialAction::new(action.clone(), field);
    let ring = match SkewRing::new(algebra) {
        Ok(r) => r,
        Err(e) => {
            let t = Instant::now();
            report.push("ring_constructible", Verdict::False, Some(e.to_string()), t);
            return report;
        }
    };
    report.info.push(("field".into(), format!("F_{}", field.modulus())));
    report.info.push(("carrier".into(), format!("{}", action.size())));
    report.info.push(("ring_dimension".into(), format!("{}", ring.dim())));

    let t = Instant::now();
    report.push("associative", Verdict::from_bool(ring.verify_associativity()), None, t);

    let t = Instant::now();
    let g_simple = action.is_g_simple();
    let witness = (!g_simple).then(|| {
        let x = (0..action.size())
            .find(|&x| action.invariant_closure([x]).len() < action.size())
            .expect("some closure is proper");
        format!("invariant subset {}", label_subset(action, &action.invariant_closure([x])))
    });
    report.push("g_simple", Verdict::from_bool(g_simple), witness, t);

    let t = Instant::now();
    let max_comm = ring.is_maximal_commutative();
    let witness = (!max_comm).then(|| {
        let r0 = ring.r0_subspace();
        let c = ring.centralizer_of_r0();
        let row = c
            .basis()
            .iter()
            .find(|v| !r0.contains(v).expect("same space"))
            .expect("centralizer exceeds R₀δ₀");
        format!("central element {}", ring.format_element(row))
    });
    report.push("max_commutative", Verdict::from_bool(max_comm), witness, t);

    let t = Instant::now();
    let iip = ring.has_ideal_intersection_property_oracle(budget_log2);
    report.push_oracle("iip_oracle", &iip, &ring, t);

    let t = Instant::now();
    let simple = ring.is_simple_oracle(budget_log2);
    report.push_oracle("simple_oracle", &simple, &ring, t);

    let t = Instant::now();
    report.push_agreement(
        "max_commutative_iff_iip",
        max_comm,
        iip.as_bool(),
        "maximal commutativity vs ideal intersection property",
        t,
    );
    let t = Instant::now();
    report.push_agreement(
        "simplicity_criterion",
        g_simple && max_comm,
        simple.as_bool(),
        "G-simple ∧ maximal commutative vs simplicity oracle",
        t,
    );
    report
}

/// Graph-level analysis: condition (L), the hereditary/saturated lattice,
/// and the simplicity criterion; with `construct`, also the concrete ring
/// of an acyclic graph with the end-to-end cross-checks.
pub fn analyze_graph(
    name: &str,
    graph: &Graph,
    field: PrimeField,
    construct: bool,
    budget_log2: u32,
) -> Result<Report, LeavittError> {
    let mut report = Report::new(name, "graph");
    report.instance_data =
        serde_json::to_value(crate::format::GraphFile::from_graph(graph)).ok();
    report.info.push(("vertices".into(), format!("{}", graph.vertex_count())));
    report.info.push(("edges".into(), format!("{}", graph.edges().len())));

    let t = Instant::now();
    let cycle = find_exitless_cycle(graph);
    let witness = cycle.map(|edges| {
        let names: Vec<String> = edges.iter().map(|&e| graph.edges()[e].name.clone()).collect();
        format!("exitless cycle {}", names.join("·"))
    });
    report.push("condition_l", Verdict::from_bool(witness.is_none()), witness, t);

    let t = Instant::now();
    let trivial = only_trivial_hereditary_saturated(graph);
    let witness = (!trivial).then(|| {
        let set = proper_hereditary_saturated_witness(graph).expect("witness exists");
        let names: Vec<&str> = set.iter().map(|&v| graph.vertex_names()[v].as_str()).collect();
        format!("hereditary & saturated {{{}}}", names.join(", "))
    });
    report.push("trivial_hereditary_saturated", Verdict::from_bool(trivial), witness, t);

    let t = Instant::now();
    let criterion = leavitt_is_simple(graph);
    report.push("simplicity_criterion_graph", Verdict::from_bool(criterion), None, t);

    if !construct {
        return Ok(report);
    }

    let t = Instant::now();
    let lr = build_leavitt_ring(graph, field)?;
    let ring = lr.ring();
    report.info.push(("field".into(), format!("F_{}", field.modulus())));
    report.info.push(("boundary_paths".into(), format!("{}", lr.points().len())));
    report.info.push(("ring_dimension".into(), format!("{}", ring.dim())));
    report.push("ring_constructible", Verdict::True, None, t);

    let t = Instant::now();
    let max_comm = ring.is_maximal_commutative();
    report.push_agreement(
        "condition_l_iff_max_commutative",
        satisfies_condition_l_cached(&report),
        Some(max_comm),
        "condition (L) vs maximal commutativity",
        t,
    );

    let t = Instant::now();
    let g_simple = ring.action().base().is_g_simple();
    report.push_agreement(
        "trivial_hs_iff_g_simple",
        trivial,
        Some(g_simple),
        "trivial hereditary/saturated lattice vs G-simplicity",
        t,
    );

    let t = Instant::now();
    let simple = ring.is_simple_oracle(budget_log2);
    report.push_oracle("simple_oracle", &simple, ring, t);

    let t = Instant::now();
    report.push_agreement(
        "graph_criterion_iff_simple",
        criterion,
        simple.as_bool(),
        "graph criterion vs ring oracle",
        t,
    );

    let t = Instant::now();
    let uniq = lr.uniqueness_check(budget_log2);
    report.push_oracle("uniqueness_vertex_units", &uniq, ring, t);

    // The constructive vertex witness on each vertex indicator and on 1_X,
    // confirmed by ideal membership.
    let t = Instant::now();
    let id = ring.action().base().group().identity();
    let mut all_ok = true;
    let mut detail = None;
    let mut candidates: Vec<crate::linalg::Vector> =
        (0..graph.vertex_count()).map(|v| lr.vertex_indicator(v)).collect();
    candidates.push(lr.ring().action().indicator(0..lr.points().len()));
    for x0 in candidates {
        if x0.is_zero() {
            continue;
        }
        match lr.vertex_witness(&x0) {
            Ok(v) => {
                let elem = ring.monomial(&id, &x0).expect("x₀ ∈ D₀");
                let ideal = ring.ideal_generated(&elem).expect("ring element");
                if !ideal.contains(&lr.vertex_unit(v)).expect("same space") {
                    all_ok = false;
                    detail = Some(format!("membership check failed for witness {v}"));
                    break;
                }
            }
            Err(e) => {
                all_ok = false;
                detail = Some(e.to_string());
                break;
            }
        }
    }
    report.push("vertex_witness_constructive", Verdict::from_bool(all_ok), detail, t);

    Ok(report)
}

fn satisfies_condition_l_cached(report: &Report) -> bool {
    report.check("condition_l").and_then(|c| c.verdict.as_bool()).unwrap_or(false)
}

/// Dynamics-view analysis of a table-group instance: topological freeness,
/// minimality, and the simplicity equivalence with its two ingredient
/// propositions.
pub fn analyze_dynamics(
    name: &str,
    field: PrimeField,
    action: &SetPartialAction,
    budget_log2: u32,
) -> Report {
    let mut report = Report::new(name, "dynamics");
    report.info.push((
        "model".into(),
        "finite discrete space, prime-field coefficients (algebraic analogue of the compact setting)".into(),
    ));
    if let Ok(file) = InstanceFile::from_action(action, field) {
        report.instance_data = serde_json::to_value(&file).ok();
    }

    let t0 = Instant::now();
    let validation = action.validate();
    if !validation.is_valid() {
        report.push("axioms_valid", Verdict::False, Some(validation.to_string()), t0);
        return report;
    }
    report.push("axioms_valid", Verdict::True, None, t0);

    let system = DiscreteSystem::new(action.clone());

    let t = Instant::now();
    let free = system.is_topologically_free();
    let witness = system
        .fixed_point_witness()
        .map(|(g, x)| format!("h_{} fixes {}", elem_label(&g, None), action.point_label(x)));
    report.push("topologically_free", Verdict::from_bool(free), witness, t);

    let t = Instant::now();
    let minimal = system.is_minimal();
    let witness = system
        .minimality_witness()
        .map(|s| format!("invariant subset {}", label_subset(action, &s)));
    report.push("minimal", Verdict::from_bool(minimal), witness, t);

    let ring = match system.ring(field) {
        Ok(r) => r,
        Err(e) => {
            let t = Instant::now();
            report.push("ring_constructible", Verdict::False, Some(e.to_string()), t);
            return report;
        }
    };
    report.info.push(("field".into(), format!("F_{}", field.modulus())));
    report.info.push(("ring_dimension".into(), format!("{}", ring.dim())));

    let t = Instant::now();
    let simple = ring.is_simple_oracle(budget_log2);
    report.push_oracle("simple_oracle", &simple, &ring, t);

    let t = Instant::now();
    report.push_agreement(
        "free_and_minimal_iff_simple",
        free && minimal,
        simple.as_bool(),
        "topological freeness ∧ minimality vs simplicity oracle",
        t,
    );
    let t = Instant::now();
    report.push_agreement(
        "minimal_iff_g_simple",
        minimal,
        Some(action.is_g_simple()),
        "minimality vs G-simplicity",
        t,
    );
    let t = Instant::now();
    report.push_agreement(
        "free_iff_max_commutative",
        free,
        Some(ring.is_maximal_commutative()),
        "topological freeness vs maximal commutativity",
        t,
    );
    report
}

/// Summary of a seeded fuzzing run. Serialization and display contain no
/// timing, so identical flags give byte-identical summaries.
#[derive(Debug, Clone, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub count: usize,
    pub group_order: usize,
    pub max_carrier: usize,
    pub field_p: u32,
    pub budget_log2: u32,
    pub passes: usize,
    pub skips: usize,
    pub failures: usize,
    /// The first disagreeing instance, in interchange form, with its report.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Box<Report>>,
}

impl FuzzSummary {
    pub fn exit_code(&self) -> i32 {
        if self.failures > 0 { 1 } else { 0 }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summaries serialize")
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fuzz seed={} count={} group=c{} max-carrier={} field={} budget=2^{}",
            self.seed, self.count, self.group_order, self.max_carrier, self.field_p, self.budget_log2
        )?;
        write!(f, "pass={} skip={} fail={}", self.passes, self.skips, self.failures)?;
        if let Some(report) = &self.counterexample {
            writeln!(f)?;
            write!(f, "counterexample:\n{report}")?;
        }
        Ok(())
    }
}

/// Generates `count` seeded restriction-of-global instances and runs every
/// cross-check on each; stops at the first disagreement.
pub fn run_fuzz(
    seed: u64,
    count: usize,
    group_order: usize,
    max_carrier: usize,
    field: PrimeField,
    budget_log2: u32,
) -> FuzzSummary {
    let mut summary = FuzzSummary {
        seed,
        count,
        group_order,
        max_carrier,
        field_p: field.modulus(),
        budget_log2,
        passes: 0,
        skips: 0,
        failures: 0,
        counterexample: None,
    };
    let mut rng = Rng::new(seed);
    for i in 0..count {
        let action = random_restriction(&mut rng, group_order, max_carrier);
        let name = format!("seed{seed}#{i}");
        let mut report = analyze_action(&name, field, &action, budget_log2);
        let dynamics = analyze_dynamics(&name, field, &action, budget_log2);
        report.checks.extend(dynamics.checks.into_iter().filter(|c| c.is_agreement));

        let skipped = report
            .checks
            .iter()
            .any(|c| c.is_agreement && c.verdict == Verdict::Skipped);
        if !report.disagreements().is_empty() {
            summary.failures += 1;
            summary.counterexample = Some(Box::new(report));
            return summary;
        } else if skipped {
            summary.skips += 1;
        } else {
            summary.passes += 1;
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{c4_three_point_action, trivial_c2_action};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn c4_report_is_all_green() {
        let report = analyze_action("c4", f2(), &c4_three_point_action(), 16);
        assert_eq!(report.exit_code(), 0);
        for name in ["axioms_valid", "associative", "g_simple", "max_commutative",
                     "iip_oracle", "simple_oracle", "max_commutative_iff_iip", "simplicity_criterion"] {
            assert_eq!(report.check(name).unwrap().verdict, Verdict::True, "{name}");
        }
    }

    #[test]
    fn trivial_action_report_agrees_with_false_verdicts() {
        let report = analyze_action("trivial", f2(), &trivial_c2_action(2), 16);
        assert_eq!(report.exit_code(), 0);
        assert_eq!(report.check("g_simple").unwrap().verdict, Verdict::False);
        assert_eq!(report.check("simple_oracle").unwrap().verdict, Verdict::False);
        assert_eq!(report.check("max_commutative_iff_iip").unwrap().verdict, Verdict::True);
        assert!(report.check("g_simple").unwrap().witness.is_some());
    }

    #[test]
    fn invalid_instance_exits_two() {
        use crate::group::{Group, GroupElem};
        let broken = SetPartialAction::new(
            Group::cyclic(4).unwrap(),
            vec!["e1".into(), "e2".into(), "e3".into()],
            vec![
                (GroupElem::Table(1), vec![(1, 1), (2, 0)]),
                (GroupElem::Table(2), vec![(0, 2), (2, 0)]),
                (GroupElem::Table(3), vec![(0, 1), (1, 2)]),
            ],
        )
        .unwrap();
        let report = analyze_action("broken", f2(), &broken, 16);
        assert_eq!(report.exit_code(), 2);
        assert!(report.check("axioms_valid").unwrap().witness.is_some());
    }

    #[test]
    fn skipped_oracles_do_not_fail_the_run() {
        let report = analyze_action("c4", f2(), &c4_three_point_action(), 4);
        assert_eq!(report.check("simple_oracle").unwrap().verdict, Verdict::Skipped);
        assert_eq!(report.check("simplicity_criterion").unwrap().verdict, Verdict::Skipped);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn graph_reports_with_and_without_construction() {
        let g = Graph::parse_text("e: v1 -> v2\n").unwrap();
        let plain = analyze_graph("a2", &g, f2(), false, 16).unwrap();
        assert!(plain.check("simple_oracle").is_none());
        assert_eq!(plain.check("simplicity_criterion_graph").unwrap().verdict, Verdict::True);

        let full = analyze_graph("a2", &g, f2(), true, 16).unwrap();
        assert_eq!(full.exit_code(), 0);
        assert_eq!(full.check("graph_criterion_iff_simple").unwrap().verdict, Verdict::True);
        assert_eq!(full.check("uniqueness_vertex_units").unwrap().verdict, Verdict::True);
        assert_eq!(full.check("vertex_witness_constructive").unwrap().verdict, Verdict::True);
    }

    #[test]
    fn cyclic_graph_with_construct_is_an_error() {
        let g = Graph::parse_text("e: v -> v\n").unwrap();
        assert!(matches!(
            analyze_graph("loop", &g, f2(), true, 16),
            Err(LeavittError::CyclicGraph)
        ));
        // Without construction the criterion still reports.
        let plain = analyze_graph("loop", &g, f2(), false, 16).unwrap();
        assert_eq!(plain.check("condition_l").unwrap().verdict, Verdict::False);
    }

    #[test]
    fn fuzz_summaries_are_deterministic_and_green() {
        let a = run_fuzz(7, 40, 4, 4, f2(), 16);
        let b = run_fuzz(7, 40, 4, 4, f2(), 16);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(format!("{a}"), format!("{b}"));
        assert_eq!(a.failures, 0);
        assert_eq!(a.passes + a.skips, 40);
    }

    #[test]
    fn empty_fuzz_run_is_empty() {
        let s = run_fuzz(1, 0, 2, 3, f2(), 16);
        assert_eq!((s.passes, s.skips, s.failures), (0, 0, 0));
        assert_eq!(s.exit_code(), 0);
    }

    #[test]
    fn fuzz_counterexample_renders_with_instance() {
        // No real disagreement exists, so synthesize one to pin the
        // counterexample rendering path.
        let mut report = analyze_action("synthetic", f2(), &trivial_c2_action(1), 16);
        report.checks.push(Check {
            name: "synthetic_cross_check".into(),
            verdict: Verdict::False,
            witness: Some("left true, oracle false".into()),
            reason: None,
            millis: 0.0,
            is_agreement: true,
        });
        let summary = FuzzSummary {
            seed: 1,
            count: 1,
            group_order: 2,
            max_carrier: 1,
            field_p: 2,
            budget_log2: 16,
            passes: 0,
            skips: 0,
            failures: 1,
            counterexample: Some(Box::new(report)),
        };
        assert_eq!(summary.exit_code(), 1);
        let text = format!("{summary}");
        assert!(text.contains("counterexample:"));
        assert!(text.contains("synthetic_cross_check"));
        assert!(summary.to_json().contains("instance_data"), "instance must be reproducible");
    }

    #[test]
    fn report_json_round_trips_through_instance_schema() {
        let report = analyze_action("c4", f2(), &c4_three_point_action(), 16);
        let value = serde_json::to_value(&report).unwrap();
        let embedded = value.get("instance_data").cloned().unwrap();
        let file: InstanceFile = serde_json::from_value(embedded).unwrap();
        let (field, action) = file.build().unwrap();
        let again = analyze_action("c4", field, &action, 16);
        for (a, b) in report.checks.iter().zip(again.checks.iter()) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.verdict, b.verdict);
        }
    }
}
