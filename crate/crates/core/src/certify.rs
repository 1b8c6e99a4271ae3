//! End-to-end certification of the Heawood graph's cycle structure.
//!
//! Every check runs even after an earlier one fails, so a report is always
//! complete; failures are entries, never errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::autgroup::{automorphisms, groups_isomorphic, pgl2};
use crate::cycles::{cycle_census, disjoint_six_cycle_pairs, enumerate_cycles, girth};
use crate::graph::Graph;
use crate::lemmas::{
    check_disjoint_pair_configuration, check_distance_three_pair, check_hamiltonian_chord_pattern,
    check_twelve_cycle_complement, distance_three_pairs, LemmaId, LemmaVerdict,
};
use crate::orbits::{orbit_partition, FamilyKind};
use crate::perm::Permutation;
use crate::zeon::zeon_census;

/// Counts stated for the Heawood graph, as `(quantity, value, gating)`.
/// The 10-cycle figure is compared but never gates the verdict.
pub const REFERENCE_COUNTS: [(&str, u64, bool); 6] = [
    ("6-cycles", 28, true),
    ("8-cycles", 21, true),
    ("10-cycles", 8, false),
    ("12-cycles", 56, true),
    ("14-cycles", 24, true),
    ("disjoint 6-cycle pairs", 42, true),
];

pub const EXPECTED_AUT_ORDER: usize = 336;
pub const EXPECTED_GIRTH: usize = 6;
pub const EXPECTED_DISTANCE_THREE_PAIRS: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub bipartite: bool,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceComparison {
    pub quantity: String,
    pub stated: u64,
    pub computed: u64,
    pub matches: bool,
    pub gating: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityVerdict {
    pub family_kind: FamilyKind,
    pub family_size: usize,
    pub group_order: usize,
    pub orbit_sizes: Vec<usize>,
    pub stabilizer_orders: Vec<Option<usize>>,
    pub transitive: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaSuite {
    pub lemma_id: LemmaId,
    pub instances: usize,
    pub passed: usize,
    pub pass: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub graph: GraphSummary,
    pub girth: Option<usize>,
    pub census_dfs: BTreeMap<usize, u64>,
    pub census_zeon: Option<BTreeMap<usize, u64>>,
    pub zeon_error: Option<String>,
    pub methods_agree: bool,
    pub disjoint_six_cycle_pairs: usize,
    pub reference_comparison: Vec<ReferenceComparison>,
    pub aut_order: usize,
    pub aut_generators: Vec<Permutation>,
    pub pgl2_isomorphic: bool,
    pub transitivity: Vec<TransitivityVerdict>,
    pub lemma_suites: Vec<LemmaSuite>,
    pub lemma_verdicts: Vec<LemmaVerdict>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub first_failure: Option<String>,
    pub elapsed_ms: BTreeMap<String, u64>,
}

impl CertReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// JSON with the timing field removed, for reproducibility comparisons.
    pub fn to_json_without_timings(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serialises");
        if let Some(obj) = value.as_object_mut() {
            obj.remove("elapsed_ms");
        }
        serde_json::to_string_pretty(&value).expect("report serialises")
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(
            out,
            "graph: {} vertices, {} edges, regular degree {}, bipartite {}",
            g.n,
            g.edges,
            g.regular_degree.map_or("-".to_string(), |d| d.to_string()),
            yes_no(g.bipartite)
        );
        let _ = writeln!(out, "girth: {}", self.girth.map_or("acyclic".into(), |x| x.to_string()));
        let _ = writeln!(out, "cycle census (length: dfs / zeon):");
        for (k, c) in &self.census_dfs {
            let z = self
                .census_zeon
                .as_ref()
                .map_or("-".into(), |m| m.get(k).copied().unwrap_or(0).to_string());
            let _ = writeln!(out, "  {k:>2}: {c} / {z}");
        }
        let _ = writeln!(out, "methods agree: {}", yes_no(self.methods_agree));
        let _ = writeln!(out, "stated counts:");
        for p in &self.reference_comparison {
            let _ = writeln!(
                out,
                "  {:<24} stated {:>3}  computed {:>3}  {}{}",
                p.quantity,
                p.stated,
                p.computed,
                if p.matches { "match" } else { "MISMATCH" },
                if p.gating { "" } else { " (informational)" }
            );
        }
        let _ = writeln!(out, "automorphism group order: {}", self.aut_order);
        let _ = writeln!(out, "isomorphic to PGL(2,7): {}", yes_no(self.pgl2_isomorphic));
        for t in &self.transitivity {
            let _ = writeln!(
                out,
                "orbits on {} ({}): sizes {:?}, transitive {}",
                t.family_kind,
                t.family_size,
                t.orbit_sizes,
                yes_no(t.transitive)
            );
        }
        for s in &self.lemma_suites {
            let _ = writeln!(
                out,
                "lemma {}: {}/{} instances pass{}",
                s.lemma_id,
                s.passed,
                s.instances,
                s.note.as_ref().map_or(String::new(), |n| format!(" ({n})"))
            );
        }
        let _ = writeln!(out, "checks:");
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
        }
        match &self.first_failure {
            None => {
                let _ = writeln!(out, "verdict: PASS");
            }
            Some(f) => {
                let _ = writeln!(out, "verdict: FAIL (first failed check: {f})");
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct Timer {
    stages: BTreeMap<String, u64>,
    last: Instant,
}

impl Timer {
    fn new() -> Timer {
        Timer {
            stages: BTreeMap::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.stages
            .insert(stage.to_string(), (now - self.last).as_millis() as u64);
        self.last = now;
    }
}

fn suite(
    lemma_id: LemmaId,
    results: Vec<crate::error::Result<LemmaVerdict>>,
    expected_instances: Option<usize>,
    verdicts: &mut Vec<LemmaVerdict>,
) -> LemmaSuite {
    let instances = results.len();
    let mut passed = 0;
    let mut note = None;
    for r in results {
        match r {
            Ok(v) => {
                passed += v.pass as usize;
                verdicts.push(v);
            }
            Err(e) => {
                note.get_or_insert_with(|| e.to_string());
            }
        }
    }
    if let Some(want) = expected_instances.filter(|&w| w != instances) {
        note.get_or_insert_with(|| format!("{instances} instances, expected {want}"));
    }
    LemmaSuite {
        lemma_id,
        instances,
        passed,
        pass: note.is_none() && passed == instances && instances > 0,
        note,
    }
}

/// Run the full certification on `g`.
pub fn certify_heawood(g: &Graph) -> CertReport {
    let mut timer = Timer::new();
    let mut checks: Vec<Check> = Vec::new();
    let mut check = |name: &str, pass: bool| {
        checks.push(Check {
            name: name.to_string(),
            pass,
        })
    };

    let graph = GraphSummary {
        n: g.n(),
        edges: g.edge_count(),
        regular_degree: g.regular_degree(),
        bipartite: g.is_bipartite(),
        connected: g.is_connected(),
    };
    check("14 vertices and 21 edges", graph.n == 14 && graph.edges == 21);
    check("cubic", graph.regular_degree == Some(3));
    check("bipartite", graph.bipartite);
    timer.lap("graph");

    let girth = girth(g);
    check("girth 6", girth == Some(EXPECTED_GIRTH));
    timer.lap("girth");

    let census_dfs = cycle_census(g);
    timer.lap("census_dfs");
    let (census_zeon, zeon_error) = match zeon_census(g) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    timer.lap("census_zeon");
    let methods_agree = census_zeon.as_ref() == Some(&census_dfs);
    check("dfs and zeon censuses agree", methods_agree);

    let pairs = disjoint_six_cycle_pairs(g);
    timer.lap("disjoint_pairs");

    let computed = |quantity: &str| -> u64 {
        match quantity {
            "disjoint 6-cycle pairs" => pairs.len() as u64,
            q => {
                let k: usize = q.trim_end_matches("-cycles").parse().expect("cycle quantity");
                census_dfs.get(&k).copied().unwrap_or(0)
            }
        }
    };
    let reference_comparison: Vec<ReferenceComparison> = REFERENCE_COUNTS
        .iter()
        .map(|&(quantity, stated, gating)| {
            let c = computed(quantity);
            ReferenceComparison {
                quantity: quantity.to_string(),
                stated,
                computed: c,
                matches: c == stated,
                gating,
            }
        })
        .collect();
    for p in reference_comparison.iter().filter(|p| p.gating) {
        check(&format!("{} = {}", p.quantity, p.stated), p.matches);
    }

    let aut = automorphisms(g);
    timer.lap("automorphisms");
    check("automorphism group order 336", aut.order() == EXPECTED_AUT_ORDER);
    let pgl2_isomorphic = groups_isomorphic(&aut, &pgl2(7).expect("7 is prime"));
    check("automorphism group isomorphic to PGL(2,7)", pgl2_isomorphic);
    timer.lap("pgl2");

    let c14 = if g.n() >= 14 { enumerate_cycles(g, 14).unwrap_or_default() } else { Vec::new() };
    let c12 = if g.n() >= 12 { enumerate_cycles(g, 12).unwrap_or_default() } else { Vec::new() };
    let mut transitivity = Vec::new();
    {
        let mut record = |kind: FamilyKind, result: crate::error::Result<(usize, Vec<usize>)>| {
            let (family_size, orbit_sizes, error) = match result {
                Ok((n, sizes)) => (n, sizes, None),
                Err(e) => (0, Vec::new(), Some(e.to_string())),
            };
            let stabilizer_orders = orbit_sizes
                .iter()
                .map(|&s| aut.order().is_multiple_of(s).then(|| aut.order() / s))
                .collect();
            transitivity.push(TransitivityVerdict {
                family_kind: kind,
                family_size,
                group_order: aut.order(),
                transitive: orbit_sizes.len() == 1,
                orbit_sizes,
                stabilizer_orders,
                error,
            });
        };
        let k14 = FamilyKind::Cycles(14);
        record(k14, orbit_partition(&aut, &c14, k14).map(|p| (c14.len(), p.orbit_sizes())));
        let k12 = FamilyKind::Cycles(12);
        record(k12, orbit_partition(&aut, &c12, k12).map(|p| (c12.len(), p.orbit_sizes())));
        let kp = FamilyKind::DisjointSixCyclePairs;
        record(kp, orbit_partition(&aut, &pairs, kp).map(|p| (pairs.len(), p.orbit_sizes())));
    }
    for t in &transitivity {
        let divides = t.stabilizer_orders.iter().all(Option::is_some);
        check(&format!("transitive on {}", t.family_kind), t.transitive && divides);
    }
    timer.lap("orbits");

    let mut lemma_verdicts = Vec::new();
    let chord_results = c14.iter().map(|c| check_hamiltonian_chord_pattern(g, c)).collect();
    let complement_results = c12.iter().map(|c| check_twelve_cycle_complement(g, c)).collect();
    let d3 = distance_three_pairs(g);
    let d3_results = d3.iter().map(|&(u, v)| check_distance_three_pair(g, u, v)).collect();
    let pair_results = pairs.iter().map(|p| check_disjoint_pair_configuration(g, p)).collect();
    let lemma_suites = vec![
        suite(LemmaId::HamiltonianChords, chord_results, None, &mut lemma_verdicts),
        suite(LemmaId::TwelveCycleComplement, complement_results, None, &mut lemma_verdicts),
        suite(
            LemmaId::DistanceThreePairs,
            d3_results,
            Some(EXPECTED_DISTANCE_THREE_PAIRS),
            &mut lemma_verdicts,
        ),
        suite(LemmaId::DisjointPairConfiguration, pair_results, None, &mut lemma_verdicts),
    ];
    for s in &lemma_suites {
        check(&format!("lemma {}", s.lemma_id), s.pass);
    }
    timer.lap("lemmas");

    let first_failure = checks.iter().find(|c| !c.pass).map(|c| c.name.clone());
    CertReport {
        graph,
        girth,
        census_dfs,
        census_zeon,
        zeon_error,
        methods_agree,
        disjoint_six_cycle_pairs: pairs.len(),
        reference_comparison,
        aut_order: aut.order(),
        aut_generators: aut.generators().to_vec(),
        pgl2_isomorphic,
        transitivity,
        lemma_suites,
        lemma_verdicts,
        pass: first_failure.is_none(),
        first_failure,
        checks,
        elapsed_ms: timer.stages,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::heawood;

    #[test]
    fn heawood_certifies() {
        let r = certify_heawood(&heawood());
        assert!(r.pass, "{}", r.render_text());
        assert_eq!(r.census_dfs[&6], 28);
        assert!(r.methods_agree);
        let ten = r.reference_comparison.iter().find(|p| p.quantity == "10-cycles").unwrap();
        assert!(!ten.gating);
    }

    #[test]
    fn edge_swap_mutant_fails_at_girth() {
        let mut g = heawood();
        g.remove_edge(1, 6).unwrap();
        g.add_edge(1, 8).unwrap();
        let r = certify_heawood(&g);
        assert!(!r.pass);
        assert_eq!(r.first_failure.as_deref(), Some("cubic"));
        assert_eq!(r.check("girth 6"), Some(false));
    }
}
