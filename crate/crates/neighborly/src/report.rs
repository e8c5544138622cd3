//! Serializable views of complexes, collapse traces and verification
//! reports, plus CSV and plain-text rendering.
//!
//! JSON and CSV output is canonical: field order is fixed and every list is
//! sorted the same way the core library sorts it, so identical inputs give
//! byte-identical files.

use std::fmt::Write as _;

use neighborly_core::analysis::ComponentReport;
use neighborly_core::circulant::ComponentOutcome;
use neighborly_core::{CollapseTrace, GraphReport, SimplicialComplex, SurfaceClass, Verdict, VerificationReport};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub vertices: Vec<usize>,
    pub maximal_simplices: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        Self {
            vertices: k.vertices().to_vec(),
            maximal_simplices: k.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairJson {
    pub free_face: Vec<usize>,
    pub coface: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub input: ComplexJson,
    pub pairs: Vec<PairJson>,
    pub core: ComplexJson,
}

impl TraceJson {
    pub fn new(input: &SimplicialComplex, trace: &CollapseTrace) -> Self {
        Self {
            input: input.into(),
            pairs: trace
                .pairs
                .iter()
                .map(|p| PairJson {
                    free_face: p.free_face.vertices().to_vec(),
                    coface: p.coface.vertices().to_vec(),
                })
                .collect(),
            core: (&trace.core).into(),
        }
    }
}

pub fn surface_name(c: SurfaceClass) -> String {
    match c {
        SurfaceClass::Sphere => "sphere".into(),
        SurfaceClass::OrientableGenus(g) => format!("orientable-genus-{g}"),
        SurfaceClass::NonorientableCrosscaps(k) => format!("nonorientable-crosscaps-{k}"),
        SurfaceClass::NotASurface => "not-a-surface".into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingJson {
    pub valid: bool,
    pub spanning: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentJson {
    pub f_vector: Vec<usize>,
    pub betti_z: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
    pub betti_z2: Vec<usize>,
    pub euler: i64,
    pub surface: String,
    pub core_dim: Option<usize>,
    pub core_f_vector: Vec<usize>,
    pub collapsed_to_point: bool,
    pub tetrahedron_boundaries: usize,
    pub shelling: Option<ShellingJson>,
    pub verdict: &'static str,
    pub reason: Option<String>,
}

impl ComponentJson {
    fn new(r: &ComponentReport, verdict: Option<Verdict>, reason: Option<&String>) -> Self {
        Self {
            f_vector: r.f_vector.clone(),
            betti_z: r.homology.betti_z.clone(),
            torsion: r.homology.torsion.clone(),
            betti_z2: r.homology.betti_z2.clone(),
            euler: r.homology.euler,
            surface: surface_name(r.surface.classification),
            core_dim: r.core_dim,
            core_f_vector: r.core_f_vector.clone(),
            collapsed_to_point: r.collapsed_to_point,
            tetrahedron_boundaries: r.tetrahedron_boundaries,
            shelling: r.shelling.as_ref().map(|s| ShellingJson {
                valid: s.valid,
                spanning: s.spanning.iter().map(|x| x.vertices().to_vec()).collect(),
            }),
            verdict: verdict.map_or("none", Verdict::name),
            reason: reason.cloned(),
        }
    }

    fn from_outcome(c: &ComponentOutcome) -> Self {
        Self::new(&c.report, Some(c.verdict), c.reason.as_ref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub case: &'static str,
    pub witness: &'static str,
    pub outside_hypotheses: Option<&'static str>,
    pub prediction: &'static str,
    pub components: Vec<ComponentJson>,
    pub verdict: &'static str,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            n: r.params.n,
            s: r.params.s,
            t: r.params.t,
            case: r.case.tag.name(),
            witness: r.case.witness,
            outside_hypotheses: r.case.outside_hypotheses,
            prediction: r.prediction.name(),
            components: r.components.iter().map(ComponentJson::from_outcome).collect(),
            verdict: r.verdict.name(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReportJson {
    pub num_vertices: usize,
    pub max_degree: usize,
    pub fold_core: Vec<usize>,
    pub prediction: Option<&'static str>,
    pub excluded: Option<&'static str>,
    pub components: Vec<ComponentJson>,
    pub verdict: &'static str,
}

impl From<&GraphReport> for GraphReportJson {
    fn from(r: &GraphReport) -> Self {
        let judged = r.prediction.is_some();
        Self {
            num_vertices: r.num_vertices,
            max_degree: r.max_degree,
            fold_core: r.fold_core.clone(),
            prediction: r.prediction.map(|p| p.name()),
            excluded: r.excluded,
            components: r
                .components
                .iter()
                .zip(&r.component_verdicts)
                .map(|(c, (v, why))| ComponentJson::new(c, judged.then_some(*v), why.as_ref()))
                .collect(),
            verdict: r.verdict.name(),
        }
    }
}

fn list<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

const CSV_HEADER: [&str; 16] = [
    "n",
    "s",
    "t",
    "case",
    "prediction",
    "component",
    "f_vector",
    "betti_z",
    "torsion",
    "betti_z2",
    "euler",
    "surface",
    "core_dim",
    "core_f_vector",
    "verdict",
    "reason",
];

/// One row per component; list-valued fields are JSON arrays.
pub fn reports_to_csv(reports: &[ReportJson]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        for (i, c) in r.components.iter().enumerate() {
            w.write_record([
                r.n.to_string(),
                r.s.to_string(),
                r.t.to_string(),
                r.case.to_string(),
                r.prediction.to_string(),
                i.to_string(),
                list(&c.f_vector),
                list(&c.betti_z),
                list(&c.torsion),
                list(&c.betti_z2),
                c.euler.to_string(),
                c.surface.clone(),
                c.core_dim.map_or(String::new(), |d| d.to_string()),
                list(&c.core_f_vector),
                c.verdict.to_string(),
                c.reason.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv of utf-8 fields")
}

/// CSV for an arbitrary-graph report, one row per component.
pub fn graph_report_to_csv(r: &GraphReportJson) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = ["component", "f_vector", "betti_z", "torsion", "betti_z2", "euler", "surface", "core_dim", "core_f_vector", "verdict"];
    w.write_record(header).expect("in-memory write");
    for (i, c) in r.components.iter().enumerate() {
        w.write_record([
            i.to_string(),
            list(&c.f_vector),
            list(&c.betti_z),
            list(&c.torsion),
            list(&c.betti_z2),
            c.euler.to_string(),
            c.surface.clone(),
            c.core_dim.map_or(String::new(), |d| d.to_string()),
            list(&c.core_f_vector),
            c.verdict.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv of utf-8 fields")
}

fn component_text(out: &mut String, i: usize, c: &ComponentJson) {
    let _ = writeln!(
        out,
        "  component {i}: f={:?} betti={:?} torsion={:?} core_dim={} core_f={:?} surface={} -> {}{}",
        c.f_vector,
        c.betti_z,
        c.torsion,
        c.core_dim.map_or("-".into(), |d| d.to_string()),
        c.core_f_vector,
        c.surface,
        c.verdict,
        c.reason.as_ref().map_or(String::new(), |r| format!(" ({r})")),
    );
}

pub fn report_text(r: &ReportJson) -> String {
    let mut out = format!(
        "C_{}({},{}) case {} [{}] predicts {}: {}\n",
        r.n, r.s, r.t, r.case, r.witness, r.prediction, r.verdict
    );
    if let Some(why) = r.outside_hypotheses {
        let _ = writeln!(out, "  outside hypotheses: {why}");
    }
    for (i, c) in r.components.iter().enumerate() {
        component_text(&mut out, i, c);
    }
    out
}

pub fn graph_report_text(r: &GraphReportJson) -> String {
    let mut out = format!(
        "graph on {} vertices, max degree {}, fold core {} vertices\n",
        r.num_vertices,
        r.max_degree,
        r.fold_core.len()
    );
    match (r.prediction, r.excluded) {
        (Some(p), _) => {
            let _ = writeln!(out, "  prediction {p}: {}", r.verdict);
        }
        (None, Some(why)) => {
            let _ = writeln!(out, "  no prediction: {why}");
        }
        (None, None) => {}
    }
    for (i, c) in r.components.iter().enumerate() {
        component_text(&mut out, i, c);
    }
    out
}

/// Counts of `(pass, fail, notable)` verdicts.
pub fn tally(reports: &[ReportJson]) -> (usize, usize, usize) {
    let count = |v: &str| reports.iter().filter(|r| r.verdict == v).count();
    (count("pass"), count("fail"), count("notable"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use neighborly_core::verify;

    #[test]
    fn report_json_field_order() {
        let r = verify(10, 1, 3).unwrap();
        let json = serde_json::to_string(&ReportJson::from(&r)).unwrap();
        assert!(json.starts_with(r#"{"n":10,"s":1,"t":3,"case":"I2A""#));
        assert!(json.contains(r#""betti_z":[1,0,0,1]"#));
        assert!(json.ends_with(r#""verdict":"pass"}"#));
    }

    #[test]
    fn csv_has_one_row_per_component() {
        let r = ReportJson::from(&verify(10, 1, 3).unwrap());
        let text = reports_to_csv(&[r]);
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
        assert_eq!(rows.len(), 2);
        assert_eq!(&rows[1][7], "[1,0,0,1]");
        assert_eq!(&rows[0][14], "pass");
    }

    #[test]
    fn complex_json_is_canonical() {
        let k = SimplicialComplex::from_maximal([
            neighborly_core::Simplex::from([2, 1]),
            neighborly_core::Simplex::from([0, 1]),
        ]);
        let json = serde_json::to_string(&ComplexJson::from(&k)).unwrap();
        assert_eq!(json, r#"{"vertices":[0,1,2],"maximal_simplices":[[0,1],[1,2]]}"#);
    }
}
