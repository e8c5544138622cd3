//! Per-component topology of a neighborhood complex and the decision of
//! whether it matches an expected homotopy type.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::collapse::{collapse_core_seeded, CollapsePair};
use crate::complex::{neighborhood_complex, SimplicialComplex};
use crate::graph::Graph;
use crate::homology::{homology, uct_check, HomologyError, HomologyProfile};
use crate::shelling::{find_shelling, verify_shelling, ShellingReport, ShellingSearch, DEFAULT_SEARCH_LIMIT};
use crate::simplex::Simplex;
use crate::surface::{SurfaceClass, SurfaceReport};

/// Expected homotopy type of every component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prediction {
    Point,
    WedgeOfCircles,
    Circle,
    ThreeSphere,
    WedgeOfTwoSpheres,
    /// Cyclic chain of 2-spheres, consecutive ones meeting in a point.
    Garland,
    ConnectedSumOfTori,
    Torus,
    PointOrWedgeOfCircles,
    PointOrCircle,
    CircleOrThreeSphere,
}

impl Prediction {
    /// The single shapes this prediction allows.
    pub fn alternatives(self) -> &'static [Prediction] {
        use Prediction::*;
        match self {
            PointOrWedgeOfCircles => &[Point, WedgeOfCircles],
            PointOrCircle => &[Point, Circle],
            CircleOrThreeSphere => &[Circle, ThreeSphere],
            Point => &[Point],
            WedgeOfCircles => &[WedgeOfCircles],
            Circle => &[Circle],
            ThreeSphere => &[ThreeSphere],
            WedgeOfTwoSpheres => &[WedgeOfTwoSpheres],
            Garland => &[Garland],
            ConnectedSumOfTori => &[ConnectedSumOfTori],
            Torus => &[Torus],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Prediction::Point => "point",
            Prediction::WedgeOfCircles => "wedge-circles",
            Prediction::Circle => "S1",
            Prediction::ThreeSphere => "S3",
            Prediction::WedgeOfTwoSpheres => "S2vS2",
            Prediction::Garland => "garland-S2",
            Prediction::ConnectedSumOfTori => "connected-sum-tori",
            Prediction::Torus => "torus",
            Prediction::PointOrWedgeOfCircles => "point-or-wedge-circles",
            Prediction::PointOrCircle => "point-or-S1",
            Prediction::CircleOrThreeSphere => "S1-or-S3",
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ordered so that the worst verdict is the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Notable,
    Fail,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Notable => "notable",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Computed data for one connected component of `N(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub f_vector: Vec<usize>,
    /// Homology of the component itself.
    pub homology: HomologyProfile,
    pub core: SimplicialComplex,
    pub core_f_vector: Vec<usize>,
    pub core_dim: Option<usize>,
    /// Homology of the core equals that of the component.
    pub core_homology_agrees: bool,
    pub collapsed_to_point: bool,
    /// Surface report of the core.
    pub surface: SurfaceReport,
    pub shelling: Option<ShellingReport>,
    /// Four-vertex sets all of whose triangles are maximal in the core.
    pub tetrahedron_boundaries: usize,
    pub uct_consistent: bool,
}

impl ComponentReport {
    /// Collapses `component` (trying `seeds` first), then computes homology,
    /// surface data and, where cheap, a shelling of the core. Candidate
    /// shelling orders in `orders` are used when one of them lists exactly
    /// the maximal simplices of the core.
    pub fn compute(
        component: &SimplicialComplex,
        seeds: &[CollapsePair],
        orders: &[Vec<Simplex>],
        want_shelling: bool,
    ) -> Result<Self, HomologyError> {
        let h = homology(component)?;
        let core = collapse_core_seeded(component, seeds).core;
        let core_h = homology(&core)?;
        let core_dim = core.dimension();
        let shelling = if let Some(order) = orders.iter().find(|o| same_set(o, core.maximal_simplices())) {
            verify_shelling(&core, order).ok()
        } else if want_shelling || core_dim == Some(1) {
            search_shelling(&core)
        } else {
            None
        };
        Ok(Self {
            vertices: component.vertices().to_vec(),
            f_vector: component.f_vector(),
            uct_consistent: uct_check(&h) && uct_check(&core_h),
            core_homology_agrees: h.same_as(&core_h),
            homology: h,
            core_f_vector: core.f_vector(),
            core_dim,
            collapsed_to_point: core.maximal_simplices().len() == 1 && core_dim == Some(0),
            surface: SurfaceReport::of_connected(&core),
            shelling,
            tetrahedron_boundaries: count_tetrahedron_boundaries(&core),
            core,
        })
    }

    /// Verdict against `prediction`, with a short reason when not a pass.
    pub fn judge(&self, prediction: Prediction) -> (Verdict, Option<String>) {
        if let Some(reason) = self.consistency_issue() {
            return (Verdict::Fail, Some(reason));
        }
        let mut outcomes = prediction.alternatives().iter().map(|&shape| self.judge_shape(shape));
        let first = outcomes.next().expect("at least one alternative");
        outcomes.fold(first, |best, o| if o.0 < best.0 { o } else { best })
    }

    /// Torsion, disagreement between independent computations, or a
    /// shelling that contradicts homology.
    pub fn consistency_issue(&self) -> Option<String> {
        if !self.homology.is_torsion_free() {
            return Some(format!("torsion {:?}", self.homology.torsion));
        }
        if !self.uct_consistent {
            return Some("Z and Z2 homology disagree".into());
        }
        if !self.core_homology_agrees {
            return Some("collapse changed homology".into());
        }
        if let Some(sh) = self.shelling.as_ref().filter(|r| r.valid) {
            let d = sh.order.first().map_or(0, Simplex::dim);
            if sh.spanning.len() != self.homology.betti(d) - usize::from(d == 0) {
                return Some("shelling disagrees with homology".into());
            }
        }
        None
    }

    fn judge_shape(&self, shape: Prediction) -> (Verdict, Option<String>) {
        let betti = self.homology.betti_trimmed();
        let low_dim = self.core_dim.is_some_and(|d| d <= 1);
        let mismatch = || (Verdict::Fail, Some(format!("{shape}: betti {betti:?}")));
        match shape {
            Prediction::Point => {
                if self.collapsed_to_point {
                    (Verdict::Pass, None)
                } else if betti == [1] {
                    (Verdict::Notable, Some("acyclic but did not collapse to a vertex".into()))
                } else {
                    mismatch()
                }
            }
            Prediction::WedgeOfCircles | Prediction::Circle => {
                let ok = match shape {
                    Prediction::Circle => betti == [1, 1],
                    _ => betti.len() == 2 && betti[0] == 1,
                };
                match (ok, low_dim) {
                    (true, true) => (Verdict::Pass, None),
                    (true, false) => (Verdict::Notable, Some(format!("{shape}: core has dimension {:?}", self.core_dim))),
                    _ => mismatch(),
                }
            }
            Prediction::ThreeSphere => {
                if betti == [1, 0, 0, 1] {
                    (Verdict::Pass, None)
                } else {
                    mismatch()
                }
            }
            Prediction::WedgeOfTwoSpheres => match (betti == [1, 0, 2], &self.shelling) {
                (false, _) => mismatch(),
                (true, Some(r)) if !r.valid => (Verdict::Notable, Some("shelling order rejected".into())),
                (true, _) => (Verdict::Pass, None),
            },
            Prediction::Garland => {
                if betti.len() != 3 || betti[..2] != [1, 1] {
                    return mismatch();
                }
                if betti[2] == self.tetrahedron_boundaries {
                    (Verdict::Pass, None)
                } else {
                    let reason = format!("{} spheres but {} tetrahedron boundaries", betti[2], self.tetrahedron_boundaries);
                    (Verdict::Notable, Some(reason))
                }
            }
            Prediction::ConnectedSumOfTori | Prediction::Torus => match self.surface.classification {
                SurfaceClass::OrientableGenus(1) => (Verdict::Pass, None),
                SurfaceClass::OrientableGenus(g) if shape == Prediction::ConnectedSumOfTori => {
                    (Verdict::Notable, Some(format!("genus {g}")))
                }
                c => (Verdict::Fail, Some(format!("{shape}: surface {c:?}"))),
            },
            _ => unreachable!("compound predictions are expanded by alternatives()"),
        }
    }
}

fn same_set(order: &[Simplex], maximal: &[Simplex]) -> bool {
    order.len() == maximal.len() && order.iter().collect::<BTreeSet<_>>() == maximal.iter().collect::<BTreeSet<_>>()
}

fn search_shelling(core: &SimplicialComplex) -> Option<ShellingReport> {
    match find_shelling(core, DEFAULT_SEARCH_LIMIT).ok()? {
        ShellingSearch::Found(order) => verify_shelling(core, &order).ok(),
        ShellingSearch::NotShellable => None,
    }
}

/// Number of 4-vertex sets whose four triangles are all maximal simplices.
pub fn count_tetrahedron_boundaries(k: &SimplicialComplex) -> usize {
    let triangles: BTreeSet<&Simplex> = k.maximal_simplices().iter().filter(|m| m.len() == 3).collect();
    let mut found = BTreeSet::new();
    for a in &triangles {
        for b in &triangles {
            let union = Simplex::new(a.vertices().iter().chain(b.vertices()).copied());
            if a < b && union.len() == 4 && union.facets().all(|f| triangles.contains(&f)) {
                found.insert(union);
            }
        }
    }
    found.len()
}

/// Worst component verdict, or `Fail` when the components disagree in
/// homology.
pub fn overall_verdict(components: &[(ComponentReport, Verdict)]) -> Verdict {
    let agree = components.windows(2).all(|w| w[0].0.homology.same_as(&w[1].0.homology));
    if !agree {
        return Verdict::Fail;
    }
    components.iter().map(|(_, v)| *v).max().unwrap_or(Verdict::Pass)
}

/// Report for an arbitrary graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub num_vertices: usize,
    pub max_degree: usize,
    /// Vertices of the input kept by fold reduction.
    pub fold_core: Vec<usize>,
    /// Set when the max-degree-3 statement applies.
    pub prediction: Option<Prediction>,
    /// Why no prediction was made, if none.
    pub excluded: Option<&'static str>,
    pub components: Vec<ComponentReport>,
    pub component_verdicts: Vec<(Verdict, Option<String>)>,
    pub verdict: Verdict,
}

/// Analyses `N(g)`. Connected graphs of maximum degree at most 3 whose fold
/// core is not `K_4` or `T` are predicted to give points or wedges of
/// circles.
pub fn analyze_graph(g: &Graph) -> Result<GraphReport, HomologyError> {
    let (folded, fold_core) = g.fold_reduce_with_labels();
    let excluded = if g.max_degree() > 3 {
        Some("maximum degree exceeds 3")
    } else if !g.is_connected() {
        Some("graph is disconnected")
    } else if is_excluded_cubic(&folded) {
        Some("fold core is K4 or T")
    } else {
        None
    };
    let prediction = excluded.is_none().then_some(Prediction::PointOrWedgeOfCircles);
    let n = neighborhood_complex(g);
    let mut components = Vec::new();
    let mut verdicts = Vec::new();
    for c in n.components() {
        let r = ComponentReport::compute(&c, &[], &[], false)?;
        let v = match prediction {
            Some(p) => r.judge(p),
            None => (Verdict::Pass, None),
        };
        verdicts.push(v);
        components.push(r);
    }
    let worst = verdicts.iter().map(|v| v.0).max().unwrap_or(Verdict::Pass);
    let fails_inconsistency = components.iter().any(|c| c.consistency_issue().is_some_and(|r| !r.starts_with("torsion")));
    let verdict = if fails_inconsistency { Verdict::Fail } else { worst };
    Ok(GraphReport {
        num_vertices: g.num_vertices(),
        max_degree: g.max_degree(),
        fold_core,
        prediction,
        excluded,
        components,
        component_verdicts: verdicts,
        verdict,
    })
}

fn is_excluded_cubic(g: &Graph) -> bool {
    [Graph::complete(4), Graph::excluded_cubic_t()]
        .iter()
        .any(|h| g.num_vertices() == h.num_vertices() && g.is_isomorphic_small(h).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary;
    use crate::fixtures;

    fn report(k: &SimplicialComplex) -> ComponentReport {
        ComponentReport::compute(k, &[], &[], false).unwrap()
    }

    #[test]
    fn solid_simplex_is_a_point() {
        let r = report(&SimplicialComplex::simplex(Simplex::from([0, 1, 2, 3])));
        assert!(r.collapsed_to_point);
        assert_eq!(r.judge(Prediction::Point).0, Verdict::Pass);
        assert_eq!(r.judge(Prediction::PointOrCircle).0, Verdict::Pass);
        assert_eq!(r.judge(Prediction::ThreeSphere).0, Verdict::Fail);
    }

    #[test]
    fn three_sphere_and_circle() {
        let s3 = report(&boundary(&Simplex::from([0, 1, 2, 3, 4])).unwrap());
        assert_eq!(s3.judge(Prediction::CircleOrThreeSphere).0, Verdict::Pass);
        assert_eq!(s3.judge(Prediction::Circle).0, Verdict::Fail);
        let s1 = report(&boundary(&Simplex::from([0, 1, 2])).unwrap());
        assert_eq!(s1.core_dim, Some(1));
        assert_eq!(s1.shelling.as_ref().unwrap().spanning.len(), 1);
        assert_eq!(s1.judge(Prediction::CircleOrThreeSphere).0, Verdict::Pass);
        assert_eq!(s1.judge(Prediction::WedgeOfCircles).0, Verdict::Pass);
    }

    #[test]
    fn torsion_always_fails() {
        let r = report(&fixtures::projective_plane());
        let (v, why) = r.judge(Prediction::PointOrWedgeOfCircles);
        assert_eq!(v, Verdict::Fail);
        assert!(why.unwrap().starts_with("torsion"));
    }

    #[test]
    fn torus_fixture() {
        let r = report(&fixtures::seven_vertex_torus());
        assert_eq!(r.homology.betti_z, vec![1, 2, 1]);
        assert_eq!(r.surface.classification, SurfaceClass::OrientableGenus(1));
        assert_eq!(r.judge(Prediction::Torus).0, Verdict::Pass);
        assert_eq!(r.judge(Prediction::ConnectedSumOfTori).0, Verdict::Pass);
    }

    #[test]
    fn pinched_spheres_count_two_tetrahedra() {
        let k = fixtures::pinched_spheres();
        assert_eq!(count_tetrahedron_boundaries(&k), 2);
        let r = report(&k);
        // a wedge of two spheres, not a garland: no 1-cycle
        assert_eq!(r.judge(Prediction::Garland).0, Verdict::Fail);
        assert_eq!(r.judge(Prediction::WedgeOfTwoSpheres).0, Verdict::Pass);
    }

    #[test]
    fn prediction_names() {
        assert_eq!(Prediction::WedgeOfTwoSpheres.to_string(), "S2vS2");
        assert_eq!(Prediction::PointOrCircle.alternatives(), &[Prediction::Point, Prediction::Circle]);
        assert!(Verdict::Fail > Verdict::Notable && Verdict::Notable > Verdict::Pass);
    }

    #[test]
    fn small_graphs() {
        let k4 = analyze_graph(&Graph::complete(4)).unwrap();
        assert_eq!(k4.excluded, Some("fold core is K4 or T"));
        assert_eq!(k4.components.len(), 1);
        assert_eq!(k4.components[0].homology.betti_z, vec![1, 0, 1]);
        let cube = analyze_graph(&Graph::cube()).unwrap();
        assert!(cube.prediction.is_none());
        let c6 = analyze_graph(&Graph::cycle(6)).unwrap();
        assert_eq!(c6.prediction, Some(Prediction::PointOrWedgeOfCircles));
        assert_eq!(c6.components.len(), 2);
        assert_eq!(c6.verdict, Verdict::Pass);
        let k5 = analyze_graph(&Graph::complete(5)).unwrap();
        assert_eq!(k5.excluded, Some("maximum degree exceeds 3"));
    }
}
