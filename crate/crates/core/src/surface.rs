//! Closed-surface recognition for 2-dimensional complexes.
//!
//! A complex is taken to be a closed surface when it is a 2-pseudomanifold
//! whose vertex links are all single cycles. Orientability is decided by
//! propagating triangle signs across shared edges; the homology engine is
//! never consulted, so the two can be checked against each other.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::graph::Vertex;
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceClass {
    Sphere,
    OrientableGenus(u32),
    NonorientableCrosscaps(u32),
    NotASurface,
}

/// Surface data for one connected complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceReport {
    pub pure2: bool,
    pub pseudomanifold: bool,
    pub closed_surface: bool,
    /// Decided only for closed surfaces.
    pub orientable: Option<bool>,
    pub euler: i64,
    pub classification: SurfaceClass,
}

/// Pure `d`-dimensional with every `(d-1)`-face in exactly two maximal simplices.
pub fn is_pseudomanifold(k: &SimplicialComplex, d: usize) -> bool {
    if d == 0 || k.pure_dimension() != Some(d) {
        return false;
    }
    ridge_incidence(k).values().all(|c| c.len() == 2)
}

/// `(d-1)`-faces of a pure complex mapped to the indices of the maximal
/// simplices containing them.
fn ridge_incidence(k: &SimplicialComplex) -> BTreeMap<Simplex, Vec<usize>> {
    let mut map: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, m) in k.maximal_simplices().iter().enumerate() {
        for r in m.facets() {
            map.entry(r).or_default().push(i);
        }
    }
    map
}

/// Link of `v`: simplices `σ` with `v ∉ σ` and `σ ∪ {v}` a face.
pub fn vertex_link(k: &SimplicialComplex, v: Vertex) -> SimplicialComplex {
    SimplicialComplex::from_maximal(
        k.maximal_simplices()
            .iter()
            .filter(|m| m.contains(v))
            .map(|m| m.without(v)),
    )
}

/// Whether the 1-dimensional complex `link` is a single cycle.
fn is_single_cycle(link: &SimplicialComplex) -> bool {
    if link.pure_dimension() != Some(1) || link.maximal_simplices().len() < 3 {
        return false;
    }
    let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
    for e in link.maximal_simplices() {
        for &v in e.vertices() {
            *degree.entry(v).or_default() += 1;
        }
    }
    degree.values().all(|&d| d == 2) && link.components().len() == 1
}

/// A 2-pseudomanifold whose every vertex link is one cycle.
pub fn is_closed_surface(k: &SimplicialComplex) -> bool {
    is_pseudomanifold(k, 2) && k.vertices().iter().all(|&v| is_single_cycle(&vertex_link(k, v)))
}

/// Signs `±1` on the maximal simplices of a 2-pseudomanifold (aligned with
/// `k.maximal_simplices()`), such that the two triangles at each edge induce
/// opposite orientations on it. `None` when `k` is not a 2-pseudomanifold
/// or when no consistent choice exists.
///
/// Each connected piece is oriented independently, with its
/// lexicographically first triangle taken positive.
pub fn orient(k: &SimplicialComplex) -> Option<Vec<i8>> {
    if !is_pseudomanifold(k, 2) {
        return None;
    }
    let triangles = k.maximal_simplices();
    let ridges = ridge_incidence(k);
    let mut sign = vec![0i8; triangles.len()];
    for start in 0..triangles.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (pos, edge) in triangles[i].facets().enumerate() {
                let induced = sign[i] * facet_sign(pos);
                let other = ridges[&edge].iter().copied().find(|&j| j != i).expect("pseudomanifold");
                let other_pos = position_of_facet(&triangles[other], &edge);
                // need sign[other] * facet_sign(other_pos) == -induced
                let wanted = -induced * facet_sign(other_pos);
                match sign[other] {
                    0 => {
                        sign[other] = wanted;
                        queue.push_back(other);
                    }
                    s if s != wanted => return None,
                    _ => {}
                }
            }
        }
    }
    Some(sign)
}

fn facet_sign(pos: usize) -> i8 {
    if pos.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn position_of_facet(tri: &Simplex, edge: &Simplex) -> usize {
    tri.vertices()
        .iter()
        .position(|v| !edge.contains(*v))
        .expect("edge is a facet of the triangle")
}

/// Sign of the permutation sorting `vertices`, i.e. the orientation of
/// `⟨vertices⟩` relative to the sorted order.
pub fn permutation_sign(vertices: &[Vertex]) -> i8 {
    let inversions = (0..vertices.len())
        .flat_map(|i| (i + 1..vertices.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| vertices[i] > vertices[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl SurfaceReport {
    /// Report for a connected complex.
    pub fn of_connected(k: &SimplicialComplex) -> Self {
        let pure2 = k.pure_dimension() == Some(2);
        let pseudomanifold = pure2 && is_pseudomanifold(k, 2);
        let closed_surface = pseudomanifold && is_closed_surface(k);
        let euler = k.euler_characteristic();
        let orientable = closed_surface.then(|| orient(k).is_some());
        let classification = match orientable {
            Some(true) if euler == 2 => SurfaceClass::Sphere,
            Some(true) if euler < 2 && euler % 2 == 0 => SurfaceClass::OrientableGenus(((2 - euler) / 2) as u32),
            Some(false) if euler < 2 => SurfaceClass::NonorientableCrosscaps((2 - euler) as u32),
            _ => SurfaceClass::NotASurface,
        };
        Self {
            pure2,
            pseudomanifold,
            closed_surface,
            orientable,
            euler,
            classification,
        }
    }

    pub fn genus(&self) -> Option<u32> {
        match self.classification {
            SurfaceClass::Sphere => Some(0),
            SurfaceClass::OrientableGenus(g) => Some(g),
            _ => None,
        }
    }
}

/// One report per connected component, ordered by smallest vertex.
pub fn classify_surface(k: &SimplicialComplex) -> Vec<SurfaceReport> {
    k.components().iter().map(SurfaceReport::of_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary;
    use crate::homology::chain_complex;

    fn cx(simplices: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(simplices.iter().map(|s| Simplex::new(s.iter().copied())))
    }

    fn tetra_boundary() -> SimplicialComplex {
        boundary(&Simplex::from([0, 1, 2, 3])).unwrap()
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let k = tetra_boundary();
        assert!(is_pseudomanifold(&k, 2));
        assert!(is_closed_surface(&k));
        assert_eq!(vertex_link(&k, 0), boundary(&Simplex::from([1, 2, 3])).unwrap());
        assert!(orient(&k).is_some());
        assert_eq!(SurfaceReport::of_connected(&k).classification, SurfaceClass::Sphere);
    }

    #[test]
    fn solid_triangle_is_not_a_pseudomanifold() {
        let k = SimplicialComplex::simplex(Simplex::from([0, 1, 2]));
        assert!(!is_pseudomanifold(&k, 2));
        assert_eq!(orient(&k), None);
        let r = SurfaceReport::of_connected(&k);
        assert!(r.pure2 && !r.pseudomanifold);
        assert_eq!(r.classification, SurfaceClass::NotASurface);
    }

    #[test]
    fn pinched_spheres_are_not_a_surface() {
        let mut maximal: Vec<Simplex> = tetra_boundary().maximal_simplices().to_vec();
        maximal.extend(boundary(&Simplex::from([0, 4, 5, 6])).unwrap().maximal_simplices().iter().cloned());
        let k = SimplicialComplex::from_maximal(maximal);
        assert!(is_pseudomanifold(&k, 2));
        assert!(!is_closed_surface(&k));
        assert_eq!(vertex_link(&k, 0).components().len(), 2);
        let r = SurfaceReport::of_connected(&k);
        assert_eq!(r.classification, SurfaceClass::NotASurface);
        assert_eq!(r.orientable, None);
    }

    #[test]
    fn orientation_signs_give_a_cycle() {
        let k = tetra_boundary();
        let signs = orient(&k).unwrap();
        let c = chain_complex(&k);
        let d2 = c.boundary(2).unwrap();
        let mut total = vec![0i64; d2.rows];
        for (j, col) in d2.columns.iter().enumerate() {
            for &(i, e) in col {
                total[i] += i64::from(e) * i64::from(signs[j]);
            }
        }
        assert!(total.iter().all(|&x| x == 0));
    }

    #[test]
    fn projective_plane_is_nonorientable() {
        let k = cx(&[
            &[0, 1, 2],
            &[0, 2, 3],
            &[0, 3, 4],
            &[0, 4, 5],
            &[0, 1, 5],
            &[1, 2, 4],
            &[2, 3, 5],
            &[1, 3, 4],
            &[1, 3, 5],
            &[2, 4, 5],
        ]);
        assert!(is_closed_surface(&k));
        assert_eq!(orient(&k), None);
        let r = SurfaceReport::of_connected(&k);
        assert_eq!(r.classification, SurfaceClass::NonorientableCrosscaps(1));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
    }
}
