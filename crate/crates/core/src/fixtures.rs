//! Small named complexes used as test fixtures and CLI examples.

use crate::complex::{boundary, SimplicialComplex};
use crate::simplex::Simplex;

/// The six-vertex triangulation of the real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    const TRIANGLES: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [1, 3, 5],
        [2, 4, 5],
    ];
    SimplicialComplex::from_maximal(TRIANGLES.iter().map(|t| Simplex::from(*t)))
}

/// Two tetrahedron boundaries sharing the single vertex 0.
pub fn pinched_spheres() -> SimplicialComplex {
    let a = boundary(&Simplex::from([0, 1, 2, 3])).expect("dimension 3");
    let b = boundary(&Simplex::from([0, 4, 5, 6])).expect("dimension 3");
    SimplicialComplex::from_maximal(a.maximal_simplices().iter().chain(b.maximal_simplices()).cloned())
}

/// The seven-vertex torus.
pub fn seven_vertex_torus() -> SimplicialComplex {
    SimplicialComplex::from_maximal((0..7).flat_map(|i| {
        [
            Simplex::new([i, (i + 1) % 7, (i + 3) % 7]),
            Simplex::new([i, (i + 2) % 7, (i + 3) % 7]),
        ]
    }))
}
