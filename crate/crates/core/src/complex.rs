//! Simplicial complexes stored by their maximal simplices.
//!
//! Lower-dimensional faces are never stored; [`SimplicialComplex::faces`]
//! enumerates them on demand.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{DisjointSets, Graph, Vertex};
use crate::simplex::Simplex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("a 0-simplex has an empty boundary")]
    EmptyBoundary,
}

/// A finite abstract simplicial complex, given by its inclusion-maximal
/// simplices (kept sorted, pairwise non-nested).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    maximal: Vec<Simplex>,
    vertices: Vec<Vertex>,
}

impl SimplicialComplex {
    /// Complex generated by `simplices`; non-maximal and duplicate
    /// generators are dropped, as are empty ones.
    pub fn from_maximal(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut all: Vec<Simplex> = simplices.into_iter().filter(|s| !s.is_empty()).collect();
        all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Simplex> = Vec::with_capacity(all.len());
        for s in all {
            if !kept.iter().any(|k| s.is_face_of(k)) {
                kept.push(s);
            }
        }
        kept.sort_unstable();
        let vertices: BTreeSet<Vertex> = kept.iter().flat_map(|s| s.vertices().iter().copied()).collect();
        Self {
            maximal: kept,
            vertices: vertices.into_iter().collect(),
        }
    }

    /// The full simplex on `s` (all of its faces).
    pub fn simplex(s: Simplex) -> Self {
        Self::from_maximal([s])
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.maximal.is_empty()
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.maximal.iter().map(Simplex::dim).max()
    }

    /// `Some(d)` when every maximal simplex has dimension `d`.
    pub fn pure_dimension(&self) -> Option<usize> {
        let d = self.dimension()?;
        self.maximal.iter().all(|s| s.dim() == d).then_some(d)
    }

    pub fn is_pure(&self) -> bool {
        self.pure_dimension().is_some()
    }

    /// Whether `s` is a face of some maximal simplex.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.maximal.iter().any(|m| s.is_face_of(m))
    }

    pub fn is_maximal(&self, s: &Simplex) -> bool {
        self.maximal.binary_search(s).is_ok()
    }

    /// Maximal simplices having `s` as a face.
    pub fn cofaces_of<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.maximal.iter().filter(move |m| s.is_face_of(m))
    }

    /// All distinct faces of dimension `d`, sorted.
    pub fn faces(&self, d: usize) -> Vec<Simplex> {
        let set: BTreeSet<Simplex> = self
            .maximal
            .iter()
            .filter(|m| m.len() > d)
            .flat_map(|m| m.faces_of_dim(d))
            .collect();
        set.into_iter().collect()
    }

    /// `(f_0, f_1, ..., f_dim)`; empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dimension() {
            None => Vec::new(),
            Some(dim) => (0..=dim).map(|d| self.faces(d).len()).collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<SimplicialComplex> {
        if self.maximal.is_empty() {
            return Vec::new();
        }
        let position: BTreeMap<Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut dsu = DisjointSets::new(self.vertices.len());
        for m in &self.maximal {
            let first = position[&m.vertices()[0]];
            for v in &m.vertices()[1..] {
                dsu.union(first, position[v]);
            }
        }
        let mut roots: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
        for m in &self.maximal {
            let r = dsu.find(position[&m.vertices()[0]]);
            roots.entry(r).or_default().push(m.clone());
        }
        // every root is the smallest vertex index of its group
        roots.into_values().map(Self::from_maximal).collect()
    }

    /// Maximal simplices whose vertices all lie in `keep`, taken as a new complex
    /// after restricting every maximal simplex to `keep`.
    pub fn induced_on(&self, keep: &BTreeSet<Vertex>) -> SimplicialComplex {
        Self::from_maximal(
            self.maximal
                .iter()
                .map(|m| Simplex::new(m.vertices().iter().copied().filter(|v| keep.contains(v)))),
        )
    }

    /// Checks the antichain invariant directly (pairwise non-inclusion).
    pub fn is_antichain(&self) -> bool {
        self.maximal.iter().enumerate().all(|(i, a)| {
            self.maximal
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_face_of(b))
        })
    }
}

/// `N(G)`: maximal simplices are the inclusion-maximal non-empty neighborhoods.
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_maximal(
        (0..g.num_vertices()).map(|v| Simplex::from_sorted(g.neighbors(v).to_vec())),
    )
}

/// `Bd(s)`: every proper face of `s`.
pub fn boundary(s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
    if s.len() < 2 {
        return Err(ComplexError::EmptyBoundary);
    }
    Ok(SimplicialComplex::from_maximal(s.facets()))
}
