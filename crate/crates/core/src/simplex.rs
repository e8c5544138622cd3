use alloc::vec::Vec;
use core::fmt;

use crate::graph::{is_sorted_subset, Vertex};

/// A simplex, stored as a strictly increasing vertex list.
///
/// The derived ordering is lexicographic on that list, so `[0] < [0, 1] < [1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Sorts and deduplicates the given vertices.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len() - 1`. Panics on the empty simplex.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    /// The face obtained by deleting vertex `v` (a no-op if absent).
    pub fn without(&self, v: Vertex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Codimension-one faces; the `i`-th deletes the `i`-th vertex and
    /// carries boundary sign `(-1)^i`.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// All faces with `d + 1` vertices, in lexicographic order.
    pub fn faces_of_dim(&self, d: usize) -> Vec<Simplex> {
        let k = d + 1;
        let n = self.0.len();
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            // advance to the next k-combination
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl From<Vec<Vertex>> for Simplex {
    fn from(v: Vec<Vertex>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for Simplex {
    fn from(v: [Vertex; N]) -> Self {
        Simplex::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn normalizes_input() {
        let s = Simplex::new([3, 1, 2, 1]);
        assert_eq!(s.vertices(), &[1, 2, 3]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn lexicographic_order() {
        let a = Simplex::from([0]);
        let b = Simplex::from([0, 1]);
        let c = Simplex::from([1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn faces_enumerated_in_order() {
        let s = Simplex::from([0, 1, 2, 3]);
        let edges = s.faces_of_dim(1);
        assert_eq!(edges.len(), 6);
        assert_eq!(edges[0], Simplex::from([0, 1]));
        assert_eq!(edges[5], Simplex::from([2, 3]));
        assert!(edges.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.faces_of_dim(3), vec![s.clone()]);
        assert!(s.faces_of_dim(4).is_empty());
    }

    #[test]
    fn facets_delete_in_position_order() {
        let s = Simplex::from([4, 7, 9]);
        let f: Vec<_> = s.facets().collect();
        assert_eq!(f, vec![Simplex::from([7, 9]), Simplex::from([4, 9]), Simplex::from([4, 7])]);
    }

    #[test]
    fn subset_and_intersection() {
        let s = Simplex::from([1, 3, 5]);
        assert!(Simplex::from([1, 5]).is_face_of(&s));
        assert!(!Simplex::from([1, 4]).is_face_of(&s));
        assert_eq!(s.intersection(&Simplex::from([3, 4, 5])), Simplex::from([3, 5]));
    }
}
