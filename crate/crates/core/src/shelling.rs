//! Shelling orders of pure complexes.
//!
//! An order `Γ_1, ..., Γ_t` of the maximal simplices of a pure
//! `d`-dimensional complex is a shelling when every `Γ_j ∩ (Γ_1 ∪ ... ∪ Γ_{j-1})`
//! (for `j >= 2`) is pure of dimension `d - 1`. `Γ_j` is spanning when its
//! whole boundary already lies in the earlier simplices; a shellable complex
//! is then a wedge of one `d`-sphere per spanning simplex.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::simplex::Simplex;

/// Default cap on the number of maximal simplices [`find_shelling`] accepts.
pub const DEFAULT_SEARCH_LIMIT: usize = 64;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ShellingError {
    #[error("complex is not pure")]
    NotPure,
    #[error("order is not a permutation of the maximal simplices")]
    NotAPermutation,
    #[error("search limited to {limit} maximal simplices, complex has {actual}")]
    LimitExceeded { limit: usize, actual: usize },
}

/// Homotopy type read off a shelling: a wedge of spheres of the listed
/// dimensions, contractible when the list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeOfSpheres {
    pub sphere_dims: Vec<usize>,
}

impl WedgeOfSpheres {
    pub fn is_contractible(&self) -> bool {
        self.sphere_dims.is_empty()
    }

    /// Betti numbers of the wedge (unreduced), trailing zeros trimmed.
    pub fn betti(&self) -> Vec<usize> {
        let top = self.sphere_dims.iter().copied().max().unwrap_or(0);
        let mut b = vec![0; top + 1];
        b[0] = 1;
        for &d in &self.sphere_dims {
            b[d] += 1;
        }
        while b.len() > 1 && b[b.len() - 1] == 0 {
            b.pop();
        }
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingReport {
    pub order: Vec<Simplex>,
    pub valid: bool,
    /// Spanning simplices, in order. Only meaningful when `valid`.
    pub spanning: Vec<Simplex>,
    /// Set when `valid`.
    pub homotopy: Option<WedgeOfSpheres>,
    /// First position (0-based) at which the intersection condition fails.
    pub first_failure: Option<usize>,
}

/// Checks `order` against the shelling condition, computing each prefix
/// intersection explicitly.
pub fn verify_shelling(k: &SimplicialComplex, order: &[Simplex]) -> Result<ShellingReport, ShellingError> {
    let d = k.pure_dimension().ok_or(ShellingError::NotPure)?;
    let sorted: BTreeSet<&Simplex> = order.iter().collect();
    if sorted.len() != order.len() || order.len() != k.maximal_simplices().len() || !order.iter().all(|s| k.is_maximal(s)) {
        return Err(ShellingError::NotAPermutation);
    }
    let mut spanning = Vec::new();
    let mut first_failure = None;
    for j in 1..order.len() {
        let current = &order[j];
        let pieces: Vec<Simplex> = order[..j].iter().map(|g| g.intersection(current)).collect();
        // maximal members of the intersection complex
        let maximal: Vec<&Simplex> = pieces
            .iter()
            .filter(|p| !pieces.iter().any(|q| q.len() > p.len() && p.is_face_of(q)))
            .collect();
        if maximal.iter().any(|p| p.len() != d) {
            first_failure = Some(j);
            break;
        }
        if current.facets().all(|f| pieces.iter().any(|p| f.is_face_of(p))) {
            spanning.push(current.clone());
        }
    }
    let valid = first_failure.is_none();
    Ok(ShellingReport {
        order: order.to_vec(),
        valid,
        homotopy: valid.then(|| WedgeOfSpheres {
            sphere_dims: vec![d; spanning.len()],
        }),
        spanning: if valid { spanning } else { Vec::new() },
        first_failure,
    })
}

/// Outcome of [`find_shelling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(Vec<Simplex>),
    /// The exhaustive search found no shelling.
    NotShellable,
}

/// Backtracking search for a shelling order, trying maximal simplices in
/// lexicographic order. Complexes with more than `limit` maximal simplices
/// are refused rather than searched.
pub fn find_shelling(k: &SimplicialComplex, limit: usize) -> Result<ShellingSearch, ShellingError> {
    let d = k.pure_dimension().ok_or(ShellingError::NotPure)?;
    let facets = k.maximal_simplices();
    if facets.len() > limit {
        return Err(ShellingError::LimitExceeded {
            limit,
            actual: facets.len(),
        });
    }
    let mut search = Search {
        facets,
        d,
        used: vec![false; facets.len()],
        order: Vec::with_capacity(facets.len()),
        ridges: BTreeSet::new(),
    };
    Ok(if search.extend() {
        ShellingSearch::Found(search.order.iter().map(|&i| facets[i].clone()).collect())
    } else {
        ShellingSearch::NotShellable
    })
}

struct Search<'a> {
    facets: &'a [Simplex],
    d: usize,
    used: Vec<bool>,
    order: Vec<usize>,
    /// `(d-1)`-faces covered by the current prefix.
    ridges: BTreeSet<Simplex>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        if self.order.len() == self.facets.len() {
            return true;
        }
        for i in 0..self.facets.len() {
            if self.used[i] || !self.fits(i) {
                continue;
            }
            let added: Vec<Simplex> = self.facets[i]
                .facets()
                .filter(|r| !self.ridges.contains(r))
                .collect();
            self.used[i] = true;
            self.order.push(i);
            self.ridges.extend(added.iter().cloned());
            if self.extend() {
                return true;
            }
            for r in &added {
                self.ridges.remove(r);
            }
            self.order.pop();
            self.used[i] = false;
        }
        false
    }

    /// Prefix intersection is pure `(d-1)`: each earlier intersection lies in
    /// a ridge of the candidate already covered by the prefix, and at least
    /// one such ridge exists.
    fn fits(&self, i: usize) -> bool {
        if self.order.is_empty() {
            return true;
        }
        let cand = &self.facets[i];
        if self.d == 0 {
            return true;
        }
        let covered: Vec<Simplex> = cand.facets().filter(|r| self.ridges.contains(r)).collect();
        !covered.is_empty()
            && self.order.iter().all(|&j| {
                let meet = self.facets[j].intersection(cand);
                covered.iter().any(|r| meet.is_face_of(r))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary;

    fn cx(simplices: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(simplices.iter().map(|s| Simplex::new(s.iter().copied())))
    }

    #[test]
    fn hollow_triangle_has_one_spanning_edge() {
        let k = boundary(&Simplex::from([0, 1, 2])).unwrap();
        let order: Vec<Simplex> = [[1, 2], [0, 2], [0, 1]].into_iter().map(Simplex::from).collect();
        let r = verify_shelling(&k, &order).unwrap();
        assert!(r.valid);
        assert_eq!(r.spanning, vec![Simplex::from([0, 1])]);
        assert_eq!(r.homotopy.unwrap().betti(), vec![1, 1]);
    }

    #[test]
    fn disconnected_edges_are_not_shellable() {
        let k = cx(&[&[0, 1], &[2, 3]]);
        let order = k.maximal_simplices().to_vec();
        let r = verify_shelling(&k, &order).unwrap();
        assert!(!r.valid);
        assert_eq!(r.first_failure, Some(1));
        assert_eq!(find_shelling(&k, 64).unwrap(), ShellingSearch::NotShellable);
    }

    #[test]
    fn single_simplex_is_shellable() {
        let k = SimplicialComplex::simplex(Simplex::from([0, 1, 2]));
        let found = find_shelling(&k, 64).unwrap();
        assert_eq!(found, ShellingSearch::Found(vec![Simplex::from([0, 1, 2])]));
        let r = verify_shelling(&k, k.maximal_simplices()).unwrap();
        assert!(r.valid && r.homotopy.unwrap().is_contractible());
    }

    #[test]
    fn two_sphere_shelling() {
        let k = boundary(&Simplex::from([0, 1, 2, 3])).unwrap();
        let ShellingSearch::Found(order) = find_shelling(&k, 64).unwrap() else {
            panic!("boundary of a tetrahedron is shellable");
        };
        let r = verify_shelling(&k, &order).unwrap();
        assert!(r.valid);
        assert_eq!(r.spanning.len(), 1);
        assert_eq!(r.homotopy.unwrap().betti(), vec![1, 0, 1]);
    }

    #[test]
    fn points_shell_as_wedge_of_zero_spheres() {
        let k = cx(&[&[0], &[1], &[2]]);
        let r = verify_shelling(&k, k.maximal_simplices()).unwrap();
        assert!(r.valid);
        assert_eq!(r.spanning.len(), 2);
        assert_eq!(r.homotopy.unwrap().betti(), vec![3]);
    }

    #[test]
    fn errors() {
        let k = cx(&[&[0, 1, 2], &[2, 3]]);
        assert_eq!(verify_shelling(&k, k.maximal_simplices()), Err(ShellingError::NotPure));
        let k = cx(&[&[0, 1], &[1, 2]]);
        assert_eq!(
            verify_shelling(&k, &[Simplex::from([0, 1])]),
            Err(ShellingError::NotAPermutation)
        );
        assert_eq!(
            verify_shelling(&k, &[Simplex::from([0, 1]), Simplex::from([0, 1])]),
            Err(ShellingError::NotAPermutation)
        );
        assert_eq!(
            find_shelling(&k, 1),
            Err(ShellingError::LimitExceeded { limit: 1, actual: 2 })
        );
    }

    #[test]
    fn bad_order_of_shellable_complex_is_rejected() {
        // path 0-1-2-3: starting with the two ends fails at step 2
        let k = cx(&[&[0, 1], &[1, 2], &[2, 3]]);
        let order: Vec<Simplex> = [[0, 1], [2, 3], [1, 2]].into_iter().map(Simplex::from).collect();
        let r = verify_shelling(&k, &order).unwrap();
        assert!(!r.valid);
        assert!(r.homotopy.is_none());
    }
}
