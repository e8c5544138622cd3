//! Elementary simplicial collapses.
//!
//! A pair `(σ, τ)` is collapsible when `σ ⊊ τ`, `τ` is maximal, and `τ` is
//! the only maximal simplex containing `σ`. Collapsing removes every `γ`
//! with `σ ⊆ γ ⊆ τ`; the facets `τ \ {v}` for `v ∈ σ` survive and become
//! maximal unless another maximal simplex already covers them.

use alloc::vec::Vec;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::graph::Vertex;
use crate::simplex::Simplex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CollapseError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Simplex),
    #[error("({free_face:?}, {coface:?}) is not a collapsible pair")]
    InvalidPair { free_face: Simplex, coface: Simplex },
    #[error("schedule hypothesis violated: {congruence} ≡ 0 (mod n)")]
    HypothesisViolated { congruence: &'static str },
    #[error("schedule parameters out of range: need 1 <= s, t < n")]
    ParameterRange,
}

/// A free face together with the unique maximal simplex containing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollapsePair {
    pub free_face: Simplex,
    pub coface: Simplex,
}

impl CollapsePair {
    pub fn new(free_face: Simplex, coface: Simplex) -> Self {
        Self { free_face, coface }
    }
}

/// Pairs applied, in order, and the complex they lead to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseTrace {
    pub pairs: Vec<CollapsePair>,
    pub core: SimplicialComplex,
}

impl CollapseTrace {
    /// Re-applies the recorded pairs to `input`, validating each one.
    pub fn replay(&self, input: &SimplicialComplex) -> Result<SimplicialComplex, CollapseError> {
        self.pairs
            .iter()
            .try_fold(input.clone(), |k, pair| collapse_step(&k, pair))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollapseStrategy {
    /// Highest-dimensional coface first, then the lexicographically
    /// smallest free face of it.
    Generic,
    /// Pairs `({s+k, n-s+k}, N(k))` for `k = 0..n` first, each applied only
    /// if it verifies at that moment, then [`CollapseStrategy::Generic`].
    ///
    /// When the congruence hypotheses fail for `(s, t)` but hold for
    /// `(t, s)`, the roles are swapped.
    PaperSchedule { n: usize, s: usize, t: usize },
}

/// Whether `(sigma, tau)` is a collapsible pair of `k`.
///
/// Errors when either simplex is not a face of `k`.
pub fn verify_collapsible_pair(
    k: &SimplicialComplex,
    sigma: &Simplex,
    tau: &Simplex,
) -> Result<bool, CollapseError> {
    for s in [sigma, tau] {
        if s.is_empty() || !k.contains(s) {
            return Err(CollapseError::NotAFace(s.clone()));
        }
    }
    if sigma.len() >= tau.len() || !sigma.is_face_of(tau) || !k.is_maximal(tau) {
        return Ok(false);
    }
    Ok(k.cofaces_of(sigma).all(|m| m == tau))
}

/// One elementary collapse.
pub fn collapse_step(
    k: &SimplicialComplex,
    pair: &CollapsePair,
) -> Result<SimplicialComplex, CollapseError> {
    if !verify_collapsible_pair(k, &pair.free_face, &pair.coface)? {
        return Err(CollapseError::InvalidPair {
            free_face: pair.free_face.clone(),
            coface: pair.coface.clone(),
        });
    }
    Ok(apply_unchecked(k.maximal_simplices(), pair))
}

fn apply_unchecked(maximal: &[Simplex], pair: &CollapsePair) -> SimplicialComplex {
    let remaining = maximal.iter().filter(|m| **m != pair.coface).cloned();
    let survivors = pair
        .free_face
        .vertices()
        .iter()
        .map(|&v| pair.coface.without(v));
    SimplicialComplex::from_maximal(remaining.chain(survivors))
}

/// Collapses until no free face remains, recording every pair.
pub fn collapse_core(k: &SimplicialComplex, strategy: CollapseStrategy) -> CollapseTrace {
    let seeds = match strategy {
        CollapseStrategy::Generic => Vec::new(),
        CollapseStrategy::PaperSchedule { n, s, t } => paper_schedule_pairs(n, s, t)
            .or_else(|_| paper_schedule_pairs(n, t, s))
            .unwrap_or_default(),
    };
    collapse_core_seeded(k, &seeds)
}

/// Tries each of `seeds` once, in order, applying those that verify at that
/// moment (others are skipped silently), then finishes with the generic rule.
pub fn collapse_core_seeded(k: &SimplicialComplex, seeds: &[CollapsePair]) -> CollapseTrace {
    let mut current = k.clone();
    let mut pairs = Vec::new();
    for pair in seeds {
        if let Ok(next) = collapse_step(&current, pair) {
            current = next;
            pairs.push(pair.clone());
        }
    }
    while let Some(pair) = find_free_pair(current.maximal_simplices()) {
        current = apply_unchecked(current.maximal_simplices(), &pair);
        pairs.push(pair);
    }
    CollapseTrace {
        pairs,
        core: current,
    }
}

/// The generic choice rule: highest-dimensional coface first (ties broken
/// lexicographically), then its lexicographically smallest free face.
pub fn find_free_pair(maximal: &[Simplex]) -> Option<CollapsePair> {
    let mut order: Vec<usize> = (0..maximal.len()).collect();
    order.sort_by(|&a, &b| {
        maximal[b]
            .len()
            .cmp(&maximal[a].len())
            .then_with(|| maximal[a].cmp(&maximal[b]))
    });
    order.into_iter().find_map(|i| {
        let tau = &maximal[i];
        smallest_free_face(tau, maximal).map(|sigma| CollapsePair::new(sigma, tau.clone()))
    })
}

/// Lexicographically smallest proper face of `tau` lying in no other
/// maximal simplex.
fn smallest_free_face(tau: &Simplex, maximal: &[Simplex]) -> Option<Simplex> {
    let len = tau.len();
    if len < 2 {
        return None;
    }
    let verts = tau.vertices();
    if len > 64 {
        // Too wide for the bitmask search; fall back to codimension-one faces,
        // which are free whenever any face is.
        return (0..len)
            .rev()
            .map(|i| tau.without(verts[i]))
            .find(|f| maximal.iter().filter(|m| *m != tau).all(|m| !f.is_face_of(m)));
    }
    let mut blockers: Vec<u64> = maximal
        .iter()
        .filter(|m| *m != tau)
        .map(|m| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, v)| m.contains(**v))
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .filter(|&mask| mask != 0)
        .collect();
    blockers.sort_unstable();
    blockers.dedup();
    let full = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    let search = FreeFaceSearch {
        blockers: &blockers,
        full,
        len,
    };
    search.first_from(0, 0).map(|mask| {
        Simplex::from_sorted(
            (0..len)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| verts[i])
                .collect::<Vec<Vertex>>(),
        )
    })
}

struct FreeFaceSearch<'a> {
    blockers: &'a [u64],
    full: u64,
    len: usize,
}

impl FreeFaceSearch<'_> {
    fn is_free(&self, set: u64) -> bool {
        set != self.full && self.blockers.iter().all(|&b| set & !b != 0)
    }

    /// Pre-order walk over subsets extending `prefix` by positions `>= start`;
    /// pre-order on sorted index lists is lexicographic order.
    fn first_from(&self, prefix: u64, start: usize) -> Option<u64> {
        for i in start..self.len {
            let set = prefix | (1 << i);
            if self.is_free(set) {
                return Some(set);
            }
            if self.subtree_has_free(set, i + 1) {
                if let Some(found) = self.first_from(set, i + 1) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Freeness is upward closed among proper faces, so it suffices to test
    /// the largest proper sets of the subtree.
    fn subtree_has_free(&self, set: u64, start: usize) -> bool {
        if start >= self.len {
            return false;
        }
        let tail = self.full & !((1u64 << start) - 1);
        let top = set | tail;
        if top != self.full {
            return self.is_free(top);
        }
        (start..self.len).any(|j| self.is_free(top & !(1 << j)))
    }
}

/// Candidate pairs `({s+k, n-s+k}, N(k))`, `k = 0..n`, for `C_n(s, t)`.
///
/// Requires `2s, 2(s+t), 3s+t, 3s-t, 4s ≢ 0 (mod n)`.
pub fn paper_schedule_pairs(n: usize, s: usize, t: usize) -> Result<Vec<CollapsePair>, CollapseError> {
    if n < 2 || s == 0 || t == 0 || s >= n || t >= n {
        return Err(CollapseError::ParameterRange);
    }
    let (ni, si, ti) = (n as i64, s as i64, t as i64);
    let hypotheses: [(&'static str, i64); 5] = [
        ("2s", 2 * si),
        ("2(s+t)", 2 * (si + ti)),
        ("3s+t", 3 * si + ti),
        ("3s-t", 3 * si - ti),
        ("4s", 4 * si),
    ];
    if let Some((congruence, _)) = hypotheses.iter().find(|(_, v)| v.rem_euclid(ni) == 0) {
        return Err(CollapseError::HypothesisViolated { congruence });
    }
    Ok((0..n)
        .map(|k| {
            let free_face = Simplex::new([(k + s) % n, (k + n - s) % n]);
            let coface = Simplex::new([(k + s) % n, (k + t) % n, (k + n - s) % n, (k + n - t) % n]);
            CollapsePair::new(free_face, coface)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary, neighborhood_complex};
    use crate::graph::Graph;
    use alloc::vec;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.iter().copied())
    }

    fn solid_triangle() -> SimplicialComplex {
        SimplicialComplex::simplex(s(&[0, 1, 2]))
    }

    #[test]
    fn vertex_of_solid_triangle_is_free() {
        let k = solid_triangle();
        assert!(verify_collapsible_pair(&k, &s(&[0]), &s(&[0, 1, 2])).unwrap());
        let next = collapse_step(&k, &CollapsePair::new(s(&[0]), s(&[0, 1, 2]))).unwrap();
        assert_eq!(next.maximal_simplices(), &[s(&[1, 2])]);
    }

    #[test]
    fn free_edge_collapse_leaves_other_two_edges() {
        let next = collapse_step(&solid_triangle(), &CollapsePair::new(s(&[0, 1]), s(&[0, 1, 2]))).unwrap();
        assert_eq!(next.maximal_simplices(), &[s(&[0, 2]), s(&[1, 2])]);
    }

    #[test]
    fn verify_rejects_non_faces_and_shared_faces() {
        let k = SimplicialComplex::from_maximal([s(&[0, 1, 2]), s(&[1, 2, 3])]);
        assert!(matches!(
            verify_collapsible_pair(&k, &s(&[0, 3]), &s(&[0, 1, 2])),
            Err(CollapseError::NotAFace(_))
        ));
        assert!(!verify_collapsible_pair(&k, &s(&[1, 2]), &s(&[0, 1, 2])).unwrap());
        assert!(!verify_collapsible_pair(&k, &s(&[0, 1]), &s(&[0, 1])).unwrap());
        assert!(verify_collapsible_pair(&k, &s(&[0, 1]), &s(&[0, 1, 2])).unwrap());
        assert!(collapse_step(&k, &CollapsePair::new(s(&[1, 2]), s(&[0, 1, 2]))).is_err());
    }

    #[test]
    fn full_simplex_collapses_to_a_vertex() {
        let trace = collapse_core(&SimplicialComplex::simplex(s(&[0, 1, 2, 3])), CollapseStrategy::Generic);
        assert_eq!(trace.core.maximal_simplices(), &[s(&[3])]);
        assert_eq!(trace.pairs[0], CollapsePair::new(s(&[0]), s(&[0, 1, 2, 3])));
    }

    #[test]
    fn closed_pseudomanifold_has_no_free_face() {
        let sphere = boundary(&s(&[0, 1, 2, 3])).unwrap();
        let trace = collapse_core(&sphere, CollapseStrategy::Generic);
        assert!(trace.pairs.is_empty());
        assert_eq!(trace.core, sphere);
    }

    #[test]
    fn smallest_free_face_prefers_lexicographic_order() {
        // {0} is shared, {0,1} is free
        let maximal = vec![s(&[0, 1, 2]), s(&[0, 3])];
        assert_eq!(smallest_free_face(&maximal[0], &maximal), Some(s(&[0, 1])));
        // only {1,2} and its supersets are free
        let maximal = vec![s(&[0, 1, 2]), s(&[0, 1, 3]), s(&[0, 2, 4]), s(&[1, 2, 5])];
        assert_eq!(smallest_free_face(&maximal[0], &maximal), None);
        let maximal = vec![s(&[0, 1, 2]), s(&[0, 1, 3]), s(&[0, 2, 4]), s(&[1, 5]), s(&[2, 5])];
        assert_eq!(smallest_free_face(&maximal[0], &maximal), Some(s(&[1, 2])));
    }

    #[test]
    fn schedule_pairs_for_c15_1_4() {
        let pairs = paper_schedule_pairs(15, 1, 4).unwrap();
        assert_eq!(pairs.len(), 15);
        assert_eq!(pairs[0].free_face, s(&[1, 14]));
        assert_eq!(pairs[0].coface, s(&[1, 4, 11, 14]));
        let k = neighborhood_complex(&Graph::circulant(15, &[1, 4]).unwrap());
        for p in &pairs {
            assert!(verify_collapsible_pair(&k, &p.free_face, &p.coface).unwrap());
        }
    }

    #[test]
    fn schedule_rejects_violated_hypothesis() {
        assert_eq!(
            paper_schedule_pairs(12, 3, 5),
            Err(CollapseError::HypothesisViolated { congruence: "4s" })
        );
        assert_eq!(paper_schedule_pairs(12, 0, 5), Err(CollapseError::ParameterRange));
    }

    #[test]
    fn schedule_step_produces_tau_pair() {
        let (n, s_, t) = (15, 1, 4);
        let k = neighborhood_complex(&Graph::circulant(n, &[s_, t]).unwrap());
        let pair = &paper_schedule_pairs(n, s_, t).unwrap()[0];
        let next = collapse_step(&k, pair).unwrap();
        // τ¹ = {s, t, n-t}, τ² = {n-s, t, n-t} for k = 0
        assert!(next.is_maximal(&s(&[1, 4, 11])));
        assert!(next.is_maximal(&s(&[4, 11, 14])));
        assert!(!next.is_maximal(&s(&[1, 4, 11, 14])));
    }

    #[test]
    fn trace_replays() {
        let k = neighborhood_complex(&Graph::circulant(9, &[1, 3]).unwrap());
        let trace = collapse_core(&k, CollapseStrategy::PaperSchedule { n: 9, s: 1, t: 3 });
        assert_eq!(trace.replay(&k).unwrap(), trace.core);
        assert_eq!(trace.core.dimension(), Some(1));
    }
}
