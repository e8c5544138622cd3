//! Simplicial chain complexes and their homology over `Z` and `Z_2`.
//!
//! Integer homology comes from Smith normal forms of the boundary maps.
//! Mod-2 Betti numbers are computed separately by bit-packed elimination
//! and never pass through the integer code, so [`uct_check`] compares two
//! independent computations.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::gf2::BitMatrix;
use crate::simplex::Simplex;
use crate::snf::{smith_normal_form_sparse, IntMatrix, SnfError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Snf(#[from] SnfError),
}

/// Boundary matrix stored column-wise; column `j` lists `(row, ±1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, sign) in col {
                m.set(i, j, i64::from(sign));
            }
        }
        m
    }

    pub fn to_bits(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, _) in col {
                m.flip(i, j);
            }
        }
        m
    }
}

/// Simplicial chain complex: lexicographically sorted bases per dimension
/// and `∂_d : C_d -> C_{d-1}` for `d >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bases: Vec<Vec<Simplex>>,
    boundaries: Vec<BoundaryMatrix>,
}

impl ChainComplex {
    /// Top dimension plus one (0 for the empty complex).
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn basis(&self, d: usize) -> &[Simplex] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    /// `∂_d`, for `1 <= d < len()`.
    pub fn boundary(&self, d: usize) -> Option<&BoundaryMatrix> {
        d.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }
}

/// Chain complex of `k` with the alternating sign convention: deleting the
/// `i`-th vertex of a sorted simplex contributes `(-1)^i`.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let bases: Vec<Vec<Simplex>> = match k.dimension() {
        None => Vec::new(),
        Some(dim) => (0..=dim).map(|d| k.faces(d)).collect(),
    };
    let boundaries = (1..bases.len())
        .map(|d| {
            let lower = &bases[d - 1];
            let columns = bases[d]
                .iter()
                .map(|s| {
                    s.facets()
                        .enumerate()
                        .map(|(i, f)| {
                            let row = lower.binary_search(&f).expect("faces are closed under taking facets");
                            (row, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            BoundaryMatrix {
                rows: lower.len(),
                columns,
            }
        })
        .collect();
    ChainComplex { bases, boundaries }
}

/// Betti numbers over `Z_2`, dimensions `0..len()`.
pub fn betti_z2(c: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=c.len())
        .map(|d| c.boundary(d).map_or(0, |b| b.to_bits().rank()))
        .collect();
    (0..c.len())
        .map(|d| c.rank(d) - ranks[d] - ranks[d + 1])
        .collect()
}

/// Unreduced homology summary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HomologyProfile {
    /// Free ranks of `H_d(K; Z)`.
    pub betti_z: Vec<usize>,
    /// Invariant factors `> 1` of `H_d(K; Z)`.
    pub torsion: Vec<Vec<u64>>,
    /// Dimensions of `H_d(K; Z_2)`.
    pub betti_z2: Vec<usize>,
    /// Euler characteristic from the f-vector.
    pub euler: i64,
}

impl HomologyProfile {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Betti numbers over `Z` with trailing zeros removed.
    pub fn betti_trimmed(&self) -> &[usize] {
        let end = self.betti_z.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        &self.betti_z[..end]
    }

    pub fn betti(&self, d: usize) -> usize {
        self.betti_z.get(d).copied().unwrap_or(0)
    }

    /// Equality up to trailing zero dimensions.
    pub fn same_as(&self, other: &HomologyProfile) -> bool {
        fn trim<T: PartialEq>(v: &[T], zero: &T) -> usize {
            v.iter().rposition(|x| x != zero).map_or(0, |i| i + 1)
        }
        let empty = Vec::new();
        let (ta, tb) = (trim(&self.torsion, &empty), trim(&other.torsion, &empty));
        self.betti_trimmed() == other.betti_trimmed()
            && self.torsion[..ta] == other.torsion[..tb]
            && self.betti_z2[..trim(&self.betti_z2, &0)] == other.betti_z2[..trim(&other.betti_z2, &0)]
            && self.euler == other.euler
    }

    pub fn alternating_betti_sum(&self) -> i64 {
        self.betti_z
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

pub fn homology(k: &SimplicialComplex) -> Result<HomologyProfile, HomologyError> {
    let c = chain_complex(k);
    let top = c.len();
    let mut rank_z = vec![0usize; top + 1];
    let mut factors: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for d in 1..top {
        let b = c.boundary(d).expect("d in range");
        let columns: Vec<Vec<(usize, i64)>> = b
            .columns
            .iter()
            .map(|col| col.iter().map(|&(r, x)| (r, i64::from(x))).collect())
            .collect();
        let snf = smith_normal_form_sparse(b.rows, &columns)?;
        rank_z[d] = snf.rank();
        factors[d] = snf.torsion();
    }
    let betti_z = (0..top).map(|d| c.rank(d) - rank_z[d] - rank_z[d + 1]).collect();
    // torsion in H_d comes from the image of ∂_{d+1}
    let torsion = (0..top).map(|d| factors[d + 1].clone()).collect();
    let profile = HomologyProfile {
        betti_z,
        torsion,
        betti_z2: betti_z2(&c),
        euler: k.euler_characteristic(),
    };
    debug_assert_eq!(profile.euler, profile.alternating_betti_sum());
    Ok(profile)
}

/// Universal-coefficient consistency: in every dimension,
/// `b2_d = b_d + #{even torsion factors in dim d} + #{even torsion factors in dim d-1}`,
/// and `euler` equals the alternating sum of integer Betti numbers.
pub fn uct_check(p: &HomologyProfile) -> bool {
    let even = |d: usize| {
        p.torsion
            .get(d)
            .map_or(0, |t| t.iter().filter(|&&x| x % 2 == 0).count())
    };
    let dims = p.betti_z.len().max(p.betti_z2.len());
    let consistent = (0..dims).all(|d| {
        let expected = p.betti(d) + even(d) + d.checked_sub(1).map_or(0, even);
        p.betti_z2.get(d).copied().unwrap_or(0) == expected
    });
    consistent && p.euler == p.alternating_betti_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary;

    fn cx(simplices: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_maximal(simplices.iter().map(|s| Simplex::new(s.iter().copied())))
    }

    /// Six-vertex real projective plane.
    pub(crate) fn rp2() -> SimplicialComplex {
        cx(&[
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
        ])
    }

    #[test]
    fn edge_boundary_convention() {
        let c = chain_complex(&cx(&[&[0, 1]]));
        let d1 = c.boundary(1).unwrap();
        assert_eq!(d1.columns, vec![vec![(1, 1), (0, -1)]]);
        assert_eq!(d1.to_dense().get(0, 0), -1);
        assert_eq!(d1.to_dense().get(1, 0), 1);
    }

    #[test]
    fn hollow_triangle_chain_complex() {
        let c = chain_complex(&cx(&[&[0, 1], &[1, 2], &[0, 2]]));
        assert_eq!(c.len(), 2);
        assert!(c.boundary(2).is_none());
        let d1 = c.boundary(1).unwrap().to_dense();
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for j in 0..3 {
            assert_eq!((0..3).map(|i| d1.get(i, j)).sum::<i64>(), 0);
        }
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let c = chain_complex(&SimplicialComplex::simplex(Simplex::from([0, 1, 2, 3, 4])));
        for d in 2..c.len() {
            let prod = c
                .boundary(d - 1)
                .unwrap()
                .to_dense()
                .checked_mul(&c.boundary(d).unwrap().to_dense())
                .unwrap();
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn three_sphere() {
        let k = boundary(&Simplex::from([0, 1, 2, 3, 4])).unwrap();
        let h = homology(&k).unwrap();
        assert_eq!(h.betti_z, vec![1, 0, 0, 1]);
        assert_eq!(h.betti_z2, vec![1, 0, 0, 1]);
        assert!(h.is_torsion_free());
        assert_eq!(h.euler, 0);
    }

    #[test]
    fn projective_plane() {
        let k = rp2();
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        let h = homology(&k).unwrap();
        assert_eq!(h.betti_z, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], vec![2], vec![]]);
        assert_eq!(h.betti_z2, vec![1, 1, 1]);
        assert_eq!(h.euler, 1);
        assert!(uct_check(&h));
    }

    #[test]
    fn cone_is_acyclic() {
        let h = homology(&SimplicialComplex::simplex(Simplex::from([0, 1, 2, 3]))).unwrap();
        assert_eq!(h.betti_z, vec![1, 0, 0, 0]);
        assert_eq!(h.betti_trimmed(), &[1]);
    }

    #[test]
    fn uct_negative_control() {
        let mut h = homology(&rp2()).unwrap();
        h.betti_z2[1] -= 1;
        assert!(!uct_check(&h));
        let free = homology(&boundary(&Simplex::from([0, 1, 2])).unwrap()).unwrap();
        assert_eq!(free.betti_z, free.betti_z2);
        assert!(uct_check(&free));
    }

    #[test]
    fn comparison_ignores_trailing_zeros() {
        let solid = homology(&SimplicialComplex::simplex(Simplex::from([0, 1, 2, 3]))).unwrap();
        let point = homology(&cx(&[&[0]])).unwrap();
        assert_ne!(solid, point);
        assert!(solid.same_as(&point));
        assert!(!solid.same_as(&homology(&rp2()).unwrap()));
    }

    #[test]
    fn empty_complex() {
        let h = homology(&SimplicialComplex::default()).unwrap();
        assert!(h.betti_z.is_empty());
        assert_eq!(h.euler, 0);
    }
}
