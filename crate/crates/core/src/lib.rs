//! Neighborhood complexes of graphs, with an emphasis on 4-regular
//! circulant graphs `C_n(s, t)`.
//!
//! The crate builds `N(G)`, shrinks it by graph folds and elementary
//! collapses, computes homology over `Z` and `Z_2`, checks shellings,
//! recognizes closed surfaces, and classifies circulant parameters into the
//! homotopy-type families they are predicted to realize.
//!
//! Everything here is pure computation on owned values and needs only
//! `alloc`; file formats, parallel sweeps and the command line live in the
//! companion `neighborly` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod circulant;
pub mod collapse;
pub mod complex;
pub mod fixtures;
pub mod gf2;
pub mod graph;
pub mod homology;
pub mod shelling;
pub mod simplex;
pub mod snf;
pub mod surface;

pub use analysis::{analyze_graph, ComponentReport, GraphReport, Prediction, Verdict};
pub use circulant::{
    case_of, classify, predicted, special_params, verify, verify_params, CaseTag, CirculantParams, ParamError,
    TheoremCase, VerificationReport, VerifyError,
};
pub use collapse::{
    collapse_core, collapse_core_seeded, collapse_step, paper_schedule_pairs, verify_collapsible_pair, CollapseError, CollapsePair,
    CollapseStrategy, CollapseTrace,
};
pub use complex::{boundary, neighborhood_complex, ComplexError, SimplicialComplex};
pub use graph::{Graph, GraphError, Vertex};
pub use homology::{betti_z2, chain_complex, homology, uct_check, ChainComplex, HomologyError, HomologyProfile};
pub use shelling::{find_shelling, verify_shelling, ShellingError, ShellingReport, ShellingSearch, WedgeOfSpheres};
pub use simplex::Simplex;
pub use snf::{smith_normal_form, smith_normal_form_sparse, IntMatrix, SmithForm, SnfError};
pub use surface::{classify_surface, is_closed_surface, is_pseudomanifold, orient, vertex_link, SurfaceClass, SurfaceReport};
