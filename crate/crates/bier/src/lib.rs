//! Exact-arithmetic combinatorics and geometry of Bier spheres.
//!
//! Given a proper simplicial complex `K ⊊ 2^[n]`, the crate constructs the
//! Bier sphere `Bier(K) = K ∗_Δ K°` (faces, facets, ridges, f-vector), the
//! canonical fan `Fan(K)` refining the braid arrangement in
//! `H_0 = {x : Σx_i = 0}`, the starshaped realization `Star(K)` and its
//! exact volume, the Van Kampen-Flores polytope `Ω_n` with its hypersimplex
//! polar dual, and decides whether `Fan(K)` is the normal fan of a polytope
//! by solving the wall-crossing inequality system with an exact rational
//! simplex (witness or Farkas certificate, both re-verified).
//!
//! Everything is exact: `num::BigRational` scalars, `q·√r` Euclidean
//! volumes, bitmask subsets. There is no floating point in the crate.
//!
//! The data-parallel sweeps (face enumeration, permutation verification,
//! batch membership, per-ridge inequality generation) run on rayon under
//! the default `parallel` feature and fall back to sequential loops with
//! `--no-default-features`; results are identical either way.

pub mod complex;
pub mod error;
mod exec;
pub mod fan;
pub mod geometry;
pub mod linalg;
mod lp;
pub mod polytopality;
pub mod sphere;

pub use crate::complex::{FaceSet, GroundSet, SimplicialComplex, WeightVector};
pub use crate::error::{Error, Result};
pub use crate::fan::{BraidCone, Circuit, FanReport, Preposet, VerifyFanOptions};
pub use crate::geometry::{ExactVolume, MinkowskiValues, PolarIsoReport, VkfPolytope};
pub use crate::linalg::{Rational, RationalVector};
pub use crate::polytopality::{
    BierVertex, Feasibility, HeightVector, Realization, SolveOptions, WallInequality,
};
pub use crate::sphere::{BierFace, IntervalFace, Ridge, RidgeKind};

/// Whether this build fans out over rayon (`parallel` feature) or runs the
/// sequential fallback.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
