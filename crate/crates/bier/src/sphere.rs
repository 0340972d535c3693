//! Faces, facets, ridges and f-vector of the Bier sphere
//! `Bier(K) = K ∗_Δ K°` (the deleted join of `K` with its Alexander dual).
//!
//! Faces are ordered triples `(A1, A2; B)` partitioning `[n]` with `A1 ∈ K`,
//! `A2 ∈ K°` and `B = [n]∖(A1∪A2)`. Proper faces have `∅ ≠ B ≠ [n]`; the
//! triple with `B = [n]` encodes the empty face of the extended face poset
//! and is never emitted by the proper-face enumerations here. Equivalently a
//! face is the interval `(X, Y) = (A1, [n]∖A2)` with `X ∈ K`, `Y ∉ K`.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::complex::{FaceSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec;

/// Enumeration budget for the `3^n` face sweeps (`f_vector`, `faces`).
pub const MAX_FVECTOR_GROUND: usize = 12;

/// A face `(A1, A2; B)` of `Bier(K)`; `B` is derived.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BierFace {
    n: usize,
    a1: FaceSet,
    a2: FaceSet,
}

impl BierFace {
    pub(crate) fn new_unchecked(n: usize, a1: FaceSet, a2: FaceSet) -> Self {
        debug_assert!(a1.is_disjoint(a2));
        BierFace { n, a1, a2 }
    }

    /// Validated constructor. Accepts the extended empty face `(∅, ∅; [n])`.
    pub fn face_of(k: &SimplicialComplex, a1: FaceSet, a2: FaceSet) -> Result<Self> {
        let full = k.ground().full();
        if !a1.is_subset_of(full) || !a2.is_subset_of(full) {
            return Err(Error::Range("face sets must be subsets of [n]".into()));
        }
        if !a1.is_disjoint(a2) {
            return Err(Error::Range(format!("{a1} and {a2} are not disjoint")));
        }
        if !k.contains(a1) {
            return Err(Error::Range(format!("{a1} is not a face of K")));
        }
        // A2 ∈ K° ⟺ [n]∖A2 ∉ K
        if k.contains(a2.complement(k.ground())) {
            return Err(Error::Range(format!(
                "{a2} is not a face of the Alexander dual"
            )));
        }
        Ok(BierFace { n: k.n(), a1, a2 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a1(&self) -> FaceSet {
        self.a1
    }

    pub fn a2(&self) -> FaceSet {
        self.a2
    }

    pub fn b(&self) -> FaceSet {
        FaceSet(!(self.a1.bits() | self.a2.bits()) & ((1u32 << self.n) - 1))
    }

    /// `|A1| + |A2| − 1`; the empty face has dimension −1.
    pub fn dim(&self) -> i64 {
        self.a1.card() as i64 + self.a2.card() as i64 - 1
    }

    pub fn is_empty_face(&self) -> bool {
        self.a1.is_empty() && self.a2.is_empty()
    }

    pub fn is_facet(&self) -> bool {
        self.b().card() == 1
    }

    /// The vertex `ν` for facets (`B = {ν}`).
    pub fn apex(&self) -> Option<usize> {
        let b = self.b();
        if b.card() == 1 {
            Some(b.vertices()[0])
        } else {
            None
        }
    }

    /// Interval notation `(X, Y) = (A1, [n]∖A2)`.
    pub fn interval(&self) -> IntervalFace {
        IntervalFace {
            n: self.n,
            x: self.a1,
            y: FaceSet(!self.a2.bits() & ((1u32 << self.n) - 1)),
        }
    }

    /// Containment in the face partial order of `Bier(K)`.
    pub fn is_subface_of(&self, other: &BierFace) -> bool {
        self.n == other.n && self.a1.is_subset_of(other.a1) && self.a2.is_subset_of(other.a2)
    }
}

impl Serialize for BierFace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BierFace", 3)?;
        st.serialize_field("a1", &self.a1)?;
        st.serialize_field("a2", &self.a2)?;
        st.serialize_field("b", &self.b())?;
        st.end()
    }
}

/// Interval notation for a Bier face: `X ⊊ Y`, `X ∈ K`, `Y ∉ K`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct IntervalFace {
    n: usize,
    pub x: FaceSet,
    pub y: FaceSet,
}

impl IntervalFace {
    pub fn face_of(k: &SimplicialComplex, x: FaceSet, y: FaceSet) -> Result<Self> {
        let full = k.ground().full();
        if !x.is_subset_of(y) || x == y || !y.is_subset_of(full) {
            return Err(Error::Range(format!("need X ⊊ Y ⊆ [n], got {x}, {y}")));
        }
        if x.is_empty() && y == full {
            return Err(Error::Range("(∅, [n]) is not an interval face".into()));
        }
        if !k.contains(x) || k.contains(y) {
            return Err(Error::Range(format!(
                "interval ({x}, {y}) needs X ∈ K and Y ∉ K"
            )));
        }
        Ok(IntervalFace { n: k.n(), x, y })
    }

    pub fn to_bier(&self) -> BierFace {
        BierFace::new_unchecked(
            self.n,
            self.x,
            FaceSet(!self.y.bits() & ((1u32 << self.n) - 1)),
        )
    }
}

/// The three ridge configurations: which of `X∪{c1}`, `X∪{c2}` lie in `K`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub enum RidgeKind {
    /// Both extensions are faces of `K`.
    Lambda,
    /// Neither extension is a face of `K`.
    V,
    /// Exactly one extension is a face of `K`.
    Cross,
}

/// A ridge (codimension-one face) of `Bier(K)`, classified, together with
/// the two facets that contain it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ridge {
    n: usize,
    pub x: FaceSet,
    pub y: FaceSet,
    pub c1: usize,
    pub c2: usize,
    pub kind: RidgeKind,
    /// For `Cross` ridges, the element `d ∈ {c1,c2}` with `X∪{d} ∈ K`.
    pub cross_in_k: Option<usize>,
    pub facets: [BierFace; 2],
}

impl Ridge {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn face(&self) -> BierFace {
        IntervalFace {
            n: self.n,
            x: self.x,
            y: self.y,
        }
        .to_bier()
    }

    pub fn id(&self) -> String {
        format!("{}<{}", self.x, self.y)
    }
}

impl Serialize for Ridge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Ridge", 6)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("y", &self.y)?;
        st.serialize_field("class", &self.kind)?;
        st.serialize_field("c1", &self.c1)?;
        st.serialize_field("c2", &self.c2)?;
        st.serialize_field("facets", &self.facets)?;
        st.end()
    }
}

/// Whether `(a1, a2)` is a proper face of `Bier(K)`.
pub fn is_face(k: &SimplicialComplex, a1: FaceSet, a2: FaceSet) -> bool {
    let full = k.ground().full();
    a1.is_subset_of(full)
        && a2.is_subset_of(full)
        && a1.is_disjoint(a2)
        && !(a1.is_empty() && a2.is_empty())
        && a1.union(a2) != full
        && k.contains(a1)
        && !k.contains(a2.complement(k.ground()))
}

/// All proper faces, ascending by `(a1, a2)`.
pub fn faces(k: &SimplicialComplex) -> Result<Vec<BierFace>> {
    if k.n() > MAX_FVECTOR_GROUND {
        return Err(Error::BudgetExceeded(format!(
            "face enumeration is 3^n; n={} exceeds {}",
            k.n(),
            MAX_FVECTOR_GROUND
        )));
    }
    let ground = k.ground();
    let mut out = Vec::new();
    for a1 in k.faces() {
        for a2 in a1.complement(ground).submasks() {
            if a1.is_empty() && a2.is_empty() {
                continue;
            }
            if !k.contains(a2.complement(ground)) {
                out.push(BierFace::new_unchecked(k.n(), a1, a2));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The facets of `Bier(K)`: triples `(A, [n]∖(A∪{c}); {c})` over the
/// boundary pairs `A ∈ K`, `A∪{c} ∉ K`. Their number is `Σ m_i(K)`.
pub fn facets(k: &SimplicialComplex) -> Vec<BierFace> {
    let ground = k.ground();
    let mut out = Vec::new();
    for a in k.faces() {
        for c in ground.vertices() {
            if a.contains(c) {
                continue;
            }
            let grown = a.insert(c);
            if !k.contains(grown) {
                out.push(BierFace::new_unchecked(k.n(), a, grown.complement(ground)));
            }
        }
    }
    out.sort();
    out
}

/// `(f_0, …, f_{n−2})` of `Bier(K)` by enumeration of all ordered disjoint
/// pairs. The alternating sum equals the Euler characteristic of `S^{n-2}`.
pub fn f_vector(k: &SimplicialComplex) -> Result<Vec<u64>> {
    let n = k.n();
    if n > MAX_FVECTOR_GROUND {
        return Err(Error::BudgetExceeded(format!(
            "f-vector enumeration is 3^n; n={n} exceeds {MAX_FVECTOR_GROUND}"
        )));
    }
    let ground = k.ground();
    let k_faces = k.faces();
    let hist = exec::sum_histograms(&k_faces, n, |&a1, h| {
        for a2 in a1.complement(ground).submasks() {
            if a1.is_empty() && a2.is_empty() {
                continue;
            }
            if !k.contains(a2.complement(ground)) {
                h[a1.card() + a2.card() - 1] += 1;
            }
        }
    });
    Ok(hist[..n - 1].to_vec())
}

/// All ridges `(X, Y)` with `|Y∖X| = 2`, classified, each with the two
/// facets containing it, ascending by `(x, y)`.
pub fn ridges(k: &SimplicialComplex) -> Result<Vec<Ridge>> {
    let n = k.n();
    let ground = k.ground();
    let candidates = n * (n - 1) / 2 * (1usize << n.saturating_sub(2));
    if candidates > 8_000_000 {
        return Err(Error::BudgetExceeded(format!(
            "ridge enumeration would scan {candidates} intervals"
        )));
    }
    let mut out = Vec::new();
    for c1 in 1..=n {
        for c2 in c1 + 1..=n {
            let pair = FaceSet::singleton(c1).union(FaceSet::singleton(c2));
            for x in pair.complement(ground).submasks() {
                if !k.contains(x) {
                    continue;
                }
                let y = x.union(pair);
                if k.contains(y) {
                    continue;
                }
                let in1 = k.contains(x.insert(c1));
                let in2 = k.contains(x.insert(c2));
                let y_out = y.complement(ground);
                let (kind, cross_in_k, mut fs) = match (in1, in2) {
                    (true, true) => (
                        RidgeKind::Lambda,
                        None,
                        [
                            BierFace::new_unchecked(n, x.insert(c1), y_out),
                            BierFace::new_unchecked(n, x.insert(c2), y_out),
                        ],
                    ),
                    (false, false) => (
                        RidgeKind::V,
                        None,
                        [
                            BierFace::new_unchecked(n, x, x.insert(c1).complement(ground)),
                            BierFace::new_unchecked(n, x, x.insert(c2).complement(ground)),
                        ],
                    ),
                    (in1, _) => {
                        let (d, e) = if in1 { (c1, c2) } else { (c2, c1) };
                        (
                            RidgeKind::Cross,
                            Some(d),
                            [
                                BierFace::new_unchecked(n, x.insert(d), y_out),
                                BierFace::new_unchecked(n, x, x.insert(e).complement(ground)),
                            ],
                        )
                    }
                };
                fs.sort();
                out.push(Ridge {
                    n,
                    x,
                    y,
                    c1,
                    c2,
                    kind,
                    cross_in_k,
                    facets: fs,
                });
            }
        }
    }
    out.sort_by_key(|r| (r.x, r.y));
    Ok(out)
}

/// The involution `(A1, A2; B) ↦ (A2, A1; B)`, a bijection from the facets
/// of `Bier(K)` onto the facets of `Bier(K°)`. Returned as pairs in the
/// canonical order of `facets(K)`.
pub fn dual_facet_map(k: &SimplicialComplex) -> Vec<(BierFace, BierFace)> {
    facets(k)
        .into_iter()
        .map(|f| (f, BierFace::new_unchecked(f.n(), f.a2(), f.a1())))
        .collect()
}
