//! Proper simplicial complexes on the ground set `[n] = {1,…,n}`.
//!
//! A complex is stored as its full `2^n` membership table, so membership is
//! one array lookup. That table is the hot path of every other module and at
//! `n ≤ 20` it always fits comfortably in memory. The empty set is required
//! to be a face and `[n]` is required not to be one (properness); the void
//! complex with no faces at all is rejected.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};

pub const MAX_GROUND: usize = 20;

/// The vertex set `[n] = {1,…,n}`, `2 ≤ n ≤ 20`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::EmptyGround(n));
        }
        if n > MAX_GROUND {
            return Err(Error::BudgetExceeded(format!(
                "ground set of size {n} exceeds the 2^n membership budget (n <= {MAX_GROUND})"
            )));
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> FaceSet {
        FaceSet((1u32 << self.n) - 1)
    }

    /// All subsets of `[n]` in ascending bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = FaceSet> {
        (0..1u32 << self.n).map(FaceSet)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }
}

/// A subset of `[n]` as an n-bit mask; vertex `i` occupies bit `i-1`.
///
/// The ascending order of the underlying mask is the canonical order used for
/// every emitted list of sets.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceSet(pub(crate) u32);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut bits = 0u32;
        for v in vertices {
            if v == 0 || v > 32 {
                return Err(Error::VertexOutOfRange { vertex: v, n: 32 });
            }
            bits |= 1 << (v - 1);
        }
        Ok(FaceSet(bits))
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=32).contains(&v));
        FaceSet(1 << (v - 1))
    }

    /// Interpret a raw mask: bit `i` is vertex `i+1`.
    pub fn from_bits(bits: u32) -> Self {
        FaceSet(bits)
    }

    pub fn bits(&self) -> u32 {
        self.0
    }

    pub fn card(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, vertex: usize) -> bool {
        (1..=32).contains(&vertex) && self.0 & (1 << (vertex - 1)) != 0
    }

    pub fn insert(&self, vertex: usize) -> FaceSet {
        FaceSet(self.0 | 1 << (vertex - 1))
    }

    pub fn remove(&self, vertex: usize) -> FaceSet {
        FaceSet(self.0 & !(1 << (vertex - 1)))
    }

    pub fn union(&self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 | other.0)
    }

    pub fn intersection(&self, other: FaceSet) -> FaceSet {
        FaceSet(self.0 & other.0)
    }

    pub fn complement(&self, ground: GroundSet) -> FaceSet {
        FaceSet(!self.0 & ground.full().0)
    }

    pub fn is_subset_of(&self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(&self, other: FaceSet) -> bool {
        self.0 & other.0 == 0
    }

    /// 1-based vertex labels in ascending order.
    pub fn vertices(&self) -> Vec<usize> {
        (1..=32).filter(|&v| self.contains(v)).collect()
    }

    /// All subsets of this set in ascending mask order.
    pub fn submasks(&self) -> Vec<FaceSet> {
        let mask = self.0;
        let mut out = Vec::with_capacity(1 << self.card());
        let mut s = 0u32;
        loop {
            out.push(FaceSet(s));
            if s == mask {
                break;
            }
            // (s - mask) & mask steps to the next submask in ascending order
            s = s.wrapping_sub(mask) & mask;
        }
        out
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FaceSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FaceSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        FaceSet::from_vertices(vs).map_err(serde::de::Error::custom)
    }
}

/// A proper simplicial complex `K ⊊ 2^[n]` with `∅ ∈ K`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    ground: GroundSet,
    member: Vec<bool>,
}

/// Wire format: `{"n": 4, "facets": [[1,2],[3]]}`, 1-indexed, facets need not
/// be maximal (the downward closure is taken on input).
#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(j: ComplexJson) -> Result<Self> {
        let ground = GroundSet::new(j.n)?;
        let facets = j
            .facets
            .iter()
            .map(|f| FaceSet::from_vertices(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(ground, &facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(k: SimplicialComplex) -> Self {
        ComplexJson {
            n: k.n(),
            facets: k.maximal_faces().iter().map(|f| f.vertices()).collect(),
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets=[", self.n())?;
        for (k, m) in self.maximal_faces().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "])")
    }
}

impl SimplicialComplex {
    /// Downward closure of the listed sets together with `∅`.
    pub fn from_facets(ground: GroundSet, facets: &[FaceSet]) -> Result<Self> {
        let full = ground.full();
        let mut member = vec![false; 1 << ground.n()];
        member[0] = true;
        for &f in facets {
            if f == full {
                return Err(Error::FullComplex);
            }
            if !f.is_subset_of(full) {
                let v = f.vertices().into_iter().find(|&v| v > ground.n()).unwrap();
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: ground.n(),
                });
            }
            for s in f.submasks() {
                member[s.0 as usize] = true;
            }
        }
        Ok(SimplicialComplex { ground, member })
    }

    /// Build from an explicit membership table, validating downward closure
    /// and properness.
    pub fn from_membership(ground: GroundSet, member: Vec<bool>) -> Result<Self> {
        if member.len() != 1 << ground.n() {
            return Err(Error::Dimension(format!(
                "membership table has {} entries, expected {}",
                member.len(),
                1 << ground.n()
            )));
        }
        if !member[0] {
            return Err(Error::Range("the empty set must be a face".into()));
        }
        if member[ground.full().0 as usize] {
            return Err(Error::FullComplex);
        }
        for mask in 0..member.len() {
            if member[mask] {
                let mut rest = mask as u32;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    if !member[(mask as u32 & !bit) as usize] {
                        return Err(Error::Range(format!(
                            "not downward closed at {}",
                            FaceSet(mask as u32)
                        )));
                    }
                    rest &= rest - 1;
                }
            }
        }
        Ok(SimplicialComplex { ground, member })
    }

    /// The complex of all faces of cardinality at most `d`.
    pub fn skeleton(ground: GroundSet, d: usize) -> Result<Self> {
        if d >= ground.n() {
            return Err(Error::FullComplex);
        }
        let member = (0..1u32 << ground.n())
            .map(|mask| (mask.count_ones() as usize) <= d)
            .collect();
        Ok(SimplicialComplex { ground, member })
    }

    /// The boundary of the full simplex, `2^[n] \ {[n]}`.
    pub fn simplex_boundary(ground: GroundSet) -> Self {
        Self::skeleton(ground, ground.n() - 1).expect("n-1 < n")
    }

    /// The minimal proper complex `{∅}`.
    pub fn empty_complex(ground: GroundSet) -> Self {
        Self::from_facets(ground, &[]).expect("no facets")
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    pub fn contains(&self, face: FaceSet) -> bool {
        self.member.get(face.0 as usize).copied().unwrap_or(false)
    }

    /// All faces in ascending mask order.
    pub fn faces(&self) -> Vec<FaceSet> {
        (0..self.member.len())
            .filter(|&m| self.member[m])
            .map(|m| FaceSet(m as u32))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    /// Maximal faces, ascending mask order.
    pub fn maximal_faces(&self) -> Vec<FaceSet> {
        self.faces()
            .into_iter()
            .filter(|&f| {
                self.ground
                    .vertices()
                    .all(|v| f.contains(v) || !self.contains(f.insert(v)))
            })
            .collect()
    }

    /// Alexander dual: `S ∈ K° ⟺ [n]∖S ∉ K`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let full = self.ground.full();
        let member = (0..self.member.len())
            .map(|m| !self.member[(full.0 ^ m as u32) as usize])
            .collect();
        SimplicialComplex {
            ground: self.ground,
            member,
        }
    }

    /// All `B ∉ K` with every proper subset of `B` in `K`, ascending order.
    pub fn minimal_nonfaces(&self) -> Vec<FaceSet> {
        (0..self.member.len())
            .filter(|&m| {
                if self.member[m] {
                    return false;
                }
                let b = FaceSet(m as u32);
                b.vertices().into_iter().all(|v| self.contains(b.remove(v)))
            })
            .map(|m| FaceSet(m as u32))
            .collect()
    }

    /// The vector `m_i = |{S ∈ K : S ∪ {i} ∉ K}|` for `i = 1,…,n`.
    pub fn m_vector(&self) -> Vec<u64> {
        let n = self.n();
        let mut m = vec![0u64; n];
        for mask in 0..self.member.len() {
            if !self.member[mask] {
                continue;
            }
            for (i, slot) in m.iter_mut().enumerate() {
                let with = mask | (1 << i);
                if with != mask && !self.member[with] {
                    *slot += 1;
                }
            }
        }
        m
    }

    /// Whether `K` lies between the consecutive skeleta that characterize the
    /// Bier spheres of maximal volume: for odd `n = 2m+1`, `K` equals the
    /// m-skeleton; for even `n = 2m`, the (m-1)-skeleton is contained in `K`
    /// and every face has at most `m` vertices.
    pub fn is_balanced(&self) -> bool {
        let n = self.n();
        let m = n / 2;
        if n % 2 == 1 {
            (0..self.member.len())
                .all(|mask| self.member[mask] == ((mask as u32).count_ones() as usize <= m))
        } else {
            (0..self.member.len()).all(|mask| {
                let c = (mask as u32).count_ones() as usize;
                if c < m {
                    self.member[mask]
                } else if c > m {
                    !self.member[mask]
                } else {
                    true
                }
            })
        }
    }
}

/// A strictly positive rational weight vector with `Σ l_i = 1` plus a
/// threshold `0 < ν < 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WeightsJson", into = "WeightsJson")]
pub struct WeightVector {
    l: Vec<Rational>,
    nu: Rational,
}

/// Wire format: `{"l":["3/10","3/10","4/10"],"nu":"1/2"}`.
#[derive(Serialize, Deserialize)]
struct WeightsJson {
    l: Vec<String>,
    nu: String,
}

impl TryFrom<WeightsJson> for WeightVector {
    type Error = Error;
    fn try_from(j: WeightsJson) -> Result<Self> {
        let l =
            j.l.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()?;
        let nu = parse_rational(&j.nu)?;
        WeightVector::new(l, nu)
    }
}

impl From<WeightVector> for WeightsJson {
    fn from(w: WeightVector) -> Self {
        WeightsJson {
            l: w.l.iter().map(format_rational).collect(),
            nu: format_rational(&w.nu),
        }
    }
}

impl WeightVector {
    pub fn new(l: Vec<Rational>, nu: Rational) -> Result<Self> {
        GroundSet::new(l.len())?;
        if l.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidWeights(
                "weights must be strictly positive".into(),
            ));
        }
        let total: Rational = l.iter().sum();
        if !total.is_one() {
            return Err(Error::NotNormalized(format_rational(&total)));
        }
        if !nu.is_positive() || nu >= Rational::one() {
            return Err(Error::InvalidWeights(format!(
                "threshold must satisfy 0 < nu < 1, got {}",
                format_rational(&nu)
            )));
        }
        Ok(WeightVector { l, nu })
    }

    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.l.len()).expect("validated at construction")
    }

    pub fn weights(&self) -> &[Rational] {
        &self.l
    }

    /// Weight of the 1-based vertex `i`.
    pub fn weight(&self, i: usize) -> &Rational {
        &self.l[i - 1]
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    /// `μ_L(I) = Σ_{i∈I} l_i`.
    pub fn measure(&self, set: FaceSet) -> Rational {
        set.vertices().iter().map(|&v| self.weight(v).clone()).sum()
    }

    /// The threshold complex `T_{μ_L<ν}`.
    ///
    /// Scans all `2^n` subset weights once; the scan both checks genericity
    /// (no subset weight may equal `ν` exactly) and fills the membership
    /// table.
    pub fn threshold_complex(&self) -> Result<SimplicialComplex> {
        let ground = self.ground();
        let n = ground.n();
        let mut sums: Vec<Rational> = vec![Rational::zero(); 1 << n];
        let mut member = vec![false; 1 << n];
        member[0] = true;
        for mask in 1usize..1 << n {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = &sums[mask & (mask - 1)] + &self.l[low];
            if sums[mask] == self.nu {
                return Err(Error::NotGeneric(FaceSet(mask as u32)));
            }
            member[mask] = sums[mask] < self.nu;
        }
        let k = SimplicialComplex { ground, member };
        debug_assert!(k.contains(FaceSet::EMPTY) && !k.contains(ground.full()));
        // K° = T_{μ_L < 1-ν} holds for every generic weight vector.
        debug_assert!({
            let dual = k.alexander_dual();
            let bound = Rational::one() - &self.nu;
            (0..1usize << n).all(|mask| dual.contains(FaceSet(mask as u32)) == (sums[mask] < bound))
        });
        Ok(k)
    }
}
