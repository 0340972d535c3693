//! The canonical fan `Fan(K)` as a coarsening of the braid fan.
//!
//! Each Bier face `τ = (A1, A2; B)` carries the preposet
//! `ρ_τ = (A1×B) ∪ (B×B) ∪ (B×A2)` and the braid cone
//! `Cone(τ) = {x ∈ H_0 : x_i ≤ x_j for (i,j) ∈ ρ_τ}`. We keep the
//! reflexive-transitive closure (the preposet definition demands
//! transitivity; the extra inequalities are implied, so the cone is the
//! same). Facet cones use the sign convention of the starshaped
//! realization: the vertex `i` of `K` sits on the ray through `-δ_i` and the
//! dual vertex `j̄` on the ray through `+δ_j`, where
//! `δ_i = e_i − (1/n)(e_1+⋯+e_n)`.

use num::{BigInt, BigRational, Zero};
use rand::Rng;
use serde::Serialize;

use crate::complex::{FaceSet, GroundSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, rat, rat_int, Rational, RationalVector};
use crate::sphere::{self, BierFace};

/// Factorial budget for `verify_fan`.
pub const MAX_VERIFY_GROUND: usize = 8;

/// A reflexive, transitive binary relation on `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Preposet {
    n: usize,
    rel: Vec<bool>, // row-major; rel[(i-1)*n + (j-1)] ⟺ i ≼ j
}

impl Preposet {
    /// Reflexive-transitive closure of the given 1-based pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut rel = vec![false; n * n];
        for i in 0..n {
            rel[i * n + i] = true;
        }
        for (i, j) in pairs {
            assert!(i >= 1 && i <= n && j >= 1 && j <= n);
            rel[(i - 1) * n + (j - 1)] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Preposet { n, rel }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.rel[(i - 1) * self.n + (j - 1)]
    }

    pub fn equivalent(&self, i: usize, j: usize) -> bool {
        self.le(i, j) && self.le(j, i)
    }

    /// All related ordered pairs `(i, j)` with `i ≠ j`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j && self.le(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Equivalence classes of `≡`, each sorted, ordered by minimum element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for i in 1..=self.n {
            if seen[i - 1] {
                continue;
            }
            let class: Vec<usize> = (i..=self.n).filter(|&j| self.equivalent(i, j)).collect();
            for &j in &class {
                seen[j - 1] = true;
            }
            out.push(class);
        }
        out
    }

    /// Closure of the union with another preposet on the same set.
    pub fn union(&self, other: &Preposet) -> Preposet {
        assert_eq!(self.n, other.n);
        Preposet::from_pairs(self.n, self.pairs().into_iter().chain(other.pairs()))
    }

    /// Covering relations `i ⋖ j` of the underlying partial order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i == j || !self.le(i, j) || self.le(j, i) {
                    continue;
                }
                let direct = (1..=self.n).all(|k| {
                    k == i
                        || k == j
                        || !(self.le(i, k) && self.le(k, j) && !self.le(k, i) && !self.le(j, k))
                });
                if direct {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// For a tree-poset whose Hasse diagram is a star on `[n]`, `n ≥ 3`:
    /// the unique non-leaf node. `None` if the poset is not of that shape.
    pub fn star_center(&self) -> Option<usize> {
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.equivalent(i, j) {
                    return None;
                }
            }
        }
        let covers = self.covers();
        if covers.len() != self.n - 1 {
            return None;
        }
        let mut degree = vec![0usize; self.n];
        for &(i, j) in &covers {
            degree[i - 1] += 1;
            degree[j - 1] += 1;
        }
        let hubs: Vec<usize> = (1..=self.n).filter(|&v| degree[v - 1] >= 2).collect();
        match hubs.as_slice() {
            [nu] if degree[nu - 1] == self.n - 1 => Some(*nu),
            _ => None,
        }
    }
}

/// `ρ_τ = (A1 × B) ∪ (B × B) ∪ (B × A2)`, closed reflexively and
/// transitively. For a facet the result is a tree-poset whose Hasse diagram
/// is a star centered at the apex `ν`.
pub fn preposet_of_face(face: &BierFace) -> Preposet {
    let n = face.n();
    let a1 = face.a1().vertices();
    let a2 = face.a2().vertices();
    let b = face.b().vertices();
    let mut pairs = Vec::new();
    for &i in &a1 {
        for &v in &b {
            pairs.push((i, v));
        }
    }
    for &u in &b {
        for &v in &b {
            pairs.push((u, v));
        }
    }
    for &v in &b {
        for &j in &a2 {
            pairs.push((v, j));
        }
    }
    Preposet::from_pairs(n, pairs)
}

/// A braid cone `{x ∈ H_0 : x_i ≤ x_j for all related (i, j)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidCone {
    preposet: Preposet,
}

/// Serializable inequality/equality description of a braid cone.
#[derive(Serialize, Debug)]
pub struct ConeDescriptor {
    /// Pairs `[i, j]` meaning `x_i ≤ x_j`, between representatives of
    /// distinct equivalence classes (full closure, ascending).
    pub le: Vec<[usize; 2]>,
    /// Blocks of coordinates forced equal (only blocks of size ≥ 2).
    pub eq: Vec<Vec<usize>>,
}

impl BraidCone {
    pub fn from_preposet(preposet: Preposet) -> Self {
        BraidCone { preposet }
    }

    pub fn n(&self) -> usize {
        self.preposet.n()
    }

    pub fn preposet(&self) -> &Preposet {
        &self.preposet
    }

    /// Exact membership; the point must lie in `H_0`.
    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        let n = self.n();
        if x.len() != n {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, cone lives in R^{n}",
                x.len()
            )));
        }
        if !x.is_zero_sum() {
            return Err(Error::NotInH0);
        }
        Ok(self
            .preposet
            .pairs()
            .into_iter()
            .all(|(i, j)| x.coord(i) <= x.coord(j)))
    }

    /// Fast path for integer points already known to have zero sum.
    pub(crate) fn contains_ints(&self, x: &[i64]) -> bool {
        let n = self.n();
        for i in 1..=n {
            for j in 1..=n {
                if i != j && self.preposet.le(i, j) && x[i - 1] > x[j - 1] {
                    return false;
                }
            }
        }
        true
    }

    pub fn descriptor(&self) -> ConeDescriptor {
        let classes = self.preposet.classes();
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut le = Vec::new();
        for &a in &reps {
            for &b in &reps {
                if a != b && self.preposet.le(a, b) && !self.preposet.le(b, a) {
                    le.push([a, b]);
                }
            }
        }
        le.sort();
        ConeDescriptor {
            le,
            eq: classes.into_iter().filter(|c| c.len() >= 2).collect(),
        }
    }
}

/// `Cone(τ)` from the face preposet.
pub fn cone_of_face(face: &BierFace) -> BraidCone {
    BraidCone::from_preposet(preposet_of_face(face))
}

/// The unique facet `τ` with `C_π ⊆ Cone(τ)`: take the shortest prefix of
/// `π` that is not a face of `K`; its last element is the apex.
pub fn facet_of_permutation(k: &SimplicialComplex, perm: &[usize]) -> Result<BierFace> {
    let n = k.n();
    validate_permutation(n, perm)?;
    let mut prefix = FaceSet::EMPTY;
    for &v in perm {
        let grown = prefix.insert(v);
        if !k.contains(grown) {
            let a2 = grown.complement(k.ground());
            return Ok(BierFace::new_unchecked(n, prefix, a2));
        }
        prefix = grown;
    }
    unreachable!("[n] is never a face of a proper complex")
}

fn validate_permutation(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Range(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::Range(format!(
                "not a permutation of 1..={n}: {perm:?}"
            )));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// Componentwise intersection: `Cone(τ) ∩ Cone(τ') = Cone(τ'')` with
/// `A1'' = A1 ∩ A1'` and `A2'' = A2 ∩ A2'`. The result may be the extended
/// empty face (the zero cone).
pub fn cone_intersection(a: &BierFace, b: &BierFace) -> Result<BierFace> {
    if a.n() != b.n() {
        return Err(Error::Dimension(format!(
            "faces on [n] with n={} and n={}",
            a.n(),
            b.n()
        )));
    }
    Ok(BierFace::new_unchecked(
        a.n(),
        a.a1().intersection(b.a1()),
        a.a2().intersection(b.a2()),
    ))
}

/// A circuit: `n` rational vectors spanning `H_0 ⊂ R^n`, summing to zero,
/// every `n−1` of them linearly independent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circuit {
    vectors: Vec<RationalVector>,
}

impl Circuit {
    pub fn new(vectors: Vec<RationalVector>) -> Result<Self> {
        let n = vectors.len();
        GroundSet::new(n)?;
        for v in &vectors {
            if v.len() != n {
                return Err(Error::Dimension(format!(
                    "circuit vector {v} has {} coordinates, expected {n}",
                    v.len()
                )));
            }
            if !v.is_zero_sum() {
                return Err(Error::NotInH0);
            }
        }
        let mut total = RationalVector::zero(n);
        for v in &vectors {
            total = total.add(v);
        }
        if total.coords().iter().any(|c| !c.is_zero()) {
            return Err(Error::Range("circuit vectors must sum to zero".into()));
        }
        let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
        if linalg::rank(&rows) != n - 1 {
            return Err(Error::Range("circuit must span H_0 (rank n-1)".into()));
        }
        Ok(Circuit { vectors })
    }

    /// The default circuit `δ_i = e_i − (1/n)(e_1+⋯+e_n)`.
    pub fn delta(n: usize) -> Result<Self> {
        GroundSet::new(n)?;
        let vectors = (0..n)
            .map(|i| {
                RationalVector::new(
                    (0..n)
                        .map(|j| {
                            if i == j {
                                rat(n as i64 - 1, n as i64)
                            } else {
                                rat(-1, n as i64)
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        Ok(Circuit { vectors })
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    /// The vector `u_i`, 1-based.
    pub fn vector(&self, i: usize) -> &RationalVector {
        &self.vectors[i - 1]
    }

    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }
}

/// Extremal rays of a facet cone, as primitive integer vectors preserving
/// ray direction: `-u_i` for `i ∈ A1` and `+u_j` for `j ∈ A2`, ordered with
/// `A1` ascending first. For the `δ` circuit these are exactly the extremal
/// rays of `Cone(τ)`.
pub fn facet_rays(face: &BierFace, circuit: &Circuit) -> Result<Vec<Vec<BigInt>>> {
    if !face.is_facet() {
        return Err(Error::NotFacet);
    }
    if circuit.n() != face.n() {
        return Err(Error::Dimension(format!(
            "circuit on {} vertices, face on {}",
            circuit.n(),
            face.n()
        )));
    }
    let mut rays = Vec::with_capacity(face.n() - 1);
    for i in face.a1().vertices() {
        rays.push(linalg::primitive_integer(circuit.vector(i).neg().coords()));
    }
    for j in face.a2().vertices() {
        rays.push(linalg::primitive_integer(circuit.vector(j).coords()));
    }
    Ok(rays)
}

/// Rebuild `K` from its Bier facets: the union of the downward closures of
/// the `A1` components. This is the faithfulness direction of the canonical
/// fan construction.
pub fn complex_from_bier_facets(
    ground: GroundSet,
    facets: &[BierFace],
) -> Result<SimplicialComplex> {
    let tops: Vec<FaceSet> = facets.iter().map(|f| f.a1()).collect();
    SimplicialComplex::from_facets(ground, &tops)
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The permutation of `1..=n` with the given Lehmer index in `0..n!`.
pub(crate) fn permutation_by_index(n: usize, mut idx: usize) -> Vec<usize> {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for pos in (0..n).rev() {
        let f = factorial(pos);
        out.push(available.remove(idx / f));
        idx %= f;
    }
    out
}

/// Generators of the braid chamber `C_π`: for `k = 1..n-1` the vector with
/// `k−n` at positions `π(1..k)` and `k` elsewhere. Integer, zero-sum.
pub(crate) fn chamber_generators(perm: &[usize]) -> Vec<Vec<i64>> {
    let n = perm.len();
    (1..n)
        .map(|k| {
            let mut v = vec![k as i64; n];
            for &p in &perm[..k] {
                v[p - 1] = k as i64 - n as i64;
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct VerifyFanOptions {
    /// Largest `n` accepted (the check sweeps all `n!` permutations).
    pub max_n: usize,
    /// Number of face pairs sampled for the intersection law.
    pub pair_samples: usize,
    /// Number of rational points sampled per face pair.
    pub point_samples: usize,
    pub seed: u64,
}

impl Default for VerifyFanOptions {
    fn default() -> Self {
        VerifyFanOptions {
            max_n: MAX_VERIFY_GROUND,
            pair_samples: 50,
            point_samples: 20,
            seed: 0,
        }
    }
}

/// Completeness/simpliciality report for `Fan(K)`.
#[derive(Clone, Debug, Serialize)]
pub struct FanReport {
    pub n: usize,
    pub facet_count: usize,
    pub permutations: usize,
    /// Every chamber `C_π` lies in the cone of `facet_of_permutation(π)`
    /// and in no other facet cone.
    pub cover_ok: bool,
    /// Every facet cone has `n−1` linearly independent rays.
    pub simplicial_ok: bool,
    /// Sampled check of `Cone(τ)∩Cone(τ') = Cone(τ∩τ')`.
    pub intersection_ok: bool,
    /// Reconstructing `K` from the facet preposets recovers `K`.
    pub faithful_ok: bool,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Verify that `Fan(K)` is a complete simplicial fan refined by the braid
/// fan: every permutation chamber lies in exactly one facet cone, facet
/// cones are simplicial, sampled cone intersections agree with pointwise
/// membership, and the construction is faithful.
pub fn verify_fan(k: &SimplicialComplex, opts: &VerifyFanOptions) -> Result<FanReport> {
    let n = k.n();
    if n > opts.max_n {
        return Err(Error::BudgetExceeded(format!(
            "fan verification sweeps n! permutations; n={n} exceeds {}",
            opts.max_n
        )));
    }
    let facet_list = sphere::facets(k);
    let cones: Vec<BraidCone> = facet_list.iter().map(cone_of_face).collect();
    let nperm = factorial(n);

    // (a) chamber cover: C_π ⊆ Cone(facet_of_permutation(π)), uniquely.
    let failures: Vec<Option<String>> = exec::map_range(nperm, |idx| {
        let perm = permutation_by_index(n, idx);
        let tau = facet_of_permutation(k, &perm).expect("perm validated");
        let gens = chamber_generators(&perm);
        let mut hit = Vec::new();
        for (t, cone) in cones.iter().enumerate() {
            if gens.iter().all(|g| cone.contains_ints(g)) {
                hit.push(t);
            }
        }
        let own = facet_list.iter().position(|f| *f == tau);
        match (own, hit.as_slice()) {
            (Some(i), [j]) if *j == i => None,
            _ => Some(format!(
                "permutation {perm:?}: selected facet {:?}, chambers contained in {} facet cones",
                tau,
                hit.len()
            )),
        }
    });
    let mut failures: Vec<String> = failures.into_iter().flatten().collect();
    let cover_ok = failures.is_empty();

    // (b) simpliciality: rays of each facet cone are linearly independent.
    let delta = Circuit::delta(n)?;
    let simplicial_ok = facet_list.iter().all(|f| {
        let rays = facet_rays(f, &delta).expect("facet");
        let rows: Vec<Vec<Rational>> = rays
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        linalg::rank(&rows) == n - 1
    });
    if !simplicial_ok {
        failures.push("a facet cone is not simplicial".into());
    }

    // (c) sampled intersection law.
    let mut rng: rand_chacha::ChaCha8Rng = rand::SeedableRng::seed_from_u64(opts.seed);
    let all_faces = sphere::faces(k)?;
    let mut intersection_ok = true;
    for _ in 0..opts.pair_samples {
        let a = all_faces[rng.gen_range(0..all_faces.len())];
        let b = all_faces[rng.gen_range(0..all_faces.len())];
        let meet = cone_intersection(&a, &b)?;
        let (ca, cb, cm) = (cone_of_face(&a), cone_of_face(&b), cone_of_face(&meet));
        for _ in 0..opts.point_samples {
            let x = random_h0_point(&mut rng, n);
            let joint = ca.contains(&x)? && cb.contains(&x)?;
            if joint != cm.contains(&x)? {
                intersection_ok = false;
                failures.push(format!("intersection law fails for {a:?}, {b:?} at {x}",));
                break;
            }
        }
    }

    // (d) faithfulness.
    let rebuilt = complex_from_bier_facets(k.ground(), &facet_list)?;
    let faithful_ok = rebuilt == *k;
    if !faithful_ok {
        failures.push("facet preposets do not reconstruct K".into());
    }

    failures.truncate(8);
    let pass = cover_ok && simplicial_ok && intersection_ok && faithful_ok;
    Ok(FanReport {
        n,
        facet_count: facet_list.len(),
        permutations: nperm,
        cover_ok,
        simplicial_ok,
        intersection_ok,
        faithful_ok,
        pass,
        failures,
    })
}

/// A random exact rational point of `H_0` with small numerators.
pub fn random_h0_point<R: Rng>(rng: &mut R, n: usize) -> RationalVector {
    let coords: Vec<Rational> = (0..n)
        .map(|_| rat(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=40)))
        .collect();
    let mean: Rational = coords.iter().sum::<Rational>() / rat_int(n as i64);
    RationalVector::new(coords.into_iter().map(|c| c - &mean).collect())
}

/// A random proper complex: the downward closure of a few random proper
/// subsets of `[n]` (possibly none, giving `{∅}`).
pub fn random_complex<R: Rng>(rng: &mut R, ground: GroundSet) -> SimplicialComplex {
    let n = ground.n();
    let count = rng.gen_range(0..=n + 2);
    let full = ground.full().bits();
    let gens: Vec<FaceSet> = (0..count)
        .map(|_| FaceSet(rng.gen_range(0..full)))
        .collect();
    SimplicialComplex::from_facets(ground, &gens).expect("generators are proper")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn fs(vs: &[usize]) -> FaceSet {
        FaceSet::from_vertices(vs.iter().copied()).unwrap()
    }

    fn zero_skeleton3() -> SimplicialComplex {
        SimplicialComplex::skeleton(ground(3), 1).unwrap()
    }

    fn face(k: &SimplicialComplex, a1: &[usize], a2: &[usize]) -> BierFace {
        BierFace::face_of(k, fs(a1), fs(a2)).unwrap()
    }

    #[test]
    fn preposet_of_facet_is_transitive_star() {
        let k = zero_skeleton3();
        let p = preposet_of_face(&face(&k, &[1], &[3]));
        assert!(p.le(1, 2) && p.le(2, 3) && p.le(1, 3));
        assert!(!p.le(3, 1) && !p.le(2, 1));
        assert_eq!(p.star_center(), Some(2));
    }

    #[test]
    fn preposet_of_empty_face_is_single_class() {
        let k = zero_skeleton3();
        let empty = cone_intersection(&face(&k, &[1], &[3]), &face(&k, &[3], &[1])).unwrap();
        assert!(empty.is_empty_face());
        let p = preposet_of_face(&empty);
        assert_eq!(p.classes(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn preposet_with_two_element_block() {
        let k = SimplicialComplex::skeleton(ground(4), 1).unwrap();
        let p = preposet_of_face(&face(&k, &[1], &[4]));
        assert!(p.equivalent(2, 3));
        assert!(p.le(1, 2) && p.le(1, 3) && p.le(2, 4) && p.le(3, 4) && p.le(1, 4));
        assert_eq!(p.star_center(), None); // not a star: B has two elements
    }

    #[test]
    fn cone_membership() {
        let k = zero_skeleton3();
        let cone = cone_of_face(&face(&k, &[1], &[3]));
        assert!(cone
            .contains(&RationalVector::from_ints(&[-1, 0, 1]))
            .unwrap());
        assert!(!cone
            .contains(&RationalVector::from_ints(&[1, 0, -1]))
            .unwrap());
        assert!(cone
            .contains(&RationalVector::from_ints(&[0, 0, 0]))
            .unwrap());
        assert_eq!(
            cone.contains(&RationalVector::from_ints(&[1, 1, 1]))
                .unwrap_err(),
            Error::NotInH0
        );
    }

    #[test]
    fn cone_descriptor_shape() {
        let k = zero_skeleton3();
        let d = cone_of_face(&face(&k, &[1], &[3])).descriptor();
        assert_eq!(d.le, vec![[1, 2], [1, 3], [2, 3]]);
        assert!(d.eq.is_empty());

        let e = cone_of_face(&face(&k, &[1], &[])).descriptor();
        assert_eq!(e.eq, vec![vec![2, 3]]);
        assert_eq!(e.le, vec![[1, 2]]);
    }

    #[test]
    fn facet_of_permutation_examples() {
        let k = zero_skeleton3();
        let t = facet_of_permutation(&k, &[1, 2, 3]).unwrap();
        assert_eq!((t.a1(), t.a2(), t.b()), (fs(&[1]), fs(&[3]), fs(&[2])));

        let k = SimplicialComplex::simplex_boundary(ground(3));
        let t = facet_of_permutation(&k, &[1, 2, 3]).unwrap();
        assert_eq!((t.a1(), t.a2(), t.b()), (fs(&[1, 2]), fs(&[]), fs(&[3])));

        let k = SimplicialComplex::empty_complex(ground(3));
        let t = facet_of_permutation(&k, &[2, 3, 1]).unwrap();
        assert_eq!((t.a1(), t.a2(), t.b()), (fs(&[]), fs(&[1, 3]), fs(&[2])));

        assert!(facet_of_permutation(&k, &[1, 1, 2]).is_err());
    }

    #[test]
    fn cone_intersection_examples() {
        let k = zero_skeleton3();
        let a = face(&k, &[1], &[3]);
        let b = face(&k, &[1], &[2]);
        let m = cone_intersection(&a, &b).unwrap();
        assert_eq!((m.a1(), m.a2(), m.b()), (fs(&[1]), fs(&[]), fs(&[2, 3])));
        assert_eq!(cone_intersection(&a, &a).unwrap(), a);
    }

    #[test]
    fn facet_rays_examples() {
        let k = zero_skeleton3();
        let delta = Circuit::delta(3).unwrap();
        // rays of ({1},{3};{2}): -δ_1 and +δ_3
        let rays = facet_rays(&face(&k, &[1], &[3]), &delta).unwrap();
        assert_eq!(rays.len(), 2);
        assert_eq!(
            rays[0],
            vec![BigInt::from(-2), BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            rays[1],
            vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(2)]
        );

        let kb = SimplicialComplex::simplex_boundary(ground(3));
        let rays = facet_rays(&face(&kb, &[1, 2], &[]), &delta).unwrap();
        assert_eq!(
            rays[0],
            vec![BigInt::from(-2), BigInt::from(1), BigInt::from(1)]
        );
        assert_eq!(
            rays[1],
            vec![BigInt::from(1), BigInt::from(-2), BigInt::from(1)]
        );

        assert_eq!(
            facet_rays(&face(&k, &[1], &[]), &delta).unwrap_err(),
            Error::NotFacet
        );
    }

    #[test]
    fn circuit_validation() {
        assert!(Circuit::delta(5).is_ok());
        // not zero-sum vectors
        let bad = vec![
            RationalVector::from_ints(&[1, 0]),
            RationalVector::from_ints(&[-1, 0]),
        ];
        assert!(Circuit::new(bad).is_err());
        // zero-sum each but not spanning
        let bad = vec![RationalVector::from_ints(&[1, -1, 0]); 3];
        assert!(Circuit::new(bad).is_err());
    }

    #[test]
    fn verify_fan_small_cases() {
        for k in [
            zero_skeleton3(),
            SimplicialComplex::simplex_boundary(ground(3)),
            SimplicialComplex::empty_complex(ground(3)),
        ] {
            let report = verify_fan(&k, &VerifyFanOptions::default()).unwrap();
            assert!(report.pass, "{report:?}");
            assert_eq!(report.permutations, 6);
        }
    }

    #[test]
    fn permutation_to_facet_multiplicity_for_empty_complex() {
        // Bier({∅}) on [3] has 3 facets; each is selected by 2 permutations
        let k = SimplicialComplex::empty_complex(ground(3));
        let facets = sphere::facets(&k);
        assert_eq!(facets.len(), 3);
        let mut hits = vec![0usize; facets.len()];
        for idx in 0..factorial(3) {
            let tau = facet_of_permutation(&k, &permutation_by_index(3, idx)).unwrap();
            hits[facets.iter().position(|f| *f == tau).unwrap()] += 1;
        }
        assert_eq!(hits, vec![2, 2, 2]);
    }

    #[test]
    fn verify_fan_threshold_example() {
        let w = crate::complex::WeightVector::new(
            vec![rat(1, 10), rat(2, 10), rat(3, 10), rat(4, 10)],
            rat(12, 25),
        )
        .unwrap();
        let k = w.threshold_complex().unwrap();
        let report = verify_fan(&k, &VerifyFanOptions::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.permutations, 24);
    }

    #[test]
    fn verify_fan_budget() {
        let k = SimplicialComplex::skeleton(ground(9), 1).unwrap();
        assert!(verify_fan(&k, &VerifyFanOptions::default())
            .unwrap_err()
            .is_budget());
    }

    #[test]
    fn permutation_indexing_is_exhaustive() {
        let mut seen = std::collections::HashSet::new();
        for idx in 0..factorial(4) {
            seen.insert(permutation_by_index(4, idx));
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn preposet_union_lemma_on_faces() {
        // closure of ≼_τ ∪ ≼_τ' equals ≼_{τ''} for the intersection face
        let k = zero_skeleton3();
        let a = face(&k, &[1], &[3]);
        let b = face(&k, &[1], &[2]);
        let m = cone_intersection(&a, &b).unwrap();
        let joined = preposet_of_face(&a).union(&preposet_of_face(&b));
        assert_eq!(joined, preposet_of_face(&m));
    }
}
