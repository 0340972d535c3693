//! Exact geometry of the starshaped realization `Star(K)` and of the
//! Van Kampen-Flores polytope `Ω_n = Conv(Δ ∪ ∇)`.
//!
//! Volumes are measured in `H_0` with the metric induced from `R^n`; the
//! volume of one facet simplex is `Vol_0 = √(Gram det)/(n−1)!`, the same for
//! every facet, so the normalized volume (an integer, the Bier facet count)
//! carries all the content. Euclidean values are kept exact as `q·√r`.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{FaceSet, GroundSet, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec;
use crate::fan::{self, Circuit};
use crate::linalg::{self, rat_int, Rational, RationalVector};

/// Vertex-enumeration budget for the polar body `Ω_n°`.
pub const MAX_POLAR_GROUND: usize = 8;

/// An exact non-negative value `q·√r` with `r` a squarefree positive
/// integer. Comparison and arithmetic go through the (rational) square.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactVolume {
    q: Rational,
    r: BigInt,
}

impl ExactVolume {
    /// The exact square root of a non-negative rational.
    pub fn from_sqrt(s: Rational) -> Self {
        assert!(!s.is_negative(), "volumes are non-negative");
        if s.is_zero() {
            return ExactVolume {
                q: Rational::zero(),
                r: BigInt::one(),
            };
        }
        // √(a/b) = √(ab)/b
        let inner = s.numer() * s.denom();
        let (sq, rest) = linalg::squarefree_split(&inner);
        ExactVolume {
            q: BigRational::new(sq, s.denom().clone()),
            r: rest,
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(!factor.is_negative());
        let q = &self.q * factor;
        // keep the representation canonical: zero has root part 1
        let r = if q.is_zero() { BigInt::one() } else { self.r.clone() };
        ExactVolume { q, r }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.q
    }

    pub fn root_part(&self) -> &BigInt {
        &self.r
    }

    /// `q²·r`, exact.
    pub fn squared(&self) -> Rational {
        &self.q * &self.q * BigRational::from_integer(self.r.clone())
    }
}

impl fmt::Display for ExactVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_one() {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{}*sqrt({})", self.q, self.r)
        }
    }
}

impl PartialOrd for ExactVolume {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactVolume {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.squared().cmp(&other.squared())
    }
}

/// Euclidean `(n−1)`-volume of one facet simplex of the `δ`-realization:
/// the Gram determinant of the `n−1` vectors `{ε_i δ_i}` of any facet is
/// `1/n` regardless of the facet or the signs, so
/// `Vol_0 = √(1/n)/(n−1)!`.
pub fn vol0(n: usize) -> Result<ExactVolume> {
    GroundSet::new(n)?;
    // Gram of δ_1,…,δ_{n−1}: entries δ_{ij} − 1/n.
    let gram: Vec<Vec<Rational>> = (0..n - 1)
        .map(|i| {
            (0..n - 1)
                .map(|j| {
                    let kron = if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    kron - BigRational::new(BigInt::one(), BigInt::from(n as i64))
                })
                .collect()
        })
        .collect();
    let det = linalg::determinant(&gram);
    let fact: Rational = BigRational::new(BigInt::one(), (1..n as i64).product::<i64>().into());
    Ok(ExactVolume::from_sqrt(det).scaled(&fact))
}

/// `Vol(Star(K))/Vol_0 = Σ m_i(K) = f_{n−1}(Bier(K))`, an exact integer.
pub fn normalized_volume(k: &SimplicialComplex) -> u64 {
    k.m_vector().iter().sum()
}

/// The Euclidean volume `Vol_0 · Σ m_i` as an exact `q·√r`.
pub fn euclidean_volume(k: &SimplicialComplex) -> Result<ExactVolume> {
    Ok(vol0(k.n())?.scaled(&rat_int(normalized_volume(k) as i64)))
}

/// Volume change, in units of `Vol_0`, of the bistellar move adding the
/// minimal non-face `B` to `K`: `|C| − |B| = n − 2|B|` where `C = [n]∖B`.
/// Positive when `|B| < n/2`, zero at `|B| = n/2`, negative above.
pub fn volume_delta(k: &SimplicialComplex, b: FaceSet) -> Result<i64> {
    let ground = k.ground();
    if !b.is_subset_of(ground.full()) {
        let v = b.vertices().into_iter().find(|&v| v > k.n()).unwrap();
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: k.n(),
        });
    }
    if b == ground.full() {
        // adding the top cell destroys properness
        return Err(Error::FullComplex);
    }
    if k.contains(b) || b.vertices().iter().any(|&v| !k.contains(b.remove(v))) {
        return Err(Error::NotMinimalNonface(b));
    }
    Ok(k.n() as i64 - 2 * b.card() as i64)
}

/// The unique `λ` with `Σ λ_i u_i = x` and `Σ λ_i = 0`.
pub fn circuit_coordinates(circuit: &Circuit, x: &RationalVector) -> Result<Vec<Rational>> {
    let n = circuit.n();
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {n}",
            x.len()
        )));
    }
    // n coordinate equations plus the zero-sum constraint
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|row| {
            (1..=n)
                .map(|i| circuit.vector(i).coords()[row].clone())
                .collect()
        })
        .collect();
    rows.push(vec![Rational::one(); n]);
    let mut rhs: Vec<Rational> = x.coords().to_vec();
    rhs.push(Rational::zero());
    linalg::solve_linear(&rows, &rhs).ok_or(Error::NotInSpan)
}

/// The Minkowski functionals of `Δ = Conv{u_i}`, `∇ = −Δ` and of the
/// intersection body `Δ ∩ ∇` at `x`, from the circuit coordinates:
/// `n·max λ_i^−`, `n·max λ_i^+`, `n·max |λ_i|`.
#[derive(Clone, Debug)]
pub struct MinkowskiValues {
    pub delta: Rational,
    pub nabla: Rational,
    pub polar: Rational,
}

impl Serialize for MinkowskiValues {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MinkowskiValues", 3)?;
        st.serialize_field("mu_delta", &linalg::format_rational(&self.delta))?;
        st.serialize_field("mu_nabla", &linalg::format_rational(&self.nabla))?;
        st.serialize_field("mu_omega_polar", &linalg::format_rational(&self.polar))?;
        st.end()
    }
}

pub fn minkowski(circuit: &Circuit, x: &RationalVector) -> Result<MinkowskiValues> {
    let lambda = circuit_coordinates(circuit, x)?;
    let n = rat_int(circuit.n() as i64);
    let mut neg = Rational::zero();
    let mut pos = Rational::zero();
    for l in &lambda {
        if l.is_negative() && -l.clone() > neg {
            neg = -l.clone();
        }
        if l.is_positive() && *l > pos {
            pos = l.clone();
        }
    }
    let abs = neg.clone().max(pos.clone());
    Ok(MinkowskiValues {
        delta: &n * neg,
        nabla: &n * pos,
        polar: &n * abs,
    })
}

/// Exact barycentric membership of `x` in `Δ = Conv{u_i}` (or in `∇ = −Δ`
/// when `nabla` is set): solve `Σ t_i u_i = x`, `Σ t_i = 1` and test
/// non-negativity. Independent of the Minkowski-functional formulas.
pub fn simplex_contains(circuit: &Circuit, x: &RationalVector, nabla: bool) -> Result<bool> {
    let n = circuit.n();
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {n}",
            x.len()
        )));
    }
    let sign = if nabla {
        -Rational::one()
    } else {
        Rational::one()
    };
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|row| {
            (1..=n)
                .map(|i| &sign * &circuit.vector(i).coords()[row])
                .collect()
        })
        .collect();
    rows.push(vec![Rational::one(); n]);
    let mut rhs: Vec<Rational> = x.coords().to_vec();
    rhs.push(Rational::one());
    match linalg::solve_linear(&rows, &rhs) {
        None => Ok(false), // x outside the affine hull
        Some(t) => Ok(t.iter().all(|c| !c.is_negative())),
    }
}

/// Locate `x` in the canonical fan and test membership in `Star(K)`: sort
/// the coordinates ascending (ties broken by index), pick the facet of the
/// resulting permutation, express `x` over the facet rays with non-negative
/// coefficients and compare the coefficient sum to 1.
pub fn star_contains(k: &SimplicialComplex, x: &RationalVector) -> Result<bool> {
    let n = k.n();
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {n}",
            x.len()
        )));
    }
    if !x.is_zero_sum() {
        return Err(Error::NotInH0);
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.sort_by(|&a, &b| x.coord(a).cmp(x.coord(b)).then(a.cmp(&b)));
    let tau = fan::facet_of_permutation(k, &perm)?;
    let apex = tau.apex().expect("facet");
    let pivot = x.coord(apex).clone();
    // x = Σ_{i∈A1} a_i(−δ_i) + Σ_{j∈A2} b_j δ_j with a_i = x_ν − x_i ≥ 0,
    // b_j = x_j − x_ν ≥ 0.
    let mut total = Rational::zero();
    for i in tau.a1().vertices() {
        let a = &pivot - x.coord(i);
        debug_assert!(!a.is_negative());
        total += a;
    }
    for j in tau.a2().vertices() {
        let b = x.coord(j) - &pivot;
        debug_assert!(!b.is_negative());
        total += b;
    }
    Ok(total <= Rational::one())
}

/// Batch membership; embarrassingly parallel.
pub fn star_contains_batch(k: &SimplicialComplex, points: &[RationalVector]) -> Result<Vec<bool>> {
    let results = exec::map_slice(points, |x| star_contains(k, x));
    results.into_iter().collect()
}

/// Whether the vertices `{u_i}_{i∈I} ∪ {−u_j}_{j∈J}` lie on a common proper
/// face of `Ω_n`: exactly when `I ∩ J = ∅` and `|I|, |J| ≤ n/2`.
pub fn vkf_is_face(n: usize, i: FaceSet, j: FaceSet) -> Result<bool> {
    let ground = GroundSet::new(n)?;
    for set in [i, j] {
        if !set.is_subset_of(ground.full()) {
            let v = set.vertices().into_iter().find(|&v| v > n).unwrap();
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i.is_empty() && j.is_empty() {
        return Err(Error::Range("(I, J) must not both be empty".into()));
    }
    Ok(i.is_disjoint(j) && 2 * i.card() <= n && 2 * j.card() <= n)
}

/// All `C(n,r)` binary vectors of weight `r`, ascending by support mask.
pub fn hypersimplex_vertices(n: usize, r: usize) -> Result<Vec<Vec<u8>>> {
    if !(2..=20).contains(&n) {
        return Err(Error::Range(format!(
            "hypersimplex needs 2 <= n <= 20, got {n}"
        )));
    }
    if r < 1 || r > n - 1 {
        return Err(Error::Range(format!(
            "hypersimplex needs 1 <= r <= n-1, got r={r}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0..1u32 << n {
        if mask.count_ones() as usize == r {
            out.push((0..n).map(|b| u8::from(mask >> b & 1 == 1)).collect());
        }
    }
    Ok(out)
}

/// Vertices of the cube slice `{λ ∈ [−1,1]^n : Σλ = 0}`, which is the polar
/// body `Ω_n°` in circuit coordinates. Brute force over the tight-constraint
/// candidates: either all `n` coordinates are `±1`, or `n−1` are `±1` and
/// the last is forced by the hyperplane.
pub fn omega_polar_vertices(n: usize) -> Result<Vec<Vec<Rational>>> {
    GroundSet::new(n)?;
    if n > MAX_POLAR_GROUND {
        return Err(Error::BudgetExceeded(format!(
            "polar vertex enumeration is n·2^n; n={n} exceeds {MAX_POLAR_GROUND}"
        )));
    }
    let mut set: BTreeSet<Vec<Rational>> = BTreeSet::new();
    // all coordinates tight
    for signs in 0..1u32 << n {
        let v: Vec<i64> = (0..n)
            .map(|b| if signs >> b & 1 == 1 { 1 } else { -1 })
            .collect();
        if v.iter().sum::<i64>() == 0 {
            set.insert(v.into_iter().map(rat_int).collect());
        }
    }
    // n−1 coordinates tight, one determined by the hyperplane
    for free in 0..n {
        for signs in 0..1u32 << (n - 1) {
            let mut v = vec![0i64; n];
            let mut bit = 0;
            for (pos, slot) in v.iter_mut().enumerate() {
                if pos == free {
                    continue;
                }
                *slot = if signs >> bit & 1 == 1 { 1 } else { -1 };
                bit += 1;
            }
            let forced = -v.iter().sum::<i64>();
            if forced.abs() <= 1 {
                v[free] = forced;
                set.insert(v.into_iter().map(rat_int).collect());
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Result of the hypersimplex identification of `Ω_n°`.
#[derive(Clone, Debug, Serialize)]
pub struct PolarIsoReport {
    pub n: usize,
    pub iso: String,
    pub vertices: usize,
    pub pass: bool,
}

/// Verify the affine identification of `Ω_n°` under `x = (λ+1)/2`: for even
/// `n = 2k` the image is the vertex set of the hypersimplex `Δ_{2k,k}`; for
/// odd `n = 2k+1` it is the `{0, 1/2, 1}`-vector set with exactly `k` zeros
/// and `k` ones.
pub fn polar_iso_check(n: usize) -> Result<PolarIsoReport> {
    let polar = omega_polar_vertices(n)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut image: Vec<Vec<Rational>> = polar
        .iter()
        .map(|v| v.iter().map(|l| (l + Rational::one()) * &half).collect())
        .collect();
    image.sort();
    let (iso, expected) = if n.is_multiple_of(2) {
        let k = n / 2;
        let mut expect: Vec<Vec<Rational>> = hypersimplex_vertices(n, k)?
            .into_iter()
            .map(|v| v.into_iter().map(|b| rat_int(b as i64)).collect())
            .collect();
        expect.sort();
        (format!("Delta({n},{k})"), expect)
    } else {
        let k = n / 2;
        let mut expect: Vec<Vec<Rational>> = Vec::new();
        for zeros in 0..1u32 << n {
            if zeros.count_ones() as usize != k {
                continue;
            }
            for ones in 0..1u32 << n {
                if ones.count_ones() as usize != k || zeros & ones != 0 {
                    continue;
                }
                expect.push(
                    (0..n)
                        .map(|b| {
                            if zeros >> b & 1 == 1 {
                                Rational::zero()
                            } else if ones >> b & 1 == 1 {
                                Rational::one()
                            } else {
                                half.clone()
                            }
                        })
                        .collect(),
                );
            }
        }
        expect.sort();
        (format!("HalfIntegerHull({n})"), expect)
    };
    let pass = image == expected;
    Ok(PolarIsoReport {
        n,
        iso,
        vertices: polar.len(),
        pass,
    })
}

/// The Van Kampen-Flores polytope `Ω_n = Conv{±u_i}` over a circuit, with
/// its polar vertex list precomputed for exact membership queries.
#[derive(Clone, Debug)]
pub struct VkfPolytope {
    circuit: Circuit,
    polar: Vec<Vec<Rational>>,
}

impl VkfPolytope {
    pub fn new(circuit: Circuit) -> Result<Self> {
        let polar = omega_polar_vertices(circuit.n())?;
        Ok(VkfPolytope { circuit, polar })
    }

    /// `Ω_n` over the default `δ` circuit.
    pub fn standard(n: usize) -> Result<Self> {
        VkfPolytope::new(Circuit::delta(n)?)
    }

    pub fn n(&self) -> usize {
        self.circuit.n()
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// The `2n` vertices `u_1,…,u_n,−u_1,…,−u_n`.
    pub fn vertices(&self) -> Vec<RationalVector> {
        let mut out: Vec<RationalVector> = self.circuit.vectors().to_vec();
        out.extend(self.circuit.vectors().iter().map(|v| v.neg()));
        out
    }

    pub fn is_face(&self, i: FaceSet, j: FaceSet) -> Result<bool> {
        vkf_is_face(self.n(), i, j)
    }

    /// Exact membership via the polar description: `x ∈ Ω_n` iff
    /// `Σ λ̂_i λ_i(x) ≤ 1` for every vertex `λ̂` of the polar cube slice.
    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        let lambda = circuit_coordinates(&self.circuit, x)?;
        Ok(self.polar.iter().all(|hat| {
            hat.iter()
                .zip(&lambda)
                .map(|(a, b)| a * b)
                .sum::<Rational>()
                <= Rational::one()
        }))
    }

    pub fn contains_batch(&self, points: &[RationalVector]) -> Result<Vec<bool>> {
        let results = exec::map_slice(points, |x| self.contains(x));
        results.into_iter().collect()
    }
}
