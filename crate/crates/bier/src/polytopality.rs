//! Polytopality of the canonical fan via wall-crossing inequality systems.
//!
//! A height function on the `2n` Bier vertex labels `{1,…,n,1̄,…,n̄}` makes
//! `Fan(K)` a normal fan exactly when every ridge's wall-crossing inequality
//! holds strictly. `f(i)` is the height on the ray through `-δ_i` (the `K`
//! side) and `f(j̄)` the height on `+δ_j` (the `K°` side). The three ridge
//! shapes give three inequality families:
//!
//! * `Λ`:  `f(c1) + f(c2) + Σ_{i∈X} f(i)  >  Σ_{j∉Y} f(j̄)`
//! * `V`:  `f(c̄1) + f(c̄2) + Σ_{j∉Y} f(j̄)  >  Σ_{i∈X} f(i)`
//! * `X`:  `f(d) + f(d̄) > 0` for the element `d` with `X∪{d} ∈ K`
//!
//! Each emitted inequality is cross-validated against the generic
//! wall-crossing dependence computed from the actual facet rays.

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{SimplicialComplex, WeightVector};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, format_rational, parse_rational, Rational, RationalVector};
use crate::sphere::{self, BierFace, Ridge, RidgeKind};

/// Ground-size budget for `realize_polytope`.
pub const MAX_REALIZE_GROUND: usize = 6;

/// One of the `2n` vertex labels of `Bier(K)`: `K(i)` is the unbarred label
/// `i` (ray `-δ_i`), `Dual(j)` the barred label `j̄` (ray `+δ_j`).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BierVertex {
    K(usize),
    Dual(usize),
}

impl fmt::Display for BierVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BierVertex::K(i) => write!(f, "{i}"),
            BierVertex::Dual(j) => write!(f, "{j}bar"),
        }
    }
}

impl BierVertex {
    pub fn parse(s: &str) -> Result<Self> {
        let (digits, barred) = match s.strip_suffix("bar") {
            Some(d) => (d, true),
            None => (s, false),
        };
        let i: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex label {s:?}")))?;
        if i == 0 {
            return Err(Error::Parse(format!("bad vertex label {s:?}")));
        }
        Ok(if barred {
            BierVertex::Dual(i)
        } else {
            BierVertex::K(i)
        })
    }
}

/// The canonical primitive integer representative of the ray of a label:
/// `K(i) ↦ n·(-δ_i)` (entry `1-n` at `i`, `1` elsewhere) and
/// `Dual(j) ↦ n·δ_j` (entry `n-1` at `j`, `-1` elsewhere).
pub fn ray_vector(n: usize, label: BierVertex) -> Vec<BigInt> {
    match label {
        BierVertex::K(i) => (1..=n)
            .map(|p| {
                if p == i {
                    BigInt::from(1 - n as i64)
                } else {
                    BigInt::one()
                }
            })
            .collect(),
        BierVertex::Dual(j) => (1..=n)
            .map(|p| {
                if p == j {
                    BigInt::from(n as i64 - 1)
                } else {
                    -BigInt::one()
                }
            })
            .collect(),
    }
}

fn ray_vector_rational(n: usize, label: BierVertex) -> Vec<Rational> {
    ray_vector(n, label)
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

/// Ray labels of a facet, `A1` ascending then `A2` ascending (matching the
/// ordering of `fan::facet_rays`).
pub fn facet_labels(face: &BierFace) -> Vec<BierVertex> {
    face.a1()
        .vertices()
        .into_iter()
        .map(BierVertex::K)
        .chain(face.a2().vertices().into_iter().map(BierVertex::Dual))
        .collect()
}

/// Heights on the `2n` Bier vertex labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeightVector {
    k_side: Vec<Rational>,
    dual_side: Vec<Rational>,
}

impl HeightVector {
    pub fn new(k_side: Vec<Rational>, dual_side: Vec<Rational>) -> Result<Self> {
        if k_side.len() != dual_side.len() {
            return Err(Error::Dimension(
                "height vector sides differ in length".into(),
            ));
        }
        crate::complex::GroundSet::new(k_side.len())?;
        Ok(HeightVector { k_side, dual_side })
    }

    pub fn constant(n: usize, value: Rational) -> Result<Self> {
        HeightVector::new(vec![value.clone(); n], vec![value; n])
    }

    pub fn n(&self) -> usize {
        self.k_side.len()
    }

    pub fn get(&self, label: BierVertex) -> &Rational {
        match label {
            BierVertex::K(i) => &self.k_side[i - 1],
            BierVertex::Dual(j) => &self.dual_side[j - 1],
        }
    }

    pub fn set(&mut self, label: BierVertex, value: Rational) {
        match label {
            BierVertex::K(i) => self.k_side[i - 1] = value,
            BierVertex::Dual(j) => self.dual_side[j - 1] = value,
        }
    }

    pub fn scaled(&self, factor: &Rational) -> HeightVector {
        HeightVector {
            k_side: self.k_side.iter().map(|h| h * factor).collect(),
            dual_side: self.dual_side.iter().map(|h| h * factor).collect(),
        }
    }

    /// Parse from a label map like `{"1": "3/20", "1bar": "3/20", …}`; all
    /// `2n` labels must be present.
    pub fn from_label_map(map: &BTreeMap<String, String>) -> Result<Self> {
        if !map.len().is_multiple_of(2) || map.is_empty() {
            return Err(Error::Parse("height map must list all 2n labels".into()));
        }
        let n = map.len() / 2;
        let mut out = HeightVector::constant(n, Rational::zero())?;
        for (key, value) in map {
            let label = BierVertex::parse(key)?;
            let idx = match label {
                BierVertex::K(i) | BierVertex::Dual(i) => i,
            };
            if idx > n {
                return Err(Error::Parse(format!(
                    "label {key} outside 1..={n} (all 2n labels must be present)"
                )));
            }
            out.set(label, parse_rational(value)?);
        }
        Ok(out)
    }
}

impl Serialize for HeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.n();
        let mut map = s.serialize_map(Some(2 * n))?;
        for i in 1..=n {
            map.serialize_entry(&i.to_string(), &format_rational(&self.k_side[i - 1]))?;
        }
        for j in 1..=n {
            map.serialize_entry(&format!("{j}bar"), &format_rational(&self.dual_side[j - 1]))?;
        }
        map.end()
    }
}

/// A strict homogeneous inequality `Σ coeff·f > 0` attached to a ridge.
#[derive(Clone, Debug)]
pub struct WallInequality {
    coeff_k: Vec<Rational>,
    coeff_dual: Vec<Rational>,
    ridge: Ridge,
}

impl WallInequality {
    fn zero(n: usize, ridge: Ridge) -> Self {
        WallInequality {
            coeff_k: vec![Rational::zero(); n],
            coeff_dual: vec![Rational::zero(); n],
            ridge,
        }
    }

    fn add(&mut self, label: BierVertex, value: Rational) {
        match label {
            BierVertex::K(i) => self.coeff_k[i - 1] += value,
            BierVertex::Dual(j) => self.coeff_dual[j - 1] += value,
        }
    }

    pub fn n(&self) -> usize {
        self.coeff_k.len()
    }

    pub fn ridge(&self) -> &Ridge {
        &self.ridge
    }

    pub fn id(&self) -> String {
        self.ridge.id()
    }

    pub fn coefficient(&self, label: BierVertex) -> &Rational {
        match label {
            BierVertex::K(i) => &self.coeff_k[i - 1],
            BierVertex::Dual(j) => &self.coeff_dual[j - 1],
        }
    }

    pub fn coefficients(&self) -> (&[Rational], &[Rational]) {
        (&self.coeff_k, &self.coeff_dual)
    }

    pub fn eval(&self, f: &HeightVector) -> Rational {
        let mut total = Rational::zero();
        for i in 1..=self.n() {
            if !self.coeff_k[i - 1].is_zero() {
                total += &self.coeff_k[i - 1] * f.get(BierVertex::K(i));
            }
            if !self.coeff_dual[i - 1].is_zero() {
                total += &self.coeff_dual[i - 1] * f.get(BierVertex::Dual(i));
            }
        }
        total
    }

    pub fn holds_strictly(&self, f: &HeightVector) -> bool {
        self.eval(f).is_positive()
    }

    /// Whether the two inequalities agree up to a strictly positive scalar.
    pub fn proportional_positive(&self, other: &WallInequality) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let mine = self.coeff_k.iter().chain(&self.coeff_dual);
        let theirs = other.coeff_k.iter().chain(&other.coeff_dual);
        let mut scale: Option<Rational> = None;
        for (a, b) in mine.zip(theirs) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let s = a / b;
                    if !s.is_positive() {
                        return false;
                    }
                    match &scale {
                        Some(prev) if *prev != s => return false,
                        _ => scale = Some(s),
                    }
                }
            }
        }
        scale.is_some()
    }

    fn dense_row(&self) -> Vec<Rational> {
        self.coeff_k
            .iter()
            .chain(&self.coeff_dual)
            .cloned()
            .collect()
    }
}

/// The Λ/V/X dictionary inequality of a ridge.
pub fn wall_dictionary(ridge: &Ridge) -> WallInequality {
    let n = ridge.n();
    let mut w = WallInequality::zero(n, ridge.clone());
    let one = Rational::one;
    match ridge.kind {
        RidgeKind::Lambda => {
            for i in ridge.y.vertices() {
                w.add(BierVertex::K(i), one());
            }
            for j in 1..=n {
                if !ridge.y.contains(j) {
                    w.add(BierVertex::Dual(j), -one());
                }
            }
        }
        RidgeKind::V => {
            w.add(BierVertex::Dual(ridge.c1), one());
            w.add(BierVertex::Dual(ridge.c2), one());
            for j in 1..=n {
                if !ridge.y.contains(j) {
                    w.add(BierVertex::Dual(j), one());
                }
            }
            for i in ridge.x.vertices() {
                w.add(BierVertex::K(i), -one());
            }
        }
        RidgeKind::Cross => {
            let d = ridge.cross_in_k.expect("cross ridge carries d");
            w.add(BierVertex::K(d), one());
            w.add(BierVertex::Dual(d), one());
        }
    }
    w
}

/// The generic wall-crossing inequality: find the unique linear dependence
/// `α r + β s + Σ γ_t t = 0` (with `α, β > 0`) among the rays of the two
/// facets sharing the ridge, normalized to `α = 1`.
pub fn wall_from_ray_dependence(ridge: &Ridge) -> WallInequality {
    let n = ridge.n();
    let labels1 = facet_labels(&ridge.facets[0]);
    let labels2 = facet_labels(&ridge.facets[1]);
    let r = *labels1
        .iter()
        .find(|l| !labels2.contains(l))
        .expect("adjacent facets differ in exactly one ray");
    let s = *labels2
        .iter()
        .find(|l| !labels1.contains(l))
        .expect("adjacent facets differ in exactly one ray");
    let shared: Vec<BierVertex> = labels1
        .iter()
        .filter(|l| labels2.contains(l))
        .copied()
        .collect();
    let ordered: Vec<BierVertex> = [r, s].into_iter().chain(shared).collect();

    // columns are the ray vectors; the nullspace is one-dimensional
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|row| {
            ordered
                .iter()
                .map(|&l| ray_vector_rational(n, l)[row].clone())
                .collect()
        })
        .collect();
    let kernel = linalg::nullspace(&matrix);
    assert_eq!(
        kernel.len(),
        1,
        "rays of two adjacent chambers have one dependence"
    );
    let mut dep = kernel.into_iter().next().unwrap();
    if dep[0].is_negative() {
        for c in dep.iter_mut() {
            *c = -c.clone();
        }
    }
    assert!(
        dep[0].is_positive() && dep[1].is_positive(),
        "wall dependence needs α, β > 0"
    );
    let alpha = dep[0].clone();
    let mut w = WallInequality::zero(n, ridge.clone());
    for (label, coeff) in ordered.into_iter().zip(dep) {
        let val = coeff / &alpha;
        if !val.is_zero() {
            w.add(label, val);
        }
    }
    w
}

/// One wall-crossing inequality per ridge of `Bier(K)`, in the canonical
/// ridge order; every dictionary inequality is cross-validated against the
/// ray-dependence computation.
pub fn ridge_system(k: &SimplicialComplex) -> Result<Vec<WallInequality>> {
    let ridges = sphere::ridges(k)?;
    let system = exec::map_slice(&ridges, |ridge| {
        let dict = wall_dictionary(ridge);
        let generic = wall_from_ray_dependence(ridge);
        assert!(
            dict.proportional_positive(&generic),
            "dictionary inequality disagrees with the ray dependence at ridge {}",
            ridge.id()
        );
        dict
    });
    Ok(system)
}

/// Exact check that every wall-crossing inequality holds strictly under `f`.
pub fn verify_witness(k: &SimplicialComplex, f: &HeightVector) -> Result<bool> {
    if f.n() != k.n() {
        return Err(Error::Dimension(format!(
            "heights on {} labels, complex on [{}]",
            2 * f.n(),
            k.n()
        )));
    }
    let system = ridge_system(k)?;
    let results = exec::map_slice(&system, |w| w.holds_strictly(f));
    Ok(results.into_iter().all(|b| b))
}

/// Check an infeasibility certificate: non-negative multipliers, not all
/// zero, combining the inequalities to the zero functional.
pub fn verify_certificate(system: &[WallInequality], certificate: &[(usize, Rational)]) -> bool {
    if certificate.is_empty() {
        return false;
    }
    let n = match system.first() {
        Some(w) => w.n(),
        None => return false,
    };
    let mut combo = vec![Rational::zero(); 2 * n];
    let mut total = Rational::zero();
    for (idx, mult) in certificate {
        if *idx >= system.len() || mult.is_negative() {
            return false;
        }
        total += mult;
        for (slot, coeff) in combo.iter_mut().zip(system[*idx].dense_row()) {
            *slot += coeff * mult;
        }
    }
    total.is_positive() && combo.iter().all(|c| c.is_zero())
}

/// Outcome of the polytopality decision.
#[derive(Clone, Debug)]
pub enum Feasibility {
    Feasible { witness: HeightVector },
    Infeasible { certificate: Vec<(usize, Rational)> },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub max_pivots: usize,
    pub max_inequalities: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_pivots: 200_000,
            max_inequalities: 20_000,
        }
    }
}

/// Decide strict feasibility of the wall-crossing system: by homogeneity
/// this is the LP question "all left-hand sides ≥ 1", solved with the exact
/// rational simplex (Bland's anti-cycling rule). The witness or Farkas
/// certificate is re-verified before returning.
pub fn solve(k: &SimplicialComplex, opts: &SolveOptions) -> Result<Feasibility> {
    let system = ridge_system(k)?;
    if system.len() > opts.max_inequalities {
        return Err(Error::BudgetExceeded(format!(
            "{} wall inequalities exceed the limit {}",
            system.len(),
            opts.max_inequalities
        )));
    }
    if system.is_empty() {
        // n = 2: two opposite rays in a line, always the normal fan of a segment
        return Ok(Feasibility::Feasible {
            witness: HeightVector::constant(k.n(), Rational::one())?,
        });
    }
    let rows: Vec<Vec<Rational>> = system.iter().map(|w| w.dense_row()).collect();
    match crate::lp::strict_feasibility(&rows, opts.max_pivots)? {
        crate::lp::FarkasOutcome::Witness(f) => {
            let n = k.n();
            let witness = HeightVector::new(f[..n].to_vec(), f[n..].to_vec())?;
            assert!(
                system.iter().all(|w| w.holds_strictly(&witness)),
                "solver witness failed re-verification"
            );
            Ok(Feasibility::Feasible { witness })
        }
        crate::lp::FarkasOutcome::Certificate(y) => {
            let certificate: Vec<(usize, Rational)> = y
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            assert!(
                verify_certificate(&system, &certificate),
                "solver certificate failed re-verification"
            );
            Ok(Feasibility::Infeasible { certificate })
        }
    }
}

/// The threshold heights `f(i) = (1−ν)l_i`, `f(j̄) = ν l_j`, a wall-crossing
/// witness for every generic weight vector.
pub fn threshold_witness(w: &WeightVector) -> Result<HeightVector> {
    // genericity (and therefore well-definedness of the complex) is checked here
    let _ = w.threshold_complex()?;
    let nu = w.nu().clone();
    let co_nu = Rational::one() - &nu;
    let k_side: Vec<Rational> = w.weights().iter().map(|l| l * &co_nu).collect();
    let dual_side: Vec<Rational> = w.weights().iter().map(|l| l * &nu).collect();
    HeightVector::new(k_side, dual_side)
}

/// A vertex of the realized polytope together with its facet cone.
#[derive(Clone, Debug, Serialize)]
pub struct RealizedVertex {
    pub facet: BierFace,
    pub point: RationalVector,
}

/// The polytope `P_h = {x ∈ H_0 : ⟨g_r, x⟩ ≤ h_r}` over the primitive ray
/// rows, one vertex per Bier facet.
#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub vertices: Vec<RealizedVertex>,
}

/// Realize `P_h` for a verified witness: for each facet cone solve the
/// `n−1` tight equations (plus the `H_0` constraint), check strict slack on
/// every non-incident ray, and return the facet ↔ vertex correspondence.
pub fn realize_polytope(k: &SimplicialComplex, f: &HeightVector) -> Result<Realization> {
    let n = k.n();
    if n > MAX_REALIZE_GROUND {
        return Err(Error::BudgetExceeded(format!(
            "realization budget is n <= {MAX_REALIZE_GROUND}, got {n}"
        )));
    }
    if !verify_witness(k, f)? {
        return Err(Error::WitnessInvalid);
    }
    let facets = sphere::facets(k);
    // rays actually present in the fan = vertices of Bier(K)
    let mut present: Vec<BierVertex> = facets.iter().flat_map(facet_labels).collect();
    present.sort();
    present.dedup();

    let mut seen: BTreeMap<Vec<Rational>, BierFace> = BTreeMap::new();
    let mut vertices = Vec::with_capacity(facets.len());
    for tau in &facets {
        let labels = facet_labels(tau);
        let mut rows: Vec<Vec<Rational>> =
            labels.iter().map(|&l| ray_vector_rational(n, l)).collect();
        let mut rhs: Vec<Rational> = labels.iter().map(|&l| f.get(l).clone()).collect();
        rows.push(vec![Rational::one(); n]);
        rhs.push(Rational::zero());
        let point = linalg::solve_linear(&rows, &rhs)
            .expect("facet rays are independent, the tight system is regular");
        // strict slack at every non-incident ray
        for &label in &present {
            if labels.contains(&label) {
                continue;
            }
            let ray = ray_vector_rational(n, label);
            let value: Rational = ray.iter().zip(&point).map(|(a, b)| a * b).sum();
            assert!(
                value < *f.get(label),
                "tight at a ray outside the facet cone: {label} at facet {tau:?}"
            );
        }
        if let Some(previous) = seen.insert(point.clone(), *tau) {
            return Err(Error::Degenerate(format!(
                "facets {previous:?} and {tau:?} share the vertex"
            )));
        }
        vertices.push(RealizedVertex {
            facet: *tau,
            point: RationalVector::new(point),
        });
    }
    Ok(Realization { vertices })
}
