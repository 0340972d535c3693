//! Independent-route oracles: each test recomputes a quantity by a
//! different algorithm than the implementation under test and compares
//! exactly on random complexes.

use num::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bier::linalg::{self, rat_int, Rational};
use bier::{fan, geometry, sphere};
use bier::{Circuit, GroundSet, SimplicialComplex};

fn ground(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

/// f-vector by the quadratic scan over all ordered subset pairs, instead of
/// the per-face submask walk used by the implementation.
#[test]
fn f_vector_against_pair_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let k = fan::random_complex(&mut rng, ground(n));
        let g = k.ground();
        let mut expected = vec![0u64; n - 1];
        for a1 in g.subsets() {
            for a2 in g.subsets() {
                if !a1.is_disjoint(a2) || (a1.is_empty() && a2.is_empty()) {
                    continue;
                }
                if k.contains(a1) && !k.contains(a2.complement(g)) {
                    // A1 ∈ K and A2 ∈ K° force a nonempty B
                    assert_ne!(a1.union(a2), g.full(), "duality forbids B = ∅");
                    expected[a1.card() + a2.card() - 1] += 1;
                }
            }
        }
        assert_eq!(sphere::f_vector(&k).unwrap(), expected, "{k:?}");
    }
}

/// Star membership by scanning every facet cone with an exact coefficient
/// solve over the actual `±δ` ray vectors, instead of locating one facet
/// through the sorting permutation.
#[test]
fn star_membership_against_full_facet_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..25 {
        let n = rng.gen_range(3..=5);
        let k = fan::random_complex(&mut rng, ground(n));
        let delta = Circuit::delta(n).unwrap();
        let facets = sphere::facets(&k);
        // columns of the solve: the ray vectors of each facet
        let ray_columns: Vec<Vec<Vec<Rational>>> = facets
            .iter()
            .map(|tau| {
                let mut rays: Vec<Vec<Rational>> = Vec::new();
                for i in tau.a1().vertices() {
                    rays.push(delta.vector(i).neg().coords().to_vec());
                }
                for j in tau.a2().vertices() {
                    rays.push(delta.vector(j).coords().to_vec());
                }
                (0..n)
                    .map(|row| rays.iter().map(|r| r[row].clone()).collect())
                    .collect()
            })
            .collect();
        for _ in 0..60 {
            let x = fan::random_h0_point(&mut rng, n);
            let mut covering = 0usize;
            let mut verdicts: Vec<bool> = Vec::new();
            for cols in &ray_columns {
                let Some(coeffs) = linalg::solve_linear(cols, x.coords()) else {
                    continue;
                };
                if coeffs.iter().any(|c| c.is_negative()) {
                    continue;
                }
                covering += 1;
                verdicts.push(coeffs.iter().sum::<Rational>() <= Rational::one());
            }
            // the fan is complete: some facet cone contains x, and all
            // containing cones agree on membership
            assert!(covering > 0, "no facet cone contains {x}");
            assert!(verdicts.windows(2).all(|w| w[0] == w[1]));
            assert_eq!(
                geometry::star_contains(&k, &x).unwrap(),
                verdicts[0],
                "x = {x} on {k:?}"
            );
        }
    }
}

/// Euclidean volume as the facet-by-facet sum of `√(Gram det)/(n−1)!`,
/// checking on the way that the Gram determinant is the same `1/n` for
/// every facet of every complex.
#[test]
fn euclidean_volume_against_facet_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..25 {
        let n = rng.gen_range(2..=6);
        let k = fan::random_complex(&mut rng, ground(n));
        let delta = Circuit::delta(n).unwrap();
        let facets = sphere::facets(&k);
        let expected_det = linalg::rat(1, n as i64);
        for tau in &facets {
            let mut rays: Vec<Vec<Rational>> = Vec::new();
            for i in tau.a1().vertices() {
                rays.push(delta.vector(i).neg().coords().to_vec());
            }
            for j in tau.a2().vertices() {
                rays.push(delta.vector(j).coords().to_vec());
            }
            let gram: Vec<Vec<Rational>> = rays
                .iter()
                .map(|a| {
                    rays.iter()
                        .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                        .collect()
                })
                .collect();
            assert_eq!(linalg::determinant(&gram), expected_det, "facet {tau:?}");
        }
        // total volume: (#facets)·√(1/n)/(n−1)!; squared comparison stays rational
        let count = rat_int(facets.len() as i64);
        let fact = rat_int((1..n as i64).product::<i64>());
        let total_sq = &count * &count * &expected_det / (&fact * &fact);
        assert_eq!(geometry::euclidean_volume(&k).unwrap().squared(), total_sq);
        assert_eq!(geometry::normalized_volume(&k) as usize, facets.len());
    }
}

/// Alexander duality by complement scan on the full face lists.
#[test]
fn dual_face_lists_are_complement_mirrors() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..30 {
        let n = rng.gen_range(2..=7);
        let k = fan::random_complex(&mut rng, ground(n));
        let dual = k.alexander_dual();
        let g = k.ground();
        for s in g.subsets() {
            assert_eq!(dual.contains(s), !k.contains(s.complement(g)));
        }
        // face counts are complementary: |K| + |K°| = 2^n
        assert_eq!(k.face_count() + dual.face_count(), 1 << n);
    }
}

/// The normalized volume is invariant under relabeling the ground set.
#[test]
fn volume_is_permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let k = fan::random_complex(&mut rng, ground(n));
        let mut relabel: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            relabel.swap(i, rng.gen_range(0..=i));
        }
        let permuted_facets: Vec<bier::FaceSet> = k
            .maximal_faces()
            .into_iter()
            .map(|f| {
                bier::FaceSet::from_vertices(f.vertices().into_iter().map(|v| relabel[v - 1]))
                    .unwrap()
            })
            .collect();
        let permuted = SimplicialComplex::from_facets(ground(n), &permuted_facets).unwrap();
        assert_eq!(
            geometry::normalized_volume(&k),
            geometry::normalized_volume(&permuted)
        );
        assert_eq!(
            sphere::f_vector(&k).unwrap(),
            sphere::f_vector(&permuted).unwrap()
        );
    }
}
