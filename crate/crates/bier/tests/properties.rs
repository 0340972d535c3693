//! Cross-module property suites: duality, transversality, volume identities,
//! fan membership laws and Minkowski functional identities on random inputs.

use num::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bier::linalg::{rat, rat_int, Rational};
use bier::polytopality::{self, HeightVector};
use bier::{fan, geometry, sphere};
use bier::{Circuit, FaceSet, GroundSet, RationalVector, SimplicialComplex, WeightVector};

fn ground(n: usize) -> GroundSet {
    GroundSet::new(n).unwrap()
}

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2usize..=max_n).prop_flat_map(|n| {
        let full = (1u32 << n) - 1;
        proptest::collection::vec(0..full, 0..=n + 2).prop_map(move |masks| {
            let facets: Vec<FaceSet> = masks.into_iter().map(FaceSet::from_bits).collect();
            SimplicialComplex::from_facets(ground(n), &facets).expect("proper by construction")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(k in arb_complex(7)) {
        prop_assert_eq!(k.alexander_dual().alexander_dual(), k);
    }

    #[test]
    fn transversality(k in arb_complex(5)) {
        // X ∉ K and Y ∉ K° imply X ∩ Y ≠ ∅, exhaustively for n ≤ 5
        let dual = k.alexander_dual();
        let g = k.ground();
        for x in g.subsets() {
            if k.contains(x) {
                continue;
            }
            for y in g.subsets() {
                if !dual.contains(y) && x.is_disjoint(y) {
                    prop_assert!(false, "disjoint non-faces {} and {}", x, y);
                }
            }
        }
    }

    #[test]
    fn m_vector_counts_boundary_pairs(k in arb_complex(7)) {
        let mut boundary_pairs = 0u64;
        let g = k.ground();
        for a in k.faces() {
            for c in g.vertices() {
                if !a.contains(c) && !k.contains(a.insert(c)) {
                    boundary_pairs += 1;
                }
            }
        }
        prop_assert_eq!(k.m_vector().iter().sum::<u64>(), boundary_pairs);
        prop_assert_eq!(sphere::facets(&k).len() as u64, boundary_pairs);
    }

    #[test]
    fn euler_characteristic(k in arb_complex(7)) {
        let f = sphere::f_vector(&k).unwrap();
        let chi: i64 = f.iter().enumerate().map(|(i, &c)| (-1i64).pow(i as u32) * c as i64).sum();
        let expected = 1 + if k.n() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(chi, expected);
        // the top entry is the facet count
        prop_assert_eq!(*f.last().unwrap(), sphere::facets(&k).len() as u64);
    }

    #[test]
    fn minimal_nonfaces_against_full_subset_scan(k in arb_complex(6)) {
        // oracle: check every proper subset, not only the codimension-one ones
        let g = k.ground();
        let expected: Vec<FaceSet> = g
            .subsets()
            .filter(|&b| {
                !k.contains(b)
                    && b.submasks().into_iter().filter(|&t| t != b).all(|t| k.contains(t))
            })
            .collect();
        prop_assert_eq!(k.minimal_nonfaces(), expected);
    }

    #[test]
    fn balanced_complexes_maximize_volume(k in arb_complex(6)) {
        // any complex is bounded by the balanced count n·C(n−1, ⌈n/2⌉−…);
        // equality characterizes balancedness for even n and the middle
        // skeleton for odd n (checked exactly within the sampled sizes)
        let n = k.n();
        let balanced = SimplicialComplex::skeleton(ground(n), n / 2).map(|s| {
            geometry::normalized_volume(&s)
        });
        if let Ok(bound) = balanced {
            prop_assert!(geometry::normalized_volume(&k) <= bound);
        }
    }
}

#[test]
fn threshold_complexes_are_proper_and_dual_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut produced = 0;
    while produced < 60 {
        let n = rng.gen_range(2..=7);
        let Some(w) = random_generic_weights(&mut rng, n) else {
            continue;
        };
        let k = w.threshold_complex().expect("generic by construction");
        produced += 1;
        // downward closure and properness are enforced structurally; check the
        // complement identity K° = T_{μ<1−ν} independently
        let dual = k.alexander_dual();
        let co_nu = Rational::one() - w.nu();
        for s in k.ground().subsets() {
            let weight = w.measure(s);
            assert_eq!(dual.contains(s), weight < co_nu, "subset {s}");
        }
    }
}

fn random_generic_weights<R: Rng>(rng: &mut R, n: usize) -> Option<WeightVector> {
    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=30)).collect();
    let total: i64 = raw.iter().sum();
    let l: Vec<Rational> = raw.iter().map(|&a| rat(a, total)).collect();
    let nu = rat(rng.gen_range(1..=99), 100);
    let w = WeightVector::new(l, nu).ok()?;
    w.threshold_complex().ok().map(|_| w)
}

#[test]
fn star_membership_is_tie_independent() {
    // points with deliberately tied coordinates sit on shared cone walls;
    // every consistent ascending order must yield the same membership answer
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(3..=5);
        let k = fan::random_complex(&mut rng, ground(n));
        let mut x = fan::random_h0_point(&mut rng, n);
        // force a tie by copying one coordinate onto another, then re-center
        let mut coords = x.coords().to_vec();
        let a = rng.gen_range(0..n);
        let b = (a + 1 + rng.gen_range(0..n - 1)) % n;
        coords[a] = coords[b].clone();
        let mean: Rational = coords.iter().sum::<Rational>() / rat_int(n as i64);
        x = RationalVector::new(coords.into_iter().map(|c| c - &mean).collect());

        let reference = geometry::star_contains(&k, &x).unwrap();
        for idx in 0..fan_factorial(n) {
            let perm = permutation(n, idx);
            if !(1..n).all(|p| x.coord(perm[p - 1]) <= x.coord(perm[p])) {
                continue;
            }
            let tau = fan::facet_of_permutation(&k, &perm).unwrap();
            let apex = tau.apex().unwrap();
            let pivot = x.coord(apex).clone();
            let mut total = Rational::zero();
            for i in tau.a1().vertices() {
                total += &pivot - x.coord(i);
            }
            for j in tau.a2().vertices() {
                total += x.coord(j) - &pivot;
            }
            assert_eq!(total <= Rational::one(), reference, "order {perm:?} at {x}");
        }
    }
}

fn fan_factorial(n: usize) -> usize {
    (1..=n).product()
}

fn permutation(n: usize, mut idx: usize) -> Vec<usize> {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for pos in (0..n).rev() {
        let f = fan_factorial(pos);
        out.push(available.remove(idx / f));
        idx %= f;
    }
    out
}

#[test]
fn star_membership_of_balanced_complexes_is_centrally_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [3usize, 4, 5] {
        let k = SimplicialComplex::skeleton(ground(n), n / 2).unwrap();
        assert!(k.is_balanced());
        for _ in 0..200 {
            let x = fan::random_h0_point(&mut rng, n);
            assert_eq!(
                geometry::star_contains(&k, &x).unwrap(),
                geometry::star_contains(&k, &x.neg()).unwrap()
            );
        }
    }
}

#[test]
fn facet_cones_equal_the_hull_of_their_rays() {
    // x ∈ Cone(τ) ⟺ the unique expansion of x over the facet rays is
    // non-negative, checked on random points
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let n = rng.gen_range(3..=5);
        let k = fan::random_complex(&mut rng, ground(n));
        let delta = Circuit::delta(n).unwrap();
        let facets = sphere::facets(&k);
        let tau = facets[rng.gen_range(0..facets.len())];
        let cone = fan::cone_of_face(&tau);
        let rays = fan::facet_rays(&tau, &delta).unwrap();
        let columns: Vec<Vec<Rational>> = (0..n)
            .map(|row| {
                rays.iter()
                    .map(|r| Rational::from_integer(r[row].clone()))
                    .collect()
            })
            .collect();
        for _ in 0..40 {
            let x = fan::random_h0_point(&mut rng, n);
            let coeffs = bier::linalg::solve_linear(&columns, x.coords());
            let in_hull = match coeffs {
                Some(c) => {
                    // solve_linear returns one solution; rays are independent
                    // and span H_0, so it is the expansion
                    c.iter().all(|v| !v.is_negative())
                }
                None => false,
            };
            assert_eq!(cone.contains(&x).unwrap(), in_hull, "facet {tau:?} at {x}");
        }
        // and every ray generator lies in the cone
        for ray in &rays {
            let v = RationalVector::new(
                ray.iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect(),
            );
            assert!(cone.contains(&v).unwrap());
        }
    }
}

#[test]
fn minkowski_max_identity_and_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in [3usize, 4, 5] {
        let delta = Circuit::delta(n).unwrap();
        for _ in 0..150 {
            let x = fan::random_h0_point(&mut rng, n);
            let m = geometry::minkowski(&delta, &x).unwrap();
            assert_eq!(m.polar, m.delta.clone().max(m.nabla.clone()));
            let in_delta = geometry::simplex_contains(&delta, &x, false).unwrap();
            let in_nabla = geometry::simplex_contains(&delta, &x, true).unwrap();
            assert_eq!(m.delta <= Rational::one(), in_delta);
            assert_eq!(m.nabla <= Rational::one(), in_nabla);
            assert_eq!(m.polar <= Rational::one(), in_delta && in_nabla);
        }
    }
}

#[test]
fn witnesses_form_a_convex_cone() {
    // two distinct hexagon witnesses: the constant one and the solver's
    let mut rng = ChaCha8Rng::seed_from_u64(123);
    let k = SimplicialComplex::skeleton(ground(3), 1).unwrap();
    let ones = HeightVector::constant(3, Rational::one()).unwrap();
    let solved = match polytopality::solve(&k, &Default::default()).unwrap() {
        polytopality::Feasibility::Feasible { witness } => witness,
        _ => panic!("the hexagon fan is polytopal"),
    };
    assert!(polytopality::verify_witness(&k, &ones).unwrap());
    assert_ne!(solved, ones);
    for _ in 0..10 {
        let a = rat(rng.gen_range(1..=9), rng.gen_range(1..=5));
        let b = rat(rng.gen_range(1..=9), rng.gen_range(1..=5));
        let mut combo = HeightVector::constant(3, Rational::zero()).unwrap();
        for i in 1..=3 {
            for label in [
                polytopality::BierVertex::K(i),
                polytopality::BierVertex::Dual(i),
            ] {
                combo.set(label, ones.get(label) * &a + solved.get(label) * &b);
            }
        }
        assert!(polytopality::verify_witness(&k, &combo).unwrap());
    }
}

#[test]
fn facet_preposets_are_star_tree_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..25 {
        let n = rng.gen_range(3..=6);
        let k = fan::random_complex(&mut rng, ground(n));
        for facet in sphere::facets(&k) {
            let preposet = fan::preposet_of_face(&facet);
            assert_eq!(preposet.star_center(), facet.apex(), "facet {facet:?}");
        }
    }
}

#[test]
fn preposet_union_closure_matches_cone_intersection() {
    // transitive closure of ≼_τ ∪ ≼_τ' is the preposet of the intersection face
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let n = rng.gen_range(3..=5);
        let k = fan::random_complex(&mut rng, ground(n));
        let faces = sphere::faces(&k).unwrap();
        for _ in 0..30 {
            let a = faces[rng.gen_range(0..faces.len())];
            let b = faces[rng.gen_range(0..faces.len())];
            let meet = fan::cone_intersection(&a, &b).unwrap();
            let joined = fan::preposet_of_face(&a).union(&fan::preposet_of_face(&b));
            assert_eq!(joined, fan::preposet_of_face(&meet), "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn hexagon_star_is_the_universal_body_omega_3() {
    let k = SimplicialComplex::skeleton(ground(3), 1).unwrap();
    assert!(k.is_balanced());
    let omega = geometry::VkfPolytope::standard(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..500 {
        let x = fan::random_h0_point(&mut rng, 3);
        assert_eq!(
            geometry::star_contains(&k, &x).unwrap(),
            omega.contains(&x).unwrap(),
            "x = {x}"
        );
    }
}

#[test]
fn dual_facet_map_bijects_onto_dual_facets() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..20 {
        let n = rng.gen_range(2..=6);
        let k = fan::random_complex(&mut rng, ground(n));
        let mut mapped: Vec<_> = sphere::dual_facet_map(&k)
            .into_iter()
            .map(|(_, g)| g)
            .collect();
        mapped.sort();
        assert_eq!(mapped, sphere::facets(&k.alexander_dual()));
    }
}
