mod common;

use common::{connected_corpus, random_connected};
use ecc_spectra::ecc::{ecc_wiener, eccentricity_matrix, is_ecc_regular, is_irreducible, pattern_irreducible};
use ecc_spectra::graph::{all_pairs_distances, eccentricities, generate, Graph, GraphKind};
use ecc_spectra::spectral::{energy, spectral_radius, DEFAULT_EIG_TOL};
use ecc_spectra::Error;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..11, 0.0f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_connected(&mut rng, n, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matrix_follows_definition(g in graph_strategy()) {
        let m = eccentricity_matrix(&g).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        let e = eccentricities(&d);
        for i in 0..g.n() {
            prop_assert_eq!(m.get(i, i), 0);
            let mut row_nonzero = false;
            for j in 0..g.n() {
                let dij = d.get(i, j);
                let keep = i != j && dij == e.e[i].min(e.e[j]);
                prop_assert_eq!(m.get(i, j), if keep { dij } else { 0 });
                prop_assert_eq!(m.get(i, j), m.get(j, i));
                row_nonzero |= m.get(i, j) != 0;
            }
            // a farthest vertex from i is always kept
            prop_assert!(row_nonzero);
        }
    }

    #[test]
    fn spectrum_sums_to_zero_and_bounds_radius(g in graph_strategy()) {
        let m = eccentricity_matrix(&g).unwrap();
        let s = m.spectrum(DEFAULT_EIG_TOL).unwrap();
        let scale = (m.frobenius_sq() as f64).sqrt();
        prop_assert!(s.eigenvalues.iter().sum::<f64>().abs() <= 1e-9 * scale.max(1.0));
        prop_assert!((s.eigenvalues.iter().map(|x| x * x).sum::<f64>() - m.frobenius_sq() as f64).abs() <= 1e-8 * scale * scale);
        let w = ecc_wiener(&m);
        prop_assert_eq!(w * 2, Ratio::from_integer(m.row_sums().iter().sum::<u64>() as i64));
        let rho = spectral_radius(&s);
        let bound = 2.0 * (*w.numer() as f64) / g.n() as f64;
        prop_assert!(rho >= bound - 1e-9);
        prop_assert!(energy(&s) >= 2.0 * rho - 1e-9);
    }

    #[test]
    fn relabeling_preserves_spectrum(g in graph_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        let a = eccentricity_matrix(&g).unwrap().spectrum(DEFAULT_EIG_TOL).unwrap();
        let b = eccentricity_matrix(&h).unwrap().spectrum(DEFAULT_EIG_TOL).unwrap();
        prop_assert!(ecc_spectra::spectral::max_deviation(&a.eigenvalues, &b.eigenvalues).unwrap() < 1e-9);
        prop_assert_eq!(ecc_wiener(&eccentricity_matrix(&g).unwrap()), ecc_wiener(&eccentricity_matrix(&h).unwrap()));
    }

    #[test]
    fn irreducibility_tests_agree(g in graph_strategy()) {
        prop_assert_eq!(is_irreducible(&g).unwrap(), pattern_irreducible(&eccentricity_matrix(&g).unwrap()));
    }
}

#[test]
fn radius_bound_equality_exactly_on_ecc_regular_graphs() {
    for g in connected_corpus(7).into_iter().filter(|g| g.n() >= 2) {
        let m = eccentricity_matrix(&g).unwrap();
        let s = m.spectrum(DEFAULT_EIG_TOL).unwrap();
        let w = ecc_wiener(&m);
        let bound = 2.0 * (*w.numer() as f64) / (*w.denom() as f64) / g.n() as f64;
        let rho = spectral_radius(&s);
        assert!(rho >= bound - 1e-9, "{}", g.descriptor());
        let equal = (rho - bound).abs() <= 1e-9;
        assert_eq!(equal, is_ecc_regular(&m).is_some(), "{}", g.descriptor());
    }
}

#[test]
fn petersen_matrix() {
    let m = eccentricity_matrix(&generate(GraphKind::Petersen).unwrap()).unwrap();
    assert_eq!(is_ecc_regular(&m), Some(12));
    assert_eq!(ecc_wiener(&m), Ratio::from_integer(60));
}

#[test]
fn small_and_disconnected_inputs_are_rejected() {
    assert!(matches!(eccentricity_matrix(&generate(GraphKind::Complete(1)).unwrap()), Err(Error::TooSmall { .. })));
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(eccentricity_matrix(&g), Err(Error::Disconnected { .. })));
}

#[test]
fn path_and_star_values() {
    // P4: e = (3,2,2,3); kept pairs are (0,3) at distance 3 and (0,2), (1,3) at distance 2
    let m = eccentricity_matrix(&generate(GraphKind::Path(4)).unwrap()).unwrap();
    assert_eq!(m.to_rows(), vec![vec![0, 0, 2, 3], vec![0, 0, 0, 2], vec![2, 0, 0, 0], vec![3, 2, 0, 0]]);
    // K_{1,4}: leaves at distance 2 from each other, center at 1
    let s = eccentricity_matrix(&generate(GraphKind::Star(5)).unwrap()).unwrap();
    assert_eq!(ecc_wiener(&s), Ratio::from_integer(16));
}
