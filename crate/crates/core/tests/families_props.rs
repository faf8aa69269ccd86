//! Family builders and closed forms against the eigensolver, and an
//! independent cross-check of the tree enumeration.

mod util;

use distspec::families::{path_lambda1_approx, solve_tanh_root, FamilySpec};
use distspec::spectra::distance_spectrum;
use distspec::Graph;

/// Largest entrywise deviation between solver and closed-form spectra.
fn solver_deviation(spec: &FamilySpec) -> f64 {
    let computed = distance_spectrum(&spec.build()).unwrap();
    let closed = spec.closed_form_distance_spectrum().unwrap();
    computed
        .values()
        .iter()
        .zip(closed.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

#[test]
fn closed_forms_match_solver() {
    let mut specs = Vec::new();
    for n in 1..=80 {
        specs.push(FamilySpec::complete(n).unwrap());
        if n >= 2 {
            specs.push(FamilySpec::star(n).unwrap());
        }
        if n >= 3 {
            specs.push(FamilySpec::cycle(n).unwrap());
        }
        for r in 1..=n / 2 {
            specs.push(FamilySpec::complete_bipartite(r, n - r).unwrap());
        }
    }
    // Spot checks near the order cap of the acceptance sweep.
    for n in [150, 200] {
        specs.push(FamilySpec::complete(n).unwrap());
        specs.push(FamilySpec::cycle(n).unwrap());
        specs.push(FamilySpec::star(n).unwrap());
        specs.push(FamilySpec::complete_bipartite(n / 2, n - n / 2).unwrap());
        specs.push(FamilySpec::complete_bipartite(1, n - 1).unwrap());
    }
    for spec in &specs {
        let dev = solver_deviation(spec);
        assert!(
            dev < 1e-8,
            "{:?} n = {} deviates by {dev:e}",
            spec.kind(),
            spec.n()
        );
    }
}

/// `S_k(D(K_{r,n-r})) = 2n - 2k` for `2 <= k <= n - 1`, since the two
/// quotient roots sum to `2n - 4` and every other eigenvalue is `-2`.
#[test]
fn bipartite_partial_sums() {
    for n in 3..=30 {
        for r in 1..=n / 2 {
            let g = FamilySpec::complete_bipartite(r, n - r).unwrap().build();
            let spectrum = distance_spectrum(&g).unwrap();
            for k in 2..n {
                let sk = spectrum.sum_top_k(k).unwrap();
                let expected = (2 * n - 2 * k) as f64;
                assert!(
                    (sk - expected).abs() <= 1e-7,
                    "S_{k}(K_{{{r},{}}}) = {sk}, expected {expected}",
                    n - r
                );
            }
        }
    }
}

/// The second eigenvalue of the balanced complete bipartite graph is
/// `n/2 - 2`: exactly from the quotient root, to solver precision from
/// the eigensolver.
#[test]
fn balanced_bipartite_second_eigenvalue() {
    for half in 1..=100 {
        let spec = FamilySpec::complete_bipartite(half, half).unwrap();
        let closed = spec.closed_form_distance_spectrum().unwrap();
        let expected = half as f64 - 2.0;
        assert_eq!(
            closed.lambda(2),
            expected,
            "quotient root at n = {}",
            2 * half
        );
    }
    for half in [2, 7, 20, 50, 100] {
        let spec = FamilySpec::complete_bipartite(half, half).unwrap();
        let solved = distance_spectrum(&spec.build()).unwrap();
        assert!((solved.lambda(2) - (half as f64 - 2.0)).abs() <= 1e-8);
    }
}

/// Exhaustive isomorphism test by degree-guided backtracking; exact for
/// the orders used here.
fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = Vec::with_capacity(a.n());
    let mut used = vec![false; a.n()];
    extend_mapping(a, b, &mut map, &mut used)
}

fn extend_mapping(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = map.len();
    if i == a.n() {
        return true;
    }
    for cand in 0..b.n() {
        if used[cand] || a.degree(i) != b.degree(cand) {
            continue;
        }
        if (0..i).all(|j| a.has_edge(i, j) == b.has_edge(map[j], cand)) {
            map.push(cand);
            used[cand] = true;
            if extend_mapping(a, b, map, used) {
                return true;
            }
            map.pop();
            used[cand] = false;
        }
    }
    false
}

/// Cross-checks the tree enumeration independently of its canonical-form
/// dedup: members with near-identical distance spectra are confirmed
/// non-isomorphic by exhaustive search, and random labeled trees always
/// land on an enumerated member.
#[test]
fn tree_enumeration_cross_check() {
    let mut rng = util::rng(11);
    for (idx, trees) in util::trees_by_order().iter().enumerate() {
        let n = idx + 2;
        let spectra: Vec<Vec<f64>> = trees
            .iter()
            .map(|t| distance_spectrum(t).unwrap().values().to_vec())
            .collect();
        let close = |x: &[f64], y: &[f64]| {
            x.iter()
                .zip(y)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max)
                < 1e-6
        };

        // Irredundance: the list never repeats an isomorphism class.
        for i in 0..trees.len() {
            for j in (i + 1)..trees.len() {
                if close(&spectra[i], &spectra[j]) {
                    assert!(
                        !are_isomorphic(&trees[i], &trees[j]),
                        "duplicate class at n = {n}: members {i} and {j}"
                    );
                }
            }
        }

        // Completeness: arbitrary labeled trees match an enumerated class.
        for _ in 0..100 {
            let t = util::random_tree(&mut rng, n);
            assert!(t.is_tree());
            let spectrum = distance_spectrum(&t).unwrap().values().to_vec();
            let found = trees
                .iter()
                .enumerate()
                .filter(|(i, _)| close(&spectrum, &spectra[*i]))
                .any(|(_, member)| are_isomorphic(&t, member));
            assert!(
                found,
                "random tree on {n} vertices missing from enumeration"
            );
        }
    }
}

/// The asymptotic formula for the largest path eigenvalue converges:
/// absolute error decreases along n = 25, 50, 100, 200.
#[test]
fn path_approximation_converges() {
    let root = solve_tanh_root();
    assert!(root.residual <= 1e-12);
    assert!((root.a - 1.199679).abs() <= 5e-7);

    let errors: Vec<f64> = [25usize, 50, 100, 200]
        .iter()
        .map(|&n| {
            let g = FamilySpec::path(n).unwrap().build();
            let lambda1 = distance_spectrum(&g).unwrap().lambda(1);
            (lambda1 - path_lambda1_approx(n)).abs()
        })
        .collect();
    for pair in errors.windows(2) {
        assert!(pair[1] < pair[0], "errors not decreasing: {errors:?}");
    }
    assert!(errors[3] < 0.01, "error at n = 200 is {}", errors[3]);
}
