use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use warpdeg::codes::{dt_to_gauss, parse_dt, parse_gauss};
use warpdeg::error::DiagramError;
use warpdeg::oracle::{profile_bruteforce, random_gauss_code};
use warpdeg::table::{structural_identities, Table};
use warpdeg::warping::{is_monotone, warping_polynomial};
use warpdeg::{profile, summary, warping_degree, OrientedDiagram};

fn gauss(s: &str) -> OrientedDiagram {
    OrientedDiagram::from_gauss(&parse_gauss(s).unwrap())
}

fn dt(s: &str) -> OrientedDiagram {
    OrientedDiagram::from_gauss(&dt_to_gauss(&parse_dt(s).unwrap()).unwrap())
}

fn random(seed: u64, c: usize) -> OrientedDiagram {
    OrientedDiagram::from_gauss(&random_gauss_code(c, &mut ChaCha8Rng::seed_from_u64(seed)))
}

#[test]
fn trefoil() {
    let d = gauss("O1+U2+O3+U1+O2+U3+");
    assert_eq!(d.crossing_count(), 3);
    assert_eq!(profile(&d).degrees(), &[1, 2, 1, 2, 1, 2]);
    assert_eq!(profile(&d.reverse()).multiset(), vec![1, 1, 1, 2, 2, 2]);
    assert_eq!(warping_degree(&d), 1);
    assert!(!is_monotone(&d));
    assert!(is_monotone(&d.change_crossing(1).unwrap()));
    let s = summary(&d).unwrap();
    assert_eq!((s.c, s.d_fwd, s.d_rev, s.e, s.spn), (3, 1, 1, 2, 1));
    assert_eq!(warping_polynomial(&d), vec![0, 3, 3, 0]);
}

#[test]
fn empty_diagram() {
    let d = OrientedDiagram::empty();
    assert_eq!(profile(&d).degrees(), &[0]);
    assert_eq!(warping_degree(&d), 0);
    assert!(is_monotone(&d));
    assert_eq!(warping_polynomial(&d), vec![1]);
    assert_eq!(d.change_crossing(1), Err(DiagramError::UnknownCrossing(1)));
}

#[test]
fn figure_eight_and_friends() {
    let d = dt("4 6 8 2");
    assert!(d.is_alternating());
    let s = summary(&d).unwrap();
    assert_eq!((s.d_fwd.min(s.d_rev), s.d_fwd.max(s.d_rev), s.e, s.spn), (1, 2, 3, 1));

    assert!(is_monotone(&gauss("O1 O2 O3 U1 U2 U3")));

    let table = Table::bundled();
    let d = &table.get("8_12").unwrap().minimal_diagrams[0].diagram;
    let s = summary(d).unwrap();
    assert_eq!((s.d_fwd.min(s.d_rev), s.d_fwd.max(s.d_rev), s.e), (3, 4, 7));
}

#[test]
fn alternating_polynomials_have_two_terms() {
    for entry in Table::bundled().entries {
        for d in entry.minimal_diagrams.iter().map(|d| &d.diagram) {
            if d.crossing_count() == 0 || !d.is_alternating() {
                continue;
            }
            let c = d.crossing_count();
            let nonzero: Vec<(usize, usize)> =
                warping_polynomial(d).into_iter().enumerate().filter(|&(_, v)| v != 0).collect();
            assert_eq!(nonzero.len(), 2, "{}", entry.name);
            assert_eq!(nonzero[1].0, nonzero[0].0 + 1);
            assert!(nonzero.iter().all(|&(_, v)| v == c));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn identities_on_random_codes(seed in any::<u64>(), c in 0usize..=10) {
        let d = random(seed, c);
        prop_assert!(structural_identities(&d).is_ok(), "{}", d.to_gauss());
    }

    #[test]
    fn incremental_profile_matches_direct_count(seed in any::<u64>(), c in 0usize..=10) {
        let d = random(seed, c);
        prop_assert_eq!(profile(&d), profile_bruteforce(&d));
    }

    #[test]
    fn reversal_complements_the_profile(seed in any::<u64>(), c in 1usize..=10) {
        let d = random(seed, c);
        let fwd = profile(&d);
        let rev = profile(&d.reverse());
        for a in 0..d.base_point_count() {
            prop_assert_eq!(fwd.degrees()[a] + rev.degrees()[d.reversed_base_point(a)], c);
        }
        prop_assert_eq!(d.reverse().reverse(), d);
    }

    #[test]
    fn mirror_swaps_the_orientations(seed in any::<u64>(), c in 0usize..=10) {
        let d = random(seed, c);
        let s = summary(&d).unwrap();
        let m = summary(&d.mirror()).unwrap();
        prop_assert_eq!((m.d_fwd, m.d_rev), (s.d_rev, s.d_fwd));
        prop_assert_eq!(m.e, s.e);
        prop_assert_eq!(m.spn, s.spn);
    }

    #[test]
    fn crossing_changes_move_d_by_at_most_one(seed in any::<u64>(), c in 1usize..=10, pick in any::<usize>()) {
        let d = random(seed, c);
        let id = pick % c + 1;
        let changed = d.change_crossing(id).unwrap();
        prop_assert!(warping_degree(&d).abs_diff(warping_degree(&changed)) <= 1);
        let twice = changed.change_crossing(id).unwrap();
        let strands = |x: &OrientedDiagram| x.occurrences().iter().map(|o| o.strand).collect::<Vec<_>>();
        prop_assert_eq!(strands(&twice), strands(&d));
    }
}
