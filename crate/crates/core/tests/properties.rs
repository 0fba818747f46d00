use proptest::prelude::*;

use permdiag::diagram::{build_diagram, permutation_from_diagram, stat_a_via_diagram};
use permdiag::dyck::{tunnels, DyckPath, Step};
use permdiag::involution::{decompose, phi, reconstruct};
use permdiag::perm::stat;
use permdiag::{PatternClass, Permutation};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::new(w).unwrap())
    })
}

/// Random Dyck path built from a random U/D balance sequence.
fn dyck_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (1..=max_n).prop_flat_map(|n| {
        let mut word = vec![Step::U; n];
        word.extend(vec![Step::D; n]);
        Just(word).prop_shuffle().prop_map(|mut w| {
            // cyclic shift after the lowest prefix minimum gives a Dyck path
            let mut h = 0i64;
            let mut low = (0i64, 0usize);
            for (x, s) in w.iter().enumerate() {
                h += if *s == Step::U { 1 } else { -1 };
                if h < low.0 {
                    low = (h, x + 1);
                }
            }
            w.rotate_left(low.1);
            DyckPath::new(w).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn phi_is_an_involution_exchanging_the_statistics(pi in permutation(12), m in 2usize..8) {
        let sigma = phi(&pi, m).unwrap();
        prop_assert_eq!(&phi(&sigma, m).unwrap(), &pi);
        prop_assert_eq!(stat(&pi, PatternClass::a(m).unwrap()), stat(&sigma, PatternClass::b(m).unwrap()));
        prop_assert_eq!(stat(&pi, PatternClass::b(m).unwrap()), stat(&sigma, PatternClass::a(m).unwrap()));
    }

    #[test]
    fn partial_data_determines_the_permutation(pi in permutation(12), m in 2usize..8) {
        prop_assert_eq!(reconstruct(&decompose(&pi, m).unwrap()).unwrap(), pi);
    }

    #[test]
    fn diagram_round_trip_and_rank_count(pi in permutation(12), m in 2usize..8) {
        let d = build_diagram(&pi);
        prop_assert_eq!(stat_a_via_diagram(&d, m), stat(&pi, PatternClass::a(m).unwrap()));
        prop_assert_eq!(permutation_from_diagram(pi.len(), &d.cells()).unwrap(), pi);
    }

    #[test]
    fn text_form_round_trips(pi in permutation(15)) {
        prop_assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi.clone());
        prop_assert_eq!(pi.to_string().replace(' ', ",").parse::<Permutation>().unwrap(), pi);
    }

    #[test]
    fn one_tunnel_per_up_step(d in dyck_path(20)) {
        let ts = tunnels(&d);
        prop_assert_eq!(ts.len(), d.semilength());
        prop_assert!(ts.iter().all(|t| t.length() % 2 == 0 && t.length() >= 2));
        prop_assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d);
    }
}
