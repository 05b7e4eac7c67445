mod common;

use groupoid_jordan::analysis::{
    abelianization, no_z_retract_sufficient, smith_normal_form, tietze_simplify, AbelianInvariants, IntegerMatrix,
    RetractVerdict,
};
use groupoid_jordan::groupoid::{GroupPresentation, GroupWord, Letter};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::determinantal_invariants;

fn matrix_strategy(max: usize, entry: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-entry..=entry, c), r))
}

fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn presentation_strategy() -> impl Strategy<Value = GroupPresentation> {
    let letter = (0usize..4, any::<bool>());
    (
        1usize..=4,
        prop::collection::vec(prop::collection::vec(letter, 0..8), 0..5),
    )
        .prop_map(|(g, rels)| {
            let gens: Vec<String> = (0..g).map(|i| format!("g{i}")).collect();
            let rels = rels
                .into_iter()
                .map(|r| {
                    GroupWord(
                        r.into_iter()
                            .map(|(i, pos)| {
                                let id = &gens[i % g];
                                if pos {
                                    Letter::pos(id)
                                } else {
                                    Letter::neg(id)
                                }
                            })
                            .collect(),
                    )
                })
                .collect();
            GroupPresentation::new(gens, rels).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn snf_matches_determinantal_divisors(rows in matrix_strategy(4, 9)) {
        let d = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        prop_assert_eq!(d, determinantal_invariants(&big(&rows)));
    }

    #[test]
    fn snf_is_a_divisibility_chain(rows in matrix_strategy(6, 30)) {
        let d = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        prop_assert_eq!(d.len(), rows.len().min(rows[0].len()));
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn snf_ignores_row_and_column_order(rows in matrix_strategy(6, 30), s1 in any::<u64>(), s2 in any::<u64>()) {
        let before = smith_normal_form(&IntegerMatrix::from_rows(&rows));
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (s1 as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let m = shuffled[0].len();
        for row in &mut shuffled {
            for j in (1..m).rev() {
                row.swap(j, (s2 as usize).wrapping_mul(j + 3) % (j + 1));
            }
        }
        prop_assert_eq!(smith_normal_form(&IntegerMatrix::from_rows(&shuffled)), before);
    }

    #[test]
    fn huge_entries_fall_back_to_big_integers(rows in matrix_strategy(3, 4), scale in 1i64..4) {
        let s = i64::MAX / 8 * scale / 3;
        let scaled: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&v| v.saturating_mul(s)).collect()).collect();
        let d = smith_normal_form(&IntegerMatrix::from_rows(&scaled));
        prop_assert_eq!(d, determinantal_invariants(&big(&scaled)));
    }

    #[test]
    fn tietze_moves_keep_the_abelianization(p in presentation_strategy(), budget in 0usize..20) {
        prop_assert_eq!(abelianization(&tietze_simplify(&p, budget)), abelianization(&p));
    }

    #[test]
    fn retract_test_is_one_sided(p in presentation_strategy()) {
        if abelianization(&p).free_rank >= 1 {
            prop_assert_eq!(no_z_retract_sufficient(&p), RetractVerdict::Inconclusive);
        }
    }

    #[test]
    fn free_presentations(k in 0usize..8) {
        let gens: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        prop_assert_eq!(abelianization(&GroupPresentation::free(gens).unwrap()), AbelianInvariants::free(k));
    }
}
