use critnum::{CritSet, HalfInt};
use critnum_cli::{LanglandsInput, PairInputDocument, ParamInput, WeightInput};
use proptest::prelude::*;

fn side() -> impl Strategy<Value = ParamInput> {
    prop_oneof![
        (
            prop::option::of(1usize..8),
            -50i64..50,
            prop::collection::vec(-50i64..50, 0..8),
            0i64..2
        )
            .prop_map(|(n, w, l, delta)| ParamInput::Langlands(LanglandsInput {
                n,
                w,
                l,
                delta
            })),
        (prop::collection::vec(-50i64..50, 1..8), -3i64..3)
            .prop_map(|(mu, delta)| ParamInput::Weight(WeightInput { mu, delta })),
    ]
}

proptest! {
    #[test]
    fn pair_documents_round_trip(pi in side(), sigma in side()) {
        let doc = PairInputDocument { pi, sigma };
        let text = serde_json::to_string(&doc).unwrap();
        let back: PairInputDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn crit_sets_round_trip(odd in any::<bool>(), values in prop::collection::btree_set(-100i64..100, 0..10)) {
        let offset = if odd { HalfInt::HALF } else { HalfInt::ZERO };
        let set = CritSet::from_values(offset, values.iter().map(|&v| offset + v));
        let text = serde_json::to_string(&set).unwrap();
        let back: CritSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        if !set.is_empty() {
            prop_assert_eq!(back, set);
        }
    }
}
