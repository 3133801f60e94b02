use localelab::generate::{downset_frame, PosetSeed};
use localelab::maps::{frame_homs, LocalicMap};
use localelab::{ElementSet, FiniteFrame};
use proptest::prelude::*;

/// A random poset on up to five points, as a frame of downsets.
fn frame(max: usize) -> impl Strategy<Value = FiniteFrame> {
    (1..=max)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let k = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), k),
            )
        })
        .prop_map(|(size, pairs, pick)| {
            let covers = pairs
                .into_iter()
                .zip(pick)
                .filter_map(|(p, keep)| keep.then_some(p))
                .collect();
            downset_frame(&PosetSeed { size, covers }).unwrap()
        })
}

fn frame_and_set() -> impl Strategy<Value = (FiniteFrame, ElementSet)> {
    frame(5).prop_flat_map(|f| {
        let n = f.len();
        (
            Just(f),
            any::<u128>()
                .prop_map(move |b| ElementSet::from_bits(b).intersection(ElementSet::full(n))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn heyting_is_residual_of_meet(f in frame(5)) {
        prop_assert!(f.adjunction_violation().is_none());
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    prop_assert_eq!(
                        f.meet(a, f.join(b, c)),
                        f.join(f.meet(a, b), f.meet(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn generated_sublocale_has_a_nucleus((f, set) in frame_and_set()) {
        let s = f.generated_sublocale(set);
        prop_assert!(f.is_sublocale_set(s.members()));
        prop_assert!(set.is_subset(s.members()));
        for a in f.elements() {
            let na = s.nucleus(a);
            prop_assert!(f.leq(a, na));
            prop_assert_eq!(s.nucleus(na), na);
            for b in f.elements() {
                prop_assert_eq!(s.nucleus(f.meet(a, b)), f.meet(na, s.nucleus(b)));
            }
        }
    }

    #[test]
    fn supplement_is_least_cover((f, set) in frame_and_set()) {
        let s = f.generated_sublocale(set);
        let sup = s.supplement();
        prop_assert!(s.join(&sup).is_whole());
        prop_assert_eq!(Some(sup), s.supplement_by_minimality());
    }

    #[test]
    fn closure_and_interior_bracket((f, set) in frame_and_set()) {
        let s = f.generated_sublocale(set);
        let (cl, int) = (s.closure(), s.interior());
        prop_assert!(int.is_subset_of(&s) && s.is_subset_of(&cl));
        prop_assert!(cl.is_closed() && int.is_open());
        prop_assert_eq!(cl.closure(), cl);
        prop_assert_eq!(s.boundary(), cl.intersection(&s.supplement().closure()));
    }

    #[test]
    fn nd_is_the_largest_nowhere_dense(f in frame(5)) {
        let nd = f.nd();
        prop_assert!(nd.is_nowhere_dense());
        prop_assert_eq!(nd, f.nd_by_enumeration().unwrap());
    }

    #[test]
    fn preimage_is_largest_pullback(l in frame(3), m in frame(3), pick in any::<usize>()) {
        let homs = frame_homs(&m, &l);
        prop_assume!(!homs.is_empty());
        let h = homs[pick % homs.len()].clone();
        let f = LocalicMap::from_frame_hom(&l, &m, h).unwrap();
        for t in m.enumerate_sublocales().unwrap() {
            let pre = f.preimage(&t).unwrap();
            prop_assert!(f.image(&pre).unwrap().is_subset_of(&t));
            prop_assert_eq!(pre, f.preimage_by_enumeration(&t).unwrap());
        }
    }
}
