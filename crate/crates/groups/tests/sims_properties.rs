//! Property test: chain order equals brute-force enumeration order for
//! random small generator sets.

use griess_groups::{enumerate_order, Perm, PermGroup};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_order_equals_enumeration(
        degree in 3usize..7,
        seed_gens in proptest::collection::vec(any::<u64>(), 1..4),
    ) {
        // derive permutations deterministically from the seeds
        let gens: Vec<Perm> = seed_gens
            .iter()
            .map(|&s| {
                let mut v: Vec<usize> = (0..degree).collect();
                let mut state = s;
                for i in (1..degree).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let j = (state >> 33) as usize % (i + 1);
                    v.swap(i, j);
                }
                Perm::from_images(v).unwrap()
            })
            .collect();
        let group = PermGroup::from_generators(degree, &gens);
        let brute = enumerate_order(&gens, degree, 10_000).unwrap();
        prop_assert_eq!(group.order(), brute as u128);
    }

    #[test]
    fn generator_words_stay_in_the_group(
        degree in 3usize..7,
        word in proptest::collection::vec(0usize..2, 1..12),
    ) {
        let gens = vec![
            Perm::from_images((0..degree).map(|i| (i + 1) % degree).collect()).unwrap(),
            Perm::from_images({
                let mut v: Vec<usize> = (0..degree).collect();
                v.swap(0, 1);
                v
            }).unwrap(),
        ];
        let group = PermGroup::from_generators(degree, &gens);
        let mut p = Perm::identity(degree);
        for &g in &word {
            p = p.then(&gens[g]);
        }
        prop_assert!(group.contains(&p));
    }
}

#[test]
fn perm_algebra_sanity() {
    let p = Perm::from_images(vec![1, 2, 0]).unwrap();
    assert_eq!(p.order(), 3);
    assert!(p.then(&p.inverse()).is_identity());
    for i in 0..3 {
        assert_eq!(arbitrary_apply(&p, i), p.apply(i));
    }
}

fn arbitrary_apply(p: &Perm, i: usize) -> usize {
    p.apply(i)
}
