//! Property tests over randomized inputs.

use num_bigint::BigInt;
use operadix::dg::{
    normalize, random_composite, subset_circ, Ambient, Element,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn composite(seed: u64, steps: usize, ambient: Ambient) -> Element {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_composite(&mut rng, steps, 7, ambient)
}

proptest! {
    /// |S1 o_i S2| = |S1| + |S2| and the result stays within {1..p+q-1}.
    #[test]
    fn subset_composition_cardinality(
        p in 1usize..=8,
        s1_bits in 1u64..256,
        q in 1usize..=6,
        s2_bits in 1u64..64,
        i_raw in 0usize..8,
    ) {
        let s1 = s1_bits & ((1 << p) - 1);
        let s2 = s2_bits & ((1 << q) - 1);
        prop_assume!(s1 != 0 && s2 != 0);
        let slots = p - s1.count_ones() as usize;
        prop_assume!(slots > 0);
        let i = i_raw % slots + 1;
        let (r, out) = subset_circ(s1, p, i, s2, q).unwrap();
        prop_assert_eq!(out.count_ones(), s1.count_ones() + s2.count_ones());
        prop_assert_eq!(out >> (p + q - 1), 0);
        prop_assert!(r >= 1 && r <= s1.count_ones() as usize + 1);
    }

    /// Normalizing the trees of an already-canonical element reproduces
    /// each basis tree with coefficient +1.
    #[test]
    fn normalize_is_idempotent(seed in 0u64..5000, steps in 0usize..5) {
        let e = composite(seed, steps, Ambient::Unital);
        for (t, _) in e.terms() {
            let renorm = normalize(t).unwrap();
            prop_assert_eq!(renorm, Element::from_tree(t.clone()));
        }
    }

    /// Exchange law: (a o_i b) o_j c = (-1)^{|b||c|} (a o_j c) o_{i+|c|-1} b
    /// for j < i on random homogeneous composites.
    #[test]
    fn exchange_law_signed(seed in 0u64..2000) {
        let a = composite(seed.wrapping_mul(3), 3, Ambient::Unital);
        let b = composite(seed.wrapping_mul(3) + 1, 2, Ambient::Unital);
        let c = composite(seed.wrapping_mul(3) + 2, 2, Ambient::Unital);
        prop_assume!(a.arity() >= 2);
        let (i, j) = (a.arity(), 1usize);
        let lhs = a.compose(i, &b).unwrap().compose(j, &c).unwrap();
        let mut rhs = a.compose(j, &c).unwrap().compose(i + c.arity() - 1, &b).unwrap();
        if (b.degree().unwrap() * c.degree().unwrap()) % 2 == 1 {
            rhs = rhs.scale(&BigInt::from(-1));
        }
        prop_assert_eq!(lhs, rhs);
    }
}
