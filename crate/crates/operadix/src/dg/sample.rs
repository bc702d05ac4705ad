//! Seeded random sampling of generator labels and canonical composite
//! elements, for randomized verification sweeps.

use super::compose::label_element;
use super::element::Element;
use super::label::{Ambient, GradedLabel};
use super::subset::Subset;
use rand::Rng;

/// A random `nu(n,S)` with `n + |S| <= max_weight` (so `max_weight >= 2`).
pub fn random_nu(rng: &mut impl Rng, max_weight: usize) -> GradedLabel {
    assert!(max_weight >= 2);
    let n = rng.gen_range(1..=max_weight - 1);
    let m = rng.gen_range(1..=n.min(max_weight - n));
    // random m-subset of {1..n}
    let mut s: Subset = 0;
    let mut chosen = 0;
    while chosen < m {
        let j = rng.gen_range(1..=n);
        if s & (1 << (j - 1)) == 0 {
            s |= 1 << (j - 1);
            chosen += 1;
        }
    }
    GradedLabel::Nu { n, s }
}

/// A random generator label: a corolla, the strict unit (unital ambient
/// only), or a `nu` within the weight bound.
pub fn random_label(rng: &mut impl Rng, max_weight: usize, ambient: Ambient) -> GradedLabel {
    match rng.gen_range(0..10) {
        0..=2 => GradedLabel::Mu(rng.gen_range(2..=4)),
        3 if ambient == Ambient::Unital => GradedLabel::U,
        _ => random_nu(rng, max_weight),
    }
}

/// A random canonical composite: a generator element pushed through `steps`
/// random partial compositions with further generator elements.  The result
/// is a single signed basis tree, hence homogeneous.
pub fn random_composite(
    rng: &mut impl Rng,
    steps: usize,
    max_weight: usize,
    ambient: Ambient,
) -> Element {
    let mut acc = label_element(random_label(rng, max_weight, ambient));
    for _ in 0..steps {
        let e = label_element(random_label(rng, max_weight, ambient));
        if acc.arity() > 0 {
            let i = rng.gen_range(1..=acc.arity());
            acc = acc.compose(i, &e).expect("slot is in range");
        } else if e.arity() > 0 {
            let i = rng.gen_range(1..=e.arity());
            acc = e.compose(i, &acc).expect("slot is in range");
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_canonical_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let e = random_composite(&mut rng, 4, 8, Ambient::Unital);
            assert_eq!(e.num_terms(), 1);
            let (t, c) = e.terms().next().unwrap();
            assert!(t.is_canonical(), "{}", t.to_text());
            assert!(c.magnitude().bits() <= 1); // coefficient is +-1
            for lab in t.labels() {
                if let GradedLabel::Nu { n, s } = lab {
                    assert!(n + s.count_ones() as usize <= 8);
                }
            }
        }
    }

    #[test]
    fn nonunital_samples_avoid_u() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let e = random_composite(&mut rng, 3, 6, Ambient::NonUnital);
            assert!(e.allowed_in(Ambient::NonUnital));
        }
    }

    #[test]
    fn seeded_determinism() {
        let draw = || {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            (0..10)
                .map(|_| random_composite(&mut rng, 3, 8, Ambient::Unital))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(), draw());
    }
}
