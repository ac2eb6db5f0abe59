//! Seeded random workloads for benchmarks, campaigns and property tests.
//! A fixed seed pins every generated object exactly.

use crate::braid::{BraidLetter, BraidWord};
use crate::free_words::{FGLetter, FGWord, Sign};
use crate::path_codec::{syntactic_to_path, PathList};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.random::<bool>() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Uniform random braid word with `len` letters on `n` strands.
/// On one strand only the empty word exists.
pub fn random_braid_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    assert!(n >= 1);
    if n == 1 {
        return BraidWord::identity(1);
    }
    let letters = (0..len)
        .map(|_| BraidLetter::new(rng.random_range(1..n), random_sign(rng)))
        .collect();
    BraidWord::from_letters(n, letters).expect("letters drawn in range")
}

/// Uniform random freely reduced conjugate `Q^-1 g Q` with a positive core
/// and `conjugator_len` letters in `Q`. Repeated letters are allowed, so
/// the full shape space of g-base elements is exercised.
pub fn random_reduced_conjugate(rng: &mut ChaCha8Rng, n: usize, conjugator_len: usize) -> FGWord {
    assert!(n >= 1);
    let core = rng.random_range(1..=n);
    let k = if n == 1 { 0 } else { conjugator_len };
    let mut q: Vec<FGLetter> = Vec::with_capacity(k);
    for _ in 0..k {
        let letter = loop {
            let candidate = FGLetter::new(rng.random_range(1..=n), random_sign(rng));
            match q.last() {
                // The junctions cancel exactly when Q starts at the core index.
                None if candidate.index() == core => continue,
                Some(&prev) if candidate.cancels(prev) => continue,
                _ => break candidate,
            }
        };
        q.push(letter);
    }
    let mut letters: Vec<FGLetter> = q.iter().rev().map(|l| l.inverse()).collect();
    letters.push(FGLetter::new(core, Sign::Plus));
    letters.extend_from_slice(&q);
    let word = FGWord::from_letters(n, letters).expect("letters drawn in range");
    debug_assert!(word.is_reduced() && word.conjugate_shape().is_some());
    word
}

/// Canonical path of a random reduced conjugate.
pub fn random_canonical_path(rng: &mut ChaCha8Rng, n: usize, conjugator_len: usize) -> PathList {
    let word = random_reduced_conjugate(rng, n, conjugator_len);
    syntactic_to_path(&word).expect("generated words are encodable")
}

/// Campaign draw: strand count uniform in `2..=max_n`, length uniform in
/// `0..=max_len`, then a uniform word.
pub fn random_campaign_word(rng: &mut ChaCha8Rng, max_n: usize, max_len: usize) -> BraidWord {
    let n = rng.random_range(2..=max_n.max(2));
    let len = rng.random_range(0..=max_len);
    random_braid_word(rng, n, len)
}
