//! Law-level properties: free-group identities, codec round-trips, braid
//! move algebra, pipeline agreement, and the multiplication homomorphism.

use gbase::braid::{
    multiply, process_word_geometric, process_word_syntactic, words_equal, BraidLetter,
    BraidWord, SyntacticGBase,
};
use gbase::free_words::{FGLetter, FGWord, Sign};
use gbase::oracle::{artin_oracle, perm_of};
use gbase::path_codec::{path_to_syntactic, reduce_path, syntactic_to_path};
use proptest::prelude::*;

fn sign_of(b: bool) -> Sign {
    if b {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Arbitrary word, unconstrained: may be freely reducible.
fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = FGWord> {
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len).prop_map(move |raw| {
        let letters = raw.into_iter().map(|(i, s)| FGLetter::new(i, sign_of(s))).collect();
        FGWord::from_letters(n, letters).unwrap()
    })
}

/// Freely reduced conjugate `Q^-1 g Q` with positive core: raw letters are
/// repaired by dropping anything that would cancel, so shrinking stays
/// inside the domain.
fn arb_reduced_conjugate(n: usize, max_k: usize) -> impl Strategy<Value = FGWord> {
    (1..=n, prop::collection::vec((1..=n, any::<bool>()), 0..=max_k)).prop_map(
        move |(core, raw)| {
            let mut q: Vec<FGLetter> = Vec::new();
            for (i, s) in raw {
                let candidate = FGLetter::new(i, sign_of(s));
                let ok = match q.last() {
                    None => candidate.index() != core,
                    Some(&prev) => !candidate.cancels(prev),
                };
                if ok {
                    q.push(candidate);
                }
            }
            let mut letters: Vec<FGLetter> = q.iter().rev().map(|l| l.inverse()).collect();
            letters.push(FGLetter::new(core, Sign::Plus));
            letters.extend_from_slice(&q);
            FGWord::from_letters(n, letters).unwrap()
        },
    )
}

/// Conjugate-shaped but possibly unreduced: the conjugator may start at
/// the core and may itself be reducible.
fn arb_raw_conjugate(n: usize, max_k: usize) -> impl Strategy<Value = FGWord> {
    (1..=n, prop::collection::vec((1..=n, any::<bool>()), 0..=max_k)).prop_map(
        move |(core, raw)| {
            let q: Vec<FGLetter> =
                raw.into_iter().map(|(i, s)| FGLetter::new(i, sign_of(s))).collect();
            let mut letters: Vec<FGLetter> = q.iter().rev().map(|l| l.inverse()).collect();
            letters.push(FGLetter::new(core, Sign::Plus));
            letters.extend_from_slice(&q);
            FGWord::from_letters(n, letters).unwrap()
        },
    )
}

fn arb_braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n.max(2), any::<bool>()), 0..=max_len).prop_map(move |raw| {
        let letters = raw.into_iter().map(|(i, s)| BraidLetter::new(i, sign_of(s))).collect();
        BraidWord::from_letters(n, letters).unwrap()
    })
}

fn arb_images(n: usize, max_len: usize) -> impl Strategy<Value = Vec<FGWord>> {
    prop::collection::vec(arb_word(n, max_len), n..=n)
}

proptest! {
    #[test]
    fn free_reduce_idempotent_and_shrinking(w in arb_word(4, 24)) {
        let once = w.freely_reduce();
        prop_assert!(once.is_reduced());
        prop_assert!(once.len() <= w.len());
        prop_assert_eq!(once.freely_reduce(), once);
    }

    #[test]
    fn reduction_invisible_to_substitution(w in arb_word(3, 16), images in arb_images(3, 6)) {
        let direct = w.substitute(&images).unwrap();
        let reduced_first = w.freely_reduce().substitute(&images).unwrap();
        prop_assert_eq!(direct, reduced_first);
    }

    #[test]
    fn substitution_is_a_homomorphism(
        a in arb_word(3, 12),
        b in arb_word(3, 12),
        images in arb_images(3, 6),
    ) {
        let joint = a.concat(&b).unwrap().substitute(&images).unwrap();
        let split = a
            .substitute(&images)
            .unwrap()
            .concat(&b.substitute(&images).unwrap())
            .unwrap()
            .freely_reduce();
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn conjugate_shape_recovers_exactly(w in arb_reduced_conjugate(4, 10)) {
        let shape = w.conjugate_shape().unwrap();
        let k = w.len() / 2;
        prop_assert_eq!(shape.conjugator.letters(), &w.letters()[k + 1..]);
        prop_assert_eq!(shape.core, w.letters()[k]);
    }

    #[test]
    fn reduction_preserves_conjugate_shape(w in arb_raw_conjugate(4, 10)) {
        let core = w.conjugate_shape().unwrap().core;
        let reduced = w.freely_reduce();
        let shape = reduced.conjugate_shape().unwrap();
        prop_assert_eq!(shape.core.index(), core.index());
        prop_assert_eq!(shape.core.sign(), core.sign());
    }

    #[test]
    fn round_trip_word_to_path_to_word(w in arb_reduced_conjugate(5, 12)) {
        let path = syntactic_to_path(&w).unwrap();
        prop_assert!(path.validate().is_empty());
        prop_assert_eq!(path.terminal_point(), w.conjugate_shape().unwrap().core.index());
        prop_assert_eq!(path_to_syntactic(&path).unwrap(), w);
    }

    #[test]
    fn round_trip_path_to_word_to_path(w in arb_reduced_conjugate(5, 12)) {
        // Canonical paths are exactly the images of reduced conjugates.
        let path = syntactic_to_path(&w).unwrap();
        let read = path_to_syntactic(&path).unwrap();
        prop_assert!(read.is_reduced());
        prop_assert!(read.len() <= 2 * path.len() - 1);
        prop_assert_eq!(syntactic_to_path(&read).unwrap(), path);
    }

    #[test]
    fn reduce_path_is_idempotent_on_braid_images(w in arb_braid(4, 14)) {
        for path in process_word_geometric(&w).paths() {
            let once = reduce_path(path).unwrap();
            prop_assert_eq!(&once, path);
            prop_assert_eq!(reduce_path(&once).unwrap(), once);
        }
    }

    #[test]
    fn braid_moves_invert(w in arb_braid(5, 10), i in 1usize..5, flip in any::<bool>()) {
        let gbase = process_word_syntactic(&w);
        let (first, second) = if flip { (Sign::Plus, Sign::Minus) } else { (Sign::Minus, Sign::Plus) };
        let back = gbase.braid_move(i, first).unwrap().braid_move(i, second).unwrap();
        prop_assert_eq!(back, gbase);
    }

    #[test]
    fn pipelines_agree_elementwise(w in arb_braid(4, 12)) {
        let syn = process_word_syntactic(&w);
        let geo = process_word_geometric(&w);
        for (path, word) in geo.paths().iter().zip(syn.elements()) {
            prop_assert_eq!(&path_to_syntactic(path).unwrap(), word);
        }
    }

    #[test]
    fn oracle_agrees_with_moves(w in arb_braid(4, 12)) {
        let moved = process_word_syntactic(&w);
        prop_assert_eq!(artin_oracle(&w), moved.elements());
    }

    #[test]
    fn oracle_cores_follow_the_permutation(w in arb_braid(5, 12)) {
        let cores: Vec<usize> = artin_oracle(&w)
            .iter()
            .map(|e| e.conjugate_shape().unwrap().core.index())
            .collect();
        prop_assert_eq!(&cores, perm_of(&w).images());
        prop_assert_eq!(&process_word_syntactic(&w).cores(), perm_of(&w).images());
    }

    #[test]
    fn trivial_insertion_never_changes_verdicts(
        w1 in arb_braid(4, 8),
        w2 in arb_braid(4, 8),
        i in 1usize..4,
        at_frac in 0.0f64..1.0,
        against_self in any::<bool>(),
    ) {
        let other = if against_self { w1.clone() } else { w2.clone() };
        let at = ((w1.len() as f64) * at_frac) as usize;
        let mut letters = w1.letters().to_vec();
        letters.insert(at, BraidLetter::new(i, Sign::Minus));
        letters.insert(at, BraidLetter::new(i, Sign::Plus));
        let inserted = BraidWord::from_letters(4, letters).unwrap();
        prop_assert_eq!(
            words_equal(&inserted, &other).unwrap(),
            words_equal(&w1, &other).unwrap()
        );
    }

    #[test]
    fn equal_words_share_their_permutation(w in arb_braid(4, 10), i in 1usize..4, at_frac in 0.0f64..1.0) {
        // Build a word equal by construction, then check the projection.
        let at = ((w.len() as f64) * at_frac) as usize;
        let mut letters = w.letters().to_vec();
        letters.insert(at, BraidLetter::new(i, Sign::Minus));
        letters.insert(at, BraidLetter::new(i, Sign::Plus));
        let equal = BraidWord::from_letters(4, letters).unwrap();
        prop_assert!(words_equal(&w, &equal).unwrap());
        prop_assert_eq!(perm_of(&w), perm_of(&equal));
    }

    #[test]
    fn multiply_is_the_word_homomorphism(w1 in arb_braid(4, 8), w2 in arb_braid(4, 8)) {
        let product = multiply(
            &process_word_geometric(&w1),
            &process_word_geometric(&w2),
        ).unwrap();
        prop_assert_eq!(product, process_word_geometric(&w1.concat(&w2).unwrap()));
    }

    #[test]
    fn inverse_words_cancel(w in arb_braid(4, 10)) {
        let id = BraidWord::identity(4);
        prop_assert!(words_equal(&w.concat(&w.inverse()).unwrap(), &id).unwrap());
    }

    #[test]
    fn processed_gbases_stay_well_formed(w in arb_braid(5, 12)) {
        let gbase = process_word_syntactic(&w);
        prop_assert!(SyntacticGBase::new(gbase.elements().to_vec()).is_ok());
    }
}
