//! Independent ground truth for differential testing: the braid action
//! computed by global letter replacement scanning the word front to back,
//! plus the symmetric-group shadow of the action.
//!
//! Nothing here goes through the braid-move code path; only the word value
//! type is shared, and reduction is a deliberately naive repeated pass.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_words::{FGLetter, FGWord, Sign};

/// A bijection of `1..=n`, stored as the image tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation { points: images.clone(), n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Image of `i` (1-based).
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }
}

/// Projects a braid word to the permutation it induces on the punctures,
/// sign-insensitive: every letter is the transposition of its two strands,
/// composed in the same order the braid moves are applied.
pub fn perm_of(word: &BraidWord) -> Permutation {
    let mut images: Vec<usize> = (1..=word.n()).collect();
    for letter in word.letters().iter().rev() {
        images.swap(letter.index() - 1, letter.index());
    }
    Permutation { images }
}

/// Computes the g-base of a braid word by the substitution reading: scan
/// the word from the beginning to the end and, for the half-twist `H_i`,
/// replace in every element each `gamma_i` by `gamma_{i+1}` and each
/// `gamma_{i+1}` by `gamma_{i+1} gamma_i gamma_{i+1}^-1`; for the inverse
/// twist, `gamma_{i+1}` by `gamma_i` and `gamma_i` by
/// `gamma_i^-1 gamma_{i+1} gamma_i`. Must agree with the move-based
/// pipeline on every input.
pub fn artin_oracle(word: &BraidWord) -> Vec<FGWord> {
    let n = word.n();
    let mut elements: Vec<Vec<FGLetter>> =
        (1..=n).map(|i| vec![FGLetter::new(i, Sign::Plus)]).collect();
    for letter in word.letters() {
        let i = letter.index();
        let (lower_image, upper_image) = match letter.sign() {
            Sign::Plus => (
                vec![FGLetter::new(i + 1, Sign::Plus)],
                vec![
                    FGLetter::new(i + 1, Sign::Plus),
                    FGLetter::new(i, Sign::Plus),
                    FGLetter::new(i + 1, Sign::Minus),
                ],
            ),
            Sign::Minus => (
                vec![
                    FGLetter::new(i, Sign::Minus),
                    FGLetter::new(i + 1, Sign::Plus),
                    FGLetter::new(i, Sign::Plus),
                ],
                vec![FGLetter::new(i, Sign::Plus)],
            ),
        };
        for element in &mut elements {
            let mut replaced = Vec::with_capacity(element.len());
            for &l in element.iter() {
                let image = if l.index() == i {
                    &lower_image
                } else if l.index() == i + 1 {
                    &upper_image
                } else {
                    replaced.push(l);
                    continue;
                };
                match l.sign() {
                    Sign::Plus => replaced.extend_from_slice(image),
                    Sign::Minus => replaced.extend(image.iter().rev().map(|m| m.inverse())),
                }
            }
            *element = naive_reduce(replaced);
        }
    }
    elements
        .into_iter()
        .map(|letters| FGWord::from_letters(n, letters).expect("images stay in range"))
        .collect()
}

/// Repeated-pass cancellation, kept separate from the single-pass stack
/// reduction it is checked against.
fn naive_reduce(mut letters: Vec<FGLetter>) -> Vec<FGLetter> {
    loop {
        let mut out = Vec::with_capacity(letters.len());
        let mut i = 0;
        let mut changed = false;
        while i < letters.len() {
            if i + 1 < letters.len() && letters[i].cancels(letters[i + 1]) {
                i += 2;
                changed = true;
            } else {
                out.push(letters[i]);
                i += 1;
            }
        }
        letters = out;
        if !changed {
            return letters;
        }
    }
}
