//! Words in the standard generators of the free fundamental group of the
//! punctured disk, with free reduction, inversion and homomorphic
//! substitution.

use crate::error::{Error, Result};
use std::fmt;

/// Exponent of a generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One letter of a free-group word: a standard generator raised to +-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FGLetter {
    index: usize,
    sign: Sign,
}

impl FGLetter {
    /// Builds the letter for generator `index` (1-based) with the given sign.
    /// Range against the ambient count is checked by [`FGWord`].
    pub fn new(index: usize, sign: Sign) -> FGLetter {
        debug_assert!(index >= 1);
        FGLetter { index, sign }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> FGLetter {
        FGLetter { index: self.index, sign: self.sign.flip() }
    }

    /// True when the two letters cancel as an adjacent pair.
    pub fn cancels(self, other: FGLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for FGLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "+{}", self.index),
            Sign::Minus => write!(f, "-{}", self.index),
        }
    }
}

/// A word over the generators of the free group on `n` generators.
///
/// The empty word is the identity. Words remember their ambient `n` and
/// operations across different ambients are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FGWord {
    letters: Vec<FGLetter>,
    n: usize,
}

impl FGWord {
    /// The identity of the free group on `n` generators.
    pub fn identity(n: usize) -> FGWord {
        FGWord { letters: Vec::new(), n }
    }

    /// The single-letter word for generator `index`.
    pub fn generator(n: usize, index: usize) -> Result<FGWord> {
        Self::from_letters(n, vec![FGLetter::new(index, Sign::Plus)])
    }

    pub fn from_letters(n: usize, letters: Vec<FGLetter>) -> Result<FGWord> {
        for l in &letters {
            if l.index < 1 || l.index > n {
                return Err(Error::GeneratorOutOfRange { index: l.index, n });
            }
        }
        Ok(FGWord { letters, n })
    }

    /// Convenience constructor from signed indices, `-3` meaning the inverse
    /// of generator 3. Zero is rejected.
    pub fn from_signed(n: usize, signed: &[i64]) -> Result<FGWord> {
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            if s == 0 {
                return Err(Error::Parse("generator index 0 is not allowed".into()));
            }
            let sign = if s > 0 { Sign::Plus } else { Sign::Minus };
            letters.push(FGLetter::new(s.unsigned_abs() as usize, sign));
        }
        Self::from_letters(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[FGLetter] {
        &self.letters
    }

    /// True iff no adjacent pair cancels.
    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// The unique freely reduced word equal to `self`, via a single stack
    /// scan: push each letter, pop when it cancels against the top.
    pub fn freely_reduce(&self) -> FGWord {
        let mut stack = CancelStack::with_capacity(self.letters.len());
        for &l in &self.letters {
            stack.push(l);
        }
        FGWord { letters: stack.into_letters(), n: self.n }
    }

    /// The group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> FGWord {
        FGWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            n: self.n,
        }
    }

    /// Plain concatenation; no reduction is performed.
    pub fn concat(&self, other: &FGWord) -> Result<FGWord> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(FGWord { letters, n: self.n })
    }

    /// Homomorphic image of `self` under generator `j` -> `images[j-1]`,
    /// freely reduced before returning.
    pub fn substitute(&self, images: &[FGWord]) -> Result<FGWord> {
        if images.len() != self.n {
            return Err(Error::ImageArity { expected: self.n, got: images.len() });
        }
        let out_n = images.first().map_or(self.n, |w| w.n);
        for img in images {
            if img.n != out_n {
                return Err(Error::AmbientMismatch { left: out_n, right: img.n });
            }
        }
        let mut stack = CancelStack::with_capacity(self.letters.len());
        for &l in &self.letters {
            let image = &images[l.index - 1];
            match l.sign {
                Sign::Plus => {
                    for &m in image.letters() {
                        stack.push(m);
                    }
                }
                Sign::Minus => {
                    for &m in image.letters().iter().rev() {
                        stack.push(m.inverse());
                    }
                }
            }
        }
        Ok(FGWord { letters: stack.into_letters(), n: out_n })
    }

    /// Recognizes words written as `Q^-1 g Q`: odd length, the last k
    /// letters mirroring the first k. Returns the conjugator `Q` (the last
    /// k letters) and the core letter, or `None` for anything else.
    pub fn conjugate_shape(&self) -> Option<ConjugateShape> {
        let len = self.letters.len();
        if len % 2 == 0 {
            return None;
        }
        let k = len / 2;
        for t in 0..k {
            if self.letters[len - 1 - t] != self.letters[t].inverse() {
                return None;
            }
        }
        Some(ConjugateShape {
            conjugator: FGWord { letters: self.letters[k + 1..].to_vec(), n: self.n },
            core: self.letters[k],
        })
    }

    /// Parses the whitespace-separated signed-integer form, e.g. `"+3 +2 -3"`.
    /// The empty string is the identity.
    pub fn parse(n: usize, text: &str) -> Result<FGWord> {
        let mut signed = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token {tok:?}")))?;
            signed.push(v);
        }
        Self::from_signed(n, &signed)
    }
}

impl fmt::Display for FGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Result of [`FGWord::conjugate_shape`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateShape {
    /// The conjugator `Q` in `Q^-1 g Q`.
    pub conjugator: FGWord,
    /// The core letter `g`.
    pub core: FGLetter,
}

/// Letter stack that cancels an incoming letter against its top.
/// Fully resolves cascading cancellations in one pass.
#[derive(Debug, Default)]
pub(crate) struct CancelStack {
    letters: Vec<FGLetter>,
}

impl CancelStack {
    pub(crate) fn with_capacity(cap: usize) -> CancelStack {
        CancelStack { letters: Vec::with_capacity(cap) }
    }

    pub(crate) fn push(&mut self, l: FGLetter) {
        match self.letters.last() {
            Some(&top) if top.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub(crate) fn push_word(&mut self, w: &FGWord) {
        for &l in w.letters() {
            self.push(l);
        }
    }

    pub(crate) fn push_word_inverse(&mut self, w: &FGWord) {
        for &l in w.letters().iter().rev() {
            self.push(l.inverse());
        }
    }

    pub(crate) fn into_letters(self) -> Vec<FGLetter> {
        self.letters
    }
}
