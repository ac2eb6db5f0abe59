//! Braid words, the braid move on g-bases, word processing through both
//! presentations, g-base multiplication and the word-problem decision.

use crate::error::{Error, Result};
use crate::free_words::{CancelStack, FGWord, Sign};
use crate::path_codec::{path_to_syntactic, syntactic_to_path, GBase, PathList};
use std::fmt;

/// One Artin generator occurrence: the half-twist of strands
/// `index`, `index + 1`, possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    index: usize,
    sign: Sign,
}

impl BraidLetter {
    pub fn new(index: usize, sign: Sign) -> BraidLetter {
        debug_assert!(index >= 1);
        BraidLetter { index, sign }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> BraidLetter {
        BraidLetter { index: self.index, sign: self.sign.flip() }
    }

    fn cancels(self, other: BraidLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.index),
            Sign::Minus => write!(f, "-{}", self.index),
        }
    }
}

/// A word in the Artin generators of the braid group on `n` strands.
///
/// Words compare letter by letter; equality in the group is decided by
/// [`words_equal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
    n: usize,
}

impl BraidWord {
    pub fn identity(n: usize) -> BraidWord {
        BraidWord { letters: Vec::new(), n }
    }

    pub fn from_letters(n: usize, letters: Vec<BraidLetter>) -> Result<BraidWord> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        for l in &letters {
            if l.index < 1 || l.index >= n {
                return Err(Error::BraidLetterOutOfRange { index: l.index, max: n - 1, n });
            }
        }
        Ok(BraidWord { letters, n })
    }

    /// Builds a word from signed indices: `k` is the `k`-th generator,
    /// `-k` its inverse.
    pub fn from_signed(n: usize, signed: &[i64]) -> Result<BraidWord> {
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            if s == 0 {
                return Err(Error::Parse("braid letter 0 is not allowed".into()));
            }
            let sign = if s > 0 { Sign::Plus } else { Sign::Minus };
            letters.push(BraidLetter::new(s.unsigned_abs() as usize, sign));
        }
        Self::from_letters(n, letters)
    }

    /// Parses the whitespace-separated signed-integer form, e.g. `"1 -2 1"`.
    /// The empty string is the identity braid.
    pub fn parse(n: usize, text: &str) -> Result<BraidWord> {
        let mut signed = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 =
                tok.parse().map_err(|_| Error::Parse(format!("bad braid token {tok:?}")))?;
            signed.push(v);
        }
        Self::from_signed(n, &signed)
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

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            n: self.n,
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { left: self.n, right: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { letters, n: self.n })
    }

    /// Cancels adjacent generator/inverse pairs, cascading. This touches
    /// only free cancellation, never the braid relations, so the group
    /// element is unchanged.
    pub fn free_cancel(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord { letters: stack, n: self.n }
    }
}

impl fmt::Display for BraidWord {
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

/// The syntactic presentation of a g-base: `n` freely reduced conjugates
/// of standard generators whose cores exhaust the punctures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntacticGBase {
    elements: Vec<FGWord>,
    n: usize,
}

impl SyntacticGBase {
    /// The standard g-base as words: one generator per element.
    pub fn standard(n: usize) -> Result<SyntacticGBase> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        let elements = (1..=n).map(|i| FGWord::generator(n, i)).collect::<Result<_>>()?;
        Ok(SyntacticGBase { elements, n })
    }

    /// Validates reduction, conjugate shape and the core permutation.
    pub fn new(elements: Vec<FGWord>) -> Result<SyntacticGBase> {
        let n = elements.first().map_or(0, |w| w.n());
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        if elements.len() != n {
            return Err(Error::GBaseArity { expected: n, found: elements.len() });
        }
        let mut cores = Vec::with_capacity(n);
        for w in &elements {
            if w.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: w.n() });
            }
            if !w.is_reduced() {
                return Err(Error::NotReduced);
            }
            let shape = w.conjugate_shape().ok_or(Error::NotConjugate)?;
            cores.push(shape.core.index());
        }
        let mut seen = vec![false; n];
        for &c in &cores {
            if seen[c - 1] {
                return Err(Error::NotAPermutation { points: cores.clone(), n });
            }
            seen[c - 1] = true;
        }
        Ok(SyntacticGBase { elements, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[FGWord] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<FGWord> {
        self.elements
    }

    /// Core generator index of each element, in order.
    pub fn cores(&self) -> Vec<usize> {
        self.elements
            .iter()
            .map(|w| w.conjugate_shape().expect("g-base elements are conjugates").core.index())
            .collect()
    }

    /// Sum of the element lengths.
    pub fn total_letters(&self) -> usize {
        self.elements.iter().map(|w| w.len()).sum()
    }

    /// Applies the braid move of the half-twist `index` (or its inverse)
    /// and freely reduces the touched element.
    pub fn braid_move(&self, index: usize, sign: Sign) -> Result<SyntacticGBase> {
        let mut moved = self.clone();
        moved.apply_move(index, sign)?;
        Ok(moved)
    }

    fn apply_move(&mut self, index: usize, sign: Sign) -> Result<()> {
        if index < 1 || index >= self.n {
            return Err(Error::BraidLetterOutOfRange { index, max: self.n.saturating_sub(1), n: self.n });
        }
        let i = index - 1;
        match sign {
            Sign::Plus => {
                // element i+1 becomes the conjugate b a b^-1; element i takes b.
                let conjugated = conjugate(&self.elements[i + 1], &self.elements[i]);
                self.elements.swap(i, i + 1);
                self.elements[i + 1] = conjugated;
            }
            Sign::Minus => {
                // element i becomes a^-1 b a; element i+1 takes a.
                let conjugated = conjugate_inv(&self.elements[i], &self.elements[i + 1]);
                self.elements.swap(i, i + 1);
                self.elements[i] = conjugated;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SyntacticGBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Freely reduced `b a b^-1`, built in one cancelling pass.
fn conjugate(b: &FGWord, a: &FGWord) -> FGWord {
    let mut stack = CancelStack::with_capacity(2 * b.len() + a.len());
    stack.push_word(b);
    stack.push_word(a);
    stack.push_word_inverse(b);
    FGWord::from_letters(b.n(), stack.into_letters()).expect("letters stay in range")
}

/// Freely reduced `a^-1 b a`.
fn conjugate_inv(a: &FGWord, b: &FGWord) -> FGWord {
    let mut stack = CancelStack::with_capacity(2 * a.len() + b.len());
    stack.push_word_inverse(a);
    stack.push_word(b);
    stack.push_word(a);
    FGWord::from_letters(a.n(), stack.into_letters()).expect("letters stay in range")
}

/// Knobs shared by the word-processing pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProcessOptions {
    /// Cancel adjacent generator/inverse pairs of the braid word before
    /// processing. Equality-preserving; benchmarks can switch it off.
    pub pre_cancel: bool,
}

impl Default for ProcessOptions {
    fn default() -> Self {
        ProcessOptions { pre_cancel: true }
    }
}

/// Which presentation carries the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    Syntactic,
    Geometric,
}

/// Runs the braid word over the standard g-base in the syntactic
/// presentation: letters are scanned from the last to the first, each
/// activating its braid move, reducing as it goes.
pub fn process_word_syntactic(word: &BraidWord) -> SyntacticGBase {
    process_word_syntactic_with(word, ProcessOptions::default())
}

pub fn process_word_syntactic_with(word: &BraidWord, opts: ProcessOptions) -> SyntacticGBase {
    let cancelled;
    let word = if opts.pre_cancel {
        cancelled = word.free_cancel();
        &cancelled
    } else {
        word
    };
    let mut gbase = SyntacticGBase::standard(word.n()).expect("word strand count is positive");
    for letter in word.letters().iter().rev() {
        gbase
            .apply_move(letter.index(), letter.sign())
            .expect("braid word letters are in range");
    }
    gbase
}

/// Same scan through the geometric presentation: the g-base is held as
/// paths and, per letter, only the two touched elements pass through the
/// codec for the move.
pub fn process_word_geometric(word: &BraidWord) -> GBase {
    process_word_geometric_with(word, ProcessOptions::default())
}

pub fn process_word_geometric_with(word: &BraidWord, opts: ProcessOptions) -> GBase {
    let cancelled;
    let word = if opts.pre_cancel {
        cancelled = word.free_cancel();
        &cancelled
    } else {
        word
    };
    let n = word.n();
    let mut paths: Vec<PathList> = (1..=n).map(|i| PathList::standard(n, i)).collect();
    for letter in word.letters().iter().rev() {
        let i = letter.index() - 1;
        let a = path_to_syntactic(&paths[i]).expect("g-base paths stay valid");
        let b = path_to_syntactic(&paths[i + 1]).expect("g-base paths stay valid");
        let (new_a, new_b) = match letter.sign() {
            Sign::Plus => {
                let conjugated = conjugate(&b, &a);
                (b, conjugated)
            }
            Sign::Minus => {
                let conjugated = conjugate_inv(&a, &b);
                (conjugated, a)
            }
        };
        paths[i] = syntactic_to_path(&new_a).expect("moved elements stay encodable");
        paths[i + 1] = syntactic_to_path(&new_b).expect("moved elements stay encodable");
    }
    GBase::new(paths).expect("the braid action preserves the g-base shape")
}

/// Multiplies two g-bases given in the geometric presentation: split into
/// paths, read the words, substitute the right factor's words into the
/// left factor's, eliminate cancellations, rebuild the paths.
///
/// With `P` the word-to-g-base map, `multiply(P(w1), P(w2)) = P(w1 w2)`.
pub fn multiply(left: &GBase, right: &GBase) -> Result<GBase> {
    if left.n() != right.n() {
        return Err(Error::StrandMismatch { left: left.n(), right: right.n() });
    }
    let w1: Vec<FGWord> =
        left.paths().iter().map(path_to_syntactic).collect::<Result<_>>()?;
    let w2: Vec<FGWord> =
        right.paths().iter().map(path_to_syntactic).collect::<Result<_>>()?;
    let mut paths = Vec::with_capacity(left.n());
    for w in &w1 {
        let composed = w.substitute(&w2)?;
        paths.push(syntactic_to_path(&composed)?);
    }
    GBase::new(paths)
}

/// Decides the braid word problem: both words act on the standard g-base
/// and the reduced images are compared letter by letter.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    words_equal_with(w1, w2, ProcessOptions::default(), Pipeline::Syntactic)
}

pub fn words_equal_with(
    w1: &BraidWord,
    w2: &BraidWord,
    opts: ProcessOptions,
    pipeline: Pipeline,
) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::StrandMismatch { left: w1.n(), right: w2.n() });
    }
    Ok(match pipeline {
        Pipeline::Syntactic => {
            process_word_syntactic_with(w1, opts) == process_word_syntactic_with(w2, opts)
        }
        Pipeline::Geometric => {
            process_word_geometric_with(w1, opts) == process_word_geometric_with(w2, opts)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(n: usize, signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(n, signed).unwrap()
    }

    fn word(n: usize, signed: &[i64]) -> FGWord {
        FGWord::from_signed(n, signed).unwrap()
    }

    #[test]
    fn braid_parse_format_round_trip() {
        for text in ["1 -2 1", "", "-1 -1 2"] {
            let w = BraidWord::parse(3, text).unwrap();
            assert_eq!(w.to_string(), text);
        }
        assert_eq!(BraidWord::parse(3, "1 -2 1").unwrap(), braid(3, &[1, -2, 1]));
    }

    #[test]
    fn braid_parse_rejects_bad_letters() {
        assert!(matches!(
            BraidWord::parse(3, "3"),
            Err(Error::BraidLetterOutOfRange { index: 3, max: 2, n: 3 })
        ));
        assert!(BraidWord::parse(3, "0").is_err());
        assert!(BraidWord::parse(3, "x").is_err());
        assert!(BraidWord::parse(1, "1").is_err());
    }

    #[test]
    fn free_cancel_cascades() {
        assert_eq!(braid(3, &[1, 2, -2, -1, 2]).free_cancel(), braid(3, &[2]));
        assert_eq!(braid(3, &[1, 1]).free_cancel(), braid(3, &[1, 1]));
    }

    #[test]
    fn braid_move_on_standard_gbase() {
        // The half-twist swaps the two generators, conjugating one.
        for n in 2..=5 {
            for i in 1..n {
                let moved = SyntacticGBase::standard(n).unwrap().braid_move(i, Sign::Plus).unwrap();
                for j in 1..=n {
                    let expect = if j == i {
                        word(n, &[(i + 1) as i64])
                    } else if j == i + 1 {
                        word(n, &[(i + 1) as i64, i as i64, -((i + 1) as i64)])
                    } else {
                        word(n, &[j as i64])
                    };
                    assert_eq!(moved.elements()[j - 1], expect);
                }
            }
        }
    }

    #[test]
    fn inverse_braid_move_on_standard_gbase() {
        let moved = SyntacticGBase::standard(3).unwrap().braid_move(1, Sign::Minus).unwrap();
        assert_eq!(moved.elements()[0], word(3, &[-1, 2, 1]));
        assert_eq!(moved.elements()[1], word(3, &[1]));
        assert_eq!(moved.elements()[2], word(3, &[3]));
        // The positive move sends it back to the standard g-base.
        let back = moved.braid_move(1, Sign::Plus).unwrap();
        assert_eq!(back, SyntacticGBase::standard(3).unwrap());
    }

    #[test]
    fn braid_move_rejects_out_of_range() {
        let g = SyntacticGBase::standard(3).unwrap();
        assert!(g.braid_move(0, Sign::Plus).is_err());
        assert!(g.braid_move(3, Sign::Plus).is_err());
    }

    #[test]
    fn process_empty_word_is_standard() {
        for n in 1..=4 {
            assert_eq!(
                process_word_syntactic(&BraidWord::identity(n)),
                SyntacticGBase::standard(n).unwrap()
            );
        }
    }

    #[test]
    fn process_single_twist() {
        let g = process_word_syntactic(&braid(2, &[1]));
        assert_eq!(g.elements()[0], word(2, &[2]));
        assert_eq!(g.elements()[1], word(2, &[2, 1, -2]));
    }

    #[test]
    fn process_cancelling_word_is_standard() {
        let g = process_word_syntactic(&braid(2, &[1, -1]));
        assert_eq!(g, SyntacticGBase::standard(2).unwrap());
        // The same without pre-cancellation.
        let g = process_word_syntactic_with(&braid(2, &[1, -1]), ProcessOptions { pre_cancel: false });
        assert_eq!(g, SyntacticGBase::standard(2).unwrap());
    }

    #[test]
    fn geometric_matches_syntactic_on_single_twist() {
        let g = process_word_geometric(&braid(2, &[1]));
        assert_eq!(g.paths()[0], PathList::parse(2, "(-1,0),(2,0)").unwrap());
        assert_eq!(g.paths()[1], PathList::parse(2, "(-1,0),(2,1),(1,0)").unwrap());
    }

    #[test]
    fn geometric_empty_word() {
        assert_eq!(process_word_geometric(&BraidWord::identity(3)), GBase::standard(3).unwrap());
    }

    #[test]
    fn multiply_identities() {
        let id = GBase::standard(3).unwrap();
        assert_eq!(multiply(&id, &id).unwrap(), id);
        let g = process_word_geometric(&braid(3, &[1, 2, -1]));
        assert_eq!(multiply(&g, &id).unwrap(), g);
        assert_eq!(multiply(&id, &g).unwrap(), g);
    }

    #[test]
    fn multiply_inverse_pairs() {
        let g = process_word_geometric(&braid(2, &[1]));
        let ginv = process_word_geometric(&braid(2, &[-1]));
        assert_eq!(multiply(&g, &ginv).unwrap(), GBase::standard(2).unwrap());
    }

    #[test]
    fn multiply_matches_concatenation() {
        let w1 = braid(3, &[1]);
        let w2 = braid(3, &[2]);
        let product =
            multiply(&process_word_geometric(&w1), &process_word_geometric(&w2)).unwrap();
        assert_eq!(product, process_word_geometric(&w1.concat(&w2).unwrap()));
    }

    #[test]
    fn multiply_rejects_strand_mismatch() {
        let a = GBase::standard(2).unwrap();
        let b = GBase::standard(3).unwrap();
        assert!(matches!(multiply(&a, &b), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn words_equal_braid_relation() {
        assert!(words_equal(&braid(3, &[1, 2, 1]), &braid(3, &[2, 1, 2])).unwrap());
        assert!(words_equal(&braid(4, &[1, 3]), &braid(4, &[3, 1])).unwrap());
        assert!(!words_equal(&braid(3, &[1]), &braid(3, &[2])).unwrap());
    }

    #[test]
    fn words_equal_rejects_strand_mismatch() {
        assert!(words_equal(&braid(2, &[1]), &braid(3, &[1])).is_err());
    }

    #[test]
    fn verdicts_stable_across_pipelines_and_flags() {
        let pairs = [
            (braid(3, &[1, 2, 1]), braid(3, &[2, 1, 2])),
            (braid(3, &[1, -1, 2]), braid(3, &[2])),
            (braid(3, &[1]), braid(3, &[2])),
        ];
        for (a, b) in &pairs {
            let reference = words_equal(a, b).unwrap();
            for pre_cancel in [false, true] {
                for pipeline in [Pipeline::Syntactic, Pipeline::Geometric] {
                    let got =
                        words_equal_with(a, b, ProcessOptions { pre_cancel }, pipeline).unwrap();
                    assert_eq!(got, reference);
                }
            }
        }
    }
}
