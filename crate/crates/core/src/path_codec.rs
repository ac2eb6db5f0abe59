//! Loop coordinates in the punctured disk: paths encoded as link sequences,
//! their validation, and the two conversions between the geometric and the
//! syntactic presentation of g-base elements.
//!
//! A link `(p,q)` is a waypoint of the loop relative to the punctures:
//! `q = 1` just above puncture `p`, `q = -1` just below, `q = 0` the
//! terminal loop around `p`. The base point is written `(-1,0)`. A path
//! starts at the base point and ends with a terminal link; the serialized
//! form of a whole g-base carries one closing `(-1,0)` at the very end.

use crate::error::{Error, Result};
use crate::free_words::{FGLetter, FGWord, Sign};
use std::fmt;

/// One waypoint of a path: `(point, position)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Link {
    point: i32,
    position: i8,
}

impl Link {
    /// The base point `u`, written `(-1,0)`.
    pub const BASE: Link = Link { point: -1, position: 0 };

    /// Builds a link, rejecting anything outside the encoding: position
    /// must be -1, 0 or 1, the point a puncture index or the -1 sentinel,
    /// and the base point only pairs with position 0.
    pub fn new(point: i32, position: i32) -> Result<Link> {
        let ok = matches!(position, -1 | 0 | 1) && (point >= 1 || (point == -1 && position == 0));
        if !ok {
            return Err(Error::InvalidLink { point, position });
        }
        Ok(Link { point, position: position as i8 })
    }

    pub(crate) fn above(point: i32) -> Link {
        debug_assert!(point >= 1);
        Link { point, position: 1 }
    }

    pub(crate) fn below(point: i32) -> Link {
        debug_assert!(point >= 1);
        Link { point, position: -1 }
    }

    pub(crate) fn stop(point: i32) -> Link {
        debug_assert!(point >= 1);
        Link { point, position: 0 }
    }

    pub fn point(self) -> i32 {
        self.point
    }

    pub fn position(self) -> i32 {
        self.position as i32
    }

    pub fn is_base(self) -> bool {
        self.point == -1
    }

    pub fn is_above(self) -> bool {
        self.position == 1
    }

    pub fn is_below(self) -> bool {
        self.position == -1
    }

    /// Terminal loop around a puncture: position 0 at a real point.
    pub fn is_stop(self) -> bool {
        self.position == 0 && self.point >= 1
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.point, self.position)
    }
}

/// A structural defect found by [`PathList::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending link.
    pub index: usize,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    FirstNotBase,
    LastNotStop,
    /// The base point is never connected to a below-link.
    BaseBeforeBelow,
    /// The base point appears only as the first link of a path.
    InteriorBase,
    /// Terminal links appear only at the end of a path.
    InteriorStop,
    /// Consecutive links may move at most one puncture sideways.
    PointJump { from: i32, to: i32 },
    PointOutOfRange { point: i32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ViolationKind::Empty => "path has no links".to_string(),
            ViolationKind::FirstNotBase => "path must start at the base point (-1,0)".to_string(),
            ViolationKind::LastNotStop => "path must end with a terminal link (p,0)".to_string(),
            ViolationKind::BaseBeforeBelow => "base point connected to a below-link".to_string(),
            ViolationKind::InteriorBase => "base point in the interior of a path".to_string(),
            ViolationKind::InteriorStop => "terminal link before the end of the path".to_string(),
            ViolationKind::PointJump { from, to } => {
                format!("point jump from {from} to {to} exceeds one step")
            }
            ViolationKind::PointOutOfRange { point } => format!("point {point} out of range"),
        };
        write!(f, "link {}: {}", self.index, what)
    }
}

/// A single path of a g-base: links from the base point to a terminal loop.
///
/// The closing `(-1,0)` of the serialized form is not stored; formatting
/// appends it and parsing accepts it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathList {
    links: Vec<Link>,
    n: usize,
}

impl PathList {
    /// Wraps links as a path over `n` punctures. Structural invariants are
    /// reported by [`validate`](Self::validate), not enforced here, so that
    /// malformed paths can be inspected.
    pub fn new(n: usize, links: Vec<Link>) -> PathList {
        PathList { links, n }
    }

    /// The straight standard path `(-1,0) -> (i,0)`.
    pub fn standard(n: usize, i: usize) -> PathList {
        debug_assert!(i >= 1 && i <= n);
        PathList { links: vec![Link::BASE, Link::stop(i as i32)], n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Puncture the path terminates at. Meaningful on valid paths.
    pub fn terminal_point(&self) -> usize {
        self.links.last().map_or(0, |l| l.point.max(0) as usize)
    }

    /// Checks every structural invariant of the encoding and reports all
    /// violations with the index of the offending link.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let links = &self.links;
        if links.is_empty() {
            return vec![Violation { index: 0, kind: ViolationKind::Empty }];
        }
        if links[0] != Link::BASE {
            out.push(Violation { index: 0, kind: ViolationKind::FirstNotBase });
        }
        let last = links.len() - 1;
        if !links[last].is_stop() {
            out.push(Violation { index: last, kind: ViolationKind::LastNotStop });
        }
        for (i, l) in links.iter().enumerate() {
            if l.point >= 1 && l.point as usize > self.n {
                out.push(Violation { index: i, kind: ViolationKind::PointOutOfRange { point: l.point } });
            }
            if i > 0 && l.is_base() {
                out.push(Violation { index: i, kind: ViolationKind::InteriorBase });
            }
            if i < last && l.is_stop() {
                out.push(Violation { index: i, kind: ViolationKind::InteriorStop });
            }
        }
        for (i, w) in links.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if a.is_base() && b.is_below() {
                out.push(Violation { index: i + 1, kind: ViolationKind::BaseBeforeBelow });
            }
            if !a.is_base() && !b.is_base() && (a.point - b.point).abs() > 1 {
                out.push(Violation {
                    index: i + 1,
                    kind: ViolationKind::PointJump { from: a.point, to: b.point },
                });
            }
        }
        out
    }

    fn ensure_valid(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidPath(v)),
        }
    }

    /// Parses the comma-separated `(p,q)` form; whitespace insensitive.
    /// One closing `(-1,0)` is accepted and stripped.
    pub fn parse(n: usize, text: &str) -> Result<PathList> {
        let mut links = parse_links(text)?;
        if links.len() >= 2 && links[links.len() - 1] == Link::BASE {
            links.pop();
        }
        Ok(PathList::new(n, links))
    }
}

impl fmt::Display for PathList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.links {
            write!(f, "{l},")?;
        }
        write!(f, "{}", Link::BASE)
    }
}

/// An ordered tuple of paths whose terminal points exhaust the punctures;
/// the geometric presentation of a g-base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBase {
    paths: Vec<PathList>,
    n: usize,
}

impl GBase {
    /// Validates each path and checks that the terminal points form a
    /// permutation of `1..=n`.
    pub fn new(paths: Vec<PathList>) -> Result<GBase> {
        let n = paths.first().map_or(0, |p| p.n());
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        if paths.len() != n {
            return Err(Error::GBaseArity { expected: n, found: paths.len() });
        }
        let mut seen = vec![false; n];
        let mut points = Vec::with_capacity(n);
        for p in &paths {
            if p.n() != n {
                return Err(Error::StrandMismatch { left: n, right: p.n() });
            }
            p.ensure_valid()?;
            points.push(p.terminal_point());
        }
        for &t in &points {
            if t < 1 || t > n || seen[t - 1] {
                return Err(Error::NotAPermutation { points, n });
            }
            seen[t - 1] = true;
        }
        Ok(GBase { paths, n })
    }

    /// The standard g-base: straight drops `(-1,0) -> (i,0)`.
    pub fn standard(n: usize) -> Result<GBase> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        GBase::new((1..=n).map(|i| PathList::standard(n, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[PathList] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<PathList> {
        self.paths
    }

    /// Serialized link sequence: the paths concatenated, each opening with
    /// its base link, plus the closing `(-1,0)`.
    pub fn to_links(&self) -> Vec<Link> {
        let mut out = Vec::with_capacity(self.total_links());
        for p in &self.paths {
            out.extend_from_slice(p.links());
        }
        out.push(Link::BASE);
        out
    }

    /// Length of the serialized form, closing link included.
    pub fn total_links(&self) -> usize {
        self.paths.iter().map(|p| p.len()).sum::<usize>() + 1
    }

    /// Splits a serialized link sequence back into `n` paths. Inverse of
    /// [`to_links`](Self::to_links).
    pub fn from_links(n: usize, links: &[Link]) -> Result<GBase> {
        if n == 0 {
            return Err(Error::ZeroStrands);
        }
        if links.first() != Some(&Link::BASE) {
            return Err(Error::Parse("serialized g-base must start with (-1,0)".into()));
        }
        if links.last() != Some(&Link::BASE) || links.len() < 2 {
            return Err(Error::Parse("serialized g-base must end with the closing (-1,0)".into()));
        }
        let body = &links[..links.len() - 1];
        let starts: Vec<usize> =
            body.iter().enumerate().filter(|(_, l)| l.is_base()).map(|(i, _)| i).collect();
        if starts.len() != n {
            return Err(Error::GBaseArity { expected: n, found: starts.len() });
        }
        let mut paths = Vec::with_capacity(n);
        for (t, &s) in starts.iter().enumerate() {
            let end = starts.get(t + 1).copied().unwrap_or(body.len());
            paths.push(PathList::new(n, body[s..end].to_vec()));
        }
        GBase::new(paths)
    }

    /// Parses the serialized text form.
    pub fn parse(n: usize, text: &str) -> Result<GBase> {
        let links = parse_links(text)?;
        GBase::from_links(n, &links)
    }
}

impl fmt::Display for GBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.to_links().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn parse_links(text: &str) -> Result<Vec<Link>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut links = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let inner_end = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unterminated link near {rest:?}")))?;
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' near {rest:?}")));
        }
        let inner = &rest[1..inner_end];
        let (p, q) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"p,q\" in ({inner})")))?;
        let point: i32 =
            p.parse().map_err(|_| Error::Parse(format!("bad point {p:?} in ({inner})")))?;
        let position: i32 =
            q.parse().map_err(|_| Error::Parse(format!("bad position {q:?} in ({inner})")))?;
        links.push(Link::new(point, position)?);
        rest = &rest[inner_end + 1..];
        if let Some(stripped) = rest.strip_prefix(',') {
            rest = stripped;
        } else if !rest.is_empty() {
            return Err(Error::Parse(format!("expected ',' between links near {rest:?}")));
        }
    }
    if links.is_empty() {
        return Err(Error::Parse("no links in input".into()));
    }
    Ok(links)
}

/// Reads off the free-group word of the loop represented by a valid path.
///
/// Below-links and the base link contribute nothing. The terminal link
/// `(p,0)` reads as the generator of `p`. An above-link reads by where the
/// path goes next: continuing left is a positive passage, continuing right
/// a negative one, and a turn `(p,1) -> (p,-1)` reads by the direction
/// after the turn. Consecutive turns at one puncture are extra windings;
/// the whole run shares the sign fixed by its exit. After the scan, the
/// word is closed into a conjugate by mirroring all but its last letter.
pub fn path_to_syntactic(path: &PathList) -> Result<FGWord> {
    path.ensure_valid()?;
    let links = path.links();
    let mut scan: Vec<FGLetter> = Vec::new();
    let mut i = 0;
    while i < links.len() {
        let link = links[i];
        if link.is_base() || link.is_below() {
            i += 1;
            continue;
        }
        if link.is_stop() {
            scan.push(FGLetter::new(link.point() as usize, Sign::Plus));
            i += 1;
            continue;
        }
        // Above-link: take the maximal run of non-terminal links at this
        // point. Validity guarantees an exit link exists.
        let p = link.point();
        let mut j = i + 1;
        while j < links.len() && links[j].point() == p && !links[j].is_stop() {
            j += 1;
        }
        let above_count = links[i..j].iter().filter(|l| l.is_above()).count();
        let (count, sign) = if links[j].point() != p {
            let ends_below = links[j - 1].is_below();
            let exit_right = links[j].point() > p;
            let sign = if exit_right == ends_below { Sign::Plus } else { Sign::Minus };
            (above_count, sign)
        } else {
            // Run ends on the terminal loop at the same puncture: the last
            // passage is absorbed by the loop, extra windings read positive.
            (above_count - 1, Sign::Plus)
        };
        let letter = FGLetter::new(p as usize, sign);
        scan.extend(std::iter::repeat(letter).take(count));
        i = j;
    }
    debug_assert!(!scan.is_empty());
    let scan_len = scan.len();
    let mut letters = scan;
    letters.reserve(scan_len.saturating_sub(1));
    for t in (0..scan_len - 1).rev() {
        let inv = letters[t].inverse();
        letters.push(inv);
    }
    FGWord::from_letters(path.n(), letters)
}

/// Builds the canonical path of a freely reduced conjugate `Q^-1 g Q`.
///
/// Only the front half of the word, through the core letter, drives the
/// construction; the back half is the return trip and is implied by the
/// encoding. The first letter opens with an above-link at its puncture;
/// every following letter appends the below-passages between the two
/// punctures and the arrival above-link, where a positive letter keeps the
/// below-link under its own puncture on a rightward move and drops it on a
/// leftward move, and a negative letter does the opposite. A repeated
/// letter winds once more around the same puncture. The last link is then
/// retagged as the terminal loop.
pub fn syntactic_to_path(word: &FGWord) -> Result<PathList> {
    if !word.is_reduced() {
        return Err(Error::NotReduced);
    }
    let shape = word.conjugate_shape().ok_or(Error::NotConjugate)?;
    if shape.core.sign() == Sign::Minus {
        return Err(Error::NegativeCore);
    }
    let n = word.n();
    if word.len() == 1 {
        let m = shape.core.index() as i32;
        return Ok(PathList::new(n, vec![Link::BASE, Link::stop(m)]));
    }
    let half = word.len() / 2 + 1;
    let scan = &word.letters()[..half];
    let mut links = vec![Link::BASE];
    let mut prev = scan[0];
    links.push(Link::above(prev.index() as i32));
    for &letter in &scan[1..] {
        let p = prev.index() as i32;
        let q = letter.index() as i32;
        if p < q {
            let start = if prev.sign() == Sign::Plus { p } else { p + 1 };
            let end = if letter.sign() == Sign::Plus { q } else { q - 1 };
            for c in start..=end {
                links.push(Link::below(c));
            }
        } else if p > q {
            let start = if prev.sign() == Sign::Minus { p } else { p - 1 };
            let end = if letter.sign() == Sign::Minus { q } else { q + 1 };
            for c in (end..=start).rev() {
                links.push(Link::below(c));
            }
        } else {
            links.push(Link::below(q));
        }
        links.push(Link::above(q));
        prev = letter;
    }
    // A rightward arrival at the end point dips below it; the terminal
    // loop absorbs that dip, so the canonical form keeps none. The figures
    // of the encoding are printed without it.
    let len = links.len();
    if len >= 2 && links[len - 2] == Link::below(links[len - 1].point()) {
        links.remove(len - 2);
    }
    let last = links.last_mut().expect("scan emitted at least the opening link");
    *last = Link::stop(last.point());
    Ok(PathList::new(n, links))
}

/// Canonical representative of the path's homotopy class: read the word,
/// freely reduce it, rebuild the path.
pub fn reduce_path(path: &PathList) -> Result<PathList> {
    syntactic_to_path(&path_to_syntactic(path)?.freely_reduce())
}
