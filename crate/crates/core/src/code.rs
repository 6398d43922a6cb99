//! Binary block codes generated by cut functions.
//!
//! The codeword of an element `r` has a one in column `i` exactly when the
//! carrier element `i` lies in the cut subset of `r` (the identity function
//! on the carrier is used as the MV-/W-function). Codewords are ordered in
//! reverse: `w <= v` iff every bit of `v` is at most the matching bit of
//! `w`, so the all-ones word is the bottom.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{FiniteAlgebra, MvAlgebra};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::table::Element;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(Vec<bool>);

impl Codeword {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    fn same_length(&self, other: &Codeword) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    pub fn hamming(&self, other: &Codeword) -> Result<usize> {
        self.same_length(other)?;
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }

    /// `self <= other` in the reverse componentwise order: every bit of
    /// `other` is at most the matching bit of `self`.
    pub fn precedes(&self, other: &Codeword) -> Result<bool> {
        self.same_length(other)?;
        Ok(self.0.iter().zip(&other.0).all(|(&mine, &theirs)| theirs <= mine))
    }

    /// Keeps the bits at `columns`, in that order.
    pub fn project(&self, columns: &[usize]) -> Codeword {
        Codeword(columns.iter().map(|&c| self.0[c]).collect())
    }
}

pub fn codeword_leq(wx: &Codeword, wy: &Codeword) -> Result<bool> {
    wx.precedes(wy)
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::MalformedCode(format!(
                    "unexpected character `{other}` in codeword `{s}`"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Codeword)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword({self})")
    }
}

/// A nonempty set of distinct equal-length codewords, kept in descending
/// lexicographic order (all-ones first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockCode {
    length: usize,
    words: Vec<Codeword>,
}

impl BlockCode {
    pub fn new(mut words: Vec<Codeword>) -> Result<Self> {
        let Some(first) = words.first() else {
            return Err(Error::MalformedCode("code has no words".into()));
        };
        let length = first.len();
        if length == 0 {
            return Err(Error::MalformedCode("codewords are empty".into()));
        }
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::LengthMismatch {
                left: length,
                right: w.len(),
            });
        }
        words.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateCodeword(pair[0].to_string()));
        }
        Ok(Self { length, words })
    }

    pub fn from_strs<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        Self::new(
            words
                .iter()
                .map(|w| w.as_ref().parse())
                .collect::<Result<_>>()?,
        )
    }

    /// Word length `n`.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of codewords.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.binary_search_by(|probe| w.cmp(probe)).is_ok()
    }

    pub fn is_superset_of(&self, other: &BlockCode) -> bool {
        other.words.iter().all(|w| self.contains(w))
    }

    pub fn min_hamming_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::TooFewWords {
                needed: 2,
                found: self.words.len(),
            });
        }
        let mut best = usize::MAX;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                best = best.min(a.hamming(b)?);
            }
        }
        Ok(best)
    }

    /// The reverse componentwise order over the canonical word ordering.
    pub fn poset(&self) -> Result<Poset> {
        let w = &self.words;
        Poset::from_fn(w.len(), |i, j| w[i].bits().iter().zip(w[j].bits()).all(|(&a, &b)| b <= a))
            .map_err(Error::NotAPoset)
    }

    /// Projects every word onto `columns` and collects the distinct results.
    pub fn restrict(&self, columns: &[usize]) -> Result<BlockCode> {
        let mut projected: Vec<Codeword> = self.words.iter().map(|w| w.project(columns)).collect();
        projected.sort_unstable();
        projected.dedup();
        BlockCode::new(projected)
    }
}

impl fmt::Display for BlockCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.words {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlockCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.words.iter().map(ToString::to_string).collect();
        write!(f, "BlockCode{{{}}}", words.join(","))
    }
}

pub fn code_poset(code: &BlockCode) -> Result<Poset> {
    code.poset()
}

pub fn min_hamming_distance(code: &BlockCode) -> Result<usize> {
    code.min_hamming_distance()
}

/// `A_r`: the elements `x` with `r <= x`, computed from the operation.
pub fn cut_subset<A: FiniteAlgebra + ?Sized>(algebra: &A, r: Element) -> Vec<Element> {
    algebra
        .elements()
        .filter(|&x| algebra.leq_by_operation(r, x))
        .collect()
}

/// The cut function `f_r` as a codeword, column `i` for element `i`.
pub fn cut_function<A: FiniteAlgebra + ?Sized>(algebra: &A, r: Element) -> Codeword {
    Codeword(algebra.elements().map(|x| algebra.leq_by_operation(r, x)).collect())
}

/// Cut functions in carrier order; row `r` is the codeword of `r`.
pub fn cut_functions<A: FiniteAlgebra + ?Sized>(algebra: &A) -> Vec<Codeword> {
    algebra.elements().map(|r| cut_function(algebra, r)).collect()
}

pub fn code_from_algebra<A: FiniteAlgebra + ?Sized>(algebra: &A) -> Result<BlockCode> {
    BlockCode::new(cut_functions(algebra))
}

pub fn code_equivalent<A, B>(a: &A, b: &B) -> Result<bool>
where
    A: FiniteAlgebra + ?Sized,
    B: FiniteAlgebra + ?Sized,
{
    Ok(code_from_algebra(a)? == code_from_algebra(b)?)
}

/// `D(r, s)`: size of the symmetric difference of the cut subsets.
pub fn distance<A: FiniteAlgebra + ?Sized>(algebra: &A, r: Element, s: Element) -> usize {
    algebra
        .elements()
        .filter(|&x| algebra.leq_by_operation(r, x) != algebra.leq_by_operation(s, x))
        .count()
}

/// Square boolean matrix rendered with `#` (black) and `.` (white).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Skeleton {
    size: usize,
    black: Vec<bool>,
}

impl Skeleton {
    pub fn from_fn(size: usize, black: impl Fn(usize, usize) -> bool) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                cells.push(black(i, j));
            }
        }
        Self { size, black: cells }
    }

    pub fn from_poset(p: &Poset) -> Self {
        Self::from_fn(p.size(), |i, j| p.leq(i, j))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_black(&self, i: usize, j: usize) -> bool {
        self.black[i * self.size + j]
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Skeleton {
        Skeleton::from_fn(self.size, |i, j| self.is_black(perm[i], j))
    }

    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.size * (self.size + 1));
        for i in 0..self.size {
            for j in 0..self.size {
                out.push(if self.is_black(i, j) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Skeleton(\n{})", self.render())
    }
}

/// Black at `(i, j)` iff `x_i <= x_j`.
pub fn skeleton<A: FiniteAlgebra + ?Sized>(algebra: &A) -> Skeleton {
    Skeleton::from_fn(algebra.size(), |i, j| algebra.leq_by_operation(i, j))
}

/// Black at `(r, x)` iff `r + x = 1`. Equals the skeleton with row `r`
/// taken from row `r'`.
pub fn mv_sum_indicator(m: &MvAlgebra) -> Skeleton {
    Skeleton::from_fn(m.size(), |r, x| m.oplus(r, x) == m.one())
}
