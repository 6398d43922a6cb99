//! Finite partial orders as boolean relation matrices.

use std::fmt;

use crate::table::Element;

/// The first law a relation breaks, with the lexicographically least witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PosetViolation {
    Reflexivity { x: Element },
    Antisymmetry { x: Element, y: Element },
    Transitivity { x: Element, y: Element, z: Element },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PosetViolation::Reflexivity { x } => write!(f, "not reflexive at {x}"),
            PosetViolation::Antisymmetry { x, y } => {
                write!(f, "not antisymmetric: {x} <= {y} and {y} <= {x}")
            }
            PosetViolation::Transitivity { x, y, z } => {
                write!(f, "not transitive: {x} <= {y}, {y} <= {z} but not {x} <= {z}")
            }
        }
    }
}

/// A reflexive, antisymmetric, transitive relation on `0..size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Checks the partial-order laws in the order reflexivity, antisymmetry,
    /// transitivity and reports the first failure.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self, PosetViolation> {
        assert_eq!(leq.len(), size * size, "relation matrix has wrong shape");
        let rel = |x: usize, y: usize| leq[x * size + y];
        if let Some(x) = (0..size).find(|&x| !rel(x, x)) {
            return Err(PosetViolation::Reflexivity { x });
        }
        for x in 0..size {
            for y in 0..size {
                if x != y && rel(x, y) && rel(y, x) {
                    return Err(PosetViolation::Antisymmetry { x, y });
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if !rel(x, y) {
                    continue;
                }
                for z in 0..size {
                    if rel(y, z) && !rel(x, z) {
                        return Err(PosetViolation::Transitivity { x, y, z });
                    }
                }
            }
        }
        Ok(Self { size, leq })
    }

    pub fn from_fn(size: usize, leq: impl Fn(Element, Element) -> bool) -> Result<Self, PosetViolation> {
        let mut m = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                m.push(leq(x, y));
            }
        }
        Self::new(size, m)
    }

    /// The total order `0 < 1 < ... < size - 1`.
    pub fn chain(size: usize) -> Self {
        Self::from_fn(size, |x, y| x <= y).expect("a chain is a partial order")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Element, y: Element) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn is_total(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.comparable(x, y)))
    }

    /// Number of elements below or equal to `x`.
    pub fn down_count(&self, x: Element) -> usize {
        (0..self.size).filter(|&y| self.leq(y, x)).count()
    }

    /// Number of elements above or equal to `x`.
    pub fn up_count(&self, x: Element) -> usize {
        (0..self.size).filter(|&y| self.leq(x, y)).count()
    }

    pub fn up_set(&self, x: Element) -> Vec<Element> {
        (0..self.size).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn minimum(&self) -> Option<Element> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(x, y)))
    }

    pub fn maximum(&self) -> Option<Element> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(y, x)))
    }

    /// The greatest element of `subset`, if it has one.
    pub fn greatest_of(&self, subset: &[Element]) -> Option<Element> {
        subset
            .iter()
            .copied()
            .find(|&m| subset.iter().all(|&s| self.leq(s, m)))
    }

    /// Strict pairs `x < y`, ascending.
    pub fn strict_pairs(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Strict pairs that involve neither the minimum nor the maximum.
    pub fn interior_pairs(&self) -> Vec<(Element, Element)> {
        let bottom = self.minimum();
        let top = self.maximum();
        self.strict_pairs()
            .into_iter()
            .filter(|&(x, y)| Some(x) != bottom && Some(y) != top)
            .collect()
    }

    /// The image of this order under the bijection `forward`.
    pub fn relabel(&self, forward: &[Element]) -> Poset {
        assert_eq!(forward.len(), self.size);
        let mut leq = vec![false; self.size * self.size];
        for x in 0..self.size {
            for y in 0..self.size {
                leq[forward[x] * self.size + forward[y]] = self.leq(x, y);
            }
        }
        Poset::new(self.size, leq).expect("relabeling preserves order laws")
    }

    /// Sorted multiset of `(down_count, up_count)` profiles; equal for
    /// isomorphic orders.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        let mut p: Vec<_> = (0..self.size)
            .map(|x| (self.down_count(x), self.up_count(x)))
            .collect();
        p.sort_unstable();
        p
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}; {:?})", self.size, self.strict_pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_total() {
        let c = Poset::chain(4);
        assert!(c.is_total());
        assert_eq!(c.minimum(), Some(0));
        assert_eq!(c.maximum(), Some(3));
        assert_eq!(c.down_count(2), 3);
    }

    #[test]
    fn reports_first_broken_law() {
        let not_refl = Poset::new(2, vec![true, false, false, false]).unwrap_err();
        assert_eq!(not_refl, PosetViolation::Reflexivity { x: 1 });

        let cyc = Poset::new(2, vec![true, true, true, true]).unwrap_err();
        assert_eq!(cyc, PosetViolation::Antisymmetry { x: 0, y: 1 });

        // 0 <= 1 <= 2 without 0 <= 2
        let leq = vec![true, true, false, false, true, true, false, false, true];
        assert_eq!(
            Poset::new(3, leq).unwrap_err(),
            PosetViolation::Transitivity { x: 0, y: 1, z: 2 }
        );
    }

    #[test]
    fn relabel_moves_pairs() {
        let c = Poset::chain(3);
        let r = c.relabel(&[2, 1, 0]);
        assert!(r.leq(2, 0));
        assert!(!r.leq(0, 2));
    }
}
