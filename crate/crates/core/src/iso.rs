//! Order and algebra isomorphisms, and transport of structure.

use crate::algebra::{FiniteAlgebra, WajsbergAlgebra};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::table::{CayleyTable, Element};

/// A bijection `forward` with `x <= y` iff `forward[x] <= forward[y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderIsomorphism {
    forward: Vec<Element>,
}

fn inverse_of(forward: &[Element]) -> Result<Vec<Element>> {
    let k = forward.len();
    let mut inv = vec![usize::MAX; k];
    for (x, &y) in forward.iter().enumerate() {
        if y >= k || inv[y] != usize::MAX {
            return Err(Error::NotAnOrderIso(format!("{forward:?} is not a permutation of 0..{k}")));
        }
        inv[y] = x;
    }
    Ok(inv)
}

impl OrderIsomorphism {
    /// Checks that `forward` is an order isomorphism from `source` onto `target`.
    pub fn new(source: &Poset, target: &Poset, forward: Vec<Element>) -> Result<Self> {
        if source.size() != target.size() || forward.len() != source.size() {
            return Err(Error::NotAnOrderIso(format!(
                "map of length {} between orders of size {} and {}",
                forward.len(),
                source.size(),
                target.size()
            )));
        }
        inverse_of(&forward)?;
        for x in 0..source.size() {
            for y in 0..source.size() {
                if source.leq(x, y) != target.leq(forward[x], forward[y]) {
                    return Err(Error::NotAnOrderIso(format!(
                        "pair ({x}, {y}) is not preserved by {forward:?}"
                    )));
                }
            }
        }
        Ok(Self { forward })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            forward: (0..size).collect(),
        }
    }

    pub fn forward(&self) -> &[Element] {
        &self.forward
    }

    pub fn apply(&self, x: Element) -> Element {
        self.forward[x]
    }

    pub fn inverse(&self) -> Vec<Element> {
        inverse_of(&self.forward).expect("checked at construction")
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Backtracking over images of `0, 1, ...` in ascending order, so results
/// come out in lexicographic order of the forward map.
struct PosetSearch<'a> {
    p1: &'a Poset,
    p2: &'a Poset,
    profile1: Vec<(usize, usize)>,
    profile2: Vec<(usize, usize)>,
    forward: Vec<Element>,
    used: Vec<bool>,
}

impl<'a> PosetSearch<'a> {
    fn new(p1: &'a Poset, p2: &'a Poset) -> Self {
        let prof = |p: &Poset| (0..p.size()).map(|x| (p.down_count(x), p.up_count(x))).collect();
        Self {
            p1,
            p2,
            profile1: prof(p1),
            profile2: prof(p2),
            forward: Vec::with_capacity(p1.size()),
            used: vec![false; p2.size()],
        }
    }

    fn consistent(&self, x: Element, y: Element) -> bool {
        self.profile1[x] == self.profile2[y]
            && self.forward.iter().enumerate().all(|(a, &b)| {
                self.p1.leq(a, x) == self.p2.leq(b, y) && self.p1.leq(x, a) == self.p2.leq(y, b)
            })
    }

    /// Calls `found` on each complete map; stops when it returns false.
    fn run(&mut self, found: &mut dyn FnMut(&[Element]) -> bool) -> bool {
        let x = self.forward.len();
        if x == self.p1.size() {
            return found(&self.forward);
        }
        for y in 0..self.p2.size() {
            if self.used[y] || !self.consistent(x, y) {
                continue;
            }
            self.used[y] = true;
            self.forward.push(y);
            let go_on = self.run(found);
            self.forward.pop();
            self.used[y] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn same_size(p1: &Poset, p2: &Poset) -> Result<()> {
    if p1.size() != p2.size() {
        return Err(Error::SizeMismatch {
            left: p1.size(),
            right: p2.size(),
        });
    }
    Ok(())
}

/// The lexicographically first order isomorphism from `p1` onto `p2`.
pub fn poset_isomorphism(p1: &Poset, p2: &Poset) -> Result<Option<OrderIsomorphism>> {
    same_size(p1, p2)?;
    if p1.profile() != p2.profile() {
        return Ok(None);
    }
    let mut hit = None;
    PosetSearch::new(p1, p2).run(&mut |f| {
        hit = Some(OrderIsomorphism { forward: f.to_vec() });
        false
    });
    Ok(hit)
}

/// Every order isomorphism from `p1` onto `p2`, lexicographically ascending.
pub fn all_poset_isomorphisms(p1: &Poset, p2: &Poset) -> Result<Vec<OrderIsomorphism>> {
    same_size(p1, p2)?;
    let mut out = Vec::new();
    if p1.profile() != p2.profile() {
        return Ok(out);
    }
    PosetSearch::new(p1, p2).run(&mut |f| {
        out.push(OrderIsomorphism { forward: f.to_vec() });
        true
    });
    Ok(out)
}

/// `x ~> y := f(f^-1(x) -> f^-1(y))`, with negation and `1` moved along `f`.
pub fn transport_structure(w: &WajsbergAlgebra, iso: &OrderIsomorphism) -> Result<WajsbergAlgebra> {
    if iso.len() != w.size() {
        return Err(Error::NotAnOrderIso(format!(
            "map of length {} applied to an algebra of order {}",
            iso.len(),
            w.size()
        )));
    }
    let f = iso.forward();
    let inv = iso.inverse();
    let circ = CayleyTable::from_fn(w.size(), |x, y| f[w.circ(inv[x], inv[y])]);
    let negation = (0..w.size()).map(|x| f[w.negation(inv[x])]).collect();
    WajsbergAlgebra::new(circ, negation, f[w.one()])
}

/// Transports `w` along the bijection `forward`, taking the image order as target.
pub fn relabel_wajsberg(w: &WajsbergAlgebra, forward: Vec<Element>) -> Result<WajsbergAlgebra> {
    inverse_of(&forward)?;
    let target = w.natural_order().relabel(&forward);
    let iso = OrderIsomorphism::new(w.natural_order(), &target, forward)?;
    transport_structure(w, &iso)
}

/// First bijection `f` (lexicographic) with `f(x->y) = f(x)->f(y)` and
/// `f(~x) = ~f(x)`.
pub fn wajsberg_isomorphic(w1: &WajsbergAlgebra, w2: &WajsbergAlgebra) -> Result<Option<Vec<Element>>> {
    let k = w1.size();
    if k != w2.size() {
        return Err(Error::SizeMismatch { left: k, right: w2.size() });
    }
    let (p1, p2) = (w1.natural_order(), w2.natural_order());
    if p1.profile() != p2.profile() {
        return Ok(None);
    }
    const UNSET: usize = usize::MAX;
    let mut f = vec![UNSET; k];
    let mut used = vec![false; k];

    fn consistent(w1: &WajsbergAlgebra, w2: &WajsbergAlgebra, f: &[Element]) -> bool {
        let k = f.len();
        for x in (0..k).filter(|&x| f[x] != UNSET) {
            let nx = w1.negation(x);
            if f[nx] != UNSET && f[nx] != w2.negation(f[x]) {
                return false;
            }
            for y in (0..k).filter(|&y| f[y] != UNSET) {
                let z = w1.circ(x, y);
                if f[z] != UNSET && f[z] != w2.circ(f[x], f[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        x: usize,
        w1: &WajsbergAlgebra,
        w2: &WajsbergAlgebra,
        f: &mut Vec<Element>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = f.len();
        if x == k {
            return true;
        }
        if f[x] != UNSET {
            return search(x + 1, w1, w2, f, used);
        }
        let (p1, p2) = (w1.natural_order(), w2.natural_order());
        for y in 0..k {
            if used[y] || p1.down_count(x) != p2.down_count(y) || p1.up_count(x) != p2.up_count(y) {
                continue;
            }
            f[x] = y;
            used[y] = true;
            if consistent(w1, w2, f) && search(x + 1, w1, w2, f, used) {
                return true;
            }
            f[x] = UNSET;
            used[y] = false;
        }
        false
    }

    // constants are fixed by any isomorphism
    f[w1.one()] = w2.one();
    used[w2.one()] = true;
    if w1.zero() != w1.one() {
        if used[w2.zero()] {
            return Ok(None);
        }
        f[w1.zero()] = w2.zero();
        used[w2.zero()] = true;
    }
    if !consistent(w1, w2, &f) {
        return Ok(None);
    }
    Ok(search(0, w1, w2, &mut f, &mut used).then_some(f))
}
