//! Finite chains, direct products, and the catalog of Wajsberg algebras of a
//! given order (one per order type).

use std::fmt;

use crate::algebra::{FiniteAlgebra, WajsbergAlgebra};
use crate::error::{Error, Result};
use crate::iso::poset_isomorphism;
use crate::table::CayleyTable;

/// Largest order `enumerate_wajsberg` accepts unless told otherwise.
pub const DEFAULT_ORDER_LIMIT: usize = 24;

/// The Lukasiewicz chain `x_0 < ... < x_{k-1}`: `x_i -> x_j` is `x_{k-1}`
/// when `i <= j` and `x_{k-1-i+j}` otherwise; `~x_i = x_{k-1-i}`.
pub fn chain_wajsberg(k: usize) -> Result<WajsbergAlgebra> {
    if k == 0 {
        return Err(Error::InvalidSize(0));
    }
    let n = k - 1;
    let circ = CayleyTable::from_fn(k, |i, j| if i <= j { n } else { n - i + j });
    WajsbergAlgebra::new(circ, (0..k).map(|i| n - i).collect(), n)
}

/// Componentwise product; `(x1, x2)` sits at index `x1 * |w2| + x2`.
pub fn product_wajsberg(w1: &WajsbergAlgebra, w2: &WajsbergAlgebra) -> Result<WajsbergAlgebra> {
    let k2 = w2.size();
    let k = w1.size() * k2;
    let circ = CayleyTable::from_fn(k, |x, y| {
        w1.circ(x / k2, y / k2) * k2 + w2.circ(x % k2, y % k2)
    });
    let negation = (0..k).map(|x| w1.negation(x / k2) * k2 + w2.negation(x % k2)).collect();
    WajsbergAlgebra::new(circ, negation, w1.one() * k2 + w2.one())
}

/// Factors in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorMultiset {
    factors: Vec<usize>,
}

impl FactorMultiset {
    pub fn new(mut factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidSize(0));
        }
        factors.sort_unstable();
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn product(&self) -> usize {
        self.factors.iter().product()
    }

    /// One factor: the chain.
    pub fn is_chain(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn descend(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<FactorMultiset>) {
    // close with the remaining cofactor
    if !prefix.is_empty() && n >= min {
        let mut factors = prefix.clone();
        factors.push(n);
        out.push(FactorMultiset { factors });
    }
    let mut d = min;
    while d * d <= n {
        if n.is_multiple_of(d) {
            prefix.push(d);
            descend(n / d, d, prefix, out);
            prefix.pop();
        }
        d += 1;
    }
}

/// All ways to write `n` as a product of at least two factors `>= 2`,
/// ascending within each multiset and lexicographically across them.
pub fn factorizations(n: usize) -> Vec<FactorMultiset> {
    let mut out = Vec::new();
    if n >= 4 {
        descend(n, 2, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Number of proper unordered factorizations of `n`.
pub fn pi(n: usize) -> usize {
    factorizations(n).len()
}

/// A product of chains, indexed mixed-radix over its ascending factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductAlgebra {
    pub factors: FactorMultiset,
    pub algebra: WajsbergAlgebra,
}

impl ProductAlgebra {
    /// Left fold of `product_wajsberg` over the chains of the given sizes.
    pub fn of_chains(factors: FactorMultiset) -> Result<Self> {
        let mut sizes = factors.factors().iter();
        let first = *sizes.next().expect("nonempty multiset");
        let mut algebra = chain_wajsberg(first)?;
        for &k in sizes {
            algebra = product_wajsberg(&algebra, &chain_wajsberg(k)?)?;
        }
        Ok(Self { factors, algebra })
    }

    pub fn order(&self) -> usize {
        self.algebra.size()
    }
}

/// The chain first, then one product per factorization, with pairwise
/// non-isomorphic orders confirmed by search.
pub fn enumerate_wajsberg(n: usize) -> Result<Vec<ProductAlgebra>> {
    enumerate_wajsberg_with_limit(n, DEFAULT_ORDER_LIMIT)
}

pub fn enumerate_wajsberg_with_limit(n: usize, limit: usize) -> Result<Vec<ProductAlgebra>> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    if n > limit {
        return Err(Error::OrderTooLarge { order: n, limit });
    }
    let mut shapes = vec![FactorMultiset { factors: vec![n] }];
    shapes.extend(factorizations(n));
    let catalog = shapes
        .into_iter()
        .map(ProductAlgebra::of_chains)
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in catalog.iter().enumerate() {
        for (j, b) in catalog.iter().enumerate().skip(i + 1) {
            if poset_isomorphism(a.algebra.natural_order(), b.algebra.natural_order())?.is_some() {
                return Err(Error::DuplicateOrderType {
                    order: n,
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(n: usize) -> Vec<Vec<usize>> {
        factorizations(n).into_iter().map(|f| f.factors).collect()
    }

    #[test]
    fn small_chains() {
        assert_eq!(chain_wajsberg(0), Err(Error::InvalidSize(0)));
        let c2 = chain_wajsberg(2).unwrap();
        assert_eq!(c2.table().to_rows(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(chain_wajsberg(3).unwrap().negation(1), 1);
        let c4 = chain_wajsberg(4).unwrap();
        assert_eq!((c4.negation(1), c4.negation(2)), (2, 1));
        assert!(chain_wajsberg(1).unwrap().natural_order().is_total());
    }

    #[test]
    fn factorization_lists() {
        assert_eq!(shapes(12), vec![vec![2, 2, 3], vec![2, 6], vec![3, 4]]);
        assert_eq!(shapes(8), vec![vec![2, 2, 2], vec![2, 4]]);
        assert!(shapes(5).is_empty());
        assert!(shapes(1).is_empty());
        assert_eq!(pi(16), 4);
    }

    #[test]
    fn catalog_sizes() {
        let six = enumerate_wajsberg(6).unwrap();
        assert_eq!(six.len(), 2);
        assert!(six[0].factors.is_chain());
        assert_eq!(six[1].factors.to_string(), "{2,3}");
        assert_eq!(enumerate_wajsberg(7).unwrap().len(), 1);
        assert_eq!(enumerate_wajsberg(1).unwrap()[0].order(), 1);
        assert!(matches!(
            enumerate_wajsberg(25),
            Err(Error::OrderTooLarge { order: 25, limit: 24 })
        ));
        assert_eq!(enumerate_wajsberg_with_limit(30, 30).unwrap().len(), pi(30) + 1);
    }

    #[test]
    fn multiset_display_and_order() {
        let f = FactorMultiset::new(vec![3, 2, 2]).unwrap();
        assert_eq!(f.to_string(), "{2,2,3}");
        assert_eq!(f.product(), 12);
        assert!(FactorMultiset::new(vec![]).is_err());
    }
}
